#include "rmc/gf.hpp"

#include <algorithm>
#include <sstream>

namespace rmc::gf {

namespace {

u64 sat_mul(u64 a, u64 b) {
    if (a == 0 || b == 0) return 0;
    if (a > UINT64_MAX / b) return UINT64_MAX;
    return a * b;
}

u64 sat_pow(u64 base, u64 exp) {
    u64 r = 1;
    while (exp--) {
        r = sat_mul(r, base);
        if (r == UINT64_MAX) return r;
    }
    return r;
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<u64> prime_factors(u64 n) {
    std::vector<u64> out;
    for (u64 d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// ---------------------------------------------------------------------------
// Prime field ops on residues.
// ---------------------------------------------------------------------------

struct FpOps {
    u64 p;
    using E = u32;

    E zero() const { return 0; }
    E one() const { return 1 % p; }
    bool is_zero(E a) const { return a == 0; }
    E reduce(u64 v) const { return static_cast<E>(v % p); }
    E add(E a, E b) const {
        u64 s = static_cast<u64>(a) + b;
        return static_cast<E>(s >= p ? s - p : s);
    }
    E sub(E a, E b) const { return a >= b ? a - b : static_cast<E>(a + p - b); }
    E neg(E a) const { return a == 0 ? 0 : static_cast<E>(p - a); }
    E mul(E a, E b) const { return static_cast<E>(static_cast<u64>(a) * b % p); }
    E inv(E a) const {
        if (a == 0) fail(Errc::DivisionByZero, "inverse of zero in F_p");
        std::int64_t t = 0, nt = 1;
        std::int64_t r = static_cast<std::int64_t>(p), nr = a;
        while (nr != 0) {
            std::int64_t qq = r / nr;
            t -= qq * nt;
            std::swap(t, nt);
            r -= qq * nr;
            std::swap(r, nr);
        }
        if (t < 0) t += static_cast<std::int64_t>(p);
        return static_cast<E>(t);
    }
    bool eq(E a, E b) const { return a == b; }
    u64 order() const { return p; }
    u64 to_index(E a) const { return a; }
    E from_index(u64 i) const { return static_cast<E>(i); }
};

// ---------------------------------------------------------------------------
// Polynomial helpers over an abstract field K.
// Polynomials are coefficient vectors, constant term first, trimmed.
// ---------------------------------------------------------------------------

template <class K>
using Poly = std::vector<typename K::E>;

template <class K>
void p_trim(const K& k, Poly<K>& f) {
    while (!f.empty() && k.is_zero(f.back())) f.pop_back();
}

template <class K>
Poly<K> p_add(const K& k, const Poly<K>& a, const Poly<K>& b) {
    Poly<K> r(std::max(a.size(), b.size()), k.zero());
    for (std::size_t i = 0; i < r.size(); ++i) {
        auto x = i < a.size() ? a[i] : k.zero();
        auto y = i < b.size() ? b[i] : k.zero();
        r[i] = k.add(x, y);
    }
    p_trim(k, r);
    return r;
}

template <class K>
Poly<K> p_sub(const K& k, const Poly<K>& a, const Poly<K>& b) {
    Poly<K> r(std::max(a.size(), b.size()), k.zero());
    for (std::size_t i = 0; i < r.size(); ++i) {
        auto x = i < a.size() ? a[i] : k.zero();
        auto y = i < b.size() ? b[i] : k.zero();
        r[i] = k.sub(x, y);
    }
    p_trim(k, r);
    return r;
}

template <class K>
Poly<K> p_mul(const K& k, const Poly<K>& a, const Poly<K>& b) {
    if (a.empty() || b.empty()) return {};
    Poly<K> r(a.size() + b.size() - 1, k.zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (k.is_zero(a[i])) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = k.add(r[i + j], k.mul(a[i], b[j]));
    }
    p_trim(k, r);
    return r;
}

// Remainder of a modulo f; f must have an invertible leading coefficient.
template <class K>
Poly<K> p_mod(const K& k, Poly<K> a, const Poly<K>& f) {
    p_trim(k, a);
    auto lead_inv = k.inv(f.back());
    while (a.size() >= f.size()) {
        auto c = k.mul(a.back(), lead_inv);
        std::size_t off = a.size() - f.size();
        if (!k.is_zero(c))
            for (std::size_t j = 0; j + 1 < f.size(); ++j)
                a[off + j] = k.sub(a[off + j], k.mul(c, f[j]));
        a.pop_back();
        p_trim(k, a);
        if (a.size() < f.size()) break;
    }
    return a;
}

template <class K>
Poly<K> p_mulmod(const K& k, const Poly<K>& a, const Poly<K>& b, const Poly<K>& f) {
    return p_mod(k, p_mul(k, a, b), f);
}

template <class K>
Poly<K> p_powmod(const K& k, Poly<K> base, u64 n, const Poly<K>& f) {
    Poly<K> r{k.one()};
    base = p_mod(k, std::move(base), f);
    while (n) {
        if (n & 1) r = p_mulmod(k, r, base, f);
        base = p_mulmod(k, base, base, f);
        n >>= 1;
    }
    return r;
}

template <class K>
Poly<K> p_gcd(const K& k, Poly<K> a, Poly<K> b) {
    p_trim(k, a);
    p_trim(k, b);
    while (!b.empty()) {
        a = p_mod(k, std::move(a), b);
        std::swap(a, b);
    }
    if (!a.empty()) {
        auto li = k.inv(a.back());
        for (auto& c : a) c = k.mul(c, li);
    }
    return a;
}

// Inverse of a modulo f via extended Euclid; empty result means gcd != 1.
template <class K>
Poly<K> p_invmod(const K& k, Poly<K> a, const Poly<K>& f) {
    Poly<K> r0 = f, r1 = p_mod(k, std::move(a), f);
    Poly<K> t0, t1{k.one()};
    p_trim(k, r1);
    while (!r1.empty()) {
        // quotient of r0 by r1
        Poly<K> qpoly;
        Poly<K> rem = r0;
        p_trim(k, rem);
        auto li = k.inv(r1.back());
        while (rem.size() >= r1.size() && !rem.empty()) {
            auto c = k.mul(rem.back(), li);
            std::size_t off = rem.size() - r1.size();
            if (qpoly.size() < off + 1) qpoly.resize(off + 1, k.zero());
            qpoly[off] = c;
            for (std::size_t j = 0; j < r1.size(); ++j)
                rem[off + j] = k.sub(rem[off + j], k.mul(c, r1[j]));
            p_trim(k, rem);
        }
        r0 = r1;
        r1 = rem;
        auto tn = p_sub(k, t0, p_mul(k, qpoly, t1));
        t0 = t1;
        t1 = tn;
    }
    if (r0.size() != 1) return {};
    auto gi = k.inv(r0[0]);
    for (auto& c : t0) c = k.mul(c, gi);
    p_trim(k, t0);
    return t0.empty() ? Poly<K>{} : p_mod(k, std::move(t0), f);
}

// Standard gcd-based test: f monic of degree d over K is irreducible iff
// x^(Q^d) = x (mod f) and gcd(x^(Q^(d/r)) - x, f) is constant for every
// prime r dividing d.
template <class K>
bool poly_irreducible(const K& k, const Poly<K>& f) {
    std::size_t d = f.size() - 1;
    if (d == 0) return false;
    u64 Q = k.order();
    if (Q == UINT64_MAX) fail(Errc::Internal, "subfield too large for irreducibility test");
    Poly<K> x{k.zero(), k.one()};
    std::vector<Poly<K>> pw(d + 1);
    pw[0] = p_mod(k, x, f);
    for (std::size_t t = 1; t <= d; ++t) pw[t] = p_powmod(k, pw[t - 1], Q, f);
    if (pw[d] != pw[0]) return false;
    for (u64 r : prime_factors(static_cast<u64>(d))) {
        Poly<K> g = p_sub(k, pw[d / r], pw[0]);
        if (g.empty()) return false;  // f splits over F_{Q^(d/r)}
        Poly<K> gc = p_gcd(k, g, f);
        if (gc.size() > 1) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Quotient ring K[x]/(f), f monic irreducible. Elements are coefficient
// vectors of fixed length deg(f).
// ---------------------------------------------------------------------------

template <class K>
struct PolyQuot {
    const K* kf = nullptr;
    Poly<K> mod;  // monic, size deg+1

    using E = std::vector<typename K::E>;  // size deg

    u32 deg() const { return static_cast<u32>(mod.size() - 1); }

    E canon(Poly<K> raw) const {
        raw = p_mod(*kf, std::move(raw), mod);
        raw.resize(deg(), kf->zero());
        return raw;
    }
    E zero() const { return E(deg(), kf->zero()); }
    E one() const {
        E r = zero();
        if (deg() > 0) r[0] = kf->one();
        return r;
    }
    bool is_zero(const E& a) const {
        return std::all_of(a.begin(), a.end(), [&](const auto& c) { return kf->is_zero(c); });
    }
    bool eq(const E& a, const E& b) const { return a == b; }
    E add(const E& a, const E& b) const {
        E r(deg());
        for (u32 i = 0; i < deg(); ++i) r[i] = kf->add(a[i], b[i]);
        return r;
    }
    E sub(const E& a, const E& b) const {
        E r(deg());
        for (u32 i = 0; i < deg(); ++i) r[i] = kf->sub(a[i], b[i]);
        return r;
    }
    E neg(const E& a) const {
        E r(deg());
        for (u32 i = 0; i < deg(); ++i) r[i] = kf->neg(a[i]);
        return r;
    }
    E mul(const E& a, const E& b) const {
        Poly<K> pa(a.begin(), a.end()), pb(b.begin(), b.end());
        p_trim(*kf, pa);
        p_trim(*kf, pb);
        return canon(p_mul(*kf, pa, pb));
    }
    E inv(const E& a) const {
        if (is_zero(a)) fail(Errc::DivisionByZero, "inverse of zero");
        Poly<K> pa(a.begin(), a.end());
        p_trim(*kf, pa);
        Poly<K> r = p_invmod(*kf, pa, mod);
        if (r.empty() && !is_zero(a)) fail(Errc::Internal, "modulus not irreducible");
        r.resize(deg(), kf->zero());
        return r;
    }
    E pow(E a, u64 n) const {
        E r = one();
        while (n) {
            if (n & 1) r = mul(r, a);
            a = mul(a, a);
            n >>= 1;
        }
        return r;
    }
    u64 order() const { return sat_pow(kf->order(), deg()); }
    u64 to_index(const E& a) const {
        u64 idx = 0, scale = 1, so = kf->order();
        for (u32 i = 0; i < deg(); ++i) {
            idx += sat_mul(kf->to_index(a[i]), scale);
            scale = sat_mul(scale, so);
        }
        return idx;
    }
    E from_index(u64 i) const {
        E r(deg());
        u64 so = kf->order();
        for (u32 t = 0; t < deg(); ++t) {
            r[t] = kf->from_index(i % so);
            i /= so;
        }
        return r;
    }
};

}  // namespace

const char* level_name(Level lvl) {
    switch (lvl) {
        case Level::Prime: return "prime";
        case Level::Base: return "base";
        case Level::Top: return "top";
    }
    return "?";
}

std::string poly_to_string(const std::vector<u32>& coeffs) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        if (coeffs[i] == 0 && !(first && i == 0 && coeffs.size() == 1)) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0 || coeffs[i] != 1) os << coeffs[i];
        if (i >= 1) os << "x";
        if (i >= 2) os << "^" << i;
    }
    if (first) os << "0";
    return os.str();
}

// ---------------------------------------------------------------------------
// FieldTower
// ---------------------------------------------------------------------------

struct FieldTower::Impl {
    u64 p = 0;
    u32 e = 0, m = 0;
    FpOps fp;
    PolyQuot<FpOps> base;                // F_q = F_p[x]/(base_poly)
    PolyQuot<PolyQuot<FpOps>> top;       // L = F_q[y]/(top_poly)
    std::vector<u32> base_poly_pub;              // size e+1
    std::vector<std::vector<u32>> top_poly_pub;  // size m+1, entries size e

    Impl() = default;
    Impl(const Impl&) = delete;
    Impl& operator=(const Impl&) = delete;

    using BE = PolyQuot<FpOps>::E;            // base element: vector<u32> size e
    using TE = PolyQuot<PolyQuot<FpOps>>::E;  // top element: vector<BE> size m

    // flat <-> internal conversions
    BE to_base(const FieldElement& x) const { return BE(x.coeffs.begin(), x.coeffs.end()); }
    FieldElement from_base(const BE& b) const {
        return FieldElement{Level::Base, std::vector<u32>(b.begin(), b.end())};
    }
    TE to_top(const FieldElement& x) const {
        TE t(m);
        for (u32 i = 0; i < m; ++i)
            t[i] = BE(x.coeffs.begin() + static_cast<std::ptrdiff_t>(i) * e,
                      x.coeffs.begin() + static_cast<std::ptrdiff_t>(i + 1) * e);
        return t;
    }
    FieldElement from_top(const TE& t) const {
        FieldElement x{Level::Top, {}};
        x.coeffs.reserve(static_cast<std::size_t>(m) * e);
        for (const auto& blk : t) x.coeffs.insert(x.coeffs.end(), blk.begin(), blk.end());
        return x;
    }

    std::size_t coeff_len(Level lvl) const {
        switch (lvl) {
            case Level::Prime: return 1;
            case Level::Base: return e;
            case Level::Top: return static_cast<std::size_t>(m) * e;
        }
        return 0;
    }

    void check(const FieldElement& x) const {
        if (x.coeffs.size() != coeff_len(x.level))
            fail(Errc::LevelMismatch, std::string("element has ") + std::to_string(x.coeffs.size()) +
                                          " coefficients, expected " +
                                          std::to_string(coeff_len(x.level)) + " at " +
                                          level_name(x.level) + " level");
        for (u32 c : x.coeffs)
            if (c >= p)
                fail(Errc::InvalidArgument, "coefficient " + std::to_string(c) +
                                                " not reduced modulo " + std::to_string(p));
    }
    void check_pair(const FieldElement& a, const FieldElement& b) const {
        check(a);
        check(b);
        if (a.level != b.level)
            fail(Errc::LevelMismatch, std::string(level_name(a.level)) + " vs " + level_name(b.level));
    }
};

namespace {

// First monic irreducible of degree d over K in counting order among
// candidates with nonzero constant term.
template <class K>
Poly<K> select_poly(const K& k, u32 d) {
    u64 Q = k.order();
    u64 total = sat_pow(Q, d);
    if (total == UINT64_MAX) fail(Errc::InvalidArgument, "field too large for polynomial selection");
    PolyQuot<K> helper;  // only for from_index digits
    for (u64 v = 1; v < total; ++v) {
        if (v % Q == 0) continue;  // zero constant term
        Poly<K> f;
        f.reserve(d + 1);
        u64 t = v;
        for (u32 i = 0; i < d; ++i) {
            f.push_back(k.from_index(t % Q));
            t /= Q;
        }
        f.push_back(k.one());
        if (poly_irreducible(k, f)) return f;
    }
    fail(Errc::Internal, "no irreducible polynomial found");
}

template <class K>
Poly<K> canonicalize_user_poly(const K& k, Poly<K> f, u32 d, const char* which) {
    if (f.size() == d) {
        f.push_back(k.one());  // leading 1 implied
    } else if (f.size() != d + 1) {
        fail(Errc::InvalidArgument, std::string(which) + " must have degree " + std::to_string(d));
    }
    if (!k.eq(f.back(), k.one()))
        fail(Errc::InvalidArgument, std::string(which) + " must be monic");
    return f;
}

}  // namespace

FieldTower FieldTower::build(u64 p, u32 e, u32 m,
                             std::optional<std::vector<u32>> base_poly,
                             std::optional<std::vector<std::vector<u32>>> top_poly) {
    if (!is_prime(p)) fail(Errc::NotPrime, std::to_string(p) + " is not prime");
    if (p >= (1u << 31)) fail(Errc::InvalidArgument, "p too large");
    if (e < 1 || m < 1) fail(Errc::BadDimension, "extension degrees must be >= 1");

    auto impl = std::make_shared<Impl>();
    impl->p = p;
    impl->e = e;
    impl->m = m;
    impl->fp = FpOps{p};

    // base polynomial over F_p
    Poly<FpOps> bp;
    if (base_poly) {
        bp = *base_poly;
        for (auto& c : bp) c = impl->fp.reduce(c);
        bp = canonicalize_user_poly(impl->fp, std::move(bp), e, "base_poly");
        if (!poly_irreducible(impl->fp, bp))
            fail(Errc::ReduciblePolynomial,
                 "base_poly " + poly_to_string(bp) + " is reducible over F_" + std::to_string(p));
    } else {
        bp = select_poly(impl->fp, e);
    }
    impl->base.kf = &impl->fp;
    impl->base.mod = bp;
    impl->base_poly_pub = bp;

    // top polynomial over F_q
    Poly<PolyQuot<FpOps>> tp;
    if (top_poly) {
        tp.reserve(top_poly->size());
        for (auto blk : *top_poly) {
            if (blk.size() > e) fail(Errc::InvalidArgument, "top_poly coefficient too long");
            blk.resize(e, 0);
            for (auto& c : blk) c = impl->fp.reduce(c);
            tp.push_back(std::move(blk));
        }
        tp = canonicalize_user_poly(impl->base, std::move(tp), m, "top_poly");
        if (!poly_irreducible(impl->base, tp)) {
            std::string flat = "[";
            for (std::size_t i = 0; i < tp.size(); ++i)
                flat += (i ? "," : "") + std::to_string(impl->base.to_index(tp[i]));
            flat += "]";
            fail(Errc::ReduciblePolynomial, "top_poly with coefficient indices " + flat +
                                                " is reducible over F_" + std::to_string(impl->base.order()));
        }
    } else {
        tp = select_poly(impl->base, m);
    }
    impl->top.kf = &impl->base;
    impl->top.mod = tp;
    impl->top_poly_pub = tp;

    return FieldTower(std::move(impl));
}

u64 FieldTower::p() const { return impl_->p; }
u32 FieldTower::e() const { return impl_->e; }
u32 FieldTower::m() const { return impl_->m; }
u64 FieldTower::q() const { return impl_->base.order(); }

u64 FieldTower::order(Level lvl) const {
    switch (lvl) {
        case Level::Prime: return impl_->p;
        case Level::Base: return impl_->base.order();
        case Level::Top: return impl_->top.order();
    }
    return 0;
}

const std::vector<u32>& FieldTower::base_poly() const { return impl_->base_poly_pub; }
const std::vector<std::vector<u32>>& FieldTower::top_poly() const { return impl_->top_poly_pub; }

FieldElement FieldTower::zero(Level lvl) const {
    return FieldElement{lvl, std::vector<u32>(impl_->coeff_len(lvl), 0)};
}

FieldElement FieldTower::one(Level lvl) const {
    FieldElement x = zero(lvl);
    x.coeffs[0] = static_cast<u32>(1 % impl_->p);
    return x;
}

FieldElement FieldTower::from_integer(Level lvl, u64 v) const {
    FieldElement x = zero(lvl);
    x.coeffs[0] = impl_->fp.reduce(v);
    return x;
}

bool FieldTower::is_zero(const FieldElement& x) const {
    impl_->check(x);
    return std::all_of(x.coeffs.begin(), x.coeffs.end(), [](u32 c) { return c == 0; });
}

bool FieldTower::is_one(const FieldElement& x) const { return x == one(x.level); }

#define RMC_GF_BINOP(NAME, FP_EXPR, BASE_EXPR, TOP_EXPR)                              \
    FieldElement FieldTower::NAME(const FieldElement& a, const FieldElement& b) const { \
        impl_->check_pair(a, b);                                                       \
        switch (a.level) {                                                             \
            case Level::Prime:                                                         \
                return FieldElement{Level::Prime, {FP_EXPR}};                          \
            case Level::Base:                                                          \
                return impl_->from_base(BASE_EXPR);                                    \
            case Level::Top:                                                           \
                return impl_->from_top(TOP_EXPR);                                      \
        }                                                                              \
        fail(Errc::Internal, "bad level");                                             \
    }

RMC_GF_BINOP(add, impl_->fp.add(a.coeffs[0], b.coeffs[0]),
             impl_->base.add(impl_->to_base(a), impl_->to_base(b)),
             impl_->top.add(impl_->to_top(a), impl_->to_top(b)))
RMC_GF_BINOP(sub, impl_->fp.sub(a.coeffs[0], b.coeffs[0]),
             impl_->base.sub(impl_->to_base(a), impl_->to_base(b)),
             impl_->top.sub(impl_->to_top(a), impl_->to_top(b)))
RMC_GF_BINOP(mul, impl_->fp.mul(a.coeffs[0], b.coeffs[0]),
             impl_->base.mul(impl_->to_base(a), impl_->to_base(b)),
             impl_->top.mul(impl_->to_top(a), impl_->to_top(b)))

#undef RMC_GF_BINOP

FieldElement FieldTower::neg(const FieldElement& a) const {
    impl_->check(a);
    FieldElement r = a;
    for (auto& c : r.coeffs) c = impl_->fp.neg(c);
    return r;
}

FieldElement FieldTower::inv(const FieldElement& a) const {
    impl_->check(a);
    if (is_zero(a)) fail(Errc::DivisionByZero, "inverse of zero");
    switch (a.level) {
        case Level::Prime: return FieldElement{Level::Prime, {impl_->fp.inv(a.coeffs[0])}};
        case Level::Base: return impl_->from_base(impl_->base.inv(impl_->to_base(a)));
        case Level::Top: return impl_->from_top(impl_->top.inv(impl_->to_top(a)));
    }
    fail(Errc::Internal, "bad level");
}

FieldElement FieldTower::div(const FieldElement& a, const FieldElement& b) const {
    return mul(a, inv(b));
}

FieldElement FieldTower::pow(const FieldElement& a, u64 n) const {
    impl_->check(a);
    FieldElement r = one(a.level);
    FieldElement base = a;
    while (n) {
        if (n & 1) r = mul(r, base);
        base = mul(base, base);
        n >>= 1;
    }
    return r;
}

FieldElement FieldTower::embed(const FieldElement& x, Level to) const {
    impl_->check(x);
    if (x.level == to) return x;
    if (x.level == Level::Prime && to == Level::Base) {
        FieldElement r = zero(Level::Base);
        r.coeffs[0] = x.coeffs[0];
        return r;
    }
    if (to == Level::Top) {
        FieldElement b = x.level == Level::Prime ? embed(x, Level::Base) : x;
        FieldElement r = zero(Level::Top);
        std::copy(b.coeffs.begin(), b.coeffs.end(), r.coeffs.begin());
        return r;
    }
    fail(Errc::InvalidArgument, "cannot embed downward; use contract");
}

FieldElement FieldTower::contract(const FieldElement& x, Level to) const {
    impl_->check(x);
    if (x.level == to) return x;
    if (x.level == Level::Top) {
        for (std::size_t i = impl_->e; i < x.coeffs.size(); ++i)
            if (x.coeffs[i] != 0)
                fail(Errc::InvalidArgument, "element does not lie in the base field");
        FieldElement b{Level::Base, std::vector<u32>(x.coeffs.begin(), x.coeffs.begin() + impl_->e)};
        return to == Level::Base ? b : contract(b, to);
    }
    if (x.level == Level::Base && to == Level::Prime) {
        for (std::size_t i = 1; i < x.coeffs.size(); ++i)
            if (x.coeffs[i] != 0)
                fail(Errc::InvalidArgument, "element does not lie in the prime field");
        return FieldElement{Level::Prime, {x.coeffs[0]}};
    }
    fail(Errc::InvalidArgument, "cannot contract upward; use embed");
}

FieldElement FieldTower::frobenius(const FieldElement& x, u32 k) const {
    impl_->check(x);
    if (x.level != Level::Top) fail(Errc::LevelMismatch, "frobenius expects a top-level element");
    FieldElement y = x;
    u64 steps = static_cast<u64>(impl_->e) * k;
    for (u64 t = 0; t < steps; ++t) y = pow(y, impl_->p);
    return y;
}

FieldElement FieldTower::trace(const FieldElement& x) const {
    impl_->check(x);
    if (x.level != Level::Top) fail(Errc::LevelMismatch, "trace expects a top-level element");
    FieldElement acc = x, y = x;
    for (u32 k = 1; k < impl_->m; ++k) {
        y = frobenius(y, 1);
        acc = add(acc, y);
    }
    for (std::size_t i = impl_->e; i < acc.coeffs.size(); ++i)
        if (acc.coeffs[i] != 0) fail(Errc::Internal, "trace is not Frobenius-fixed");
    return contract(acc, Level::Base);
}

FieldElement FieldTower::norm(const FieldElement& x) const {
    impl_->check(x);
    if (x.level != Level::Top) fail(Errc::LevelMismatch, "norm expects a top-level element");
    FieldElement acc = x, y = x;
    for (u32 k = 1; k < impl_->m; ++k) {
        y = frobenius(y, 1);
        acc = mul(acc, y);
    }
    for (std::size_t i = impl_->e; i < acc.coeffs.size(); ++i)
        if (acc.coeffs[i] != 0) fail(Errc::Internal, "norm is not Frobenius-fixed");
    return contract(acc, Level::Base);
}

FieldElement FieldTower::absolute_trace(const FieldElement& x) const {
    impl_->check(x);
    if (x.level != Level::Base) fail(Errc::LevelMismatch, "absolute_trace expects a base-level element");
    FieldElement acc = x, y = x;
    for (u32 k = 1; k < impl_->e; ++k) {
        y = pow(y, impl_->p);
        acc = add(acc, y);
    }
    for (std::size_t i = 1; i < acc.coeffs.size(); ++i)
        if (acc.coeffs[i] != 0) fail(Errc::Internal, "absolute trace not in the prime field");
    return FieldElement{Level::Prime, {acc.coeffs[0]}};
}

u64 FieldTower::element_count(Level lvl) const {
    u64 n = order(lvl);
    if (n == UINT64_MAX) fail(Errc::InvalidArgument, "field too large to enumerate");
    return n;
}

FieldElement FieldTower::element_at(Level lvl, u64 index) const {
    if (index >= element_count(lvl)) fail(Errc::InvalidArgument, "element index out of range");
    switch (lvl) {
        case Level::Prime: return FieldElement{Level::Prime, {static_cast<u32>(index)}};
        case Level::Base: return impl_->from_base(impl_->base.from_index(index));
        case Level::Top: return impl_->from_top(impl_->top.from_index(index));
    }
    fail(Errc::Internal, "bad level");
}

u64 FieldTower::index_of(const FieldElement& x) const {
    impl_->check(x);
    switch (x.level) {
        case Level::Prime: return x.coeffs[0];
        case Level::Base: return impl_->base.to_index(impl_->to_base(x));
        case Level::Top: return impl_->top.to_index(impl_->to_top(x));
    }
    fail(Errc::Internal, "bad level");
}

FieldElement FieldTower::find_sqrt_minus_one() const {
    if (impl_->p == 2)
        fail(Errc::PreconditionViolated, "characteristic two: -1 = 1 is trivially a square");
    FieldElement minus_one = neg(one(Level::Top));
    u64 n = element_count(Level::Top);
    for (u64 i = 0; i < n; ++i) {
        FieldElement x = element_at(Level::Top, i);
        if (mul(x, x) == minus_one) return x;
    }
    fail(Errc::NoSquareRootOfMinusOne,
         "-1 is not a square in the top field (order = 3 mod 4)");
}

std::pair<FieldElement, FieldElement> FieldTower::find_artin_schreier() const {
    if (impl_->p != 2) fail(Errc::NoSuchElement, "Artin-Schreier element requires characteristic two");
    if (impl_->m % 2 != 0)
        fail(Errc::PreconditionViolated, "top degree is odd: no quadratic subextension");
    FieldElement c = zero(Level::Base);
    bool found_c = false;
    u64 nq = element_count(Level::Base);
    FieldElement prime_one = one(Level::Prime);
    for (u64 i = 0; i < nq; ++i) {
        FieldElement cand = element_at(Level::Base, i);
        if (absolute_trace(cand) == prime_one) {
            c = cand;
            found_c = true;
            break;
        }
    }
    if (!found_c) fail(Errc::Internal, "no base element of absolute trace one");
    FieldElement c_top = embed(c, Level::Top);
    u64 n = element_count(Level::Top);
    for (u64 i = 0; i < n; ++i) {
        FieldElement a = element_at(Level::Top, i);
        if (add(mul(a, a), a) == c_top) {
            if (frobenius(a, 1) != add(a, one(Level::Top)))
                fail(Errc::Internal, "Artin-Schreier element does not satisfy a^q = a + 1");
            return {a, c};
        }
    }
    fail(Errc::Internal, "Artin-Schreier equation has no solution in the top field");
}

FieldElement FieldTower::find_norm_preimage(const FieldElement& delta) const {
    impl_->check(delta);
    if (delta.level != Level::Base) fail(Errc::LevelMismatch, "delta must be a base-level element");
    if (is_zero(delta)) fail(Errc::NotFound, "delta = 0 has no norm preimage in L^x");
    u64 n = element_count(Level::Top);
    for (u64 i = 1; i < n; ++i) {
        FieldElement x = element_at(Level::Top, i);
        if (norm(x) == delta) return x;
    }
    fail(Errc::Internal, "norm map is not surjective onto the base field");
}

bool FieldTower::subfield_membership(const FieldElement& x, u32 d) const {
    impl_->check(x);
    if (x.level != Level::Top) fail(Errc::LevelMismatch, "membership test expects a top-level element");
    if (d == 0 || impl_->m % d != 0)
        fail(Errc::NotADivisor, std::to_string(d) + " does not divide m = " + std::to_string(impl_->m));
    return frobenius(x, d) == x;
}

bool operator==(const FieldTower& a, const FieldTower& b) {
    return a.impl_->p == b.impl_->p && a.impl_->e == b.impl_->e && a.impl_->m == b.impl_->m &&
           a.impl_->base_poly_pub == b.impl_->base_poly_pub &&
           a.impl_->top_poly_pub == b.impl_->top_poly_pub;
}

}  // namespace rmc::gf
