#include "rmc/constructions.hpp"

#include <algorithm>
#include <string>

namespace rmc::construct {

namespace {

using linalg::Matrix;

FieldElement trace_pairing(const FieldTower& t, const FieldElement& lambda, const FieldElement& x,
                           const FieldElement& y) {
    return t.trace(t.mul(lambda, t.mul(x, y)));
}

// Gram of (x, y) -> Tr(lambda x y) on the given top-level family, over F_q.
Matrix twisted_gram(const FieldTower& t, const FieldElement& lambda,
                    const std::vector<FieldElement>& vecs) {
    std::size_t n = vecs.size();
    Matrix G = Matrix::zero(t, Level::Base, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            FieldElement v = trace_pairing(t, lambda, vecs[i], vecs[j]);
            G.at(i, j) = v;
            G.at(j, i) = v;
        }
    return G;
}

// First y in F_q (enumeration order) with y^2 = a; base level.
FieldElement base_sqrt(const FieldTower& t, const FieldElement& a) {
    u64 q = t.element_count(Level::Base);
    for (u64 i = 0; i < q; ++i) {
        FieldElement y = t.element_at(Level::Base, i);
        if (t.mul(y, y) == a) return y;
    }
    fail(Errc::NotFound, "element is not a square in F_q");
}

bool base_is_square(const FieldTower& t, const FieldElement& a) {
    u64 q = t.element_count(Level::Base);
    for (u64 i = 0; i < q; ++i) {
        FieldElement y = t.element_at(Level::Base, i);
        if (t.mul(y, y) == a) return true;
    }
    return false;
}

std::vector<FieldElement> combine_basis(const FieldTower& t, const Matrix& P,
                                        const std::vector<FieldElement>& vecs) {
    std::vector<FieldElement> out;
    out.reserve(P.rows());
    for (std::size_t i = 0; i < P.rows(); ++i) {
        FieldElement acc = t.zero(Level::Top);
        for (std::size_t j = 0; j < vecs.size(); ++j)
            acc = t.add(acc, t.mul(t.embed(P.at(i, j), Level::Top), vecs[j]));
        out.push_back(acc);
    }
    return out;
}

LBasis orthonormal_odd_char(const FieldTower& t, const FieldElement& lambda) {
    LBasis pw = codes::power_basis(t);
    u32 m = t.m();
    Matrix G = twisted_gram(t, lambda, pw.alpha);
    Matrix P = Matrix::identity(t, Level::Base, m);
    FieldElement two = t.from_integer(Level::Base, 2);

    // Symmetric congruence diagonalization; P G0 P^t stays the Gram of the
    // current rows.
    for (u32 i = 0; i < m; ++i) {
        if (t.is_zero(G.at(i, i))) {
            u32 j = i + 1;
            for (; j < m; ++j)
                if (!t.is_zero(G.at(j, j))) break;
            if (j < m) {
                for (u32 c = 0; c < m; ++c) {
                    std::swap(P.at(i, c), P.at(j, c));
                    std::swap(G.at(i, c), G.at(j, c));
                }
                for (u32 r = 0; r < m; ++r) std::swap(G.at(r, i), G.at(r, j));
            } else {
                for (j = i + 1; j < m; ++j)
                    if (!t.is_zero(G.at(i, j))) break;
                if (j == m) fail(Errc::Internal, "degenerate twisted trace form");
                // row_i += row_j makes the diagonal 2 G_ij != 0
                for (u32 c = 0; c < m; ++c) {
                    P.at(i, c) = t.add(P.at(i, c), P.at(j, c));
                    G.at(i, c) = t.add(G.at(i, c), G.at(j, c));
                }
                for (u32 r = 0; r < m; ++r) G.at(r, i) = t.add(G.at(r, i), G.at(r, j));
            }
        }
        FieldElement piv_inv = t.inv(G.at(i, i));
        for (u32 r = i + 1; r < m; ++r) {
            if (t.is_zero(G.at(r, i))) continue;
            FieldElement f = t.mul(G.at(r, i), piv_inv);
            for (u32 c = 0; c < m; ++c) {
                P.at(r, c) = t.sub(P.at(r, c), t.mul(f, P.at(i, c)));
                G.at(r, c) = t.sub(G.at(r, c), t.mul(f, G.at(i, c)));
            }
            for (u32 rr = 0; rr < m; ++rr) G.at(rr, r) = t.sub(G.at(rr, r), t.mul(f, G.at(rr, i)));
        }
    }

    std::vector<FieldElement> rows = combine_basis(t, P, pw.alpha);
    std::vector<FieldElement> diag(m, t.zero(Level::Base));
    for (u32 i = 0; i < m; ++i) diag[i] = G.at(i, i);

    // Scale square diagonal entries to 1, then merge the (even number of)
    // nonsquare entries pairwise via d_i x^2 + d_j y^2 = 1.
    std::vector<u32> nonsquares;
    for (u32 i = 0; i < m; ++i) {
        if (base_is_square(t, diag[i])) {
            FieldElement s = t.inv(base_sqrt(t, diag[i]));
            rows[i] = t.mul(t.embed(s, Level::Top), rows[i]);
            diag[i] = t.one(Level::Base);
        } else {
            nonsquares.push_back(i);
        }
    }
    if (nonsquares.size() % 2 != 0)
        fail(Errc::Internal, "twisted trace form has nonsquare determinant");
    FieldElement one_b = t.one(Level::Base);
    u64 q = t.element_count(Level::Base);
    for (std::size_t u = 0; u < nonsquares.size(); u += 2) {
        u32 i = nonsquares[u], j = nonsquares[u + 1];
        FieldElement di = diag[i], dj = diag[j];
        bool found = false;
        FieldElement xs = t.zero(Level::Base), ys = xs;
        for (u64 idx = 0; idx < q * q && !found; ++idx) {
            FieldElement x = t.element_at(Level::Base, idx % q);
            FieldElement y = t.element_at(Level::Base, idx / q);
            FieldElement val = t.add(t.mul(di, t.mul(x, x)), t.mul(dj, t.mul(y, y)));
            if (val == one_b) {
                xs = x;
                ys = y;
                found = true;
            }
        }
        if (!found) fail(Errc::Internal, "binary form over F_q failed to represent 1");
        FieldElement u1 = t.add(t.mul(t.embed(xs, Level::Top), rows[i]),
                                t.mul(t.embed(ys, Level::Top), rows[j]));
        // u2 = (-d_j y v_i + d_i x v_j) / sqrt(d_i d_j); d_i d_j is a square.
        FieldElement s = base_sqrt(t, t.mul(di, dj));
        FieldElement u2 = t.add(t.mul(t.embed(t.neg(t.mul(dj, ys)), Level::Top), rows[i]),
                                t.mul(t.embed(t.mul(di, xs), Level::Top), rows[j]));
        u2 = t.mul(t.embed(t.inv(s), Level::Top), u2);
        rows[i] = u1;
        rows[j] = u2;
    }
    return LBasis{rows};
}

LBasis orthonormal_char2(const FieldTower& t, const FieldElement& lambda) {
    auto b = [&](const FieldElement& x, const FieldElement& y) {
        return trace_pairing(t, lambda, x, y);
    };
    std::vector<FieldElement> work = codes::power_basis(t).alpha;
    std::vector<FieldElement> result;
    FieldElement one_b = t.one(Level::Base);
    while (!work.empty()) {
        std::size_t pick = work.size();
        for (std::size_t i = 0; i < work.size(); ++i) {
            if (!t.is_zero(b(work[i], work[i]))) {
                pick = i;
                break;
            }
        }
        if (pick < work.size()) {
            FieldElement v = work[pick];
            work.erase(work.begin() + static_cast<std::ptrdiff_t>(pick));
            // squaring is bijective in char 2, so the norm has a square root
            FieldElement s = base_sqrt(t, b(v, v));
            v = t.mul(t.embed(t.inv(s), Level::Top), v);
            for (auto& w : work) {
                FieldElement c = b(w, v);
                w = t.sub(w, t.mul(t.embed(c, Level::Top), v));
            }
            result.push_back(v);
            continue;
        }
        // Remaining block is alternating. With a unit vector z in hand,
        // <z> perp H is isomorphic to <1,1,1>: replace z by the triple
        // (z+u, z+w, z+u+w) for a hyperbolic pair (u, w).
        if (result.empty())
            fail(Errc::AlternatingObstruction, "form is alternating: no orthonormal basis exists");
        std::size_t ui = 0, wi = 0;
        bool found = false;
        for (std::size_t i = 0; i < work.size() && !found; ++i)
            for (std::size_t j = i + 1; j < work.size() && !found; ++j)
                if (!t.is_zero(b(work[i], work[j]))) {
                    ui = i;
                    wi = j;
                    found = true;
                }
        if (!found) fail(Errc::Internal, "degenerate alternating block");
        FieldElement u = work[ui];
        FieldElement w = t.mul(t.embed(t.inv(b(work[ui], work[wi])), Level::Top), work[wi]);
        FieldElement z = result.back();
        result.pop_back();
        std::vector<FieldElement> rest;
        for (std::size_t i = 0; i < work.size(); ++i)
            if (i != ui && i != wi) rest.push_back(work[i]);
        // symplectic projection off the pair (u, w) with b(u, w) = 1
        for (auto& r : rest) {
            r = t.add(r, t.mul(t.embed(b(r, w), Level::Top), u));
            r = t.add(r, t.mul(t.embed(b(r, u), Level::Top), w));
        }
        result.push_back(t.add(z, u));
        result.push_back(t.add(z, w));
        result.push_back(t.add(t.add(z, u), w));
        work = std::move(rest);
    }
    (void)one_b;
    return LBasis{result};
}

}  // namespace

std::pair<u64, u32> factor_prime_power(u64 q) {
    if (q < 2) fail(Errc::InvalidArgument, "q must be at least 2");
    u64 p = q;
    for (u64 d = 2; d * d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    u32 e = 0;
    u64 r = q;
    while (r % p == 0) {
        r /= p;
        ++e;
    }
    if (r != 1) fail(Errc::InvalidArgument, std::to_string(q) + " is not a prime power");
    return {p, e};
}

GabidulinCode gabidulin_code(const FieldTower& t, const std::vector<FieldElement>& c0,
                             std::size_t k) {
    std::size_t n = c0.size();
    if (n == 0 || n > t.m()) fail(Errc::BadDimension, "need 1 <= n <= m");
    if (k < 1 || k > n) fail(Errc::BadDimension, "need 1 <= k <= n");
    if (codes::rank_weight(t, c0) != n)
        fail(Errc::CoordinatesDependent, "coordinates of c0 are F-linearly dependent");
    std::vector<std::vector<FieldElement>> rows;
    rows.push_back(c0);
    for (std::size_t j = 1; j < k; ++j) {
        std::vector<FieldElement> r;
        r.reserve(n);
        for (const auto& x : rows.back()) r.push_back(t.frobenius(x, 1));
        rows.push_back(std::move(r));
    }
    Matrix G = Matrix::from_rows(Level::Top, n, rows);
    if (linalg::rank(t, G) != k) fail(Errc::Internal, "sigma-power rows are L-dependent");
    return GabidulinCode(t, std::move(G));
}

std::vector<FieldElement> subfield_basis(const FieldTower& t, u32 d) {
    if (d == 0 || t.m() % d != 0)
        fail(Errc::NotADivisor, std::to_string(d) + " does not divide m = " + std::to_string(t.m()));
    u32 m = t.m();
    LBasis pw = codes::power_basis(t);
    // Matrix of frobenius(., d) - id on L as an F_q-space, columns in the
    // power basis; its kernel is F_{q^d}.
    Matrix A = Matrix::zero(t, Level::Base, m, m);
    for (u32 j = 0; j < m; ++j) {
        FieldElement img = t.sub(t.frobenius(pw.alpha[j], d), pw.alpha[j]);
        for (u32 i = 0; i < m; ++i)
            A.at(i, j) = FieldElement{Level::Base,
                                      std::vector<u32>(img.coeffs.begin() + i * t.e(),
                                                       img.coeffs.begin() + (i + 1) * t.e())};
    }
    auto kern = linalg::kernel(t, A);
    if (kern.size() != d) fail(Errc::Internal, "subfield has wrong F_q-dimension");
    std::vector<FieldElement> basis;
    basis.reserve(d);
    for (const auto& v : kern) {
        FieldElement acc = t.zero(Level::Top);
        for (u32 j = 0; j < m; ++j)
            acc = t.add(acc, t.mul(t.embed(v[j], Level::Top), pw.alpha[j]));
        basis.push_back(acc);
    }
    return basis;
}

std::vector<FieldElement> self_dual_normal_basis(const FieldTower& t, u32 d) {
    if (d == 0 || t.m() % d != 0)
        fail(Errc::NotADivisor, std::to_string(d) + " does not divide m = " + std::to_string(t.m()));
    if (t.p() != 2 && d % 2 == 0)
        fail(Errc::PreconditionViolated, "odd characteristic requires d odd");
    if (t.p() == 2 && d % 2 == 0 && d % 4 != 2)
        fail(Errc::PreconditionViolated, "characteristic two requires d odd or d = 2 (mod 4)");

    FieldElement one_b = t.one(Level::Base);
    u64 n = t.element_count(Level::Top);
    for (u64 idx = 1; idx < n; ++idx) {
        FieldElement a = t.element_at(Level::Top, idx);
        if (!t.subfield_membership(a, d)) continue;
        // Tr_{M/F}(a tau^j(a)) must be 1 for j = 0 and 0 otherwise.
        bool ok = true;
        std::vector<FieldElement> orbit;
        orbit.reserve(d);
        FieldElement conj = a;
        for (u32 j = 0; j < d && ok; ++j) {
            FieldElement prod = t.mul(a, conj);
            FieldElement tr = prod;
            FieldElement it = prod;
            for (u32 s = 1; s < d; ++s) {
                it = t.frobenius(it, 1);
                tr = t.add(tr, it);
            }
            FieldElement want = j == 0 ? t.embed(one_b, Level::Top) : t.zero(Level::Top);
            if (tr != want) ok = false;
            orbit.push_back(conj);
            conj = t.frobenius(conj, 1);
        }
        if (ok) return orbit;
    }
    fail(Errc::NotFound, "no self-dual normal basis found by exhaustive scan");
}

LBasis dual_basis(const FieldTower& t, const LBasis& alpha, const FieldElement& lambda) {
    if (!codes::is_lbasis(t, alpha)) fail(Errc::NotABasis, "alpha is not an F-basis of L");
    if (t.is_zero(lambda)) fail(Errc::InvalidArgument, "lambda must be nonzero");
    u32 m = t.m();
    Matrix G = twisted_gram(t, lambda, alpha.alpha);
    auto Ginv = linalg::inverse(t, G);
    if (!Ginv) fail(Errc::Internal, "twisted trace form is degenerate");
    std::vector<FieldElement> out(m, t.zero(Level::Top));
    for (u32 j = 0; j < m; ++j) {
        FieldElement acc = t.zero(Level::Top);
        for (u32 i = 0; i < m; ++i)
            acc = t.add(acc, t.mul(t.embed(Ginv->at(i, j), Level::Top), alpha.alpha[i]));
        out[j] = acc;
    }
    // verify s(alpha_i alpha'_j) = delta_ij
    for (u32 i = 0; i < m; ++i)
        for (u32 j = 0; j < m; ++j) {
            FieldElement v = trace_pairing(t, lambda, alpha.alpha[i], out[j]);
            FieldElement want = i == j ? t.one(Level::Base) : t.zero(Level::Base);
            if (v != want) fail(Errc::Internal, "dual basis verification failed");
        }
    return LBasis{out};
}

TwistedTraceBasis orthonormal_basis_twisted_trace(const FieldTower& t) {
    FieldElement lambda = t.one(Level::Top);
    LBasis alpha{{}};
    if (t.p() == 2) {
        alpha = orthonormal_char2(t, lambda);
    } else {
        LBasis pw = codes::power_basis(t);
        FieldElement delta = linalg::det(t, twisted_gram(t, t.one(Level::Top), pw.alpha));
        lambda = t.find_norm_preimage(delta);
        alpha = orthonormal_odd_char(t, lambda);
    }
    Matrix G = twisted_gram(t, lambda, alpha.alpha);
    if (G != Matrix::identity(t, Level::Base, t.m()))
        fail(Errc::Internal, "orthonormal basis verification failed");
    return TwistedTraceBasis{lambda, std::move(alpha)};
}

GabidulinCode self_dual_mrd_code(u64 q, u32 n, u64 budget) {
    auto [p, e] = factor_prime_power(q);
    if (p == 2)
        fail(Errc::PreconditionViolated,
             "q even: no self-dual MRD code exists in characteristic two");
    if (q % 4 == 1)
        fail(Errc::PreconditionViolated,
             "q = 1 (mod 4): -1 is a square in F_q, no self-dual MRD code exists");
    if (n % 2 != 0)
        fail(Errc::PreconditionViolated, "n odd: self-dual codes require even length");
    if (n % 4 == 0)
        fail(Errc::PreconditionViolated,
             "n = 0 (mod 4): -1 is a sum of two squares in F_q, no self-dual MRD code exists");

    FieldTower t = FieldTower::build(p, e, n);
    u32 d = n / 2;
    FieldElement i = t.find_sqrt_minus_one();
    // q = 3 (mod 4) forces i^q = -i
    if (t.frobenius(i, 1) != t.neg(i)) fail(Errc::Internal, "sigma(i) != -i");
    std::vector<FieldElement> v = self_dual_normal_basis(t, d);
    std::vector<FieldElement> c0 = v;
    for (const auto& x : v) c0.push_back(t.mul(i, x));
    GabidulinCode C = gabidulin_code(t, c0, d);

    const auto& G = C.generator();
    Matrix W = linalg::mul(t, G, linalg::transpose(G));
    if (!linalg::is_zero(t, W)) fail(Errc::Internal, "G G^t != 0");
    if (!codes::is_self_dual(C, BilinearFormSpec::identity(t, n)))
        fail(Errc::Internal, "constructed code is not self-dual");
    if (codes::projective_line_count(C) <= budget && !codes::is_mrd(C, budget))
        fail(Errc::Internal, "constructed code is not MRD");
    return C;
}

GabidulinCode lagrangian_mrd_code(u64 q, u32 n, u64 budget) {
    auto [p, e] = factor_prime_power(q);
    if (p != 2)
        fail(Errc::PreconditionViolated,
             "q odd: no Lagrangian MRD code exists in odd characteristic");
    if (n % 2 != 0)
        fail(Errc::PreconditionViolated, "n odd: Lagrangian codes require even length");
    if (n % 4 != 2)
        fail(Errc::PreconditionViolated,
             "n = 0 (mod 4): d = n/2 is even and Gal(L/F) is cyclic, construction requires n = 2 (mod 4)");

    FieldTower t = FieldTower::build(p, e, n);
    u32 d = n / 2;
    auto [alpha, c] = t.find_artin_schreier();
    (void)c;
    std::vector<FieldElement> v = self_dual_normal_basis(t, d);
    std::vector<FieldElement> c0 = v;
    for (const auto& x : v) c0.push_back(t.mul(alpha, x));
    GabidulinCode C = gabidulin_code(t, c0, d);

    if (!codes::is_self_dual(C, BilinearFormSpec::hyperbolic(t, n)))
        fail(Errc::Internal, "constructed code is not Lagrangian");
    if (codes::projective_line_count(C) <= budget && !codes::is_mrd(C, budget))
        fail(Errc::Internal, "constructed code is not MRD");
    return C;
}

bool level_of_field(const FieldTower& t, Level lvl, u32 s) {
    if (t.p() == 2) fail(Errc::EvenCharacteristic, "level is defined for odd characteristic");
    u64 count = t.element_count(lvl);
    FieldElement minus_one = t.neg(t.one(lvl));
    u32 level = 0;
    for (u64 i = 0; i < count && level == 0; ++i) {
        FieldElement x = t.element_at(lvl, i);
        if (t.mul(x, x) == minus_one) level = 1;
    }
    if (level == 0) {
        bool found = false;
        for (u64 a = 0; a < count && !found; ++a) {
            FieldElement x = t.element_at(lvl, a);
            FieldElement xx = t.mul(x, x);
            for (u64 bidx = 0; bidx < count && !found; ++bidx) {
                FieldElement y = t.element_at(lvl, bidx);
                if (t.add(xx, t.mul(y, y)) == minus_one) found = true;
            }
        }
        if (!found) fail(Errc::Internal, "-1 is not a sum of two squares in a finite field");
        level = 2;
    }
    u64 budget_pow = s >= 63 ? UINT64_MAX : (u64{1} << s);
    return budget_pow >= level;
}

}  // namespace rmc::construct
