#include "rmc/rankcodes.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>

namespace rmc::codes {

namespace {

using std::uint16_t;

u64 sat_mul(u64 a, u64 b) {
    if (a == 0 || b == 0) return 0;
    if (a > UINT64_MAX / b) return UINT64_MAX;
    return a * b;
}

u64 sat_pow(u64 base, u64 exp) {
    u64 r = 1;
    while (exp--) {
        r = sat_mul(r, base);
        if (r == UINT64_MAX) break;
    }
    return r;
}

linalg::Matrix embed_matrix(const FieldTower& t, const linalg::Matrix& B, Level to) {
    std::vector<FieldElement> entries;
    entries.reserve(B.rows() * B.cols());
    for (std::size_t i = 0; i < B.rows(); ++i)
        for (std::size_t j = 0; j < B.cols(); ++j) entries.push_back(t.embed(B.at(i, j), to));
    return linalg::Matrix(to, B.rows(), B.cols(), std::move(entries));
}

// m x 1 column of base elements: the power-basis coordinates of a top element.
std::vector<FieldElement> top_coords(const FieldTower& t, const FieldElement& x) {
    std::vector<FieldElement> col;
    col.reserve(t.m());
    for (u32 blk = 0; blk < t.m(); ++blk)
        col.push_back(FieldElement{Level::Base,
                                   std::vector<u32>(x.coeffs.begin() + blk * t.e(),
                                                    x.coeffs.begin() + (blk + 1) * t.e())});
    return col;
}

}  // namespace

// ---------------------------------------------------------------------------
// Bases and code types
// ---------------------------------------------------------------------------

LBasis power_basis(const FieldTower& t) {
    LBasis b;
    b.alpha.reserve(t.m());
    FieldElement cur = t.one(Level::Top);
    FieldElement y = t.m() > 1 ? t.element_at(Level::Top, t.q()) : t.one(Level::Top);
    for (u32 i = 0; i < t.m(); ++i) {
        b.alpha.push_back(cur);
        if (i + 1 < t.m()) cur = t.mul(cur, y);
    }
    return b;
}

bool is_lbasis(const FieldTower& t, const LBasis& b) {
    if (b.alpha.size() != t.m()) return false;
    std::vector<std::vector<FieldElement>> rows;
    for (const auto& a : b.alpha) {
        if (a.level != Level::Top) return false;
        rows.push_back(top_coords(t, a));
    }
    auto M = linalg::Matrix::from_rows(Level::Base, t.m(), rows);
    return linalg::rank(t, M) == t.m();
}

GabidulinCode::GabidulinCode(FieldTower tower, linalg::Matrix generator)
    : tower_(std::move(tower)), generator_(std::move(generator)) {
    if (generator_.level() != Level::Top) fail(Errc::LevelMismatch, "generator must be over L");
    if (generator_.cols() > tower_.m())
        fail(Errc::BadDimension, "block length n exceeds extension degree m");
    if (generator_.rows() > 0 && linalg::rank(tower_, generator_) != generator_.rows())
        fail(Errc::NotABasis, "generator rows are L-linearly dependent");
}

DelsarteCode::DelsarteCode(FieldTower tower, std::size_t rows, std::size_t cols,
                           std::vector<linalg::Matrix> basis)
    : tower_(std::move(tower)), rows_(rows), cols_(cols), basis_(std::move(basis)) {
    if (cols_ == 0 || rows_ < cols_) fail(Errc::BadDimension, "matrix codes require rows >= cols >= 1");
    for (const auto& M : basis_) {
        if (M.level() != Level::Base) fail(Errc::LevelMismatch, "basis matrices must be over F_q");
        if (M.rows() != rows_ || M.cols() != cols_)
            fail(Errc::BadDimension, "basis matrix shape mismatch");
    }
    if (!basis_.empty()) {
        auto flat = flatten_basis(*this);
        if (linalg::rank(tower_, flat) != basis_.size())
            fail(Errc::NotABasis, "basis matrices are F-linearly dependent");
    }
}

linalg::Matrix flatten_basis(const DelsarteCode& D) {
    const auto& t = D.tower();
    std::vector<std::vector<FieldElement>> rows;
    rows.reserve(D.dim());
    for (const auto& M : D.basis()) {
        std::vector<FieldElement> row;
        row.reserve(D.m() * D.n());
        for (std::size_t i = 0; i < D.m(); ++i)
            for (std::size_t j = 0; j < D.n(); ++j) row.push_back(M.at(i, j));
        rows.push_back(std::move(row));
    }
    if (rows.empty()) return linalg::Matrix::zero(t, Level::Base, 0, D.m() * D.n());
    return linalg::Matrix::from_rows(Level::Base, D.m() * D.n(), rows);
}

BilinearFormSpec BilinearFormSpec::identity(const FieldTower& t, std::size_t n) {
    return BilinearFormSpec{Tag::Identity, n, linalg::Matrix::identity(t, Level::Base, n)};
}

BilinearFormSpec BilinearFormSpec::hyperbolic(const FieldTower& t, std::size_t n) {
    if (n % 2 != 0) fail(Errc::BadDimension, "hyperbolic form requires even n");
    std::size_t d = n / 2;
    linalg::Matrix B = linalg::Matrix::zero(t, Level::Base, n, n);
    for (std::size_t i = 0; i < d; ++i) {
        B.at(i, d + i) = t.one(Level::Base);
        B.at(d + i, i) = t.one(Level::Base);
    }
    return BilinearFormSpec{Tag::Hyperbolic, n, std::move(B)};
}

BilinearFormSpec BilinearFormSpec::custom(const FieldTower& t, linalg::Matrix B) {
    if (B.rows() != B.cols()) fail(Errc::NotSquare, "form matrix must be square");
    if (B.level() != Level::Base) fail(Errc::LevelMismatch, "form matrix must be over F_q");
    if (B != linalg::transpose(B)) fail(Errc::InvalidArgument, "form matrix must be symmetric");
    if (t.is_zero(linalg::det(t, B))) fail(Errc::InvalidArgument, "form matrix must be invertible");
    std::size_t n = B.rows();
    return BilinearFormSpec{Tag::Custom, n, std::move(B)};
}

// ---------------------------------------------------------------------------
// Expansion and weight
// ---------------------------------------------------------------------------

linalg::Matrix expansion_matrix(const FieldTower& t, const std::vector<FieldElement>& c,
                                const LBasis& alpha) {
    if (!is_lbasis(t, alpha)) fail(Errc::NotABasis, "alpha is not an F-basis of L");
    std::size_t n = c.size();
    if (n == 0) fail(Errc::BadDimension, "empty vector");
    u32 m = t.m();
    // Columns of A are the power-basis coordinates of the alpha_i; solving
    // A X = [coords(c_j)] gives the unique M with c = alpha * M.
    linalg::Matrix A = linalg::Matrix::zero(t, Level::Base, m, m);
    for (u32 j = 0; j < m; ++j) {
        auto col = top_coords(t, alpha.alpha[j]);
        for (u32 i = 0; i < m; ++i) A.at(i, j) = col[i];
    }
    auto Ainv = linalg::inverse(t, A);
    if (!Ainv) fail(Errc::NotABasis, "alpha is not an F-basis of L");
    linalg::Matrix C = linalg::Matrix::zero(t, Level::Base, m, n);
    for (std::size_t j = 0; j < n; ++j) {
        if (c[j].level != Level::Top) fail(Errc::LevelMismatch, "vector entries must be over L");
        auto col = top_coords(t, c[j]);
        for (u32 i = 0; i < m; ++i) C.at(i, j) = col[i];
    }
    return linalg::mul(t, *Ainv, C);
}

std::size_t rank_weight(const FieldTower& t, const std::vector<FieldElement>& c) {
    if (c.empty()) return 0;
    u32 m = t.m();
    linalg::Matrix M = linalg::Matrix::zero(t, Level::Base, m, c.size());
    for (std::size_t j = 0; j < c.size(); ++j) {
        auto col = top_coords(t, c[j]);
        for (u32 i = 0; i < m; ++i) M.at(i, j) = col[i];
    }
    return linalg::rank(t, M);
}

// ---------------------------------------------------------------------------
// Fast enumeration engine.
//
// Small fields are flattened to index tables: base elements become indices
// 0..q-1 with q*q operation tables; top elements become fixed arrays of m
// base indices, multiplied schoolbook-style and reduced via precomputed rows
// for y^m .. y^(2m-2). Towers outside the table limits take a generic path.
// ---------------------------------------------------------------------------

namespace {

constexpr u32 kPackedMaxQ = 1024;
constexpr u32 kPackedMaxM = 16;

struct Packed {
    u32 q = 0, m = 0, e = 0;
    u64 p = 0;
    std::vector<uint16_t> add_t, sub_t, mul_t;  // q*q each
    std::vector<uint16_t> inv_t;                // q

    using El = std::array<uint16_t, kPackedMaxM>;
    std::array<El, kPackedMaxM> red{};  // red[s] = y^(m+s) mod top_poly

    uint16_t add(uint16_t a, uint16_t b) const { return add_t[a * q + b]; }
    uint16_t sub(uint16_t a, uint16_t b) const { return sub_t[a * q + b]; }
    uint16_t mul(uint16_t a, uint16_t b) const { return mul_t[a * q + b]; }

    El el_zero() const { return El{}; }

    El el_add(const El& a, const El& b) const {
        El r{};
        for (u32 i = 0; i < m; ++i) r[i] = add(a[i], b[i]);
        return r;
    }

    El el_mul(const El& a, const El& b) const {
        std::array<uint16_t, 2 * kPackedMaxM> tmp{};
        for (u32 i = 0; i < m; ++i) {
            if (!a[i]) continue;
            for (u32 j = 0; j < m; ++j)
                if (b[j]) tmp[i + j] = add(tmp[i + j], mul(a[i], b[j]));
        }
        // red[s-m] holds y^s mod f in absolute coordinates
        for (u32 s = 2 * m - 2; s >= m && m >= 2; --s) {
            uint16_t c = tmp[s];
            if (!c) continue;
            const El& row = red[s - m];
            for (u32 j = 0; j < m; ++j)
                if (row[j]) tmp[j] = add(tmp[j], mul(c, row[j]));
            tmp[s] = 0;
        }
        El r{};
        for (u32 i = 0; i < m; ++i) r[i] = tmp[i];
        return r;
    }

    El from_element(const FieldElement& x) const {
        El r{};
        for (u32 blk = 0; blk < m; ++blk) {
            u64 idx = 0, scale = 1;
            for (u32 j = 0; j < e; ++j) {
                idx += x.coeffs[blk * e + j] * scale;
                scale *= p;
            }
            r[blk] = static_cast<uint16_t>(idx);
        }
        return r;
    }

    // Rank of a rows x cols matrix of base indices, destructive.
    u32 mat_rank(uint16_t* a, u32 rows, u32 cols) const {
        u32 rk = 0;
        for (u32 c = 0; c < cols && rk < rows; ++c) {
            u32 sel = rk;
            while (sel < rows && a[sel * cols + c] == 0) ++sel;
            if (sel == rows) continue;
            if (sel != rk)
                for (u32 j = c; j < cols; ++j) std::swap(a[sel * cols + j], a[rk * cols + j]);
            uint16_t piv_inv = inv_t[a[rk * cols + c]];
            for (u32 i = rk + 1; i < rows; ++i) {
                uint16_t f = a[i * cols + c];
                if (!f) continue;
                uint16_t g = mul(f, piv_inv);
                for (u32 j = c; j < cols; ++j)
                    a[i * cols + j] = sub(a[i * cols + j], mul(g, a[rk * cols + j]));
            }
            ++rk;
        }
        return rk;
    }

    // Weight of a codeword given as n top elements: rank of the m x n
    // coordinate matrix.
    u32 weight(const El* c, u32 n) const {
        std::array<uint16_t, kPackedMaxM * kPackedMaxM> buf;
        for (u32 i = 0; i < m; ++i)
            for (u32 j = 0; j < n; ++j) buf[i * n + j] = c[j][i];
        return mat_rank(buf.data(), m, n);
    }
};

std::optional<Packed> build_packed(const FieldTower& t, u32 n_cols) {
    u64 q = t.q();
    if (q > kPackedMaxQ || t.m() > kPackedMaxM || n_cols > kPackedMaxM) return std::nullopt;
    Packed P;
    P.q = static_cast<u32>(q);
    P.m = t.m();
    P.e = t.e();
    P.p = t.p();
    std::vector<FieldElement> elems(P.q, t.zero(Level::Base));
    for (u32 i = 0; i < P.q; ++i) elems[i] = t.element_at(Level::Base, i);
    P.add_t.resize(static_cast<std::size_t>(P.q) * P.q);
    P.sub_t.resize(static_cast<std::size_t>(P.q) * P.q);
    P.mul_t.resize(static_cast<std::size_t>(P.q) * P.q);
    P.inv_t.assign(P.q, 0);
    for (u32 a = 0; a < P.q; ++a) {
        for (u32 b = 0; b < P.q; ++b) {
            P.add_t[a * P.q + b] = static_cast<uint16_t>(t.index_of(t.add(elems[a], elems[b])));
            P.sub_t[a * P.q + b] = static_cast<uint16_t>(t.index_of(t.sub(elems[a], elems[b])));
            P.mul_t[a * P.q + b] = static_cast<uint16_t>(t.index_of(t.mul(elems[a], elems[b])));
        }
        if (a != 0) P.inv_t[a] = static_cast<uint16_t>(t.index_of(t.inv(elems[a])));
    }
    if (P.m >= 2) {
        FieldElement y = t.element_at(Level::Top, q);
        for (u32 s = 0; s + 1 < P.m; ++s)
            P.red[s] = P.from_element(t.pow(y, P.m + s));
    }
    return P;
}

// Minimum weight over one projective representative per L-line of the row
// space. Stops early once weight 1 is seen.
std::size_t packed_min_weight(const Packed& P, const std::vector<Packed::El>& grows, u32 k, u32 n,
                              u64 l_order) {
    std::size_t best = SIZE_MAX;
    std::vector<std::vector<Packed::El>> buf(k + 1, std::vector<Packed::El>(n));
    // digits odometer for the scalar at each free position
    auto rec = [&](auto&& self, u32 j, const std::vector<Packed::El>& cur) -> bool {
        if (j == k) {
            u32 w = P.weight(cur.data(), n);
            if (w < best) best = w;
            return best <= 1;
        }
        // a = 0 branch
        if (self(self, j + 1, cur)) return true;
        Packed::El a{};
        for (u64 ai = 1; ai < l_order; ++ai) {
            // increment a in base-q digit order
            for (u32 d = 0; d < P.m; ++d) {
                if (a[d] + 1u < P.q) {
                    ++a[d];
                    break;
                }
                a[d] = 0;
            }
            auto& next = buf[j + 1];
            for (u32 c = 0; c < n; ++c) next[c] = P.el_add(cur[c], P.el_mul(a, grows[j * n + c]));
            if (self(self, j + 1, next)) return true;
        }
        return false;
    };
    for (u32 pivot = 0; pivot < k; ++pivot) {
        auto& start = buf[pivot + 1];
        for (u32 c = 0; c < n; ++c) start[c] = grows[pivot * n + c];
        std::vector<Packed::El> cur = start;
        if (rec(rec, pivot + 1, cur)) break;
    }
    return best;
}

// Generic fallback mirroring packed_min_weight with FieldElement arithmetic.
std::size_t generic_min_weight(const GabidulinCode& C, u64 l_order) {
    const auto& t = C.tower();
    u32 k = static_cast<u32>(C.dim());
    u32 n = static_cast<u32>(C.n());
    std::size_t best = SIZE_MAX;
    std::vector<std::vector<FieldElement>> rows;
    for (u32 i = 0; i < k; ++i) rows.push_back(C.generator().row(i));
    auto rec = [&](auto&& self, u32 j, const std::vector<FieldElement>& cur) -> bool {
        if (j == k) {
            std::size_t w = rank_weight(t, cur);
            if (w < best) best = w;
            return best <= 1;
        }
        if (self(self, j + 1, cur)) return true;
        for (u64 ai = 1; ai < l_order; ++ai) {
            FieldElement a = t.element_at(Level::Top, ai);
            std::vector<FieldElement> next(n, t.zero(Level::Top));
            for (u32 c = 0; c < n; ++c) next[c] = t.add(cur[c], t.mul(a, rows[j][c]));
            if (self(self, j + 1, next)) return true;
        }
        return false;
    };
    for (u32 pivot = 0; pivot < k; ++pivot) {
        if (rec(rec, pivot + 1, rows[pivot])) break;
    }
    return best;
}

}  // namespace

u64 projective_line_count(const GabidulinCode& C) {
    u64 l_order = sat_pow(C.tower().q(), C.tower().m());
    u64 total = 0;
    for (std::size_t pivot = 0; pivot < C.dim(); ++pivot) {
        u64 branch = sat_pow(l_order, static_cast<u64>(C.dim() - 1 - pivot));
        total = total + branch < total ? UINT64_MAX : total + branch;
        if (total == UINT64_MAX) break;
    }
    return total;
}

std::size_t rank_distance(const GabidulinCode& C, u64 budget) {
    if (C.dim() == 0) fail(Errc::InvalidArgument, "rank distance of the zero code");
    u64 count = projective_line_count(C);
    if (count > budget)
        fail(Errc::BudgetExceeded, "enumeration requires " +
                                       (count == UINT64_MAX ? std::string("> 2^64")
                                                            : std::to_string(count)) +
                                       " representatives, budget is " + std::to_string(budget));
    const auto& t = C.tower();
    u32 k = static_cast<u32>(C.dim());
    u32 n = static_cast<u32>(C.n());
    // The scalar loops run only for k >= 2, where the budget check already
    // bounds q^m, so a saturated order is never iterated.
    u64 l_order = sat_pow(t.q(), t.m());
    if (auto P = build_packed(t, n)) {
        std::vector<Packed::El> grows(static_cast<std::size_t>(k) * n);
        for (u32 i = 0; i < k; ++i)
            for (u32 j = 0; j < n; ++j) grows[i * n + j] = P->from_element(C.generator().at(i, j));
        return packed_min_weight(*P, grows, k, n, l_order);
    }
    return generic_min_weight(C, l_order);
}

bool is_mrd(const GabidulinCode& C, u64 budget) {
    return rank_distance(C, budget) == C.n() - C.dim() + 1;
}

// ---------------------------------------------------------------------------
// Duality
// ---------------------------------------------------------------------------

namespace {

void check_form(const GabidulinCode& C, const BilinearFormSpec& form) {
    if (form.n != C.n()) fail(Errc::BadDimension, "form size does not match block length");
}

linalg::Matrix rref_generator(const FieldTower& t, const linalg::Matrix& G) {
    return linalg::rref(t, G).R;
}

}  // namespace

GabidulinCode dual_code(const GabidulinCode& C, const BilinearFormSpec& form) {
    check_form(C, form);
    const auto& t = C.tower();
    linalg::Matrix BL = embed_matrix(t, form.B, Level::Top);
    std::vector<std::vector<FieldElement>> gens;
    if (C.dim() == 0) {
        auto I = linalg::Matrix::identity(t, Level::Top, C.n());
        for (std::size_t i = 0; i < C.n(); ++i) gens.push_back(I.row(i));
    } else {
        linalg::Matrix GB = linalg::mul(t, C.generator(), BL);
        gens = linalg::kernel(t, GB);
    }
    linalg::Matrix G = gens.empty() ? linalg::Matrix::zero(t, Level::Top, 0, C.n())
                                    : linalg::Matrix::from_rows(Level::Top, C.n(), gens);
    return GabidulinCode(t, rref_generator(t, G));
}

bool is_self_dual(const GabidulinCode& C, const BilinearFormSpec& form) {
    check_form(C, form);
    if (C.n() != 2 * C.dim()) return false;
    const auto& t = C.tower();
    linalg::Matrix BL = embed_matrix(t, form.B, Level::Top);
    linalg::Matrix W = linalg::mul(t, linalg::mul(t, C.generator(), BL),
                                   linalg::transpose(C.generator()));
    if (!linalg::is_zero(t, W)) return false;
    GabidulinCode D = dual_code(C, form);
    return rref_generator(t, D.generator()) == rref_generator(t, C.generator());
}

bool same_code(const GabidulinCode& A, const GabidulinCode& B) {
    if (!(A.tower() == B.tower()) || A.n() != B.n() || A.dim() != B.dim()) return false;
    return rref_generator(A.tower(), A.generator()) == rref_generator(B.tower(), B.generator());
}

bool same_delsarte(const DelsarteCode& A, const DelsarteCode& B) {
    if (!(A.tower() == B.tower()) || A.m() != B.m() || A.n() != B.n() || A.dim() != B.dim())
        return false;
    if (A.dim() == 0) return true;
    auto ra = linalg::rref(A.tower(), flatten_basis(A)).R;
    auto rb = linalg::rref(B.tower(), flatten_basis(B)).R;
    return ra == rb;
}

namespace {

FieldElement psi_pairing(const FieldTower& t, const linalg::Matrix& M, const linalg::Matrix& B,
                         const linalg::Matrix& N) {
    // tr(M B N^t) = sum_{r,c,c'} M[r][c] B[c][c'] N[r][c']
    FieldElement s = t.zero(Level::Base);
    for (std::size_t r = 0; r < M.rows(); ++r)
        for (std::size_t c = 0; c < M.cols(); ++c) {
            if (t.is_zero(M.at(r, c))) continue;
            for (std::size_t c2 = 0; c2 < N.cols(); ++c2)
                s = t.add(s, t.mul(M.at(r, c), t.mul(B.at(c, c2), N.at(r, c2))));
        }
    return s;
}

}  // namespace

DelsarteCode delsarte_dual(const DelsarteCode& D, const BilinearFormSpec& form) {
    if (form.n != D.n()) fail(Errc::BadDimension, "form size does not match column count");
    const auto& t = D.tower();
    std::size_t mn = D.m() * D.n();
    // Constraint rows are vec(M_i B); the kernel gives the dual basis.
    std::vector<std::vector<FieldElement>> rows;
    for (const auto& M : D.basis()) {
        linalg::Matrix MB = linalg::mul(t, M, form.B);
        std::vector<FieldElement> row;
        row.reserve(mn);
        for (std::size_t i = 0; i < D.m(); ++i)
            for (std::size_t j = 0; j < D.n(); ++j) row.push_back(MB.at(i, j));
        rows.push_back(std::move(row));
    }
    linalg::Matrix A = rows.empty() ? linalg::Matrix::zero(t, Level::Base, 0, mn)
                                    : linalg::Matrix::from_rows(Level::Base, mn, rows);
    auto kern = linalg::kernel(t, A);
    std::vector<linalg::Matrix> basis;
    basis.reserve(kern.size());
    for (const auto& v : kern) {
        linalg::Matrix M = linalg::Matrix::zero(t, Level::Base, D.m(), D.n());
        for (std::size_t i = 0; i < D.m(); ++i)
            for (std::size_t j = 0; j < D.n(); ++j) M.at(i, j) = v[i * D.n() + j];
        basis.push_back(std::move(M));
    }
    return DelsarteCode(t, D.m(), D.n(), std::move(basis));
}

bool delsarte_is_self_dual(const DelsarteCode& D, const BilinearFormSpec& form) {
    if (form.n != D.n()) fail(Errc::BadDimension, "form size does not match column count");
    if (2 * D.dim() != D.m() * D.n()) return false;
    const auto& t = D.tower();
    for (std::size_t i = 0; i < D.dim(); ++i)
        for (std::size_t j = i; j < D.dim(); ++j)
            if (!t.is_zero(psi_pairing(t, D.basis()[i], form.B, D.basis()[j]))) return false;
    return same_delsarte(delsarte_dual(D, form), D);
}

std::size_t delsarte_rank_distance(const DelsarteCode& D, u64 budget) {
    if (D.dim() == 0) fail(Errc::InvalidArgument, "rank distance of the zero code");
    const auto& t = D.tower();
    u64 q = t.q();
    u64 count = sat_pow(q, static_cast<u64>(D.dim()));
    if (count == UINT64_MAX || count - 1 > budget)
        fail(Errc::BudgetExceeded, "enumeration requires " +
                                       (count == UINT64_MAX ? std::string("> 2^64")
                                                            : std::to_string(count - 1)) +
                                       " codewords, budget is " + std::to_string(budget));
    std::size_t dim = D.dim(), mrows = D.m(), ncols = D.n();
    std::size_t best = SIZE_MAX;
    auto P = build_packed(t, static_cast<u32>(ncols));
    if (P && mrows <= kPackedMaxM) {
        // basis matrices as index matrices
        std::vector<std::vector<uint16_t>> bm(dim, std::vector<uint16_t>(mrows * ncols));
        for (std::size_t b = 0; b < dim; ++b)
            for (std::size_t i = 0; i < mrows; ++i)
                for (std::size_t j = 0; j < ncols; ++j) {
                    u64 idx = t.index_of(D.basis()[b].at(i, j));
                    bm[b][i * ncols + j] = static_cast<uint16_t>(idx);
                }
        std::vector<uint16_t> acc(mrows * ncols, 0), scratch(mrows * ncols);
        auto rec = [&](auto&& self, std::size_t b, bool nonzero) -> bool {
            if (b == dim) {
                if (!nonzero) return false;
                std::copy(acc.begin(), acc.end(), scratch.begin());
                u32 w = P->mat_rank(scratch.data(), static_cast<u32>(mrows),
                                    static_cast<u32>(ncols));
                if (w < best) best = w;
                return best <= 1;
            }
            if (self(self, b + 1, nonzero)) return true;
            std::vector<uint16_t> saved = acc;
            for (u64 s = 1; s < q; ++s) {
                uint16_t si = static_cast<uint16_t>(s);
                for (std::size_t i = 0; i < acc.size(); ++i)
                    acc[i] = P->add(saved[i], P->mul(si, bm[b][i]));
                if (self(self, b + 1, true)) return true;
            }
            acc = saved;
            return false;
        };
        rec(rec, 0, false);
        return best;
    }
    // generic path
    std::vector<FieldElement> scalars;
    for (u64 s = 0; s < q; ++s) scalars.push_back(t.element_at(Level::Base, s));
    linalg::Matrix accm = linalg::Matrix::zero(t, Level::Base, mrows, ncols);
    auto rec2 = [&](auto&& self, std::size_t b, linalg::Matrix cur, bool nonzero) -> bool {
        if (b == dim) {
            if (!nonzero) return false;
            std::size_t w = linalg::rank(t, cur);
            if (w < best) best = w;
            return best <= 1;
        }
        if (self(self, b + 1, cur, nonzero)) return true;
        for (u64 s = 1; s < q; ++s) {
            auto next = linalg::add(t, cur, linalg::scale(t, scalars[s], D.basis()[b]));
            if (self(self, b + 1, next, true)) return true;
        }
        return false;
    };
    rec2(rec2, 0, accm, false);
    return best;
}

bool delsarte_is_mrd(const DelsarteCode& D, u64 budget) {
    // d_1 = n - dim/m + 1, compared in integers: m*d_1 = m(n+1) - dim.
    std::size_t d1 = delsarte_rank_distance(D, budget);
    return D.m() * d1 == D.m() * (D.n() + 1) - D.dim();
}

DelsarteCode to_delsarte(const GabidulinCode& C, const LBasis& alpha) {
    const auto& t = C.tower();
    if (!is_lbasis(t, alpha)) fail(Errc::NotABasis, "alpha is not an F-basis of L");
    LBasis pw = power_basis(t);
    std::vector<linalg::Matrix> basis;
    basis.reserve(C.dim() * t.m());
    for (std::size_t v = 0; v < C.dim(); ++v) {
        auto g = C.generator().row(v);
        for (u32 u = 0; u < t.m(); ++u) {
            std::vector<FieldElement> scaled(g.size(), t.zero(Level::Top));
            for (std::size_t j = 0; j < g.size(); ++j) scaled[j] = t.mul(pw.alpha[u], g[j]);
            basis.push_back(expansion_matrix(t, scaled, alpha));
        }
    }
    DelsarteCode D(t, t.m(), C.n(), std::move(basis));
    if (D.dim() != C.dim() * t.m()) fail(Errc::Internal, "expansion dimension mismatch");
    return D;
}

}  // namespace rmc::codes
