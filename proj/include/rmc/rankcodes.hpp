#pragma once

#include <cstdint>
#include <vector>

#include "rmc/gf.hpp"
#include "rmc/linalg.hpp"

namespace rmc::codes {

using gf::FieldElement;
using gf::FieldTower;
using gf::Level;
using gf::u32;
using gf::u64;

/// Enumeration cap shared by every exact minimum-weight computation.
inline constexpr u64 kDefaultBudget = 2'000'000;

/// An F_q-basis of L, given as m top-level elements.
struct LBasis {
    std::vector<FieldElement> alpha;
};

/// The power basis (1, y, ..., y^(m-1)) of L over F_q.
LBasis power_basis(const FieldTower& t);
bool is_lbasis(const FieldTower& t, const LBasis& b);

/// An L-linear code C in L^n given by a full-row-rank generator matrix.
/// Requires n <= m; the zero code (no rows) is allowed.
class GabidulinCode {
public:
    GabidulinCode(FieldTower tower, linalg::Matrix generator);

    const FieldTower& tower() const { return tower_; }
    std::size_t n() const { return generator_.cols(); }
    std::size_t dim() const { return generator_.rows(); }
    const linalg::Matrix& generator() const { return generator_; }

private:
    FieldTower tower_;
    linalg::Matrix generator_;
};

/// An F_q-linear code in M_{rows x cols}(F_q) given by an explicit basis of
/// matrices at base level. rows >= cols; the basis may be empty.
class DelsarteCode {
public:
    DelsarteCode(FieldTower tower, std::size_t rows, std::size_t cols,
                 std::vector<linalg::Matrix> basis);

    const FieldTower& tower() const { return tower_; }
    std::size_t m() const { return rows_; }
    std::size_t n() const { return cols_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<linalg::Matrix>& basis() const { return basis_; }

private:
    FieldTower tower_;
    std::size_t rows_, cols_;
    std::vector<linalg::Matrix> basis_;
};

/// Invertible symmetric B in M_n(F_q) naming the pairings
///   phi_B(c, c') = c B c'^t  on L^n     and
///   psi_B(M, N)  = tr(M B N^t)  on M_{m x n}(F_q).
struct BilinearFormSpec {
    enum class Tag { Identity, Hyperbolic, Custom };

    Tag tag;
    std::size_t n;
    linalg::Matrix B;  // base level, n x n

    static BilinearFormSpec identity(const FieldTower& t, std::size_t n);
    /// H_n = [[0, I_d], [I_d, 0]]; requires n even.
    static BilinearFormSpec hyperbolic(const FieldTower& t, std::size_t n);
    static BilinearFormSpec custom(const FieldTower& t, linalg::Matrix B);
};

/// M_alpha(c): the unique m x n matrix over F_q with c = alpha * M.
linalg::Matrix expansion_matrix(const FieldTower& t, const std::vector<FieldElement>& c,
                                const LBasis& alpha);

/// dim_F Span(c_1, ..., c_n) = rank of any expansion of c.
std::size_t rank_weight(const FieldTower& t, const std::vector<FieldElement>& c);

/// Number of projective representatives (q^{mk} - 1)/(q^m - 1), saturating.
u64 projective_line_count(const GabidulinCode& C);

/// Exact minimum rank weight over the nonzero codewords, enumerating one
/// representative per L-line. Throws BudgetExceeded with the required count.
std::size_t rank_distance(const GabidulinCode& C, u64 budget = kDefaultBudget);

/// d_1(C) == n - dim_L(C) + 1.
bool is_mrd(const GabidulinCode& C, u64 budget = kDefaultBudget);

/// {x in L^n : G B x^t = 0}, returned with a canonical (RREF) generator.
GabidulinCode dual_code(const GabidulinCode& C, const BilinearFormSpec& form);

/// n = 2 dim, G B G^t = 0, and RREF(dual generator) = RREF(G).
bool is_self_dual(const GabidulinCode& C, const BilinearFormSpec& form);

/// Orthogonal complement under psi_B, computed by flattening to F^{mn}.
DelsarteCode delsarte_dual(const DelsarteCode& D, const BilinearFormSpec& form);

/// Exact minimum rank over all q^dim - 1 nonzero F_q-combinations.
std::size_t delsarte_rank_distance(const DelsarteCode& D, u64 budget = kDefaultBudget);

bool delsarte_is_self_dual(const DelsarteCode& D, const BilinearFormSpec& form);
bool delsarte_is_mrd(const DelsarteCode& D, u64 budget = kDefaultBudget);

/// M_alpha(C) with basis {M_alpha(y^u * g_v)} over the power basis scalars.
DelsarteCode to_delsarte(const GabidulinCode& C, const LBasis& alpha);

/// Subspace equality via canonical RREF of the generators.
bool same_code(const GabidulinCode& A, const GabidulinCode& B);
bool same_delsarte(const DelsarteCode& A, const DelsarteCode& B);

/// Flattens the basis matrices into a dim x (m*n) matrix, row-major.
linalg::Matrix flatten_basis(const DelsarteCode& D);

}  // namespace rmc::codes
