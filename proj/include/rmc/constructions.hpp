#pragma once

#include <utility>
#include <vector>

#include "rmc/rankcodes.hpp"

namespace rmc::construct {

using codes::BilinearFormSpec;
using codes::GabidulinCode;
using codes::LBasis;
using gf::FieldElement;
using gf::FieldTower;
using gf::Level;
using gf::u32;
using gf::u64;

/// Splits a prime power q = p^e. Throws InvalidArgument otherwise.
std::pair<u64, u32> factor_prime_power(u64 q);

/// Code generated by c0, sigma(c0), ..., sigma^(k-1)(c0) applied
/// coordinate-wise, where sigma(x) = x^q. Requires the coordinates of c0 to
/// be F-linearly independent (rank_weight(c0) = n) and 1 <= k <= n.
/// Throws CoordinatesDependent, BadDimension.
GabidulinCode gabidulin_code(const FieldTower& t, const std::vector<FieldElement>& c0,
                             std::size_t k);

/// F_q-basis of the subfield F_{q^d} inside L, as top-level elements
/// (kernel of frobenius(., d) - id). Throws NotADivisor.
std::vector<FieldElement> subfield_basis(const FieldTower& t, u32 d);

/// First a in F_{q^d} (scanning L in enumeration order) whose conjugate orbit
/// (a, tau(a), ..., tau^(d-1)(a)) is orthonormal for the trace form of
/// F_{q^d}/F_q, tau(x) = x^q. Preconditions: d | m; d odd in odd
/// characteristic, d odd or d = 2 (mod 4) in characteristic two.
/// Throws PreconditionViolated, NotFound.
std::vector<FieldElement> self_dual_normal_basis(const FieldTower& t, u32 d);

/// Dual basis of alpha for the pairing (x, y) -> Tr_{L/F}(lambda x y):
/// alpha' = alpha * Gram^{-1}, verified to satisfy Tr(lambda a_i a'_j) = d_ij.
LBasis dual_basis(const FieldTower& t, const LBasis& alpha, const FieldElement& lambda);

struct TwistedTraceBasis {
    FieldElement lambda;  // top level
    LBasis alpha;
};

/// A lambda and basis alpha with Gram of (x, y) -> Tr_{L/F}(lambda x y) equal
/// to the identity. Odd characteristic: lambda is the first norm preimage of
/// det(trace Gram), followed by symmetric diagonalization and square scaling
/// with nonsquare pairs merged via d_i x^2 + d_j y^2 = 1. Characteristic two:
/// lambda = 1 and greedy orthonormalization with the <1> perp H repair.
/// Throws AlternatingObstruction only for genuinely alternating forms.
TwistedTraceBasis orthonormal_basis_twisted_trace(const FieldTower& t);

/// Self-dual MRD code over L = F_{q^n} of length n and dimension n/2,
/// generated from c0 = (v, i*v) with v a self-dual normal basis of F_{q^(n/2)}
/// and i^2 = -1. Requires q = 3 (mod 4) and n = 2 (mod 4); other parameters
/// are refused with PreconditionViolated naming the nonexistence reason.
GabidulinCode self_dual_mrd_code(u64 q, u32 n, u64 budget = codes::kDefaultBudget);

/// Lagrangian (hyperbolic self-dual) MRD code over L = F_{q^n}, q even,
/// n = 2 (mod 4), from c0 = (v, alpha*v) with alpha^q = alpha + 1.
/// The Lagrangian property is asserted exactly; the MRD property is verified
/// by enumeration when the projective count fits the budget.
GabidulinCode lagrangian_mrd_code(u64 q, u32 n, u64 budget = codes::kDefaultBudget);

/// True iff -1 is a sum of 2^s squares at the given level, decided through
/// the level of the field (1 if -1 is a square, else 2).
/// Throws EvenCharacteristic.
bool level_of_field(const FieldTower& t, Level lvl, u32 s);

}  // namespace rmc::construct
