#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rmc/error.hpp"

namespace rmc::gf {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

/// The three levels of a tower F_p <= F_q = F_{p^e} <= L = F_{q^m}.
enum class Level { Prime, Base, Top };

const char* level_name(Level lvl);

/// One field element, identified by its level and its coefficient vector:
///   Prime: a single residue mod p,
///   Base:  e residues mod p, constant term first,
///   Top:   m blocks of e residues (one base element per block), constant block first.
/// Elements are plain data; all arithmetic goes through the owning FieldTower.
/// Equality is coefficient-wise.
struct FieldElement {
    Level level = Level::Prime;
    std::vector<u32> coeffs;

    friend bool operator==(const FieldElement&, const FieldElement&) = default;
};

/// Immutable description of a tower F_p <= F_{p^e} <= F_{q^m} with explicit
/// defining polynomials (constant term first, monic). All operations are
/// exact and pure; towers are cheap to copy and safe to share across threads.
///
/// Deterministic choices: when a defining polynomial is not supplied it is
/// the first irreducible monic candidate in counting order (coefficient
/// tuple read as a base-p integer, constant term least significant) among
/// candidates with nonzero constant term. Element enumeration uses the same
/// counting order, starting at 0.
class FieldTower {
public:
    /// Validates p prime and both polynomials irreducible; absent polynomials
    /// are auto-selected. Supplied polynomials may omit the leading 1.
    /// Throws NotPrime, BadDimension, ReduciblePolynomial, InvalidArgument.
    static FieldTower build(u64 p, u32 e, u32 m,
                            std::optional<std::vector<u32>> base_poly = std::nullopt,
                            std::optional<std::vector<std::vector<u32>>> top_poly = std::nullopt);

    u64 p() const;
    u32 e() const;
    u32 m() const;
    /// q = p^e (saturates at UINT64_MAX).
    u64 q() const;
    /// Number of elements at a level (saturates at UINT64_MAX).
    u64 order(Level lvl) const;

    /// Length e+1, residues mod p, leading coefficient 1.
    const std::vector<u32>& base_poly() const;
    /// Length m+1, base elements, leading coefficient 1.
    const std::vector<std::vector<u32>>& top_poly() const;

    FieldElement zero(Level lvl) const;
    FieldElement one(Level lvl) const;
    /// v mod p embedded as the constant coefficient.
    FieldElement from_integer(Level lvl, u64 v) const;

    bool is_zero(const FieldElement& x) const;
    bool is_one(const FieldElement& x) const;

    FieldElement add(const FieldElement& a, const FieldElement& b) const;
    FieldElement sub(const FieldElement& a, const FieldElement& b) const;
    FieldElement neg(const FieldElement& a) const;
    FieldElement mul(const FieldElement& a, const FieldElement& b) const;
    /// Throws DivisionByZero.
    FieldElement div(const FieldElement& a, const FieldElement& b) const;
    /// Extended gcd against the defining polynomial. Throws DivisionByZero.
    FieldElement inv(const FieldElement& a) const;
    FieldElement pow(const FieldElement& a, u64 n) const;

    /// Canonical inclusion of a lower level into a higher one.
    FieldElement embed(const FieldElement& x, Level to) const;
    /// Re-expresses x at a lower level; throws InvalidArgument if x does not lie there.
    FieldElement contract(const FieldElement& x, Level to) const;

    /// x^(q^k) for x at top level, computed as e*k successive p-th powers.
    FieldElement frobenius(const FieldElement& x, u32 k) const;
    /// Tr_{L/F_q}(x) = sum of x^(q^k), k < m. Result re-expressed at base level;
    /// throws Internal if the sum is not Frobenius-fixed.
    FieldElement trace(const FieldElement& x) const;
    /// N_{L/F_q}(x) = product of x^(q^k), k < m. Result at base level.
    FieldElement norm(const FieldElement& x) const;
    /// Tr_{F_q/F_p} of a base element, result at prime level.
    FieldElement absolute_trace(const FieldElement& x) const;

    /// Elements in deterministic enumeration order: element_at(lvl, i) for
    /// i in [0, element_count(lvl)), starting at 0. Index = coefficient tuple
    /// read as a base-(subfield order) integer, constant term least significant.
    u64 element_count(Level lvl) const;
    FieldElement element_at(Level lvl, u64 index) const;
    u64 index_of(const FieldElement& x) const;

    /// First top element i in enumeration order with i^2 = -1.
    /// Throws PreconditionViolated in characteristic two,
    /// NoSquareRootOfMinusOne when q^m = 3 (mod 4).
    FieldElement find_sqrt_minus_one() const;

    /// Characteristic two, m even. Returns (alpha, c) where c is the first
    /// base element with absolute trace 1 and alpha the first top element with
    /// alpha^2 + alpha = c; the identity alpha^q = alpha + 1 is verified.
    /// Throws NoSuchElement in odd characteristic, PreconditionViolated for odd m.
    std::pair<FieldElement, FieldElement> find_artin_schreier() const;

    /// First top element x in enumeration order with N_{L/F_q}(x) = delta.
    /// Throws NotFound for delta = 0.
    FieldElement find_norm_preimage(const FieldElement& delta) const;

    /// True iff x^(q^d) = x, i.e. x lies in F_{q^d}. Throws NotADivisor.
    bool subfield_membership(const FieldElement& x, u32 d) const;

    friend bool operator==(const FieldTower& a, const FieldTower& b);

private:
    struct Impl;
    explicit FieldTower(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
};

/// Renders a polynomial (constant term first) as "x^2 + 2x + 1" for messages.
std::string poly_to_string(const std::vector<u32>& coeffs);

}  // namespace rmc::gf
