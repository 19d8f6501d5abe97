#pragma once

#include <string>
#include <vector>

#include "rmc/constructions.hpp"

namespace rmc::verify {

using codes::BilinearFormSpec;
using codes::DelsarteCode;
using codes::GabidulinCode;
using gf::FieldElement;
using gf::FieldTower;
using gf::u32;
using gf::u64;

/// Outcome of one theorem-level check. Pass iff no counterexamples.
/// Every field except wall_time_ms is deterministic for fixed options.
struct TheoremReport {
    std::string theorem;
    std::string grid;
    u64 instances_checked = 0;
    std::vector<std::string> counterexamples;
    double wall_time_ms = 0.0;

    bool pass() const { return counterexamples.empty(); }
};

struct SelfDualLine {
    std::vector<FieldElement> generator;  // length 2, top level
    std::size_t d1;
};

/// All 1-dimensional self-dual codes in L^2 for L = F_{q^m}: scans the
/// q^m + 1 projective lines and keeps the isotropic ones, with the rank
/// distance of each. Throws BudgetExceeded when q^m exceeds the budget.
std::vector<SelfDualLine> enumerate_self_dual_lines(u64 q, u32 m, BilinearFormSpec::Tag tag,
                                                    u64 budget = codes::kDefaultBudget);

/// Characteristic two: every line C with C inside its own dual has the
/// all-ones vector in the dual and minimum weight 1 (n = 2 exhaustively;
/// n = 4 spot-checked on random isotropic vectors).
TheoremReport check_char2_selfdual(u64 q, u32 m, u32 n, u64 budget = codes::kDefaultBudget);

/// Transfer law: for seeded-random triples (C, B, lambda) and random bases,
/// M_{alpha'}(C-dual) equals M_alpha(C)-dual, and with the orthonormal basis
/// the two self-duality notions agree.
TheoremReport check_transfer(const FieldTower& t, u32 trials);

/// The known self-dual MRD code in M_{4x2}(F_5): dimension 4, self-dual,
/// d_1 = 2; a perturbed copy must fail.
TheoremReport check_mor_fixture();

/// The fixture itself, for tests.
DelsarteCode mor_fixture();

struct SuiteOptions {
    u64 q_max = 7;
    u32 n_max = 6;
    u64 budget = codes::kDefaultBudget;
    u32 trials = 600;
};

/// Named suites: singleton, transfer, finite-thm, lagrangian-thm, char2,
/// constructions. Throws UnknownSuite.
TheoremReport run_suite(const std::string& name, const SuiteOptions& opts = {});

const std::vector<std::string>& suite_names();

}  // namespace rmc::verify
