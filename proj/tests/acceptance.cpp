// Acceptance suite: every check is exact (the arithmetic has no rounding),
// one pass/fail line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "rmc/constructions.hpp"
#include "rmc/verify.hpp"
#include "test_util.hpp"

using namespace rmctest;
using codes::BilinearFormSpec;
using codes::DelsarteCode;
using codes::GabidulinCode;
using codes::LBasis;
using linalg::Matrix;

namespace {

int failures = 0;
std::vector<std::string> current_errors;

void expect(bool ok, const std::string& what) {
    if (!ok) current_errors.push_back(what);
}

void run_criterion(int id, const std::string& title, const std::function<void()>& fn) {
    current_errors.clear();
    auto start = std::chrono::steady_clock::now();
    try {
        fn();
    } catch (const std::exception& e) {
        current_errors.push_back(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool pass = current_errors.empty();
    if (!pass) ++failures;
    std::printf("[%s] criterion %d: %s (%.2f s)\n", pass ? "PASS" : "FAIL", id, title.c_str(),
                secs);
    for (const auto& e : current_errors) std::printf("        %s\n", e.c_str());
    std::fflush(stdout);
}

Matrix base_mat(const FieldTower& t, std::size_t r, std::size_t c, std::vector<int> vals) {
    std::vector<FieldElement> entries;
    std::int64_t p = static_cast<std::int64_t>(t.p());
    for (int v : vals)
        entries.push_back(t.from_integer(Level::Base, static_cast<u64>(((v % p) + p) % p)));
    return Matrix(Level::Base, r, c, std::move(entries));
}

// --- criterion 1: the F_3(i) worked example -------------------------------

void criterion1() {
    auto t = FieldTower::build(3, 1, 2);
    auto one = t.one(Level::Top);
    auto i = t.find_sqrt_minus_one();
    GabidulinCode C(t, Matrix::from_rows(Level::Top, 2, {{one, i}}));
    auto I2 = BilinearFormSpec::identity(t, 2);

    LBasis alpha{{one, i}};
    auto D1 = codes::to_delsarte(C, alpha);
    DelsarteCode expect1(t, 2, 2,
                         {base_mat(t, 2, 2, {1, 0, 0, 1}), base_mat(t, 2, 2, {0, -1, 1, 0})});
    expect(codes::same_delsarte(D1, expect1), "expansion in (1,i) differs from the stated span");
    expect(!codes::delsarte_is_self_dual(D1, I2), "expansion in (1,i) must not be self-dual");

    LBasis alpha_p{{i, t.sub(one, i)}};
    auto D2 = codes::to_delsarte(C, alpha_p);
    DelsarteCode expect2(t, 2, 2,
                         {base_mat(t, 2, 2, {1, 1, 1, 0}), base_mat(t, 2, 2, {1, -1, 0, -1})});
    expect(codes::same_delsarte(D2, expect2), "expansion in (i,1-i) differs from the stated span");
    expect(codes::delsarte_is_self_dual(D2, I2), "expansion in (i,1-i) must be self-dual");
}

// --- criterion 2: orthonormal witness -------------------------------------

void criterion2() {
    auto t = FieldTower::build(3, 1, 2);
    auto one = t.one(Level::Top);
    auto i = t.find_sqrt_minus_one();
    auto lambda = t.add(one, i);
    auto gram = [&](const std::vector<FieldElement>& vecs, const FieldElement& lam) {
        std::vector<std::vector<FieldElement>> w;
        for (const auto& v : vecs) w.push_back({v});
        return linalg::gram(t, w,
                            [&](const std::vector<FieldElement>& a,
                                const std::vector<FieldElement>& b) {
                                return t.trace(t.mul(lam, t.mul(a[0], b[0])));
                            });
    };
    expect(gram({i, t.sub(one, i)}, lambda) == Matrix::identity(t, Level::Base, 2),
           "Gram of T_{L/F,1+i} on (i,1-i) is not the identity");
    auto onb = construct::orthonormal_basis_twisted_trace(t);
    expect(gram(onb.alpha.alpha, onb.lambda) == Matrix::identity(t, Level::Base, 2),
           "computed orthonormal basis has a non-identity Gram");
}

// --- criterion 3: construction at (q,n) = (3,2) ----------------------------

void criterion3() {
    auto C = construct::self_dual_mrd_code(3, 2);
    const auto& t = C.tower();
    auto W = linalg::mul(t, C.generator(), linalg::transpose(C.generator()));
    expect(linalg::is_zero(t, W), "G G^t != 0");
    expect(codes::is_self_dual(C, BilinearFormSpec::identity(t, 2)), "not self-dual");
    expect(codes::rank_distance(C) == 2, "d_1 != 2");
    expect(codes::is_mrd(C), "not MRD");
}

// --- criterion 4: construction at (q,n) = (3,6), full enumeration ----------

void criterion4() {
    auto C = construct::self_dual_mrd_code(3, 6);
    const auto& t = C.tower();
    expect(C.dim() == 3, "dimension != 3");
    auto W = linalg::mul(t, C.generator(), linalg::transpose(C.generator()));
    expect(linalg::is_zero(t, W), "G G^t != 0");
    expect(codes::is_self_dual(C, BilinearFormSpec::identity(t, 6)), "not self-dual");
    expect(codes::projective_line_count(C) == 532171, "projective count != 532171");
    expect(codes::rank_distance(C) == 4, "minimum weight != 4");
}

// --- criterion 5: nonexistence at desk scale ------------------------------

void criterion5() {
    // exhaustive at q in {5, 13}, m = 2, n = 2
    for (u64 q : {u64{5}, u64{13}}) {
        auto lines = verify::enumerate_self_dual_lines(q, 2, BilinearFormSpec::Tag::Identity);
        expect(!lines.empty(), "q=" + std::to_string(q) + ": no self-dual lines found");
        for (const auto& ln : lines)
            expect(ln.d1 == 1, "q=" + std::to_string(q) + ": self-dual line with d_1 > 1");
    }

    // q in {3, 7}, m = n = 4: constructor refusal plus the level obstruction
    for (u64 q : {u64{3}, u64{7}}) {
        bool refused = false;
        try {
            construct::self_dual_mrd_code(q, 4);
        } catch (const Error& e) {
            refused = e.code() == Errc::PreconditionViolated &&
                      std::string(e.what()).find("0 (mod 4)") != std::string::npos;
        }
        expect(refused, "q=" + std::to_string(q) + ": constructor did not cite n = 0 (mod 4)");

        auto t = FieldTower::build(q, 1, 4);
        // n = 4 = 2^{s+1} r with s = 1: -1 must be a sum of 2 squares in F_q
        expect(construct::level_of_field(t, Level::Base, 1),
               "q=" + std::to_string(q) + ": -1 not a sum of two squares");

        // explicit isometry witness: a basis of F^4 whose dot-product Gram is
        // exactly H_4, built from a two-squares representation of -1
        auto dotf = [&](const std::vector<FieldElement>& a, const std::vector<FieldElement>& b) {
            return linalg::dot(t, a, b);
        };
        FieldElement a = t.zero(Level::Base), b = a;
        bool found = false;
        u64 qq = t.element_count(Level::Base);
        for (u64 x = 0; x < qq && !found; ++x)
            for (u64 y = 0; y < qq && !found; ++y) {
                auto xa = t.element_at(Level::Base, x);
                auto yb = t.element_at(Level::Base, y);
                if (t.add(t.mul(xa, xa), t.mul(yb, yb)) == t.neg(t.one(Level::Base))) {
                    a = xa;
                    b = yb;
                    found = true;
                }
            }
        expect(found, "no two-squares representation of -1");
        auto zero = t.zero(Level::Base);
        auto oneb = t.one(Level::Base);
        std::vector<FieldElement> r1{a, b, oneb, zero};  // isotropic
        // partner: w with <r1, w> = 1, then strip its norm
        std::vector<FieldElement> w{zero, zero, oneb, zero};
        auto half = t.inv(t.from_integer(Level::Base, 2));
        auto s = t.mul(dotf(w, w), half);
        std::vector<FieldElement> r2(4, zero);
        for (int jj = 0; jj < 4; ++jj) r2[jj] = t.sub(w[jj], t.mul(s, r1[jj]));
        // orthogonal complement of span(r1, r2)
        Matrix Ac = Matrix::from_rows(Level::Base, 4, {r1, r2});
        auto comp = linalg::kernel(t, Ac);
        expect(comp.size() == 2, "complement dimension != 2");
        // isotropic vector in the complement
        std::vector<FieldElement> r3;
        for (u64 x = 0; x < qq && r3.empty(); ++x)
            for (u64 y = 0; y < qq && r3.empty(); ++y) {
                if (x == 0 && y == 0) continue;
                auto xa = t.element_at(Level::Base, x);
                auto yb = t.element_at(Level::Base, y);
                std::vector<FieldElement> v(4, zero);
                for (int jj = 0; jj < 4; ++jj)
                    v[jj] = t.add(t.mul(xa, comp[0][jj]), t.mul(yb, comp[1][jj]));
                if (t.is_zero(dotf(v, v))) r3 = v;
            }
        expect(!r3.empty(), "no isotropic vector in the complement");
        // its partner inside the complement
        std::vector<FieldElement> w2 = comp[0];
        if (t.is_zero(dotf(r3, w2))) w2 = comp[1];
        auto scale2 = t.inv(dotf(r3, w2));
        for (auto& x : w2) x = t.mul(scale2, x);
        auto s2 = t.mul(dotf(w2, w2), half);
        std::vector<FieldElement> r4(4, zero);
        for (int jj = 0; jj < 4; ++jj) r4[jj] = t.sub(w2[jj], t.mul(s2, r3[jj]));

        Matrix P = Matrix::from_rows(Level::Base, 4, {r1, r3, r2, r4});
        auto H4 = BilinearFormSpec::hyperbolic(t, 4).B;
        expect(linalg::mul(t, P, linalg::transpose(P)) == H4,
               "q=" + std::to_string(q) + ": witness Gram is not H_4");

        // transport 10^4 random unit-isotropic lines through the isometry and
        // check hyperbolic isotropy exactly
        auto Pinv = linalg::inverse(t, P);
        expect(Pinv.has_value(), "witness basis not invertible");
        Matrix PinvL = Matrix::zero(t, Level::Top, 4, 4);
        for (std::size_t x = 0; x < 4; ++x)
            for (std::size_t y = 0; y < 4; ++y) PinvL.at(x, y) = t.embed(Pinv->at(x, y), Level::Top);
        std::vector<FieldElement> r1L(4), r3L(4);
        for (int jj = 0; jj < 4; ++jj) {
            r1L[jj] = t.embed(r1[jj], Level::Top);
            r3L[jj] = t.embed(r3[jj], Level::Top);
        }
        Matrix H4L = Matrix::zero(t, Level::Top, 4, 4);
        for (std::size_t x = 0; x < 4; ++x)
            for (std::size_t y = 0; y < 4; ++y) H4L.at(x, y) = t.embed(H4.at(x, y), Level::Top);
        Rng rng(0xACC5 + q);
        for (int trial = 0; trial < 10000; ++trial) {
            auto u = random_element(rng, t, Level::Top);
            auto v = random_element(rng, t, Level::Top);
            std::vector<FieldElement> c(4, t.zero(Level::Top));
            for (int jj = 0; jj < 4; ++jj)
                c[jj] = t.add(t.mul(u, r1L[jj]), t.mul(v, r3L[jj]));
            if (t.is_zero(linalg::dot(t, c, c))) {
                auto fc = linalg::vec_mat(t, c, PinvL);
                auto img = linalg::dot(t, linalg::vec_mat(t, fc, H4L), fc);
                if (!t.is_zero(img)) {
                    expect(false, "transported line not hyperbolic-isotropic");
                    return;
                }
            } else {
                expect(false, "sampled line not unit-isotropic");
                return;
            }
        }
    }
}

// --- criterion 6: Lagrangian nonexistence in odd characteristic ------------

void criterion6() {
    for (u64 q : {u64{3}, u64{5}, u64{7}}) {
        for (u32 m : {2u, 4u}) {
            auto lines = verify::enumerate_self_dual_lines(q, m, BilinearFormSpec::Tag::Hyperbolic);
            expect(lines.size() == 2, "q=" + std::to_string(q) + " m=" + std::to_string(m) +
                                          ": expected exactly 2 hyperbolic-isotropic lines");
            for (const auto& ln : lines)
                expect(ln.d1 <= 1, "q=" + std::to_string(q) + " m=" + std::to_string(m) +
                                       ": Lagrangian line with d_1 > d");
        }
    }
}

// --- criterion 7: characteristic two ---------------------------------------

void criterion7() {
    for (u32 m : {2u, 4u}) {
        auto rep = verify::check_char2_selfdual(2, m, 2);
        expect(rep.pass(), "char-2 self-dual line scan failed at m=" + std::to_string(m));
        auto lines = verify::enumerate_self_dual_lines(2, m, BilinearFormSpec::Tag::Identity);
        for (const auto& ln : lines)
            expect(ln.d1 == 1, "self-dual line without a weight-1 vector at m=" + std::to_string(m));
    }
    auto C = construct::lagrangian_mrd_code(2, 2);
    const auto& t = C.tower();
    auto one = t.one(Level::Top);
    auto alpha = t.element_at(Level::Top, 2);
    expect(codes::same_code(
               C, GabidulinCode(t, Matrix::from_rows(Level::Top, 2, {{one, alpha}}))),
           "construction at (2,2) is not <(1,alpha)>");
    expect(codes::is_self_dual(C, BilinearFormSpec::hyperbolic(t, 2)), "not Lagrangian");
    expect(codes::rank_distance(C) == 2, "d_1 != 2");
    bool refused = false;
    try {
        construct::lagrangian_mrd_code(2, 4);
    } catch (const Error& e) {
        refused = e.code() == Errc::PreconditionViolated;
    }
    expect(refused, "(2,4) not refused");
}

// --- criterion 8: the M_{4x2}(F_5) fixture ---------------------------------

void criterion8() {
    auto D = verify::mor_fixture();
    const auto& t = D.tower();
    expect(D.dim() == 4, "fixture dimension != 4");
    expect(codes::delsarte_is_self_dual(D, BilinearFormSpec::identity(t, 2)),
           "fixture not self-dual");
    expect(codes::delsarte_rank_distance(D) == 2, "fixture d_1 != 2");
    auto basis = D.basis();
    basis[0].at(0, 0) = t.neg(basis[0].at(0, 0));
    DelsarteCode bad(t, 4, 2, basis);
    expect(!codes::delsarte_is_self_dual(bad, BilinearFormSpec::identity(t, 2)),
           "perturbed fixture still self-dual");
    auto rep = verify::check_mor_fixture();
    expect(rep.pass(), "fixture report failed");
}

// --- criterion 9: property suites ------------------------------------------

void criterion9() {
    std::vector<FieldTower> towers{FieldTower::build(3, 1, 2), FieldTower::build(2, 1, 2)};

    // expansion uniqueness and basis independence of the weight
    for (const auto& t : towers) {
        Rng rng(0x9A + t.p());
        for (int trial = 0; trial < 250; ++trial) {
            LBasis alpha = random_lbasis(rng, t);
            std::size_t n = 1 + rng.next(t.m());
            std::vector<FieldElement> c;
            for (std::size_t j = 0; j < n; ++j) c.push_back(random_element(rng, t, Level::Top));
            auto M = codes::expansion_matrix(t, c, alpha);
            for (std::size_t j = 0; j < n; ++j) {
                FieldElement acc = t.zero(Level::Top);
                for (u32 r = 0; r < t.m(); ++r)
                    acc = t.add(acc, t.mul(t.embed(M.at(r, j), Level::Top), alpha.alpha[r]));
                if (acc != c[j]) {
                    expect(false, "expansion reconstruction failed");
                    return;
                }
            }
            auto beta = random_lbasis(rng, t);
            if (linalg::rank(t, codes::expansion_matrix(t, c, beta)) != codes::rank_weight(t, c)) {
                expect(false, "weight depends on the basis");
                return;
            }
        }
    }

    // GL-invariance of the weight
    for (const auto& t : towers) {
        Rng rng(0x91 + t.p());
        for (int trial = 0; trial < 500; ++trial) {
            std::size_t n = 1 + rng.next(t.m());
            std::vector<FieldElement> c;
            for (std::size_t j = 0; j < n; ++j) c.push_back(random_element(rng, t, Level::Top));
            auto P = random_invertible(rng, t, Level::Base, n);
            std::vector<FieldElement> cP(n, t.zero(Level::Top));
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    cP[j] = t.add(cP[j], t.mul(c[k], t.embed(P.at(j, k), Level::Top)));
            if (codes::rank_weight(t, cP) != codes::rank_weight(t, c)) {
                expect(false, "GL-invariance failed");
                return;
            }
        }
    }

    // Singleton bound and the dual-of-dual identity
    for (const auto& t : towers) {
        Rng rng(0x51 + t.p());
        for (int trial = 0; trial < 250; ++trial) {
            std::size_t n = 1 + rng.next(t.m());
            std::size_t k = 1 + rng.next(n);
            GabidulinCode C(t, random_full_rank(rng, t, k, n));
            if (codes::rank_distance(C) > n - k + 1) {
                expect(false, "Singleton violated");
                return;
            }
            auto form = random_form(rng, t, n);
            if (!codes::same_code(codes::dual_code(codes::dual_code(C, form), form), C)) {
                expect(false, "dual of dual differs");
                return;
            }
        }
    }

    // transfer law over F_9/F_3 and F_4/F_2
    for (const auto& t : towers) {
        auto rep = verify::check_transfer(t, 250);
        expect(rep.pass(), "transfer law failed over q=" + std::to_string(t.q()));
    }
}

}  // namespace

int main() {
    run_criterion(1, "F_3(i) expansion in two bases", criterion1);
    run_criterion(2, "orthonormal witness for T_{L/F,1+i}", criterion2);
    run_criterion(3, "self-dual MRD construction at (3,2)", criterion3);
    run_criterion(4, "self-dual MRD construction at (3,6), 532171 codewords", criterion4);
    run_criterion(5, "nonexistence: q in {5,13} exhaustive, q in {3,7} n=4 obstruction",
                  criterion5);
    run_criterion(6, "no Lagrangian MRD lines in odd characteristic", criterion6);
    run_criterion(7, "characteristic two: scans, construction, refusal", criterion7);
    run_criterion(8, "self-dual MRD fixture in M_{4x2}(F_5)", criterion8);
    run_criterion(9, "randomized property suites", criterion9);
    std::printf("ACCEPTANCE: %d/9 passed\n", 9 - failures);
    return failures == 0 ? 0 : 1;
}
