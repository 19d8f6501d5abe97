#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rmc/verify.hpp"
#include "test_util.hpp"

using namespace rmctest;
using codes::BilinearFormSpec;
using codes::DelsarteCode;
using codes::LBasis;
using linalg::Matrix;

TEST_CASE("self-dual line enumeration, identity form") {
    // q = 5, m = 2: exactly <(1,2)> and <(1,3)>, both of weight 1
    auto lines5 = verify::enumerate_self_dual_lines(5, 2, BilinearFormSpec::Tag::Identity);
    REQUIRE(lines5.size() == 2);
    auto t5 = FieldTower::build(5, 1, 2);
    CHECK(lines5[0].generator ==
          std::vector<FieldElement>{t5.one(Level::Top), t5.from_integer(Level::Top, 2)});
    CHECK(lines5[1].generator ==
          std::vector<FieldElement>{t5.one(Level::Top), t5.from_integer(Level::Top, 3)});
    CHECK(lines5[0].d1 == 1);
    CHECK(lines5[1].d1 == 1);

    // q = 3, m = 2: exactly <(1,i)> and <(1,-i)>, both MRD
    auto lines3 = verify::enumerate_self_dual_lines(3, 2, BilinearFormSpec::Tag::Identity);
    REQUIRE(lines3.size() == 2);
    auto t3 = FieldTower::build(3, 1, 2);
    auto i = t3.element_at(Level::Top, 3);
    CHECK(lines3[0].generator == std::vector<FieldElement>{t3.one(Level::Top), i});
    CHECK(lines3[1].generator == std::vector<FieldElement>{t3.one(Level::Top), t3.neg(i)});
    CHECK(lines3[0].d1 == 2);
    CHECK(lines3[1].d1 == 2);
}

TEST_CASE("self-dual line enumeration, hyperbolic form") {
    auto lines = verify::enumerate_self_dual_lines(3, 2, BilinearFormSpec::Tag::Hyperbolic);
    REQUIRE(lines.size() == 2);
    auto t = FieldTower::build(3, 1, 2);
    CHECK(lines[0].generator ==
          std::vector<FieldElement>{t.one(Level::Top), t.zero(Level::Top)});
    CHECK(lines[1].generator ==
          std::vector<FieldElement>{t.zero(Level::Top), t.one(Level::Top)});
    CHECK(lines[0].d1 == 1);
    CHECK(lines[1].d1 == 1);
}

TEST_CASE("budget guard on line enumeration") {
    CHECK_THROWS_AS(verify::enumerate_self_dual_lines(3, 2, BilinearFormSpec::Tag::Identity, 4),
                    Error);
}

TEST_CASE("characteristic-two self-duality checks") {
    auto rep22 = verify::check_char2_selfdual(2, 2, 2);
    CHECK(rep22.pass());
    CHECK(rep22.instances_checked == 5);  // the 5 lines of F_4^2
    auto rep42 = verify::check_char2_selfdual(2, 4, 2);
    CHECK(rep42.pass());
    CHECK(rep42.instances_checked == 17);
    auto rep44 = verify::check_char2_selfdual(2, 4, 4);
    CHECK(rep44.pass());
    CHECK_THROWS_AS(verify::check_char2_selfdual(3, 2, 2), Error);
}

TEST_CASE("transfer reports") {
    auto rep = verify::check_transfer(FieldTower::build(3, 1, 2), 60);
    CHECK(rep.pass());
    auto rep2 = verify::check_transfer(FieldTower::build(2, 1, 2), 60);
    CHECK(rep2.pass());
}

TEST_CASE("transfer worked instance with the non-orthonormal basis") {
    // C = <(1,i)>, B = I, alpha = (1, i): the alpha'-expansion of C equals
    // the psi-dual of M_alpha(C), even though M_alpha(C) is not self-dual.
    auto t = FieldTower::build(3, 1, 2);
    auto one = t.one(Level::Top);
    auto i = t.element_at(Level::Top, 3);
    LBasis alpha{{one, i}};
    auto alpha_dual = construct::dual_basis(t, alpha, one);
    codes::GabidulinCode C(t, Matrix::from_rows(Level::Top, 2, {{one, i}}));
    auto I2 = BilinearFormSpec::identity(t, 2);

    auto lhs = codes::to_delsarte(codes::dual_code(C, I2), alpha_dual);
    auto rhs = codes::delsarte_dual(codes::to_delsarte(C, alpha), I2);
    CHECK(codes::same_delsarte(lhs, rhs));
    CHECK_FALSE(codes::delsarte_is_self_dual(codes::to_delsarte(C, alpha), I2));

    // the dual pair: span{[[2,0],[0,1]], [[0,1],[1,0]]}
    auto fe = [&](u64 v) { return t.from_integer(Level::Base, v); };
    std::vector<Matrix> expect_basis{
        Matrix(Level::Base, 2, 2, {fe(2), fe(0), fe(0), fe(1)}),
        Matrix(Level::Base, 2, 2, {fe(0), fe(1), fe(1), fe(0)})};
    DelsarteCode expect(t, 2, 2, expect_basis);
    CHECK(codes::same_delsarte(lhs, expect));

    // trivial code: the expansion of the dual is the full matrix space
    codes::GabidulinCode Z(t, Matrix::zero(t, Level::Top, 0, 2));
    auto full = codes::to_delsarte(codes::dual_code(Z, I2), alpha_dual);
    CHECK(full.dim() == 4);
}

TEST_CASE("mor fixture") {
    auto rep = verify::check_mor_fixture();
    CHECK(rep.pass());
    auto D = verify::mor_fixture();
    CHECK(D.dim() == 4);
    CHECK(D.m() == 4);
    CHECK(D.n() == 2);
    CHECK(codes::delsarte_rank_distance(D) == 2);
    CHECK(codes::delsarte_is_mrd(D));
    const auto& t = D.tower();
    CHECK(codes::delsarte_is_self_dual(D, BilinearFormSpec::identity(t, 2)));

    // negative control: flipping any single nonzero entry's sign breaks
    // self-duality
    Rng rng(51);
    for (int trial = 0; trial < 5; ++trial) {
        auto basis = D.basis();
        std::size_t which = rng.next(4);
        std::size_t r = rng.next(4), c = rng.next(2);
        if (t.is_zero(basis[which].at(r, c))) continue;
        basis[which].at(r, c) = t.neg(basis[which].at(r, c));
        DelsarteCode bad(t, 4, 2, basis);
        CHECK_FALSE(codes::delsarte_is_self_dual(bad, BilinearFormSpec::identity(t, 2)));
    }
}

TEST_CASE("suites all pass and are deterministic") {
    for (const auto& name : verify::suite_names()) {
        auto rep1 = verify::run_suite(name, {});
        CHECK_MESSAGE(rep1.pass(), name, ": ",
                      rep1.counterexamples.empty() ? "" : rep1.counterexamples.front());
        auto rep2 = verify::run_suite(name, {});
        CHECK(rep1.instances_checked == rep2.instances_checked);
        CHECK(rep1.counterexamples == rep2.counterexamples);
        CHECK(rep1.theorem == rep2.theorem);
    }
    CHECK_THROWS_AS(verify::run_suite("nosuch", {}), Error);
    try {
        verify::run_suite("nosuch", {});
    } catch (const Error& e) {
        CHECK(e.code() == Errc::UnknownSuite);
    }
}

TEST_CASE("finite-thm grid respects q-max") {
    verify::SuiteOptions opts;
    opts.q_max = 3;
    auto rep = verify::run_suite("finite-thm", opts);
    CHECK(rep.pass());
    // only q = 2 and q = 3 scanned: (4 + 2) + (9 + 2)
    CHECK(rep.instances_checked == 17);
}
