#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"

using namespace rmctest;
using linalg::Matrix;

namespace {

FieldTower f9() { return FieldTower::build(3, 1, 2); }

Matrix mat_top(const FieldTower& t, std::size_t r, std::size_t c, std::vector<u64> idx) {
    std::vector<FieldElement> entries;
    for (u64 v : idx) entries.push_back(t.element_at(Level::Top, v));
    return Matrix(Level::Top, r, c, std::move(entries));
}

}  // namespace

TEST_CASE("rref and rank on the named examples") {
    auto t = f9();
    CHECK(linalg::rank(t, Matrix::identity(t, Level::Top, 2)) == 2);
    // [[0,-1],[1,0]] over F_3 embedded in L
    auto A = mat_top(t, 2, 2, {0, 2, 1, 0});
    CHECK(linalg::rank(t, A) == 2);
    CHECK(linalg::rank(t, Matrix::zero(t, Level::Top, 2, 2)) == 0);

    auto rr = linalg::rref(t, A);
    CHECK(rr.R == Matrix::identity(t, Level::Top, 2));
    CHECK(rr.pivots == std::vector<std::size_t>{0, 1});
}

TEST_CASE("rref is idempotent and canonical") {
    Rng rng(21);
    auto t = f9();
    for (int trial = 0; trial < 100; ++trial) {
        auto A = random_matrix(rng, t, Level::Top, 1 + rng.next(3), 1 + rng.next(4));
        auto r1 = linalg::rref(t, A).R;
        CHECK(linalg::rref(t, r1).R == r1);
        // row-scaling a random row leaves the RREF unchanged
        auto B = A;
        std::size_t row = rng.next(A.rows());
        auto s = random_nonzero(rng, t, Level::Top);
        for (std::size_t j = 0; j < A.cols(); ++j) B.at(row, j) = t.mul(s, B.at(row, j));
        CHECK(linalg::rref(t, B).R == r1);
    }
}

TEST_CASE("kernel") {
    auto t = f9();
    // [[1, 2]]: kernel spanned by (1, 1)
    auto A = mat_top(t, 1, 2, {1, 2});
    auto kern = linalg::kernel(t, A);
    REQUIRE(kern.size() == 1);
    CHECK(kern[0] == std::vector<FieldElement>{t.one(Level::Top), t.one(Level::Top)});

    CHECK(linalg::kernel(t, Matrix::identity(t, Level::Top, 3)).empty());
    CHECK(linalg::kernel(t, Matrix::zero(t, Level::Top, 2, 2)).size() == 2);
    // zero-row matrices have full kernel
    CHECK(linalg::kernel(t, Matrix::zero(t, Level::Top, 0, 3)).size() == 3);

    Rng rng(22);
    for (int trial = 0; trial < 100; ++trial) {
        auto M = random_matrix(rng, t, Level::Top, 1 + rng.next(3), 1 + rng.next(4));
        auto basis = linalg::kernel(t, M);
        CHECK(basis.size() == M.cols() - linalg::rank(t, M));
        for (const auto& v : basis)
            for (std::size_t i = 0; i < M.rows(); ++i)
                CHECK(t.is_zero(linalg::dot(t, M.row(i), v)));
    }
}

TEST_CASE("determinants") {
    auto t = f9();
    CHECK(linalg::det(t, Matrix::identity(t, Level::Base, 3)) == t.one(Level::Base));
    auto singular = mat_top(t, 2, 2, {1, 1, 1, 1});
    CHECK(t.is_zero(linalg::det(t, singular)));
    CHECK_THROWS_AS(linalg::det(t, Matrix::zero(t, Level::Top, 2, 3)), Error);

    // Gram of the trace form of F_9/F_3 in the basis (1, i) has determinant 2,
    // computed through the trace oracle
    auto one = t.one(Level::Top);
    auto i = t.element_at(Level::Top, 3);
    auto G = linalg::gram(t, {{one}, {i}},
                          [&](const std::vector<FieldElement>& a,
                              const std::vector<FieldElement>& b) {
                              return t.trace(t.mul(a[0], b[0]));
                          });
    CHECK(G.at(0, 0) == t.from_integer(Level::Base, 2));
    CHECK(t.is_zero(G.at(0, 1)));
    CHECK(G.at(1, 1) == t.one(Level::Base));
    CHECK(linalg::det(t, G) == t.from_integer(Level::Base, 2));

    Rng rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t n = 1 + rng.next(3);
        auto A = random_matrix(rng, t, Level::Top, n, n);
        auto B = random_matrix(rng, t, Level::Top, n, n);
        CHECK(linalg::det(t, linalg::mul(t, A, B)) ==
              t.mul(linalg::det(t, A), linalg::det(t, B)));
    }
}

TEST_CASE("gram of the twisted trace pairing reproduces the worked bases") {
    auto t = f9();
    auto one = t.one(Level::Top);
    auto i = t.element_at(Level::Top, 3);
    auto lambda = t.add(one, i);
    auto pair_l = [&](const std::vector<FieldElement>& a, const std::vector<FieldElement>& b) {
        return t.trace(t.mul(lambda, t.mul(a[0], b[0])));
    };
    auto G = linalg::gram(t, {{i}, {t.sub(one, i)}}, pair_l);
    CHECK(G == Matrix::identity(t, Level::Base, 2));

    // an isotropic vector under the hyperbolic pairing on L^2
    auto hyp = [&](const std::vector<FieldElement>& a, const std::vector<FieldElement>& b) {
        return t.add(t.mul(a[0], b[1]), t.mul(a[1], b[0]));
    };
    auto H = linalg::gram(t, {{one, t.zero(Level::Top)}}, hyp);
    CHECK(H.rows() == 1);
    CHECK(t.is_zero(H.at(0, 0)));
}

TEST_CASE("rank equals rank of the transpose") {
    Rng rng(24);
    auto t = FieldTower::build(2, 2, 2);
    for (int trial = 0; trial < 150; ++trial) {
        auto A = random_matrix(rng, t, Level::Base, 1 + rng.next(4), 1 + rng.next(4));
        CHECK(linalg::rank(t, A) == linalg::rank(t, linalg::transpose(A)));
    }
}

TEST_CASE("solve") {
    Rng rng(26);
    auto t = f9();
    for (int trial = 0; trial < 80; ++trial) {
        std::size_t rows = 1 + rng.next(3), cols = 1 + rng.next(3);
        auto A = random_matrix(rng, t, Level::Top, rows, cols);
        // consistent system: b = A x0
        std::vector<FieldElement> x0;
        for (std::size_t j = 0; j < cols; ++j) x0.push_back(random_element(rng, t, Level::Top));
        std::vector<FieldElement> b(rows, t.zero(Level::Top));
        for (std::size_t i = 0; i < rows; ++i) b[i] = linalg::dot(t, A.row(i), x0);
        auto x = linalg::solve(t, A, b);
        REQUIRE(x.has_value());
        for (std::size_t i = 0; i < rows; ++i) CHECK(linalg::dot(t, A.row(i), *x) == b[i]);
    }
    // inconsistent: 0 x = 1
    auto Z = Matrix::zero(t, Level::Top, 1, 1);
    CHECK_FALSE(linalg::solve(t, Z, {t.one(Level::Top)}).has_value());
}

TEST_CASE("inverse") {
    Rng rng(25);
    auto t = f9();
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t n = 1 + rng.next(4);
        auto A = random_invertible(rng, t, Level::Base, n);
        auto Ai = linalg::inverse(t, A);
        REQUIRE(Ai.has_value());
        CHECK(linalg::mul(t, A, *Ai) == Matrix::identity(t, Level::Base, n));
    }
    auto singular = mat_top(t, 2, 2, {1, 1, 1, 1});
    CHECK_FALSE(linalg::inverse(t, singular).has_value());
}
