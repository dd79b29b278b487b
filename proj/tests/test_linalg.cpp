#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tenscross/matrix.hpp"

using namespace tenscross;

namespace {

Matrix random_matrix(std::mt19937_64& rng, int r, int c, int span = 3) {
    std::uniform_int_distribution<int> d(-span, span);
    Matrix m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m(i, j) = Rational(d(rng), 1 + (d(rng) + span) % 2);
    return m;
}

}  // namespace

TEST_CASE("rational arithmetic and parsing") {
    Rational a(6, -4);
    CHECK(a.num() == -3);
    CHECK(a.den() == 2);
    CHECK(a.str() == "-3/2");
    CHECK(Rational(5).str() == "5/1");
    CHECK(Rational::parse("-3/2") == a);
    CHECK(Rational::parse("7") == Rational(7));
    CHECK_THROWS_AS(Rational::parse("x/2"), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK((a * a.inverse()).is_one());
    CHECK_THROWS_AS(Rational(INT64_MAX) * Rational(4), OverflowError);
}

TEST_CASE("identity has full rank and trivial kernel") {
    for (int n = 1; n <= 6; ++n) {
        CHECK(rank(Matrix::identity(n)) == n);
        CHECK(kernel_basis(Matrix::identity(n)).empty());
    }
}

TEST_CASE("rank-nullity and kernel vectors on random matrices") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 100; ++t) {
        int r = 1 + t % 6, c = 1 + (t / 6) % 7;
        Matrix m = random_matrix(rng, r, c);
        if (t % 3 == 0 && r > 1) {
            for (int j = 0; j < c; ++j) m(r - 1, j) = m(0, j) + m(r > 2 ? 1 : 0, j);
        }
        auto ker = kernel_basis(m);
        CHECK(rank(m) + static_cast<int>(ker.size()) == c);
        for (const auto& v : ker) CHECK(vec_is_zero(m * v));
        CHECK(rank(m) == rank(m.transpose()));
    }
}

TEST_CASE("inverse and determinant agree") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 100; ++t) {
        int n = 1 + t % 5;
        Matrix m = random_matrix(rng, n, n);
        if (is_invertible(m)) {
            CHECK(!determinant(m).is_zero());
            CHECK(m * invert(m) == Matrix::identity(n));
            CHECK(invert(m) * m == Matrix::identity(n));
        } else {
            CHECK(determinant(m).is_zero());
            CHECK_THROWS_AS(invert(m), NotInvertible);
        }
    }
}

TEST_CASE("kronecker is associative, bilinear and multiplicative") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 100; ++t) {
        Matrix a = random_matrix(rng, 1 + t % 3, 1 + (t + 1) % 3);
        Matrix b = random_matrix(rng, 1 + (t + 2) % 3, 2);
        Matrix b2 = random_matrix(rng, b.rows(), b.cols());
        Matrix c = random_matrix(rng, 2, 1 + t % 2);
        CHECK(kronecker(kronecker(a, b), c) == kronecker(a, kronecker(b, c)));
        CHECK(kronecker(a, b + b2) == kronecker(a, b) + kronecker(a, b2));
        Rational s(t - 50, 3);
        CHECK(kronecker(s * a, b) == s * kronecker(a, b));
        Matrix a2 = random_matrix(rng, a.cols(), 2), b3 = random_matrix(rng, b.cols(), 3);
        CHECK(kronecker(a, b) * kronecker(a2, b3) == kronecker(a * a2, b * b3));
        CHECK(kronecker(SparseMatrix::from_dense(a), SparseMatrix::from_dense(b)).to_dense() == kronecker(a, b));
    }
}

TEST_CASE("sparse and dense products agree") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 50; ++t) {
        Matrix a = random_matrix(rng, 4, 5, 1), b = random_matrix(rng, 5, 3, 1);
        auto sa = SparseMatrix::from_dense(a), sb = SparseMatrix::from_dense(b);
        CHECK((sa * sb).to_dense() == a * b);
        CHECK((sa + sa).to_dense() == a + a);
        CHECK(sa.transpose().to_dense() == a.transpose());
    }
}

TEST_CASE("subspace coordinates reconstruct vectors") {
    std::mt19937_64 rng(9);
    for (int t = 0; t < 50; ++t) {
        Matrix m = random_matrix(rng, 3, 6);
        Subspace k = kernel_subspace(m);
        CHECK(k.dim() == 6 - rank(m));
        for (int j = 0; j < k.dim(); ++j) {
            Vec v = k.basis.col(j);
            CHECK(k.contains(v));
            Vec c = k.coords(v);
            for (int i = 0; i < k.dim(); ++i) CHECK(c[i] == Rational(i == j ? 1 : 0));
        }
    }
}

TEST_CASE("solve returns nullopt for inconsistent systems") {
    Matrix m{{1, 1}, {2, 2}};
    CHECK(!solve(m, Vec{1, 3}).has_value());
    auto x = solve(m, Vec{1, 2});
    REQUIRE(x.has_value());
    CHECK(m * *x == Vec{1, 2});
    CHECK_THROWS_AS(m * Vec{1}, DimensionMismatch);
}
