#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <vector>

#include <ohs/matrix_subspace.hpp>
#include <ohs/rat_matrix.hpp>
#include <ohs/rational.hpp>

using namespace ohs;

namespace {

RatMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c) {
    std::uniform_int_distribution<long> num(-6, 6);
    std::uniform_int_distribution<long> den(1, 5);
    RatMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = Rational(num(rng), den(rng));
    return m;
}

RatMatrix diag2(long a, long b) {
    RatMatrix m(2, 2);
    m(0, 0) = a;
    m(1, 1) = b;
    return m;
}

}  // namespace

TEST(Rational, CanonicalForm) {
    Rational r(6, -4);
    EXPECT_EQ(r.to_string(), "-3/2");
    EXPECT_EQ(r.denominator(), 2);
    EXPECT_EQ(Rational(4, 2).to_string(), "2");
    EXPECT_EQ(Rational::parse("10/-4"), Rational(-5, 2));
    EXPECT_THROW(Rational(1, 0), InvalidArgument);
    EXPECT_THROW(Rational::parse("1/0"), InvalidArgument);
    EXPECT_THROW(Rational::parse("abc"), InvalidArgument);
    EXPECT_THROW(Rational(1) / Rational(0), InvalidArgument);
}

TEST(Rational, GrowsPastSixtyFourBits) {
    Rational x(1, 3);
    for (int i = 0; i < 8; ++i) x *= x;
    mpz_class expect = 1;
    for (int i = 0; i < 256; ++i) expect *= 3;
    EXPECT_EQ(x.denominator(), expect);
    EXPECT_EQ(x.numerator(), 1);
}

TEST(MatArith, IdentityAndHadamardUnits) {
    std::mt19937 rng(11);
    const auto m = random_matrix(rng, 3, 3);
    EXPECT_EQ(RatMatrix::identity(3) * m, m);
    const auto m2 = random_matrix(rng, 2, 2);
    EXPECT_EQ(hadamard(RatMatrix::ones(2), m2), m2);
    EXPECT_EQ(trace(Rational(1, 3) * RatMatrix::ones(3)), Rational(1));
}

TEST(MatArith, ShapeErrors) {
    EXPECT_THROW(RatMatrix(2, 3) * RatMatrix(2, 3), DimensionMismatch);
    EXPECT_THROW(RatMatrix(2, 2) + RatMatrix(3, 3), DimensionMismatch);
    EXPECT_THROW(hadamard(RatMatrix(2, 2), RatMatrix(2, 3)), DimensionMismatch);
    EXPECT_THROW(trace(RatMatrix(2, 3)), DimensionMismatch);
}

TEST(Kron, Definition) {
    const auto k = kron(RatMatrix::identity(2), RatMatrix::ones(2));
    RatMatrix expect(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) expect(i, j) = (i / 2 == j / 2) ? 1 : 0;
    EXPECT_EQ(k, expect);

    const auto d = diag2(1, 0);
    RatMatrix e(4, 4);
    e(0, 0) = 1;
    EXPECT_EQ(kron(d, d), e);
}

TEST(Kron, SecondFactorFastest) {
    const auto a = diag2(1, 2);
    const auto b = diag2(1, 10);
    const auto k = kron(a, b);
    EXPECT_EQ(k(1, 1), Rational(10));
    EXPECT_EQ(k(2, 2), Rational(2));
}

TEST(Kron, MixedProductProperty) {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 20; ++trial) {
        const auto A = random_matrix(rng, 2, 2), B = random_matrix(rng, 2, 2);
        const auto C = random_matrix(rng, 2, 2), D = random_matrix(rng, 2, 2);
        EXPECT_EQ(kron(A, B) * kron(C, D), kron(A * C, B * D));
    }
}

TEST(Kron, Associative) {
    std::mt19937 rng(5);
    const auto A = random_matrix(rng, 2, 2), B = random_matrix(rng, 3, 3), C = random_matrix(rng, 2, 2);
    EXPECT_EQ(kron(kron(A, B), C), kron(A, kron(B, C)));
}

TEST(SpanBasis, Examples) {
    std::vector<RatMatrix> a{RatMatrix::identity(2), Rational(2) * RatMatrix::identity(2)};
    EXPECT_EQ(span_basis(a).dimension(), 1u);
    std::vector<RatMatrix> b{RatMatrix::identity(3), RatMatrix::ones(3) - RatMatrix::identity(3)};
    EXPECT_EQ(span_basis(b).dimension(), 2u);
}

TEST(SpanBasis, Errors) {
    std::vector<RatMatrix> none;
    EXPECT_THROW(span_basis(none), EmptyInput);
    std::vector<RatMatrix> mixed{RatMatrix::identity(2), RatMatrix::identity(3)};
    EXPECT_THROW(span_basis(mixed), DimensionMismatch);
}

TEST(SpanBasis, IdempotentOnItsBasis) {
    std::mt19937 rng(77);
    std::vector<RatMatrix> mats;
    for (int i = 0; i < 5; ++i) mats.push_back(random_matrix(rng, 3, 3));
    mats.push_back(mats[0] + Rational(3) * mats[1]);
    const auto s = span_basis(mats);
    EXPECT_EQ(s.dimension(), 5u);
    const auto again = span_basis(s.basis());
    EXPECT_EQ(again, s);
    EXPECT_TRUE(s.contains(mats.back()));
}

TEST(SpanBasis, CoordinatesReconstruct) {
    std::mt19937 rng(8);
    std::vector<RatMatrix> mats{random_matrix(rng, 2, 2), random_matrix(rng, 2, 2)};
    const auto s = span_basis(mats);
    const RatMatrix x = Rational(2, 3) * mats[0] - mats[1];
    const auto c = s.coordinates(x);
    RatMatrix rebuilt(2, 2);
    for (std::size_t k = 0; k < c.size(); ++k) rebuilt += c[k] * s.basis_matrix(k);
    EXPECT_EQ(rebuilt, x);
}

TEST(AlgebraClosure, CompleteGraphK3) {
    std::vector<RatMatrix> g{RatMatrix::ones(3) - RatMatrix::identity(3)};
    const auto alg = algebra_closure(g, true);
    EXPECT_EQ(alg.dimension(), 2u);
    EXPECT_TRUE(alg.is_closed_under_multiplication());
}

TEST(AlgebraClosure, FullMatrixAlgebraFromUnits) {
    std::vector<RatMatrix> g{RatMatrix::unit(3, 0, 1), RatMatrix::unit(3, 1, 2), RatMatrix::unit(3, 2, 0)};
    EXPECT_EQ(algebra_closure(g, false).dimension(), 9u);
}

TEST(AlgebraClosure, GeneratorOrderInvariant) {
    std::mt19937 rng(99);
    std::vector<RatMatrix> g;
    for (int i = 0; i < 3; ++i) {
        RatMatrix m(4, 4);
        for (std::size_t r = 0; r < 4; ++r) m(r, (r + static_cast<std::size_t>(i) + 1) % 4) = 1;
        g.push_back(m);
    }
    g.push_back(RatMatrix::unit(4, 0, 0));
    const auto a = algebra_closure(g, true);
    std::vector<RatMatrix> h(g.rbegin(), g.rend());
    EXPECT_EQ(algebra_closure(h, true), a);
    std::rotate(h.begin(), h.begin() + 1, h.end());
    EXPECT_EQ(algebra_closure(h, true), a);
    EXPECT_TRUE(a.is_closed_under_multiplication());
}

TEST(CenterDimension, Examples) {
    std::vector<RatMatrix> full{RatMatrix::unit(2, 0, 1), RatMatrix::unit(2, 1, 0)};
    const auto m2 = algebra_closure(full, true);
    EXPECT_EQ(m2.dimension(), 4u);
    EXPECT_EQ(center_dimension(m2), 1u);

    std::vector<RatMatrix> diag;
    for (std::size_t i = 0; i < 4; ++i) diag.push_back(RatMatrix::unit(4, i, i));
    const auto d = span_basis(diag);
    EXPECT_EQ(center_dimension(d), 4u);
}

TEST(CenterDimension, CommutativeAlgebraIsItsOwnCenter) {
    RatMatrix cyc(5, 5);
    for (std::size_t r = 0; r < 5; ++r) cyc(r, (r + 1) % 5) = 1;
    std::vector<RatMatrix> g{cyc};
    const auto alg = algebra_closure(g, true);
    EXPECT_EQ(center_dimension(alg), alg.dimension());
}

TEST(CenterDimension, RejectsNonAlgebra) {
    std::vector<RatMatrix> g{RatMatrix::unit(2, 0, 1)};
    std::vector<RatMatrix> h{RatMatrix::unit(2, 0, 1), RatMatrix::unit(2, 1, 0)};
    EXPECT_THROW(center_dimension(span_basis(h)), NotAnAlgebra);
    EXPECT_EQ(center_dimension(span_basis(g)), 1u);
}

TEST(MatrixJson, RoundTrip) {
    RatMatrix m(2, 2);
    m(0, 0) = Rational(-3, 2);
    m(1, 1) = 4;
    const nlohmann::json j = m;
    EXPECT_EQ(j.dump(), R"({"cols":2,"entries":[["-3/2","0"],["0","4"]],"rows":2})");
    EXPECT_EQ(j.get<RatMatrix>(), m);
}
