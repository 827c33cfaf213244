#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace ghecke;
using testing_support::Gen;

TEST(Scalar, ParsesIntegersFractionsAndDecimals) {
    EXPECT_EQ(Scalar::parse("3/4"), Scalar(3, 4));
    EXPECT_EQ(Scalar::parse("-6/8"), Scalar(-3, 4));
    EXPECT_EQ(Scalar::parse("0.25"), Scalar(1, 4));
    EXPECT_EQ(Scalar::parse("+7"), Scalar(7));
    EXPECT_THROW(Scalar::parse("1/0"), InputError);
    EXPECT_THROW(Scalar::parse("abc"), InputError);
    EXPECT_THROW(Scalar::parse(""), InputError);
}

TEST(Scalar, RootsOfUnitySatisfyCyclotomicIdentities) {
    Scalar i = Scalar::root_of_unity(1, 4);
    EXPECT_FALSE(i.is_rational());
    EXPECT_EQ(i * i, Scalar(-1));
    // 1 + z + z^2 = 0 for a primitive cube root
    Scalar z = Scalar::root_of_unity(1, 3);
    EXPECT_EQ(Scalar(1) + z + z * z, Scalar(0));
    // zeta_6 = -zeta_3^2
    EXPECT_EQ(Scalar::root_of_unity(1, 6), -(z * z));
    EXPECT_EQ(pow(Scalar::root_of_unity(1, 12), 12), Scalar(1));
    EXPECT_EQ(Scalar::root_of_unity(-1, 5), Scalar::root_of_unity(4, 5));
    EXPECT_EQ(Scalar::root_of_unity(3, 6), Scalar(-1));
}

TEST(Scalar, MixedOrdersCombine) {
    Scalar i = Scalar::root_of_unity(1, 4), w = Scalar::root_of_unity(1, 3);
    Scalar p = i * w;
    EXPECT_EQ(pow(p, 12), Scalar(1));
    EXPECT_NE(pow(p, 6), Scalar(1));
}

TEST(Scalar, ConjugateAndGaussianParts) {
    Scalar a = Scalar(2) + Scalar(3) * Scalar::root_of_unity(1, 4);
    auto [re, im] = a.gaussian_parts();
    EXPECT_EQ(re, 2);
    EXPECT_EQ(im, 3);
    EXPECT_EQ(a * a.conjugate(), Scalar(13));
}

TEST(ScalarProperty, FieldAxiomsInCyclotomicFields) {
    Gen g(11);
    for (std::size_t n : {3u, 4u, 5u, 8u, 12u}) {
        for (int t = 0; t < 40; ++t) {
            Scalar a = g.cyclotomic(n), b = g.cyclotomic(n), c = g.cyclotomic(n);
            EXPECT_EQ(a + b, b + a);
            EXPECT_EQ(a * b, b * a);
            EXPECT_EQ((a * b) * c, a * (b * c));
            EXPECT_EQ(a * (b + c), a * b + a * c);
            EXPECT_EQ((a - b) + b, a);
            if (!a.is_zero()) {
                EXPECT_EQ(a * a.inverse(), Scalar(1));
            }
        }
    }
}

TEST(ScalarProperty, ConjugationIsMultiplicative) {
    Gen g(12);
    for (int t = 0; t < 40; ++t) {
        Scalar a = g.cyclotomic(8), b = g.cyclotomic(8);
        EXPECT_EQ((a * b).conjugate(), a.conjugate() * b.conjugate());
        EXPECT_EQ(a.conjugate().conjugate(), a);
    }
}

TEST(Matrix, RankNullspaceAndInverse) {
    Matrix a(3, 3);
    // rows (1,2,3), (2,4,6), (1,0,1): rank 2
    long v[3][3] = {{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) a(i, j) = v[i][j];
    EXPECT_EQ(a.rank(), 2u);
    Matrix n = a.nullspace();
    ASSERT_EQ(n.cols(), 1u);
    EXPECT_TRUE((a * n).is_zero());
    EXPECT_THROW(a.inverse(), Error);
}

TEST(Matrix, CharacteristicPolynomialOfTriangular) {
    Matrix a(2, 2);
    a(0, 0) = 2;
    a(0, 1) = 1;
    a(1, 1) = 3;
    // (t - 2)(t - 3) = t^2 - 5t + 6
    auto c = a.characteristic_polynomial();
    ASSERT_EQ(c.size(), 3u);
    EXPECT_EQ(c[0], Scalar(6));
    EXPECT_EQ(c[1], Scalar(-5));
    EXPECT_EQ(c[2], Scalar(1));
}

TEST(MatrixProperty, InverseAndSolve) {
    Gen g(13);
    int invertible = 0;
    for (int t = 0; t < 60; ++t) {
        Matrix a = g.matrix(4, 4);
        if (a.rank() < 4) continue;
        ++invertible;
        EXPECT_EQ(a * a.inverse(), Matrix::identity(4));
        Matrix b = g.matrix(4, 2);
        auto x = a.solve(b);
        ASSERT_TRUE(x);
        EXPECT_EQ(a * *x, b);
    }
    EXPECT_GT(invertible, 20);
}

TEST(MatrixProperty, RankNullityAndCayleyHamilton) {
    Gen g(14);
    for (int t = 0; t < 40; ++t) {
        Matrix a = g.matrix(3, 5);
        EXPECT_EQ(a.rank() + a.nullspace().cols(), 5u);
        Matrix s = g.matrix(3, 3);
        auto c = s.characteristic_polynomial();
        Matrix acc(3, 3);
        for (std::size_t i = 0; i < c.size(); ++i) acc = acc + c[i] * s.power(static_cast<unsigned>(i));
        EXPECT_TRUE(acc.is_zero());
        EXPECT_EQ(-c[2], s.trace());
    }
}

TEST(Polynomial, ExpansionAndDegrees) {
    Polynomial x = Polynomial::variable(2, 0), y = Polynomial::variable(2, 1), r = Polynomial::r(2);
    Polynomial p = (x + y).pow(2);
    Monomial xy;
    xy.exp[0] = 1;
    xy.exp[1] = 1;
    EXPECT_EQ(p.coefficient(xy), Scalar(2));
    EXPECT_EQ(p.size(), 3u);
    EXPECT_EQ((x * r).max_graded_degree(), 4);
    EXPECT_TRUE((x * r).has_r());
    EXPECT_EQ(p.to_string(), "x1^2 + 2*x1*x2 + x2^2");
    auto comps = (x + x * y + Polynomial::constant(2, 5)).homogeneous_components();
    EXPECT_EQ(comps.size(), 3u);
    EXPECT_EQ(comps.at(0), Polynomial::constant(2, 5));
}

TEST(Polynomial, ActionBySwapAndExactDivision) {
    Polynomial x = Polynomial::variable(2, 0), y = Polynomial::variable(2, 1);
    Matrix swap(2, 2);
    swap(0, 1) = 1;
    swap(1, 0) = 1;
    EXPECT_EQ((x * x * y).act(swap), y * y * x);
    Polynomial p = x * x - y * y;
    EXPECT_EQ(p.divide_exact_linear(x - y), x + y);
    EXPECT_THROW((x * x + y).divide_exact_linear(x - y), Error);
}

TEST(PolynomialProperty, EvaluationIsARingHomomorphism) {
    Gen g(15);
    for (int t = 0; t < 60; ++t) {
        Polynomial a = g.polynomial(3, 3, 4), b = g.polynomial(3, 3, 4);
        auto pt = g.point(3);
        Scalar r = g.rational();
        EXPECT_EQ((a * b).evaluate(pt, r), a.evaluate(pt, r) * b.evaluate(pt, r));
        EXPECT_EQ((a + b).evaluate(pt, r), a.evaluate(pt, r) + b.evaluate(pt, r));
        EXPECT_EQ(a.specialize_r(r).evaluate(pt, 0), a.evaluate(pt, r));
    }
}

TEST(PolynomialProperty, DivisionUndoesMultiplicationByLinearForms) {
    Gen g(16);
    for (int t = 0; t < 40; ++t) {
        Polynomial a = g.polynomial(2, 3, 4);
        Polynomial l = Polynomial::linear_form({g.nonzero_rational(), g.rational()});
        EXPECT_EQ((a * l).divide_exact_linear(l), a);
    }
}
