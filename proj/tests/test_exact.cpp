#include <gtest/gtest.h>

#include <pyramid/errors.hpp>
#include <pyramid/exact/bigrat.hpp>
#include <pyramid/exact/gauss_rat.hpp>
#include <pyramid/exact/interpolate.hpp>
#include <pyramid/exact/matrix.hpp>
#include <pyramid/exact/poly.hpp>
#include <pyramid/exact/trunc_series.hpp>

#include "gen.hpp"

using namespace pyramid;

namespace
{

GaussRat g(long a, long b = 1, long c = 0, long d = 1)
{
    return {BigRat(a, b), BigRat(c, d)};
}

} // namespace

TEST(BigRat, CanonicalForm)
{
    const BigRat x(6, -4);
    EXPECT_EQ(x.to_string(), "-3/2");
    EXPECT_EQ(x.den(), 2);
    EXPECT_EQ(BigRat(0, 7).to_string(), "0");
    EXPECT_EQ(BigRat(8, 4).to_string(), "2");
    EXPECT_TRUE(BigRat(8, 4).is_integer());
}

TEST(BigRat, ParseRoundTrip)
{
    for (const char *s : {"0", "-3/4", "105/16", "123456789012345678901234567890", "-1/3"}) {
        EXPECT_EQ(BigRat::parse(s).to_string(), s);
    }
    EXPECT_EQ(BigRat::parse("+2/4").to_string(), "1/2");
    EXPECT_THROW(BigRat::parse("1/0"), Error);
    EXPECT_THROW(BigRat::parse("x"), ParseError);
}

TEST(BigRat, DivisionByZero)
{
    EXPECT_THROW(BigRat(1) / BigRat(0), DivisionByZero);
    EXPECT_THROW(BigRat(0).inverse(), DivisionByZero);
}

TEST(GaussRat, Examples)
{
    const GaussRat w = g(1, 2, 1, 2);
    EXPECT_EQ(w * w.conj(), g(1, 2));
    EXPECT_EQ(g(1, 4, 3, 4).conj(), g(1, 4, -3, 4));
    EXPECT_EQ(GaussRat::i().pow(4), GaussRat(1));
    EXPECT_EQ(GaussRat::i().pow(-1), g(0, 1, -1));
    EXPECT_EQ(i_pow(3), g(0, 1, -1));
    EXPECT_THROW(GaussRat(1) / GaussRat(0), DivisionByZero);
}

TEST(GaussRat, TextualForm)
{
    EXPECT_EQ(g(-3, 4).to_string(), "-3/4");
    EXPECT_EQ(g(0, 1, 1, 2).to_string(), "1/2 i");
    EXPECT_EQ(g(1, 4, -3, 4).to_string(), "1/4-3/4 i");
    EXPECT_EQ(g(0).to_string(), "0");
    for (const char *s : {"-3/4", "1/2 i", "1/4-3/4 i", "7", "-2+1 i", "0", "-5/3 i"}) {
        EXPECT_EQ(GaussRat::parse(s).to_string(), s) << s;
    }
    EXPECT_EQ(GaussRat::parse("i"), GaussRat::i());
    EXPECT_EQ(GaussRat::parse("-i"), -GaussRat::i());
    EXPECT_EQ(GaussRat::parse("3/6"), g(1, 2));
    EXPECT_THROW(GaussRat::parse("1/2 j"), ParseError);
    EXPECT_THROW(GaussRat::parse(""), ParseError);
}

TEST(GaussRat, FieldAxiomsRandom)
{
    testgen::Gen gen(1);
    for (int t = 0; t < 300; ++t) {
        const GaussRat a = gen.gauss(), b = gen.gauss(), c = gen.gauss();
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ((a - b) + b, a);
        if (!a.is_zero()) {
            EXPECT_EQ(a * a.inverse(), GaussRat(1));
            EXPECT_EQ((b / a) * a, b);
        }
        EXPECT_EQ((a * b).conj(), a.conj() * b.conj());
        EXPECT_EQ(GaussRat::parse(a.to_string()), a);
    }
}

TEST(Poly, Examples)
{
    const Poly z = Poly::variable();
    const Poly p2 = z * z - Poly(g(1, 4));
    EXPECT_EQ(p2.evaluate(g(0, 1, 1, 2)), g(-1, 2));
    EXPECT_EQ((z + Poly(g(0, 1, 1, 2))) * (z - Poly(g(0, 1, 1, 2))), z * z + Poly(g(1, 4)));
    EXPECT_EQ(z.evaluate(g(0, 1, 1, 2)), g(0, 1, 1, 2));
    EXPECT_EQ(p2.to_string(), "z^2 - 1/4");
    EXPECT_EQ(Poly().degree(), -1);
    EXPECT_EQ(Poly().to_string(), "0");
    EXPECT_TRUE(p2.is_monic());
    EXPECT_TRUE(p2.has_parity(2));
    EXPECT_FALSE(p2.has_parity(1));
}

TEST(Poly, ComposeLinearMatchesEvaluation)
{
    testgen::Gen gen(2);
    for (int t = 0; t < 50; ++t) {
        std::vector<GaussRat> c;
        for (long k = 0, d = gen.integer(0, 5); k <= d; ++k) {
            c.push_back(gen.gauss());
        }
        const Poly p(c);
        const GaussRat a = gen.gauss(), b = gen.gauss(), w = gen.gauss();
        EXPECT_EQ(p.compose_linear(a, b).evaluate(w), p.evaluate(a + b * w));
        const Poly q({gen.gauss(), gen.gauss()});
        EXPECT_EQ(p.compose(q).evaluate(w), p.evaluate(q.evaluate(w)));
        EXPECT_EQ((p * q).evaluate(w), p.evaluate(w) * q.evaluate(w));
    }
}

TEST(TruncSeries, Examples)
{
    const auto t = TruncSeries<BigRat>::variable(3);
    const auto e = exp(t);
    EXPECT_EQ(e[0], BigRat(1));
    EXPECT_EQ(e[1], BigRat(1));
    EXPECT_EQ(e[2], BigRat(1, 2));
    EXPECT_EQ(e[3], BigRat(1, 6));

    const auto r = reciprocal(TruncSeries<BigRat>::constant(3, BigRat(1)) - t);
    for (std::size_t k = 0; k <= 3; ++k) {
        EXPECT_EQ(r[k], BigRat(1));
    }

    const auto at = arctan_series<BigRat>(3);
    EXPECT_EQ(at[1], BigRat(1));
    EXPECT_EQ(at[2], BigRat(0));
    EXPECT_EQ(at[3], BigRat(-1, 3));
}

TEST(TruncSeries, Preconditions)
{
    const auto one = TruncSeries<BigRat>::constant(3, BigRat(1));
    EXPECT_THROW(exp(one), PreconditionError);
    EXPECT_THROW(reciprocal(TruncSeries<BigRat>::variable(3)), PreconditionError);
    EXPECT_THROW(sqrt_reciprocal(TruncSeries<BigRat>(3)), PreconditionError);
    EXPECT_THROW(one + TruncSeries<BigRat>(4), PreconditionError);
    EXPECT_THROW(compose(one, one), PreconditionError);
}

TEST(TruncSeries, ExpTimesExpNegIsOne)
{
    testgen::Gen gen(3);
    for (int t = 0; t < 20; ++t) {
        TruncSeries<GaussRat> u(8);
        for (std::size_t k = 1; k <= 8; ++k) {
            u[k] = gen.gauss(4);
        }
        EXPECT_EQ(exp(u) * exp(-u), TruncSeries<GaussRat>::constant(8, GaussRat(1)));
    }
}

TEST(TruncSeries, SqrtReciprocalSquared)
{
    testgen::Gen gen(4);
    for (int t = 0; t < 20; ++t) {
        auto f = TruncSeries<BigRat>::constant(7, BigRat(1));
        for (std::size_t k = 1; k <= 7; ++k) {
            f[k] = gen.rational(5);
        }
        const auto y = sqrt_reciprocal(f);
        EXPECT_EQ(y * y * f, TruncSeries<BigRat>::constant(7, BigRat(1)));
        EXPECT_EQ(reciprocal(f) * f, TruncSeries<BigRat>::constant(7, BigRat(1)));
    }
}

TEST(TruncSeries, ComposeWithExp)
{
    // exp(t) composed with 2t is exp(2t)
    const auto t = TruncSeries<BigRat>::variable(6);
    TruncSeries<BigRat> two_t(6);
    two_t[1] = BigRat(2);
    EXPECT_EQ(compose(exp(t), two_t), exp(two_t));
}

TEST(Interpolate, Examples)
{
    const std::vector<GaussRat> n2{g(0, 1, 1, 2), g(0, 1, 3, 2)};
    EXPECT_EQ(lagrange_interpolate(n2, n2), Poly::variable());

    const std::vector<GaussRat> n3{g(0, 1, 1, 2), g(0, 1, 3, 2), g(0, 1, 5, 2)};
    const std::vector<GaussRat> v3{g(-2), g(-6), g(-12)};
    EXPECT_EQ(lagrange_interpolate(n3, v3), Poly({g(-3, 4), g(0, 1, 2), g(1)}));

    const std::vector<GaussRat> n1{g(0)}, v1{g(5)};
    EXPECT_EQ(lagrange_interpolate(n1, v1), Poly(g(5)));

    const std::vector<GaussRat> dup{g(1), g(1)};
    EXPECT_THROW(lagrange_interpolate(dup, v3), PreconditionError);
    EXPECT_THROW(lagrange_interpolate(dup, n2), PreconditionError);
}

TEST(Interpolate, ReproducesValuesRandom)
{
    testgen::Gen gen(5);
    for (int t = 0; t < 30; ++t) {
        const long count = gen.integer(1, 7);
        std::vector<GaussRat> nodes, values;
        for (long k = 0; k < count; ++k) {
            nodes.push_back(g(0, 1, 2 * k + 1, 2) + g(gen.integer(-3, 3)) * g(0, 1, 7));
            values.push_back(gen.gauss());
        }
        const Poly p = lagrange_interpolate(nodes, values);
        EXPECT_LT(p.degree(), count);
        for (long k = 0; k < count; ++k) {
            EXPECT_EQ(p.evaluate(nodes[static_cast<std::size_t>(k)]), values[static_cast<std::size_t>(k)]);
        }
    }
}

TEST(Matrix, Determinant)
{
    Matrix<BigRat> m(3, 3);
    long v[3][3] = {{2, 0, 1}, {1, 3, 2}, {1, 1, 1}};
    for (std::size_t r = 0; r < 3; ++r) {
        for (std::size_t c = 0; c < 3; ++c) {
            m(r, c) = BigRat(v[r][c]);
        }
    }
    // 2(3-2) - 0 + 1(1-3) = 0
    EXPECT_EQ(determinant(m), BigRat(0));
    m(2, 2) = BigRat(2);
    EXPECT_EQ(determinant(m), BigRat(6));
    EXPECT_EQ(determinant(Matrix<BigRat>::identity(4)), BigRat(1));
}
