#include <gtest/gtest.h>

#include <pyramid/comb.hpp>
#include <pyramid/errors.hpp>
#include <pyramid/families.hpp>
#include <pyramid/hyperg.hpp>

#include "gen.hpp"

using namespace pyramid;

namespace
{

GaussRat g(long a, long b = 1, long c = 0, long d = 1)
{
    return {BigRat(a, b), BigRat(c, d)};
}

} // namespace

TEST(Pfq, Examples)
{
    EXPECT_EQ(pfq({{g(-1), g(2), g(1)}, {g(1), g(1)}, g(1)}), g(-1));
    const GaussRat b = g(7, 3, 1, 5);
    EXPECT_EQ(pfq({{g(-3), b}, {b}, g(-1)}), g(8));
    const GaussRat v = pfq({{g(-2), g(3), g(1, 4)}, {g(1, 2), g(1)}, g(1)});
    EXPECT_EQ(v, g(1, 2));
    // 2!/(2i)^2 v = -1/4 = Weyl P_2(0)
    EXPECT_EQ(g(2) / (g(0, 1, 2) * g(0, 1, 2)) * v, g(-1, 4));
}

TEST(Pfq, Termination)
{
    EXPECT_EQ(termination_index({{g(-4), g(-2), g(1, 2)}, {}, g(1)}), 2);
    EXPECT_THROW(termination_index({{g(1, 2)}, {}, g(1)}), PreconditionError);
    // lower -1 with K = 3 makes (b)_2 vanish
    EXPECT_THROW(pfq({{g(-3)}, {g(-1)}, g(1)}), PreconditionError);
    // lower -3 with K = 2 never reaches the zero
    EXPECT_NO_THROW(pfq({{g(-2)}, {g(-3)}, g(1)}));
}

TEST(Pfq, BinomialTheoremRandom)
{
    // 1F0(-n; ; -x) = (1 + x)^n
    testgen::Gen gen(30);
    for (int t = 0; t < 30; ++t) {
        const long n = gen.integer(0, 9);
        const GaussRat x = gen.gauss();
        EXPECT_EQ(pfq({{g(-n)}, {}, -x}), (g(1) + x).pow(n));
    }
}

TEST(Pfq, PochhammerPrefactor)
{
    // (c)_n 2F1(-n, m+1; c; -1) with c = m-n+1 <= 0 still equals sum_k C(n,k)(m+1-k)_n
    for (long n = 0; n <= 6; ++n) {
        for (long m = 0; m <= 6; ++m) {
            GaussRat lhs(0);
            for (long k = 0; k <= n; ++k) {
                lhs += GaussRat(binomial(n, k)) * rising_factorial(g(m + 1 - k), n);
            }
            EXPECT_EQ(pfq_times_pochhammer({{g(-n), g(m + 1)}, {g(m - n + 1)}, g(-1)}, 0, n), lhs) << n << ' ' << m;
        }
    }
}

TEST(Hahn, Examples)
{
    EXPECT_EQ(bateman_f(0, g(3, 7)), g(1));
    EXPECT_EQ(bateman_f(1, g(-1)), g(1));
    EXPECT_EQ(continuous_hahn(1, g(0), g(1, 4), g(3, 4), g(1, 4), g(3, 4)), g(0));
    // p_1(x) = i (1/2) (1 - 4 (1/4 + ix)) = 2x with these parameters
    EXPECT_EQ(continuous_hahn(1, g(5, 3), g(1, 4), g(3, 4), g(1, 4), g(3, 4)), g(10, 3));
    const Poly z = Poly::variable();
    // F_1(z) = 1 - (1 + z)
    EXPECT_EQ(bateman_f_poly(1, z), Poly({g(0), g(-1)}));
}

TEST(Hahn, PolyMatchesPointwise)
{
    testgen::Gen gen(31);
    const Poly z = Poly::variable();
    for (long n = 0; n <= 6; ++n) {
        const GaussRat x = gen.gauss();
        EXPECT_EQ(continuous_hahn_poly(n, z, g(1, 4), g(3, 4), g(1, 4), g(3, 4)).evaluate(x),
                  continuous_hahn(n, x, g(1, 4), g(3, 4), g(1, 4), g(3, 4)));
        EXPECT_EQ(bateman_f_poly(n, z).evaluate(x), bateman_f(n, x));
    }
}

TEST(Hyperg, ClosedFormsMatchFamilies)
{
    for (long n = 0; n <= 10; ++n) {
        EXPECT_EQ(weyl_closed_form(n), OrderingFamily::weyl().poly(n)) << n;
        EXPECT_EQ(bateman_closed_form(n), OrderingFamily::binom_power(2).poly(n)) << n;
    }
}

TEST(Hyperg, CnmForms)
{
    EXPECT_EQ(c_nm(1, 1), 3);
    EXPECT_EQ(c_nm_alt(1, 1), 3);
    for (long n = 0; n <= 12; ++n) {
        for (long m = 0; m <= 12; ++m) {
            EXPECT_EQ(c_nm(n, m), c_nm_alt(n, m)) << n << ' ' << m;
        }
    }
}

TEST(Hyperg, IdentitySuite)
{
    const CheckReport r = identity_suite(20, 20);
    EXPECT_EQ(r.failures(), 0u);
    for (const auto &e : r.entries()) {
        EXPECT_NE(e.status, CheckStatus::fail) << e.identity << ' ' << e.n.value_or(-1) << ' ' << e.m.value_or(-1) << ' ' << e.detail;
    }
    EXPECT_THROW(identity_suite(0, 3), PreconditionError);
}

TEST(Hyperg, BridgeSuite)
{
    const CheckReport r = bridge_suite(10);
    for (const auto &e : r.entries()) {
        EXPECT_NE(e.status, CheckStatus::fail) << e.identity << ' ' << e.n.value_or(-1) << ' ' << e.detail;
    }
    std::size_t hahn = 0;
    for (const auto &e : r.entries()) {
        hahn += e.identity == "continuous-hahn" && e.status == CheckStatus::pass;
    }
    EXPECT_EQ(hahn, 11u);
}
