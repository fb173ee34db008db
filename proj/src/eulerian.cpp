#include <pyramid/eulerian.hpp>

#include <string>

#include <pyramid/comb.hpp>
#include <pyramid/errors.hpp>
#include <pyramid/exact/trunc_series.hpp>

namespace pyramid
{

namespace
{

BigInt ipow(long base, long e)
{
    BigInt r;
    const BigInt b = base;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

BigInt two_n_factorial(long n)
{
    return (BigInt(1) << static_cast<unsigned long>(n)) * factorial(n);
}

Poly int_poly(const std::vector<BigInt> &c)
{
    std::vector<GaussRat> g;
    for (const auto &x : c) {
        g.emplace_back(x);
    }
    return Poly(std::move(g));
}

Poly one_minus_x_pow(long e)
{
    Poly r(1);
    const Poly u({GaussRat(1), GaussRat(-1)});
    for (long k = 0; k < e; ++k) {
        r *= u;
    }
    return r;
}

Poly truncate(const Poly &p, long deg)
{
    std::vector<GaussRat> c;
    for (long k = 0; k <= deg && k <= p.degree(); ++k) {
        c.push_back(p.coeff(static_cast<std::size_t>(k)));
    }
    return Poly(std::move(c));
}

} // namespace

PyramidRow monomial_pyramid(long n)
{
    if (n < 0) {
        throw PreconditionError("row index must be non-negative");
    }
    const BigInt d = two_n_factorial(n);
    std::vector<GaussRat> a;
    for (long k = 0; k <= n; ++k) {
        BigInt s = 0;
        for (long j = 0; j <= n - k; ++j) {
            BigInt t = binomial(n + 1, n - k - j) * ipow(2 * j + 1, n);
            s += ((n - k - j) % 2 == 0) ? t : BigInt(-t);
        }
        a.emplace_back(BigRat(s, d));
    }
    return PyramidRow(std::move(a));
}

IntRow b_row(long n)
{
    const PyramidRow row = monomial_pyramid(n);
    const BigRat scale(two_n_factorial(n));
    IntRow out{n, {}};
    for (long k = 0; k <= n; ++k) {
        const BigRat v = row[static_cast<std::size_t>(k)].re() * scale;
        if (!v.is_integer()) {
            throw InternalError("B_{" + std::to_string(n) + "," + std::to_string(k) + "} = " + v.to_string() + " is not an integer");
        }
        out.entries.push_back(v.num());
    }
    return out;
}

Poly b_poly(long n)
{
    return int_poly(b_row(n).entries);
}

Poly a_poly(long n)
{
    std::vector<BigInt> c;
    for (long k = 0; k <= std::max(0L, n - 1); ++k) {
        c.push_back(eulerian_a(n, k));
    }
    return int_poly(c);
}

CheckReport b_gf_check(long n_max)
{
    if (n_max < 1) {
        throw PreconditionError("generating-function check needs N >= 1");
    }
    const auto ord = static_cast<std::size_t>(n_max);
    const Poly u({GaussRat(1), GaussRat(-1)});
    const Poly x = Poly::variable();

    // (1-x)/(1 - x e^{2zu}) = 1/(1 - x g), g = (e^{2zu} - 1)/u = sum_{n>=1} 2^n u^{n-1} z^n/n!
    TruncSeries<Poly> denom = TruncSeries<Poly>::constant(ord, Poly(1));
    Poly upow(1);
    for (std::size_t n = 1; n <= ord; ++n) {
        const auto ln = static_cast<long>(n);
        denom[n] = -(x * upow * GaussRat(BigRat(BigInt(1) << n, factorial(ln))));
        upow *= u;
    }
    TruncSeries<Poly> uz(ord);
    uz[1] = u;
    const auto series = exp(uz) * reciprocal(denom);

    CheckReport report;
    for (long n = 0; n <= n_max; ++n) {
        const Poly got = series[static_cast<std::size_t>(n)] * GaussRat(factorial(n));
        const Poly want = b_poly(n);
        report.check("b-gf", n, std::nullopt, got == want, got == want ? "" : got.to_string("x") + " != " + want.to_string("x"));
        const GaussRat at_one = want.evaluate(GaussRat(1));
        const bool norm_ok = at_one == GaussRat(two_n_factorial(n)) && monomial_pyramid(n).is_normalized();
        report.check("b-gf-normalized", n, std::nullopt, norm_ok, norm_ok ? "" : "B_n(1) = " + at_one.to_string());
    }
    return report;
}

CheckReport euler_sum_check(long n_max)
{
    if (n_max < 0) {
        throw PreconditionError("N must be non-negative");
    }
    const auto e = euler_numbers(n_max);
    CheckReport report;
    for (long n = 0; n <= n_max; ++n) {
        const auto row = b_row(n);
        BigInt s = 0;
        for (long k = 0; k <= n; ++k) {
            s += (k % 2 == 0) ? row.entries[static_cast<std::size_t>(k)] : BigInt(-row.entries[static_cast<std::size_t>(k)]);
        }
        const BigInt want = (BigInt(1) << static_cast<unsigned long>(n)) * e[static_cast<std::size_t>(n)];
        report.check("euler-sum", n, std::nullopt, s == want, s == want ? "" : s.get_str() + " != " + want.get_str());
    }
    return report;
}

CheckReport type_ab_relations(long n_max)
{
    if (n_max < 1) {
        throw PreconditionError("N must be >= 1");
    }
    CheckReport report;

    // (a)
    for (long n = 0; 2 * n <= n_max; ++n) {
        const Poly lhs = b_poly(2 * n);
        const Poly rhs = one_minus_x_pow(n) * a_poly(n);
        report.add({"b-a-even", n, std::nullopt, lhs == rhs ? CheckStatus::pass : CheckStatus::info,
                    lhs == rhs ? "" : "not reproducible as stated: B_" + std::to_string(2 * n) + "(x) = " + lhs.to_string("x") + ", (1-x)^" + std::to_string(n) + " A_" + std::to_string(n) + "(x) = " + rhs.to_string("x")});
    }
    for (long n = 0; 2 * n + 1 <= n_max; ++n) {
        const Poly lhs = b_poly(2 * n + 1);
        const Poly rhs = one_minus_x_pow(n) * a_poly(n + 1);
        report.add({"b-a-odd", n, std::nullopt, lhs == rhs ? CheckStatus::pass : CheckStatus::info,
                    lhs == rhs ? "" : "not reproducible as stated: B_" + std::to_string(2 * n + 1) + "(x) = " + lhs.to_string("x") + ", (1-x)^" + std::to_string(n) + " A_" + std::to_string(n + 1) + "(x) = " + rhs.to_string("x")});
    }

    // (b)
    for (long n = 0; n <= n_max; ++n) {
        const long kk = n + 2;
        std::vector<BigInt> c;
        for (long k = 0; k <= kk; ++k) {
            c.push_back(ipow(2 * k + 1, n));
        }
        const Poly got = truncate(one_minus_x_pow(n + 1) * int_poly(c), kk);
        const Poly want = b_poly(n);
        report.check("b-rational-gf", n, std::nullopt, got == want, got == want ? "" : got.to_string("x") + " != " + want.to_string("x"));
    }

    // (c)
    for (long n = 0; n <= n_max; ++n) {
        const auto row = b_row(n);
        bool printed_ok = true;
        std::string witness;
        for (long k = 0; k <= n; ++k) {
            BigInt printed = 0, corrected = 0;
            for (long j = 0; j <= k; ++j) {
                const BigInt p = ipow(2 * k + 1 - 2 * j, n);
                printed += (j % 2 == 0 ? 1 : -1) * binomial(n + 1, 2 * k + 1 - j) * p;
                corrected += (j % 2 == 0 ? 1 : -1) * binomial(n + 1, j) * p;
            }
            if (n % 2 == 1) {
                printed = -printed;
            }
            const BigInt &want = row.entries[static_cast<std::size_t>(n - k)];
            if (printed != want && printed_ok) {
                printed_ok = false;
                witness = "not reproducible as stated: k = " + std::to_string(k) + " gives " + printed.get_str() + ", B_{n,n-k} = " + want.get_str();
            }
            report.check("b-explicit", n, k, corrected == want, corrected == want ? "" : corrected.get_str() + " != " + want.get_str());
        }
        report.add({"b-explicit-printed", n, std::nullopt, printed_ok ? CheckStatus::pass : CheckStatus::info, witness});
    }
    return report;
}

} // namespace pyramid
