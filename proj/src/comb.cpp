#include <pyramid/comb.hpp>

#include <pyramid/errors.hpp>
#include <pyramid/exact/trunc_series.hpp>

namespace pyramid
{

BigInt binomial(long a, long b)
{
    if (b < 0) {
        return 0;
    }
    BigInt r;
    if (a >= 0) {
        if (a < b) {
            return 0;
        }
        mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
        return r;
    }
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(b - a - 1), static_cast<unsigned long>(b));
    return (b % 2 == 0) ? r : BigInt(-r);
}

BigInt factorial(long n)
{
    if (n < 0) {
        throw PreconditionError("factorial of a negative integer");
    }
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

IntTriangle stirling1_triangle(long n_max)
{
    IntTriangle rows;
    rows.push_back({BigInt(1)});
    for (long n = 0; n < n_max; ++n) {
        const auto &prev = rows.back();
        std::vector<BigInt> next(static_cast<std::size_t>(n + 2), BigInt(0));
        // s(n+1,k) = s(n,k-1) - n s(n,k)
        for (long k = 0; k <= n + 1; ++k) {
            BigInt v = 0;
            if (k >= 1) {
                v += prev[static_cast<std::size_t>(k - 1)];
            }
            if (k <= n) {
                v -= n * prev[static_cast<std::size_t>(k)];
            }
            next[static_cast<std::size_t>(k)] = v;
        }
        rows.push_back(std::move(next));
    }
    return rows;
}

BigInt stirling1(long n, long k)
{
    if (n < 0 || k < 0 || k > n) {
        return 0;
    }
    return stirling1_triangle(n)[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

GaussRat rising_factorial(const GaussRat &x, long n)
{
    GaussRat r(1);
    for (long j = 0; j < n; ++j) {
        r *= x + GaussRat(j);
    }
    return r;
}

Poly rising_factorial(const Poly &x, long n)
{
    Poly r(1);
    for (long j = 0; j < n; ++j) {
        r *= x + Poly(j);
    }
    return r;
}

std::vector<BigInt> euler_numbers(long n_max)
{
    if (n_max < 0) {
        return {};
    }
    const auto order = static_cast<std::size_t>(n_max);
    TruncSeries<BigRat> cosh_series(order);
    BigInt fact = 1;
    for (std::size_t k = 0; k <= order; ++k) {
        if (k > 0) {
            fact *= static_cast<unsigned long>(k);
        }
        if (k % 2 == 0) {
            cosh_series[k] = BigRat(BigInt(1), fact);
        }
    }
    const auto sech = reciprocal(cosh_series);
    std::vector<BigInt> out;
    fact = 1;
    for (std::size_t k = 0; k <= order; ++k) {
        if (k > 0) {
            fact *= static_cast<unsigned long>(k);
        }
        const BigRat e = sech[k] * BigRat(fact);
        if (!e.is_integer()) {
            throw InternalError("Euler number is not an integer");
        }
        out.push_back(e.num());
    }
    return out;
}

std::pair<BigInt, BigInt> fib_lucas(long n)
{
    if (n < 0) {
        throw PreconditionError("fib_lucas needs n >= 0");
    }
    BigInt f0 = 0, f1 = 1, l0 = 2, l1 = 1;
    for (long k = 0; k < n; ++k) {
        BigInt f2 = f0 + f1, l2 = l0 + l1;
        f0 = f1;
        f1 = f2;
        l0 = l1;
        l1 = l2;
    }
    return {f0, l0};
}

BigInt eulerian_a(long n, long k)
{
    if (n == 0) {
        return k == 0 ? 1 : 0;
    }
    if (k < 0 || k >= n) {
        return 0;
    }
    BigInt acc = 0;
    for (long j = 0; j <= k; ++j) {
        BigInt p;
        mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(k + 1 - j), static_cast<unsigned long>(n));
        const BigInt term = binomial(n + 1, j) * p;
        if (j % 2 == 0) {
            acc += term;
        } else {
            acc -= term;
        }
    }
    return acc;
}

} // namespace pyramid
