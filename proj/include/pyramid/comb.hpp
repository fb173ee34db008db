#ifndef PYRAMID_COMB_HPP
#define PYRAMID_COMB_HPP

#include <utility>
#include <vector>

#include <pyramid/exact/bigrat.hpp>
#include <pyramid/exact/gauss_rat.hpp>
#include <pyramid/exact/poly.hpp>

namespace pyramid
{

/// Rows of an integer triangle; row n holds entries k = 0..n.
using IntTriangle = std::vector<std::vector<BigInt>>;

/// C(a, b), zero for b < 0 and for 0 <= a < b. Negative a uses the generalized
/// binomial (-1)^b C(b - a - 1, b).
BigInt binomial(long a, long b);

BigInt factorial(long n);

/// Signed Stirling numbers of the first kind: x(x-1)...(x-n+1) = sum_k s(n,k) x^k.
/// Zero outside 0 <= k <= n.
BigInt stirling1(long n, long k);
IntTriangle stirling1_triangle(long n_max);

/// Rising factorial (x)_n = x(x+1)...(x+n-1), (x)_0 = 1.
GaussRat rising_factorial(const GaussRat &x, long n);
Poly rising_factorial(const Poly &x, long n);

/// E_0..E_N from the reciprocal of the cosh series; odd entries vanish.
std::vector<BigInt> euler_numbers(long n_max);

/// (F_n, L_n) with F_0 = 0, F_1 = 1, L_0 = 2, L_1 = 1.
std::pair<BigInt, BigInt> fib_lucas(long n);

/// Type-A Eulerian number: permutations of n with k descents.
BigInt eulerian_a(long n, long k);

} // namespace pyramid

#endif
