#ifndef PYRAMID_EULERIAN_HPP
#define PYRAMID_EULERIAN_HPP

#include <vector>

#include <pyramid/exact/bigrat.hpp>
#include <pyramid/exact/poly.hpp>
#include <pyramid/report.hpp>
#include <pyramid/transforms.hpp>

namespace pyramid
{

/// Pyramid of P_n(z) = z^n from the closed-form alternating sum.
PyramidRow monomial_pyramid(long n);

/// B_{n,k} = 2^n n! a_{n,k}; throws InternalError if an entry is not integral.
IntRow b_row(long n);

/// B_n(x) = sum_k B_{n,k} x^k, printed in the variable x.
Poly b_poly(long n);
/// A_n(x) from the type-A Eulerian numbers.
Poly a_poly(long n);

/// Expands (1-x) e^{(1-x)z} / (1 - x e^{2z(1-x)}) to order z^N and compares with b_row;
/// also checks B_n(1) = 2^n n! (rows of the monomial pyramid sum to 1).
CheckReport b_gf_check(long n_max);

/// sum_k (-1)^k B_{n,k} = 2^n E_n.
CheckReport euler_sum_check(long n_max);

/// (a) B_{2n} = (1-x)^n A_n, B_{2n+1} = (1-x)^n A_{n+1}: recorded as info with a witness
///     when they do not hold;
/// (b) B_n(x) = (1-x)^{n+1} sum_{k<=n+2} (2k+1)^n x^k mod x^{n+3};
/// (c) B_{n,n-k} = (-1)^n sum_{j<=k} (-1)^j C(n+1, 2k+1-j) (2k+1-2j)^n as info, and
///     B_{n,n-k} = sum_{j<=k} (-1)^j C(n+1, j) (2k+1-2j)^n as a check.
CheckReport type_ab_relations(long n_max);

} // namespace pyramid

#endif
