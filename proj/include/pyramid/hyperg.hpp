#ifndef PYRAMID_HYPERG_HPP
#define PYRAMID_HYPERG_HPP

#include <vector>

#include <pyramid/exact/gauss_rat.hpp>
#include <pyramid/exact/poly.hpp>
#include <pyramid/report.hpp>

namespace pyramid
{

/// Parameters of a terminating pFq(upper; lower; argument).
struct HypSpec {
    std::vector<GaussRat> upper;
    std::vector<GaussRat> lower;
    GaussRat argument;
};

/// Smallest K with -K among the upper parameters. Throws PreconditionError if the series
/// does not terminate.
long termination_index(const HypSpec &spec);

/// sum_{k=0}^{K} prod (upper)_k / prod (lower)_k * x^k / k!.
/// Throws PreconditionError if a lower parameter makes a denominator (b)_k vanish for k <= K.
GaussRat pfq(const HypSpec &spec);

/// Terminating pFq whose upper parameters are polynomials in z; the series stops after
/// `terms_to` (the termination index carried by a constant upper parameter).
Poly pfq_poly(const std::vector<Poly> &upper, const std::vector<GaussRat> &lower, const GaussRat &argument,
              long terms_to);

/// (c)_n * pFq(upper; lower; x) where lower[prefactor_index] == c, with (c)_n / (c)_k
/// cancelled termwise as (c + k)_{n-k}. Defined even when c is a nonpositive integer.
GaussRat pfq_times_pochhammer(const HypSpec &spec, std::size_t prefactor_index, long n);

/// Continuous Hahn polynomial
/// p_n(x; a,b,c,d) = i^n (a+c)_n (a+d)_n / n! 3F2(-n, n+a+b+c+d-1, a+ix; a+c, a+d; 1).
GaussRat continuous_hahn(long n, const GaussRat &x, const GaussRat &a, const GaussRat &b, const GaussRat &c,
                         const GaussRat &d);
/// Same, with x replaced by a polynomial in z.
Poly continuous_hahn_poly(long n, const Poly &x, const GaussRat &a, const GaussRat &b, const GaussRat &c,
                          const GaussRat &d);

/// Bateman polynomial F_n(z) = 3F2(-n, n+1, (1+z)/2; 1, 1; 1).
GaussRat bateman_f(long n, const GaussRat &z);
Poly bateman_f_poly(long n, const Poly &z);

/// Weyl-ordering polynomial in closed form: n!/(2i)^n 3F2(-n, n+1, 1/4 - iz/2; 1/2, 1; 1).
Poly weyl_closed_form(long n);
/// Binomial-squared polynomial via Bateman: (-i)^n (n!)^3/(2n)! F_n(-2iz).
Poly bateman_closed_form(long n);

/// c(n, m) = sum_k C(m+k, m) C(m, n-k).
BigInt c_nm(long n, long m);
/// The second form sum_{k<=m} C(n+k, m) C(m, k).
BigInt c_nm_alt(long n, long m);

/// Exact replay of the terminating-sum identities and their recurrences on the grid
/// 0 <= n <= n_max, 0 <= m <= m_max.
CheckReport identity_suite(long n_max, long m_max);

/// Weyl closed form, continuous Hahn relation, and Bateman relation as polynomial
/// identities for n <= n_max (coefficients and n+1 sample points).
CheckReport bridge_suite(long n_max);

} // namespace pyramid

#endif
