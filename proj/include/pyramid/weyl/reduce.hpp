#ifndef PYRAMID_WEYL_REDUCE_HPP
#define PYRAMID_WEYL_REDUCE_HPP

#include <cstddef>
#include <vector>

#include <pyramid/exact/poly.hpp>
#include <pyramid/weyl/word.hpp>

namespace pyramid::weyl
{

/// q^m p^m as polynomials in w = qp for m = 0..m_max.
/**
 * Bootstrapped by the rewriting engine: the normal form of (qp)(q^{m-1} p^{m-1}) is
 * q^m p^m plus lower q^j p^j terms, which gives q^m p^m in terms of already known
 * polynomials.
 */
std::vector<Poly> qp_powers_in_w(std::size_t m_max);

/// Polynomial in z = (qp + pq)/2 equal to a balanced element.
/// Route: normal order, eliminate q^m p^m via qp_powers_in_w, substitute qp = z + i/2.
/// Throws PreconditionError naming the first unbalanced word.
Poly reduce_balanced(const WeylExpr &e);

/// Same polynomial by the realization p = x, q = i d/dx: every balanced word acts on
/// x^m as a scalar c_m, z acts as i(m + 1/2), and the polynomial is interpolated from
/// (i(m + 1/2), c_m), m = 0..max weight.
Poly reduce_via_interpolation(const WeylExpr &e);

/// Scalar by which the balanced element acts on x^m in the realization above.
GaussRat eigenvalue_on_monomial(const WeylExpr &e, std::size_t m);

} // namespace pyramid::weyl

#endif
