#ifndef PYRAMID_EXACT_INTERPOLATE_HPP
#define PYRAMID_EXACT_INTERPOLATE_HPP

#include <span>

#include <pyramid/exact/gauss_rat.hpp>
#include <pyramid/exact/poly.hpp>

namespace pyramid
{

/// Unique polynomial of degree < nodes.size() through (nodes[i], values[i]).
/// Throws PreconditionError on length mismatch or repeated nodes.
Poly lagrange_interpolate(std::span<const GaussRat> nodes, std::span<const GaussRat> values);

} // namespace pyramid

#endif
