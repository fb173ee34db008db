#include <pyramid/exact/interpolate.hpp>

#include <pyramid/errors.hpp>

namespace pyramid
{

Poly lagrange_interpolate(std::span<const GaussRat> nodes, std::span<const GaussRat> values)
{
    if (nodes.size() != values.size()) {
        throw PreconditionError("interpolation needs as many values as nodes");
    }
    const std::size_t n = nodes.size();
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            if (nodes[a] == nodes[b]) {
                throw PreconditionError("interpolation nodes must be distinct (repeated " + nodes[a].to_string()
                                        + ")");
            }
        }
    }
    Poly result;
    for (std::size_t a = 0; a < n; ++a) {
        if (values[a].is_zero()) {
            continue;
        }
        Poly basis(1);
        GaussRat denom(1);
        for (std::size_t b = 0; b < n; ++b) {
            if (b == a) {
                continue;
            }
            basis *= Poly({-nodes[b], GaussRat(1)});
            denom *= nodes[a] - nodes[b];
        }
        result += basis * (values[a] / denom);
    }
    return result;
}

} // namespace pyramid
