#ifndef PYRAMID_FAMILIES_HPP
#define PYRAMID_FAMILIES_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <pyramid/exact/poly.hpp>
#include <pyramid/report.hpp>
#include <pyramid/transforms.hpp>

namespace pyramid
{

/// Named operator orderings, i.e. pyramids given row by row.
class OrderingFamily
{
public:
    enum class Kind { symmetric, born_jordan, weyl, binom_power, custom };

    static OrderingFamily symmetric()
    {
        return OrderingFamily(Kind::symmetric);
    }
    static OrderingFamily born_jordan()
    {
        return OrderingFamily(Kind::born_jordan);
    }
    static OrderingFamily weyl()
    {
        return OrderingFamily(Kind::weyl);
    }
    /// a_{n,k} proportional to C(n,k)^r, normalized; r >= 1.
    static OrderingFamily binom_power(long r);
    /// User-supplied rows; rows[n] must have n+1 entries.
    static OrderingFamily custom(std::vector<PyramidRow> rows);

    /// Accepts symmetric, born-jordan, weyl, binom-pow (with `r`). Unknown names give nullopt.
    static std::optional<OrderingFamily> from_name(std::string_view name, long r = 2);

    Kind kind() const
    {
        return m_kind;
    }
    long power() const
    {
        return m_power;
    }
    std::string name() const;

    PyramidRow row(long n) const;
    Poly poly(long n) const;
    /// P_0..P_{n_max}
    std::vector<Poly> polys(long n_max) const;

private:
    explicit OrderingFamily(Kind k) : m_kind(k) {}

    Kind m_kind;
    long m_power = 1;
    std::vector<PyramidRow> m_rows;
};

inline PyramidRow ordering_row(const OrderingFamily &f, long n)
{
    return f.row(n);
}

/// Classical polynomial families. Legendre and Hermite are monic; Chebyshev T and U keep
/// their standard normalization.
enum class PolyFamily { legendre, hermite, chebyshev_t, chebyshev_u, monomial };

std::optional<PolyFamily> poly_family_from_name(std::string_view name);
std::string to_string(PolyFamily f);

Poly family_poly(PolyFamily f, long n);
/// poly_to_pyramid(family_poly(f, n), n)
PyramidRow classical_pyramid(PolyFamily f, long n);

/// h_n = h_{n-1} + 2(n-1) h_{n-2}, h_0 = h_1 = 1.
BigInt hermite_h(long n);
/// a_{n,n} of the Legendre pyramid from n!/(2^n (2n)!) sum_j 4^j C(n,j) C(2n-2j, n).
BigRat legendre_outer_closed_form(long n);

/// Outer-diagonal closed forms for one family up to n_max (monomial is not covered).
CheckReport outer_diagonal_identities(PolyFamily f, long n_max);
/// Chebyshev T/U, Hermite and Legendre together.
CheckReport outer_diagonal_identities(long n_max);

/// Weyl exponential generating function exp(2z arctan t)/sqrt(1+t^2) against
/// sum (2t)^n/n! P_n(z), and the Hermite outer diagonal against exp(t/2 + t^2/4).
CheckReport egf_checks(long order);

} // namespace pyramid

#endif
