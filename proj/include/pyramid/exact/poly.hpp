#ifndef PYRAMID_EXACT_POLY_HPP
#define PYRAMID_EXACT_POLY_HPP

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <pyramid/exact/gauss_rat.hpp>

namespace pyramid
{

/// Dense univariate polynomial over Q(i), coefficients in ascending degree.
/**
 * The coefficient vector never ends in a zero; the zero polynomial has no coefficients.
 * Used both for the P_n(z) of a pyramid and, in generating-function checks, for
 * polynomials in an auxiliary variable.
 */
class Poly
{
public:
    Poly() = default;
    Poly(std::vector<GaussRat> coeffs);
    Poly(std::initializer_list<GaussRat> coeffs) : Poly(std::vector<GaussRat>(coeffs)) {}
    Poly(const GaussRat &c);
    Poly(long c) : Poly(GaussRat(c)) {}

    /// The indeterminate itself.
    static Poly variable()
    {
        return Poly({GaussRat(0), GaussRat(1)});
    }
    /// c * var^k
    static Poly monomial(const GaussRat &c, std::size_t k);

    bool is_zero() const
    {
        return m_coeffs.empty();
    }
    /// -1 for the zero polynomial.
    long degree() const
    {
        return static_cast<long>(m_coeffs.size()) - 1;
    }
    /// Coefficient of var^r; zero beyond the degree.
    GaussRat coeff(std::size_t r) const;
    const std::vector<GaussRat> &coeffs() const
    {
        return m_coeffs;
    }
    GaussRat leading() const;

    bool is_monic() const;
    bool has_real_coefficients() const;
    /// True when only powers with the parity of `parity` appear.
    bool has_parity(long parity) const;

    GaussRat evaluate(const GaussRat &w) const;
    /// p(a + b * var)
    Poly compose_linear(const GaussRat &a, const GaussRat &b) const;
    /// p(q(var))
    Poly compose(const Poly &inner) const;
    Poly conj() const;

    /// Human-readable form such as `z^2 - 1/4`.
    std::string to_string(const std::string &var = "z") const;

    Poly &operator+=(const Poly &o);
    Poly &operator-=(const Poly &o);
    Poly &operator*=(const Poly &o);
    Poly &operator*=(const GaussRat &c);
    /// Scalar division only.
    Poly &operator/=(const GaussRat &c);

    friend Poly operator+(Poly a, const Poly &b)
    {
        return a += b;
    }
    friend Poly operator-(Poly a, const Poly &b)
    {
        return a -= b;
    }
    friend Poly operator*(const Poly &a, const Poly &b);
    friend Poly operator*(Poly a, const GaussRat &c)
    {
        return a *= c;
    }
    friend Poly operator*(const GaussRat &c, Poly a)
    {
        return a *= c;
    }
    friend Poly operator/(Poly a, const GaussRat &c)
    {
        return a /= c;
    }
    Poly operator-() const;

    friend bool operator==(const Poly &, const Poly &) = default;

private:
    void trim();

    std::vector<GaussRat> m_coeffs;
};

} // namespace pyramid

#endif
