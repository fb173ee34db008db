#ifndef PYRAMID_EXACT_GAUSS_RAT_HPP
#define PYRAMID_EXACT_GAUSS_RAT_HPP

#include <cstddef>
#include <string>
#include <string_view>

#include <pyramid/exact/bigrat.hpp>

namespace pyramid
{

/// Element of Q(i): two independent canonical rationals.
class GaussRat
{
public:
    GaussRat() = default;
    GaussRat(long n) : m_re(n) {}
    GaussRat(const BigInt &n) : m_re(n) {}
    GaussRat(BigRat re) : m_re(std::move(re)) {}
    GaussRat(BigRat re, BigRat im) : m_re(std::move(re)), m_im(std::move(im)) {}

    static GaussRat i()
    {
        return GaussRat(0, 1);
    }

    /// Parses the textual form `a/b`, `c/d i`, `a/b+c/d i` (signs optional, `i` alone allowed).
    static GaussRat parse(std::string_view text);
    /// Parses a literal starting at `pos`, advancing `pos` past it. Whitespace between the
    /// imaginary magnitude and `i` is accepted.
    static GaussRat parse_prefix(std::string_view text, std::size_t &pos);
    /// Like parse_prefix, but reads a single real or imaginary component only.
    static GaussRat parse_component_prefix(std::string_view text, std::size_t &pos);

    const BigRat &re() const
    {
        return m_re;
    }
    const BigRat &im() const
    {
        return m_im;
    }

    bool is_zero() const
    {
        return m_re.is_zero() && m_im.is_zero();
    }
    bool is_real() const
    {
        return m_im.is_zero();
    }

    GaussRat conj() const
    {
        return GaussRat(m_re, -m_im);
    }
    /// |w|^2
    BigRat norm() const
    {
        return m_re * m_re + m_im * m_im;
    }
    GaussRat inverse() const;
    GaussRat pow(long e) const;

    std::string to_string() const;

    GaussRat &operator+=(const GaussRat &o);
    GaussRat &operator-=(const GaussRat &o);
    GaussRat &operator*=(const GaussRat &o);
    GaussRat &operator/=(const GaussRat &o);

    friend GaussRat operator+(GaussRat a, const GaussRat &b)
    {
        return a += b;
    }
    friend GaussRat operator-(GaussRat a, const GaussRat &b)
    {
        return a -= b;
    }
    friend GaussRat operator*(GaussRat a, const GaussRat &b)
    {
        return a *= b;
    }
    friend GaussRat operator/(GaussRat a, const GaussRat &b)
    {
        return a /= b;
    }
    GaussRat operator-() const
    {
        return GaussRat(-m_re, -m_im);
    }

    friend bool operator==(const GaussRat &, const GaussRat &) = default;

private:
    BigRat m_re;
    BigRat m_im;
};

/// i^e for any integer e.
GaussRat i_pow(long e);

} // namespace pyramid

#endif
