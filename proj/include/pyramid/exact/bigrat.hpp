#ifndef PYRAMID_EXACT_BIGRAT_HPP
#define PYRAMID_EXACT_BIGRAT_HPP

#include <compare>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace pyramid
{

using BigInt = mpz_class;

/// Arbitrary precision rational number, always kept in lowest terms with a positive denominator.
/**
 * Thin value wrapper around GMP's mpq_class. Every constructor and operation leaves the
 * value canonical, so structural equality is numeric equality.
 */
class BigRat
{
public:
    BigRat() = default;
    BigRat(long n) : m_value(n) {}
    BigRat(const BigInt &n) : m_value(n) {}
    BigRat(long num, long den);
    BigRat(const BigInt &num, const BigInt &den);

    /// Parses `a` or `a/b` with an optional leading sign. Throws ParseError.
    static BigRat parse(std::string_view text);

    BigInt num() const
    {
        return m_value.get_num();
    }
    BigInt den() const
    {
        return m_value.get_den();
    }
    int sign() const
    {
        return sgn(m_value);
    }
    bool is_zero() const
    {
        return sign() == 0;
    }
    bool is_integer() const
    {
        return m_value.get_den() == 1;
    }

    BigRat abs() const;
    BigRat inverse() const;
    BigRat pow(long e) const;

    /// `a` when the denominator is 1, otherwise `a/b`.
    std::string to_string() const;

    BigRat &operator+=(const BigRat &o);
    BigRat &operator-=(const BigRat &o);
    BigRat &operator*=(const BigRat &o);
    BigRat &operator/=(const BigRat &o);

    friend BigRat operator+(BigRat a, const BigRat &b)
    {
        return a += b;
    }
    friend BigRat operator-(BigRat a, const BigRat &b)
    {
        return a -= b;
    }
    friend BigRat operator*(BigRat a, const BigRat &b)
    {
        return a *= b;
    }
    friend BigRat operator/(BigRat a, const BigRat &b)
    {
        return a /= b;
    }
    BigRat operator-() const;

    friend bool operator==(const BigRat &a, const BigRat &b)
    {
        return cmp(a.m_value, b.m_value) == 0;
    }
    friend std::strong_ordering operator<=>(const BigRat &a, const BigRat &b)
    {
        return cmp(a.m_value, b.m_value) <=> 0;
    }

    const mpq_class &gmp() const
    {
        return m_value;
    }

private:
    mpq_class m_value;
};

} // namespace pyramid

#endif
