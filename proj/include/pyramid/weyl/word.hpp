#ifndef PYRAMID_WEYL_WORD_HPP
#define PYRAMID_WEYL_WORD_HPP

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>

#include <pyramid/exact/gauss_rat.hpp>

namespace pyramid::weyl
{

/// Two generators and the relation `second * first = first * second + constant`.
/**
 * Normal order puts every `first` to the left of every `second`. For the
 * Heisenberg-Weyl algebra (qp - pq = i) first = q, second = p and pq = qp - i.
 * For A1 (RD - DR = 1) first = R, second = D and DR = RD - 1.
 */
struct Alphabet {
    char first;
    char second;
    GaussRat constant;
};

const Alphabet &heisenberg();
const Alphabet &weyl_a1();

/// A word over the letters of an alphabet, stored as its letter sequence.
class Word
{
public:
    Word() = default;
    explicit Word(std::string letters) : m_letters(std::move(letters)) {}

    /// letter^exponent
    static Word power(char letter, std::size_t exponent)
    {
        return Word(std::string(exponent, letter));
    }

    const std::string &letters() const
    {
        return m_letters;
    }
    std::size_t size() const
    {
        return m_letters.size();
    }
    bool empty() const
    {
        return m_letters.empty();
    }
    std::size_t count(char letter) const;

    /// Same number of p's and q's.
    bool balanced() const
    {
        return count('p') == count('q');
    }
    /// Number of p's.
    std::size_t weight() const
    {
        return count('p');
    }
    bool is_palindrome() const;
    Word reversed() const;

    /// Compact form with exponents, e.g. `q p^2 q`; the empty word prints as `1`.
    std::string to_string() const;

    friend Word operator*(const Word &a, const Word &b)
    {
        return Word(a.m_letters + b.m_letters);
    }
    friend auto operator<=>(const Word &, const Word &) = default;

private:
    std::string m_letters;
};

inline bool is_palindrome(const Word &w)
{
    return w.is_palindrome();
}

/// Finite linear combination of words; zero coefficients are never stored.
class WeylExpr
{
public:
    WeylExpr() = default;
    WeylExpr(const Word &w, const GaussRat &c = GaussRat(1))
    {
        add(w, c);
    }

    void add(const Word &w, const GaussRat &c);
    const std::map<Word, GaussRat> &terms() const
    {
        return m_terms;
    }
    bool is_zero() const
    {
        return m_terms.empty();
    }

    /// Reverses each word and conjugates each coefficient.
    WeylExpr adjoint() const;

    WeylExpr &operator+=(const WeylExpr &o);
    WeylExpr &operator-=(const WeylExpr &o);
    WeylExpr &operator*=(const GaussRat &c);
    friend WeylExpr operator+(WeylExpr a, const WeylExpr &b)
    {
        return a += b;
    }
    friend WeylExpr operator-(WeylExpr a, const WeylExpr &b)
    {
        return a -= b;
    }
    friend WeylExpr operator*(WeylExpr a, const GaussRat &c)
    {
        return a *= c;
    }
    /// Product in the free algebra (concatenation, bilinear).
    friend WeylExpr operator*(const WeylExpr &a, const WeylExpr &b);

    std::string to_string() const;

    friend bool operator==(const WeylExpr &, const WeylExpr &) = default;

private:
    std::map<Word, GaussRat> m_terms;
};

/// Element of the quotient algebra in normal order: (j, k) -> coefficient of first^j second^k.
class NormalForm
{
public:
    using Key = std::pair<std::size_t, std::size_t>;

    void add(Key key, const GaussRat &c);
    const std::map<Key, GaussRat> &terms() const
    {
        return m_terms;
    }
    GaussRat coeff(Key key) const;
    bool is_zero() const
    {
        return m_terms.empty();
    }

    /// Terms by decreasing total degree, e.g. `q^2 p^2 - 2 i q p`.
    std::string to_string(const Alphabet &alphabet) const;

    friend bool operator==(const NormalForm &, const NormalForm &) = default;

private:
    std::map<Key, GaussRat> m_terms;
};

} // namespace pyramid::weyl

#endif
