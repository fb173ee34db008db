#ifndef PYRAMID_EXACT_TRUNC_SERIES_HPP
#define PYRAMID_EXACT_TRUNC_SERIES_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include <pyramid/errors.hpp>
#include <pyramid/exact/bigrat.hpp>
#include <pyramid/exact/gauss_rat.hpp>
#include <pyramid/exact/poly.hpp>

namespace pyramid
{

namespace detail
{

inline BigRat scale(const BigRat &c, const BigRat &s)
{
    return c * s;
}
inline GaussRat scale(const GaussRat &c, const BigRat &s)
{
    return c * GaussRat(s);
}
inline Poly scale(const Poly &c, const BigRat &s)
{
    return c * GaussRat(s);
}

} // namespace detail

/// Truncated power series sum_{k<=N} c_k t^k with exact coefficients.
/**
 * C is BigRat, GaussRat or Poly (a series whose coefficients are polynomials in a second
 * variable). The order N is fixed at construction; combining series of different order
 * throws PreconditionError.
 */
template <typename C>
class TruncSeries
{
public:
    using coeff_type = C;

    explicit TruncSeries(std::size_t order) : m_coeffs(order + 1, C(0)) {}
    TruncSeries(std::size_t order, std::vector<C> coeffs) : m_coeffs(std::move(coeffs))
    {
        m_coeffs.resize(order + 1, C(0));
    }

    static TruncSeries constant(std::size_t order, const C &c)
    {
        TruncSeries s(order);
        s.m_coeffs[0] = c;
        return s;
    }
    /// The series variable t itself.
    static TruncSeries variable(std::size_t order)
    {
        TruncSeries s(order);
        if (order >= 1) {
            s.m_coeffs[1] = C(1);
        }
        return s;
    }

    std::size_t order() const
    {
        return m_coeffs.size() - 1;
    }
    const C &operator[](std::size_t k) const
    {
        return m_coeffs.at(k);
    }
    C &operator[](std::size_t k)
    {
        return m_coeffs.at(k);
    }
    const std::vector<C> &coeffs() const
    {
        return m_coeffs;
    }

    TruncSeries &operator+=(const TruncSeries &o)
    {
        check_order(o);
        for (std::size_t k = 0; k < m_coeffs.size(); ++k) {
            m_coeffs[k] += o.m_coeffs[k];
        }
        return *this;
    }
    TruncSeries &operator-=(const TruncSeries &o)
    {
        check_order(o);
        for (std::size_t k = 0; k < m_coeffs.size(); ++k) {
            m_coeffs[k] -= o.m_coeffs[k];
        }
        return *this;
    }
    friend TruncSeries operator+(TruncSeries a, const TruncSeries &b)
    {
        return a += b;
    }
    friend TruncSeries operator-(TruncSeries a, const TruncSeries &b)
    {
        return a -= b;
    }
    TruncSeries operator-() const
    {
        TruncSeries r(order());
        for (std::size_t k = 0; k < m_coeffs.size(); ++k) {
            r.m_coeffs[k] = -m_coeffs[k];
        }
        return r;
    }

    friend TruncSeries operator*(const TruncSeries &a, const TruncSeries &b)
    {
        a.check_order(b);
        const std::size_t n = a.order();
        TruncSeries r(n);
        for (std::size_t i = 0; i <= n; ++i) {
            if (a.m_coeffs[i] == C(0)) {
                continue;
            }
            for (std::size_t j = 0; i + j <= n; ++j) {
                r.m_coeffs[i + j] += a.m_coeffs[i] * b.m_coeffs[j];
            }
        }
        return r;
    }
    TruncSeries &operator*=(const TruncSeries &o)
    {
        *this = *this * o;
        return *this;
    }

    /// Coefficient-wise multiplication by a value of the coefficient type.
    TruncSeries scaled(const C &c) const
    {
        TruncSeries r(*this);
        for (auto &x : r.m_coeffs) {
            x = x * c;
        }
        return r;
    }

    friend bool operator==(const TruncSeries &, const TruncSeries &) = default;

private:
    void check_order(const TruncSeries &o) const
    {
        if (o.order() != order()) {
            throw PreconditionError("truncated series of different orders cannot be combined");
        }
    }

    std::vector<C> m_coeffs;
};

/// exp(u); u must have zero constant term.
template <typename C>
TruncSeries<C> exp(const TruncSeries<C> &u)
{
    if (!(u[0] == C(0))) {
        throw PreconditionError("exp requires a zero constant term");
    }
    const std::size_t n = u.order();
    TruncSeries<C> y = TruncSeries<C>::constant(n, C(1));
    // y' = u' y  =>  k y_k = sum_{j=1}^k j u_j y_{k-j}
    for (std::size_t k = 1; k <= n; ++k) {
        C acc(0);
        for (std::size_t j = 1; j <= k; ++j) {
            acc += detail::scale(u[j] * y[k - j], BigRat(static_cast<long>(j)));
        }
        y[k] = detail::scale(acc, BigRat(1, static_cast<long>(k)));
    }
    return y;
}

/// 1/f; f must have constant term 1.
template <typename C>
TruncSeries<C> reciprocal(const TruncSeries<C> &f)
{
    if (!(f[0] == C(1))) {
        throw PreconditionError("reciprocal requires constant term 1");
    }
    const std::size_t n = f.order();
    TruncSeries<C> y = TruncSeries<C>::constant(n, C(1));
    for (std::size_t k = 1; k <= n; ++k) {
        C acc(0);
        for (std::size_t j = 1; j <= k; ++j) {
            acc -= f[j] * y[k - j];
        }
        y[k] = acc;
    }
    return y;
}

/// f^{-1/2}; f must have constant term 1.
template <typename C>
TruncSeries<C> sqrt_reciprocal(const TruncSeries<C> &f)
{
    if (!(f[0] == C(1))) {
        throw PreconditionError("sqrt_reciprocal requires constant term 1");
    }
    const std::size_t n = f.order();
    TruncSeries<C> y = TruncSeries<C>::constant(n, C(1));
    // 2 f y' = -f' y  =>  y_k = -(1/k) sum_{j=1}^k (k - j/2) f_j y_{k-j}
    for (std::size_t k = 1; k <= n; ++k) {
        C acc(0);
        for (std::size_t j = 1; j <= k; ++j) {
            const BigRat w = BigRat(static_cast<long>(k)) - BigRat(static_cast<long>(j), 2);
            acc += detail::scale(f[j] * y[k - j], w);
        }
        y[k] = detail::scale(acc, BigRat(-1, static_cast<long>(k)));
    }
    return y;
}

/// outer(inner(t)); inner must have zero constant term.
template <typename C>
TruncSeries<C> compose(const TruncSeries<C> &outer, const TruncSeries<C> &inner)
{
    if (outer.order() != inner.order()) {
        throw PreconditionError("truncated series of different orders cannot be combined");
    }
    if (!(inner[0] == C(0))) {
        throw PreconditionError("compose requires an inner series with zero constant term");
    }
    const std::size_t n = outer.order();
    TruncSeries<C> acc(n);
    for (std::size_t k = n + 1; k-- > 0;) {
        acc = acc * inner;
        acc[0] += outer[k];
    }
    return acc;
}

/// arctan(t) = sum_k (-1)^k t^{2k+1} / (2k+1), generated term by term.
template <typename C>
TruncSeries<C> arctan_series(std::size_t order)
{
    TruncSeries<C> s(order);
    BigRat sign(1);
    for (std::size_t k = 1; k <= order; k += 2) {
        s[k] = C(sign / BigRat(static_cast<long>(k)));
        sign = -sign;
    }
    return s;
}

/// Lifts a series to another coefficient type via an explicit conversion.
template <typename To, typename From>
TruncSeries<To> lift(const TruncSeries<From> &s)
{
    TruncSeries<To> r(s.order());
    for (std::size_t k = 0; k <= s.order(); ++k) {
        r[k] = To(s[k]);
    }
    return r;
}

} // namespace pyramid

#endif
