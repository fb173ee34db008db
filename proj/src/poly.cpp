#include <pyramid/exact/poly.hpp>

#include <algorithm>

namespace pyramid
{

Poly::Poly(std::vector<GaussRat> coeffs) : m_coeffs(std::move(coeffs))
{
    trim();
}

Poly::Poly(const GaussRat &c)
{
    if (!c.is_zero()) {
        m_coeffs.push_back(c);
    }
}

Poly Poly::monomial(const GaussRat &c, std::size_t k)
{
    std::vector<GaussRat> v(k + 1);
    v[k] = c;
    return Poly(std::move(v));
}

void Poly::trim()
{
    while (!m_coeffs.empty() && m_coeffs.back().is_zero()) {
        m_coeffs.pop_back();
    }
}

GaussRat Poly::coeff(std::size_t r) const
{
    return r < m_coeffs.size() ? m_coeffs[r] : GaussRat();
}

GaussRat Poly::leading() const
{
    return m_coeffs.empty() ? GaussRat() : m_coeffs.back();
}

bool Poly::is_monic() const
{
    return !m_coeffs.empty() && m_coeffs.back() == GaussRat(1);
}

bool Poly::has_real_coefficients() const
{
    return std::all_of(m_coeffs.begin(), m_coeffs.end(), [](const GaussRat &c) { return c.is_real(); });
}

bool Poly::has_parity(long parity) const
{
    for (std::size_t r = 0; r < m_coeffs.size(); ++r) {
        if (!m_coeffs[r].is_zero() && ((static_cast<long>(r) - parity) % 2 != 0)) {
            return false;
        }
    }
    return true;
}

GaussRat Poly::evaluate(const GaussRat &w) const
{
    GaussRat acc;
    for (auto it = m_coeffs.rbegin(); it != m_coeffs.rend(); ++it) {
        acc *= w;
        acc += *it;
    }
    return acc;
}

Poly Poly::compose_linear(const GaussRat &a, const GaussRat &b) const
{
    return compose(Poly({a, b}));
}

Poly Poly::compose(const Poly &inner) const
{
    Poly acc;
    for (auto it = m_coeffs.rbegin(); it != m_coeffs.rend(); ++it) {
        acc *= inner;
        acc += Poly(*it);
    }
    return acc;
}

Poly Poly::conj() const
{
    std::vector<GaussRat> v;
    v.reserve(m_coeffs.size());
    for (const auto &c : m_coeffs) {
        v.push_back(c.conj());
    }
    return Poly(std::move(v));
}

namespace
{

std::string power(const std::string &var, std::size_t r)
{
    if (r == 0) {
        return "";
    }
    return r == 1 ? var : var + "^" + std::to_string(r);
}

} // namespace

std::string Poly::to_string(const std::string &var) const
{
    if (m_coeffs.empty()) {
        return "0";
    }
    std::string out;
    for (std::size_t idx = m_coeffs.size(); idx-- > 0;) {
        const GaussRat &c = m_coeffs[idx];
        if (c.is_zero()) {
            continue;
        }
        // Pull a sign out of purely real or purely imaginary coefficients.
        bool negative = false;
        GaussRat mag = c;
        const bool simple = c.re().is_zero() || c.im().is_zero();
        if (simple && (c.re().sign() < 0 || c.im().sign() < 0)) {
            negative = true;
            mag = -c;
        }
        std::string body;
        const std::string p = power(var, idx);
        if (!simple) {
            body = "(" + c.to_string() + ")";
        } else if (mag == GaussRat(1) && idx > 0) {
            body = "";
        } else {
            body = mag.to_string();
        }
        if (!p.empty()) {
            body = body.empty() ? p : body + " " + p;
        }
        if (out.empty()) {
            out = (negative ? "-" : "") + body;
        } else {
            out += negative ? " - " : " + ";
            out += body;
        }
    }
    return out;
}

Poly &Poly::operator+=(const Poly &o)
{
    if (o.m_coeffs.size() > m_coeffs.size()) {
        m_coeffs.resize(o.m_coeffs.size());
    }
    for (std::size_t r = 0; r < o.m_coeffs.size(); ++r) {
        m_coeffs[r] += o.m_coeffs[r];
    }
    trim();
    return *this;
}

Poly &Poly::operator-=(const Poly &o)
{
    if (o.m_coeffs.size() > m_coeffs.size()) {
        m_coeffs.resize(o.m_coeffs.size());
    }
    for (std::size_t r = 0; r < o.m_coeffs.size(); ++r) {
        m_coeffs[r] -= o.m_coeffs[r];
    }
    trim();
    return *this;
}

Poly operator*(const Poly &a, const Poly &b)
{
    if (a.is_zero() || b.is_zero()) {
        return Poly();
    }
    std::vector<GaussRat> v(a.m_coeffs.size() + b.m_coeffs.size() - 1);
    for (std::size_t i = 0; i < a.m_coeffs.size(); ++i) {
        if (a.m_coeffs[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < b.m_coeffs.size(); ++j) {
            v[i + j] += a.m_coeffs[i] * b.m_coeffs[j];
        }
    }
    return Poly(std::move(v));
}

Poly &Poly::operator*=(const Poly &o)
{
    *this = *this * o;
    return *this;
}

Poly &Poly::operator*=(const GaussRat &c)
{
    for (auto &x : m_coeffs) {
        x *= c;
    }
    trim();
    return *this;
}

Poly &Poly::operator/=(const GaussRat &c)
{
    const GaussRat inv = c.inverse();
    return *this *= inv;
}

Poly Poly::operator-() const
{
    Poly r(*this);
    for (auto &x : r.m_coeffs) {
        x = -x;
    }
    return r;
}

} // namespace pyramid
