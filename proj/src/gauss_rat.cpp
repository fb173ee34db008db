#include <pyramid/exact/gauss_rat.hpp>

#include <cctype>

#include <pyramid/errors.hpp>

namespace pyramid
{

namespace
{

void skip_spaces(std::string_view text, std::size_t &pos)
{
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
        ++pos;
    }
}

bool at_digit(std::string_view text, std::size_t pos)
{
    return pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]));
}

// Unsigned magnitude `a` or `a/b`.
BigRat parse_magnitude(std::string_view text, std::size_t &pos)
{
    const std::size_t start = pos;
    while (at_digit(text, pos)) {
        ++pos;
    }
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        if (!at_digit(text, pos)) {
            throw ParseError("expected denominator", pos);
        }
        while (at_digit(text, pos)) {
            ++pos;
        }
    }
    try {
        return BigRat::parse(text.substr(start, pos - start));
    } catch (const ParseError &e) {
        throw ParseError("malformed rational", start + e.position());
    }
}

// One signed component: a real part, or an imaginary part ending in `i`.
// Returns true when the component was imaginary.
bool parse_component(std::string_view text, std::size_t &pos, BigRat &value, bool require_sign)
{
    skip_spaces(text, pos);
    bool negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        negative = text[pos] == '-';
        ++pos;
        skip_spaces(text, pos);
    } else if (require_sign) {
        throw ParseError("expected sign", pos);
    }
    BigRat mag(1);
    bool had_digits = false;
    if (at_digit(text, pos)) {
        mag = parse_magnitude(text, pos);
        had_digits = true;
    }
    std::size_t look = pos;
    skip_spaces(text, look);
    bool imaginary = false;
    if (look < text.size() && text[look] == 'i') {
        imaginary = true;
        pos = look + 1;
    } else if (!had_digits) {
        throw ParseError("expected number", pos);
    }
    value = negative ? -mag : mag;
    return imaginary;
}

} // namespace

GaussRat GaussRat::parse_prefix(std::string_view text, std::size_t &pos)
{
    BigRat first;
    if (parse_component(text, pos, first, false)) {
        return GaussRat(BigRat(0), first);
    }
    // Optional imaginary continuation `+c/d i`.
    std::size_t look = pos;
    skip_spaces(text, look);
    if (look < text.size() && (text[look] == '+' || text[look] == '-')) {
        std::size_t trial = look;
        BigRat second;
        try {
            if (parse_component(text, trial, second, true)) {
                pos = trial;
                return GaussRat(first, second);
            }
        } catch (const ParseError &) {
        }
    }
    return GaussRat(first);
}

GaussRat GaussRat::parse_component_prefix(std::string_view text, std::size_t &pos)
{
    BigRat value;
    if (parse_component(text, pos, value, false)) {
        return GaussRat(BigRat(0), value);
    }
    return GaussRat(value);
}

GaussRat GaussRat::parse(std::string_view text)
{
    std::size_t pos = 0;
    GaussRat v = parse_prefix(text, pos);
    skip_spaces(text, pos);
    if (pos != text.size()) {
        throw ParseError("trailing characters after number", pos);
    }
    return v;
}

GaussRat GaussRat::inverse() const
{
    const BigRat n = norm();
    if (n.is_zero()) {
        throw DivisionByZero();
    }
    return GaussRat(m_re / n, -m_im / n);
}

GaussRat GaussRat::pow(long e) const
{
    if (e < 0) {
        return inverse().pow(-e);
    }
    GaussRat result(1), base(*this);
    while (e > 0) {
        if (e & 1) {
            result *= base;
        }
        e >>= 1;
        if (e > 0) {
            base *= base;
        }
    }
    return result;
}

std::string GaussRat::to_string() const
{
    if (m_im.is_zero()) {
        return m_re.to_string();
    }
    std::string im = m_im.to_string() + " i";
    if (m_re.is_zero()) {
        return im;
    }
    return m_re.to_string() + (m_im.sign() > 0 ? "+" : "") + im;
}

GaussRat &GaussRat::operator+=(const GaussRat &o)
{
    m_re += o.m_re;
    m_im += o.m_im;
    return *this;
}

GaussRat &GaussRat::operator-=(const GaussRat &o)
{
    m_re -= o.m_re;
    m_im -= o.m_im;
    return *this;
}

GaussRat &GaussRat::operator*=(const GaussRat &o)
{
    if (o.m_im.is_zero()) {
        m_re *= o.m_re;
        m_im *= o.m_re;
        return *this;
    }
    BigRat re = m_re * o.m_re - m_im * o.m_im;
    BigRat im = m_re * o.m_im + m_im * o.m_re;
    m_re = std::move(re);
    m_im = std::move(im);
    return *this;
}

GaussRat &GaussRat::operator/=(const GaussRat &o)
{
    if (o.m_im.is_zero()) {
        m_re /= o.m_re;
        m_im /= o.m_re;
        return *this;
    }
    return *this *= o.inverse();
}

GaussRat i_pow(long e)
{
    switch (((e % 4) + 4) % 4) {
        case 0:
            return GaussRat(1);
        case 1:
            return GaussRat::i();
        case 2:
            return GaussRat(-1);
        default:
            return -GaussRat::i();
    }
}

} // namespace pyramid
