#include <pyramid/exact/bigrat.hpp>

#include <cctype>

#include <pyramid/errors.hpp>

namespace pyramid
{

BigRat::BigRat(long num, long den) : BigRat(BigInt(num), BigInt(den)) {}

BigRat::BigRat(const BigInt &num, const BigInt &den)
{
    if (den == 0) {
        throw DivisionByZero();
    }
    m_value = mpq_class(num, den);
    m_value.canonicalize();
}

namespace
{

BigInt parse_digits(std::string_view text, std::size_t &pos)
{
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        ++pos;
    }
    if (pos == start) {
        throw ParseError("expected digits", pos);
    }
    return BigInt(std::string(text.substr(start, pos - start)));
}

} // namespace

BigRat BigRat::parse(std::string_view text)
{
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        negative = text[pos] == '-';
        ++pos;
    }
    BigInt num = parse_digits(text, pos);
    BigInt den = 1;
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        den = parse_digits(text, pos);
        if (den == 0) {
            throw ParseError("zero denominator", pos - 1);
        }
    }
    if (pos != text.size()) {
        throw ParseError("unexpected character in rational", pos);
    }
    return BigRat(negative ? BigInt(-num) : num, den);
}

BigRat BigRat::abs() const
{
    BigRat r;
    r.m_value = ::abs(m_value);
    return r;
}

BigRat BigRat::inverse() const
{
    if (is_zero()) {
        throw DivisionByZero();
    }
    return BigRat(den(), num());
}

BigRat BigRat::pow(long e) const
{
    if (e < 0) {
        return inverse().pow(-e);
    }
    BigInt n, d;
    mpz_pow_ui(n.get_mpz_t(), m_value.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), m_value.get_den_mpz_t(), static_cast<unsigned long>(e));
    return BigRat(n, d);
}

std::string BigRat::to_string() const
{
    if (is_integer()) {
        return m_value.get_num().get_str();
    }
    return m_value.get_num().get_str() + "/" + m_value.get_den().get_str();
}

BigRat &BigRat::operator+=(const BigRat &o)
{
    m_value += o.m_value;
    return *this;
}

BigRat &BigRat::operator-=(const BigRat &o)
{
    m_value -= o.m_value;
    return *this;
}

BigRat &BigRat::operator*=(const BigRat &o)
{
    m_value *= o.m_value;
    return *this;
}

BigRat &BigRat::operator/=(const BigRat &o)
{
    if (o.is_zero()) {
        throw DivisionByZero();
    }
    m_value /= o.m_value;
    return *this;
}

BigRat BigRat::operator-() const
{
    BigRat r;
    r.m_value = -m_value;
    return r;
}

} // namespace pyramid
