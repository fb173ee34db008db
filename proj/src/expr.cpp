#include <pyramid/weyl/expr.hpp>

#include <cctype>
#include <string>

#include <pyramid/errors.hpp>

namespace pyramid::weyl
{

namespace
{

class Parser
{
public:
    Parser(std::string_view text, const Alphabet &alphabet) : m_text(text), m_alphabet(alphabet) {}

    WeylExpr parse()
    {
        WeylExpr result;
        skip();
        if (at_end()) {
            throw ParseError("empty expression", m_pos);
        }
        bool negative = false;
        if (peek() == '+' || peek() == '-') {
            negative = peek() == '-';
            ++m_pos;
        }
        for (;;) {
            WeylExpr t = term();
            result += negative ? t * GaussRat(-1) : t;
            skip();
            if (at_end()) {
                break;
            }
            if (peek() != '+' && peek() != '-') {
                throw ParseError(std::string("unexpected '") + peek() + "'", m_pos);
            }
            negative = peek() == '-';
            ++m_pos;
        }
        return result;
    }

private:
    bool at_end() const
    {
        return m_pos >= m_text.size();
    }
    char peek() const
    {
        return m_text[m_pos];
    }
    void skip()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) {
            ++m_pos;
        }
    }
    bool is_letter(char c) const
    {
        return c == m_alphabet.first || c == m_alphabet.second;
    }
    bool starts_scalar(char c) const
    {
        return std::isdigit(static_cast<unsigned char>(c)) || c == 'i' || c == '(';
    }

    GaussRat scalar()
    {
        if (peek() == '(') {
            ++m_pos;
            skip();
            GaussRat v = GaussRat::parse_prefix(m_text, m_pos);
            skip();
            if (at_end() || peek() != ')') {
                throw ParseError("expected ')'", m_pos);
            }
            ++m_pos;
            return v;
        }
        return GaussRat::parse_component_prefix(m_text, m_pos);
    }

    Word factor()
    {
        const char letter = peek();
        ++m_pos;
        skip();
        std::size_t exponent = 1;
        if (!at_end() && peek() == '^') {
            ++m_pos;
            skip();
            const std::size_t start = m_pos;
            while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
                ++m_pos;
            }
            if (m_pos == start) {
                throw ParseError("expected exponent", m_pos);
            }
            exponent = std::stoul(std::string(m_text.substr(start, m_pos - start)));
        }
        return Word::power(letter, exponent);
    }

    WeylExpr term()
    {
        skip();
        if (at_end()) {
            throw ParseError("expected term", m_pos);
        }
        GaussRat coeff(1);
        bool have_scalar = false;
        if (starts_scalar(peek())) {
            coeff = scalar();
            have_scalar = true;
        }
        Word word;
        bool have_factor = false;
        for (;;) {
            skip();
            if (at_end()) {
                break;
            }
            std::size_t save = m_pos;
            if (peek() == '*') {
                ++m_pos;
                skip();
                if (at_end() || !is_letter(peek())) {
                    throw ParseError("expected generator after '*'", m_pos);
                }
            }
            if (is_letter(peek())) {
                word = word * factor();
                have_factor = true;
                continue;
            }
            m_pos = save;
            if (peek() == '+' || peek() == '-') {
                break;
            }
            if (std::isalpha(static_cast<unsigned char>(peek()))) {
                throw ParseError(std::string("unknown symbol '") + peek() + "'", m_pos);
            }
            throw ParseError(std::string("unexpected '") + peek() + "'", m_pos);
        }
        if (!have_scalar && !have_factor) {
            throw ParseError("expected term", m_pos);
        }
        return WeylExpr(word, coeff);
    }

    std::string_view m_text;
    const Alphabet &m_alphabet;
    std::size_t m_pos = 0;
};

} // namespace

WeylExpr parse_expr(std::string_view text, const Alphabet &alphabet)
{
    return Parser(text, alphabet).parse();
}

} // namespace pyramid::weyl
