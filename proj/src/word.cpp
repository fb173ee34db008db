#include <pyramid/weyl/word.hpp>

#include <algorithm>
#include <vector>

namespace pyramid::weyl
{

const Alphabet &heisenberg()
{
    static const Alphabet a{'q', 'p', -GaussRat::i()};
    return a;
}

const Alphabet &weyl_a1()
{
    static const Alphabet a{'R', 'D', GaussRat(-1)};
    return a;
}

std::size_t Word::count(char letter) const
{
    return static_cast<std::size_t>(std::count(m_letters.begin(), m_letters.end(), letter));
}

bool Word::is_palindrome() const
{
    return std::equal(m_letters.begin(), m_letters.begin() + static_cast<long>(m_letters.size() / 2),
                      m_letters.rbegin());
}

Word Word::reversed() const
{
    return Word(std::string(m_letters.rbegin(), m_letters.rend()));
}

std::string Word::to_string() const
{
    if (m_letters.empty()) {
        return "1";
    }
    std::string out;
    std::size_t i = 0;
    while (i < m_letters.size()) {
        std::size_t j = i;
        while (j < m_letters.size() && m_letters[j] == m_letters[i]) {
            ++j;
        }
        if (!out.empty()) {
            out += ' ';
        }
        out += m_letters[i];
        if (j - i > 1) {
            out += '^' + std::to_string(j - i);
        }
        i = j;
    }
    return out;
}

void WeylExpr::add(const Word &w, const GaussRat &c)
{
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = m_terms.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            m_terms.erase(it);
        }
    }
}

WeylExpr WeylExpr::adjoint() const
{
    WeylExpr r;
    for (const auto &[w, c] : m_terms) {
        r.add(w.reversed(), c.conj());
    }
    return r;
}

WeylExpr &WeylExpr::operator+=(const WeylExpr &o)
{
    for (const auto &[w, c] : o.m_terms) {
        add(w, c);
    }
    return *this;
}

WeylExpr &WeylExpr::operator-=(const WeylExpr &o)
{
    for (const auto &[w, c] : o.m_terms) {
        add(w, -c);
    }
    return *this;
}

WeylExpr &WeylExpr::operator*=(const GaussRat &c)
{
    if (c.is_zero()) {
        m_terms.clear();
        return *this;
    }
    for (auto &[w, x] : m_terms) {
        x *= c;
    }
    return *this;
}

WeylExpr operator*(const WeylExpr &a, const WeylExpr &b)
{
    WeylExpr r;
    for (const auto &[wa, ca] : a.m_terms) {
        for (const auto &[wb, cb] : b.m_terms) {
            r.add(wa * wb, ca * cb);
        }
    }
    return r;
}

namespace
{

// `coeff body` joined with signs; coefficient 1 is omitted when a body follows.
void append_term(std::string &out, const GaussRat &c, const std::string &body)
{
    const bool simple = c.re().is_zero() || c.im().is_zero();
    const bool negative = simple && (c.re().sign() < 0 || c.im().sign() < 0);
    const GaussRat mag = negative ? -c : c;
    std::string text;
    if (!simple) {
        text = "(" + c.to_string() + ")";
    } else if (!(mag == GaussRat(1)) || body.empty()) {
        text = mag.to_string();
    }
    if (!body.empty()) {
        text = text.empty() ? body : text + " " + body;
    }
    if (out.empty()) {
        out = (negative ? "-" : "") + text;
    } else {
        out += negative ? " - " : " + ";
        out += text;
    }
}

} // namespace

std::string WeylExpr::to_string() const
{
    if (m_terms.empty()) {
        return "0";
    }
    std::string out;
    for (const auto &[w, c] : m_terms) {
        append_term(out, c, w.empty() ? "" : w.to_string());
    }
    return out;
}

void NormalForm::add(Key key, const GaussRat &c)
{
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = m_terms.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            m_terms.erase(it);
        }
    }
}

GaussRat NormalForm::coeff(Key key) const
{
    auto it = m_terms.find(key);
    return it == m_terms.end() ? GaussRat() : it->second;
}

std::string NormalForm::to_string(const Alphabet &alphabet) const
{
    if (m_terms.empty()) {
        return "0";
    }
    std::vector<std::pair<Key, GaussRat>> sorted(m_terms.begin(), m_terms.end());
    std::sort(sorted.begin(), sorted.end(), [](const auto &a, const auto &b) {
        const auto da = a.first.first + a.first.second;
        const auto db = b.first.first + b.first.second;
        return da != db ? da > db : a.first.first > b.first.first;
    });
    std::string out;
    for (const auto &[key, c] : sorted) {
        const Word w = Word::power(alphabet.first, key.first) * Word::power(alphabet.second, key.second);
        append_term(out, c, w.empty() ? "" : w.to_string());
    }
    return out;
}

} // namespace pyramid::weyl
