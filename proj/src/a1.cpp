#include <pyramid/weyl/a1.hpp>

#include <string>

#include <pyramid/errors.hpp>

namespace pyramid::weyl
{

BiPoly BiPoly::monomial(long j, long k, const GaussRat &c)
{
    BiPoly p;
    p.add({j, k}, c);
    return p;
}

void BiPoly::add(Key key, const GaussRat &c)
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

std::string BiPoly::to_string() const
{
    if (m_terms.empty()) {
        return "0";
    }
    std::string out;
    for (const auto &[key, c] : m_terms) {
        if (!out.empty()) {
            out += " + ";
        }
        out += "(" + c.to_string() + ")";
        if (key.first > 0) {
            out += " x^" + std::to_string(key.first);
        }
        if (key.second > 0) {
            out += " y^" + std::to_string(key.second);
        }
    }
    return out;
}

namespace
{

BiPoly apply_letter(char letter, const BiPoly &f)
{
    BiPoly out;
    for (const auto &[key, c] : f.terms()) {
        const auto [j, k] = key;
        if (letter == 'R') {
            out.add({j + 1, k}, c);
        } else if (letter == 'D') {
            if (j > 0) {
                out.add({j - 1, k}, -c * GaussRat(j));
            }
            out.add({j, k + 1}, c);
        } else {
            throw PreconditionError(std::string("letter '") + letter + "' is not R or D");
        }
    }
    return out;
}

} // namespace

BiPoly a1_apply(const WeylExpr &e, const BiPoly &f)
{
    BiPoly total;
    for (const auto &[w, c] : e.terms()) {
        BiPoly g = f;
        const auto &letters = w.letters();
        for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
            g = apply_letter(*it, g);
        }
        for (const auto &[key, v] : g.terms()) {
            total.add(key, v * c);
        }
    }
    return total;
}

BiPoly a1_apply_to_one(const WeylExpr &e)
{
    return a1_apply(e, BiPoly::monomial(0, 0));
}

std::optional<A1Witness> a1_rep_check(const WeylExpr &e, long max_degree)
{
    for (long d = 0; d <= max_degree; ++d) {
        for (long j = 0; j <= d; ++j) {
            BiPoly image = a1_apply(e, BiPoly::monomial(j, d - j));
            if (!image.is_zero()) {
                return A1Witness{{j, d - j}, std::move(image)};
            }
        }
    }
    return std::nullopt;
}

} // namespace pyramid::weyl
