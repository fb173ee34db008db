#include <pyramid/weyl/reduce.hpp>

#include <algorithm>

#include <pyramid/errors.hpp>
#include <pyramid/exact/interpolate.hpp>
#include <pyramid/weyl/normal_order.hpp>

namespace pyramid::weyl
{

namespace
{

void require_balanced(const WeylExpr &e)
{
    for (const auto &[w, c] : e.terms()) {
        if (!w.balanced()) {
            throw PreconditionError("word '" + w.to_string() + "' is not balanced");
        }
    }
}

std::size_t max_weight(const WeylExpr &e)
{
    std::size_t n = 0;
    for (const auto &[w, c] : e.terms()) {
        n = std::max(n, w.weight());
    }
    return n;
}

} // namespace

std::vector<Poly> qp_powers_in_w(std::size_t m_max)
{
    std::vector<Poly> powers{Poly(1)};
    const Poly w = Poly::variable();
    for (std::size_t m = 1; m <= m_max; ++m) {
        const Word product = Word("qp") * Word::power('q', m - 1) * Word::power('p', m - 1);
        const NormalForm nf = normal_order(WeylExpr(product));
        if (!(nf.coeff({m, m}) == GaussRat(1))) {
            throw InternalError("unexpected leading term while bootstrapping q^m p^m");
        }
        Poly next = w * powers[m - 1];
        for (const auto &[key, c] : nf.terms()) {
            if (key.first != key.second) {
                throw InternalError("balanced product produced an unbalanced normal term");
            }
            if (key.first < m) {
                next -= powers[key.first] * c;
            }
        }
        powers.push_back(std::move(next));
    }
    return powers;
}

Poly reduce_balanced(const WeylExpr &e)
{
    require_balanced(e);
    const NormalForm nf = normal_order(e);
    const auto powers = qp_powers_in_w(max_weight(e));
    Poly in_w;
    for (const auto &[key, c] : nf.terms()) {
        in_w += powers.at(key.first) * c;
    }
    // qp = z + i/2
    return in_w.compose_linear(GaussRat(BigRat(0), BigRat(1, 2)), GaussRat(1));
}

GaussRat eigenvalue_on_monomial(const WeylExpr &e, std::size_t m)
{
    require_balanced(e);
    GaussRat total;
    for (const auto &[w, c] : e.terms()) {
        GaussRat scalar = c;
        long exponent = static_cast<long>(m);
        const auto &letters = w.letters();
        for (auto it = letters.rbegin(); it != letters.rend() && !scalar.is_zero(); ++it) {
            if (*it == 'p') {
                ++exponent;
            } else if (*it == 'q') {
                scalar *= GaussRat(BigRat(0), BigRat(exponent));
                --exponent;
            } else {
                throw PreconditionError(std::string("letter '") + *it + "' is not p or q");
            }
        }
        total += scalar;
    }
    return total;
}

Poly reduce_via_interpolation(const WeylExpr &e)
{
    require_balanced(e);
    const std::size_t n = max_weight(e);
    std::vector<GaussRat> nodes, values;
    for (std::size_t m = 0; m <= n; ++m) {
        nodes.emplace_back(BigRat(0), BigRat(static_cast<long>(2 * m + 1), 2));
        values.push_back(eigenvalue_on_monomial(e, m));
    }
    return lagrange_interpolate(nodes, values);
}

} // namespace pyramid::weyl
