#ifndef PYRAMID_WEYL_A1_HPP
#define PYRAMID_WEYL_A1_HPP

#include <map>
#include <optional>
#include <utility>

#include <pyramid/exact/gauss_rat.hpp>
#include <pyramid/weyl/word.hpp>

namespace pyramid::weyl
{

/// Bivariate polynomial sum c_{j,k} x^j y^k, zero coefficients never stored.
class BiPoly
{
public:
    using Key = std::pair<long, long>;

    static BiPoly monomial(long j, long k, const GaussRat &c = GaussRat(1));

    void add(Key key, const GaussRat &c);
    const std::map<Key, GaussRat> &terms() const
    {
        return m_terms;
    }
    bool is_zero() const
    {
        return m_terms.empty();
    }
    std::string to_string() const;

    friend bool operator==(const BiPoly &, const BiPoly &) = default;

private:
    std::map<Key, GaussRat> m_terms;
};

/// Applies an expression in R, D to f through the representation on C[x, y]:
///   R(x^j y^k) = x^{j+1} y^k,   D(x^j y^k) = -j x^{j-1} y^k + x^j y^{k+1},
/// which satisfies RD - DR = 1. Words act right to left.
BiPoly a1_apply(const WeylExpr &e, const BiPoly &f);

/// e applied to the constant 1; R^j D^k maps 1 to x^j y^k.
BiPoly a1_apply_to_one(const WeylExpr &e);

struct A1Witness {
    BiPoly::Key monomial;
    BiPoly image;
};

/// Checks that e acts as the zero operator on every x^j y^k with j + k <= max_degree.
/// Returns the first monomial with a nonzero image, if any.
std::optional<A1Witness> a1_rep_check(const WeylExpr &e, long max_degree);

} // namespace pyramid::weyl

#endif
