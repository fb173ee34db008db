#ifndef PYRAMID_WEYL_EXPR_HPP
#define PYRAMID_WEYL_EXPR_HPP

#include <string_view>

#include <pyramid/weyl/word.hpp>

namespace pyramid::weyl
{

/// Parses an operator expression into a free-algebra element.
/**
 * Grammar (whitespace insignificant):
 *
 *     expr   := ['+'|'-'] term (('+'|'-') term)*
 *     term   := scalar ['*'] factor ('*'? factor)* | factor ('*'? factor)* | scalar
 *     factor := letter ['^' uint]
 *     scalar := rational | rational 'i' | 'i' | '(' gaussian-rational ')'
 *
 * Letters are the two generators of `alphabet`. Throws ParseError carrying the
 * offending byte offset.
 */
WeylExpr parse_expr(std::string_view text, const Alphabet &alphabet = heisenberg());

} // namespace pyramid::weyl

#endif
