#ifndef PYRAMID_WEYL_NORMAL_ORDER_HPP
#define PYRAMID_WEYL_NORMAL_ORDER_HPP

#include <cstddef>
#include <vector>

#include <pyramid/weyl/word.hpp>

namespace pyramid::weyl
{

/// Which occurrence of `second first` a rewrite step replaces.
enum class RewriteStrategy { leftmost, rightmost };

/// Normal form by term rewriting with `second first -> first second + constant`
/// until no rule applies.
NormalForm normal_order(const WeylExpr &e, const Alphabet &alphabet = heisenberg(),
                        RewriteStrategy strategy = RewriteStrategy::leftmost);

/// Normal form by multiplying normal forms letter by letter, using
/// second^k first = first second^k + k constant second^{k-1}.
/// Independent of the rewriting route and much faster on long words.
NormalForm normal_order_by_product(const WeylExpr &e, const Alphabet &alphabet = heisenberg());

/// e equals its adjoint in the quotient algebra.
bool is_hermitian(const WeylExpr &e, const Alphabet &alphabet = heisenberg());

struct PalindromeScan {
    std::size_t max_length = 0;
    std::size_t words_checked = 0;
    std::size_t palindromes = 0;
    std::size_t hermitian = 0;
    /// Palindromes that failed to be Hermitian (must stay empty).
    std::vector<Word> non_hermitian_palindromes;
    /// Hermitian words that are not palindromes.
    std::vector<Word> counterexamples;
};

/// Exhaustively classifies every {p,q} word of length <= max_length.
PalindromeScan palindrome_scan(std::size_t max_length);

} // namespace pyramid::weyl

#endif
