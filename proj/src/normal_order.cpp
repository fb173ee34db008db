#include <pyramid/weyl/normal_order.hpp>

#include <map>
#include <string>

#include <pyramid/errors.hpp>

namespace pyramid::weyl
{

namespace
{

// Internally a word is encoded with '1' for `first` and '0' for `second`, so that the
// normal form is 1...10...0 and every rewrite "01" -> "10" makes the word lexicographically
// larger. Processing longer words first, then lexicographically smaller ones, guarantees
// every word is expanded exactly once, after all contributions to it have been merged.
struct PendingOrder {
    bool operator()(const std::string &a, const std::string &b) const
    {
        if (a.size() != b.size()) {
            return a.size() > b.size();
        }
        return a < b;
    }
};

std::string encode(const Word &w, const Alphabet &alphabet)
{
    std::string s;
    s.reserve(w.size());
    for (char c : w.letters()) {
        if (c == alphabet.first) {
            s += '1';
        } else if (c == alphabet.second) {
            s += '0';
        } else {
            throw PreconditionError(std::string("letter '") + c + "' is not a generator of this algebra");
        }
    }
    return s;
}

NormalForm::Key normal_key(const std::string &s)
{
    const std::size_t ones = s.find('0') == std::string::npos ? s.size() : s.find('0');
    return {ones, s.size() - ones};
}

} // namespace

NormalForm normal_order(const WeylExpr &e, const Alphabet &alphabet, RewriteStrategy strategy)
{
    std::map<std::string, GaussRat, PendingOrder> pending;
    NormalForm result;
    auto push = [&](std::string s, const GaussRat &c) {
        if (c.is_zero()) {
            return;
        }
        auto [it, inserted] = pending.try_emplace(std::move(s), c);
        if (!inserted) {
            it->second += c;
        }
    };
    for (const auto &[w, c] : e.terms()) {
        push(encode(w, alphabet), c);
    }
    while (!pending.empty()) {
        auto node = pending.extract(pending.begin());
        const std::string &s = node.key();
        const GaussRat &c = node.mapped();
        if (c.is_zero()) {
            continue;
        }
        const std::size_t at = strategy == RewriteStrategy::leftmost ? s.find("01") : s.rfind("01");
        if (at == std::string::npos) {
            result.add(normal_key(s), c);
            continue;
        }
        std::string swapped = s;
        swapped[at] = '1';
        swapped[at + 1] = '0';
        std::string dropped = s.substr(0, at) + s.substr(at + 2);
        push(std::move(swapped), c);
        push(std::move(dropped), c * alphabet.constant);
    }
    return result;
}

namespace
{

NormalForm times_letter(const NormalForm &nf, bool is_first, const GaussRat &constant)
{
    NormalForm out;
    for (const auto &[key, c] : nf.terms()) {
        const auto [j, k] = key;
        if (!is_first) {
            out.add({j, k + 1}, c);
            continue;
        }
        out.add({j + 1, k}, c);
        if (k > 0) {
            out.add({j, k - 1}, c * constant * GaussRat(static_cast<long>(k)));
        }
    }
    return out;
}

} // namespace

NormalForm normal_order_by_product(const WeylExpr &e, const Alphabet &alphabet)
{
    NormalForm total;
    for (const auto &[w, c] : e.terms()) {
        NormalForm acc;
        acc.add({0, 0}, c);
        for (char letter : w.letters()) {
            if (letter != alphabet.first && letter != alphabet.second) {
                throw PreconditionError(std::string("letter '") + letter + "' is not a generator of this algebra");
            }
            acc = times_letter(acc, letter == alphabet.first, alphabet.constant);
        }
        for (const auto &[key, v] : acc.terms()) {
            total.add(key, v);
        }
    }
    return total;
}

bool is_hermitian(const WeylExpr &e, const Alphabet &alphabet)
{
    return normal_order(e, alphabet) == normal_order(e.adjoint(), alphabet);
}

PalindromeScan palindrome_scan(std::size_t max_length)
{
    PalindromeScan scan;
    scan.max_length = max_length;
    for (std::size_t len = 0; len <= max_length; ++len) {
        for (std::size_t bits = 0; bits < (std::size_t{1} << len); ++bits) {
            std::string letters(len, 'p');
            for (std::size_t i = 0; i < len; ++i) {
                if ((bits >> i) & 1U) {
                    letters[i] = 'q';
                }
            }
            const Word w(std::move(letters));
            const WeylExpr e(w);
            const bool herm = normal_order_by_product(e) == normal_order_by_product(e.adjoint());
            const bool pal = w.is_palindrome();
            ++scan.words_checked;
            scan.palindromes += pal ? 1 : 0;
            scan.hermitian += herm ? 1 : 0;
            if (pal && !herm) {
                scan.non_hermitian_palindromes.push_back(w);
            }
            if (herm && !pal) {
                scan.counterexamples.push_back(w);
            }
        }
    }
    return scan;
}

} // namespace pyramid::weyl
