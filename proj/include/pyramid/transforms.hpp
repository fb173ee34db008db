#ifndef PYRAMID_TRANSFORMS_HPP
#define PYRAMID_TRANSFORMS_HPP

#include <cstddef>
#include <vector>

#include <pyramid/exact/gauss_rat.hpp>
#include <pyramid/exact/matrix.hpp>
#include <pyramid/exact/poly.hpp>

namespace pyramid
{

/// Row n of a pyramid: the weights a_{n,0..n} of the words q^k p^n q^{n-k}.
class PyramidRow
{
public:
    PyramidRow() : m_entries{GaussRat(1)} {}
    /// n is entries.size() - 1; throws PreconditionError on an empty row.
    explicit PyramidRow(std::vector<GaussRat> entries);

    long n() const
    {
        return static_cast<long>(m_entries.size()) - 1;
    }
    const std::vector<GaussRat> &entries() const
    {
        return m_entries;
    }
    const GaussRat &operator[](std::size_t k) const
    {
        return m_entries.at(k);
    }

    GaussRat sum() const;
    bool is_normalized() const
    {
        return sum() == GaussRat(1);
    }
    bool is_real() const;
    bool is_symmetric() const;
    /// a_{n,k} = conj(a_{n,n-k})
    bool is_hermitian_symmetric() const;

    friend bool operator==(const PyramidRow &, const PyramidRow &) = default;

private:
    std::vector<GaussRat> m_entries;
};

/// A row scaled to coprime integers.
struct IntRow {
    long n = 0;
    std::vector<BigInt> entries;

    friend bool operator==(const IntRow &, const IntRow &) = default;
};

/// Q_{n,k}(z) = C(-iz - 1/2 + k, n) = (1/n!) prod_{l<n} (-iz - 1/2 + k - l); the image of
/// q^k p^n q^{n-k} divided by i^n n!. Throws PreconditionError unless 0 <= k <= n.
Poly q_basis(long n, long k);

/// P_n(z) = i^n n! sum_k a_{n,k} Q_{n,k}(z).
Poly pyramid_to_poly(const PyramidRow &row);

/// Same polynomial from the expanded coefficient formula
/// b_{n,k} = (-1)^k i^{n+k} sum_l a_{n,l} sum_j s(n, j+k) C(j+k, k) (l - 1/2)^j.
Poly pyramid_to_poly_expanded(const PyramidRow &row);

/// a_{n,k} = (1/(i^n n!)) sum_{j=0}^{n-k} (-1)^{n-k-j} C(n+1, n-k-j) P(i(j + 1/2)).
/// Throws PreconditionError when deg P > n.
PyramidRow poly_to_pyramid(const Poly &p, long n);

/// Same row from the coefficient-level form (P expanded in powers of z before evaluating).
PyramidRow poly_to_pyramid_expanded(const Poly &p, long n);

/// Same row by solving M_n a = (P(i(m + 1/2)) / (i^n n!))_m with the closed-form inverse of
/// the Hankel matrix M_n = [C(i + j, n)].
PyramidRow poly_to_pyramid_hankel(const Poly &p, long n);

/// M_n = [C(i + j, n)], 0 <= i, j <= n.
Matrix<BigInt> hankel_matrix(long n);
/// [(-1)^{n-i-j} C(n+1, i+j+1)].
Matrix<BigInt> hankel_inverse(long n);

/// S_{r,k} = sum_j s(n, j+r) C(j+r, r) (k - 1/2)^j; its columns hold the (rescaled)
/// coefficients of Q_{n,k}.
Matrix<BigRat> basis_matrix(long n);
GaussRat basis_det(long n);

/// a_{n,n} = P(i/2) / (i^n n!).
GaussRat outer_diagonal(const Poly &p, long n);

struct PredicateReport {
    bool normalized = false;
    bool monic = false;
    bool hermitian_symmetric = false;
    bool real_coefficients = false;
    bool real_symmetric = false;
    bool parity_matches_n = false;

    /// normalized <=> monic, hermitian-symmetric <=> real, real symmetric => parity.
    bool consistent() const
    {
        return normalized == monic && hermitian_symmetric == real_coefficients && (!real_symmetric || parity_matches_n);
    }
};

/// Evaluates the row-side and polynomial-side properties independently.
PredicateReport predicates(const PyramidRow &row, const Poly &p);
PredicateReport predicates(const PyramidRow &row);

/// Multiplies by the lcm of denominators and divides by the gcd of numerators.
/// Throws PreconditionError on a non-real entry.
IntRow integerize(const PyramidRow &row);

} // namespace pyramid

#endif
