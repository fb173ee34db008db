#ifndef PYRAMID_EXACT_MATRIX_HPP
#define PYRAMID_EXACT_MATRIX_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include <pyramid/errors.hpp>

namespace pyramid
{

/// Small dense row-major matrix over an exact ring.
template <typename T>
class Matrix
{
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : m_rows(rows), m_cols(cols), m_data(rows * cols, T(0)) {}

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            m(i, i) = T(1);
        }
        return m;
    }

    std::size_t rows() const
    {
        return m_rows;
    }
    std::size_t cols() const
    {
        return m_cols;
    }
    T &operator()(std::size_t r, std::size_t c)
    {
        return m_data[r * m_cols + c];
    }
    const T &operator()(std::size_t r, std::size_t c) const
    {
        return m_data[r * m_cols + c];
    }

    friend Matrix operator*(const Matrix &a, const Matrix &b)
    {
        if (a.m_cols != b.m_rows) {
            throw PreconditionError("matrix dimensions do not match");
        }
        Matrix r(a.m_rows, b.m_cols);
        for (std::size_t i = 0; i < a.m_rows; ++i) {
            for (std::size_t k = 0; k < a.m_cols; ++k) {
                const T &x = a(i, k);
                if (x == T(0)) {
                    continue;
                }
                for (std::size_t j = 0; j < b.m_cols; ++j) {
                    r(i, j) += x * b(k, j);
                }
            }
        }
        return r;
    }

    friend bool operator==(const Matrix &, const Matrix &) = default;

private:
    std::size_t m_rows = 0;
    std::size_t m_cols = 0;
    std::vector<T> m_data;
};

/// Determinant by Gaussian elimination; T must be a field.
template <typename T>
T determinant(Matrix<T> m)
{
    if (m.rows() != m.cols()) {
        throw PreconditionError("determinant of a non-square matrix");
    }
    const std::size_t n = m.rows();
    T det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m(pivot, col) == T(0)) {
            ++pivot;
        }
        if (pivot == n) {
            return T(0);
        }
        if (pivot != col) {
            for (std::size_t c = 0; c < n; ++c) {
                std::swap(m(pivot, c), m(col, c));
            }
            det = -det;
        }
        det *= m(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m(r, col) == T(0)) {
                continue;
            }
            const T factor = m(r, col) / m(col, col);
            for (std::size_t c = col; c < n; ++c) {
                m(r, c) -= factor * m(col, c);
            }
        }
    }
    return det;
}

} // namespace pyramid

#endif
