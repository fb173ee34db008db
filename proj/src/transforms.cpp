#include <pyramid/transforms.hpp>

#include <algorithm>

#include <pyramid/comb.hpp>
#include <pyramid/errors.hpp>

namespace pyramid
{

PyramidRow::PyramidRow(std::vector<GaussRat> entries) : m_entries(std::move(entries))
{
    if (m_entries.empty()) {
        throw PreconditionError("a pyramid row needs at least one entry");
    }
}

GaussRat PyramidRow::sum() const
{
    GaussRat s;
    for (const auto &a : m_entries) {
        s += a;
    }
    return s;
}

bool PyramidRow::is_real() const
{
    return std::all_of(m_entries.begin(), m_entries.end(), [](const GaussRat &a) { return a.is_real(); });
}

bool PyramidRow::is_symmetric() const
{
    return std::equal(m_entries.begin(), m_entries.end(), m_entries.rbegin());
}

bool PyramidRow::is_hermitian_symmetric() const
{
    const std::size_t size = m_entries.size();
    for (std::size_t k = 0; k < size; ++k) {
        if (!(m_entries[k] == m_entries[size - 1 - k].conj())) {
            return false;
        }
    }
    return true;
}

namespace
{

const GaussRat minus_i = -GaussRat::i();

GaussRat half_odd(long j)
{
    return GaussRat(BigRat(2 * j + 1, 2));
}

// i (j + 1/2)
GaussRat node(long j)
{
    return GaussRat(BigRat(0), BigRat(2 * j + 1, 2));
}

GaussRat scale_factor(long n)
{
    return i_pow(n) * GaussRat(factorial(n));
}

void require_degree(const Poly &p, long n)
{
    if (n < 0) {
        throw PreconditionError("row index must be non-negative");
    }
    if (p.degree() > n) {
        throw PreconditionError("polynomial of degree " + std::to_string(p.degree()) + " does not fit row "
                                + std::to_string(n));
    }
}

} // namespace

Poly q_basis(long n, long k)
{
    if (n < 0 || k < 0 || k > n) {
        throw PreconditionError("q_basis needs 0 <= k <= n");
    }
    Poly r(1);
    for (long l = 0; l < n; ++l) {
        // -iz - 1/2 + k - l
        r *= Poly({GaussRat(BigRat(2 * (k - l) - 1, 2)), minus_i});
    }
    return r / GaussRat(factorial(n));
}

Poly pyramid_to_poly(const PyramidRow &row)
{
    const long n = row.n();
    Poly acc;
    for (long k = 0; k <= n; ++k) {
        const GaussRat &a = row[static_cast<std::size_t>(k)];
        if (!a.is_zero()) {
            acc += q_basis(n, k) * a;
        }
    }
    return acc * scale_factor(n);
}

Poly pyramid_to_poly_expanded(const PyramidRow &row)
{
    const long n = row.n();
    const auto stirling = stirling1_triangle(n)[static_cast<std::size_t>(n)];
    std::vector<GaussRat> b(static_cast<std::size_t>(n + 1));
    for (long k = 0; k <= n; ++k) {
        GaussRat outer;
        for (long l = 0; l <= n; ++l) {
            const GaussRat &a = row[static_cast<std::size_t>(l)];
            if (a.is_zero()) {
                continue;
            }
            BigRat inner;
            const BigRat base(2 * l - 1, 2);
            for (long j = 0; j <= n - k; ++j) {
                inner += BigRat(stirling[static_cast<std::size_t>(j + k)] * binomial(j + k, k)) * base.pow(j);
            }
            outer += a * GaussRat(inner);
        }
        const GaussRat sign = (k % 2 == 0) ? GaussRat(1) : GaussRat(-1);
        b[static_cast<std::size_t>(k)] = sign * i_pow(n + k) * outer;
    }
    return Poly(std::move(b));
}

PyramidRow poly_to_pyramid(const Poly &p, long n)
{
    require_degree(p, n);
    std::vector<GaussRat> values;
    for (long j = 0; j <= n; ++j) {
        values.push_back(p.evaluate(node(j)));
    }
    const GaussRat inv = scale_factor(n).inverse();
    std::vector<GaussRat> a(static_cast<std::size_t>(n + 1));
    for (long k = 0; k <= n; ++k) {
        GaussRat acc;
        for (long j = 0; j <= n - k; ++j) {
            const long e = n - k - j;
            GaussRat term = values[static_cast<std::size_t>(j)] * GaussRat(binomial(n + 1, e));
            acc += (e % 2 == 0) ? term : -term;
        }
        a[static_cast<std::size_t>(k)] = acc * inv;
    }
    return PyramidRow(std::move(a));
}

PyramidRow poly_to_pyramid_expanded(const Poly &p, long n)
{
    require_degree(p, n);
    const GaussRat inv = scale_factor(n).inverse();
    std::vector<GaussRat> a(static_cast<std::size_t>(n + 1));
    for (long k = 0; k <= n; ++k) {
        GaussRat acc;
        for (long j = 0; j <= n - k; ++j) {
            GaussRat inner;
            for (long r = 0; r <= p.degree(); ++r) {
                inner += p.coeff(static_cast<std::size_t>(r)) * i_pow(r) * half_odd(j).pow(r);
            }
            const long e = n - k - j;
            GaussRat term = GaussRat(binomial(n + 1, e)) * inner;
            acc += (e % 2 == 0) ? term : -term;
        }
        a[static_cast<std::size_t>(k)] = acc * inv;
    }
    return PyramidRow(std::move(a));
}

PyramidRow poly_to_pyramid_hankel(const Poly &p, long n)
{
    require_degree(p, n);
    const auto inv = hankel_inverse(n);
    const GaussRat scale = scale_factor(n).inverse();
    std::vector<GaussRat> v;
    for (long m = 0; m <= n; ++m) {
        v.push_back(p.evaluate(node(m)) * scale);
    }
    std::vector<GaussRat> a(static_cast<std::size_t>(n + 1));
    for (std::size_t r = 0; r < a.size(); ++r) {
        for (std::size_t c = 0; c < a.size(); ++c) {
            a[r] += GaussRat(inv(r, c)) * v[c];
        }
    }
    return PyramidRow(std::move(a));
}

Matrix<BigInt> hankel_matrix(long n)
{
    const auto size = static_cast<std::size_t>(n + 1);
    Matrix<BigInt> m(size, size);
    for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = 0; j < size; ++j) {
            m(i, j) = binomial(static_cast<long>(i + j), n);
        }
    }
    return m;
}

Matrix<BigInt> hankel_inverse(long n)
{
    const auto size = static_cast<std::size_t>(n + 1);
    Matrix<BigInt> m(size, size);
    for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = 0; j < size; ++j) {
            const long e = n - static_cast<long>(i + j);
            const BigInt b = binomial(n + 1, static_cast<long>(i + j + 1));
            m(i, j) = (e % 2 == 0) ? b : BigInt(-b);
        }
    }
    return m;
}

Matrix<BigRat> basis_matrix(long n)
{
    const auto size = static_cast<std::size_t>(n + 1);
    const auto stirling = stirling1_triangle(n)[static_cast<std::size_t>(n)];
    Matrix<BigRat> s(size, size);
    for (long r = 0; r <= n; ++r) {
        for (long k = 0; k <= n; ++k) {
            BigRat acc;
            const BigRat base(2 * k - 1, 2);
            for (long j = 0; j <= n - r; ++j) {
                acc += BigRat(stirling[static_cast<std::size_t>(j + r)] * binomial(j + r, r)) * base.pow(j);
            }
            s(static_cast<std::size_t>(r), static_cast<std::size_t>(k)) = acc;
        }
    }
    return s;
}

GaussRat basis_det(long n)
{
    return GaussRat(determinant(basis_matrix(n)));
}

GaussRat outer_diagonal(const Poly &p, long n)
{
    require_degree(p, n);
    return p.evaluate(GaussRat(BigRat(0), BigRat(1, 2))) / scale_factor(n);
}

PredicateReport predicates(const PyramidRow &row, const Poly &p)
{
    PredicateReport r;
    r.normalized = row.is_normalized();
    r.monic = p.degree() == row.n() && p.is_monic();
    r.hermitian_symmetric = row.is_hermitian_symmetric();
    r.real_coefficients = p.has_real_coefficients();
    r.real_symmetric = row.is_real() && row.is_symmetric();
    r.parity_matches_n = p.has_parity(row.n());
    return r;
}

PredicateReport predicates(const PyramidRow &row)
{
    return predicates(row, pyramid_to_poly(row));
}

IntRow integerize(const PyramidRow &row)
{
    BigInt lcm = 1;
    for (const auto &a : row.entries()) {
        if (!a.is_real()) {
            throw PreconditionError("integerize needs real entries, got " + a.to_string());
        }
        const BigInt d = a.re().den();
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), d.get_mpz_t());
    }
    std::vector<BigInt> scaled;
    BigInt g = 0;
    for (const auto &a : row.entries()) {
        const BigRat v = a.re() * BigRat(lcm);
        scaled.push_back(v.num());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), scaled.back().get_mpz_t());
    }
    if (g != 0) {
        for (auto &x : scaled) {
            x /= g;
        }
    }
    return IntRow{row.n(), std::move(scaled)};
}

} // namespace pyramid
