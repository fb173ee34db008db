#include <pyramid/families.hpp>

#include <pyramid/comb.hpp>
#include <pyramid/errors.hpp>
#include <pyramid/exact/trunc_series.hpp>

namespace pyramid
{

OrderingFamily OrderingFamily::binom_power(long r)
{
    if (r < 1) {
        throw PreconditionError("binomial power must be >= 1");
    }
    OrderingFamily f(Kind::binom_power);
    f.m_power = r;
    return f;
}

OrderingFamily OrderingFamily::custom(std::vector<PyramidRow> rows)
{
    for (std::size_t n = 0; n < rows.size(); ++n) {
        if (rows[n].n() != static_cast<long>(n)) {
            throw PreconditionError("custom row " + std::to_string(n) + " has the wrong length");
        }
    }
    OrderingFamily f(Kind::custom);
    f.m_rows = std::move(rows);
    return f;
}

std::optional<OrderingFamily> OrderingFamily::from_name(std::string_view name, long r)
{
    if (name == "symmetric") {
        return symmetric();
    }
    if (name == "born-jordan" || name == "born_jordan") {
        return born_jordan();
    }
    if (name == "weyl") {
        return weyl();
    }
    if (name == "binom-pow" || name == "binom_power") {
        return binom_power(r);
    }
    return std::nullopt;
}

std::string OrderingFamily::name() const
{
    switch (m_kind) {
        case Kind::symmetric:
            return "symmetric";
        case Kind::born_jordan:
            return "born-jordan";
        case Kind::weyl:
            return "weyl";
        case Kind::binom_power:
            return "binom-pow";
        case Kind::custom:
            return "custom";
    }
    return "unknown";
}

PyramidRow OrderingFamily::row(long n) const
{
    if (n < 0) {
        throw PreconditionError("row index must be non-negative");
    }
    std::vector<GaussRat> a(static_cast<std::size_t>(n + 1));
    switch (m_kind) {
        case Kind::symmetric:
            if (n == 0) {
                a[0] = GaussRat(1);
            } else {
                a.front() = GaussRat(BigRat(1, 2));
                a.back() = GaussRat(BigRat(1, 2));
            }
            break;
        case Kind::born_jordan:
            for (auto &x : a) {
                x = GaussRat(BigRat(1, n + 1));
            }
            break;
        case Kind::weyl:
            for (long k = 0; k <= n; ++k) {
                a[static_cast<std::size_t>(k)] = GaussRat(BigRat(binomial(n, k), BigInt(1) << static_cast<unsigned long>(n)));
            }
            break;
        case Kind::binom_power: {
            std::vector<BigInt> w;
            BigInt total = 0;
            for (long k = 0; k <= n; ++k) {
                BigInt p;
                const BigInt b = binomial(n, k);
                mpz_pow_ui(p.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(m_power));
                total += p;
                w.push_back(p);
            }
            for (long k = 0; k <= n; ++k) {
                a[static_cast<std::size_t>(k)] = GaussRat(BigRat(w[static_cast<std::size_t>(k)], total));
            }
            break;
        }
        case Kind::custom:
            if (static_cast<std::size_t>(n) >= m_rows.size()) {
                throw PreconditionError("custom family has no row " + std::to_string(n));
            }
            return m_rows[static_cast<std::size_t>(n)];
    }
    return PyramidRow(std::move(a));
}

Poly OrderingFamily::poly(long n) const
{
    return pyramid_to_poly(row(n));
}

std::vector<Poly> OrderingFamily::polys(long n_max) const
{
    std::vector<Poly> out;
    for (long n = 0; n <= n_max; ++n) {
        out.push_back(poly(n));
    }
    return out;
}

std::optional<PolyFamily> poly_family_from_name(std::string_view name)
{
    if (name == "legendre") {
        return PolyFamily::legendre;
    }
    if (name == "hermite") {
        return PolyFamily::hermite;
    }
    if (name == "chebyshev-t" || name == "chebyshev_t") {
        return PolyFamily::chebyshev_t;
    }
    if (name == "chebyshev-u" || name == "chebyshev_u") {
        return PolyFamily::chebyshev_u;
    }
    if (name == "monomial") {
        return PolyFamily::monomial;
    }
    return std::nullopt;
}

std::string to_string(PolyFamily f)
{
    switch (f) {
        case PolyFamily::legendre:
            return "legendre";
        case PolyFamily::hermite:
            return "hermite";
        case PolyFamily::chebyshev_t:
            return "chebyshev-t";
        case PolyFamily::chebyshev_u:
            return "chebyshev-u";
        case PolyFamily::monomial:
            return "monomial";
    }
    return "unknown";
}

namespace
{

Poly chebyshev(long n, const Poly &first)
{
    const Poly z = Poly::variable();
    Poly prev(1), cur = first;
    if (n == 0) {
        return prev;
    }
    for (long k = 1; k < n; ++k) {
        Poly next = z * cur * GaussRat(2) - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

} // namespace

Poly family_poly(PolyFamily f, long n)
{
    if (n < 0) {
        throw PreconditionError("family index must be non-negative");
    }
    switch (f) {
        case PolyFamily::legendre: {
            const BigInt norm = binomial(2 * n, n);
            Poly p;
            for (long m = 0; 2 * m <= n; ++m) {
                BigInt c = binomial(n, m) * binomial(2 * n - 2 * m, n);
                if (m % 2 == 1) {
                    c = -c;
                }
                p += Poly::monomial(GaussRat(BigRat(c, norm)), static_cast<std::size_t>(n - 2 * m));
            }
            return p;
        }
        case PolyFamily::hermite: {
            // n!/2^n sum_m (-1)^m / (m! (n-2m)!) (2x)^{n-2m}
            Poly p;
            for (long m = 0; 2 * m <= n; ++m) {
                BigRat c(factorial(n) * (BigInt(1) << static_cast<unsigned long>(n - 2 * m)),
                         factorial(m) * factorial(n - 2 * m) * (BigInt(1) << static_cast<unsigned long>(n)));
                if (m % 2 == 1) {
                    c = -c;
                }
                p += Poly::monomial(GaussRat(c), static_cast<std::size_t>(n - 2 * m));
            }
            return p;
        }
        case PolyFamily::chebyshev_t:
            return chebyshev(n, Poly::variable());
        case PolyFamily::chebyshev_u:
            return chebyshev(n, Poly::variable() * GaussRat(2));
        case PolyFamily::monomial:
            return Poly::monomial(GaussRat(1), static_cast<std::size_t>(n));
    }
    throw PreconditionError("unknown polynomial family");
}

PyramidRow classical_pyramid(PolyFamily f, long n)
{
    return poly_to_pyramid(family_poly(f, n), n);
}

BigInt hermite_h(long n)
{
    BigInt h0 = 1, h1 = 1;
    if (n <= 1) {
        return 1;
    }
    for (long k = 2; k <= n; ++k) {
        BigInt h2 = h1 + 2 * (k - 1) * h0;
        h0 = h1;
        h1 = h2;
    }
    return h1;
}

BigRat legendre_outer_closed_form(long n)
{
    BigInt s = 0;
    for (long j = 0; j <= n; ++j) {
        s += (BigInt(1) << static_cast<unsigned long>(2 * j)) * binomial(n, j) * binomial(2 * n - 2 * j, n);
    }
    return BigRat(factorial(n) * s, (BigInt(1) << static_cast<unsigned long>(n)) * factorial(2 * n));
}

CheckReport outer_diagonal_identities(PolyFamily f, long n_max)
{
    CheckReport report;
    const std::string name = "outer-" + to_string(f);
    for (long n = 0; n <= n_max; ++n) {
        const PyramidRow row = classical_pyramid(f, n);
        const GaussRat outer = outer_diagonal(family_poly(f, n), n);
        const GaussRat from_row = row[static_cast<std::size_t>(n)];
        const GaussRat nfact(factorial(n));
        GaussRat expected;
        switch (f) {
            case PolyFamily::chebyshev_t:
                expected = GaussRat(fib_lucas(n).second) / (GaussRat(2) * nfact);
                break;
            case PolyFamily::chebyshev_u:
                expected = GaussRat(fib_lucas(n + 1).first) / nfact;
                break;
            case PolyFamily::hermite:
                expected = GaussRat(hermite_h(n)) / (GaussRat(BigInt(1) << static_cast<unsigned long>(n)) * nfact);
                break;
            case PolyFamily::legendre:
                expected = GaussRat(legendre_outer_closed_form(n));
                break;
            case PolyFamily::monomial:
                throw PreconditionError("no outer-diagonal closed form for the monomial family");
        }
        const bool ok = outer == expected && from_row == outer;
        report.check(name, n, std::nullopt, ok,
                     ok ? "" : "a_{n,n} = " + from_row.to_string() + ", expected " + expected.to_string());
    }
    return report;
}

CheckReport outer_diagonal_identities(long n_max)
{
    CheckReport report;
    for (PolyFamily f : {PolyFamily::chebyshev_t, PolyFamily::chebyshev_u, PolyFamily::hermite, PolyFamily::legendre}) {
        report.merge(outer_diagonal_identities(f, n_max));
    }
    return report;
}

CheckReport egf_checks(long order)
{
    if (order < 2) {
        throw PreconditionError("generating-function checks need order >= 2");
    }
    const auto ord = static_cast<std::size_t>(order);
    CheckReport report;

    // exp(2z arctan t) / sqrt(1 + t^2), coefficients polynomials in z.
    const auto atan = lift<Poly>(arctan_series<GaussRat>(ord));
    const auto exponent = atan.scaled(Poly::variable() * GaussRat(2));
    TruncSeries<Poly> one_plus_t2 = TruncSeries<Poly>::constant(ord, Poly(1));
    one_plus_t2[2] = Poly(1);
    const auto closed = exp(exponent) * sqrt_reciprocal(one_plus_t2);
    const auto weyl = OrderingFamily::weyl();
    for (long n = 0; n <= order; ++n) {
        const Poly lhs = weyl.poly(n) * GaussRat(BigRat(BigInt(1) << static_cast<unsigned long>(n), factorial(n)));
        const Poly &rhs = closed[static_cast<std::size_t>(n)];
        report.check("weyl-egf", n, std::nullopt, lhs == rhs, lhs == rhs ? "" : lhs.to_string() + " != " + rhs.to_string());
    }

    // Hermite outer diagonal: G(i/2, t/i) = exp(t/2 + t^2/4).
    TruncSeries<GaussRat> quad(ord);
    quad[1] = GaussRat(BigRat(1, 2));
    quad[2] = GaussRat(BigRat(1, 4));
    const auto herm = exp(quad);
    for (long n = 0; n <= order; ++n) {
        const GaussRat a = classical_pyramid(PolyFamily::hermite, n)[static_cast<std::size_t>(n)];
        const GaussRat &c = herm[static_cast<std::size_t>(n)];
        report.check("hermite-outer-egf", n, std::nullopt, a == c, a == c ? "" : a.to_string() + " != " + c.to_string());
    }
    return report;
}

} // namespace pyramid
