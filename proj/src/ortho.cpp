#include <pyramid/ortho.hpp>

#include <string>

#include <pyramid/comb.hpp>
#include <pyramid/errors.hpp>
#include <pyramid/families.hpp>

namespace pyramid
{

MomentSeq sech_moments(std::size_t count)
{
    MomentSeq mu;
    if (count == 0) {
        return mu;
    }
    const auto e = euler_numbers(static_cast<long>(count - 1));
    for (std::size_t k = 0; k < count; ++k) {
        if (k % 2 == 1) {
            mu.moments.emplace_back(0);
            continue;
        }
        BigInt v = e[k];
        if (v < 0) {
            v = -v;
        }
        mu.moments.emplace_back(v, BigInt(1) << static_cast<unsigned long>(k));
    }
    return mu;
}

namespace
{

void require_monic_parity(std::span<const Poly> polys, long up_to)
{
    if (static_cast<long>(polys.size()) <= up_to) {
        throw PreconditionError("need P_0..P_" + std::to_string(up_to));
    }
    for (long n = 0; n <= up_to; ++n) {
        const Poly &p = polys[static_cast<std::size_t>(n)];
        if (p.degree() != n || !p.is_monic()) {
            throw PreconditionError("P_" + std::to_string(n) + " is not monic of degree " + std::to_string(n));
        }
        if (!p.has_parity(n)) {
            throw PreconditionError("P_" + std::to_string(n) + " does not have the parity of " + std::to_string(n));
        }
    }
}

GaussRat c(std::span<const Poly> polys, std::size_t n, std::size_t k)
{
    return polys[n].coeff(k);
}

} // namespace

GaussRat condition1(std::span<const Poly> polys)
{
    require_monic_parity(polys, 4);
    return c(polys, 4, 0) + c(polys, 2, 0) * c(polys, 3, 1) - c(polys, 2, 0) * c(polys, 4, 2);
}

GaussRat condition2(std::span<const Poly> polys)
{
    require_monic_parity(polys, 6);
    const GaussRat c20 = c(polys, 2, 0), c40 = c(polys, 4, 0), c42 = c(polys, 4, 2);
    const GaussRat c51 = c(polys, 5, 1), c53 = c(polys, 5, 3);
    const GaussRat c60 = c(polys, 6, 0), c62 = c(polys, 6, 2), c64 = c(polys, 6, 4);
    return c20 * c51 + c40 * c53 - c20 * c42 * c53 + c60 - c20 * c62 - c40 * c64 + c20 * c42 * c64;
}

ScreenResult three_term_screen(std::span<const Poly> polys, long n_max)
{
    require_monic_parity(polys, n_max);
    ScreenResult res;
    const Poly z = Poly::variable();
    for (long n = 0; n < n_max; ++n) {
        const auto un = static_cast<std::size_t>(n);
        Poly r = z * polys[un] - polys[un + 1];
        if (n == 0) {
            if (!r.is_zero()) {
                res.failing_n = 0;
                res.remainder = r;
                res.reason = "z P_0 - P_1 is not zero";
                return res;
            }
            continue;
        }
        const GaussRat beta = r.coeff(un - 1);
        r -= polys[un - 1] * beta;
        if (!r.is_zero()) {
            res.failing_n = n;
            res.remainder = r;
            res.reason = "remainder not a multiple of P_" + std::to_string(n - 1);
            return res;
        }
        res.betas.push_back(beta);
        if (!beta.is_real() || beta.re().sign() <= 0) {
            res.failing_n = n;
            res.reason = "beta_" + std::to_string(n) + " = " + beta.to_string() + " is not positive";
            return res;
        }
    }
    res.ok = true;
    return res;
}

GaussRat moment_inner_product(const Poly &p, const Poly &q, const MomentSeq &mu)
{
    if (p.is_zero() || q.is_zero()) {
        return GaussRat(0);
    }
    const auto need = static_cast<std::size_t>(p.degree() + q.degree());
    if (need >= mu.size()) {
        throw PreconditionError("inner product needs moments up to mu_" + std::to_string(need));
    }
    GaussRat acc(0);
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        if (p.coeffs()[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < q.coeffs().size(); ++j) {
            acc += p.coeffs()[i] * q.coeffs()[j] * GaussRat(mu[i + j]);
        }
    }
    return acc;
}

std::vector<Poly> gram_schmidt_monic(const MomentSeq &mu, long depth)
{
    std::vector<Poly> out;
    std::vector<GaussRat> norms;
    for (long n = 0; n <= depth; ++n) {
        Poly p = Poly::monomial(GaussRat(1), static_cast<std::size_t>(n));
        const Poly zn = p;
        for (std::size_t m = 0; m < out.size(); ++m) {
            p -= out[m] * (moment_inner_product(zn, out[m], mu) / norms[m]);
        }
        const GaussRat nrm = moment_inner_product(p, p, mu);
        if (nrm.is_zero()) {
            throw PreconditionError("degenerate moment functional at degree " + std::to_string(n));
        }
        norms.push_back(nrm);
        out.push_back(std::move(p));
    }
    return out;
}

CheckReport binom_power_scan(long r_max, long depth)
{
    if (r_max < 1 || depth < 4) {
        throw PreconditionError("scan needs r_max >= 1 and depth >= 4");
    }
    CheckReport report;
    for (long r = 1; r <= r_max; ++r) {
        const auto polys = OrderingFamily::binom_power(r).polys(depth);
        const GaussRat c1 = condition1(polys);
        std::string detail = "condition1 = " + c1.to_string();
        bool ok = c1.is_zero();
        if (depth >= 6) {
            const GaussRat c2 = condition2(polys);
            detail += ", condition2 = " + c2.to_string();
            ok = ok && c2.is_zero();
        }
        report.check("binom-pow", r, std::nullopt, ok, detail);
    }
    return report;
}

} // namespace pyramid
