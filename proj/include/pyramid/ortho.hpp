#ifndef PYRAMID_ORTHO_HPP
#define PYRAMID_ORTHO_HPP

#include <optional>
#include <span>
#include <vector>

#include <pyramid/exact/bigrat.hpp>
#include <pyramid/exact/gauss_rat.hpp>
#include <pyramid/exact/poly.hpp>
#include <pyramid/report.hpp>

namespace pyramid
{

/// mu_0, mu_1, ... of a moment functional.
struct MomentSeq {
    std::vector<BigRat> moments;

    std::size_t size() const
    {
        return moments.size();
    }
    const BigRat &operator[](std::size_t k) const
    {
        return moments.at(k);
    }
};

/// mu_{2k} = |E_{2k}| / 4^k, odd moments zero; moments of sech(pi z), mu_0 = 1.
MomentSeq sech_moments(std::size_t count);

/// c_{4,0} + c_{2,0} c_{3,1} - c_{2,0} c_{4,2}, with c_{n,k} = [z^k] P_n.
/// `polys` holds P_0..P_n (at least up to P_4); each must be monic of degree n with parity n.
GaussRat condition1(std::span<const Poly> polys);

/// The second determinant condition; needs P_0..P_6.
GaussRat condition2(std::span<const Poly> polys);

struct ScreenResult {
    bool ok = false;
    /// beta_1.. in order, as far as they were found
    std::vector<GaussRat> betas;
    /// first n where z P_n = P_{n+1} + beta_n P_{n-1} fails, with the leftover polynomial
    std::optional<long> failing_n;
    Poly remainder;
    std::string reason;
};

/// Tries z P_n = P_{n+1} + beta_n P_{n-1} for n < n_max with every beta_n > 0.
/// `polys` must hold P_0..P_{n_max}.
ScreenResult three_term_screen(std::span<const Poly> polys, long n_max);

/// sum_{i,j} p_i q_j mu_{i+j}. Throws PreconditionError if mu runs out.
GaussRat moment_inner_product(const Poly &p, const Poly &q, const MomentSeq &mu);

/// Monic orthogonal P_0..P_depth for the functional mu (needs 2*depth + 1 moments and a
/// nondegenerate functional).
std::vector<Poly> gram_schmidt_monic(const MomentSeq &mu, long depth);

/// For r = 1..r_max, condition1 (and condition2 when depth >= 6) on the C(n,k)^r pyramid.
/// Entries are named binom-pow with n = r.
CheckReport binom_power_scan(long r_max, long depth);

} // namespace pyramid

#endif
