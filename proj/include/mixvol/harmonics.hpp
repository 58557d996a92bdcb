#pragma once

#include <cmath>
#include <functional>
#include <vector>

#include "mixvol/mixed_volume.hpp"
#include "mixvol/report.hpp"

namespace mixvol {

// ---------------------------------------------------------------------------
// Real spherical harmonics on S^2, orthonormal for the MEAN inner product
// <f,g> = integral of f g against the normalized measure.  In this scaling
// Y_{0,0} == 1, so the (0,0) coefficient of a support function is M*(K)
// directly, and Parseval reads sum of squares = mean of h^2.  This is the one
// place the normalization is fixed; everything else transcribes against it.
//
// Index layout: degree m = 0..lmax has 2m+1 members indexed l = 0..2m with
//   l = 0      -> zonal        P(m,0)(cos th)
//   l = 2j-1   -> cosine       P(m,j)(cos th) cos(j phi)
//   l = 2j     -> sine         P(m,j)(cos th) sin(j phi)
// where P(m,k) are fully normalized associated Legendre functions carrying a
// sqrt(2) for k >= 1, so every basis member has unit mean square.
// Flat position of (m,l) is m^2 + l.
// ---------------------------------------------------------------------------

inline constexpr int kLmaxBound = 24;

inline int sh_index(int m, int l) { return m * m + l; }
inline int sh_count(int lmax) { return (lmax + 1) * (lmax + 1); }

/// All basis values at a unit vector, flat layout, degrees 0..lmax.
inline std::vector<double> sh_basis(int lmax, const Vec& u) {
    if (lmax < 0 || lmax > kLmaxBound)
        throw std::invalid_argument("sh_basis: lmax must be in [0, 24]");
    const double x = u[2];                                   // cos theta
    const double s = std::sqrt(std::max(0.0, 1.0 - x * x));  // sin theta
    const double phi = std::atan2(u[1], u[0]);

    // fully normalized associated Legendre P(m,k), k-th column per degree
    std::vector<double> p(static_cast<std::size_t>((lmax + 1) * (lmax + 1)), 0.0);
    auto pat = [&](int m, int k) -> double& {
        return p[static_cast<std::size_t>(m * (lmax + 1) + k)];
    };
    pat(0, 0) = 1.0;
    if (lmax >= 1) {
        pat(1, 0) = std::sqrt(3.0) * x;
        pat(1, 1) = std::sqrt(3.0) * s;
    }
    for (int m = 2; m <= lmax; ++m) {
        pat(m, m) = s * std::sqrt((2.0 * m + 1.0) / (2.0 * m)) * pat(m - 1, m - 1);
        pat(m, m - 1) = std::sqrt(2.0 * m + 1.0) * x * pat(m - 1, m - 1);
        for (int k = m - 2; k >= 0; --k) {
            const double alpha =
                std::sqrt((2.0 * m - 1.0) * (2.0 * m + 1.0) /
                          (static_cast<double>(m - k) * (m + k)));
            const double beta =
                std::sqrt((2.0 * m + 1.0) * (m + k - 1.0) * (m - k - 1.0) /
                          ((2.0 * m - 3.0) * (m - k) * (m + k)));
            pat(m, k) = alpha * x * pat(m - 1, k) - beta * pat(m - 2, k);
        }
    }

    std::vector<double> out(static_cast<std::size_t>(sh_count(lmax)));
    std::vector<double> ck(static_cast<std::size_t>(lmax + 1)), sk(static_cast<std::size_t>(lmax + 1));
    ck[0] = 1.0;
    sk[0] = 0.0;
    if (lmax >= 1) {
        ck[1] = std::cos(phi);
        sk[1] = std::sin(phi);
        for (int k = 2; k <= lmax; ++k) {  // angle-addition recurrence
            ck[static_cast<std::size_t>(k)] = ck[static_cast<std::size_t>(k - 1)] * ck[1] -
                                              sk[static_cast<std::size_t>(k - 1)] * sk[1];
            sk[static_cast<std::size_t>(k)] = sk[static_cast<std::size_t>(k - 1)] * ck[1] +
                                              ck[static_cast<std::size_t>(k - 1)] * sk[1];
        }
    }
    for (int m = 0; m <= lmax; ++m) {
        out[static_cast<std::size_t>(sh_index(m, 0))] = pat(m, 0);
        for (int j = 1; j <= m; ++j) {
            out[static_cast<std::size_t>(sh_index(m, 2 * j - 1))] =
                pat(m, j) * ck[static_cast<std::size_t>(j)];
            out[static_cast<std::size_t>(sh_index(m, 2 * j))] =
                pat(m, j) * sk[static_cast<std::size_t>(j)];
        }
    }
    return out;
}

/// Scalar field on the sphere (evaluated at unit vectors).
using SphereFunction = std::function<double(const Vec&)>;

inline SphereFunction support_fn(const BodySpec& k) {
    if (body_dim(k) != 3) throw std::invalid_argument("support_fn: 3D body expected");
    return [k](const Vec& u) { return support(k, UnitVector(u)); };
}

/// Truncated expansion of a sphere function; residual is the relative L^2
/// truncation error measured with the same quadrature.
struct HarmonicExpansion {
    int lmax = 0;
    std::vector<double> coeffs;  // flat (m,l) layout
    double residual = 0.0;
    double mean_square = 0.0;  // quadrature value of <h,h>

    double at(int m, int l) const {
        return coeffs[static_cast<std::size_t>(sh_index(m, l))];
    }
};

inline HarmonicExpansion expand_function(const SphereFunction& h, int lmax,
                                         const QuadratureScheme& q) {
    if (q.dim != 3) throw std::invalid_argument("expand_function: S^2 quadrature expected");
    if (lmax < 0 || lmax > kLmaxBound)
        throw std::invalid_argument("expand_function: lmax must be in [0, 24]");
    HarmonicExpansion ex;
    ex.lmax = lmax;
    ex.coeffs.assign(static_cast<std::size_t>(sh_count(lmax)), 0.0);
    for (std::size_t i = 0; i < q.nodes.size(); ++i) {
        const double hv = h(q.nodes[i]);
        const double w = q.weights[i];
        ex.mean_square += w * hv * hv;
        const std::vector<double> basis = sh_basis(lmax, q.nodes[i]);
        for (std::size_t j = 0; j < basis.size(); ++j) ex.coeffs[j] += w * hv * basis[j];
    }
    double captured = 0.0;
    for (double c : ex.coeffs) captured += c * c;
    if (ex.mean_square > 0.0)
        ex.residual = std::sqrt(std::max(0.0, ex.mean_square - captured) / ex.mean_square);
    return ex;
}

inline HarmonicExpansion expand_support(const BodySpec& k, int lmax,
                                        const QuadratureScheme& q = default_spectral_quadrature()) {
    return expand_function(support_fn(k), lmax, q);
}

inline double evaluate(const HarmonicExpansion& ex, const Vec& u) {
    const std::vector<double> basis = sh_basis(ex.lmax, u);
    double s = 0.0;
    for (std::size_t j = 0; j < basis.size(); ++j) s += ex.coeffs[j] * basis[j];
    return s;
}

// ---------------------------------------------------------------------------
// Constants of the zonoid inequality and its conjectured extension.
// ---------------------------------------------------------------------------

struct Constants {
    int n = 0;
    double kappa = 0.0;         // kappa_n
    double ratio = 0.0;         // kappa_{n-1}^2 / (kappa_n kappa_{n-2})
    double c_n = 0.0;           // (n-1)/n * ratio
    double d_n = 0.0;           // (n-1) k^2_{n-1} / (n k_n k_{n-2} - (n-1) k^2_{n-1})
    bool rearrangement_valid = false;  // 1 - C_n > 0, needed to move the m=0 term
};

inline Constants constants(int n) {
    if (n < 2) throw std::invalid_argument("constants: n >= 2 required (kappa_0 = 1)");
    Constants c;
    c.n = n;
    c.kappa = kappa_n(n);
    const double km1 = kappa_n(n - 1);
    const double km2 = kappa_n(n - 2);
    c.ratio = km1 * km1 / (c.kappa * km2);
    c.c_n = (static_cast<double>(n - 1) / n) * c.ratio;
    c.d_n = (n - 1) * km1 * km1 / (n * c.kappa * km2 - (n - 1) * km1 * km1);
    c.rearrangement_valid = c.c_n < 1.0;
    if (!(c.ratio > 1.0 && c.ratio < 1.0 + 1.0 / (n - 1)))
        throw std::logic_error("constants: ratio bound 1 < k^2_{n-1}/(k_n k_{n-2}) < 1 + 1/(n-1) failed");
    return c;
}

// ---------------------------------------------------------------------------
// Spectral mixed volume and the conjecture transcription (n = 3).
// ---------------------------------------------------------------------------

/// V(K,T,B) = kappa_3 sum over (m,l) of k_{m,l} t_{m,l} (1 - m(m+1)/2), the
/// spectral form of the surface-area polarization; truncation error shows up
/// through the expansions' residuals.
inline double mv_spectral_from(const HarmonicExpansion& k, const HarmonicExpansion& t) {
    if (k.lmax != t.lmax) throw std::invalid_argument("mv_spectral: lmax mismatch");
    double s = 0.0;
    for (int m = 0; m <= k.lmax; ++m) {
        const double factor = 1.0 - 0.5 * m * (m + 1.0);
        for (int l = 0; l <= 2 * m; ++l) s += factor * k.at(m, l) * t.at(m, l);
    }
    return kappa_n(3) * s;
}

inline double mv_spectral(const BodySpec& k, const BodySpec& t, int lmax = 16,
                          const QuadratureScheme& q = default_spectral_quadrature()) {
    return mv_spectral_from(expand_support(k, lmax, q), expand_support(t, lmax, q));
}

/// a_{0,0} b_{0,0} >= D_3 sum_{m>=1} ((1-m)(m+2)/2) sum_l a_{m,l} b_{m,l}.
/// Every m >= 1 block carries a nonpositive factor ((1-m)(m+2) <= 0, zero at
/// m = 1), so verdicts are numerical evidence, recorded with both residuals.
inline InequalityReport conjecture_check_from(const HarmonicExpansion& a,
                                              const HarmonicExpansion& b,
                                              std::string digest,
                                              double tol = kQuadratureTol) {
    if (a.lmax != b.lmax) throw std::invalid_argument("conjecture_check: lmax mismatch");
    const Constants c3 = constants(3);
    double tail = 0.0;
    for (int m = 1; m <= a.lmax; ++m) {
        const double factor = 0.5 * (1.0 - m) * (m + 2.0);
        double block = 0.0;
        for (int l = 0; l <= 2 * m; ++l) block += a.at(m, l) * b.at(m, l);
        tail += factor * block;
    }
    InequalityReport rep = make_report("conjecture", a.at(0, 0) * b.at(0, 0), c3.d_n * tail,
                                       tol, std::move(digest));
    rep.details["residual_a"] = a.residual;
    rep.details["residual_b"] = b.residual;
    rep.details["D_3"] = c3.d_n;
    if (rep.verdict == Verdict::equality) rep.equality_case = "orthogonal";
    return rep;
}

inline InequalityReport conjecture_check(const BodySpec& k, const BodySpec& t, int lmax = 16,
                                         const QuadratureScheme& q = default_spectral_quadrature(),
                                         double tol = kQuadratureTol) {
    return conjecture_check_from(expand_support(k, lmax, q), expand_support(t, lmax, q),
                                 digest_of({&k, &t}), tol);
}

// ---------------------------------------------------------------------------
// Synthetic smooth bodies h = 1 + (degree-2 harmonic), with a sampled
// convexity pre-check of the 1-homogeneous extension.
// ---------------------------------------------------------------------------

/// Smallest sampled eigenvalue of the tangential Hessian of H(x) = |x| h(x/|x|)
/// over the quadrature nodes; nonnegative (within tolerance) means convex.
inline double convexity_margin(const SphereFunction& h, const QuadratureScheme& q,
                               double step = 1e-4) {
    auto hom = [&](const Vec& x) {
        const double r = norm(x);
        return r * h(scaled(x, 1.0 / r));
    };
    double margin = std::numeric_limits<double>::infinity();
    for (const Vec& u : q.nodes) {
        const auto basis = complement_basis(UnitVector(u));
        const Vec& t1 = basis[0];
        const Vec& t2 = basis[1];
        const double h0 = hom(u);
        auto at = [&](double s1, double s2) {
            return hom(add(u, add(scaled(t1, s1), scaled(t2, s2))));
        };
        const double h11 = (at(step, 0) - 2.0 * h0 + at(-step, 0)) / (step * step);
        const double h22 = (at(0, step) - 2.0 * h0 + at(0, -step)) / (step * step);
        const double h12 =
            (at(step, step) - at(step, -step) - at(-step, step) + at(-step, -step)) /
            (4.0 * step * step);
        const double tr = h11 + h22;
        const double det = h11 * h22 - h12 * h12;
        const double disc = std::max(0.0, 0.25 * tr * tr - det);
        margin = std::min(margin, 0.5 * tr - std::sqrt(disc));
    }
    return margin;
}

/// Support function 1 + sum of degree-2 harmonics with seeded coefficients;
/// resamples (shrinking the amplitude) until the sampled convexity margin is
/// positive.
inline SphereFunction make_smooth_body(std::uint64_t seed, double amplitude = 0.08,
                                       const QuadratureScheme& q = default_sphere_quadrature()) {
    for (int attempt = 0; attempt < 8; ++attempt) {
        auto eng = trial_engine(seed, static_cast<std::uint64_t>(attempt));
        std::vector<double> c(5);
        for (double& x : c) x = uniform(eng, -amplitude, amplitude);
        SphereFunction h = [c](const Vec& u) {
            const std::vector<double> basis = sh_basis(2, u);
            double s = 1.0;
            for (int l = 0; l <= 4; ++l)
                s += c[static_cast<std::size_t>(l)] *
                     basis[static_cast<std::size_t>(sh_index(2, l))];
            return s;
        };
        if (convexity_margin(h, q) > 1e-6) return h;
        amplitude *= 0.5;
    }
    throw std::runtime_error("make_smooth_body: failed to sample a convex body");
}

}  // namespace mixvol
