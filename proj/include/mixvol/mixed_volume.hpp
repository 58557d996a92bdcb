#pragma once

#include <bit>
#include <cmath>
#include <string>
#include <vector>

#include "mixvol/body.hpp"
#include "mixvol/quadrature.hpp"

namespace mixvol {

/// Argument list of a mixed volume V(K1,...,Kn): bodies with multiplicities
/// summing to the common dimension (or to `slots` when given, e.g. the n-1
/// remaining slots of segment_mv).
struct BodyArgs {
    int dim = 0;
    std::vector<std::pair<BodySpec, int>> items;

    BodyArgs(int n, std::vector<std::pair<BodySpec, int>> it, int slots = -1)
        : dim(n), items(std::move(it)) {
        int total = 0;
        for (const auto& [b, mult] : items) {
            if (body_dim(b) != dim) throw std::invalid_argument("BodyArgs: dimension mismatch");
            if (mult < 0) throw std::invalid_argument("BodyArgs: negative multiplicity");
            total += mult;
        }
        if (total != (slots < 0 ? dim : slots))
            throw std::invalid_argument("BodyArgs: multiplicities must sum to " +
                                        std::to_string(slots < 0 ? dim : slots));
    }

    std::vector<BodySpec> flat() const {
        std::vector<BodySpec> out;
        for (const auto& [b, mult] : items)
            for (int k = 0; k < mult; ++k) out.push_back(b);
        return out;
    }
};

namespace detail {

/// Minkowski sum that also accepts zonotope+polytope mixes by materializing
/// the zonotope (truncated prisms materialize too).
inline BodySpec sum_bodies(const BodySpec& a, const BodySpec& b) {
    auto lift = [](const BodySpec& k) -> BodySpec {
        if (std::holds_alternative<TruncatedPrism>(k)) return as_polytope(k);
        return k;
    };
    BodySpec ka = lift(a);
    BodySpec kb = lift(b);
    const bool pa = std::holds_alternative<Polytope>(ka);
    const bool pb = std::holds_alternative<Polytope>(kb);
    if (pa && std::holds_alternative<Zonotope>(kb)) kb = as_polytope(kb);
    if (pb && std::holds_alternative<Zonotope>(ka)) ka = as_polytope(ka);
    return minkowski_sum(ka, kb);
}

inline bool is_zonotope_like(const BodySpec& k) {
    return std::holds_alternative<Zonotope>(k) || std::holds_alternative<Segment>(k);
}

inline void reject_balls(const std::vector<BodySpec>& bodies, const char* who) {
    for (const auto& b : bodies)
        if (std::holds_alternative<Ball>(b))
            throw capacity_error(std::string(who) +
                                 ": balls are not Minkowski-summable here; use the "
                                 "Steiner-based operations (mv_with_ball, quermassintegral)");
}

}  // namespace detail

/// Mixed volume by polarization of the volume polynomial:
///   V(K1,...,Kn) = (1/n!) sum over nonempty S of (-1)^{n-|S|} Vol(sum_{i in S} K_i).
/// Dimensions 1..3; bodies must be pairwise Minkowski-summable (no balls).
inline double mixed_volume(const BodyArgs& args) {
    const int n = args.dim;
    if (n < 1 || n > 3) throw capacity_error("mixed_volume: dimensions 1..3 only");
    std::vector<BodySpec> bodies = args.flat();
    detail::reject_balls(bodies, "mixed_volume");

    double fact = 1.0;
    for (int k = 2; k <= n; ++k) fact *= k;

    double total = 0.0;
    for (std::uint64_t mask = 1; mask < (1ULL << n); ++mask) {
        bool have = false;
        BodySpec acc = bodies[0];
        for (int i = 0; i < n; ++i) {
            if (!((mask >> i) & 1ULL)) continue;
            if (!have) {
                acc = bodies[static_cast<std::size_t>(i)];
                if (std::holds_alternative<TruncatedPrism>(acc)) acc = as_polytope(acc);
                have = true;
            } else {
                acc = detail::sum_bodies(acc, bodies[static_cast<std::size_t>(i)]);
            }
        }
        const double vol = volume(acc);
        const int card = static_cast<int>(std::popcount(mask));
        total += ((n - card) % 2 == 0) ? vol : -vol;
    }
    return total / fact;
}

/// 2D mixed volume with analytic ball handling: V(B_r, K) = r L(K)/2 and
/// V(B_r, B_s) = pi r s; everything else goes through the polarization.
inline double nu2(const BodySpec& x, const BodySpec& y) {
    if (body_dim(x) != 2 || body_dim(y) != 2) throw std::invalid_argument("nu2: 2D bodies only");
    const bool bx = std::holds_alternative<Ball>(x);
    const bool by = std::holds_alternative<Ball>(y);
    if (bx && by) return std::numbers::pi * std::get<Ball>(x).radius * std::get<Ball>(y).radius;
    if (bx) return std::get<Ball>(x).radius * surface_area(y) / 2.0;
    if (by) return std::get<Ball>(y).radius * surface_area(x) / 2.0;
    return mixed_volume(BodyArgs(2, {{x, 1}, {y, 1}}));
}

/// 1D "mixed volume" (length).
inline double nu1(const BodySpec& x) {
    if (body_dim(x) != 1) throw std::invalid_argument("nu1: 1D body expected");
    return volume(x);
}

/// V(K, T, B) in R^3 by polarizing the surface area in the first two slots:
///   V(K,T,B) = ( |d(K+T)| - |dK| - |dT| ) / 6.
/// Relies on the flat-body convention |dK| = 2 area(K) for degenerate sums.
inline double mv_with_ball(const BodySpec& k, const BodySpec& t) {
    if (body_dim(k) != 3 || body_dim(t) != 3)
        throw std::invalid_argument("mv_with_ball: 3D bodies only");
    detail::reject_balls({k, t}, "mv_with_ball");
    const BodySpec sum = detail::sum_bodies(k, t);
    return 0.5 * (surface_area(sum) - surface_area(k) - surface_area(t)) / 3.0;
}

/// M*(K): mean of the support function over the sphere, by quadrature.
inline double mstar(const BodySpec& k, const QuadratureScheme& q) {
    if (q.dim != body_dim(k)) throw std::invalid_argument("mstar: quadrature dimension mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < q.nodes.size(); ++i)
        s += q.weights[i] * support(k, UnitVector(q.nodes[i]));
    return s;
}

/// Exact 2D value M*(K) = L(K) / (2 pi); the circle quadrature must match it.
inline double mstar_exact_2d(const BodySpec& k) {
    if (body_dim(k) != 2) throw std::invalid_argument("mstar_exact_2d: 2D body expected");
    if (std::holds_alternative<Ball>(k)) return std::get<Ball>(k).radius;
    return surface_area(k) / (2.0 * std::numbers::pi);
}

/// V(K, B[n-1]) = kappa_n M*(K).
inline double quermassintegral_vkb(const BodySpec& k, const QuadratureScheme& q) {
    return kappa_n(body_dim(k)) * mstar(k, q);
}

/// V([0,u], K_2, ..., K_n) = (1/n) nu(K_2|u, ..., K_n|u); the (n-1)-dimensional
/// mixed volume runs on the projections (balls allowed: they project to balls
/// and are handled analytically).
inline double segment_mv(const UnitVector& u, const BodyArgs& rest) {
    const int n = u.dim();
    if (rest.dim != n) throw std::invalid_argument("segment_mv: dimension mismatch");
    if (n != 2 && n != 3) throw capacity_error("segment_mv: dimensions 2 and 3 only");
    std::vector<BodySpec> bodies = rest.flat();
    if (static_cast<int>(bodies.size()) != n - 1)
        throw std::invalid_argument("segment_mv: rest must carry n-1 slots");
    std::vector<BodySpec> proj;
    for (const auto& b : bodies) proj.push_back(project(b, u));
    if (n == 2) return nu1(proj[0]) / 2.0;
    return nu2(proj[0], proj[1]) / 3.0;
}

/// Information functional I(K) = |K| / |dK|.
inline double info(const BodySpec& k) {
    const double s = surface_area(k);
    if (!(s > 0.0))
        throw undefined_value_error("info: surface area is zero; I(K) undefined");
    return volume(k) / s;
}

/// First variation of lambda -> I(A + lambda T) at lambda = 0:
///   f'(0) = I(A) ( n V1/V0 - (n-1) W1/W0 )
/// with V0 = |A|, V1 = V(T, A[n-1]), n W0 = |dA|, W1 = V(T, A[n-2], B).
struct DerivativeReport {
    double v0 = 0.0, v1 = 0.0, w0 = 0.0, w1 = 0.0;
    double fprime0 = 0.0;
};

inline DerivativeReport first_variation(const BodySpec& a, const BodySpec& t) {
    const int n = body_dim(a);
    if (body_dim(t) != n) throw std::invalid_argument("first_variation: dimension mismatch");
    if (n != 2 && n != 3) throw capacity_error("first_variation: dimensions 2 and 3 only");

    DerivativeReport rep;
    rep.v0 = volume(a);
    if (!(rep.v0 > 0.0))
        throw undefined_value_error("first_variation: A must be full-dimensional");
    rep.w0 = surface_area(a) / n;

    const bool t_ball = std::holds_alternative<Ball>(t);
    const double t_radius = t_ball ? std::get<Ball>(t).radius : 0.0;

    if (t_ball) {
        rep.v1 = t_radius * surface_area(a) / n;  // V(B_r, A[n-1]) = r |dA| / n
    } else if (n == 2) {
        rep.v1 = nu2(t, a);
    } else {
        rep.v1 = mixed_volume(BodyArgs(3, {{t, 1}, {a, 2}}));
    }

    if (n == 2) {
        // W1 = V(T, B)
        rep.w1 = t_ball ? std::numbers::pi * t_radius : surface_area(t) / 2.0;
    } else {
        // W1 = V(T, A, B)
        rep.w1 = t_ball ? t_radius * kappa_n(3) * mstar(a, default_sphere_quadrature())
                        : mv_with_ball(t, a);
    }

    const double i_a = rep.v0 / (n * rep.w0);
    rep.fprime0 = i_a * (n * rep.v1 / rep.v0 - (n - 1) * rep.w1 / rep.w0);
    return rep;
}

}  // namespace mixvol
