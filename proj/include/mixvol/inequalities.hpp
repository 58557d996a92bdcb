#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mixvol/enclosing_circle.hpp"
#include "mixvol/mixed_volume.hpp"
#include "mixvol/report.hpp"

namespace mixvol {

// ---------------------------------------------------------------------------
// Inner and outer radii of T relative to A (2D).
// ---------------------------------------------------------------------------

/// r = max{r : rA + x in T}, R = min{R : T in RA + y} with witnesses.
struct RadiiResult {
    double r = 0.0;
    double R = 0.0;
    Vec x{0.0, 0.0};
    Vec y{0.0, 0.0};
};

namespace detail {

/// Outward unit facet normals of a CCW polygon.
inline std::vector<Vec> facet_normals(const Polytope& p) {
    std::vector<Vec> normals;
    const std::size_t n = p.vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec& a = p.vertices[i];
        const Vec& b = p.vertices[(i + 1) % n];
        Vec nrm{b[1] - a[1], a[0] - b[0]};
        const double len = norm(nrm);
        if (len > 0.0) normals.push_back(scaled(nrm, 1.0 / len));
    }
    return normals;
}

/// Linear program over x = (t, y1, y2): optimize t subject to
///   t * coef_a[j] + <y, u_j> (<=|>=) bound[j]
/// by enumerating basic solutions (3 active constraints), with lexicographic
/// (t, y) tie-breaking.  `maximize` picks the direction; all constraints are
/// `>=` when minimizing and `<=` when maximizing.
struct SmallLp {
    std::vector<double> coef_a;
    std::vector<Vec> dirs;
    std::vector<double> bound;
    bool maximize = false;

    std::optional<std::array<double, 3>> solve() const {
        const std::size_t m = coef_a.size();
        if (m < 3) return std::nullopt;
        double scale = 1.0;
        for (std::size_t j = 0; j < m; ++j)
            scale = std::max({scale, std::abs(coef_a[j]), std::abs(bound[j])});
        const double feas_tol = 1e-9 * scale;
        const double tie_tol = 1e-9 * scale;

        auto feasible = [&](const std::array<double, 3>& x) {
            for (std::size_t j = 0; j < m; ++j) {
                const double lhs = x[0] * coef_a[j] + x[1] * dirs[j][0] + x[2] * dirs[j][1];
                const double slack = maximize ? bound[j] - lhs : lhs - bound[j];
                if (slack < -feas_tol) return false;
            }
            return true;
        };

        std::optional<std::array<double, 3>> best;
        auto better = [&](const std::array<double, 3>& cand) {
            if (!best) return true;
            const double d = cand[0] - (*best)[0];
            if (maximize ? d > tie_tol : d < -tie_tol) return true;
            if (std::abs(d) <= tie_tol) {
                if (cand[1] < (*best)[1] - tie_tol) return true;
                if (std::abs(cand[1] - (*best)[1]) <= tie_tol && cand[2] < (*best)[2] - tie_tol)
                    return true;
            }
            return false;
        };

        for (std::size_t j1 = 0; j1 + 2 < m; ++j1)
            for (std::size_t j2 = j1 + 1; j2 + 1 < m; ++j2)
                for (std::size_t j3 = j2 + 1; j3 < m; ++j3) {
                    // solve the 3x3 active system
                    double a[3][4] = {
                        {coef_a[j1], dirs[j1][0], dirs[j1][1], bound[j1]},
                        {coef_a[j2], dirs[j2][0], dirs[j2][1], bound[j2]},
                        {coef_a[j3], dirs[j3][0], dirs[j3][1], bound[j3]}};
                    double rownorm = 1.0;
                    for (auto& row : a)
                        rownorm *= std::max({std::abs(row[0]), std::abs(row[1]), std::abs(row[2])});
                    // forward elimination with partial pivoting
                    bool singular = false;
                    for (int c = 0; c < 3 && !singular; ++c) {
                        int piv = c;
                        for (int r = c + 1; r < 3; ++r)
                            if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
                        if (std::abs(a[piv][c]) <= 1e-12 * std::max(1.0, rownorm)) {
                            singular = true;
                            break;
                        }
                        if (piv != c)
                            for (int k = 0; k < 4; ++k) std::swap(a[piv][k], a[c][k]);
                        for (int r = c + 1; r < 3; ++r) {
                            const double f = a[r][c] / a[c][c];
                            for (int k = c; k < 4; ++k) a[r][k] -= f * a[c][k];
                        }
                    }
                    if (singular) continue;
                    std::array<double, 3> x{};
                    for (int r = 2; r >= 0; --r) {
                        double s = a[r][3];
                        for (int k = r + 1; k < 3; ++k) s -= a[r][k] * x[static_cast<std::size_t>(k)];
                        x[static_cast<std::size_t>(r)] = s / a[r][r];
                    }
                    if (!better(x)) continue;
                    if (feasible(x)) best = x;
                }
        return best;
    }
};

inline Polytope as_polygon(const BodySpec& k) {
    Polytope p = as_polytope(k);
    if (p.dim != 2) throw std::invalid_argument("expected a 2D body");
    return p;
}

}  // namespace detail

inline RadiiResult inner_outer_radii(const BodySpec& t_body, const BodySpec& a_body) {
    Polytope t = detail::as_polygon(t_body);
    Polytope a = detail::as_polygon(a_body);
    if (a.affine_dim < 2)
        throw capacity_error("inner_outer_radii: A must be a full-dimensional polygon");

    RadiiResult res;

    // Outer: minimize R with h_T(u_j) <= R h_A(u_j) + <y, u_j> over A's normals.
    {
        detail::SmallLp lp;
        for (const Vec& u : detail::facet_normals(a)) {
            lp.coef_a.push_back(support(a, UnitVector(u)));
            lp.dirs.push_back(u);
            lp.bound.push_back(support(t, UnitVector(u)));
        }
        lp.maximize = false;
        auto sol = lp.solve();
        if (!sol) throw std::runtime_error("inner_outer_radii: outer LP infeasible");
        res.R = std::max(0.0, (*sol)[0]);
        res.y = {(*sol)[1], (*sol)[2]};
    }

    // Inner: maximize r with r h_A(w_j) + <x, w_j> <= h_T(w_j) over T's normals.
    if (t.affine_dim < 2) {
        res.r = 0.0;  // A has interior, T does not
        res.x = t.vertices.front();
    } else {
        detail::SmallLp lp;
        for (const Vec& w : detail::facet_normals(t)) {
            lp.coef_a.push_back(support(a, UnitVector(w)));
            lp.dirs.push_back(w);
            lp.bound.push_back(support(t, UnitVector(w)));
        }
        lp.maximize = true;
        auto sol = lp.solve();
        if (!sol) throw std::runtime_error("inner_outer_radii: inner LP infeasible");
        res.r = std::max(0.0, (*sol)[0]);
        res.x = {(*sol)[1], (*sol)[2]};
    }
    return res;
}

// ---------------------------------------------------------------------------
// Bonnesen polynomial P(l) = V(A,A) l^2 + 2 V(T,A) l + V(T,T).
// ---------------------------------------------------------------------------

inline InequalityReport bonnesen_check(const BodySpec& t, const BodySpec& a) {
    if (body_dim(t) != 2 || body_dim(a) != 2)
        throw std::invalid_argument("bonnesen_check: 2D bodies only");
    const double vaa = volume(a);
    const double vta = nu2(t, a);
    const double vtt = volume(t);
    if (!(vaa > 0.0)) throw capacity_error("bonnesen_check: A must be full-dimensional");

    const double disc = std::max(0.0, vta * vta - vaa * vtt);
    const double lambda_minus = (-vta - std::sqrt(disc)) / vaa;
    const double lambda_plus = (-vta + std::sqrt(disc)) / vaa;

    RadiiResult radii = inner_outer_radii(t, a);
    auto p = [&](double l) { return vaa * l * l + 2.0 * vta * l + vtt; };
    const double p_at_R = p(-radii.R);
    const double p_at_r = p(-radii.r);

    const double scale = std::max({1.0, vaa, vta, vtt});
    // all four Bonnesen relations folded into one margin (>= 0 means satisfied)
    const double margin = std::min({-p_at_R, -p_at_r, -radii.R - lambda_minus,
                                    lambda_plus - (-radii.r)});

    InequalityReport rep =
        make_report("bonnesen", 0.0, -margin, kExactTol, digest_of({&t, &a}));
    rep.lhs = p_at_R;
    rep.rhs = p_at_r;
    rep.gap = margin;
    rep.relative_gap = margin / scale;
    rep.verdict = margin >= -kExactTol * scale ? Verdict::holds : Verdict::violated;
    rep.details["P_at_minus_R"] = p_at_R;
    rep.details["P_at_minus_r"] = p_at_r;
    rep.details["lambda_minus"] = lambda_minus;
    rep.details["lambda_plus"] = lambda_plus;
    rep.details["inner_r"] = radii.r;
    rep.details["outer_R"] = radii.R;
    return rep;
}

// ---------------------------------------------------------------------------
// Planar inequality V(K,A) V(T,A) >= 1/2 V(K,T) V(A,A) with equality cases.
// ---------------------------------------------------------------------------

namespace detail {

/// Direction of an interval-like body (affine rank <= 1); nullopt for points
/// (which count as intervals of any direction) and for full-dimensional input.
inline std::optional<Vec> interval_direction(const BodySpec& k) {
    Polytope p = as_polygon(k);
    if (p.affine_dim >= 2) return std::nullopt;
    if (p.affine_dim == 0) return Vec{0.0, 0.0};  // point: degenerate interval
    Vec d = sub(p.vertices[1], p.vertices[0]);
    return scaled(d, 1.0 / norm(d));
}

inline bool parallel(const Vec& a, const Vec& b, double tol) {
    return std::abs(a[0] * b[1] - a[1] * b[0]) <= tol;
}

}  // namespace detail

inline InequalityReport prop51_check(const BodySpec& k, const BodySpec& t, const BodySpec& a) {
    if (body_dim(k) != 2 || body_dim(t) != 2 || body_dim(a) != 2)
        throw std::invalid_argument("prop51_check: 2D bodies only");
    const double vka = nu2(k, a);
    const double vta = nu2(t, a);
    const double vkt = nu2(k, t);
    const double vaa = volume(a);

    InequalityReport rep = make_report("prop51", vka * vta, 0.5 * vkt * vaa, kExactTol,
                                       digest_of({&k, &t, &a}));
    rep.details["V_KA"] = vka;
    rep.details["V_TA"] = vta;
    rep.details["V_KT"] = vkt;
    rep.details["V_AA"] = vaa;

    if (rep.verdict == Verdict::equality) {
        const double scale = std::max({1.0, vka, vta, vkt, vaa});
        if (body_diameter(a) <= 1e-9) {
            rep.equality_case = "A_singleton";
        } else if (vka <= kExactTol * scale || vta <= kExactTol * scale) {
            rep.equality_case = "parallel_intervals";
        } else {
            auto dk = detail::interval_direction(k);
            auto dt = detail::interval_direction(t);
            Polytope pa = detail::as_polygon(a);
            if (dk && dt && pa.vertices.size() == 4) {
                const auto& v = pa.vertices;
                const Vec diag_resid = sub(add(v[0], v[2]), add(v[1], v[3]));
                const Vec e0 = sub(v[1], v[0]);
                const Vec e1 = sub(v[2], v[1]);
                const double tol = 1e-9 * std::max(1.0, body_diameter(a));
                const bool is_parallelogram = norm(diag_resid) <= tol;
                const bool edges_match =
                    (detail::parallel(e0, *dk, tol) && detail::parallel(e1, *dt, tol)) ||
                    (detail::parallel(e0, *dt, tol) && detail::parallel(e1, *dk, tol));
                if (is_parallelogram && edges_match)
                    rep.equality_case = "interval_parallelogram";
            }
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// V(T,B) V(K,B) >= (2/pi) V(T,K) V(B,B), with L(T) >= 4 R(T) on the side.
// ---------------------------------------------------------------------------

namespace detail {

inline double perimeter_2d(const BodySpec& k) {
    if (std::holds_alternative<Ball>(k))
        return 2.0 * std::numbers::pi * std::get<Ball>(k).radius;
    return surface_area(k);
}

inline std::vector<Vec> circumradius_points(const BodySpec& k) {
    if (std::holds_alternative<Ball>(k)) {
        const auto& b = std::get<Ball>(k);
        // the enclosing circle of a disk is the disk itself
        return {add(b.center, {b.radius, 0.0}), add(b.center, {-b.radius, 0.0}),
                add(b.center, {0.0, b.radius}), add(b.center, {0.0, -b.radius})};
    }
    return as_polygon(k).vertices;
}

}  // namespace detail

inline InequalityReport prop53_check(const BodySpec& k, const BodySpec& t) {
    if (body_dim(k) != 2 || body_dim(t) != 2)
        throw std::invalid_argument("prop53_check: 2D bodies only");
    const double l_t = detail::perimeter_2d(t);
    const double l_k = detail::perimeter_2d(k);
    const double vtk = nu2(t, k);

    InequalityReport rep = make_report("prop53", (l_t / 2.0) * (l_k / 2.0), 2.0 * vtk,
                                       kExactTol, digest_of({&k, &t}));

    Circle circ = smallest_enclosing_circle(detail::circumradius_points(t));
    rep.details["L_T"] = l_t;
    rep.details["L_K"] = l_k;
    rep.details["R_T"] = circ.radius;
    rep.details["lemma_margin"] = l_t - 4.0 * circ.radius;  // L(T) >= 4R(T)

    if (rep.verdict == Verdict::equality) {
        auto dk = detail::interval_direction(k);
        auto dt = detail::interval_direction(t);
        if (dk && dt && norm(*dk) > 0.0 && norm(*dt) > 0.0 &&
            std::abs(dot(*dk, *dt)) <= 1e-9)
            rep.equality_case = "orthogonal_segments";
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Theorem about V(K,B[n-1]) V(Z,B[n-1]) vs V(K,Z,B[n-2]) V(B[n]) for zonoids.
// ---------------------------------------------------------------------------

namespace detail {

/// V(Z, B, B) for zonoid-like bodies: kappa_{n-1}/n per unit of generator
/// length; balls are exact.
inline double v_zbb_exact(const BodySpec& z) {
    const double per_unit = kappa_n(2) / 3.0;
    if (std::holds_alternative<Ball>(z)) return kappa_n(3) * std::get<Ball>(z).radius;
    if (std::holds_alternative<Segment>(z)) return per_unit * std::get<Segment>(z).length();
    if (std::holds_alternative<Zonotope>(z)) {
        double len = 0.0;
        for (const Vec& g : std::get<Zonotope>(z).generators) len += norm(g);
        return per_unit * len;
    }
    throw capacity_error("v_zbb_exact: zonoid-like body expected (zonotope/segment/ball)");
}

/// V(K, Z, B) by additivity over Z's generators: each segment slot reduces to
/// projections, V(K,[0,u],B) = nu2(K|u, disk|u) / 3.
inline double v_kzb(const BodySpec& k, const BodySpec& z, const QuadratureScheme& q) {
    if (std::holds_alternative<Ball>(z))
        return std::get<Ball>(z).radius * kappa_n(3) * mstar(k, q);
    std::vector<Vec> gens;
    if (std::holds_alternative<Segment>(z)) {
        gens.push_back(sub(std::get<Segment>(z).b, std::get<Segment>(z).a));
    } else if (std::holds_alternative<Zonotope>(z)) {
        gens = std::get<Zonotope>(z).generators;
    } else {
        throw capacity_error("v_kzb: zonoid-like body expected (zonotope/segment/ball)");
    }
    double total = 0.0;
    const BodySpec ball = Ball(3, zeros(3), 1.0);
    for (const Vec& g : gens) {
        const double len = norm(g);
        if (len == 0.0) continue;
        UnitVector u(g);
        total += len * segment_mv(u, BodyArgs(3, {{k, 1}, {ball, 1}}, 2));
    }
    return total;
}

}  // namespace detail

/// Theorem 2-style check in R^3: lhs = V(K,B,B) V(Z,B,B),
/// rhs = C V(K,Z,B) V(B,B,B) with C = (2/3) kappa_2^2 / (kappa_3 kappa_1);
/// equality detected as the orthogonal-subspace case.
inline InequalityReport thm2_check(const BodySpec& k, const BodySpec& z,
                                   const QuadratureScheme& q = default_sphere_quadrature(),
                                   double tol = kQuadratureTol) {
    if (body_dim(k) != 3 || body_dim(z) != 3)
        throw std::invalid_argument("thm2_check: 3D bodies only");
    const double c3 = (2.0 / 3.0) * kappa_n(2) * kappa_n(2) / (kappa_n(3) * kappa_n(1));
    const double vkbb = kappa_n(3) * mstar(k, q);
    const double vzbb = detail::v_zbb_exact(z);
    const double vkzb = detail::v_kzb(k, z, q);

    InequalityReport rep = make_report("thm2", vkbb * vzbb, c3 * vkzb * kappa_n(3),
                                       tol, digest_of({&k, &z}));
    rep.tolerances["quadrature_nodes"] = static_cast<double>(q.nodes.size());
    if (is_degenerate(k) || is_degenerate(z))
        rep.details["flat_body_surface_convention"] = 1.0;  // |dK| counts both sides
    rep.details["V_KBB"] = vkbb;
    rep.details["V_ZBB"] = vzbb;
    rep.details["V_KZB"] = vkzb;
    rep.details["C_3"] = c3;
    if (rep.verdict == Verdict::equality) rep.equality_case = "orthogonal";
    return rep;
}

// ---------------------------------------------------------------------------
// The two equivalent monotonicity inequalities, checked side by side.
// ---------------------------------------------------------------------------

/// first:  V(B,A[n-1]) V(T,A[n-1]) >= (n-1)/n V(B,T,A[n-2]) V(A[n])
/// second: I(A+T) >= I(A)
/// Both violated together is the counterexample signature.
inline std::pair<InequalityReport, InequalityReport> prop13_check(const BodySpec& a,
                                                                  const BodySpec& t) {
    const int n = body_dim(a);
    if (body_dim(t) != n) throw std::invalid_argument("prop13_check: dimension mismatch");
    if (n != 2 && n != 3) throw capacity_error("prop13_check: dimensions 2 and 3 only");

    const bool t_ball = std::holds_alternative<Ball>(t);
    const double t_radius = t_ball ? std::get<Ball>(t).radius : 0.0;
    const double vol_a = volume(a);
    const double surf_a = surface_area(a);
    if (!(vol_a > 0.0)) throw undefined_value_error("prop13_check: A must be full-dimensional");

    double v_b_an1 = surf_a / n;                      // V(B, A[n-1])
    double v_t_an1 = 0.0;                             // V(T, A[n-1])
    double v_bt_an2 = 0.0;                            // V(B, T, A[n-2])
    bool used_quadrature = false;

    if (n == 2) {
        v_t_an1 = t_ball ? t_radius * surf_a / 2.0 : nu2(t, a);
        v_bt_an2 = t_ball ? std::numbers::pi * t_radius : surface_area(t) / 2.0;
    } else {
        v_t_an1 = t_ball ? t_radius * surf_a / 3.0
                         : mixed_volume(BodyArgs(3, {{t, 1}, {a, 2}}));
        if (t_ball) {
            v_bt_an2 = t_radius * kappa_n(3) * mstar(a, default_sphere_quadrature());
            used_quadrature = true;
        } else {
            v_bt_an2 = mv_with_ball(t, a);
        }
    }

    const double tol = used_quadrature ? kQuadratureTol : kExactTol;
    InequalityReport first =
        make_report("prop13_mixed_volumes", v_b_an1 * v_t_an1,
                    (static_cast<double>(n - 1) / n) * v_bt_an2 * vol_a, tol,
                    digest_of({&a, &t}));
    if (is_degenerate(t)) first.details["flat_body_surface_convention"] = 1.0;
    first.details["V_B_A"] = v_b_an1;
    first.details["V_T_A"] = v_t_an1;
    first.details["V_BT_A"] = v_bt_an2;
    first.details["V_A"] = vol_a;

    // direct monotonicity I(A+T) >= I(A)
    double vol_sum = 0.0, surf_sum = 0.0;
    if (t_ball) {
        // Steiner expansion of volume and surface in the ball radius
        const double r = t_radius;
        if (n == 2) {
            vol_sum = vol_a + r * surf_a + std::numbers::pi * r * r;
            surf_sum = surf_a + 2.0 * std::numbers::pi * r;
        } else {
            const double m = mstar(a, default_sphere_quadrature());
            vol_sum = vol_a + r * surf_a + 3.0 * r * r * kappa_n(3) * m + kappa_n(3) * r * r * r;
            surf_sum = surf_a + 6.0 * r * kappa_n(3) * m + 3.0 * kappa_n(3) * r * r;
            used_quadrature = true;
        }
    } else {
        const BodySpec sum = detail::sum_bodies(a, t);
        vol_sum = volume(sum);
        surf_sum = surface_area(sum);
    }
    InequalityReport second =
        make_report("prop13_monotonicity", vol_sum / surf_sum, vol_a / surf_a,
                    used_quadrature ? kQuadratureTol : kExactTol, digest_of({&a, &t}));
    second.details["I_A_plus_T"] = vol_sum / surf_sum;
    second.details["I_A"] = vol_a / surf_a;
    return {first, second};
}

// ---------------------------------------------------------------------------
// The explicit counterexample family.
// ---------------------------------------------------------------------------

/// Checks the truncated-box family: (a) the closed-form feasibility condition
/// on (eps, M), (b) I(A) vs I(A|u) = 1/(2(n-1)) analytically for any n,
/// (c) for n = 3 a full rebuild of A as an explicit polytope through the
/// generic 3D machinery, required to agree to 1e-9.
/// The inequality under test is I(A|u) >= I(A); verdict `violated` is the
/// expected outcome for feasible parameters.
inline InequalityReport counterexample_verify(int n, double eps, double m_height) {
    if (n < 3) throw std::invalid_argument("counterexample_verify: requires n >= 3");
    TruncatedPrism prism(n, eps, m_height);  // validates eps and M

    const double feas_lhs =
        1.0 / (m_height * (n - 1)) + std::pow(eps, n - 1) / detail::factorial(n);
    const double feas_rhs = std::pow(eps, n - 2) / (2.0 * detail::factorial(n - 1)) *
                            (1.0 - std::sqrt(static_cast<double>(n)) / (n - 1));
    const bool feasible = feas_lhs < feas_rhs;

    const BodySpec body = prism;
    const double info_closed = volume(body) / surface_area(body);
    const double info_proj = 1.0 / (2.0 * (n - 1));

    InequalityReport rep = make_report("counterexample", info_proj, info_closed, 1e-9,
                                       digest_of({&body}));
    rep.details["feasibility_lhs"] = feas_lhs;
    rep.details["feasibility_rhs"] = feas_rhs;
    rep.details["info_closed_form"] = info_closed;
    rep.details["info_projection"] = info_proj;

    if (n == 3) {
        const double info_poly = info(as_polytope(prism));
        rep.details["info_polytope_pipeline"] = info_poly;
        rep.details["closed_vs_polytope_residual"] =
            std::abs(info_closed - info_poly) / info_closed;
    }
    if (!feasible) rep.verdict = Verdict::inconclusive;
    return rep;
}

/// Grid scan for a feasible (eps, M) pair at the given dimension.
inline std::optional<std::pair<double, double>> counterexample_scan(int n) {
    if (n < 3) throw std::invalid_argument("counterexample_scan: requires n >= 3");
    for (int ei = 1; ei <= 40; ++ei) {
        const double eps = 0.025 * ei;
        if (eps >= 1.0) break;
        for (int mi = 1; mi <= 8; ++mi) {
            const double m_height = std::pow(10.0, mi);
            const double lhs = 1.0 / (m_height * (n - 1)) + std::pow(eps, n - 1) / detail::factorial(n);
            const double rhs = std::pow(eps, n - 2) / (2.0 * detail::factorial(n - 1)) *
                               (1.0 - std::sqrt(static_cast<double>(n)) / (n - 1));
            if (lhs < rhs) return std::make_pair(eps, m_height);
        }
    }
    return std::nullopt;
}

}  // namespace mixvol
