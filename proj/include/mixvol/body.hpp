#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mixvol/hull.hpp"
#include "mixvol/kappa.hpp"
#include "mixvol/vec.hpp"

namespace mixvol {

// ---------------------------------------------------------------------------
// Body representations.  All values are immutable after construction.
// ---------------------------------------------------------------------------

/// V-representation polytope in dimension 2 or 3, stored canonically as the
/// extreme points of its hull (CCW cycle in 2D / planar case, lexicographic
/// order for full 3D).  Lower-dimensional point sets are first-class: they
/// carry affine_dim < dim and volume 0.
struct Polytope {
    int dim = 0;
    int affine_dim = 0;
    std::vector<Vec> vertices;

    Polytope(int d, std::vector<Vec> points) : dim(d) {
        if (d != 2 && d != 3) throw capacity_error("Polytope: only dimensions 2 and 3");
        if (points.empty()) throw std::invalid_argument("Polytope: empty vertex list");
        for (const Vec& p : points)
            if (static_cast<int>(p.size()) != d)
                throw std::invalid_argument("Polytope: point dimension mismatch");
        canonicalize(std::move(points));
    }

  private:
    void canonicalize(std::vector<Vec> points) {
        AffineBasis ab = affine_basis(points);
        affine_dim = ab.rank();
        if (affine_dim == 0) {
            vertices = {points[0]};
            return;
        }
        if (affine_dim == 1) {
            // extremes along the direction
            const Vec& d0 = ab.dirs[0];
            double lo = dot(sub(points[0], ab.origin), d0);
            double hi = lo;
            Vec plo = points[0], phi = points[0];
            for (const Vec& p : points) {
                const double t = dot(sub(p, ab.origin), d0);
                if (t < lo) { lo = t; plo = p; }
                if (t > hi) { hi = t; phi = p; }
            }
            vertices = detail::lex_less(plo, phi) ? std::vector<Vec>{plo, phi}
                                                  : std::vector<Vec>{phi, plo};
            if (vertices[0] == vertices[1]) vertices.resize(1);
            return;
        }
        if (affine_dim == 2) {
            if (dim == 2) {  // ambient coordinates directly: CCW guaranteed
                vertices = hull2d(std::move(points));
                return;
            }
            // planar set in 3D: hull in-plane, keep the cycle of original points
            std::vector<Vec> plane;
            plane.reserve(points.size());
            for (const Vec& p : points) plane.push_back(affine_coords(ab, p));
            std::vector<Vec> h = hull2d(plane);
            vertices.clear();
            for (const Vec& c : h) {
                Vec p = ab.origin;
                for (std::size_t i = 0; i < ab.dirs.size(); ++i)
                    p = add(p, scaled(ab.dirs[i], c[i]));
                vertices.push_back(std::move(p));
            }
            return;
        }
        Hull3 h = hull3d_full(points);
        vertices = std::move(h.vertices);
    }
};

/// Zonotope: center + sum of segments [-g/2, +g/2] over the generators, so the
/// total extent along a generator is |g| and vol = sum over n-subsets |det|.
struct Zonotope {
    int dim = 0;
    Vec center;
    std::vector<Vec> generators;

    Zonotope(int d, Vec c, std::vector<Vec> gens)
        : dim(d), center(std::move(c)), generators(std::move(gens)) {
        if (d < 1) throw std::invalid_argument("Zonotope: dim must be positive");
        if (static_cast<int>(center.size()) != d)
            throw std::invalid_argument("Zonotope: center dimension mismatch");
        for (const Vec& g : generators) {
            if (static_cast<int>(g.size()) != d)
                throw std::invalid_argument("Zonotope: generator dimension mismatch");
            for (double x : g)
                if (!std::isfinite(x)) throw std::invalid_argument("Zonotope: non-finite generator");
        }
    }
};

struct Ball {
    int dim = 0;
    Vec center;
    double radius = 0.0;

    Ball(int d, Vec c, double r) : dim(d), center(std::move(c)), radius(r) {
        if (d < 1) throw std::invalid_argument("Ball: dim must be positive");
        if (static_cast<int>(center.size()) != d)
            throw std::invalid_argument("Ball: center dimension mismatch");
        if (!(r >= 0.0) || !std::isfinite(r)) throw std::invalid_argument("Ball: radius must be >= 0");
    }
};

struct Segment {
    int dim = 0;
    Vec a, b;

    Segment(int d, Vec a_, Vec b_) : dim(d), a(std::move(a_)), b(std::move(b_)) {
        if (d < 1) throw std::invalid_argument("Segment: dim must be positive");
        if (static_cast<int>(a.size()) != d || static_cast<int>(b.size()) != d)
            throw std::invalid_argument("Segment: endpoint dimension mismatch");
    }

    double length() const { return dist(a, b); }
};

/// The truncated box A = (Q + M[0,e_n]) \ D: the box [0,1]^{n-1} x [0,M]
/// intersected with the half-space x_1/eps + ... + x_{n-1}/eps + x_n/M >= 1.
/// Closed-form volume/surface/projection in every dimension; materializable
/// as an explicit polytope when n = 3.
struct TruncatedPrism {
    int dim = 0;
    double eps = 0.0;
    double M = 0.0;

    TruncatedPrism(int d, double e, double m) : dim(d), eps(e), M(m) {
        if (d < 2) throw std::invalid_argument("TruncatedPrism: dim must be >= 2");
        if (!(e > 0.0 && e < 1.0)) throw std::invalid_argument("TruncatedPrism: eps must be in (0,1)");
        if (!(m > 1.0)) throw std::invalid_argument("TruncatedPrism: M must be > 1");
    }

    /// Exact vertex set: every box vertex except the origin, plus the cut
    /// points eps*e_i on the edges leaving the origin.
    std::vector<Vec> vertex_set() const {
        if (dim > 20) throw capacity_error("TruncatedPrism: vertex enumeration limited to dim <= 20");
        std::vector<Vec> vs;
        const int base = dim - 1;
        for (std::uint64_t mask = 0; mask < (1ULL << dim); ++mask) {
            if (mask == 0) continue;  // origin is cut away
            Vec v(static_cast<std::size_t>(dim), 0.0);
            for (int i = 0; i < base; ++i)
                if ((mask >> i) & 1ULL) v[static_cast<std::size_t>(i)] = 1.0;
            if ((mask >> base) & 1ULL) v[static_cast<std::size_t>(base)] = M;
            vs.push_back(std::move(v));
        }
        for (int i = 0; i < base; ++i) {
            Vec v(static_cast<std::size_t>(dim), 0.0);
            v[static_cast<std::size_t>(i)] = eps;
            vs.push_back(std::move(v));
        }
        return vs;
    }
};

using BodySpec = std::variant<Polytope, Zonotope, Ball, Segment, TruncatedPrism>;

inline int body_dim(const BodySpec& k) {
    return std::visit([](const auto& b) { return b.dim; }, k);
}

namespace detail {
template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

inline double factorial(int n) {
    double f = 1.0;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

/// (n-1)-volume of the simplex conv{p_0,...,p_{n-1}} via the Gram determinant.
inline double simplex_facet_volume(const std::vector<Vec>& verts) {
    const std::size_t k = verts.size() - 1;
    std::vector<Vec> edges;
    for (std::size_t i = 1; i < verts.size(); ++i) edges.push_back(sub(verts[i], verts[0]));
    std::vector<double> gram(k * k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) gram[i * k + j] = dot(edges[i], edges[j]);
    // Cholesky-free: Gaussian elimination determinant of the Gram matrix
    double det = 1.0;
    for (std::size_t c = 0; c < k; ++c) {
        std::size_t piv = c;
        for (std::size_t r = c + 1; r < k; ++r)
            if (std::abs(gram[r * k + c]) > std::abs(gram[piv * k + c])) piv = r;
        if (gram[piv * k + c] == 0.0) return 0.0;
        if (piv != c) {
            for (std::size_t j = 0; j < k; ++j) std::swap(gram[piv * k + j], gram[c * k + j]);
            det = -det;
        }
        det *= gram[c * k + c];
        for (std::size_t r = c + 1; r < k; ++r) {
            const double f = gram[r * k + c] / gram[c * k + c];
            for (std::size_t j = c; j < k; ++j) gram[r * k + j] -= f * gram[c * k + j];
        }
    }
    return std::sqrt(std::abs(det)) / factorial(static_cast<int>(k));
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Support function.
// ---------------------------------------------------------------------------

inline double support(const BodySpec& k, const UnitVector& u) {
    if (body_dim(k) != u.dim()) throw std::invalid_argument("support: dimension mismatch");
    return std::visit(
        detail::overloaded{
            [&](const Polytope& p) {
                double best = dot(p.vertices[0], u.coords());
                for (const Vec& v : p.vertices) best = std::max(best, dot(v, u.coords()));
                return best;
            },
            [&](const Zonotope& z) {
                double s = dot(z.center, u.coords());
                for (const Vec& g : z.generators) s += 0.5 * std::abs(dot(g, u.coords()));
                return s;
            },
            [&](const Ball& b) { return dot(b.center, u.coords()) + b.radius; },
            [&](const Segment& s) {
                return std::max(dot(s.a, u.coords()), dot(s.b, u.coords()));
            },
            [&](const TruncatedPrism& t) {
                double best = -std::numeric_limits<double>::infinity();
                for (const Vec& v : t.vertex_set()) best = std::max(best, dot(v, u.coords()));
                return best;
            }},
        k);
}

// ---------------------------------------------------------------------------
// Volume.
// ---------------------------------------------------------------------------

namespace detail {

/// CCW cycle of a planar polytope embedded in 3D (affine_dim == 2).
inline std::vector<Vec> planar_cycle_coords(const Polytope& p) {
    AffineBasis ab = affine_basis(p.vertices);
    std::vector<Vec> plane;
    plane.reserve(p.vertices.size());
    for (const Vec& v : p.vertices) plane.push_back(affine_coords(ab, v));
    return hull2d(plane);
}

inline double zonotope_volume(const Zonotope& z) {
    const int n = z.dim;
    const int m = static_cast<int>(z.generators.size());
    if (m < n) return 0.0;
    if (m > 24) throw capacity_error("zonotope volume: more than 24 generators");
    double total = 0.0;
    std::vector<int> idx(static_cast<std::size_t>(n));
    // enumerate n-subsets of generators
    for (int i = 0; i < n; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        std::vector<double> a(static_cast<std::size_t>(n) * n);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c)
                a[static_cast<std::size_t>(r) * n + c] =
                    z.generators[static_cast<std::size_t>(idx[static_cast<std::size_t>(c)])]
                                [static_cast<std::size_t>(r)];
        // reuse the small in-place determinant from the discriminant module
        double det = 1.0;
        for (int c = 0; c < n; ++c) {
            int piv = c;
            for (int r = c + 1; r < n; ++r)
                if (std::abs(a[static_cast<std::size_t>(r) * n + c]) >
                    std::abs(a[static_cast<std::size_t>(piv) * n + c]))
                    piv = r;
            if (a[static_cast<std::size_t>(piv) * n + c] == 0.0) { det = 0.0; break; }
            if (piv != c) {
                for (int j = 0; j < n; ++j)
                    std::swap(a[static_cast<std::size_t>(piv) * n + j],
                              a[static_cast<std::size_t>(c) * n + j]);
                det = -det;
            }
            const double pv = a[static_cast<std::size_t>(c) * n + c];
            det *= pv;
            for (int r = c + 1; r < n; ++r) {
                const double f = a[static_cast<std::size_t>(r) * n + c] / pv;
                for (int j = c; j < n; ++j)
                    a[static_cast<std::size_t>(r) * n + j] -= f * a[static_cast<std::size_t>(c) * n + j];
            }
        }
        total += std::abs(det);
        // next subset
        int i = n - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - n + i) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < n; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
    return total;
}

}  // namespace detail

inline double volume(const BodySpec& k) {
    return std::visit(
        detail::overloaded{
            [&](const Polytope& p) -> double {
                if (p.affine_dim < p.dim) return 0.0;
                if (p.dim == 2) return polygon_area(p.vertices);
                return hull3d_full(p.vertices).volume;
            },
            [&](const Zonotope& z) -> double {
                if (z.dim == 1) {
                    double s = 0.0;
                    for (const Vec& g : z.generators) s += std::abs(g[0]);
                    return s;
                }
                return detail::zonotope_volume(z);
            },
            [&](const Ball& b) -> double { return kappa_n(b.dim) * std::pow(b.radius, b.dim); },
            [&](const Segment& s) -> double { return s.dim == 1 ? s.length() : 0.0; },
            [&](const TruncatedPrism& t) -> double {
                return t.M - t.M * std::pow(t.eps, t.dim - 1) / detail::factorial(t.dim);
            }},
        k);
}

// ---------------------------------------------------------------------------
// Surface area.  A flat (codimension-1) body counts both sides, matching the
// Minkowski-sum limit; lower codimension gives 0.
// ---------------------------------------------------------------------------

inline double surface_area(const BodySpec& k) {
    return std::visit(
        detail::overloaded{
            [&](const Polytope& p) -> double {
                if (p.dim == 2) {
                    if (p.affine_dim == 2) return polygon_perimeter(p.vertices);
                    if (p.affine_dim == 1) return 2.0 * dist(p.vertices[0], p.vertices[1]);
                    return 0.0;
                }
                if (p.affine_dim == 3) return hull3d_full(p.vertices).area;
                if (p.affine_dim == 2)  // orientation of the in-plane basis is arbitrary
                    return 2.0 * std::abs(polygon_area(detail::planar_cycle_coords(p)));
                return 0.0;
            },
            [&](const Zonotope& z) -> double {
                if (z.dim == 2) {
                    double s = 0.0;
                    for (const Vec& g : z.generators) s += norm(g);
                    return 2.0 * s;
                }
                if (z.dim == 3) {
                    double s = 0.0;
                    for (std::size_t i = 0; i < z.generators.size(); ++i)
                        for (std::size_t j = i + 1; j < z.generators.size(); ++j)
                            s += norm(cross3(z.generators[i], z.generators[j]));
                    return 2.0 * s;
                }
                throw capacity_error("surface_area: zonotope supported in dimensions 2 and 3");
            },
            [&](const Ball& b) -> double {
                return b.dim * kappa_n(b.dim) * std::pow(b.radius, b.dim - 1);
            },
            [&](const Segment& s) -> double { return s.dim == 2 ? 2.0 * s.length() : 0.0; },
            [&](const TruncatedPrism& t) -> double {
                const int n = t.dim;
                const double box = 2.0 * t.M * (n - 1) + 2.0;
                const double f_n = std::pow(t.eps, n - 1) / detail::factorial(n - 1);
                const double f_side = t.M * std::pow(t.eps, n - 2) / detail::factorial(n - 1);
                std::vector<Vec> cut;  // conv{eps e_1, ..., eps e_{n-1}, M e_n}
                for (int i = 0; i < n - 1; ++i) cut.push_back(scaled(unit_axis(n, i), t.eps));
                cut.push_back(scaled(unit_axis(n, n - 1), t.M));
                const double f_0 = detail::simplex_facet_volume(cut);
                return box - (f_n + (n - 1) * f_side) + f_0;
            }},
        k);
}

// ---------------------------------------------------------------------------
// Minkowski sum, translation, scaling, reflection.
// ---------------------------------------------------------------------------

namespace detail {

inline Zonotope segment_as_zonotope(const Segment& s) {
    std::vector<Vec> gens;
    Vec g = sub(s.b, s.a);
    if (norm(g) > 0.0) gens.push_back(std::move(g));
    return Zonotope(s.dim, scaled(add(s.a, s.b), 0.5), std::move(gens));
}

inline std::vector<Vec> polytope_vertices(const BodySpec& k) {
    return std::visit(
        overloaded{[&](const Polytope& p) { return p.vertices; },
                   [&](const Segment& s) {
                       return s.a == s.b ? std::vector<Vec>{s.a} : std::vector<Vec>{s.a, s.b};
                   },
                   [&](const auto&) -> std::vector<Vec> {
                       throw capacity_error("expected a polytope-like body");
                   }},
        k);
}

}  // namespace detail

/// Supported pairs: polytope+polytope, polytope+segment, zonotope+zonotope,
/// zonotope+segment, segment+segment (any order).  Ball sums are served by
/// the Steiner-based operations in the mixed-volume module instead.
inline BodySpec minkowski_sum(const BodySpec& k, const BodySpec& l) {
    if (body_dim(k) != body_dim(l))
        throw std::invalid_argument("minkowski_sum: dimension mismatch");
    const bool k_poly = std::holds_alternative<Polytope>(k);
    const bool l_poly = std::holds_alternative<Polytope>(l);
    const bool k_zono = std::holds_alternative<Zonotope>(k);
    const bool l_zono = std::holds_alternative<Zonotope>(l);
    const bool k_seg = std::holds_alternative<Segment>(k);
    const bool l_seg = std::holds_alternative<Segment>(l);

    if ((k_poly && (l_poly || l_seg)) || (k_seg && l_poly)) {
        const auto& va = detail::polytope_vertices(k);
        const auto& vb = detail::polytope_vertices(l);
        std::vector<Vec> sums;
        sums.reserve(va.size() * vb.size());
        for (const Vec& a : va)
            for (const Vec& b : vb) sums.push_back(add(a, b));
        return Polytope(body_dim(k), std::move(sums));
    }
    if ((k_zono || k_seg) && (l_zono || l_seg)) {
        Zonotope za = k_zono ? std::get<Zonotope>(k)
                             : detail::segment_as_zonotope(std::get<Segment>(k));
        Zonotope zb = l_zono ? std::get<Zonotope>(l)
                             : detail::segment_as_zonotope(std::get<Segment>(l));
        std::vector<Vec> gens = za.generators;
        gens.insert(gens.end(), zb.generators.begin(), zb.generators.end());
        return Zonotope(za.dim, add(za.center, zb.center), std::move(gens));
    }
    throw capacity_error(
        "minkowski_sum: unsupported body pair; ball sums are handled by the "
        "Steiner-based mixed-volume operations");
}

inline BodySpec translate(const BodySpec& k, const Vec& t) {
    return std::visit(
        detail::overloaded{
            [&](const Polytope& p) -> BodySpec {
                std::vector<Vec> vs;
                for (const Vec& v : p.vertices) vs.push_back(add(v, t));
                return Polytope(p.dim, std::move(vs));
            },
            [&](const Zonotope& z) -> BodySpec {
                return Zonotope(z.dim, add(z.center, t), z.generators);
            },
            [&](const Ball& b) -> BodySpec { return Ball(b.dim, add(b.center, t), b.radius); },
            [&](const Segment& s) -> BodySpec {
                return Segment(s.dim, add(s.a, t), add(s.b, t));
            },
            [&](const TruncatedPrism&) -> BodySpec {
                throw capacity_error("translate: truncated prism is anchored; materialize first");
            }},
        k);
}

inline BodySpec scale_body(const BodySpec& k, double lambda) {
    if (!(lambda >= 0.0)) throw std::invalid_argument("scale_body: lambda must be >= 0");
    return std::visit(
        detail::overloaded{
            [&](const Polytope& p) -> BodySpec {
                std::vector<Vec> vs;
                for (const Vec& v : p.vertices) vs.push_back(scaled(v, lambda));
                return Polytope(p.dim, std::move(vs));
            },
            [&](const Zonotope& z) -> BodySpec {
                std::vector<Vec> gens;
                for (const Vec& g : z.generators) gens.push_back(scaled(g, lambda));
                return Zonotope(z.dim, scaled(z.center, lambda), std::move(gens));
            },
            [&](const Ball& b) -> BodySpec {
                return Ball(b.dim, scaled(b.center, lambda), lambda * b.radius);
            },
            [&](const Segment& s) -> BodySpec {
                return Segment(s.dim, scaled(s.a, lambda), scaled(s.b, lambda));
            },
            [&](const TruncatedPrism&) -> BodySpec {
                throw capacity_error("scale_body: truncated prism is anchored; materialize first");
            }},
        k);
}

/// Image under the reflection Pi_u(x) = x - 2u<x,u> through the hyperplane
/// orthogonal to u.
inline BodySpec reflect(const BodySpec& k, const UnitVector& u) {
    if (body_dim(k) != u.dim()) throw std::invalid_argument("reflect: dimension mismatch");
    auto pi = [&](const Vec& x) { return sub(x, scaled(u.coords(), 2.0 * dot(x, u.coords()))); };
    return std::visit(
        detail::overloaded{
            [&](const Polytope& p) -> BodySpec {
                std::vector<Vec> vs;
                for (const Vec& v : p.vertices) vs.push_back(pi(v));
                return Polytope(p.dim, std::move(vs));
            },
            [&](const Zonotope& z) -> BodySpec {
                std::vector<Vec> gens;
                for (const Vec& g : z.generators) gens.push_back(pi(g));
                return Zonotope(z.dim, pi(z.center), std::move(gens));
            },
            [&](const Ball& b) -> BodySpec { return Ball(b.dim, pi(b.center), b.radius); },
            [&](const Segment& s) -> BodySpec { return Segment(s.dim, pi(s.a), pi(s.b)); },
            [&](const TruncatedPrism&) -> BodySpec {
                throw capacity_error("reflect: truncated prism not supported; materialize first");
            }},
        k);
}

// ---------------------------------------------------------------------------
// Projection onto u^perp.
// ---------------------------------------------------------------------------

/// Deterministic orthonormal basis of u^perp: Gram-Schmidt on the standard
/// basis after removing the coordinate of largest |u_i| (smallest index wins
/// ties).
inline std::vector<Vec> complement_basis(const UnitVector& u) {
    const int n = u.dim();
    int drop = 0;
    for (int i = 1; i < n; ++i)
        if (std::abs(u[static_cast<std::size_t>(i)]) > std::abs(u[static_cast<std::size_t>(drop)]))
            drop = i;
    std::vector<Vec> basis;
    for (int i = 0; i < n; ++i) {
        if (i == drop) continue;
        Vec v = unit_axis(n, i);
        v = sub(v, scaled(u.coords(), dot(v, u.coords())));
        for (const Vec& b : basis) v = sub(v, scaled(b, dot(v, b)));
        basis.push_back(scaled(v, 1.0 / norm(v)));
    }
    return basis;
}

/// Express a (dim-1)-coordinate vector in ambient coordinates.
inline Vec embed_in_complement(const std::vector<Vec>& basis, const Vec& w) {
    Vec p = zeros(static_cast<int>(basis[0].size()));
    for (std::size_t i = 0; i < basis.size(); ++i) p = add(p, scaled(basis[i], w[i]));
    return p;
}

inline BodySpec project(const BodySpec& k, const UnitVector& u);

namespace detail {

inline Vec project_point(const std::vector<Vec>& basis, const Vec& p) {
    Vec c(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) c[i] = dot(p, basis[i]);
    return c;
}

inline BodySpec projected_point_set(int dim, const std::vector<Vec>& basis,
                                    const std::vector<Vec>& pts) {
    std::vector<Vec> proj;
    proj.reserve(pts.size());
    for (const Vec& p : pts) proj.push_back(project_point(basis, p));
    if (dim - 1 == 1) {
        double lo = proj[0][0], hi = proj[0][0];
        for (const Vec& p : proj) {
            lo = std::min(lo, p[0]);
            hi = std::max(hi, p[0]);
        }
        return Segment(1, {lo}, {hi});
    }
    return Polytope(dim - 1, std::move(proj));
}

}  // namespace detail

inline BodySpec project(const BodySpec& k, const UnitVector& u) {
    const int n = body_dim(k);
    if (n != u.dim()) throw std::invalid_argument("project: dimension mismatch");
    if (n < 2) throw std::invalid_argument("project: requires dim >= 2");
    const std::vector<Vec> basis = complement_basis(u);
    return std::visit(
        detail::overloaded{
            [&](const Polytope& p) -> BodySpec {
                return detail::projected_point_set(n, basis, p.vertices);
            },
            [&](const Zonotope& z) -> BodySpec {
                std::vector<Vec> gens;
                for (const Vec& g : z.generators) gens.push_back(detail::project_point(basis, g));
                return Zonotope(n - 1, detail::project_point(basis, z.center), std::move(gens));
            },
            [&](const Ball& b) -> BodySpec {
                return Ball(n - 1, detail::project_point(basis, b.center), b.radius);
            },
            [&](const Segment& s) -> BodySpec {
                return Segment(n - 1, detail::project_point(basis, s.a),
                               detail::project_point(basis, s.b));
            },
            [&](const TruncatedPrism& t) -> BodySpec {
                if (std::abs(std::abs(u[static_cast<std::size_t>(n - 1)]) - 1.0) <= 1e-12) {
                    // A|e_n is the unit cube Q, expressed in the standard
                    // complement basis e_1..e_{n-1}
                    std::vector<Vec> gens;
                    for (int i = 0; i < n - 1; ++i) gens.push_back(unit_axis(n - 1, i));
                    return Zonotope(n - 1, Vec(static_cast<std::size_t>(n - 1), 0.5),
                                    std::move(gens));
                }
                if (n == 3) return detail::projected_point_set(n, basis, t.vertex_set());
                throw capacity_error(
                    "project: truncated prism in dim > 3 only along the prism axis");
            }},
        k);
}

// ---------------------------------------------------------------------------
// Construction helpers.
// ---------------------------------------------------------------------------

/// Convex hull of a point set (the canonicalizing constructor made public).
inline Polytope hull(std::vector<Vec> points, int dim) { return Polytope(dim, std::move(points)); }

/// Unit cube [0,1]^dim as a polytope (dim 2 or 3).
inline Polytope unit_cube(int dim) {
    std::vector<Vec> vs;
    for (std::uint64_t mask = 0; mask < (1ULL << dim); ++mask) {
        Vec v(static_cast<std::size_t>(dim));
        for (int i = 0; i < dim; ++i) v[static_cast<std::size_t>(i)] = (mask >> i) & 1ULL ? 1.0 : 0.0;
        vs.push_back(std::move(v));
    }
    return Polytope(dim, std::move(vs));
}

/// Regular k-gon inscribed in the circle of the given radius; the polygonal
/// stand-in for the disk in mixed-volume plumbing.
inline Polytope regular_polygon(int sides, double radius = 1.0, Vec center = {0.0, 0.0}) {
    if (sides < 3) throw std::invalid_argument("regular_polygon: need at least 3 sides");
    std::vector<Vec> vs;
    for (int i = 0; i < sides; ++i) {
        const double t = 2.0 * std::numbers::pi * i / sides;
        vs.push_back({center[0] + radius * std::cos(t), center[1] + radius * std::sin(t)});
    }
    return Polytope(2, std::move(vs));
}

/// Materialize a body as an explicit polytope (dims 2 and 3).
inline Polytope as_polytope(const BodySpec& k) {
    return std::visit(
        detail::overloaded{
            [&](const Polytope& p) { return p; },
            [&](const Zonotope& z) {
                if (z.dim != 2 && z.dim != 3)
                    throw capacity_error("as_polytope: zonotope dims 2 and 3 only");
                if (z.generators.size() > 16)
                    throw capacity_error("as_polytope: zonotope limited to 16 generators");
                std::vector<Vec> pts;
                const std::size_t m = z.generators.size();
                for (std::uint64_t mask = 0; mask < (1ULL << m); ++mask) {
                    Vec p = z.center;
                    for (std::size_t i = 0; i < m; ++i)
                        p = add(p, scaled(z.generators[i], ((mask >> i) & 1ULL) ? 0.5 : -0.5));
                    pts.push_back(std::move(p));
                }
                return Polytope(z.dim, std::move(pts));
            },
            [&](const Ball&) -> Polytope {
                throw capacity_error("as_polytope: balls have no exact polytope form; "
                                     "use regular_polygon as a 2D surrogate");
            },
            [&](const Segment& s) {
                return Polytope(s.dim, s.a == s.b ? std::vector<Vec>{s.a}
                                                  : std::vector<Vec>{s.a, s.b});
            },
            [&](const TruncatedPrism& t) {
                if (t.dim != 3)
                    throw capacity_error("as_polytope: truncated prism materializes only in dim 3");
                return Polytope(3, t.vertex_set());
            }},
        k);
}

/// Seeded random body generator (reproducible): a polytope is the hull of
/// `size` uniform points in [-1,1]^dim, a zonotope has `size` uniform
/// generators.
inline BodySpec random_body(const std::string& kind, int dim, int size, std::uint64_t seed) {
    if (size < 1) throw std::invalid_argument("random_body: size must be >= 1");
    std::mt19937_64 eng(splitmix64(seed));
    auto rand_vec = [&]() {
        Vec v(static_cast<std::size_t>(dim));
        for (double& x : v) x = uniform(eng, -1.0, 1.0);
        return v;
    };
    if (kind == "polytope") {
        if (dim != 2 && dim != 3)
            throw std::invalid_argument("random_body: polytope dims 2 and 3 only");
        std::vector<Vec> pts;
        for (int i = 0; i < size; ++i) pts.push_back(rand_vec());
        return Polytope(dim, std::move(pts));
    }
    if (kind == "zonotope") {
        std::vector<Vec> gens;
        for (int i = 0; i < size; ++i) gens.push_back(rand_vec());
        return Zonotope(dim, zeros(dim), std::move(gens));
    }
    if (kind == "segment") {
        return Segment(dim, rand_vec(), rand_vec());
    }
    throw std::invalid_argument("random_body: unsupported kind '" + kind + "'");
}

/// Is the body lower-dimensional in its ambient space?  Reports that rely on
/// the flat-body surface convention flag these inputs.
inline bool is_degenerate(const BodySpec& k) {
    return std::visit(
        detail::overloaded{
            [&](const Polytope& p) { return p.affine_dim < p.dim; },
            [&](const Zonotope& z) {
                std::vector<Vec> pts = {zeros(z.dim)};
                for (const Vec& g : z.generators) pts.push_back(g);
                return affine_basis(pts).rank() < z.dim;
            },
            [&](const Ball& b) { return !(b.radius > 0.0); },
            [&](const Segment& s2) { return s2.dim >= 2 || s2.length() == 0.0; },
            [&](const TruncatedPrism&) { return false; }},
        k);
}

/// Largest pairwise vertex distance (0 for balls of radius 0 and points).
inline double body_diameter(const BodySpec& k) {
    return std::visit(
        detail::overloaded{
            [&](const Polytope& p) {
                double d = 0.0;
                for (std::size_t i = 0; i < p.vertices.size(); ++i)
                    for (std::size_t j = i + 1; j < p.vertices.size(); ++j)
                        d = std::max(d, dist(p.vertices[i], p.vertices[j]));
                return d;
            },
            [&](const Zonotope& z) {
                // upper bound; exact enough for size/singleton checks
                double d = 0.0;
                for (const Vec& g : z.generators) d += norm(g);
                return d;
            },
            [&](const Ball& b) { return 2.0 * b.radius; },
            [&](const Segment& s) { return s.length(); },
            [&](const TruncatedPrism& t) {
                const auto vs = t.vertex_set();
                double d = 0.0;
                for (std::size_t i = 0; i < vs.size(); ++i)
                    for (std::size_t j = i + 1; j < vs.size(); ++j)
                        d = std::max(d, dist(vs[i], vs[j]));
                return d;
            }},
        k);
}

}  // namespace mixvol
