#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <utility>
#include <vector>

#include "mixvol/vec.hpp"

namespace mixvol {

// ---------------------------------------------------------------------------
// 2D convex hull (monotone chain).
// ---------------------------------------------------------------------------

namespace detail {

inline double cross2(const Vec& o, const Vec& a, const Vec& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

inline bool lex_less(const Vec& a, const Vec& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace detail

/// Extreme points of the planar convex hull in CCW order starting at the
/// lexicographically smallest point.  Collinear interior points are dropped,
/// so the result is 1 point (all coincident), 2 points (collinear input), or
/// a strictly convex CCW polygon.
inline std::vector<Vec> hull2d(std::vector<Vec> pts) {
    for (const Vec& p : pts)
        if (p.size() != 2) throw std::invalid_argument("hull2d: points must be 2D");
    std::sort(pts.begin(), pts.end(), detail::lex_less);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const std::size_t n = pts.size();
    if (n <= 2) return pts;

    double scale = 0.0;
    for (const Vec& p : pts) scale = std::max({scale, std::abs(p[0]), std::abs(p[1])});
    const double eps = 1e-12 * std::max(1.0, scale * scale);

    std::vector<Vec> h(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {  // lower chain
        while (k >= 2 && detail::cross2(h[k - 2], h[k - 1], pts[i]) <= eps) --k;
        h[k++] = pts[i];
    }
    const std::size_t lower = k + 1;
    for (std::size_t i = n - 1; i-- > 0;) {  // upper chain
        while (k >= lower && detail::cross2(h[k - 2], h[k - 1], pts[i]) <= eps) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    if (h.size() == 2 && h[0] == h[1]) h.resize(1);
    return h;
}

/// Shoelace area of a CCW polygon (0 for fewer than 3 vertices).
inline double polygon_area(const std::vector<Vec>& ccw) {
    if (ccw.size() < 3) return 0.0;
    double s = 0.0;
    for (std::size_t i = 0; i < ccw.size(); ++i) {
        const Vec& a = ccw[i];
        const Vec& b = ccw[(i + 1) % ccw.size()];
        s += a[0] * b[1] - b[0] * a[1];
    }
    return 0.5 * s;
}

inline double polygon_perimeter(const std::vector<Vec>& ccw) {
    if (ccw.size() < 2) return 0.0;
    if (ccw.size() == 2) return 2.0 * dist(ccw[0], ccw[1]);  // flat body: both sides
    double s = 0.0;
    for (std::size_t i = 0; i < ccw.size(); ++i) s += dist(ccw[i], ccw[(i + 1) % ccw.size()]);
    return s;
}

// ---------------------------------------------------------------------------
// Affine rank / basis of a point set.
// ---------------------------------------------------------------------------

struct AffineBasis {
    Vec origin;
    std::vector<Vec> dirs;  // orthonormal spanning directions
    int rank() const { return static_cast<int>(dirs.size()); }
};

/// Deterministic orthonormal affine basis: origin at the lexicographically
/// smallest point, directions accepted greedily in input order.
inline AffineBasis affine_basis(const std::vector<Vec>& pts, double rel_tol = 1e-12) {
    if (pts.empty()) throw std::invalid_argument("affine_basis: empty point set");
    AffineBasis ab;
    ab.origin = *std::min_element(pts.begin(), pts.end(), detail::lex_less);
    double scale = 1.0;
    for (const Vec& p : pts) scale = std::max(scale, dist(p, ab.origin));
    const double tol = rel_tol * scale;
    for (const Vec& p : pts) {
        Vec v = sub(p, ab.origin);
        for (const Vec& d : ab.dirs) v = sub(v, scaled(d, dot(v, d)));
        const double nv = norm(v);
        if (nv > tol) ab.dirs.push_back(scaled(v, 1.0 / nv));
        if (ab.rank() == static_cast<int>(pts[0].size())) break;
    }
    return ab;
}

/// Coordinates of p in the basis (origin + dirs).
inline Vec affine_coords(const AffineBasis& ab, const Vec& p) {
    Vec v = sub(p, ab.origin);
    Vec c(ab.dirs.size());
    for (std::size_t i = 0; i < ab.dirs.size(); ++i) c[i] = dot(v, ab.dirs[i]);
    return c;
}

// ---------------------------------------------------------------------------
// 3D convex hull (incremental, tolerance-based, coplanar-tolerant).
// ---------------------------------------------------------------------------

struct Hull3 {
    std::vector<Vec> vertices;  // extreme points, lexicographically sorted
    double volume = 0.0;
    double area = 0.0;
};

namespace detail {

struct Face {
    int a, b, c;
    Vec n;        // outward normal (unit)
    double off;   // plane offset: dot(n, x) == off on the face
    bool alive = true;
};

inline Face make_face(const std::vector<Vec>& pts, int a, int b, int c, const Vec& interior) {
    Face f{a, b, c, {}, 0.0, true};
    Vec n = cross3(sub(pts[static_cast<std::size_t>(b)], pts[static_cast<std::size_t>(a)]),
                   sub(pts[static_cast<std::size_t>(c)], pts[static_cast<std::size_t>(a)]));
    const double nn = norm(n);
    if (nn > 0.0) n = scaled(n, 1.0 / nn);
    double off = dot(n, pts[static_cast<std::size_t>(a)]);
    if (dot(n, interior) > off) {  // flip to point away from the interior
        n = scaled(n, -1.0);
        off = -off;
        std::swap(f.b, f.c);
    }
    f.n = std::move(n);
    f.off = off;
    return f;
}

}  // namespace detail

/// Incremental convex hull of a full-dimensional 3D point set (caller checks
/// the affine rank first).  Points within eps of every supporting plane never
/// become vertices, so coplanar and interior inputs are absorbed; the returned
/// vertex list holds extreme points only (a vertex must carry facet normals of
/// affine rank 3).
inline Hull3 hull3d_full(const std::vector<Vec>& input) {
    std::vector<Vec> pts = input;
    std::sort(pts.begin(), pts.end(), detail::lex_less);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    double scale = 1.0;
    for (const Vec& p : pts) scale = std::max(scale, dist(p, pts.front()));
    const double eps = 1e-9 * scale;

    auto farthest = [&](auto&& keyfn) {
        std::size_t best = 0;
        double bv = -1.0;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const double v = keyfn(pts[i]);
            if (v > bv) { bv = v; best = i; }
        }
        return best;
    };
    const std::size_t i0 =
        static_cast<std::size_t>(std::min_element(pts.begin(), pts.end(), detail::lex_less) -
                                 pts.begin());
    const Vec& p0 = pts[i0];
    const std::size_t i1 = farthest([&](const Vec& p) { return dist(p, p0); });
    Vec d01 = sub(pts[i1], p0);
    d01 = scaled(d01, 1.0 / norm(d01));
    const std::size_t i2 = farthest([&](const Vec& p) {
        Vec v = sub(p, p0);
        return norm(sub(v, scaled(d01, dot(v, d01))));
    });
    Vec nrm = cross3(d01, sub(pts[i2], p0));
    nrm = scaled(nrm, 1.0 / norm(nrm));
    const std::size_t i3 = farthest([&](const Vec& p) { return std::abs(dot(sub(p, p0), nrm)); });

    Vec interior = zeros(3);
    for (std::size_t i : {i0, i1, i2, i3}) interior = add(interior, scaled(pts[i], 0.25));

    std::vector<detail::Face> faces;
    faces.push_back(detail::make_face(pts, static_cast<int>(i0), static_cast<int>(i1),
                                      static_cast<int>(i2), interior));
    faces.push_back(detail::make_face(pts, static_cast<int>(i0), static_cast<int>(i1),
                                      static_cast<int>(i3), interior));
    faces.push_back(detail::make_face(pts, static_cast<int>(i0), static_cast<int>(i2),
                                      static_cast<int>(i3), interior));
    faces.push_back(detail::make_face(pts, static_cast<int>(i1), static_cast<int>(i2),
                                      static_cast<int>(i3), interior));

    for (std::size_t pi = 0; pi < pts.size(); ++pi) {
        if (pi == i0 || pi == i1 || pi == i2 || pi == i3) continue;
        const Vec& p = pts[pi];
        std::vector<std::size_t> visible;
        for (std::size_t fi = 0; fi < faces.size(); ++fi) {
            if (!faces[fi].alive) continue;
            if (dot(faces[fi].n, p) - faces[fi].off > eps) visible.push_back(fi);
        }
        if (visible.empty()) continue;

        // Horizon = directed edges of visible faces whose undirected edge
        // appears exactly once among the visible set.
        std::map<std::pair<int, int>, int> edge_count;
        auto bump = [&](int u, int v) { ++edge_count[{std::min(u, v), std::max(u, v)}]; };
        for (std::size_t fi : visible) {
            const auto& f = faces[fi];
            bump(f.a, f.b);
            bump(f.b, f.c);
            bump(f.c, f.a);
        }
        std::vector<std::pair<int, int>> horizon;
        for (std::size_t fi : visible) {
            const auto& f = faces[fi];
            for (auto [u, v] : {std::pair{f.a, f.b}, std::pair{f.b, f.c}, std::pair{f.c, f.a}})
                if (edge_count[{std::min(u, v), std::max(u, v)}] == 1) horizon.emplace_back(u, v);
        }
        for (std::size_t fi : visible) faces[fi].alive = false;
        for (auto [u, v] : horizon)
            faces.push_back(detail::make_face(pts, u, v, static_cast<int>(pi), interior));
    }

    // Collect used vertices and keep only true extreme points: the normals of
    // a vertex's incident facets must span rank 3 (rank 2 = edge-interior,
    // rank 1 = facet-interior point that survived triangulation).
    std::map<int, std::vector<Vec>> vertex_normals;
    for (const auto& f : faces) {
        if (!f.alive) continue;
        for (int v : {f.a, f.b, f.c}) vertex_normals[v].push_back(f.n);
    }
    auto normal_rank = [](const std::vector<Vec>& normals) {
        std::vector<Vec> basis;
        for (const Vec& nv : normals) {
            Vec v = nv;
            for (const Vec& b : basis) v = sub(v, scaled(b, dot(v, b)));
            if (norm(v) > 1e-7) basis.push_back(scaled(v, 1.0 / norm(v)));
            if (basis.size() == 3) break;
        }
        return static_cast<int>(basis.size());
    };

    Hull3 out;
    for (auto& [vid, normals] : vertex_normals)
        if (normal_rank(normals) == 3) out.vertices.push_back(pts[static_cast<std::size_t>(vid)]);
    // vertices come out lexicographically sorted because pts was sorted

    for (const auto& f : faces) {
        if (!f.alive) continue;
        const Vec& va = pts[static_cast<std::size_t>(f.a)];
        const Vec& vb = pts[static_cast<std::size_t>(f.b)];
        const Vec& vc = pts[static_cast<std::size_t>(f.c)];
        Vec cr = cross3(sub(vb, va), sub(vc, va));
        out.area += 0.5 * norm(cr);
        out.volume += dot(sub(va, interior), cr) / 6.0;
    }
    return out;
}

}  // namespace mixvol
