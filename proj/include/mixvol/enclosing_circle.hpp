#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "mixvol/vec.hpp"

namespace mixvol {

struct Circle {
    Vec center{0.0, 0.0};
    double radius = 0.0;

    bool contains(const Vec& p, double eps) const { return dist(center, p) <= radius + eps; }
};

namespace detail {

inline Circle circle_from_two(const Vec& a, const Vec& b) {
    return Circle{scaled(add(a, b), 0.5), 0.5 * dist(a, b)};
}

inline Circle circle_from_three(const Vec& a, const Vec& b, const Vec& c) {
    const double bx = b[0] - a[0], by = b[1] - a[1];
    const double cx = c[0] - a[0], cy = c[1] - a[1];
    const double d = 2.0 * (bx * cy - by * cx);
    if (d == 0.0) {
        // collinear: widest of the pairwise diameters
        Circle best = circle_from_two(a, b);
        for (const Circle& cand : {circle_from_two(a, c), circle_from_two(b, c)})
            if (cand.radius > best.radius) best = cand;
        return best;
    }
    const double ux = (cy * (bx * bx + by * by) - by * (cx * cx + cy * cy)) / d;
    const double uy = (bx * (cx * cx + cy * cy) - cx * (bx * bx + by * by)) / d;
    Vec center{a[0] + ux, a[1] + uy};
    return Circle{center, dist(center, a)};
}

inline Circle trivial_circle(const std::vector<Vec>& boundary) {
    switch (boundary.size()) {
        case 0: return Circle{};
        case 1: return Circle{boundary[0], 0.0};
        case 2: return circle_from_two(boundary[0], boundary[1]);
        default: return circle_from_three(boundary[0], boundary[1], boundary[2]);
    }
}

inline Circle welzl(std::vector<Vec>& pts, std::size_t n, std::vector<Vec>& boundary,
                    double eps) {
    if (n == 0 || boundary.size() == 3) return trivial_circle(boundary);
    const Vec p = pts[n - 1];
    Circle c = welzl(pts, n - 1, boundary, eps);
    if (c.contains(p, eps)) return c;
    boundary.push_back(p);
    c = welzl(pts, n - 1, boundary, eps);
    boundary.pop_back();
    return c;
}

}  // namespace detail

/// Smallest disk enclosing a planar point set (randomized incremental, fixed
/// seed for reproducibility).
inline Circle smallest_enclosing_circle(std::vector<Vec> pts, std::uint64_t seed = 0x5eb21) {
    if (pts.empty()) throw std::invalid_argument("smallest_enclosing_circle: empty point set");
    for (const Vec& p : pts)
        if (p.size() != 2) throw std::invalid_argument("smallest_enclosing_circle: 2D points only");
    double scale = 1.0;
    for (const Vec& p : pts) scale = std::max({scale, std::abs(p[0]), std::abs(p[1])});
    const double eps = 1e-12 * scale;
    std::mt19937_64 eng(splitmix64(seed));
    std::shuffle(pts.begin(), pts.end(), eng);
    std::vector<Vec> boundary;
    return detail::welzl(pts, pts.size(), boundary, eps);
}

}  // namespace mixvol
