#pragma once

#include <cmath>
#include <map>
#include <numbers>
#include <string>
#include <vector>

#include "mixvol/kappa.hpp"
#include "mixvol/vec.hpp"

namespace mixvol {

/// Deterministic quadrature for means over S^{dim-1}: sum of w_i f(u_i)
/// approximates the integral against the normalized Haar measure.  Weights
/// sum to 1, so constants integrate exactly.
struct QuadratureScheme {
    int dim = 0;           // ambient dimension (2 or 3)
    std::string id;
    std::vector<Vec> nodes;    // unit vectors
    std::vector<double> weights;
};

/// Uniform trapezoid rule on the circle (exact for trig polynomials of
/// degree < n).
inline QuadratureScheme circle_uniform(int n = 4096) {
    if (n < 4) throw std::invalid_argument("circle_uniform: need at least 4 nodes");
    QuadratureScheme q;
    q.dim = 2;
    q.id = "circle" + std::to_string(n);
    q.nodes.reserve(static_cast<std::size_t>(n));
    q.weights.assign(static_cast<std::size_t>(n), 1.0 / n);
    for (int k = 0; k < n; ++k) {
        const double t = 2.0 * std::numbers::pi * k / n;
        q.nodes.push_back({std::cos(t), std::sin(t)});
    }
    return q;
}

namespace detail {

/// Solid angle of the spherical triangle (v1,v2,v3) (Van Oosterom-Strackee).
inline double spherical_triangle_area(const Vec& a, const Vec& b, const Vec& c) {
    const double num = std::abs(dot(a, cross3(b, c)));
    const double den = 1.0 + dot(a, b) + dot(b, c) + dot(c, a);
    return 2.0 * std::atan2(num, den);
}

}  // namespace detail

/// Subdivided-icosahedron node set on S^2 with area-derived vertex weights
/// (each vertex takes a third of every incident spherical triangle).  Level L
/// gives 10*4^L + 2 nodes; level 4 is the default grid (2562 nodes).
inline QuadratureScheme sphere_icosahedral(int level = 4) {
    if (level < 0 || level > 7)
        throw std::invalid_argument("sphere_icosahedral: level must be in [0, 7]");
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    std::vector<Vec> verts = {
        {-1, phi, 0}, {1, phi, 0}, {-1, -phi, 0}, {1, -phi, 0},
        {0, -1, phi}, {0, 1, phi}, {0, -1, -phi}, {0, 1, -phi},
        {phi, 0, -1}, {phi, 0, 1}, {-phi, 0, -1}, {-phi, 0, 1}};
    for (Vec& v : verts) v = scaled(v, 1.0 / norm(v));
    std::vector<std::array<int, 3>> faces = {
        {0, 11, 5}, {0, 5, 1}, {0, 1, 7}, {0, 7, 10}, {0, 10, 11},
        {1, 5, 9}, {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
        {3, 9, 4}, {3, 4, 2}, {3, 2, 6}, {3, 6, 8}, {3, 8, 9},
        {4, 9, 5}, {2, 4, 11}, {6, 2, 10}, {8, 6, 7}, {9, 8, 1}};

    for (int l = 0; l < level; ++l) {
        std::map<std::pair<int, int>, int> midpoint;
        auto mid = [&](int a, int b) {
            const auto key = std::minmax(a, b);
            auto it = midpoint.find({key.first, key.second});
            if (it != midpoint.end()) return it->second;
            Vec m = add(verts[static_cast<std::size_t>(a)], verts[static_cast<std::size_t>(b)]);
            m = scaled(m, 1.0 / norm(m));
            const int idx = static_cast<int>(verts.size());
            verts.push_back(std::move(m));
            midpoint[{key.first, key.second}] = idx;
            return idx;
        };
        std::vector<std::array<int, 3>> next;
        next.reserve(faces.size() * 4);
        for (const auto& [a, b, c] : faces) {
            const int ab = mid(a, b), bc = mid(b, c), ca = mid(c, a);
            next.push_back({a, ab, ca});
            next.push_back({b, bc, ab});
            next.push_back({c, ca, bc});
            next.push_back({ab, bc, ca});
        }
        faces = std::move(next);
    }

    QuadratureScheme q;
    q.dim = 3;
    q.id = "icosa" + std::to_string(level);
    q.nodes = verts;
    q.weights.assign(verts.size(), 0.0);
    for (const auto& [a, b, c] : faces) {
        const double third = detail::spherical_triangle_area(verts[static_cast<std::size_t>(a)],
                                                             verts[static_cast<std::size_t>(b)],
                                                             verts[static_cast<std::size_t>(c)]) / 3.0;
        q.weights[static_cast<std::size_t>(a)] += third;
        q.weights[static_cast<std::size_t>(b)] += third;
        q.weights[static_cast<std::size_t>(c)] += third;
    }
    double total = 0.0;
    for (double w : q.weights) total += w;
    for (double& w : q.weights) w /= total;
    return q;
}

namespace detail {

/// Gauss-Legendre nodes/weights on [-1, 1] by Newton iteration.
inline void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
    x.assign(static_cast<std::size_t>(n), 0.0);
    w.assign(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < n; ++i) {
        double t = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = t;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (t * p1 - p0) / (t * t - 1.0);
            const double step = p1 / dp;
            t -= step;
            if (std::abs(step) < 1e-15) break;
        }
        x[static_cast<std::size_t>(i)] = t;
        w[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - t * t) * dp * dp);
    }
}

}  // namespace detail

/// Gauss-Legendre (polar) x uniform (azimuthal) product grid on S^2.  Discrete
/// orthonormality of spherical harmonics is exact (to round-off) for degrees
/// below min(ntheta, (nphi-1)/2), which the spectral operations rely on; the
/// icosahedral grid remains the default for plain support-function means.
inline QuadratureScheme sphere_gauss_product(int ntheta = 64, int nphi = 128) {
    if (ntheta < 2 || nphi < 4)
        throw std::invalid_argument("sphere_gauss_product: grid too small");
    std::vector<double> gx, gw;
    detail::gauss_legendre(ntheta, gx, gw);
    QuadratureScheme q;
    q.dim = 3;
    q.id = "gauss" + std::to_string(ntheta) + "x" + std::to_string(nphi);
    q.nodes.reserve(static_cast<std::size_t>(ntheta) * nphi);
    q.weights.reserve(static_cast<std::size_t>(ntheta) * nphi);
    for (int i = 0; i < ntheta; ++i) {
        const double ct = gx[static_cast<std::size_t>(i)];
        const double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
        const double wt = gw[static_cast<std::size_t>(i)] / 2.0 / nphi;
        for (int j = 0; j < nphi; ++j) {
            const double phi = 2.0 * std::numbers::pi * j / nphi;
            q.nodes.push_back({st * std::cos(phi), st * std::sin(phi), ct});
            q.weights.push_back(wt);
        }
    }
    return q;
}

/// Scheme by id: "icosaL" or "gaussTxP" for S^2, "circleN" for S^1.
inline QuadratureScheme quadrature_by_id(const std::string& id) {
    if (id.rfind("icosa", 0) == 0) return sphere_icosahedral(std::stoi(id.substr(5)));
    if (id.rfind("circle", 0) == 0) return circle_uniform(std::stoi(id.substr(6)));
    if (id.rfind("gauss", 0) == 0) {
        const auto xpos = id.find('x');
        if (xpos == std::string::npos)
            throw std::invalid_argument("quadrature_by_id: expected gauss<T>x<P>");
        return sphere_gauss_product(std::stoi(id.substr(5, xpos - 5)),
                                    std::stoi(id.substr(xpos + 1)));
    }
    throw std::invalid_argument("quadrature_by_id: unknown scheme '" + id + "'");
}

/// Default grid for harmonic expansions (exact discrete orthonormality up to
/// the supported lmax).
inline const QuadratureScheme& default_spectral_quadrature() {
    static const QuadratureScheme q = sphere_gauss_product(64, 128);
    return q;
}

/// Shared default grids (built once).
inline const QuadratureScheme& default_sphere_quadrature() {
    static const QuadratureScheme q = sphere_icosahedral(4);
    return q;
}

inline const QuadratureScheme& default_circle_quadrature() {
    static const QuadratureScheme q = circle_uniform(4096);
    return q;
}

inline const QuadratureScheme& default_quadrature(int dim) {
    if (dim == 3) return default_sphere_quadrature();
    if (dim == 2) return default_circle_quadrature();
    throw std::invalid_argument("default_quadrature: dim must be 2 or 3");
}

}  // namespace mixvol
