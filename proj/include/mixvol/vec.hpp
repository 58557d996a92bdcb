#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace mixvol {

/// Dense coordinate vector; dimension is the length.
using Vec = std::vector<double>;

/// Thrown when an input exceeds a documented capacity bound (n! / 2^n
/// enumeration limits, unsupported body pairs, unsupported dimensions).
struct capacity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown when a quantity is mathematically undefined for the input
/// (e.g. volume/surface ratio of a body with zero surface area).
struct undefined_value_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline double dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Vec add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("add: dimension mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Vec sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("sub: dimension mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Vec scaled(const Vec& a, double s) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
    return r;
}

inline double norm2(const Vec& a) { return dot(a, a); }
inline double norm(const Vec& a) { return std::sqrt(norm2(a)); }

inline Vec cross3(const Vec& a, const Vec& b) {
    if (a.size() != 3 || b.size() != 3) throw std::invalid_argument("cross3: dim != 3");
    return Vec{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

inline double dist(const Vec& a, const Vec& b) { return norm(sub(a, b)); }

inline Vec zeros(int dim) { return Vec(static_cast<std::size_t>(dim), 0.0); }

inline Vec unit_axis(int dim, int axis) {
    Vec e = zeros(dim);
    e.at(static_cast<std::size_t>(axis)) = 1.0;
    return e;
}

/// Direction on S^{n-1}; normalized on construction.
class UnitVector {
  public:
    explicit UnitVector(Vec v) : u_(std::move(v)) {
        const double n = norm(u_);
        if (!(n > 0.0) || !std::isfinite(n))
            throw std::invalid_argument("UnitVector: zero or non-finite vector");
        for (double& c : u_) c /= n;
    }

    int dim() const { return static_cast<int>(u_.size()); }
    const Vec& coords() const { return u_; }
    double operator[](std::size_t i) const { return u_[i]; }

  private:
    Vec u_;
};

// ---------------------------------------------------------------------------
// Deterministic seeding.  All randomness in the artifact flows through a
// master seed; per-trial engines are derived with splitmix64 so that sweeps
// are reproducible and order-independent.  Generator id recorded in reports.
// ---------------------------------------------------------------------------

inline constexpr const char* kGeneratorId = "splitmix64+mt19937_64";

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Seed for trial `index` of a sweep with the given master seed.
inline std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index) {
    return splitmix64(master ^ splitmix64(index));
}

/// Deterministic engine for one trial.
inline std::mt19937_64 trial_engine(std::uint64_t master, std::uint64_t index) {
    return std::mt19937_64(trial_seed(master, index));
}

/// Uniform double in [0, 1); uses the top 53 bits of the engine output so the
/// mapping is fixed and platform-independent.
inline double uniform01(std::mt19937_64& eng) {
    return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

/// Uniform double in [lo, hi).
inline double uniform(std::mt19937_64& eng, double lo, double hi) {
    return lo + (hi - lo) * uniform01(eng);
}

}  // namespace mixvol
