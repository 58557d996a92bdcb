#pragma once

#include <cmath>
#include <cstdint>
#include <cstring>
#include <map>
#include <optional>
#include <string>

#include "mixvol/body.hpp"
#include "mixvol/sym_matrix.hpp"

namespace mixvol {

inline constexpr double kExactTol = 1e-6;       // closed-form pipelines
inline constexpr double kQuadratureTol = 2e-3;  // quadrature-backed pipelines

enum class Verdict { holds, equality, violated, inconclusive };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::holds: return "holds";
        case Verdict::equality: return "equality";
        case Verdict::violated: return "violated";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

/// Outcome of one inequality check, with every tolerance that shaped the
/// verdict recorded so a report is auditable without rerunning.
struct InequalityReport {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    double gap = 0.0;           // lhs - rhs; the inequality under test is lhs >= rhs
    double relative_gap = 0.0;  // gap / max(1, |lhs|, |rhs|)
    Verdict verdict = Verdict::inconclusive;
    std::optional<std::string> equality_case;
    std::string inputs_digest;
    std::map<std::string, double> tolerances;
    std::map<std::string, double> details;
};

inline Verdict classify_gap(double gap, double tol, double scale) {
    if (gap < -tol * scale) return Verdict::violated;
    if (std::abs(gap) <= tol * scale) return Verdict::equality;
    return Verdict::holds;
}

inline InequalityReport make_report(std::string name, double lhs, double rhs, double tol,
                                    std::string digest) {
    InequalityReport r;
    r.name = std::move(name);
    r.lhs = lhs;
    r.rhs = rhs;
    r.gap = lhs - rhs;
    const double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
    r.relative_gap = r.gap / scale;
    r.verdict = classify_gap(r.gap, tol, scale);
    r.inputs_digest = std::move(digest);
    r.tolerances["relative"] = tol;
    return r;
}

// ---------------------------------------------------------------------------
// Input digests (FNV-1a over a canonical byte stream).
// ---------------------------------------------------------------------------

class Digest {
  public:
    Digest& add(double x) {
        std::uint64_t bits;
        static_assert(sizeof(bits) == sizeof(x));
        std::memcpy(&bits, &x, sizeof(bits));
        for (int i = 0; i < 8; ++i) byte(static_cast<unsigned char>(bits >> (8 * i)));
        return *this;
    }
    Digest& add(const std::string& s) {
        for (char c : s) byte(static_cast<unsigned char>(c));
        byte(0);
        return *this;
    }
    Digest& add(int v) { return add(static_cast<double>(v)); }
    Digest& add(const Vec& v) {
        for (double x : v) add(x);
        return *this;
    }

    std::string hex() const {
        static const char* digits = "0123456789abcdef";
        std::string out(16, '0');
        std::uint64_t h = state_;
        for (int i = 15; i >= 0; --i) {
            out[static_cast<std::size_t>(i)] = digits[h & 0xF];
            h >>= 4;
        }
        return out;
    }

  private:
    void byte(unsigned char b) {
        state_ ^= b;
        state_ *= 0x100000001B3ULL;
    }
    std::uint64_t state_ = 0xcbf29ce484222325ULL;
};

inline void digest_body(Digest& d, const BodySpec& k) {
    std::visit(detail::overloaded{
                   [&](const Polytope& p) {
                       d.add("polytope").add(p.dim);
                       for (const Vec& v : p.vertices) d.add(v);
                   },
                   [&](const Zonotope& z) {
                       d.add("zonotope").add(z.dim).add(z.center);
                       for (const Vec& g : z.generators) d.add(g);
                   },
                   [&](const Ball& b) { d.add("ball").add(b.dim).add(b.center).add(b.radius); },
                   [&](const Segment& s) { d.add("segment").add(s.dim).add(s.a).add(s.b); },
                   [&](const TruncatedPrism& t) {
                       d.add("truncated_prism").add(t.dim).add(t.eps).add(t.M);
                   }},
               k);
}

inline std::string digest_of(std::initializer_list<const BodySpec*> bodies) {
    Digest d;
    for (const BodySpec* b : bodies) digest_body(d, *b);
    return d.hex();
}

inline std::string digest_of(const SymMatrix& a, const SymMatrix& b, const SymMatrix& c) {
    Digest d;
    for (const SymMatrix* m : {&a, &b, &c}) {
        d.add("sym").add(m->dim());
        for (int i = 0; i < m->dim(); ++i)
            for (int j = 0; j < m->dim(); ++j) d.add((*m)(i, j));
    }
    return d.hex();
}

}  // namespace mixvol
