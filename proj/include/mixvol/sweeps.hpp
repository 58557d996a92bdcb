#pragma once

#include <string>
#include <vector>

#include "mixvol/harmonics.hpp"
#include "mixvol/inequalities.hpp"
#include "mixvol/mixed_discriminant.hpp"

namespace mixvol {

/// One row of a randomized sweep (CSV-friendly).
struct TrialRow {
    std::uint64_t trial = 0;
    std::string digest;
    double lhs = 0.0;
    double rhs = 0.0;
    double gap = 0.0;
    std::string verdict;
};

/// Aggregate outcome of a seeded sweep; `failures` counts trials violating
/// the sweep's assertion, `worst` tracks the most adverse margin.
struct SweepOutcome {
    std::string name;
    std::uint64_t seed = 0;
    int trials = 0;
    int failures = 0;
    double worst = std::numeric_limits<double>::infinity();
    std::vector<TrialRow> rows;

    bool pass() const { return failures == 0; }

    void record(std::uint64_t trial, std::string digest, double lhs, double rhs, double gap,
                const char* verdict, bool keep_rows) {
        if (keep_rows) rows.push_back(TrialRow{trial, std::move(digest), lhs, rhs, gap, verdict});
    }
};

namespace detail {

inline std::vector<Eigen::MatrixXd> seeded_psd_tuple(int n, std::uint64_t seed) {
    std::vector<Eigen::MatrixXd> mats;
    for (int i = 0; i < n; ++i) {
        const std::uint64_t s = trial_seed(seed, static_cast<std::uint64_t>(i));
        const int rank = 1 + static_cast<int>(s % static_cast<std::uint64_t>(n));
        mats.push_back(random_psd(n, rank, trial_seed(seed, 100 + static_cast<std::uint64_t>(i))).mat());
    }
    return mats;
}

/// Random planar body mix for the 2D sweeps: mostly polygons, some segments
/// and points.
inline BodySpec seeded_planar_body(std::uint64_t seed) {
    const std::uint64_t kind = splitmix64(seed) % 10;
    if (kind < 7) {
        const int size = 4 + static_cast<int>(splitmix64(seed + 1) % 7);
        return random_body("polytope", 2, size, seed);
    }
    if (kind < 9) return random_body("segment", 2, 1, seed);
    auto eng = trial_engine(seed, 0);
    Vec p = {uniform(eng, -1, 1), uniform(eng, -1, 1)};
    return Polytope(2, {p});
}

inline BodySpec seeded_full_dim_polygon(std::uint64_t seed, int size = 8) {
    for (std::uint64_t attempt = 0;; ++attempt) {
        BodySpec b = random_body("polytope", 2, size, trial_seed(seed, attempt));
        if (std::get<Polytope>(b).affine_dim == 2) return b;
    }
}

}  // namespace detail

/// md_perm vs md_incl_excl agreement (and PSD nonnegativity) on seeded tuples.
inline SweepOutcome sweep_md_agreement(int n, int trials, std::uint64_t seed,
                                       bool keep_rows = false) {
    SweepOutcome out;
    out.name = "md_agreement_n" + std::to_string(n);
    out.seed = seed;
    out.trials = trials;
    for (std::uint64_t t = 0; t < static_cast<std::uint64_t>(trials); ++t) {
        auto mats = detail::seeded_psd_tuple(n, trial_seed(seed, t));
        const double a = md_perm(mats);
        const double b = md_incl_excl(mats);
        const double margin = 1e-9 * (1.0 + std::abs(a)) - std::abs(a - b);
        out.worst = std::min(out.worst, margin);
        const bool ok = margin >= 0.0 && a >= -1e-10;
        if (!ok) ++out.failures;
        out.record(t, "", a, b, a - b, ok ? "holds" : "violated", keep_rows);
    }
    return out;
}

/// Discriminant inequality sweep: gap >= -1e-9 scale, and the exact-gap trace
/// identity to 1e-8 relative whenever A3 is invertible.
inline SweepOutcome sweep_thm1(int n, int trials, std::uint64_t seed, bool keep_rows = false) {
    SweepOutcome out;
    out.name = "thm1_n" + std::to_string(n);
    out.seed = seed;
    out.trials = trials;
    for (std::uint64_t t = 0; t < static_cast<std::uint64_t>(trials); ++t) {
        const std::uint64_t s = trial_seed(seed, t);
        SymMatrix a1 = random_psd(n, 1 + static_cast<int>(splitmix64(s) % n), trial_seed(s, 1));
        SymMatrix a2 = random_psd(n, 1 + static_cast<int>(splitmix64(s + 1) % n), trial_seed(s, 2));
        SymMatrix a3 = random_psd(n, 1 + static_cast<int>(splitmix64(s + 2) % n), trial_seed(s, 3));
        Thm1Report rep = thm1_check(a1, a2, a3);
        bool ok = rep.gap >= -1e-9 * rep.scale;
        double margin = rep.gap / rep.scale + 1e-9;
        if (rep.trace_identity_residual) {
            ok = ok && *rep.trace_identity_residual <= 1e-8 * rep.scale;
            margin = std::min(margin, 1e-8 - *rep.trace_identity_residual / rep.scale);
        }
        out.worst = std::min(out.worst, margin);
        if (!ok) ++out.failures;
        out.record(t, digest_of(a1, a2, a3), rep.lhs, rep.rhs, rep.gap,
                   ok ? "holds" : "violated", keep_rows);
    }
    return out;
}

/// Planar universal inequality on random triples (polygons/segments/points).
inline SweepOutcome sweep_prop51(int trials, std::uint64_t seed, bool keep_rows = false) {
    SweepOutcome out;
    out.name = "prop51";
    out.seed = seed;
    out.trials = trials;
    for (std::uint64_t t = 0; t < static_cast<std::uint64_t>(trials); ++t) {
        BodySpec k = detail::seeded_planar_body(trial_seed(seed, 3 * t));
        BodySpec tt = detail::seeded_planar_body(trial_seed(seed, 3 * t + 1));
        BodySpec a = detail::seeded_planar_body(trial_seed(seed, 3 * t + 2));
        InequalityReport rep = prop51_check(k, tt, a);
        const double scale = std::max({1.0, std::abs(rep.lhs), std::abs(rep.rhs)});
        const double margin = rep.gap / scale + 1e-9;
        out.worst = std::min(out.worst, margin);
        const bool ok = rep.gap >= -1e-9 * scale;
        if (!ok) ++out.failures;
        out.record(t, rep.inputs_digest, rep.lhs, rep.rhs, rep.gap,
                   ok ? to_string(rep.verdict) : "violated", keep_rows);
    }
    return out;
}

/// Planar monotonicity I(A+T) > I(A) - 1e-10 on full-dimensional pairs.
inline SweepOutcome sweep_corollary52(int trials, std::uint64_t seed, bool keep_rows = false) {
    SweepOutcome out;
    out.name = "corollary52";
    out.seed = seed;
    out.trials = trials;
    for (std::uint64_t t = 0; t < static_cast<std::uint64_t>(trials); ++t) {
        BodySpec a = detail::seeded_full_dim_polygon(trial_seed(seed, 2 * t));
        BodySpec tt = detail::seeded_full_dim_polygon(trial_seed(seed, 2 * t + 1), 6);
        const double i_a = info(a);
        const double i_sum = info(minkowski_sum(a, tt));
        const double margin = i_sum - i_a + 1e-10;
        out.worst = std::min(out.worst, margin);
        const bool ok = margin > 0.0;
        if (!ok) ++out.failures;
        out.record(t, digest_of({&a, &tt}), i_sum, i_a, i_sum - i_a, ok ? "holds" : "violated",
                   keep_rows);
    }
    return out;
}

/// Zonoid inequality sweep: no (K, zonotope) pair may report violated.
inline SweepOutcome sweep_thm2(int trials, std::uint64_t seed, bool keep_rows = false) {
    SweepOutcome out;
    out.name = "thm2";
    out.seed = seed;
    out.trials = trials;
    for (std::uint64_t t = 0; t < static_cast<std::uint64_t>(trials); ++t) {
        BodySpec k = random_body("polytope", 3, 6 + static_cast<int>(t % 6),
                                 trial_seed(seed, 2 * t));
        BodySpec z = random_body("zonotope", 3, 2 + static_cast<int>(t % 4),
                                 trial_seed(seed, 2 * t + 1));
        InequalityReport rep = thm2_check(k, z);
        out.worst = std::min(out.worst, rep.relative_gap + kQuadratureTol);
        const bool ok = rep.verdict != Verdict::violated;
        if (!ok) ++out.failures;
        out.record(t, rep.inputs_digest, rep.lhs, rep.rhs, rep.gap, to_string(rep.verdict),
                   keep_rows);
    }
    return out;
}

/// Bonnesen relations on random full-dimensional pairs.
inline SweepOutcome sweep_bonnesen(int trials, std::uint64_t seed, bool keep_rows = false) {
    SweepOutcome out;
    out.name = "bonnesen";
    out.seed = seed;
    out.trials = trials;
    for (std::uint64_t t = 0; t < static_cast<std::uint64_t>(trials); ++t) {
        BodySpec tt = detail::seeded_full_dim_polygon(trial_seed(seed, 2 * t), 7);
        BodySpec a = detail::seeded_full_dim_polygon(trial_seed(seed, 2 * t + 1), 7);
        InequalityReport rep = bonnesen_check(tt, a);
        out.worst = std::min(out.worst, rep.relative_gap + kExactTol);
        const bool ok = rep.verdict == Verdict::holds;
        if (!ok) ++out.failures;
        out.record(t, rep.inputs_digest, rep.details.at("P_at_minus_R"),
                   rep.details.at("P_at_minus_r"), rep.gap, to_string(rep.verdict), keep_rows);
    }
    return out;
}

/// Disk-slot inequality and the circumradius lemma L(T) >= 4R(T) on polygons.
inline SweepOutcome sweep_prop53(int trials, std::uint64_t seed, bool keep_rows = false) {
    SweepOutcome out;
    out.name = "prop53";
    out.seed = seed;
    out.trials = trials;
    for (std::uint64_t t = 0; t < static_cast<std::uint64_t>(trials); ++t) {
        BodySpec k = detail::seeded_planar_body(trial_seed(seed, 2 * t));
        BodySpec tt = detail::seeded_planar_body(trial_seed(seed, 2 * t + 1));
        InequalityReport rep = prop53_check(k, tt);
        const double lemma = rep.details.at("lemma_margin");
        const double scale = std::max({1.0, std::abs(rep.lhs), std::abs(rep.rhs)});
        const bool ok = rep.verdict != Verdict::violated && lemma >= -1e-9;
        out.worst = std::min(out.worst, std::min(rep.gap / scale + 1e-9, lemma + 1e-9));
        if (!ok) ++out.failures;
        out.record(t, rep.inputs_digest, rep.lhs, rep.rhs, rep.gap, to_string(rep.verdict),
                   keep_rows);
    }
    return out;
}

/// Verdict agreement between the spectral transcription and the direct zonoid
/// checker on (K, segment) instances.
inline SweepOutcome sweep_conjecture_agreement(int trials, std::uint64_t seed,
                                               bool keep_rows = false) {
    SweepOutcome out;
    out.name = "conjecture_vs_thm2";
    out.seed = seed;
    out.trials = trials;
    for (std::uint64_t t = 0; t < static_cast<std::uint64_t>(trials); ++t) {
        BodySpec k = random_body("polytope", 3, 6 + static_cast<int>(t % 5),
                                 trial_seed(seed, 2 * t));
        auto eng = trial_engine(seed, 2 * t + 1);
        Vec dir = {uniform(eng, -1, 1), uniform(eng, -1, 1), uniform(eng, -1, 1)};
        while (norm(dir) < 1e-2) dir = {uniform(eng, -1, 1), uniform(eng, -1, 1), uniform(eng, -1, 1)};
        Segment z(3, zeros(3), scaled(dir, 1.0 / norm(dir)));
        InequalityReport spectral = conjecture_check(k, z);
        InequalityReport direct = thm2_check(k, z);
        const bool ok = (spectral.verdict != Verdict::violated) ==
                        (direct.verdict != Verdict::violated);
        out.worst = std::min(out.worst, std::min(spectral.relative_gap, direct.relative_gap));
        if (!ok) ++out.failures;
        out.record(t, spectral.inputs_digest, spectral.relative_gap, direct.relative_gap,
                   spectral.relative_gap - direct.relative_gap,
                   ok ? "agree" : "disagree", keep_rows);
    }
    return out;
}

}  // namespace mixvol
