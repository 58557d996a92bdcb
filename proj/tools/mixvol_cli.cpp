// Command-line front end: body construction, verification commands, seeded
// sweeps, JSON/CSV report emission, and the one-shot `paper reproduce` run.
//
// Exit codes: 0 = all verdicts as expected, 1 = configuration error,
//             2 = a verdict contradicting the expected outcome.

#include <CLI11.hpp>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "mixvol/harmonics.hpp"
#include "mixvol/inequalities.hpp"
#include "mixvol/json_io.hpp"
#include "mixvol/sweeps.hpp"

using namespace mixvol;

namespace {

constexpr const char* kVersion = "0.1.0";

struct GlobalOpts {
    std::uint64_t seed = 7;
    int trials = 0;  // 0 = command default
    double tol = 0.0;  // 0 = module default
    std::string quad;
    std::string out;
    std::string format = "json";
    bool no_timestamp = false;
};

std::string iso_timestamp() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%FT%TZ", std::gmtime(&t));
    return buf;
}

json report_envelope(const GlobalOpts& g, const std::string& command) {
    json j{{"artifact", "mixvol"},
           {"version", kVersion},
           {"generator", kGeneratorId},
           {"command", command},
           {"seed", g.seed}};
    if (!g.no_timestamp) j["timestamp"] = iso_timestamp();
    return j;
}

json sweep_to_json(const SweepOutcome& s) {
    return json{{"name", s.name},
                {"seed", s.seed},
                {"trials", s.trials},
                {"failures", s.failures},
                {"worst_margin", s.worst},
                {"pass", s.pass()}};
}

void write_csv(const std::string& path, const std::vector<TrialRow>& rows) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << "trial,inputs_digest,lhs,rhs,gap,verdict\n";
    char buf[96];
    for (const TrialRow& r : rows) {
        out << r.trial << ',' << r.digest << ',';
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g", r.lhs, r.rhs, r.gap);
        out << buf << ',' << r.verdict << "\n";
    }
}

void emit(const GlobalOpts& g, const json& report, const std::vector<TrialRow>& rows = {}) {
    if (g.out.empty()) {
        std::cout << report.dump(2) << "\n";
        return;
    }
    if (g.format == "csv") {
        write_csv(g.out, rows);
    } else {
        save_json(g.out, report);
    }
}

Vec parse_vec(const std::string& s) {
    Vec v;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) v.push_back(std::stod(item));
    return v;
}

QuadratureScheme pick_quad(const GlobalOpts& g, const std::string& fallback) {
    return quadrature_by_id(g.quad.empty() ? fallback : g.quad);
}

int unexpected(int count) { return count > 0 ? 2 : 0; }

}  // namespace

// ---------------------------------------------------------------------------

static int run_md_verify(const GlobalOpts& g, int n) {
    const int trials = g.trials > 0 ? g.trials : 1000;
    if (n > kMdPermMaxDim) {
        std::cerr << "md verify: n=" << n << " exceeds the n! expansion bound n<="
                  << kMdPermMaxDim << "\n";
        return 1;
    }
    SweepOutcome agree = sweep_md_agreement(n, trials, g.seed, g.format == "csv");
    SweepOutcome thm1 = sweep_thm1(n, trials, trial_seed(g.seed, 1), g.format == "csv");
    json rep = report_envelope(g, "md verify");
    rep["n"] = n;
    rep["sweeps"] = json::array({sweep_to_json(agree), sweep_to_json(thm1)});
    std::vector<TrialRow> rows = agree.rows;
    rows.insert(rows.end(), thm1.rows.begin(), thm1.rows.end());
    emit(g, rep, rows);
    return unexpected(agree.failures + thm1.failures);
}

static int run_bodies_make(const GlobalOpts& g, const std::string& kind, int dim, double radius,
                           const std::string& center, const std::string& a, const std::string& b,
                           double eps, double height, int size, int sides) {
    BodySpec body = [&]() -> BodySpec {
        if (kind == "cube") return unit_cube(dim);
        if (kind == "ball")
            return Ball(dim, center.empty() ? zeros(dim) : parse_vec(center), radius);
        if (kind == "segment") {
            if (a.empty() || b.empty())
                throw CLI::ValidationError("segment needs --a and --b");
            return Segment(dim, parse_vec(a), parse_vec(b));
        }
        if (kind == "truncated_prism") return TruncatedPrism(dim, eps, height);
        if (kind == "disk") return regular_polygon(sides, radius);
        if (kind == "random-polytope") return random_body("polytope", dim, size, g.seed);
        if (kind == "random-zonotope") return random_body("zonotope", dim, size, g.seed);
        throw CLI::ValidationError("unknown kind '" + kind + "'");
    }();
    json j = to_json(body);
    if (g.out.empty())
        std::cout << j.dump(2) << "\n";
    else
        save_json(g.out, j);
    return 0;
}

static int run_mv_compute(const GlobalOpts& g, const std::string& args_path) {
    BodyArgs args = body_args_from_json(load_json(args_path));
    const double v = mixed_volume(args);
    json rep = report_envelope(g, "mv compute");
    rep["mixed_volume"] = v;
    rep["dim"] = args.dim;
    emit(g, rep);
    return 0;
}

static int run_mv_mstar(const GlobalOpts& g, const std::string& body_path) {
    BodySpec body = body_from_json(load_json(body_path));
    QuadratureScheme q = pick_quad(g, body_dim(body) == 3 ? "icosa4" : "circle4096");
    const double m = mstar(body, q);
    json rep = report_envelope(g, "mv mstar");
    rep["mstar"] = m;
    rep["v_k_ball_slots"] = kappa_n(body_dim(body)) * m;
    rep["quadrature"] = json{{"id", q.id}, {"nodes", q.nodes.size()}};
    if (body_dim(body) == 2) rep["mstar_exact"] = mstar_exact_2d(body);
    emit(g, rep);
    return 0;
}

static int run_ineq(const GlobalOpts& g, const std::string& which) {
    json rep = report_envelope(g, "ineq " + which);
    std::vector<TrialRow> rows;
    int bad = 0;

    if (which == "thm2") {
        const int trials = g.trials > 0 ? g.trials : 500;
        const double tol = g.tol > 0.0 ? g.tol : kQuadratureTol;
        SweepOutcome s = sweep_thm2(trials, g.seed, true);
        Polytope square3(3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}});
        InequalityReport orth =
            thm2_check(square3, Segment(3, {0, 0, 0}, {0, 0, 1}), default_sphere_quadrature(), tol);
        Ball ball(3, zeros(3), 1.0);
        InequalityReport bb = thm2_check(ball, ball, default_sphere_quadrature(), tol);
        const auto& q = default_sphere_quadrature();
        rep["quadrature"] = json{{"id", q.id}, {"nodes", q.nodes.size()}};
        rep["sweeps"] = json::array({sweep_to_json(s)});
        rep["checks"] = json::array({to_json(orth), to_json(bb)});
        rows = s.rows;
        bad = s.failures + (orth.verdict == Verdict::violated) + (bb.verdict != Verdict::holds);
    } else if (which == "prop13") {
        const int trials = g.trials > 0 ? g.trials : 300;
        SweepOutcome s = sweep_corollary52(trials, g.seed, true);
        auto [first, second] = prop13_check(as_polytope(TruncatedPrism(3, 0.1, 400.0)),
                                            Segment(3, {0, 0, 0}, {0, 0, 1}));
        first.name = "prop13_mixed_volumes[counterexample pair, expected violated]";
        second.name = "prop13_monotonicity[counterexample pair, expected violated]";
        rep["sweeps"] = json::array({sweep_to_json(s)});
        rep["checks"] = json::array({to_json(first), to_json(second)});
        rows = s.rows;
        bad = s.failures + (first.verdict != Verdict::violated) +
              (second.verdict != Verdict::violated);
    } else if (which == "prop51") {
        const int trials = g.trials > 0 ? g.trials : 10000;
        SweepOutcome s = sweep_prop51(trials, g.seed, true);
        rep["sweeps"] = json::array({sweep_to_json(s)});
        rows = s.rows;
        bad = s.failures;
    } else if (which == "prop53") {
        const int trials = g.trials > 0 ? g.trials : 1000;
        SweepOutcome s = sweep_prop53(trials, g.seed, true);
        rep["sweeps"] = json::array({sweep_to_json(s)});
        rows = s.rows;
        bad = s.failures;
    } else if (which == "bonnesen") {
        const int trials = g.trials > 0 ? g.trials : 1000;
        SweepOutcome s = sweep_bonnesen(trials, g.seed, true);
        rep["sweeps"] = json::array({sweep_to_json(s)});
        rows = s.rows;
        bad = s.failures;
    } else {
        std::cerr << "unknown inequality '" << which << "'\n";
        return 1;
    }
    emit(g, rep, rows);
    return unexpected(bad);
}

static int run_counterexample(const GlobalOpts& g, int n, double eps, double height, bool scan) {
    json rep = report_envelope(g, "counterexample");
    if (scan) {
        auto pair = counterexample_scan(n);
        if (!pair) {
            rep["scan"] = "no feasible (eps, M) found";
            emit(g, rep);
            return 2;
        }
        eps = pair->first;
        height = pair->second;
        rep["scan"] = json{{"eps", eps}, {"M", height}};
    }
    InequalityReport r = counterexample_verify(n, eps, height);
    rep["checks"] = json::array({to_json(r)});
    emit(g, rep);
    // `violated` is the expected verdict for feasible parameters;
    // `inconclusive` is expected when the feasibility condition fails.
    const bool feasible = r.details.at("feasibility_lhs") < r.details.at("feasibility_rhs");
    const bool as_expected =
        feasible ? r.verdict == Verdict::violated : r.verdict == Verdict::inconclusive;
    return as_expected ? 0 : 2;
}

static int run_harmonics(const GlobalOpts& g, const std::string& which,
                         const std::string& body_path, const std::string& body2_path, int lmax) {
    QuadratureScheme q = pick_quad(g, "gauss64x128");
    BodySpec body = body_from_json(load_json(body_path));
    json rep = report_envelope(g, "harmonics " + which);
    rep["quadrature"] = json{{"id", q.id}, {"nodes", q.nodes.size()}};
    rep["lmax"] = lmax;
    if (std::holds_alternative<Polytope>(body))
        rep["warning"] = "polytope support functions have kinks; spectral accuracy is O(1/lmax)";

    if (which == "expand") {
        HarmonicExpansion ex = expand_support(body, lmax, q);
        rep["k00"] = ex.at(0, 0);
        rep["residual"] = ex.residual;
        if (!g.out.empty()) {
            // coefficients table as CSV; verdict JSON goes to stdout
            std::ofstream csv(g.out);
            if (!csv) throw std::runtime_error("cannot write " + g.out);
            csv << "m,l,coefficient\n";
            for (int m = 0; m <= lmax; ++m)
                for (int l = 0; l <= 2 * m; ++l) {
                    char buf[48];
                    std::snprintf(buf, sizeof(buf), "%.17g", ex.at(m, l));
                    csv << m << ',' << l << ',' << buf << "\n";
                }
            rep["coefficients_csv"] = g.out;
        }
        std::cout << rep.dump(2) << "\n";
        return 0;
    }

    if (body2_path.empty()) {
        std::cerr << "harmonics " << which << ": requires --body2\n";
        return 1;
    }
    BodySpec body2 = body_from_json(load_json(body2_path));
    if (which == "mv") {
        const double spectral = mv_spectral(body, body2, lmax, q);
        rep["mv_spectral"] = spectral;
        const bool summable = !std::holds_alternative<Ball>(body) &&
                              !std::holds_alternative<Ball>(body2);
        if (summable) rep["mv_surface_polarization"] = mv_with_ball(body, body2);
        emit(g, rep);
        return 0;
    }
    if (which == "conjecture") {
        InequalityReport r = conjecture_check(body, body2, lmax, q,
                                              g.tol > 0.0 ? g.tol : kQuadratureTol);
        rep["checks"] = json::array({to_json(r)});
        emit(g, rep);
        return unexpected(r.verdict == Verdict::violated);
    }
    std::cerr << "unknown harmonics subcommand '" << which << "'\n";
    return 1;
}

static int run_reproduce(const GlobalOpts& g) {
    const int scale = g.trials > 0 ? g.trials : 100;
    json rep = report_envelope(g, "paper reproduce");
    json sweeps = json::array();
    json checks = json::array();
    int bad = 0;

    auto add_sweep = [&](const SweepOutcome& s) {
        sweeps.push_back(sweep_to_json(s));
        bad += s.failures;
    };
    auto add_check = [&](InequalityReport r, Verdict expected, const char* note) {
        r.name += std::string("[") + note + "]";
        checks.push_back(to_json(r));
        if (r.verdict != expected &&
            !(expected == Verdict::holds && r.verdict == Verdict::equality))
            ++bad;
    };

    // discriminants
    for (int n = 2; n <= 6; ++n) {
        add_sweep(sweep_md_agreement(n, 2 * scale, trial_seed(g.seed, static_cast<std::uint64_t>(n))));
        add_sweep(sweep_thm1(n, 2 * scale, trial_seed(g.seed, 100 + static_cast<std::uint64_t>(n))));
    }
    // zonoid inequality
    Polytope square3(3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}});
    add_check(thm2_check(square3, Segment(3, {0, 0, 0}, {0, 0, 1})), Verdict::equality,
              "orthogonal instance");
    Ball ball(3, zeros(3), 1.0);
    add_check(thm2_check(ball, ball), Verdict::holds, "ball-ball instance");
    add_sweep(sweep_thm2(2 * scale, trial_seed(g.seed, 300)));
    // monotonicity, both directions
    {
        auto [first, second] = prop13_check(unit_cube(3), random_body("zonotope", 3, 4, 5));
        add_check(first, Verdict::holds, "cube+zonotope");
        add_check(second, Verdict::holds, "cube+zonotope");
        auto [cf, cs] = prop13_check(as_polytope(TruncatedPrism(3, 0.1, 400.0)),
                                     Segment(3, {0, 0, 0}, {0, 0, 1}));
        add_check(cf, Verdict::violated, "counterexample pair, expected violated");
        add_check(cs, Verdict::violated, "counterexample pair, expected violated");
    }
    add_check(counterexample_verify(3, 0.1, 400.0), Verdict::violated,
              "truncated box (3, 0.1, 400), expected violated");
    // planar suite
    add_sweep(sweep_prop51(20 * scale, trial_seed(g.seed, 200)));
    add_check(prop51_check(Segment(2, {0, 0}, {1, 0}), Segment(2, {0, 0}, {0, 1}), unit_cube(2)),
              Verdict::equality, "parallelogram equality");
    add_sweep(sweep_corollary52(3 * scale, trial_seed(g.seed, 250)));
    add_sweep(sweep_bonnesen(3 * scale, trial_seed(g.seed, 400)));
    add_sweep(sweep_prop53(3 * scale, trial_seed(g.seed, 500)));
    add_check(prop53_check(Segment(2, {0, 0}, {0.7, 0}), Segment(2, {0, 0}, {0, 1.3})),
              Verdict::equality, "orthogonal segments");
    // harmonics
    {
        auto c3 = constants(3);
        json jc{{"name", "constants"},
                {"C_3", c3.c_n},
                {"D_3", c3.d_n},
                {"ratio", c3.ratio},
                {"rearrangement_valid", c3.rearrangement_valid}};
        checks.push_back(jc);
        if (std::abs(c3.c_n - std::numbers::pi / 4.0) > 1e-12) ++bad;
        add_check(conjecture_check(Segment(3, {0, 0, 0}, {1, 0, 0}),
                                   Segment(3, {0, 0, 0}, {0, 0, 1})),
                  Verdict::equality, "orthogonal segments, spectral");
        add_sweep(sweep_conjecture_agreement(scale / 2, trial_seed(g.seed, 700)));
    }

    rep["sweeps"] = sweeps;
    rep["checks"] = checks;
    rep["unexpected_verdicts"] = bad;
    emit(g, rep);
    return unexpected(bad);
}

// ---------------------------------------------------------------------------

int main(int argc, char** argv) {
    CLI::App app{"mixed volumes, mixed discriminants, and their inequality suite"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--seed", g.seed, "master seed for all randomized sweeps");
    app.add_option("--trials", g.trials, "trial count override (0 = command default)")
        ->check(CLI::Range(0, 10000000));
    app.add_option("--tol", g.tol, "tolerance override (0 = module default)");
    app.add_option("--quad", g.quad, "quadrature id (icosaL, gaussTxP, circleN)");
    app.add_option("--out", g.out, "output path (stdout if omitted)");
    app.add_option("--format", g.format, "output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_flag("--no-timestamp", g.no_timestamp, "omit the timestamp field from reports");

    // md verify
    auto* md = app.add_subcommand("md", "mixed discriminant commands");
    auto* md_verify = md->add_subcommand("verify", "oracle agreement + inequality sweep");
    int md_n = 4;
    md_verify->add_option("--n", md_n, "matrix dimension (<= 8)");

    // bodies make
    auto* bodies = app.add_subcommand("bodies", "body construction");
    auto* make = bodies->add_subcommand("make", "write a body JSON file");
    std::string mk_kind, mk_center, mk_a, mk_b;
    int mk_dim = 3, mk_size = 6, mk_sides = 256;
    double mk_radius = 1.0, mk_eps = 0.1, mk_height = 400.0;
    make->add_option("--kind", mk_kind,
                     "cube|ball|segment|truncated_prism|disk|random-polytope|random-zonotope")
        ->required();
    make->add_option("--dim", mk_dim, "ambient dimension");
    make->add_option("--radius", mk_radius, "ball/disk radius");
    make->add_option("--center", mk_center, "comma-separated center");
    make->add_option("--a", mk_a, "segment endpoint");
    make->add_option("--b", mk_b, "segment endpoint");
    make->add_option("--eps", mk_eps, "truncated prism cut size");
    make->add_option("--M", mk_height, "truncated prism height");
    make->add_option("--size", mk_size, "random body size (points/generators)");
    make->add_option("--sides", mk_sides, "disk surrogate side count");

    // mv compute / mstar
    auto* mv = app.add_subcommand("mv", "mixed volume commands");
    auto* mv_compute = mv->add_subcommand("compute", "mixed volume of an argument list");
    std::string mv_args_path;
    mv_compute->add_option("--args", mv_args_path, "JSON argument list")->required();
    auto* mv_mstar = mv->add_subcommand("mstar", "spherical mean of the support function");
    std::string mstar_body;
    mv_mstar->add_option("--body", mstar_body, "body JSON")->required();

    // ineq
    auto* ineq = app.add_subcommand("ineq", "inequality checkers and sweeps");
    std::string ineq_which;
    ineq->add_option("which", ineq_which, "thm2|prop13|prop51|prop53|bonnesen")->required();

    // counterexample
    auto* ce = app.add_subcommand("counterexample", "truncated-box monotonicity counterexample");
    int ce_n = 3;
    double ce_eps = 0.1, ce_m = 400.0;
    bool ce_scan = false;
    ce->add_option("--n", ce_n, "dimension (>= 3)");
    ce->add_option("--eps", ce_eps, "cut size in (0,1)");
    ce->add_option("--M", ce_m, "height (> 1)");
    ce->add_flag("--scan", ce_scan, "scan for a feasible (eps, M) pair first");

    // harmonics
    auto* harm = app.add_subcommand("harmonics", "spherical-harmonic testbed (S^2)");
    std::string h_which, h_body, h_body2;
    int h_lmax = 16;
    harm->add_option("which", h_which, "expand|mv|conjecture")->required();
    harm->add_option("--body", h_body, "body JSON")->required();
    harm->add_option("--body2", h_body2, "second body JSON (mv, conjecture)");
    harm->add_option("--lmax", h_lmax, "expansion degree cutoff (<= 24)");

    // paper reproduce
    auto* paper = app.add_subcommand("paper", "paper-level commands");
    auto* reproduce = paper->add_subcommand("reproduce", "run the full verification suite");

    // let global flags (--seed, --out, ...) appear after any subcommand
    for (CLI::App* sub : app.get_subcommands({})) {
        sub->fallthrough(true);
        for (CLI::App* nested : sub->get_subcommands({})) nested->fallthrough(true);
    }

    CLI11_PARSE(app, argc, argv);

    try {
        if (md_verify->parsed()) return run_md_verify(g, md_n);
        if (make->parsed())
            return run_bodies_make(g, mk_kind, mk_dim, mk_radius, mk_center, mk_a, mk_b, mk_eps,
                                   mk_height, mk_size, mk_sides);
        if (mv_compute->parsed()) return run_mv_compute(g, mv_args_path);
        if (mv_mstar->parsed()) return run_mv_mstar(g, mstar_body);
        if (ineq->parsed()) return run_ineq(g, ineq_which);
        if (ce->parsed()) return run_counterexample(g, ce_n, ce_eps, ce_m, ce_scan);
        if (harm->parsed()) return run_harmonics(g, h_which, h_body, h_body2, h_lmax);
        if (reproduce->parsed()) return run_reproduce(g);
        std::cerr << "no subcommand\n";
        return 1;
    } catch (const capacity_error& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "parameter error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
