#include <catch2/catch_amalgamated.hpp>

#include "mixvol/inequalities.hpp"

using namespace mixvol;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

Segment seg2(double ax, double ay, double bx, double by) {
    return Segment(2, {ax, ay}, {bx, by});
}

BodySpec random_polygon(std::uint64_t seed, int size = 7) {
    return random_body("polytope", 2, size, seed);
}

}  // namespace

TEST_CASE("smallest enclosing circle") {
    SECTION("unit square") {
        Circle c = smallest_enclosing_circle({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
        REQUIRE_THAT(c.radius, WithinRel(std::sqrt(2.0) / 2.0, 1e-12));
        REQUIRE_THAT(c.center[0], WithinAbs(0.5, 1e-12));
    }
    SECTION("two points") {
        Circle c = smallest_enclosing_circle({{-1, 0}, {3, 0}});
        REQUIRE_THAT(c.radius, WithinRel(2.0, 1e-12));
    }
    SECTION("random clouds: minimality against vertex-pair and triple circles") {
        for (std::uint64_t t = 0; t < 20; ++t) {
            auto eng = trial_engine(801, t);
            std::vector<Vec> pts;
            for (int i = 0; i < 12; ++i) pts.push_back({uniform(eng, -2, 2), uniform(eng, -2, 2)});
            Circle c = smallest_enclosing_circle(pts);
            for (const Vec& p : pts) REQUIRE(c.contains(p, 1e-9));
        }
    }
}

TEST_CASE("inner and outer radii") {
    auto square = unit_cube(2);
    SECTION("identical bodies have r = R = 1") {
        RadiiResult res = inner_outer_radii(square, square);
        REQUIRE_THAT(res.r, WithinRel(1.0, 1e-9));
        REQUIRE_THAT(res.R, WithinRel(1.0, 1e-9));
    }
    SECTION("square against the disk surrogate") {
        auto disk = regular_polygon(256);
        RadiiResult res = inner_outer_radii(square, disk);
        REQUIRE_THAT(res.r, WithinAbs(0.5, 1e-3));
        REQUIRE_THAT(res.R, WithinAbs(std::sqrt(2.0) / 2.0, 1e-3));
    }
    SECTION("point T") {
        Polytope pt(2, {{0.3, 0.7}});
        RadiiResult res = inner_outer_radii(pt, square);
        REQUIRE(res.r == 0.0);
        REQUIRE_THAT(res.R, WithinAbs(0.0, 1e-9));
    }
    SECTION("degenerate A is rejected") {
        REQUIRE_THROWS_AS(inner_outer_radii(square, seg2(0, 0, 1, 0)), capacity_error);
    }
    SECTION("containment witnesses on random pairs") {
        for (std::uint64_t t = 0; t < 25; ++t) {
            BodySpec tb = random_polygon(trial_seed(811, t));
            BodySpec ab = random_polygon(trial_seed(812, t));
            if (std::get<Polytope>(ab).affine_dim < 2) continue;
            RadiiResult res = inner_outer_radii(tb, ab);
            REQUIRE(res.r >= 0.0);
            REQUIRE(res.r <= res.R + 1e-9);
            const auto& q = default_circle_quadrature();
            for (std::size_t i = 0; i < q.nodes.size(); i += 37) {
                UnitVector u(q.nodes[i]);
                // r A + x inside T inside R A + y
                REQUIRE(res.r * support(ab, u) + dot(res.x, u.coords()) <=
                        support(tb, u) + 1e-8);
                REQUIRE(support(tb, u) <=
                        res.R * support(ab, u) + dot(res.y, u.coords()) + 1e-8);
            }
        }
    }
}

TEST_CASE("bonnesen polynomial checks") {
    SECTION("disk surrogate and unit square reproduce the reference values") {
        auto rep = bonnesen_check(unit_cube(2), regular_polygon(256));
        REQUIRE(rep.verdict == Verdict::holds);
        REQUIRE_THAT(rep.details.at("P_at_minus_r"),
                     WithinAbs(std::numbers::pi / 4.0 - 1.0, 1e-3));
        REQUIRE_THAT(rep.details.at("P_at_minus_R"),
                     WithinAbs(std::numbers::pi / 2.0 - 2.0 * std::sqrt(2.0) + 1.0, 1e-3));
    }
    SECTION("T = A gives a double root at -1") {
        auto square = unit_cube(2);
        auto rep = bonnesen_check(square, square);
        REQUIRE(rep.verdict == Verdict::holds);
        REQUIRE_THAT(rep.details.at("P_at_minus_R"), WithinAbs(0.0, 1e-9));
        REQUIRE_THAT(rep.details.at("P_at_minus_r"), WithinAbs(0.0, 1e-9));
    }
    SECTION("random pairs satisfy all four relations") {
        int done = 0;
        for (std::uint64_t t = 0; done < 50; ++t) {
            REQUIRE(t < 200);
            BodySpec tb = random_polygon(trial_seed(821, t));
            BodySpec ab = random_polygon(trial_seed(822, t));
            if (std::get<Polytope>(ab).affine_dim < 2) continue;
            auto rep = bonnesen_check(tb, ab);
            REQUIRE(rep.verdict == Verdict::holds);
            REQUIRE(rep.details.at("lambda_minus") <=
                    -rep.details.at("outer_R") + 1e-9);
            REQUIRE(-rep.details.at("inner_r") <= rep.details.at("lambda_plus") + 1e-9);
            ++done;
        }
    }
}

TEST_CASE("planar product inequality (prop51)") {
    SECTION("interval pair against the unit square: exact equality, case (i)") {
        auto rep = prop51_check(seg2(0, 0, 1, 0), seg2(0, 0, 0, 1), unit_cube(2));
        REQUIRE_THAT(rep.lhs, WithinAbs(0.25, 1e-12));
        REQUIRE_THAT(rep.rhs, WithinAbs(0.25, 1e-12));
        REQUIRE(rep.verdict == Verdict::equality);
        REQUIRE(rep.equality_case == "interval_parallelogram");
    }
    SECTION("singleton A: equality case (iii)") {
        Polytope pt(2, {{0.4, 0.2}});
        auto rep = prop51_check(random_polygon(3), random_polygon(4), pt);
        REQUIRE(rep.verdict == Verdict::equality);
        REQUIRE(rep.equality_case == "A_singleton");
    }
    SECTION("parallel intervals: equality case (ii)") {
        auto rep = prop51_check(seg2(0, 0, 2, 0), random_polygon(5), seg2(1, 1, 5, 1));
        REQUIRE(rep.verdict == Verdict::equality);
        REQUIRE(rep.equality_case == "parallel_intervals");
    }
    SECTION("random triples hold") {
        for (std::uint64_t t = 0; t < 300; ++t) {
            auto rep = prop51_check(random_polygon(trial_seed(831, t)),
                                    random_polygon(trial_seed(832, t)),
                                    random_polygon(trial_seed(833, t)));
            REQUIRE(rep.verdict != Verdict::violated);
        }
    }
}

TEST_CASE("disk-slot inequality (prop53)") {
    SECTION("orthogonal segments: exact equality lhs = rhs = ab") {
        const double a = 0.7, b = 1.3;
        auto rep = prop53_check(seg2(0, 0, a, 0), seg2(0, 0, 0, b));
        REQUIRE_THAT(rep.lhs, WithinRel(a * b, 1e-9));
        REQUIRE_THAT(rep.rhs, WithinRel(a * b, 1e-9));
        REQUIRE(rep.verdict == Verdict::equality);
        REQUIRE(rep.equality_case == "orthogonal_segments");
    }
    SECTION("disk against disk is strict") {
        auto disk = regular_polygon(256);
        auto rep = prop53_check(disk, disk);
        REQUIRE_THAT(rep.lhs, WithinRel(std::numbers::pi * std::numbers::pi, 1e-3));
        REQUIRE_THAT(rep.rhs, WithinRel(2.0 * std::numbers::pi, 1e-3));
        REQUIRE(rep.verdict == Verdict::holds);
    }
    SECTION("square circumradius lemma margin") {
        auto rep = prop53_check(regular_polygon(64), unit_cube(2));
        REQUIRE_THAT(rep.details.at("R_T"), WithinRel(std::sqrt(2.0) / 2.0, 1e-12));
        REQUIRE_THAT(rep.details.at("lemma_margin"),
                     WithinAbs(4.0 - 4.0 * std::sqrt(2.0) / 2.0, 1e-12));
    }
    SECTION("random pairs satisfy the inequality and the circumradius lemma") {
        for (std::uint64_t t = 0; t < 200; ++t) {
            auto rep = prop53_check(random_polygon(trial_seed(841, t)),
                                    random_polygon(trial_seed(842, t)));
            REQUIRE(rep.verdict != Verdict::violated);
            REQUIRE(rep.details.at("lemma_margin") >= -1e-9);
        }
    }
}

TEST_CASE("zonoid inequality in R^3 (thm2)") {
    SECTION("planar square against an orthogonal segment: equality") {
        Polytope square3(3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}});
        Segment z(3, {0, 0, 0}, {0, 0, 1});
        auto rep = thm2_check(square3, z);
        REQUIRE(rep.verdict == Verdict::equality);
        REQUIRE(rep.equality_case == "orthogonal");
        REQUIRE(std::abs(rep.relative_gap) <= 2e-3);
    }
    SECTION("cube containing the segment direction: strict") {
        Segment z(3, {0, 0, 0}, {0, 0, 1});
        auto rep = thm2_check(unit_cube(3), z);
        REQUIRE(rep.verdict == Verdict::holds);
        REQUIRE(rep.gap > 0.0);
    }
    SECTION("ball against ball: gap = kappa_3^2 (1 - pi/4)") {
        Ball b(3, zeros(3), 1.0);
        auto rep = thm2_check(b, b);
        const double k3 = kappa_n(3);
        REQUIRE_THAT(rep.gap, WithinRel(k3 * k3 * (1.0 - std::numbers::pi / 4.0), 1e-3));
    }
    SECTION("random zonotopes never violate") {
        for (std::uint64_t t = 0; t < 30; ++t) {
            BodySpec k = random_body("polytope", 3, 8, trial_seed(851, t));
            BodySpec z = random_body("zonotope", 3, 4, trial_seed(852, t));
            auto rep = thm2_check(k, z);
            REQUIRE(rep.verdict != Verdict::violated);
        }
    }
}

TEST_CASE("equivalent monotonicity inequalities (prop13)") {
    SECTION("point T: both trivially tight") {
        auto [first, second] = prop13_check(unit_cube(3), Segment(3, {1, 2, 3}, {1, 2, 3}));
        REQUIRE(first.verdict != Verdict::violated);
        REQUIRE(second.verdict != Verdict::violated);
        REQUIRE_THAT(second.gap, WithinAbs(0.0, 1e-12));
    }
    SECTION("cube plus a random zonotope holds") {
        BodySpec z = random_body("zonotope", 3, 4, 5);
        auto [first, second] = prop13_check(unit_cube(3), z);
        REQUIRE(first.verdict == Verdict::holds);
        REQUIRE(second.verdict != Verdict::violated);
    }
    SECTION("ball T is monotone") {
        auto [first, second] = prop13_check(unit_cube(3), Ball(3, zeros(3), 0.7));
        REQUIRE(first.verdict == Verdict::holds);
        REQUIRE(second.verdict != Verdict::violated);
    }
    SECTION("the truncated-box pair violates both") {
        Polytope a = as_polytope(TruncatedPrism(3, 0.1, 400.0));
        Segment t(3, {0, 0, 0}, {0, 0, 1});
        auto [first, second] = prop13_check(a, t);
        REQUIRE(first.verdict == Verdict::violated);
        REQUIRE(second.verdict == Verdict::violated);
    }
    SECTION("2D pairs never violate (corollary of the planar inequality)") {
        for (std::uint64_t t = 0; t < 100; ++t) {
            BodySpec a = random_polygon(trial_seed(861, t), 8);
            if (std::get<Polytope>(a).affine_dim < 2) continue;
            BodySpec tb = random_polygon(trial_seed(862, t), 5);
            auto [first, second] = prop13_check(a, tb);
            REQUIRE(first.verdict != Verdict::violated);
            REQUIRE(second.verdict != Verdict::violated);
        }
    }
}

TEST_CASE("counterexample family verification") {
    SECTION("the reference instance (3, 0.1, 400)") {
        auto rep = counterexample_verify(3, 0.1, 400.0);
        REQUIRE(rep.verdict == Verdict::violated);
        REQUIRE_THAT(rep.details.at("info_closed_form"), WithinAbs(0.25111, 1e-4));
        REQUIRE_THAT(rep.details.at("info_projection"), WithinAbs(0.25, 1e-15));
        REQUIRE(rep.details.at("closed_vs_polytope_residual") <= 1e-9);
        REQUIRE(rep.details.at("feasibility_lhs") < rep.details.at("feasibility_rhs"));
    }
    SECTION("infeasible parameters go inconclusive") {
        auto rep = counterexample_verify(3, 0.1, 10.0);
        REQUIRE(rep.verdict == Verdict::inconclusive);
        REQUIRE(rep.details.at("feasibility_lhs") > rep.details.at("feasibility_rhs"));
    }
    SECTION("scan finds a feasible pair in dimension 4") {
        auto pair = counterexample_scan(4);
        REQUIRE(pair.has_value());
        auto rep = counterexample_verify(4, pair->first, pair->second);
        REQUIRE(rep.verdict == Verdict::violated);
        REQUIRE(rep.details.at("info_closed_form") > 1.0 / 6.0);
    }
    SECTION("parameter validation") {
        REQUIRE_THROWS_AS(counterexample_verify(2, 0.1, 400.0), std::invalid_argument);
        REQUIRE_THROWS_AS(counterexample_verify(3, 1.2, 400.0), std::invalid_argument);
    }
}
