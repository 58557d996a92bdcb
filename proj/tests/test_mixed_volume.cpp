#include <catch2/catch_amalgamated.hpp>

#include "mixvol/mixed_volume.hpp"

using namespace mixvol;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

Segment seg2(double ax, double ay, double bx, double by) {
    return Segment(2, {ax, ay}, {bx, by});
}

BodySpec embedded_projection(const Polytope& k, const UnitVector& u) {
    std::vector<Vec> vs;
    for (const Vec& v : k.vertices) vs.push_back(sub(v, scaled(u.coords(), dot(v, u.coords()))));
    return Polytope(k.dim, std::move(vs));
}

}  // namespace

TEST_CASE("2D mixed volumes by polarization") {
    auto square = unit_cube(2);
    SECTION("segment against the unit square") {
        const double v = mixed_volume(BodyArgs(2, {{seg2(0, 0, 1, 0), 1}, {square, 1}}));
        REQUIRE_THAT(v, WithinRel(0.5, 1e-12));
    }
    SECTION("equal slots reduce to area") {
        REQUIRE_THAT(mixed_volume(BodyArgs(2, {{square, 2}})), WithinRel(1.0, 1e-12));
    }
    SECTION("balls are rejected with a pointer to the Steiner route") {
        REQUIRE_THROWS_AS(mixed_volume(BodyArgs(2, {{Ball(2, zeros(2), 1.0), 1}, {square, 1}})),
                          capacity_error);
    }
}

TEST_CASE("3D mixed volumes") {
    auto cube = unit_cube(3);
    REQUIRE_THAT(mixed_volume(BodyArgs(3, {{cube, 3}})), WithinRel(1.0, 1e-12));

    SECTION("segment slot equals the projected-area formula") {
        Segment e3(3, {0, 0, 0}, {0, 0, 1});
        const double direct = mixed_volume(BodyArgs(3, {{e3, 1}, {cube, 2}}));
        REQUIRE_THAT(direct, WithinRel(1.0 / 3.0, 1e-12));
    }
}

TEST_CASE("mixed volume symmetry and additivity in a slot") {
    for (std::uint64_t t = 0; t < 40; ++t) {
        BodySpec k = random_body("polytope", 2, 7, trial_seed(701, t));
        BodySpec kp = random_body("polytope", 2, 5, trial_seed(702, t));
        BodySpec a = random_body("polytope", 2, 6, trial_seed(703, t));
        const double v_sum = mixed_volume(BodyArgs(2, {{minkowski_sum(k, kp), 1}, {a, 1}}));
        const double v_split = mixed_volume(BodyArgs(2, {{k, 1}, {a, 1}})) +
                               mixed_volume(BodyArgs(2, {{kp, 1}, {a, 1}}));
        REQUIRE_THAT(v_sum, WithinAbs(v_split, 1e-9 * (1.0 + std::abs(v_split))));

        const double v_ka = mixed_volume(BodyArgs(2, {{k, 1}, {a, 1}}));
        const double v_ak = mixed_volume(BodyArgs(2, {{a, 1}, {k, 1}}));
        REQUIRE_THAT(v_ka, WithinAbs(v_ak, 1e-12 * (1.0 + std::abs(v_ak))));
    }
}

TEST_CASE("mixed volume monotonicity under inclusion") {
    for (std::uint64_t t = 0; t < 40; ++t) {
        auto eng = trial_engine(711, t);
        std::vector<Vec> pts;
        for (int i = 0; i < 10; ++i) pts.push_back({uniform(eng, -1, 1), uniform(eng, -1, 1)});
        Polytope big(2, pts);
        Polytope small(2, std::vector<Vec>(pts.begin(), pts.begin() + 5));
        // certify inclusion by support dominance on the circle grid
        const auto& q = default_circle_quadrature();
        for (std::size_t i = 0; i < q.nodes.size(); i += 64)
            REQUIRE(support(small, UnitVector(q.nodes[i])) <=
                    support(big, UnitVector(q.nodes[i])) + 1e-12);
        BodySpec rest = random_body("polytope", 2, 6, trial_seed(712, t));
        const double v_small = mixed_volume(BodyArgs(2, {{small, 1}, {rest, 1}}));
        const double v_big = mixed_volume(BodyArgs(2, {{big, 1}, {rest, 1}}));
        REQUIRE(v_small <= v_big + 1e-10);
    }
}

TEST_CASE("translation invariance of mixed volumes") {
    for (std::uint64_t t = 0; t < 30; ++t) {
        BodySpec k = random_body("polytope", 2, 6, trial_seed(721, t));
        BodySpec a = random_body("polytope", 2, 6, trial_seed(722, t));
        auto eng = trial_engine(723, t);
        Vec shift = {uniform(eng, -10, 10), uniform(eng, -10, 10)};
        const double v0 = mixed_volume(BodyArgs(2, {{k, 1}, {a, 1}}));
        const double v1 = mixed_volume(BodyArgs(2, {{translate(k, shift), 1}, {a, 1}}));
        REQUIRE_THAT(v1, WithinAbs(v0, 1e-10 * (1.0 + std::abs(v0))));
    }
}

TEST_CASE("mv_with_ball via surface-area polarization") {
    auto cube = unit_cube(3);
    SECTION("V(cube, cube, B) = 2") {
        REQUIRE_THAT(mv_with_ball(cube, cube), WithinRel(2.0, 1e-12));
    }
    SECTION("point slot kills the value") {
        Segment pt(3, {0.3, 0.4, 0.5}, {0.3, 0.4, 0.5});
        REQUIRE_THAT(mv_with_ball(cube, pt), WithinAbs(0.0, 1e-12));
    }
    SECTION("two orthogonal segments give 1/3") {
        Segment e1(3, {0, 0, 0}, {1, 0, 0});
        Segment e2(3, {0, 0, 0}, {0, 1, 0});
        REQUIRE_THAT(mv_with_ball(e1, e2), WithinRel(1.0 / 3.0, 1e-12));
    }
}

TEST_CASE("quadrature schemes normalize to the mean") {
    for (const auto* q : {&default_sphere_quadrature(), &default_circle_quadrature(),
                          &default_spectral_quadrature()}) {
        double total = 0.0;
        for (double w : q->weights) {
            REQUIRE(w > 0.0);
            total += w;
        }
        REQUIRE_THAT(total, WithinAbs(1.0, 1e-12));  // constants integrate exactly
    }
    REQUIRE(quadrature_by_id("icosa4").nodes.size() == 2562);
    REQUIRE(quadrature_by_id("circle4096").nodes.size() == 4096);
    REQUIRE_THROWS_AS(quadrature_by_id("nonsense"), std::invalid_argument);
}

TEST_CASE("M* quadrature values") {
    const auto& q3 = default_sphere_quadrature();
    SECTION("unit ball") {
        REQUIRE_THAT(mstar(Ball(3, zeros(3), 1.0), q3), WithinRel(1.0, 1e-12));
    }
    SECTION("segment [-e1, e1] in 3D: mean of |u1| is 1/2") {
        Segment s(3, {-1, 0, 0}, {1, 0, 0});
        REQUIRE_THAT(mstar(s, q3), WithinRel(0.5, 1e-3));
    }
    SECTION("unit square in 2D: perimeter identity L/(2 pi)") {
        auto square = unit_cube(2);
        const auto& q2 = default_circle_quadrature();
        REQUIRE_THAT(mstar(square, q2), WithinRel(2.0 / std::numbers::pi, 1e-5));
        REQUIRE_THAT(mstar_exact_2d(square), WithinRel(2.0 / std::numbers::pi, 1e-14));
    }
    SECTION("V(K, B[n-1]) = kappa_n M*(K)") {
        REQUIRE_THAT(quermassintegral_vkb(Ball(3, zeros(3), 1.0), q3),
                     WithinRel(kappa_n(3), 1e-12));
    }
}

TEST_CASE("segment_mv matches direct polarization") {
    auto cube = unit_cube(3);
    SECTION("axis segment against two cubes") {
        const double via_proj =
            segment_mv(UnitVector(unit_axis(3, 2)), BodyArgs(3, {{cube, 2}}, 2));
        Segment e3(3, {0, 0, 0}, {0, 0, 1});
        const double direct = mixed_volume(BodyArgs(3, {{e3, 1}, {cube, 2}}));
        REQUIRE_THAT(via_proj, WithinAbs(direct, 1e-9));
        REQUIRE_THAT(via_proj, WithinRel(1.0 / 3.0, 1e-12));
    }
    SECTION("2D case: half the projected length") {
        const double v = segment_mv(UnitVector(unit_axis(2, 1)),
                                    BodyArgs(2, {{seg2(0, 0, 1, 0), 1}}, 1));
        REQUIRE_THAT(v, WithinRel(0.5, 1e-12));
    }
    SECTION("point rest gives zero") {
        Segment pt(3, {1, 2, 3}, {1, 2, 3});
        const double v = segment_mv(UnitVector(unit_axis(3, 2)), BodyArgs(3, {{pt, 2}}, 2));
        REQUIRE_THAT(v, WithinAbs(0.0, 1e-12));
    }
    SECTION("random oblique directions against the direct route") {
        for (std::uint64_t t = 0; t < 25; ++t) {
            auto eng = trial_engine(731, t);
            Vec dir = {uniform(eng, -1, 1), uniform(eng, -1, 1), uniform(eng, -1, 1)};
            if (norm(dir) < 1e-2) continue;
            UnitVector u(dir);
            BodySpec k2 = random_body("polytope", 3, 8, trial_seed(732, t));
            BodySpec k3 = random_body("polytope", 3, 6, trial_seed(733, t));
            const double via_proj = segment_mv(u, BodyArgs(3, {{k2, 1}, {k3, 1}}, 2));
            Segment s(3, zeros(3), u.coords());
            const double direct = mixed_volume(BodyArgs(3, {{s, 1}, {k2, 1}, {k3, 1}}));
            REQUIRE_THAT(via_proj, WithinAbs(direct, 1e-9 * (1.0 + std::abs(direct))));
        }
    }
}

TEST_CASE("information functional") {
    REQUIRE_THAT(info(unit_cube(3)), WithinRel(1.0 / 6.0, 1e-12));
    REQUIRE_THAT(info(Ball(3, zeros(3), 2.0)), WithinRel(2.0 / 3.0, 1e-12));
    REQUIRE_THAT(info(Ball(2, zeros(2), 1.0)), WithinRel(0.5, 1e-12));
    REQUIRE_THAT(info(unit_cube(2)), WithinRel(0.25, 1e-12));
    SECTION("zero surface area is undefined") {
        Segment pt(3, {0, 0, 0}, {0, 0, 0});
        REQUIRE_THROWS_AS(info(pt), undefined_value_error);
    }
}

TEST_CASE("symmetrization keeps M* and dominates the projection") {
    for (std::uint64_t t = 0; t < 10; ++t) {
        Polytope k = std::get<Polytope>(random_body("polytope", 3, 10, trial_seed(741, t)));
        auto eng = trial_engine(742, t);
        Vec dir = {uniform(eng, -1, 1), uniform(eng, -1, 1), uniform(eng, -1, 1)};
        if (norm(dir) < 1e-2) continue;
        UnitVector u(dir);
        const auto& q = default_sphere_quadrature();
        BodySpec sym = scale_body(minkowski_sum(k, reflect(k, u)), 0.5);
        const double m_k = mstar(k, q);
        const double m_sym = mstar(sym, q);
        const double m_proj = mstar(embedded_projection(k, u), q);
        REQUIRE_THAT(m_sym, WithinRel(m_k, 1e-3));
        REQUIRE(m_sym >= m_proj - 1e-3 * std::max(1.0, m_proj));
    }
}

TEST_CASE("dimension-reduction constant for planar bodies") {
    // For K inside a hyperplane of R^3 the spherical mean integrals relate by
    // C_3 = (2/3) kappa_2^2/(kappa_3 kappa_1) = pi/4.
    Polytope square3(3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}});
    auto square2 = unit_cube(2);
    const double lhs = mstar(square3, default_sphere_quadrature());
    const double rhs = (3.0 * std::numbers::pi / 8.0) * (2.0 / 3.0) * mstar_exact_2d(square2);
    REQUIRE_THAT(lhs, WithinRel(rhs, 1e-3));

    // a second planar instance: random polygon embedded in the x-z plane
    Polytope poly2 = std::get<Polytope>(random_body("polytope", 2, 8, 4242));
    std::vector<Vec> emb;
    for (const Vec& v : poly2.vertices) emb.push_back({v[0], 0.0, v[1]});
    Polytope poly3(3, emb);
    const double lhs2 = mstar(poly3, default_sphere_quadrature());
    const double rhs2 = (std::numbers::pi / 4.0) * mstar_exact_2d(poly2);
    REQUIRE_THAT(lhs2, WithinRel(rhs2, 1e-3));
}

TEST_CASE("first variation of the information functional") {
    SECTION("adding a point does nothing") {
        auto rep = first_variation(unit_cube(3), Segment(3, {1, 1, 1}, {1, 1, 1}));
        REQUIRE_THAT(rep.v1, WithinAbs(0.0, 1e-12));
        REQUIRE_THAT(rep.w1, WithinAbs(0.0, 1e-12));
        REQUIRE_THAT(rep.fprime0, WithinAbs(0.0, 1e-12));
    }
    SECTION("ball addition is monotone (2D disk approximant)") {
        auto rep = first_variation(regular_polygon(64), Ball(2, zeros(2), 0.5));
        REQUIRE(rep.fprime0 >= 0.0);
    }
    SECTION("ball addition is monotone (3D cube)") {
        auto rep = first_variation(unit_cube(3), Ball(3, zeros(3), 1.0));
        // 3 V1/V0 = 6, 2 W1/W0 = kappa_3 M*(cube) = pi
        REQUIRE_THAT(rep.fprime0, WithinRel((6.0 - std::numbers::pi) / 6.0, 1e-3));
        REQUIRE(rep.fprime0 > 0.0);
    }
    SECTION("truncated prism against its axis segment is locally decreasing") {
        Polytope a = as_polytope(TruncatedPrism(3, 0.1, 400.0));
        Segment t(3, {0, 0, 0}, {0, 0, 1});
        auto rep = first_variation(a, t);
        REQUIRE_THAT(rep.v1, WithinRel(1.0 / 3.0, 1e-9));
        REQUIRE_THAT(rep.w1, WithinRel(2.0 / 3.0, 1e-9));
        REQUIRE(rep.fprime0 < 0.0);
        // oracle: sign is decided by |dA| < 4|A|, i.e. I(A) > 1/4
        REQUIRE(surface_area(a) < 4.0 * volume(a));
    }
    SECTION("degenerate A is rejected") {
        Polytope flat(3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}});
        REQUIRE_THROWS_AS(first_variation(flat, unit_cube(3)), undefined_value_error);
    }
}
