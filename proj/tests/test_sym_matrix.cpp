#include <catch2/catch_amalgamated.hpp>

#include "mixvol/sym_matrix.hpp"

using namespace mixvol;

TEST_CASE("construction mirrors the upper triangle exactly") {
    Eigen::MatrixXd m(2, 2);
    m << 1.0, 0.3, 0.2999999, 2.0;  // asymmetric input
    SymMatrix s(m);
    REQUIRE(s(1, 0) == s(0, 1));
    REQUIRE(s(0, 1) == 0.3);
}

TEST_CASE("non-finite entries are rejected") {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(2, 2);
    m(0, 0) = std::numeric_limits<double>::infinity();
    REQUIRE_THROWS_AS(SymMatrix(m), std::invalid_argument);
}

TEST_CASE("random_psd basic contract") {
    SECTION("rank 0 gives the zero matrix") {
        SymMatrix z = random_psd(3, 0, 12345);
        REQUIRE(z.mat().norm() == 0.0);
    }
    SECTION("same seed twice is bitwise identical") {
        SymMatrix a = random_psd(3, 3, 7);
        SymMatrix b = random_psd(3, 3, 7);
        REQUIRE(a == b);
    }
    SECTION("different seeds differ") {
        REQUIRE_FALSE(random_psd(3, 3, 7) == random_psd(3, 3, 8));
    }
    SECTION("rank > dim is a parameter error") {
        REQUIRE_THROWS_AS(random_psd(3, 4, 1), std::invalid_argument);
    }
    SECTION("generated rank matches the requested factor rank") {
        SymMatrix m = random_psd(4, 2, 1);
        REQUIRE(rank_psd(m, 1e-9) == 2);
    }
}

TEST_CASE("rank_psd threshold semantics") {
    REQUIRE(rank_psd(SymMatrix::identity(3), 1e-9) == 3);
    REQUIRE(rank_psd(SymMatrix(3), 1e-9) == 0);
    REQUIRE(rank_psd(SymMatrix::diagonal({1.0, 1e-14, 0.0}), 1e-9) == 1);
}

TEST_CASE("determinant and inverse") {
    SymMatrix d = SymMatrix::diagonal({1.0, 2.0, 3.0});
    REQUIRE_THAT(det(d), Catch::Matchers::WithinRel(6.0, 1e-14));
    SymMatrix inv = inverse(d);
    REQUIRE_THAT(inv(2, 2), Catch::Matchers::WithinRel(1.0 / 3.0, 1e-14));
    // inverse of a PD matrix is exactly symmetric after re-symmetrization
    SymMatrix m = random_psd(5, 5, 42);
    SymMatrix minv = inverse(m);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) REQUIRE(minv(i, j) == minv(j, i));
}

TEST_CASE("random PSD sweep: spectra, ranks, determinants") {
    for (int n = 2; n <= 6; ++n) {
        for (std::uint64_t t = 0; t < 250; ++t) {
            const std::uint64_t seed = trial_seed(991, t * 10 + static_cast<std::uint64_t>(n));
            const int r = static_cast<int>(seed % static_cast<std::uint64_t>(n + 1));
            SymMatrix m = random_psd(n, r, seed);
            Eigen::VectorXd ev = eigenvalues(m);
            const double scale = m.mat().norm();
            REQUIRE(ev(0) >= -1e-9 * std::max(1.0, scale));
            REQUIRE(rank_psd(m, 1e-9) == r);
            REQUIRE(det(m) >= -1e-12);
        }
    }
}
