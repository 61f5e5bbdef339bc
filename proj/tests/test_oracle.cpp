#include <doctest.h>

#include <cmath>
#include <vector>

#include "numerov/assembly.hpp"
#include "numerov/eigen.hpp"
#include "numerov/errors.hpp"
#include "numerov/oracle.hpp"
#include "numerov/reference.hpp"

using namespace numerov;

TEST_CASE("Bohr levels")
{
    CHECK(oracle::analytic_energy(1.0, 1) == -0.5);
    CHECK(oracle::analytic_energy(1.0, 3) == doctest::Approx(-1.0 / 18.0).epsilon(1e-15));
    CHECK(oracle::analytic_energy(2.0, 1) == -2.0);
}

TEST_CASE("closed-form zero-potential pencil")
{
    CHECK(oracle::box_pencil_eigenvalue(1, 1.0, 1) == doctest::Approx(1.2).epsilon(1e-15));
    // continuum limit pi^2 / (2 L^2)
    const std::size_t N = 20000;
    const double h = 1e-3;
    const double L = static_cast<double>(N + 1) * h;
    CHECK(oracle::box_pencil_eigenvalue(N, h, 1) == doctest::Approx(M_PI * M_PI / (2.0 * L * L)).epsilon(1e-10));
    const TridiagonalPencil p = assemble_pencil(0.5, std::vector<double>(10, 0.0));
    const double e = oracle::box_pencil_eigenvalue(10, 0.5, 3);
    CHECK(std::abs(kth_eigenvalue(p, 3) - e) <= 1e-12 * e);
}

TEST_CASE("shooting agrees with the pencil on the tabulated grids")
{
    using namespace reference;
    for (std::size_t r = 0; r < kReferenceN.size() && kReferenceN[r] <= 2500; ++r) {
        for (std::size_t c = 0; c < 3; ++c) {
            const int n = kReferenceStates[c];
            const RadialGrid g = build_grid(static_cast<std::size_t>(kReferenceN[r]), kGridSize[r][c]);
            const PotentialSpec pot{};
            const double e_pencil = kth_eigenvalue(assemble_pencil(g, pot), static_cast<std::size_t>(n));
            const double exact = oracle::analytic_energy(1.0, n);
            const oracle::ShootResult s = oracle::shoot_numerov(g, pot, 1.3 * exact, 0.8 * exact, n - 1);
            INFO("N = " << kReferenceN[r] << ", n = " << n);
            CHECK(std::abs(s.energy - e_pencil) <= 1e-9);
            CHECK(std::abs(s.boundary_mismatch) <= 1e-9);
            CHECK(s.nodes == n - 1);
        }
    }
}

TEST_CASE("shooting in an empty box")
{
    const RadialGrid g = build_grid(100, 0.1);
    // Z = 1e-300 leaves only the kinetic terms.
    const PotentialSpec pot{1e-300, 0, 0.0};
    const double e = oracle::box_pencil_eigenvalue(100, 0.1, 1);
    const oracle::ShootResult s = oracle::shoot_numerov(g, pot, 0.5 * e, 1.5 * e, 0);
    CHECK(std::abs(s.energy - e) <= 1e-9);
}

TEST_CASE("shooting bracket must straddle the target level")
{
    const RadialGrid g = build_grid(2000, 0.011920);
    CHECK_THROWS_AS(oracle::shoot_numerov(g, PotentialSpec{}, -0.6, -0.3, 1), BracketError);
}

TEST_CASE("defect shrinks along the reference ladder")
{
    using namespace reference;
    for (std::size_t c = 0; c < kReferenceStates.size(); ++c) {
        double previous = 1.0;
        for (std::size_t r = 0; r < kReferenceN.size(); ++r) {
            const int n = kReferenceStates[c];
            const double e = kth_eigenvalue(
                assemble_pencil(build_grid(static_cast<std::size_t>(kReferenceN[r]), kGridSize[r][c]), PotentialSpec{}),
                static_cast<std::size_t>(n));
            const double defect = e - oracle::analytic_energy(1.0, n);
            CHECK(defect > 0.0);
            CHECK(defect < previous);
            previous = defect;
        }
    }
}
