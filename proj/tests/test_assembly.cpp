#include <doctest.h>

#include <cmath>
#include <vector>

#include "numerov/assembly.hpp"
#include "numerov/eigen.hpp"
#include "numerov/errors.hpp"
#include "numerov/oracle.hpp"

using namespace numerov;

TEST_CASE("grid nodes and radius")
{
    const RadialGrid g = build_grid(3, 0.5);
    CHECK(g.size() == 3);
    const auto r = g.nodes();
    REQUIRE(r.size() == 3);
    CHECK(r[0] == 0.5);
    CHECK(r[1] == 1.0);
    CHECK(r[2] == 1.5);
    CHECK(g.radius() == 1.5);
    CHECK(build_grid(500, 0.016764).radius() == doctest::Approx(8.382).epsilon(1e-12));
    CHECK(build_grid(10000, 0.001160).radius() == doctest::Approx(11.60).epsilon(1e-12));
}

TEST_CASE("grid validation")
{
    CHECK_THROWS_AS(build_grid(2, 0.1), DomainError);
    CHECK_THROWS_AS(build_grid(10, 0.0), DomainError);
    CHECK_THROWS_AS(build_grid(10, -1.0), DomainError);
}

TEST_CASE("Numerov B is the constant (1, 10, 1)/12 band")
{
    const TridiagonalPencil p = assemble_pencil(build_grid(50, 0.2), PotentialSpec{});
    for (double b : p.b_diag) CHECK(b == 10.0 / 12.0);
    for (double b : p.b_off) CHECK(b == 1.0 / 12.0);
    CHECK(p.b_diag[0] > 2.0 * p.b_off[0]);
}

TEST_CASE("Coulomb entries at N = 3, h = 1")
{
    const TridiagonalPencil p = assemble_pencil(build_grid(3, 1.0), PotentialSpec{1.0, 0, 0.0});
    CHECK(p.m_diag[0] == doctest::Approx(1.0 + 10.0 * (-1.0) / 12.0));
    CHECK(p.m_diag[1] == doctest::Approx(1.0 + 10.0 * (-0.5) / 12.0));
    CHECK(p.m_diag[2] == doctest::Approx(1.0 + 10.0 * (-1.0 / 3.0) / 12.0));
    CHECK(p.m_sub[0] == doctest::Approx(-0.5 + (-1.0) / 12.0));
    CHECK(p.m_super[0] == doctest::Approx(-0.5 + (-0.5) / 12.0));
    CHECK(p.m_sub[1] == doctest::Approx(-0.5 + (-0.5) / 12.0));
    CHECK(p.m_super[1] == doctest::Approx(-0.5 + (-1.0 / 3.0) / 12.0));
}

TEST_CASE("constant potential gives a symmetric M")
{
    const std::vector<double> v(40, -0.7);
    const TridiagonalPencil p = assemble_pencil(0.3, v);
    for (std::size_t k = 0; k + 1 < p.size(); ++k) {
        CHECK(p.m_sub[k] == p.m_super[k]);
        CHECK(p.m_sub[k] == doctest::Approx(-1.0 / (2.0 * 0.09) - 0.7 / 12.0));
    }
}

TEST_CASE("single-point zero-potential pencil")
{
    const TridiagonalPencil p = assemble_pencil(1.0, std::vector<double>{0.0});
    REQUIRE(p.size() == 1);
    CHECK(p.m_diag[0] == doctest::Approx(1.0));
    CHECK(p.b_diag[0] == doctest::Approx(10.0 / 12.0));
    CHECK(kth_eigenvalue(p, 1) == doctest::Approx(1.2).epsilon(1e-14));
}

TEST_CASE("zero potential matches the closed-form spectrum")
{
    for (std::size_t N : {10u, 100u}) {
        const double h = 0.1;
        const TridiagonalPencil p = assemble_pencil(h, std::vector<double>(N, 0.0));
        for (std::size_t k = 1; k <= N; ++k) {
            const double exact = oracle::box_pencil_eigenvalue(N, h, k);
            CHECK(std::abs(kth_eigenvalue(p, k) - exact) <= 1e-12 * std::abs(exact));
        }
    }
}

TEST_CASE("assembly is linear in the potential")
{
    // V + c shifts M by c B, hence the spectrum by exactly c.
    const RadialGrid g = build_grid(60, 0.25);
    const TridiagonalPencil base = assemble_pencil(g, PotentialSpec{});
    std::vector<double> shifted_v = base.potential;
    for (double& v : shifted_v) v += 1.0;
    const TridiagonalPencil shifted = assemble_pencil(g.spacing(), shifted_v);
    for (std::size_t i = 0; i < base.size(); ++i)
        CHECK(shifted.m_diag[i] == doctest::Approx(base.m_diag[i] + base.b_diag[i]).epsilon(1e-14));
    for (std::size_t k : {1u, 2u, 5u, 30u, 60u}) {
        const double a = kth_eigenvalue(base, k);
        const double b = kth_eigenvalue(shifted, k);
        CHECK(std::abs((b - a) - 1.0) <= 1e-12 * std::max(1.0, std::abs(b)));
    }
}

TEST_CASE("pencil samples the effective potential on the grid")
{
    const PotentialSpec pot{2.0, 1, 0.0};
    const RadialGrid g = build_grid(20, 0.1);
    const TridiagonalPencil p = assemble_pencil(g, pot);
    for (std::size_t i = 0; i < g.size(); ++i) CHECK(p.potential[i] == effective_potential(g.node(i + 1), pot));
}
