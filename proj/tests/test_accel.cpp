#include <doctest.h>

#include <cmath>

#include "numerov/accel.hpp"
#include "numerov/assembly.hpp"
#include "numerov/eigen.hpp"
#include "numerov/errors.hpp"
#include "numerov/oracle.hpp"
#include "numerov/reference.hpp"

using namespace numerov;

namespace {

AccelConfig worked_1s()
{
    AccelConfig c;
    c.state = StateLabel(1, 0);
    c.N1 = 7500;
    c.N2 = 10000;
    c.h1 = 0.001498;
    c.h2 = 0.001160;
    return c;
}

AccelConfig tabulated(int n, std::int64_t N1, std::int64_t N2)
{
    AccelConfig c;
    c.state = StateLabel(n, 0);
    c.N1 = N1;
    c.N2 = N2;
    c.h1 = *reference::grid_size(N1, n);
    c.h2 = *reference::grid_size(N2, n);
    c.seed_h1 = *reference::grid_size(N1, 1);
    c.seed_h2 = *reference::grid_size(N2, 1);
    return c;
}

} // namespace

TEST_CASE("initial nu inverts mu_exp")
{
    for (double h : {0.001498, 0.00116, 0.01}) {
        const double nu = initial_nu(7500, 0, h);
        CHECK(mu_exp(7500, 0, nu) == doctest::Approx(h * h).epsilon(1e-12));
    }
    // printed 1.457709 / 1.467792 used unrounded h; see the model tests
    CHECK(initial_nu(7500, 0, 0.001498) == doctest::Approx(1.457709).epsilon(7.5e-5));
    CHECK(initial_nu(10000, 0, 0.001160) == doctest::Approx(1.467792).epsilon(7.5e-5));
}

TEST_CASE("nu_update lowers nu")
{
    CHECK(nu_update(1.457709, 7500, 0).nu == doctest::Approx(1.444173).epsilon(5e-4));
    CHECK(nu_update(1.467792, 10000, 0).nu == doctest::Approx(1.454678).epsilon(5e-4));
    CHECK(nu_update(nu_update(1.457709, 7500, 0).nu, 7500, 0).nu == doctest::Approx(1.430636).epsilon(5e-4));
    for (double nu : {1.1, 1.3, 2.0, 4.0}) {
        const NuStep s = nu_update(nu, 5000, 0);
        CHECK(s.nu < nu);
        CHECK_FALSE(s.clamped);
    }
    const NuStep low = nu_update(1.0, 5000, 0);
    CHECK(low.nu == 1.0);
    CHECK(low.clamped);
}

TEST_CASE("weighted estimate")
{
    CHECK(weighted_estimate(1.3, 1.3, -0.2, -0.2) == doctest::Approx(-0.2).epsilon(1e-15));
    CHECK(weighted_estimate(1.0, 2.0, 0.0, 1.0) == doctest::Approx(0.8).epsilon(1e-15));
    CHECK(std::abs(weighted_estimate(1.441564, 1.428451, -0.4999999741, -0.5000000336) + 0.5000000037) <= 2e-10);
    for (double a : {1.0, 1.2, 3.0})
        for (double b : {1.0, 1.7, 5.0})
            for (auto [e1, e2] : {std::pair{-0.5, -0.4}, std::pair{-1.0, 2.0}, std::pair{3.0, 3.0}}) {
                const double w = weighted_estimate(a, b, e1, e2);
                const double slack = 4e-16 * std::max(std::abs(e1), std::abs(e2));
                CHECK(w >= std::min(e1, e2) - slack);
                CHECK(w <= std::max(e1, e2) + slack);
            }
}

TEST_CASE("worked ground-state trace")
{
    const AccelTrace t = accelerate(worked_1s());
    REQUIRE(t.records.size() == reference::kWorked1s.size());
    CHECK(t.branch == AccelBranch::WeightedAverage);
    CHECK(t.iterations == 3);
    CHECK(t.form == ScreeningForm::Sharpened);
    for (std::size_t i = 0; i < t.records.size(); ++i) {
        const auto& r = t.records[i];
        const auto& w = reference::kWorked1s[i];
        INFO("i = " << i);
        CHECK(r.i == static_cast<int>(i));
        CHECK(std::abs(r.energy_n1 - w.energy_n1) <= 1e-8);
        CHECK(std::abs(r.energy_n2 - w.energy_n2) <= 1e-8);
        CHECK(r.nu_n1 == doctest::Approx(w.nu_n1).epsilon(7.5e-5));
        CHECK(r.nu_n2 == doctest::Approx(w.nu_n2).epsilon(7.5e-5));
        CHECK((r.energy_n1 > r.energy_n2) == (i < 3));
    }
    CHECK(std::abs(t.final_energy - reference::kWorked1sFinal) <= 2e-9);
    CHECK(std::abs(t.final_energy + 0.5) <= 4e-9);
}

TEST_CASE("nu falls and mu rises along the trace")
{
    for (const AccelTrace& t : {accelerate(worked_1s()), accelerate(tabulated(5, 7500, 10000))}) {
        for (std::size_t i = 1; i < t.records.size(); ++i) {
            CHECK(t.records[i].nu_n1 < t.records[i - 1].nu_n1);
            CHECK(t.records[i].nu_n2 < t.records[i - 1].nu_n2);
            CHECK(t.records[i].mu_n1 > t.records[i - 1].mu_n1);
            CHECK(t.records[i].mu_n2 > t.records[i - 1].mu_n2);
        }
    }
}

TEST_CASE("iteration counts for excited s states")
{
    // published 1, 2, 4, 6, 15 for 2s, 3s, 4s, 5s, 10s
    const int published[] = {1, 2, 4, 6};
    for (int n = 2; n <= 5; ++n) {
        const AccelTrace t = accelerate(tabulated(n, 7500, 10000));
        INFO("n = " << n);
        CHECK(t.branch == AccelBranch::WeightedAverage);
        CHECK(std::abs(t.iterations - published[n - 2]) <= 1);
        CHECK(t.form == ScreeningForm::Softened);
    }
    const AccelTrace t10 = accelerate(tabulated(10, 7500, 10000));
    CHECK(t10.iterations <= 17);
}

TEST_CASE("ground state is bracketed by the last two fine-grid energies")
{
    const AccelTrace t = accelerate(tabulated(1, 7500, 10000));
    REQUIRE(t.branch == AccelBranch::WeightedAverage);
    const double a = t.records[t.records.size() - 2].energy_n2;
    const double b = t.records.back().energy_n2;
    CHECK(-0.5 >= std::min(a, b));
    CHECK(-0.5 <= std::max(a, b));
}

TEST_CASE("acceleration beats the plain fine grid")
{
    // For n >= 2 both final energies can overshoot, so only the defect is compared.
    for (int n : {1, 2, 3, 4, 5, 10}) {
        const AccelConfig c = tabulated(n, 7500, 10000);
        const AccelTrace t = accelerate(c);
        const double exact = oracle::analytic_energy(1.0, n);
        const double plain = screened_energy(c.N2, c.h2, c.state, 1.0, 0.0, ScreeningForm::Softened);
        INFO("n = " << n);
        CHECK(std::abs(t.final_energy - exact) < std::abs(plain - exact));
    }
}

TEST_CASE("identical grids take the erf branch")
{
    AccelConfig c = worked_1s();
    c.N2 = c.N1;
    c.h2 = c.h1;
    const AccelTrace t = accelerate(c);
    CHECK(t.branch == AccelBranch::ErfFallback);
    CHECK(t.records.size() == 1);
    CHECK(t.iterations == 0);
    REQUIRE(t.nu2_n2.has_value());
    CHECK(mu_erf(c.N2, 0, *t.nu2_n2) == doctest::Approx(c.h2 * c.h2).epsilon(1e-12));
}

TEST_CASE("max_iter is a result, not an error")
{
    AccelConfig c = tabulated(10, 7500, 10000);
    c.max_iter = 3;
    const AccelTrace t = accelerate(c);
    CHECK(t.branch == AccelBranch::MaxIterReached);
    CHECK(t.records.size() == 4);
    CHECK(t.final_energy == t.records.back().energy_n2);
}

TEST_CASE("zero screening reproduces the plain solver")
{
    const double plain = kth_eigenvalue(assemble_pencil(build_grid(2000, 0.004941), PotentialSpec{}), 1);
    CHECK(screened_energy(2000, 0.004941, StateLabel(1, 0), 1.0, 0.0, ScreeningForm::Softened) == plain);
    CHECK(screened_energy(2000, 0.004941, StateLabel(1, 0), 1.0, 0.0, ScreeningForm::Sharpened) == plain);
}

TEST_CASE("observer sees every record in order")
{
    std::vector<int> seen;
    const AccelTrace t = accelerate(worked_1s(), [&](const AccelRecord& r) { seen.push_back(r.i); });
    CHECK(seen == std::vector<int>{0, 1, 2, 3});
    CHECK(t.records.size() == 4);
}

TEST_CASE("accelerate is deterministic")
{
    const AccelTrace a = accelerate(tabulated(3, 5000, 7500));
    const AccelTrace b = accelerate(tabulated(3, 5000, 7500));
    REQUIRE(a.records.size() == b.records.size());
    for (std::size_t i = 0; i < a.records.size(); ++i) {
        CHECK(a.records[i].energy_n1 == b.records[i].energy_n1);
        CHECK(a.records[i].energy_n2 == b.records[i].energy_n2);
        CHECK(a.records[i].nu_n1 == b.records[i].nu_n1);
    }
    CHECK(a.final_energy == b.final_energy);
}

TEST_CASE("config validation")
{
    AccelConfig c = worked_1s();
    c.N1 = 50;
    CHECK_THROWS_AS(accelerate(c), DomainError);
    c = worked_1s();
    c.N2 = 5000;
    CHECK_THROWS_AS(accelerate(c), DomainError);
    c = worked_1s();
    c.h1 = 0.0;
    CHECK_THROWS_AS(accelerate(c), DomainError);
    c = worked_1s();
    c.seed_h2 = 1.5;
    CHECK_THROWS_AS(accelerate(c), DomainError);
}

TEST_CASE("screening narrows the 2p gap to the degenerate level")
{
    const double h1 = *reference::grid_size(2500, 2);
    const double h2 = *reference::grid_size(5000, 2);
    const StateLabel p2(2, 1);
    const double plain = kth_eigenvalue(assemble_pencil(build_grid(5000, h2), PotentialSpec{1.0, 1, 0.0}), 1);
    AccelConfig c;
    c.state = p2;
    c.N1 = 2500;
    c.N2 = 5000;
    c.h1 = h1;
    c.h2 = h2;
    c.seed_h1 = *reference::grid_size(2500, 1);
    c.seed_h2 = *reference::grid_size(5000, 1);
    const AccelTrace t = accelerate(c);
    CHECK(std::abs(std::abs(t.final_energy) - 0.125) < std::abs(std::abs(plain) - 0.125));
}
