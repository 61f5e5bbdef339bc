#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "numerov/model.hpp"

namespace numerov {

/// Two-grid screening iteration for a single bound state.
///
/// Both grids start from nu solving mu_exp(N, l, nu) = seed_h^2. While the
/// coarse grid lies above the fine one (signed energies), each grid's nu is
/// pushed through mu_erf and solved back through mu_exp, which strengthens
/// the screening. The first iteration at which the ordering flips is closed
/// with a nu^2-weighted average of the last two fine-grid energies.
struct AccelConfig {
    StateLabel state;
    double Z = 1.0;
    std::int64_t N1 = 0;
    std::int64_t N2 = 0;
    double h1 = 0.0;
    double h2 = 0.0;
    /// Grid sizes whose squares seed nu; default to h1/h2.
    std::optional<double> seed_h1;
    std::optional<double> seed_h2;
    /// Fixed screening form; when unset the form that lowers the fine-grid
    /// energy at i = 0 is used.
    std::optional<ScreeningForm> form;
    int max_iter = 25;

    void validate() const;
};

enum class AccelBranch { ErfFallback, WeightedAverage, MaxIterReached };

std::string_view to_string(AccelBranch b);

struct AccelRecord {
    int i = 0;
    double nu_n1 = 0.0;
    double nu_n2 = 0.0;
    double mu_n1 = 0.0;
    double mu_n2 = 0.0;
    double energy_n1 = 0.0;
    double energy_n2 = 0.0;
    bool clamped = false;  ///< some nu hit the lower limit 1 on this row
};

struct AccelTrace {
    std::vector<AccelRecord> records;
    AccelBranch branch = AccelBranch::MaxIterReached;
    double final_energy = 0.0;
    int iterations = 0;
    ScreeningForm form = ScreeningForm::Softened;
    /// Erf-variant exponent on the fine grid; set only on ErfFallback.
    std::optional<double> nu2_n2;
};

/// nu solving mu_exp(N, l, nu) = h^2.
double initial_nu(std::int64_t N, int l, double h);

struct NuStep {
    double nu;
    bool clamped;
};

/// mu2 = mu_erf(N, l, nu), then the nu with mu_exp(N, l, nu) = mu2.
/// Results below 1 are clamped to 1 and flagged.
NuStep nu_update(double nu, std::int64_t N, int l);

/// (nu_prev^2 E_prev + nu_curr^2 E_curr) / (nu_prev^2 + nu_curr^2)
double weighted_estimate(double nu_prev, double nu_curr, double e_prev, double e_curr);

/// Signed energy of `state` on the grid (N, h) with screening value mu.
double screened_energy(std::int64_t N, double h, const StateLabel& state, double Z, double mu, ScreeningForm form);

/// The screening form giving the lower energy at mu; Softened on a tie.
ScreeningForm lowering_form(std::int64_t N, double h, const StateLabel& state, double Z, double mu);

/// Called with each record as soon as both grids are solved.
using AccelObserver = std::function<void(const AccelRecord&)>;

AccelTrace accelerate(const AccelConfig& cfg, const AccelObserver& observer = {});

} // namespace numerov
