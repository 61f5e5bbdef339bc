#include "numerov/accel.hpp"

#include <cmath>
#include <future>

#include "numerov/assembly.hpp"
#include "numerov/eigen.hpp"
#include "numerov/errors.hpp"

namespace numerov {

std::string_view to_string(AccelBranch b)
{
    switch (b) {
    case AccelBranch::ErfFallback: return "erf-fallback";
    case AccelBranch::WeightedAverage: return "weighted-average";
    case AccelBranch::MaxIterReached: return "max-iter";
    }
    return "unknown";
}

void AccelConfig::validate() const
{
    if (!(Z > 0.0)) throw DomainError("accelerate: Z must be positive");
    if (N1 < 100) throw DomainError("accelerate: N1 must be >= 100");
    if (N2 < N1) throw DomainError("accelerate: N2 must be >= N1");
    if (!(h1 > 0.0) || !(h2 > 0.0)) throw DomainError("accelerate: grid sizes must be positive");
    const double s1 = seed_h1.value_or(h1);
    const double s2 = seed_h2.value_or(h2);
    if (!(s1 > 0.0 && s1 < 1.0) || !(s2 > 0.0 && s2 < 1.0))
        throw DomainError("accelerate: seed grid sizes must satisfy 0 < h < 1");
    if (max_iter < 1) throw DomainError("accelerate: max_iter must be positive");
    if (state.index() > N1) throw DomainError("accelerate: state index exceeds grid size");
}

double initial_nu(std::int64_t N, int l, double h)
{
    const double mu = h * h;
    if (!(mu > 0.0 && mu < 1.0)) throw DomainError("initial_nu: h^2 must lie in (0, 1)");
    return nu_from_mu(ScreeningVariant::Exp, N, l, mu);
}

NuStep nu_update(double nu, std::int64_t N, int l)
{
    const double mu2 = mu_erf(N, l, nu);
    const double next = nu_from_mu(ScreeningVariant::Exp, N, l, mu2);
    if (next < 1.0) return {1.0, true};
    return {next, false};
}

double weighted_estimate(double nu_prev, double nu_curr, double e_prev, double e_curr)
{
    const double w_prev = nu_prev * nu_prev;
    const double w_curr = nu_curr * nu_curr;
    return (w_prev * e_prev + w_curr * e_curr) / (w_prev + w_curr);
}

double screened_energy(std::int64_t N, double h, const StateLabel& state, double Z, double mu, ScreeningForm form)
{
    const RadialGrid grid = build_grid(static_cast<std::size_t>(N), h);
    const TridiagonalPencil pencil = assemble_pencil(grid, PotentialSpec{Z, state.l, mu, form});
    return state_energy(pencil, state, Z);
}

ScreeningForm lowering_form(std::int64_t N, double h, const StateLabel& state, double Z, double mu)
{
    const double soft = screened_energy(N, h, state, Z, mu, ScreeningForm::Softened);
    const double sharp = screened_energy(N, h, state, Z, mu, ScreeningForm::Sharpened);
    return sharp < soft ? ScreeningForm::Sharpened : ScreeningForm::Softened;
}

namespace {

struct ClampedNu {
    double nu;
    bool clamped;
};

ClampedNu clamp_nu(double nu)
{
    if (nu < 1.0) return {1.0, true};
    return {nu, false};
}

} // namespace

AccelTrace accelerate(const AccelConfig& cfg, const AccelObserver& observer)
{
    cfg.validate();
    const StateLabel& st = cfg.state;
    const int l = st.l;

    const double s1 = cfg.seed_h1.value_or(cfg.h1);
    const double s2 = cfg.seed_h2.value_or(cfg.h2);
    ClampedNu nu1 = clamp_nu(initial_nu(cfg.N1, l, s1));
    ClampedNu nu2 = clamp_nu(initial_nu(cfg.N2, l, s2));

    AccelTrace trace;

    auto solve_pair = [&](double mu1, double mu2, ScreeningForm form) {
        auto fine = std::async(std::launch::async,
                               [&] { return screened_energy(cfg.N2, cfg.h2, st, cfg.Z, mu2, form); });
        const double coarse = screened_energy(cfg.N1, cfg.h1, st, cfg.Z, mu1, form);
        return std::pair{coarse, fine.get()};
    };

    for (int i = 0; i <= cfg.max_iter; ++i) {
        AccelRecord rec;
        rec.i = i;
        rec.nu_n1 = nu1.nu;
        rec.nu_n2 = nu2.nu;
        rec.clamped = nu1.clamped || nu2.clamped;
        rec.mu_n1 = mu_exp(cfg.N1, l, nu1.nu);
        rec.mu_n2 = mu_exp(cfg.N2, l, nu2.nu);

        if (i == 0) {
            trace.form = cfg.form ? *cfg.form : lowering_form(cfg.N2, cfg.h2, st, cfg.Z, rec.mu_n2);
        }
        std::tie(rec.energy_n1, rec.energy_n2) = solve_pair(rec.mu_n1, rec.mu_n2, trace.form);
        trace.records.push_back(rec);
        trace.iterations = i;
        if (observer) observer(rec);

        if (i == 0 && rec.energy_n1 <= rec.energy_n2) {
            // Print E_{N2} at the erf-variant exponent and stop.
            const double nu_erf = clamp_nu(nu_from_mu(ScreeningVariant::Erf, cfg.N2, l, s2 * s2)).nu;
            trace.nu2_n2 = nu_erf;
            trace.final_energy = screened_energy(cfg.N2, cfg.h2, st, cfg.Z, mu_erf(cfg.N2, l, nu_erf), trace.form);
            trace.branch = AccelBranch::ErfFallback;
            return trace;
        }
        if (i >= 1 && rec.energy_n1 <= rec.energy_n2) {
            const AccelRecord& prev = trace.records[trace.records.size() - 2];
            trace.final_energy = weighted_estimate(prev.nu_n2, rec.nu_n2, prev.energy_n2, rec.energy_n2);
            trace.branch = AccelBranch::WeightedAverage;
            return trace;
        }
        if (i == cfg.max_iter) break;

        const NuStep next1 = nu_update(nu1.nu, cfg.N1, l);
        const NuStep next2 = nu_update(nu2.nu, cfg.N2, l);
        nu1 = {next1.nu, next1.clamped};
        nu2 = {next2.nu, next2.clamped};
    }

    trace.branch = AccelBranch::MaxIterReached;
    trace.final_energy = trace.records.back().energy_n2;
    return trace;
}

} // namespace numerov
