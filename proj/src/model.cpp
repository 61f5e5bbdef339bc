#include "numerov/model.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "numerov/errors.hpp"

namespace numerov {

std::string_view to_string(ScreeningVariant v)
{
    return v == ScreeningVariant::Exp ? "exp" : "erf";
}

std::string_view to_string(ScreeningForm f)
{
    return f == ScreeningForm::Softened ? "softened" : "sharpened";
}

ScreeningVariant parse_variant(std::string_view s)
{
    if (s == "exp") return ScreeningVariant::Exp;
    if (s == "erf") return ScreeningVariant::Erf;
    throw DomainError("unknown screening variant '" + std::string(s) + "' (expected exp or erf)");
}

ScreeningForm parse_form(std::string_view s)
{
    if (s == "softened") return ScreeningForm::Softened;
    if (s == "sharpened") return ScreeningForm::Sharpened;
    throw DomainError("unknown screening form '" + std::string(s) + "' (expected softened or sharpened)");
}

StateLabel::StateLabel(int n_, int l_) : n(n_), l(l_)
{
    if (n < 1) throw DomainError("principal quantum number must be >= 1");
    if (l < 0 || l > n - 1) throw DomainError("angular momentum must satisfy 0 <= l <= n-1");
}

double ScreeningSpec::evaluate(std::int64_t N) const
{
    return mu_value(variant, N, l, nu);
}

void PotentialSpec::validate() const
{
    if (!(Z > 0.0) || !std::isfinite(Z)) throw DomainError("nuclear charge Z must be positive");
    if (l < 0) throw DomainError("angular momentum l must be non-negative");
    if (!(mu >= 0.0 && mu < 1.0)) throw DomainError("screening value mu must lie in [0, 1)");
}

namespace {

void check_screening_args(std::int64_t N, int l, double nu)
{
    if (N < 1) throw DomainError("mu: N must be >= 1");
    if (l < 0) throw DomainError("mu: l must be non-negative");
    if (!(nu >= 1.0) || !std::isfinite(nu)) throw DomainError("mu: nu must satisfy 1 <= nu < inf");
}

// N^(-nu (l+1)) evaluated in log space; underflows cleanly to 0 for huge N.
double screening_argument(std::int64_t N, int l, double nu)
{
    return std::exp(-nu * (l + 1) * std::log(static_cast<double>(N)));
}

} // namespace

double mu_exp(std::int64_t N, int l, double nu)
{
    check_screening_args(N, l, nu);
    return std::expm1(screening_argument(N, l, nu));
}

double mu_erf(std::int64_t N, int l, double nu)
{
    check_screening_args(N, l, nu);
    return std::erf(screening_argument(N, l, nu));
}

double mu_value(ScreeningVariant variant, std::int64_t N, int l, double nu)
{
    return variant == ScreeningVariant::Exp ? mu_exp(N, l, nu) : mu_erf(N, l, nu);
}

double erf_inv(double y)
{
    if (!(y > -1.0 && y < 1.0)) throw DomainError("erf_inv: argument must lie in (-1, 1)");
    if (y == 0.0) return 0.0;

    const double sign = y < 0.0 ? -1.0 : 1.0;
    const double ay = std::abs(y);
    const double two_over_sqrt_pi = 2.0 / std::sqrt(std::numbers::pi);

    // Winitzki's closed-form approximation as the starting point.
    double x;
    if (ay < 1e-3) {
        x = ay / two_over_sqrt_pi;
    } else {
        constexpr double a = 0.147;
        const double ln1my2 = std::log1p(-ay * ay);
        const double t = 2.0 / (std::numbers::pi * a) + 0.5 * ln1my2;
        x = std::sqrt(std::sqrt(t * t - ln1my2 / a) - t);
    }

    for (int it = 0; it < 100; ++it) {
        // For large arguments erf(x) - y loses everything to cancellation;
        // (1 - y) - erfc(x) keeps the digits.
        const double f = ay > 0.5 ? (1.0 - ay) - std::erfc(x) : std::erf(x) - ay;
        const double df = two_over_sqrt_pi * std::exp(-x * x);
        double step = f / df;
        // Guard: never let a step flip the sign or blow past the root badly.
        while (x - step <= 0.0 || !std::isfinite(x - step)) step *= 0.5;
        x -= step;
        if (std::abs(step) <= 1e-14 * std::abs(x)) return sign * x;
    }
    throw NoConvergence("erf_inv: Newton iteration exceeded 100 steps");
}

double nu_from_mu(ScreeningVariant variant, std::int64_t N, int l, double mu_target)
{
    if (!(mu_target > 0.0 && mu_target < 1.0)) throw DomainError("nu_from_mu: mu_target must lie in (0, 1)");
    if (N < 2) throw DomainError("nu_from_mu: N must be >= 2");
    if (l < 0) throw DomainError("nu_from_mu: l must be non-negative");

    const double x = variant == ScreeningVariant::Exp ? std::log1p(mu_target) : erf_inv(mu_target);
    return -std::log(x) / ((l + 1) * std::log(static_cast<double>(N)));
}

double effective_potential(double r, const PotentialSpec& spec)
{
    if (!(r > 0.0)) throw DomainError("effective_potential: r must be positive");
    const double centrifugal = spec.l * (spec.l + 1) / (2.0 * r * r);
    if (spec.mu == 0.0) return centrifugal - spec.Z / r;
    const double exponent = spec.form == ScreeningForm::Softened ? spec.mu - 1.0 : -1.0 - spec.mu;
    return centrifugal - spec.Z * std::pow(r, exponent);
}

} // namespace numerov
