#pragma once

#include <cstdint>
#include <string_view>

namespace numerov {

/// Which closed form is used for the screening value mu(N, l, nu).
enum class ScreeningVariant { Exp, Erf };

/// How the screening value deforms the Coulomb term.
///
///   Softened:  -Z r^(mu-1)    (weaker than Coulomb for r < 1, stronger beyond)
///   Sharpened: -Z r^(-1-mu)   (stronger than Coulomb for r < 1, weaker beyond)
///
/// Both reduce to -Z/r at mu = 0. Screening lowers 1s with Sharpened and
/// ns (n >= 2) with Softened.
enum class ScreeningForm { Softened, Sharpened };

std::string_view to_string(ScreeningVariant v);
std::string_view to_string(ScreeningForm f);
ScreeningVariant parse_variant(std::string_view s);
ScreeningForm parse_form(std::string_view s);

/// Bound-state label (n, l); within a fixed-l spectrum the state is the
/// (n - l)-th eigenvalue and its radial function has n - l - 1 interior nodes.
struct StateLabel {
    int n = 1;
    int l = 0;

    StateLabel() = default;
    StateLabel(int n_, int l_);

    int index() const { return n - l; }
    int expected_nodes() const { return n - l - 1; }
};

struct ScreeningSpec {
    ScreeningVariant variant = ScreeningVariant::Exp;
    double nu = 1.0;
    int l = 0;

    double evaluate(std::int64_t N) const;
};

struct PotentialSpec {
    double Z = 1.0;
    int l = 0;
    double mu = 0.0;
    ScreeningForm form = ScreeningForm::Softened;

    void validate() const;
};

/// exp(N^(-nu (l+1))) - 1
double mu_exp(std::int64_t N, int l, double nu);

/// erf(N^(-nu (l+1)))
double mu_erf(std::int64_t N, int l, double nu);

double mu_value(ScreeningVariant variant, std::int64_t N, int l, double nu);

/// Inverse error function on (-1, 1), Newton-polished to 1e-14 relative.
double erf_inv(double y);

/// Solves mu_variant(N, l, nu) = mu_target for nu. The result is not clamped
/// to nu >= 1; callers that feed it back into mu_exp/mu_erf must check.
double nu_from_mu(ScreeningVariant variant, std::int64_t N, int l, double mu_target);

/// l(l+1)/(2 r^2) - Z r^(mu-1) (Softened) or ... - Z r^(-1-mu) (Sharpened).
double effective_potential(double r, const PotentialSpec& spec);

} // namespace numerov
