#include "numerov/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "numerov/errors.hpp"
#include "numerov/tridiagonal_lu.hpp"

namespace numerov {

namespace {

constexpr double kNodeFloor = 1e-8;
constexpr int kMaxBisections = 200;
constexpr int kMaxRefinements = 50;

void require_assembled(const TridiagonalPencil& p)
{
    const std::size_t n = p.size();
    if (n == 0 || p.potential.size() != n || p.b_diag.size() != n || p.m_sub.size() + 1 != n ||
        p.m_super.size() + 1 != n || p.b_off.size() + 1 != n || !(p.h > 0.0))
        throw DomainError("pencil is not a consistently assembled Numerov pencil");
}

std::vector<double> start_vector(std::size_t n)
{
    // Fixed seed: every solve is reproducible bit for bit.
    std::mt19937_64 rng(0x6e756d65726f76ULL);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<double> v(n);
    for (auto& x : v) x = dist(rng);
    return v;
}

std::vector<double> apply_b(const TridiagonalPencil& p, std::span<const double> x)
{
    const std::size_t n = x.size();
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        double s = p.b_diag[i] * x[i];
        if (i > 0) s += p.b_off[i - 1] * x[i - 1];
        if (i + 1 < n) s += p.b_off[i] * x[i + 1];
        out[i] = s;
    }
    return out;
}

// Scale so that the largest-magnitude entry is exactly +1.
void normalize_peak(std::vector<double>& x)
{
    std::size_t imax = 0;
    for (std::size_t i = 1; i < x.size(); ++i)
        if (std::abs(x[i]) > std::abs(x[imax])) imax = i;
    const double peak = x[imax];
    if (peak == 0.0 || !std::isfinite(peak)) throw NoConvergence("inverse iteration produced a degenerate vector");
    for (auto& v : x) v /= peak;
}

// y^T M x / y^T B x with the kinetic block summed by parts:
//   y^T (-A/2) x = 1/(2h^2) sum_{i=0}^{N} (y_{i+1}-y_i)(x_{i+1}-x_i),  ghosts zero.
double two_sided_quotient(const TridiagonalPencil& p, std::span<const double> y, std::span<const double> x)
{
    const std::size_t n = x.size();
    const auto& v = p.potential;
    double kinetic = 0.0, bv = 0.0, b = 0.0;
    double y_prev = 0.0, x_prev = 0.0;
    for (std::size_t i = 0; i <= n; ++i) {
        const double yi = i < n ? y[i] : 0.0;
        const double xi = i < n ? x[i] : 0.0;
        kinetic += (yi - y_prev) * (xi - x_prev);
        y_prev = yi;
        x_prev = xi;
    }
    kinetic *= 0.5 / (p.h * p.h);
    for (std::size_t i = 0; i < n; ++i) {
        double sb = p.b_diag[i] * x[i];
        double sbv = p.b_diag[i] * v[i] * x[i];
        if (i > 0) {
            sb += p.b_off[i - 1] * x[i - 1];
            sbv += p.b_off[i - 1] * v[i - 1] * x[i - 1];
        }
        if (i + 1 < n) {
            sb += p.b_off[i] * x[i + 1];
            sbv += p.b_off[i] * v[i + 1] * x[i + 1];
        }
        b += y[i] * sb;
        bv += y[i] * sbv;
    }
    if (b == 0.0) throw NoConvergence("Rayleigh quotient: left and right vectors are B-orthogonal");
    return (kinetic + bv) / b;
}

TridiagonalLU factor_shifted(const TridiagonalPencil& p, double sigma)
{
    const std::size_t n = p.size();
    const double inv_h2 = 1.0 / (p.h * p.h);
    std::vector<double> sub(n - 1), diag(n), super(n - 1);
    for (std::size_t i = 0; i < n; ++i) diag[i] = inv_h2 + p.b_diag[i] * (p.potential[i] - sigma);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        sub[k] = p.m_sub[k] - sigma * p.b_off[k];
        super[k] = p.m_super[k] - sigma * p.b_off[k];
    }
    return TridiagonalLU(sub, diag, super);
}

// Factor at sigma; on an exactly zero pivot nudge the shift once.
TridiagonalLU factor_with_retry(const TridiagonalPencil& p, double& sigma)
{
    TridiagonalLU lu = factor_shifted(p, sigma);
    if (!lu.singular()) return lu;
    sigma += 1e-12 * std::max(std::abs(sigma), std::numeric_limits<double>::min());
    lu = factor_shifted(p, sigma);
    if (lu.singular()) throw SingularFactorization("shifted pencil is singular at " + std::to_string(sigma));
    return lu;
}

struct Refined {
    double energy;
    std::vector<double> right;
};

Refined rayleigh_refine(const TridiagonalPencil& p, double sigma, double guard_lo, double guard_hi, double tol)
{
    std::vector<double> x = start_vector(p.size());
    std::vector<double> y = x;
    for (int it = 0; it < kMaxRefinements; ++it) {
        double shift = sigma;
        const TridiagonalLU lu = factor_with_retry(p, shift);
        for (int s = 0; s < 2; ++s) {
            x = apply_b(p, x);
            lu.solve(x);
            normalize_peak(x);
            y = apply_b(p, y);
            lu.solve_transposed(y);
            normalize_peak(y);
        }
        const double rho = two_sided_quotient(p, y, x);
        if (!std::isfinite(rho) || rho < guard_lo || rho > guard_hi)
            throw NoConvergence("Rayleigh refinement left the bisection bracket");
        if (std::abs(rho - sigma) <= tol * std::max(1.0, std::abs(rho))) return {rho, std::move(x)};
        sigma = rho;
    }
    throw NoConvergence("Rayleigh refinement did not converge in 50 steps");
}

struct Twisted {
    std::vector<double> right, left;
    double gamma;
    std::size_t twist;
};

// Twisted factorization of T = M - E B: forward pivots from the top, backward
// pivots from the bottom, joined at the row k where
// gamma_k = D+_k + D-_k - a_k is smallest. Both null vectors then follow from
// one-sided recurrences that run in the direction in which a bound state
// grows, and T x = gamma_k e_k, y^T T = gamma_k e_k^T with x_k = y_k = 1.
Twisted twisted(const TridiagonalPencil& p, double energy)
{
    const std::size_t n = p.size();
    // Extended precision: the pivots carry 1/h^2 sized terms that cancel
    // down to gamma, and in double the rounding noise sets the residual floor.
    using real = long double;
    constexpr real pivmin = std::numeric_limits<real>::min();
    const real e = energy;
    const real inv_h2 = 1.0L / (static_cast<real>(p.h) * p.h);
    std::vector<real> a(n), sub(n - 1), sup(n - 1);
    for (std::size_t i = 0; i < n; ++i) a[i] = inv_h2 + static_cast<real>(p.b_diag[i]) * (p.potential[i] - e);
    const real half_inv_h2 = 0.5L * inv_h2;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        sub[i] = -half_inv_h2 + static_cast<real>(p.b_off[i]) * (p.potential[i] - e);
        sup[i] = -half_inv_h2 + static_cast<real>(p.b_off[i]) * (p.potential[i + 1] - e);
    }
    auto guard = [](real d) { return std::abs(d) < pivmin ? -pivmin : d; };

    std::vector<real> fwd(n), bwd(n);
    fwd[0] = guard(a[0]);
    for (std::size_t i = 1; i < n; ++i) fwd[i] = guard(a[i] - sub[i - 1] * sup[i - 1] / fwd[i - 1]);
    bwd[n - 1] = guard(a[n - 1]);
    for (std::size_t i = n - 1; i-- > 0;) bwd[i] = guard(a[i] - sub[i] * sup[i] / bwd[i + 1]);

    real gamma = std::numeric_limits<real>::infinity();
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const real g = fwd[i] + bwd[i] - a[i];
        if (std::abs(g) < std::abs(gamma)) {
            gamma = g;
            k = i;
        }
    }
    if (!std::isfinite(gamma)) throw SingularFactorization("twisted factorization broke down");

    std::vector<real> x(n, 0.0L), y(n, 0.0L);
    x[k] = y[k] = 1.0;
    for (std::size_t i = k; i-- > 0;) {
        x[i] = -sup[i] * x[i + 1] / fwd[i];
        y[i] = -sub[i] * y[i + 1] / fwd[i];
    }
    for (std::size_t i = k + 1; i < n; ++i) {
        x[i] = -sub[i - 1] * x[i - 1] / bwd[i];
        y[i] = -sup[i - 1] * y[i - 1] / bwd[i];
    }
    Twisted t{std::vector<double>(x.begin(), x.end()), std::vector<double>(y.begin(), y.end()),
              static_cast<double>(gamma), k};
    return t;
}

// Newton steps on the twist pivot: y^T (M - E B) x = gamma with x_k = y_k = 1
// gives lambda = E + gamma / (y^T B x). Settles E on the eigenvalue of the
// pencil as it is stored, which keeps the row residual at rounding level.
double polish(const TridiagonalPencil& p, double energy, double max_shift)
{
    const double start = energy;
    double best = energy, best_gamma = std::numeric_limits<double>::infinity();
    for (int it = 0; it < 8; ++it) {
        const Twisted t = twisted(p, energy);
        if (std::abs(t.gamma) < best_gamma) {
            best = energy;
            best_gamma = std::abs(t.gamma);
        }
        const std::vector<double> bx = apply_b(p, t.right);
        double ybx = 0.0;
        for (std::size_t i = 0; i < bx.size(); ++i) ybx += t.left[i] * bx[i];
        const double next = energy + t.gamma / ybx;
        if (!std::isfinite(next) || std::abs(next - start) > max_shift || next == energy) break;
        energy = next;
    }
    return best;
}

} // namespace

std::size_t count_below(const TridiagonalPencil& p, double lambda)
{
    const std::size_t n = p.size();
    if (n == 0) return 0;
    constexpr double pivmin = std::numeric_limits<double>::min();

    std::size_t count = 0;
    double q = p.m_diag[0] - lambda * p.b_diag[0];
    if (std::abs(q) < pivmin) q = -pivmin;
    if (q < 0.0) ++count;
    for (std::size_t k = 1; k < n; ++k) {
        const double lower = p.m_sub[k - 1] - lambda * p.b_off[k - 1];
        const double upper = p.m_super[k - 1] - lambda * p.b_off[k - 1];
        const double c = lower * upper;
        if (!(c > 0.0))
            throw SimilarityViolation("off-diagonal product " + std::to_string(c) + " at row " + std::to_string(k) +
                                      " for shift " + std::to_string(lambda));
        // Ratio form of d_k = a_k d_{k-1} - c_{k-1} d_{k-2}: q_k = d_k / d_{k-1}.
        q = (p.m_diag[k] - lambda * p.b_diag[k]) - c / q;
        if (std::abs(q) < pivmin) q = -pivmin;
        if (q < 0.0) ++count;
    }
    return count;
}

SpectrumBounds spectrum_bounds(const TridiagonalPencil& p)
{
    const std::size_t n = p.size();
    double lo_m = std::numeric_limits<double>::infinity();
    double hi_m = -lo_m;
    for (std::size_t i = 0; i < n; ++i) {
        double radius = 0.0;
        if (i > 0) radius += std::abs(p.m_sub[i - 1]);
        if (i + 1 < n) radius += std::abs(p.m_super[i]);
        lo_m = std::min(lo_m, p.m_diag[i] - radius);
        hi_m = std::max(hi_m, p.m_diag[i] + radius);
    }
    // Eigenvalues of the Numerov B lie in [8/12, 12/12].
    constexpr double b_min = 8.0 / 12.0;
    SpectrumBounds b{lo_m < 0.0 ? lo_m / b_min : lo_m, hi_m > 0.0 ? hi_m / b_min : hi_m};

    for (int i = 0; i < 64 && count_below(p, b.lower) > 0; ++i) b.lower -= std::abs(b.lower) + 1.0;
    for (int i = 0; i < 64 && count_below(p, b.upper) < n; ++i) b.upper += std::abs(b.upper) + 1.0;
    return b;
}

double kth_eigenvalue(const TridiagonalPencil& p, std::size_t k, double tol)
{
    require_assembled(p);
    if (k < 1 || k > p.size()) throw DomainError("kth_eigenvalue: k must satisfy 1 <= k <= N");
    if (!(tol >= 1e-14)) throw DomainError("kth_eigenvalue: tol must be >= 1e-14");

    const SpectrumBounds bounds = spectrum_bounds(p);
    double lo = bounds.lower, hi = bounds.upper;
    bool converged = false;
    for (int it = 0; it < kMaxBisections; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (hi - lo <= tol * std::max(1.0, std::abs(mid)) || mid <= lo || mid >= hi) {
            converged = true;
            break;
        }
        if (count_below(p, mid) >= k)
            hi = mid;
        else
            lo = mid;
    }
    if (!converged) throw NoConvergence("kth_eigenvalue: bisection exceeded 200 steps");

    // Sturm counts are only trustworthy to ~eps ||M||, so the quotient is
    // allowed to settle a little outside the bisection bracket.
    const double mid = 0.5 * (lo + hi);
    const double slack = std::max(1e-6 * std::max(1.0, std::abs(mid)), 100.0 * (hi - lo));
    const double rho = rayleigh_refine(p, mid, mid - slack, mid + slack, tol).energy;
    return polish(p, rho, slack);
}

int node_count(std::span<const double> psi)
{
    int nodes = 0;
    int last_sign = 0;
    for (double v : psi) {
        if (std::abs(v) <= kNodeFloor) continue;
        const int sign = v > 0.0 ? 1 : -1;
        if (last_sign != 0 && sign != last_sign) ++nodes;
        last_sign = sign;
    }
    return nodes;
}

double pencil_residual(const TridiagonalPencil& p, double energy, std::span<const double> psi)
{
    require_assembled(p);
    const std::size_t n = p.size();
    const double inv_2h2 = 0.5 / (p.h * p.h);
    double worst = 0.0, norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double left = i > 0 ? psi[i - 1] : 0.0;
        const double right = i + 1 < n ? psi[i + 1] : 0.0;
        const double second_diff = (left - psi[i]) + (right - psi[i]);
        double r = -inv_2h2 * second_diff + p.b_diag[i] * (p.potential[i] - energy) * psi[i];
        if (i > 0) r += p.b_off[i - 1] * (p.potential[i - 1] - energy) * left;
        if (i + 1 < n) r += p.b_off[i] * (p.potential[i + 1] - energy) * right;
        worst = std::max(worst, std::abs(r));
        norm = std::max(norm, std::abs(psi[i]));
    }
    return norm > 0.0 ? worst / norm : std::numeric_limits<double>::infinity();
}

EigenSolution eigenvector(const TridiagonalPencil& p, double energy)
{
    require_assembled(p);
    Twisted t = twisted(p, energy);
    normalize_peak(t.right);

    EigenSolution sol;
    sol.energy = energy;
    sol.residual = pencil_residual(p, energy, t.right);
    sol.nodes = node_count(t.right);
    sol.psi = std::move(t.right);
    return sol;
}

EigenSolution solve_state(const TridiagonalPencil& p, const StateLabel& state, double Z)
{
    require_assembled(p);
    const auto k = static_cast<std::size_t>(state.index());
    if (k > p.size()) throw DomainError("solve_state: grid has fewer nodes than the requested state index");
    try {
        return eigenvector(p, kth_eigenvalue(p, k));
    } catch (const SimilarityViolation&) {
        const double seed = -Z * Z / (2.0 * state.n * state.n);
        const double inf = std::numeric_limits<double>::infinity();
        const Refined r = rayleigh_refine(p, seed, -inf, inf, kDefaultEigenTol);
        EigenSolution sol = eigenvector(p, polish(p, r.energy, 1e-6 * std::max(1.0, std::abs(r.energy))));
        if (sol.nodes != state.expected_nodes())
            throw SimilarityViolation("fallback Rayleigh iteration converged to a state with " +
                                      std::to_string(sol.nodes) + " nodes, expected " +
                                      std::to_string(state.expected_nodes()));
        return sol;
    }
}

double state_energy(const TridiagonalPencil& p, const StateLabel& state, double Z)
{
    require_assembled(p);
    const auto k = static_cast<std::size_t>(state.index());
    if (k > p.size()) throw DomainError("state_energy: grid has fewer nodes than the requested state index");
    try {
        return kth_eigenvalue(p, k);
    } catch (const SimilarityViolation&) {
        return solve_state(p, state, Z).energy;
    }
}

} // namespace numerov
