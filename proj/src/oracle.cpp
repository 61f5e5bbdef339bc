#include "numerov/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "numerov/errors.hpp"

namespace numerov::oracle {

double analytic_energy(double Z, int n)
{
    if (n < 1) throw DomainError("analytic_energy: n must be >= 1");
    return -Z * Z / (2.0 * n * n);
}

double box_pencil_eigenvalue(std::size_t N, double h, std::size_t k)
{
    if (N < 1 || k < 1 || k > N) throw DomainError("box_pencil_eigenvalue: need 1 <= k <= N");
    if (!(h > 0.0)) throw DomainError("box_pencil_eigenvalue: h must be positive");
    const double theta = static_cast<double>(k) * std::numbers::pi / static_cast<double>(N + 1);
    // 1 - cos t = 2 sin^2(t/2) avoids cancellation for small t.
    const double s = std::sin(0.5 * theta);
    return 12.0 * s * s / (h * h * (5.0 + std::cos(theta)));
}

namespace {

struct Sweep {
    int sign_changes = 0;  // over psi_1 .. psi_{N+1}
    int interior_changes = 0;  // over psi_1 .. psi_N
    double last = 0.0;     // psi_{N+1}
    double peak = 0.0;     // max |psi_i|, same scaling as last
};

Sweep integrate(const std::vector<double>& v, double h, double energy)
{
    const std::size_t n = v.size();
    const double w = h * h / 12.0;
    // (1 - w f_{i+1}) psi_{i+1} = 2 (1 + 5 w f_i) psi_i - (1 - w f_{i-1}) psi_{i-1},  f = 2 (V - E)
    auto f = [&](std::size_t i) { return 2.0 * (v[i - 1] - energy); };  // i is 1-based

    Sweep s;
    double prev = 0.0;  // psi_0
    double cur = h;     // psi_1
    s.peak = std::abs(cur);
    int last_sign = 1;
    double f_prev = 0.0;  // psi_0 = 0 so its coefficient never matters
    double f_cur = f(1);
    for (std::size_t i = 1; i <= n; ++i) {
        if (i == n) s.interior_changes = s.sign_changes;
        // The right ghost carries no potential sample; its coefficient multiplies the unknown
        // psi_{N+1} only, and only the sign/zero of psi_{N+1} matters, so f_{N+1} = 0.
        const double f_next = i < n ? f(i + 1) : 0.0;
        const double next = (2.0 * (1.0 + 5.0 * w * f_cur) * cur - (1.0 - w * f_prev) * prev) / (1.0 - w * f_next);
        prev = cur;
        cur = next;
        f_prev = f_cur;
        f_cur = f_next;

        if (cur != 0.0) {
            const int sign = cur > 0.0 ? 1 : -1;
            if (sign != last_sign) ++s.sign_changes;
            last_sign = sign;
        }
        if (i < n) s.peak = std::max(s.peak, std::abs(cur));
        if (std::abs(cur) > 1e150) {
            prev *= 1e-150;
            cur *= 1e-150;
            s.peak *= 1e-150;
        }
    }
    s.last = cur;
    return s;
}

} // namespace

ShootResult shoot_numerov(const RadialGrid& grid, const PotentialSpec& pot, double e_lo, double e_hi, int target_nodes)
{
    pot.validate();
    if (!(e_lo < e_hi)) throw DomainError("shoot_numerov: need e_lo < e_hi");
    if (target_nodes < 0) throw DomainError("shoot_numerov: target_nodes must be non-negative");

    const double h = grid.spacing();
    std::vector<double> v(grid.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = effective_potential(grid.node(i + 1), pot);

    const Sweep at_lo = integrate(v, h, e_lo);
    const Sweep at_hi = integrate(v, h, e_hi);
    if (at_lo.sign_changes > target_nodes || at_hi.sign_changes <= target_nodes)
        throw BracketError("shoot_numerov: [" + std::to_string(e_lo) + ", " + std::to_string(e_hi) +
                           "] does not straddle the level with " + std::to_string(target_nodes) + " nodes (counts " +
                           std::to_string(at_lo.sign_changes) + ", " + std::to_string(at_hi.sign_changes) + ")");

    double lo = e_lo, hi = e_hi;
    for (int it = 0; it < 400; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (hi - lo <= 1e-12 * std::max(1.0, std::abs(mid)) || mid <= lo || mid >= hi) break;
        if (integrate(v, h, mid).sign_changes > target_nodes)
            hi = mid;
        else
            lo = mid;
    }

    // Final secant step on psi_{N+1}(E) inside the bracket.
    const Sweep s_lo = integrate(v, h, lo);
    const Sweep s_hi = integrate(v, h, hi);
    double energy = 0.5 * (lo + hi);
    const double a = s_lo.last / std::max(s_lo.peak, 1e-300);
    const double b = s_hi.last / std::max(s_hi.peak, 1e-300);
    if (a != b && std::isfinite(a) && std::isfinite(b)) {
        const double guess = lo - a * (hi - lo) / (b - a);
        if (guess >= lo && guess <= hi) energy = guess;
    }

    const Sweep fin = integrate(v, h, energy);
    ShootResult r;
    r.energy = energy;
    r.boundary_mismatch = fin.last / std::max(fin.peak, 1e-300);
    r.nodes = fin.interior_changes;
    return r;
}

} // namespace numerov::oracle
