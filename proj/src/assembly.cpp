#include "numerov/assembly.hpp"

#include <cmath>

#include "numerov/errors.hpp"

namespace numerov {

RadialGrid::RadialGrid(std::size_t N, double h) : n_(N), h_(h)
{
    if (N < 3) throw DomainError("grid: N must be >= 3");
    if (!(h > 0.0) || !std::isfinite(h)) throw DomainError("grid: h must be positive");
}

std::vector<double> RadialGrid::nodes() const
{
    std::vector<double> r(n_);
    for (std::size_t i = 0; i < n_; ++i) r[i] = node(i + 1);
    return r;
}

RadialGrid build_grid(std::size_t N, double h)
{
    return RadialGrid(N, h);
}

TridiagonalPencil assemble_pencil(double h, std::span<const double> potential)
{
    if (!(h > 0.0) || !std::isfinite(h)) throw DomainError("pencil: h must be positive");
    if (potential.empty()) throw DomainError("pencil: need at least one interior node");

    const std::size_t n = potential.size();
    const double kinetic_off = -0.5 / (h * h);
    const double kinetic_diag = 1.0 / (h * h);

    TridiagonalPencil p;
    p.h = h;
    p.potential.assign(potential.begin(), potential.end());
    p.m_diag.resize(n);
    p.m_sub.resize(n - 1);
    p.m_super.resize(n - 1);
    p.b_diag.assign(n, kNumerovBDiag);
    p.b_off.assign(n - 1, kNumerovBOff);

    for (std::size_t i = 0; i < n; ++i) p.m_diag[i] = kinetic_diag + 10.0 * potential[i] / 12.0;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        p.m_sub[k] = kinetic_off + potential[k] / 12.0;
        p.m_super[k] = kinetic_off + potential[k + 1] / 12.0;
    }
    return p;
}

TridiagonalPencil assemble_pencil(const RadialGrid& grid, const PotentialSpec& pot)
{
    pot.validate();
    std::vector<double> v(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) v[i] = effective_potential(grid.node(i + 1), pot);
    return assemble_pencil(grid.spacing(), v);
}

} // namespace numerov
