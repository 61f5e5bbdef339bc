#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "numerov/model.hpp"

namespace numerov {

/// Uniform radial grid r_i = i h, i = 1..N. The Dirichlet zeros sit on the
/// ghost nodes r_0 = 0 and r_{N+1}; the reported box radius is N h.
class RadialGrid {
public:
    RadialGrid(std::size_t N, double h);

    std::size_t size() const { return n_; }
    double spacing() const { return h_; }
    /// i is 1-based, 1 <= i <= N.
    double node(std::size_t i) const { return static_cast<double>(i) * h_; }
    double radius() const { return static_cast<double>(n_) * h_; }
    std::vector<double> nodes() const;

private:
    std::size_t n_;
    double h_;
};

/// The Numerov pencil (M, B) with
///   M = -1/2 A + B diag(V'),  A = tridiag(1, -2, 1) / h^2,  B = tridiag(1, 10, 1) / 12
/// in compact storage. Row i of M reads
///   m_sub[i-1] psi_{i-1} + m_diag[i] psi_i + m_super[i] psi_{i+1}
/// with m_sub[k] = -1/(2h^2) + V'_k/12 and m_super[k] = -1/(2h^2) + V'_{k+1}/12.
///
/// The spacing and the sampled potential are kept so that quadratic forms can
/// be evaluated in difference form without the O(1/h^2) cancellation.
struct TridiagonalPencil {
    double h = 0.0;
    std::vector<double> potential;

    std::vector<double> m_diag;
    std::vector<double> m_sub;
    std::vector<double> m_super;
    std::vector<double> b_diag;
    std::vector<double> b_off;

    std::size_t size() const { return m_diag.size(); }
};

inline constexpr double kNumerovBDiag = 10.0 / 12.0;
inline constexpr double kNumerovBOff = 1.0 / 12.0;

RadialGrid build_grid(std::size_t N, double h);

/// Pencil from explicit potential samples V'_1..V'_N (any N >= 1).
TridiagonalPencil assemble_pencil(double h, std::span<const double> potential);

TridiagonalPencil assemble_pencil(const RadialGrid& grid, const PotentialSpec& pot);

} // namespace numerov
