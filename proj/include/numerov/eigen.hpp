#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "numerov/assembly.hpp"
#include "numerov/model.hpp"

namespace numerov {

inline constexpr double kDefaultEigenTol = 1e-13;

struct EigenSolution {
    double energy = 0.0;        ///< signed, a.u.
    std::vector<double> psi;    ///< radial samples at r_1..r_N, max |psi| = 1 and positive
    int nodes = 0;              ///< interior sign changes
    double residual = 0.0;      ///< ||M psi - E B psi||_inf / ||psi||_inf
};

struct SpectrumBounds {
    double lower = 0.0;
    double upper = 0.0;
};

/// Bracket for the whole generalized spectrum: Gershgorin discs of M divided
/// by the extreme eigenvalues of B (8/12 and 12/12), widened until the
/// Sturm count confirms it.
SpectrumBounds spectrum_bounds(const TridiagonalPencil& pencil);

/// Number of generalized eigenvalues strictly below lambda.
/// Throws SimilarityViolation when some (m_sub - lambda b_off)(m_super - lambda b_off) <= 0.
std::size_t count_below(const TridiagonalPencil& pencil, double lambda);

/// k-th smallest generalized eigenvalue (1-based): Sturm bisection, then
/// two-sided Rayleigh quotient refinement.
double kth_eigenvalue(const TridiagonalPencil& pencil, std::size_t k, double tol = kDefaultEigenTol);

/// Eigenvector at a known eigenvalue from a twisted factorization of
/// M - E B (one inverse-iteration step with the best unit start vector).
EigenSolution eigenvector(const TridiagonalPencil& pencil, double energy);

/// Strict sign changes, ignoring entries with magnitude <= 1e-8.
int node_count(std::span<const double> psi);

/// ||M psi - E B psi||_inf / ||psi||_inf evaluated in difference form.
double pencil_residual(const TridiagonalPencil& pencil, double energy, std::span<const double> psi);

/// Bound state (n, l) of a hydrogen-like pencil. Uses kth_eigenvalue with
/// k = n - l; if the pencil violates the similarity condition it falls back
/// to Rayleigh iteration from -Z^2/(2n^2) and accepts only a vector with
/// n - l - 1 nodes.
EigenSolution solve_state(const TridiagonalPencil& pencil, const StateLabel& state, double Z);

/// Energy-only variant of solve_state; skips the eigenvector unless the
/// fallback path needs it for node verification.
double state_energy(const TridiagonalPencil& pencil, const StateLabel& state, double Z);

} // namespace numerov
