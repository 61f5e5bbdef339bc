#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <utility>
#include <vector>

#include "numerov/model.hpp"

namespace numerov {

inline constexpr double kDefaultHTol = 1e-5;

struct HOptResult {
    double h_star = 0.0;
    double energy_star = 0.0;           ///< signed, a.u.
    int evaluations = 0;
    std::pair<double, double> bracket;  ///< three-point bracket from the coarse scan
    bool unimodal = true;               ///< coarse scan decreased then increased
};

/// Minimizes the signed energy of `state` over the grid size h at fixed N.
/// A 16-point log-spaced scan of [h_lo, h_hi] brackets the minimum, then
/// Brent's method refines it until the bracket is below tol * h_star.
/// Throws NoMinimumInBracket if the scan minimum sits on an end point.
HOptResult optimize_h(std::int64_t N, const StateLabel& state, double Z, double mu, double h_lo, double h_hi,
                      double tol = kDefaultHTol);

/// Same, starting from [0.5, 2] x reference_h and widening up to three times
/// toward the side where the scan ran out.
HOptResult optimize_h(std::int64_t N, const StateLabel& state, double Z, double mu = 0.0, double tol = kDefaultHTol);

/// Starting guess for the optimal h: the tabulated value nearest in N
/// (rescaled by N_row / N and 1/Z), otherwise n^1.5 (1.08 ln N + 1.67) / (Z N).
double reference_h(std::int64_t N, const StateLabel& state, double Z);

/// Iso-electronic rule h(Z) = h(1) / Z.
double scaled_h(double h_unit, double Z);

struct GridSizeEntry {
    std::int64_t N = 0;
    int n = 1;
    int l = 0;
    double Z = 1.0;
    double mu = 0.0;
    double h_star = 0.0;
    double energy_star = 0.0;
};

/// CSV-backed store of optimized grid sizes (N, n, l, Z, mu, h_star, energy_star).
class GridSizeCache {
public:
    GridSizeCache() = default;

    /// Missing file yields an empty cache.
    static GridSizeCache load(const std::filesystem::path& path);
    void save(const std::filesystem::path& path) const;

    std::optional<GridSizeEntry> find(std::int64_t N, int n, int l, double Z, double mu) const;
    void insert(const GridSizeEntry& entry);
    const std::vector<GridSizeEntry>& entries() const { return entries_; }

    /// Location from $NUMEROV_CACHE, if set.
    static std::optional<std::filesystem::path> default_path();

private:
    std::vector<GridSizeEntry> entries_;
};

} // namespace numerov
