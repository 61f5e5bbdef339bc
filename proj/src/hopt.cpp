#include "numerov/hopt.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>

#include <boost/math/tools/minima.hpp>

#include "numerov/accel.hpp"
#include "numerov/errors.hpp"
#include "numerov/reference.hpp"

namespace numerov {

namespace {

constexpr int kScanPoints = 16;

} // namespace

HOptResult optimize_h(std::int64_t N, const StateLabel& state, double Z, double mu, double h_lo, double h_hi,
                      double tol)
{
    if (!(h_lo > 0.0 && h_lo < h_hi)) throw DomainError("optimize_h: need 0 < h_lo < h_hi");
    if (!(tol > 0.0)) throw DomainError("optimize_h: tol must be positive");

    HOptResult res;
    auto energy = [&](double h) {
        ++res.evaluations;
        return screened_energy(N, h, state, Z, mu, ScreeningForm::Softened);
    };

    std::array<double, kScanPoints> hs{}, es{};
    const double ratio = std::log(h_hi / h_lo) / (kScanPoints - 1);
    for (int j = 0; j < kScanPoints; ++j) {
        hs[j] = j == kScanPoints - 1 ? h_hi : h_lo * std::exp(ratio * j);
        es[j] = energy(hs[j]);
    }
    const auto jmin = static_cast<int>(std::min_element(es.begin(), es.end()) - es.begin());
    if (jmin == 0 || jmin == kScanPoints - 1)
        throw NoMinimumInBracket("optimize_h: energy is monotone over [" + std::to_string(h_lo) + ", " +
                                 std::to_string(h_hi) + "]");
    for (int j = 1; j < kScanPoints; ++j) {
        const bool descending = j <= jmin;
        if (descending ? !(es[j] < es[j - 1]) : !(es[j] > es[j - 1])) res.unimodal = false;
    }

    res.bracket = {hs[jmin - 1], hs[jmin + 1]};
    // Brent stops when the bracket is within ~4 * 2^(1-bits) relative.
    const int bits = std::clamp(static_cast<int>(std::ceil(3.0 - std::log2(tol))), 8, 26);
    std::uintmax_t max_iter = 200;
    const auto [h_star, e_star] =
        boost::math::tools::brent_find_minima(energy, res.bracket.first, res.bracket.second, bits, max_iter);
    res.h_star = h_star;
    res.energy_star = e_star;
    // Brent may settle on a point marginally worse than the best scan sample
    // when the minimum is flatter than solver noise.
    if (es[jmin] < res.energy_star) {
        res.h_star = hs[jmin];
        res.energy_star = es[jmin];
    }
    return res;
}

HOptResult optimize_h(std::int64_t N, const StateLabel& state, double Z, double mu, double tol)
{
    const double ref = reference_h(N, state, Z);
    double lo = 0.5 * ref, hi = 2.0 * ref;
    for (int attempt = 0;; ++attempt) {
        try {
            return optimize_h(N, state, Z, mu, lo, hi, tol);
        } catch (const NoMinimumInBracket&) {
            if (attempt == 3) throw;
            // Probe which end is lower and slide the window that way.
            const double e_lo = screened_energy(N, lo, state, Z, mu, ScreeningForm::Softened);
            const double e_hi = screened_energy(N, hi, state, Z, mu, ScreeningForm::Softened);
            if (e_lo < e_hi)
                lo *= 0.25;
            else
                hi *= 4.0;
        }
    }
}

double reference_h(std::int64_t N, const StateLabel& state, double Z)
{
    if (N < 3) throw DomainError("reference_h: N must be >= 3");
    if (!(Z > 0.0)) throw DomainError("reference_h: Z must be positive");
    if (const auto col = reference::column_of(state.n, state.l)) {
        std::size_t best = 0;
        double best_dist = INFINITY;
        for (std::size_t r = 0; r < reference::kReferenceN.size(); ++r) {
            const double d = std::abs(std::log(static_cast<double>(reference::kReferenceN[r]) / N));
            if (d < best_dist) {
                best_dist = d;
                best = r;
            }
        }
        return reference::kGridSize[best][*col] * static_cast<double>(reference::kReferenceN[best]) / N / Z;
    }
    const double lnN = std::log(static_cast<double>(N));
    return std::pow(state.n, 1.5) * (1.08 * lnN + 1.67) / (Z * static_cast<double>(N));
}

double scaled_h(double h_unit, double Z)
{
    if (!(h_unit > 0.0)) throw DomainError("scaled_h: h must be positive");
    if (!(Z >= 1.0)) throw DomainError("scaled_h: Z must be >= 1");
    return h_unit / Z;
}

// --- cache -----------------------------------------------------------------

namespace {

constexpr const char* kCacheHeader = "# numerov grid-size cache schema=1";
constexpr const char* kCacheColumns = "N,n,l,Z,mu,h_star,energy_star";

bool same(double a, double b)
{
    return std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(a));
}

} // namespace

GridSizeCache GridSizeCache::load(const std::filesystem::path& path)
{
    GridSizeCache cache;
    std::ifstream in(path);
    if (!in) return cache;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#' || line.rfind("N,", 0) == 0) continue;
        std::istringstream ss(line);
        GridSizeEntry e;
        char c1, c2, c3, c4, c5, c6;
        if (!(ss >> e.N >> c1 >> e.n >> c2 >> e.l >> c3 >> e.Z >> c4 >> e.mu >> c5 >> e.h_star >> c6 >> e.energy_star))
            throw DomainError("grid-size cache: malformed line '" + line + "' in " + path.string());
        cache.insert(e);
    }
    return cache;
}

void GridSizeCache::save(const std::filesystem::path& path) const
{
    std::ofstream out(path);
    if (!out) throw DomainError("grid-size cache: cannot write " + path.string());
    out << kCacheHeader << '\n' << kCacheColumns << '\n' << std::setprecision(17);
    for (const auto& e : entries_)
        out << e.N << ',' << e.n << ',' << e.l << ',' << e.Z << ',' << e.mu << ',' << e.h_star << ','
            << e.energy_star << '\n';
}

std::optional<GridSizeEntry> GridSizeCache::find(std::int64_t N, int n, int l, double Z, double mu) const
{
    for (const auto& e : entries_)
        if (e.N == N && e.n == n && e.l == l && same(e.Z, Z) && same(e.mu, mu)) return e;
    return std::nullopt;
}

void GridSizeCache::insert(const GridSizeEntry& entry)
{
    for (auto& e : entries_) {
        if (e.N == entry.N && e.n == entry.n && e.l == entry.l && same(e.Z, entry.Z) && same(e.mu, entry.mu)) {
            e = entry;
            return;
        }
    }
    entries_.push_back(entry);
}

std::optional<std::filesystem::path> GridSizeCache::default_path()
{
    if (const char* p = std::getenv("NUMEROV_CACHE"); p && *p) return std::filesystem::path(p);
    return std::nullopt;
}

} // namespace numerov
