#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "numerov/hopt.hpp"
#include "numerov/model.hpp"

namespace numerov::cli {

/// Bad flag, config line or parameter combination; maps to exit status 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using KeyValues = std::map<std::string, std::string, std::less<>>;

/// Keys accepted both as --key flags and as `key = value` config lines.
const std::vector<std::string>& known_keys();

/// Plain `key = value` lines; `#` starts a comment, blank lines are skipped.
KeyValues parse_config_text(std::string_view text);
KeyValues read_config_file(const std::filesystem::path& path);

/// Values in `flags` win over values in `file`.
KeyValues merge(const KeyValues& file, const KeyValues& flags);

struct RunConfig {
    std::optional<std::int64_t> N;
    std::optional<double> h;
    double Z = 1.0;
    int n = 1;
    int l = 0;
    std::optional<double> mu;
    std::optional<double> nu;
    ScreeningVariant variant = ScreeningVariant::Exp;
    std::optional<ScreeningForm> form;
    bool box = false;

    std::optional<std::int64_t> N1;
    std::optional<std::int64_t> N2;
    std::optional<double> h1;
    std::optional<double> h2;
    std::optional<double> seed_h1;
    std::optional<double> seed_h2;
    int max_iter = 25;

    std::optional<double> h_lo;
    std::optional<double> h_hi;
    double tol = kDefaultHTol;

    int table_id = 0;
    std::vector<std::int64_t> Ns;
    std::vector<int> states;
    std::vector<int> iters;
    std::vector<double> Zs;

    std::optional<std::filesystem::path> out;
    unsigned jobs = 1;

    StateLabel state() const { return StateLabel(n, l); }

    /// Screening value from --mu, or from --nu through the chosen variant on
    /// a grid of N points; 0 when neither is given.
    double screening_mu(std::int64_t grid_points) const;
};

/// Converts and range-checks every value; throws UsageError.
RunConfig make_run_config(const KeyValues& values);

} // namespace numerov::cli
