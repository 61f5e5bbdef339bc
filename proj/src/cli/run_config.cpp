#include "numerov/cli/run_config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <thread>

#include "numerov/errors.hpp"

namespace numerov::cli {

namespace {

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

template <typename T>
T parse_number(std::string_view key, std::string_view text)
{
    T value{};
    const char* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end || text.empty())
        throw UsageError("invalid value '" + std::string(text) + "' for " + std::string(key));
    return value;
}

template <typename T>
std::vector<T> parse_list(std::string_view key, std::string_view text)
{
    std::vector<T> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto comma = text.find(',', pos);
        const auto item = trim(text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
        out.push_back(parse_number<T>(key, item));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

bool parse_bool(std::string_view key, std::string_view text)
{
    if (text == "1" || text == "true" || text == "yes" || text == "on") return true;
    if (text == "0" || text == "false" || text == "no" || text == "off") return false;
    throw UsageError("invalid boolean '" + std::string(text) + "' for " + std::string(key));
}

const std::string* lookup(const KeyValues& kv, std::string_view key)
{
    const auto it = kv.find(key);
    return it == kv.end() ? nullptr : &it->second;
}

void require(bool ok, const std::string& message)
{
    if (!ok) throw UsageError(message);
}

} // namespace

const std::vector<std::string>& known_keys()
{
    static const std::vector<std::string> keys{
        "N",  "h",       "Z",       "n",    "l",    "mu",       "nu",    "variant", "form", "box",
        "N1", "N2",      "h1",      "h2",   "seed-h1", "seed-h2", "max-iter", "h-lo", "h-hi", "tol",
        "id", "Ns",      "states",  "iters", "Zs",  "out",      "jobs",
    };
    return keys;
}

KeyValues parse_config_text(std::string_view text)
{
    KeyValues kv;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw UsageError("config line " + std::to_string(line_no) + ": expected key = value");
        const std::string key(trim(line.substr(0, eq)));
        const auto& keys = known_keys();
        if (std::find(keys.begin(), keys.end(), key) == keys.end())
            throw UsageError("config line " + std::to_string(line_no) + ": unknown key '" + key + "'");
        kv[key] = std::string(trim(line.substr(eq + 1)));
    }
    return kv;
}

KeyValues read_config_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read config file " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str());
}

KeyValues merge(const KeyValues& file, const KeyValues& flags)
{
    KeyValues out = file;
    for (const auto& [k, v] : flags) out[k] = v;
    return out;
}

double RunConfig::screening_mu(std::int64_t grid_points) const
{
    if (mu) return *mu;
    if (nu) return mu_value(variant, grid_points, l, *nu);
    return 0.0;
}

RunConfig make_run_config(const KeyValues& kv)
{
    RunConfig c;
    if (const auto hw = std::thread::hardware_concurrency(); hw > 0) c.jobs = hw;

    try {
        if (auto v = lookup(kv, "N")) c.N = parse_number<std::int64_t>("N", *v);
        if (auto v = lookup(kv, "h")) c.h = parse_number<double>("h", *v);
        if (auto v = lookup(kv, "Z")) c.Z = parse_number<double>("Z", *v);
        if (auto v = lookup(kv, "n")) c.n = parse_number<int>("n", *v);
        if (auto v = lookup(kv, "l")) c.l = parse_number<int>("l", *v);
        if (auto v = lookup(kv, "mu")) c.mu = parse_number<double>("mu", *v);
        if (auto v = lookup(kv, "nu")) c.nu = parse_number<double>("nu", *v);
        if (auto v = lookup(kv, "variant")) c.variant = parse_variant(*v);
        if (auto v = lookup(kv, "form")) c.form = parse_form(*v);
        if (auto v = lookup(kv, "box")) c.box = parse_bool("box", *v);
        if (auto v = lookup(kv, "N1")) c.N1 = parse_number<std::int64_t>("N1", *v);
        if (auto v = lookup(kv, "N2")) c.N2 = parse_number<std::int64_t>("N2", *v);
        if (auto v = lookup(kv, "h1")) c.h1 = parse_number<double>("h1", *v);
        if (auto v = lookup(kv, "h2")) c.h2 = parse_number<double>("h2", *v);
        if (auto v = lookup(kv, "seed-h1")) c.seed_h1 = parse_number<double>("seed-h1", *v);
        if (auto v = lookup(kv, "seed-h2")) c.seed_h2 = parse_number<double>("seed-h2", *v);
        if (auto v = lookup(kv, "max-iter")) c.max_iter = parse_number<int>("max-iter", *v);
        if (auto v = lookup(kv, "h-lo")) c.h_lo = parse_number<double>("h-lo", *v);
        if (auto v = lookup(kv, "h-hi")) c.h_hi = parse_number<double>("h-hi", *v);
        if (auto v = lookup(kv, "tol")) c.tol = parse_number<double>("tol", *v);
        if (auto v = lookup(kv, "id")) c.table_id = parse_number<int>("id", *v);
        if (auto v = lookup(kv, "Ns")) c.Ns = parse_list<std::int64_t>("Ns", *v);
        if (auto v = lookup(kv, "states")) c.states = parse_list<int>("states", *v);
        if (auto v = lookup(kv, "iters")) c.iters = parse_list<int>("iters", *v);
        if (auto v = lookup(kv, "Zs")) c.Zs = parse_list<double>("Zs", *v);
        if (auto v = lookup(kv, "out")) c.out = std::filesystem::path(*v);
        if (auto v = lookup(kv, "jobs")) c.jobs = parse_number<unsigned>("jobs", *v);
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }

    require(!c.N || *c.N >= 3, "N must be >= 3");
    require(!c.h || (*c.h > 0.0 && std::isfinite(*c.h)), "h must be positive");
    require(c.Z > 0.0 && std::isfinite(c.Z), "Z must be positive");
    require(c.n >= 1, "n must be >= 1");
    require(c.l >= 0 && c.l < c.n, "l must satisfy 0 <= l < n");
    require(!(c.mu && c.nu), "give either mu or nu, not both");
    require(!c.mu || (*c.mu >= 0.0 && *c.mu < 1.0), "mu must lie in [0, 1)");
    require(!c.nu || *c.nu >= 1.0, "nu must be >= 1");
    require(!c.N1 || *c.N1 >= 3, "N1 must be >= 3");
    require(!c.N2 || *c.N2 >= 3, "N2 must be >= 3");
    require(!c.h1 || *c.h1 > 0.0, "h1 must be positive");
    require(!c.h2 || *c.h2 > 0.0, "h2 must be positive");
    require(!c.seed_h1 || (*c.seed_h1 > 0.0 && *c.seed_h1 < 1.0), "seed-h1 must lie in (0, 1)");
    require(!c.seed_h2 || (*c.seed_h2 > 0.0 && *c.seed_h2 < 1.0), "seed-h2 must lie in (0, 1)");
    require(c.max_iter >= 1, "max-iter must be >= 1");
    require(!c.h_lo == !c.h_hi, "h-lo and h-hi go together");
    require(!c.h_lo || (*c.h_lo > 0.0 && *c.h_lo < *c.h_hi), "h-lo must satisfy 0 < h-lo < h-hi");
    require(c.tol > 0.0 && c.tol < 1.0, "tol must lie in (0, 1)");
    require(c.jobs >= 1, "jobs must be >= 1");
    for (auto N : c.Ns) require(N >= 3, "Ns entries must be >= 3");
    for (auto n : c.states) require(n >= 1 && n > c.l, "states entries must exceed l");
    for (auto i : c.iters) require(i >= 0, "iters entries must be >= 0");
    for (auto z : c.Zs) require(z > 0.0 && std::isfinite(z), "Zs entries must be positive");
    return c;
}

} // namespace numerov::cli
