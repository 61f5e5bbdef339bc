#include "numerov/cli/commands.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <thread>

#include <CLI11.hpp>

#include "numerov/accel.hpp"
#include "numerov/assembly.hpp"
#include "numerov/cli/csv.hpp"
#include "numerov/eigen.hpp"
#include "numerov/errors.hpp"
#include "numerov/hopt.hpp"
#include "numerov/oracle.hpp"
#include "numerov/reference.hpp"

namespace numerov::cli {

namespace {

using reference::kReferenceN;

template <typename F>
auto stage(std::string_view name, F&& f)
{
    try {
        return f();
    } catch (const SolverError& e) {
        throw SolverError(std::string(name) + ": " + e.what());
    }
}

// Destination for a command's CSV: the --out file (renamed into place on
// success) or the caller's stream.
class Sink {
public:
    Sink(const RunConfig& cfg, std::ostream& fallback)
    {
        if (cfg.out) file_ = std::make_unique<AtomicFile>(*cfg.out);
        os_ = file_ ? &file_->stream() : &fallback;
    }
    std::ostream& stream() { return *os_; }
    bool to_file() const { return file_ != nullptr; }
    void commit()
    {
        if (file_) file_->commit();
    }

private:
    std::unique_ptr<AtomicFile> file_;
    std::ostream* os_ = nullptr;
};

// Grid sizes: published table first, then the on-disk cache, then a fresh
// optimization (which is added to the cache). States with l > 0 take the
// tabulated ns size of the same shell: their energy keeps falling as h
// grows, so there is no variational minimum to find.
class GridSizes {
public:
    explicit GridSizes(double tol) : tol_(tol), path_(GridSizeCache::default_path())
    {
        if (path_) cache_ = GridSizeCache::load(*path_);
    }

    double resolve(std::int64_t N, const StateLabel& state, double Z, double mu = 0.0)
    {
        if (mu == 0.0) {
            if (auto h = reference::grid_size(N, state.n)) return *h / Z;
        }
        {
            std::lock_guard lock(mutex_);
            if (auto e = cache_.find(N, state.n, state.l, Z, mu)) return e->h_star;
        }
        const HOptResult r = stage("grid-size optimization", [&] { return optimize_h(N, state, Z, mu, tol_); });
        record(N, state, Z, mu, r);
        return r.h_star;
    }

    void record(std::int64_t N, const StateLabel& state, double Z, double mu, const HOptResult& r)
    {
        std::lock_guard lock(mutex_);
        cache_.insert({N, state.n, state.l, Z, mu, r.h_star, r.energy_star});
        dirty_ = true;
    }

    void persist()
    {
        std::lock_guard lock(mutex_);
        if (path_ && dirty_) cache_.save(*path_);
        dirty_ = false;
    }

private:
    double tol_;
    std::optional<std::filesystem::path> path_;
    GridSizeCache cache_;
    std::mutex mutex_;
    bool dirty_ = false;
};

// Runs task(0..count-1) on up to `jobs` threads. Every task runs; the
// lowest-index failure is rethrown so the reported error does not depend on
// scheduling.
void run_pool(unsigned jobs, std::size_t count, const std::function<void(std::size_t)>& task)
{
    std::vector<std::exception_ptr> errors(count);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                task(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const unsigned threads = static_cast<unsigned>(std::min<std::size_t>(std::max(1u, jobs), count));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

std::string fmt_state(const StateLabel& s) { return state_name(s.n, s.l); }

std::int64_t require_N(const std::optional<std::int64_t>& N, std::string_view what)
{
    if (!N) throw UsageError(std::string(what) + " requires --N");
    return *N;
}

std::vector<std::int64_t> ladder_or(const RunConfig& cfg, std::vector<std::int64_t> fallback)
{
    return cfg.Ns.empty() ? fallback : cfg.Ns;
}

std::vector<StateLabel> table_states(const RunConfig& cfg)
{
    std::vector<StateLabel> out;
    if (cfg.states.empty()) {
        for (int n : reference::kReferenceStates) out.emplace_back(n, 0);
    } else {
        for (int n : cfg.states) out.emplace_back(n, cfg.l);
    }
    return out;
}

// Coarse partner of N in the acceleration tables: the previous reference
// size, or N/2 below the ladder.
std::int64_t coarse_partner(std::int64_t N)
{
    std::int64_t prev = 0;
    for (auto r : kReferenceN)
        if (r < N) prev = r;
    return prev > 0 ? prev : std::max<std::int64_t>(100, N / 2);
}

} // namespace

std::string state_name(int n, int l)
{
    static constexpr std::string_view letters = "spdfghiklmnoqrtuv";
    const char letter = l < static_cast<int>(letters.size()) ? letters[static_cast<std::size_t>(l)] : '?';
    return std::to_string(n) + letter;
}

int cmd_solve(const RunConfig& cfg, std::ostream& out)
{
    const std::int64_t N = require_N(cfg.N, "solve");
    const StateLabel st = cfg.state();

    TridiagonalPencil pencil;
    double h = 0.0, mu = 0.0, reference_energy = 0.0, Z = cfg.Z;
    std::string form;
    if (cfg.box) {
        if (!cfg.h) throw UsageError("solve --box requires --h");
        h = *cfg.h;
        const auto k = static_cast<std::size_t>(st.index());
        if (k > static_cast<std::size_t>(N)) throw UsageError("solve --box: state index exceeds N");
        pencil = assemble_pencil(h, std::vector<double>(static_cast<std::size_t>(N), 0.0));
        reference_energy = oracle::box_pencil_eigenvalue(static_cast<std::size_t>(N), h, k);
        Z = 0.0;
        form = "box";
    } else {
        mu = cfg.screening_mu(N);
        const ScreeningForm f = cfg.form.value_or(ScreeningForm::Softened);
        GridSizes sizes(cfg.tol);
        h = cfg.h ? *cfg.h : sizes.resolve(N, st, cfg.Z, mu);
        sizes.persist();
        const PotentialSpec pot{cfg.Z, st.l, mu, f};
        pot.validate();
        pencil = assemble_pencil(build_grid(static_cast<std::size_t>(N), h), pot);
        reference_energy = oracle::analytic_energy(cfg.Z, st.n);
        form = std::string(to_string(f));
    }

    // Box states have no Coulomb node count to check, so take the k-th
    // eigenpair directly.
    const EigenSolution sol = stage("eigen", [&] {
        if (cfg.box) return eigenvector(pencil, kth_eigenvalue(pencil, static_cast<std::size_t>(st.index())));
        return solve_state(pencil, st, cfg.Z);
    });

    Sink sink(cfg, out);
    CsvWriter csv(sink.stream(), "solve",
                  {"N", "h", "R", "Z", "n", "l", "mu", "form", "energy", "abs_energy", "reference", "defect", "nodes",
                   "residual"});
    csv.row({format_number(N), format_number(h), format_number(static_cast<double>(N) * h), format_number(Z),
             format_number(st.n), format_number(st.l), format_number(mu), form, format_number(sol.energy),
             format_number(std::abs(sol.energy)), format_number(reference_energy),
             format_number(sol.energy - reference_energy), format_number(sol.nodes), format_number(sol.residual)});
    sink.commit();
    if (sink.to_file())
        out << "solve " << fmt_state(st) << ": E = " << format_number(sol.energy) << ", nodes = " << sol.nodes
            << ", residual = " << format_number(sol.residual) << '\n';
    return kExitOk;
}

int cmd_optimize_h(const RunConfig& cfg, std::ostream& out)
{
    const std::int64_t N = require_N(cfg.N, "optimize-h");
    const StateLabel st = cfg.state();
    const double mu = cfg.screening_mu(N);

    const HOptResult r = stage("optimize-h", [&] {
        if (cfg.h_lo) return optimize_h(N, st, cfg.Z, mu, *cfg.h_lo, *cfg.h_hi, cfg.tol);
        return optimize_h(N, st, cfg.Z, mu, cfg.tol);
    });
    GridSizes sizes(cfg.tol);
    sizes.record(N, st, cfg.Z, mu, r);
    sizes.persist();

    const double exact = oracle::analytic_energy(cfg.Z, st.n);
    Sink sink(cfg, out);
    CsvWriter csv(sink.stream(), "optimize-h",
                  {"N", "n", "l", "Z", "mu", "h_star", "energy", "abs_energy", "defect", "evaluations", "unimodal",
                   "bracket_lo", "bracket_hi"});
    csv.row({format_number(N), format_number(st.n), format_number(st.l), format_number(cfg.Z), format_number(mu),
             format_number(r.h_star), format_number(r.energy_star), format_number(std::abs(r.energy_star)),
             format_number(r.energy_star - exact), format_number(r.evaluations), r.unimodal ? "1" : "0",
             format_number(r.bracket.first), format_number(r.bracket.second)});
    sink.commit();
    if (sink.to_file())
        out << "optimize-h " << fmt_state(st) << " N=" << N << ": h* = " << format_number(r.h_star)
            << ", E = " << format_number(r.energy_star) << '\n';
    return kExitOk;
}

int cmd_accelerate(const RunConfig& cfg, std::ostream& out)
{
    if (!cfg.N1 || !cfg.N2) throw UsageError("accelerate requires --N1 and --N2");
    const StateLabel st = cfg.state();
    const StateLabel ground(1, 0);

    AccelConfig ac;
    ac.state = st;
    ac.Z = cfg.Z;
    ac.N1 = *cfg.N1;
    ac.N2 = *cfg.N2;
    ac.form = cfg.form;
    ac.max_iter = cfg.max_iter;
    ac.h1 = cfg.h1.value_or(0.5);  // placeholders so validate() checks the grid sizes first
    ac.h2 = cfg.h2.value_or(0.5);
    ac.validate();

    GridSizes sizes(cfg.tol);
    ac.h1 = cfg.h1 ? *cfg.h1 : sizes.resolve(ac.N1, st, cfg.Z);
    ac.h2 = cfg.h2 ? *cfg.h2 : sizes.resolve(ac.N2, st, cfg.Z);
    ac.seed_h1 = cfg.seed_h1 ? *cfg.seed_h1 : sizes.resolve(ac.N1, ground, cfg.Z);
    ac.seed_h2 = cfg.seed_h2 ? *cfg.seed_h2 : sizes.resolve(ac.N2, ground, cfg.Z);
    sizes.persist();
    ac.validate();

    // Rows go straight to the destination so a failure leaves the trace up
    // to the last solved iteration.
    std::ofstream file;
    if (cfg.out) {
        file.open(*cfg.out, std::ios::out | std::ios::trunc);
        if (!file) throw UsageError("cannot write " + cfg.out->string());
    }
    std::ostream& os = cfg.out ? file : out;
    const double exact = oracle::analytic_energy(cfg.Z, st.n);
    CsvWriter csv(os, "accelerate",
                  {"i", "nu_n1", "nu_n2", "mu_n1", "mu_n2", "energy_n1", "energy_n2", "defect_n1", "defect_n2",
                   "clamped"},
                  {"state=" + fmt_state(st) + " Z=" + format_number(cfg.Z), "N1=" + format_number(ac.N1) +
                   " h1=" + format_number(ac.h1) + " seed_h1=" + format_number(*ac.seed_h1),
                   "N2=" + format_number(ac.N2) + " h2=" + format_number(ac.h2) +
                   " seed_h2=" + format_number(*ac.seed_h2)});

    const AccelTrace trace = stage("accelerate", [&] {
        return accelerate(ac, [&](const AccelRecord& r) {
            csv.row({format_number(r.i), format_number(r.nu_n1), format_number(r.nu_n2), format_number(r.mu_n1),
                     format_number(r.mu_n2), format_number(r.energy_n1), format_number(r.energy_n2),
                     format_number(r.energy_n1 - exact), format_number(r.energy_n2 - exact), r.clamped ? "1" : "0"});
        });
    });

    std::string summary = "final_energy=" + format_number(trace.final_energy) +
                          " abs_energy=" + format_number(std::abs(trace.final_energy)) +
                          " defect=" + format_number(trace.final_energy - exact) +
                          " branch=" + std::string(to_string(trace.branch)) +
                          " iterations=" + format_number(trace.iterations) +
                          " form=" + std::string(to_string(trace.form));
    if (trace.nu2_n2) summary += " nu2_n2=" + format_number(*trace.nu2_n2);
    csv.comment(summary);
    if (cfg.out) out << "accelerate " << fmt_state(st) << ": " << summary << '\n';
    return kExitOk;
}

int cmd_table(const RunConfig& cfg, std::ostream& out)
{
    if (cfg.table_id < 1 || cfg.table_id > 3) throw UsageError("table requires --id 1, 2 or 3");
    const std::vector<StateLabel> states = table_states(cfg);
    const double mu = cfg.mu.value_or(0.0);
    if (cfg.nu) throw UsageError("table takes --mu, not --nu");

    struct Cell {
        double h = 0.0;
        double energy = 0.0;
        int iterations = 0;
    };

    std::vector<std::pair<std::int64_t, std::int64_t>> rows;  // (N1, N) for table 3, (N, N) otherwise
    if (cfg.table_id == 3 && cfg.N1 && cfg.N2) {
        rows.emplace_back(*cfg.N1, *cfg.N2);
    } else {
        for (auto N : ladder_or(cfg, {kReferenceN.begin(), kReferenceN.end()}))
            rows.emplace_back(cfg.table_id == 3 ? coarse_partner(N) : N, N);
    }
    for (const auto& st : states)
        for (const auto& [N1, N] : rows)
            if (st.index() > N1) throw UsageError("table: state " + fmt_state(st) + " does not fit on N=" +
                                                  std::to_string(N1));

    GridSizes sizes(cfg.tol);
    std::vector<Cell> cells(rows.size() * states.size());
    run_pool(cfg.jobs, cells.size(), [&](std::size_t idx) {
        const auto& [N1, N] = rows[idx / states.size()];
        const StateLabel& st = states[idx % states.size()];
        const std::string where = "table " + std::to_string(cfg.table_id) + " cell N=" + std::to_string(N) +
                                  " " + fmt_state(st);
        Cell& c = cells[idx];
        if (cfg.table_id == 3) {
            AccelConfig ac;
            ac.state = st;
            ac.Z = cfg.Z;
            ac.N1 = N1;
            ac.N2 = N;
            ac.form = cfg.form;
            ac.max_iter = cfg.max_iter;
            ac.h1 = sizes.resolve(N1, st, cfg.Z);
            ac.h2 = sizes.resolve(N, st, cfg.Z);
            ac.seed_h1 = sizes.resolve(N1, StateLabel(1, 0), cfg.Z);
            ac.seed_h2 = sizes.resolve(N, StateLabel(1, 0), cfg.Z);
            const AccelTrace t = stage(where, [&] { return accelerate(ac); });
            c = {ac.h2, t.final_energy, t.iterations};
        } else {
            const HOptResult r = stage(where, [&] {
                if (cfg.h_lo) return optimize_h(N, st, cfg.Z, mu, *cfg.h_lo, *cfg.h_hi, cfg.tol);
                return optimize_h(N, st, cfg.Z, mu, cfg.tol);
            });
            sizes.record(N, st, cfg.Z, mu, r);
            c = {r.h_star, r.energy_star, 0};
        }
    });
    sizes.persist();

    std::vector<std::string> columns;
    if (cfg.table_id == 3) {
        columns = {"N1", "N2"};
    } else {
        columns = {"N"};
    }
    for (const auto& st : states) {
        const std::string s = fmt_state(st);
        if (cfg.table_id == 1) {
            columns.insert(columns.end(), {"h_" + s, "defect_" + s});
        } else if (cfg.table_id == 2) {
            columns.insert(columns.end(), {"abs_energy_" + s, "defect_" + s});
        } else {
            columns.insert(columns.end(), {"abs_energy_" + s, "defect_" + s, "iterations_" + s});
        }
    }

    Sink sink(cfg, out);
    CsvWriter csv(sink.stream(), "table", columns,
                  {"id=" + std::to_string(cfg.table_id) + " Z=" + format_number(cfg.Z) + " mu=" + format_number(mu)});
    for (std::size_t r = 0; r < rows.size(); ++r) {
        std::vector<std::string> line;
        if (cfg.table_id == 3) line.push_back(format_number(rows[r].first));
        line.push_back(format_number(rows[r].second));
        for (std::size_t s = 0; s < states.size(); ++s) {
            const Cell& c = cells[r * states.size() + s];
            const double defect = c.energy - oracle::analytic_energy(cfg.Z, states[s].n);
            if (cfg.table_id == 1) line.push_back(format_number(c.h));
            else line.push_back(format_number(std::abs(c.energy)));
            line.push_back(format_number(defect));
            if (cfg.table_id == 3) line.push_back(format_number(c.iterations));
        }
        csv.row(line);
    }
    sink.commit();
    if (sink.to_file())
        out << "table " << cfg.table_id << ": " << rows.size() << " rows x " << states.size() << " states written to "
            << cfg.out->string() << '\n';
    return kExitOk;
}

int cmd_figure1(const RunConfig& cfg, std::ostream& out)
{
    const StateLabel st = cfg.state();
    const std::vector<std::int64_t> Ns = ladder_or(cfg, {500, 1000, 1500, 2000, 2500, 5000});
    std::vector<int> iters = cfg.iters.empty() ? std::vector<int>{2, 3, 4, 5} : cfg.iters;
    std::sort(iters.begin(), iters.end());
    iters.erase(std::unique(iters.begin(), iters.end()), iters.end());
    for (auto N : Ns)
        if (N < 100) throw UsageError("figure1: N values must be >= 100");

    struct Point {
        double h = 0.0;
        std::vector<double> nu, mu, energy;
    };
    GridSizes sizes(cfg.tol);
    std::vector<Point> points(Ns.size());
    run_pool(cfg.jobs, Ns.size(), [&](std::size_t k) {
        const std::int64_t N = Ns[k];
        Point& p = points[k];
        p.h = sizes.resolve(N, st, cfg.Z);
        const double seed = cfg.seed_h1 ? *cfg.seed_h1 : sizes.resolve(N, StateLabel(1, 0), cfg.Z);
        double nu = std::max(1.0, initial_nu(N, st.l, seed));
        std::optional<ScreeningForm> form = cfg.form;
        for (int i = 0; i <= iters.back(); ++i) {
            const double mu = mu_exp(N, st.l, nu);
            if (!form) form = lowering_form(N, p.h, st, cfg.Z, mu);
            const double e = stage("figure1 N=" + std::to_string(N),
                                   [&] { return screened_energy(N, p.h, st, cfg.Z, mu, *form); });
            p.nu.push_back(nu);
            p.mu.push_back(mu);
            p.energy.push_back(e);
            nu = nu_update(nu, N, st.l).nu;
        }
    });
    sizes.persist();

    const double exact = oracle::analytic_energy(cfg.Z, st.n);
    Sink sink(cfg, out);
    CsvWriter csv(sink.stream(), "figure1",
                  {"N_prime", "i", "delta_E_1e6", "N", "h", "nu", "mu", "energy", "abs_energy", "defect"},
                  {"state=" + fmt_state(st) + " Z=" + format_number(cfg.Z) +
                   " delta_E=|E_exact|-|E| N_prime=N/100"});
    for (int i : iters) {
        for (std::size_t k = 0; k < Ns.size(); ++k) {
            const Point& p = points[k];
            const auto ii = static_cast<std::size_t>(i);
            const double e = p.energy[ii];
            const double delta = std::abs(exact) - std::abs(e);
            csv.row({format_number(static_cast<double>(Ns[k]) / 100.0), format_number(i), format_number(delta * 1e6),
                     format_number(Ns[k]), format_number(p.h), format_number(p.nu[ii]), format_number(p.mu[ii]),
                     format_number(e), format_number(std::abs(e)), format_number(e - exact)});
        }
    }
    sink.commit();
    if (sink.to_file())
        out << "figure1 " << fmt_state(st) << ": " << iters.size() << " series x " << Ns.size()
            << " points written to " << cfg.out->string() << '\n';
    return kExitOk;
}

int cmd_zscaling(const RunConfig& cfg, std::ostream& out)
{
    const StateLabel st = cfg.state();
    const std::int64_t N = cfg.N.value_or(1000);
    const std::vector<double> Zs = cfg.Zs.empty() ? std::vector<double>{1.0, 2.0, 3.0} : cfg.Zs;
    const double mu = cfg.mu.value_or(0.0);
    if (cfg.nu) throw UsageError("zscaling takes --mu, not --nu");

    // Slot 0 is Z = 1, the reference for the scaling rule.
    std::vector<double> run_Z{1.0};
    for (double z : Zs)
        if (z != 1.0) run_Z.push_back(z);
    std::vector<HOptResult> results(run_Z.size());
    run_pool(cfg.jobs, run_Z.size(), [&](std::size_t k) {
        results[k] = stage("zscaling Z=" + format_number(run_Z[k]),
                           [&] { return optimize_h(N, st, run_Z[k], mu, cfg.tol); });
    });
    const HOptResult& unit = results[0];

    Sink sink(cfg, out);
    CsvWriter csv(sink.stream(), "zscaling",
                  {"Z", "h_star", "h_predicted", "rel_deviation", "energy", "abs_energy", "abs_energy_over_Z2",
                   "defect"},
                  {"state=" + fmt_state(st) + " N=" + format_number(N) + " mu=" + format_number(mu)});
    for (double z : Zs) {
        const auto it = std::find(run_Z.begin(), run_Z.end(), z);
        const HOptResult& r = results[static_cast<std::size_t>(it - run_Z.begin())];
        const double predicted = scaled_h(unit.h_star, z);
        const double deviation = z == 1.0 ? 0.0 : (r.h_star - predicted) / predicted;
        csv.row({format_number(z), format_number(r.h_star), format_number(predicted), format_number(deviation),
                 format_number(r.energy_star), format_number(std::abs(r.energy_star)),
                 format_number(std::abs(r.energy_star) / (z * z)),
                 format_number(r.energy_star - oracle::analytic_energy(z, st.n))});
    }
    sink.commit();
    if (sink.to_file())
        out << "zscaling " << fmt_state(st) << ": " << Zs.size() << " rows written to " << cfg.out->string() << '\n';
    return kExitOk;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Matrix Numerov radial hydrogen solver", "numerov"};
    app.require_subcommand(1);
    app.set_help_flag("--help", "Print help");  // -h would clash with --h

    KeyValues flags;
    std::string config_path;
    using Handler = int (*)(const RunConfig&, std::ostream&);
    Handler handler = nullptr;
    std::string chosen;

    const std::vector<std::tuple<std::string, std::string, Handler>> commands{
        {"solve", "Solve one state on one grid", &cmd_solve},
        {"optimize-h", "Variationally optimize the grid size", &cmd_optimize_h},
        {"accelerate", "Two-grid screened-potential acceleration", &cmd_accelerate},
        {"table", "Reproduce a reference table (--id 1, 2, 3)", &cmd_table},
        {"figure1", "Plot data: energy error per screening iteration vs N", &cmd_figure1},
        {"zscaling", "Grid-size and energy scaling along the iso-electronic series", &cmd_zscaling},
    };
    for (const auto& [name, help, fn] : commands) {
        CLI::App* sub = app.add_subcommand(name, help);
        for (const auto& key : known_keys()) {
            if (key == "box") {
                sub->add_flag_callback("--box", [&flags] { flags["box"] = "1"; }, "Zero-potential pencil");
                continue;
            }
            sub->add_option_function<std::string>(
                "--" + key, [&flags, key](const std::string& v) { flags[key] = v; });
        }
        sub->add_option("--config", config_path, "key = value file; flags win");
        sub->callback([&handler, &chosen, fn = fn, name = name] {
            handler = fn;
            chosen = name;
        });
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "numerov: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        KeyValues merged = merge(config_path.empty() ? KeyValues{} : read_config_file(config_path), flags);
        if (chosen == "figure1" && !merged.count("n")) merged["n"] = "4";
        const RunConfig cfg = make_run_config(merged);
        return handler(cfg, out);
    } catch (const UsageError& e) {
        err << "numerov " << chosen << ": " << e.what() << '\n';
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "numerov " << chosen << ": " << e.what() << '\n';
        return kExitUsage;
    } catch (const SolverError& e) {
        err << "numerov " << chosen << ": solver failure in " << e.what() << '\n';
        return kExitSolver;
    } catch (const std::exception& e) {
        err << "numerov " << chosen << ": " << e.what() << '\n';
        return kExitSolver;
    }
}

} // namespace numerov::cli
