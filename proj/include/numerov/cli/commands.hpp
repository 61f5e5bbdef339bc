#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "numerov/cli/run_config.hpp"

namespace numerov::cli {

enum ExitStatus : int { kExitOk = 0, kExitUsage = 2, kExitSolver = 3 };

/// State label as in spectroscopy: 1s, 2p, 3d, ...
std::string state_name(int n, int l);

// Each command writes its CSV to cfg.out, or to `out` when no path is set.
// Input problems throw UsageError or DomainError, compute failures
// SolverError (with the failing stage in the message).
int cmd_solve(const RunConfig& cfg, std::ostream& out);
int cmd_optimize_h(const RunConfig& cfg, std::ostream& out);
int cmd_accelerate(const RunConfig& cfg, std::ostream& out);
int cmd_table(const RunConfig& cfg, std::ostream& out);
int cmd_figure1(const RunConfig& cfg, std::ostream& out);
int cmd_zscaling(const RunConfig& cfg, std::ostream& out);

/// Full command line (without the program name) to exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace numerov::cli
