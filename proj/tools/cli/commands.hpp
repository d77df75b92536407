#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "cli/config.hpp"

namespace spherix::cli {

/// Per-sample frame table: s, t, x, y, z, T, N, B, kappa, tau, kappa_prime.
int cmd_frames(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Per-sample indicatrix table with closed-form and oracle covariant
/// derivatives. Returns kExitInadmissible for a kind the curve does not
/// support (constant curvature required).
int cmd_indicatrix(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Runs the identity suite; returns kExitOk iff every identity passes.
int cmd_validate(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses `args` (without the program name) and dispatches. Results go to
/// --out or `out`; diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spherix::cli
