#pragma once

// Subcommands of the `nsl` tool. Each writes to the given streams and
// returns the process exit code:
//   0  success / verified
//   1  usage or parse error
//   2  a demo or property run disagreed with its expected outcome

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "nsl/nlogic.hpp"

namespace nsl::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitDisagree = 2;

int cmd_eval(const std::string& env_path, const std::string& formula, std::optional<nlogic::Semantics> semantics,
             std::ostream& out, std::ostream& err);

/// Randomized closure run over the three set operators of the chosen
/// semantics. `jobs` only changes speed, never the report.
int cmd_closure_check(long iters, std::uint64_t seed, nlogic::Semantics semantics, int jobs, std::ostream& out,
                      std::ostream& err);

int cmd_refute(const std::string& center, const std::string& candidate, const std::string& mode,
               const std::string& eps, std::ostream& out, std::ostream& err);

/// paradox | nonclosure | monad-vs-interval | def1-vs-def2
int cmd_demo(const std::string& name, std::ostream& out, std::ostream& err);

int cmd_calc(const std::string& expr, std::ostream& out, std::ostream& err);

/// Full command line, argv[0] included.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace nsl::cli
