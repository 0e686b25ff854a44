#pragma once

#include <iosfwd>
#include <optional>
#include <string>

namespace gqm::cli {

enum ExitCode : int { ok = 0, validation_failed = 1, input_error = 2 };

struct RunConfig {
  std::string subcommand;  // validate | repr | evolve | classical | gns | model
  std::string groupoid;
  std::string element;
  std::string hamiltonian;
  std::string state;
  std::string out;
  std::string mode;
  std::string model;  // qubit | oscillator
  std::optional<double> t0;
  std::optional<double> t1;
  std::optional<long> steps;
  std::optional<double> step;  // RK4 substep for evolve --mode rk4
  std::optional<double> tol;
  std::optional<long> levels;
};

/// Executes one subcommand. Results go to `out` (or files named by the
/// config); a single diagnostic line goes to `err` on failure.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv with CLI11 and calls run.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gqm::cli
