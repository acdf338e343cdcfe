#pragma once

// Command dispatch shared by the relhom CLI, the acceptance runner and the
// tests. A run never prints; it fills a RunReport.

#include <exception>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "relhom/workspace.hpp"

namespace relhom::app {

using Json = nlohmann::ordered_json;

enum ExitCode : int { pass = 0, counterexample = 2, unsupported = 3, input_error = 4 };

struct RunOptions {
  std::string command;
  std::vector<std::string> args;  // positional arguments after the command
  std::optional<std::string> pair;
  std::optional<std::string> sub;
  std::optional<std::size_t> depth;
  std::optional<std::size_t> cap;
  std::optional<std::uint64_t> seed;
};

struct RunReport {
  std::string command;
  std::vector<std::string> args;
  std::string algebra;
  Settings settings;
  Json verdicts = Json::object();
  Json witnesses = Json::array();
  std::vector<std::string> counterexamples;
  std::vector<std::pair<std::string, std::string>> corpus_additions;  // module, origin
  std::vector<std::pair<std::string, double>> timings;                 // phase, milliseconds
  std::vector<std::string> lines;                                      // human-readable output
  int exit_code = pass;
  std::string error;

  /// Timings are left out when with_timings is false, which makes two runs
  /// with the same workspace, seed and command compare equal.
  Json to_json(bool with_timings = true) const;
};

const std::vector<std::string>& command_names();

/// Applies option overrides to the workspace settings and dispatches. Throws
/// relhom errors unchanged; the corpus of `w` may grow (see
/// Workspace::extend_corpus).
RunReport run(const RunOptions& options, Workspace& w);

/// Exit code for an exception escaping run().
int exit_code_for(const std::exception& e);

/// A path to an existing file, else a builtin algebra name.
Workspace open_workspace(const std::string& spec, const Settings& settings = {});

}  // namespace relhom::app
