// relhom <command> [args...] [--workspace FILE|BUILTIN] [--pair NAME] [--sub NAME]
//        [--depth N] [--cap N] [--seed N] [--json OUT] [--save FILE]
//
// Exit codes: 0 pass, 2 counterexample, 3 unsupported instance, 4 input error.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "relhom/errors.hpp"
#include "run.hpp"

using namespace relhom;

namespace {

std::string command_list() {
  std::string s;
  for (const auto& c : app::command_names()) s += (s.empty() ? "" : ", ") + c;
  return s;
}

void write_json(const std::string& path, const app::Json& j) {
  if (path.empty()) return;
  if (path == "-") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw InputError("cannot write report '" + path + "'");
  out << j.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App cli{"Relative homological algebra over bound quiver algebras"};
  app::RunOptions opts;
  std::string workspace, json_out, save;
  std::size_t depth = 0, cap = 0;
  std::uint64_t seed = 0;
  std::string pair, sub;

  cli.add_option("command", opts.command, "one of: " + command_list())->required();
  cli.add_option("args", opts.args, "positional arguments of the command (module, spec or complex names)");
  cli.add_option("--workspace,-w", workspace, "workspace JSON file or builtin algebra name");
  auto* o_pair = cli.add_option("--pair", pair, "balanced pair name");
  auto* o_sub = cli.add_option("--sub", sub, "subcategory name");
  auto* o_depth = cli.add_option("--depth", depth, "resolution depth");
  auto* o_cap = cli.add_option("--cap", cap, "dimension cap");
  auto* o_seed = cli.add_option("--seed", seed, "random seed");
  cli.add_option("--json", json_out, "write the run report as JSON ('-' for stdout)");
  cli.add_option("--save", save, "write the workspace, with corpus additions, to FILE");

  try {
    cli.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return cli.exit(e);
  } catch (const CLI::ParseError& e) {
    cli.exit(e);
    return app::ExitCode::input_error;
  }
  if (o_pair->count()) opts.pair = pair;
  if (o_sub->count()) opts.sub = sub;
  if (o_depth->count()) opts.depth = depth;
  if (o_cap->count()) opts.cap = cap;
  if (o_seed->count()) opts.seed = seed;

  app::RunReport rep;
  rep.command = opts.command;
  rep.args = opts.args;
  try {
    Workspace ws;
    if (opts.command != "selftest" && opts.command != "catalog") {
      if (workspace.empty()) throw InputError("--workspace is required for " + opts.command);
      Settings settings;
      if (opts.depth) settings.depth = *opts.depth;
      if (opts.cap) settings.cap = *opts.cap;
      if (opts.seed) settings.seed = *opts.seed;
      ws = app::open_workspace(workspace, settings);
    }
    rep = app::run(opts, ws);
    if (json_out != "-") {
      for (const auto& line : rep.lines) std::cout << line << "\n";
      for (const auto& c : rep.counterexamples) std::cout << "counterexample: " << c << "\n";
      for (const auto& [m, origin] : rep.corpus_additions) std::cout << "corpus += " << m << " (" << origin << ")\n";
    }
    if (!save.empty()) save_workspace(ws, save);
  } catch (const std::exception& e) {
    rep.error = e.what();
    rep.exit_code = app::exit_code_for(e);
    std::cerr << "error: " << e.what() << "\n";
  }
  try {
    write_json(json_out, rep.to_json());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return app::ExitCode::input_error;
  }
  return rep.exit_code;
}
