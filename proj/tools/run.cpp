#include "run.hpp"

#include <chrono>
#include <filesystem>
#include <functional>
#include <map>

#include "acceptance.hpp"
#include "relhom/catalog.hpp"
#include "relhom/cotorsion.hpp"
#include "relhom/derived.hpp"
#include "relhom/errors.hpp"

namespace relhom::app {

namespace {

std::string dims_of(const Module& m) {
  std::string s = "(";
  for (std::size_t v = 0; v < m.dims().size(); ++v) s += (v ? "," : "") + std::to_string(m.dim(v));
  return s + ")";
}

std::string describe(const Module& m) { return m.label() + " " + dims_of(m); }

std::string sequence_text(const ShortExactSequence& s) {
  return "0 -> " + describe(s.first()) + " -> " + describe(s.middle()) + " -> " + describe(s.last()) + " -> 0";
}

class Context {
 public:
  Context(const RunOptions& o, Workspace& w, RunReport& r) : opts(o), ws(w), rep(r) {}

  const RunOptions& opts;
  Workspace& ws;
  RunReport& rep;

  template <class F>
  auto timed(const std::string& phase, F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    auto out = f();
    const std::chrono::duration<double, std::milli> dt = std::chrono::steady_clock::now() - t0;
    rep.timings.emplace_back(phase, dt.count());
    return out;
  }

  void say(std::string line) { rep.lines.push_back(std::move(line)); }
  void counterexample(std::string what) {
    rep.counterexamples.push_back(what);
    rep.exit_code = std::max<int>(rep.exit_code, counterexample_code);
  }

  const BalancedPair& pair() const {
    if (opts.pair) return ws.pair(*opts.pair);
    if (ws.pairs.empty()) throw InputError("workspace has no balanced pairs");
    return ws.pairs.front().pair;
  }

  const Subcategory& sub() const {
    if (opts.sub) return ws.subcategory(*opts.sub);
    for (const auto& s : ws.subcategories) {
      if (s.sub.name == "proj") return s.sub;
    }
    if (ws.subcategories.empty()) throw InputError("workspace has no subcategories");
    return ws.subcategories.front().sub;
  }

  void args_between(std::size_t lo, std::size_t hi, const char* usage) const {
    if (opts.args.size() < lo || opts.args.size() > hi) {
      throw InputError("usage: relhom " + opts.command + " " + usage);
    }
  }

  std::size_t depth_at_least(std::size_t min) const {
    if (ws.settings.depth < min) {
      throw InputError(opts.command + " needs --depth >= " + std::to_string(min));
    }
    return ws.settings.depth;
  }

  ExtCalculator& ext_for(const BalancedPair& p) {
    auto it = ext_.find(p.name);
    if (it == ext_.end()) it = ext_.emplace(p.name, ExtCalculator(p, depth_at_least(2))).first;
    return it->second;
  }

  std::vector<const CotorsionSpec*> specs() const {
    std::vector<const CotorsionSpec*> out;
    if (!opts.args.empty()) {
      out.push_back(&ws.cotorsion_spec(opts.args.back()));
      return out;
    }
    for (const auto& c : ws.cotorsion) {
      if (!opts.pair || c.pair == *opts.pair) out.push_back(&c.spec);
    }
    if (out.empty()) throw InputError("workspace has no cotorsion specs" + (opts.pair ? " for pair " + *opts.pair : ""));
    return out;
  }

  void extend(const Module& m, const std::string& name, const std::string& origin) {
    if (m.is_zero()) return;
    const auto before = ws.corpus.size();
    const auto entry = ws.extend_corpus(m, name, origin);
    if (ws.corpus.size() > before) rep.corpus_additions.emplace_back(entry, origin);
  }

  std::string invocation() const {
    std::string s = opts.command;
    for (const auto& a : opts.args) s += " " + a;
    return s;
  }

 private:
  static constexpr int counterexample_code = ExitCode::counterexample;
  std::map<std::string, ExtCalculator> ext_;
};

// ---------------------------------------------------------------------------
// Commands

void check_balanced(Context& c) {
  c.args_between(0, 0, "[--pair NAME]");
  const auto& pair = c.pair();
  const auto r = c.timed("verify", [&] {
    return verify_balanced_pair(pair, c.ws.corpus_modules(), c.depth_at_least(2), c.ws.settings.samples,
                                c.ws.settings.seed);
  });
  c.rep.verdicts["pair"] = pair.name;
  c.rep.verdicts["balanced"] = r.passed;
  c.rep.verdicts["x_admissible"] = r.x_admissible.admissible;
  c.rep.verdicts["y_coadmissible"] = r.y_coadmissible.admissible;
  c.rep.verdicts["star_samples"] = r.star_samples;
  for (const auto& o : r.resolutions) {
    c.rep.witnesses.push_back({{"object", o.object}, {"side", "resolution"}, {"ok", o.ok}, {"detail", o.detail}});
    if (!o.ok) c.counterexample("resolution of " + o.object + ": " + o.detail);
  }
  for (const auto& o : r.coresolutions) {
    c.rep.witnesses.push_back({{"object", o.object}, {"side", "coresolution"}, {"ok", o.ok}, {"detail", o.detail}});
    if (!o.ok) c.counterexample("coresolution of " + o.object + ": " + o.detail);
  }
  for (const auto& m : r.mismatches) c.counterexample(m);
  for (const auto& f : r.x_admissible.failures) c.counterexample("approximation not epic: " + f);
  for (const auto& f : r.y_coadmissible.failures) c.counterexample("approximation not monic: " + f);
  if (!r.passed && c.rep.counterexamples.empty()) c.counterexample("pair " + pair.name + " is not balanced");
  c.say("pair " + pair.name + ": " + (r.passed ? "balanced" : "not balanced") + " (" +
        std::to_string(r.resolutions.size()) + " objects, " + std::to_string(r.samples) + " samples, " +
        std::to_string(r.star_samples) + " *-acyclic)");
}

void ext_table(Context& c) {
  c.args_between(0, 2, "[M N] [--pair NAME] [--depth N]");
  if (c.opts.args.size() == 1) throw InputError("usage: relhom ext-table [M N]");
  const auto& pair = c.pair();
  const std::size_t depth = c.depth_at_least(2);
  const std::size_t maxdeg = depth - 1;
  const auto tables = c.timed("ext", [&] {
    if (c.opts.args.size() == 2) {
      return std::vector<ExtTable>{
          rel_ext(c.ws.module(c.opts.args[0]), c.ws.module(c.opts.args[1]), pair, maxdeg, Via::both, depth)};
    }
    return ext_tables(pair, c.ws.corpus_modules(), maxdeg, depth);
  });
  c.say("dim Ext^i over pair " + pair.name + ", i = 1.." + std::to_string(maxdeg));
  std::size_t unbalanced = 0;
  for (const auto& t : tables) {
    std::string row;
    for (auto d : t.via_x) row += " " + std::to_string(d);
    if (!t.balanced) {
      row += "  | via Y:";
      for (auto d : t.via_y) row += " " + std::to_string(d);
      c.counterexample("Ext(" + t.m + ", " + t.n + ") differs between the X and Y sides");
      ++unbalanced;
    }
    c.say("  " + t.m + ", " + t.n + ":" + row);
    c.rep.witnesses.push_back({{"m", t.m}, {"n", t.n}, {"via_x", t.via_x}, {"via_y", t.via_y}});
  }
  c.rep.verdicts["pair"] = pair.name;
  c.rep.verdicts["tables"] = tables.size();
  c.rep.verdicts["balanced"] = unbalanced == 0;
}

void resdim(Context& c) {
  c.args_between(1, 1, "M [--sub NAME] [--cap N]");
  const Module& m = c.ws.module(c.opts.args[0]);
  const auto& sub = c.sub();
  const auto d = c.timed("resolve", [&] { return resolution_dimension(m, sub, c.ws.settings.cap); });
  c.say("resdim_" + sub.name + " " + m.label() + " = " + d.describe());
  c.rep.verdicts["module"] = m.label();
  c.rep.verdicts["subcategory"] = sub.name;
  c.rep.verdicts["dimension"] = d.dimension ? Json(*d.dimension) : Json(nullptr);
  c.rep.verdicts["infinite_certified"] = d.infinite_certified();
  if (d.periodicity) {
    c.rep.witnesses.push_back({{"periodicity", {{"start", d.periodicity->start}, {"period", d.periodicity->period}}}});
  }
  c.rep.witnesses.push_back({{"vanishing_test", d.vanishing_test}});
  if (!d.consistent) c.counterexample("syzygy membership and Ext vanishing disagree for " + m.label());
  for (std::size_t k = 1; k < d.resolution.syzygies.size(); ++k) {
    c.extend(d.resolution.syzygies[k], "Omega" + std::to_string(k) + "(" + m.label() + ")",
             c.invocation() + " --sub " + sub.name);
  }
}

void cotorsion_check(Context& c) {
  c.args_between(0, 1, "[SPEC] [--pair NAME]");
  const auto corpus = c.ws.corpus_modules();
  std::size_t verified = 0;
  for (const auto* spec : c.specs()) {
    const auto r = c.timed(spec->name, [&] { return verify_cotorsion_pair(*spec, corpus, c.ext_for(spec->pair)); });
    verified += r.verified;
    c.say(spec->name + ": " + (r.verified ? "cotorsion pair" : "not a cotorsion pair"));
    for (const auto& v : r.violations) c.counterexample(spec->name + ": " + v);
    for (const auto& m : r.unrecognized_c) c.counterexample(spec->name + ": " + m + " lies in the left perpendicular of D but not in C");
    for (const auto& m : r.unrecognized_d) c.counterexample(spec->name + ": " + m + " lies in the right perpendicular of C but not in D");
    c.rep.witnesses.push_back({{"spec", spec->name},
                               {"verified", r.verified},
                               {"violations", r.violations},
                               {"unrecognized_c", r.unrecognized_c},
                               {"unrecognized_d", r.unrecognized_d}});
  }
  c.rep.verdicts["verified"] = verified;
  c.rep.verdicts["checked"] = c.rep.witnesses.size();
}

void hereditary(Context& c) {
  c.args_between(0, 1, "[SPEC] [--pair NAME] [--depth N]");
  const std::size_t maxdeg = c.depth_at_least(3) - 1;
  const auto corpus = c.ws.corpus_modules();
  std::size_t count = 0;
  for (const auto* spec : c.specs()) {
    const auto r = c.timed(spec->name, [&] { return hereditary_check(*spec, corpus, maxdeg, c.ext_for(spec->pair)); });
    count += r.hereditary();
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    c.say(spec->name + ": hereditary " + (r.consistent() ? yn(r.hereditary()) : "criteria disagree") +
          " (resolving " + yn(r.resolving) + ", coresolving " + yn(r.coresolving) + ", Ext^2..Ext^" +
          std::to_string(maxdeg) + " vanish " + yn(r.ext_vanishing) + ")");
    if (!r.consistent()) c.counterexample(spec->name + ": the three hereditary criteria disagree");
    c.rep.witnesses.push_back({{"spec", spec->name},
                               {"resolving", r.resolving},
                               {"coresolving", r.coresolving},
                               {"ext_vanishing", r.ext_vanishing},
                               {"sequences", r.sequences},
                               {"details", r.details}});
  }
  c.rep.verdicts["hereditary"] = count;
  c.rep.verdicts["checked"] = c.rep.witnesses.size();
}

void complete(Context& c) {
  c.args_between(2, 2, "M SPEC");
  const Module& m = c.ws.module(c.opts.args[0]);
  const auto& spec = c.ws.cotorsion_spec(c.opts.args[1]);
  const auto r = c.timed("construct", [&] { return completeness_construct(m, spec, c.ext_for(spec.pair)); });
  auto row = [&](const char* what, const SequenceCertificate& s) {
    c.say(std::string(what) + ": " + sequence_text(s.sequence) + (s.star.star() ? "" : " (not *-acyclic)"));
    c.rep.witnesses.push_back({{"row", what}, {"sequence", sequence_text(s.sequence)}, {"star", s.star.star()}});
  };
  row("approximation", r.approximation_row);
  row("witness", r.witness);
  row("result", r.result);
  row("column", r.column);
  c.rep.verdicts["d_in_d"] = r.d_in_d;
  c.rep.verdicts["c_in_c"] = r.c_in_c;
  c.rep.verdicts["e_in_c"] = r.e_in_c;
  c.rep.verdicts["ok"] = r.ok();
  c.say(std::string("special C-approximation of ") + m.label() + (r.ok() ? ": certified" : ": not certified"));
  if (!r.ok()) c.counterexample("construction for " + m.label() + " is not certified in " + spec.name);
  const auto origin = c.invocation();
  c.extend(r.result.sequence.middle(), "E(" + m.label() + ")", origin);
  c.extend(r.witness.sequence.middle(), "D(" + m.label() + ")", origin);
}

void wakamatsu(Context& c) {
  c.args_between(1, 1, "M [--sub NAME] [--pair NAME]");
  const Module& m = c.ws.module(c.opts.args[0]);
  const auto& sub = c.sub();
  const auto r = c.timed("check", [&] { return wakamatsu_check(sub, m, c.ext_for(c.pair())); });
  std::string dims;
  for (const auto& [g, d] : r.ext_dims) dims += (dims.empty() ? "" : ", ") + ("Ext1(" + g + ", K) = " + std::to_string(d));
  c.say("kernel of the minimal right " + sub.name + "-approximation of " + m.label() + ": " + describe(r.kernel));
  c.say(dims.empty() ? "no generators" : dims);
  c.rep.verdicts["passed"] = r.passed;
  for (const auto& [g, d] : r.ext_dims) c.rep.witnesses.push_back({{"generator", g}, {"ext1", d}});
  if (!r.passed) c.counterexample("Ext1 against the kernel does not vanish for " + m.label());
  c.extend(r.kernel, "K(" + m.label() + ")", c.invocation() + " --sub " + sub.name);
}

void lift(Context& c) {
  c.args_between(0, 1, "[COMPLEX] [--pair NAME] [--cap N]");
  const auto& pair = c.pair();
  const std::size_t cap = c.ws.settings.cap;
  if (c.opts.args.size() == 1) {
    const Complex& y = c.ws.complex(c.opts.args[0]);
    const auto l = c.timed("lift", [&] { return lift_to_x(y, pair.x, cap); });
    std::string terms;
    for (int n = l.output.lo(); n <= l.output.hi(); ++n) {
      if (!l.output.term(n).is_zero()) terms += (terms.empty() ? "degree " : ", degree ") + std::to_string(n) + ": " + describe(l.output.term(n));
    }
    c.say(c.opts.args[0] + " lifted to K^b(" + pair.x.name + ") in " + std::to_string(l.steps) + " steps: " + terms);
    c.say(std::string("cone certificate: ") + (l.certified() ? "valid" : "invalid (" + l.certificate.failure + ")"));
    c.rep.verdicts["certified"] = l.certified();
    c.rep.verdicts["steps"] = l.steps;
    c.rep.witnesses.push_back({{"terms", terms}});
    if (!l.certified()) c.counterexample("lift of " + c.opts.args[0] + " is not certified");
    return;
  }
  bool unmet = false;
  for (auto dir : {Inclusion::y_in_x, Inclusion::x_in_y}) {
    const std::string name = dir == Inclusion::y_in_x ? "K^b(" + pair.y.name + ") in K^b(" + pair.x.name + ")"
                                                       : "K^b(" + pair.x.name + ") in K^b(" + pair.y.name + ")";
    const auto r = c.timed(name, [&] { return kb_inclusion(pair, dir, cap, c.ws.settings.samples, c.ws.settings.seed); });
    std::string verdict;
    if (!r.hypothesis_met) {
      verdict = "hypothesis not met within cap " + std::to_string(cap);
      unmet = true;
    } else {
      verdict = r.holds() ? "holds" : "fails";
    }
    c.say(name + ": " + verdict + " (" + std::to_string(r.certified) + "/" + std::to_string(r.lifts) + " lifts certified)");
    for (const auto& f : r.failures) c.counterexample(name + ": " + f);
    Json dims = Json::object();
    for (const auto& [g, d] : r.dimensions) dims[g] = d;
    c.rep.verdicts[name] = verdict;
    c.rep.witnesses.push_back({{"inclusion", name}, {"dimensions", dims}, {"lifts", r.lifts}, {"certified", r.certified}});
  }
  if (unmet && c.rep.exit_code == ExitCode::pass) c.rep.exit_code = ExitCode::unsupported;
}

void gorenstein(Context& c) {
  c.args_between(0, 0, "[--cap N]");
  const std::size_t cap = c.ws.settings.cap;
  const auto r = c.timed("report", [&] { return gorenstein_report(c.ws.algebra, cap); });
  if (r.gorenstein()) {
    c.say("Gorenstein: yes, pd D(A) = " + std::to_string(*r.pd_dual) + ", id A = " + std::to_string(*r.id_regular));
  } else {
    c.say("Gorenstein: undecided at cap " + std::to_string(cap) + " (pd D(A) " +
          (r.pd_dual ? "= " + std::to_string(*r.pd_dual) : ">= " + std::to_string(cap + 1)) + ", id A " +
          (r.id_regular ? "= " + std::to_string(*r.id_regular) : ">= " + std::to_string(cap + 1)) + ")");
  }
  c.say(std::string("injective stalks lift to K^b(proj): ") + (r.injective_stalks_lift ? "yes" : "no"));
  c.say(std::string("projective stalks lift to K^b(inj): ") + (r.projective_stalks_lift ? "yes" : "no"));
  if (r.resolution_equivalence) {
    c.say(std::string("lift of D(A) homotopy equivalent to its projective resolution: ") +
          (*r.resolution_equivalence ? "yes" : "no"));
  }
  for (const auto& n : r.notes) c.say("note: " + n);
  c.rep.verdicts["gorenstein"] = r.gorenstein();
  c.rep.verdicts["pd_dual"] = r.pd_dual ? Json(*r.pd_dual) : Json(nullptr);
  c.rep.verdicts["id_regular"] = r.id_regular ? Json(*r.id_regular) : Json(nullptr);
  c.rep.verdicts["injective_stalks_lift"] = r.injective_stalks_lift;
  c.rep.verdicts["projective_stalks_lift"] = r.projective_stalks_lift;
  c.rep.verdicts["resolution_equivalence"] = r.resolution_equivalence ? Json(*r.resolution_equivalence) : Json(nullptr);
  for (const auto& [m, d] : r.pd_injectives) c.rep.witnesses.push_back({{"pd", m}, {"value", d}});
  for (const auto& [m, d] : r.id_projectives) c.rep.witnesses.push_back({{"id", m}, {"value", d}});
  if (!r.consistent()) c.counterexample("dimension bound and liftability disagree");
  if (r.resolution_equivalence == false) c.counterexample("lift of D(A) is not homotopy equivalent to its resolution");
}

void singularity(Context& c) {
  c.args_between(0, 0, "[--pair NAME] [--cap N]");
  const auto& pair = c.pair();
  const auto v = c.timed("verdict", [&] {
    return singularity_verdict(pair, c.ws.corpus_modules(), c.ws.settings.cap, c.ws.settings.samples,
                               c.ws.settings.seed);
  });
  c.say(v.summary());
  for (const auto& w : v.resolutions) c.say("  resdim_" + pair.x.name + " " + w.object + " = " + w.dimension);
  for (const auto& w : v.coresolutions) c.say("  coresdim_" + pair.y.name + " " + w.object + " = " + w.dimension);
  c.rep.verdicts["pair"] = pair.name;
  c.rep.verdicts["right"] = to_string(v.right);
  c.rep.verdicts["left"] = to_string(v.left);
  c.rep.verdicts["equality_hypotheses"] = v.equality_hypotheses;
  c.rep.verdicts["equality_evidence"] = v.equality_evidence ? Json(*v.equality_evidence) : Json(nullptr);
  auto witness = [](const ObjectWitness& w, const char* side) {
    return Json{{"object", w.object}, {"side", side}, {"dimension", w.dimension}, {"finite", w.finite},
                {"periodic", w.periodic}};
  };
  for (const auto& w : v.resolutions) c.rep.witnesses.push_back(witness(w, "resolution"));
  for (const auto& w : v.coresolutions) c.rep.witnesses.push_back(witness(w, "coresolution"));
  if (v.equality_evidence == false) c.counterexample("a lift failed although the equality hypotheses hold");
}

void selftest(Context& c) {
  c.args_between(0, 0, "");
  const auto results = c.timed("acceptance", [] { return acceptance::run_all(); });
  for (const auto& r : results) {
    c.say(acceptance::format(r));
    c.rep.verdicts[std::to_string(r.id)] = r.passed;
    c.rep.witnesses.push_back({{"criterion", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}});
    if (!r.passed) c.counterexample("criterion " + std::to_string(r.id) + ": " + r.detail);
  }
}

void catalog(Context& c) {
  c.args_between(0, 0, "[--cap N]");
  for (const auto& e : builtin_catalog(c.ws.settings.cap)) {
    const std::string gl = e.global_dimension ? std::to_string(*e.global_dimension) : ">= " + std::to_string(c.ws.settings.cap + 1);
    std::string pairs;
    for (const auto& p : e.pairs) pairs += (pairs.empty() ? "" : ", ") + p;
    c.say(e.name + ": " + e.description + "; dim " + std::to_string(e.algebra->dimension()) + ", gl.dim " + gl +
          (e.self_injective ? ", self-injective" : "") + "; pairs " + pairs);
    c.rep.witnesses.push_back({{"name", e.name},
                               {"dimension", e.algebra->dimension()},
                               {"self_injective", e.self_injective},
                               {"global_dimension", e.global_dimension ? Json(*e.global_dimension) : Json(nullptr)},
                               {"pairs", e.pairs}});
  }
}

const std::vector<std::pair<std::string, std::function<void(Context&)>>>& commands() {
  static const std::vector<std::pair<std::string, std::function<void(Context&)>>> table = {
      {"check-balanced", check_balanced}, {"ext-table", ext_table}, {"resdim", resdim},
      {"cotorsion-check", cotorsion_check}, {"hereditary", hereditary}, {"complete", complete},
      {"wakamatsu", wakamatsu}, {"lift", lift}, {"gorenstein", gorenstein},
      {"singularity", singularity}, {"selftest", selftest}, {"catalog", catalog},
  };
  return table;
}

}  // namespace

Json RunReport::to_json(bool with_timings) const {
  Json j;
  j["command"] = command;
  j["args"] = args;
  j["algebra"] = algebra;
  j["settings"] = {{"depth", settings.depth}, {"cap", settings.cap}, {"samples", settings.samples}, {"seed", settings.seed}};
  j["exit_code"] = exit_code;
  if (!error.empty()) j["error"] = error;
  j["verdicts"] = verdicts;
  j["witnesses"] = witnesses;
  j["counterexamples"] = counterexamples;
  j["corpus_additions"] = Json::array();
  for (const auto& [m, origin] : corpus_additions) j["corpus_additions"].push_back({{"module", m}, {"origin", origin}});
  j["lines"] = lines;
  if (with_timings) {
    Json t = Json::object();
    for (const auto& [phase, ms] : timings) t[phase] = ms;
    j["timings_ms"] = std::move(t);
  }
  return j;
}

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [n, f] : commands()) out.push_back(n);
    return out;
  }();
  return names;
}

RunReport run(const RunOptions& options, Workspace& w) {
  if (options.depth) w.settings.depth = *options.depth;
  if (options.cap) w.settings.cap = *options.cap;
  if (options.seed) w.settings.seed = *options.seed;

  RunReport rep;
  rep.command = options.command;
  rep.args = options.args;
  rep.algebra = w.algebra ? w.algebra->name() : "";
  rep.settings = w.settings;
  for (const auto& [name, fn] : commands()) {
    if (name == options.command) {
      Context ctx(options, w, rep);
      fn(ctx);
      return rep;
    }
  }
  throw InputError("unknown command '" + options.command + "'");
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const InputError*>(&e) || dynamic_cast<const ContractViolation*>(&e)) return ExitCode::input_error;
  if (dynamic_cast<const UnsupportedInstance*>(&e) || dynamic_cast<const DepthInsufficient*>(&e) ||
      dynamic_cast<const PreconditionFailure*>(&e)) {
    return ExitCode::unsupported;
  }
  return 1;
}

Workspace open_workspace(const std::string& spec, const Settings& settings) {
  if (std::filesystem::exists(spec)) return load_workspace(spec);
  const auto names = builtin_algebra_names();
  if (std::find(names.begin(), names.end(), spec) != names.end()) return builtin_workspace(spec, settings);
  throw InputError("no workspace file or builtin algebra named '" + spec + "'");
}

}  // namespace relhom::app
