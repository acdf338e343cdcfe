#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "relhom/catalog.hpp"
#include "relhom/errors.hpp"
#include "relhom/workspace.hpp"
#include "run.hpp"

using namespace relhom;
using Json = nlohmann::ordered_json;

namespace {

const std::filesystem::path kData = RELHOM_DATA;

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Json fixture(const std::string& name) { return Json::parse(read_file(kData / name)); }

std::string rejection(const Json& j) {
  try {
    parse_workspace(j.dump());
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

app::RunReport run(Workspace& w, const std::string& command, std::vector<std::string> args = {},
                   std::optional<std::string> pair = {}) {
  app::RunOptions o;
  o.command = command;
  o.args = std::move(args);
  o.pair = std::move(pair);
  return app::run(o, w);
}

int cli(const std::string& args) {
  const std::string cmd = std::string(RELHOM_CLI) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST(Catalog, Kx2WorkspaceHasCorpusSAndP) {
  const auto w = builtin_workspace("kx2");
  const auto corpus = w.corpus_modules();
  ASSERT_EQ(corpus.size(), 2u);
  EXPECT_TRUE(isomorphic(corpus[0], simple(w.algebra, 0)));
  EXPECT_TRUE(isomorphic(corpus[1], projective(w.algebra, 0)));
}

TEST(Catalog, Marks) {
  for (const auto& e : builtin_catalog()) {
    // Self-injective: every projective is injective and conversely.
    bool proj_inj = true;
    for (const auto& p : projectives(e.algebra)) proj_inj = proj_inj && add_membership(p, injectives(e.algebra)).has_value();
    for (const auto& i : injectives(e.algebra)) proj_inj = proj_inj && add_membership(i, projectives(e.algebra)).has_value();
    EXPECT_EQ(e.self_injective, proj_inj) << e.name;
    const bool gproj = std::find(e.pairs.begin(), e.pairs.end(), "gproj") != e.pairs.end();
    EXPECT_EQ(gproj, e.self_injective) << e.name;
  }
  EXPECT_TRUE(catalog_entry("kx2").self_injective);
  EXPECT_FALSE(catalog_entry("kx2").global_dimension.has_value());
  EXPECT_EQ(catalog_entry("semisimple2").global_dimension, 0u);
  EXPECT_EQ(catalog_entry("a2").global_dimension, 1u);
  EXPECT_EQ(catalog_entry("a3rad2").global_dimension, 2u);
  EXPECT_FALSE(catalog_entry("a2").self_injective);
}

// Over A2 the kernel of P1 -> S1 is S2 = P2, so every simple has pd <= 1 and
// S1 has pd exactly 1.
TEST(Catalog, A2GlobalDimensionByHand) {
  const auto alg = builtin_algebra("a2");
  const auto cover = minimal_right_approximation(simple(alg, 0), projective_subcategory(alg));
  const auto k = kernel(cover).object;
  EXPECT_FALSE(k.is_zero());
  EXPECT_TRUE(isomorphic(k, projective(alg, 1)));
  EXPECT_TRUE(isomorphic(simple(alg, 1), projective(alg, 1)));
}

TEST(Catalog, GprojIsAllOverSelfInjective) {
  for (const auto* name : {"kx2", "nak_cyc2", "semisimple2"}) {
    const auto w = builtin_workspace(name);
    const auto& g = w.pair("gproj");
    EXPECT_EQ(g.x.generators.size(), uniserial_quotients(w.algebra).size()) << name;
    EXPECT_EQ(g.x.name, "all");
    EXPECT_EQ(g.y.name, "all");
  }
  EXPECT_THROW(builtin_workspace("a2").pair("gproj"), InputError);
}

TEST(Catalog, DefaultCorpusIsDeterministicAndDuplicateFree) {
  for (const auto& name : builtin_algebra_names()) {
    const auto alg = builtin_algebra(name);
    const auto a = default_corpus(alg, 3);
    const auto b = default_corpus(alg, 3);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      EXPECT_EQ(a[i], b[i]);
      for (std::size_t j = 0; j < i; ++j) EXPECT_FALSE(isomorphic(a[i], a[j])) << name;
    }
    for (const auto& s : simples(alg)) {
      EXPECT_TRUE(std::any_of(a.begin(), a.end(), [&](const Module& m) { return isomorphic(m, s); }));
    }
  }
}

TEST(RoundTrip, ShippedFixturesAreCanonical) {
  for (const auto* f : {"kx2.json", "a3rad2.json", "a3_path.json"}) {
    const auto text = read_file(kData / f);
    EXPECT_EQ(serialize_workspace(parse_workspace(text)), text) << f;
  }
}

TEST(RoundTrip, BuiltinWorkspaces) {
  for (const auto& name : builtin_algebra_names()) {
    const auto text = serialize_workspace(builtin_workspace(name));
    const auto w = parse_workspace(text);
    EXPECT_EQ(serialize_workspace(w), text) << name;
    EXPECT_EQ(w.cotorsion.size(), builtin_workspace(name).cotorsion.size());
  }
}

TEST(RoundTrip, EntriesAreReducedModP) {
  auto j = fixture("a3_path.json");
  j["modules"][3]["arrows"]["a"] = Json::array({Json::array({4})});  // 4 = 1 mod 3
  const auto w = parse_workspace(j.dump());
  EXPECT_EQ(serialize_workspace(w), read_file(kData / "a3_path.json"));
}

TEST(Load, FixtureContents) {
  const auto w = load_workspace(kData / "a3_path.json");
  EXPECT_EQ(w.algebra->modulus(), 3u);
  EXPECT_EQ(w.algebra->dimension(), 6u);
  EXPECT_EQ(w.corpus.size(), 6u);
  EXPECT_TRUE(w.morphism("inc").is_mono());
  EXPECT_EQ(w.complex("res_S1").lo(), -1);
  EXPECT_EQ(w.cotorsion_spec("proj | all").d.generators.size(), uniserial_quotients(w.algebra).size());
  EXPECT_EQ(w.settings, (Settings{5, 3, 6, 7}));
}

TEST(Load, NonIntertwiningMorphismNamesArrowAndVertex) {
  auto j = fixture("a3_path.json");
  j["morphisms"][0]["blocks"][1] = Json::array({Json::array({2})});
  const auto what = rejection(j);
  EXPECT_TRUE(contains(what, "morphism 'inc'")) << what;
  EXPECT_TRUE(contains(what, "arrow 'b'")) << what;
  EXPECT_TRUE(contains(what, "vertex 2 -> 3")) << what;
}

TEST(Load, RelationViolationNamesRelationAndModule) {
  auto j = fixture("kx2.json");
  j["modules"][1]["arrows"]["x"] = Json::array({Json::array({1, 0}), Json::array({0, 1})});
  const auto what = rejection(j);
  EXPECT_TRUE(contains(what, "relation 1")) << what;
  EXPECT_TRUE(contains(what, "module 'P1'")) << what;
}

TEST(Load, DanglingReferences) {
  auto j = fixture("a3_path.json");
  j["corpus"].push_back("Q7");
  EXPECT_TRUE(contains(rejection(j), "unknown module 'Q7'"));

  j = fixture("a3_path.json");
  j["pairs"][0]["y"] = "nope";
  EXPECT_TRUE(contains(rejection(j), "unknown subcategory 'nope'"));

  j = fixture("a3_path.json");
  j["cotorsion"][0]["pair"] = "gproj";
  EXPECT_TRUE(contains(rejection(j), "unknown pair 'gproj'"));

  j = fixture("a3_path.json");
  j["complexes"][0]["terms"][0] = "X";
  EXPECT_TRUE(contains(rejection(j), "unknown module 'X'"));

  j = fixture("a3_path.json");
  j["subcategories"][0]["generators"] = Json::array({"builtin:everything"});
  EXPECT_TRUE(contains(rejection(j), "builtin:everything"));
}

TEST(Load, SchemaViolations) {
  auto j = fixture("kx2.json");
  j["schema"] = "relhom/2";
  EXPECT_TRUE(contains(rejection(j), "$.schema"));

  j = fixture("kx2.json");
  j["extra"] = 1;
  EXPECT_TRUE(contains(rejection(j), "unknown key 'extra'"));

  j = fixture("kx2.json");
  j["modules"][0]["dims"] = Json::array({"one"});
  EXPECT_TRUE(contains(rejection(j), "$.modules[0].dims[0]: expected an integer"));

  j = fixture("kx2.json");
  j["modules"][0]["arrows"]["x"] = Json::array({Json::array({0, 0})});
  EXPECT_TRUE(contains(rejection(j), "expected 1 entries"));

  j = fixture("kx2.json");
  j["algebra"]["p"] = 4;
  EXPECT_FALSE(rejection(j).empty());

  j = fixture("kx2.json");
  j["modules"].push_back(j["modules"][0]);
  EXPECT_TRUE(contains(rejection(j), "duplicate module 'S1'"));

  EXPECT_THROW(parse_workspace("{not json"), InputError);
  EXPECT_THROW(load_workspace(kData / "missing.json"), InputError);
}

TEST(Load, ComplexMustSquareToZero) {
  auto j = fixture("kx2.json");
  // P1 -x-> P1 -x-> P1 is a complex; with the identity in the middle it is not.
  const Json x = Json::array({Json::array({Json::array({0, 0}), Json::array({1, 0})})});
  const Json id = Json::array({Json::array({Json::array({1, 0}), Json::array({0, 1})})});
  j["complexes"] = Json::array({{{"name", "c"}, {"lo", 0}, {"terms", {"P1", "P1", "P1"}}, {"differentials", {x, x}}}});
  EXPECT_EQ(rejection(j), "");
  j["complexes"][0]["differentials"] = Json::array({x, id});
  EXPECT_TRUE(contains(rejection(j), "complex 'c': d^1 d^0 is nonzero")) << rejection(j);
}

TEST(Run, SpecExamples) {
  auto kx2 = builtin_workspace("kx2");
  auto g = run(kx2, "gorenstein");
  ASSERT_FALSE(g.lines.empty());
  EXPECT_TRUE(g.lines[0].starts_with("Gorenstein: yes, pd D(A) = 0"));
  EXPECT_EQ(g.exit_code, 0);

  auto s = run(kx2, "singularity", {}, "gproj");
  EXPECT_EQ(s.verdicts["right"], "trivial");

  auto a3 = builtin_workspace("a3rad2");
  app::RunOptions o;
  o.command = "resdim";
  o.args = {"S1"};
  o.sub = "proj";
  const auto r = app::run(o, a3);
  EXPECT_EQ(r.verdicts["dimension"], 2);
}

TEST(Run, Determinism) {
  for (const auto& [command, pair] : std::vector<std::pair<std::string, std::string>>{
           {"check-balanced", "proj"}, {"singularity", "proj"}, {"lift", "proj"}, {"hereditary", "proj"},
           {"ext-table", "proj"}}) {
    auto a = builtin_workspace("nak_cyc2");
    auto b = builtin_workspace("nak_cyc2");
    EXPECT_EQ(run(a, command, {}, pair).to_json(false), run(b, command, {}, pair).to_json(false)) << command;
  }
}

TEST(Run, CorpusAdditionsCarryProvenance) {
  auto j = fixture("a3rad2.json");
  j["corpus"] = Json::array({"S1"});
  auto w = parse_workspace(j.dump());
  const auto r = run(w, "resdim", {"S1"});
  ASSERT_EQ(r.corpus_additions.size(), 2u);  // Ω1 = S2, Ω2 = S3
  for (const auto& [m, origin] : r.corpus_additions) EXPECT_EQ(origin, "resdim S1 --sub proj") << m;
  EXPECT_EQ(w.additions(), r.corpus_additions);
  EXPECT_TRUE(isomorphic(w.module(w.corpus[1]), simple(w.algebra, 1)));

  // Provenance survives a save and reload; a second run adds nothing.
  auto again = parse_workspace(serialize_workspace(w));
  EXPECT_EQ(again.additions(), r.corpus_additions);
  EXPECT_TRUE(run(again, "resdim", {"S1"}).corpus_additions.empty());
}

TEST(Run, CotorsionCommands) {
  auto w = load_workspace(kData / "a3_path.json");
  const auto check = run(w, "cotorsion-check");
  EXPECT_EQ(check.exit_code, 2);  // the fixture's third spec is deliberately wrong
  ASSERT_EQ(check.counterexamples.size(), 1u);
  EXPECT_TRUE(contains(check.counterexamples[0], "S3"));
  EXPECT_EQ(run(w, "cotorsion-check", {"proj | all"}).exit_code, 0);

  const auto complete = run(w, "complete", {"S1", "all | inj"});
  EXPECT_EQ(complete.verdicts["ok"], true);
  ASSERT_EQ(complete.corpus_additions.size(), 1u);
  EXPECT_EQ(complete.corpus_additions[0].second, "complete S1 all | inj");

  EXPECT_EQ(run(w, "wakamatsu", {"S1"}).verdicts["passed"], true);
  EXPECT_EQ(run(w, "lift", {"res_S1"}).verdicts["certified"], true);
}

TEST(Run, Errors) {
  auto w = builtin_workspace("kx2");
  try {
    run(w, "frobnicate");
    FAIL();
  } catch (const InputError& e) {
    EXPECT_EQ(app::exit_code_for(e), app::ExitCode::input_error);
  }
  EXPECT_THROW(run(w, "resdim", {"Q"}), InputError);
  EXPECT_THROW(run(w, "resdim"), InputError);
  EXPECT_THROW(run(w, "singularity", {}, "nope"), InputError);
  EXPECT_EQ(app::exit_code_for(UnsupportedInstance("x")), app::ExitCode::unsupported);
  EXPECT_EQ(app::exit_code_for(DepthInsufficient("x")), app::ExitCode::unsupported);
  EXPECT_EQ(app::exit_code_for(AdmissibilityFailure("x", "M")), app::ExitCode::unsupported);
}

TEST(Cli, ExitCodes) {
  const auto dir = std::filesystem::temp_directory_path() / "relhom_test_io";
  std::filesystem::create_directories(dir);

  EXPECT_EQ(cli("gorenstein --workspace kx2"), 0);
  EXPECT_EQ(cli("frobnicate --workspace kx2"), 4);
  EXPECT_EQ(cli("gorenstein --workspace " + (dir / "absent.json").string()), 4);
  EXPECT_EQ(cli("gorenstein"), 4);

  // (proj, proj) over A2 is not balanced: counterexample.
  auto j = fixture("a3rad2.json");
  j["pairs"].push_back({{"name", "odd"}, {"x", "proj"}, {"y", "proj"}});
  // (proj, all) over k[x]/(x^2): S has infinite projective dimension, so the
  // lifting hypothesis fails: unsupported.
  auto k = fixture("kx2.json");
  k["pairs"].push_back({{"name", "odd"}, {"x", "proj"}, {"y", "all"}});
  std::ofstream(dir / "odd_a3.json") << j.dump();
  std::ofstream(dir / "odd_kx2.json") << k.dump();
  EXPECT_EQ(cli("check-balanced --pair odd --workspace " + (dir / "odd_a3.json").string()), 2);
  EXPECT_EQ(cli("lift --pair odd --workspace " + (dir / "odd_kx2.json").string()), 3);

  const auto report = dir / "report.json";
  EXPECT_EQ(cli("resdim S1 --sub proj --workspace a3rad2 --json " + report.string()), 0);
  const auto rep = Json::parse(read_file(report));
  EXPECT_EQ(rep["verdicts"]["dimension"], 2);
  EXPECT_EQ(rep["settings"]["seed"], 1);
  EXPECT_TRUE(rep.contains("timings_ms"));

  const auto saved = dir / "saved.json";
  EXPECT_EQ(cli("check-balanced --workspace kx2 --save " + saved.string()), 0);
  EXPECT_EQ(read_file(saved), read_file(kData / "kx2.json"));
}
