#include "relhom/workspace.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "relhom/catalog.hpp"
#include "relhom/errors.hpp"
#include "relhom/sampling.hpp"

namespace relhom {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Lookups

namespace {

template <class T, class Name>
const T& find_named(const std::vector<T>& items, const std::string& name, Name name_of, const char* kind) {
  for (const auto& it : items) {
    if (name_of(it) == name) return it;
  }
  throw InputError(std::string("unknown ") + kind + " '" + name + "'");
}

bool is_nakayama(const Quiver& q) {
  std::vector<int> out(q.vertex_count()), in(q.vertex_count());
  for (const auto& a : q.arrows()) {
    ++out[a.source];
    ++in[a.target];
  }
  return std::all_of(out.begin(), out.end(), [](int k) { return k <= 1; }) &&
         std::all_of(in.begin(), in.end(), [](int k) { return k <= 1; });
}

std::string joined(const std::vector<std::string>& names, const char* sep = ",") {
  std::string s;
  for (const auto& n : names) s += (s.empty() ? "" : sep) + n;
  return s;
}

}  // namespace

const Module& Workspace::module(const std::string& name) const {
  return find_named(modules, name, [](const NamedModule& m) -> const std::string& { return m.module.name(); }, "module")
      .module;
}

const Morphism& Workspace::morphism(const std::string& name) const {
  return find_named(morphisms, name, [](const NamedMorphism& m) -> const std::string& { return m.name; }, "morphism")
      .morphism;
}

const Complex& Workspace::complex(const std::string& name) const {
  return find_named(complexes, name, [](const NamedComplex& c) -> const std::string& { return c.name; }, "complex")
      .complex;
}

const Subcategory& Workspace::subcategory(const std::string& name) const {
  return find_named(subcategories, name,
                    [](const NamedSubcategory& s) -> const std::string& { return s.sub.name; }, "subcategory")
      .sub;
}

const BalancedPair& Workspace::pair(const std::string& name) const {
  return find_named(pairs, name, [](const NamedPair& p) -> const std::string& { return p.pair.name; }, "pair").pair;
}

const CotorsionSpec& Workspace::cotorsion_spec(const std::string& name) const {
  return find_named(cotorsion, name, [](const NamedCotorsion& c) -> const std::string& { return c.spec.name; },
                    "cotorsion spec")
      .spec;
}

bool Workspace::has_module(const std::string& name) const {
  return std::any_of(modules.begin(), modules.end(), [&](const NamedModule& m) { return m.module.name() == name; });
}

std::vector<Module> Workspace::corpus_modules() const {
  std::vector<Module> out;
  out.reserve(corpus.size());
  for (const auto& n : corpus) out.push_back(module(n));
  return out;
}

std::string Workspace::extend_corpus(const Module& m, const std::string& name, const std::string& origin) {
  if (m.is_zero()) return "0";
  for (const auto& n : corpus) {
    if (isomorphic(module(n), m)) return n;
  }
  std::string unique = name;
  for (int k = 2; has_module(unique); ++k) unique = name + "#" + std::to_string(k);
  modules.push_back({m.named(unique), origin});
  corpus.push_back(unique);
  return unique;
}

std::vector<std::pair<std::string, std::string>> Workspace::additions() const {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& n : corpus) {
    for (const auto& m : modules) {
      if (m.module.name() == n && !m.origin.empty()) out.emplace_back(n, m.origin);
    }
  }
  return out;
}

std::vector<Module> builtin_generators(const AlgebraPtr& algebra, const std::string& token) {
  if (token == "builtin:proj") return projectives(algebra);
  if (token == "builtin:inj") return injectives(algebra);
  if (token == "builtin:all") {
    if (!is_nakayama(algebra->quiver())) {
      throw InputError("builtin:all is only available for Nakayama algebras (at most one arrow in and out per vertex)");
    }
    return uniserial_quotients(algebra);
  }
  throw InputError("unknown builtin generator list '" + token + "'");
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class Reader {
 public:
  explicit Reader(std::string path) : path_(std::move(path)) {}

  [[noreturn]] void fail(const std::string& what) const { throw InputError(path_ + ": " + what); }

  const Json& field(const Json& obj, const char* key) const {
    if (!obj.is_object()) fail("expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) fail(std::string("missing key '") + key + "'");
    return *it;
  }

  void only_keys(const Json& obj, std::initializer_list<const char*> keys) const {
    if (!obj.is_object()) fail("expected an object");
    for (const auto& [k, v] : obj.items()) {
      if (std::none_of(keys.begin(), keys.end(), [&](const char* s) { return k == s; })) fail("unknown key '" + k + "'");
    }
  }

  Reader at(const std::string& key) const { return Reader(path_ + "." + key); }
  Reader at(std::size_t i) const { return Reader(path_ + "[" + std::to_string(i) + "]"); }

  std::string string(const Json& j) const {
    if (!j.is_string()) fail("expected a string");
    return j.get<std::string>();
  }
  long long integer(const Json& j) const {
    if (!j.is_number_integer()) fail("expected an integer");
    return j.get<long long>();
  }
  std::size_t count(const Json& j) const {
    const auto v = integer(j);
    if (v < 0) fail("expected a nonnegative integer");
    return static_cast<std::size_t>(v);
  }
  const Json& array(const Json& j) const {
    if (!j.is_array()) fail("expected an array");
    return j;
  }
  std::vector<std::string> strings(const Json& j) const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < array(j).size(); ++i) out.push_back(at(i).string(j[i]));
    return out;
  }

  Matrix matrix(const Json& j, Scalar p, std::size_t rows, std::size_t cols) const {
    if (array(j).size() != rows) fail("expected " + std::to_string(rows) + " rows, got " + std::to_string(j.size()));
    Matrix m(p, rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      const Reader row = at(r);
      if (row.array(j[r]).size() != cols) {
        row.fail("expected " + std::to_string(cols) + " entries, got " + std::to_string(j[r].size()));
      }
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = fp::reduce(row.at(c).integer(j[r][c]), p);
    }
    return m;
  }

  std::vector<Matrix> blocks(const Json& j, const Module& s, const Module& t) const {
    const std::size_t n = s.dims().size();
    if (array(j).size() != n) fail("expected one block per vertex (" + std::to_string(n) + ")");
    std::vector<Matrix> out;
    for (std::size_t v = 0; v < n; ++v) out.push_back(at(v).matrix(j[v], s.modulus(), t.dim(v), s.dim(v)));
    return out;
  }

 private:
  std::string path_;
};

AlgebraPtr parse_algebra(const Json& j, const Reader& r) {
  r.only_keys(j, {"name", "p", "cap", "vertices", "arrows", "relations"});
  const auto name = r.at("name").string(r.field(j, "name"));
  const auto p = r.at("p").count(r.field(j, "p"));
  const auto cap = r.at("cap").count(r.field(j, "cap"));
  const auto n = r.at("vertices").count(r.field(j, "vertices"));
  std::vector<Arrow> arrows;
  const Reader ra = r.at("arrows");
  const auto& ja = ra.array(r.field(j, "arrows"));
  for (std::size_t i = 0; i < ja.size(); ++i) {
    const Reader ri = ra.at(i);
    if (!ri.array(ja[i]).is_array() || ja[i].size() != 3) ri.fail("expected [source, target, label]");
    const auto s = ri.at(0).count(ja[i][0]);
    const auto t = ri.at(1).count(ja[i][1]);
    if (s < 1 || s > n || t < 1 || t > n) ri.fail("vertex out of range 1.." + std::to_string(n));
    arrows.push_back({s - 1, t - 1, ri.at(2).string(ja[i][2])});
  }
  std::vector<Relation> relations;
  const Reader rr = r.at("relations");
  const auto& jr = rr.array(r.field(j, "relations"));
  for (std::size_t i = 0; i < jr.size(); ++i) {
    const Reader ri = rr.at(i);
    Relation rel;
    for (std::size_t k = 0; k < ri.array(jr[i]).size(); ++k) {
      const Reader rk = ri.at(k);
      rk.only_keys(jr[i][k], {"path", "coeff"});
      rel.push_back({rk.at("path").strings(rk.field(jr[i][k], "path")), rk.at("coeff").integer(rk.field(jr[i][k], "coeff"))});
    }
    relations.push_back(std::move(rel));
  }
  try {
    return Algebra::build(PrimeField(p), Quiver(n, std::move(arrows)), std::move(relations), cap, name);
  } catch (const ContractViolation& e) {
    r.fail(e.what());
  } catch (const InputError& e) {
    r.fail(e.what());
  }
}

SideRole parse_role(const std::string& s, const Reader& r) {
  if (s == "both") return SideRole::both;
  if (s == "contravariant") return SideRole::contravariant;
  if (s == "covariant") return SideRole::covariant;
  r.fail("role must be both, contravariant or covariant");
}

const char* role_name(SideRole role) {
  switch (role) {
    case SideRole::contravariant:
      return "contravariant";
    case SideRole::covariant:
      return "covariant";
    case SideRole::both:
      break;
  }
  return "both";
}

std::vector<Module> resolve_refs(const Workspace& w, const std::vector<std::string>& refs, const Reader& r,
                                 const std::string& owner) {
  std::vector<Module> out;
  for (const auto& ref : refs) {
    if (ref.starts_with("builtin:")) {
      const auto gens = builtin_generators(w.algebra, ref);
      out.insert(out.end(), gens.begin(), gens.end());
    } else if (w.has_module(ref)) {
      out.push_back(w.module(ref));
    } else {
      r.fail(owner + " references unknown module '" + ref + "'");
    }
  }
  if (out.empty()) r.fail(owner + " has no generators");
  for (const auto& m : out) {
    if (m.is_zero()) r.fail(owner + " has a zero generator");
  }
  return out;
}

template <class T>
void check_unique(const std::vector<T>& items, const std::function<std::string(const T&)>& name_of, const Reader& r,
                  const char* kind) {
  std::set<std::string> seen;
  for (const auto& it : items) {
    const auto n = name_of(it);
    if (n.empty()) r.fail(std::string(kind) + " with an empty name");
    if (!seen.insert(n).second) r.fail(std::string("duplicate ") + kind + " '" + n + "'");
  }
}

}  // namespace

Workspace parse_workspace(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("workspace is not valid JSON: ") + e.what());
  }
  const Reader root("$");
  root.only_keys(j, {"schema", "algebra", "settings", "modules", "morphisms", "complexes", "subcategories", "pairs",
                     "cotorsion", "corpus"});
  if (root.at("schema").string(root.field(j, "schema")) != kSchema) {
    root.at("schema").fail(std::string("expected \"") + kSchema + "\"");
  }

  Workspace w;
  w.algebra = parse_algebra(root.field(j, "algebra"), root.at("algebra"));
  const Scalar p = w.algebra->modulus();
  const auto& quiver = w.algebra->quiver();

  if (j.contains("settings")) {
    const Reader r = root.at("settings");
    const auto& js = j["settings"];
    r.only_keys(js, {"depth", "cap", "samples", "seed"});
    if (js.contains("depth")) w.settings.depth = r.at("depth").count(js["depth"]);
    if (js.contains("cap")) w.settings.cap = r.at("cap").count(js["cap"]);
    if (js.contains("samples")) w.settings.samples = r.at("samples").count(js["samples"]);
    if (js.contains("seed")) w.settings.seed = static_cast<std::uint64_t>(r.at("seed").count(js["seed"]));
  }

  auto list = [&](const char* key) -> const Json& {
    static const Json empty = Json::array();
    return j.contains(key) ? root.at(key).array(j[key]) : empty;
  };

  const auto& jm = list("modules");
  for (std::size_t i = 0; i < jm.size(); ++i) {
    const Reader r = root.at("modules").at(i);
    r.only_keys(jm[i], {"name", "dims", "arrows", "origin"});
    const auto name = r.at("name").string(r.field(jm[i], "name"));
    const Reader rn = Reader("module '" + name + "'");
    std::vector<std::size_t> dims;
    const auto& jd = r.at("dims").array(r.field(jm[i], "dims"));
    for (std::size_t v = 0; v < jd.size(); ++v) dims.push_back(r.at("dims").at(v).count(jd[v]));
    if (dims.size() != quiver.vertex_count()) rn.fail("expected " + std::to_string(quiver.vertex_count()) + " dims");
    const auto& jarr = r.field(jm[i], "arrows");
    if (!jarr.is_object()) r.at("arrows").fail("expected an object keyed by arrow label");
    for (const auto& [label, v] : jarr.items()) {
      (void)v;
      try {
        quiver.arrow_index(label);
      } catch (const InputError&) {
        rn.fail("unknown arrow '" + label + "'");
      }
    }
    std::vector<Matrix> actions;
    for (const auto& a : quiver.arrows()) {
      if (!jarr.contains(a.label)) rn.fail("missing matrix for arrow '" + a.label + "'");
      actions.push_back(rn.at("arrow '" + a.label + "'").matrix(jarr[a.label], p, dims[a.target], dims[a.source]));
    }
    Module m(w.algebra, std::move(dims), std::move(actions), name);
    if (auto v = m.relation_violation()) rn.fail(*v);
    std::string origin;
    if (jm[i].contains("origin")) origin = r.at("origin").string(jm[i]["origin"]);
    w.modules.push_back({std::move(m), std::move(origin)});
  }
  check_unique<NamedModule>(w.modules, [](const NamedModule& m) { return m.module.name(); }, root.at("modules"),
                            "module");

  const auto& jf = list("morphisms");
  for (std::size_t i = 0; i < jf.size(); ++i) {
    const Reader r = root.at("morphisms").at(i);
    r.only_keys(jf[i], {"name", "source", "target", "blocks"});
    NamedMorphism f;
    f.name = r.at("name").string(r.field(jf[i], "name"));
    f.source = r.at("source").string(r.field(jf[i], "source"));
    f.target = r.at("target").string(r.field(jf[i], "target"));
    const Reader rn("morphism '" + f.name + "'");
    for (const auto* end : {&f.source, &f.target}) {
      if (!w.has_module(*end)) rn.fail("references unknown module '" + *end + "'");
    }
    const auto& s = w.module(f.source);
    const auto& t = w.module(f.target);
    f.morphism = Morphism(s, t, rn.at("blocks").blocks(r.field(jf[i], "blocks"), s, t));
    if (auto v = f.morphism.intertwining_violation()) rn.fail(*v);
    w.morphisms.push_back(std::move(f));
  }
  check_unique<NamedMorphism>(w.morphisms, [](const NamedMorphism& f) { return f.name; }, root.at("morphisms"),
                              "morphism");

  const auto& jc = list("complexes");
  for (std::size_t i = 0; i < jc.size(); ++i) {
    const Reader r = root.at("complexes").at(i);
    r.only_keys(jc[i], {"name", "lo", "terms", "differentials"});
    NamedComplex c;
    c.name = r.at("name").string(r.field(jc[i], "name"));
    const Reader rn("complex '" + c.name + "'");
    const auto lo = r.at("lo").integer(r.field(jc[i], "lo"));
    c.terms = r.at("terms").strings(r.field(jc[i], "terms"));
    std::vector<Module> terms;
    for (const auto& t : c.terms) {
      if (!w.has_module(t)) rn.fail("references unknown module '" + t + "'");
      terms.push_back(w.module(t));
    }
    const auto& jd = r.at("differentials").array(r.field(jc[i], "differentials"));
    if (jd.size() + 1 != std::max<std::size_t>(terms.size(), 1)) {
      rn.fail("expected " + std::to_string(terms.empty() ? 0 : terms.size() - 1) + " differentials");
    }
    std::vector<Morphism> diffs;
    for (std::size_t k = 0; k < jd.size(); ++k) {
      const Reader rd = rn.at("d^" + std::to_string(lo + static_cast<long long>(k)));
      diffs.emplace_back(terms[k], terms[k + 1], rd.blocks(jd[k], terms[k], terms[k + 1]));
    }
    c.complex = Complex(w.algebra, static_cast<int>(lo), std::move(terms), std::move(diffs));
    if (auto v = c.complex.violation()) rn.fail(*v);
    w.complexes.push_back(std::move(c));
  }
  check_unique<NamedComplex>(w.complexes, [](const NamedComplex& c) { return c.name; }, root.at("complexes"),
                             "complex");

  const auto& jsub = list("subcategories");
  for (std::size_t i = 0; i < jsub.size(); ++i) {
    const Reader r = root.at("subcategories").at(i);
    r.only_keys(jsub[i], {"name", "generators", "role"});
    const auto name = r.at("name").string(r.field(jsub[i], "name"));
    const auto refs = r.at("generators").strings(r.field(jsub[i], "generators"));
    const auto role =
        jsub[i].contains("role") ? parse_role(r.at("role").string(jsub[i]["role"]), r.at("role")) : SideRole::both;
    auto gens = resolve_refs(w, refs, r, "subcategory '" + name + "'");
    w.subcategories.push_back({refs, Subcategory::make(name, std::move(gens), role)});
  }
  check_unique<NamedSubcategory>(w.subcategories, [](const NamedSubcategory& s) { return s.sub.name; },
                                 root.at("subcategories"), "subcategory");

  auto sub_ref = [&](const std::string& name, const Reader& r, const std::string& owner) -> const Subcategory& {
    for (const auto& s : w.subcategories) {
      if (s.sub.name == name) return s.sub;
    }
    r.fail(owner + " references unknown subcategory '" + name + "'");
  };

  const auto& jp = list("pairs");
  for (std::size_t i = 0; i < jp.size(); ++i) {
    const Reader r = root.at("pairs").at(i);
    r.only_keys(jp[i], {"name", "x", "y"});
    NamedPair np;
    const auto name = r.at("name").string(r.field(jp[i], "name"));
    np.x = r.at("x").string(r.field(jp[i], "x"));
    np.y = r.at("y").string(r.field(jp[i], "y"));
    const std::string owner = "pair '" + name + "'";
    np.pair = {name, sub_ref(np.x, r, owner), sub_ref(np.y, r, owner)};
    w.pairs.push_back(std::move(np));
  }
  check_unique<NamedPair>(w.pairs, [](const NamedPair& p) { return p.pair.name; }, root.at("pairs"), "pair");

  const auto& jt = list("cotorsion");
  for (std::size_t i = 0; i < jt.size(); ++i) {
    const Reader r = root.at("cotorsion").at(i);
    r.only_keys(jt[i], {"name", "pair", "c", "d"});
    NamedCotorsion nc;
    const auto name = r.at("name").string(r.field(jt[i], "name"));
    nc.pair = r.at("pair").string(r.field(jt[i], "pair"));
    nc.c = r.at("c").strings(r.field(jt[i], "c"));
    nc.d = r.at("d").strings(r.field(jt[i], "d"));
    const std::string owner = "cotorsion spec '" + name + "'";
    const auto it = std::find_if(w.pairs.begin(), w.pairs.end(), [&](const NamedPair& p) { return p.pair.name == nc.pair; });
    if (it == w.pairs.end()) r.fail(owner + " references unknown pair '" + nc.pair + "'");
    nc.spec = {name, it->pair, Subcategory::make("C{" + joined(nc.c) + "}", resolve_refs(w, nc.c, r.at("c"), owner)),
               Subcategory::make("D{" + joined(nc.d) + "}", resolve_refs(w, nc.d, r.at("d"), owner))};
    w.cotorsion.push_back(std::move(nc));
  }
  check_unique<NamedCotorsion>(w.cotorsion, [](const NamedCotorsion& c) { return c.spec.name; }, root.at("cotorsion"),
                               "cotorsion spec");

  if (j.contains("corpus")) {
    const Reader r = root.at("corpus");
    w.corpus = r.strings(j["corpus"]);
    for (std::size_t i = 0; i < w.corpus.size(); ++i) {
      if (!w.has_module(w.corpus[i])) r.at(i).fail("unknown module '" + w.corpus[i] + "'");
    }
    std::set<std::string> seen(w.corpus.begin(), w.corpus.end());
    if (seen.size() != w.corpus.size()) r.fail("duplicate corpus entry");
  }
  return w;
}

Workspace load_workspace(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read workspace '" + path.string() + "'");
  std::ostringstream text;
  text << in.rdbuf();
  try {
    return parse_workspace(text.str());
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

// ---------------------------------------------------------------------------
// Canonical output

namespace {

Json matrix_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json blocks_json(const Morphism& f) {
  Json out = Json::array();
  for (const auto& b : f.blocks()) out.push_back(matrix_json(b));
  return out;
}

bool is_flat(const Json& j) {
  return std::all_of(j.begin(), j.end(), [](const Json& e) { return e.is_primitive(); });
}

// Like dump(2), except that arrays of scalars stay on one line, so that matrix
// rows read as rows.
void write(std::ostream& os, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) + 2, ' ');
  const std::string close(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    if (j.empty()) {
      os << "{}";
      return;
    }
    os << "{\n";
    std::size_t k = 0;
    for (const auto& [key, v] : j.items()) {
      os << pad << Json(key).dump() << ": ";
      write(os, v, indent + 2);
      os << (++k < j.size() ? ",\n" : "\n");
    }
    os << close << "}";
  } else if (j.is_array()) {
    if (j.empty() || is_flat(j)) {
      os << "[";
      for (std::size_t i = 0; i < j.size(); ++i) os << (i ? ", " : "") << j[i].dump();
      os << "]";
      return;
    }
    os << "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      os << pad;
      write(os, j[i], indent + 2);
      os << (i + 1 < j.size() ? ",\n" : "\n");
    }
    os << close << "]";
  } else {
    os << j.dump();
  }
}

}  // namespace

std::string serialize_workspace(const Workspace& w) {
  const auto& alg = *w.algebra;
  Json j;
  j["schema"] = kSchema;

  Json ja;
  ja["name"] = alg.name();
  ja["p"] = alg.modulus();
  ja["cap"] = alg.cap();
  ja["vertices"] = alg.vertex_count();
  ja["arrows"] = Json::array();
  for (const auto& a : alg.quiver().arrows()) ja["arrows"].push_back(Json::array({a.source + 1, a.target + 1, a.label}));
  ja["relations"] = Json::array();
  for (const auto& rel : alg.relations()) {
    Json jr = Json::array();
    for (const auto& t : rel) {
      Json term;
      term["path"] = t.labels;
      term["coeff"] = t.coeff;
      jr.push_back(std::move(term));
    }
    ja["relations"].push_back(std::move(jr));
  }
  j["algebra"] = std::move(ja);

  Json js;
  js["depth"] = w.settings.depth;
  js["cap"] = w.settings.cap;
  js["samples"] = w.settings.samples;
  js["seed"] = w.settings.seed;
  j["settings"] = std::move(js);

  j["modules"] = Json::array();
  for (const auto& nm : w.modules) {
    Json m;
    m["name"] = nm.module.name();
    m["dims"] = nm.module.dims();
    Json arrows = Json::object();
    for (std::size_t a = 0; a < alg.arrow_count(); ++a) arrows[alg.quiver().arrow(a).label] = matrix_json(nm.module.action(a));
    m["arrows"] = std::move(arrows);
    if (!nm.origin.empty()) m["origin"] = nm.origin;
    j["modules"].push_back(std::move(m));
  }

  j["morphisms"] = Json::array();
  for (const auto& f : w.morphisms) {
    Json m;
    m["name"] = f.name;
    m["source"] = f.source;
    m["target"] = f.target;
    m["blocks"] = blocks_json(f.morphism);
    j["morphisms"].push_back(std::move(m));
  }

  j["complexes"] = Json::array();
  for (const auto& c : w.complexes) {
    Json m;
    m["name"] = c.name;
    m["lo"] = c.complex.lo();
    m["terms"] = c.terms;
    m["differentials"] = Json::array();
    for (int n = c.complex.lo(); n < c.complex.hi(); ++n) m["differentials"].push_back(blocks_json(c.complex.differential(n)));
    j["complexes"].push_back(std::move(m));
  }

  j["subcategories"] = Json::array();
  for (const auto& s : w.subcategories) {
    Json m;
    m["name"] = s.sub.name;
    m["generators"] = s.refs;
    m["role"] = role_name(s.sub.role);
    j["subcategories"].push_back(std::move(m));
  }

  j["pairs"] = Json::array();
  for (const auto& p : w.pairs) {
    Json m;
    m["name"] = p.pair.name;
    m["x"] = p.x;
    m["y"] = p.y;
    j["pairs"].push_back(std::move(m));
  }

  j["cotorsion"] = Json::array();
  for (const auto& c : w.cotorsion) {
    Json m;
    m["name"] = c.spec.name;
    m["pair"] = c.pair;
    m["c"] = c.c;
    m["d"] = c.d;
    j["cotorsion"].push_back(std::move(m));
  }

  j["corpus"] = w.corpus;

  std::ostringstream os;
  write(os, j, 0);
  os << "\n";
  return os.str();
}

void save_workspace(const Workspace& w, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write workspace '" + path.string() + "'");
  out << serialize_workspace(w);
}

// ---------------------------------------------------------------------------
// Builtins

std::vector<Module> default_corpus(const AlgebraPtr& algebra, std::uint64_t seed, std::size_t maps) {
  std::vector<Module> out;
  auto add = [&](const Module& m) {
    if (m.is_zero()) return false;
    for (const auto& o : out) {
      if (isomorphic(o, m)) return false;
    }
    out.push_back(m);
    return true;
  };
  for (const auto& m : simples(algebra)) add(m);
  for (const auto& m : projectives(algebra)) add(m);
  for (const auto& m : injectives(algebra)) add(m);
  Rng rng(seed);
  const auto proj = projectives(algebra);
  std::size_t k = 0;
  for (std::size_t i = 0; i < maps; ++i) {
    const auto& s = proj[rng.below(proj.size())];
    const auto& t = proj[rng.below(proj.size())];
    const auto c = cokernel(random_morphism(rng, s, t)).object;
    if (add(c.named("coker" + std::to_string(k + 1)))) ++k;
  }
  return out;
}

CatalogEntry catalog_entry(const std::string& name, std::size_t cap) {
  static const std::vector<std::pair<std::string, std::string>> descriptions = {
      {"semisimple2", "two vertices, no arrows"},
      {"a2", "1 -> 2"},
      {"a3rad2", "1 -> 2 -> 3, composite zero"},
      {"kx2", "one loop x with x^2 = 0"},
      {"nak_cyc2", "cyclic Nakayama on two vertices, radical square zero"},
  };
  CatalogEntry e;
  e.name = name;
  e.algebra = builtin_algebra(name);
  for (const auto& [n, d] : descriptions) {
    if (n == name) e.description = d;
  }
  const auto proj = projective_subcategory(e.algebra);
  const auto inj = injective_subcategory(e.algebra);
  e.self_injective = proj.contains_injectives && inj.contains_projectives;
  std::size_t gl = 0;
  bool finite = true;
  for (const auto& s : simples(e.algebra)) {
    const auto d = resolution_dimension(s, proj, cap).dimension;
    finite = finite && d.has_value();
    if (d) gl = std::max(gl, *d);
  }
  if (finite) e.global_dimension = gl;
  e.pairs = {"proj"};
  if (e.self_injective) e.pairs.push_back("gproj");
  return e;
}

std::vector<CatalogEntry> builtin_catalog(std::size_t cap) {
  std::vector<CatalogEntry> out;
  for (const auto& n : builtin_algebra_names()) out.push_back(catalog_entry(n, cap));
  return out;
}

Workspace builtin_workspace(const std::string& name, const Settings& settings) {
  const auto entry = catalog_entry(name, settings.cap);
  Workspace w;
  w.algebra = entry.algebra;
  w.settings = settings;

  const auto indecomposables = uniserial_quotients(w.algebra);
  for (const auto& m : indecomposables) w.modules.push_back({m, {}});
  for (const auto& m : default_corpus(w.algebra, settings.seed)) {
    std::string ref;
    for (const auto& nm : w.modules) {
      if (ref.empty() && isomorphic(nm.module, m)) ref = nm.module.name();
    }
    if (ref.empty()) {
      w.modules.push_back({m, {}});
      ref = m.name();
    }
    if (std::find(w.corpus.begin(), w.corpus.end(), ref) == w.corpus.end()) w.corpus.push_back(ref);
  }

  auto add_sub = [&](const std::string& n, const std::string& token, SideRole role) {
    w.subcategories.push_back({{token}, Subcategory::make(n, builtin_generators(w.algebra, token), role)});
  };
  add_sub("proj", "builtin:proj", SideRole::contravariant);
  add_sub("inj", "builtin:inj", SideRole::covariant);
  add_sub("all", "builtin:all", SideRole::both);

  w.pairs.push_back({"proj", "inj", {"proj", w.subcategory("proj"), w.subcategory("inj")}});
  if (entry.self_injective) w.pairs.push_back({"all", "all", {"gproj", w.subcategory("all"), w.subcategory("all")}});

  for (const auto& np : w.pairs) {
    ExtCalculator ext(np.pair, 2);
    for (auto spec : enumerate_cotorsion_pairs(np.pair, indecomposables, ext)) {
      NamedCotorsion nc;
      nc.pair = np.pair.name;
      for (const auto& g : spec.c.generators) nc.c.push_back(g.name());
      for (const auto& g : spec.d.generators) nc.d.push_back(g.name());
      spec.name = np.pair.name + " " + spec.name;
      spec.c.name = "C{" + joined(nc.c) + "}";
      spec.d.name = "D{" + joined(nc.d) + "}";
      nc.spec = std::move(spec);
      w.cotorsion.push_back(std::move(nc));
    }
  }
  return w;
}

}  // namespace relhom
