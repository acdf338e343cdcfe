#include "relhom/catalog.hpp"

#include "relhom/errors.hpp"

namespace relhom {

std::vector<std::string> builtin_algebra_names() { return {"semisimple2", "a2", "a3rad2", "kx2", "nak_cyc2"}; }

AlgebraPtr builtin_algebra(const std::string& name, Scalar p, std::size_t cap) {
  PrimeField field(p);
  auto rel = [](std::vector<std::string> labels) { return Relation{RelationTerm{std::move(labels), 1}}; };
  if (name == "semisimple2") return Algebra::build(field, Quiver(2, {}), {}, cap, name);
  if (name == "a2") return Algebra::build(field, Quiver(2, {{0, 1, "a"}}), {}, cap, name);
  if (name == "a3rad2") {
    return Algebra::build(field, Quiver(3, {{0, 1, "a"}, {1, 2, "b"}}), {rel({"a", "b"})}, cap, name);
  }
  if (name == "kx2") return Algebra::build(field, Quiver(1, {{0, 0, "x"}}), {rel({"x", "x"})}, cap, name);
  if (name == "nak_cyc2") {
    return Algebra::build(field, Quiver(2, {{0, 1, "a"}, {1, 0, "b"}}), {rel({"a", "b"}), rel({"b", "a"})}, cap, name);
  }
  throw InputError("unknown builtin algebra '" + name + "'");
}

std::vector<Module> uniserial_quotients(const AlgebraPtr& algebra) {
  std::vector<Module> out;
  for (std::size_t v = 0; v < algebra->vertex_count(); ++v) {
    const auto p = projective(algebra, v);
    for (std::size_t k = 1;; ++k) {
      auto q = radical_quotient(p, k).object;
      const bool whole = q.total_dim() == p.total_dim();
      if (k == 1) q.set_name("S" + std::to_string(v + 1));
      else if (whole) q.set_name(p.name());
      else q.set_name(p.name() + "/rad" + std::to_string(k));
      bool seen = false;
      for (const auto& m : out) seen = seen || isomorphic(m, q);
      if (!seen) out.push_back(q);
      if (whole) break;
    }
  }
  return out;
}

}  // namespace relhom
