#include <array>

#include "flagcert/errors.hpp"
#include "flagcert/flags.hpp"

namespace flagcert::types {

namespace {

TypeGraph make(std::string name, int n, std::initializer_list<std::array<int, 3>> edges) {
  std::vector<Triple> list;
  for (const auto& e : edges) list.push_back(make_triple(e[0], e[1], e[2]));
  return TypeGraph{std::move(name), ThreeGraph(n, std::move(list))};
}

// The iota types are the members of F5 with |F6^iota| = 191, 173, 148, 135,
// 124, 95 respectively, each in its lexicographically minimal labelling.
const std::array<TypeGraph, 6>& iotas() {
  static const std::array<TypeGraph, 6> all = {
      make("iota1", 5, {{1, 2, 3}, {1, 2, 4}}),
      make("iota2", 5, {{1, 2, 3}, {1, 4, 5}}),
      make("iota3", 5, {{1, 2, 3}, {1, 2, 4}, {1, 2, 5}}),
      make("iota4", 5, {{1, 2, 3}, {1, 2, 4}, {1, 3, 5}}),
      make("iota5", 5, {{1, 2, 3}, {1, 2, 4}, {3, 4, 5}}),
      make("iota6", 5, {{1, 2, 3}, {1, 2, 4}, {1, 3, 5}, {2, 4, 5}}),
  };
  return all;
}

const std::array<TypeGraph, 3>& sigmas() {
  static const std::array<TypeGraph, 3> all = {
      make("sigma0", 4, {}),
      make("sigma1", 4, {{1, 2, 3}}),
      make("sigma2", 4, {{1, 2, 3}, {1, 2, 4}}),
  };
  return all;
}

}  // namespace

const TypeGraph& empty() {
  static const TypeGraph t = make("empty", 0, {});
  return t;
}

const TypeGraph& tau() {
  static const TypeGraph t = make("tau", 2, {});
  return t;
}

const TypeGraph& sigma(int i) {
  if (i < 0 || i > 2) throw InputError("sigma index must be 0, 1 or 2");
  return sigmas()[static_cast<std::size_t>(i)];
}

const TypeGraph& iota(int i) {
  if (i < 1 || i > 6) throw InputError("iota index must be in 1..6");
  return iotas()[static_cast<std::size_t>(i - 1)];
}

const TypeGraph& by_name(std::string_view name) {
  if (name == "empty") return empty();
  if (name == "tau") return tau();
  for (const auto& t : sigmas())
    if (t.name == name) return t;
  for (const auto& t : iotas())
    if (t.name == name) return t;
  throw InputError("unknown type '" + std::string(name) + "'");
}

std::vector<const TypeGraph*> proof_types() {
  std::vector<const TypeGraph*> out{&tau()};
  for (const auto& t : sigmas()) out.push_back(&t);
  for (const auto& t : iotas()) out.push_back(&t);
  return out;
}

}  // namespace flagcert::types
