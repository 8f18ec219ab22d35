#include "flagcert/flags.hpp"

#include <algorithm>
#include <set>

#include "flagcert/canonical.hpp"
#include "flagcert/combinatorics.hpp"
#include "flagcert/errors.hpp"
#include "flagcert/graph_io.hpp"

namespace flagcert {

Flag make_flag(const TypeGraph& type, ThreeGraph graph, std::vector<int> root) {
  if (static_cast<int>(root.size()) != type.order()) {
    throw InputError("flag root has " + std::to_string(root.size()) + " vertices, type " + type.name +
                     " has " + std::to_string(type.order()));
  }
  // induced_subgraph rejects duplicate and out-of-range root vertices.
  if (induced_subgraph(graph, root) != type.graph) {
    throw InputError("flag root does not induce type " + type.name);
  }
  if (!is_k4minus_free(graph)) throw InputError("flag graph contains K4-");
  return Flag{&type, std::move(graph), std::move(root)};
}

SmallGraph rooted_small_graph(const Flag& f) {
  const int n = f.order();
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n));
  std::vector<bool> in_root(static_cast<std::size_t>(n) + 1, false);
  for (int v : f.root) {
    order.push_back(v - 1);
    in_root[v] = true;
  }
  for (int v = 1; v <= n; ++v)
    if (!in_root[v]) order.push_back(v - 1);
  return SmallGraph(f.graph).induced(order.data(), n);
}

Code128 flag_code(const Flag& f) {
  return canonical_labelling(rooted_small_graph(f), static_cast<int>(f.root.size())).code;
}

Flag permute_root(const Flag& f, const std::vector<int>& perm) {
  if (perm.size() != f.root.size()) throw InputError("root permutation has wrong length");
  std::vector<int> root(f.root.size());
  for (std::size_t i = 0; i < perm.size(); ++i) root[i] = f.root.at(static_cast<std::size_t>(perm[i]));
  return make_flag(*f.type, f.graph, std::move(root));
}

std::string encode_flag(const Flag& f) {
  std::string out = encode_graph(f.graph) + "|root=";
  for (int v : f.root) out += std::to_string(v);
  return out;
}

Flag decode_flag(const TypeGraph& type, std::string_view text) {
  const auto bar = text.find("|root=");
  if (bar == std::string_view::npos) throw InputError("flag '" + std::string(text) + "' lacks '|root='");
  ThreeGraph g = decode_graph(text.substr(0, bar));
  std::vector<int> root;
  for (char ch : text.substr(bar + 6)) {
    if (ch < '1' || ch > '9') throw InputError("flag '" + std::string(text) + "': bad root digit");
    root.push_back(ch - '0');
  }
  return make_flag(type, std::move(g), std::move(root));
}

FlagBasis::FlagBasis(const TypeGraph& type, int order, std::vector<Flag> flags)
    : type_(&type), order_(order), flags_(std::move(flags)) {
  for (std::size_t i = 0; i < flags_.size(); ++i) {
    if (flags_[i].type != type_ || flags_[i].order() != order_) {
      throw InputError("flag basis " + id() + " contains a foreign flag");
    }
    if (!index_.emplace(flag_code(flags_[i]), static_cast<int>(i)).second) {
      throw InputError("flag basis " + id() + " contains two isomorphic flags");
    }
  }
}

int FlagBasis::index_of_rooted(const SmallGraph& g) const {
  if (g.order() != order_) return -1;
  return index_of_code(canonical_labelling(g, type_->order()).code);
}

int FlagBasis::index_of_code(Code128 code) const {
  const auto it = index_.find(code);
  return it == index_.end() ? -1 : it->second;
}

FlagBasis generate_flags(const TypeGraph& sigma, const GraphBasis& graphs) {
  const int s = sigma.order();
  const int k = graphs.order();
  if (s > k) throw InputError("generate_flags: type larger than flag size");
  const Code128 type_code = SmallGraph(sigma.graph).code();

  std::set<Code128> codes;
  std::vector<int> order(static_cast<std::size_t>(k));
  for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
    const SmallGraph& g = graphs.small(gi);
    for_each_injection(k, s, [&](const int* image) {
      if (g.induced(image, s).code() != type_code) return;
      std::uint32_t used = 0;
      for (int i = 0; i < s; ++i) {
        order[i] = image[i];
        used |= 1u << image[i];
      }
      int pos = s;
      for (int v = 0; v < k; ++v)
        if (!((used >> v) & 1u)) order[pos++] = v;
      codes.insert(canonical_labelling(g.induced(order.data(), k), s).code);
    });
  }

  std::vector<int> root(static_cast<std::size_t>(s));
  for (int i = 0; i < s; ++i) root[i] = i + 1;
  std::vector<Flag> flags;
  flags.reserve(codes.size());
  for (Code128 code : codes) {
    flags.push_back(Flag{&sigma, SmallGraph::from_code(k, code).to_three_graph(), root});
  }
  std::sort(flags.begin(), flags.end(),
            [](const Flag& a, const Flag& b) { return compare_graphs(a.graph, b.graph) < 0; });
  return FlagBasis(sigma, k, std::move(flags));
}

FlagBasis generate_flags(const TypeGraph& sigma, int k) {
  if (k < sigma.order() || k > kMaxEnumerationOrder) {
    throw InputError("generate_flags: need v(sigma) <= k <= 7");
  }
  return generate_flags(sigma, GraphBasis::free_graphs(k));
}

Rational root_probability(const Flag& f) {
  const int s = static_cast<int>(f.root.size());
  const int n = f.order();
  const Code128 target = flag_code(f);
  const Code128 type_code = SmallGraph(f.type->graph).code();
  const SmallGraph g(f.graph);
  std::vector<int> order(static_cast<std::size_t>(n));
  std::uint64_t hits = 0;
  for_each_injection(n, s, [&](const int* image) {
    if (g.induced(image, s).code() != type_code) return;
    std::uint32_t used = 0;
    for (int i = 0; i < s; ++i) {
      order[i] = image[i];
      used |= 1u << image[i];
    }
    int pos = s;
    for (int v = 0; v < n; ++v)
      if (!((used >> v) & 1u)) order[pos++] = v;
    if (canonical_labelling(g.induced(order.data(), n), s).code == target) ++hits;
  });
  Rational p(static_cast<unsigned long>(hits), static_cast<unsigned long>(falling_factorial(n, s)));
  p.canonicalize();
  return p;
}

}  // namespace flagcert
