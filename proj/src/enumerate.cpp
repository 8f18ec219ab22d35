#include "flagcert/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <utility>

#include "flagcert/errors.hpp"

namespace flagcert {

namespace {

struct LinkSearch {
  const SmallGraph& parent;
  int p;  // new vertex
  std::vector<std::pair<int, int>> pairs;
  std::uint16_t link[16] = {};  // link[x] = neighbours of x in the link of p
  const std::function<void(const SmallGraph&)>& visit;

  void run(std::size_t i) {
    if (i == pairs.size()) {
      SmallGraph grown(p + 1);
      for (int a = 0; a < p; ++a)
        for (int b = a + 1; b < p; ++b) {
          const std::uint16_t m = parent.common(a, b);
          for (int c = b + 1; c < p; ++c)
            if ((m >> c) & 1u) grown.add_edge(a, b, c);
        }
      for (const auto& [x, y] : pairs)
        if ((link[x] >> y) & 1u) grown.add_edge(x, y, p);
      visit(grown);
      return;
    }
    run(i + 1);
    const auto [x, y] = pairs[i];
    // Link must stay triangle-free.
    if (link[x] & link[y]) return;
    // An old edge xyz may meet the link in at most one pair.
    const std::uint16_t z_mask = parent.common(x, y);
    if (z_mask & (link[x] | link[y])) return;
    link[x] |= static_cast<std::uint16_t>(1u << y);
    link[y] |= static_cast<std::uint16_t>(1u << x);
    run(i + 1);
    link[x] &= static_cast<std::uint16_t>(~(1u << y));
    link[y] &= static_cast<std::uint16_t>(~(1u << x));
  }
};

}  // namespace

void for_each_free_extension(const SmallGraph& parent,
                             const std::function<void(const SmallGraph&)>& visit) {
  LinkSearch search{parent, parent.order(), {}, {}, visit};
  for (int x = 0; x < parent.order(); ++x)
    for (int y = x + 1; y < parent.order(); ++y) search.pairs.emplace_back(x, y);
  search.run(0);
}

std::vector<ThreeGraph> enumerate_free(int k) {
  if (k < 1) throw InputError("enumerate_free: k must be at least 1");
  if (k > kMaxEnumerationOrder) {
    throw CostGuardError("enumerate_free: k > 7 exceeds the enumeration cost guard");
  }
  std::vector<SmallGraph> level{SmallGraph(1)};
  for (int order = 2; order <= k; ++order) {
    std::vector<Code128> next;
    for (const SmallGraph& parent : level) {
      for_each_free_extension(parent,
                              [&](const SmallGraph& child) { next.push_back(canonical_code(child)); });
    }
    // Descending code is ascending edge sequence within one edge count.
    std::sort(next.begin(), next.end(), std::greater<>());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    level.clear();
    level.reserve(next.size());
    for (Code128 code : next) level.push_back(SmallGraph::from_code(order, code));
  }
  std::vector<ThreeGraph> out;
  out.reserve(level.size());
  for (const SmallGraph& g : level) out.push_back(g.to_three_graph());
  std::sort(out.begin(), out.end(), [](const ThreeGraph& a, const ThreeGraph& b) {
    return compare_graphs(a, b) < 0;
  });
  return out;
}

GraphBasis::GraphBasis(std::string id, int order, std::vector<ThreeGraph> graphs)
    : id_(std::move(id)), order_(order), graphs_(std::move(graphs)) {
  small_.reserve(graphs_.size());
  for (std::size_t i = 0; i < graphs_.size(); ++i) {
    if (graphs_[i].order() != order_) throw InputError("basis graph has wrong order");
    small_.emplace_back(graphs_[i]);
    const Code128 code = canonical_code(small_.back());
    if (!index_.emplace(code, static_cast<int>(i)).second) {
      throw InputError("basis " + id_ + " contains two isomorphic graphs");
    }
  }
}

GraphBasis GraphBasis::free_graphs(int k) {
  return GraphBasis("F" + std::to_string(k), k, enumerate_free(k));
}

int GraphBasis::index_of(const SmallGraph& g) const {
  if (g.order() != order_) return -1;
  return index_of_code(canonical_code(g));
}

int GraphBasis::index_of_code(Code128 canonical) const {
  const auto it = index_.find(canonical);
  return it == index_.end() ? -1 : it->second;
}

}  // namespace flagcert
