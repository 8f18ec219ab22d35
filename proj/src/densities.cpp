#include "flagcert/densities.hpp"

#include <algorithm>
#include <map>

#include "flagcert/canonical.hpp"
#include "flagcert/combinatorics.hpp"
#include "flagcert/errors.hpp"
#include "flagcert/parallel.hpp"

namespace flagcert {

namespace {

// Writes the vertices of `mask` in increasing order to out; returns the count.
int bits_to_list(std::uint32_t mask, int* out) {
  int k = 0;
  while (mask) {
    out[k++] = __builtin_ctz(mask);
    mask &= mask - 1;
  }
  return k;
}

Rational ratio(std::int64_t num, std::int64_t den) {
  Rational r(static_cast<long>(num), static_cast<unsigned long>(den));
  r.canonicalize();
  return r;
}

}  // namespace

Rational density(const ThreeGraph& h, const ThreeGraph& g) {
  const int k = h.order(), n = g.order();
  if (k > n) return 0;
  if (n > 16) throw CostGuardError("density: host graph limited to 16 vertices");
  const Code128 target = canonical_code(SmallGraph(h));
  const SmallGraph host(g);
  std::uint64_t hits = 0;
  int verts[16];
  for_each_subset_of_size((n == 32 ? ~0u : (1u << n) - 1u), k, [&](std::uint32_t sub) {
    bits_to_list(sub, verts);
    if (canonical_code(host.induced(verts, k)) == target) ++hits;
  });
  return ratio(static_cast<std::int64_t>(hits), static_cast<std::int64_t>(binomial(n, k)));
}

std::vector<Rational> rooted_density_vector(const ThreeGraph& g, const std::vector<int>& root,
                                            const FlagBasis& flags) {
  const int s = flags.type().order(), k = flags.order(), n = g.order();
  if (static_cast<int>(root.size()) != s) throw InputError("root size does not match type");
  if (induced_subgraph(g, root) != flags.type().graph) throw InputError("root does not induce the type");
  if (n > 16) throw CostGuardError("rooted_density_vector: host graph limited to 16 vertices");
  const SmallGraph host(g);
  std::uint32_t pool = (1u << n) - 1u;
  int order[16];
  for (int i = 0; i < s; ++i) {
    order[i] = root[i] - 1;
    pool &= ~(1u << (root[i] - 1));
  }
  std::vector<std::int64_t> counts(flags.size(), 0);
  for_each_subset_of_size(pool, k - s, [&](std::uint32_t sub) {
    bits_to_list(sub, order + s);
    const int idx = flags.index_of_rooted(host.induced(order, k));
    if (idx < 0) throw InputError("extension is not a flag of the basis");
    ++counts[idx];
  });
  const auto den = static_cast<std::int64_t>(binomial(n - s, k - s));
  std::vector<Rational> out;
  out.reserve(counts.size());
  for (std::int64_t c : counts) out.push_back(ratio(c, den));
  return out;
}

DensityMatrix::DensityMatrix(const GraphBasis& from, const GraphBasis& to)
    : from_(&from), to_(&to), denominator_(binomial(to.order(), from.order())), columns_(to.size()) {
  const int k = from.order(), n = to.order();
  if (k > n) throw InputError("DensityMatrix: source basis larger than target");
  parallel_for(to.size(), [&](std::size_t gi) {
    const SmallGraph& g = to.small(gi);
    std::map<int, std::int64_t> counts;
    int verts[16];
    for_each_subset_of_size((1u << n) - 1u, k, [&](std::uint32_t sub) {
      bits_to_list(sub, verts);
      const int h = from.index_of(g.induced(verts, k));
      if (h < 0) throw InputError("subgraph missing from basis " + from.id());
      ++counts[h];
    });
    columns_[gi].assign(counts.begin(), counts.end());
  });
}

Rational DensityMatrix::value(int h, int g) const {
  for (const auto& [idx, count] : columns_.at(static_cast<std::size_t>(g))) {
    if (idx == h) return ratio(count, static_cast<std::int64_t>(denominator_));
  }
  return 0;
}

LinComb DensityMatrix::lift(const LinComb& over_from) const {
  if (over_from.basis_id() != from_->id()) throw InputError("lift: LinComb is not over " + from_->id());
  LinComb out(to_->id(), to_->size());
  const Rational den(static_cast<unsigned long>(denominator_));
  for (std::size_t g = 0; g < columns_.size(); ++g) {
    Rational sum = 0;
    for (const auto& [h, count] : columns_[g]) {
      const auto it = over_from.terms().find(h);
      if (it != over_from.terms().end()) sum += it->second * static_cast<long>(count);
    }
    if (sum != 0) out.set(static_cast<int>(g), sum / den);
  }
  return out;
}

PairDensityTable::PairDensityTable(const FlagBasis& first, const FlagBasis& second, const GraphBasis& target)
    : first_(&first), second_(&second), target_(&target), by_graph_(target.size()) {
  if (&first.type() != &second.type()) throw InputError("pair density: flags of different types");
  const int s = first.type().order();
  const int k1 = first.order(), k2 = second.order(), n = target.order();
  if (k1 + k2 - s > n) throw InputError("pair density: target graphs too small for this flag pair");
  if (n > kMaxEnumerationOrder) throw CostGuardError("pair density: target beyond 7 vertices");
  denominator_ = static_cast<std::int64_t>(falling_factorial(n, s) * binomial(n - s, k1 - s) *
                                           binomial(n - k1, k2 - s));
  const Code128 type_code = SmallGraph(first.type().graph).code();
  const std::uint32_t all = (1u << n) - 1u;

  parallel_for(target.size(), [&](std::size_t gi) {
    const SmallGraph& g = target.small(gi);
    std::vector<std::int64_t> keys;
    std::vector<int> first_cache(std::size_t{1} << n), second_cache(std::size_t{1} << n);
    int order[16];
    for_each_injection(n, s, [&](const int* image) {
      if (g.induced(image, s).code() != type_code) return;
      std::uint32_t pool = all;
      for (int i = 0; i < s; ++i) {
        order[i] = image[i];
        pool &= ~(1u << image[i]);
      }
      std::fill(first_cache.begin(), first_cache.end(), -2);
      std::fill(second_cache.begin(), second_cache.end(), -2);
      auto lookup = [&](const FlagBasis& basis, std::vector<int>& cache, std::uint32_t part) {
        int& slot = cache[part];
        if (slot == -2) {
          const int size = s + bits_to_list(part, order + s);
          slot = basis.index_of_rooted(g.induced(order, size));
          if (slot < 0) throw InputError("pair density: extension missing from " + basis.id());
        }
        return slot;
      };
      for_each_subset_of_size(pool, k1 - s, [&](std::uint32_t part_a) {
        const int a = lookup(first, first_cache, part_a);
        for_each_subset_of_size(pool & ~part_a, k2 - s, [&](std::uint32_t part_b) {
          const int b = lookup(second, second_cache, part_b);
          keys.push_back(static_cast<std::int64_t>(a) * static_cast<std::int64_t>(second.size()) + b);
        });
      });
    });
    std::sort(keys.begin(), keys.end());
    auto& out = by_graph_[gi];
    for (std::size_t i = 0; i < keys.size();) {
      std::size_t j = i;
      while (j < keys.size() && keys[j] == keys[i]) ++j;
      out.push_back(PairCount{static_cast<std::int32_t>(keys[i] / static_cast<std::int64_t>(second.size())),
                              static_cast<std::int32_t>(keys[i] % static_cast<std::int64_t>(second.size())),
                              static_cast<std::int64_t>(j - i)});
      i = j;
    }
  });
}

PairDensityTable PairDensityTable::compose(const PairDensityTable& base, const DensityMatrix& lift) {
  if (base.target().id() != lift.from().id()) {
    throw InputError("compose: table over " + base.target().id() + " but lift from " + lift.from().id());
  }
  PairDensityTable out;
  out.first_ = base.first_;
  out.second_ = base.second_;
  out.target_ = &lift.to();
  out.denominator_ = base.denominator_ * static_cast<std::int64_t>(lift.denominator());
  out.by_graph_.resize(lift.to().size());
  parallel_for(lift.to().size(), [&](std::size_t g) {
    std::map<std::pair<int, int>, std::int64_t> acc;
    for (const auto& [h, weight] : lift.column(g)) {
      for (const PairCount& e : base.entries(static_cast<std::size_t>(h))) acc[{e.a, e.b}] += weight * e.count;
    }
    for (const auto& [key, count] : acc) out.by_graph_[g].push_back(PairCount{key.first, key.second, count});
  });
  return out;
}

Rational PairDensityTable::value(int a, int b, int g) const {
  const auto& list = by_graph_.at(static_cast<std::size_t>(g));
  const auto it = std::lower_bound(list.begin(), list.end(), std::pair{a, b}, [](const PairCount& e, auto key) {
    return std::pair{e.a, e.b} < key;
  });
  if (it == list.end() || it->a != a || it->b != b) return 0;
  return ratio(it->count, denominator_);
}

LinComb PairDensityTable::product(int a, int b) const {
  LinComb out(target_->id(), target_->size());
  for (std::size_t g = 0; g < by_graph_.size(); ++g) {
    const Rational v = value(a, b, static_cast<int>(g));
    if (v != 0) out.set(static_cast<int>(g), v);
  }
  return out;
}

LinComb PairDensityTable::quadratic(const std::vector<std::vector<Rational>>& m) const {
  if (m.size() != first_->size()) throw InputError("quadratic: matrix row count does not match flags");
  for (const auto& row : m)
    if (row.size() != second_->size()) throw InputError("quadratic: matrix column count does not match flags");
  LinComb out(target_->id(), target_->size());
  std::vector<Rational> sums(by_graph_.size());
  parallel_for(by_graph_.size(), [&](std::size_t g) {
    Rational sum = 0;
    for (const PairCount& e : by_graph_[g]) {
      const Rational& w = m[static_cast<std::size_t>(e.a)][static_cast<std::size_t>(e.b)];
      if (w != 0) sum += w * static_cast<long>(e.count);
    }
    sums[g] = sum;
  });
  const Rational den(static_cast<unsigned long>(denominator_));
  for (std::size_t g = 0; g < sums.size(); ++g)
    if (sums[g] != 0) out.set(static_cast<int>(g), sums[g] / den);
  return out;
}

LinComb PairDensityTable::bilinear(const std::vector<Rational>& u, const std::vector<Rational>& v) const {
  if (u.size() != first_->size() || v.size() != second_->size()) {
    throw InputError("bilinear: vector sizes do not match flags");
  }
  LinComb out(target_->id(), target_->size());
  const Rational den(static_cast<unsigned long>(denominator_));
  for (std::size_t g = 0; g < by_graph_.size(); ++g) {
    Rational sum = 0;
    for (const PairCount& e : by_graph_[g]) sum += u[e.a] * v[e.b] * static_cast<long>(e.count);
    if (sum != 0) out.set(static_cast<int>(g), sum / den);
  }
  return out;
}

std::vector<LinComb> PairDensityTable::contract_second(const std::vector<Rational>& v) const {
  if (v.size() != second_->size()) throw InputError("contract_second: vector size does not match flags");
  std::vector<std::map<int, Rational>> rows(first_->size());
  for (std::size_t g = 0; g < by_graph_.size(); ++g) {
    for (const PairCount& e : by_graph_[g]) {
      if (v[e.b] != 0) rows[e.a][static_cast<int>(g)] += v[e.b] * static_cast<long>(e.count);
    }
  }
  const Rational den(static_cast<unsigned long>(denominator_));
  std::vector<LinComb> out;
  out.reserve(rows.size());
  for (const auto& row : rows) {
    LinComb lc(target_->id(), target_->size());
    for (const auto& [g, sum] : row)
      if (sum != 0) lc.set(g, sum / den);
    out.push_back(std::move(lc));
  }
  return out;
}

Rational PairDensityTable::total(int g) const {
  std::int64_t sum = 0;
  for (const PairCount& e : by_graph_.at(static_cast<std::size_t>(g))) sum += e.count;
  return ratio(sum, denominator_);
}

bool PairDensityTable::same_values(const PairDensityTable& other) const {
  if (by_graph_.size() != other.by_graph_.size()) return false;
  const Integer d1(static_cast<long>(denominator_)), d2(static_cast<long>(other.denominator_));
  for (std::size_t g = 0; g < by_graph_.size(); ++g) {
    const auto& x = by_graph_[g];
    const auto& y = other.by_graph_[g];
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i].a != y[i].a || x[i].b != y[i].b) return false;
      if (Integer(static_cast<long>(x[i].count)) * d2 != Integer(static_cast<long>(y[i].count)) * d1) return false;
    }
  }
  return true;
}

}  // namespace flagcert
