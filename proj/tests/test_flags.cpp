#include <doctest.h>

#include <set>
#include <sstream>

#include "flagcert/canonical.hpp"
#include "flagcert/combinatorics.hpp"
#include "flagcert/densities.hpp"
#include "flagcert/errors.hpp"
#include "flagcert/expressions.hpp"
#include "flagcert/flag_io.hpp"
#include "support.hpp"

using namespace flagcert;
using testing::context;

namespace {

ThreeGraph graph(int n, std::initializer_list<std::array<int, 3>> edges) {
  std::vector<Triple> list;
  for (const auto& e : edges) list.push_back(make_triple(e[0], e[1], e[2]));
  return ThreeGraph(n, std::move(list));
}

// True iff vertex image[i] of g carries label i+1 of the type exactly.
bool induces_type(const testing::EdgeTable& g, const ThreeGraph& type, const std::vector<int>& image) {
  const testing::EdgeTable t(type);
  const int s = type.order();
  for (int a = 0; a < s; ++a)
    for (int b = a + 1; b < s; ++b)
      for (int c = b + 1; c < s; ++c)
        if (g(image[a], image[b], image[c]) != t(a + 1, b + 1, c + 1)) return false;
  return true;
}

// Injections of [s] into [n] as 1-based vectors.
std::vector<std::vector<int>> injections(int n, int s) {
  std::vector<std::vector<int>> out;
  for_each_injection(n, s, [&](const int* img) {
    std::vector<int> v(img, img + s);
    for (int& x : v) ++x;
    out.push_back(v);
  });
  return out;
}

// pbar by walking every injection and every ordered pair of disjoint
// extension sets, identifying each side with the basis by its index.
std::vector<std::vector<Rational>> brute_pair_density(const FlagBasis& f1, const FlagBasis& f2, const ThreeGraph& g) {
  const TypeGraph& type = f1.type();
  const int s = type.order(), n = g.order(), k1 = f1.order(), k2 = f2.order();
  const testing::EdgeTable e(g);
  std::vector<std::vector<Rational>> out(f1.size(), std::vector<Rational>(f2.size()));
  std::int64_t total = 0;
  for (const auto& root : injections(n, s)) {
    std::vector<int> rest;
    for (int v = 1; v <= n; ++v)
      if (std::find(root.begin(), root.end(), v) == root.end()) rest.push_back(v);
    const int m = static_cast<int>(rest.size());
    for (int amask = 0; amask < (1 << m); ++amask) {
      if (__builtin_popcount(amask) != k1 - s) continue;
      for (int bmask = 0; bmask < (1 << m); ++bmask) {
        if ((bmask & amask) || __builtin_popcount(bmask) != k2 - s) continue;
        ++total;
        if (!induces_type(e, type.graph, root)) continue;
        auto side = [&](int mask, const FlagBasis& basis) {
          std::vector<int> vs = root;
          for (int i = 0; i < m; ++i)
            if ((mask >> i) & 1) vs.push_back(rest[static_cast<std::size_t>(i)]);
          std::vector<int> r(static_cast<std::size_t>(s));
          std::iota(r.begin(), r.end(), 1);
          return basis.index_of(make_flag(type, induced_subgraph(g, vs), r));
        };
        const int a = side(amask, f1), b = side(bmask, f2);
        REQUIRE(a >= 0);
        REQUIRE(b >= 0);
        out[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] += 1;
      }
    }
  }
  for (auto& row : out)
    for (auto& x : row) x /= total;
  return out;
}

// Fraction of injections of the type that induce it exactly.
Rational brute_type_probability(const TypeGraph& type, const ThreeGraph& g) {
  const testing::EdgeTable e(g);
  std::int64_t hits = 0, total = 0;
  for (const auto& root : injections(g.order(), type.order())) {
    ++total;
    if (induces_type(e, type.graph, root)) ++hits;
  }
  Rational p(hits, total);
  p.canonicalize();
  return p;
}

std::vector<ThreeGraph> sample_f7(std::size_t count) {
  const GraphBasis& f7 = context().graphs(7);
  std::vector<ThreeGraph> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(f7.graph((i * 7919 + 13) % f7.size()));
  return out;
}

}  // namespace

TEST_CASE("flag counts") {
  ProofContext& ctx = context();
  CHECK(ctx.flags(types::tau(), 3).size() == 2);
  const std::array<std::size_t, 6> k = {191, 173, 148, 135, 124, 95};
  for (int i = 1; i <= 6; ++i) CHECK(ctx.flags(types::iota(i), 6).size() == k[static_cast<std::size_t>(i - 1)]);
  const FlagBasis& tau6 = ctx.flags(types::tau(), 6);
  CHECK(tau6.size() == 1643);
  std::size_t fixed = 0;
  for (std::size_t a = 0; a < tau6.size(); ++a)
    if (tau6.index_of(permute_root(tau6.flag(a), {1, 0})) == static_cast<int>(a)) ++fixed;
  CHECK(fixed == 167);
}

TEST_CASE("flag list round trip") {
  const FlagBasis& basis = context().flags(types::sigma(2), 5);
  std::stringstream s;
  write_flag_list(s, basis);
  const auto flags = read_flag_list(s);
  REQUIRE(flags.size() == basis.size());
  for (std::size_t a = 0; a < flags.size(); ++a) CHECK(basis.index_of(flags[a]) == static_cast<int>(a));
  const Flag e = basis.flag(0);
  CHECK(decode_flag(types::sigma(2), encode_flag(e)).graph == e.graph);
}

TEST_CASE("densities: examples") {
  const ThreeGraph edge = graph(3, {{1, 2, 3}});
  CHECK(density(edge, edge) == 1);
  CHECK(density(edge, graph(7, {{3, 5, 6}})) == Rational(1, 35));
  CHECK(density(edge, testing::permuted(graph(6, {{1, 2, 3}, {2, 3, 4}, {3, 4, 5}, {1, 4, 5}, {1, 2, 5},
                                                    {1, 3, 6}, {3, 5, 6}, {2, 5, 6}, {2, 4, 6}, {1, 4, 6}}),
                                          {1, 2, 3, 4, 5, 6})) == Rational(1, 2));
  CHECK(density(graph(7, {}), edge) == 0);
}

TEST_CASE("densities: chain rule F5 -> F6 -> F7 on 50 samples") {
  ProofContext& ctx = context();
  const DensityMatrix five_six(ctx.graphs(5), ctx.graphs(6));
  const DensityMatrix& six_seven = ctx.f6_to_f7();
  const GraphBasis& f5 = ctx.graphs(5);
  const GraphBasis& f6 = ctx.graphs(6);
  const GraphBasis& f7 = ctx.graphs(7);
  for (int k = 0; k < 50; ++k) {
    const int h = testing::uniform(0, static_cast<int>(f5.size()) - 1);
    const int g = testing::uniform(0, static_cast<int>(f7.size()) - 1);
    Rational chained = 0;
    for (std::size_t m = 0; m < f6.size(); ++m)
      chained += five_six.value(h, static_cast<int>(m)) * six_seven.value(static_cast<int>(m), g);
    CHECK(chained == density(f5.graph(static_cast<std::size_t>(h)), f7.graph(static_cast<std::size_t>(g))));
    const int m = testing::uniform(0, static_cast<int>(f6.size()) - 1);
    CHECK(six_seven.value(m, g) == density(f6.graph(static_cast<std::size_t>(m)), f7.graph(static_cast<std::size_t>(g))));
  }
}

TEST_CASE("root probabilities") {
  ProofContext& ctx = context();
  const FlagBasis& tau3 = ctx.flags(types::tau(), 3);
  // every injection of the two labels into a 3-vertex graph lands inside
  // the edge (if any), so both 3-vertex tau-flags have probability 1
  for (const Flag& f : tau3.flags()) CHECK(root_probability(f) == 1);
  const Flag cherry_root = make_flag(types::tau(), graph(4, {{1, 2, 3}, {1, 2, 4}}), {1, 2});
  CHECK(root_probability(cherry_root) == Rational(1, 6));
  CHECK(root_probability(make_flag(types::tau(), ThreeGraph(2), {1, 2})) == 1);

  // summed over the flags of one underlying graph: the chance a random
  // injection induces the type at all
  for (int s = 0; s < 3; ++s) {
    const TypeGraph& type = types::sigma(s);
    const FlagBasis& flags = ctx.flags(type, 5);
    const GraphBasis& f5 = ctx.graphs(5);
    std::vector<Rational> sum(f5.size());
    for (const Flag& f : flags.flags()) sum[static_cast<std::size_t>(f5.index_of(SmallGraph(f.graph)))] += root_probability(f);
    for (std::size_t g = 0; g < f5.size(); ++g) CHECK(sum[g] == brute_type_probability(type, f5.graph(g)));
  }
}

TEST_CASE("pair density: worked example and brute-force oracle") {
  ProofContext& ctx = context();
  const FlagBasis& tau3 = ctx.flags(types::tau(), 3);
  const GraphBasis cherry("cherry", 4, {graph(4, {{1, 2, 3}, {1, 2, 4}})});
  const PairDensityTable table(tau3, tau3, cherry);
  int e = -1;
  for (std::size_t a = 0; a < tau3.size(); ++a)
    if (tau3.flag(a).graph.size() == 1) e = static_cast<int>(a);
  // both free vertices complete the rooted pair to an edge only when the
  // root lands on {1,2}: 2 of the 12 injections
  CHECK(table.value(e, e, 0) == Rational(1, 6));
  CHECK(brute_pair_density(tau3, tau3, cherry.graph(0))[static_cast<std::size_t>(e)][static_cast<std::size_t>(e)] ==
        Rational(1, 6));

  CHECK_THROWS_AS(PairDensityTable(tau3, tau3, ctx.graphs(3)), InputError);

  for (int s = 0; s < 3; ++s) {
    const FlagBasis& f = ctx.flags(types::sigma(s), 5);
    const PairDensityTable& st = ctx.sigma_table(s);
    for (int k = 0; k < 8; ++k) {
      const int g = testing::uniform(0, static_cast<int>(st.target().size()) - 1);
      const auto brute = brute_pair_density(f, f, st.target().graph(static_cast<std::size_t>(g)));
      for (std::size_t a = 0; a < f.size(); ++a)
        for (std::size_t b = 0; b < f.size(); ++b)
          REQUIRE(st.value(static_cast<int>(a), static_cast<int>(b), g) == brute[a][b]);
    }
  }
  // unequal sizes, target above k1 + k2 - s
  const FlagBasis& tau4 = ctx.flags(types::tau(), 4);
  const GraphBasis sample("sample", 7, sample_f7(3));
  const PairDensityTable wide(tau4, tau3, sample);
  for (std::size_t g = 0; g < sample.size(); ++g) {
    const auto brute = brute_pair_density(tau4, tau3, sample.graph(g));
    for (std::size_t a = 0; a < tau4.size(); ++a)
      for (std::size_t b = 0; b < tau3.size(); ++b)
        CHECK(wide.value(static_cast<int>(a), static_cast<int>(b), static_cast<int>(g)) == brute[a][b]);
  }
}

TEST_CASE("pair density: tau table direct over F7 equals composition through F6") {
  ProofContext& ctx = context();
  const FlagBasis& tau4 = ctx.flags(types::tau(), 4);
  const PairDensityTable direct(tau4, tau4, ctx.graphs(7));
  const PairDensityTable base(tau4, tau4, ctx.graphs(6));
  const PairDensityTable composed = PairDensityTable::compose(base, ctx.f6_to_f7());
  CHECK(direct.same_values(composed));
  std::size_t entries = 0;
  for (std::size_t g = 0; g < direct.target().size(); ++g) {
    entries += direct.entries(g).size();
    for (const PairCount& p : direct.entries(g)) CHECK(direct.value(p.a, p.b, static_cast<int>(g)) == direct.value(p.b, p.a, static_cast<int>(g)));
  }
  CHECK(entries > 0);
}

TEST_CASE("pair density: mass conservation for the nine types on 20 graphs of F7") {
  ProofContext& ctx = context();
  const GraphBasis sample("sample", 7, sample_f7(20));
  for (const TypeGraph* type : types::proof_types()) {
    const FlagBasis& f = ctx.flags(*type, type->order() + 1);
    const PairDensityTable table(f, f, sample);
    for (std::size_t g = 0; g < sample.size(); ++g) {
      Rational sum = 0;
      for (std::size_t a = 0; a < f.size(); ++a)
        for (std::size_t b = 0; b < f.size(); ++b) sum += table.value(static_cast<int>(a), static_cast<int>(b), static_cast<int>(g));
      CHECK_MESSAGE(sum == brute_type_probability(*type, sample.graph(g)), type->name);
      CHECK(table.total(static_cast<int>(g)) == sum);
    }
  }
  // the codegree table's own flag sizes
  const PairDensityTable& codegree = ctx.codegree_table();
  for (std::size_t k = 0; k < 20; ++k) {
    const int g = static_cast<int>((k * 409) % codegree.target().size());
    CHECK(codegree.total(g) == brute_type_probability(types::tau(), codegree.target().graph(static_cast<std::size_t>(g))));
  }
}

TEST_CASE("pair density file round trip") {
  const PairDensityTable& table = context().sigma_table(1);
  std::stringstream s;
  write_pair_density(s, table);
  const auto records = read_pair_density(s);
  std::size_t count = 0;
  for (std::size_t g = 0; g < table.target().size(); ++g) count += table.entries(g).size();
  REQUIRE(records.size() == count);
  for (std::size_t r = 0; r < records.size(); r += 97) {
    CHECK(records[r].sigma == "sigma1");
    CHECK(records[r].value == table.value(records[r].f1, records[r].f2, records[r].g));
  }
}

TEST_CASE("target vector") {
  const GraphBasis& f7 = context().graphs(7);
  const LinComb t = target_vector(f7);
  for (std::size_t g = 0; g < f7.size(); ++g) {
    const std::size_t edges = f7.graph(g).size();
    Rational expected(35 - 4 * static_cast<long>(edges), 35);
    expected.canonicalize();
    CHECK(t.coefficient(static_cast<int>(g)) == expected);
    if (edges == 0) CHECK(t.coefficient(static_cast<int>(g)) == 1);
    if (edges == 1) CHECK(t.coefficient(static_cast<int>(g)) == Rational(31, 35));
    if (edges == 15) CHECK(t.coefficient(static_cast<int>(g)) == Rational(-5, 7));
  }
}

TEST_CASE("codegree expressions") {
  ProofContext& ctx = context();
  const auto& exprs = codegree_expressions(ctx);
  CHECK(exprs.size() == 905);
  const PairDensityTable& table = ctx.codegree_table();
  std::vector<Rational> w(table.second().size());
  for (std::size_t b = 0; b < w.size(); ++b) w[b] = table.second().flag(b).graph.size() == 1 ? 3 : -1;
  const auto rows = table.contract_second(w);
  std::size_t pairs = 0, covered = 0;
  for (const auto& e : exprs) {
    covered += e.sources.size();
    CHECK(e.value == rows[static_cast<std::size_t>(e.sources.front())]);
    if (e.sources.size() == 2) {
      ++pairs;
      CHECK(rows[static_cast<std::size_t>(e.sources[0])] == rows[static_cast<std::size_t>(e.sources[1])]);
    }
    CHECK(table.first().index_of(decode_flag(types::tau(), e.id)) == e.sources.front());
  }
  CHECK(pairs == (1643 - 167) / 2);
  CHECK(covered == 1643);
  // F x (3E - N) by hand for one flag
  const int a = exprs[17].sources.front();
  LinComb by_hand(table.target().id(), table.target().size());
  for (std::size_t b = 0; b < w.size(); ++b) by_hand.add_scaled(table.product(a, static_cast<int>(b)), w[b]);
  CHECK(by_hand == exprs[17].value);
}

TEST_CASE("tight paths") {
  ProofContext& ctx = context();
  const auto sets = tight_path_flag_sets(ctx);
  CHECK(sets[0].size() == 6);
  for (int i = 0; i < 3; ++i) {
    const FlagBasis& basis = ctx.flags(types::sigma(i), 5);
    for (std::size_t a = 0; a < basis.size(); ++a) {
      // independent check on the 1-based graph with the root on 1..4
      const Flag& f = basis.flag(a);
      const testing::EdgeTable e(f.graph);
      std::vector<int> order = {1, 2, 3, 4, 5};
      bool found = false;
      do {
        const std::set<int> first = {order[0], order[1], order[2]}, last = {order[2], order[3], order[4]};
        if (e(order[0], order[1], order[2]) && e(order[1], order[2], order[3]) && e(order[2], order[3], order[4]) &&
            first.count(f.root[0]) && first.count(f.root[1]) && last.count(f.root[2]) && last.count(f.root[3]))
          found = true;
      } while (!found && std::next_permutation(order.begin(), order.end()));
      const bool member = std::find(sets[i].begin(), sets[i].end(), static_cast<int>(a)) != sets[i].end();
      CHECK(member == found);
    }
  }
}

TEST_CASE("tight-path expressions") {
  ProofContext& ctx = context();
  const auto sets = tight_path_flag_sets(ctx);
  const GraphBasis& f7 = ctx.graphs(7);
  for (int i = 0; i < 3; ++i) {
    const PairDensityTable& st = ctx.sigma_table(i);
    const std::size_t k = st.first().size();
    std::vector<Rational> sixteen(k, Rational(-1)), fifteen(k, Rational(-1));
    for (int a : sets[i]) {
      sixteen[static_cast<std::size_t>(a)] += 16;
      fifteen[static_cast<std::size_t>(a)] = 15;
    }
    const LinComb p = tight_path_expression(ctx, i);
    CHECK(ctx.f6_to_f7().lift(st.bilinear(sixteen, sixteen)) == p);
    CHECK(ctx.f6_to_f7().lift(st.bilinear(fifteen, fifteen)) == p);
    CHECK(tight_path_expression(ctx, i, sets[i]) == p);

    // no copy of sigma_i, no coefficient
    for (std::size_t g = 0; g < f7.size(); g += 7)
      if (brute_type_probability(types::sigma(i), f7.graph(g)) == 0) CHECK(p.coefficient(static_cast<int>(g)) == 0);

    // the quadratic form w w^T is non-negative on empirical flag vectors
    const TypeGraph& type = types::sigma(i);
    for (const ThreeGraph& g : sample_f7(10)) {
      const testing::EdgeTable e(g);
      for (const auto& root : injections(7, 4)) {
        if (!induces_type(e, type.graph, root)) continue;
        const auto x = rooted_density_vector(g, root, st.first());
        Rational form = 0, linear = 0;
        for (std::size_t a = 0; a < k; ++a) {
          linear += sixteen[a] * x[a];
          for (std::size_t b = 0; b < k; ++b) form += sixteen[a] * sixteen[b] * x[a] * x[b];
        }
        CHECK(form >= 0);
        CHECK(form == linear * linear);
      }
    }
  }
}

TEST_CASE("expression file round trip") {
  ProofContext& ctx = context();
  const auto& exprs = codegree_expressions(ctx);
  std::vector<NamedLinComb> named;
  for (std::size_t e = 0; e < 5; ++e) named.push_back({exprs[e].id, exprs[e].value});
  std::stringstream s;
  write_expressions(s, named);
  const auto back = read_expressions(s);
  REQUIRE(back.size() == named.size());
  for (std::size_t e = 0; e < back.size(); ++e) {
    CHECK(back[e].name == named[e].name);
    CHECK(back[e].value == named[e].value);
  }
}
