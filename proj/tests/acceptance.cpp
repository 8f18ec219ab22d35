// Acceptance report: one PASS/FAIL line per criterion.
//
//   acceptance [--known-failure N]... [--certificate FILE]
//
// Exit status is 0 when every failing criterion was listed as known.
// Criterion 7 runs the named property cases from the unit suites linked
// into this binary.

#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "flagcert/canonical.hpp"
#include "flagcert/certificate.hpp"
#include "flagcert/constructions.hpp"
#include "flagcert/enumerate.hpp"
#include "flagcert/matrix.hpp"
#include "support.hpp"

using namespace flagcert;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

template <class T>
std::string join(const T& values) {
  std::ostringstream s;
  s << "(";
  bool first = true;
  for (const auto& v : values) {
    s << (first ? "" : ",") << v;
    first = false;
  }
  s << ")";
  return s.str();
}

Outcome enumeration() {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  const auto f7 = enumerate_free(7);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::map<std::size_t, std::size_t> histogram;
  for (const auto& g : f7) ++histogram[g.size()];
  const std::map<std::size_t, std::size_t> expected = {{0, 1},     {1, 1},     {2, 3},    {3, 9},    {4, 32},
                                                       {5, 102},   {6, 304},   {7, 752},  {8, 1451}, {9, 2022},
                                                       {10, 1909}, {11, 1118}, {12, 374}, {13, 70},  {14, 8},
                                                       {15, 1}};
  out.require(f7.size() == 8157, "|F7| = " + std::to_string(f7.size()));
  out.require(histogram == expected, "edge histogram differs");
  out.require(seconds < 120, "took " + std::to_string(seconds) + " s");
  std::ostringstream d;
  d << "|F7| = " << f7.size() << ", histogram matches, " << seconds << " s";
  if (out.pass) out.detail = d.str();
  return out;
}

Outcome flag_counts() {
  Outcome out;
  ProofContext& ctx = testing::context();
  std::vector<std::size_t> k;
  for (int i = 1; i <= 6; ++i) k.push_back(ctx.flags(types::iota(i), 6).size());
  out.require(k == std::vector<std::size_t>{191, 173, 148, 135, 124, 95}, "k = " + join(k));
  const FlagBasis& tau6 = ctx.flags(types::tau(), 6);
  std::size_t fixed = 0;
  for (std::size_t a = 0; a < tau6.size(); ++a)
    if (tau6.index_of(permute_root(tau6.flag(a), {1, 0})) == static_cast<int>(a)) ++fixed;
  out.require(tau6.size() == 1643, "|F6^tau| = " + std::to_string(tau6.size()));
  out.require(fixed == 167, std::to_string(fixed) + " swap-symmetric flags");
  const std::size_t d = codegree_expressions(ctx).size();
  out.require(d == 905, "|D| = " + std::to_string(d));
  if (out.pass)
    out.detail = "k = " + join(k) + ", |F6^tau| = 1643 with 167 symmetric, |D| = " + std::to_string(d);
  return out;
}

Outcome tight_paths() {
  Outcome out;
  const auto sets = tight_path_flag_sets(testing::context());
  std::vector<std::size_t> sizes;
  for (const auto& s : sets) sizes.push_back(s.size());
  out.require(sizes == std::vector<std::size_t>{6, 2, 2},
              "sizes " + join(sizes) + " from the tight-path definition, expected (6,2,2); see README");
  if (out.pass) out.detail = "sizes (6,2,2)";
  return out;
}

Outcome tournament_side() {
  Outcome out;
  const std::size_t tournaments = enumerate_tournaments(7).size();
  const auto mask = realizable_mask(testing::context().graphs(7));
  const auto realizable = std::count(mask.begin(), mask.end(), true);
  std::vector<int> dims;
  for (int i = 1; i <= 6; ++i) dims.push_back(iota_dimension(testing::context().flags(types::iota(i), 6)).rank);
  out.require(tournaments == 456, std::to_string(tournaments) + " tournaments");
  out.require(realizable == 247, std::to_string(realizable) + " realizable");
  out.require(dims == std::vector<int>{4, 0, 6, 1, 0, 1}, "iota dimensions " + join(dims));
  if (out.pass) out.detail = "456 tournaments, 247 realizable, dimensions " + join(dims);
  return out;
}

bool skew_hadamard_identities(const SkewHadamardMatrix& h) {
  const int n = h.order();
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      int dot = 0;
      for (int k = 0; k < n; ++k) dot += h(r, k) * h(c, k);
      if (dot != (r == c ? n : 0) || h(r, c) + h(c, r) != (r == c ? 2 : 0)) return false;
    }
  return true;
}

Outcome bound_and_bridge() {
  Outcome out;
  std::vector<int> exact;
  for (int n = 3; n <= 7; ++n) {
    const int t = t_exact(n);
    exact.push_back(t);
    out.require(t <= (n + 1) / 4 && t_upper_bound(n) == (n + 1) / 4, "bound fails at n = " + std::to_string(n));
  }
  out.require(exact.front() == 1 && exact.back() == 2, "no equality at n = 3 or 7");
  const Tournament p7 = paley_tournament(7);
  const SkewHadamardMatrix h = tournament_to_skew_hadamard(p7);
  out.require(h.order() == 8, "order " + std::to_string(h.order()));
  out.require(skew_hadamard_identities(h), "matrix identities fail");
  out.require(are_isomorphic(skew_hadamard_to_tournament(h), p7), "round trip changes the class");
  Tournament c3(3);
  c3.set_arc(2, 0);
  out.require(are_isomorphic(skew_hadamard_to_tournament(tournament_to_skew_hadamard(c3)), c3), "3-cycle round trip");
  if (out.pass) out.detail = "t_exact(3..7) = " + join(exact) + ", Paley(7) gives order 8, round trip isomorphic";
  return out;
}

Certificate with_payload(const Certificate& base, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  auto small = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen); };
  Certificate cert = base;
  const std::size_t side = cert.i[5].rows(), k = cert.i[5].cols();
  RationalMatrix i6(side, k);
  for (std::size_t r = 0; r < side; ++r) {
    i6(r, r) = 1;
    i6(r, (r * 7 + 3) % k) += 1;
  }
  cert.i[5] = i6;
  for (auto& c : cert.c) c = small(1, 9);
  for (int j = 0; j < 8; ++j) cert.u[static_cast<std::size_t>(small(0, static_cast<int>(cert.u.size()) - 1))].second = small(1, 9);
  RationalMatrix q(side, side);
  for (std::size_t r = 0; r < side; ++r) q(r, r) = small(1, 5);
  cert.q[5] = q;
  return cert;
}

Outcome identity_machinery(const std::string& certificate_path) {
  Outcome out;
  ProofContext& ctx = testing::context();
  const GraphBasis& f7 = ctx.graphs(7);
  const Certificate zero = zero_certificate(ctx);
  const Verdict v = verify_certificate(zero, ctx);
  bool negative_named = false;
  for (const auto& f : v.failures) negative_named = negative_named || f.find("negative slack") != std::string::npos;
  out.require(!v.pass && !v.slack_ok && negative_named, "zero certificate not rejected for negative slack");
  bool full_graph = false;
  for (std::size_t g = 0; g < f7.size(); ++g)
    if (f7.graph(g).size() == 15) full_graph = v.slack[g] == Rational(-5, 7);
  out.require(full_graph, "slack at the 15-edge graph is not -5/7");

  const LinComb target = target_vector(f7);
  const Certificate a = with_payload(zero, 1), b = with_payload(zero, 2);
  Certificate sum = a;
  for (std::size_t k = 0; k < 6; ++k) sum.q[k] = a.q[k] + b.q[k];
  for (std::size_t k = 0; k < 3; ++k) sum.c[k] = a.c[k] + b.c[k];
  for (std::size_t k = 0; k < a.u.size(); ++k) sum.u[k].second = a.u[k].second + b.u[k].second;
  out.require(assemble_rhs(sum, ctx) == assemble_rhs(a, ctx) + assemble_rhs(b, ctx) - target, "slack not linear");

  std::string note = "zero certificate fails with " + std::to_string(v.negative_slack) +
         " negative slacks, -5/7 at the 15-edge graph; payload slack linear";
  if (certificate_path.empty()) {
    note += "; full check not run (no published certificate supplied)";
  } else {
    std::ifstream in(certificate_path);
    out.require(static_cast<bool>(in), "cannot open " + certificate_path);
    if (in) {
      const Verdict full = verify_certificate(parse_certificate(in), ctx);
      out.require(full.pass, "supplied certificate fails: " + join(full.failures));
      out.require(full.positive_slack == 7910, std::to_string(full.positive_slack) + " positive slacks");
      note += "; supplied certificate passes with " + std::to_string(full.positive_slack) + " positive slacks";
    }
  }
  if (out.pass) out.detail = note;
  return out;
}

Outcome property_suite() {
  Outcome out;
  const std::vector<std::string> cases = {
      "canonical form: idempotence and invariance on 1000 relabellings",
      "densities: chain rule F5 -> F6 -> F7 on 50 samples",
      "pair density: tau table direct over F7 equals composition through F6",
      "pair density: mass conservation for the nine types on 20 graphs of F7",
      "degree identity on 500 random tournaments",
      "arc reversal and inclusion-exclusion on 100 random tournaments",
      "positive definiteness agrees with minors and grid on 200 matrices",
  };
  for (const auto& name : cases) {
    std::ostringstream sink;
    doctest::Context run;
    run.setOption("test-case", name.c_str());
    run.setCout(&sink);
    const int failed = run.run();
    const bool ran = sink.str().find("1 passed") != std::string::npos;
    out.require(failed == 0 && ran, "\"" + name + "\"");
  }
  if (out.pass) out.detail = std::to_string(cases.size()) + " property cases pass";
  return out;
}

Outcome constructions() {
  Outcome out;
  const ThreeGraph h = h6();
  for (int v = 1; v <= 6; ++v) {
    std::map<int, std::vector<int>> link;
    for (const Triple& e : h.edges()) {
      if (e.a != v && e.b != v && e.c != v) continue;
      std::vector<int> rest;
      for (int u : {e.a, e.b, e.c})
        if (u != v) rest.push_back(u);
      link[rest[0]].push_back(rest[1]);
      link[rest[1]].push_back(rest[0]);
    }
    std::set<int> seen = {link.begin()->first};
    std::vector<int> stack = {link.begin()->first};
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int w : link[u])
        if (seen.insert(w).second) stack.push_back(w);
    }
    bool cycle = link.size() == 5 && seen.size() == 5;
    for (const auto& [u, nb] : link) cycle = cycle && nb.size() == 2;
    out.require(cycle, "link of " + std::to_string(v) + " is not a 5-cycle");
  }
  const BlowupResult b = iterated_blowup({36, 1, 1, false});
  out.require(testing::brute_k4minus_free(b.graph), "n=36 t=1 blow-up contains K4^-");
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const BlowupResult flat = iterated_blowup({15, 0, seed, false});
    const Tournament inner = random_tournament(15, flat.seeds.at(0));
    out.require(flat.min_codegree == cyclic_codegrees(inner).delta2, "t=0 codegree differs from the tournament's");
  }
  if (out.pass)
    out.detail = "H6 links are 5-cycles, n=36 t=1 blow-up (" + std::to_string(b.edges) +
                 " edges) K4^- free by exhaustive check, t=0 codegree matches";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> known;
  std::string certificate;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--known-failure" && i + 1 < argc) {
      known.insert(std::stoi(argv[++i]));
    } else if (arg == "--certificate" && i + 1 < argc) {
      certificate = argv[++i];
    } else {
      std::cerr << "usage: acceptance [--known-failure N]... [--certificate FILE]\n";
      return 2;
    }
  }

  const std::vector<std::pair<int, std::function<Outcome()>>> criteria = {
      {1, enumeration},
      {2, flag_counts},
      {3, tight_paths},
      {4, tournament_side},
      {5, bound_and_bridge},
      {6, [&] { return identity_machinery(certificate); }},
      {7, property_suite},
      {8, constructions},
  };
  int unexpected = 0;
  for (const auto& [id, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << o.detail
              << (!o.pass && known.count(id) ? " [known]" : "") << std::endl;
    if (!o.pass && !known.count(id)) ++unexpected;
  }
  return unexpected == 0 ? 0 : 1;
}
