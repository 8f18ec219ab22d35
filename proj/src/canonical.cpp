#include "flagcert/canonical.hpp"

#include <utility>

#include "flagcert/errors.hpp"

namespace flagcert {

namespace {

using Row = std::array<std::int8_t, 16>;

class Search {
 public:
  explicit Search(const SmallGraph& g) : g_(g), n_(g.order()), total_(triple_count(n_)) {}

  CanonicalLabelling run(int fixed) {
    Row seq{}, start{};
    for (int p = 0; p < n_; ++p) {
      seq[p] = static_cast<std::int8_t>(p);
      start[p] = static_cast<std::int8_t>(p < fixed ? p : fixed);
    }
    descend(0, seq, start, 0, 0);
    return best_;
  }

 private:
  void descend(int b, const Row& seq, const Row& start, Code128 prefix, int len) {
    if (b == n_) {
      leaf(seq, prefix);
      return;
    }
    int hi = b + 1;
    while (hi < n_ && start[hi] == start[b]) ++hi;

    for (int idx = b; idx < hi; ++idx) {
      Row s = seq, st = start;
      std::swap(s[b], s[idx]);
      st[b] = static_cast<std::int8_t>(b);
      for (int p = b + 1; p < hi; ++p) st[p] = static_cast<std::int8_t>(b + 1);

      Code128 pre = prefix;
      int plen = len;
      if (b >= 1) {
        const std::uint16_t mask = g_.common(s[0], s[b]);
        refine(s, st, b + 1, mask);
        for (int c = b + 1; c < n_; ++c) pre = (pre << 1) | ((mask >> s[c]) & 1u);
        plen += n_ - 1 - b;
        // The best code can change inside a subtree, so compare every time.
        if (have_best_ && pre < (best_.code >> (total_ - plen))) continue;
      }
      descend(b + 1, s, st, pre, plen);
    }
  }

  // Stable split of every cell in [from, n) into members of `mask` first.
  void refine(Row& s, Row& st, int from, std::uint16_t mask) const {
    int p = from;
    while (p < n_) {
      int q = p + 1;
      while (q < n_ && st[q] == st[p]) ++q;
      if (q - p > 1) {
        Row tmp;
        int in = 0;
        for (int i = p; i < q; ++i)
          if ((mask >> s[i]) & 1u) tmp[in++] = s[i];
        int k = in;
        for (int i = p; i < q; ++i)
          if (!((mask >> s[i]) & 1u)) tmp[k++] = s[i];
        for (int i = p; i < q; ++i) s[i] = tmp[i - p];
        if (in > 0 && in < q - p) {
          for (int i = p + in; i < q; ++i) st[i] = static_cast<std::int8_t>(p + in);
        }
      }
      p = q;
    }
  }

  void leaf(const Row& seq, Code128 code) {
    for (int a = 1; a < n_; ++a) {
      for (int b = a + 1; b < n_; ++b) {
        const std::uint16_t m = g_.common(seq[a], seq[b]);
        for (int c = b + 1; c < n_; ++c) code = (code << 1) | ((m >> seq[c]) & 1u);
      }
    }
    if (!have_best_ || code > best_.code) {
      have_best_ = true;
      best_.code = code;
      best_.order = seq;
    }
  }

  const SmallGraph& g_;
  int n_;
  int total_;
  bool have_best_ = false;
  CanonicalLabelling best_;
};

}  // namespace

CanonicalLabelling canonical_labelling(const SmallGraph& g, int fixed) {
  if (g.order() > kMaxCanonicalOrder) {
    throw CostGuardError("canonical labelling supports at most 9 vertices");
  }
  return Search(g).run(fixed);
}

CanonicalForm canonical_form(const ThreeGraph& g) {
  if (g.order() > kMaxCanonicalOrder) {
    throw CostGuardError("canonical_form supports at most 9 vertices");
  }
  const SmallGraph sg(g);
  const CanonicalLabelling lab = canonical_labelling(sg);
  CanonicalForm out;
  out.graph = SmallGraph::from_code(g.order(), lab.code).to_three_graph();
  out.labelling.assign(static_cast<std::size_t>(g.order()), 0);
  for (int p = 0; p < g.order(); ++p) out.labelling[lab.order[p]] = p + 1;
  return out;
}

bool are_isomorphic(const ThreeGraph& g1, const ThreeGraph& g2) {
  if (g1.order() != g2.order() || g1.size() != g2.size()) return false;
  return canonical_form(g1) == canonical_form(g2);
}

}  // namespace flagcert
