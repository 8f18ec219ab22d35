#include "flagcert/tournament.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>
#include <sstream>

#include "flagcert/errors.hpp"
#include "flagcert/matrix.hpp"
#include "flagcert/parallel.hpp"
#include "flagcert/small_graph.hpp"

namespace flagcert {

Tournament::Tournament(int n) : n_(n), out_(static_cast<std::size_t>(n * n), 0) {
  if (n < 0) throw InputError("tournament order must be non-negative");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) out_[static_cast<std::size_t>(i * n + j)] = 1;
}

Tournament Tournament::from_bits(int n, const std::vector<bool>& bits) {
  Tournament t(n);
  if (bits.size() != static_cast<std::size_t>(n * (n - 1) / 2)) {
    throw InputError("tournament on " + std::to_string(n) + " vertices needs " + std::to_string(n * (n - 1) / 2) +
                     " bits");
  }
  std::size_t k = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (bits[k++]) t.set_arc(i, j);
      else t.set_arc(j, i);
    }
  return t;
}

std::vector<bool> Tournament::bits() const {
  std::vector<bool> out;
  out.reserve(static_cast<std::size_t>(n_ * (n_ - 1) / 2));
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) out.push_back(arc(i, j));
  return out;
}

void Tournament::set_arc(int x, int y) {
  if (x < 0 || y < 0 || x >= n_ || y >= n_ || x == y) throw InputError("arc endpoints out of range");
  out_[static_cast<std::size_t>(x * n_ + y)] = 1;
  out_[static_cast<std::size_t>(y * n_ + x)] = 0;
}

int Tournament::out_degree(int x) const {
  int d = 0;
  for (int y = 0; y < n_; ++y) d += out_[static_cast<std::size_t>(x * n_ + y)];
  return d;
}

std::string encode_tournament(const Tournament& t) {
  std::string out = std::to_string(t.order()) + ":";
  for (bool b : t.bits()) out += b ? '1' : '0';
  return out;
}

Tournament decode_tournament(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw InputError("tournament '" + std::string(text) + "' lacks 'n:'");
  int n = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + colon, n);
  if (ec != std::errc() || ptr != text.data() + colon || n < 0) {
    throw InputError("malformed tournament order in '" + std::string(text) + "'");
  }
  std::vector<bool> bits;
  for (char ch : text.substr(colon + 1)) {
    if (ch != '0' && ch != '1') throw InputError("tournament bits must be 0 or 1");
    bits.push_back(ch == '1');
  }
  return Tournament::from_bits(n, bits);
}

Tournament induced_tournament(const Tournament& t, const std::vector<int>& keep) {
  const int m = static_cast<int>(keep.size());
  std::vector<bool> seen(static_cast<std::size_t>(t.order()), false);
  for (int v : keep) {
    if (v < 0 || v >= t.order() || seen[static_cast<std::size_t>(v)]) throw InputError("bad vertex list");
    seen[static_cast<std::size_t>(v)] = true;
  }
  Tournament out(m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      if (t.arc(keep[i], keep[j])) out.set_arc(i, j);
      else out.set_arc(j, i);
    }
  return out;
}

ThreeGraph ct_construction(const Tournament& t) {
  const int n = t.order();
  std::vector<Triple> edges;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        if (t.is_cyclic(a, b, c)) edges.push_back(make_triple(a + 1, b + 1, c + 1));
  return ThreeGraph(n, std::move(edges));
}

CodegreeReport cyclic_codegrees(const Tournament& t) {
  const int n = t.order();
  CodegreeReport rep;
  rep.n = n;
  rep.c.assign(static_cast<std::size_t>(n * n), 0);
  rep.r.assign(static_cast<std::size_t>(n * n), 0);
  std::vector<int> out(static_cast<std::size_t>(n)), in(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    out[x] = t.out_degree(x);
    in[x] = n - 1 - out[x];
  }
  rep.delta2 = n < 2 ? 0 : n;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x == y || !t.arc(x, y)) continue;
      int c = 0, r = 0;
      for (int z = 0; z < n; ++z) {
        if (z == x || z == y) continue;
        if (t.arc(y, z) && t.arc(z, x)) ++c;
        if (t.arc(x, z) && t.arc(z, y)) ++r;
      }
      rep.c[static_cast<std::size_t>(x * n + y)] = rep.c[static_cast<std::size_t>(y * n + x)] = c;
      rep.r[static_cast<std::size_t>(x * n + y)] = rep.r[static_cast<std::size_t>(y * n + x)] = r;
      rep.delta2 = std::min(rep.delta2, c);
      if (r != (n - 2) - in[x] - out[y] + c) rep.identity_holds = false;
    }
  }
  return rep;
}

namespace {

// Bit string of t relabelled by perm (new vertex i is old perm[i]), first pair
// in the most significant position.
std::uint64_t permuted_code(const Tournament& t, const int* perm) {
  const int n = t.order();
  std::uint64_t code = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) code = (code << 1) | (t.arc(perm[i], perm[j]) ? 1u : 0u);
  return code;
}

Tournament from_code(int n, std::uint64_t code) {
  std::vector<bool> bits(static_cast<std::size_t>(n * (n - 1) / 2));
  for (std::size_t k = bits.size(); k-- > 0;) {
    bits[k] = code & 1u;
    code >>= 1;
  }
  return Tournament::from_bits(n, bits);
}

std::uint64_t canonical_code(const Tournament& t) {
  const int n = t.order();
  if (n > kMaxCanonicalOrder) throw CostGuardError("tournament canonical form limited to 9 vertices");
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    best = std::min(best, permuted_code(t, perm.data()));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

Tournament canonical_tournament(const Tournament& t) { return from_code(t.order(), canonical_code(t)); }

bool are_isomorphic(const Tournament& a, const Tournament& b) {
  return a.order() == b.order() && canonical_code(a) == canonical_code(b);
}

std::vector<Tournament> enumerate_tournaments(int k) {
  if (k < 1) throw InputError("enumerate_tournaments: k must be at least 1");
  if (k > kMaxEnumerationOrder) throw CostGuardError("enumerate_tournaments: k > 7 is not supported");
  std::vector<std::uint64_t> level{0};
  for (int m = 2; m <= k; ++m) {
    std::vector<Tournament> parents;
    for (std::uint64_t code : level) parents.push_back(from_code(m - 1, code));
    std::vector<std::set<std::uint64_t>> found(parents.size());
    parallel_for(parents.size(), [&](std::size_t p) {
      const Tournament& parent = parents[p];
      for (std::uint32_t pattern = 0; pattern < (1u << (m - 1)); ++pattern) {
        Tournament child(m);
        for (int i = 0; i < m - 1; ++i)
          for (int j = i + 1; j < m - 1; ++j) {
            if (parent.arc(i, j)) child.set_arc(i, j);
            else child.set_arc(j, i);
          }
        for (int i = 0; i < m - 1; ++i) {
          if ((pattern >> i) & 1u) child.set_arc(i, m - 1);
          else child.set_arc(m - 1, i);
        }
        found[p].insert(canonical_code(child));
      }
    });
    std::set<std::uint64_t> all;
    for (const auto& s : found) all.insert(s.begin(), s.end());
    level.assign(all.begin(), all.end());
  }
  std::vector<Tournament> out;
  for (std::uint64_t code : level) out.push_back(from_code(k, code));
  return out;
}

namespace {

class Realizer {
 public:
  explicit Realizer(const ThreeGraph& g) : n_(g.order()), g_(SmallGraph(g)), orient_(static_cast<std::size_t>(n_ * n_), -1) {}

  std::optional<Tournament> run() {
    if (n_ < 2) return Tournament(n_);
    // C(T) = C(reversed T), so the first pair may be fixed.
    if (!assign(0, 1)) return std::nullopt;
    if (!search()) return std::nullopt;
    Tournament t(n_);
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j) {
        if (arc(i, j)) t.set_arc(i, j);
        else t.set_arc(j, i);
      }
    return t;
  }

 private:
  // -1 unknown, 1 for x -> y, 0 for y -> x.
  int& slot(int x, int y) { return orient_[static_cast<std::size_t>(x * n_ + y)]; }
  int get(int x, int y) { return slot(x, y); }
  bool arc(int x, int y) { return get(x, y) == 1; }

  bool assign(int x, int y) {
    if (get(x, y) != -1) return get(x, y) == 1;
    slot(x, y) = 1;
    slot(y, x) = 0;
    trail_.push_back({x, y});
    for (int z = 0; z < n_; ++z) {
      if (z == x || z == y) continue;
      const bool edge = g_.has_edge(x, y, z);
      const int yz = get(y, z), zx = get(z, x);
      // With x -> y fixed, the triangle is cyclic iff y -> z and z -> x.
      if (yz != -1 && zx != -1) {
        if ((yz == 1 && zx == 1) != edge) return false;
      } else if (yz != -1) {
        if (edge) {
          if (yz != 1 || !assign(z, x)) return false;
        } else if (yz == 1 && !assign(x, z)) {
          return false;
        }
      } else if (zx != -1) {
        if (edge) {
          if (zx != 1 || !assign(y, z)) return false;
        } else if (zx == 1 && !assign(z, y)) {
          return false;
        }
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const auto [x, y] = trail_.back();
      trail_.pop_back();
      slot(x, y) = slot(y, x) = -1;
    }
  }

  bool search() {
    int x = -1, y = -1;
    for (int i = 0; i < n_ && x < 0; ++i)
      for (int j = i + 1; j < n_; ++j)
        if (get(i, j) == -1) {
          x = i;
          y = j;
          break;
        }
    if (x < 0) return true;
    for (int dir = 0; dir < 2; ++dir) {
      const std::size_t mark = trail_.size();
      const bool ok = dir == 0 ? assign(x, y) : assign(y, x);
      if (ok && search()) return true;
      undo(mark);
    }
    return false;
  }

  int n_;
  SmallGraph g_;
  std::vector<int> orient_;
  std::vector<std::pair<int, int>> trail_;
};

}  // namespace

std::optional<Tournament> realize_as_tournament(const ThreeGraph& g) {
  if (g.order() > kMaxEnumerationOrder) throw CostGuardError("realize_as_tournament: more than 7 vertices");
  if (!is_k4minus_free(g)) return std::nullopt;
  auto t = Realizer(g).run();
  if (t && ct_construction(*t) != g) throw std::logic_error("realize_as_tournament: inconsistent result");
  return t;
}

std::vector<bool> realizable_mask(const GraphBasis& graphs) {
  std::vector<char> mask(graphs.size(), 0);
  parallel_for(graphs.size(), [&](std::size_t i) { mask[i] = realize_as_tournament(graphs.graph(i)).has_value(); });
  return std::vector<bool>(mask.begin(), mask.end());
}

IotaDimension iota_dimension(const FlagBasis& flags) {
  const TypeGraph& type = flags.type();
  if (type.order() != 5 || flags.order() != 6) throw InputError("iota_dimension needs 6-vertex flags of a 5-vertex type");
  IotaDimension out;
  const Rational weight(1, 32);
  for (std::uint32_t code = 0; code < (1u << 10); ++code) {
    Tournament j = from_code(5, code);
    if (ct_construction(j) != type.graph) continue;
    std::vector<Rational> dist(flags.size());
    for (std::uint32_t pattern = 0; pattern < 32; ++pattern) {
      Tournament t(6);
      for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b) {
          if (j.arc(a, b)) t.set_arc(a, b);
          else t.set_arc(b, a);
        }
      for (int a = 0; a < 5; ++a) {
        if ((pattern >> a) & 1u) t.set_arc(a, 5);
        else t.set_arc(5, a);
      }
      const int idx = flags.index_of_rooted(SmallGraph(ct_construction(t)));
      if (idx < 0) throw std::logic_error("iota_dimension: extension missing from " + flags.id());
      dist[static_cast<std::size_t>(idx)] += weight;
    }
    out.vectors.push_back(std::move(dist));
  }
  out.realizations = static_cast<int>(out.vectors.size()) / 2;
  out.basis = row_space_basis(out.vectors);
  out.rank = static_cast<int>(out.basis.size());
  return out;
}

int t_upper_bound(int n) {
  if (n < 3) throw InputError("t_upper_bound needs n >= 3");
  const long u = static_cast<long>((n - 1) / 2) * (n / 2);
  const long num = 6 * u - static_cast<long>(n - 2) * (n - 1);
  const long den = 2L * (n - 1);
  long q = num / den;
  if (num % den != 0 && num < 0) --q;
  return static_cast<int>(q);
}

int t_exact(int n) {
  int best = 0;
  for (const Tournament& t : enumerate_tournaments(n)) best = std::max(best, cyclic_codegrees(t).delta2);
  return best;
}

std::string skew_hadamard_defect(int n, const std::vector<int>& e) {
  if (n < 1 || e.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
    return "entry count does not match order";
  }
  auto at = [&](int r, int c) { return e[static_cast<std::size_t>(r * n + c)]; };
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      if (at(r, c) != 1 && at(r, c) != -1) return "entry (" + std::to_string(r) + "," + std::to_string(c) + ") is not +-1";
      if (at(r, c) + at(c, r) != (r == c ? 2 : 0)) {
        return "A + A^T != 2I at (" + std::to_string(r) + "," + std::to_string(c) + ")";
      }
    }
  for (int r = 0; r < n; ++r)
    for (int s = r; s < n; ++s) {
      long dot = 0;
      for (int c = 0; c < n; ++c) dot += at(r, c) * at(s, c);
      if (dot != (r == s ? n : 0)) return "A A^T != nI at (" + std::to_string(r) + "," + std::to_string(s) + ")";
    }
  return {};
}

SkewHadamardMatrix::SkewHadamardMatrix(int order, std::vector<int> entries) : n_(order), e_(std::move(entries)) {
  if (const std::string d = skew_hadamard_defect(n_, e_); !d.empty()) throw InputError("not skew Hadamard: " + d);
}

std::string doubly_regular_defect(const Tournament& t) {
  const int n = t.order();
  if (n % 4 != 3) return "order " + std::to_string(n) + " is not 3 mod 4";
  for (int x = 0; x < n; ++x) {
    if (t.out_degree(x) != (n - 1) / 2) {
      return "vertex " + std::to_string(x) + " has out-degree " + std::to_string(t.out_degree(x)) + ", expected " +
             std::to_string((n - 1) / 2);
    }
  }
  const CodegreeReport rep = cyclic_codegrees(t);
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (rep.cyclic(x, y) != (n + 1) / 4) {
        return "pair {" + std::to_string(x) + "," + std::to_string(y) + "} has codegree " +
               std::to_string(rep.cyclic(x, y)) + ", expected " + std::to_string((n + 1) / 4);
      }
  return {};
}

SkewHadamardMatrix tournament_to_skew_hadamard(const Tournament& t) {
  if (const std::string d = doubly_regular_defect(t); !d.empty()) throw InputError("tournament not doubly regular: " + d);
  const int n = t.order(), m = n + 1;
  std::vector<int> h(static_cast<std::size_t>(m * m));
  auto at = [&](int r, int c) -> int& { return h[static_cast<std::size_t>(r * m + c)]; };
  at(0, 0) = 1;
  for (int j = 1; j < m; ++j) {
    at(0, j) = 1;
    at(j, 0) = -1;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) at(i + 1, j + 1) = i == j ? 1 : (t.arc(i, j) ? 1 : -1);
  return SkewHadamardMatrix(m, std::move(h));
}

Tournament skew_hadamard_to_tournament(const SkewHadamardMatrix& h) {
  const int m = h.order();
  if (m % 4 != 0) throw InputError("skew Hadamard order must be divisible by 4");
  std::vector<int> sign(static_cast<std::size_t>(m), 1);
  for (int j = 1; j < m; ++j) sign[static_cast<std::size_t>(j)] = h(0, j);
  Tournament t(m - 1);
  for (int i = 1; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      if (sign[i] * h(i, j) * sign[j] == 1) t.set_arc(i - 1, j - 1);
      else t.set_arc(j - 1, i - 1);
    }
  if (const std::string d = doubly_regular_defect(t); !d.empty()) {
    throw std::logic_error("skew_hadamard_to_tournament: result not doubly regular: " + d);
  }
  return t;
}

std::string encode_matrix(const SkewHadamardMatrix& h) {
  std::ostringstream out;
  out << h.order() << '\n';
  for (int r = 0; r < h.order(); ++r) {
    for (int c = 0; c < h.order(); ++c) out << (c ? " " : "") << h(r, c);
    out << '\n';
  }
  return out.str();
}

SkewHadamardMatrix decode_matrix(std::string_view text) {
  std::istringstream in{std::string(text)};
  int n = 0;
  if (!(in >> n) || n < 1) throw InputError("matrix file must start with a positive order");
  std::vector<int> e;
  int v = 0;
  while (in >> v) e.push_back(v);
  if (!in.eof()) throw InputError("matrix file contains a non-integer entry");
  return SkewHadamardMatrix(n, std::move(e));
}

Tournament paley_tournament(int q) {
  if (q > 1000) throw CostGuardError("paley_tournament: q > 1000");
  if (q < 3 || q % 4 != 3) throw InputError("paley_tournament: q must be 3 mod 4");
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) throw InputError("paley_tournament: " + std::to_string(q) + " is not prime");
  std::vector<bool> square(static_cast<std::size_t>(q), false);
  for (int x = 1; x < q; ++x) square[static_cast<std::size_t>(x * x % q)] = true;
  Tournament t(q);
  for (int i = 0; i < q; ++i)
    for (int j = i + 1; j < q; ++j) {
      if (square[static_cast<std::size_t>((j - i) % q)]) t.set_arc(i, j);
      else t.set_arc(j, i);
    }
  return t;
}

Tournament extend_tournament(const Tournament& t, int x) {
  if (const std::string d = doubly_regular_defect(t); !d.empty()) throw InputError("tournament not doubly regular: " + d);
  const int n = t.order();
  if (x < 0 || x >= n) throw InputError("extend_tournament: vertex out of range");
  Tournament out(n + 1);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (t.arc(i, j)) out.set_arc(i, j);
      else out.set_arc(j, i);
    }
  out.set_arc(x, n);
  for (int v = 0; v < n; ++v) {
    if (v == x) continue;
    if (t.arc(v, x)) out.set_arc(n, v);
    else out.set_arc(v, n);
  }
  return out;
}

Rational quasirandomness_defect(const Tournament& t) {
  const int n = t.order();
  if (n > 20) throw CostGuardError("quasirandomness_defect: n > 20");
  if (n == 0) return 0;
  std::vector<std::uint32_t> out(static_cast<std::size_t>(n), 0), in(static_cast<std::size_t>(n), 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      if (t.arc(x, y)) out[x] |= 1u << y;
      else in[x] |= 1u << y;
    }
  long best = 0;
  for (std::uint32_t y = 0; y < (1u << n); ++y) {
    long sum = 0;
    for (int x = 0; x < n; ++x) sum += std::abs(__builtin_popcount(out[x] & y) - __builtin_popcount(in[x] & y));
    best = std::max(best, sum);
  }
  Rational r(best, static_cast<long>(n) * n);
  r.canonicalize();
  return r;
}

}  // namespace flagcert
