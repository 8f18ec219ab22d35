#include "flagcert/certificate.hpp"

#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "flagcert/errors.hpp"
#include "flagcert/graph_io.hpp"
#include "flagcert/tournament.hpp"

namespace flagcert {

namespace {

void write_matrix(std::ostream& out, const std::string& name, const RationalMatrix& m) {
  out << '[' << name << "]\n" << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? " " : "") << format_rational(m(r, c));
    out << '\n';
  }
}

void write_lines(std::ostream& out, const std::string& name, const std::vector<std::string>& lines) {
  out << '[' << name << "]\n";
  for (const auto& l : lines) out << l << '\n';
}

using Sections = std::map<std::string, std::vector<std::string>>;

const std::vector<std::string>& section(const Sections& s, const std::string& name) {
  const auto it = s.find(name);
  if (it == s.end()) throw InputError("certificate lacks section [" + name + "]");
  return it->second;
}

std::vector<std::string> tokens(const std::vector<std::string>& lines) {
  std::vector<std::string> out;
  for (const auto& l : lines) {
    std::istringstream in(l);
    std::string t;
    while (in >> t) out.push_back(t);
  }
  return out;
}

RationalMatrix read_matrix(const Sections& s, const std::string& name) {
  const std::vector<std::string> t = tokens(section(s, name));
  if (t.size() < 2) throw InputError("section [" + name + "] lacks its dimensions line");
  std::size_t rows = 0, cols = 0;
  try {
    rows = std::stoul(t[0]);
    cols = std::stoul(t[1]);
  } catch (const std::exception&) {
    throw InputError("section [" + name + "]: malformed dimensions");
  }
  if (rows == 0 || cols == 0) throw InputError("section [" + name + "]: dimensions must be positive");
  if (t.size() - 2 != rows * cols) {
    throw InputError("section [" + name + "]: expected " + std::to_string(rows * cols) + " entries, found " +
                     std::to_string(t.size() - 2));
  }
  std::vector<Rational> e;
  e.reserve(rows * cols);
  for (std::size_t k = 2; k < t.size(); ++k) {
    try {
      e.push_back(parse_rational(t[k]));
    } catch (const InputError& err) {
      throw InputError("section [" + name + "]: " + err.what());
    }
  }
  return RationalMatrix(rows, cols, std::move(e));
}

std::vector<std::string> nonempty(const std::vector<std::string>& lines) {
  std::vector<std::string> out;
  for (const auto& l : lines)
    if (l.find_first_not_of(" \t\r") != std::string::npos) out.push_back(l.substr(0, l.find_last_not_of(" \t\r") + 1));
  return out;
}

}  // namespace

void write_certificate(std::ostream& out, const Certificate& cert) {
  out << kCertificateHeader << '\n';
  for (int k = 0; k < 6; ++k) write_matrix(out, "Q" + std::to_string(k + 1), cert.q[k]);
  for (int k = 0; k < 6; ++k) write_matrix(out, "I" + std::to_string(k + 1), cert.i[k]);
  out << "[c]\n";
  for (const Rational& c : cert.c) out << format_rational(c) << '\n';
  out << "[u]\n";
  for (const auto& [id, v] : cert.u) out << id << ' ' << format_rational(v) << '\n';
  for (int k = 0; k < 6; ++k) write_lines(out, "flags:iota" + std::to_string(k + 1), cert.iota_flags[k]);
  write_lines(out, "graphs:F7", cert.graphs);
  for (int k = 0; k < 3; ++k)
    if (cert.tight_path[k]) write_lines(out, "tightpath:sigma" + std::to_string(k), *cert.tight_path[k]);
}

Certificate parse_certificate(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kCertificateHeader) {
    throw InputError("certificate must start with '" + std::string(kCertificateHeader) + "'");
  }
  Sections s;
  std::vector<std::string>* current = nullptr;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty() && line.front() == '[') {
      if (line.back() != ']') throw InputError("malformed section line '" + line + "'");
      const std::string name = line.substr(1, line.size() - 2);
      if (s.count(name)) throw InputError("duplicate section [" + name + "]");
      current = &s[name];
      continue;
    }
    if (line.empty()) continue;
    if (!current) throw InputError("certificate data before the first section");
    current->push_back(line);
  }

  Certificate cert;
  for (int k = 0; k < 6; ++k) cert.q[k] = read_matrix(s, "Q" + std::to_string(k + 1));
  for (int k = 0; k < 6; ++k) cert.i[k] = read_matrix(s, "I" + std::to_string(k + 1));
  const std::vector<std::string> cs = tokens(section(s, "c"));
  if (cs.size() != 3) throw InputError("section [c] must hold exactly three rationals");
  for (int k = 0; k < 3; ++k) cert.c[k] = parse_rational(cs[k]);
  for (const auto& l : nonempty(section(s, "u"))) {
    std::istringstream ls(l);
    std::string id, value, extra;
    if (!(ls >> id >> value) || (ls >> extra)) throw InputError("section [u]: malformed line '" + l + "'");
    cert.u.emplace_back(id, parse_rational(value));
  }
  for (int k = 0; k < 6; ++k) cert.iota_flags[k] = nonempty(section(s, "flags:iota" + std::to_string(k + 1)));
  cert.graphs = nonempty(section(s, "graphs:F7"));
  for (int k = 0; k < 3; ++k) {
    const auto it = s.find("tightpath:sigma" + std::to_string(k));
    if (it != s.end()) cert.tight_path[k] = nonempty(it->second);
  }
  for (const auto& [name, lines] : s) {
    static const std::vector<std::string> prefixes = {"Q", "I", "c", "u", "flags:iota", "graphs:F7", "tightpath:sigma"};
    bool known = false;
    for (const auto& p : prefixes) known = known || name.rfind(p, 0) == 0;
    if (!known) throw InputError("unknown certificate section [" + name + "]");
  }
  return cert;
}

std::array<std::pair<int, int>, 6> iota_sizes(ProofContext& ctx) {
  std::array<std::pair<int, int>, 6> out;
  for (int k = 0; k < 6; ++k) {
    const FlagBasis& flags = ctx.flags(types::iota(k + 1), 6);
    out[k] = {static_cast<int>(flags.size()), iota_dimension(flags).rank};
  }
  return out;
}

Certificate zero_certificate(ProofContext& ctx) {
  Certificate cert;
  const auto sizes = iota_sizes(ctx);
  for (int k = 0; k < 6; ++k) {
    const auto [kk, d] = sizes[k];
    cert.q[k] = RationalMatrix(static_cast<std::size_t>(kk - d), static_cast<std::size_t>(kk - d));
    cert.i[k] = RationalMatrix(static_cast<std::size_t>(kk - d), static_cast<std::size_t>(kk));
    for (const Flag& f : ctx.flags(types::iota(k + 1), 6).flags()) cert.iota_flags[k].push_back(encode_flag(f));
  }
  cert.c = {0, 0, 0};
  for (const auto& d : codegree_expressions(ctx)) cert.u.emplace_back(d.id, 0);
  for (const ThreeGraph& g : ctx.graphs(7).graphs()) cert.graphs.push_back(encode_graph(g));
  return cert;
}

namespace {

// Local index of every listed item; each local index must appear exactly once.
template <typename Lookup>
std::vector<int> bijection(const std::vector<std::string>& items, std::size_t size, const std::string& what,
                           Lookup&& lookup) {
  if (items.size() != size) {
    throw InputError(what + ": certificate lists " + std::to_string(items.size()) + " entries, expected " +
                     std::to_string(size));
  }
  std::vector<int> map;
  std::vector<bool> used(size, false);
  for (const auto& item : items) {
    const int idx = lookup(item);
    if (idx < 0) throw InputError(what + ": '" + item + "' is not in the local enumeration");
    if (used[static_cast<std::size_t>(idx)]) throw InputError(what + ": '" + item + "' repeats an earlier entry");
    used[static_cast<std::size_t>(idx)] = true;
    map.push_back(idx);
  }
  return map;
}

}  // namespace

CertificateIndex match_certificate(const Certificate& cert, ProofContext& ctx) {
  CertificateIndex index;
  const auto sizes = iota_sizes(ctx);
  for (int k = 0; k < 6; ++k) {
    const std::string name = "iota" + std::to_string(k + 1);
    const auto [kk, d] = sizes[k];
    const std::size_t side = static_cast<std::size_t>(kk - d);
    if (cert.q[k].rows() != side || cert.q[k].cols() != side) {
      throw InputError("Q" + std::to_string(k + 1) + " must be " + std::to_string(side) + "x" + std::to_string(side));
    }
    if (cert.i[k].rows() != side || cert.i[k].cols() != static_cast<std::size_t>(kk)) {
      throw InputError("I" + std::to_string(k + 1) + " must be " + std::to_string(side) + "x" + std::to_string(kk));
    }
    const TypeGraph& type = types::iota(k + 1);
    const FlagBasis& flags = ctx.flags(type, 6);
    index.iota[k] = bijection(cert.iota_flags[k], flags.size(), "[flags:" + name + "]",
                              [&](const std::string& s) { return flags.index_of(decode_flag(type, s)); });
  }
  const GraphBasis& f7 = ctx.graphs(7);
  index.graphs = bijection(cert.graphs, f7.size(), "[graphs:F7]", [&](const std::string& s) {
    const ThreeGraph g = decode_graph(s);
    return g.order() == 7 ? f7.index_of(SmallGraph(g)) : -1;
  });

  // Each tau/6 flag names the expression of its swap orbit.
  const FlagBasis& tau6 = ctx.flags(types::tau(), 6);
  std::vector<int> expression_of(tau6.size(), -1);
  const auto& exprs = codegree_expressions(ctx);
  for (std::size_t e = 0; e < exprs.size(); ++e)
    for (int src : exprs[e].sources) expression_of[static_cast<std::size_t>(src)] = static_cast<int>(e);
  std::vector<bool> used(exprs.size(), false);
  for (const auto& [id, value] : cert.u) {
    const int flag = tau6.index_of(decode_flag(types::tau(), id));
    if (flag < 0 || flag >= static_cast<int>(tau6.size()) || decode_flag(types::tau(), id).order() != 6) {
      throw InputError("[u]: '" + id + "' is not a 6-vertex tau-flag");
    }
    const int e = expression_of[static_cast<std::size_t>(flag)];
    if (used[static_cast<std::size_t>(e)]) throw InputError("[u]: '" + id + "' names an expression already listed");
    used[static_cast<std::size_t>(e)] = true;
    index.u.push_back(e);
  }

  const auto derived = tight_path_flag_sets(ctx);
  for (int k = 0; k < 3; ++k) {
    if (!cert.tight_path[k]) {
      index.tight_path[k] = derived[k];
      continue;
    }
    const TypeGraph& type = types::sigma(k);
    const FlagBasis& flags = ctx.flags(type, 5);
    for (const auto& s : *cert.tight_path[k]) {
      const int idx = flags.index_of(decode_flag(type, s));
      if (idx < 0) throw InputError("[tightpath:sigma" + std::to_string(k) + "]: '" + s + "' is not a 5-vertex flag");
      index.tight_path[k].push_back(idx);
    }
  }
  return index;
}

LinComb assemble_rhs(const Certificate& cert, ProofContext& ctx) {
  const CertificateIndex index = match_certificate(cert, ctx);
  LinComb s = target_vector(ctx.graphs(7));

  const auto& exprs = codegree_expressions(ctx);
  for (std::size_t k = 0; k < cert.u.size(); ++k)
    if (cert.u[k].second != 0) s.add_scaled(exprs[static_cast<std::size_t>(index.u[k])].value, -cert.u[k].second);

  for (int k = 0; k < 3; ++k)
    if (cert.c[k] != 0) s.add_scaled(tight_path_expression(ctx, k, index.tight_path[k]), -cert.c[k]);

  for (int k = 0; k < 6; ++k) {
    const RationalMatrix m = congruence(cert.q[k], cert.i[k]);
    const std::vector<int>& local = index.iota[k];
    std::vector<std::vector<Rational>> permuted(local.size(), std::vector<Rational>(local.size()));
    bool any = false;
    for (std::size_t a = 0; a < local.size(); ++a)
      for (std::size_t b = 0; b < local.size(); ++b) {
        permuted[static_cast<std::size_t>(local[a])][static_cast<std::size_t>(local[b])] = m(a, b);
        any = any || m(a, b) != 0;
      }
    if (any) s.add_scaled(iota_quadratic_expression(ctx, k + 1, permuted), -1);
  }
  return s;
}

Verdict verify_certificate(const Certificate& cert, ProofContext& ctx) {
  Verdict v;
  v.psd_ok = true;
  for (int k = 0; k < 6; ++k) {
    v.psd[k] = is_positive_definite(cert.q[k]);
    if (!v.psd[k]) {
      v.psd_ok = false;
      v.failures.push_back("Q" + std::to_string(k + 1) + " is not positive definite");
    }
  }
  v.positivity_ok = true;
  for (int k = 0; k < 3; ++k)
    if (cert.c[k] <= 0) {
      v.positivity_ok = false;
      v.failures.push_back("c" + std::to_string(k) + " is not positive");
    }
  std::size_t nonpositive_u = 0;
  for (const auto& [id, value] : cert.u)
    if (value <= 0 && nonpositive_u++ == 0) v.failures.push_back("u[" + id + "] is not positive");
  if (nonpositive_u > 0) {
    v.positivity_ok = false;
    if (nonpositive_u > 1) v.failures.back() += " (" + std::to_string(nonpositive_u) + " u entries in total)";
  }

  const LinComb s = assemble_rhs(cert, ctx);
  const GraphBasis& f7 = ctx.graphs(7);
  const std::vector<bool> realizable = realizable_mask(f7);
  v.slack.assign(f7.size(), Rational(0));
  for (const auto& [g, value] : s.terms()) v.slack[static_cast<std::size_t>(g)] = value;
  v.support_ok = true;
  for (std::size_t g = 0; g < f7.size(); ++g) {
    const int sign = sgn(v.slack[g]);
    if (sign == 0) ++v.zero_slack;
    else if (sign > 0) ++v.positive_slack;
    else {
      ++v.negative_slack;
      if (v.first_negative < 0) v.first_negative = static_cast<int>(g);
    }
    if (realizable[g]) {
      ++v.realizable;
      if (sign == 0) ++v.zero_on_realizable;
      else v.support_ok = false;
    } else if (sign <= 0) {
      v.support_ok = false;
    }
  }
  v.slack_ok = v.negative_slack == 0;
  if (!v.slack_ok) {
    v.failures.push_back("negative slack at " + std::to_string(v.negative_slack) + " graphs, first " +
                         encode_graph(f7.graph(static_cast<std::size_t>(v.first_negative))) + " = " +
                         format_rational(v.slack[static_cast<std::size_t>(v.first_negative)]));
  }
  if (!v.support_ok) {
    v.failures.push_back("slack support differs from the non-realizable graphs (" + std::to_string(v.positive_slack) +
                         " positive, " + std::to_string(v.zero_on_realizable) + " of " +
                         std::to_string(v.realizable) + " realizable graphs at zero)");
  }
  v.pass = v.psd_ok && v.positivity_ok && v.slack_ok && v.support_ok;
  return v;
}

}  // namespace flagcert
