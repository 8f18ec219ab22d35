#include "flagcert/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

#include "flagcert/canonical.hpp"
#include "flagcert/errors.hpp"

namespace flagcert {

namespace {

int parse_int(std::string_view s, std::string_view what) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw InputError("malformed " + std::string(what) + " '" + std::string(s) + "'");
  }
  return value;
}

}  // namespace

std::string encode_graph(const ThreeGraph& g) {
  if (g.order() > 9) return to_string(g);
  std::string out = std::to_string(g.order()) + ":";
  for (const Triple& e : g.edges()) {
    out += static_cast<char>('0' + e.a);
    out += static_cast<char>('0' + e.b);
    out += static_cast<char>('0' + e.c);
  }
  return out;
}

ThreeGraph decode_graph(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw InputError("graph '" + std::string(text) + "' lacks 'n:'");
  const int n = parse_int(text.substr(0, colon), "vertex count");
  std::string_view body = text.substr(colon + 1);
  std::vector<Triple> edges;
  if (std::find(body.begin(), body.end(), ',') != body.end()) {
    std::istringstream in{std::string(body)};
    std::string token;
    while (in >> token) {
      const auto c1 = token.find(',');
      const auto c2 = token.find(',', c1 + 1);
      if (c1 == std::string::npos || c2 == std::string::npos) {
        throw InputError("malformed triple '" + token + "'");
      }
      std::string_view t(token);
      const Triple e{static_cast<std::uint16_t>(parse_int(t.substr(0, c1), "vertex")),
                     static_cast<std::uint16_t>(parse_int(t.substr(c1 + 1, c2 - c1 - 1), "vertex")),
                     static_cast<std::uint16_t>(parse_int(t.substr(c2 + 1), "vertex"))};
      edges.push_back(e);
    }
  } else {
    if (body.size() % 3 != 0) throw InputError("graph '" + std::string(text) + "': triples must be 3 digits");
    for (std::size_t i = 0; i < body.size(); i += 3) {
      int v[3];
      for (int j = 0; j < 3; ++j) {
        const char ch = body[i + j];
        if (ch < '1' || ch > '9') throw InputError("graph '" + std::string(text) + "': bad vertex digit");
        v[j] = ch - '0';
      }
      edges.push_back(Triple{static_cast<std::uint16_t>(v[0]), static_cast<std::uint16_t>(v[1]),
                             static_cast<std::uint16_t>(v[2])});
    }
    if (!std::is_sorted(edges.begin(), edges.end())) {
      throw InputError("graph '" + std::string(text) + "': triples must be sorted");
    }
  }
  return ThreeGraph(n, std::move(edges));
}

void write_graph_list(std::ostream& out, const std::vector<ThreeGraph>& graphs) {
  out << kGraphListHeader << '\n';
  for (const ThreeGraph& g : graphs) out << encode_graph(g) << '\n';
}

std::vector<ThreeGraph> read_graph_list(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kGraphListHeader) {
    throw InputError("graph list must start with '" + std::string(kGraphListHeader) + "'");
  }
  std::vector<ThreeGraph> graphs;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    graphs.push_back(decode_graph(line));
  }
  return graphs;
}

bool same_isomorphism_classes(const std::vector<ThreeGraph>& a, const std::vector<ThreeGraph>& b) {
  if (a.size() != b.size()) return false;
  auto canon = [](const std::vector<ThreeGraph>& list) {
    std::vector<ThreeGraph> out;
    out.reserve(list.size());
    for (const ThreeGraph& g : list) out.push_back(canonical_form(g).graph);
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return compare_graphs(x, y) < 0; });
    return out;
  };
  return canon(a) == canon(b);
}

}  // namespace flagcert
