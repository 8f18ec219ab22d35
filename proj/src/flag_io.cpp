#include "flagcert/flag_io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

#include "flagcert/errors.hpp"

namespace flagcert {

namespace {

void expect_header(std::istream& in, std::string_view header) {
  std::string line;
  if (!std::getline(in, line) || line != header) {
    throw InputError("file must start with '" + std::string(header) + "'");
  }
}

// Value of "key=value" in a whitespace-separated line.
std::string field(const std::string& line, std::string_view key) {
  std::istringstream in(line);
  std::string token;
  while (in >> token) {
    if (token.size() > key.size() && token.compare(0, key.size(), key) == 0 && token[key.size()] == '=') {
      return token.substr(key.size() + 1);
    }
  }
  throw InputError("line '" + line + "' lacks '" + std::string(key) + "='");
}

int to_int(const std::string& s) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw InputError("malformed integer '" + s + "'");
  return v;
}

}  // namespace

void write_flag_list(std::ostream& out, const FlagBasis& flags) {
  out << kFlagListHeader << '\n';
  out << "type=" << flags.type().name << " k=" << flags.order() << '\n';
  for (const Flag& f : flags.flags()) out << encode_flag(f) << '\n';
}

std::vector<Flag> read_flag_list(std::istream& in) {
  expect_header(in, kFlagListHeader);
  std::string line;
  if (!std::getline(in, line)) throw InputError("flag list lacks its 'type=' line");
  const TypeGraph& type = types::by_name(field(line, "type"));
  const int k = to_int(field(line, "k"));
  std::vector<Flag> flags;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    Flag f = decode_flag(type, line);
    if (f.order() != k) throw InputError("flag '" + line + "' does not have " + std::to_string(k) + " vertices");
    flags.push_back(std::move(f));
  }
  return flags;
}

void write_pair_density(std::ostream& out, const PairDensityTable& table) {
  out << kPairDensityHeader << '\n';
  const std::string prefix = "sigma=" + table.type().name + " f1=";
  for (std::size_t g = 0; g < table.target().size(); ++g) {
    for (const PairCount& e : table.entries(g)) {
      out << prefix << e.a << " f2=" << e.b << " g=" << g << " val="
          << format_rational(table.value(e.a, e.b, static_cast<int>(g))) << '\n';
    }
  }
}

std::vector<PairDensityRecord> read_pair_density(std::istream& in) {
  expect_header(in, kPairDensityHeader);
  std::vector<PairDensityRecord> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    out.push_back(PairDensityRecord{field(line, "sigma"), to_int(field(line, "f1")), to_int(field(line, "f2")),
                                    to_int(field(line, "g")), parse_rational(field(line, "val"))});
  }
  return out;
}

void write_expressions(std::ostream& out, const std::vector<NamedLinComb>& exprs) {
  out << kExpressionHeader << '\n';
  for (const auto& e : exprs) {
    out << '[' << e.name << " basis=" << e.value.basis_id() << " size=" << e.value.basis_size() << "]\n";
    for (const auto& [g, v] : e.value.terms()) out << "g=" << g << " val=" << format_rational(v) << '\n';
  }
}

std::vector<NamedLinComb> read_expressions(std::istream& in) {
  expect_header(in, kExpressionHeader);
  std::vector<NamedLinComb> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw InputError("malformed section line '" + line + "'");
      const std::string inner = line.substr(1, line.size() - 2);
      const std::string name = inner.substr(0, inner.find(' '));
      const int size = to_int(field(inner, "size"));
      if (size < 0) throw InputError("negative basis size in '" + line + "'");
      out.push_back(NamedLinComb{name, LinComb(field(inner, "basis"), static_cast<std::size_t>(size))});
      continue;
    }
    if (out.empty()) throw InputError("expression line '" + line + "' before any section");
    out.back().value.add(to_int(field(line, "g")), parse_rational(field(line, "val")));
  }
  return out;
}

}  // namespace flagcert
