#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "flagcert/densities.hpp"
#include "flagcert/flags.hpp"
#include "flagcert/lincomb.hpp"

namespace flagcert {

inline constexpr std::string_view kFlagListHeader = "#flagcert flags v1";
inline constexpr std::string_view kPairDensityHeader = "#flagcert pairdensity v1";
inline constexpr std::string_view kExpressionHeader = "#flagcert expressions v1";

/// Header, a "type=<name> k=<k>" line, then one encode_flag() per line.
void write_flag_list(std::ostream& out, const FlagBasis& flags);
std::vector<Flag> read_flag_list(std::istream& in);

/// One line per non-zero entry, indices 0-based in the table's own orders:
/// "sigma=<name> f1=<a> f2=<b> g=<g> val=<p>/<q>".
void write_pair_density(std::ostream& out, const PairDensityTable& table);

struct PairDensityRecord {
  std::string sigma;
  int f1 = 0;
  int f2 = 0;
  int g = 0;
  Rational value;
};
std::vector<PairDensityRecord> read_pair_density(std::istream& in);

struct NamedLinComb {
  std::string name;
  LinComb value;
};

/// Sections "[<name> basis=<id> size=<n>]" followed by "g=<idx> val=<p>/<q>".
void write_expressions(std::ostream& out, const std::vector<NamedLinComb>& exprs);
std::vector<NamedLinComb> read_expressions(std::istream& in);

}  // namespace flagcert
