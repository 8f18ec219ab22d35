#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "flagcert/three_graph.hpp"

namespace flagcert {

inline constexpr std::string_view kGraphListHeader = "#flagcert graphs v1";

/// "n:" followed by the sorted triples as three digits each, e.g.
/// "4:123124134". Graphs on more than nine vertices use the wide form
/// "n:a,b,c a,b,c ..." which decode_graph also accepts.
std::string encode_graph(const ThreeGraph& g);
ThreeGraph decode_graph(std::string_view text);

void write_graph_list(std::ostream& out, const std::vector<ThreeGraph>& graphs);

/// Reads a graph list; the header line is mandatory, blank lines are skipped.
std::vector<ThreeGraph> read_graph_list(std::istream& in);

/// Order-independent comparison of two lists: equal multisets of canonical
/// forms. This is the comparison path for lists produced by other tools.
bool same_isomorphism_classes(const std::vector<ThreeGraph>& a, const std::vector<ThreeGraph>& b);

}  // namespace flagcert
