#pragma once

#include <iosfwd>
#include <string>

#include "kshell/complex.hpp"
#include "kshell/expansion.hpp"
#include "kshell/graphs.hpp"

namespace kshell {

// Text formats. One object per file; `#` starts a full-line comment, blank
// lines are ignored. An optional leading header line declares the label
// order and any isolated labels:
//
//   complex:  "vertices: a b c"  then one facet per line ("{}" = empty face)
//   graph:    "vertices: a b c"  then one edge "u v" per line
//   ideal:    "vars: x1 x2"      then one generator per line as
//             space-separated "var^exp" factors ("1" = unit monomial)
//
// Without a header the labels are collected in first-appearance order.
// Emission is canonical (header always present) and round-trips bit-exactly.

Complex parse_complex(std::istream& in, const std::string& name = "<input>");
Complex parse_complex_text(const std::string& text, const std::string& name = "<input>");
std::string emit_complex(const Complex& c);

Graph parse_graph(std::istream& in, const std::string& name = "<input>");
Graph parse_graph_text(const std::string& text, const std::string& name = "<input>");
std::string emit_graph(const Graph& g);

MonomialIdeal parse_ideal(std::istream& in, const std::string& name = "<input>");
MonomialIdeal parse_ideal_text(const std::string& text, const std::string& name = "<input>");
std::string emit_ideal(const MonomialIdeal& ideal);

Complex load_complex(const std::string& path);
Graph load_graph(const std::string& path);
MonomialIdeal load_ideal(const std::string& path);

}  // namespace kshell
