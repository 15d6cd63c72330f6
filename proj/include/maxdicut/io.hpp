#pragma once

#include <iosfwd>
#include <string>

#include "maxdicut/digraph.hpp"

namespace maxdicut {

// Instance text format: first non-comment line "n m", then m lines
// "tail head weight" (0-indexed; weight a decimal literal or "p/q").
// Lines starting with '#' are ignored anywhere. Serialization emits
// canonical "p" / "p/q" weights, so gen -> parse -> serialize is
// byte-identical and rational round-trips are bit-exact.
WeightedDigraph parse_digraph(std::istream& in);
WeightedDigraph parse_digraph(const std::string& text);
WeightedDigraph load_digraph(const std::string& path);

void serialize_digraph(const WeightedDigraph& d, std::ostream& out);
std::string serialize_digraph(const WeightedDigraph& d);
void save_digraph(const WeightedDigraph& d, const std::string& path);

}  // namespace maxdicut
