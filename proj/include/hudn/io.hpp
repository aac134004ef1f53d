#pragma once

#include <string>

#include "hudn/coloring.hpp"
#include "hudn/hypergraph.hpp"
#include "hudn/uniform.hpp"

namespace hudn {

/// Shortest decimal form that parses back to the identical double.
std::string format_double(double value);

// Hypergraph interchange: first line "n m", then one line per edge with
// space-separated vertex ids; a blank line is an empty edge.
std::string write_hypergraph_text(const Hypergraph& h);
Hypergraph read_hypergraph_text(const std::string& text);

// Uniform instance: header "r s1 ... sr m", then m lines "v1 ... vr weight".
std::string write_uniform_text(const UniformWeightedHypergraph& g);
UniformWeightedHypergraph read_uniform_text(const std::string& text);

// Coloring instance: header "n m K H", m edge lines as in the hypergraph
// format, then H hard-pair lines "u v".
std::string write_coloring_text(const ColoringInstance& inst);
ColoringInstance read_coloring_text(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace hudn
