#pragma once

#include <iosfwd>
#include <string>

#include "hyperspec/hypergraph.hpp"

namespace hyperspec {

// HGF text format:
//   # comment lines start with '#'
//   k n m
//   m lines of k space-separated 0-based vertex ids
// Blank lines are ignored. Errors carry the 1-based line number.
Hypergraph read_hgf(std::istream& in);
Hypergraph read_hgf_file(const std::string& path);
Hypergraph parse_hgf(const std::string& text);

// Edges are emitted sorted lexicographically, one per line.
void write_hgf(std::ostream& out, const Hypergraph& g);
std::string to_hgf(const Hypergraph& g);

}  // namespace hyperspec
