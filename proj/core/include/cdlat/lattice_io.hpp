#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cdlat/lattice.hpp"

namespace cdlat {

// Lattice text format:
//
//   # comment lines start with '#'
//   elements <n>
//   <i> <j>        one line per cover pair, i below j, 0-based
//
// Bottom and top are inferred. Blank lines are ignored.
Lattice read_lattice(std::istream& in);
Lattice read_lattice_file(const std::string& path);

// Writes the header and the transitive reduction in ascending pair order.
void write_lattice(std::ostream& out, const Lattice& lattice);

// Label sidecar: one `<index> <label>` line per element.
void write_labels(std::ostream& out, const std::vector<std::string>& labels);

}  // namespace cdlat
