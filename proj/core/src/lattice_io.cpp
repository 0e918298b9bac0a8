#include "cdlat/lattice_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "cdlat/errors.hpp"

namespace cdlat {

namespace {

bool skippable(const std::string& line) {
  auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == '#';
}

}  // namespace

Lattice read_lattice(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t n = 0;
  std::vector<CoverPair> pairs;
  while (std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;
    std::istringstream fields(line);
    if (!have_header) {
      std::string keyword;
      long long count = -1;
      if (!(fields >> keyword >> count) || keyword != "elements" || count <= 0) {
        throw ParseError("line " + std::to_string(line_no) +
                         ": expected 'elements <n>' with n >= 1");
      }
      n = static_cast<std::size_t>(count);
      have_header = true;
      continue;
    }
    long long i = -1;
    long long j = -1;
    std::string rest;
    if (!(fields >> i >> j) || (fields >> rest) || i < 0 || j < 0) {
      throw ParseError("line " + std::to_string(line_no) + ": expected '<i> <j>'");
    }
    if (static_cast<std::size_t>(i) >= n || static_cast<std::size_t>(j) >= n) {
      throw ParseError("line " + std::to_string(line_no) + ": index out of range");
    }
    pairs.emplace_back(static_cast<Element>(i), static_cast<Element>(j));
  }
  if (!have_header) throw ParseError("missing 'elements <n>' header");
  return Lattice::from_covers(n, pairs);
}

Lattice read_lattice_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return read_lattice(in);
}

void write_lattice(std::ostream& out, const Lattice& lattice) {
  out << "elements " << lattice.size() << '\n';
  for (const auto& [x, y] : lattice.covers()) out << x << ' ' << y << '\n';
}

void write_labels(std::ostream& out, const std::vector<std::string>& labels) {
  for (std::size_t i = 0; i < labels.size(); ++i) out << i << ' ' << labels[i] << '\n';
}

}  // namespace cdlat
