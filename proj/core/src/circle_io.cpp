#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "cdlat/circles.hpp"
#include "cdlat/errors.hpp"

namespace cdlat {

namespace {

double parse_number(const std::string& text, std::size_t line_no) {
  double value = 0.0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  if (!text.empty() && *begin == '+') ++begin;
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError("line " + std::to_string(line_no) + ": bad number '" + text + "'");
  }
  return value;
}

std::string xml_escape(const std::string& text) {
  std::string out;
  for (char ch : text) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

std::string format_number(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

}  // namespace

CircleFamily read_circles(std::istream& in) {
  CircleFamily family;
  bool have_mode = false;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string t; fields >> t;) tokens.push_back(t);
    if (!have_mode) {
      if (tokens.size() != 2 || tokens[0] != "mode" ||
          (tokens[1] != "collinear" && tokens[1] != "general")) {
        throw ParseError("line " + std::to_string(line_no) +
                         ": expected 'mode collinear' or 'mode general'");
      }
      family.mode = tokens[1] == "collinear" ? CircleMode::collinear : CircleMode::general;
      have_mode = true;
      continue;
    }
    if (tokens.size() != 4) {
      throw ParseError("line " + std::to_string(line_no) + ": expected '<id> <cx> <cy> <r>'");
    }
    family.circles.push_back(Circle{tokens[0], parse_number(tokens[1], line_no),
                                    parse_number(tokens[2], line_no),
                                    parse_number(tokens[3], line_no)});
  }
  if (!have_mode) throw ParseError("missing 'mode' header");
  validate_family(family);
  return family;
}

CircleFamily read_circles_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return read_circles(in);
}

void write_circles(std::ostream& out, const CircleFamily& family) {
  out << "mode " << (family.mode == CircleMode::collinear ? "collinear" : "general") << '\n';
  for (const Circle& c : family.circles) {
    out << c.id << ' ' << format_number(c.cx) << ' ' << format_number(c.cy) << ' '
        << format_number(c.r) << '\n';
  }
}

std::string render_svg(const CircleFamily& family, std::optional<CircleSet> shaded) {
  double min_x = 0.0, max_x = 1.0, min_y = 0.0, max_y = 1.0;
  if (!family.circles.empty()) {
    min_x = min_y = 1e300;
    max_x = max_y = -1e300;
    for (const Circle& c : family.circles) {
      min_x = std::min(min_x, c.cx - c.r);
      max_x = std::max(max_x, c.cx + c.r);
      min_y = std::min(min_y, c.cy - c.r);
      max_y = std::max(max_y, c.cy + c.r);
    }
  }
  const double margin = 0.08 * std::max({max_x - min_x, max_y - min_y, 1.0});
  min_x -= margin;
  min_y -= margin;
  max_x += margin;
  max_y += margin;
  const double width = max_x - min_x;
  const double height = max_y - min_y;
  const double stroke = std::max(width, height) / 400.0;

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << format_number(min_x) << ' '
      << format_number(-max_y) << ' ' << format_number(width) << ' ' << format_number(height)
      << "\" width=\"800\" height=\"" << static_cast<int>(800.0 * height / width) << "\">\n";
  if (family.mode == CircleMode::collinear) {
    svg << "  <line x1=\"" << format_number(min_x) << "\" y1=\"0\" x2=\"" << format_number(max_x)
        << "\" y2=\"0\" stroke=\"#bbb\" stroke-width=\"" << format_number(stroke)
        << "\" stroke-dasharray=\"" << format_number(4 * stroke) << "\"/>\n";
  }
  for (std::size_t i = 0; i < family.size(); ++i) {
    const Circle& c = family.circles[i];
    const bool fill = shaded && shaded->contains(i);
    const double r = c.r > 0.0 ? c.r : 2.0 * stroke;
    svg << "  <circle cx=\"" << format_number(c.cx) << "\" cy=\"" << format_number(-c.cy)
        << "\" r=\"" << format_number(r) << "\" fill=\"" << (fill ? "#999" : "none")
        << "\" fill-opacity=\"0.5\" stroke=\"black\" stroke-width=\"" << format_number(stroke)
        << "\"/>\n";
    svg << "  <text x=\"" << format_number(c.cx) << "\" y=\"" << format_number(-c.cy + 8 * stroke)
        << "\" font-size=\"" << format_number(10 * stroke)
        << "\" text-anchor=\"middle\">" << xml_escape(c.id) << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace cdlat
