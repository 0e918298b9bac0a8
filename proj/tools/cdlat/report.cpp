#include "report.hpp"

#include <ostream>

namespace cdlat::cli {

namespace {

std::string render(const Json& value) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_array()) {
    std::string out;
    for (const Json& item : value) {
      if (!out.empty()) out += ' ';
      out += render(item);
    }
    return out;
  }
  return value.dump();
}

}  // namespace

void Report::field(std::string_view key, const Json& value) {
  if (json_) {
    object_[std::string(key)] = value;
  } else {
    out_ << key << ": " << render(value) << '\n';
  }
}

void Report::verdict(std::string_view key, const Verdict& v) {
  if (json_) {
    object_[std::string(key)] = v.holds;
    if (!v.holds) object_[std::string(key) + "_witness"] = v.witness;
    return;
  }
  out_ << key << ": " << (v.holds ? "true" : "false");
  if (!v.holds && !v.witness.empty()) out_ << " (witness " << join(v.witness) << ')';
  out_ << '\n';
}

void Report::line(std::string_view text) {
  if (!json_) out_ << text << '\n';
}

void Report::finish() {
  if (json_) out_ << object_.dump() << '\n';
  out_.flush();
}

std::string join(const std::vector<std::size_t>& xs, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(xs[i]);
  }
  return out;
}

Json to_json(const ElementSet& xs) { return xs.members(); }

}  // namespace cdlat::cli
