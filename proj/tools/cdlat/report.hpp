#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "cdlat/element_set.hpp"
#include "cdlat/properties.hpp"
#include "json.hpp"

namespace cdlat::cli {

using Json = nlohmann::ordered_json;

// Line-oriented text by default; with --json the fields are collected into a
// single object printed by finish().
class Report {
 public:
  Report(std::ostream& out, bool json) : out_(out), json_(json) {}

  bool json_mode() const { return json_; }

  // "key: value" in text mode, json[key] = value otherwise.
  void field(std::string_view key, const Json& value);
  void verdict(std::string_view key, const Verdict& v);
  // Text-only line.
  void line(std::string_view text);
  // JSON-only member.
  Json& json(std::string_view key) { return object_[std::string(key)]; }

  void finish();

 private:
  std::ostream& out_;
  bool json_;
  Json object_ = Json::object();
};

std::string join(const std::vector<std::size_t>& xs, std::string_view sep = " ");
Json to_json(const ElementSet& xs);

}  // namespace cdlat::cli
