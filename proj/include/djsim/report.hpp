#pragma once

// Structured command output. A Report renders either as one JSON object
//
//   {"command": ..., "status": "ok"|"fail", "inputs": {...}, "results": {...}}
//
// or as aligned text: scalar results become "key: value" lines and arrays of
// objects become column-aligned tables.

#include <string>
#include <string_view>

#include <json.hpp>

namespace djsim::cli {

using Json = nlohmann::ordered_json;

enum class Format { Table, Json };

Format parse_format(std::string_view text);

struct Report {
  std::string command;
  Json inputs = Json::object();
  Json results = Json::object();
  bool success = true;

  Json to_json() const;
  std::string render(Format format) const;
  std::string render_table() const;
  std::string render_json() const;
};

}  // namespace djsim::cli
