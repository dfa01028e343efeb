#include "djsim/report.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "djsim/errors.hpp"

namespace djsim::cli {

namespace {

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
  if (v.is_number_float()) {
    std::ostringstream os;
    os.precision(12);
    os << v.get<double>();
    return os.str();
  }
  if (v.is_null()) return "-";
  return v.dump();
}

bool is_record_list(const Json& v) {
  return v.is_array() && !v.empty() &&
         std::all_of(v.begin(), v.end(), [](const Json& e) { return e.is_object(); });
}

// Display width in code points; table text is UTF-8.
std::size_t display_width(const std::string& s) {
  return static_cast<std::size_t>(std::count_if(
      s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
}

void pad(std::ostringstream& os, const std::string& s, std::size_t width) {
  os << s;
  for (std::size_t w = display_width(s); w < width; ++w) os << ' ';
}

void render_records(std::ostringstream& os, const Json& rows) {
  std::vector<std::string> columns;
  for (const auto& row : rows) {
    for (const auto& [k, _] : row.items()) {
      if (std::find(columns.begin(), columns.end(), k) == columns.end()) {
        columns.push_back(k);
      }
    }
  }
  std::vector<std::vector<std::string>> cells;
  std::vector<std::size_t> widths;
  for (const auto& c : columns) widths.push_back(display_width(c));
  for (const auto& row : rows) {
    std::vector<std::string> line;
    for (std::size_t i = 0; i < columns.size(); ++i) {
      const auto it = row.find(columns[i]);
      line.push_back(it == row.end() ? "" : scalar_text(*it));
      widths[i] = std::max(widths[i], display_width(line.back()));
    }
    cells.push_back(std::move(line));
  }
  auto emit = [&](const std::vector<std::string>& line) {
    os << "  ";
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (i + 1 == line.size()) {
        os << line[i];
      } else {
        pad(os, line[i], widths[i]);
        os << "  ";
      }
    }
    os << '\n';
  };
  emit(columns);
  std::vector<std::string> rule;
  for (std::size_t w : widths) rule.emplace_back(w, '-');
  emit(rule);
  for (const auto& line : cells) emit(line);
}

void render_object(std::ostringstream& os, const Json& obj) {
  std::size_t key_width = 0;
  for (const auto& [k, v] : obj.items()) {
    if (!is_record_list(v) && !v.is_object()) key_width = std::max(key_width, display_width(k));
  }
  for (const auto& [k, v] : obj.items()) {
    if (is_record_list(v)) {
      os << k << ":\n";
      render_records(os, v);
    } else if (v.is_object()) {
      os << k << ":\n";
      for (const auto& [k2, v2] : v.items()) {
        os << "  " << k2 << ": " << scalar_text(v2) << '\n';
      }
    } else if (v.is_array()) {
      pad(os, k, key_width);
      os << "  ";
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ' ';
        os << scalar_text(v[i]);
      }
      os << '\n';
    } else {
      pad(os, k, key_width);
      os << "  " << scalar_text(v) << '\n';
    }
  }
}

}  // namespace

Format parse_format(std::string_view text) {
  if (text == "table") return Format::Table;
  if (text == "json") return Format::Json;
  throw ParseError("format must be 'table' or 'json', got '" + std::string(text) + "'");
}

Json Report::to_json() const {
  Json j = Json::object();
  j["command"] = command;
  j["status"] = success ? "ok" : "fail";
  j["inputs"] = inputs;
  j["results"] = results;
  return j;
}

std::string Report::render_json() const { return to_json().dump(2) + "\n"; }

std::string Report::render_table() const {
  std::ostringstream os;
  os << "== " << command << (success ? "" : " (FAILED)") << " ==\n";
  render_object(os, results);
  return os.str();
}

std::string Report::render(Format format) const {
  return format == Format::Json ? render_json() : render_table();
}

}  // namespace djsim::cli
