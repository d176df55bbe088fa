// Copyright 2026 The dacqo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dacqo/bench/report.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "dacqo/bench/config.hpp"
#include "dacqo/error.hpp"
#include "json.hpp"

namespace dacqo::bench {

std::string cell(double value) { return fmt::format("{:.10g}", value); }
std::string cell(int value) { return std::to_string(value); }
std::string cell(long long value) { return std::to_string(value); }
std::string cell(std::size_t value) { return std::to_string(value); }
std::string cell(std::string_view value) { return std::string(value); }
std::string cell(bool value) { return value ? "true" : "false"; }

CsvTable::CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

void CsvTable::add_row(std::vector<std::string> row) {
  if (row.size() != header_.size()) throw ArgumentError("CSV row width does not match the header");
  rows_.push_back(std::move(row));
}

std::string CsvTable::str() const {
  std::string out;
  auto line = [&](const std::vector<std::string>& r) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i) out += ',';
      out += r[i];
    }
    out += '\n';
  };
  line(header_);
  for (const auto& r : rows_) line(r);
  return out;
}

namespace {

void write_file(const std::string& path, const std::string& text) {
  const std::filesystem::path p(path);
  if (p.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(p.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ConfigError("cannot write " + path);
  out << text;
  if (!out) throw ConfigError("write failed: " + path);
}

}  // namespace

void write_report(const std::string& path, const CsvTable& table, std::string_view command,
                  std::string_view resolved_config_json, std::string_view summary_json) {
  write_file(path, table.str());
  nlohmann::ordered_json side;
  side["command"] = command;
  side["tool"] = "dacqo";
  side["version"] = DACQO_VERSION;
  side["csv"] = std::filesystem::path(path).filename().string();
  side["columns"] = table.header();
  side["rows"] = table.rows().size();
  side["config"] = nlohmann::ordered_json::parse(resolved_config_json);
  side["summary"] = nlohmann::ordered_json::parse(summary_json);
  write_file(path + ".json", side.dump(2) + "\n");
}

CsvTable read_csv(const std::string& path) {
  std::istringstream in(read_text_file(path));
  std::string line;
  auto split = [](const std::string& s) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
      const auto pos = s.find(',', start);
      parts.push_back(s.substr(start, pos - start));
      if (pos == std::string::npos) break;
      start = pos + 1;
    }
    return parts;
  };
  if (!std::getline(in, line)) throw ConfigError(path + ": empty CSV");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  CsvTable t(split(line));
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto row = split(line);
    if (row.size() != t.header().size()) {
      throw ConfigError(path + ": line " + std::to_string(lineno) + " has " + std::to_string(row.size()) +
                        " fields, expected " + std::to_string(t.header().size()));
    }
    t.add_row(std::move(row));
  }
  return t;
}

std::string sibling_path(const std::string& path, std::string_view suffix) {
  const std::filesystem::path p(path);
  std::filesystem::path out = p.parent_path() / (p.stem().string() + std::string(suffix) + p.extension().string());
  return out.string();
}

}  // namespace dacqo::bench
