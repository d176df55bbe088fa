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

#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace dacqo::bench {

// Formats a cell: integers verbatim, reals with 10 significant digits.
std::string cell(double value);
std::string cell(int value);
std::string cell(long long value);
std::string cell(std::size_t value);
std::string cell(std::string_view value);
std::string cell(bool value);

class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header);

  const std::vector<std::string>& header() const { return header_; }
  const std::vector<std::vector<std::string>>& rows() const { return rows_; }

  // Throws ArgumentError when the row width differs from the header.
  void add_row(std::vector<std::string> row);
  std::string str() const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

// Writes `table` to `path` and `<path>.json` with the command, tool version, resolved
// configuration and a summary object (JSON text).
void write_report(const std::string& path, const CsvTable& table, std::string_view command,
                  std::string_view resolved_config_json, std::string_view summary_json);

// Simple CSV reader for files written by CsvTable (no quoting).
CsvTable read_csv(const std::string& path);

// `out.csv` + "_crossover" -> `out_crossover.csv`
std::string sibling_path(const std::string& path, std::string_view suffix);

}  // namespace dacqo::bench
