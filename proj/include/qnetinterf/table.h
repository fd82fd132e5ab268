// Copyright 2026 The qnetinterf Authors
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

#ifndef QNETINTERF_TABLE_H_
#define QNETINTERF_TABLE_H_

#include <string>
#include <vector>

namespace qnetinterf {

/// Named numeric columns; every command result is emitted as one of these.
struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  /// Throws std::invalid_argument if the row width differs from the header.
  void add_row(std::vector<double> row);
  std::size_t column_index(const std::string& column) const;
  double at(std::size_t row, const std::string& column) const;

  /// Header line plus one line per row, values printed with %.17g so they
  /// read back bit-identically.
  std::string to_csv() const;
  /// {"name": ..., "columns": [...], "rows": [[...], ...]} with round-trip
  /// precision. Non-finite values are written as null.
  std::string to_json() const;

  static Table from_csv(const std::string& text);
  static Table from_json(const std::string& text);
};

}  // namespace qnetinterf

#endif  // QNETINTERF_TABLE_H_
