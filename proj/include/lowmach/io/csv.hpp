// Copyright 2026 The lowmach Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#ifndef LOWMACH_IO_CSV_HPP
#define LOWMACH_IO_CSV_HPP

#include <fstream>
#include <initializer_list>
#include <string>
#include <variant>
#include <vector>

namespace lowmach
{

// Round-trip formatting ("%.17g") so identical runs give byte-identical files.
std::string format_double(double v);

class CsvWriter
{
public:
  using Cell = std::variant<double, long long, std::string>;

  CsvWriter(const std::string &path, const std::vector<std::string> &header);
  void row(std::initializer_list<Cell> cells);
  void row(const std::vector<Cell> &cells);

private:
  std::ofstream out_;
  std::size_t width_;
};

// Two whitespace-separated columns, one point per line.
void write_xy(const std::string &path, const std::vector<double> &x, const std::vector<double> &y);

}  // namespace lowmach

#endif  // LOWMACH_IO_CSV_HPP
