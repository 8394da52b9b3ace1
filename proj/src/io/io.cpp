// Copyright 2026 The lowmach Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#include <bit>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>

#include <nlohmann/json.hpp>

#include "lowmach/io/csv.hpp"
#include "lowmach/io/snapshot.hpp"

namespace lowmach
{

namespace
{

std::uint64_t to_le(std::uint64_t v)
{
  if constexpr (std::endian::native == std::endian::big)
    return __builtin_bswap64(v);
  return v;
}

}  // namespace

void write_snapshot(const std::string &stem, const RealField &f, double time)
{
  const auto &g = f.grid();
  nlohmann::json meta;
  meta["dim"] = g.dim();
  meta["N"] = std::vector<int>(g.shape().begin(), g.shape().begin() + g.dim());
  std::vector<double> len;
  for (int a = 0; a < g.dim(); a++)
    len.push_back(g.length(a));
  meta["L"] = len;
  meta["components"] = f.components();
  meta["time"] = time;

  std::ofstream bin(stem + ".bin", std::ios::binary);
  if (!bin)
    throw std::runtime_error("cannot write " + stem + ".bin");
  for (double v : f.values())
  {
    std::uint64_t bits;
    std::memcpy(&bits, &v, sizeof bits);
    bits = to_le(bits);
    bin.write(reinterpret_cast<const char *>(&bits), sizeof bits);
  }
  std::ofstream js(stem + ".json");
  js << meta.dump(2) << "\n";
}

Snapshot read_snapshot(const std::string &stem)
{
  std::ifstream js(stem + ".json");
  if (!js)
    throw InvalidInput("cannot read " + stem + ".json");
  nlohmann::json meta = nlohmann::json::parse(js);
  const int dim = meta.at("dim").get<int>();
  std::array<int, 3> n = {2, 2, 2};
  std::array<double, 3> len = {1.0, 1.0, 1.0};
  for (int a = 0; a < dim; a++)
  {
    n[a] = meta.at("N").at(a).get<int>();
    len[a] = meta.at("L").at(a).get<double>();
  }
  Snapshot s;
  s.field = RealField(SpectralGrid(dim, n, len), meta.at("components").get<int>());
  s.time = meta.at("time").get<double>();
  std::ifstream bin(stem + ".bin", std::ios::binary);
  for (double &v : s.field.values())
  {
    std::uint64_t bits;
    if (!bin.read(reinterpret_cast<char *>(&bits), sizeof bits))
      throw InvalidInput("snapshot payload shorter than its sidecar declares: " + stem);
    bits = to_le(bits);
    std::memcpy(&v, &bits, sizeof bits);
  }
  return s;
}

std::string format_double(double v)
{
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

CsvWriter::CsvWriter(const std::string &path, const std::vector<std::string> &header)
  : out_(path), width_(header.size())
{
  if (!out_)
    throw std::runtime_error("cannot write " + path);
  for (std::size_t i = 0; i < header.size(); i++)
    out_ << (i ? "," : "") << header[i];
  out_ << "\n";
}

void CsvWriter::row(std::initializer_list<Cell> cells) { row(std::vector<Cell>(cells)); }

void CsvWriter::row(const std::vector<Cell> &cells)
{
  if (cells.size() != width_)
    throw InvalidInput("csv row width does not match header");
  bool first = true;
  for (const auto &c : cells)
  {
    if (!first)
      out_ << ",";
    first = false;
    if (auto d = std::get_if<double>(&c))
      out_ << format_double(*d);
    else if (auto i = std::get_if<long long>(&c))
      out_ << *i;
    else
      out_ << std::get<std::string>(c);
  }
  out_ << "\n";
}

void write_xy(const std::string &path, const std::vector<double> &x, const std::vector<double> &y)
{
  std::ofstream out(path);
  if (!out)
    throw std::runtime_error("cannot write " + path);
  for (std::size_t i = 0; i < x.size() && i < y.size(); i++)
    out << format_double(x[i]) << " " << format_double(y[i]) << "\n";
}

}  // namespace lowmach
