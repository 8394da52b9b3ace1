// Copyright 2026 The lowmach Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#ifndef LOWMACH_SPECTRAL_FIELD_HPP
#define LOWMACH_SPECTRAL_FIELD_HPP

#include <algorithm>
#include <array>
#include <complex>
#include <span>
#include <string>
#include <vector>

#include "lowmach/error.hpp"
#include "lowmach/spectral/grid.hpp"

namespace lowmach
{

using cplx = std::complex<double>;

//
// Nodal samples of a scalar (1 component), vector (dim components) or tensor (dim*dim,
// row-major (i,j)) field. Components are stored contiguously one after another.
//
template <typename T>
class Field
{
public:
  using value_type = T;

  Field() = default;
  Field(const SpectralGrid &grid, int components, T fill = T{})
    : grid_(grid), components_(components), values_(grid.size() * components, fill)
  {
    if (components < 1)
      throw InvalidInput("field needs at least one component");
  }

  static Field scalar(const SpectralGrid &grid, T fill = T{}) { return Field(grid, 1, fill); }
  static Field vector(const SpectralGrid &grid, T fill = T{})
  {
    return Field(grid, grid.dim(), fill);
  }
  static Field tensor(const SpectralGrid &grid, T fill = T{})
  {
    return Field(grid, grid.dim() * grid.dim(), fill);
  }

  const SpectralGrid &grid() const { return grid_; }
  int components() const { return components_; }
  std::size_t size() const { return grid_.size(); }
  bool is_scalar() const { return components_ == 1; }
  bool is_vector() const { return components_ == grid_.dim(); }

  std::span<T> component(int c) { return {values_.data() + c * size(), size()}; }
  std::span<const T> component(int c) const { return {values_.data() + c * size(), size()}; }
  T &operator()(int c, std::size_t i) { return values_[c * size() + i]; }
  const T &operator()(int c, std::size_t i) const { return values_[c * size() + i]; }

  std::vector<T> &values() { return values_; }
  const std::vector<T> &values() const { return values_; }

  Field &operator+=(const Field &o)
  {
    check_same(o);
    for (std::size_t i = 0; i < values_.size(); i++)
      values_[i] += o.values_[i];
    return *this;
  }
  Field &operator-=(const Field &o)
  {
    check_same(o);
    for (std::size_t i = 0; i < values_.size(); i++)
      values_[i] -= o.values_[i];
    return *this;
  }
  Field &operator*=(T a)
  {
    for (auto &v : values_)
      v *= a;
    return *this;
  }
  // this += a * o
  Field &axpy(T a, const Field &o)
  {
    check_same(o);
    for (std::size_t i = 0; i < values_.size(); i++)
      values_[i] += a * o.values_[i];
    return *this;
  }

  void check_same(const Field &o) const
  {
    if (o.grid_ != grid_ || o.components_ != components_)
      throw InvalidInput("field shape mismatch");
  }

private:
  SpectralGrid grid_;
  int components_ = 1;
  std::vector<T> values_;
};

using RealField = Field<double>;
using ComplexField = Field<cplx>;

template <typename T>
Field<T> operator+(Field<T> a, const Field<T> &b)
{
  return a += b;
}
template <typename T>
Field<T> operator-(Field<T> a, const Field<T> &b)
{
  return a -= b;
}
template <typename T>
Field<T> operator*(T s, Field<T> a)
{
  return a *= s;
}

ComplexField to_complex(const RealField &f);
RealField real_part(const ComplexField &f);
RealField imag_part(const ComplexField &f);
// Copies component c into a new scalar field.
template <typename T>
Field<T> extract_component(const Field<T> &f, int c)
{
  Field<T> out = Field<T>::scalar(f.grid());
  auto src = f.component(c);
  std::copy(src.begin(), src.end(), out.component(0).begin());
  return out;
}

// Fills a field from a function of the node coordinates.
template <typename T, typename Fn>
Field<T> sample(const SpectralGrid &g, Fn &&fn)
{
  Field<T> out = Field<T>::scalar(g);
  auto hs = g.shape();
  std::size_t idx = 0;
  for (int i = 0; i < hs[0]; i++)
    for (int j = 0; j < hs[1]; j++)
      for (int k = 0; k < hs[2]; k++, idx++)
      {
        std::array<double, 3> x = {g.coordinate(0, i), g.dim() > 1 ? g.coordinate(1, j) : 0.0,
                                   g.dim() > 2 ? g.coordinate(2, k) : 0.0};
        out(0, idx) = fn(x);
      }
  return out;
}

// Assembles a vector field from scalar components.
template <typename T>
Field<T> stack(const std::vector<Field<T>> &parts)
{
  if (parts.empty())
    throw InvalidInput("stack needs at least one part");
  int nc = 0;
  for (const auto &p : parts)
    nc += p.components();
  Field<T> out(parts.front().grid(), nc);
  int c = 0;
  for (const auto &p : parts)
  {
    if (p.grid() != out.grid())
      throw InvalidInput("stack: grid mismatch");
    for (int pc = 0; pc < p.components(); pc++, c++)
    {
      auto src = p.component(pc);
      std::copy(src.begin(), src.end(), out.component(c).begin());
    }
  }
  return out;
}

}  // namespace lowmach

#endif  // LOWMACH_SPECTRAL_FIELD_HPP
