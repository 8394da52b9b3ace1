// Copyright 2026 The lowmach Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#ifndef LOWMACH_IO_SNAPSHOT_HPP
#define LOWMACH_IO_SNAPSHOT_HPP

#include <string>

#include "lowmach/spectral/field.hpp"

namespace lowmach
{

// <stem>.bin holds little-endian float64 samples, component after component;
// <stem>.json holds {dim, N, L, components, time}.
void write_snapshot(const std::string &stem, const RealField &f, double time);

struct Snapshot
{
  RealField field;
  double time = 0.0;
};
Snapshot read_snapshot(const std::string &stem);

}  // namespace lowmach

#endif  // LOWMACH_IO_SNAPSHOT_HPP
