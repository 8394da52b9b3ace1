// Copyright 2026 The lowmach Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#ifndef LOWMACH_ERROR_HPP
#define LOWMACH_ERROR_HPP

#include <stdexcept>
#include <string>

namespace lowmach
{

// Input outside an operation's declared domain.
class InvalidInput : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

// Adaptive quadrature did not reach the requested tolerance.
class QuadratureError : public std::runtime_error
{
public:
  QuadratureError(const std::string &what, double achieved)
    : std::runtime_error(what), achieved_(achieved)
  {
  }
  double achieved() const { return achieved_; }

private:
  double achieved_;
};

// The box is too small for the requested time window.
class UnderResolved : public std::runtime_error
{
public:
  UnderResolved(const std::string &what, double unsafe_time)
    : std::runtime_error(what), unsafe_time_(unsafe_time)
  {
  }
  double unsafe_time() const { return unsafe_time_; }

private:
  double unsafe_time_;
};

// Time integration stopped. snapshot() names the diagnostic dump, if one was written.
class NumericalAbort : public std::runtime_error
{
public:
  NumericalAbort(const std::string &what, double time, std::string snapshot = {})
    : std::runtime_error(what), time_(time), snapshot_(std::move(snapshot))
  {
  }
  double time() const { return time_; }
  const std::string &snapshot() const { return snapshot_; }

private:
  double time_;
  std::string snapshot_;
};

}  // namespace lowmach

#endif  // LOWMACH_ERROR_HPP
