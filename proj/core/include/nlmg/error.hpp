// Copyright 2026 The nlmg Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef NLMG_ERROR_HPP
#define NLMG_ERROR_HPP

#include <stdexcept>
#include <string>

namespace nlmg
{

// Raised for inputs that violate a documented precondition.
class InvalidArgument : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

// Raised when a numerical kernel cannot reach its accuracy target.
class NumericalFailure : public std::runtime_error
{
public:
  explicit NumericalFailure(const std::string &what, double achieved_error = 0.0);

  double achieved_error() const noexcept { return achieved_error_; }

private:
  double achieved_error_;
};

// Raised when a request exceeds a size cap.
class ResourceLimit : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

}  // namespace nlmg

#endif  // NLMG_ERROR_HPP
