// Copyright 2026 The nlmg Authors
// SPDX-License-Identifier: Apache-2.0

#include "nlmg/error.hpp"

namespace nlmg
{

NumericalFailure::NumericalFailure(const std::string &what, double achieved_error)
  : std::runtime_error(what), achieved_error_(achieved_error)
{
}

}  // namespace nlmg
