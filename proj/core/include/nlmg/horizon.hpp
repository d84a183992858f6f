// Copyright 2026 The nlmg Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef NLMG_HORIZON_HPP
#define NLMG_HORIZON_HPP

#include <functional>
#include <string>

namespace nlmg
{

// Interaction horizon as a function of the mesh size, delta(h) = c * h^beta.
// beta = 0 fixes the horizon, beta = 1 keeps delta/h constant.
struct HorizonSpec
{
  double c = 1.0;
  double beta = 0.0;

  static HorizonSpec fixed(double delta) { return {delta, 0.0}; }
  static HorizonSpec proportional(double multiple) { return {multiple, 1.0}; }

  double delta(double h) const;
  void validate() const;
  std::string describe() const;
};

// Radial interaction kernel gamma(|s|, delta), supported on (0, delta).
class Kernel
{
public:
  using Function = std::function<double(double s, double delta)>;

  // 3 / delta^3 on (0, delta); its second moment over (0, delta) is 1.
  static Kernel constant();
  static Kernel custom(std::string name, Function gamma);

  double operator()(double s, double delta) const;
  double second_moment(double delta) const;

  bool is_constant() const { return constant_; }
  const std::string &name() const { return name_; }

private:
  Kernel(std::string name, Function gamma, bool constant);

  std::string name_;
  Function gamma_;
  bool constant_ = false;
};

}  // namespace nlmg

#endif  // NLMG_HORIZON_HPP
