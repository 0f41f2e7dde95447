#pragma once

#include "abflux/curve.hpp"

#include <Eigen/Core>

#include <variant>

namespace abflux {

// Scalar gauge functions chi(x) in Wb with exact gradients (T m).

// chi = a . x
struct LinearGauge {
  Vec3 a;
};

// chi = x^T Q x / 2, Q symmetrized on construction.
struct QuadraticGauge {
  Eigen::Matrix3d Q;
};

// chi = c sin(k . x)
struct SinusoidalGauge {
  double amplitude; // Wb
  Vec3 k;           // rad/m
};

class GaugeFunction {
public:
  GaugeFunction(LinearGauge g) : form_(g) {}
  GaugeFunction(QuadraticGauge g);
  GaugeFunction(SinusoidalGauge g) : form_(g) {}

  static GaugeFunction zero() { return GaugeFunction(LinearGauge{Vec3::Zero()}); }

  double value(const Vec3& x) const;
  Vec3 gradient(const Vec3& x) const;

  const std::variant<LinearGauge, QuadraticGauge, SinusoidalGauge>& form() const {
    return form_;
  }

private:
  std::variant<LinearGauge, QuadraticGauge, SinusoidalGauge> form_;
};

} // namespace abflux
