#include "abflux/elliptic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace abflux {
namespace {

constexpr double kAgmTolerance = 1e-15;
constexpr double kSeriesCutoff = 0.1;

// Power-series coefficients (without the pi/2 prefactor) of K and E:
//   K = pi/2 sum a_n m^n,  a_n = [(1/2)_n / n!]^2
//   E = pi/2 sum b_n m^n,  b_n = (-1/2)_n (1/2)_n / (n!)^2
// The kernels below are linear combinations with coefficients in {1, -1/2, -1, 1},
// so their series follow term by term. Terms n = 0 and n = 1 cancel exactly.
template <typename Combine>
double series_kernel(double m, Combine combine) {
  double a_prev = 1.0, b_prev = 1.0; // n = 0
  double a = 0.25, b = -0.25;        // n = 1
  double sum = 0.0;
  double mp = m; // m^n
  for (int n = 2; n < 200; ++n) {
    const double dn = n;
    const double a_next = a * ((dn - 0.5) / dn) * ((dn - 0.5) / dn);
    const double b_next = b * ((dn - 1.5) / dn) * ((dn - 0.5) / dn);
    a_prev = a;
    b_prev = b;
    a = a_next;
    b = b_next;
    mp *= m;
    const double term = combine(a, b, a_prev, b_prev) * mp;
    sum += term;
    if (std::abs(term) <= 1e-17 * std::abs(sum)) {
      break;
    }
  }
  return 0.5 * std::numbers::pi * sum;
}

} // namespace

EllipticKE elliptic_ke(double m) {
  if (!(m >= 0.0 && m < 1.0)) {
    throw std::domain_error("elliptic parameter must satisfy 0 <= m < 1");
  }
  double a = 1.0;
  double g = std::sqrt(1.0 - m);
  double c2_sum = 0.5 * m; // 2^{n-1} c_n^2 summed, with c_0^2 = m
  double pow2 = 0.5;
  for (int i = 0; i < 64; ++i) {
    const double c = 0.5 * (a - g);
    if (std::abs(c) <= kAgmTolerance * a) {
      break;
    }
    const double a_next = 0.5 * (a + g);
    g = std::sqrt(a * g);
    a = a_next;
    pow2 *= 2.0;
    c2_sum += pow2 * c * c;
  }
  const double K = std::numbers::pi / (2.0 * a);
  return {K, K * (1.0 - c2_sum)};
}

double loop_potential_kernel(double m) {
  if (m < kSeriesCutoff) {
    // coefficient of m^n: a_n - a_{n-1}/2 - b_n
    return series_kernel(m, [](double a, double b, double a_prev, double) {
      return a - 0.5 * a_prev - b;
    });
  }
  const auto [K, E] = elliptic_ke(m);
  return (1.0 - 0.5 * m) * K - E;
}

double loop_radial_kernel(double m) {
  if (m < kSeriesCutoff) {
    // coefficient of m^n: b_n - b_{n-1}/2 - a_n + a_{n-1}
    return series_kernel(m, [](double a, double b, double a_prev, double b_prev) {
      return b - 0.5 * b_prev - a + a_prev;
    });
  }
  const auto [K, E] = elliptic_ke(m);
  return (1.0 - 0.5 * m) * E - (1.0 - m) * K;
}

} // namespace abflux
