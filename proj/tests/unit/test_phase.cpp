#include "abflux/constants.hpp"
#include "abflux/errors.hpp"
#include "abflux/integrals.hpp"
#include "abflux/phase.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace abflux;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
const double kPairCharge = 2.0 * Constants::e;

GaugeFunction random_gauge(std::mt19937_64& rng, int family, double scale) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  switch (family) {
  case 0:
    return LinearGauge{scale * Vec3(u(rng), u(rng), u(rng))};
  case 1: {
    Eigen::Matrix3d Q;
    for (int i = 0; i < 9; ++i) Q(i / 3, i % 3) = scale * u(rng);
    return QuadraticGauge{Q};
  }
  default:
    return SinusoidalGauge{scale * u(rng), Vec3(2 * u(rng), 2 * u(rng), 2 * u(rng))};
  }
}

} // namespace

TEST(ActionToPhase, Definitional) {
  EXPECT_DOUBLE_EQ(action_to_phase(Constants::hbar), 1.0);
  EXPECT_EQ(action_to_phase(0.0), 0.0);
  EXPECT_DOUBLE_EQ(action_to_phase(kTwoPi * Constants::hbar), kTwoPi);
}

TEST(PlaneWavePhase, MinkowskiContraction) {
  const auto k = FourVector::wavevector(0.0, Vec3(2, 0, 0));
  const auto dx = FourVector::displacement(0.0, Vec3(1, 0, 0));
  EXPECT_EQ(plane_wave_phase(k, dx), -2.0);

  const auto kt = FourVector::wavevector(3.0, Vec3::Zero());
  const auto dt = FourVector::displacement(2.0, Vec3::Zero());
  EXPECT_NEAR(plane_wave_phase(kt, dt), 6.0, 1e-14);
}

TEST(PlaneWavePhase, ActionEqualsMomentumContraction) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1e3, 1e3);
  for (int i = 0; i < 500; ++i) {
    const auto k = FourVector::wavevector(1e6 * u(rng), Vec3(u(rng), u(rng), u(rng)));
    const auto dx = FourVector::displacement(1e-9 * u(rng), Vec3(u(rng), u(rng), u(rng)));
    const FourVector p = four_momentum(k);
    EXPECT_DOUBLE_EQ(p.spatial.x(), Constants::hbar * k.spatial.x());
    EXPECT_DOUBLE_EQ(p.t * Constants::c, Constants::hbar * k.t * Constants::c);
    const double action = contract(p, dx);
    const double via_phase = Constants::hbar * plane_wave_phase(k, dx);
    const double scale = Constants::hbar * (std::abs(k.t * dx.t) + k.spatial.cwiseAbs().dot(dx.spatial.cwiseAbs()));
    EXPECT_NEAR(action, via_phase, 1e-14 * scale);
  }
}

TEST(ChargedPhase, CooperPairAroundOneFluxQuantum) {
  const Curve gamma = make_planar_circle(1.0, 512);
  const auto core = FieldSource::flux_filament(make_hopf_partner(1.0, 512), flux_quantum());
  const double phase = charged_phase({kPairCharge, gamma, core}, 1);
  EXPECT_NEAR(phase, kTwoPi, 1e-3 * kTwoPi);
}

TEST(ChargedPhase, ZeroSourceGivesZero) {
  const Curve path = make_segment_path(Vec3(0, 0, 0), Vec3(1, 2, 3), 50);
  EXPECT_EQ(charged_phase({Constants::e, path, FieldSource::uniform(Vec3::Zero())}, 3), 0.0);
  EXPECT_EQ(charged_phase({-7.0 * Constants::e, path, FieldSource::composite({})}, 1), 0.0);
  const auto empty_filament =
      FieldSource::flux_filament(make_circle(Vec3(5, 5, 5), Vec3::UnitX(), Vec3::UnitY(), 1, 64), 0.0);
  EXPECT_EQ(charged_phase({kPairCharge, path, empty_filament}, 1), 0.0);
}

TEST(ChargedPhase, OpenPathInUniformFieldIsLinearInCharge) {
  const Vec3 B(0.01, -0.02, 0.03);
  const auto src = FieldSource::uniform(B);
  const Curve path = make_segment_path(Vec3(0.1, 0.2, 0.3), Vec3(-0.4, 0.5, 0.9), 7);
  double expected = 0.0;
  for (std::size_t i = 0; i < path.segment_count(); ++i) {
    const auto s = path.segment(i);
    expected += 0.5 * B.cross(s.midpoint()).dot(s.delta());
  }
  expected *= Constants::e / Constants::hbar;
  const double one = charged_phase({Constants::e, path, src}, 1);
  EXPECT_NEAR(one, expected, 1e-14 * std::abs(expected));
  EXPECT_EQ(charged_phase({2.0 * Constants::e, path, src}, 1), 2.0 * one);
}

TEST(ApplyGauge, LinearGaugeShiftsOpenPathByEndpointDifference) {
  const auto src = FieldSource::current_loop(Vec3::Zero(), Vec3::UnitZ(), 1.0, 1.0);
  const Vec3 a(0.2, 0.1, 0.5), b(-0.3, 0.4, -0.2);
  const Curve path = make_segment_path(a, b, 100);
  const Vec3 c(3e-7, -1e-7, 2e-7);
  const GaugeFunction chi = LinearGauge{c};
  const double q = kPairCharge;
  const double before = charged_phase({q, path, src}, 1);
  const double after = charged_phase({q, path, apply_gauge(src, chi)}, 1);
  const double expected = (q / Constants::hbar) * c.dot(b - a);
  EXPECT_NEAR(after - before, expected, 1e-10 * std::abs(expected));
  EXPECT_NEAR(after - before, (q / Constants::hbar) * (chi.value(b) - chi.value(a)),
              1e-10 * std::abs(expected));
}

TEST(ApplyGauge, ZeroGaugeIsBitwiseIdentity) {
  const auto src = FieldSource::flux_filament(make_hopf_partner(1.0, 128), flux_quantum());
  const Curve gamma = make_planar_circle(1.0, 128);
  const Curve open = make_segment_path(Vec3(0.3, -0.2, 0.1), Vec3(0.5, 0.5, -0.5), 40);
  for (const GaugeFunction& zero :
       {GaugeFunction::zero(), GaugeFunction(QuadraticGauge{Eigen::Matrix3d::Zero()}),
        GaugeFunction(SinusoidalGauge{0.0, Vec3(1, 2, 3)})}) {
    const auto shifted = apply_gauge(src, zero);
    EXPECT_EQ(holonomy(kPairCharge, shifted, gamma, 2), holonomy(kPairCharge, src, gamma, 2));
    EXPECT_EQ(charged_phase({kPairCharge, open, shifted}, 2), charged_phase({kPairCharge, open, src}, 2));
  }
}

TEST(ApplyGauge, OpenPathCovarianceProperty) {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const auto src = FieldSource::flux_filament(make_hopf_partner(1.0, 256), flux_quantum());
  const double scale = flux_quantum();
  for (int trial = 0; trial < 60; ++trial) {
    const Vec3 a(u(rng), u(rng), 1.5 + u(rng)), b(u(rng), u(rng), -1.5 + u(rng));
    const Curve path = make_segment_path(a, b, 20000);
    const GaugeFunction chi = random_gauge(rng, trial % 3, scale);
    const double diff = charged_phase({kPairCharge, path, apply_gauge(src, chi)}, 1) -
                        charged_phase({kPairCharge, path, src}, 1);
    const double expected = (kPairCharge / Constants::hbar) * (chi.value(b) - chi.value(a));
    const double ref = std::max(std::abs(expected), kPairCharge / Constants::hbar * scale);
    EXPECT_NEAR(diff, expected, 1e-8 * ref) << "trial " << trial;
  }
}

TEST(Holonomy, GaugeInvariantOnClosedPaths) {
  std::mt19937_64 rng(5);
  const Curve gamma = make_planar_circle(1.0, 4096);
  const auto src = FieldSource::composite(
      {FieldSource::flux_filament(make_hopf_partner(1.0, 256), 3.0 * flux_quantum()),
       FieldSource::uniform(Vec3(0, 0, 2.0 * flux_quantum()))});
  const double base = holonomy(kPairCharge, src, gamma, 1);
  for (int trial = 0; trial < 60; ++trial) {
    const GaugeFunction chi = random_gauge(rng, trial % 3, flux_quantum());
    const double shifted = holonomy(kPairCharge, apply_gauge(src, chi), gamma, 1);
    EXPECT_LT(std::abs(shifted - base), 1e-8 * std::max(1.0, std::abs(base))) << trial;
  }
}

TEST(Holonomy, QuantizedFluxGivesMultiplesOfTwoPi) {
  const Curve gamma = make_planar_circle(1.0, 512);
  const Curve core = make_hopf_partner(1.0, 512);
  ASSERT_EQ(linking_number(gamma, core).integer, 1);
  for (int n = -2; n <= 2; ++n) {
    const double phase =
        holonomy(kPairCharge, FieldSource::flux_filament(core, n * flux_quantum()), gamma, 1);
    EXPECT_NEAR(phase, kTwoPi * n, 1e-3 * kTwoPi * std::max(1, std::abs(n)));
  }
  EXPECT_EQ(holonomy(kPairCharge, FieldSource::uniform(Vec3::Zero()), gamma, 1), 0.0);
}

TEST(Holonomy, EqualsScaledLineIntegral) {
  const Curve gamma = make_planar_circle(0.7, 300);
  const auto src = FieldSource::current_loop(Vec3(0, 0, 0.2), Vec3::UnitZ(), 1.0, 2.0);
  EXPECT_EQ(holonomy(Constants::e, src, gamma, 3),
            (Constants::e / Constants::hbar) * line_integral_A(src, gamma, 3));
  EXPECT_THROW(holonomy(Constants::e, src, make_segment_path(Vec3::Zero(), Vec3::UnitX(), 2), 1),
               GeometryError);
}

TEST(ChargedPhase, PathComposition) {
  const auto src = FieldSource::current_loop(Vec3::Zero(), Vec3(1, 1, 1), 0.8, 5.0);
  const Curve ab = make_segment_path(Vec3(0.1, 0, 0), Vec3(0.2, 0.3, 0.1), 50);
  const Curve bc = make_segment_path(Vec3(0.2, 0.3, 0.1), Vec3(-0.2, 0.1, 0.4), 70);
  const double split = charged_phase({Constants::e, ab, src}, 2) + charged_phase({Constants::e, bc, src}, 2);
  const double joined = charged_phase({Constants::e, concatenate(ab, bc), src}, 2);
  EXPECT_NEAR(split, joined, 1e-13 * std::abs(joined));
}

TEST(FluxQuantization, Examples) {
  const double phi0 = flux_quantum();
  auto r = check_flux_quantization(5.0 * phi0);
  EXPECT_EQ(r.n, 5);
  EXPECT_EQ(r.residual, 0.0);
  r = check_flux_quantization(0.0);
  EXPECT_EQ(r.n, 0);
  EXPECT_EQ(r.residual, 0.0);
  r = check_flux_quantization(5.4 * phi0);
  EXPECT_EQ(r.n, 5);
  EXPECT_NEAR(r.residual, 0.4 * phi0, 1e-12 * 0.4 * phi0);
}

TEST(FluxQuantization, HalfIntegersRoundAwayFromZero) {
  const double phi0 = flux_quantum();
  EXPECT_EQ(check_flux_quantization(2.5 * phi0).n, 3);
  EXPECT_EQ(check_flux_quantization(-2.5 * phi0).n, -3);
  EXPECT_EQ(check_flux_quantization(0.5 * phi0).n, 1);
  EXPECT_EQ(check_flux_quantization(-0.5 * phi0).n, -1);
  // Same tie assembled from decimal pieces in either order.
  EXPECT_EQ(check_flux_quantization(0.2 * phi0 + 10.3 * phi0).n, 11);
  EXPECT_EQ(check_flux_quantization(10.3 * phi0 + 0.2 * phi0).n, 11);
  EXPECT_EQ(check_flux_quantization(-0.2 * phi0 - 10.3 * phi0).n, -11);
  EXPECT_EQ(check_flux_quantization(-0.8 * phi0 + 10.3 * phi0).n, 10);
}

TEST(FluxQuantization, RoundTripProperty) {
  const double phi0 = flux_quantum();
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> ndist(-1000000, 1000000);
  std::uniform_real_distribution<double> rdist(-(phi0 / 2 - 1e-18), phi0 / 2 - 1e-18);
  for (int i = 0; i < 20000; ++i) {
    const long n = ndist(rng);
    const double phi = n * phi0 + rdist(rng);
    const auto q = check_flux_quantization(phi);
    EXPECT_EQ(q.n, n);
    EXPECT_LE(std::abs(q.residual), phi0 / 2);
  }
}
