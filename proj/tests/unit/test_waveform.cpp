#include "abflux/constants.hpp"
#include "abflux/errors.hpp"
#include "abflux/waveform.hpp"

#include <gtest/gtest.h>

using namespace abflux;

namespace {
const Material kTin = lookup_material("Sn");
}

TEST(Waveform, SingleCycleRamp) {
  const auto s = generate_waveform({0.03, 3, 1}, kTin);
  const std::vector<double> expected{0,     .01,  .02,  .03,  .02,  .01, 0,
                                     -.01, -.02, -.03, -.02, -.01, 0};
  ASSERT_EQ(s.size(), expected.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    EXPECT_NEAR(s[i], expected[i], 1e-17) << i;
  }
}

TEST(Waveform, QuarterPointsAreExact) {
  const double amp = 0.0294;
  const int q = 64;
  const auto s = generate_waveform({amp, q, 3}, kTin);
  ASSERT_EQ(s.size(), 3u * 4 * q + 1);
  for (std::size_t k = 0; k < s.size(); k += q) {
    const auto quarter = (k / q) % 4;
    const double expected = quarter == 1 ? amp : (quarter == 3 ? -amp : 0.0);
    EXPECT_EQ(s[k], expected) << k;
  }
  // Negative half mirrors the positive half exactly.
  for (int k = 0; k <= 2 * q; ++k) {
    EXPECT_EQ(s[2 * q + k], -s[k]);
  }
}

TEST(Waveform, CyclesRepeat) {
  const auto one = generate_waveform({0.03, 5, 1}, kTin);
  const auto two = generate_waveform({0.03, 5, 2}, kTin);
  const std::size_t period = 4 * 5;
  for (std::size_t i = 0; i < one.size(); ++i) {
    EXPECT_EQ(two[i], one[i]);
    EXPECT_EQ(two[i + period], one[i]);
  }
}

TEST(Waveform, AmplitudeGuards) {
  EXPECT_THROW(generate_waveform({0.02, 3, 1}, kTin), InvalidAmplitudeError);
  EXPECT_THROW(generate_waveform({0.028, 3, 1}, kTin), InvalidAmplitudeError);
  EXPECT_THROW(generate_waveform({0.078, 3, 1}, kTin), InvalidAmplitudeError);
  EXPECT_THROW(generate_waveform({-0.03, 3, 1}, kTin), InvalidAmplitudeError);
  EXPECT_NO_THROW(generate_waveform({0.02, 3, 1, false}, kTin));
  EXPECT_THROW(generate_waveform({0.09, 3, 1, false}, kTin), InvalidAmplitudeError);
}

TEST(Waveform, CountGuards) {
  EXPECT_THROW(generate_waveform({0.03, 1, 1}, kTin), ConfigError);
  EXPECT_THROW(generate_waveform({0.03, 2, 0}, kTin), ConfigError);
}
