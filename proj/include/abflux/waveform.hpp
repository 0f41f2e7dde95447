#pragma once

#include "abflux/constants.hpp"

#include <vector>

namespace abflux {

// Symmetric triangular drive 0 -> +B' -> 0 -> -B' -> 0, repeated.
struct Waveform {
  double amplitude;      // T
  int steps_per_quarter; // >= 2
  int cycles;            // >= 1
  // The hysteresis procedure needs B' above the ring's critical field.
  // Clearing this permits sub-critical control runs.
  bool require_quench = true;
};

// cycles * 4 * steps_per_quarter + 1 samples. Every quarter hits 0 and
// +/-B' exactly; the negative half is the exact negation of the positive half.
// Throws ConfigError on bad step/cycle counts and InvalidAmplitudeError when
// B' <= B_c(ring) (unless require_quench is false) or B' >= B_c(Pb).
std::vector<double> generate_waveform(const Waveform& w, const Material& ring_material);

} // namespace abflux
