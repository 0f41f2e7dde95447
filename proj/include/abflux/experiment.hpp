#pragma once

#include "abflux/ring.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace abflux {

struct ExperimentConfig {
  std::string material = "Sn";
  double b_prime = 0.0;    // T, drive amplitude
  double open_area = 0.0;  // m^2
  double core_flux = 0.0;  // Wb
  int orientation = 1;
  int steps_per_quarter = 64;
  int cycles = 3;
  int refine = 2;
  bool verify = true;
  // Not a config-file key; lets a control run stay below B_c.
  bool allow_subcritical = false;

  // Sn ring, B' = 1.05 B_c, open area with B_c A = 10.3 Phi0,
  // sigma Phi_core = 0.4 Phi0, 64 steps per quarter, 3 cycles.
  static ExperimentConfig defaults();
};

// Throws ConfigError (or NotFoundError for the material) on any bound
// violation. Amplitude bounds are checked when the waveform is generated.
void validate(const ExperimentConfig& cfg);

struct LoopRecord {
  std::size_t step;
  double b_applied; // T
  RingState state;
  double probe;     // T
  bool zero_crossing;
};

// Probe reading at an applied-field zero; side is the sign of the excursion
// that preceded it.
struct Remnant {
  std::size_t step;
  int side;
  double probe; // T
};

struct TrapEvent {
  std::size_t step;
  long n;
  std::optional<double> residual; // Wb, when verification ran
};

struct ExperimentResult {
  std::vector<LoopRecord> records;
  std::vector<Remnant> remnants;
  std::vector<TrapEvent> traps;
};

// Folds the ring transition over the drive waveform from Superconducting{0}.
// With cfg.verify, every trapping event is cross-checked with
// verify_state_flux and a residual of 1e-3 Phi0 or more throws
// VerificationError.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

// B_rem+ + B_rem- from the last positive-side and last negative-side
// remnants. Throws InsufficientDataError unless both sides are present.
double asymmetry(const std::vector<Remnant>& remnants);

struct SweepPoint {
  double value;
  double delta_b; // T
};

// Runs the experiment at `points` evenly spaced values of a numeric config
// key and reports the asymmetry at each.
std::vector<SweepPoint> sweep(const ExperimentConfig& base, const std::string& key, double from,
                              double to, int points);

} // namespace abflux
