#include "abflux/experiment.hpp"

#include "abflux/config.hpp"
#include "abflux/errors.hpp"
#include "abflux/output.hpp"
#include "abflux/waveform.hpp"

#include <cmath>
#include <sstream>

namespace abflux {

ExperimentConfig ExperimentConfig::defaults() {
  const double bc = lookup_material("Sn").critical_field;
  ExperimentConfig cfg;
  cfg.material = "Sn";
  // 1.05 Bc(Sn), written as the decimal a config file would carry.
  cfg.b_prime = 0.0294;
  cfg.open_area = 10.3 * flux_quantum() / bc;
  cfg.core_flux = 0.4 * flux_quantum();
  cfg.orientation = 1;
  return cfg;
}

void validate(const ExperimentConfig& cfg) {
  lookup_material(cfg.material);
  validate(TorusCore{cfg.core_flux, cfg.orientation});
  validate(RingGeometry{cfg.open_area, lookup_material(cfg.material)});
  if (cfg.steps_per_quarter < 2) {
    throw ConfigError("steps_per_quarter must be >= 2");
  }
  if (cfg.cycles < 1) {
    throw ConfigError("cycles must be >= 1");
  }
  if (cfg.refine < 1) {
    throw ConfigError("refine must be >= 1");
  }
  if (!std::isfinite(cfg.b_prime)) {
    throw ConfigError("b_prime must be finite");
  }
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  validate(cfg);
  const RingGeometry geom{cfg.open_area, lookup_material(cfg.material)};
  const TorusCore core{cfg.core_flux, cfg.orientation};
  const auto samples = generate_waveform(
      Waveform{cfg.b_prime, cfg.steps_per_quarter, cfg.cycles, !cfg.allow_subcritical},
      geom.material);

  VerificationSettings vs;
  vs.refine = static_cast<std::size_t>(cfg.refine);

  ExperimentResult result;
  result.records.reserve(samples.size());
  RingState state = SuperconductingState{0};
  int prior_sign = 1;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double b = samples[i];
    const StepResult next = step(state, b, geom, core, prior_sign);
    state = next.state;

    if (next.trapped) {
      TrapEvent ev{i, *trapped_quanta(state), std::nullopt};
      if (cfg.verify) {
        ev.residual = verify_state_flux(state, geom, core, vs);
        if (!(std::abs(*ev.residual) < vs.tolerance_quanta * flux_quantum())) {
          std::ostringstream os;
          os << "flux verification failed at step " << i << ": residual "
             << *ev.residual / flux_quantum() << " Phi0 for n = " << ev.n;
          throw VerificationError(os.str());
        }
      }
      result.traps.push_back(ev);
    }

    const bool zero_crossing = (b == 0.0 && i > 0);
    result.records.push_back({i, b, state, next.probe, zero_crossing});
    if (zero_crossing) {
      result.remnants.push_back({i, prior_sign, next.probe});
    }
    if (b > 0.0) {
      prior_sign = 1;
    } else if (b < 0.0) {
      prior_sign = -1;
    }
  }
  return result;
}

double asymmetry(const std::vector<Remnant>& remnants) {
  const Remnant* pos = nullptr;
  const Remnant* neg = nullptr;
  for (const auto& r : remnants) {
    (r.side > 0 ? pos : neg) = &r;
  }
  if (pos == nullptr || neg == nullptr) {
    throw InsufficientDataError(
        "asymmetry needs at least one positive-side and one negative-side remnant");
  }
  return pos->probe + neg->probe;
}

std::vector<SweepPoint> sweep(const ExperimentConfig& base, const std::string& key, double from,
                              double to, int points) {
  if (points < 1) {
    throw ConfigError("sweep needs at least one point");
  }
  if (!std::isfinite(from) || !std::isfinite(to)) {
    throw ConfigError("sweep bounds must be finite");
  }
  std::vector<SweepPoint> out;
  out.reserve(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    const double value =
        points == 1 ? from : (i + 1 == points ? to : from + (to - from) * i / (points - 1));
    ExperimentConfig cfg = base;
    apply_setting(cfg, key, format_double(value));
    const auto result = run_experiment(cfg);
    out.push_back({value, asymmetry(result.remnants)});
  }
  return out;
}

} // namespace abflux
