// abflux: hysteresis simulator for a superconducting ring linked with a
// flux-carrying torus, plus holonomy and linking-number utilities.

#include "abflux/config.hpp"
#include "abflux/constants.hpp"
#include "abflux/curve_io.hpp"
#include "abflux/errors.hpp"
#include "abflux/experiment.hpp"
#include "abflux/integrals.hpp"
#include "abflux/output.hpp"
#include "abflux/phase.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

namespace {

using namespace abflux;

struct SimulateArgs {
  std::string config;
  std::string out;
  std::string loop_out;
  std::vector<std::string> overrides;
  bool allow_subcritical = false;
};

struct SweepArgs {
  std::string config;
  std::string key;
  double from = 0.0;
  double to = 0.0;
  int points = 0;
  std::string out;
  std::vector<std::string> overrides;
};

struct PhaseArgs {
  double flux_quanta = 1.0;
  bool charge_pairs = false;
  std::size_t segments = 512;
  std::size_t refine = 1;
};

struct LinkingArgs {
  std::string curves;
  double min_distance = 1e-9;
};

ExperimentConfig load_with_overrides(const std::string& path,
                                     const std::vector<std::string>& overrides) {
  ExperimentConfig cfg = load_config(path);
  for (const auto& o : overrides) {
    apply_override(cfg, o);
  }
  return cfg;
}

int run_simulate(const SimulateArgs& args) {
  ExperimentConfig cfg = load_with_overrides(args.config, args.overrides);
  cfg.allow_subcritical = args.allow_subcritical;
  const auto result = run_experiment(cfg);

  std::ostream& summary = args.out.empty() ? std::cerr : std::cout;
  if (args.out.empty()) {
    write_records_csv(result.records, std::cout);
  } else {
    emit_csv(result.records, args.out);
  }
  if (!args.loop_out.empty()) {
    emit_loop_plot_data(result.records, args.loop_out);
  }

  const double phi0 = flux_quantum();
  for (const auto& t : result.traps) {
    summary << "trap step=" << t.step << " n=" << t.n;
    if (t.residual) {
      summary << " residual_phi0=" << format_double(*t.residual / phi0);
    }
    summary << '\n';
  }
  for (const auto& r : result.remnants) {
    summary << "remnant step=" << r.step << " side=" << (r.side > 0 ? '+' : '-')
            << " probe_T=" << format_double(r.probe)
            << " probe_phi0_per_area=" << format_double(r.probe * cfg.open_area / phi0) << '\n';
  }
  const double delta = asymmetry(result.remnants);
  summary << "delta_B_T=" << format_double(delta)
          << " delta_B_phi0_per_area=" << format_double(delta * cfg.open_area / phi0) << '\n';
  return 0;
}

int run_sweep(const SweepArgs& args) {
  const ExperimentConfig cfg = load_with_overrides(args.config, args.overrides);
  const auto points = sweep(cfg, args.key, args.from, args.to, args.points);
  emit_sweep_csv(args.key, points, args.out);
  return 0;
}

int run_phase(const PhaseArgs& args) {
  const double flux = args.flux_quanta * flux_quantum();
  const double charge = args.charge_pairs ? 2.0 * Constants::e : Constants::e;
  const Curve gamma = make_planar_circle(1.0, args.segments);
  const Curve core = make_hopf_partner(1.0, args.segments);
  const auto link = linking_number(gamma, core);
  const double phase = holonomy(charge, FieldSource::flux_filament(core, flux), gamma, args.refine);
  std::cout << "charge_C=" << format_double(charge) << '\n'
            << "flux_Wb=" << format_double(flux) << '\n'
            << "linking_number=" << link.integer << " raw=" << format_double(link.raw) << '\n'
            << "holonomy_rad=" << format_double(phase) << '\n'
            << "ratio_to_2pi=" << format_double(phase / (2.0 * std::numbers::pi)) << '\n';
  return 0;
}

int run_linking(const LinkingArgs& args) {
  const auto curves = load_curves(args.curves);
  if (curves.size() != 2) {
    throw ConfigError("curve file must contain exactly two curves, found " +
                      std::to_string(curves.size()));
  }
  const auto link = linking_number(curves[0], curves[1], args.min_distance);
  std::cout << "linking_number=" << link.integer << '\n'
            << "raw=" << format_double(link.raw) << '\n'
            << "deviation=" << format_double(link.deviation) << '\n';
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Linked superconducting ring flux-trapping simulator"};
  app.require_subcommand(1);

  SimulateArgs sim;
  auto* simulate = app.add_subcommand("simulate", "Run the hysteresis loop and write CSV");
  simulate->add_option("--config", sim.config, "key=value config file")->required();
  simulate->add_option("--out", sim.out, "record CSV (stdout when omitted)");
  simulate->add_option("--loop-out", sim.loop_out, "B_applied,probe CSV for plotting");
  simulate->add_option("--set", sim.overrides, "override a config key (key=value)");
  simulate->add_flag("--allow-subcritical", sim.allow_subcritical,
                     "permit an amplitude at or below the ring critical field");

  SweepArgs sw;
  auto* sweep_cmd = app.add_subcommand("sweep", "Asymmetry versus one config key");
  sweep_cmd->add_option("--config", sw.config)->required();
  sweep_cmd->add_option("--key", sw.key)->required();
  sweep_cmd->add_option("--from", sw.from)->required();
  sweep_cmd->add_option("--to", sw.to)->required();
  sweep_cmd->add_option("--points", sw.points)->required();
  sweep_cmd->add_option("--out", sw.out)->required();
  sweep_cmd->add_option("--set", sw.overrides, "override a config key (key=value)");

  PhaseArgs ph;
  auto* phase = app.add_subcommand("phase", "Holonomy of a charge around a flux filament");
  phase->add_option("--flux-quanta", ph.flux_quanta, "filament flux in units of h/2e");
  phase->add_flag("--charge-pairs", ph.charge_pairs, "use the Cooper-pair charge 2e");
  phase->add_option("--segments", ph.segments, "polygon segments per curve")
      ->check(CLI::Range(std::size_t{3}, std::size_t{1} << 20));
  phase->add_option("--refine", ph.refine)->check(CLI::PositiveNumber);

  LinkingArgs lk;
  auto* linking = app.add_subcommand("linking", "Gauss linking number of two closed curves");
  linking->add_option("--curves", lk.curves, "curve file")->required();
  linking->add_option("--min-distance", lk.min_distance, "intersection tolerance (m)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*simulate) return run_simulate(sim);
    if (*sweep_cmd) return run_sweep(sw);
    if (*phase) return run_phase(ph);
    if (*linking) return run_linking(lk);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
