#include "abflux/output.hpp"

#include "abflux/errors.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <stdexcept>

namespace abflux {
namespace {

template <typename Writer>
void write_file(const std::filesystem::path& destination, Writer&& writer) {
  std::ofstream out(destination, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError("cannot open " + destination.string() + " for writing");
  }
  writer(out);
  out.flush();
  if (!out) {
    throw IoError("failed writing " + destination.string());
  }
}

} // namespace

std::string format_double(double value) {
  if (value == 0.0) {
    return "0";
  }
  std::array<char, 32> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec != std::errc()) {
    throw std::runtime_error("failed to format double");
  }
  return std::string(buf.data(), ptr);
}

void write_records_csv(const std::vector<LoopRecord>& records, std::ostream& out) {
  out << "step,B_applied_T,state,n,probe_T,zero_crossing\n";
  for (const auto& r : records) {
    const auto n = trapped_quanta(r.state);
    out << r.step << ',' << format_double(r.b_applied) << ',' << (n ? "SC" : "N") << ',';
    if (n) {
      out << *n;
    }
    out << ',' << format_double(r.probe) << ',' << (r.zero_crossing ? "true" : "false") << '\n';
  }
}

void emit_csv(const std::vector<LoopRecord>& records, const std::filesystem::path& destination) {
  write_file(destination, [&](std::ostream& out) { write_records_csv(records, out); });
}

void write_loop_plot(const std::vector<LoopRecord>& records, std::ostream& out) {
  out << "B_applied_T,probe_T\n";
  for (const auto& r : records) {
    out << format_double(r.b_applied) << ',' << format_double(r.probe) << '\n';
  }
}

void emit_loop_plot_data(const std::vector<LoopRecord>& records,
                         const std::filesystem::path& destination) {
  write_file(destination, [&](std::ostream& out) { write_loop_plot(records, out); });
}

void write_sweep_csv(const std::string& key, const std::vector<SweepPoint>& points,
                     std::ostream& out) {
  out << key << ",delta_B_T\n";
  for (const auto& p : points) {
    out << format_double(p.value) << ',' << format_double(p.delta_b) << '\n';
  }
}

void emit_sweep_csv(const std::string& key, const std::vector<SweepPoint>& points,
                    const std::filesystem::path& destination) {
  write_file(destination, [&](std::ostream& out) { write_sweep_csv(key, points, out); });
}

} // namespace abflux
