#pragma once

#include "abflux/experiment.hpp"

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

namespace abflux {

// Shortest decimal string that parses back to the same double; -0 prints as 0.
std::string format_double(double value);

// step,B_applied_T,state,n,probe_T,zero_crossing
void write_records_csv(const std::vector<LoopRecord>& records, std::ostream& out);
void emit_csv(const std::vector<LoopRecord>& records, const std::filesystem::path& destination);

// B_applied_T,probe_T in step order.
void write_loop_plot(const std::vector<LoopRecord>& records, std::ostream& out);
void emit_loop_plot_data(const std::vector<LoopRecord>& records,
                         const std::filesystem::path& destination);

// <key>,delta_B_T
void write_sweep_csv(const std::string& key, const std::vector<SweepPoint>& points,
                     std::ostream& out);
void emit_sweep_csv(const std::string& key, const std::vector<SweepPoint>& points,
                    const std::filesystem::path& destination);

} // namespace abflux
