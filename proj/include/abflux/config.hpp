#pragma once

#include "abflux/experiment.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace abflux {

// Flat `key = value` text, one setting per line, `#` starts a comment.
// Keys: material, b_prime_gauss, open_area_m2, core_flux_wb, orientation,
// steps_per_quarter, cycles, refine, verify. Missing keys keep their value
// in `base`; unknown keys and malformed values throw ConfigError.
ExperimentConfig parse_config(std::string_view text,
                              const ExperimentConfig& base = ExperimentConfig::defaults());

// Throws IoError when the file cannot be read.
ExperimentConfig load_config(const std::filesystem::path& path,
                             const ExperimentConfig& base = ExperimentConfig::defaults());

void apply_setting(ExperimentConfig& cfg, std::string_view key, std::string_view value);

// `key=value` as given on the command line.
void apply_override(ExperimentConfig& cfg, std::string_view assignment);

// Inverse of parse_config; values in shortest round-trip form.
std::string format_config(const ExperimentConfig& cfg);

} // namespace abflux
