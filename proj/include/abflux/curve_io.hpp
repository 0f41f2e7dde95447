#pragma once

#include "abflux/curve.hpp"

#include <filesystem>
#include <string_view>
#include <vector>

namespace abflux {

// Plain text, one `x y z` vertex (m) per line, curves separated by blank
// lines, each implicitly closed. Throws ConfigError on malformed lines and
// GeometryError on degenerate curves.
std::vector<Curve> parse_curves(std::string_view text);

// Throws IoError when the file cannot be read.
std::vector<Curve> load_curves(const std::filesystem::path& path);

} // namespace abflux
