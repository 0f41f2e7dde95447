#include "abflux/curve_io.hpp"

#include "abflux/errors.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace abflux {

std::vector<Curve> parse_curves(std::string_view text) {
  std::vector<Curve> curves;
  std::vector<Vec3> current;
  auto flush = [&] {
    if (!current.empty()) {
      curves.emplace_back(std::move(current), true);
      current.clear();
    }
  };

  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) {
      flush();
      continue;
    }
    Vec3 p;
    const char* it = line.data();
    const char* end = line.data() + line.size();
    for (int k = 0; k < 3; ++k) {
      while (it != end && (*it == ' ' || *it == '\t')) ++it;
      if (it != end && *it == '+') ++it;
      const auto [ptr, ec] = std::from_chars(it, end, p[k]);
      if (ec != std::errc() || ptr == it) {
        throw ConfigError("curve file line " + std::to_string(line_no) +
                          ": expected three numbers 'x y z'");
      }
      it = ptr;
    }
    while (it != end && (*it == ' ' || *it == '\t' || *it == '\r')) ++it;
    if (it != end) {
      throw ConfigError("curve file line " + std::to_string(line_no) +
                        ": trailing text after 'x y z'");
    }
    current.push_back(p);
  }
  flush();
  return curves;
}

std::vector<Curve> load_curves(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open curve file " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_curves(buf.str());
}

} // namespace abflux
