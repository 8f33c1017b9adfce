#include "cext/cli/config.hpp"

#include <charconv>
#include <cmath>

#include "cext/error.hpp"
#include "cext/group/catalog.hpp"
#include "cext/group/table_io.hpp"

namespace cext::cli {

namespace {

std::size_t parse_size(std::string_view s, const std::string& what) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw ArgumentError("bad " + what + " '" + std::string(s) + "'");
  }
  return value;
}

}  // namespace

double RunConfig::tolerance(const std::string& name, double fallback) const {
  const auto it = tolerances.find(name);
  return it == tolerances.end() ? fallback : it->second;
}

std::pair<std::size_t, std::size_t> parse_grid(const std::string& text) {
  std::size_t pos = text.find('x');
  std::size_t width = 1;
  if (pos == std::string::npos) {
    pos = text.find("×");
    width = 2;
  }
  if (pos == std::string::npos) throw ArgumentError("grid must look like 64x64, got '" + text + "'");
  const std::string_view view(text);
  return {parse_size(view.substr(0, pos), "grid size"), parse_size(view.substr(pos + width), "grid size")};
}

void add_tolerance_override(RunConfig& cfg, const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0) throw ArgumentError("--tol expects name=value, got '" + text + "'");
  const std::string value = text.substr(eq + 1);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != value.size() || !std::isfinite(v) || v < 0.0) {
    throw ArgumentError("bad tolerance value '" + value + "'");
  }
  cfg.tolerances[text.substr(0, eq)] = v;
}

group::FiniteGroup load_group(const std::string& spec) {
  if (std::filesystem::exists(spec)) return group::read_group_file(spec);
  try {
    return group::group_by_name(spec);
  } catch (const ArgumentError&) {
    throw InputError("'" + spec + "' is neither a readable table file nor a known group name");
  }
}

}  // namespace cext::cli
