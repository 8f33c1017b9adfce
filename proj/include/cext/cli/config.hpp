#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cext/group/finite_group.hpp"

namespace cext::cli {

enum class ExitCode : int { kPass = 0, kCheckFailed = 1, kUsage = 2, kCapacity = 3 };

struct RunConfig {
  std::string command;
  /// The invocation, echoed into the report.
  std::vector<std::string> argv;

  std::optional<std::string> group;  // table path, or a catalog name such as Z2xZ2
  std::optional<std::filesystem::path> cochain;
  std::optional<std::filesystem::path> loop;
  std::optional<std::filesystem::path> out;

  int modulus = 2;
  bool modulus_given = false;
  int dim = 2;
  std::size_t samples = 128;
  int modes = 3;
  std::uint64_t seed = 0;
  double step = 1e-3;
  std::size_t trials = 100;
  std::size_t grid_u = 64;
  std::size_t grid_phi = 64;

  // Test hooks, not for production runs.
  bool negate_alpha = false;
  bool degenerate = false;
  bool reverse_orientation = false;

  std::map<std::string, double> tolerances;

  /// The override for `name` if one was given, else `fallback`.
  double tolerance(const std::string& name, double fallback) const;
};

/// "64x64" (or with the multiplication sign) -> {u, phi}.
std::pair<std::size_t, std::size_t> parse_grid(const std::string& text);

/// "name=value" into cfg.tolerances.
void add_tolerance_override(RunConfig& cfg, const std::string& text);

/// An existing file is read as a table; otherwise the catalog name is tried.
group::FiniteGroup load_group(const std::string& spec);

}  // namespace cext::cli
