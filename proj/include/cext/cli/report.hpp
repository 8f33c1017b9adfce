#pragma once

#include <cstdint>
#include <filesystem>
#include <limits>
#include <string>
#include <vector>

#include <json.hpp>

#include "cext/cli/config.hpp"

namespace cext::cli {

using Json = nlohmann::ordered_json;

/// One verified property: pass iff residual <= tolerance.
struct CheckRecord {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  std::string note;

  bool passed() const { return residual <= tolerance; }
};

/// The machine-readable outcome of one command. Contains nothing that
/// varies between runs with the same configuration.
class Report {
 public:
  explicit Report(const RunConfig& cfg);

  /// Records the SHA-256 of an input file.
  void add_input(const std::filesystem::path& path);
  const CheckRecord& add_check(std::string name, double residual, double tolerance,
                               std::string note = {});
  /// Command-specific payload.
  Json& results() { return results_; }
  const Json& results() const { return results_; }

  const std::vector<CheckRecord>& checks() const { return checks_; }
  const CheckRecord* find_check(const std::string& name) const;
  bool passed() const;
  ExitCode exit_code() const { return passed() ? ExitCode::kPass : ExitCode::kCheckFailed; }

  Json to_json() const;
  /// Pretty-printed JSON with a trailing newline.
  std::string dump() const;
  /// Human-readable lines, one per check.
  std::string summary() const;

 private:
  std::string command_;
  std::vector<std::string> argv_;
  Json config_;
  Json inputs_ = Json::array();
  std::vector<CheckRecord> checks_;
  Json results_ = Json::object();
};

std::string sha256_file(const std::filesystem::path& path);

/// Numbers that fit in 64 bits go out as JSON numbers, larger ones as
/// decimal strings.
template <typename Int>
Json count_json(const Int& value) {
  if (value >= 0 && value <= Int(std::numeric_limits<std::uint64_t>::max())) {
    return static_cast<std::uint64_t>(value);
  }
  return value.str();
}

const char* version();

}  // namespace cext::cli
