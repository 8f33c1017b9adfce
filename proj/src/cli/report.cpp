#include "cext/cli/report.hpp"

#include <array>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <openssl/evp.h>

#include "cext/error.hpp"

namespace cext::cli {

const char* version() { return CEXT_VERSION; }

std::string sha256_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), &EVP_MD_CTX_free);
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1) {
    throw Error("sha256 initialisation failed");
  }
  std::array<char, 1 << 14> buf{};
  while (in) {
    in.read(buf.data(), buf.size());
    if (in.gcount() > 0) EVP_DigestUpdate(ctx.get(), buf.data(), static_cast<std::size_t>(in.gcount()));
  }
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  EVP_DigestFinal_ex(ctx.get(), digest.data(), &len);
  std::ostringstream hex;
  for (unsigned int i = 0; i < len; ++i) {
    hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  }
  return hex.str();
}

Report::Report(const RunConfig& cfg) : command_(cfg.command), argv_(cfg.argv) {
  config_["modulus"] = cfg.modulus;
  config_["dim"] = cfg.dim;
  config_["samples"] = cfg.samples;
  config_["modes"] = cfg.modes;
  config_["seed"] = cfg.seed;
  config_["step"] = cfg.step;
  config_["trials"] = cfg.trials;
  config_["grid"] = {cfg.grid_u, cfg.grid_phi};
  config_["negate_alpha"] = cfg.negate_alpha;
  config_["degenerate"] = cfg.degenerate;
  config_["reverse_orientation"] = cfg.reverse_orientation;
  config_["tolerance_overrides"] = cfg.tolerances;
}

void Report::add_input(const std::filesystem::path& path) {
  inputs_.push_back({{"path", path.string()}, {"sha256", sha256_file(path)}});
}

const CheckRecord& Report::add_check(std::string name, double residual, double tolerance,
                                     std::string note) {
  checks_.push_back({std::move(name), residual, tolerance, std::move(note)});
  return checks_.back();
}

const CheckRecord* Report::find_check(const std::string& name) const {
  for (const auto& c : checks_) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

bool Report::passed() const {
  for (const auto& c : checks_) {
    if (!c.passed()) return false;
  }
  return true;
}

Json Report::to_json() const {
  Json out;
  out["tool"] = "cext";
  out["version"] = version();
  out["command"] = command_;
  out["argv"] = argv_;
  out["config"] = config_;
  out["inputs"] = inputs_;
  Json checks = Json::array();
  for (const auto& c : checks_) {
    Json j{{"name", c.name},
           {"residual", c.residual},
           {"tolerance", c.tolerance},
           {"verdict", c.passed() ? "pass" : "fail"}};
    if (!c.note.empty()) j["note"] = c.note;
    checks.push_back(std::move(j));
  }
  out["checks"] = std::move(checks);
  out["results"] = results_;
  out["passed"] = passed();
  return out;
}

std::string Report::dump() const { return to_json().dump(2) + "\n"; }

std::string Report::summary() const {
  std::ostringstream s;
  s << command_ << ": " << (passed() ? "PASS" : "FAIL") << " (" << checks_.size() << " checks)\n";
  for (const auto& c : checks_) {
    char line[256];
    std::snprintf(line, sizeof line, "  %-4s %-40s residual %.3e  tol %.3e", c.passed() ? "ok" : "FAIL",
                  c.name.c_str(), c.residual, c.tolerance);
    s << line;
    if (!c.note.empty()) s << "  (" << c.note << ")";
    s << '\n';
  }
  return s.str();
}

}  // namespace cext::cli
