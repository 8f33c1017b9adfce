#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "cext/cli/commands.hpp"
#include "cext/error.hpp"

using namespace cext;
using namespace cext::cli;

namespace {

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--out", cfg.out, "write the JSON report here (- for stdout)");
  sub->add_option("--tol", [&cfg](const CLI::results_t& values) {
    for (const auto& v : values) add_tolerance_override(cfg, v);
    return true;
  }, "override a check tolerance, name=value (repeatable)")->take_all()->allow_extra_args(false);
}

void add_finite(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--group", cfg.group, "group table file, or a name: Z2, Z3, Z2xZ2, S3, D4, Q8, ...")->required();
  sub->add_option_function<int>("--modulus", [&cfg](int n) {
    cfg.modulus = n;
    cfg.modulus_given = true;
  }, "coefficients Z/n");
  add_common(sub, cfg);
}

void add_loop(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--dim", cfg.dim, "matrix size n of SU(n)");
  sub->add_option("--samples", cfg.samples, "samples per loop N (power of two)");
  sub->add_option("--modes", cfg.modes, "Fourier modes K of synthesized loops");
  sub->add_option("--seed", cfg.seed, "seed for every random draw");
  sub->add_option("--step", cfg.step, "finite-difference step h");
  add_common(sub, cfg);
}

int run(const RunConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  Report report = [&] {
    if (cfg.command == "h2") return cmd_h2(cfg);
    if (cfg.command == "extend") return cmd_extend(cfg);
    if (cfg.command == "classify") return cmd_classify(cfg);
    if (cfg.command == "verify") return cmd_verify(cfg);
    return cmd_period(cfg);
  }();
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  if (cfg.out && cfg.out->string() == "-") {
    std::cout << report.dump();
  } else if (cfg.out) {
    std::ofstream out(*cfg.out, std::ios::binary);
    if (!out) throw InputError("cannot write '" + cfg.out->string() + "'");
    out << report.dump();
  }
  std::ostream& human = cfg.out && cfg.out->string() == "-" ? std::cerr : std::cout;
  human << report.summary();
  char clock[64];
  std::snprintf(clock, sizeof clock, "  wall-clock %.3f s\n", elapsed.count());
  human << clock;
  return static_cast<int>(report.exit_code());
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  // The echo leaves out where the report goes, so runs that differ only in
  // --out produce identical reports.
  cfg.argv.emplace_back("cext");
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--out") {
      ++i;
    } else if (arg.rfind("--out=", 0) != 0) {
      cfg.argv.push_back(arg);
    }
  }

  CLI::App app{"Central extensions of finite groups and loop-group forms"};
  app.set_version_flag("--version", version());
  app.require_subcommand(1);

  auto* h2 = app.add_subcommand("h2", "second cohomology H^2(G; Z/n) with representatives");
  add_finite(h2, cfg);
  auto* classify = app.add_subcommand("classify", "H^2 classes grouped by extension fingerprint");
  add_finite(classify, cfg);
  auto* extend = app.add_subcommand("extend", "build the extension of a 2-cocycle file");
  add_finite(extend, cfg);
  extend->add_option("--cochain", cfg.cochain, "cochain file: 'p n' then m^p values")->required();

  auto* verify = app.add_subcommand("verify", "seeded identity battery for R and alpha");
  add_loop(verify, cfg);
  verify->add_option("--trials", cfg.trials, "number of seeded configurations");
  verify->add_option("--loop", cfg.loop, "use this loop file as g2 in every trial");
  verify->add_flag("--negate-alpha", cfg.negate_alpha, "test hook: corrupt alpha by a sign");

  auto* period = app.add_subcommand("period", "periods of R over the S^2 family in SU(2)");
  add_loop(period, cfg);
  period->add_option_function<std::string>("--grid", [&cfg](const std::string& g) {
    std::tie(cfg.grid_u, cfg.grid_phi) = parse_grid(g);
  }, "u x phi quadrature grid, e.g. 64x64");
  period->add_flag("--degenerate", cfg.degenerate, "test hook: every loop constant");
  period->add_flag("--reverse-orientation", cfg.reverse_orientation, "test hook: phi runs backwards");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : static_cast<int>(ExitCode::kUsage);
  } catch (const ArgumentError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::kUsage);
  }
  for (auto* sub : {h2, classify, extend, verify, period}) {
    if (sub->parsed()) cfg.command = sub->get_name();
  }

  try {
    return run(cfg);
  } catch (const CapacityError& e) {
    std::cerr << "capacity: " << e.what() << '\n';
    return static_cast<int>(ExitCode::kCapacity);
  } catch (const InputError& e) {
    std::cerr << "input: " << e.what() << '\n';
    return static_cast<int>(ExitCode::kUsage);
  } catch (const ArgumentError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::kUsage);
  } catch (const Error& e) {
    std::cerr << "failure: " << e.what() << '\n';
    return static_cast<int>(ExitCode::kCheckFailed);
  }
}
