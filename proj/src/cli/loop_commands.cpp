#include <algorithm>
#include <cmath>
#include <filesystem>
#include <numbers>
#include <optional>

#include "cext/cli/commands.hpp"
#include "cext/error.hpp"
#include "cext/lie/random.hpp"
#include "cext/loop/exterior.hpp"
#include "cext/loop/forms.hpp"
#include "cext/loop/loop_io.hpp"
#include "cext/loop/period.hpp"

namespace cext::cli {

namespace {

using namespace cext::loop;

bool power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

void check_loop_parameters(const RunConfig& cfg) {
  if (cfg.dim < 2 || cfg.dim > 4) throw ArgumentError("--dim must lie in 2..4");
  if (cfg.samples < 16 || !power_of_two(cfg.samples) || cfg.samples > (1u << 16)) {
    throw ArgumentError("--samples must be a power of two in 16..65536");
  }
  if (cfg.modes < 0 || static_cast<std::size_t>(cfg.modes) > cfg.samples / 8) {
    throw ArgumentError("--modes must lie in 0..samples/8");
  }
  if (!(cfg.step >= kMinStep && cfg.step <= kMaxStep)) {
    throw ArgumentError("--step must lie in [1e-4, 1e-2]");
  }
}

// Running maximum of one residual over the trials.
struct MaxResidual {
  double value = 0.0;
  void add(double r) { value = std::isnan(r) || std::isnan(value) ? NAN : std::max(value, std::abs(r)); }
};

double tangent_distance(const LoopTangent& a, const LoopTangent& b) {
  double worst = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    worst = std::max(worst, (a[j].matrix() - b[j].matrix()).cwiseAbs().maxCoeff());
  }
  return worst;
}

// Seeds for everything one trial draws; the same seeds at 2N samples give
// the same smooth loops and tangents.
struct TrialSeeds {
  std::uint64_t g1, g2, g3, k, x1, x2, y1, y2, z;
  double a, b;

  TrialSeeds(std::uint64_t seed, std::size_t trial) {
    lie::CounterRng rng(seed, trial);
    g1 = rng.next();
    g2 = rng.next();
    g3 = rng.next();
    k = rng.next();
    x1 = rng.next();
    x2 = rng.next();
    y1 = rng.next();
    y2 = rng.next();
    z = rng.next();
    a = rng.uniform(-1.0, 1.0);
    b = rng.uniform(-1.0, 1.0);
  }
};

}  // namespace

Report cmd_verify(const RunConfig& cfg) {
  check_loop_parameters(cfg);
  Report report(cfg);
  const int n = cfg.dim;
  const std::size_t N = cfg.samples;
  const int K = cfg.modes;
  const double h = cfg.step;

  std::optional<DiscreteLoop> loaded;
  if (cfg.loop) {
    loaded = read_loop_file(*cfg.loop);
    report.add_input(*cfg.loop);
    if (loaded->dim() != n || loaded->size() != N) {
      throw InputError("loop file has n=" + std::to_string(loaded->dim()) + ", N=" +
                       std::to_string(loaded->size()) + "; expected --dim and --samples to match");
    }
  }

  AlphaEvaluator alpha = [](const DiscreteLoop& g2, const LoopTangent& x1) { return eval_alpha(g2, x1); };
  if (cfg.negate_alpha) {
    alpha = [](const DiscreteLoop& g2, const LoopTangent& x1) { return -eval_alpha(g2, x1); };
  }
  const bool halve = h / 2.0 >= kMinStep;

  MaxResidual antisym, linear, dalpha, dr_vs_da, dr_vs_da_half, closed, push, doubling, inv_exact, inv_fd;
  double max_delta_r = 0.0;
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    const TrialSeeds s(cfg.seed, t);
    const auto loop = [&](std::uint64_t seed, std::size_t samples) {
      return random_smooth_loop(seed, n, samples, K);
    };
    const auto tangent = [&](std::uint64_t seed, std::size_t samples) {
      return random_smooth_tangent(seed, n, samples, K);
    };
    const auto g1 = loop(s.g1, N);
    const auto g2 = loaded ? *loaded : loop(s.g2, N);
    const auto g3 = loop(s.g3, N);
    const auto k = loop(s.k, N);
    const auto x1 = tangent(s.x1, N), x2 = tangent(s.x2, N);
    const auto y1 = tangent(s.y1, N), y2 = tangent(s.y2, N);
    const auto z = tangent(s.z, N);

    const double r_xy = eval_R(x1, y1);
    antisym.add(r_xy + eval_R(y1, x1));

    linear.add(eval_R(s.a * x1 + s.b * x2, y1) - s.a * r_xy - s.b * eval_R(x2, y1));
    linear.add(eval_R(x1, s.a * y1 + s.b * y2) - s.a * r_xy - s.b * eval_R(x1, y2));
    const double a_x1 = eval_alpha(g2, x1);
    linear.add(eval_alpha(g2, s.a * x1 + s.b * x2) - s.a * a_x1 - s.b * eval_alpha(g2, x2));

    dalpha.add(delta_form_alpha(g1, g2, g3, {x1, x2, z}));

    const double delta_r = delta_form_R(g1, g2, {x1, x2}, {y1, y2});
    max_delta_r = std::max(max_delta_r, std::abs(delta_r));
    const auto gap = [&](double step) {
      return (delta_r - d_alpha_numeric(g1, g2, {x1, x2}, {y1, y2}, step, alpha)) / (1.0 + std::abs(delta_r));
    };
    dr_vs_da.add(gap(h));
    if (halve) dr_vs_da_half.add(gap(h / 2.0));

    closed.add(d_R_numeric(g1, x1, y1, z, h));

    const std::array<DiscreteLoop, 2> pair{g1, g2};
    const std::array<LoopTangent, 2> xi{x1, x2};
    const auto merged = face_pushforward(1, pair, xi);
    const auto direct = left_trivialized_tangent(
        [&](double u) { return g1.times_exp(x1, u) * g2.times_exp(x2, u); }, h, DifferenceOrder::kFourth);
    push.add(tangent_distance(merged.tangents[0], direct));

    doubling.add(r_xy - eval_R(tangent(s.x1, 2 * N), tangent(s.y1, 2 * N)));
    if (!loaded) doubling.add(a_x1 - eval_alpha(loop(s.g2, 2 * N), tangent(s.x1, 2 * N)));

    inv_exact.add(left_invariance_check(k, g1, g2, x1));
    inv_exact.add(left_invariance_check_R(k, g1, x1, y1));
    inv_fd.add(left_invariance_fd_check(k, g1, g2, x1, h));
    inv_fd.add(left_invariance_fd_check_R(k, g1, x1, y1, h));
  }

  auto& r = report.results();
  r["trials"] = cfg.trials;
  r["convention"] = "R and alpha real-valued; <X,Y> = -tr(XY); left-trivialized tangents";
  if (cfg.trials == 0) return report;

  const auto check = [&](const std::string& name, double residual, double fallback, std::string note = {}) {
    report.add_check(name, residual, cfg.tolerance(name, fallback), std::move(note));
  };
  check("antisymmetry", antisym.value, 1e-11, "|R(X,Y) + R(Y,X)|");
  check("bilinearity", linear.value, 1e-12, "R in each slot, alpha in X1");
  check("delta_alpha", dalpha.value, 1e-9, "|delta alpha|");
  check("delta_R_equals_d_alpha", dr_vs_da.value, 5e-5, "|delta R - d alpha| / (1 + |delta R|)");
  if (halve) {
    const double ratio = dr_vs_da_half.value / dr_vs_da.value;
    check("delta_R_equals_d_alpha_convergence", ratio, 1.0 / 3.0,
          "max residual at h/2 over max residual at h");
    r["delta_R_vs_d_alpha"] = {{"max_residual_h", dr_vs_da.value},
                               {"max_residual_half_h", dr_vs_da_half.value},
                               {"shrink_factor", dr_vs_da.value / dr_vs_da_half.value},
                               {"max_abs_delta_R", max_delta_r}};
  }
  check("dR_closed", closed.value, 1e-5, "|dR(X,Y,Z)|");
  check("pushforward_vs_finite_difference", push.value, 1e-7, "merge face against the product curve");
  check("sample_doubling", doubling.value, 1e-10, "N against 2N");
  check("left_invariance_exact", inv_exact.value, 0.0, "alpha in the first factor, and R");
  check("left_invariance_finite_difference", inv_fd.value, 1e-9, "transported tangents");
  return report;
}

Report cmd_period(const RunConfig& cfg) {
  check_loop_parameters(cfg);
  if (cfg.dim != 2) throw ArgumentError("period is only defined for n = 2 (the family lives in SU(2))");
  if (cfg.grid_u < 2 || cfg.grid_u % 2 != 0 || cfg.grid_phi < 1) {
    throw ArgumentError("--grid needs an even, positive u count and a positive phi count");
  }
  if (cfg.grid_u > 4096 || cfg.grid_phi > 4096) throw CapacityError("--grid is capped at 4096x4096");
  Report report(cfg);
  auto& r = report.results();
  r["family"] = cfg.degenerate ? "degenerate" : (cfg.reverse_orientation ? "standard, phi reversed" : "standard");
  r["convention"] = "R real-valued; integrality stated as period / (2 pi) in Z";

  const auto surface = [&](std::size_t scale) {
    const auto u = cfg.grid_u * scale, phi = cfg.grid_phi * scale;
    return cfg.degenerate ? degenerate_sphere_family(cfg.samples, u, phi)
                          : standard_sphere_family(cfg.samples, u, phi, cfg.reverse_orientation);
  };
  // Nearest nonzero integer and the distance to it.
  const auto nearest_nonzero = [](double x) {
    double k = std::round(x);
    if (k == 0.0) k = x < 0.0 ? -1.0 : 1.0;
    return std::pair{k, std::abs(x - k)};
  };

  Json grids = Json::array();
  std::vector<Period> periods;
  for (std::size_t scale : {1u, 2u}) {
    const auto p = sphere_period(surface(scale));
    periods.push_back(p);
    const auto [k, dev] = nearest_nonzero(p.over_two_pi());
    grids.push_back({{"grid", {cfg.grid_u * scale, cfg.grid_phi * scale}},
                     {"integral", p.integral},
                     {"period_over_2pi", p.over_two_pi()},
                     {"nearest_nonzero_integer", k},
                     {"deviation", dev},
                     {"integral_nearest_integer", std::round(p.integral)},
                     {"integral_deviation", std::abs(p.integral - std::round(p.integral))}});
  }
  r["grids"] = std::move(grids);

  if (cfg.degenerate) {
    for (std::size_t i = 0; i < periods.size(); ++i) {
      const std::string name = i == 0 ? "degenerate_period_zero" : "degenerate_period_zero_doubled";
      report.add_check(name, std::abs(periods[i].integral), cfg.tolerance(name, 1e-12));
    }
    return report;
  }

  const auto [k1, dev1] = nearest_nonzero(periods[0].over_two_pi());
  const auto [k2, dev2] = nearest_nonzero(periods[1].over_two_pi());
  const auto tol = [&](const std::string& name) { return cfg.tolerance(name, 1e-3); };
  report.add_check("period_over_2pi_integral", dev1, tol("period_over_2pi_integral"),
                   "distance of period/(2 pi) to nearest nonzero integer " + std::to_string(static_cast<long>(k1)));
  report.add_check("period_over_2pi_integral_doubled", dev2, tol("period_over_2pi_integral_doubled"),
                   "distance to nearest nonzero integer " + std::to_string(static_cast<long>(k2)));
  report.add_check("period_over_2pi_same_integer", std::abs(k1 - k2),
                   cfg.tolerance("period_over_2pi_same_integer", 0.0));

  // Supplementary: the integral itself against Z.
  const auto [j1, e1] = nearest_nonzero(periods[0].integral);
  const auto [j2, e2] = nearest_nonzero(periods[1].integral);
  report.add_check("integral_R_integer", std::max(e1, e2), tol("integral_R_integer"),
                   "supplementary: integral of R within tolerance of nonzero integer " +
                       std::to_string(static_cast<long>(j1)) + " at both grids");
  report.add_check("integral_R_same_integer", std::abs(j1 - j2), cfg.tolerance("integral_R_same_integer", 0.0));
  return report;
}

}  // namespace cext::cli
