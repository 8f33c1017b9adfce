#include <filesystem>
#include <map>
#include <string>

#include "cext/cli/commands.hpp"
#include "cext/error.hpp"
#include "cext/group/brute_force.hpp"
#include "cext/group/cohomology.hpp"
#include "cext/group/concordance.hpp"
#include "cext/group/extension.hpp"
#include "cext/group/fingerprint.hpp"
#include "cext/group/table_io.hpp"

namespace cext::cli {

namespace {

using namespace cext::group;

// Pairwise class checks cost |H^2|^2 linear solves.
constexpr std::size_t kPairwiseLimit = 64;
constexpr std::size_t kFingerprintLimit = 4096;

Json fingerprint_json(const GroupFingerprint& f) {
  return {{"order", f.order},
          {"order_multiset", f.order_multiset},
          {"abelian", f.abelian},
          {"center_order", f.center_order},
          {"derived_order", f.derived_order},
          {"text", f.to_string()}};
}

FiniteGroup load_group_recorded(const RunConfig& cfg, Report& report) {
  if (!cfg.group) throw ArgumentError(cfg.command + " needs --group");
  auto g = load_group(*cfg.group);
  if (std::filesystem::exists(*cfg.group)) report.add_input(*cfg.group);
  return g;
}

struct H2Outcome {
  SecondCohomology h2;
  std::vector<std::optional<GroupFingerprint>> fingerprints;
};

H2Outcome run_h2(const FiniteGroup& group, const CyclicCoefficients& coeffs, Report& report) {
  check_linear_capacity(group, coeffs);
  const auto z2 = cocycle_space(group, coeffs);
  const auto b2 = coboundary_space(group, coeffs);
  H2Outcome out{second_cohomology(group, coeffs), {}};
  const auto& h2 = out.h2;

  auto& r = report.results();
  r["group"] = {{"name", group.name()}, {"order", group.order()},
                {"fingerprint", fingerprint_json(fingerprint(group))}};
  r["modulus"] = coeffs.modulus();
  r["counts"] = {{"Z2", count_json(h2.cocycles)},
                 {"B2", count_json(h2.coboundaries)},
                 {"H2", count_json(h2.classes)}};
  r["invariant_factors"] = h2.invariant_factors;

  report.add_check("counts_multiply", h2.cocycles == h2.coboundaries * h2.classes ? 0.0 : 1.0, 0.0,
                   "|Z2| = |B2| * |H2|");
  const double space_mismatch = (z2.count != h2.cocycles) + (b2.count != h2.coboundaries);
  report.add_check("space_counts_consistent", space_mismatch, 0.0,
                   "cocycle_space and coboundary_space against second_cohomology");

  std::size_t non_cocycles = 0;
  for (const auto& c : h2.representatives) non_cocycles += !is_cocycle(group, c);
  report.add_check("representatives_are_cocycles", static_cast<double>(non_cocycles), 0.0);

  if (h2.representatives.size() <= kPairwiseLimit) {
    std::size_t related = 0;
    for (std::size_t i = 0; i < h2.representatives.size(); ++i) {
      for (std::size_t j = i + 1; j < h2.representatives.size(); ++j) {
        related += cohomologous(group, h2.representatives[i], h2.representatives[j]).has_value();
      }
    }
    report.add_check("representatives_pairwise_distinct", static_cast<double>(related), 0.0);
  }

  const bool want_fingerprints = h2.representatives.size() <= kFingerprintLimit;
  std::size_t build_failures = 0;
  Json classes = Json::array();
  for (std::size_t i = 0; i < h2.representatives.size(); ++i) {
    const auto& c = h2.representatives[i];
    Json entry{{"index", i}, {"cocycle", std::vector<int>(c.values().begin(), c.values().end())}};
    std::optional<GroupFingerprint> fp;
    if (want_fingerprints) {
      try {
        fp = fingerprint(build_extension(group, c));
        entry["extension_fingerprint"] = fingerprint_json(*fp);
      } catch (const CocycleError&) {
        ++build_failures;
      }
    }
    out.fingerprints.push_back(std::move(fp));
    classes.push_back(std::move(entry));
  }
  r["classes"] = std::move(classes);
  if (want_fingerprints) {
    report.add_check("representatives_build_extensions", static_cast<double>(build_failures), 0.0);
  }

  if (oracle::feasible(group.order(), coeffs.modulus())) {
    const auto ex = oracle::exhaustive_h2(group, coeffs);
    r["oracle"] = {{"cocycles", ex.cocycles}, {"coboundaries", ex.coboundaries}, {"classes", ex.classes}};
    const auto agreement = compare_with_oracle(group, h2, ex);
    report.add_check("oracle_counts", static_cast<double>(agreement.count_mismatches), 0.0);
    report.add_check("oracle_partition",
                     static_cast<double>(agreement.representative_mismatches + agreement.partition_mismatches),
                     0.0, "every cocycle related to the representative of its exhaustive class");
  } else {
    r["oracle"] = "infeasible";
  }
  return out;
}

}  // namespace

Report cmd_h2(const RunConfig& cfg) {
  Report report(cfg);
  const auto group = load_group_recorded(cfg, report);
  run_h2(group, CyclicCoefficients(cfg.modulus), report);
  return report;
}

Report cmd_classify(const RunConfig& cfg) {
  Report report(cfg);
  const auto group = load_group_recorded(cfg, report);
  const auto outcome = run_h2(group, CyclicCoefficients(cfg.modulus), report);

  std::map<GroupFingerprint, std::vector<std::size_t>> by_fingerprint;
  for (std::size_t i = 0; i < outcome.fingerprints.size(); ++i) {
    if (outcome.fingerprints[i]) by_fingerprint[*outcome.fingerprints[i]].push_back(i);
  }
  Json groups = Json::array();
  for (const auto& [fp, members] : by_fingerprint) {
    groups.push_back({{"fingerprint", fingerprint_json(fp)}, {"classes", members}});
  }
  report.results()["distinct_fingerprints"] = by_fingerprint.size();
  report.results()["by_fingerprint"] = std::move(groups);
  return report;
}

Report cmd_extend(const RunConfig& cfg) {
  Report report(cfg);
  const auto group = load_group_recorded(cfg, report);
  if (!cfg.cochain) throw ArgumentError("extend needs --cochain");
  const auto c = read_cochain_file(*cfg.cochain, group.order());
  report.add_input(*cfg.cochain);
  if (c.degree() != 2) throw InputError("extend needs a degree-2 cochain, got degree " + std::to_string(c.degree()));
  if (cfg.modulus_given && cfg.modulus != c.modulus()) {
    throw ArgumentError("--modulus " + std::to_string(cfg.modulus) + " disagrees with the cochain file's " +
                        std::to_string(c.modulus()));
  }
  auto& r = report.results();
  r["group"] = {{"name", group.name()}, {"order", group.order()}};
  r["modulus"] = c.modulus();

  const auto dc = delta(group, c);
  std::size_t failing = 0;
  for (int v : dc.values()) failing += v != 0;
  if (const auto bad = find_cocycle_violation(group, c)) {
    const auto [g, h, k] = *bad;
    std::string where = "first failure at (g,h,k) = (" + std::to_string(g) + "," + std::to_string(h) + "," +
                        std::to_string(k) + ")";
    report.add_check("cocycle_condition", static_cast<double>(failing), 0.0, where);
    r["violation"] = {{"g", g}, {"h", h}, {"k", k}, {"delta_c", dc.at(std::array<Element, 3>{g, h, k})}};
    try {
      build_extension(group, c);
      r["extension"] = "built despite violation";
      report.add_check("non_cocycle_rejected", 1.0, 0.0);
    } catch (const CocycleError& e) {
      r["extension"] = {{"rejected", e.what()},
                        {"triple", {e.triple()[0], e.triple()[1], e.triple()[2]}}};
    }
    return report;
  }
  report.add_check("cocycle_condition", 0.0, 0.0);

  const auto ext = build_extension(group, c);
  const auto n = c.modulus();
  std::size_t not_hom = 0, not_central = 0;
  for (Element x = 0; x < ext.order(); ++x) {
    for (Element y = 0; y < ext.order(); ++y) {
      not_hom += ext.project(ext.mul(x, y)) != group.mul(ext.project(x), ext.project(y));
    }
  }
  for (int a = 0; a < n; ++a) {
    const auto z = ext.include(a);
    for (Element x = 0; x < ext.order(); ++x) not_central += ext.mul(z, x) != ext.mul(x, z);
  }
  report.add_check("projection_homomorphism", static_cast<double>(not_hom), 0.0);
  report.add_check("kernel_central", static_cast<double>(not_central), 0.0);

  const auto relabeled = ext.as_finite_group();
  const auto [ea, eg] = ext.split(ext.identity());
  Json table = Json::array();
  for (Element x = 0; x < relabeled.order(); ++x) {
    std::vector<Element> row(relabeled.order());
    for (Element y = 0; y < relabeled.order(); ++y) row[y] = relabeled.mul(x, y);
    table.push_back(std::move(row));
  }
  r["extension"] = {{"order", ext.order()},
                    {"identity_pair", {ea, eg}},
                    {"labeling", "(a, g) -> g*n + (a + c(e,e) mod n), identity at 0"},
                    {"fingerprint", fingerprint_json(fingerprint(ext))},
                    {"table", std::move(table)}};
  return report;
}

}  // namespace cext::cli
