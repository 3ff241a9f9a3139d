#ifndef MVSLICE_VERIFY_HPP
#define MVSLICE_VERIFY_HPP

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "mvslice/io.hpp"
#include "mvslice/jordan.hpp"
#include "mvslice/lusztig_geometric.hpp"
#include "mvslice/mv_map.hpp"
#include "mvslice/random.hpp"
#include "mvslice/sampler.hpp"
#include "mvslice/slice.hpp"
#include "mvslice/tableau.hpp"

namespace mvslice {

inline constexpr const char* kReportSchema = "mvslice-report/1";

/// Parameters of one CLI/harness run. Echoed in every report.
struct RunConfig {
  std::string command;
  Partition shape;
  Weight weight;
  std::uint64_t seed = 0;
  int bound = 10;
  int retries = 1000;
  int samples = 5;
  int max_n = 5;
  /// Resampling attempts per sample when a point is not generic.
  int max_resamples = 20;
  /// Test hook forwarded to the sampler.
  bool violate_exclusion = false;

  void validate() const {
    if (bound < 1 || retries < 1 || samples < 1 || max_n < 1 || max_resamples < 1) {
      throw std::invalid_argument("bound, retries, samples, max-n and max-resamples must be positive");
    }
  }

  io::Json to_json() const {
    io::Json j;
    j["command"] = command;
    if (!shape.empty()) j["shape"] = shape.parts();
    if (!weight.empty()) j["weight"] = weight;
    j["seed"] = seed;
    j["bound"] = bound;
    j["retries"] = retries;
    j["samples"] = samples;
    j["max_n"] = max_n;
    j["max_resamples"] = max_resamples;
    if (violate_exclusion) j["violate_exclusion"] = true;
    return j;
  }
};

/// JSON-lines report: one record per tableau, then a summary object. The
/// content is a pure function of the config, so reruns are byte-identical.
struct Report {
  std::vector<io::Json> records;
  io::Json summary;
  bool passed = true;

  std::string to_jsonl() const {
    std::string out;
    for (const auto& r : records) out += r.dump() + "\n";
    out += summary.dump() + "\n";
    return out;
  }
};

/// All (λ, μ) with |λ| = |μ| = N ≤ max_n and μ ⊴ λ.
inline std::vector<std::pair<Partition, Partition>> dominance_pairs(int max_n) {
  std::vector<std::pair<Partition, Partition>> out;
  for (int n = 1; n <= max_n; ++n) {
    const auto parts = partitions_of(n);
    for (const auto& lambda : parts) {
      for (const auto& mu : parts) {
        if (mu.dominated_by(lambda)) out.emplace_back(lambda, mu);
      }
    }
  }
  return out;
}

/// Seed of sample `index` of tableau `t` in a run seeded with `base`.
inline std::uint64_t sample_seed(std::uint64_t base, const Tableau& t, int index, int attempt = 0) {
  const std::uint64_t per_tableau = derive_seed(base, hash_string(to_string(t)));
  return derive_seed(derive_seed(per_tableau, static_cast<std::uint64_t>(index)), static_cast<std::uint64_t>(attempt));
}

namespace detail {

inline io::Json summary_header(const RunConfig& config) {
  io::Json s;
  s["type"] = "summary";
  s["schema"] = kReportSchema;
  s["config"] = config.to_json();
  return s;
}

inline io::Json tableau_header(const Tableau& t, const Partition& lambda, const Partition& mu) {
  io::Json r;
  r["type"] = "tableau";
  r["tableau"] = to_string(t);
  r["shape"] = lambda.parts();
  r["weight"] = mu.parts();
  return r;
}

inline io::Json failure(std::uint64_t seed, const std::string& check, const std::string& message) {
  io::Json f;
  f["seed"] = seed;
  f["check"] = check;
  f["message"] = message;
  return f;
}

inline io::Json stage_failure(std::uint64_t seed, const std::string& check, const BoxStep& step,
                              const std::string& message) {
  io::Json f = failure(seed, check, message);
  f["stage"] = io::Json::array({step.letter, step.occurrence});
  return f;
}

/// Σ of the last b − a + 1 parts of λ^{(b)} (parts 1..b): the generic D-value.
inline int generic_d_value(const GTChain& chain, int a, int b) {
  int total = 0;
  for (int j = a; j <= b; ++j) total += chain.blocks[b - 1][j - 1];
  return total;
}

}  // namespace detail

/// 𝒯(λ)_μ with GT-patterns, boxy ladders, Lusztig data and dimensions.
inline Report cmd_tableaux(const RunConfig& config) {
  Report report;
  const auto tableaux = enumerate_tableaux(config.shape, config.weight);
  const int m = static_cast<int>(config.weight.size());
  const int expected_dim = config.shape.length() <= m ? dimension_formula(config.shape, config.weight, m) : 0;
  for (const auto& t : tableaux) {
    const auto chain = gt_chain(t);
    const auto datum = lusztig_datum(t);
    io::Json r;
    r["type"] = "tableau";
    r["tableau"] = to_string(t);
    r["gt_pattern"] = io::to_json(chain);
    r["ladder"] = io::ladder_json(chain);
    r["lusztig_datum"] = datum.entries();
    r["dimension"] = expected_dim;
    r["fibre_dimension_sum"] = fibre_dimension_sum(t);
    const bool ok = fibre_dimension_sum(t) == expected_dim && datum.coweight() == [&] {
      auto lam = config.shape.padded(static_cast<std::size_t>(m));
      for (int j = 0; j < m; ++j) lam[j] -= config.weight[j];
      return lam;
    }();
    r["passed"] = ok;
    report.passed = report.passed && ok;
    report.records.push_back(std::move(r));
  }
  const long long oracle = count_gt_patterns(config.shape, config.weight);
  report.passed = report.passed && oracle == static_cast<long long>(tableaux.size());
  report.summary = detail::summary_header(config);
  report.summary["count"] = tableaux.size();
  report.summary["gt_pattern_count"] = oracle;
  report.summary["passed"] = report.passed;
  return report;
}

/// Samples every tableau with N ≤ max_n and checks membership, stage
/// dimensions, the dimension formula and recovery of τ from the point.
inline Report cmd_verify_theorem_a(const RunConfig& config) {
  config.validate();
  Report report;
  std::size_t tableau_count = 0, sample_count = 0, failure_count = 0;
  std::size_t probe_stages = 0, probe_excluded_empty = 0, probe_excluded_proper = 0;
  for (const auto& [lambda, mu] : dominance_pairs(config.max_n)) {
    const int m = mu.length();
    const int d = dimension_formula(lambda, mu.parts(), m);
    std::set<std::string> block_chains;
    for (const auto& t : enumerate_tableaux(lambda, mu.parts())) {
      ++tableau_count;
      io::Json r = detail::tableau_header(t, lambda, mu);
      r["dimension"] = d;
      io::Json seeds = io::Json::array();
      io::Json failures = io::Json::array();
      io::Json stage_dims;
      for (int s = 0; s < config.samples; ++s) {
        const std::uint64_t seed = sample_seed(config.seed, t, s);
        seeds.push_back(seed);
        ++sample_count;
        Sample sample{SlicePoint::base_point(mu), {}, seed, false};
        try {
          sample = sample_point(t, {seed, config.bound, config.retries, config.violate_exclusion});
        } catch (const std::exception& e) {
          failures.push_back(detail::failure(seed, "sampler", e.what()));
          continue;
        }
        if (const auto bad = first_boxy_failure(sample.point, t)) {
          failures.push_back(detail::stage_failure(seed, "boxy", *bad, "leading submatrix has the wrong Jordan type"));
        }
        if (!blocky_membership(sample.point, t)) failures.push_back(detail::failure(seed, "blocky", "block type mismatch"));
        if (jordan_type(sample.point.matrix()) != lambda) {
          failures.push_back(detail::failure(seed, "jordan_type", "A is not in the orbit of lambda"));
        }
        int total = 0;
        io::Json dims = io::Json::array();
        for (const auto& st : sample.stages) {
          const int expected = st.step.letter - st.step.row;
          const int col = SliceShape(mu).stage_column(st.step.letter, st.step.occurrence);
          total += static_cast<int>(st.solution_dim);
          dims.push_back(st.solution_dim);
          if (static_cast<int>(st.solution_dim) != expected) {
            failures.push_back(detail::stage_failure(seed, "stage_dimension", st.step,
                                                     "solution dimension " + std::to_string(st.solution_dim) +
                                                         " != i - r = " + std::to_string(expected)));
          }
          if (static_cast<int>(st.preimage_dim) != col - st.step.row) {
            failures.push_back(detail::stage_failure(seed, "preimage_dimension", st.step,
                                                     "preimage dimension " + std::to_string(st.preimage_dim) +
                                                         " != " + std::to_string(col - st.step.row)));
          }
          if (st.step.col >= 2) {
            ++probe_stages;
            if (!st.excluded_dim) {
              ++probe_excluded_empty;
            } else if (*st.excluded_dim < st.solution_dim) {
              ++probe_excluded_proper;
            }
          }
        }
        if (total != d) {
          failures.push_back(detail::failure(seed, "dimension_sum",
                                             "stage dimensions sum to " + std::to_string(total) + ", expected " +
                                                 std::to_string(d)));
        }
        if (s == 0) stage_dims = std::move(dims);
        try {
          if (tableau_of(sample.point) != t) failures.push_back(detail::failure(seed, "tableau_of", "recovered a different tableau"));
          if (s == 0 && !block_chains.insert(to_string(block_tableau(sample.point))).second) {
            failures.push_back(detail::failure(seed, "injectivity", "block chain already produced by another tableau"));
          }
        } catch (const NotASemistandardChain& e) {
          failures.push_back(detail::failure(seed, "tableau_of", e.what()));
        }
      }
      r["stage_dimensions"] = std::move(stage_dims);
      r["seeds"] = std::move(seeds);
      r["failures"] = failures;
      r["passed"] = failures.empty();
      failure_count += failures.size();
      report.records.push_back(std::move(r));
    }
  }
  report.passed = failure_count == 0;
  report.summary = detail::summary_header(config);
  report.summary["tableaux"] = tableau_count;
  report.summary["samples"] = sample_count;
  report.summary["failures"] = failure_count;
  io::Json probe;
  probe["stages_with_exclusion"] = probe_stages;
  probe["excluded_set_empty"] = probe_excluded_empty;
  probe["excluded_set_proper"] = probe_excluded_proper;
  report.summary["fibration_probe"] = std::move(probe);
  report.summary["passed"] = report.passed;
  return report;
}

/// Compares the geometric Lusztig datum of φ(A) with the tableau's datum for
/// sampled A, resampling (with a fresh derived seed) on non-generic points.
inline Report cmd_verify_theorem_b(const RunConfig& config) {
  config.validate();
  Report report;
  std::size_t tableau_count = 0, draws = 0, resamples = 0, mismatches = 0, failure_count = 0;
  for (const auto& [lambda, mu] : dominance_pairs(config.max_n)) {
    for (const auto& t : enumerate_tableaux(lambda, mu.parts())) {
      ++tableau_count;
      const auto chain = gt_chain(t);
      const auto expected = lusztig_datum(t);
      io::Json r = detail::tableau_header(t, lambda, mu);
      r["lusztig_datum"] = expected.entries();
      io::Json seeds = io::Json::array();
      io::Json failures = io::Json::array();
      int tableau_resamples = 0;
      for (int s = 0; s < config.samples; ++s) {
        bool done = false;
        for (int attempt = 0; attempt < config.max_resamples && !done; ++attempt) {
          const std::uint64_t seed = sample_seed(config.seed, t, s, attempt);
          ++draws;
          try {
            const auto sample = sample_point(t, {seed, config.bound, config.retries, false});
            const auto g = mv_phi(sample.point);
            if (const auto defect = genericity_defect(g)) {
              throw NotGeneric("D-value above its generic bound at window (" + std::to_string(defect->first) + "," +
                               std::to_string(defect->second) + ")");
            }
            const auto gd = geometric_lusztig(g);
            seeds.push_back(seed);
            done = true;
            if (gd.datum != expected) {
              ++mismatches;
              failures.push_back(detail::failure(seed, "lusztig_datum", "geometric datum " + to_string(gd.datum) +
                                                                            " != " + to_string(expected)));
            }
            for (int b = 1; b <= mu.length(); ++b) {
              for (int a = 1; a <= b; ++a) {
                const int want = detail::generic_d_value(chain, a, b);
                if (gd.at(a, b) != Valuation(want)) {
                  failures.push_back(detail::failure(seed, "generic_d_value",
                                                     "D[" + std::to_string(a) + "][" + std::to_string(b) +
                                                         "] = " + to_string(gd.at(a, b)) + ", expected " +
                                                         std::to_string(want)));
                }
              }
            }
          } catch (const NotGeneric&) {
            ++resamples;
            ++tableau_resamples;
          } catch (const std::exception& e) {
            failures.push_back(detail::failure(seed, "sampler", e.what()));
            done = true;
          }
        }
        if (!done) failures.push_back(detail::failure(0, "resampling", "no generic point after max_resamples draws"));
      }
      r["seeds"] = std::move(seeds);
      r["resamples"] = tableau_resamples;
      r["failures"] = failures;
      r["passed"] = failures.empty();
      failure_count += failures.size();
      report.records.push_back(std::move(r));
    }
  }
  report.passed = failure_count == 0;
  report.summary = detail::summary_header(config);
  report.summary["tableaux"] = tableau_count;
  report.summary["draws"] = draws;
  report.summary["resamples"] = resamples;
  report.summary["resample_rate"] = draws == 0 ? 0.0 : static_cast<double>(resamples) / static_cast<double>(draws);
  report.summary["mismatches"] = mismatches;
  report.summary["failures"] = failure_count;
  report.summary["passed"] = report.passed;
  return report;
}

/// φ^{-1}∘φ = id on sampled points and φ∘φ^{-1} = id on their images, plus
/// the coweight checks on every image.
inline Report cmd_roundtrip(const RunConfig& config) {
  config.validate();
  Report report;
  std::size_t points = 0, failure_count = 0;
  for (const auto& [lambda, mu] : dominance_pairs(config.max_n)) {
    for (const auto& t : enumerate_tableaux(lambda, mu.parts())) {
      io::Json r = detail::tableau_header(t, lambda, mu);
      io::Json seeds = io::Json::array();
      io::Json failures = io::Json::array();
      for (int s = 0; s < config.samples; ++s) {
        const std::uint64_t seed = sample_seed(config.seed, t, s);
        seeds.push_back(seed);
        ++points;
        try {
          const auto sample = sample_point(t, {seed, config.bound, config.retries, false});
          const RatMatrix a = sample.point.matrix();
          const auto g = mv_phi(sample.point);
          const RatMatrix back = mv_phi_inverse(g, mu);
          if (back != a) {
            io::Json f = detail::failure(seed, "inverse_after_phi", "phi^-1(phi(A)) != A");
            f["A"] = io::to_json(a);
            f["g"] = io::to_json(g);
            f["phi_inverse"] = io::to_json(back);
            failures.push_back(std::move(f));
          } else if (mv_phi(SlicePoint::from_matrix(mu, back)) != g) {
            failures.push_back(detail::failure(seed, "phi_after_inverse", "phi(phi^-1(g)) != g"));
          }
          for (const auto& msg : coweight_checks(g, a, lambda, mu).failures) {
            failures.push_back(detail::failure(seed, "coweight", msg));
          }
        } catch (const std::exception& e) {
          failures.push_back(detail::failure(seed, "exception", e.what()));
        }
      }
      r["seeds"] = std::move(seeds);
      r["failures"] = failures;
      r["passed"] = failures.empty();
      failure_count += failures.size();
      report.records.push_back(std::move(r));
    }
  }
  report.passed = failure_count == 0;
  report.summary = detail::summary_header(config);
  report.summary["points"] = points;
  report.summary["failures"] = failure_count;
  report.summary["passed"] = report.passed;
  return report;
}

}  // namespace mvslice

#endif  // MVSLICE_VERIFY_HPP
