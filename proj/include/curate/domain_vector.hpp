#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "curate/embeddings.hpp"
#include "curate/error.hpp"
#include "curate/lexicon.hpp"
#include "curate/parallel.hpp"
#include "curate/random.hpp"

namespace curate {

/// Unit-norm mean direction of a lexicon's term embeddings.
struct DomainVector {
  Vector vector;
  std::string source_domain;
  std::size_t terms_found = 0;
  std::vector<std::string> terms_missing;
};

/// Lexicon terms split into table rows (lexicon order) and terms absent from the table.
struct ResolvedTerms {
  std::vector<std::size_t> rows;
  std::vector<std::string> missing;
};

inline ResolvedTerms resolve_terms(const EmbeddingTable& table, const DomainLexicon& lexicon) {
  ResolvedTerms out;
  for (const auto& term : lexicon.terms) {
    if (const auto row = table.find(term)) {
      out.rows.push_back(*row);
    } else {
      out.missing.push_back(term);
    }
  }
  if (out.rows.empty()) {
    throw DegenerateError("empty domain vector: none of the " + std::to_string(lexicon.size()) +
                          " terms of lexicon '" + lexicon.domain_name + "' is in the embedding table");
  }
  return out;
}

/// Arithmetic mean of the given rows, before any re-normalization.
inline Vector mean_of_rows(const EmbeddingTable& table, std::span<const std::size_t> rows) {
  Vector acc(table.dimension(), 0.0);
  for (std::size_t r : rows) add_to(acc, table.row(r));
  const double inv = 1.0 / static_cast<double>(rows.size());
  for (double& v : acc) v *= inv;
  return acc;
}

/// Mean of the found terms' unit vectors, re-normalized to unit length.
/// Missing terms are skipped and listed.
inline DomainVector aggregate_domain_vector(const EmbeddingTable& table, const DomainLexicon& lexicon) {
  ResolvedTerms resolved = resolve_terms(table, lexicon);
  Vector mean = mean_of_rows(table, resolved.rows);
  const double n = norm(mean);
  if (!(n > 0.0)) {
    throw DegenerateError("degenerate domain direction: term embeddings of '" + lexicon.domain_name +
                          "' cancel to a zero mean");
  }
  for (double& v : mean) v /= n;
  return {std::move(mean), lexicon.domain_name, resolved.rows.size(), std::move(resolved.missing)};
}

inline nlohmann::json to_json(const DomainVector& dv) {
  return {{"source_domain", dv.source_domain},
          {"dimension", dv.vector.size()},
          {"terms_found", dv.terms_found},
          {"terms_missing", dv.terms_missing},
          {"vector", dv.vector}};
}

inline void save_domain_vector(const DomainVector& dv, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write domain vector '" + path.string() + "'");
  out << to_json(dv).dump(2) << '\n';
  if (!out) throw IoError("write failure on '" + path.string() + "'");
}

inline DomainVector load_domain_vector(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read domain vector '" + path.string() + "'");
  try {
    const auto j = nlohmann::json::parse(in);
    DomainVector dv;
    dv.vector = j.at("vector").get<Vector>();
    dv.source_domain = j.value("source_domain", "");
    dv.terms_found = j.value("terms_found", std::size_t{0});
    dv.terms_missing = j.value("terms_missing", std::vector<std::string>{});
    if (dv.vector.empty() || j.value("dimension", dv.vector.size()) != dv.vector.size()) {
      throw ParseError("domain vector '" + path.string() + "' has inconsistent dimension");
    }
    if (std::abs(norm(dv.vector) - 1.0) > 1e-6) {
      throw ParseError("domain vector '" + path.string() + "' is not unit length");
    }
    return dv;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("domain vector '" + path.string() + "': " + e.what());
  }
}

/// E = sample - reference, componentwise.
inline Vector residual_error(std::span<const double> sample, std::span<const double> reference) {
  if (sample.size() != reference.size()) {
    throw ConfigError("residual_error: dimension mismatch (" + std::to_string(sample.size()) + " vs " +
                      std::to_string(reference.size()) + ")");
  }
  Vector e(sample.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = sample[i] - reference[i];
  return e;
}

/// Outcome of resampling sub-lexicons of size m and measuring how far their
/// raw mean lands from the full-lexicon mean.
struct ResidualReport {
  std::vector<std::size_t> m_values;
  /// Mean of |E| over trials, one per m.
  std::vector<double> mean_error_norms;
  /// Mean and population stddev of the residual components r_i = e_i - a of
  /// every sampled term, one per m.
  std::vector<double> component_means;
  std::vector<double> component_stddevs;
  /// Same statistics pooled over all m.
  double component_mean = 0.0;
  double component_stddev = 0.0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::size_t lexicon_terms = 0;
  std::size_t dimension = 0;

  bool operator==(const ResidualReport&) const = default;
};

inline nlohmann::json to_json(const ResidualReport& r) {
  return {{"m_values", r.m_values},
          {"mean_error_norms", r.mean_error_norms},
          {"component_means", r.component_means},
          {"component_stddevs", r.component_stddevs},
          {"component_mean", r.component_mean},
          {"component_stddev", r.component_stddev},
          {"trials", r.trials},
          {"seed", r.seed},
          {"lexicon_terms", r.lexicon_terms},
          {"dimension", r.dimension}};
}

namespace detail {

struct TrialResult {
  double error_norm = 0.0;
  double component_sum = 0.0;
  double component_sumsq = 0.0;
};

inline double pooled_stddev(double sum, double sumsq, double count) {
  const double mean = sum / count;
  return std::sqrt(std::max(0.0, sumsq / count - mean * mean));
}

}  // namespace detail

/// For each m, draws `trials` sub-lexicons of m distinct terms, forms their raw
/// mean A, and records |A - a| where a is the raw full-lexicon mean. Each trial
/// has its own generator derived from (seed, m, trial), so the report is
/// identical for any worker count.
inline ResidualReport run_residual_experiment(const EmbeddingTable& table, const DomainLexicon& lexicon,
                                              const std::vector<std::size_t>& m_values, std::size_t trials,
                                              std::uint64_t seed, std::size_t workers = 1) {
  if (trials == 0) throw ConfigError("residual experiment needs at least one trial");
  if (m_values.empty()) throw ConfigError("residual experiment needs at least one m value");
  const ResolvedTerms resolved = resolve_terms(table, lexicon);
  const std::size_t pool = resolved.rows.size();
  for (std::size_t m : m_values) {
    if (m == 0 || m > pool) {
      throw ConfigError("m=" + std::to_string(m) + " outside [1, " + std::to_string(pool) +
                        "] (terms of '" + lexicon.domain_name + "' found in the table)");
    }
  }
  const std::size_t d = table.dimension();
  const Vector full_mean = mean_of_rows(table, resolved.rows);

  ResidualReport report;
  report.m_values = m_values;
  report.trials = trials;
  report.seed = seed;
  report.lexicon_terms = pool;
  report.dimension = d;

  double all_sum = 0.0, all_sumsq = 0.0, all_count = 0.0;
  for (std::size_t m : m_values) {
    std::vector<detail::TrialResult> results(trials);
    parallel_for(trials, workers, [&](std::size_t t) {
      Rng rng(derive_seed(seed, m, t));
      std::vector<std::size_t> order(pool);
      for (std::size_t i = 0; i < pool; ++i) order[i] = i;
      // Partial Fisher-Yates: the first m slots become a uniform m-subset.
      for (std::size_t i = 0; i < m; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(rng.below(pool - i));
        std::swap(order[i], order[j]);
      }
      Vector sample(d, 0.0);
      detail::TrialResult res;
      for (std::size_t i = 0; i < m; ++i) {
        const auto row = table.row(resolved.rows[order[i]]);
        for (std::size_t k = 0; k < d; ++k) {
          sample[k] += row[k];
          const double r = row[k] - full_mean[k];
          res.component_sum += r;
          res.component_sumsq += r * r;
        }
      }
      for (double& v : sample) v /= static_cast<double>(m);
      res.error_norm = norm(residual_error(sample, full_mean));
      results[t] = res;
    });

    double norm_sum = 0.0, sum = 0.0, sumsq = 0.0;
    for (const auto& r : results) {
      norm_sum += r.error_norm;
      sum += r.component_sum;
      sumsq += r.component_sumsq;
    }
    const double count = static_cast<double>(trials * m * d);
    report.mean_error_norms.push_back(norm_sum / static_cast<double>(trials));
    report.component_means.push_back(sum / count);
    report.component_stddevs.push_back(detail::pooled_stddev(sum, sumsq, count));
    all_sum += sum;
    all_sumsq += sumsq;
    all_count += count;
  }
  report.component_mean = all_sum / all_count;
  report.component_stddev = detail::pooled_stddev(all_sum, all_sumsq, all_count);
  return report;
}

/// Histogram of the residual components e_i - a over every found term.
struct ComponentHistogram {
  double low = 0.0;
  double width = 0.0;
  std::vector<std::uint64_t> counts;
};

inline ComponentHistogram residual_component_histogram(const EmbeddingTable& table,
                                                       const DomainLexicon& lexicon, std::size_t bins) {
  if (bins == 0) throw ConfigError("histogram needs at least one bin");
  const ResolvedTerms resolved = resolve_terms(table, lexicon);
  const Vector a = mean_of_rows(table, resolved.rows);
  std::vector<double> comps;
  comps.reserve(resolved.rows.size() * a.size());
  for (std::size_t r : resolved.rows) {
    const auto row = table.row(r);
    for (std::size_t k = 0; k < a.size(); ++k) comps.push_back(row[k] - a[k]);
  }
  const auto [lo_it, hi_it] = std::minmax_element(comps.begin(), comps.end());
  ComponentHistogram h;
  h.low = *lo_it;
  const double span = *hi_it - *lo_it;
  h.width = span > 0.0 ? span / static_cast<double>(bins) : 1.0;
  h.counts.assign(bins, 0);
  for (double c : comps) {
    auto i = static_cast<std::size_t>((c - h.low) / h.width);
    h.counts[std::min(i, bins - 1)]++;
  }
  return h;
}

struct MeanMinimizerReport {
  bool passed = false;
  std::size_t terms = 0;
  double objective_at_mean = 0.0;
  /// min over probes of f(mean + delta) - f(mean); positive when no probe improves.
  double smallest_probe_gain = std::numeric_limits<double>::infinity();
  std::size_t improving_probes = 0;
  double gradient_norm = 0.0;
  std::size_t probes = 0;
};

inline nlohmann::json to_json(const MeanMinimizerReport& r) {
  return {{"passed", r.passed},
          {"terms", r.terms},
          {"objective_at_mean", r.objective_at_mean},
          {"smallest_probe_gain", r.smallest_probe_gain},
          {"improving_probes", r.improving_probes},
          {"gradient_norm", r.gradient_norm},
          {"probes", r.probes}};
}

/// Checks that the raw mean minimizes f(x) = sum_i |e_i - x|^2 over the found
/// terms: the analytic gradient 2 sum_i (x - e_i) must vanish (norm < 1e-8)
/// and no seeded probe x = mean + delta, |delta| alternating 1e-3 and 1e-1,
/// may lower f by more than 1e-12 relative.
inline MeanMinimizerReport verify_mean_minimizer(const EmbeddingTable& table, const DomainLexicon& lexicon,
                                                 std::size_t probes, std::uint64_t seed) {
  const ResolvedTerms resolved = resolve_terms(table, lexicon);
  const std::size_t d = table.dimension();
  const Vector mu = mean_of_rows(table, resolved.rows);

  const auto objective = [&](std::span<const double> x) {
    double f = 0.0;
    for (std::size_t r : resolved.rows) {
      const auto row = table.row(r);
      for (std::size_t k = 0; k < d; ++k) {
        const double diff = row[k] - x[k];
        f += diff * diff;
      }
    }
    return f;
  };

  MeanMinimizerReport rep;
  rep.terms = resolved.rows.size();
  rep.probes = probes;
  rep.objective_at_mean = objective(mu);

  Vector grad(d, 0.0);
  for (std::size_t r : resolved.rows) {
    const auto row = table.row(r);
    for (std::size_t k = 0; k < d; ++k) grad[k] += 2.0 * (mu[k] - row[k]);
  }
  rep.gradient_norm = norm(grad);

  Rng rng(derive_seed(seed, 0x6d696e));
  Vector x(d);
  for (std::size_t p = 0; p < probes; ++p) {
    const double radius = p % 2 == 0 ? 1e-3 : 1e-1;
    Vector dir(d);
    double n = 0.0;
    do {
      for (double& v : dir) v = rng.normal();
      n = norm(dir);
    } while (n == 0.0);
    for (std::size_t k = 0; k < d; ++k) x[k] = mu[k] + radius * dir[k] / n;
    const double gain = objective(x) - rep.objective_at_mean;
    rep.smallest_probe_gain = std::min(rep.smallest_probe_gain, gain);
    if (gain < -1e-12 * std::abs(rep.objective_at_mean)) ++rep.improving_probes;
  }
  rep.passed = rep.improving_probes == 0 && rep.gradient_norm < 1e-8;
  return rep;
}

}  // namespace curate
