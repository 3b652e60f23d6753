#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "haareig/factored_form.hpp"

namespace haareig {

struct CriterionResult {
  std::string name;
  double statistic = 0.0;
  double threshold = 0.0;
  bool pass = false;
  bool skipped = false;
  double seconds = 0.0;
  std::string note;  ///< supplementary detail, emitted as a comment
};

/// Knobs of the full statistical suite. Defaults reproduce the reference
/// scale; the validate CLI command substitutes desk-scale values.
struct SuiteScale {
  std::uint64_t seed = 20240601;
  int workers = 1;

  int spectral_n_max = 50;      // criterion 1: n in {2..n_max}
  int spectral_seeds = 100;
  int pipeline_n_max = 64;      // criterion 2
  int pipeline_seeds = 100;
  long long uniformity_trials = 100000;   // criterion 3
  long long spacing_trials = 10000;       // criterion 4
  long long periodicity_trials = 100000;  // criterion 5, 100 bins
  int ensemble_n = 10;                    // order for criteria 3-5
  long long atom_trials = 10000;          // criterion 6
  long long det_slice_trials = 1000;      // criterion 7, n = 8
  long long rotation_checks = 10000;      // criterion 9
  long long dense_trials = 100000;        // criterion 10, n = 8
  std::vector<int> bench_factored_sizes{256, 512, 1024, 2048, 4096};
  std::vector<int> bench_dense_sizes{256, 512, 1024, 2048};
  bool run_benchmark = true;

  SamplerHooks hooks{};  ///< bias instrumentation for mutation testing
};

/// Runs all ten criteria and returns one result per criterion, in order.
std::vector<CriterionResult> run_suite(const SuiteScale& scale);

/// Configuration mapped from the validate CLI command. Criteria that do
/// not apply to the requested ensemble are reported as skipped.
struct ValidateConfig {
  int n = 10;
  Field field = Field::Complex;
  std::optional<cplx> det_phase{};
  long long trials = 10000;
  int bins = 50;
  std::uint64_t seed = 0;
  int workers = 1;
  bool run_benchmark = true;
  SamplerHooks hooks{};
};

std::vector<CriterionResult> run_validate_suite(const ValidateConfig& cfg);

/// One line per criterion: name, statistic, threshold, PASS/FAIL/SKIP.
/// Returns true when nothing failed.
bool print_report(std::ostream& os, const std::vector<CriterionResult>& results);

/// One timed pipeline run (sample + factored eigensolve, or the dense
/// sampler); short runs are repeated until the measurement stabilizes.
struct BenchRow {
  int n = 0;
  std::string method;
  double seconds = 0.0;
  long long chases = 0;  ///< QR sweeps (factored method only)
};
BenchRow bench_factored(int n, std::uint64_t seed);
BenchRow bench_dense(int n, std::uint64_t seed);

/// Least-squares slope of log t against log n.
double fit_loglog_slope(const std::vector<BenchRow>& rows);

}  // namespace haareig
