// Command-line front end: sampling runs, histogram emission, the
// statistical validation suite, and benchmarks.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "haareig/factored_form.hpp"
#include "haareig/stats.hpp"
#include "haareig/trial_pool.hpp"
#include "haareig/unitary_qr.hpp"
#include "haareig/validation.hpp"

namespace {

using namespace haareig;

struct CommonOpts {
  int n = 10;
  std::string field = "complex";
  std::string det = "none";
  long long trials = 10000;
  int bins = 50;
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::string method = "factored";
  std::string out;
  int workers = 1;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--n", o.n, "matrix order")->check(CLI::PositiveNumber);
  cmd->add_option("--field", o.field, "scalar field")
      ->check(CLI::IsMember({"real", "complex"}));
  cmd->add_option("--det", o.det,
                  "determinant constraint: none, +1, -1, or phase:<radians>");
  cmd->add_option("--trials", o.trials, "number of sampled matrices")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--bins", o.bins, "phase histogram bins")
      ->check(CLI::Range(2, 100000));
  cmd->add_option("--seed", o.seed, "64-bit RNG seed (decimal)")
      ->trigger_on_parse()
      ->each([&o](const std::string&) { o.seed_given = true; });
  cmd->add_option("--method", o.method, "sampling path")
      ->check(CLI::IsMember({"factored", "dense"}));
  cmd->add_option("--out", o.out, "output path");
  cmd->add_option("--workers", o.workers, "worker threads")
      ->check(CLI::PositiveNumber);
}

std::uint64_t resolve_seed(const CommonOpts& o) {
  if (o.seed_given) return o.seed;
  if (const char* env = std::getenv("HAAREIG_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw CLI::ValidationError("HAAREIG_SEED",
                                 "must be a decimal 64-bit unsigned integer");
    }
  }
  return o.seed;
}

Field parse_field(const std::string& s) {
  return s == "real" ? Field::Real : Field::Complex;
}

std::optional<cplx> parse_det(const std::string& s, Field field) {
  if (s == "none") return std::nullopt;
  if (s == "+1" || s == "1") return cplx{1.0};
  if (s == "-1") return cplx{-1.0};
  if (s.rfind("phase:", 0) == 0) {
    if (field == Field::Real)
      throw CLI::ValidationError("--det", "phase:<r> requires --field complex");
    const double r = std::stod(s.substr(6));
    return std::polar(1.0, r);
  }
  throw CLI::ValidationError("--det", "expected none, +1, -1, or phase:<r>");
}

SampleSpec make_spec(const CommonOpts& o, std::uint64_t seed) {
  SampleSpec spec;
  spec.n = o.n;
  spec.field = parse_field(o.field);
  spec.det_phase = parse_det(o.det, spec.field);
  spec.seed = seed;
  spec.validate();
  return spec;
}

std::string det_tag(const std::string& det) {
  if (det == "none") return "0";
  if (det == "+1") return "1";
  if (det.rfind("phase:", 0) == 0) return "phase" + det.substr(6);
  return det;
}

// ---- sample ----------------------------------------------------------

int cmd_sample(const CommonOpts& o, const std::string& write_form,
               const std::string& read_form) {
  if (o.method == "dense") {
    std::cerr << "sample: the dense path has no eigensolver; it is used by "
                 "'validate' and 'bench' for matrix-level statistics. "
                 "Use --method factored.\n";
    return 2;
  }
  const std::uint64_t seed = resolve_seed(o);
  long long trials = o.trials;

  std::optional<DescendingFactorization> fixed_form;
  if (!read_form.empty()) {
    std::ifstream in(read_form);
    if (!in) {
      std::cerr << "sample: cannot read " << read_form << '\n';
      return 1;
    }
    fixed_form = read_factorization(in).first;
    trials = 1;
  }
  if (!write_form.empty() && (trials != 1 || fixed_form)) {
    std::cerr << "sample: --write-form needs --trials 1 and no --read-form\n";
    return 2;
  }

  const SampleSpec spec = fixed_form ? SampleSpec{} : make_spec(o, seed);
  RngStream root(seed);

  std::vector<std::vector<cplx>> rows(static_cast<std::size_t>(trials));
  std::vector<char> done(static_cast<std::size_t>(trials), 0);
  bool failed = false;
  std::string failure;
  try {
    run_trials(trials, o.workers, [&](long long t) {
      DescendingFactorization f;
      if (fixed_form) {
        f = *fixed_form;
      } else {
        RngStream rng = root.child(static_cast<std::uint64_t>(t));
        f = sample_descending(spec, rng);
      }
      if (!write_form.empty()) {
        std::ofstream out(write_form);
        write_factorization(out, f, spec.field);
      }
      rows[static_cast<std::size_t>(t)] = eigenvalues(f).values;
      done[static_cast<std::size_t>(t)] = 1;
    });
  } catch (const ConvergenceError& e) {
    failed = true;
    failure = e.what();
  }

  std::ofstream file;
  std::ostream* os = &std::cout;
  if (!o.out.empty() && o.out != "-") {
    file.open(o.out);
    if (!file) {
      std::cerr << "sample: cannot open " << o.out << '\n';
      return 1;
    }
    os = &file;
  }
  *os << std::setprecision(17);
  for (long long t = 0; t < trials; ++t) {
    if (!done[static_cast<std::size_t>(t)]) break;
    for (const cplx& v : rows[static_cast<std::size_t>(t)])
      *os << t << ',' << v.real() << ',' << v.imag() << '\n';
  }
  if (failed) {
    *os << "# partial output: " << failure << '\n';
    std::cerr << "sample: " << failure << '\n';
    return 1;
  }
  return 0;
}

// ---- hist ------------------------------------------------------------

int cmd_hist(const CommonOpts& o) {
  if (o.method == "dense") {
    std::cerr << "hist: eigenvalue histograms require --method factored\n";
    return 2;
  }
  const std::uint64_t seed = resolve_seed(o);
  const SampleSpec spec = make_spec(o, seed);
  RngStream root(seed);
  const int n = o.n;

  std::vector<double> phase_pool(static_cast<std::size_t>(o.trials) * n);
  std::vector<double> spacing_pool(
      n >= 2 ? static_cast<std::size_t>(o.trials) * n : 0);
  run_trials(o.trials, o.workers, [&](long long t) {
    RngStream rng = root.child(static_cast<std::uint64_t>(t));
    const EigenSample lam = eigenvalues(sample_descending(spec, rng));
    const std::vector<double> th = phases(lam);
    std::copy(th.begin(), th.end(), phase_pool.begin() + t * n);
    if (n >= 2) {
      const std::vector<double> z = spacings(lam);
      std::copy(z.begin(), z.end(), spacing_pool.begin() + t * n);
    }
  });

  const std::string group = spec.field == Field::Real ? "orthog" : "unitary";
  std::ostringstream tag;
  tag << group << '-' << std::setw(2) << std::setfill('0') << n << '-'
      << det_tag(o.det);
  const std::filesystem::path dir = o.out.empty() ? "." : o.out;
  std::filesystem::create_directories(dir);

  const auto emit = [&](const std::string& name, const Histogram& h) -> bool {
    const std::filesystem::path path = dir / name;
    std::ofstream f(path);
    if (!f) {
      std::cerr << "hist: cannot write " << path.string() << '\n';
      return false;
    }
    write_histogram(f, h);
    std::cout << path.string() << '\n';
    return true;
  };

  if (!emit("eig-dist-" + tag.str() + ".dat",
            histogram(phase_pool, linear_edges(0.0, 2.0 * kPi, o.bins))))
    return 1;
  if (n >= 2 &&
      !emit("eig-spacing-" + tag.str() + ".dat",
            histogram(spacing_pool, linear_edges(0.0, 3.0, 30))))
    return 1;
  return 0;
}

// ---- validate --------------------------------------------------------

int cmd_validate(const CommonOpts& o, bool bias_skip_chi, bool no_bench) {
  ValidateConfig cfg;
  cfg.n = o.n;
  cfg.field = parse_field(o.field);
  cfg.det_phase = parse_det(o.det, cfg.field);
  cfg.trials = o.trials;
  cfg.bins = o.bins;
  cfg.seed = resolve_seed(o);
  cfg.workers = o.workers;
  cfg.run_benchmark = !no_bench;
  cfg.hooks.skip_chi_draw = bias_skip_chi;
  const bool ok = print_report(std::cout, run_validate_suite(cfg));
  return ok ? 0 : 1;
}

// ---- bench -----------------------------------------------------------

int cmd_bench(const CommonOpts& o, std::vector<int> sizes, bool both_methods) {
  const std::uint64_t seed = resolve_seed(o);
  std::ofstream file;
  std::ostream* os = &std::cout;
  if (!o.out.empty() && o.out != "-") {
    file.open(o.out);
    if (!file) {
      std::cerr << "bench: cannot open " << o.out << '\n';
      return 1;
    }
    os = &file;
  }

  const bool run_factored = both_methods || o.method == "factored";
  const bool run_dense = both_methods || o.method == "dense";
  std::vector<BenchRow> factored, dense;
  if (run_factored) {
    std::vector<int> ns = sizes.empty()
                              ? std::vector<int>{256, 512, 1024, 2048, 4096}
                              : sizes;
    for (int n : ns) factored.push_back(bench_factored(n, seed));
  }
  if (run_dense) {
    std::vector<int> ns =
        sizes.empty() ? std::vector<int>{256, 512, 1024, 2048} : sizes;
    for (int n : ns) dense.push_back(bench_dense(n, seed));
  }

  *os << std::setprecision(6);
  for (const BenchRow& r : factored)
    *os << r.n << '\t' << r.method << '\t' << r.seconds << '\t' << r.chases
        << '\n';
  for (const BenchRow& r : dense)
    *os << r.n << '\t' << r.method << '\t' << r.seconds << '\t' << r.chases
        << '\n';
  if (factored.size() >= 2)
    *os << "# slope factored " << fit_loglog_slope(factored) << '\n';
  if (dense.size() >= 2)
    *os << "# slope dense " << fit_loglog_slope(dense) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Joint eigenvalue sampler for Haar-distributed unitary and "
               "orthogonal matrices"};
  app.require_subcommand(1);

  CommonOpts sample_o, hist_o, validate_o, bench_o;
  bool bias_skip_chi = false, no_bench = false, bench_both = true;
  std::vector<int> bench_sizes;

  CLI::App* sample = app.add_subcommand(
      "sample", "emit eigenvalue records, one CSV row per eigenvalue");
  add_common(sample, sample_o);
  std::string write_form, read_form;
  sample->add_option("--write-form", write_form,
                     "also write the sampled factorization (trials=1)");
  sample->add_option("--read-form", read_form,
                     "solve a previously written factorization file");

  CLI::App* hist = app.add_subcommand(
      "hist", "write phase and spacing histograms (.dat, two columns)");
  add_common(hist, hist_o);

  CLI::App* validate = app.add_subcommand(
      "validate", "run the statistical validation suite and report per line");
  add_common(validate, validate_o);
  validate->add_flag("--no-bench", no_bench, "skip the complexity criterion");
  validate
      ->add_flag("--bias-skip-chi", bias_skip_chi,
                 "deliberately bias the sampler (mutation test hook)")
      ->group("");

  CLI::App* bench = app.add_subcommand("bench", "time both sampling paths");
  add_common(bench, bench_o);
  bench->add_option("--sizes", bench_sizes, "orders to time (overrides ladder)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (sample->parsed()) return cmd_sample(sample_o, write_form, read_form);
    if (hist->parsed()) return cmd_hist(hist_o);
    if (validate->parsed()) return cmd_validate(validate_o, bias_skip_chi, no_bench);
    if (bench->parsed()) {
      bench_both = bench_o.method == "factored" && bench->count("--method") == 0;
      return cmd_bench(bench_o, bench_sizes, bench_both);
    }
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
