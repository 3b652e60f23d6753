#include "haareig/stats.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <stdexcept>

namespace haareig {

namespace {

constexpr double kTwoPi = 2.0 * kPi;

// 16-point Gauss-Legendre nodes/weights on [-1, 1]; plenty for the smooth
// densities compared here.
constexpr double kGaussX[8] = {
    0.0950125098376374, 0.2816035507792589, 0.4580167776572274,
    0.6178762444026438, 0.7554044083550030, 0.8656312023878318,
    0.9445750230732326, 0.9894009349916499};
constexpr double kGaussW[8] = {
    0.1894506104550685, 0.1826034150449236, 0.1691565193950025,
    0.1495959888165767, 0.1246289712555339, 0.0951585116824928,
    0.0622535239386479, 0.0271524594117541};

double integrate_bin(const std::function<double(double)>& f, double a, double b) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double acc = 0.0;
  for (int i = 0; i < 8; ++i)
    acc += kGaussW[i] * (f(mid + half * kGaussX[i]) + f(mid - half * kGaussX[i]));
  return acc * half;
}

}  // namespace

std::vector<double> phases(const EigenSample& s) {
  std::vector<double> out;
  out.reserve(s.values.size());
  for (const cplx& v : s.values) {
    double t = arg_principal(v);
    if (t < 0.0) t += kTwoPi;
    if (t >= kTwoPi) t = 0.0;
    out.push_back(t);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<double> spacings(const EigenSample& s) {
  const int n = static_cast<int>(s.values.size());
  if (n < 2) throw std::domain_error("spacings: need at least two eigenvalues");
  const std::vector<double> th = phases(s);
  std::vector<double> z(n);
  const double scale = n / kTwoPi;
  for (int i = 0; i + 1 < n; ++i) z[i] = scale * (th[i + 1] - th[i]);
  z[n - 1] = scale * (th[0] + kTwoPi - th[n - 1]);
  return z;
}

double wigner_density(double zeta) {
  if (zeta < 0.0) throw std::domain_error("wigner_density: negative spacing");
  // Wigner surmise for the unitary symmetry class, the reference curve for
  // circular-ensemble spacing histograms.
  return 32.0 / (kPi * kPi) * zeta * zeta * std::exp(-4.0 * zeta * zeta / kPi);
}

std::vector<double> linear_edges(double lo, double hi, int bins) {
  std::vector<double> e(bins + 1);
  for (int i = 0; i <= bins; ++i)
    e[i] = lo + (hi - lo) * static_cast<double>(i) / bins;
  return e;
}

Histogram histogram(std::span<const double> values, std::vector<double> edges) {
  if (values.empty()) throw std::domain_error("histogram: empty input");
  if (edges.size() < 2) throw std::domain_error("histogram: need at least one bin");
  for (std::size_t i = 0; i + 1 < edges.size(); ++i)
    if (!(edges[i] < edges[i + 1]))
      throw std::domain_error("histogram: edges must be strictly increasing");

  const int bins = static_cast<int>(edges.size()) - 1;
  std::vector<long long> counts(bins, 0);
  long long clamped = 0;
  for (double v : values) {
    int b;
    if (v < edges.front()) {
      b = 0;
      ++clamped;
    } else if (v >= edges.back()) {
      b = bins - 1;
      ++clamped;
    } else {
      b = static_cast<int>(std::upper_bound(edges.begin(), edges.end(), v) -
                           edges.begin()) - 1;
    }
    ++counts[b];
  }

  Histogram h;
  h.edges = std::move(edges);
  h.densities.resize(bins);
  h.clamped = clamped;
  const double total = static_cast<double>(values.size());
  for (int b = 0; b < bins; ++b)
    h.densities[b] = counts[b] / (total * (h.edges[b + 1] - h.edges[b]));
  return h;
}

void write_histogram(std::ostream& os, const Histogram& h) {
  os << std::setprecision(17);
  for (int b = 0; b < h.bins(); ++b)
    os << h.edges[b] << ' ' << h.densities[b] << '\n';
  os << h.edges.back() << ' ' << 0.0 << '\n';
}

double ks_uniform_phase(std::vector<double> samples) {
  if (samples.empty()) throw std::domain_error("ks_uniform_phase: empty sample");
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double stat = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = std::clamp(samples[i] / kTwoPi, 0.0, 1.0);
    stat = std::max(stat, std::max((i + 1) / n - f, f - i / n));
  }
  return stat;
}

double tv_distance(const Histogram& h, const std::function<double(double)>& density) {
  double tv = 0.0;
  for (int b = 0; b < h.bins(); ++b)
    tv += std::abs(integrate_bin(density, h.edges[b], h.edges[b + 1]) - h.mass(b));
  return 0.5 * tv;
}

double periodicity_defect(const Histogram& h, int n) {
  const int bins = h.bins();
  if (n < 1 || bins % n != 0)
    throw std::domain_error("periodicity_defect: bin count not divisible by n");
  const int shift = bins / n;
  double tv = 0.0;
  for (int b = 0; b < bins; ++b)
    tv += std::abs(h.mass(b) - h.mass((b + shift) % bins));
  return 0.5 * tv;
}

double atom_mass(std::span<const double> phase_samples, double theta0, double tol) {
  if (!(tol > 0.0)) throw std::domain_error("atom_mass: tol must be positive");
  if (phase_samples.empty()) return 0.0;
  long long hits = 0;
  for (double t : phase_samples) {
    double d = std::fmod(std::abs(t - theta0), kTwoPi);
    if (d > kPi) d = kTwoPi - d;
    if (d <= tol) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(phase_samples.size());
}

}  // namespace haareig
