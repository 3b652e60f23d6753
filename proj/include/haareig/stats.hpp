#pragma once

#include <functional>
#include <iosfwd>
#include <span>
#include <vector>

#include "haareig/core_rotation.hpp"

namespace haareig {

/// Unit-modulus eigenvalues of one sampled matrix, in emission order.
struct EigenSample {
  std::vector<cplx> values;
};

/// Eigenvalue phases sorted ascending in [0, 2*pi).
std::vector<double> phases(const EigenSample& s);

/// Normalized consecutive-phase gaps zeta_i = (n / 2 pi)(theta_{i+1} - theta_i)
/// with wraparound; the n gaps tile the circle, so they sum to n.
/// Throws std::domain_error for n < 2.
std::vector<double> spacings(const EigenSample& s);

/// p(zeta) = (pi zeta / 2) exp(-pi zeta^2 / 4); throws std::domain_error
/// for negative input.
double wigner_density(double zeta);

/// Area-normalized histogram: sum of density * width is 1.
struct Histogram {
  std::vector<double> edges;      // b+1, strictly increasing
  std::vector<double> densities;  // b
  long long clamped = 0;          ///< out-of-range values folded into boundary bins

  int bins() const { return static_cast<int>(densities.size()); }
  double width(int b) const { return edges[b + 1] - edges[b]; }
  double mass(int b) const { return densities[b] * width(b); }
};

std::vector<double> linear_edges(double lo, double hi, int bins);

/// Throws std::domain_error on empty input or non-increasing edges.
/// Out-of-range values are counted in the nearest boundary bin and
/// reported through Histogram::clamped.
Histogram histogram(std::span<const double> values, std::vector<double> edges);

/// Two-column "bin_left density" rows, one per bin, plus a terminal row
/// repeating the last edge with density 0.
void write_histogram(std::ostream& os, const Histogram& h);

/// Kolmogorov-Smirnov statistic of the sample against the uniform law on
/// [0, 2*pi). The sample must be iid; draw one eigenvalue per matrix.
double ks_uniform_phase(std::vector<double> samples);

/// (1/2) sum_b |density_mass_b - histogram_mass_b|, with the density mass
/// per bin obtained by quadrature.
double tv_distance(const Histogram& h, const std::function<double(double)>& density);

/// Total-variation distance between the histogram and its cyclic shift by
/// bins/n positions; throws std::domain_error when n does not divide the
/// bin count.
double periodicity_defect(const Histogram& h, int n);

/// Fraction of phase samples within circular distance tol of theta0.
double atom_mass(std::span<const double> phase_samples, double theta0, double tol);

}  // namespace haareig
