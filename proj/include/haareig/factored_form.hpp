#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "haareig/core_rotation.hpp"
#include "haareig/rng.hpp"

namespace haareig {

enum class Field { Real, Complex };

/// What to sample: order, scalar field, optional determinant-phase
/// constraint, RNG seed.
struct SampleSpec {
  int n = 1;
  Field field = Field::Complex;
  /// When set, sampled matrices have Arg(det) = Arg(det_phase). For the
  /// real field only +1 and -1 are admissible.
  std::optional<cplx> det_phase{};
  std::uint64_t seed = 0;

  /// Throws std::invalid_argument on violation of the above.
  void validate() const;
};

/// H = P_1 ... P_{n-1} D, where P_j is the reflector built from the
/// 2-vector (alpha_j, beta_j) acting on indices (j, j+1) and
/// D = -diag(e^{i phase_0}, ..., e^{i phase_{n-1}}).
struct HouseholderFactorization {
  struct ReflectorPair {
    cplx alpha{};
    double beta = 0.0;
  };
  int n = 1;
  std::vector<ReflectorPair> pairs;  // n-1 entries
  std::vector<double> phases;        // n entries
};

/// H = G_0 ... G_{n-2} diag(d_0, ..., d_{n-1}); rotation j acts on the
/// (j, j+1) plane. The O(n) working representation of a unitary upper
/// Hessenberg matrix.
struct DescendingFactorization {
  int n = 1;
  std::vector<CoreRotation> rotations;  // n-1 entries
  std::vector<cplx> diagonal;           // n entries
};

/// Validation instrumentation: deliberately biased sampling used to show
/// that the statistics suites can fail. Not part of the normal API surface.
struct SamplerHooks {
  bool skip_chi_draw = false;  ///< use beta = 1 instead of the chi draw
};

/// Essential 2x2 block of the reflector defined by (alpha, beta).
Mat2 householder_block(const HouseholderFactorization::ReflectorPair& p);

/// Draws (alpha_j, beta_j) pairs and phases per the field; consumes, per
/// step j, one normal then one chi draw, then a single terminal draw when
/// no determinant constraint is set.
HouseholderFactorization sample_householder_form(const SampleSpec& spec,
                                                 RngStream& rng);

/// O(n) refactorization of the reflector product into descending
/// rotations times a unimodular diagonal; dense forms agree.
DescendingFactorization refactor_to_rotations(const HouseholderFactorization& h);

/// One-pass sampler of the descending form. Driven by the same RNG
/// transcript it produces the same matrix as
/// refactor_to_rotations(sample_householder_form(...)).
DescendingFactorization sample_descending(const SampleSpec& spec, RngStream& rng);
DescendingFactorization sample_descending(const SampleSpec& spec, RngStream& rng,
                                          const SamplerHooks& hooks);

inline constexpr int kDenseCap = 2048;

/// Row-major n x n materialization; unitary upper Hessenberg with exact
/// zeros below the subdiagonal. Throws std::length_error above `cap`.
std::vector<cplx> to_dense(const DescendingFactorization& f, int cap = kDenseCap);

/// Entry (i, j), 0-based, from the closed form
///   h_ij     = conj(c_{i-1}) (prod_{k=i}^{j-1} s_k) c_j d_j   for i <= j,
///   h_{j+1,j} = -s_j d_j,
/// with the conventions c_{-1} = c_{n-1} = 1. Below the subdiagonal the
/// result is exactly 0.
cplx entry(const DescendingFactorization& f, int i, int j);

/// det H = prod_j d_j.
cplx determinant(const DescendingFactorization& f);

/// Text serialization: header "n field", then n-1 lines "Re(c) Im(c) s",
/// then n lines "Re(d) Im(d)". Values round-trip exactly.
void write_factorization(std::ostream& os, const DescendingFactorization& f,
                         Field field);
std::pair<DescendingFactorization, Field> read_factorization(std::istream& is);

}  // namespace haareig
