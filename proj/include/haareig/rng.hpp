#pragma once

#include <array>
#include <complex>
#include <cstdint>

namespace haareig {

/// Deterministic random stream: xoshiro256++ 1.0, seeded through a
/// splitmix64 expansion of a 64-bit key. The key is retained so that
/// statistically independent child streams can be derived by index;
/// the derivation rule is
///
///   child_key(i) = splitmix64(key + (i + 1) * 0x9E3779B97F4A7C15)
///
/// For a fixed key the full draw transcript is reproducible bit-exactly.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed);

  /// Independent stream for child `index`. Distinct indices give
  /// distinct, statistically independent sequences.
  RngStream child(std::uint64_t index) const;

  std::uint64_t next_u64();
  double next_double();       ///< uniform on [0, 1), 53-bit resolution
  double next_double_open();  ///< uniform on (0, 1)
  std::uint64_t key() const { return key_; }

 private:
  std::array<std::uint64_t, 4> state_{};
  std::uint64_t key_ = 0;
};

/// N(0, 1) by the polar (Marsaglia) method. No platform trigonometry, so
/// the transcript replays identically everywhere.
double std_normal_real(RngStream& rng);

/// Standard complex normal: real and imaginary parts independent
/// N(0, 1/2), so E|z|^2 = 1.
std::complex<double> std_normal_complex(RngStream& rng);

/// Gamma(shape, scale 1) by Marsaglia-Tsang rejection; O(1) expected
/// draws for any shape > 0.
double gamma_variate(double shape, RngStream& rng);

/// sqrt of a chi^2(k) draw (real chi-squared, k >= 1).
/// Throws std::domain_error for k < 1.
double chi_real(int k, RngStream& rng);

/// One draw of the complex chi-squared law chi^2_C(k), realized as
/// chi^2_R(2k)/2. Throws std::domain_error for k < 1.
double chi_complex_sq(int k, RngStream& rng);

/// Uniform phase on (-pi, pi].
double uniform_phase(RngStream& rng);

}  // namespace haareig
