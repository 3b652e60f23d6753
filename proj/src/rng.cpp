#include "haareig/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace haareig {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t splitmix64(std::uint64_t& x) {
  x += kGolden;
  std::uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}

}  // namespace

RngStream::RngStream(std::uint64_t seed) : key_(seed) {
  std::uint64_t s = seed;
  for (auto& w : state_) w = splitmix64(s);
}

RngStream RngStream::child(std::uint64_t index) const {
  std::uint64_t s = key_ + (index + 1) * kGolden;
  return RngStream(splitmix64(s));
}

std::uint64_t RngStream::next_u64() {
  const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
  const std::uint64_t t = state_[1] << 17;
  state_[2] ^= state_[0];
  state_[3] ^= state_[1];
  state_[1] ^= state_[2];
  state_[0] ^= state_[3];
  state_[2] ^= t;
  state_[3] = rotl(state_[3], 45);
  return result;
}

double RngStream::next_double() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::next_double_open() {
  return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double std_normal_real(RngStream& rng) {
  for (;;) {
    const double u = 2.0 * rng.next_double() - 1.0;
    const double v = 2.0 * rng.next_double() - 1.0;
    const double q = u * u + v * v;
    if (q > 0.0 && q < 1.0) return u * std::sqrt(-2.0 * std::log(q) / q);
  }
}

std::complex<double> std_normal_complex(RngStream& rng) {
  for (;;) {
    const double u = 2.0 * rng.next_double() - 1.0;
    const double v = 2.0 * rng.next_double() - 1.0;
    const double q = u * u + v * v;
    if (q > 0.0 && q < 1.0) {
      // One polar acceptance yields an independent N(0,1) pair; scale by
      // 1/sqrt(2) so each component is N(0, 1/2).
      const double f = std::sqrt(-std::log(q) / q);
      return {u * f, v * f};
    }
  }
}

double gamma_variate(double shape, RngStream& rng) {
  if (!(shape > 0.0)) throw std::domain_error("gamma_variate: shape must be positive");
  if (shape < 1.0) {
    const double g = gamma_variate(shape + 1.0, rng);
    return g * std::pow(rng.next_double_open(), 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x, v;
    do {
      x = std_normal_real(rng);
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = rng.next_double_open();
    if (u < 1.0 - 0.0331 * (x * x) * (x * x)) return d * v;
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
  }
}

double chi_real(int k, RngStream& rng) {
  if (k < 1) throw std::domain_error("chi_real: k must be >= 1");
  return std::sqrt(2.0 * gamma_variate(0.5 * k, rng));
}

double chi_complex_sq(int k, RngStream& rng) {
  if (k < 1) throw std::domain_error("chi_complex_sq: k must be >= 1");
  // chi^2_C(k) ~ chi^2_R(2k)/2 = Gamma(k, 1)
  return gamma_variate(static_cast<double>(k), rng);
}

double uniform_phase(RngStream& rng) {
  const double pi = 3.14159265358979323846;
  return pi - rng.next_double() * (2.0 * pi);
}

}  // namespace haareig
