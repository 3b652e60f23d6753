#include "haareig/factored_form.hpp"

#include <cmath>
#include <iomanip>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

namespace haareig {

namespace {

// -e^{i theta} as an exact value for the phases the real field produces.
cplx minus_unit_phase(double theta) {
  if (theta == 0.0) return {-1.0, 0.0};
  if (theta == kPi || theta == -kPi) return {1.0, 0.0};
  return {-std::cos(theta), -std::sin(theta)};
}

double wrap_to_principal(double theta) {
  while (theta > kPi) theta -= 2.0 * kPi;
  while (theta <= -kPi) theta += 2.0 * kPi;
  return theta;
}

struct DrawnPair {
  cplx alpha;
  double beta;
};

DrawnPair draw_pair(Field field, int degrees, RngStream& rng,
                    const SamplerHooks& hooks) {
  DrawnPair p;
  if (field == Field::Complex) {
    p.alpha = std_normal_complex(rng);
    p.beta = hooks.skip_chi_draw ? 1.0 : std::sqrt(chi_complex_sq(degrees, rng));
  } else {
    p.alpha = cplx{std_normal_real(rng), 0.0};
    p.beta = hooks.skip_chi_draw ? 1.0 : chi_real(degrees, rng);
  }
  return p;
}

// Terminal phase draw for the unconstrained case; consumed identically by
// both samplers so transcripts stay aligned.
double draw_terminal_phase(Field field, RngStream& rng) {
  if (field == Field::Complex) return uniform_phase(rng);
  return std_normal_real(rng) < 0.0 ? kPi : 0.0;
}

// UGD refactorization without the public unitarity gate; local copy so the
// sampler loop stays self-contained.
void split_step(const Mat2& u, CoreRotation& g, cplx& d1, cplx& d2) {
  const cplx phi = complex_sign(std::conj(u[2]));
  g = make_rotation(phi * u[0], std::real(-phi * u[2]));
  d1 = complex_sign(std::conj(phi) * std::norm(u[0]) + phi * u[2] * u[2]);
  d2 = complex_sign(phi * (u[0] * u[3] - u[2] * u[1]));
}

}  // namespace

void SampleSpec::validate() const {
  if (n < 1) throw std::invalid_argument("SampleSpec: n must be >= 1");
  if (det_phase) {
    const cplx xi = *det_phase;
    if (std::abs(std::abs(xi) - 1.0) > 1e-12)
      throw std::invalid_argument("SampleSpec: det_phase must be unimodular");
    if (field == Field::Real && std::abs(xi.imag()) != 0.0)
      throw std::invalid_argument(
          "SampleSpec: real matrices have determinant +1 or -1");
  }
}

Mat2 householder_block(const HouseholderFactorization::ReflectorPair& p) {
  const double w = std::hypot(std::abs(p.alpha), p.beta);
  if (w < 1e-300) return {cplx{-1.0}, cplx{0.0}, cplx{0.0}, cplx{1.0}};
  const cplx psi = complex_sign(p.alpha);
  const double a = std::abs(p.alpha) / w;
  const double b = p.beta / w;
  return {cplx{-a}, -psi * b, -std::conj(psi) * b, cplx{a}};
}

HouseholderFactorization sample_householder_form(const SampleSpec& spec,
                                                 RngStream& rng) {
  spec.validate();
  const int n = spec.n;
  HouseholderFactorization h;
  h.n = n;
  h.pairs.resize(n - 1);
  h.phases.resize(n);
  for (int j = 0; j < n - 1; ++j) {
    const DrawnPair p = draw_pair(spec.field, n - 1 - j, rng, {});
    h.pairs[j] = {p.alpha, p.beta};
    h.phases[j] = arg_principal(p.alpha);
  }
  if (!spec.det_phase) {
    h.phases[n - 1] = draw_terminal_phase(spec.field, rng);
  } else if (spec.field == Field::Real) {
    // det H = -prod(e^{i theta_j}); pick the terminal sign that lands on xi.
    int prod = 1;
    for (int j = 0; j < n - 1; ++j) prod *= h.phases[j] == 0.0 ? 1 : -1;
    const int want = spec.det_phase->real() > 0.0 ? 1 : -1;
    const int sign_n = -want * prod;
    h.phases[n - 1] = sign_n == 1 ? 0.0 : kPi;
  } else {
    double sum = 0.0;
    for (int j = 0; j < n - 1; ++j) sum += h.phases[j];
    h.phases[n - 1] = wrap_to_principal(arg_principal(*spec.det_phase) - kPi - sum);
  }
  return h;
}

DescendingFactorization refactor_to_rotations(const HouseholderFactorization& h) {
  const int n = h.n;
  DescendingFactorization f;
  f.n = n;
  f.rotations.resize(n - 1);
  f.diagonal.assign(n, cplx{1.0});
  cplx delta{1.0};
  for (int j = 0; j < n - 1; ++j) {
    Mat2 u = householder_block(h.pairs[j]);
    u[0] *= delta;
    u[1] *= delta;
    cplx d1, d2;
    split_step(u, f.rotations[j], d1, d2);
    f.diagonal[j] = minus_unit_phase(h.phases[j]) * d1;
    delta = d2;
  }
  f.diagonal[n - 1] = delta * minus_unit_phase(h.phases[n - 1]);
  return f;
}

DescendingFactorization sample_descending(const SampleSpec& spec,
                                          RngStream& rng) {
  return sample_descending(spec, rng, {});
}

DescendingFactorization sample_descending(const SampleSpec& spec,
                                          RngStream& rng,
                                          const SamplerHooks& hooks) {
  spec.validate();
  const int n = spec.n;
  DescendingFactorization f;
  f.n = n;
  f.rotations.resize(n - 1);
  f.diagonal.assign(n, cplx{1.0});
  cplx delta{1.0};
  for (int j = 0; j < n - 1; ++j) {
    const DrawnPair p = draw_pair(spec.field, n - 1 - j, rng, hooks);
    Mat2 u = householder_block({p.alpha, p.beta});
    u[0] *= delta;
    u[1] *= delta;
    cplx d1, d2;
    split_step(u, f.rotations[j], d1, d2);
    f.diagonal[j] = minus_unit_phase(arg_principal(p.alpha)) * d1;
    delta = d2;
  }
  if (!spec.det_phase) {
    f.diagonal[n - 1] = delta * minus_unit_phase(draw_terminal_phase(spec.field, rng));
  } else {
    cplx prod{1.0};
    for (int j = 0; j < n - 1; ++j) prod *= f.diagonal[j];
    f.diagonal[n - 1] = complex_sign(*spec.det_phase) * std::conj(complex_sign(prod));
  }
  return f;
}

std::vector<cplx> to_dense(const DescendingFactorization& f, int cap) {
  const int n = f.n;
  if (n > cap) throw std::length_error("to_dense: order exceeds cap");
  std::vector<cplx> h(static_cast<std::size_t>(n) * n, cplx{0.0});
  for (int i = 0; i < n; ++i) h[static_cast<std::size_t>(i) * n + i] = f.diagonal[i];
  for (int j = n - 2; j >= 0; --j) {
    const cplx c = f.rotations[j].c;
    const double s = f.rotations[j].s;
    cplx* top = h.data() + static_cast<std::size_t>(j) * n;
    cplx* bot = top + n;
    for (int k = 0; k < n; ++k) {
      const cplx x = top[k];
      const cplx y = bot[k];
      top[k] = c * x + s * y;
      bot[k] = -s * x + std::conj(c) * y;
    }
  }
  return h;
}

cplx entry(const DescendingFactorization& f, int i, int j) {
  const int n = f.n;
  if (i < 0 || j < 0 || i >= n || j >= n)
    throw std::out_of_range("entry: index out of range");
  if (i > j + 1) return cplx{0.0};
  if (i == j + 1) return -f.rotations[j].s * f.diagonal[j];
  const cplx ci = i > 0 ? f.rotations[i - 1].c : cplx{1.0};
  const cplx cj = j < n - 1 ? f.rotations[j].c : cplx{1.0};
  cplx prod{1.0};
  for (int k = i; k < j; ++k) prod *= f.rotations[k].s;
  return std::conj(ci) * prod * cj * f.diagonal[j];
}

cplx determinant(const DescendingFactorization& f) {
  cplx det{1.0};
  for (const cplx& d : f.diagonal) det *= d;
  return det;
}

void write_factorization(std::ostream& os, const DescendingFactorization& f,
                         Field field) {
  os << std::setprecision(17);
  os << f.n << ' ' << (field == Field::Real ? "real" : "complex") << '\n';
  for (const CoreRotation& g : f.rotations)
    os << g.c.real() << ' ' << g.c.imag() << ' ' << g.s << '\n';
  for (const cplx& d : f.diagonal) os << d.real() << ' ' << d.imag() << '\n';
}

std::pair<DescendingFactorization, Field> read_factorization(std::istream& is) {
  DescendingFactorization f;
  std::string tag;
  if (!(is >> f.n >> tag) || f.n < 1)
    throw std::runtime_error("read_factorization: bad header");
  Field field;
  if (tag == "real")
    field = Field::Real;
  else if (tag == "complex")
    field = Field::Complex;
  else
    throw std::runtime_error("read_factorization: unknown field tag");
  f.rotations.resize(f.n - 1);
  f.diagonal.resize(f.n);
  for (CoreRotation& g : f.rotations) {
    double re, im, s;
    if (!(is >> re >> im >> s))
      throw std::runtime_error("read_factorization: truncated rotations");
    g = CoreRotation{{re, im}, s};
  }
  for (cplx& d : f.diagonal) {
    double re, im;
    if (!(is >> re >> im))
      throw std::runtime_error("read_factorization: truncated diagonal");
    d = {re, im};
  }
  return {std::move(f), field};
}

}  // namespace haareig
