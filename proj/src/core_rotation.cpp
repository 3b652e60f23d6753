#include "haareig/core_rotation.hpp"

#include <cmath>
#include <stdexcept>

namespace haareig {

namespace {

// Eq.-style refactorization U = G(c, s) diag(d1, d2) with
//   phi = sign(conj(u21)), c = phi u11, s = -phi u21,
//   d1 = conj(phi) |u11|^2 + phi u21^2, d2 = phi det(U).
// No unitarity check; outputs are renormalized.
std::pair<CoreRotation, DiagonalPair> refactor_unchecked(const Mat2& u) {
  const cplx u11 = u[0], u12 = u[1], u21 = u[2], u22 = u[3];
  const cplx phi = complex_sign(std::conj(u21));
  const cplx c = phi * u11;
  const double s = std::real(-phi * u21);
  const cplx d1 = std::conj(phi) * std::norm(u11) + phi * u21 * u21;
  const cplx d2 = phi * (u11 * u22 - u21 * u12);
  return {make_rotation(c, s), DiagonalPair{complex_sign(d1), complex_sign(d2)}};
}

void require_pattern(bool ok) {
  if (!ok) throw std::invalid_argument("turnover: plane pattern mismatch");
}

// Conjugation by the exchange matrix maps a plane-p rotation in a 3x3
// ambient to a plane-(1-p) rotation with (c, s) -> (conj(c), -s).
IndexedRotation flip3(const IndexedRotation& g, int base) {
  const int local = g.plane - base;
  return {CoreRotation{std::conj(g.rot.c), -g.rot.s}, base + (1 - local)};
}

}  // namespace

cplx complex_sign(cplx z) {
  const double a = std::abs(z);
  if (a < 1e-300) return {1.0, 0.0};
  return z / a;
}

double arg_principal(cplx z) {
  if (z.imag() == 0.0) return z.real() < 0.0 ? kPi : 0.0;
  return std::arg(z);
}

CoreRotation make_rotation(cplx c, double s) {
  const double nrm = std::sqrt(std::norm(c) + s * s);
  if (nrm < 1e-300) return CoreRotation{{1.0, 0.0}, 0.0};
  return CoreRotation{c / nrm, s / nrm};
}

CoreRotation conj_transpose(const CoreRotation& g) {
  return CoreRotation{std::conj(g.c), -g.s};
}

double unit_defect(const CoreRotation& g) {
  return std::abs(std::norm(g.c) + g.s * g.s - 1.0);
}

CoreRotation eliminate_second(cplx a, cplx b) {
  const double bb = std::abs(b);
  if (bb < 1e-300) return CoreRotation{{1.0, 0.0}, 0.0};
  const double r = std::hypot(std::abs(a), bb);
  return make_rotation(std::conj(a) * (b / bb) / r, bb / r);
}

Mat2 dense2(const CoreRotation& g) {
  return {g.c, cplx{g.s, 0.0}, cplx{-g.s, 0.0}, std::conj(g.c)};
}

Mat2 dense2(const DiagonalPair& d) {
  return {d.d1, cplx{0.0, 0.0}, cplx{0.0, 0.0}, d.d2};
}

Mat2 mul2(const Mat2& a, const Mat2& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
          a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

Mat3 dense3(const IndexedRotation& a, const IndexedRotation& b,
            const IndexedRotation& c) {
  Mat3 m{cplx{1.0}, {}, {}, {}, cplx{1.0}, {}, {}, {}, cplx{1.0}};
  for (const IndexedRotation* g : {&a, &b, &c}) {
    if (g->plane != 0 && g->plane != 1)
      throw std::invalid_argument("dense3: plane must be 0 or 1");
    // m <- m * G, touching columns (p, p+1)
    const int p = g->plane;
    const cplx gc = g->rot.c;
    const double gs = g->rot.s;
    for (int r = 0; r < 3; ++r) {
      const cplx x = m[3 * r + p];
      const cplx y = m[3 * r + p + 1];
      m[3 * r + p] = x * gc - y * gs;
      m[3 * r + p + 1] = x * gs + y * std::conj(gc);
    }
  }
  return m;
}

std::pair<CoreRotation, DiagonalPair> rotation_from_unitary2(const Mat2& u) {
  // unitarity defect: max-abs entry of U^* U - I
  const cplx u11 = u[0], u12 = u[1], u21 = u[2], u22 = u[3];
  const cplx g11 = std::conj(u11) * u11 + std::conj(u21) * u21 - 1.0;
  const cplx g12 = std::conj(u11) * u12 + std::conj(u21) * u22;
  const cplx g22 = std::conj(u12) * u12 + std::conj(u22) * u22 - 1.0;
  const double defect =
      std::max({std::abs(g11), std::abs(g12), std::abs(g22)});
  if (defect > 1e-10)
    throw std::domain_error("rotation_from_unitary2: input is not unitary");
  return refactor_unchecked(u);
}

std::pair<CoreRotation, DiagonalPair> fuse(const CoreRotation& a,
                                           const CoreRotation& b) {
  return refactor_unchecked(mul2(dense2(a), dense2(b)));
}

std::pair<CoreRotation, DiagonalPair> passthrough_left(const DiagonalPair& d,
                                                       const CoreRotation& g) {
  return {CoreRotation{g.c * d.d1 * std::conj(d.d2), g.s},
          DiagonalPair{d.d2, d.d1}};
}

std::pair<DiagonalPair, CoreRotation> passthrough_right(const CoreRotation& g,
                                                        const DiagonalPair& d) {
  return {DiagonalPair{d.d2, d.d1},
          CoreRotation{g.c * d.d1 * std::conj(d.d2), g.s}};
}

TurnoverResult turnover(const IndexedRotation& a, const IndexedRotation& b,
                        const IndexedRotation& c) {
  require_pattern(a.plane == c.plane && b.plane == a.plane + 1);
  const int i = a.plane;
  const cplx c1 = a.rot.c, c2 = b.rot.c, c3 = c.rot.c;
  const double s1 = a.rot.s, s2 = b.rot.s, s3 = c.rot.s;

  // First column of the dense product M = A B C; m3 is real by structure.
  const cplx m1 = c1 * c3 - s1 * c2 * s3;
  const cplx m2 = -s1 * c3 - std::conj(c1) * c2 * s3;
  const double m3 = s2 * s3;
  const double nu = std::hypot(std::abs(m2), m3);

  TurnoverResult out;
  if (nu < 1e-300) {
    // M = diag(m1) + trailing 2x2 block; refactor the block and absorb
    // the leading phase into the zero-sine outer rotations.
    out.degenerate = true;
    const Mat2 trailing{-s1 * s3 + std::conj(c1) * c2 * std::conj(c3),
                        std::conj(c1) * s2, -s2 * std::conj(c3), std::conj(c2)};
    auto [gN, dp] = refactor_unchecked(trailing);
    const cplx ph = complex_sign(m1);
    out.first = {gN, i + 1};
    out.second = {CoreRotation{ph, 0.0}, i};
    out.third = {CoreRotation{complex_sign(ph * dp.d1), 0.0}, i + 1};
    return out;
  }

  const CoreRotation gj = make_rotation(m1, nu);
  const CoreRotation gg = make_rotation(-m2 / nu, m3 / nu);
  // Bottom row of (G J)^* M pins the third rotation; its (2,1) entry is
  // -s1 s2 / nu, real in exact arithmetic.
  const cplx w22 = gg.s * (std::conj(c1) * s2) + gg.c * std::conj(c2);
  const double sk = s1 * s2 / nu;
  out.first = {gg, i + 1};
  out.second = {gj, i};
  out.third = {make_rotation(std::conj(w22), sk), i + 1};
  return out;
}

TurnoverResult turnover_flipped(const IndexedRotation& a,
                                const IndexedRotation& b,
                                const IndexedRotation& c) {
  require_pattern(a.plane == c.plane && b.plane == a.plane - 1);
  const int base = b.plane;
  TurnoverResult r = turnover(flip3(a, base), flip3(b, base), flip3(c, base));
  TurnoverResult out;
  out.first = flip3(r.first, base);
  out.second = flip3(r.second, base);
  out.third = flip3(r.third, base);
  out.degenerate = r.degenerate;
  return out;
}

}  // namespace haareig
