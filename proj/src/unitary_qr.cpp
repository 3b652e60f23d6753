#include "haareig/unitary_qr.hpp"

#include <algorithm>
#include <cmath>

namespace haareig {

namespace {

// Roots of lambda^2 - tau lambda + delta, larger-magnitude root first for
// stability, second root from the product.
std::pair<cplx, cplx> quadratic_roots(cplx tau, cplx delta) {
  cplx disc = std::sqrt(tau * tau - 4.0 * delta);
  if (std::abs(tau + disc) < std::abs(tau - disc)) disc = -disc;
  const cplx l1 = 0.5 * (tau + disc);
  const cplx l2 = std::abs(l1) > 1e-300 ? delta / l1 : 0.5 * (tau - disc);
  return {l1, l2};
}

bool exactly_real(const DescendingFactorization& f) {
  for (const CoreRotation& g : f.rotations)
    if (g.c.imag() != 0.0) return false;
  for (const cplx& d : f.diagonal)
    if (d.imag() != 0.0) return false;
  return true;
}

// Real orthogonal input is solved in complex arithmetic, so rounding breaks
// the conjugate symmetry of the spectrum by ~1e-12. Pair near-conjugate
// values, average their phases, and snap unpaired near-real values to +-1.
void symmetrize_conjugate_pairs(std::vector<cplx>& values) {
  constexpr double tol = 1e-8;
  const int n = static_cast<int>(values.size());
  std::vector<double> th(n);
  std::vector<char> done(n, 0);
  for (int i = 0; i < n; ++i) th[i] = arg_principal(values[i]);
  for (int i = 0; i < n; ++i) {
    if (done[i] || th[i] <= 0.0) continue;
    int best = -1;
    double best_gap = tol;
    for (int j = 0; j < n; ++j) {
      if (done[j] || j == i || th[j] > 0.0) continue;
      const double gap = std::abs(th[i] + th[j]);
      if (gap < best_gap) {
        best_gap = gap;
        best = j;
      }
    }
    if (best >= 0) {
      const double m = 0.5 * (th[i] - th[best]);
      values[i] = {std::cos(m), std::sin(m)};
      values[best] = std::conj(values[i]);
      done[i] = done[best] = 1;
    }
  }
  for (int i = 0; i < n; ++i) {
    if (done[i]) continue;
    if (std::abs(th[i]) <= tol)
      values[i] = {1.0, 0.0};
    else if (kPi - std::abs(th[i]) <= tol)
      values[i] = {-1.0, 0.0};
  }
}

}  // namespace

void SolverOptions::validate() const {
  if (!(deflation_tol >= 0.0 && deflation_tol < 1e-6))
    throw std::invalid_argument("SolverOptions: deflation_tol out of range");
  if (max_iter_per_eig < 1)
    throw std::invalid_argument("SolverOptions: max_iter_per_eig must be >= 1");
}

std::pair<cplx, cplx> solve_block2(cplx c, double s, cplx d1, cplx d2) {
  // det of the block is (|c|^2 + s^2) d1 d2
  auto [l1, l2] = quadratic_roots(c * d1 + std::conj(c) * d2,
                                  (std::norm(c) + s * s) * d1 * d2);
  return {complex_sign(l1), complex_sign(l2)};
}

ChaseState::ChaseState(DescendingFactorization f, SolverOptions opts)
    : f_(std::move(f)), opts_(opts) {
  opts_.validate();
  alive_.assign(std::max(f_.n - 1, 0), 1);
  emitted_.assign(f_.n, 0);
  out_.reserve(f_.n);
  locate_window();
}

bool ChaseState::rotation_dead(int j) const {
  return j < 0 || j >= f_.n - 1 || !alive_[j];
}

// Replace rotation j by diag(c_j, conj(c_j)) and push the phases into the
// diagonal; a similarity on the split blocks.
void ChaseState::absorb(int j) {
  const cplx ph = complex_sign(f_.rotations[j].c);
  f_.diagonal[j] *= ph;
  f_.diagonal[j + 1] *= std::conj(ph);
  f_.rotations[j] = CoreRotation{};
  alive_[j] = 0;
}

void ChaseState::emit(int k) {
  counters_.max_modulus_drift = std::max(
      counters_.max_modulus_drift, std::abs(std::abs(f_.diagonal[k]) - 1.0));
  const cplx lam = complex_sign(f_.diagonal[k]);
  f_.diagonal[k] = lam;
  out_.push_back(lam);
  emitted_[k] = 1;
}

void ChaseState::locate_window() {
  int j = f_.n - 2;
  while (j >= 0 && !alive_[j]) --j;
  if (j < 0) {
    lo_ = 0;
    hi_ = -1;
    return;
  }
  hi_ = j + 1;
  while (j >= 0 && alive_[j]) --j;
  lo_ = j + 1;
}

bool ChaseState::finished() const {
  return hi_ < 0 &&
         std::find(emitted_.begin(), emitted_.end(), 0) == emitted_.end();
}

cplx ChaseState::wilkinson_shift() const {
  if (hi_ < 0 || hi_ - lo_ < 1)
    throw std::logic_error("wilkinson_shift: active block smaller than 2");
  const cplx a11 = entry(f_, hi_ - 1, hi_ - 1);
  const cplx a12 = entry(f_, hi_ - 1, hi_);
  const cplx a21 = entry(f_, hi_, hi_ - 1);
  const cplx a22 = entry(f_, hi_, hi_);
  auto [l1, l2] = quadratic_roots(a11 + a22, a11 * a22 - a12 * a21);
  const double r1 = std::abs(l1 - a22);
  const double r2 = std::abs(l2 - a22);
  cplx lam;
  if (r1 < r2)
    lam = l1;
  else if (r2 < r1)
    lam = l2;
  else
    lam = l1.imag() >= l2.imag() ? l1 : l2;  // tie: larger imaginary part
  if (std::abs(lam) < 1e-300) return cplx{1.0};
  return lam / std::abs(lam);
}

void ChaseState::chase_step(cplx shift) {
  if (hi_ < 0 || hi_ - lo_ < 1)
    throw std::logic_error("chase_step: active block smaller than 2");
  if (std::abs(f_.rotations[lo_].s) <= opts_.deflation_tol) {
    // already decoupled at the top; shrink instead of sweeping
    absorb(lo_);
    ++lo_;
    return;
  }
  ++sweeps_;

  auto& rot = f_.rotations;
  auto& d = f_.diagonal;

  // Seed rotation from the shifted first column of the window.
  const CoreRotation q1 =
      eliminate_second(entry(f_, lo_, lo_) - shift, entry(f_, lo_ + 1, lo_));

  // Left side: fuse Q1 into the top rotation; delta1 commutes straight
  // into d[lo], delta2 ripples down the window into d[hi].
  auto [top, dp] = fuse(q1, rot[lo_]);
  ++counters_.fusions;
  rot[lo_] = top;
  d[lo_] *= dp.d1;
  for (int j = lo_ + 1; j < hi_; ++j) rot[j].c *= dp.d2;
  d[hi_] *= dp.d2;
  counters_.passthroughs += hi_ - lo_ - 1;

  // Right side: drive Q1^* down with passthrough + turnover, fuse at the
  // bottom of the window.
  CoreRotation misfit = conj_transpose(q1);
  int p = lo_;
  for (;;) {
    auto [m2, swapped] =
        passthrough_left(DiagonalPair{d[p], d[p + 1]}, misfit);
    ++counters_.passthroughs;
    d[p] = swapped.d1;
    d[p + 1] = swapped.d2;
    if (p == hi_ - 1) {
      auto [bottom, dq] = fuse(rot[p], m2);
      ++counters_.fusions;
      rot[p] = bottom;
      d[p] *= dq.d1;
      d[p + 1] *= dq.d2;
      break;
    }
    const TurnoverResult t = turnover({rot[p], p}, {rot[p + 1], p + 1}, {m2, p});
    ++counters_.turnovers;
    rot[p] = t.second.rot;
    rot[p + 1] = t.third.rot;
    misfit = t.first.rot;
    ++p;
  }
}

void ChaseState::deflate_scan() {
  for (int j = 0; j < f_.n - 1; ++j)
    if (alive_[j] && std::abs(f_.rotations[j].s) <= opts_.deflation_tol)
      absorb(j);

  for (int k = 0; k < f_.n; ++k)
    if (!emitted_[k] && rotation_dead(k - 1) && rotation_dead(k)) emit(k);

  // isolated rotations form 2x2 blocks: solve directly
  for (int j = 0; j < f_.n - 1; ++j) {
    if (alive_[j] && rotation_dead(j - 1) && rotation_dead(j + 1)) {
      const CoreRotation& g = f_.rotations[j];
      auto [r1, r2] = quadratic_roots(
          g.c * f_.diagonal[j] + std::conj(g.c) * f_.diagonal[j + 1],
          (std::norm(g.c) + g.s * g.s) * f_.diagonal[j] * f_.diagonal[j + 1]);
      counters_.max_modulus_drift =
          std::max({counters_.max_modulus_drift,
                    std::abs(std::abs(r1) - 1.0), std::abs(std::abs(r2) - 1.0)});
      auto [l1, l2] = solve_block2(f_.rotations[j].c, f_.rotations[j].s,
                                   f_.diagonal[j], f_.diagonal[j + 1]);
      f_.rotations[j] = CoreRotation{};
      alive_[j] = 0;
      f_.diagonal[j] = l1;
      f_.diagonal[j + 1] = l2;
      out_.push_back(l1);
      out_.push_back(l2);
      emitted_[j] = emitted_[j + 1] = 1;
    }
  }

  locate_window();
}

EigenSample eigenvalues(const DescendingFactorization& f,
                        const SolverOptions& opts) {
  return eigenvalues(f, opts, nullptr);
}

EigenSample eigenvalues(const DescendingFactorization& f,
                        const SolverOptions& opts, OpCounters* counters) {
  opts.validate();
  const bool real_input = exactly_real(f);
  ChaseState state(f, opts);
  const long long budget =
      static_cast<long long>(opts.max_iter_per_eig) * f.n;
  state.deflate_scan();
  while (!state.finished()) {
    if (state.iteration_count() >= budget)
      throw ConvergenceError("unitary QR: sweep budget exhausted",
                             EigenSample{state.emitted()});
    state.chase_step(state.wilkinson_shift());
    state.deflate_scan();
  }
  if (counters) {
    *counters = state.counters();
    counters->sweeps = state.iteration_count();
  }
  EigenSample out{state.emitted()};
  if (real_input) symmetrize_conjugate_pairs(out.values);
  return out;
}

}  // namespace haareig
