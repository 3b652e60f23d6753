#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "haareig/factored_form.hpp"
#include "haareig/stats.hpp"

namespace haareig {

struct SolverOptions {
  /// A rotation deflates when |s| falls at or below this threshold.
  double deflation_tol = 1e-14;
  /// Sweep budget: the solver fails after max_iter_per_eig * n sweeps.
  int max_iter_per_eig = 30;

  void validate() const;  // throws std::invalid_argument
};

struct OpCounters {
  long long turnovers = 0;
  long long passthroughs = 0;
  long long fusions = 0;
  long long sweeps = 0;
  /// Largest | |lambda| - 1 | seen before projection onto the circle.
  double max_modulus_drift = 0.0;
};

/// Raised when the sweep budget is exhausted; carries the eigenvalues
/// deflated so far.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, EigenSample partial)
      : std::runtime_error(what), partial_(std::move(partial)) {}
  const EigenSample& partial() const { return partial_; }

 private:
  EigenSample partial_;
};

/// Mutable solver state over a descending factorization: an active window
/// of not-yet-converged rotations plus the eigenvalues emitted so far.
/// Deflated rotations are replaced by the identity so the factorization
/// always represents the current (block-diagonal) iterate.
class ChaseState {
 public:
  explicit ChaseState(DescendingFactorization f, SolverOptions opts = {});

  bool finished() const;
  /// Active window [lo, hi] as inclusive 0-based matrix indices; valid
  /// only while !finished().
  int active_lo() const { return lo_; }
  int active_hi() const { return hi_; }
  long long iteration_count() const { return sweeps_; }
  const OpCounters& counters() const { return counters_; }
  const DescendingFactorization& factorization() const { return f_; }
  const std::vector<cplx>& emitted() const { return out_; }

  /// Wilkinson shift: the trailing 2x2 eigenvalue of the active window
  /// closer to the corner entry, projected onto the unit circle. Requires
  /// an active window of size >= 2.
  cplx wilkinson_shift() const;

  /// One full similarity sweep over the active window: seed rotation from
  /// the shifted first column, turnover-chase it down, fuse at the bottom.
  /// If the window's top rotation is already below tolerance the window
  /// shrinks instead.
  void chase_step(cplx shift);

  /// Absorbs every below-tolerance rotation into the diagonal, emits
  /// converged 1x1 indices, solves isolated 2x2 blocks directly, and
  /// repositions the active window on the bottommost unreduced block.
  void deflate_scan();

 private:
  bool rotation_dead(int j) const;
  void absorb(int j);
  void emit(int k);
  void locate_window();

  DescendingFactorization f_;
  SolverOptions opts_;
  std::vector<char> alive_;    // per rotation
  std::vector<char> emitted_;  // per matrix index
  std::vector<cplx> out_;
  long long sweeps_ = 0;
  int lo_ = 0, hi_ = -1;
  OpCounters counters_{};
};

/// Eigenvalues of the 2x2 block [[c d1, s d2], [-s d1, conj(c) d2]],
/// both projected to unit modulus.
std::pair<cplx, cplx> solve_block2(cplx c, double s, cplx d1, cplx d2);

/// All n eigenvalues of the represented matrix, on the unit circle, via
/// single-shift core-chasing QR; O(n^2) core operations, O(n) memory.
/// For exactly-real input the returned multiset is symmetrized under
/// conjugation. Throws ConvergenceError when the sweep budget runs out.
EigenSample eigenvalues(const DescendingFactorization& f,
                        const SolverOptions& opts = {});
EigenSample eigenvalues(const DescendingFactorization& f,
                        const SolverOptions& opts, OpCounters* counters);

}  // namespace haareig
