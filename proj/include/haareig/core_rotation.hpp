#pragma once

#include <array>
#include <complex>
#include <utility>

namespace haareig {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

/// z / |z|, with the zero case mapped to 1 so real inputs stay real.
cplx complex_sign(cplx z);

/// Principal argument in (-pi, pi]. Unlike std::arg this maps a negative
/// real with -0.0 imaginary part to +pi, and 0 to 0.
double arg_principal(cplx z);

/// Essentially-2x2 plane rotation
///
///   [[ c, s ],
///    [ -s, conj(c) ]]
///
/// with complex cosine c and real sine s, |c|^2 + s^2 = 1.
struct CoreRotation {
  cplx c{1.0, 0.0};
  double s = 0.0;
};

/// Pair of unimodular diagonal entries.
struct DiagonalPair {
  cplx d1{1.0, 0.0};
  cplx d2{1.0, 0.0};
};

/// Rotation acting on the (plane, plane+1) index pair of the ambient
/// matrix; plane is 0-based, 0 <= plane <= n-2.
struct IndexedRotation {
  CoreRotation rot;
  int plane = 0;
};

/// Rescales (c, s) to unit norm.
CoreRotation make_rotation(cplx c, double s);
CoreRotation conj_transpose(const CoreRotation& g);
/// | |c|^2 + s^2 - 1 |
double unit_defect(const CoreRotation& g);

/// Rotation with real sine mapping [a; b] to [r; 0].
CoreRotation eliminate_second(cplx a, cplx b);

using Mat2 = std::array<cplx, 4>;  // row-major 2x2
using Mat3 = std::array<cplx, 9>;  // row-major 3x3

Mat2 dense2(const CoreRotation& g);
Mat2 dense2(const DiagonalPair& d);
Mat2 mul2(const Mat2& a, const Mat2& b);
/// Product of three rotations embedded in a 3x3 matrix; planes must lie
/// in {0, 1}.
Mat3 dense3(const IndexedRotation& a, const IndexedRotation& b,
            const IndexedRotation& c);

/// Refactors a 2x2 unitary as rotation * diag(d1, d2). Throws
/// std::domain_error if the unitarity defect of u exceeds 1e-10.
std::pair<CoreRotation, DiagonalPair> rotation_from_unitary2(const Mat2& u);

/// Product of two rotations at the same plane, refactored as
/// rotation * diagonal.
std::pair<CoreRotation, DiagonalPair> fuse(const CoreRotation& a,
                                           const CoreRotation& b);

/// diag(d1, d2) * G(c, s) = G(c d1 conj(d2), s) * diag(d2, d1).
/// The sine passes through untouched.
std::pair<CoreRotation, DiagonalPair> passthrough_left(const DiagonalPair& d,
                                                       const CoreRotation& g);

/// G(c, s) * diag(d1, d2) = diag(d2, d1) * G(c d1 conj(d2), s).
std::pair<DiagonalPair, CoreRotation> passthrough_right(const CoreRotation& g,
                                                        const DiagonalPair& d);

struct TurnoverResult {
  IndexedRotation first, second, third;
  /// Set when the product was (numerically) diagonal; the outputs then
  /// have zero sines with the phases carried in the cosines.
  bool degenerate = false;
};

/// Refactors G_i J_{i+1} K_i as G'_{i+1} J'_i K'_{i+1} with equal dense
/// product; all output sines are real. Inputs must have the plane
/// pattern (i, i+1, i).
TurnoverResult turnover(const IndexedRotation& a, const IndexedRotation& b,
                        const IndexedRotation& c);

/// Mirror image of turnover: pattern (i+1, i, i+1) -> (i, i+1, i).
TurnoverResult turnover_flipped(const IndexedRotation& a,
                                const IndexedRotation& b,
                                const IndexedRotation& c);

}  // namespace haareig
