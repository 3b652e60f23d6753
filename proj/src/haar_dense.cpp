#include "haareig/haar_dense.hpp"

#include <cmath>
#include <stdexcept>

namespace haareig {

namespace {

// One umult step: reflect the trailing k rows of X (columns [col_lo, m))
// by the Householder vector of a fresh length-k Gaussian draw, and record
// the diagonal phase. The column restriction is exact whenever those
// columns are zero in the trailing rows, as they are for X = I.
cplx reflect_trailing(DenseMatrix& x, Field field, int k, int col_lo,
                      RngStream& rng, std::vector<cplx>& u) {
  const int n = x.rows();
  const int m = x.cols();
  u.resize(k);
  double nrm2 = 0.0;
  for (int i = 0; i < k; ++i) {
    u[i] = field == Field::Complex ? std_normal_complex(rng)
                                   : cplx{std_normal_real(rng), 0.0};
    nrm2 += std::norm(u[i]);
  }
  const cplx d = -complex_sign(u[0]);
  u[0] -= d * std::sqrt(nrm2);
  double unrm2 = 0.0;
  for (int i = 0; i < k; ++i) unrm2 += std::norm(u[i]);
  if (unrm2 < 1e-300) return d;  // draw was (numerically) zero
  const double inv = 1.0 / std::sqrt(unrm2);
  for (int i = 0; i < k; ++i) u[i] *= inv;

  // X2 <- X2 - (2u)(u^* X2), rows n-k..n-1
  const int r0 = n - k;
  for (int c = col_lo; c < m; ++c) {
    double tre = 0.0, tim = 0.0;
    for (int i = 0; i < k; ++i) {
      const cplx& xi = x(r0 + i, c);
      // conj(u[i]) * x
      tre += u[i].real() * xi.real() + u[i].imag() * xi.imag();
      tim += u[i].real() * xi.imag() - u[i].imag() * xi.real();
    }
    tre *= 2.0;
    tim *= 2.0;
    for (int i = 0; i < k; ++i) {
      cplx& xi = x(r0 + i, c);
      xi = {xi.real() - (u[i].real() * tre - u[i].imag() * tim),
            xi.imag() - (u[i].real() * tim + u[i].imag() * tre)};
    }
  }
  return d;
}

void scale_rows(DenseMatrix& x, const std::vector<cplx>& d) {
  for (int i = 0; i < x.rows(); ++i) {
    cplx* r = x.row(i);
    for (int c = 0; c < x.cols(); ++c) r[c] *= d[i];
  }
}

}  // namespace

DenseMatrix DenseMatrix::identity(int n) {
  DenseMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = cplx{1.0};
  return m;
}

void umult(DenseMatrix& x, Field field, RngStream& rng) {
  const int n = x.rows();
  if (n < 1 || x.cols() < 1) throw std::invalid_argument("umult: empty matrix");
  std::vector<cplx> d(n), u;
  for (int k = 2; k <= n; ++k) d[n - k] = reflect_trailing(x, field, k, 0, rng, u);
  const cplx z = field == Field::Complex ? std_normal_complex(rng)
                                         : cplx{std_normal_real(rng), 0.0};
  d[n - 1] = -complex_sign(z);
  scale_rows(x, d);
}

DenseMatrix sample_haar_dense(int n, Field field, RngStream& rng) {
  if (n < 1) throw std::invalid_argument("sample_haar_dense: n must be >= 1");
  DenseMatrix x = DenseMatrix::identity(n);
  std::vector<cplx> d(n), u;
  for (int k = 2; k <= n; ++k)
    d[n - k] = reflect_trailing(x, field, k, n - k, rng, u);
  const cplx z = field == Field::Complex ? std_normal_complex(rng)
                                         : cplx{std_normal_real(rng), 0.0};
  d[n - 1] = -complex_sign(z);
  scale_rows(x, d);
  return x;
}

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("multiply: shape mismatch");
  DenseMatrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    cplx* ci = c.row(i);
    for (int j = 0; j < a.cols(); ++j) {
      const cplx aij = a(i, j);
      if (aij == cplx{0.0}) continue;
      const cplx* bj = b.row(j);
      for (int k = 0; k < b.cols(); ++k) ci[k] += aij * bj[k];
    }
  }
  return c;
}

std::vector<cplx> trace_power_sums(const DenseMatrix& m, int kmax) {
  const int n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("trace_power_sums: not square");
  if (n > 2048) throw std::length_error("trace_power_sums: order exceeds cap");
  if (kmax < 1) throw std::invalid_argument("trace_power_sums: kmax must be >= 1");
  std::vector<cplx> sums;
  sums.reserve(kmax);
  DenseMatrix p = m;
  for (int k = 1; k <= kmax; ++k) {
    if (k > 1) p = multiply(p, m);
    cplx tr{0.0};
    for (int i = 0; i < n; ++i) tr += p(i, i);
    sums.push_back(tr);
  }
  return sums;
}

double gram_defect(const DenseMatrix& q) {
  const int n = q.rows();
  double worst = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      cplx g{0.0};
      for (int r = 0; r < n; ++r) g += std::conj(q(r, i)) * q(r, j);
      if (i == j) g -= 1.0;
      worst = std::max(worst, std::abs(g));
    }
  return worst;
}

}  // namespace haareig
