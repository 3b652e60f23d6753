#pragma once

#include <vector>

#include "haareig/factored_form.hpp"

namespace haareig {

/// Row-major complex matrix; the dense side of the project. Real-field
/// samples are stored with exactly zero imaginary parts.
class DenseMatrix {
 public:
  DenseMatrix(int rows, int cols)
      : rows_(rows), cols_(cols),
        data_(static_cast<std::size_t>(rows) * cols, cplx{0.0}) {}
  static DenseMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  cplx& operator()(int i, int j) { return data_[std::size_t(i) * cols_ + j]; }
  const cplx& operator()(int i, int j) const {
    return data_[std::size_t(i) * cols_ + j];
  }
  cplx* row(int i) { return data_.data() + std::size_t(i) * cols_; }
  const cplx* row(int i) const { return data_.data() + std::size_t(i) * cols_; }

 private:
  int rows_, cols_;
  std::vector<cplx> data_;
};

/// Overwrites X with Q X for Haar-distributed Q (orthogonal or unitary by
/// field): one reflector per trailing block, applied implicitly, then a
/// random unimodular diagonal scaling. About 2 n^2 m flops.
void umult(DenseMatrix& x, Field field, RngStream& rng);

/// umult applied to the identity, exploiting the triangular fill-in so the
/// cost drops to about 4 n^3 / 3 flops.
DenseMatrix sample_haar_dense(int n, Field field, RngStream& rng);

/// (trace(M), trace(M^2), ..., trace(M^kmax)) by repeated multiplication;
/// the power-sum oracle for spectra. Square input of order <= 2048.
std::vector<cplx> trace_power_sums(const DenseMatrix& m, int kmax);

/// Max-abs entry of Q^* Q - I.
double gram_defect(const DenseMatrix& q);

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b);

}  // namespace haareig
