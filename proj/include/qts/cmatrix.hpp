// SPDX-License-Identifier: Apache-2.0
//
// Dense row-major complex matrix. Values are immutable in practice: every
// operation returns a fresh matrix, nothing here mutates shared state.
// Arithmetic inner loops go through qts::kern::active().
#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "qts/kernels.hpp"

namespace qts {

using cd = std::complex<double>;

class CMat {
 public:
  CMat() = default;
  CMat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, cd{0.0, 0.0}) {}

  static CMat identity(std::size_t n) {
    CMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = cd{1.0, 0.0};
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  cd& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const cd& operator()(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }

  cd* data() { return a_.data(); }
  const cd* data() const { return a_.data(); }

  CMat operator*(const CMat& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("CMat: shape mismatch in product");
    CMat out(rows_, rhs.cols_);
    kern::active().matmul(data(), rhs.data(), out.data(), rows_, cols_, rhs.cols_);
    return out;
  }

  CMat operator+(const CMat& rhs) const {
    check_same_shape(rhs);
    CMat out = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] += rhs.a_[i];
    return out;
  }

  CMat operator-(const CMat& rhs) const {
    check_same_shape(rhs);
    CMat out = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] -= rhs.a_[i];
    return out;
  }

  CMat& operator+=(const CMat& rhs) {
    check_same_shape(rhs);
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += rhs.a_[i];
    return *this;
  }

  CMat& accumulate(cd alpha, const CMat& rhs) {
    check_same_shape(rhs);
    kern::active().axpy(data(), alpha, rhs.data(), a_.size());
    return *this;
  }

  CMat scaled(cd alpha) const {
    CMat out(rows_, cols_);
    kern::active().scale(out.data(), alpha, data(), a_.size());
    return out;
  }

  CMat adjoint() const;
  CMat transpose() const;
  CMat conjugate() const;
  cd trace() const;
  double max_abs() const;
  double frobenius_norm() const;

  // Kronecker product; the left factor is the slow (outermost) index.
  static CMat kron(const CMat& a, const CMat& b);

 private:
  void check_same_shape(const CMat& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
      throw std::invalid_argument("CMat: shape mismatch");
  }

  std::size_t rows_ = 0, cols_ = 0;
  std::vector<cd> a_;
};

inline CMat operator*(cd alpha, const CMat& m) { return m.scaled(alpha); }

double max_abs_diff(const CMat& a, const CMat& b);

// |y> = M |x>
std::vector<cd> apply(const CMat& m, const std::vector<cd>& x);

double norm(const std::vector<cd>& v);
std::vector<cd> kron_vec(const std::vector<cd>& a, const std::vector<cd>& b);

}  // namespace qts
