#pragma once

// Minimal dense matrix over an arbitrary scalar backend, plus exact Gaussian
// elimination for the exact backends (rank, nullspace, solve, inverse, det).
// Floating-point linear algebra goes through Eigen instead (numeric.hpp).

#include <cassert>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "g2calc/scalars.hpp"

namespace g2calc {

template <class S>
class DenseMat {
 public:
  DenseMat() = default;
  DenseMat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, scalar_traits<S>::zero()) {}

  static DenseMat identity(std::size_t n) {
    DenseMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = scalar_traits<S>::one();
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  S& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const S& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend DenseMat operator+(const DenseMat& a, const DenseMat& b) {
    assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
    DenseMat c(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = a.data_[i] + b.data_[i];
    return c;
  }
  friend DenseMat operator-(const DenseMat& a, const DenseMat& b) {
    assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
    DenseMat c(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = a.data_[i] - b.data_[i];
    return c;
  }
  friend DenseMat operator*(const S& s, const DenseMat& a) {
    DenseMat c(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = s * a.data_[i];
    return c;
  }

  /// Product with zero-skip on the left factor; structured operators are
  /// mostly zeros and exact scalar multiplies dominate the cost.
  friend DenseMat operator*(const DenseMat& a, const DenseMat& b) {
    assert(a.cols_ == b.rows_);
    DenseMat c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const S& aik = a(i, k);
        if (scalar_traits<S>::is_zero(aik)) continue;
        const S* brow = &b.data_[k * b.cols_];
        S* crow = &c.data_[i * c.cols_];
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (scalar_traits<S>::is_zero(brow[j])) continue;
          crow[j] += aik * brow[j];
        }
      }
    }
    return c;
  }

  std::vector<S> operator*(const std::vector<S>& v) const {
    assert(v.size() == cols_);
    std::vector<S> out(rows_, scalar_traits<S>::zero());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) {
        const S& a = (*this)(i, j);
        if (!scalar_traits<S>::is_zero(a)) out[i] += a * v[j];
      }
    return out;
  }

  DenseMat transpose() const {
    DenseMat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  DenseMat conjugate_transpose() const {
    DenseMat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = scalar_traits<S>::conj((*this)(i, j));
    return t;
  }

  bool is_zero() const {
    for (const S& v : data_)
      if (!scalar_traits<S>::is_zero(v)) return false;
    return true;
  }

  /// Largest |entry| as a double, for residual reporting.
  double max_abs() const {
    double m = 0.0;
    for (const S& v : data_) m = std::max(m, scalar_traits<S>::abs_approx(v));
    return m;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<S> data_;
};

namespace detail {

// Row echelon, pivoting on the first nonzero entry. Exact over the exact
// backends; float callers must bring well-conditioned data (production float
// paths use the SVD routines in numeric.hpp instead).
template <class S>
std::vector<std::size_t> exact_echelon(DenseMat<S>& m, DenseMat<S>* aug = nullptr) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && scalar_traits<S>::is_zero(m(p, col))) ++p;
    if (p == m.rows()) continue;
    if (p != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(row, j), m(p, j));
      if (aug)
        for (std::size_t j = 0; j < aug->cols(); ++j) std::swap((*aug)(row, j), (*aug)(p, j));
    }
    const S inv_pivot = scalar_traits<S>::one() / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) = inv_pivot * m(row, j);
    if (aug)
      for (std::size_t j = 0; j < aug->cols(); ++j) (*aug)(row, j) = inv_pivot * (*aug)(row, j);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || scalar_traits<S>::is_zero(m(i, col))) continue;
      const S f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) = m(i, j) - f * m(row, j);
      if (aug)
        for (std::size_t j = 0; j < aug->cols(); ++j)
          (*aug)(i, j) = (*aug)(i, j) - f * (*aug)(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace detail

template <class S>
std::size_t exact_rank(DenseMat<S> m) {
  return detail::exact_echelon(m).size();
}

/// Columns spanning ker(m), exact.
template <class S>
DenseMat<S> exact_nullspace(DenseMat<S> m) {
  const std::size_t n = m.cols();
  const auto pivots = detail::exact_echelon(m);
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  DenseMat<S> basis(n, n - pivots.size());
  std::size_t out = 0;
  for (std::size_t free_col = 0; free_col < n; ++free_col) {
    if (is_pivot[free_col]) continue;
    basis(free_col, out) = scalar_traits<S>::one();
    for (std::size_t r = 0; r < pivots.size(); ++r)
      basis(pivots[r], out) = -m(r, free_col);
    ++out;
  }
  return basis;
}

/// Solves m x = rhs exactly; nullopt when inconsistent. Columns of rhs solved jointly.
template <class S>
std::optional<DenseMat<S>> exact_solve(DenseMat<S> m, DenseMat<S> rhs) {
  if (m.rows() != rhs.rows()) throw std::invalid_argument("exact_solve: shape mismatch");
  const auto pivots = detail::exact_echelon(m, &rhs);
  // consistency: zero rows of m must have zero rhs
  for (std::size_t i = pivots.size(); i < m.rows(); ++i)
    for (std::size_t j = 0; j < rhs.cols(); ++j)
      if (!scalar_traits<S>::is_zero(rhs(i, j))) return std::nullopt;
  DenseMat<S> x(m.cols(), rhs.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r)
    for (std::size_t j = 0; j < rhs.cols(); ++j) x(pivots[r], j) = rhs(r, j);
  return x;
}

template <class S>
DenseMat<S> exact_inverse(const DenseMat<S>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("exact_inverse: not square");
  DenseMat<S> work = m;
  DenseMat<S> aug = DenseMat<S>::identity(m.rows());
  const auto pivots = detail::exact_echelon(work, &aug);
  if (pivots.size() != m.rows()) throw std::domain_error("exact_inverse: singular matrix");
  return aug;
}

template <class S>
S exact_det(DenseMat<S> m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("exact_det: not square");
  S det = scalar_traits<S>::one();
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && scalar_traits<S>::is_zero(m(p, col))) ++p;
    if (p == m.rows()) return scalar_traits<S>::zero();
    if (p != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(row, j), m(p, j));
      det = -det;
    }
    det = det * m(row, col);
    const S inv_pivot = scalar_traits<S>::one() / m(row, col);
    for (std::size_t i = row + 1; i < m.rows(); ++i) {
      if (scalar_traits<S>::is_zero(m(i, col))) continue;
      const S f = m(i, col) * inv_pivot;
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) = m(i, j) - f * m(row, j);
    }
    ++row;
  }
  return det;
}

template <class From, class To>
DenseMat<To> convert_matrix(const DenseMat<From>& m, To (*conv)(const From&)) {
  DenseMat<To> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = conv(m(i, j));
  return out;
}

}  // namespace g2calc
