#pragma once

#include <cassert>
#include <initializer_list>
#include <vector>

#include "apollo/scalar.hpp"

namespace apollo {

// Small dense vectors/matrices over a generic scalar.  Everything in this
// project is at most (d+2) x (d+2) with d <= 24, so no effort is spent on
// anything beyond straightforward loops; the point is that the element type
// can be an exact field element.

template <typename S>
using VecS = std::vector<S>;

template <typename S>
VecS<S> operator+(const VecS<S>& x, const VecS<S>& y) {
  assert(x.size() == y.size());
  VecS<S> r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] + y[i];
  return r;
}

template <typename S>
VecS<S> operator-(const VecS<S>& x, const VecS<S>& y) {
  assert(x.size() == y.size());
  VecS<S> r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] - y[i];
  return r;
}

template <typename S>
VecS<S> operator*(const S& c, const VecS<S>& x) {
  VecS<S> r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = c * x[i];
  return r;
}

template <typename S>
S dot(const VecS<S>& x, const VecS<S>& y) {
  assert(x.size() == y.size());
  S r{};
  for (std::size_t i = 0; i < x.size(); ++i) r += x[i] * y[i];
  return r;
}

template <typename S>
S norm2(const VecS<S>& x) {
  return dot(x, x);
}

template <typename S>
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols) : rows_(rows), cols_(cols), v_(std::size_t(rows) * cols) {}

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = S(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  S& operator()(int i, int j) { return v_[std::size_t(i) * cols_ + j]; }
  const S& operator()(int i, int j) const { return v_[std::size_t(i) * cols_ + j]; }

  VecS<S> row(int i) const {
    VecS<S> r(cols_);
    for (int j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
    return r;
  }
  void set_row(int i, const VecS<S>& r) {
    assert(int(r.size()) == cols_);
    for (int j = 0; j < cols_; ++j) (*this)(i, j) = r[j];
  }

  friend Mat operator*(const Mat& a, const Mat& b) {
    assert(a.cols_ == b.rows_);
    Mat r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const S& aik = a(i, k);
        for (int j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
      }
    return r;
  }

  friend VecS<S> operator*(const Mat& a, const VecS<S>& x) {
    assert(int(x.size()) == a.cols_);
    VecS<S> r(a.rows_);
    for (int i = 0; i < a.rows_; ++i) {
      S acc{};
      for (int j = 0; j < a.cols_; ++j) acc += a(i, j) * x[j];
      r[i] = acc;
    }
    return r;
  }

  Mat transpose() const {
    Mat r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.v_ == b.v_;
  }
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

  /// max |entry|, as a scalar of the same backend
  S max_abs() const {
    S m{};
    for (const S& x : v_)
      if (m < abs(x)) m = abs(x);
    return m;
  }

 private:
  int rows_, cols_;
  std::vector<S> v_;
};

inline double abs(double v) { return std::abs(v); }

}  // namespace apollo
