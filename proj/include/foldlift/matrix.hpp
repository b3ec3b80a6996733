#pragma once

#include <vector>

#include "foldlift/qring.hpp"

namespace foldlift {

// Tiny dense row-major matrices/vectors over QElem; ranks stay below 10 so
// nothing clever is needed.
using Vec = std::vector<QElem>;

struct Mat {
  int n = 0;
  std::vector<QElem> e;  // n*n, row-major

  Mat() = default;
  explicit Mat(int n_) : n(n_), e(static_cast<size_t>(n_) * n_) {}

  static Mat identity(int n) {
    Mat m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = QElem(1);
    return m;
  }

  QElem& at(int i, int j) { return e[static_cast<size_t>(i) * n + j]; }
  const QElem& at(int i, int j) const { return e[static_cast<size_t>(i) * n + j]; }

  bool operator==(const Mat& o) const { return n == o.n && e == o.e; }
  bool operator!=(const Mat& o) const { return !(*this == o); }
  bool operator<(const Mat& o) const {
    for (size_t k = 0; k < e.size(); ++k) {
      if (e[k] != o.e[k]) return e[k] < o.e[k];
    }
    return false;
  }

  bool is_identity() const {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
      }
    return true;
  }
};

inline Mat operator*(const Mat& x, const Mat& y) {
  Mat r(x.n);
  for (int i = 0; i < x.n; ++i)
    for (int k = 0; k < x.n; ++k) {
      const QElem& xik = x.at(i, k);
      if (xik.is_zero()) continue;
      for (int j = 0; j < x.n; ++j) {
        if (y.at(k, j).is_zero()) continue;
        r.at(i, j) += xik * y.at(k, j);
      }
    }
  return r;
}

inline Vec operator*(const Mat& m, const Vec& v) {
  Vec r(m.n);
  for (int j = 0; j < m.n; ++j) {
    if (v[j].is_zero()) continue;
    for (int i = 0; i < m.n; ++i) {
      if (m.at(i, j).is_zero()) continue;
      r[i] += m.at(i, j) * v[j];
    }
  }
  return r;
}

inline Vec operator+(const Vec& x, const Vec& y) {
  Vec r(x.size());
  for (size_t i = 0; i < x.size(); ++i) r[i] = x[i] + y[i];
  return r;
}

inline Vec operator-(const Vec& x) {
  Vec r(x.size());
  for (size_t i = 0; i < x.size(); ++i) r[i] = -x[i];
  return r;
}

inline Vec operator*(const QElem& c, const Vec& v) {
  Vec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

inline bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

inline Vec unit_vec(int n, int i) {
  Vec v(n);
  v[i] = QElem(1);
  return v;
}

}  // namespace foldlift
