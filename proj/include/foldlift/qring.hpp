#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>

#include "foldlift/errors.hpp"

namespace foldlift {

// The free quadratic algebra L = k[x]/(x^2 - c1*x - 1) over k = Q, with the
// two roots tau, sigma of the defining polynomial satisfying
//
//   tau + sigma = c1,   tau * sigma = -1,   tau^2 = c1*tau + 1.
//
// Only c1 in {0, 1} occurs: c1 = 0 is the split case (tau^2 = 1, L = Q x Q)
// and c1 = 1 is the golden-ratio case (tau = (1+sqrt 5)/2). The constant
// coefficient is pinned to -1; nothing here supports other values.
struct QuadraticRing {
  int c1 = 0;

  bool split() const { return c1 == 0; }
  int discriminant() const { return c1 * c1 + 4; }
  bool operator==(const QuadraticRing& o) const { return c1 == o.c1; }
};

// Element a + b*tau of L, exact rationals a, b. The ring tag rides along so
// that values are self-contained; pure rationals (b = 0) are compatible with
// either ring and adopt the partner's tag under arithmetic.
class QElem {
 public:
  QElem() : a_(0), b_(0), c1_(0) {}
  QElem(long v) : a_(v), b_(0), c1_(0) {}
  QElem(const mpq_class& v) : a_(v), b_(0), c1_(0) {}
  QElem(QuadraticRing ring, mpq_class a, mpq_class b)
      : a_(std::move(a)), b_(std::move(b)), c1_(ring.c1) {
    canon();
  }

  static QElem tau(QuadraticRing ring) { return QElem(ring, 0, 1); }
  static QElem sigma(QuadraticRing ring) { return QElem(ring, ring.c1, -1); }

  static QElem tau_pow(QuadraticRing ring, int m) {
    QElem r(1);
    QElem t = tau(ring);
    for (int i = 0; i < m; ++i) r = r * t;
    return r;
  }

  const mpq_class& a() const { return a_; }
  const mpq_class& b() const { return b_; }
  QuadraticRing ring() const { return QuadraticRing{c1_}; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_rational() const { return b_ == 0; }
  bool is_one() const { return a_ == 1 && b_ == 0; }

  // N(a + b*tau) = a^2 + c1*a*b - b^2; multiplicative, detects units.
  mpq_class norm() const { return a_ * a_ + c1_ * a_ * b_ - b_ * b_; }
  bool is_unit() const { return norm() != 0; }

  // Conjugate swaps tau and sigma: a + b*sigma = (a + c1*b) - b*tau.
  QElem conj() const { return QElem(ring(), a_ + c1_ * b_, -b_); }

  QElem operator-() const { return QElem(ring(), -a_, -b_); }

  friend QElem operator+(const QElem& x, const QElem& y) {
    return QElem(joined(x, y), x.a_ + y.a_, x.b_ + y.b_);
  }
  friend QElem operator-(const QElem& x, const QElem& y) {
    return QElem(joined(x, y), x.a_ - y.a_, x.b_ - y.b_);
  }
  friend QElem operator*(const QElem& x, const QElem& y) {
    QuadraticRing r = joined(x, y);
    // (a1 + b1 t)(a2 + b2 t) with t^2 = c1 t + 1.
    mpq_class bb = x.b_ * y.b_;
    return QElem(r, x.a_ * y.a_ + bb, x.a_ * y.b_ + x.b_ * y.a_ + r.c1 * bb);
  }
  QElem& operator+=(const QElem& y) { return *this = *this + y; }
  QElem& operator-=(const QElem& y) { return *this = *this - y; }
  QElem& operator*=(const QElem& y) { return *this = *this * y; }

  bool operator==(const QElem& x) const { return a_ == x.a_ && b_ == x.b_; }
  bool operator!=(const QElem& x) const { return !(*this == x); }

  // Container order only: lexicographic on (a, b); unrelated to the ring order.
  bool operator<(const QElem& x) const {
    int c = cmp(a_, x.a_);
    if (c != 0) return c < 0;
    return cmp(b_, x.b_) < 0;
  }

  QElem inverse() const {
    mpq_class n = norm();
    if (n == 0) fail(errc::zero_divisor, "inverse of " + str() + " (norm 0)");
    QElem c = conj();
    return QElem(ring(), c.a_ / n, c.b_ / n);
  }

  friend QElem operator/(const QElem& x, const QElem& y) { return x * y.inverse(); }

  // Sign under the real embedding chi: tau -> 1 in the split case,
  // tau -> (1 + sqrt 5)/2 otherwise. Exact; no floating point.
  int chi_sign() const {
    if (c1_ == 0) {
      mpq_class v = a_ + b_;
      return sgn(v);
    }
    // a + b(1+sqrt5)/2 = p/2 + (q/2) sqrt5 with p = 2a + b, q = b.
    mpq_class p = 2 * a_ + b_, q = b_;
    if (q == 0) return sgn(p);
    if (p == 0) return sgn(q);
    if (sgn(p) == sgn(q)) return sgn(p);
    mpq_class d = p * p - 5 * q * q;
    if (d == 0) return 0;  // unreachable: sqrt5 irrational
    return d > 0 ? sgn(p) : sgn(q);
  }

  std::string str() const {
    if (b_ == 0) return a_.get_str();
    std::string bt = (b_ == 1) ? "t" : (b_ == -1 ? "-t" : b_.get_str() + "*t");
    if (a_ == 0) return bt;
    if (bt[0] == '-') return a_.get_str() + bt;
    return a_.get_str() + "+" + bt;
  }

 private:
  static int sgn(const mpq_class& v) { return mpq_sgn(v.get_mpq_t()); }
  static int cmp(const mpq_class& x, const mpq_class& y) {
    return mpq_cmp(x.get_mpq_t(), y.get_mpq_t());
  }
  static QuadraticRing joined(const QElem& x, const QElem& y) {
    if (x.b_ == 0) return y.ring();
    if (y.b_ == 0) return x.ring();
    check(x.c1_ == y.c1_, errc::invariant_violation, "mixed quadratic rings");
    return x.ring();
  }
  void canon() {
    a_.canonicalize();
    b_.canonicalize();
  }

  mpq_class a_, b_;
  int c1_;
};

// pr_tau(a + b*tau) = a, the coefficient projection fixing the tau-form.
inline mpq_class pr_tau(const QElem& x) { return x.a(); }

inline QElem qfrac(long num, long den) { return QElem(mpq_class(num, den)); }

}  // namespace foldlift
