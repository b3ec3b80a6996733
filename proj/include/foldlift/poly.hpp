#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "foldlift/coxeter.hpp"

namespace foldlift {

// Sparse multivariate polynomial over L: exponent vector -> coefficient.
// Variables are bound by position to a root datum's simple roots; the datum
// itself is not stored, only the variable count.
class Poly {
 public:
  using Exp = std::vector<unsigned char>;
  using Terms = std::map<Exp, QElem>;

  Poly() = default;
  explicit Poly(int nvars) : nvars_(nvars) {}

  static Poly constant(int nvars, const QElem& c) {
    Poly p(nvars);
    if (!c.is_zero()) p.terms_.emplace(Exp(nvars, 0), c);
    return p;
  }
  static Poly variable(int nvars, int i) {
    Poly p(nvars);
    Exp e(nvars, 0);
    e[i] = 1;
    p.terms_.emplace(std::move(e), QElem(1));
    return p;
  }
  // Linear form from coordinates in the simple-root basis.
  static Poly linear(const Vec& coords) {
    Poly p(static_cast<int>(coords.size()));
    for (size_t i = 0; i < coords.size(); ++i) {
      if (coords[i].is_zero()) continue;
      Exp e(coords.size(), 0);
      e[i] = 1;
      p.terms_.emplace(std::move(e), coords[i]);
    }
    return p;
  }

  int nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  int degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, total(e));
    return d;
  }
  bool is_homogeneous() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
      if (d < 0)
        d = total(e);
      else if (d != total(e))
        return false;
    }
    return true;
  }
  // Degree-1 with no constant term.
  bool is_linear_form() const {
    for (const auto& [e, c] : terms_)
      if (total(e) != 1) return false;
    return !terms_.empty();
  }
  // Coefficient of x_i in a linear form (zero if absent).
  QElem linear_coeff(int i) const {
    Exp e(nvars_, 0);
    e[i] = 1;
    auto it = terms_.find(e);
    return it == terms_.end() ? QElem(0) : it->second;
  }

  QElem constant_coeff() const {
    auto it = terms_.find(Exp(nvars_, 0));
    return it == terms_.end() ? QElem(0) : it->second;
  }

  bool operator==(const Poly& o) const { return terms_ == o.terms_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly& add_term(const Exp& e, const QElem& c) {
    if (c.is_zero()) return *this;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
    return *this;
  }

  friend Poly operator+(const Poly& x, const Poly& y) {
    Poly r = x;
    for (const auto& [e, c] : y.terms_) r.add_term(e, c);
    return r;
  }
  friend Poly operator-(const Poly& x, const Poly& y) {
    Poly r = x;
    for (const auto& [e, c] : y.terms_) r.add_term(e, -c);
    return r;
  }
  Poly operator-() const {
    Poly r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }
  friend Poly operator*(const Poly& x, const Poly& y) {
    Poly r(x.nvars_);
    for (const auto& [ex, cx] : x.terms_)
      for (const auto& [ey, cy] : y.terms_) {
        Exp e = ex;
        for (size_t i = 0; i < e.size(); ++i) e[i] = static_cast<unsigned char>(e[i] + ey[i]);
        r.add_term(e, cx * cy);
      }
    return r;
  }
  friend Poly operator*(const QElem& c, const Poly& x) {
    Poly r(x.nvars_);
    if (c.is_zero()) return r;
    for (const auto& [e, cc] : x.terms_) r.add_term(e, c * cc);
    return r;
  }
  Poly& operator+=(const Poly& y) { return *this = *this + y; }
  Poly& operator-=(const Poly& y) { return *this = *this - y; }
  Poly& operator*=(const Poly& y) { return *this = *this * y; }

  // Ring morphism sending x_i to images[i]; coefficients pass through.
  Poly substitute(const std::vector<Poly>& images) const {
    int m = images.empty() ? nvars_ : images[0].nvars();
    Poly r(m);
    std::vector<std::vector<Poly>> powers(nvars_);  // powers[i][k] = images[i]^k
    for (const auto& [e, c] : terms_) {
      Poly t = Poly::constant(m, c);
      for (int i = 0; i < nvars_; ++i) {
        if (e[i] == 0) continue;
        auto& pw = powers[i];
        if (pw.empty()) pw = {Poly::constant(m, QElem(1)), images[i]};
        while (static_cast<int>(pw.size()) <= e[i]) pw.push_back(pw.back() * images[i]);
        t *= pw[e[i]];
      }
      r += t;
    }
    return r;
  }

  int max_exponent(int i) const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max<int>(d, e[i]);
    return d;
  }

  std::string str(const std::string& varprefix) const {
    if (terms_.empty()) return "0";
    std::vector<const std::pair<const Exp, QElem>*> ts;
    for (const auto& t : terms_) ts.push_back(&t);
    std::sort(ts.begin(), ts.end(), [](auto* x, auto* y) {
      int dx = total(x->first), dy = total(y->first);
      if (dx != dy) return dx > dy;
      return x->first > y->first;
    });
    std::string out;
    for (auto* t : ts) {
      std::string term = term_str(t->first, t->second, varprefix);
      if (out.empty())
        out = term;
      else if (term[0] == '-')
        out += term;
      else
        out += "+" + term;
    }
    return out;
  }

 private:
  static int total(const Exp& e) {
    int d = 0;
    for (auto x : e) d += x;
    return d;
  }
  static std::string term_str(const Exp& e, const QElem& c, const std::string& vp) {
    std::string mono;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vp + std::to_string(i + 1);
      if (e[i] > 1) mono += "^" + std::to_string(int(e[i]));
    }
    if (mono.empty()) return c.str();
    if (c.is_one()) return mono;
    if (c == QElem(-1)) return "-" + mono;
    std::string cs = c.str();
    bool composite = c.a() != 0 && c.b() != 0;
    if (composite) return "(" + cs + ")*" + mono;
    return cs + "*" + mono;
  }

  int nvars_ = 0;
  Terms terms_;
};

// The group acts as a ring automorphism determined on the degree-1 part by
// the matrix: x_j -> w(alpha_j), the j-th matrix column.
inline Poly act(const GroupElement& w, const Poly& f) {
  int n = w.datum().rank;
  std::vector<Poly> images;
  images.reserve(n);
  for (int j = 0; j < n; ++j) {
    Vec col(n);
    for (int i = 0; i < n; ++i) col[i] = w.matrix().at(i, j);
    images.push_back(Poly::linear(col));
  }
  return f.substitute(images);
}

namespace detail {
// Pivot variable of a linear form: one whose coefficient is a unit in L,
// rational pivots preferred so the split case stays harmless.
inline int pivot_variable(const Poly& l) {
  check(l.is_linear_form(), errc::invariant_violation, "divisor is not a linear form");
  int fallback = -1;
  for (const auto& [e, c] : l.terms()) {
    int idx = -1;
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i]) idx = static_cast<int>(i);
    if (!c.is_unit()) continue;
    if (c.is_rational()) return idx;
    if (fallback < 0) fallback = idx;
  }
  if (fallback < 0)
    fail(errc::no_unit_coefficient, "linear form " + l.str("x") + " has no unit coefficient");
  return fallback;
}
}  // namespace detail

// f in l*S, decided by substituting the zero locus of l for a unit-pivot
// variable and testing for the zero polynomial.
inline bool divisible_by_linear(const Poly& f, const Poly& l) {
  if (f.is_zero()) return true;
  int j = detail::pivot_variable(l);
  QElem inv = l.linear_coeff(j).inverse();
  std::vector<Poly> images;
  for (int i = 0; i < f.nvars(); ++i) images.push_back(Poly::variable(f.nvars(), i));
  Poly repl(f.nvars());
  for (const auto& [e, c] : l.terms()) {
    int idx = -1;
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i]) idx = static_cast<int>(i);
    if (idx != j) repl += (-(inv * c)) * Poly::variable(f.nvars(), idx);
  }
  images[j] = repl;
  return f.substitute(images).is_zero();
}

// Exact quotient f / l when it exists: synthetic division in the pivot
// variable; the quotient is unique because the pivot coefficient is a unit.
inline std::optional<Poly> divide_by_linear(const Poly& f, const Poly& l) {
  if (f.is_zero()) return Poly(f.nvars());
  int j = detail::pivot_variable(l);
  QElem inv = l.linear_coeff(j).inverse();
  Poly q(f.nvars());
  Poly g = f;
  int d = g.max_exponent(j);
  while (d >= 1) {
    Poly piece(f.nvars());
    for (const auto& [e, c] : g.terms()) {
      if (e[j] != d) continue;
      Poly::Exp e2 = e;
      e2[j] = static_cast<unsigned char>(d - 1);
      piece.add_term(e2, inv * c);
    }
    q += piece;
    g -= piece * l;
    d = std::min(d - 1, g.max_exponent(j));
  }
  if (!g.is_zero()) return std::nullopt;
  return q;
}

}  // namespace foldlift
