#pragma once

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "foldlift/rootsys.hpp"

namespace foldlift {

// A word in the simple reflections, 1-based letters; empty = identity.
using Word = std::vector<int>;

inline std::string word_str(const Word& w) {
  if (w.empty()) return "e";
  bool digits = std::all_of(w.begin(), w.end(), [](int i) { return i >= 1 && i <= 9; });
  std::string s;
  for (size_t k = 0; k < w.size(); ++k) {
    if (!digits && k) s += ',';
    s += std::to_string(w[k]);
  }
  return s;
}

inline Word parse_word(const std::string& s) {
  Word w;
  if (s.empty() || s == "e") return w;
  if (s.find(',') != std::string::npos) {
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      check(!tok.empty(), errc::bad_index, "empty letter in word '" + s + "'");
      w.push_back(std::stoi(tok));
    }
    return w;
  }
  for (char c : s) {
    check(c >= '1' && c <= '9', errc::bad_index, "bad letter '" + std::string(1, c) + "' in word");
    w.push_back(c - '0');
  }
  return w;
}

// A group element as an exact matrix in the simple-root basis. The inverse is
// carried along so that left and right descent sets are both one
// matrix-vector product; the length is cached after first use.
class GroupElement {
 public:
  GroupElement() = default;
  GroupElement(const RootDatum* datum, Mat m, Mat minv, int len = -1)
      : datum_(datum), m_(std::move(m)), minv_(std::move(minv)), len_(len) {}

  static GroupElement identity(const RootDatum& d) {
    return GroupElement(&d, Mat::identity(d.rank), Mat::identity(d.rank), 0);
  }
  static GroupElement generator(const RootDatum& d, int i) {
    const Mat& s = d.simple_reflection(i);
    return GroupElement(&d, s, s, 1);
  }

  const RootDatum& datum() const { return *datum_; }
  const Mat& matrix() const { return m_; }
  const Mat& inverse_matrix() const { return minv_; }

  RootVector apply(const RootVector& v) const { return m_ * v; }
  RootVector apply_inverse(const RootVector& v) const { return minv_ * v; }

  bool is_identity() const { return m_.is_identity(); }
  bool operator==(const GroupElement& o) const { return m_ == o.m_; }
  bool operator!=(const GroupElement& o) const { return m_ != o.m_; }
  bool operator<(const GroupElement& o) const { return m_ < o.m_; }

  friend GroupElement operator*(const GroupElement& x, const GroupElement& y) {
    return GroupElement(x.datum_, x.m_ * y.m_, y.minv_ * x.minv_);
  }

  GroupElement inverse() const { return GroupElement(datum_, minv_, m_); }

  // Multiplication by a generator via the rank-1 shape s_i = I - e_i c^T:
  //   m * s_i    : column j -= c_j * (column i)      for j in supp(c)
  //   s_i * minv : row i    -= sum_j c_j * (row j)
  GroupElement right_mult(int i) const {
    check(i >= 1 && i <= datum_->rank, errc::bad_index, "generator index out of range");
    const auto& c = datum_->refl_row[i - 1];
    const auto& supp = datum_->refl_support[i - 1];
    int n = datum_->rank;
    GroupElement r(datum_, m_, minv_);
    for (int row = 0; row < n; ++row) {
      const QElem& mi = m_.at(row, i - 1);
      if (mi.is_zero()) continue;
      for (int j : supp) r.m_.at(row, j) -= c[j] * mi;
    }
    for (int col = 0; col < n; ++col) {
      QElem acc;
      for (int j : supp) acc += c[j] * minv_.at(j, col);
      r.minv_.at(i - 1, col) -= acc;
    }
    if (len_ >= 0) r.len_ = len_ + (right_descent(i) ? -1 : 1);
    return r;
  }
  GroupElement left_mult(int i) const {
    check(i >= 1 && i <= datum_->rank, errc::bad_index, "generator index out of range");
    const auto& c = datum_->refl_row[i - 1];
    const auto& supp = datum_->refl_support[i - 1];
    int n = datum_->rank;
    GroupElement r(datum_, m_, minv_);
    for (int col = 0; col < n; ++col) {
      QElem acc;
      for (int j : supp) acc += c[j] * m_.at(j, col);
      r.m_.at(i - 1, col) -= acc;
    }
    for (int row = 0; row < n; ++row) {
      const QElem& mi = minv_.at(row, i - 1);
      if (mi.is_zero()) continue;
      for (int j : supp) r.minv_.at(row, j) -= c[j] * mi;
    }
    if (len_ >= 0) r.len_ = len_ + (left_descent(i) ? -1 : 1);
    return r;
  }

  // l(ws) < l(w) iff w(alpha_s) < 0; the column of the matrix is w(alpha_s).
  bool right_descent(int i) const { return column_sign(m_, i) < 0; }
  // l(sw) < l(w) iff w^{-1}(alpha_s) < 0.
  bool left_descent(int i) const { return column_sign(minv_, i) < 0; }

  int first_right_descent() const {
    for (int i = 1; i <= datum_->rank; ++i)
      if (right_descent(i)) return i;
    return 0;
  }

  // Inversion count |{alpha in R+ : w(alpha) in R-}|.
  int length() const {
    if (len_ >= 0) return len_;
    int n = 0;
    for (const auto& r : datum_->positive)
      if (root_sign(m_ * r.coords) < 0) ++n;
    len_ = n;
    return n;
  }

 private:
  static int column_sign(const Mat& m, int i) {
    Vec col(m.n);
    for (int r = 0; r < m.n; ++r) col[r] = m.at(r, i - 1);
    return root_sign(col);
  }

  const RootDatum* datum_ = nullptr;
  Mat m_, minv_;
  mutable int len_ = -1;
};

inline GroupElement element_of(const RootDatum& d, const Word& w) {
  GroupElement x = GroupElement::identity(d);
  for (int i : w) x = x.right_mult(i);
  return x;
}

// Left-to-right descent test: the word is reduced iff no prefix sends the
// next simple root negative.
inline bool is_reduced(const RootDatum& d, const Word& w) {
  GroupElement x = GroupElement::identity(d);
  for (int i : w) {
    check(i >= 1 && i <= d.rank, errc::bad_index, "letter out of range");
    if (x.right_descent(i)) return false;
    x = x.right_mult(i);
  }
  return true;
}

// Lexicographically least reduced word, by greedy left-descent stripping.
inline Word lex_least_word(const GroupElement& w) {
  Word out;
  GroupElement x = w;
  while (!x.is_identity()) {
    int s = 0;
    for (int i = 1; i <= w.datum().rank; ++i)
      if (x.left_descent(i)) {
        s = i;
        break;
      }
    check(s != 0, errc::invariant_violation, "no left descent on non-identity element");
    out.push_back(s);
    x = x.left_mult(s);
  }
  return out;
}

// Enumerate Red(w) in lexicographic order, invoking fn on each word; fn
// returns false to stop early. Recomputation over shared suffixes is accepted:
// callers either want every word anyway or abort on the first witness.
inline bool for_each_reduced_word(const GroupElement& w, const std::function<bool(const Word&)>& fn) {
  Word prefix;
  std::function<bool(const GroupElement&)> rec = [&](const GroupElement& x) {
    if (x.is_identity()) return fn(prefix);
    for (int i = 1; i <= w.datum().rank; ++i) {
      if (!x.left_descent(i)) continue;
      prefix.push_back(i);
      bool go = rec(x.left_mult(i));
      prefix.pop_back();
      if (!go) return false;
    }
    return true;
  };
  return rec(w);
}

inline std::vector<Word> reduced_words(const GroupElement& w, const limits& lim = {}) {
  check(w.length() <= lim.word_cap, errc::length_cap_exceeded,
        "reduced-word enumeration above length cap " + std::to_string(lim.word_cap));
  std::vector<Word> out;
  for_each_reduced_word(w, [&](const Word& word) {
    out.push_back(word);
    return true;
  });
  return out;
}

// Bruhat order by the descent recursion: with s a right descent of w,
// u <= w iff min(u, us) <= ws. Each step shortens w, so a query costs
// O(l(w)) element operations and needs no memo table.
inline bool bruhat_leq(const GroupElement& u_in, const GroupElement& w_in) {
  GroupElement u = u_in, w = w_in;
  while (true) {
    if (u.length() > w.length()) return false;
    int s = w.first_right_descent();
    if (s == 0) return u.is_identity();
    if (u.right_descent(s)) u = u.right_mult(s);
    w = w.right_mult(s);
  }
}

// Unique minimal-length representative of w W_P.
inline GroupElement min_coset_rep(const GroupElement& w, const std::vector<int>& P) {
  GroupElement x = w;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int p : P) {
      if (x.right_descent(p)) {
        x = x.right_mult(p);
        moved = true;
      }
    }
  }
  return x;
}

inline bool in_quotient(const GroupElement& w, const std::vector<int>& P) {
  for (int p : P)
    if (w.right_descent(p)) return false;
  return true;
}

// All of W^P, breadth-first from the identity by left multiplication composed
// with min_coset_rep, deduplicated on matrices. Output sorted by
// (length, lex-least word) so downstream indices are stable.
inline std::vector<GroupElement> enumerate_quotient(const RootDatum& d, const std::vector<int>& P,
                                                    const limits& lim = {}) {
  for (int p : P)
    check(p >= 1 && p <= d.rank, errc::bad_index, "parabolic index out of range");
  std::map<Mat, size_t> seen;
  std::vector<GroupElement> out;
  std::deque<size_t> queue;
  auto add = [&](const GroupElement& g) {
    if (seen.count(g.matrix())) return;
    check(static_cast<long>(out.size()) < lim.quotient_cap, errc::size_cap_exceeded,
          "quotient larger than cap " + std::to_string(lim.quotient_cap));
    seen.emplace(g.matrix(), out.size());
    out.push_back(g);
    queue.push_back(out.size() - 1);
  };
  add(GroupElement::identity(d));
  while (!queue.empty()) {
    GroupElement w = out[queue.front()];
    queue.pop_front();
    for (int i = 1; i <= d.rank; ++i) add(min_coset_rep(w.left_mult(i), P));
  }
  std::vector<std::pair<Word, size_t>> keys;
  keys.reserve(out.size());
  for (size_t i = 0; i < out.size(); ++i) keys.emplace_back(lex_least_word(out[i]), i);
  std::stable_sort(keys.begin(), keys.end(), [&](const auto& x, const auto& y) {
    if (x.first.size() != y.first.size()) return x.first.size() < y.first.size();
    return x.first < y.first;
  });
  std::vector<GroupElement> sorted;
  sorted.reserve(out.size());
  for (const auto& [word, i] : keys) sorted.push_back(out[i]);
  return sorted;
}

}  // namespace foldlift
