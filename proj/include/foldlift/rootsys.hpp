#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "foldlift/catalog.hpp"
#include "foldlift/matrix.hpp"

namespace foldlift {

using RootVector = Vec;

// Sign of a root vector under the real embedding chi of the coefficient ring:
// +1 if every coordinate is >= 0 (at least one > 0), -1 for the mirror image,
// 0 for mixed signs (never happens on actual roots).
inline int root_sign(const RootVector& v) {
  bool nonneg = true, nonpos = true, nonzero = false;
  for (const auto& c : v) {
    int s = c.chi_sign();
    if (s > 0) nonpos = false;
    if (s < 0) nonneg = false;
    if (!c.is_zero()) nonzero = true;
  }
  if (!nonzero) return 0;
  if (nonneg) return 1;
  if (nonpos) return -1;
  return 0;
}

struct PositiveRoot {
  RootVector coords;  // in the simple-root basis
  Mat reflection;     // s_alpha as a matrix on that basis
};

// A finite root datum realized on its own root lattice: coordinates live in
// the simple-root basis, the bilinear form is given by the Gram matrix, and
// group elements act through the cached simple-reflection matrices. Folded
// systems carry coefficients in L; original ones are rational throughout.
class RootDatum {
 public:
  std::string name;
  int rank = 0;
  QuadraticRing ring;
  Mat gram;
  std::vector<Mat> simple_refl;       // 1-based access via simple_reflection()
  std::vector<PositiveRoot> positive;
  bool folded_coords = false;         // selects the b1..bn variable names

  // Rank-1 shape of each simple reflection: s_i = I - e_i * c^T, where c is
  // row i of coefficients with c_i = 2. Multiplying by s_i is then a single
  // column/row update; refl_support lists the nonzero positions of c.
  std::vector<std::vector<QElem>> refl_row;
  std::vector<std::vector<int>> refl_support;

  std::string var_prefix() const { return folded_coords ? "b" : "a"; }

  void cache_reflection_rows() {
    refl_row.clear();
    refl_support.clear();
    for (int i = 0; i < rank; ++i) {
      std::vector<QElem> c(rank);
      std::vector<int> supp;
      for (int j = 0; j < rank; ++j) {
        c[j] = (i == j ? QElem(1) : QElem(0)) - simple_refl[i].at(i, j);
        if (!c[j].is_zero()) supp.push_back(j);
      }
      // sanity: the reflection really is I - e_i c^T
      for (int r = 0; r < rank; ++r)
        for (int j = 0; j < rank; ++j) {
          QElem expect = (r == j ? QElem(1) : QElem(0)) - (r == i ? c[j] : QElem(0));
          check(simple_refl[i].at(r, j) == expect, errc::invariant_violation,
                "simple reflection is not a rank-1 update");
        }
      refl_row.push_back(std::move(c));
      refl_support.push_back(std::move(supp));
    }
  }

  const Mat& simple_reflection(int i) const {
    check(i >= 1 && i <= rank, errc::bad_index,
          "simple reflection index " + std::to_string(i) + " out of 1.." + std::to_string(rank));
    return simple_refl[static_cast<size_t>(i) - 1];
  }

  QElem form(const RootVector& x, const RootVector& y) const {
    QElem r;
    for (int i = 0; i < rank; ++i) {
      if (x[i].is_zero()) continue;
      for (int j = 0; j < rank; ++j) {
        if (y[j].is_zero()) continue;
        r += x[i] * gram.at(i, j) * y[j];
      }
    }
    return r;
  }

  RootVector simple_root(int i) const {
    check(i >= 1 && i <= rank, errc::bad_index, "simple root index");
    return unit_vec(rank, i - 1);
  }

  std::optional<int> find_positive_root(const RootVector& v) const {
    for (size_t k = 0; k < positive.size(); ++k)
      if (positive[k].coords == v) return static_cast<int>(k);
    return std::nullopt;
  }

  bool is_root(const RootVector& v) const {
    int s = root_sign(v);
    if (s == 0) return false;
    return find_positive_root(s > 0 ? v : -v).has_value();
  }

  // m(s_i, s_j): order of the product of two simple reflections.
  int coxeter_m(int i, int j) const {
    if (i == j) return 1;
    Mat p = simple_reflection(i) * simple_reflection(j);
    Mat acc = p;
    for (int m = 1; m <= 64; ++m) {
      if (acc.is_identity()) return m;
      acc = acc * p;
    }
    fail(errc::non_terminating, "order of s_i s_j exceeds 64");
  }

  // Breadth-first closure of the simple system under simple reflections,
  // deduplicated by the positive representative. Each discovered root keeps
  // its reflection matrix (conjugate of a simple one), so nothing ever
  // divides by a root norm.
  void enumerate_positive_roots(const limits& lim = {}) {
    cache_reflection_rows();
    std::map<std::vector<QElem>, size_t> seen;
    std::deque<size_t> queue;
    positive.clear();
    auto add = [&](RootVector v, const Mat& refl) {
      int s = root_sign(v);
      check(s != 0, errc::invariant_violation, "mixed-sign vector in root closure");
      if (s < 0) v = -v;
      auto it = seen.find(v);
      if (it != seen.end()) return;
      seen.emplace(v, positive.size());
      positive.push_back(PositiveRoot{v, refl});
      queue.push_back(positive.size() - 1);
    };
    for (int i = 1; i <= rank; ++i) add(simple_root(i), simple_reflection(i));
    long steps = 0;
    while (!queue.empty()) {
      size_t k = queue.front();
      queue.pop_front();
      for (int i = 1; i <= rank; ++i) {
        check(++steps <= lim.closure_cap, errc::non_terminating, "root closure exceeded cap");
        const Mat& s = simple_reflection(i);
        RootVector v = s * positive[k].coords;
        Mat refl = s * positive[k].reflection * s;
        add(std::move(v), refl);
      }
    }
    std::sort(positive.begin(), positive.end(),
              [](const PositiveRoot& x, const PositiveRoot& y) {
                for (size_t i = 0; i < x.coords.size(); ++i)
                  if (x.coords[i] != y.coords[i]) return x.coords[i] < y.coords[i];
                return false;
              });
  }
};

// s_alpha(x) = x - (2<alpha,x>/<alpha,alpha>) alpha.
inline RootVector reflect(const RootDatum& datum, const RootVector& alpha, const RootVector& x) {
  QElem nn = datum.form(alpha, alpha);
  if (nn.is_zero()) fail(errc::isotropic_root, "reflection in isotropic root");
  QElem c = QElem(2) * datum.form(alpha, x) * nn.inverse();
  RootVector r = x;
  for (int i = 0; i < datum.rank; ++i) r[i] -= c * alpha[i];
  return r;
}

// Simply-laced datum normalized to <alpha,alpha> = 1, so every diagram edge
// contributes -1/2 to the Gram matrix.
inline RootDatum simply_laced_datum(const std::string& name, int rank,
                                    const std::vector<std::pair<int, int>>& edges,
                                    QuadraticRing ring, const limits& lim = {}) {
  RootDatum d;
  d.name = name;
  d.rank = rank;
  d.ring = ring;
  d.gram = Mat(rank);
  for (int i = 0; i < rank; ++i) d.gram.at(i, i) = QElem(1);
  for (auto [i, j] : edges) {
    check(i >= 1 && i <= rank && j >= 1 && j <= rank && i != j, errc::bad_index,
          "bad diagram edge");
    d.gram.at(i - 1, j - 1) = qfrac(-1, 2);
    d.gram.at(j - 1, i - 1) = qfrac(-1, 2);
  }
  for (int i = 1; i <= rank; ++i) {
    // s_i(alpha_j) = alpha_j - 2<alpha_i, alpha_j> alpha_i.
    Mat m = Mat::identity(rank);
    for (int j = 0; j < rank; ++j) m.at(i - 1, j) -= QElem(2) * d.gram.at(i - 1, j);
    d.simple_refl.push_back(std::move(m));
  }
  d.enumerate_positive_roots(lim);
  return d;
}

// The simply-laced original of a catalog folding, with the folding's own
// vertex labelling.
inline RootDatum catalog_original(const std::string& folding_id, const limits& lim = {}) {
  FoldingSpec spec = folding_spec(folding_id);
  return simply_laced_datum(spec.original_name, spec.rank, spec.edges,
                            QuadraticRing{spec.c1}, lim);
}

// Plain chain diagram of type A_n, handy for examples that need no folding.
inline RootDatum type_a_datum(int n, const limits& lim = {}) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i < n; ++i) edges.push_back({i, i + 1});
  return simply_laced_datum("A" + std::to_string(n), n, edges, QuadraticRing{0}, lim);
}

}  // namespace foldlift
