#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "foldlift/moment_graph.hpp"
#include "foldlift/poly.hpp"

namespace foldlift {

// A structure-algebra element: one polynomial per vertex of a moment graph.
struct StructClass {
  const MomentGraph* graph = nullptr;
  std::vector<Poly> values;
  std::optional<int> degree;  // homogeneous degree when known
  bool verified = false;
};

namespace detail {

// Shared machinery for the prefix dynamic program behind Y_w(x): starting
// from the subword property, the set of candidates {v <= w} is the set of
// subword products of any one reduced word of w, and the recursion
//   Y_v(xs) = Y_v(x)                       if l(vs) > l(v)
//   Y_v(xs) = Y_v(x) + x(alpha_s) Y_vs(x)  if l(vs) < l(v)
// advances all candidates one letter of x at a time.
class LowerSet {
 public:
  explicit LowerSet(const RootDatum& d) : d_(&d) {
    add(GroupElement::identity(d));
  }

  void include_interval(const GroupElement& w) {
    Word word = lex_least_word(w);
    std::vector<int> frontier = {0};
    for (int letter : word) {
      std::vector<int> next = frontier;
      for (int idx : frontier) next.push_back(add(elems_[idx].right_mult(letter)));
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      frontier = std::move(next);
    }
  }

  int find(const GroupElement& g) const {
    auto it = index_.find(g.matrix());
    return it == index_.end() ? -1 : it->second;
  }
  size_t size() const { return elems_.size(); }
  const GroupElement& at(int i) const { return elems_[i]; }

  // descent_target(i, s) = index of elems[i]*s when that shortens, else -1.
  int descent_target(int i, int s) {
    auto key = std::make_pair(i, s);
    auto it = trans_.find(key);
    if (it != trans_.end()) return it->second;
    int r = -1;
    if (elems_[i].right_descent(s)) {
      r = find(elems_[i].right_mult(s));
      check(r >= 0, errc::invariant_violation, "lower set not descent-closed");
    }
    trans_.emplace(key, r);
    return r;
  }

 private:
  int add(const GroupElement& g) {
    auto it = index_.find(g.matrix());
    if (it != index_.end()) return it->second;
    int id = static_cast<int>(elems_.size());
    index_.emplace(g.matrix(), id);
    elems_.push_back(g);
    return id;
  }

  const RootDatum* d_;
  std::vector<GroupElement> elems_;
  std::map<Mat, int> index_;
  std::map<std::pair<int, int>, int> trans_;
};

inline std::vector<Poly> dp_run(LowerSet& ls, const RootDatum& d, const Word& x_word) {
  std::vector<Poly> f(ls.size(), Poly(d.rank));
  f[0] = Poly::constant(d.rank, QElem(1));
  GroupElement prefix = GroupElement::identity(d);
  for (int letter : x_word) {
    Vec alpha_img(d.rank);
    for (int r = 0; r < d.rank; ++r) alpha_img[r] = prefix.matrix().at(r, letter - 1);
    Poly mult = Poly::linear(alpha_img);
    std::vector<Poly> g = f;
    for (size_t v = 0; v < ls.size(); ++v) {
      int vs = ls.descent_target(static_cast<int>(v), letter);
      if (vs < 0 || f[vs].is_zero()) continue;
      g[v] += mult * f[vs];
    }
    f = std::move(g);
    prefix = prefix.right_mult(letter);
  }
  return f;
}

}  // namespace detail

// Y_w(x) for one expression of x, by the prefix dynamic program.
inline Poly schubert_eval(const GroupElement& w, const Word& x_word) {
  const RootDatum& d = w.datum();
  detail::LowerSet ls(d);
  ls.include_interval(w);
  std::vector<Poly> f = detail::dp_run(ls, d, x_word);
  return f[ls.find(w)];
}

// Independent oracle: the literal subword-sum formula. For every increasing
// index tuple whose letters multiply to w, add the product of prefix-rotated
// simple roots. Exponential; meant for cross-checks at dihedral scale.
inline Poly schubert_value(const GroupElement& w, const Word& x_word) {
  const RootDatum& d = w.datum();
  int ell = w.length();
  int r = static_cast<int>(x_word.size());
  std::vector<GroupElement> prefix = {GroupElement::identity(d)};
  for (int i = 0; i < r; ++i) prefix.push_back(prefix.back().right_mult(x_word[i]));
  Poly result(d.rank);
  std::function<void(int, const GroupElement&, const Poly&, int)> rec =
      [&](int pos, const GroupElement& partial, const Poly& prod, int chosen) {
        if (chosen == ell) {
          if (partial == w) result += prod;
          return;
        }
        if (r - pos < ell - chosen) return;
        rec(pos + 1, partial, prod, chosen);
        Vec img(d.rank);
        for (int row = 0; row < d.rank; ++row)
          img[row] = prefix[pos].matrix().at(row, x_word[pos] - 1);
        rec(pos + 1, partial * GroupElement::generator(d, x_word[pos]), prod * Poly::linear(img),
            chosen + 1);
      };
  rec(0, GroupElement::identity(d), Poly::constant(d.rank, QElem(1)), 0);
  return result;
}

// Y_w as a class on G^P: one dynamic program along each vertex's lex-least
// reduced word. Computing several classes at once shares the lower set.
inline std::vector<StructClass> schubert_classes(const std::vector<GroupElement>& ws,
                                                 const MomentGraph& graph) {
  const RootDatum& d = graph.datum();
  detail::LowerSet ls(d);
  for (const auto& w : ws) {
    check(graph.has_vertex(w), errc::not_in_quotient,
          "schubert_class target not in the quotient");
    ls.include_interval(w);
  }
  std::vector<StructClass> out(ws.size());
  for (size_t k = 0; k < ws.size(); ++k) {
    out[k].graph = &graph;
    out[k].degree = ws[k].length();
    out[k].values.resize(graph.vertices().size(), Poly(d.rank));
  }
  for (size_t vi = 0; vi < graph.vertices().size(); ++vi) {
    std::vector<Poly> f = detail::dp_run(ls, d, graph.vertex_words()[vi]);
    for (size_t k = 0; k < ws.size(); ++k) out[k].values[vi] = f[ls.find(ws[k])];
  }
  return out;
}

inline StructClass schubert_class(const GroupElement& w, const MomentGraph& graph) {
  return schubert_classes({w}, graph)[0];
}

// Edge-divisibility test for structure-algebra membership.
inline bool verify_membership(StructClass& xi) {
  const MomentGraph& g = *xi.graph;
  for (const auto& e : g.edges()) {
    Poly diff = xi.values[e.from] - xi.values[e.to];
    if (!divisible_by_linear(diff, Poly::linear(g.edge_label(e)))) return false;
  }
  xi.verified = true;
  return true;
}

// Y_w(w) = product of the positive roots sent negative by w^{-1}.
inline std::vector<RootVector> inversion_labels(const GroupElement& w) {
  std::vector<RootVector> out;
  for (const auto& r : w.datum().positive)
    if (root_sign(w.apply_inverse(r.coords)) < 0) out.push_back(r.coords);
  return out;
}

inline Poly schubert_diagonal(const GroupElement& w) {
  Poly p = Poly::constant(w.datum().rank, QElem(1));
  for (const auto& r : inversion_labels(w)) p *= Poly::linear(r);
  return p;
}

// Expansion in the Schubert basis by ascending (length, lex) triangular
// elimination: c_w = (xi - sum_{v<w} c_v Y_v)(w) / Y_w(w), exact division.
inline std::map<int, Poly> expand_in_basis(const StructClass& xi) {
  const MomentGraph& g = *xi.graph;
  std::map<int, Poly> coeffs;
  std::vector<Poly> remaining = xi.values;
  for (size_t vi = 0; vi < g.vertices().size(); ++vi) {
    if (remaining[vi].is_zero()) continue;
    const GroupElement& w = g.vertices()[vi];
    Poly q = remaining[vi];
    for (const auto& label : inversion_labels(w)) {
      auto quot = divide_by_linear(q, Poly::linear(label));
      check(quot.has_value(), errc::not_in_span,
            "coordinate at " + word_str(g.vertex_words()[vi]) + " not divisible by Y_w(w)");
      q = std::move(*quot);
    }
    StructClass cls = schubert_class(w, g);
    for (size_t u = 0; u < remaining.size(); ++u) remaining[u] -= q * cls.values[u];
    coeffs.emplace(static_cast<int>(vi), std::move(q));
  }
  for (const auto& p : remaining)
    check(p.is_zero(), errc::not_in_span, "nonzero residue after basis elimination");
  return coeffs;
}

}  // namespace foldlift
