#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "foldlift/schubert.hpp"

namespace foldlift {

// One catalog folding, fully constructed: the simply-laced original datum,
// the tau-operator theta on its root lattice, the folded root datum over L
// with transported reflection matrices, and the combinatorial maps between
// the two generating sets. Immutable after build_folding.
class FoldingData {
 public:
  const std::string& id() const { return spec_.id; }
  const FoldingSpec& spec() const { return spec_; }
  const RootDatum& original() const { return original_; }
  const RootDatum& folded() const { return folded_; }
  QuadraticRing ring() const { return original_.ring; }
  const Mat& theta() const { return theta_; }

  bool is_rat(int i) const { return kind_[i] == 1; }
  bool is_theta_rat(int i) const { return kind_[i] == 2; }
  bool is_theta_fixed(int i) const { return kind_[i] == 0; }

  // Scalar by which theta(Delta_rat) coordinates enter folded coordinates.
  // Non-split: tau itself. Split: 1 -- the coordinate ring of the folded
  // system is taken through the substitution tau -> 1, under which the
  // tau-eigenspace picture becomes the classical folded root system over k.
  QElem fold_tau() const { return ring().split() ? QElem(1) : QElem::tau(ring()); }
  QElem fold_tau_pow(int m) const {
    return ring().split() ? QElem(1) : QElem::tau_pow(ring(), m);
  }

  // phi: S -> S_tau, both generators of a fiber to the folded index.
  int phi(int s) const {
    check(s >= 1 && s <= original_.rank, errc::bad_index, "phi: bad generator index");
    return spec_.phi[s];
  }
  const std::vector<int>& phi_fiber(int r) const {
    check(r >= 1 && r <= folded_.rank, errc::bad_index, "phi_fiber: bad folded index");
    return fibers_[r];
  }
  // Opposite simple reflection s* (s itself when the fiber is a singleton).
  int opposite(int s) const {
    const auto& f = phi_fiber(phi(s));
    if (f.size() == 1) return s;
    return f[0] == s ? f[1] : f[0];
  }

  // iota on words: R_j -> s_sec(j) or s_sec(j) s_theta(sec(j)).
  Word embed(const Word& folded_word) const {
    Word out;
    for (int j : folded_word) {
      int s = section(j);
      out.push_back(s);
      if (is_rat(s)) out.push_back(theta_partner_.at(s));
    }
    return out;
  }
  GroupElement embed_element(const GroupElement& u) const {
    return element_of(original_, embed(lex_least_word(u)));
  }
  int section(int j) const {
    check(j >= 1 && j <= folded_.rank, errc::bad_index, "section: bad folded index");
    return spec_.section[j];
  }

  // pi_tau on lattice vectors, as coordinates in the Delta_tau basis:
  // pi_tau(alpha) = abar and pi_tau(theta alpha) = tau * abar.
  Vec pi_tau(const Vec& x) const {
    Vec out(folded_.rank);
    QElem tau = fold_tau();
    for (int j = 1; j <= folded_.rank; ++j) {
      int s = section(j);
      QElem c = x[s - 1];
      if (is_rat(s)) c += tau * x[theta_partner_.at(s) - 1];
      out[j - 1] = c;
    }
    return out;
  }

  // pi_tau as the ring morphism S -> S_tau. Monomials fold onto monomials:
  // variables in a fiber merge, each theta(Delta_rat) letter contributes tau.
  Poly pi_tau(const Poly& f) const {
    Poly out(folded_.rank);
    for (const auto& [e, c] : f.terms()) {
      Poly::Exp fe(folded_.rank, 0);
      int taupow = 0;
      for (int i = 0; i < original_.rank; ++i) {
        fe[phi(i + 1) - 1] = static_cast<unsigned char>(fe[phi(i + 1) - 1] + e[i]);
        if (is_theta_rat(i + 1)) taupow += e[i];
      }
      out.add_term(fe, c * fold_tau_pow(taupow));
    }
    return out;
  }

  bool theta_stable(const std::vector<int>& P) const {
    for (int p : P) {
      check(p >= 1 && p <= original_.rank, errc::bad_index, "parabolic index out of range");
      Vec img = theta_ * unit_vec(original_.rank, p - 1);
      for (int i = 0; i < original_.rank; ++i) {
        if (img[i].is_zero()) continue;
        if (std::find(P.begin(), P.end(), i + 1) == P.end()) return false;
      }
    }
    return true;
  }

  // P_tau = phi(P), defined only for theta-stable P.
  std::vector<int> folded_parabolic(const std::vector<int>& P) const {
    check(theta_stable(P), errc::parabolic_not_theta_stable,
          "parabolic subset is not theta-stable");
    std::vector<int> out;
    for (int p : P) out.push_back(phi(p));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  // All theta-stable parabolic subsets, ascending by size then lexicographic.
  std::vector<std::vector<int>> theta_stable_parabolics() const {
    std::vector<std::vector<int>> out;
    int n = original_.rank;
    for (long mask = 0; mask < (1L << n); ++mask) {
      std::vector<int> P;
      for (int i = 0; i < n; ++i)
        if (mask & (1L << i)) P.push_back(i + 1);
      if (theta_stable(P)) out.push_back(P);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
      if (a.size() != b.size()) return a.size() < b.size();
      return a < b;
    });
    return out;
  }

  friend std::unique_ptr<FoldingData> build_folding(const std::string& id, const limits& lim);

 private:
  // Coordinate extraction usable before folded_ exists (during build).
  Vec pi_tau_raw(const Vec& x, QuadraticRing ring, int fn) const {
    Vec out(fn);
    QElem tau = ring.split() ? QElem(1) : QElem::tau(ring);
    for (int j = 1; j <= fn; ++j) {
      int s = spec_.section[j];
      QElem c = x[s - 1];
      if (kind_[s] == 1) c += tau * x[theta_partner_.at(s) - 1];
      out[j - 1] = c;
    }
    return out;
  }

  FoldingSpec spec_;
  RootDatum original_;
  RootDatum folded_;
  Mat theta_;
  std::vector<int> kind_;  // 1-based: 0 fixed, 1 rat, 2 theta(rat)
  std::map<int, int> theta_partner_;  // both directions of each rat pair
  std::vector<std::vector<int>> fibers_;  // folded index -> sorted originals
};

namespace detail {

inline int expected_folded_positive_count(const FoldingSpec& s) {
  char family = s.folded_name[0];
  int n = s.folded_rank;
  switch (family) {
    case 'B':
    case 'C':
      return n * n;
    case 'F':
      return 24;
    case 'H':
      return n == 2 ? 5 : (n == 3 ? 15 : 60);
  }
  fail(errc::invariant_violation, "unknown folded family " + s.folded_name);
}

}  // namespace detail

// Construct a catalog folding and verify the defining identities:
// theta^2 = c1*theta + 1, lattice stability, self-adjointness, the
// tau-rationality identities on Delta_rat, root-set stability in the split
// case, commutation of theta with the embedded folded generators, and the
// folded Coxeter matrix read off the transported reflections.
inline std::unique_ptr<FoldingData> build_folding(const std::string& id, const limits& lim = {}) {
  auto fd = std::make_unique<FoldingData>();
  fd->spec_ = folding_spec(id);
  const FoldingSpec& spec = fd->spec_;
  fd->original_ = simply_laced_datum(spec.original_name, spec.rank, spec.edges,
                                     QuadraticRing{spec.c1}, lim);
  const RootDatum& orig = fd->original_;
  int n = spec.rank, fn = spec.folded_rank;

  fd->kind_.assign(n + 1, 0);
  for (int i : spec.delta_rat) fd->kind_[i] = 1;
  for (auto [a, b] : spec.theta_pair) {
    fd->kind_[b] = 2;
    fd->theta_partner_[a] = b;
    fd->theta_partner_[b] = a;
  }
  {
    size_t covered = spec.delta_theta.size() + 2 * spec.theta_pair.size();
    check(covered == static_cast<size_t>(n), errc::invariant_violation,
          id + ": partition does not cover the simple system");
  }
  fd->fibers_.assign(fn + 1, {});
  for (int i = 1; i <= n; ++i) fd->fibers_[spec.phi[i]].push_back(i);

  // theta: fixed points, the rat -> theta(rat) pairing, and
  // theta(theta a) = c1*theta(a) + a forced by theta^2 = c1*theta + 1.
  fd->theta_ = Mat(n);
  for (int i = 1; i <= n; ++i) {
    if (fd->kind_[i] == 0) {
      fd->theta_.at(i - 1, i - 1) = QElem(1);
    } else if (fd->kind_[i] == 1) {
      fd->theta_.at(fd->theta_partner_[i] - 1, i - 1) = QElem(1);
    } else {
      fd->theta_.at(i - 1, i - 1) = QElem(spec.c1);
      fd->theta_.at(fd->theta_partner_[i] - 1, i - 1) = QElem(1);
    }
  }
  const Mat& th = fd->theta_;

  // theta^2 = c1*theta + 1 (so theta is invertible over Z: theta^{-1} = theta - c1).
  {
    Mat lhs = th * th;
    Mat rhs = Mat::identity(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) rhs.at(i, j) += QElem(spec.c1) * th.at(i, j);
    check(lhs == rhs, errc::invariant_violation, id + ": theta^2 != c1*theta + 1");
  }
  // self-adjointness for the Gram form: G*theta = theta^T*G.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      QElem lhs = orig.form(unit_vec(n, i), th * unit_vec(n, j));
      QElem rhs = orig.form(th * unit_vec(n, i), unit_vec(n, j));
      check(lhs == rhs, errc::invariant_violation, id + ": theta is not self-adjoint");
    }
  // Lemma on tau-rational simple roots: <a, theta a> = 0, <theta a, theta a> = <a,a>.
  for (int i : spec.delta_rat) {
    Vec a = unit_vec(n, i - 1), ta = th * a;
    check(orig.form(a, ta).is_zero(), errc::invariant_violation,
          id + ": <alpha, theta alpha> != 0 on Delta_rat");
    check(orig.form(ta, ta) == orig.form(a, a), errc::invariant_violation,
          id + ": theta does not preserve the norm of Delta_rat");
  }
  // Split case: theta is a diagram automorphism, so it permutes the roots.
  if (spec.c1 == 0) {
    for (const auto& r : orig.positive)
      check(orig.is_root(th * r.coords), errc::invariant_violation,
            id + ": theta does not stabilize the root set");
  }

  // Folded Gram over L: <abar, bbar> = (sigma^2+1)/D * (<a,b> + <a,theta b> tau),
  // with tau -> 1 applied in the split case (where the factor is 1/2 exactly).
  QuadraticRing ring{spec.c1};
  QElem sigma = QElem::sigma(ring);
  QElem factor = (sigma * sigma + QElem(1)) * QElem(mpq_class(1, spec.c1 * spec.c1 + 4));
  QElem tau = ring.split() ? QElem(1) : QElem::tau(ring);
  Mat fgram(fn);
  for (int i = 1; i <= fn; ++i)
    for (int j = 1; j <= fn; ++j) {
      Vec a = unit_vec(n, spec.section[i] - 1), b = unit_vec(n, spec.section[j] - 1);
      fgram.at(i - 1, j - 1) = factor * (orig.form(a, b) + tau * orig.form(a, th * b));
    }
  for (int i = 0; i < fn; ++i)
    check(!fgram.at(i, i).is_zero(), errc::invariant_violation,
          id + ": folded Gram has a zero diagonal entry");

  // Transported simple reflections: column i of R_j is pi_tau(iota(R_j) alpha_sec(i)).
  // Well-definedness over L needs iota(R_j) to commute with theta; checked below.
  std::vector<Mat> frefl;
  for (int j = 1; j <= fn; ++j) {
    int s = spec.section[j];
    Mat embedded = orig.simple_reflection(s);
    if (fd->kind_[s] == 1) embedded = embedded * orig.simple_reflection(fd->theta_partner_[s]);
    check(embedded * th == th * embedded, errc::invariant_violation,
          id + ": embedded generator does not commute with theta");
    Mat rj(fn);
    for (int i = 1; i <= fn; ++i) {
      Vec img = fd->pi_tau_raw(embedded * unit_vec(n, spec.section[i] - 1), ring, fn);
      for (int r = 0; r < fn; ++r) rj.at(r, i - 1) = img[r];
    }
    check((rj * rj).is_identity(), errc::invariant_violation,
          id + ": transported reflection is not an involution");
    frefl.push_back(std::move(rj));
  }

  fd->folded_ = RootDatum{};
  fd->folded_.name = spec.folded_name;
  fd->folded_.rank = fn;
  fd->folded_.ring = ring;
  fd->folded_.gram = std::move(fgram);
  fd->folded_.simple_refl = std::move(frefl);
  fd->folded_.folded_coords = true;
  fd->folded_.enumerate_positive_roots(lim);
  check(static_cast<int>(fd->folded_.positive.size()) ==
            detail::expected_folded_positive_count(spec),
        errc::invariant_violation, id + ": folded positive-root count is off");

  // Transported reflections are isometries of the folded Gram, and the
  // Coxeter matrix they generate is the advertised one.
  for (int j = 1; j <= fn; ++j) {
    const Mat& rj = fd->folded_.simple_reflection(j);
    for (int i = 1; i <= fn; ++i)
      for (int k = 1; k <= fn; ++k) {
        Vec x = unit_vec(fn, i - 1), y = unit_vec(fn, k - 1);
        check(fd->folded_.form(rj * x, rj * y) == fd->folded_.form(x, y),
              errc::invariant_violation, id + ": folded reflection is not an isometry");
      }
  }
  for (int i = 1; i <= fn; ++i)
    for (int j = i + 1; j <= fn; ++j) {
      int expected = 2;
      for (const auto& bond : spec.folded_bonds)
        if ((bond[0] == i && bond[1] == j) || (bond[0] == j && bond[1] == i)) expected = bond[2];
      check(fd->folded_.coxeter_m(i, j) == expected, errc::invariant_violation,
            id + ": folded Coxeter matrix entry m(" + std::to_string(i) + "," +
                std::to_string(j) + ") is not " + std::to_string(expected));
    }
  return fd;
}

// pi_tau(Y_w(x)) for an original element w and original expression x, with
// the projection pushed through every step of the prefix dynamic program.
// Values stay in S_tau (folded_rank variables), which keeps the long
// evaluations used by the lifting-coefficient checks small.
inline Poly folded_schubert_eval(const FoldingData& fd, const GroupElement& w,
                                 const Word& x_word) {
  const RootDatum& d = fd.original();
  detail::LowerSet ls(d);
  ls.include_interval(w);
  std::vector<Poly> f(ls.size(), Poly(fd.folded().rank));
  f[0] = Poly::constant(fd.folded().rank, QElem(1));
  GroupElement prefix = GroupElement::identity(d);
  for (int letter : x_word) {
    Vec alpha_img(d.rank);
    for (int r = 0; r < d.rank; ++r) alpha_img[r] = prefix.matrix().at(r, letter - 1);
    Poly mult = Poly::linear(fd.pi_tau(alpha_img));
    std::vector<Poly> g = f;
    for (size_t v = 0; v < ls.size(); ++v) {
      int vs = ls.descent_target(static_cast<int>(v), letter);
      if (vs < 0 || f[vs].is_zero()) continue;
      g[v] += mult * f[vs];
    }
    f = std::move(g);
    prefix = prefix.right_mult(letter);
  }
  return f[ls.find(w)];
}

// The induced folding map on structure algebras: iota*(xi)(u) = pi_tau of the
// coordinate of xi at iota(u). Needs the original graph of xi and a folded
// graph over phi(P) with matching parabolic.
inline StructClass fold_class(const StructClass& xi, const FoldingData& fd,
                              const MomentGraph& folded_graph) {
  const MomentGraph& og = *xi.graph;
  check(&og.datum() == &fd.original(), errc::invariant_violation,
        "fold_class: class does not live on this folding's original datum");
  check(folded_graph.parabolic() == fd.folded_parabolic(og.parabolic()),
        errc::parabolic_not_theta_stable,
        "fold_class: folded graph parabolic is not phi(P)");
  StructClass out;
  out.graph = &folded_graph;
  out.degree = xi.degree;
  for (size_t ui = 0; ui < folded_graph.vertices().size(); ++ui) {
    GroupElement iu = element_of(fd.original(), fd.embed(folded_graph.vertex_words()[ui]));
    out.values.push_back(fd.pi_tau(xi.values[og.vertex_index(iu)]));
  }
  return out;
}

// Configuration of the phi-preimage of a folded bond pair {R, R'} with
// m(R,R') >= 3, as a single letter:
//   'A'  edge between two singleton fibers            (m = 3)
//   'B'  two disjoint edges s-t, s*-t*                (m = 3)
//   'C'  singleton s joined to both t and t*          (m = 4)
//   'D'  path s - t - s* - t*                         (m = 5)
inline char classify_bond_pattern(const FoldingData& fd, int r1, int r2) {
  const auto& f1 = fd.phi_fiber(r1);
  const auto& f2 = fd.phi_fiber(r2);
  auto adjacent = [&](int a, int b) {
    return fd.original().gram.at(a - 1, b - 1) == qfrac(-1, 2);
  };
  int m = fd.folded().coxeter_m(r1, r2);
  check(m >= 3, errc::invariant_violation, "classify_bond_pattern: bond has m < 3");
  std::vector<std::pair<int, int>> cross;
  for (int a : f1)
    for (int b : f2)
      if (adjacent(a, b)) cross.push_back({a, b});
  // no edges inside a fiber, ever
  for (const auto& f : {f1, f2})
    if (f.size() == 2)
      check(!adjacent(f[0], f[1]), errc::invariant_violation,
            "phi fiber contains a diagram edge");
  if (f1.size() == 1 && f2.size() == 1) {
    check(m == 3 && cross.size() == 1, errc::invariant_violation, "bad singleton bond");
    return 'A';
  }
  if (f1.size() == 2 && f2.size() == 2 && cross.size() == 2 && m == 3) {
    check(cross[0].first != cross[1].first && cross[0].second != cross[1].second,
          errc::invariant_violation, "m=3 double-fiber preimage is not two disjoint edges");
    return 'B';
  }
  if (cross.size() == 2 && m == 4) {
    check(f1.size() == 1 || f2.size() == 1, errc::invariant_violation, "bad m=4 bond");
    return 'C';
  }
  if (f1.size() == 2 && f2.size() == 2 && cross.size() == 3 && m == 5) {
    // must form a path s - t - s* - t*: one vertex of each fiber has degree 2
    int deg[2] = {0, 0};
    for (auto [a, b] : cross) {
      (void)b;
      deg[a == f1[0] ? 0 : 1]++;
    }
    check((deg[0] == 1 && deg[1] == 2) || (deg[0] == 2 && deg[1] == 1),
          errc::invariant_violation, "m=5 preimage is not a path");
    return 'D';
  }
  fail(errc::invariant_violation, "folded bond preimage matches no known pattern");
}

}  // namespace foldlift
