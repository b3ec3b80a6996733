#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "foldlift/folding.hpp"

namespace foldlift {

// phi applied letterwise to a reduced word, collapsing adjacent equal images
// in one left-to-right pass.
inline Word phi_hat(const FoldingData& fd, const Word& word) {
  check(is_reduced(fd.original(), word), errc::not_reduced,
        "phi_hat requires a reduced word");
  Word out;
  for (int s : word) {
    int r = fd.phi(s);
    if (!out.empty() && out.back() == r) continue;  // pair collapses to one letter
    out.push_back(r);
  }
  return out;
}

// Membership in the folding subset F(W): every reduced word of w must map
// letterwise to a reduced folded word (FS1), and all images must multiply to
// one common folded element (FS2). Early exit on the first violation.
inline bool in_folding_set(const FoldingData& fd, const GroupElement& w, const limits& lim = {}) {
  check(w.length() <= lim.word_cap, errc::length_cap_exceeded,
        "folding-set test above the reduced-word cap");
  if (w.is_identity()) return true;
  bool ok = true;
  bool have_image = false;
  GroupElement image;
  for_each_reduced_word(w, [&](const Word& word) {
    GroupElement x = GroupElement::identity(fd.folded());
    for (int s : word) {
      int r = fd.phi(s);
      if (x.right_descent(r)) {  // letterwise image is not reduced: FS1 fails
        ok = false;
        return false;
      }
      x = x.right_mult(r);
    }
    if (!have_image) {
      image = x;
      have_image = true;
    } else if (x != image) {  // two words with different images: FS2 fails
      ok = false;
      return false;
    }
    return true;
  });
  return ok;
}

// The length-preserving extension of phi over F(W).
inline GroupElement phi_bar(const FoldingData& fd, const GroupElement& w, const limits& lim = {}) {
  check(in_folding_set(fd, w, lim), errc::not_in_folding_set,
        "phi_bar applied outside the folding subset");
  GroupElement x = GroupElement::identity(fd.folded());
  for (int s : lex_least_word(w)) x = x.right_mult(fd.phi(s));
  return x;
}

enum class LiftMethod { folding_set_search, brute_force_oracle, catalog_nonliftable };

inline const char* lift_method_name(LiftMethod m) {
  switch (m) {
    case LiftMethod::folding_set_search: return "folding-set-search";
    case LiftMethod::brute_force_oracle: return "brute-force-oracle";
    case LiftMethod::catalog_nonliftable: return "catalog-nonliftable";
  }
  return "?";
}

struct Lifting {
  GroupElement w;
  Word word;           // lex-least reduced word of w
  int exponent_m = -1; // tau-power of the lifting coefficient; -1 = not computed
};

struct LiftReport {
  GroupElement u;
  Word u_word;
  std::vector<Lifting> liftings;
  LiftMethod method = LiftMethod::folding_set_search;
};

// The tau-power m with iota*(Y_w) = tau^m Y_u, from the single coordinate at
// u: tau^m = pi_tau(Y_w(iota(u))) / Y_u(u). Exact comparison, no division.
inline int lifting_exponent(const FoldingData& fd, const GroupElement& w, const GroupElement& u) {
  Word iu_word = fd.embed(lex_least_word(u));
  Poly lhs = folded_schubert_eval(fd, w, iu_word);
  Poly diag = schubert_diagonal(u);
  int bound = fd.ring().split() ? 0 : w.length();
  for (int m = 0; m <= bound; ++m) {
    if (lhs == fd.fold_tau_pow(m) * diag) return m;
  }
  fail(errc::not_a_power_of_tau,
       "lifting coefficient of " + word_str(lex_least_word(w)) + " over " +
           word_str(lex_least_word(u)) + " is not a nonnegative tau power");
}

// Full-verification mode: checks iota*(Y_w) = tau^m Y_u at every vertex of
// the folded parabolic graph, not just at u.
inline int lifting_exponent_verified(const FoldingData& fd, const GroupElement& w,
                                     const GroupElement& u, const MomentGraph& folded_graph) {
  int m = lifting_exponent(fd, w, u);
  QElem scale = fd.fold_tau_pow(m);
  StructClass yu = schubert_class(u, folded_graph);
  for (size_t vi = 0; vi < folded_graph.vertices().size(); ++vi) {
    Word iu_word = fd.embed(folded_graph.vertex_words()[vi]);
    Poly lhs = folded_schubert_eval(fd, w, iu_word);
    check(lhs == scale * yu.values[vi], errc::not_a_power_of_tau,
          "iota*(Y_w) deviates from tau^m Y_u at vertex " +
              word_str(folded_graph.vertex_words()[vi]));
  }
  return m;
}

// All liftings of u relative to W^P. By the letterwise-matching property of
// liftings, it suffices to scan the <= 2^l preimage words of one fixed
// reduced word of u, keeping those that are reduced, land in W^P, and lie in
// the folding subset. Reduced-prefix pruning keeps the scan tight.
inline LiftReport liftings_of(const FoldingData& fd, const GroupElement& u,
                              const std::vector<int>& P, const limits& lim = {},
                              bool with_exponents = true) {
  check(u.length() <= lim.word_cap, errc::length_cap_exceeded,
        "lifting search above the reduced-word cap");
  LiftReport report;
  report.u = u;
  report.u_word = lex_least_word(u);
  report.method = LiftMethod::folding_set_search;
  std::map<Mat, Lifting> found;
  Word prefix_word;
  std::function<void(size_t, const GroupElement&)> rec = [&](size_t pos, const GroupElement& x) {
    if (pos == report.u_word.size()) {
      if (!in_quotient(x, P)) return;
      if (!in_folding_set(fd, x, lim)) return;
      found.emplace(x.matrix(), Lifting{x, lex_least_word(x), -1});
      return;
    }
    for (int s : fd.phi_fiber(report.u_word[pos])) {
      if (x.right_descent(s)) continue;  // non-reduced prefix: dead branch
      prefix_word.push_back(s);
      rec(pos + 1, x.right_mult(s));
      prefix_word.pop_back();
    }
  };
  rec(0, GroupElement::identity(fd.original()));
  for (auto& [mat, lift] : found) report.liftings.push_back(std::move(lift));
  std::sort(report.liftings.begin(), report.liftings.end(),
            [](const Lifting& a, const Lifting& b) { return a.word < b.word; });
  if (with_exponents)
    for (auto& l : report.liftings) l.exponent_m = lifting_exponent(fd, l.w, u);
  return report;
}

// Word patterns whose appearance as a consecutive subword of some reduced
// expression certifies nonliftability: the braid words [R,R']_m for folded
// bonds m in {4,5} plus the per-family sporadic patterns.
inline std::vector<Word> catalog_nonliftable_patterns(const FoldingData& fd) {
  std::vector<Word> pats;
  int fn = fd.folded().rank;
  for (int i = 1; i <= fn; ++i)
    for (int j = i + 1; j <= fn; ++j) {
      int m = fd.folded().coxeter_m(i, j);
      if (m != 4 && m != 5) continue;
      Word a, b;
      for (int k = 0; k < m; ++k) {
        a.push_back(k % 2 ? j : i);
        b.push_back(k % 2 ? i : j);
      }
      pats.push_back(a);
      pats.push_back(b);
    }
  for (const auto& extra : fd.spec().extra_nonliftable) {
    Word w(extra.begin(), extra.end());
    pats.push_back(w);
  }
  return pats;
}

namespace detail {
inline bool contains_consecutive(const Word& word, const Word& pat) {
  if (pat.size() > word.size()) return false;
  for (size_t off = 0; off + pat.size() <= word.size(); ++off) {
    bool hit = true;
    for (size_t k = 0; k < pat.size(); ++k)
      if (word[off + k] != pat[k]) {
        hit = false;
        break;
      }
    if (hit) return true;
  }
  return false;
}
}  // namespace detail

// True when SOME reduced word of u contains a catalog pattern as a
// consecutive subword; definitive nonliftability. False is inconclusive.
inline bool nonliftable_by_catalog(const FoldingData& fd, const Word& u_word,
                                   const limits& lim = {}) {
  check(is_reduced(fd.folded(), u_word), errc::not_reduced,
        "nonliftable_by_catalog requires a reduced word");
  GroupElement u = element_of(fd.folded(), u_word);
  check(u.length() <= lim.word_cap, errc::length_cap_exceeded,
        "catalog scan above the reduced-word cap");
  std::vector<Word> pats = catalog_nonliftable_patterns(fd);
  bool hit = false;
  for_each_reduced_word(u, [&](const Word& word) {
    for (const auto& p : pats)
      if (detail::contains_consecutive(word, p)) {
        hit = true;
        return false;
      }
    return true;
  });
  return hit;
}

enum class SweepStatus { holds, holds_up_to_cap, witness_found };

struct SweepVerdict {
  SweepStatus status = SweepStatus::holds;
  Word witness;               // set when status == witness_found
  LiftMethod witness_method = LiftMethod::folding_set_search;
  int max_length_checked = 0;
};

// Scan W_tau^P in ascending length for a nonliftable Schubert class. Stops at
// the first witness; "holds" is only reported when the cap covered the whole
// quotient.
inline SweepVerdict lifting_property_sweep(const FoldingData& fd, const std::vector<int>& P,
                                           int length_cap, const limits& lim = {}) {
  std::vector<int> p_tau = fd.folded_parabolic(P);
  std::vector<GroupElement> quotient = enumerate_quotient(fd.folded(), p_tau, lim);
  SweepVerdict verdict;
  bool capped = false;
  for (const auto& u : quotient) {
    if (u.length() > length_cap) {
      capped = true;
      break;
    }
    verdict.max_length_checked = std::max(verdict.max_length_checked, u.length());
    Word uw = lex_least_word(u);
    if (nonliftable_by_catalog(fd, uw, lim)) {
      verdict.status = SweepStatus::witness_found;
      verdict.witness = uw;
      verdict.witness_method = LiftMethod::catalog_nonliftable;
      return verdict;
    }
    if (liftings_of(fd, u, P, lim, false).liftings.empty()) {
      verdict.status = SweepStatus::witness_found;
      verdict.witness = uw;
      verdict.witness_method = LiftMethod::folding_set_search;
      return verdict;
    }
  }
  verdict.status = capped ? SweepStatus::holds_up_to_cap : SweepStatus::holds;
  return verdict;
}

// Independent lifting oracle from the moment-graph characterization:
// w in W^P with l(w) = l(u), w <= iota(u), and w not below iota(u') for any
// u' in the quotient with u not below u'. No folding-subset machinery.
inline std::vector<GroupElement> brute_force_lifting_oracle(const FoldingData& fd,
                                                            const GroupElement& u,
                                                            const std::vector<int>& P,
                                                            const limits& lim = {}) {
  std::vector<GroupElement> wp = enumerate_quotient(fd.original(), P, lim);
  std::vector<GroupElement> up = enumerate_quotient(fd.folded(), fd.folded_parabolic(P), lim);
  GroupElement iu = fd.embed_element(u);
  std::vector<GroupElement> blockers;
  for (const auto& uprime : up)
    if (!bruhat_leq(u, uprime)) blockers.push_back(fd.embed_element(uprime));
  std::vector<GroupElement> out;
  for (const auto& w : wp) {
    if (w.length() != u.length()) continue;
    if (!bruhat_leq(w, iu)) continue;
    bool blocked = false;
    for (const auto& b : blockers)
      if (bruhat_leq(w, b)) {
        blocked = true;
        break;
      }
    if (!blocked) out.push_back(w);
  }
  return out;
}

// Reduced words of w maximizing the number of adjacent opposite pairs
// (s followed by s*), the search space behind the folded-reducedness claim.
inline std::vector<Word> admissible_reduced_words(const FoldingData& fd, const GroupElement& w,
                                                  const limits& lim = {}) {
  check(w.length() <= lim.word_cap, errc::length_cap_exceeded,
        "admissible-word enumeration above the reduced-word cap");
  std::vector<Word> best;
  int best_score = -1;
  for_each_reduced_word(w, [&](const Word& word) {
    int score = 0;
    for (size_t p = 0; p + 1 < word.size(); ++p)
      if (word[p + 1] == fd.opposite(word[p]) && word[p + 1] != word[p]) ++score;
    if (score > best_score) {
      best_score = score;
      best.clear();
    }
    if (score == best_score) best.push_back(word);
    return true;
  });
  return best;
}

}  // namespace foldlift
