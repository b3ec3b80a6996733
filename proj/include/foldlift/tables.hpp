#pragma once

#include <atomic>
#include <cstdlib>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "foldlift/lifting.hpp"

namespace foldlift {

// Run fn(0..n-1) across FOLDLIFT_WORKERS threads (default 1). Tasks must be
// independent and must not share mutable state.
inline void parallel_for_each(size_t n, const std::function<void(size_t)>& fn) {
  int workers = 1;
  if (const char* env = std::getenv("FOLDLIFT_WORKERS")) {
    workers = std::max(1, std::atoi(env));
  }
  if (workers == 1 || n <= 1) {
    for (size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::vector<std::thread> pool;
  for (int t = 0; t < workers; ++t)
    pool.emplace_back([&] {
      for (size_t i = next++; i < n; i = next++) fn(i);
    });
  for (auto& th : pool) th.join();
}

// One recomputed lifting table: element of W_tau^P -> set of liftings,
// everything keyed by lex-least words for stable comparison.
struct LiftingTableRow {
  Word u;
  int length = 0;
  std::vector<Word> liftings;  // sorted; empty = nonliftable
};

inline std::vector<LiftingTableRow> compute_lifting_table(const FoldingData& fd,
                                                          const std::vector<int>& P, int max_len,
                                                          const limits& lim = {}) {
  std::vector<int> p_tau = fd.folded_parabolic(P);
  std::vector<GroupElement> quotient = enumerate_quotient(fd.folded(), p_tau, lim);
  std::vector<GroupElement> targets;
  for (const auto& u : quotient)
    if (u.length() <= max_len) targets.push_back(u);
  std::vector<LiftingTableRow> rows(targets.size());
  parallel_for_each(targets.size(), [&](size_t i) {
    const GroupElement& u = targets[i];
    LiftingTableRow row;
    row.u = lex_least_word(u);
    row.length = u.length();
    for (const auto& l : liftings_of(fd, u, P, lim, false).liftings) row.liftings.push_back(l.word);
    rows[i] = std::move(row);
  });
  return rows;
}

// ---- golden-data verification -------------------------------------------

namespace golden {

inline std::vector<int> parse_parabolic(const nlohmann::json& j) {
  std::vector<int> out;
  for (const auto& v : j) out.push_back(v.get<int>());
  return out;
}

// Diffs between a recomputed table and its golden JSON; empty means match.
// Rows are matched by group element, lifting lists compared as element sets.
inline std::vector<std::string> table_diffs(const nlohmann::json& jt, const limits& lim = {}) {
  std::vector<std::string> diffs;
  std::string id = jt.at("folding").get<std::string>();
  auto fd = build_folding(id, lim);
  std::vector<int> P = parse_parabolic(jt.at("parabolic"));
  std::string label = "table[" + id + "]";

  int max_len = 0;
  std::map<Mat, std::set<Mat>> expected;  // u -> set of liftings
  std::map<Mat, Word> expected_word;
  for (const auto& row : jt.at("rows")) {
    GroupElement u = element_of(fd->folded(), parse_word(row.at("u").get<std::string>()));
    max_len = std::max(max_len, u.length());
    std::set<Mat> lifts;
    for (const auto& lw : row.at("liftings"))
      lifts.insert(element_of(fd->original(), parse_word(lw.get<std::string>())).matrix());
    expected.emplace(u.matrix(), std::move(lifts));
    expected_word.emplace(u.matrix(), lex_least_word(u));
  }
  std::set<Mat> expected_nonliftable;
  if (jt.contains("nonliftable")) {
    for (const auto& uw : jt.at("nonliftable")) {
      GroupElement u = element_of(fd->folded(), parse_word(uw.get<std::string>()));
      max_len = std::max(max_len, u.length());
      expected_nonliftable.insert(u.matrix());
    }
  }

  std::vector<LiftingTableRow> rows = compute_lifting_table(*fd, P, max_len, lim);
  for (const auto& row : rows) {
    GroupElement u = element_of(fd->folded(), row.u);
    std::set<Mat> got;
    for (const auto& w : row.liftings) got.insert(element_of(fd->original(), w).matrix());
    auto it = expected.find(u.matrix());
    if (it != expected.end()) {
      if (got != it->second)
        diffs.push_back(label + ": liftings of " + word_str(row.u) + " differ");
    } else if (expected_nonliftable.count(u.matrix())) {
      if (!got.empty())
        diffs.push_back(label + ": " + word_str(row.u) + " should be nonliftable");
    } else {
      diffs.push_back(label + ": unexpected quotient element " + word_str(row.u));
    }
  }
  if (rows.size() != expected.size() + expected_nonliftable.size())
    diffs.push_back(label + ": row count mismatch (got " + std::to_string(rows.size()) + ")");
  return diffs;
}

// Lifting-property classification: the sweep must succeed exactly for the
// listed parabolic subsets.
inline std::vector<std::string> classification_diffs(const nlohmann::json& jc,
                                                     const limits& lim = {}) {
  std::vector<std::string> diffs;
  std::string id = jc.at("folding").get<std::string>();
  auto fd = build_folding(id, lim);
  std::vector<int> required;
  bool nonempty_rule = jc.contains("holds_iff_P_nonempty") && jc.at("holds_iff_P_nonempty").get<bool>();
  if (!nonempty_rule) required = parse_parabolic(jc.at("holds_iff_P_contains"));
  for (const auto& P : fd->theta_stable_parabolics()) {
    bool expect_holds;
    if (nonempty_rule) {
      expect_holds = !P.empty();
    } else {
      expect_holds = std::includes(P.begin(), P.end(), required.begin(), required.end());
    }
    SweepVerdict v = lifting_property_sweep(*fd, P, 1 << 20, lim);
    bool holds = v.status == SweepStatus::holds;
    if (holds != expect_holds) {
      std::string pstr;
      for (int p : P) pstr += std::to_string(p);
      diffs.push_back("classification[" + id + "]: P={" + pstr + "} expected " +
                      (expect_holds ? "holds" : "witness") + ", got " +
                      (holds ? "holds" : "witness " + word_str(v.witness)));
    }
  }
  return diffs;
}

// Early-exit sweeps over the listed parabolics must produce a witness within
// the cap.
inline std::vector<std::string> capped_witness_diffs(const nlohmann::json& jc,
                                                     const limits& lim = {}) {
  std::vector<std::string> diffs;
  std::string id = jc.at("folding").get<std::string>();
  auto fd = build_folding(id, lim);
  int cap = jc.at("witness_length_cap").get<int>();
  for (const auto& jp : jc.at("parabolics")) {
    std::vector<int> P = parse_parabolic(jp);
    SweepVerdict v = lifting_property_sweep(*fd, P, cap, lim);
    if (v.status != SweepStatus::witness_found) {
      std::string pstr;
      for (int p : P) pstr += std::to_string(p);
      diffs.push_back("witness[" + id + "]: no witness up to length " + std::to_string(cap) +
                      " for P={" + pstr + "}");
    }
  }
  return diffs;
}

// Named witnesses: reduced, in the stated quotient, nonliftable by catalog.
inline std::vector<std::string> named_witness_diffs(const nlohmann::json& jc,
                                                    const limits& lim = {}) {
  std::vector<std::string> diffs;
  std::string id = jc.at("folding").get<std::string>();
  auto fd = build_folding(id, lim);
  for (const auto& jw : jc.at("witnesses")) {
    Word uw = parse_word(jw.at("u").get<std::string>());
    std::vector<int> P = parse_parabolic(jw.at("parabolic"));
    std::string label = "witness[" + id + " " + word_str(uw) + "]";
    if (!is_reduced(fd->folded(), uw)) {
      diffs.push_back(label + ": word is not reduced");
      continue;
    }
    GroupElement u = element_of(fd->folded(), uw);
    if (!in_quotient(u, fd->folded_parabolic(P)))
      diffs.push_back(label + ": element is not in the stated quotient");
    if (!nonliftable_by_catalog(*fd, uw, lim))
      diffs.push_back(label + ": catalog does not certify nonliftability");
  }
  return diffs;
}

inline std::vector<std::string> verify_all(const nlohmann::json& root, const limits& lim = {}) {
  std::vector<std::string> diffs;
  auto append = [&](std::vector<std::string> v) {
    diffs.insert(diffs.end(), v.begin(), v.end());
  };
  for (const char* key : {"table1", "table2"})
    if (root.contains(key)) append(table_diffs(root.at(key), lim));
  if (root.contains("lifting_property")) {
    const auto& lp = root.at("lifting_property");
    if (lp.contains("classifications"))
      for (const auto& jc : lp.at("classifications")) append(classification_diffs(jc, lim));
    if (lp.contains("e6f4_maximal_parabolics"))
      append(capped_witness_diffs(lp.at("e6f4_maximal_parabolics"), lim));
    if (lp.contains("e8h4_witnesses")) append(named_witness_diffs(lp.at("e8h4_witnesses"), lim));
  }
  return diffs;
}

}  // namespace golden

}  // namespace foldlift
