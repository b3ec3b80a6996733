#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "foldlift/errors.hpp"

namespace foldlift {

// Raw catalog data for the known twisted quadratic foldings. Diagrams are
// simply laced; vertices are 1-based. theta fixes delta_theta pointwise and
// sends each alpha in delta_rat to its partner; on the partners it is
// completed by theta^2 = c1*theta + 1.
struct FoldingSpec {
  std::string id;
  std::string original_name;
  std::string folded_name;
  int c1 = 0;
  int rank = 0;                              // original rank
  int folded_rank = 0;
  std::vector<std::pair<int, int>> edges;    // original Coxeter diagram (all bonds 3)
  std::vector<int> delta_theta;              // theta-fixed simple roots
  std::vector<int> delta_rat;                // tau-rational simple roots
  std::map<int, int> theta_pair;             // alpha in delta_rat -> theta(alpha)
  std::vector<int> phi;                      // 1-based: original index -> folded index
  std::vector<int> section;                  // folded index -> original index (in
                                             // delta_theta or delta_rat)
  std::vector<std::vector<int>> folded_bonds;  // triples {i, j, m}, m >= 3 only
  std::vector<std::vector<int>> extra_nonliftable;  // folded words beyond the
                                                    // generic braid patterns
};

namespace detail {

inline FoldingSpec ac_family(int n) {
  // A_{2n-1} -> C_n: chain 1..2n-1, theta pairs i with 2n-i, fixes n.
  FoldingSpec s;
  s.id = "A" + std::to_string(2 * n - 1) + "C" + std::to_string(n);
  s.original_name = "A" + std::to_string(2 * n - 1);
  s.folded_name = "C" + std::to_string(n);
  s.c1 = 0;
  s.rank = 2 * n - 1;
  s.folded_rank = n;
  for (int i = 1; i < s.rank; ++i) s.edges.push_back({i, i + 1});
  s.delta_theta = {n};
  for (int i = 1; i < n; ++i) {
    s.delta_rat.push_back(i);
    s.theta_pair[i] = 2 * n - i;
  }
  s.phi.assign(s.rank + 1, 0);
  for (int i = 1; i <= s.rank; ++i) s.phi[i] = std::min(i, 2 * n - i);
  s.section.assign(n + 1, 0);
  for (int j = 1; j <= n; ++j) s.section[j] = j;
  for (int i = 1; i + 1 < n; ++i) s.folded_bonds.push_back({i, i + 1, 3});
  s.folded_bonds.push_back({n - 1, n, 4});
  // R_n R_{n-1} R_n and, for n >= 3, R_{n-1} R_{n-2} R_{n-1} R_n R_{n-1}.
  s.extra_nonliftable.push_back({n, n - 1, n});
  if (n >= 3) s.extra_nonliftable.push_back({n - 1, n - 2, n - 1, n, n - 1});
  return s;
}

inline FoldingSpec db_family(int n) {
  // D_{n+1} -> B_n: chain 1..n-1 with both n and n+1 attached to n-1;
  // theta fixes 1..n-1 and swaps n with n+1 (delta_rat = {n+1}).
  FoldingSpec s;
  s.id = "D" + std::to_string(n + 1) + "B" + std::to_string(n);
  s.original_name = "D" + std::to_string(n + 1);
  s.folded_name = "B" + std::to_string(n);
  s.c1 = 0;
  s.rank = n + 1;
  s.folded_rank = n;
  for (int i = 1; i + 1 <= n; ++i) s.edges.push_back({i, i + 1});
  s.edges.push_back({n - 1, n + 1});
  for (int i = 1; i < n; ++i) s.delta_theta.push_back(i);
  s.delta_rat = {n + 1};
  s.theta_pair[n + 1] = n;
  s.phi.assign(s.rank + 1, 0);
  for (int i = 1; i <= n; ++i) s.phi[i] = i;
  s.phi[n + 1] = n;
  s.section.assign(n + 1, 0);
  for (int j = 1; j < n; ++j) s.section[j] = j;
  s.section[n] = n + 1;
  for (int i = 1; i + 1 < n; ++i) s.folded_bonds.push_back({i, i + 1, 3});
  s.folded_bonds.push_back({n - 1, n, 4});
  s.extra_nonliftable.push_back({n - 1, n, n - 1});
  return s;
}

inline FoldingSpec e6f4() {
  FoldingSpec s;
  s.id = "E6F4";
  s.original_name = "E6";
  s.folded_name = "F4";
  s.c1 = 0;
  s.rank = 6;
  s.folded_rank = 4;
  s.edges = {{2, 4}, {4, 3}, {4, 5}, {3, 1}, {5, 6}};
  s.delta_theta = {2, 4};
  s.delta_rat = {3, 1};
  s.theta_pair = {{3, 5}, {1, 6}};
  s.phi = {0, 4, 1, 3, 2, 3, 4};  // s2->R1, s4->R2, s3,s5->R3, s1,s6->R4
  s.section = {0, 2, 4, 3, 1};
  s.folded_bonds = {{1, 2, 3}, {2, 3, 4}, {3, 4, 3}};
  s.extra_nonliftable = {{2, 3, 2}, {3, 4, 3, 2, 3}};
  return s;
}

inline FoldingSpec e8h4() {
  FoldingSpec s;
  s.id = "E8H4";
  s.original_name = "E8";
  s.folded_name = "H4";
  s.c1 = 1;
  s.rank = 8;
  s.folded_rank = 4;
  s.edges = {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {5, 8}};
  s.delta_rat = {1, 2, 3, 8};
  s.theta_pair = {{1, 7}, {2, 6}, {3, 5}, {8, 4}};
  s.phi = {0, 1, 2, 3, 4, 3, 2, 1, 4};
  s.section = {0, 1, 2, 3, 8};
  s.folded_bonds = {{1, 2, 3}, {2, 3, 3}, {3, 4, 5}};
  s.extra_nonliftable = {{3, 2, 3, 4, 3}};
  return s;
}

inline FoldingSpec d6h3() {
  FoldingSpec s;
  s.id = "D6H3";
  s.original_name = "D6";
  s.folded_name = "H3";
  s.c1 = 1;
  s.rank = 6;
  s.folded_rank = 3;
  s.edges = {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {4, 6}};
  s.delta_rat = {1, 2, 6};
  s.theta_pair = {{1, 5}, {2, 4}, {6, 3}};
  s.phi = {0, 1, 2, 3, 2, 1, 3};
  s.section = {0, 1, 2, 6};
  s.folded_bonds = {{1, 2, 3}, {2, 3, 5}};
  s.extra_nonliftable = {{2, 1, 2, 3, 2}};
  return s;
}

inline FoldingSpec a4h2() {
  FoldingSpec s;
  s.id = "A4H2";
  s.original_name = "A4";
  s.folded_name = "H2";
  s.c1 = 1;
  s.rank = 4;
  s.folded_rank = 2;
  s.edges = {{1, 2}, {2, 3}, {3, 4}};
  s.delta_rat = {1, 4};
  s.theta_pair = {{1, 3}, {4, 2}};
  s.phi = {0, 1, 2, 1, 2};
  s.section = {0, 1, 4};
  s.folded_bonds = {{1, 2, 5}};
  return s;
}

}  // namespace detail

// The eight named instances plus the parametric families for 2 <= n <= 5.
inline std::vector<std::string> catalog_ids() {
  std::vector<std::string> ids;
  for (int n = 2; n <= 5; ++n) ids.push_back(detail::ac_family(n).id);
  for (int n = 2; n <= 5; ++n) ids.push_back(detail::db_family(n).id);
  ids.push_back("E6F4");
  ids.push_back("E8H4");
  ids.push_back("D6H3");
  ids.push_back("A4H2");
  return ids;
}

inline FoldingSpec folding_spec(const std::string& id) {
  for (int n = 2; n <= 5; ++n) {
    if (detail::ac_family(n).id == id) return detail::ac_family(n);
    if (detail::db_family(n).id == id) return detail::db_family(n);
  }
  if (id == "E6F4") return detail::e6f4();
  if (id == "E8H4") return detail::e8h4();
  if (id == "D6H3") return detail::d6h3();
  if (id == "A4H2") return detail::a4h2();
  fail(errc::unknown_folding, "no catalog folding named '" + id + "'");
}

}  // namespace foldlift
