#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "foldlift/coxeter.hpp"

using namespace foldlift;

namespace {

// Brute-force Bruhat oracle: scan all subexpressions of one fixed reduced
// word of w for a reduced expression of u.
bool subword_leq(const GroupElement& u, const GroupElement& w) {
  Word word = lex_least_word(w);
  int n = static_cast<int>(word.size());
  for (long mask = 0; mask < (1L << n); ++mask) {
    Word sub;
    for (int i = 0; i < n; ++i)
      if (mask & (1L << i)) sub.push_back(word[i]);
    if (static_cast<int>(sub.size()) != u.length()) continue;
    if (element_of(u.datum(), sub) == u) return true;
  }
  return false;
}

std::vector<GroupElement> all_elements(const RootDatum& d) { return enumerate_quotient(d, {}); }

}  // namespace

TEST_CASE("element_of and lengths") {
  RootDatum a2 = type_a_datum(2);
  GroupElement longest = element_of(a2, {1, 2, 1});
  CHECK(longest.length() == 3);
  CHECK(element_of(a2, {}).is_identity());
  CHECK(element_of(a2, {1, 1}).is_identity());
  CHECK(element_of(a2, {1, 1}).length() == 0);
  CHECK_THROWS_AS(element_of(a2, {5}), error);
}

TEST_CASE("is_reduced") {
  RootDatum a2 = type_a_datum(2);
  CHECK(is_reduced(a2, {1, 2, 1}));
  CHECK_FALSE(is_reduced(a2, {1, 1}));
  RootDatum a4 = type_a_datum(4);
  CHECK(is_reduced(a4, {2, 1, 2, 3}));
}

TEST_CASE("reduced word enumeration") {
  RootDatum a2 = type_a_datum(2);
  auto words = reduced_words(element_of(a2, {1, 2, 1}));
  CHECK(words == std::vector<Word>{{1, 2, 1}, {2, 1, 2}});
  CHECK(reduced_words(element_of(a2, {})) == std::vector<Word>{{}});

  RootDatum a4 = type_a_datum(4);
  auto w4 = reduced_words(element_of(a4, {2, 1, 2, 3}));
  std::set<Word> got(w4.begin(), w4.end());
  CHECK(got == std::set<Word>{{1, 2, 1, 3}, {1, 2, 3, 1}, {2, 1, 2, 3}});

  limits tight;
  tight.word_cap = 2;
  CHECK_THROWS_AS(reduced_words(element_of(a2, {1, 2, 1}), tight), error);
}

TEST_CASE("lex-least word") {
  RootDatum a4 = type_a_datum(4);
  CHECK(lex_least_word(element_of(a4, {2, 1, 2, 3})) == Word{1, 2, 1, 3});
  CHECK(lex_least_word(element_of(a4, {})) == Word{});
}

TEST_CASE("bruhat order basics") {
  RootDatum a2 = type_a_datum(2);
  GroupElement e = element_of(a2, {});
  GroupElement s1 = element_of(a2, {1});
  GroupElement s12 = element_of(a2, {1, 2});
  GroupElement s21 = element_of(a2, {2, 1});
  for (const auto& w : all_elements(a2)) CHECK(bruhat_leq(e, w));
  CHECK(bruhat_leq(s1, s21));
  CHECK_FALSE(bruhat_leq(s12, s21));
  CHECK_FALSE(bruhat_leq(s21, s12));
}

TEST_CASE("bruhat agrees with the subword oracle on all of W(A3)") {
  RootDatum a3 = type_a_datum(3);
  auto elems = all_elements(a3);
  REQUIRE(elems.size() == 24);
  for (const auto& u : elems)
    for (const auto& w : elems) CHECK(bruhat_leq(u, w) == subword_leq(u, w));
}

TEST_CASE("min_coset_rep") {
  RootDatum a2 = type_a_datum(2);
  GroupElement s21 = element_of(a2, {2, 1});
  CHECK(min_coset_rep(s21, {1}) == element_of(a2, {2}));
  GroupElement s2 = element_of(a2, {2});
  CHECK(min_coset_rep(s2, {1}) == s2);     // already minimal
  CHECK(min_coset_rep(s21, {}) == s21);    // empty parabolic
}

TEST_CASE("parabolic quotients") {
  RootDatum a2 = type_a_datum(2);
  auto q = enumerate_quotient(a2, {1});
  REQUIRE(q.size() == 3);
  CHECK(q[0].is_identity());
  CHECK(q[1] == element_of(a2, {2}));
  CHECK(q[2] == element_of(a2, {1, 2}));
  CHECK(enumerate_quotient(a2, {}).size() == 6);

  limits tight;
  tight.quotient_cap = 3;
  CHECK_THROWS_AS(enumerate_quotient(a2, {}, tight), error);
}

TEST_CASE("classical group orders") {
  CHECK(all_elements(type_a_datum(2)).size() == 6);
  CHECK(all_elements(type_a_datum(3)).size() == 24);
  CHECK(all_elements(type_a_datum(4)).size() == 120);
}

TEST_CASE("length properties on random samples") {
  RootDatum a3 = type_a_datum(3);
  auto elems = all_elements(a3);
  std::mt19937 gen(3);
  std::uniform_int_distribution<size_t> pick(0, elems.size() - 1);
  for (int it = 0; it < 200; ++it) {
    const GroupElement& u = elems[pick(gen)];
    const GroupElement& v = elems[pick(gen)];
    CHECK((u * v).length() <= u.length() + v.length());
    int s = 1 + static_cast<int>(pick(gen) % 3);
    int d = u.right_mult(s).length() - u.length();
    CHECK((d == 1 || d == -1));
  }
}

TEST_CASE("reduced word count is inverse-invariant") {
  RootDatum a3 = type_a_datum(3);
  for (const auto& w : all_elements(a3))
    CHECK(reduced_words(w).size() == reduced_words(w.inverse()).size());
}
