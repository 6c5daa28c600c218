#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <set>

#include "rookschur/combinatorics.hpp"

using namespace rookschur;

namespace {

// Independent oracle: f^mu by the hook length formula, |mu|! / prod(hooks).
unsigned long long hook_length_count(const Partition& mu) {
  int rows = static_cast<int>(mu.parts.size());
  unsigned long long hooks = 1;
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < mu.parts[i]; ++j) {
      int arm = mu.parts[i] - j - 1;
      int leg = 0;
      for (int k = i + 1; k < rows; ++k) {
        if (mu.parts[k] > j) ++leg;
      }
      hooks *= static_cast<unsigned long long>(arm + leg + 1);
    }
  }
  return factorial(mu.size()) / hooks;
}

bool tableau_is_standard(const Tableau& t, const Partition& mu) {
  std::set<int> used;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (static_cast<int>(t[i].size()) != mu.parts[i]) return false;
    for (std::size_t j = 0; j < t[i].size(); ++j) {
      if (!used.insert(t[i][j]).second) return false;
      if (j > 0 && t[i][j] <= t[i][j - 1]) return false;
      if (i > 0 && t[i][j] <= t[i - 1][j]) return false;
    }
  }
  return static_cast<int>(used.size()) == mu.size();
}

}  // namespace

TEST_CASE("subset enumeration") {
  auto empty = enumerate_subsets(3, 0);
  REQUIRE(empty.size() == 1);
  REQUIRE(empty[0].elements.empty());

  auto pairs = enumerate_subsets(3, 2);
  REQUIRE(pairs.size() == 3);
  CHECK(pairs[0].elements == std::vector<int>{1, 2});
  CHECK(pairs[1].elements == std::vector<int>{1, 3});
  CHECK(pairs[2].elements == std::vector<int>{2, 3});

  CHECK(enumerate_subsets(5, 2).size() == 10);

  CHECK_THROWS_AS(enumerate_subsets(3, 4), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_subsets(3, -1), std::invalid_argument);
}

TEST_CASE("subset counts match binomial coefficients up to n = 8") {
  for (int n = 0; n <= 8; ++n) {
    for (int r = 0; r <= n; ++r) {
      auto subs = enumerate_subsets(n, r);
      REQUIRE(subs.size() == binomial(n, r));
      CHECK(std::is_sorted(subs.begin(), subs.end()));
      for (std::size_t i = 0; i < subs.size(); ++i) {
        CHECK(subset_lex_rank(subs[i]) == static_cast<int>(i));
      }
    }
  }
}

TEST_CASE("word enumeration") {
  auto empty = enumerate_words(0, 3);
  REQUIRE(empty.size() == 1);
  REQUIRE(empty[0].letters.empty());

  auto two = enumerate_words(2, 2);
  REQUIRE(two.size() == 4);
  CHECK(two[0].letters == std::vector<int>{1, 1});
  CHECK(two[1].letters == std::vector<int>{1, 2});
  CHECK(two[2].letters == std::vector<int>{2, 1});
  CHECK(two[3].letters == std::vector<int>{2, 2});

  CHECK(enumerate_words(3, 2).size() == 8);
  CHECK_THROWS_AS(enumerate_words(2, 0), std::invalid_argument);
}

TEST_CASE("canonical orbit pairs") {
  Word a2(2, {2, 1}), b2(2, {1, 2});
  auto p = canonical_orbit_pair(a2, b2);
  CHECK(p.pairs == std::vector<std::pair<int, int>>{{1, 2}, {2, 1}});

  auto q = canonical_orbit_pair(Word(2, {1, 2}), Word(2, {2, 1}));
  CHECK(p == q);

  auto r = canonical_orbit_pair(Word(3, {1, 1, 2}), Word(3, {3, 1, 2}));
  CHECK(r.pairs == std::vector<std::pair<int, int>>{{1, 1}, {1, 3}, {2, 2}});

  CHECK_THROWS_AS(canonical_orbit_pair(Word(2, {1}), Word(2, {1, 2})), std::invalid_argument);
}

TEST_CASE("orbit pair canonical form is invariant under simultaneous position permutations") {
  // Exhaustive over all position permutations for r <= 4 and all word pairs
  // over a 2-letter alphabet.
  for (int r = 1; r <= 4; ++r) {
    auto words = enumerate_words(r, 2);
    std::vector<int> perm(r);
    std::iota(perm.begin(), perm.end(), 1);
    for (const Word& alpha : words) {
      for (const Word& beta : words) {
        auto canon = canonical_orbit_pair(alpha, beta);
        std::vector<int> p = perm;
        do {
          std::vector<int> pa(r), pb(r);
          for (int i = 0; i < r; ++i) {
            pa[i] = alpha.letters[p[i] - 1];
            pb[i] = beta.letters[p[i] - 1];
          }
          REQUIRE(canonical_orbit_pair(Word(2, pa), Word(2, pb)) == canon);
        } while (std::next_permutation(p.begin(), p.end()));
      }
    }
  }
}

TEST_CASE("standard tableaux") {
  CHECK(standard_tableaux(Partition({1})).size() == 1);
  CHECK(standard_tableaux(Partition({2, 1})).size() == 2);
  CHECK(standard_tableaux(Partition({2, 2})).size() == 2);
  CHECK(standard_tableaux(Partition()).size() == 1);
}

TEST_CASE("tableau counts match the hook length formula up to r = 6") {
  for (int r = 0; r <= 6; ++r) {
    for (const Partition& mu : enumerate_partitions(r)) {
      auto tabs = standard_tableaux(mu);
      REQUIRE(tabs.size() == hook_length_count(mu));
      for (const Tableau& t : tabs) REQUIRE(tableau_is_standard(t, mu));
    }
  }
}

TEST_CASE("partition enumeration and parsing") {
  CHECK(enumerate_partitions(4).size() == 5);
  CHECK(enumerate_partitions(6).size() == 11);
  CHECK(Partition::parse("2,1") == Partition({2, 1}));
  CHECK(Partition::parse("") == Partition());
  CHECK(Partition({3, 1}).str() == "3,1");
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({0}), std::invalid_argument);
}

TEST_CASE("serialization formats") {
  CHECK(Subset(5, {1, 3}).str() == "1,3");
  CHECK(Subset(5, {}).str() == "");
  CHECK(Word(4, {1, 2, 2}).str() == "1,2,2");
  CHECK_THROWS_AS(Subset(3, {2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Subset(3, {4}), std::invalid_argument);
  CHECK_THROWS_AS(Word(2, {3}), std::invalid_argument);
}
