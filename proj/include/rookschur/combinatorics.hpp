#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace rookschur {

/// Subset of {1..n}, elements strictly increasing; the empty set is allowed.
struct Subset {
  Subset() = default;
  Subset(int ambient, std::vector<int> elems);

  int n = 0;
  std::vector<int> elements;

  int size() const { return static_cast<int>(elements.size()); }
  bool contains(int x) const;
  std::string str() const;  // "1,3" ; "" for the empty set

  auto operator<=>(const Subset&) const = default;
};

/// Word over the alphabet {1..d}; the empty word is allowed.
struct Word {
  Word() = default;
  Word(int alphabet, std::vector<int> w);

  int alphabet_size = 0;
  std::vector<int> letters;

  int length() const { return static_cast<int>(letters.size()); }
  std::string str() const;  // "1,2" ; "" for the empty word

  auto operator<=>(const Word&) const = default;
};

/// Integer partition: weakly decreasing positive parts; () is the empty
/// partition of 0.
struct Partition {
  Partition() = default;
  explicit Partition(std::vector<int> p);

  std::vector<int> parts;

  int size() const;
  std::string str() const;  // "2,1" ; "" for the empty partition
  static Partition parse(const std::string& s);

  auto operator<=>(const Partition&) const = default;
};

/// Canonical representative of the simultaneous S_r-orbit of a pair of
/// words: the lexicographically sorted list of columns (a_i, b_i).
struct OrbitPair {
  int alphabet = 0;
  int degree = 0;
  std::vector<std::pair<int, int>> pairs;

  Word first_word() const;
  Word second_word() const;

  auto operator<=>(const OrbitPair&) const = default;
};

/// All C(n,r) size-r subsets of {1..n} in lexicographic order.
std::vector<Subset> enumerate_subsets(int n, int r);

/// Lexicographic position of a subset within enumerate_subsets(n, |X|).
int subset_lex_rank(const Subset& x);

/// All d^r words of length r in lexicographic order.
std::vector<Word> enumerate_words(int r, int d);

OrbitPair canonical_orbit_pair(const Word& alpha, const Word& beta);

using Tableau = std::vector<std::vector<int>>;

/// All standard Young tableaux of the given shape (rows and columns
/// strictly increasing), in the order produced by filling 1..|mu| into row
/// ends top to bottom.
std::vector<Tableau> standard_tableaux(const Partition& mu);

/// All partitions of r, largest-part-first order ((r), ..., (1^r)).
std::vector<Partition> enumerate_partitions(int r);

unsigned long long binomial(int n, int k);
unsigned long long factorial(int n);

}  // namespace rookschur
