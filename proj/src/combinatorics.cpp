#include "rookschur/combinatorics.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace rookschur {

namespace {

std::string join_ints(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace

Subset::Subset(int ambient, std::vector<int> elems) : n(ambient), elements(std::move(elems)) {
  if (n < 0) throw std::invalid_argument("Subset: negative ambient size");
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (elements[i] < 1 || elements[i] > n)
      throw std::invalid_argument("Subset: element out of range");
    if (i > 0 && elements[i] <= elements[i - 1])
      throw std::invalid_argument("Subset: elements must be strictly increasing");
  }
}

bool Subset::contains(int x) const {
  return std::binary_search(elements.begin(), elements.end(), x);
}

std::string Subset::str() const { return join_ints(elements); }

Word::Word(int alphabet, std::vector<int> w) : alphabet_size(alphabet), letters(std::move(w)) {
  if (alphabet_size < 1) throw std::invalid_argument("Word: alphabet size must be positive");
  for (int x : letters) {
    if (x < 1 || x > alphabet_size) throw std::invalid_argument("Word: letter out of range");
  }
}

std::string Word::str() const { return join_ints(letters); }

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 1) throw std::invalid_argument("Partition: parts must be positive");
    if (i > 0 && parts[i] > parts[i - 1])
      throw std::invalid_argument("Partition: parts must be weakly decreasing");
  }
}

int Partition::size() const {
  int s = 0;
  for (int p : parts) s += p;
  return s;
}

std::string Partition::str() const { return join_ints(parts); }

Partition Partition::parse(const std::string& s) {
  std::vector<int> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    parts.push_back(std::stoi(item));
  }
  return Partition(std::move(parts));
}

Word OrbitPair::first_word() const {
  std::vector<int> w;
  w.reserve(pairs.size());
  for (const auto& [a, b] : pairs) w.push_back(a);
  return Word(alphabet, std::move(w));
}

Word OrbitPair::second_word() const {
  std::vector<int> w;
  w.reserve(pairs.size());
  for (const auto& [a, b] : pairs) w.push_back(b);
  return Word(alphabet, std::move(w));
}

std::vector<Subset> enumerate_subsets(int n, int r) {
  if (r < 0 || r > n) throw std::invalid_argument("enumerate_subsets: need 0 <= r <= n");
  std::vector<Subset> out;
  std::vector<int> cur;
  cur.reserve(r);
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(cur.size()) == r) {
      out.emplace_back(n, cur);
      return;
    }
    int remaining = r - static_cast<int>(cur.size());
    for (int x = next; x <= n - remaining + 1; ++x) {
      cur.push_back(x);
      self(self, x + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

int subset_lex_rank(const Subset& x) {
  int rank = 0;
  int r = x.size();
  int prev = 0;
  for (int i = 0; i < r; ++i) {
    for (int v = prev + 1; v < x.elements[i]; ++v) {
      rank += static_cast<int>(binomial(x.n - v, r - i - 1));
    }
    prev = x.elements[i];
  }
  return rank;
}

std::vector<Word> enumerate_words(int r, int d) {
  if (d < 1) throw std::invalid_argument("enumerate_words: alphabet size must be positive");
  if (r < 0) throw std::invalid_argument("enumerate_words: negative length");
  std::vector<Word> out;
  std::vector<int> cur(r, 1);
  while (true) {
    out.emplace_back(d, cur);
    int i = r - 1;
    while (i >= 0 && cur[i] == d) {
      cur[i] = 1;
      --i;
    }
    if (i < 0) break;
    ++cur[i];
  }
  return out;
}

OrbitPair canonical_orbit_pair(const Word& alpha, const Word& beta) {
  if (alpha.length() != beta.length())
    throw std::invalid_argument("canonical_orbit_pair: length mismatch");
  if (alpha.alphabet_size != beta.alphabet_size)
    throw std::invalid_argument("canonical_orbit_pair: alphabet mismatch");
  OrbitPair p;
  p.alphabet = alpha.alphabet_size;
  p.degree = alpha.length();
  p.pairs.reserve(p.degree);
  for (int i = 0; i < p.degree; ++i) p.pairs.emplace_back(alpha.letters[i], beta.letters[i]);
  std::sort(p.pairs.begin(), p.pairs.end());
  return p;
}

std::vector<Tableau> standard_tableaux(const Partition& mu) {
  int r = mu.size();
  int nrows = static_cast<int>(mu.parts.size());
  std::vector<Tableau> out;
  Tableau cur(nrows);
  std::vector<int> filled(nrows, 0);
  auto rec = [&](auto&& self, int next) -> void {
    if (next > r) {
      out.push_back(cur);
      return;
    }
    for (int i = 0; i < nrows; ++i) {
      if (filled[i] == mu.parts[i]) continue;
      if (i > 0 && filled[i - 1] <= filled[i]) continue;  // column must increase downward
      cur[i].push_back(next);
      ++filled[i];
      self(self, next + 1);
      --filled[i];
      cur[i].pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

std::vector<Partition> enumerate_partitions(int r) {
  if (r < 0) throw std::invalid_argument("enumerate_partitions: negative size");
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      self(self, remaining - p, p);
      cur.pop_back();
    }
  };
  rec(rec, r, r);
  return out;
}

unsigned long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned long long result = 1;
  for (int i = 0; i < k; ++i) {
    result = result * static_cast<unsigned long long>(n - i) /
             static_cast<unsigned long long>(i + 1);
  }
  return result;
}

unsigned long long factorial(int n) {
  unsigned long long result = 1;
  for (int i = 2; i <= n; ++i) result *= static_cast<unsigned long long>(i);
  return result;
}

}  // namespace rookschur
