#pragma once

#include <compare>
#include <string>
#include <vector>

#include "rookschur/combinatorics.hpp"

namespace rookschur {

/// Partial injective self-map of {1..n}. Slot i (1-based) holds the image
/// sigma(i), or 0 when sigma is undefined at i. Defined images are pairwise
/// distinct.
class PartialPerm {
public:
  PartialPerm() = default;  // the unique element of R_0

  static PartialPerm identity(int n);
  static PartialPerm empty_map(int n);  // epsilon_emptyset, the zero element
  static PartialPerm from_images(int n, std::vector<int> images);

  /// Parses the one-line format "[a,b,-,c]" with "-" for undefined.
  static PartialPerm parse(int n, const std::string& s);
  std::string str() const;

  int n() const { return static_cast<int>(images_.size()); }
  int image(int i) const { return images_[i - 1]; }  // 0 when undefined
  bool defined_at(int i) const { return images_[i - 1] != 0; }

  int rank() const;
  Subset domain() const;
  Subset range() const;
  bool is_total() const { return rank() == n(); }
  bool is_idempotent() const;

  auto operator<=>(const PartialPerm&) const = default;

private:
  std::vector<int> images_;
};

/// (sigma tau)(i) = sigma(tau(i)): tau first, then sigma.
PartialPerm compose(const PartialPerm& sigma, const PartialPerm& tau);

/// The unique element with domain R(sigma) satisfying
/// inverse(sigma) * sigma = idempotent(D(sigma)).
PartialPerm inverse(const PartialPerm& sigma);

/// Partial identity epsilon_X: identity on X, undefined elsewhere.
PartialPerm idempotent(const Subset& x);

/// The order-preserving bijection iota_X: k -> k-th smallest element of X,
/// encoded in ambient n with domain {1..|X|}.
PartialPerm iota(const Subset& x);

/// Extends an element of R_r to ambient n >= r (undefined above r).
PartialPerm embed(const PartialPerm& sigma, int n);

/// The pattern permutation p(sigma) = iota_{R(sigma)}^- sigma iota_{D(sigma)},
/// returned as a total element of R_{rank(sigma)}.
PartialPerm p_map(const PartialPerm& sigma);

/// All elements of R_n, ordered by rank, then domain subset, then range
/// subset, then lexicographic one-line form of the pattern. n <= 6.
std::vector<PartialPerm> enumerate_rook(int n);

/// |R_n| = sum_r C(n,r)^2 r!.
unsigned long long rook_monoid_size(int n);

/// All total elements of R_r (the symmetric group S_r) in lexicographic
/// one-line order.
std::vector<PartialPerm> enumerate_symmetric(int r);

}  // namespace rookschur
