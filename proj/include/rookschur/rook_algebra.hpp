#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "rookschur/matrix.hpp"
#include "rookschur/partial_perm.hpp"
#include "rookschur/specht.hpp"

namespace rookschur {

/// Basis element sigma E_{I,J} of the block matrix algebra
/// R_n = sum_r M_{C(n,r)}(Q S_r): sigma is a total element of R_degree and
/// I, J are size-degree subsets of {1..n}. The degree-0 block has the
/// single term E_{emptyset,emptyset}.
struct BasisTerm {
  int n = 0;
  int degree = 0;
  Subset I, J;
  PartialPerm sigma;

  BasisTerm() = default;
  BasisTerm(int ambient, PartialPerm s, Subset i, Subset j);

  std::string str() const;  // "r; sigma=<one-line>; I=<subset>; J=<subset>"

  auto operator<=>(const BasisTerm&) const = default;
};

/// Sparse rational combination of BasisTerms; zero coefficients are never
/// stored.
class RookAlgebraElement {
public:
  explicit RookAlgebraElement(int n) : n_(n) {}

  int n() const { return n_; }
  const std::map<BasisTerm, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const BasisTerm& t, const Rational& c);
  RookAlgebraElement& operator+=(const RookAlgebraElement& o);
  RookAlgebraElement& operator*=(const Rational& c);

  bool operator==(const RookAlgebraElement& o) const = default;

private:
  int n_;
  std::map<BasisTerm, Rational> terms_;
};

/// Sparse rational combination of rook monoid elements (the monoid algebra
/// Q R_n).
class MonoidAlgebraElement {
public:
  explicit MonoidAlgebraElement(int n) : n_(n) {}
  static MonoidAlgebraElement of(const PartialPerm& sigma);

  int n() const { return n_; }
  const std::map<PartialPerm, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const PartialPerm& sigma, const Rational& c);
  MonoidAlgebraElement& operator+=(const MonoidAlgebraElement& o);

  bool operator==(const MonoidAlgebraElement& o) const = default;

private:
  int n_;
  std::map<PartialPerm, Rational> terms_;
};

/// Bilinear extension of (sigma E_{I,J})(tau E_{K,L}) = delta_{J,K}
/// (sigma tau) E_{I,L}; blocks of different degree multiply to zero.
RookAlgebraElement multiply(const RookAlgebraElement& x, const RookAlgebraElement& y);

/// The identity sum_r sum_{|Y|=r} epsilon_r E_{Y,Y}.
RookAlgebraElement rook_algebra_unit(int n);

/// phi(sigma) = sum_{X subseteq D(sigma)} p(sigma epsilon_X) E_{sigma(X),X},
/// the Munn/Ponizovskii isomorphism Q R_n -> R_n on monoid elements.
RookAlgebraElement phi(const PartialPerm& sigma);
RookAlgebraElement phi(const MonoidAlgebraElement& x);

/// phi^{-1}(sigma E_{I,J}) =
///   sum_{X subseteq J} (-1)^{|J|-|X|} (iota_I sigma iota_J^-) epsilon_X.
MonoidAlgebraElement phi_inverse(const BasisTerm& t);
MonoidAlgebraElement phi_inverse(const RookAlgebraElement& x);

/// All basis terms of R_n in (degree, I, J, sigma) order; the count is
/// rook_monoid_size(n).
std::vector<BasisTerm> enumerate_basis_terms(int n);

/// Irreducible representation of Q R_n induced from rep = rho_mu, mu a
/// partition of r: block matrix of size dim(rep) * C(n,r) whose
/// (sigma(X), X) block is rho_mu(p(sigma epsilon_X)) for each size-r
/// X subseteq D(sigma), with blocks indexed by size-r subsets in
/// lexicographic order.
RationalMatrix rho_star(const SpechtRep& rep, const PartialPerm& sigma);

/// dim R_n = |R_n| = sum_r C(n,r)^2 r!.
unsigned long long rook_algebra_dimension(int n);

}  // namespace rookschur
