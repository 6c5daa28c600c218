#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "rookschur/combinatorics.hpp"
#include "rookschur/matrix.hpp"

namespace rookschur {

/// Monomial c_{alpha,beta} of degree r in the d^2 coordinate functions,
/// stored by the canonical representative of the simultaneous S_r-orbit of
/// (alpha, beta). Monomials presented on an index set X are normalized by
/// reading letters in increasing position order.
struct Monomial {
  OrbitPair pair;

  Monomial() = default;
  Monomial(const Word& alpha, const Word& beta) : pair(canonical_orbit_pair(alpha, beta)) {}

  int alphabet() const { return pair.alphabet; }
  int degree() const { return pair.degree; }

  auto operator<=>(const Monomial&) const = default;
};

/// Dual-basis element xi_{alpha,beta} of the extended Schur algebra,
/// indexed the same way as monomials.
struct XiBasisElement {
  OrbitPair pair;

  XiBasisElement() = default;
  XiBasisElement(const Word& alpha, const Word& beta)
      : pair(canonical_orbit_pair(alpha, beta)) {}
  explicit XiBasisElement(OrbitPair p) : pair(std::move(p)) {}

  int alphabet() const { return pair.alphabet; }
  int degree() const { return pair.degree; }

  std::string str() const;  // "r; alpha=<word>; beta=<word>"
  static XiBasisElement parse(int d, const std::string& s);

  auto operator<=>(const XiBasisElement&) const = default;
};

/// Sparse element of S(d, n) = sum_{r=0}^{n} S(d, r).
class SchurElement {
public:
  SchurElement(int d, int n);
  static SchurElement basis(int d, int n, const XiBasisElement& xi);

  int d() const { return d_; }
  int n() const { return n_; }
  const std::map<XiBasisElement, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const XiBasisElement& xi, const Rational& c);
  SchurElement& operator+=(const SchurElement& o);
  SchurElement& operator*=(const Rational& c);

  bool operator==(const SchurElement& o) const = default;

private:
  int d_;
  int n_;
  std::map<XiBasisElement, Rational> terms_;
};

/// The C(d^2+n, n) basis elements of S(d, n), ordered by degree then
/// canonical pair. Throws resource_error past max_dim.
std::vector<XiBasisElement> enumerate_basis(int d, int n,
                                            unsigned long long max_dim = 1000000);

/// The C(d^2+r-1, r) basis elements of the degree-r block alone.
std::vector<XiBasisElement> enumerate_basis_degree(int d, int r);

/// dim S(d, n) = C(d^2+n, n).
unsigned long long schur_dimension(int d, int n);

/// xi_{alpha,beta}(c_{gamma,nu}) = 1 iff the degrees match and the pairs
/// lie in the same orbit.
Rational evaluate(const XiBasisElement& xi, const Monomial& m);
Rational evaluate(const SchurElement& xi, const Monomial& m);

/// Product read off the coalgebra dual:
/// (xi eta)(c_{alpha,beta}) = sum_{gamma} xi(c_{alpha,gamma}) eta(c_{gamma,beta}),
/// the sum running over all d^r words gamma of the common degree.
SchurElement product(const SchurElement& xi, const SchurElement& eta);

/// The unit evaluates monomials at the identity matrix:
/// sum_r sum_{alpha weakly increasing} xi_{alpha,alpha}.
SchurElement unit(int d, int n);

/// e_g(c_{alpha,beta}) = prod_i g[alpha_i, beta_i], the evaluation
/// functional of a d x d matrix.
Rational evaluate_group_element(const RationalMatrix& g, const Monomial& m);

}  // namespace rookschur
