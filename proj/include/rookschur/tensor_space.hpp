#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "rookschur/partial_perm.hpp"
#include "rookschur/rook_algebra.hpp"
#include "rookschur/schur_algebra.hpp"

namespace rookschur {

/// Basis vector of the n-fold tensor power of U = V + Q e_infinity
/// (dim U = d+1): a length-n word over {1..d, infinity}, infinity stored as
/// d+1 so plain integer order realizes 1 < 2 < ... < d < infinity. The
/// support is the set of non-infinity positions.
class TensorIndex {
public:
  TensorIndex(int d, int n, std::vector<int> word);

  static TensorIndex from_position(int d, int n, long long pos);
  /// Parses the comma format with "inf" for infinity, e.g. "6,inf,2,inf,2".
  static TensorIndex parse(int d, int n, const std::string& s);

  int d() const { return d_; }
  int n() const { return n_; }
  int letter(int i) const { return word_[i - 1]; }  // 1-based position
  bool is_infinity(int i) const { return word_[i - 1] == d_ + 1; }

  /// Lexicographic position within the (d+1)^n basis.
  long long position() const;
  static long long basis_size(int d, int n);

  Subset support() const;
  /// The non-infinity letters in increasing position order: the T_X
  /// isomorphism onto a word of length |support|.
  Word support_word() const;

  std::string str() const;

  auto operator<=>(const TensorIndex&) const = default;

private:
  int d_;
  int n_;
  std::vector<int> word_;
};

/// Sparse vector in the tensor basis.
class TensorVector {
public:
  TensorVector(int d, int n) : d_(d), n_(n) {}
  static TensorVector of(const TensorIndex& t);

  int d() const { return d_; }
  int n() const { return n_; }
  const std::map<TensorIndex, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const TensorIndex& t, const Rational& c);
  TensorVector& operator+=(const TensorVector& o);
  TensorVector& operator*=(const Rational& c);

  bool operator==(const TensorVector& o) const = default;

private:
  int d_;
  int n_;
  std::map<TensorIndex, Rational> terms_;
};

/// Left action of the extended Schur algebra:
/// xi e_beta = sum_{alpha in Gamma_X(d)} xi(c_{alpha,beta}) e_alpha, with X
/// the support of the index; the support never changes.
TensorVector left_schur_action(const SchurElement& xi, const TensorIndex& t);
TensorVector left_schur_action(const SchurElement& xi, const TensorVector& v);

/// Right action of the rook monoid: e_alpha . sigma = e_{alpha sigma} when
/// support(alpha) is contained in R(sigma), else zero.
TensorVector right_rook_action(const TensorIndex& t, const PartialPerm& sigma);
TensorVector right_rook_action(const TensorVector& v, const PartialPerm& sigma);

/// Right action of the block matrix algebra:
/// e_alpha . (sigma E_{I,J}) = delta_{support,I} e_{alpha iota_I sigma iota_J^-}.
TensorVector right_matrix_action(const TensorIndex& t, const BasisTerm& b);
TensorVector right_matrix_action(const TensorVector& v, const RookAlgebraElement& x);

Word t_x_isomorphism(const TensorIndex& t);

/// Matrix of the left action in the tensor basis: column t holds
/// left_schur_action(xi, t). Size (d+1)^n, bounded by 4096 basis vectors.
RationalMatrix action_matrix_left(const SchurElement& xi);

/// Matrix of the right action in the same column convention (column t holds
/// t . sigma), so matrix(sigma tau) = matmul(matrix(tau), matrix(sigma)).
RationalMatrix action_matrix_right(const PartialPerm& sigma, int d);

}  // namespace rookschur
