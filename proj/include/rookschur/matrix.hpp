#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "rookschur/rational.hpp"

namespace rookschur {

/// One matrix row as column-sorted (index, value) pairs; stored values are
/// nonzero.
using SparseRow = std::vector<std::pair<int, Rational>>;

/// Matrix over the rationals with sparse row storage. Dimensions are fixed
/// at construction; reads of absent entries return zero.
class RationalMatrix {
public:
  RationalMatrix() = default;
  RationalMatrix(int rows, int cols);

  static RationalMatrix identity(int n);
  static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational at(int i, int j) const;
  void set(int i, int j, Rational v);
  void add_at(int i, int j, const Rational& v);

  const SparseRow& row(int i) const { return data_[i]; }
  /// Replaces row i; entries must be column-sorted and nonzero.
  void set_row(int i, SparseRow r);

  std::size_t nonzero_count() const;
  bool is_zero() const;

  std::vector<Rational> dense_row(int i) const;
  std::vector<std::vector<Rational>> to_dense() const;

  /// Row-major flattening into a single sparse row of length rows*cols.
  SparseRow flatten() const;

  RationalMatrix transpose() const;

  /// Row-major array of "p/q" strings, the wire format for matrices.
  std::vector<std::vector<std::string>> to_strings() const;

  bool operator==(const RationalMatrix& o) const;
  bool operator!=(const RationalMatrix& o) const { return !(*this == o); }

private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<SparseRow> data_;
};

}  // namespace rookschur
