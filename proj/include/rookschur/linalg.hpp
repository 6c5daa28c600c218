#pragma once

#include <vector>

#include "rookschur/matrix.hpp"

namespace rookschur {

/// Thrown when an operation would exceed the configured desk-scale bounds.
class resource_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

namespace linalg {

/// Canonical reduced row echelon form over Q. The result is unique for a
/// given row space, so it is independent of row order, pivoting strategy
/// and thread count.
struct Echelon {
  int cols = 0;
  int rank = 0;
  std::vector<int> pivot_cols;   // ascending
  std::vector<SparseRow> rows;   // one monic row per pivot, fully reduced
};

Echelon reduced_echelon(std::vector<SparseRow> rows, int cols);

/// Nullspace basis read off an echelon form: one vector per free column,
/// free columns in ascending order, entry 1 at the free column.
std::vector<std::vector<Rational>> nullspace_from_echelon(const Echelon& e);

/// Exact product; dimension mismatch -> std::invalid_argument.
RationalMatrix matmul(const RationalMatrix& a, const RationalMatrix& b);

/// Exact rank over Q via fraction-free Bareiss elimination with partial
/// pivoting on the smallest-bit-length pivot.
int rank(const RationalMatrix& a);

/// Basis of the right kernel {v : A v = 0}; size = cols - rank.
std::vector<std::vector<Rational>> nullspace_basis(const RationalMatrix& a);

/// Basis of {T : T G = G T for all G in gens}, computed as the nullspace of
/// the stacked commutator system in size^2 unknowns. With an empty
/// generator list the ambient size must be passed and the full matrix-unit
/// basis of End is returned.
std::vector<RationalMatrix> commutant_basis(const std::vector<RationalMatrix>& gens,
                                            int size = -1);

/// Rank of the matrix whose rows are the row-major flattenings of the
/// inputs; size mismatch -> std::invalid_argument.
int span_dimension(const std::vector<RationalMatrix>& mats);

std::vector<Rational> apply(const RationalMatrix& a, const std::vector<Rational>& v);

/// Serial textbook implementations, kept independent of the OpenMP kernels
/// above and used as oracles in the test and benchmark suites.
namespace reference {

RationalMatrix matmul(const RationalMatrix& a, const RationalMatrix& b);
int rank(const RationalMatrix& a);
std::vector<std::vector<Rational>> nullspace_basis(const RationalMatrix& a);

}  // namespace reference

}  // namespace linalg
}  // namespace rookschur
