#pragma once

#include <map>
#include <vector>

#include "rookschur/combinatorics.hpp"
#include "rookschur/matrix.hpp"
#include "rookschur/partial_perm.hpp"

namespace rookschur {

/// Irreducible matrix representation of S_r over Q for a partition mu of r,
/// realized on the span of standard polytabloids inside the tabloid module
/// (Young's natural representation; all matrices are integral). Matrices
/// for the whole group are materialized from adjacent-transposition images,
/// so every lookup after construction is read-only and thread-safe.
class SpechtRep {
public:
  /// |mu| <= 6; larger degrees raise resource_error.
  explicit SpechtRep(Partition mu);

  const Partition& shape() const { return mu_; }
  int degree() const { return r_; }
  int dim() const { return dim_; }

  /// Image of a total element of R_r; throws std::invalid_argument for
  /// non-permutations or ambient mismatch.
  const RationalMatrix& matrix(const PartialPerm& sigma) const;

  const std::map<PartialPerm, RationalMatrix>& matrices() const { return matrices_; }

  Rational character(const PartialPerm& sigma) const;

private:
  Partition mu_;
  int r_ = 0;
  int dim_ = 0;
  std::map<PartialPerm, RationalMatrix> matrices_;
};

/// True iff the commutant of the image matrices is one-dimensional.
bool verify_irreducible(const std::vector<RationalMatrix>& images);
bool verify_irreducible(const SpechtRep& rep);

}  // namespace rookschur
