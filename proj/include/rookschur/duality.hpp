#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rookschur/combinatorics.hpp"
#include "rookschur/partial_perm.hpp"

namespace rookschur {

struct DualityCheck {
  std::string name;
  long long expected = 0;
  long long actual = 0;
  bool pass = false;
};

/// Outcome of the double-centralizer verification on the n-fold tensor
/// power of U (dim d+1): span dimensions of both action images, commutant
/// dimensions of each against the other, and the rook-side kernel defect.
/// Every named check compares against the d >= n semisimple-theory value,
/// so for d < n the faithfulness checks come out failed.
struct DualityReport {
  int d = 0;
  int n = 0;
  unsigned long long dim_tensor_end = 0;  // (d+1)^(2n)
  int schur_image_dim = 0;
  int rook_image_dim = 0;
  int commutant_of_rook_dim = 0;
  int commutant_of_schur_dim = 0;
  int rook_kernel_dim = 0;
  std::vector<DualityCheck> checks;

  bool all_pass() const;
};

/// Runs the four span/commutant computations and populates the checks
///   commutant_of_rook_dim  == C(d^2+n, n)
///   commutant_of_schur_dim == |R_n|
///   schur_image_dim        == C(d^2+n, n)
///   rook_image_dim         == |R_n|
///   rook_kernel_dim        == 0
/// The 4096-unknown instances ((d+1)^n > 32) run only with allow_big.
DualityReport verify_duality(int d, int n, bool allow_big = false);

/// Adjacent transpositions plus the rank-(n-1) partial identity on
/// {1..n-1}; together with the identity they generate all of R_n.
std::vector<PartialPerm> rook_generators(int n);

/// Submonoid generated by gens (the identity is always included).
std::vector<PartialPerm> monoid_closure(const std::vector<PartialPerm>& gens);

/// Multiplicity of each induced irreducible (r, mu) in the tensor space as
/// a right Q R_n-module, solved exactly from the character linear system.
std::map<std::pair<int, Partition>, long long> isotypic_multiplicities(int d, int n);

}  // namespace rookschur
