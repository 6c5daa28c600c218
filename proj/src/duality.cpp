#include "rookschur/duality.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "rookschur/linalg.hpp"
#include "rookschur/rook_algebra.hpp"
#include "rookschur/schur_algebra.hpp"
#include "rookschur/specht.hpp"
#include "rookschur/tensor_space.hpp"

namespace rookschur {

bool DualityReport::all_pass() const {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

std::vector<PartialPerm> rook_generators(int n) {
  if (n < 1) throw std::invalid_argument("rook_generators: need n >= 1");
  std::vector<PartialPerm> gens;
  for (int i = 1; i < n; ++i) {
    std::vector<int> one_line;
    for (int k = 1; k <= n; ++k) one_line.push_back(k);
    std::swap(one_line[i - 1], one_line[i]);
    gens.push_back(PartialPerm::from_images(n, std::move(one_line)));
  }
  std::vector<int> head;
  for (int k = 1; k < n; ++k) head.push_back(k);
  gens.push_back(idempotent(Subset(n, std::move(head))));
  return gens;
}

std::vector<PartialPerm> monoid_closure(const std::vector<PartialPerm>& gens) {
  if (gens.empty()) throw std::invalid_argument("monoid_closure: empty generator list");
  int n = gens.front().n();
  std::set<PartialPerm> seen;
  std::vector<PartialPerm> frontier{PartialPerm::identity(n)};
  seen.insert(frontier.front());
  while (!frontier.empty()) {
    std::vector<PartialPerm> next;
    for (const PartialPerm& x : frontier) {
      for (const PartialPerm& g : gens) {
        PartialPerm y = compose(x, g);
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

DualityReport verify_duality(int d, int n, bool allow_big) {
  long long m = TensorIndex::basis_size(d, n);
  if (m > 64)
    throw resource_error("verify_duality: (d+1)^n > 64 is past the desk-scale bound");
  if (m > 32 && !allow_big)
    throw resource_error("verify_duality: (d+1)^n > 32 needs the big flag");

  DualityReport report;
  report.d = d;
  report.n = n;
  report.dim_tensor_end = static_cast<unsigned long long>(m) * static_cast<unsigned long long>(m);

  std::vector<RationalMatrix> schur_mats;
  for (const XiBasisElement& xi : enumerate_basis(d, n)) {
    schur_mats.push_back(action_matrix_left(SchurElement::basis(d, n, xi)));
  }

  std::vector<RationalMatrix> rook_mats;
  for (const PartialPerm& sigma : enumerate_rook(n)) {
    rook_mats.push_back(action_matrix_right(sigma, d));
  }

  std::vector<RationalMatrix> rook_gen_mats;
  for (const PartialPerm& sigma : rook_generators(n)) {
    rook_gen_mats.push_back(action_matrix_right(sigma, d));
  }

  report.schur_image_dim = linalg::span_dimension(schur_mats);
  report.rook_image_dim = linalg::span_dimension(rook_mats);
  report.commutant_of_rook_dim =
      static_cast<int>(linalg::commutant_basis(rook_gen_mats).size());
  report.commutant_of_schur_dim =
      static_cast<int>(linalg::commutant_basis(schur_mats).size());
  report.rook_kernel_dim =
      static_cast<int>(rook_algebra_dimension(n)) - report.rook_image_dim;

  long long schur_dim = static_cast<long long>(schur_dimension(d, n));
  long long rook_dim = static_cast<long long>(rook_algebra_dimension(n));
  auto check = [&](const std::string& name, long long expected, long long actual) {
    report.checks.push_back({name, expected, actual, expected == actual});
  };
  check("commutant_of_rook_dim", schur_dim, report.commutant_of_rook_dim);
  check("commutant_of_schur_dim", rook_dim, report.commutant_of_schur_dim);
  check("schur_image_dim", schur_dim, report.schur_image_dim);
  check("rook_image_dim", rook_dim, report.rook_image_dim);
  check("rook_kernel_dim", 0, report.rook_kernel_dim);
  return report;
}

std::map<std::pair<int, Partition>, long long> isotypic_multiplicities(int d, int n) {
  long long m = TensorIndex::basis_size(d, n);
  if (m > 64) throw resource_error("isotypic_multiplicities: (d+1)^n > 64");

  // One unknown per induced irreducible (r, mu); one equation per monoid
  // element sigma: sum over (r, mu) of trace(rho*_mu(sigma)) m_{r,mu}
  // equals the trace of the right action of sigma.
  std::vector<std::pair<int, Partition>> labels;
  std::vector<SpechtRep> reps;
  for (int r = 0; r <= n; ++r) {
    for (const Partition& mu : enumerate_partitions(r)) {
      labels.emplace_back(r, mu);
      reps.emplace_back(mu);
    }
  }

  auto trace = [](const RationalMatrix& a) {
    Rational t(0);
    for (int i = 0; i < a.rows(); ++i) {
      for (const auto& [j, v] : a.row(i)) {
        if (j == i) t += v;
      }
    }
    return t;
  };

  auto elements = enumerate_rook(n);
  int rows = static_cast<int>(elements.size());
  int cols = static_cast<int>(labels.size());
  RationalMatrix system(rows, cols + 1);  // [A | b]
  for (int i = 0; i < rows; ++i) {
    for (int k = 0; k < cols; ++k) {
      system.set(i, k, trace(rho_star(reps[k], elements[i])));
    }
    system.set(i, cols, trace(action_matrix_right(elements[i], d)));
  }

  // The irreducible characters are linearly independent, so the reduced
  // form has a pivot in every unknown column and the solution is unique.
  std::vector<SparseRow> sys_rows;
  for (int i = 0; i < rows; ++i) sys_rows.push_back(system.row(i));
  auto ech = linalg::reduced_echelon(std::move(sys_rows), cols + 1);
  if (ech.rank != cols) throw std::logic_error("isotypic_multiplicities: singular system");

  std::map<std::pair<int, Partition>, long long> out;
  for (int k = 0; k < ech.rank; ++k) {
    int pivot = ech.pivot_cols[k];
    if (pivot >= cols) throw std::logic_error("isotypic_multiplicities: inconsistent system");
    Rational value(0);
    for (const auto& [j, v] : ech.rows[k]) {
      if (j == cols) value = v;
    }
    if (value.den() != 1 || value.sign() < 0)
      throw std::logic_error("isotypic_multiplicities: non-integral multiplicity");
    out[labels[pivot]] = value.num().get_si();
  }
  return out;
}

}  // namespace rookschur
