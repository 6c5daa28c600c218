// Benchmark of the OpenMP kernels on the workloads that dominate the
// verification runs: exact matmul, Bareiss rank, echelon/nullspace and
// commutant solves. Each kernel is timed pinned to one thread and again
// with the full thread count, and its output is cross-checked against the
// serial reference implementation.

#include <omp.h>

#include <iomanip>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "rookschur/duality.hpp"
#include "rookschur/linalg.hpp"
#include "rookschur/schur_algebra.hpp"
#include "rookschur/tensor_space.hpp"

using namespace rookschur;

namespace {

RationalMatrix random_matrix(std::mt19937& rng, int rows, int cols) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 5);
  std::vector<std::vector<Rational>> q(rows, std::vector<Rational>(cols));
  for (auto& row : q) {
    for (auto& v : row) v = Rational(num(rng), den(rng));
  }
  return RationalMatrix::from_rows(q);
}

template <typename Fn>
double timed(Fn&& fn) {
  double start = omp_get_wtime();
  fn();
  return omp_get_wtime() - start;
}

template <typename Fn>
void bench(const std::string& name, Fn&& kernel, bool matches_reference) {
  int max_threads = omp_get_max_threads();
  omp_set_num_threads(1);
  double serial = timed(kernel);
  omp_set_num_threads(max_threads);
  double parallel = timed(kernel);
  std::cout << std::left << std::setw(36) << name << std::right << std::fixed
            << std::setprecision(3) << std::setw(8) << serial << " s" << std::setw(8)
            << parallel << " s   x" << std::setprecision(2) << (serial / parallel)
            << (matches_reference ? "" : "   REFERENCE MISMATCH") << "\n";
}

}  // namespace

int main() {
  std::cout << "threads: " << omp_get_max_threads() << "\n\n";
  std::cout << std::left << std::setw(36) << "kernel" << std::right << std::setw(10)
            << "1 thr" << std::setw(10) << "all thr" << "   speedup\n";

  std::mt19937 rng(12345);

  {
    RationalMatrix a = random_matrix(rng, 90, 90);
    RationalMatrix b = random_matrix(rng, 90, 90);
    bool ok = linalg::matmul(a, b) == linalg::reference::matmul(a, b);
    bench("matmul, 90x90 dense rational", [&] { linalg::matmul(a, b); }, ok);
  }

  {
    RationalMatrix a = random_matrix(rng, 60, 60);
    bool ok = linalg::rank(a) == linalg::reference::rank(a);
    bench("Bareiss rank, 60x60 dense rational", [&] { linalg::rank(a); }, ok);
  }

  {
    RationalMatrix a = random_matrix(rng, 40, 80);
    bool ok = linalg::nullspace_basis(a) == linalg::reference::nullspace_basis(a);
    bench("nullspace, 40x80 dense rational", [&] { linalg::nullspace_basis(a); }, ok);
  }

  {
    // The rook-side commutant from the (3,2) duality report: a sparse
    // stacked system in 256 unknowns.
    std::vector<RationalMatrix> gens;
    for (const PartialPerm& sigma : rook_generators(2)) {
      gens.push_back(action_matrix_right(sigma, 3));
    }
    bench("commutant, (3,2) rook side", [&] { linalg::commutant_basis(gens); },
          linalg::commutant_basis(gens).size() == 55);
  }

  {
    std::vector<RationalMatrix> mats;
    for (const XiBasisElement& xi : enumerate_basis(3, 2)) {
      mats.push_back(action_matrix_left(SchurElement::basis(3, 2, xi)));
    }
    bench("span dimension, (3,2) Schur side", [&] { linalg::span_dimension(mats); },
          linalg::span_dimension(mats) == 55);
  }

  {
    bench("action matrices, all of R_3 at d=2",
          [&] {
            for (const PartialPerm& sigma : enumerate_rook(3)) {
              action_matrix_right(sigma, 2);
            }
          },
          true);
  }

  return 0;
}
