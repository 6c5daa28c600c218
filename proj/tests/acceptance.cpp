// Acceptance suite: runs each verification criterion end to end and prints
// one PASS/FAIL line per criterion. All arithmetic is exact, so every
// comparison is equality; the only tolerances are the stated wall-clock
// bounds. Exit status is the number of failed criteria. The 4096-unknown
// duality instance at (d,n) = (3,3) only runs when --big is passed.

#include <chrono>
#include <cstring>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "rookschur/duality.hpp"
#include "rookschur/linalg.hpp"
#include "rookschur/partial_perm.hpp"
#include "rookschur/rook_algebra.hpp"
#include "rookschur/schur_algebra.hpp"
#include "rookschur/specht.hpp"
#include "rookschur/tensor_space.hpp"

using namespace rookschur;

namespace {

int failures = 0;

void report(int criterion, const std::string& label, bool pass, double seconds,
            const std::string& detail) {
  std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << criterion << " (" << label
            << "): " << detail << "  [" << seconds << " s]\n";
  if (!pass) ++failures;
}

template <typename Fn>
void run(int criterion, const std::string& label, double time_bound_s, Fn&& fn) {
  auto start = std::chrono::steady_clock::now();
  bool pass = false;
  std::string detail;
  try {
    detail = fn();
    pass = true;
  } catch (const std::exception& e) {
    detail = e.what();
  }
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (pass && time_bound_s > 0 && seconds > time_bound_s) {
    pass = false;
    detail += " (exceeded the " + std::to_string(time_bound_s) + " s bound)";
  }
  report(criterion, label, pass, seconds, detail);
}

void expect(bool condition, const std::string& message) {
  if (!condition) throw std::runtime_error(message);
}

std::string criterion_cardinality() {
  const unsigned long long expected[] = {2, 7, 34, 209, 1546};
  for (int n = 1; n <= 5; ++n) {
    auto all = enumerate_rook(n);
    expect(all.size() == expected[n - 1],
           "|R_" + std::to_string(n) + "| = " + std::to_string(all.size()));
    expect(rook_monoid_size(n) == expected[n - 1], "closed form disagrees");
  }
  return "|R_n| = 2, 7, 34, 209, 1546 for n = 1..5, enumeration and closed form";
}

std::string criterion_phi() {
  auto r3 = enumerate_rook(3);
  long long pairs = 0;
  for (const auto& a : r3) {
    for (const auto& b : r3) {
      ++pairs;
      expect(phi(compose(a, b)) == multiply(phi(a), phi(b)),
             "phi not multiplicative at " + a.str() + ", " + b.str());
    }
  }
  auto r4 = enumerate_rook(4);
  for (const auto& sigma : r4) {
    expect(phi_inverse(phi(sigma)) == MonoidAlgebraElement::of(sigma),
           "phi_inverse(phi(.)) != id at " + sigma.str());
  }
  return "phi multiplicative on " + std::to_string(pairs) +
         " pairs of R_3; phi^-1 . phi = id on all " + std::to_string(r4.size()) +
         " elements of R_4";
}

std::string criterion_induced_irreps() {
  auto r3 = enumerate_rook(3);
  long long checks = 0;
  for (int r = 0; r <= 3; ++r) {
    for (const Partition& mu : enumerate_partitions(r)) {
      SpechtRep rep(mu);
      std::vector<RationalMatrix> images;
      images.reserve(r3.size());
      for (const auto& sigma : r3) images.push_back(rho_star(rep, sigma));
      for (std::size_t i = 0; i < r3.size(); ++i) {
        for (std::size_t j = 0; j < r3.size(); ++j) {
          ++checks;
          expect(rho_star(rep, compose(r3[i], r3[j])) ==
                     linalg::matmul(images[i], images[j]),
                 "rho*_mu not multiplicative for mu = " + mu.str());
        }
      }
    }
  }
  for (int n = 1; n <= 4; ++n) {
    unsigned long long sum = 0;
    for (int r = 0; r <= n; ++r) {
      for (const Partition& mu : enumerate_partitions(r)) {
        unsigned long long dim = standard_tableaux(mu).size() * binomial(n, r);
        sum += dim * dim;
      }
    }
    expect(sum == rook_monoid_size(n),
           "sum of squared dimensions misses |R_" + std::to_string(n) + "|");
  }
  return "rho*_mu multiplicative on " + std::to_string(checks) +
         " (pair, mu) checks over R_3; dimension sums match |R_n| for n <= 4";
}

std::string criterion_schur_algebra() {
  expect(enumerate_basis(1, 1).size() == 2, "dim S(1,1) != 2");
  expect(enumerate_basis(2, 2).size() == 15, "dim S(2,2) != 15");
  expect(enumerate_basis(2, 3).size() == 35, "dim S(2,3) != 35");
  expect(enumerate_basis(3, 2).size() == 55, "dim S(3,2) != 55");

  auto basis = enumerate_basis(2, 2);
  std::vector<SchurElement> elems;
  for (const auto& xi : basis) elems.push_back(SchurElement::basis(2, 2, xi));
  long long triples = 0;
  for (const auto& a : elems) {
    for (const auto& b : elems) {
      SchurElement ab = product(a, b);
      for (const auto& c : elems) {
        ++triples;
        expect(product(ab, c) == product(a, product(b, c)), "associativity failure");
      }
    }
  }

  long long unit_checks = 0;
  for (auto [d, n] : {std::pair{2, 2}, std::pair{3, 2}}) {
    SchurElement one = unit(d, n);
    for (const auto& xi : enumerate_basis(d, n)) {
      SchurElement x = SchurElement::basis(d, n, xi);
      ++unit_checks;
      expect(product(one, x) == x && product(x, one) == x, "unit law failure");
    }
  }
  return "dims 2, 15, 35, 55; associativity on " + std::to_string(triples) +
         " triples at (2,2); unit laws on " + std::to_string(unit_checks) +
         " basis elements at (2,2) and (3,2)";
}

std::string criterion_commuting_actions() {
  long long checks = 0;
  for (auto [d, n] : {std::pair{2, 2}, std::pair{3, 2}}) {
    auto rook = enumerate_rook(n);
    for (const auto& xi : enumerate_basis(d, n)) {
      SchurElement e = SchurElement::basis(d, n, xi);
      for (long long p = 0; p < TensorIndex::basis_size(d, n); ++p) {
        TensorIndex t = TensorIndex::from_position(d, n, p);
        for (const auto& sigma : rook) {
          ++checks;
          expect(right_rook_action(left_schur_action(e, t), sigma) ==
                     left_schur_action(e, right_rook_action(t, sigma)),
                 "actions fail to commute");
        }
      }
    }
  }
  return "left and right actions commute on all " + std::to_string(checks) +
         " (xi, index, sigma) triples at (2,2) and (3,2)";
}

std::string run_duality(int d, int n, int schur_dim_expected, int rook_dim_expected) {
  DualityReport r = verify_duality(d, n, /*allow_big=*/true);
  expect(r.commutant_of_rook_dim == schur_dim_expected, "commutant of rook action wrong");
  expect(r.commutant_of_schur_dim == rook_dim_expected, "commutant of Schur action wrong");
  expect(r.schur_image_dim == schur_dim_expected, "Schur image not faithful");
  expect(r.rook_image_dim == rook_dim_expected, "rook image not faithful");
  expect(r.rook_kernel_dim == 0, "rook kernel not zero");
  expect(r.all_pass(), "report carries a failed check");
  std::ostringstream os;
  os << "(" << d << "," << n << "): commutants " << r.commutant_of_rook_dim << "/"
     << r.commutant_of_schur_dim << ", images " << r.schur_image_dim << "/"
     << r.rook_image_dim;
  return os.str();
}

std::string criterion_boundary() {
  DualityReport r = verify_duality(1, 2);
  expect(r.rook_image_dim == 6, "rook image dimension at (1,2) is not 6");
  expect(r.rook_kernel_dim == 1, "rook kernel dimension at (1,2) is not 1");
  return "at (1,2) the rook image has dimension 6 < 7, kernel dimension 1";
}

std::string criterion_place_permutations() {
  std::mt19937 rng(20240815);
  std::uniform_int_distribution<long> coord(-4, 4);
  int d = 2, n = 2;
  long long checks = 0;
  for (const PartialPerm& sigma : enumerate_symmetric(n)) {
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<std::vector<Rational>> u(n, std::vector<Rational>(d + 1));
      for (auto& vec : u) {
        for (auto& c : vec) c = Rational(coord(rng));
      }
      TensorVector original(d, n), permuted(d, n);
      for (long long p = 0; p < TensorIndex::basis_size(d, n); ++p) {
        TensorIndex t = TensorIndex::from_position(d, n, p);
        Rational c0(1), c1(1);
        for (int i = 1; i <= n; ++i) {
          c0 *= u[i - 1][t.letter(i) - 1];
          c1 *= u[sigma.image(i) - 1][t.letter(i) - 1];
        }
        original.add_term(t, c0);
        permuted.add_term(t, c1);
      }
      ++checks;
      expect(right_rook_action(original, sigma) == permuted,
             "place permutation mismatch for sigma = " + sigma.str());
    }
  }
  return "rook action restricted to S_2 equals factor permutation on " +
         std::to_string(checks) + " random decomposable tensors";
}

std::string criterion_action_consistency() {
  int d = 2, n = 2;
  long long checks = 0;
  for (const PartialPerm& sigma : enumerate_rook(n)) {
    RookAlgebraElement img = phi(sigma);
    for (long long p = 0; p < TensorIndex::basis_size(d, n); ++p) {
      TensorIndex t = TensorIndex::from_position(d, n, p);
      ++checks;
      expect(right_rook_action(t, sigma) == right_matrix_action(TensorVector::of(t), img),
             "monoid action differs from the matrix action through phi");
    }
  }
  return "t . sigma = t . phi(sigma) on all " + std::to_string(checks) +
         " (index, sigma) pairs at d = 2, n = 2";
}

}  // namespace

int main(int argc, char** argv) {
  bool big = false;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--big") == 0) big = true;
  }

  run(1, "rook monoid cardinality", 10.0, criterion_cardinality);
  run(2, "monoid algebra isomorphism", 30.0, criterion_phi);
  run(3, "induced irreducibles", 0.0, criterion_induced_irreps);
  run(4, "extended Schur algebra", 0.0, criterion_schur_algebra);
  run(5, "commuting actions", 0.0, criterion_commuting_actions);
  run(6, "double centralizer", 60.0, [&] {
    std::string out = run_duality(2, 2, 15, 7);
    out += "; " + run_duality(3, 2, 55, 7);
    return out;
  });
  if (big) {
    run(6, "double centralizer, big instance", 0.0,
        [&] { return run_duality(3, 3, 220, 34); });
  } else {
    std::cout << "SKIP  criterion 6 big instance (3,3): pass --big to run it\n";
  }
  run(7, "faithfulness boundary", 0.0, criterion_boundary);
  run(8, "place permutations", 0.0, criterion_place_permutations);
  run(9, "action consistency through phi", 0.0, criterion_action_consistency);

  if (failures == 0) {
    std::cout << "All acceptance criteria passed.\n";
  } else {
    std::cout << failures << " acceptance criteria FAILED.\n";
  }
  return failures;
}
