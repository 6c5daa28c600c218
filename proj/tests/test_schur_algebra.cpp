#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "rookschur/linalg.hpp"
#include "rookschur/schur_algebra.hpp"

using namespace rookschur;

namespace {

SchurElement basis_of(int d, int n, const XiBasisElement& xi) {
  return SchurElement::basis(d, n, xi);
}

}  // namespace

TEST_CASE("basis enumeration dimensions") {
  CHECK(enumerate_basis(1, 1).size() == 2);
  CHECK(enumerate_basis(2, 2).size() == 15);
  CHECK(enumerate_basis(3, 2).size() == 55);
  CHECK(schur_dimension(2, 3) == 35);

  for (int d = 1; d <= 3; ++d) {
    for (int n = 1; n <= 3; ++n) {
      auto basis = enumerate_basis(d, n);
      REQUIRE(basis.size() == schur_dimension(d, n));
      unsigned long long by_degree = 0;
      for (int r = 0; r <= n; ++r) by_degree += binomial(d * d + r - 1, r);
      REQUIRE(basis.size() == by_degree);
    }
  }
  CHECK_THROWS_AS(enumerate_basis(10, 10, 100), resource_error);
}

TEST_CASE("dual-basis evaluation") {
  XiBasisElement xi(Word(2, {1}), Word(2, {1}));
  CHECK(evaluate(xi, Monomial(Word(2, {1}), Word(2, {1}))) == Rational(1));
  CHECK(evaluate(xi, Monomial(Word(2, {1, 1}), Word(2, {1, 1}))) == Rational(0));

  XiBasisElement swap(Word(2, {1, 2}), Word(2, {2, 1}));
  CHECK(evaluate(swap, Monomial(Word(2, {2, 1}), Word(2, {1, 2}))) == Rational(1));

  CHECK_THROWS_AS(evaluate(xi, Monomial(Word(3, {1}), Word(3, {1}))), std::invalid_argument);
}

TEST_CASE("products of degree-1 basis elements are matrix units") {
  int d = 2, n = 1;
  auto e = [&](int a, int b) {
    return basis_of(d, n, XiBasisElement(Word(d, {a}), Word(d, {b})));
  };
  CHECK(product(e(1, 1), e(2, 1)).is_zero());
  CHECK(product(e(2, 1), e(1, 1)) == e(2, 1));
  CHECK(product(e(1, 2), e(2, 1)) == e(1, 1));
  CHECK(product(e(2, 1), e(1, 2)) == e(2, 2));
}

TEST_CASE("blocks of different degree multiply to zero") {
  int d = 2, n = 2;
  SchurElement deg1 = basis_of(d, n, XiBasisElement(Word(d, {1}), Word(d, {1})));
  SchurElement deg2 = basis_of(d, n, XiBasisElement(Word(d, {1, 1}), Word(d, {1, 1})));
  CHECK(product(deg1, deg2).is_zero());
  CHECK(product(deg2, deg1).is_zero());

  for (const auto& a : enumerate_basis(d, n)) {
    for (const auto& b : enumerate_basis(d, n)) {
      if (a.degree() == b.degree()) continue;
      REQUIRE(product(basis_of(d, n, a), basis_of(d, n, b)).is_zero());
    }
  }
}

TEST_CASE("associativity, exhaustive at (2,2)") {
  int d = 2, n = 2;
  auto basis = enumerate_basis(d, n);
  std::vector<SchurElement> elems;
  for (const auto& xi : basis) elems.push_back(basis_of(d, n, xi));
  for (const auto& a : elems) {
    for (const auto& b : elems) {
      SchurElement ab = product(a, b);
      for (const auto& c : elems) {
        REQUIRE(product(ab, c) == product(a, product(b, c)));
      }
    }
  }
}

TEST_CASE("associativity, randomized at (2,3) and (3,2)") {
  std::mt19937 rng(5);
  for (auto [d, n] : {std::pair{2, 3}, std::pair{3, 2}}) {
    auto basis = enumerate_basis(d, n);
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    for (int trial = 0; trial < 150; ++trial) {
      SchurElement a = basis_of(d, n, basis[pick(rng)]);
      SchurElement b = basis_of(d, n, basis[pick(rng)]);
      SchurElement c = basis_of(d, n, basis[pick(rng)]);
      REQUIRE(product(product(a, b), c) == product(a, product(b, c)));
    }
  }
}

TEST_CASE("unit element") {
  SchurElement u11 = unit(1, 1);
  SchurElement expected(1, 1);
  expected.add_term(XiBasisElement(Word(1, {}), Word(1, {})), Rational(1));
  expected.add_term(XiBasisElement(Word(1, {1}), Word(1, {1})), Rational(1));
  CHECK(u11 == expected);

  for (auto [d, n] : {std::pair{2, 2}, std::pair{3, 2}, std::pair{3, 3}}) {
    SchurElement one = unit(d, n);
    for (const auto& xi : enumerate_basis(d, n)) {
      SchurElement x = basis_of(d, n, xi);
      REQUIRE(product(one, x) == x);
      REQUIRE(product(x, one) == x);
    }
  }

  // The unit evaluates a monomial at the identity matrix.
  SchurElement u = unit(2, 2);
  CHECK(evaluate(u, Monomial(Word(2, {1, 2}), Word(2, {1, 2}))) == Rational(1));
  CHECK(evaluate(u, Monomial(Word(2, {1, 2}), Word(2, {2, 1}))) == Rational(0));
  CHECK(evaluate(u, Monomial(Word(2, {1, 1}), Word(2, {1, 2}))) == Rational(0));
}

TEST_CASE("evaluation functionals of group elements") {
  RationalMatrix g = RationalMatrix::from_rows(
      {{Rational(1), Rational(2)}, {Rational(3), Rational(4)}});

  CHECK(evaluate_group_element(g, Monomial(Word(2, {}), Word(2, {}))) == Rational(1));
  CHECK(evaluate_group_element(g, Monomial(Word(2, {1, 2}), Word(2, {2, 1}))) == Rational(6));

  RationalMatrix id = RationalMatrix::identity(2);
  CHECK(evaluate_group_element(id, Monomial(Word(2, {1, 2}), Word(2, {1, 2}))) == Rational(1));
  CHECK(evaluate_group_element(id, Monomial(Word(2, {1, 2}), Word(2, {2, 1}))) == Rational(0));

  CHECK_THROWS_AS(evaluate_group_element(RationalMatrix(3, 3),
                                         Monomial(Word(2, {1}), Word(2, {1}))),
                  std::invalid_argument);
}

TEST_CASE("evaluation functionals are multiplicative") {
  std::mt19937 rng(77);
  std::uniform_int_distribution<long> entry(-3, 3);
  int d = 2;
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<std::vector<Rational>> ga(d, std::vector<Rational>(d));
    std::vector<std::vector<Rational>> ha(d, std::vector<Rational>(d));
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) {
        ga[i][j] = Rational(entry(rng));
        ha[i][j] = Rational(entry(rng));
      }
    }
    RationalMatrix g = RationalMatrix::from_rows(ga);
    RationalMatrix h = RationalMatrix::from_rows(ha);
    RationalMatrix gh = linalg::matmul(g, h);

    auto words = enumerate_words(2, d);
    for (const Word& alpha : words) {
      for (const Word& beta : words) {
        Rational sum(0);
        for (const Word& gamma : words) {
          sum += evaluate_group_element(g, Monomial(alpha, gamma)) *
                 evaluate_group_element(h, Monomial(gamma, beta));
        }
        REQUIRE(sum == evaluate_group_element(gh, Monomial(alpha, beta)));
      }
    }
  }
}

TEST_CASE("xi serialization round trip") {
  XiBasisElement xi(Word(3, {2, 1}), Word(3, {1, 3}));
  CHECK(xi.str() == "2; alpha=1,2; beta=3,1");
  CHECK(XiBasisElement::parse(3, xi.str()) == xi);
  XiBasisElement empty(Word(2, {}), Word(2, {}));
  CHECK(empty.str() == "0; alpha=; beta=");
  CHECK(XiBasisElement::parse(2, empty.str()) == empty);
}
