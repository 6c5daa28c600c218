#include "rookschur/rook_algebra.hpp"

#include <stdexcept>

#include "rookschur/linalg.hpp"

namespace rookschur {

BasisTerm::BasisTerm(int ambient, PartialPerm s, Subset i, Subset j)
    : n(ambient), degree(s.n()), I(std::move(i)), J(std::move(j)), sigma(std::move(s)) {
  if (!sigma.is_total()) throw std::invalid_argument("BasisTerm: sigma must be total");
  if (I.n != n || J.n != n) throw std::invalid_argument("BasisTerm: subset ambient mismatch");
  if (I.size() != degree || J.size() != degree)
    throw std::invalid_argument("BasisTerm: |I| and |J| must equal the degree");
}

std::string BasisTerm::str() const {
  return std::to_string(degree) + "; sigma=" + sigma.str() + "; I=" + I.str() +
         "; J=" + J.str();
}

void RookAlgebraElement::add_term(const BasisTerm& t, const Rational& c) {
  if (t.n != n_) throw std::invalid_argument("RookAlgebraElement: ambient mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(t, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

RookAlgebraElement& RookAlgebraElement::operator+=(const RookAlgebraElement& o) {
  if (o.n_ != n_) throw std::invalid_argument("RookAlgebraElement: ambient mismatch");
  for (const auto& [t, c] : o.terms_) add_term(t, c);
  return *this;
}

RookAlgebraElement& RookAlgebraElement::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
  } else {
    for (auto& [t, v] : terms_) v *= c;
  }
  return *this;
}

MonoidAlgebraElement MonoidAlgebraElement::of(const PartialPerm& sigma) {
  MonoidAlgebraElement x(sigma.n());
  x.add_term(sigma, Rational(1));
  return x;
}

void MonoidAlgebraElement::add_term(const PartialPerm& sigma, const Rational& c) {
  if (sigma.n() != n_) throw std::invalid_argument("MonoidAlgebraElement: ambient mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(sigma, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MonoidAlgebraElement& MonoidAlgebraElement::operator+=(const MonoidAlgebraElement& o) {
  if (o.n_ != n_) throw std::invalid_argument("MonoidAlgebraElement: ambient mismatch");
  for (const auto& [t, c] : o.terms_) add_term(t, c);
  return *this;
}

RookAlgebraElement multiply(const RookAlgebraElement& x, const RookAlgebraElement& y) {
  if (x.n() != y.n()) throw std::invalid_argument("multiply: ambient mismatch");
  RookAlgebraElement out(x.n());
  for (const auto& [s, cs] : x.terms()) {
    for (const auto& [t, ct] : y.terms()) {
      if (s.degree != t.degree || s.J != t.I) continue;
      out.add_term(BasisTerm(x.n(), compose(s.sigma, t.sigma), s.I, t.J), cs * ct);
    }
  }
  return out;
}

RookAlgebraElement rook_algebra_unit(int n) {
  RookAlgebraElement one(n);
  for (int r = 0; r <= n; ++r) {
    for (const Subset& y : enumerate_subsets(n, r)) {
      one.add_term(BasisTerm(n, PartialPerm::identity(r), y, y), Rational(1));
    }
  }
  return one;
}

RookAlgebraElement phi(const PartialPerm& sigma) {
  int n = sigma.n();
  RookAlgebraElement out(n);
  Subset dom = sigma.domain();
  for (int r = 0; r <= dom.size(); ++r) {
    for (const Subset& sub : enumerate_subsets(dom.size(), r)) {
      std::vector<int> xs, ys;
      xs.reserve(r);
      ys.reserve(r);
      for (int k : sub.elements) xs.push_back(dom.elements[k - 1]);
      for (int v : xs) ys.push_back(sigma.image(v));
      std::sort(ys.begin(), ys.end());
      Subset x(n, std::move(xs));
      PartialPerm restricted = compose(sigma, idempotent(x));
      out.add_term(BasisTerm(n, p_map(restricted), Subset(n, std::move(ys)), x), Rational(1));
    }
  }
  return out;
}

RookAlgebraElement phi(const MonoidAlgebraElement& x) {
  RookAlgebraElement out(x.n());
  for (const auto& [sigma, c] : x.terms()) {
    RookAlgebraElement img = phi(sigma);
    img *= c;
    out += img;
  }
  return out;
}

MonoidAlgebraElement phi_inverse(const BasisTerm& t) {
  MonoidAlgebraElement out(t.n);
  PartialPerm core =
      compose(iota(t.I), compose(embed(t.sigma, t.n), inverse(iota(t.J))));
  for (int r = 0; r <= t.degree; ++r) {
    Rational sign((t.degree - r) % 2 == 0 ? 1 : -1);
    for (const Subset& sub : enumerate_subsets(t.degree, r)) {
      std::vector<int> xs;
      xs.reserve(r);
      for (int k : sub.elements) xs.push_back(t.J.elements[k - 1]);
      out.add_term(compose(core, idempotent(Subset(t.n, std::move(xs)))), sign);
    }
  }
  return out;
}

MonoidAlgebraElement phi_inverse(const RookAlgebraElement& x) {
  MonoidAlgebraElement out(x.n());
  for (const auto& [t, c] : x.terms()) {
    MonoidAlgebraElement part = phi_inverse(t);
    for (const auto& [sigma, v] : part.terms()) out.add_term(sigma, c * v);
  }
  return out;
}

std::vector<BasisTerm> enumerate_basis_terms(int n) {
  std::vector<BasisTerm> out;
  out.reserve(rook_algebra_dimension(n));
  for (int r = 0; r <= n; ++r) {
    for (const Subset& i : enumerate_subsets(n, r)) {
      for (const Subset& j : enumerate_subsets(n, r)) {
        for (const PartialPerm& sigma : enumerate_symmetric(r)) {
          out.emplace_back(n, sigma, i, j);
        }
      }
    }
  }
  return out;
}

RationalMatrix rho_star(const SpechtRep& rep, const PartialPerm& sigma) {
  int n = sigma.n();
  int r = rep.degree();
  if (r > n) throw std::invalid_argument("rho_star: degree exceeds ambient size");
  int f = rep.dim();
  int blocks = static_cast<int>(binomial(n, r));
  RationalMatrix out(f * blocks, f * blocks);
  for (const Subset& x : enumerate_subsets(n, r)) {
    PartialPerm restricted = compose(sigma, idempotent(x));
    if (restricted.rank() != r) continue;  // needs X subseteq D(sigma)
    int col_block = subset_lex_rank(x);
    int row_block = subset_lex_rank(restricted.range());
    const RationalMatrix& block = rep.matrix(p_map(restricted));
    for (int i = 0; i < f; ++i) {
      for (const auto& [j, v] : block.row(i)) {
        out.set(row_block * f + i, col_block * f + j, v);
      }
    }
  }
  return out;
}

unsigned long long rook_algebra_dimension(int n) { return rook_monoid_size(n); }

}  // namespace rookschur
