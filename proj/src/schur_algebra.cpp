#include "rookschur/schur_algebra.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "rookschur/linalg.hpp"

namespace rookschur {

namespace {

Word parse_word(int d, const std::string& body) {
  std::vector<int> letters;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (!item.empty()) letters.push_back(std::stoi(item));
  }
  return Word(d, std::move(letters));
}

}  // namespace

std::string XiBasisElement::str() const {
  return std::to_string(degree()) + "; alpha=" + pair.first_word().str() +
         "; beta=" + pair.second_word().str();
}

XiBasisElement XiBasisElement::parse(int d, const std::string& s) {
  std::stringstream ss(s);
  std::string deg_part, alpha_part, beta_part;
  if (!std::getline(ss, deg_part, ';') || !std::getline(ss, alpha_part, ';') ||
      !std::getline(ss, beta_part)) {
    throw std::invalid_argument("XiBasisElement::parse: expected \"r; alpha=...; beta=...\"");
  }
  auto strip_label = [](std::string part, const std::string& label) {
    auto pos = part.find(label);
    if (pos == std::string::npos)
      throw std::invalid_argument("XiBasisElement::parse: missing \"" + label + "\"");
    return part.substr(pos + label.size());
  };
  int degree = std::stoi(deg_part);
  Word alpha = parse_word(d, strip_label(alpha_part, "alpha="));
  Word beta = parse_word(d, strip_label(beta_part, "beta="));
  if (alpha.length() != degree || beta.length() != degree)
    throw std::invalid_argument("XiBasisElement::parse: word length differs from degree");
  return XiBasisElement(alpha, beta);
}

SchurElement::SchurElement(int d, int n) : d_(d), n_(n) {
  if (d < 1 || n < 1) throw std::invalid_argument("SchurElement: need d, n >= 1");
}

SchurElement SchurElement::basis(int d, int n, const XiBasisElement& xi) {
  SchurElement out(d, n);
  out.add_term(xi, Rational(1));
  return out;
}

void SchurElement::add_term(const XiBasisElement& xi, const Rational& c) {
  if (xi.alphabet() != d_) throw std::invalid_argument("SchurElement: alphabet mismatch");
  if (xi.degree() > n_) throw std::invalid_argument("SchurElement: degree exceeds n");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(xi, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SchurElement& SchurElement::operator+=(const SchurElement& o) {
  if (o.d_ != d_ || o.n_ != n_) throw std::invalid_argument("SchurElement: (d,n) mismatch");
  for (const auto& [xi, c] : o.terms_) add_term(xi, c);
  return *this;
}

SchurElement& SchurElement::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
  } else {
    for (auto& [xi, v] : terms_) v *= c;
  }
  return *this;
}

std::vector<XiBasisElement> enumerate_basis_degree(int d, int r) {
  if (d < 1 || r < 0) throw std::invalid_argument("enumerate_basis_degree: bad arguments");

  // Orbit representatives of degree r are the weakly increasing words of
  // length r over the d^2 column pairs, built in lexicographic order.
  std::vector<XiBasisElement> out;
  std::vector<std::pair<int, int>> alphabet;
  for (int a = 1; a <= d; ++a) {
    for (int b = 1; b <= d; ++b) alphabet.emplace_back(a, b);
  }
  std::vector<int> pick;  // indices into alphabet, weakly increasing
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(pick.size()) == r) {
      OrbitPair p;
      p.alphabet = d;
      p.degree = r;
      for (int idx : pick) p.pairs.push_back(alphabet[idx]);
      out.push_back(XiBasisElement(std::move(p)));
      return;
    }
    for (int i = start; i < static_cast<int>(alphabet.size()); ++i) {
      pick.push_back(i);
      self(self, i);
      pick.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<XiBasisElement> enumerate_basis(int d, int n, unsigned long long max_dim) {
  if (d < 1 || n < 1) throw std::invalid_argument("enumerate_basis: need d, n >= 1");
  unsigned long long dim = schur_dimension(d, n);
  if (dim > max_dim)
    throw resource_error("enumerate_basis: dim " + std::to_string(dim) +
                         " exceeds the resource bound");
  std::vector<XiBasisElement> out;
  out.reserve(dim);
  for (int r = 0; r <= n; ++r) {
    auto part = enumerate_basis_degree(d, r);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

unsigned long long schur_dimension(int d, int n) {
  return binomial(d * d + n, n);
}

Rational evaluate(const XiBasisElement& xi, const Monomial& m) {
  if (xi.alphabet() != m.alphabet())
    throw std::invalid_argument("evaluate: alphabet mismatch");
  return xi.pair == m.pair ? Rational(1) : Rational(0);
}

Rational evaluate(const SchurElement& xi, const Monomial& m) {
  if (xi.d() != m.alphabet()) throw std::invalid_argument("evaluate: alphabet mismatch");
  auto it = xi.terms().find(XiBasisElement(m.pair));
  return it == xi.terms().end() ? Rational(0) : it->second;
}

SchurElement product(const SchurElement& xi, const SchurElement& eta) {
  if (xi.d() != eta.d() || xi.n() != eta.n())
    throw std::invalid_argument("product: (d,n) mismatch");
  int d = xi.d();

  // Blocks of different degree multiply to zero, so only degrees present in
  // both factors contribute.
  std::set<int> degrees;
  for (const auto& [t, c] : xi.terms()) degrees.insert(t.degree());
  std::set<int> common;
  for (const auto& [t, c] : eta.terms()) {
    if (degrees.count(t.degree())) common.insert(t.degree());
  }

  SchurElement out(d, xi.n());
  for (int r : common) {
    auto gammas = enumerate_words(r, d);
    for (const XiBasisElement& target : enumerate_basis_degree(d, r)) {
      Word alpha = target.pair.first_word();
      Word beta = target.pair.second_word();
      Rational total(0);
      for (const Word& gamma : gammas) {
        Rational left = evaluate(xi, Monomial(alpha, gamma));
        if (left.is_zero()) continue;
        total += left * evaluate(eta, Monomial(gamma, beta));
      }
      out.add_term(target, total);
    }
  }
  return out;
}

SchurElement unit(int d, int n) {
  SchurElement out(d, n);
  for (int r = 0; r <= n; ++r) {
    // One diagonal class per S_r-orbit of words: the weakly increasing ones.
    std::vector<int> w(r, 1);
    auto emit = [&] {
      Word alpha(d, w);
      out.add_term(XiBasisElement(alpha, alpha), Rational(1));
    };
    if (r == 0) {
      emit();
      continue;
    }
    while (true) {
      emit();
      int i = r - 1;
      while (i >= 0 && w[i] == d) --i;
      if (i < 0) break;
      int v = w[i] + 1;
      for (int j = i; j < r; ++j) w[j] = v;
    }
  }
  return out;
}

Rational evaluate_group_element(const RationalMatrix& g, const Monomial& m) {
  if (g.rows() != m.alphabet() || g.cols() != m.alphabet())
    throw std::invalid_argument("evaluate_group_element: size mismatch");
  Rational out(1);
  for (const auto& [a, b] : m.pair.pairs) out *= g.at(a - 1, b - 1);
  return out;
}

}  // namespace rookschur
