#include "rookschur/tensor_space.hpp"

#include <omp.h>

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "rookschur/linalg.hpp"

namespace rookschur {

namespace {

constexpr long long kMaxTensorBasis = 4096;

}  // namespace

TensorIndex::TensorIndex(int d, int n, std::vector<int> word)
    : d_(d), n_(n), word_(std::move(word)) {
  if (d < 1 || n < 0) throw std::invalid_argument("TensorIndex: need d >= 1, n >= 0");
  if (static_cast<int>(word_.size()) != n)
    throw std::invalid_argument("TensorIndex: word length differs from n");
  for (int x : word_) {
    if (x < 1 || x > d + 1) throw std::invalid_argument("TensorIndex: letter out of range");
  }
}

TensorIndex TensorIndex::from_position(int d, int n, long long pos) {
  if (pos < 0 || pos >= basis_size(d, n))
    throw std::out_of_range("TensorIndex::from_position: out of range");
  std::vector<int> word(n);
  for (int i = n - 1; i >= 0; --i) {
    word[i] = static_cast<int>(pos % (d + 1)) + 1;
    pos /= (d + 1);
  }
  return TensorIndex(d, n, std::move(word));
}

TensorIndex TensorIndex::parse(int d, int n, const std::string& s) {
  std::vector<int> word;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (item == "inf") {
      word.push_back(d + 1);
    } else if (!item.empty()) {
      int letter = std::stoi(item);
      if (letter < 1 || letter > d)
        throw std::invalid_argument("TensorIndex::parse: letter out of range in \"" + s + "\"");
      word.push_back(letter);
    } else {
      throw std::invalid_argument("TensorIndex::parse: empty slot in \"" + s + "\"");
    }
  }
  return TensorIndex(d, n, std::move(word));
}

long long TensorIndex::position() const {
  long long pos = 0;
  for (int x : word_) pos = pos * (d_ + 1) + (x - 1);
  return pos;
}

long long TensorIndex::basis_size(int d, int n) {
  long long size = 1;
  for (int i = 0; i < n; ++i) {
    size *= (d + 1);
    if (size > kMaxTensorBasis)
      throw resource_error("TensorIndex: (d+1)^n exceeds the desk-scale bound");
  }
  return size;
}

Subset TensorIndex::support() const {
  std::vector<int> s;
  for (int i = 1; i <= n_; ++i) {
    if (!is_infinity(i)) s.push_back(i);
  }
  return Subset(n_, std::move(s));
}

Word TensorIndex::support_word() const {
  std::vector<int> w;
  for (int i = 1; i <= n_; ++i) {
    if (!is_infinity(i)) w.push_back(word_[i - 1]);
  }
  return Word(d_, std::move(w));
}

std::string TensorIndex::str() const {
  std::string out;
  for (int i = 1; i <= n_; ++i) {
    if (i > 1) out += ',';
    out += is_infinity(i) ? std::string("inf") : std::to_string(word_[i - 1]);
  }
  return out;
}

TensorVector TensorVector::of(const TensorIndex& t) {
  TensorVector v(t.d(), t.n());
  v.add_term(t, Rational(1));
  return v;
}

void TensorVector::add_term(const TensorIndex& t, const Rational& c) {
  if (t.d() != d_ || t.n() != n_)
    throw std::invalid_argument("TensorVector: (d,n) mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(t, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TensorVector& TensorVector::operator+=(const TensorVector& o) {
  if (o.d_ != d_ || o.n_ != n_) throw std::invalid_argument("TensorVector: (d,n) mismatch");
  for (const auto& [t, c] : o.terms_) add_term(t, c);
  return *this;
}

TensorVector& TensorVector::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
  } else {
    for (auto& [t, v] : terms_) v *= c;
  }
  return *this;
}

TensorVector left_schur_action(const SchurElement& xi, const TensorIndex& t) {
  if (xi.d() != t.d() || xi.n() != t.n())
    throw std::invalid_argument("left_schur_action: (d,n) mismatch");
  TensorVector out(t.d(), t.n());
  Subset x = t.support();
  Word beta = t.support_word();
  for (const Word& alpha : enumerate_words(x.size(), t.d())) {
    Rational c = evaluate(xi, Monomial(alpha, beta));
    if (c.is_zero()) continue;
    std::vector<int> word(t.n(), t.d() + 1);
    for (int k = 0; k < x.size(); ++k) word[x.elements[k] - 1] = alpha.letters[k];
    out.add_term(TensorIndex(t.d(), t.n(), std::move(word)), c);
  }
  return out;
}

TensorVector left_schur_action(const SchurElement& xi, const TensorVector& v) {
  TensorVector out(v.d(), v.n());
  for (const auto& [t, c] : v.terms()) {
    TensorVector part = left_schur_action(xi, t);
    part *= c;
    out += part;
  }
  return out;
}

TensorVector right_rook_action(const TensorIndex& t, const PartialPerm& sigma) {
  if (t.n() != sigma.n()) throw std::invalid_argument("right_rook_action: ambient mismatch");
  TensorVector out(t.d(), t.n());
  Subset x = t.support();
  PartialPerm inv = inverse(sigma);
  for (int e : x.elements) {
    if (!inv.defined_at(e)) return out;  // X must lie inside R(sigma)
  }
  // (alpha sigma)(i) = alpha(sigma(i)) wherever sigma(i) lands in X.
  std::vector<int> word(t.n(), t.d() + 1);
  for (int i = 1; i <= t.n(); ++i) {
    int v = sigma.image(i);
    if (v != 0 && x.contains(v)) word[i - 1] = t.letter(v);
  }
  out.add_term(TensorIndex(t.d(), t.n(), std::move(word)), Rational(1));
  return out;
}

TensorVector right_rook_action(const TensorVector& v, const PartialPerm& sigma) {
  TensorVector out(v.d(), v.n());
  for (const auto& [t, c] : v.terms()) {
    TensorVector part = right_rook_action(t, sigma);
    part *= c;
    out += part;
  }
  return out;
}

TensorVector right_matrix_action(const TensorIndex& t, const BasisTerm& b) {
  if (t.n() != b.n) throw std::invalid_argument("right_matrix_action: ambient mismatch");
  TensorVector out(t.d(), t.n());
  if (t.support() != b.I) return out;
  // alpha iota_I sigma iota_J^- has support J; build the relabelled word.
  PartialPerm relabel = compose(iota(b.I), compose(embed(b.sigma, b.n), inverse(iota(b.J))));
  std::vector<int> word(t.n(), t.d() + 1);
  for (int j : b.J.elements) word[j - 1] = t.letter(relabel.image(j));
  out.add_term(TensorIndex(t.d(), t.n(), std::move(word)), Rational(1));
  return out;
}

TensorVector right_matrix_action(const TensorVector& v, const RookAlgebraElement& x) {
  TensorVector out(v.d(), v.n());
  for (const auto& [t, ct] : v.terms()) {
    for (const auto& [b, cb] : x.terms()) {
      TensorVector part = right_matrix_action(t, b);
      part *= ct * cb;
      out += part;
    }
  }
  return out;
}

Word t_x_isomorphism(const TensorIndex& t) { return t.support_word(); }

namespace {

// Columns are computed independently in parallel and only then written into
// the shared matrix, keeping the assembly race-free and deterministic.
template <typename ColumnFn>
RationalMatrix assemble_by_columns(int d, int n, ColumnFn&& column_of) {
  int m = static_cast<int>(TensorIndex::basis_size(d, n));
  std::vector<TensorVector> cols(m, TensorVector(d, n));
#pragma omp parallel for schedule(dynamic)
  for (int col = 0; col < m; ++col) {
    cols[col] = column_of(TensorIndex::from_position(d, n, col));
  }
  RationalMatrix out(m, m);
  for (int col = 0; col < m; ++col) {
    for (const auto& [s, c] : cols[col].terms()) {
      out.set(static_cast<int>(s.position()), col, c);
    }
  }
  return out;
}

}  // namespace

RationalMatrix action_matrix_left(const SchurElement& xi) {
  return assemble_by_columns(xi.d(), xi.n(),
                             [&](const TensorIndex& t) { return left_schur_action(xi, t); });
}

RationalMatrix action_matrix_right(const PartialPerm& sigma, int d) {
  return assemble_by_columns(d, sigma.n(),
                             [&](const TensorIndex& t) { return right_rook_action(t, sigma); });
}

}  // namespace rookschur
