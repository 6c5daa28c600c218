#include "rookschur/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace rookschur {

namespace {

SparseRow::const_iterator find_col(const SparseRow& row, int j) {
  auto it = std::lower_bound(row.begin(), row.end(), j,
                             [](const auto& e, int col) { return e.first < col; });
  return (it != row.end() && it->first == j) ? it : row.end();
}

}  // namespace

RationalMatrix::RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("RationalMatrix: negative dimension");
}

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.data_[i].emplace_back(i, Rational(1));
  return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  RationalMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c)
      throw std::invalid_argument("RationalMatrix: ragged rows");
    for (int j = 0; j < c; ++j) {
      if (!rows[i][j].is_zero()) m.data_[i].emplace_back(j, rows[i][j]);
    }
  }
  return m;
}

Rational RationalMatrix::at(int i, int j) const {
  if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
    throw std::out_of_range("RationalMatrix::at: index out of range");
  auto it = find_col(data_[i], j);
  return it == data_[i].end() ? Rational(0) : it->second;
}

void RationalMatrix::set(int i, int j, Rational v) {
  if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
    throw std::out_of_range("RationalMatrix::set: index out of range");
  auto& row = data_[i];
  auto it = std::lower_bound(row.begin(), row.end(), j,
                             [](const auto& e, int col) { return e.first < col; });
  if (it != row.end() && it->first == j) {
    if (v.is_zero()) {
      row.erase(it);
    } else {
      it->second = std::move(v);
    }
  } else if (!v.is_zero()) {
    row.insert(it, {j, std::move(v)});
  }
}

void RationalMatrix::add_at(int i, int j, const Rational& v) {
  if (v.is_zero()) return;
  set(i, j, at(i, j) + v);
}

void RationalMatrix::set_row(int i, SparseRow r) {
  if (i < 0 || i >= rows_) throw std::out_of_range("RationalMatrix::set_row");
  data_[i] = std::move(r);
}

std::size_t RationalMatrix::nonzero_count() const {
  std::size_t n = 0;
  for (const auto& row : data_) n += row.size();
  return n;
}

bool RationalMatrix::is_zero() const { return nonzero_count() == 0; }

std::vector<Rational> RationalMatrix::dense_row(int i) const {
  std::vector<Rational> out(cols_, Rational(0));
  for (const auto& [j, v] : data_[i]) out[j] = v;
  return out;
}

std::vector<std::vector<Rational>> RationalMatrix::to_dense() const {
  std::vector<std::vector<Rational>> out;
  out.reserve(rows_);
  for (int i = 0; i < rows_; ++i) out.push_back(dense_row(i));
  return out;
}

SparseRow RationalMatrix::flatten() const {
  SparseRow out;
  out.reserve(nonzero_count());
  for (int i = 0; i < rows_; ++i) {
    for (const auto& [j, v] : data_[i]) out.emplace_back(i * cols_ + j, v);
  }
  return out;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i) {
    for (const auto& [j, v] : data_[i]) t.data_[j].emplace_back(i, v);
  }
  return t;
}

std::vector<std::vector<std::string>> RationalMatrix::to_strings() const {
  std::vector<std::vector<std::string>> out(rows_);
  for (int i = 0; i < rows_; ++i) {
    out[i].reserve(cols_);
    auto dense = dense_row(i);
    for (const auto& v : dense) out[i].push_back(v.str());
  }
  return out;
}

bool RationalMatrix::operator==(const RationalMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (int i = 0; i < rows_; ++i) {
    if (data_[i].size() != o.data_[i].size()) return false;
    for (std::size_t k = 0; k < data_[i].size(); ++k) {
      if (data_[i][k].first != o.data_[i][k].first) return false;
      if (data_[i][k].second != o.data_[i][k].second) return false;
    }
  }
  return true;
}

}  // namespace rookschur
