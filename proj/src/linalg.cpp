#include "rookschur/linalg.hpp"

#include <gmpxx.h>
#include <omp.h>

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <unordered_set>
#include <utility>

namespace rookschur::linalg {

namespace {

/// r - c * p for sorted sparse rows.
SparseRow row_axpy_sub(const SparseRow& r, const Rational& c, const SparseRow& p) {
  SparseRow out;
  out.reserve(r.size() + p.size());
  std::size_t i = 0, j = 0;
  while (i < r.size() || j < p.size()) {
    if (j == p.size() || (i < r.size() && r[i].first < p[j].first)) {
      out.push_back(r[i++]);
    } else if (i == r.size() || p[j].first < r[i].first) {
      out.emplace_back(p[j].first, -(c * p[j].second));
      ++j;
    } else {
      Rational v = r[i].second - c * p[j].second;
      if (!v.is_zero()) out.emplace_back(r[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

void scale_row(SparseRow& r, const Rational& c) {
  for (auto& [j, v] : r) v *= c;
}

/// Cancels the leading entry of `row` against the pivot rows for as long as
/// a pivot exists for the current leading column.
void forward_reduce(SparseRow& row, const std::map<int, int>& pivot_of_col,
                    const std::vector<SparseRow>& pivot_rows) {
  while (!row.empty()) {
    auto it = pivot_of_col.find(row.front().first);
    if (it == pivot_of_col.end()) break;
    const SparseRow& p = pivot_rows[it->second];
    Rational c = row.front().second / p.front().second;
    row = row_axpy_sub(row, c, p);
  }
}

}  // namespace

Echelon reduced_echelon(std::vector<SparseRow> input, int cols) {
  Echelon ech;
  ech.cols = cols;

  std::vector<SparseRow> pivots;          // in order of acquisition
  std::map<int, int> pivot_of_col;        // leading column -> index into pivots

  struct Pending {
    int order;
    SparseRow row;
  };
  std::vector<Pending> pending;
  pending.reserve(input.size());
  for (std::size_t i = 0; i < input.size(); ++i) {
    if (!input[i].empty()) pending.push_back({static_cast<int>(i), std::move(input[i])});
  }

  while (!pending.empty()) {
    int npend = static_cast<int>(pending.size());
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < npend; ++i) {
      forward_reduce(pending[i].row, pivot_of_col, pivots);
    }

    // One new pivot per distinct leading column; leftovers go another round.
    std::map<int, int> best_for_col;  // leading column -> index into pending
    for (int i = 0; i < npend; ++i) {
      if (pending[i].row.empty()) continue;
      int lead = pending[i].row.front().first;
      auto [it, inserted] = best_for_col.try_emplace(lead, i);
      if (!inserted) {
        const auto& cur = pending[it->second];
        const auto& cand = pending[i];
        auto key = [](const Pending& p) {
          return std::make_tuple(p.row.size(), p.row.front().second.bit_size(), p.order);
        };
        if (key(cand) < key(cur)) it->second = i;
      }
    }
    if (best_for_col.empty()) break;

    std::vector<bool> taken(npend, false);
    for (const auto& [lead, idx] : best_for_col) {
      pivot_of_col[lead] = static_cast<int>(pivots.size());
      pivots.push_back(std::move(pending[idx].row));
      taken[idx] = true;
    }
    std::vector<Pending> next;
    next.reserve(npend);
    for (int i = 0; i < npend; ++i) {
      if (!taken[i] && !pending[i].row.empty()) next.push_back(std::move(pending[i]));
    }
    pending = std::move(next);
  }

  // Normalize and back-eliminate into the canonical reduced form. Rows with
  // a larger leading column cannot contain a smaller pivot column, so it is
  // enough to clear each pivot column from the rows above it.
  std::vector<int> order;  // pivot indices sorted by leading column
  for (const auto& [col, idx] : pivot_of_col) order.push_back(idx);

  int nrank = static_cast<int>(order.size());
  std::vector<SparseRow> rows(nrank);
  for (int k = 0; k < nrank; ++k) rows[k] = std::move(pivots[order[k]]);
  for (int k = 0; k < nrank; ++k) {
    Rational inv = Rational(1) / rows[k].front().second;
    scale_row(rows[k], inv);
  }
  for (int k = nrank - 1; k >= 1; --k) {
    int pcol = rows[k].front().first;
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < k; ++i) {
      auto it = std::lower_bound(rows[i].begin(), rows[i].end(), pcol,
                                 [](const auto& e, int col) { return e.first < col; });
      if (it != rows[i].end() && it->first == pcol) {
        Rational c = it->second;
        rows[i] = row_axpy_sub(rows[i], c, rows[k]);
      }
    }
  }

  ech.rank = nrank;
  ech.rows = std::move(rows);
  ech.pivot_cols.reserve(nrank);
  for (const auto& r : ech.rows) ech.pivot_cols.push_back(r.front().first);
  return ech;
}

std::vector<std::vector<Rational>> nullspace_from_echelon(const Echelon& e) {
  std::vector<bool> is_pivot(e.cols, false);
  for (int c : e.pivot_cols) is_pivot[c] = true;

  std::vector<std::vector<Rational>> basis;
  for (int f = 0; f < e.cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(e.cols, Rational(0));
    v[f] = Rational(1);
    for (int k = 0; k < e.rank; ++k) {
      auto it = std::lower_bound(e.rows[k].begin(), e.rows[k].end(), f,
                                 [](const auto& entry, int col) { return entry.first < col; });
      if (it != e.rows[k].end() && it->first == f) v[e.pivot_cols[k]] = -it->second;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

RationalMatrix matmul(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows())
    throw std::invalid_argument("matmul: dimension mismatch");
  RationalMatrix out(a.rows(), b.cols());
  int nrows = a.rows();
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < nrows; ++i) {
    std::vector<Rational> acc(b.cols(), Rational(0));
    for (const auto& [k, av] : a.row(i)) {
      for (const auto& [j, bv] : b.row(k)) acc[j] += av * bv;
    }
    SparseRow r;
    for (int j = 0; j < b.cols(); ++j) {
      if (!acc[j].is_zero()) r.emplace_back(j, std::move(acc[j]));
    }
    out.set_row(i, std::move(r));
  }
  return out;
}

namespace {

/// Clears denominators row by row so Bareiss runs over the integers.
std::vector<std::vector<mpz_class>> integer_rows(const RationalMatrix& a) {
  std::vector<std::vector<mpz_class>> m(a.rows(), std::vector<mpz_class>(a.cols(), 0));
  for (int i = 0; i < a.rows(); ++i) {
    mpz_class l = 1;
    for (const auto& [j, v] : a.row(i)) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.den().get_mpz_t());
    for (const auto& [j, v] : a.row(i)) m[i][j] = v.num() * (l / v.den());
  }
  return m;
}

int bareiss_rank(std::vector<std::vector<mpz_class>> m, int cols) {
  int rows = static_cast<int>(m.size());
  mpz_class prev = 1;
  int rk = 0;
  for (int col = 0; col < cols && rk < rows; ++col) {
    int piv = -1;
    std::size_t piv_bits = 0;
    for (int i = rk; i < rows; ++i) {
      if (sgn(m[i][col]) == 0) continue;
      std::size_t bits = mpz_sizeinbase(m[i][col].get_mpz_t(), 2);
      if (piv < 0 || bits < piv_bits) {
        piv = i;
        piv_bits = bits;
      }
    }
    if (piv < 0) continue;
    std::swap(m[rk], m[piv]);
    const std::vector<mpz_class>& prow = m[rk];
    const mpz_class& pivot = prow[col];
#pragma omp parallel for schedule(dynamic)
    for (int i = rk + 1; i < rows; ++i) {
      if (sgn(m[i][col]) == 0) continue;
      mpz_class tmp;
      for (int j = col + 1; j < cols; ++j) {
        tmp = m[i][j] * pivot - m[i][col] * prow[j];
        mpz_divexact(m[i][j].get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][col] = 0;
    }
    prev = pivot;
    ++rk;
  }
  return rk;
}

}  // namespace

int rank(const RationalMatrix& a) {
  if (a.rows() == 0 || a.cols() == 0) return 0;
  return bareiss_rank(integer_rows(a), a.cols());
}

std::vector<std::vector<Rational>> nullspace_basis(const RationalMatrix& a) {
  std::vector<SparseRow> rows;
  rows.reserve(a.rows());
  for (int i = 0; i < a.rows(); ++i) rows.push_back(a.row(i));
  return nullspace_from_echelon(reduced_echelon(std::move(rows), a.cols()));
}

std::vector<RationalMatrix> commutant_basis(const std::vector<RationalMatrix>& gens, int size) {
  int m = size;
  for (const auto& g : gens) {
    if (g.rows() != g.cols()) throw std::invalid_argument("commutant_basis: non-square generator");
    if (m < 0) m = g.rows();
    if (g.rows() != m) throw std::invalid_argument("commutant_basis: generator size mismatch");
  }
  if (m < 0)
    throw std::invalid_argument("commutant_basis: empty generator list needs an explicit size");

  // Constraint rows of (T G - G T)[a][b] = 0 in the m^2 unknowns T[i][j],
  // unknown (i, j) at index i*m + j. Duplicate constraints (up to scale)
  // are dropped before elimination; the reduced form is canonical, so the
  // drop cannot change the result.
  std::vector<SparseRow> rows;
  std::unordered_set<std::string> seen;
  for (const auto& g : gens) {
    RationalMatrix gt = g.transpose();
    for (int a = 0; a < m; ++a) {
      for (int b = 0; b < m; ++b) {
        std::map<int, Rational> entries;
        for (const auto& [k, v] : gt.row(b)) entries[a * m + k] += v;     // T[a][k] G[k][b]
        for (const auto& [k, v] : g.row(a)) entries[k * m + b] -= v;      // G[a][k] T[k][b]
        SparseRow row;
        for (auto& [idx, v] : entries) {
          if (!v.is_zero()) row.emplace_back(idx, std::move(v));
        }
        if (row.empty()) continue;
        Rational lead = row.front().second;
        std::string key;
        for (const auto& [idx, v] : row) {
          key += std::to_string(idx);
          key += ':';
          key += (v / lead).str();
          key += '|';
        }
        if (seen.insert(std::move(key)).second) rows.push_back(std::move(row));
      }
    }
  }

  auto kernel = nullspace_from_echelon(reduced_echelon(std::move(rows), m * m));
  std::vector<RationalMatrix> basis;
  basis.reserve(kernel.size());
  for (const auto& v : kernel) {
    RationalMatrix t(m, m);
    for (int i = 0; i < m; ++i) {
      SparseRow r;
      for (int j = 0; j < m; ++j) {
        if (!v[i * m + j].is_zero()) r.emplace_back(j, v[i * m + j]);
      }
      t.set_row(i, std::move(r));
    }
    basis.push_back(std::move(t));
  }
  return basis;
}

int span_dimension(const std::vector<RationalMatrix>& mats) {
  if (mats.empty()) return 0;
  int r = mats[0].rows(), c = mats[0].cols();
  std::vector<SparseRow> rows;
  rows.reserve(mats.size());
  for (const auto& mat : mats) {
    if (mat.rows() != r || mat.cols() != c)
      throw std::invalid_argument("span_dimension: size mismatch");
    rows.push_back(mat.flatten());
  }
  return reduced_echelon(std::move(rows), r * c).rank;
}

std::vector<Rational> apply(const RationalMatrix& a, const std::vector<Rational>& v) {
  if (static_cast<int>(v.size()) != a.cols())
    throw std::invalid_argument("apply: dimension mismatch");
  std::vector<Rational> out(a.rows(), Rational(0));
  for (int i = 0; i < a.rows(); ++i) {
    for (const auto& [j, c] : a.row(i)) out[i] += c * v[j];
  }
  return out;
}

namespace reference {

RationalMatrix matmul(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows())
    throw std::invalid_argument("matmul: dimension mismatch");
  auto ad = a.to_dense();
  auto bd = b.to_dense();
  RationalMatrix out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < b.cols(); ++j) {
      Rational s(0);
      for (int k = 0; k < a.cols(); ++k) s += ad[i][k] * bd[k][j];
      out.set(i, j, s);
    }
  }
  return out;
}

int rank(const RationalMatrix& a) {
  auto m = a.to_dense();
  int rows = a.rows(), cols = a.cols();
  int rk = 0;
  for (int col = 0; col < cols && rk < rows; ++col) {
    int piv = -1;
    for (int i = rk; i < rows; ++i) {
      if (!m[i][col].is_zero()) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(m[rk], m[piv]);
    for (int i = rk + 1; i < rows; ++i) {
      if (m[i][col].is_zero()) continue;
      Rational c = m[i][col] / m[rk][col];
      for (int j = col; j < cols; ++j) m[i][j] -= c * m[rk][j];
    }
    ++rk;
  }
  return rk;
}

std::vector<std::vector<Rational>> nullspace_basis(const RationalMatrix& a) {
  auto m = a.to_dense();
  int rows = a.rows(), cols = a.cols();
  std::vector<int> pivot_cols;
  int rk = 0;
  for (int col = 0; col < cols && rk < rows; ++col) {
    int piv = -1;
    for (int i = rk; i < rows; ++i) {
      if (!m[i][col].is_zero()) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(m[rk], m[piv]);
    Rational inv = Rational(1) / m[rk][col];
    for (int j = col; j < cols; ++j) m[rk][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == rk || m[i][col].is_zero()) continue;
      Rational c = m[i][col];
      for (int j = col; j < cols; ++j) m[i][j] -= c * m[rk][j];
    }
    pivot_cols.push_back(col);
    ++rk;
  }
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[f] = Rational(1);
    for (int k = 0; k < rk; ++k) v[pivot_cols[k]] = -m[k][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace reference

}  // namespace rookschur::linalg
