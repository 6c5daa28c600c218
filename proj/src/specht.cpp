#include "rookschur/specht.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "rookschur/linalg.hpp"

namespace rookschur {

namespace {

// Tabloids are encoded as row_of vectors: row_of[e-1] is the row index of
// element e. Enumeration picks the elements of each row as lexicographic
// combinations of what is left, top row first.
std::vector<std::vector<int>> enumerate_tabloids(const Partition& mu) {
  int r = mu.size();
  std::vector<std::vector<int>> out;
  std::vector<int> row_of(r, -1);
  auto rec = [&](auto&& self, int row) -> void {
    if (row == static_cast<int>(mu.parts.size())) {
      out.push_back(row_of);
      return;
    }
    std::vector<int> free_elems;
    for (int e = 1; e <= r; ++e) {
      if (row_of[e - 1] < 0) free_elems.push_back(e);
    }
    int need = mu.parts[row];
    std::vector<int> idx(need);
    std::iota(idx.begin(), idx.end(), 0);
    auto place = [&](auto&& go, int pos, int start) -> void {
      if (pos == need) {
        self(self, row + 1);
        return;
      }
      for (int i = start; i <= static_cast<int>(free_elems.size()) - (need - pos); ++i) {
        row_of[free_elems[i] - 1] = row;
        go(go, pos + 1, i + 1);
        row_of[free_elems[i] - 1] = -1;
      }
    };
    place(place, 0, 0);
  };
  rec(rec, 0);
  return out;
}

// All elements of the column stabilizer of t as (map on {1..r}, sign).
std::vector<std::pair<std::vector<int>, int>> column_stabilizer(const Tableau& t, int r) {
  std::vector<std::vector<int>> columns;
  for (std::size_t c = 0;; ++c) {
    std::vector<int> col;
    for (const auto& row : t) {
      if (c < row.size()) col.push_back(row[c]);
    }
    if (col.empty()) break;
    columns.push_back(std::move(col));
  }

  std::vector<int> ident(r + 1);
  std::iota(ident.begin(), ident.end(), 0);
  std::vector<std::pair<std::vector<int>, int>> result{{ident, 1}};
  for (const auto& col : columns) {
    std::vector<int> sorted = col;
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::pair<std::vector<int>, int>> grown;
    std::vector<int> arrangement = sorted;
    do {
      // Sign of the arrangement as a permutation of the sorted column.
      int sign = 1;
      for (std::size_t i = 0; i < arrangement.size(); ++i) {
        for (std::size_t j = i + 1; j < arrangement.size(); ++j) {
          if (arrangement[i] > arrangement[j]) sign = -sign;
        }
      }
      for (const auto& [base, base_sign] : result) {
        auto q = base;
        for (std::size_t i = 0; i < sorted.size(); ++i) q[sorted[i]] = arrangement[i];
        grown.emplace_back(std::move(q), base_sign * sign);
      }
    } while (std::next_permutation(arrangement.begin(), arrangement.end()));
    result = std::move(grown);
  }
  return result;
}

std::vector<std::vector<Rational>> gauss_jordan_inverse(std::vector<std::vector<Rational>> m) {
  int f = static_cast<int>(m.size());
  std::vector<std::vector<Rational>> inv(f, std::vector<Rational>(f, Rational(0)));
  for (int i = 0; i < f; ++i) inv[i][i] = Rational(1);
  for (int col = 0; col < f; ++col) {
    int piv = -1;
    for (int i = col; i < f; ++i) {
      if (!m[i][col].is_zero()) {
        piv = i;
        break;
      }
    }
    if (piv < 0) throw std::logic_error("gauss_jordan_inverse: singular matrix");
    std::swap(m[col], m[piv]);
    std::swap(inv[col], inv[piv]);
    Rational scale = Rational(1) / m[col][col];
    for (int j = 0; j < f; ++j) {
      m[col][j] *= scale;
      inv[col][j] *= scale;
    }
    for (int i = 0; i < f; ++i) {
      if (i == col || m[i][col].is_zero()) continue;
      Rational c = m[i][col];
      for (int j = 0; j < f; ++j) {
        m[i][j] -= c * m[col][j];
        inv[i][j] -= c * inv[col][j];
      }
    }
  }
  return inv;
}

}  // namespace

SpechtRep::SpechtRep(Partition mu) : mu_(std::move(mu)), r_(mu_.size()) {
  if (r_ > 6) throw resource_error("SpechtRep: |mu| > 6 is past the desk-scale bound");

  if (r_ == 0) {
    dim_ = 1;
    matrices_.emplace(PartialPerm(), RationalMatrix::identity(1));
    return;
  }

  auto tableaux = standard_tableaux(mu_);
  dim_ = static_cast<int>(tableaux.size());

  auto tabloids = enumerate_tabloids(mu_);
  std::map<std::vector<int>, int> tabloid_index;
  for (std::size_t i = 0; i < tabloids.size(); ++i) tabloid_index[tabloids[i]] = static_cast<int>(i);
  int ntab = static_cast<int>(tabloids.size());

  // Polytabloid of t: sum over the column stabilizer of sign(q) [q t].
  RationalMatrix basis(ntab, dim_);
  for (int i = 0; i < dim_; ++i) {
    std::vector<int> row_of(r_);
    for (std::size_t row = 0; row < tableaux[i].size(); ++row) {
      for (int e : tableaux[i][row]) row_of[e - 1] = static_cast<int>(row);
    }
    for (const auto& [q, sign] : column_stabilizer(tableaux[i], r_)) {
      std::vector<int> moved(r_);
      for (int e = 1; e <= r_; ++e) moved[q[e] - 1] = row_of[e - 1];
      basis.add_at(tabloid_index.at(moved), i, Rational(sign));
    }
  }

  // The standard polytabloids are independent; pick rows that witness it.
  RationalMatrix basis_t = basis.transpose();
  std::vector<SparseRow> cols;
  for (int j = 0; j < dim_; ++j) cols.push_back(basis_t.row(j));
  auto ech = linalg::reduced_echelon(std::move(cols), ntab);
  if (ech.rank != dim_) throw std::logic_error("SpechtRep: polytabloids are not independent");
  const std::vector<int>& pivot_rows = ech.pivot_cols;

  std::vector<std::vector<Rational>> square(dim_, std::vector<Rational>(dim_));
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) square[i][j] = basis.at(pivot_rows[i], j);
  }
  auto inv = gauss_jordan_inverse(std::move(square));

  // Image of sigma solved from  B rho(sigma) = P_sigma B  on the pivot rows.
  auto image_of = [&](const PartialPerm& sigma) {
    RationalMatrix moved(dim_, dim_);
    for (int j = 0; j < dim_; ++j) {
      std::map<int, Rational> col;  // (P_sigma B) restricted to pivot rows
      for (int tab = 0; tab < ntab; ++tab) {
        Rational v = basis.at(tab, j);
        if (v.is_zero()) continue;
        std::vector<int> out(r_);
        for (int e = 1; e <= r_; ++e) out[sigma.image(e) - 1] = tabloids[tab][e - 1];
        col[tabloid_index.at(out)] += v;
      }
      for (int i = 0; i < dim_; ++i) {
        Rational s(0);
        for (int k = 0; k < dim_; ++k) {
          auto it = col.find(pivot_rows[k]);
          if (it != col.end()) s += inv[i][k] * it->second;
        }
        moved.set(i, j, s);
      }
    }
    return moved;
  };

  PartialPerm id = PartialPerm::identity(r_);
  matrices_.emplace(id, RationalMatrix::identity(dim_));
  std::vector<RationalMatrix> gens;
  for (int i = 1; i < r_; ++i) {
    std::vector<int> one_line(r_);
    std::iota(one_line.begin(), one_line.end(), 1);
    std::swap(one_line[i - 1], one_line[i]);
    PartialPerm s = PartialPerm::from_images(r_, std::move(one_line));
    gens.push_back(image_of(s));
    matrices_.emplace(s, gens.back());
  }

  // rho(sigma) = rho(sigma s_i) rho(s_i) whenever sigma(i) > sigma(i+1); the
  // recursion bottoms out at the identity.
  auto rho = [&](auto&& self, const PartialPerm& sigma) -> const RationalMatrix& {
    auto it = matrices_.find(sigma);
    if (it != matrices_.end()) return it->second;
    int i = 1;
    while (sigma.image(i) < sigma.image(i + 1)) ++i;
    std::vector<int> swapped(r_);
    for (int k = 1; k <= r_; ++k) swapped[k - 1] = sigma.image(k);
    std::swap(swapped[i - 1], swapped[i]);
    PartialPerm tau = PartialPerm::from_images(r_, std::move(swapped));
    RationalMatrix result = linalg::matmul(self(self, tau), gens[i - 1]);
    return matrices_.emplace(sigma, std::move(result)).first->second;
  };
  for (const PartialPerm& sigma : enumerate_symmetric(r_)) rho(rho, sigma);
}

const RationalMatrix& SpechtRep::matrix(const PartialPerm& sigma) const {
  auto it = matrices_.find(sigma);
  if (it == matrices_.end())
    throw std::invalid_argument("SpechtRep::matrix: not a total element of R_" +
                                std::to_string(r_));
  return it->second;
}

Rational SpechtRep::character(const PartialPerm& sigma) const {
  const RationalMatrix& m = matrix(sigma);
  Rational tr(0);
  for (int i = 0; i < m.rows(); ++i) tr += m.at(i, i);
  return tr;
}

bool verify_irreducible(const std::vector<RationalMatrix>& images) {
  return linalg::commutant_basis(images).size() == 1;
}

bool verify_irreducible(const SpechtRep& rep) {
  std::vector<RationalMatrix> images;
  images.reserve(rep.matrices().size());
  for (const auto& [sigma, m] : rep.matrices()) images.push_back(m);
  return verify_irreducible(images);
}

}  // namespace rookschur
