#include "mcgrep/matrix.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

namespace mcgrep {

namespace {

// Entry of the elimination workspace once the common pivot is split off.
struct FractionEntry {
  LaurentPoly num;
  LaurentPoly den;
};

void require_same_dim(const RingMatrix& a, const RingMatrix& b, const char* what) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument(std::string(what) + ": dimension mismatch (" +
                                std::to_string(a.dim()) + " vs " + std::to_string(b.dim()) +
                                ")");
  }
}

LaurentPoly divide_or_throw(const LaurentPoly& a, const LaurentPoly& b) {
  auto q = exact_divide(a, b);
  if (!q) throw std::logic_error("fraction-free elimination produced an inexact quotient");
  return std::move(*q);
}

}  // namespace

RingMatrix::RingMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

RingMatrix RingMatrix::identity(std::size_t dim) { return scalar(dim, LaurentPoly(1)); }

RingMatrix RingMatrix::scalar(std::size_t dim, const LaurentPoly& value) {
  RingMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = value;
  return m;
}

RingMatrix RingMatrix::scaled(const LaurentPoly& factor) const {
  if (auto m = factor.as_monomial()) return scaled(*m);
  RingMatrix r(dim_);
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (!entries_[i].is_zero()) r.entries_[i] = entries_[i] * factor;
  }
  return r;
}

RingMatrix RingMatrix::scaled(const Monomial& factor) const {
  RingMatrix r(dim_);
  for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = entries_[i].times(factor);
  return r;
}

std::size_t RingMatrix::nonzero_count() const {
  return static_cast<std::size_t>(
      std::count_if(entries_.begin(), entries_.end(), [](const auto& p) { return !p.is_zero(); }));
}

std::size_t RingMatrix::max_term_count() const {
  std::size_t best = 0;
  for (const auto& p : entries_) best = std::max(best, p.size());
  return best;
}

RingMatrix mat_mul(const RingMatrix& a, const RingMatrix& b) {
  require_same_dim(a, b, "mat_mul");
  const std::size_t n = a.dim();
  RingMatrix r(n);
  // Column lists of non-zero entries per row of b keep sparse products cheap.
  std::vector<std::vector<std::size_t>> b_cols(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!b(k, j).is_zero()) b_cols[k].push_back(j);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const LaurentPoly& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j : b_cols[k]) r.at(i, j) += aik * b(k, j);
    }
  }
  return r;
}

RingMatrix inverse(const RingMatrix& a) {
  const std::size_t n = a.dim();
  if (n == 0) return a;
  const std::size_t w = 2 * n;
  std::vector<std::vector<LaurentPoly>> m(n, std::vector<LaurentPoly>(w));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a(i, j);
    m[i][n + i] = LaurentPoly(1);
  }

  LaurentPoly prev(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m[pivot][k].is_zero()) ++pivot;
    if (pivot == n) throw SingularMatrixError("matrix is singular");
    std::swap(m[k], m[pivot]);

    const LaurentPoly p = m[k][k];
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      const LaurentPoly factor = m[i][k];
      for (std::size_t j = 0; j < w; ++j) {
        if (j == k) continue;
        LaurentPoly value = m[i][j].is_zero() ? LaurentPoly{} : p * m[i][j];
        if (!factor.is_zero() && !m[k][j].is_zero()) value -= factor * m[k][j];
        m[i][j] = value.is_zero() ? LaurentPoly{} : divide_or_throw(value, prev);
      }
      m[i][k] = LaurentPoly{};
    }
    prev = p;
  }

  // The left half is now d*I and the right half is d times the inverse, with d
  // the determinant up to sign.
  const LaurentPoly d = prev;
  if (!d.is_unit()) {
    throw NonUnitMatrixError("determinant " + d.to_string() +
                             " is not a unit; inverse leaves the Laurent ring");
  }
  RingMatrix result(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      FractionEntry e{std::move(m[i][n + j]), d};
      auto q = exact_divide(e.num, e.den);
      if (!q) throw NonUnitMatrixError("inverse entry is not a Laurent polynomial");
      result.at(i, j) = std::move(*q);
    }
  }

  if (!is_identity(a * result) || !is_identity(result * a)) {
    throw std::logic_error("inverse failed verification");
  }
  return result;
}

RingMatrix block_assemble(std::size_t n_blocks, std::size_t block_dim,
                          std::span<const BlockPlacement> placements) {
  RingMatrix r(n_blocks * block_dim);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& p : placements) {
    if (p.block_row >= n_blocks || p.block_col >= n_blocks) {
      throw std::out_of_range("block placement outside the block grid");
    }
    if (p.block.dim() != block_dim) {
      throw std::invalid_argument("block dimension mismatch in block_assemble");
    }
    if (!seen.emplace(p.block_row, p.block_col).second) {
      throw std::invalid_argument("duplicate block placement at (" +
                                  std::to_string(p.block_row) + "," +
                                  std::to_string(p.block_col) + ")");
    }
    for (std::size_t i = 0; i < block_dim; ++i) {
      for (std::size_t j = 0; j < block_dim; ++j) {
        r.at(p.block_row * block_dim + i, p.block_col * block_dim + j) = p.block(i, j);
      }
    }
  }
  return r;
}

RingMatrix extract_block(const RingMatrix& m, std::size_t block_dim, std::size_t block_row,
                         std::size_t block_col) {
  if (block_dim == 0 || (block_row + 1) * block_dim > m.dim() ||
      (block_col + 1) * block_dim > m.dim()) {
    throw std::out_of_range("block outside matrix");
  }
  RingMatrix b(block_dim);
  for (std::size_t i = 0; i < block_dim; ++i) {
    for (std::size_t j = 0; j < block_dim; ++j) {
      b.at(i, j) = m(block_row * block_dim + i, block_col * block_dim + j);
    }
  }
  return b;
}

RingMatrix direct_sum(const RingMatrix& a, const RingMatrix& b) {
  const std::size_t n = a.dim() + b.dim();
  RingMatrix r(n);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) r.at(i, j) = a(i, j);
  }
  for (std::size_t i = 0; i < b.dim(); ++i) {
    for (std::size_t j = 0; j < b.dim(); ++j) r.at(a.dim() + i, a.dim() + j) = b(i, j);
  }
  return r;
}

bool is_identity(const RingMatrix& a) {
  auto s = is_scalar(a);
  return s && s->is_one();
}

bool is_zero(const RingMatrix& a) { return a.nonzero_count() == 0; }

std::optional<LaurentPoly> is_scalar(const RingMatrix& a) {
  const std::size_t n = a.dim();
  if (n == 0) return std::nullopt;
  const LaurentPoly& lambda = a(0, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j ? a(i, j) != lambda : !a(i, j).is_zero()) return std::nullopt;
    }
  }
  return lambda;
}

std::optional<BlockStructure> block_structure(const RingMatrix& m, std::size_t block_dim) {
  if (block_dim == 0 || m.dim() % block_dim != 0) return std::nullopt;
  const std::size_t nb = m.dim() / block_dim;
  BlockStructure s;
  s.block_dim = block_dim;
  std::vector<bool> row_used(nb, false);
  for (std::size_t col = 0; col < nb; ++col) {
    std::optional<std::size_t> found;
    for (std::size_t row = 0; row < nb; ++row) {
      RingMatrix b = extract_block(m, block_dim, row, col);
      if (is_zero(b)) continue;
      if (found || row_used[row]) return std::nullopt;
      found = row;
      row_used[row] = true;
      s.blocks.push_back(std::move(b));
    }
    if (!found) return std::nullopt;
    s.block_perm.push_back(*found);
  }
  return s;
}

}  // namespace mcgrep
