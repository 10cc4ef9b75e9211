#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "mcgrep/laurent.hpp"

namespace mcgrep {

/// Thrown by inverse() when the input has no inverse over the fraction field.
class SingularMatrixError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Thrown by inverse() when the inverse exists over the fraction field but has
/// entries outside the Laurent ring.
class NonUnitMatrixError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Dense square matrix over LaurentPoly, stored row-major. Indices are 0-based.
class RingMatrix {
 public:
  RingMatrix() = default;
  explicit RingMatrix(std::size_t dim);

  static RingMatrix identity(std::size_t dim);
  static RingMatrix scalar(std::size_t dim, const LaurentPoly& value);

  std::size_t dim() const { return dim_; }

  const LaurentPoly& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
  }
  LaurentPoly& at(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }

  RingMatrix scaled(const LaurentPoly& factor) const;
  RingMatrix scaled(const Monomial& factor) const;

  std::size_t nonzero_count() const;
  /// Largest number of terms in any single entry.
  std::size_t max_term_count() const;

  bool operator==(const RingMatrix& other) const = default;

 private:
  std::size_t dim_ = 0;
  std::vector<LaurentPoly> entries_;
};

RingMatrix mat_mul(const RingMatrix& a, const RingMatrix& b);
inline RingMatrix operator*(const RingMatrix& a, const RingMatrix& b) { return mat_mul(a, b); }

/// Exact inverse by fraction-free Gauss-Jordan elimination with first-nonzero
/// pivoting. The result is checked against the input before returning.
RingMatrix inverse(const RingMatrix& a);

struct BlockPlacement {
  std::size_t block_row;
  std::size_t block_col;
  RingMatrix block;
};

/// Assembles an (n_blocks * block_dim)-square matrix; unplaced blocks are zero.
RingMatrix block_assemble(std::size_t n_blocks, std::size_t block_dim,
                          std::span<const BlockPlacement> placements);

/// Copies out block (block_row, block_col) of size block_dim.
RingMatrix extract_block(const RingMatrix& m, std::size_t block_dim, std::size_t block_row,
                         std::size_t block_col);

RingMatrix direct_sum(const RingMatrix& a, const RingMatrix& b);

bool is_identity(const RingMatrix& a);
bool is_zero(const RingMatrix& a);
std::optional<LaurentPoly> is_scalar(const RingMatrix& a);

/// Block-monomial view: exactly one non-zero block in every block row and
/// block column. block_perm[j] is the block row holding column block j.
struct BlockStructure {
  std::size_t block_dim = 0;
  std::vector<std::size_t> block_perm;
  std::vector<RingMatrix> blocks;  ///< blocks[j] sits at (block_perm[j], j)
};

std::optional<BlockStructure> block_structure(const RingMatrix& m, std::size_t block_dim);

}  // namespace mcgrep
