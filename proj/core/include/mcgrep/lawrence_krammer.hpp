#pragma once

// Lawrence-Krammer representation of the braid group B_n on the C(n,2)
// dimensional module with basis v_{j,k}, 1 <= j < k <= n, and its rescaling
// by t^{-1/d} q^{-n/d} per generator (d = C(n,2)) which kills the centre.

#include <cstddef>
#include <utility>
#include <vector>

#include "mcgrep/representation.hpp"

namespace mcgrep {

/// Row/column index of v_{j,k} under the lexicographic order on pairs.
std::size_t lk_basis_index(int n, int j, int k);
/// Inverse of lk_basis_index.
std::pair<int, int> lk_basis_pair(int n, std::size_t index);

std::size_t binomial2(int n);

/// Image of s_i: column (j,k) holds the image of v_{j,k}.
RingMatrix lk_generator(int n, int i);
RingMatrix lk_generator_inverse(int n, int i);

/// Signed letter count of a braid(n) word.
int abelianization(const Word& w);

/// The unit monomial t^{-1/d} q^{-n/d}, d = C(n,2).
Monomial rescaling_scalar(int n);

/// (s_1 s_2 ... s_{n-1})^n.
Word full_twist_word(int n);

/// q^{2n} t^2, the scalar by which the full twist acts.
LaurentPoly full_twist_scalar(int n);

class LawrenceKrammer final : public Representation {
 public:
  explicit LawrenceKrammer(int n, bool rescaled = false);

  int strands() const { return n_; }
  bool rescaled() const { return rescaled_; }

  Context context() const override { return Context::braid(n_); }
  std::string name() const override;
  std::size_t dimension() const override { return binomial2(n_); }
  const RingMatrix& generator(int i) const override;
  const RingMatrix& generator_inverse(int i) const override;

  RingMatrix evaluate(const Word& w) const override;

 private:
  int n_;
  bool rescaled_;
  std::vector<RingMatrix> gens_;    // unscaled
  std::vector<RingMatrix> invs_;    // unscaled
  std::vector<RingMatrix> rgens_;   // rescaled, populated when rescaled_
  std::vector<RingMatrix> rinvs_;
};

/// Image of w under the Lawrence-Krammer representation, or its rescaled
/// version when `rescaled`.
RingMatrix lk_eval(int n, const Word& w, bool rescaled);

}  // namespace mcgrep
