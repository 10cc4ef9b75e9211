#pragma once

// Representation of the mapping class group of the n-punctured sphere induced
// from the rescaled Lawrence-Krammer representation of B_{n-1}, which factors
// through the stabiliser of the last puncture.
//
// Blocks are indexed by cosets c_1..c_n of that stabiliser; generator s_i maps
// block j to block phi_i(j) through the rescaled image of the coset factor
// c_{phi_i(j)}^{-1} s_i c_j, a word in s_1..s_{n-2}.

#include <utility>
#include <vector>

#include "mcgrep/lawrence_krammer.hpp"
#include "mcgrep/representation.hpp"

namespace mcgrep {

/// s_1 s_2 ... s_{n-2} s_{n-2} ... s_1 in braid(n-1).
Word tau_word(int n);

/// s_{n-j+1} s_{n-j+2} ... s_{n-2} in braid(n-1), for 3 <= j <= n.
Word nu_word(int n, int j);

/// Coset representative c_j as a braid(n) word: c_1 = e, c_2 = s_{n-1},
/// c_j = nu_j s_{n-1} nu_j^{-1}.
Word coset_word(int n, int j);

/// phi_i(j): the index k with s_i c_j in c_k Stab. phi_i swaps n-i and n-i+1.
int coset_permutation(int n, int i, int j);

struct CosetSystem {
  int n = 0;
  std::vector<Word> coset_words;                   ///< c_1..c_n
  std::vector<std::pair<int, int>> transpositions;  ///< phi_1..phi_{n-1}

  static CosetSystem build(int n);
  int apply(int i, int j) const;
};

/// The element c_{phi_i(j)}^{-1} s_i c_j rewritten in s_1..s_{n-2}, as an
/// unreduced braid(n-1) word.
Word coset_factor(int n, int i, int j);

/// Checks c_{phi_i(j)}^{-1} s_i c_j against coset_factor(n, i, j) with the
/// free-group model: the element fixes puncture n and the quotient by the
/// factor is trivial in the sphere mapping class group.
bool verify_coset_identity(int n, int i, int j);

class SphereRep final : public Representation {
 public:
  explicit SphereRep(int n);

  int punctures() const { return n_; }
  std::size_t block_dim() const { return base_.dimension(); }
  const LawrenceKrammer& base() const { return base_; }
  const CosetSystem& cosets() const { return cosets_; }

  Context context() const override { return Context::sphere(n_); }
  std::string name() const override;
  std::size_t dimension() const override { return n_ * block_dim(); }
  const RingMatrix& generator(int i) const override;
  /// Blockwise inverse: transposed block permutation with each block the
  /// rescaled image of the inverted coset factor.
  const RingMatrix& generator_inverse(int i) const override;

  /// Inverse of generator(i) recomputed by elimination; for cross-checks.
  RingMatrix elimination_inverse(int i) const;

 private:
  int n_;
  LawrenceKrammer base_;
  CosetSystem cosets_;
  std::vector<RingMatrix> gens_;
  std::vector<RingMatrix> invs_;
};

/// Induced image of s_i, n >= 4.
RingMatrix induced_generator(int n, int i);

RingMatrix sphere_eval(int n, const Word& w);

}  // namespace mcgrep
