#pragma once

// Artin action of the braid group on a free group. Serves as an independent
// faithful model of B_n (and, through the inner-automorphism test, of the
// punctured-sphere mapping class group) for cross-checking matrix results.

#include <vector>

#include "mcgrep/word.hpp"

namespace mcgrep {

/// Free-group word: +k is x_k, -k is x_k^{-1}.
using FreeWord = std::vector<int>;

FreeWord free_reduce(FreeWord w);
FreeWord free_inverse(const FreeWord& w);

/// Endomorphism of the free group on x_1..x_n given by the images of the
/// generators; every image is kept freely reduced.
class FreeGroupEndo {
 public:
  static FreeGroupEndo identity(int rank);
  explicit FreeGroupEndo(std::vector<FreeWord> images);

  int rank() const { return static_cast<int>(images_.size()); }
  const std::vector<FreeWord>& images() const { return images_; }
  const FreeWord& image(int generator) const { return images_.at(generator - 1); }

  FreeWord apply(const FreeWord& w) const;
  /// (this o other)(x) = this(other(x)).
  FreeGroupEndo compose(const FreeGroupEndo& other) const;

  bool operator==(const FreeGroupEndo&) const = default;

 private:
  std::vector<FreeWord> images_;
};

/// Composite automorphism with artin_apply(uv) = artin_apply(u) o artin_apply(v),
/// where s_i sends x_i -> x_i x_{i+1} x_i^{-1}, x_{i+1} -> x_i. Accepts braid(n)
/// words only.
FreeGroupEndo artin_apply(const Word& w);

/// Permutation of the strands induced by a braid(n) or sphere(n) word, as the
/// image table p[k-1] = image of strand k under left-to-right composition of
/// functions (the rightmost letter acts first).
std::vector<int> strand_permutation(const Word& w);

/// Whether a braid(n) or sphere(n) word is trivial in the mapping class group
/// of the n-punctured sphere: its Artin action descends to an inner
/// automorphism of <x_1..x_n | x_1 ... x_n>.
bool is_trivial_in_sphere_group(const Word& w);

}  // namespace mcgrep
