#pragma once

#include <memory>
#include <string>
#include <vector>

#include "mcgrep/matrix.hpp"
#include "mcgrep/word.hpp"

namespace mcgrep {

/// Homomorphism from a group context to invertible matrices, given by cached
/// images of the generators and their inverses. A word w = l_1 ... l_k maps to
/// the product image(l_1) * ... * image(l_k).
class Representation {
 public:
  virtual ~Representation() = default;

  virtual Context context() const = 0;
  virtual std::string name() const = 0;
  virtual std::size_t dimension() const = 0;

  virtual const RingMatrix& generator(int i) const = 0;
  virtual const RingMatrix& generator_inverse(int i) const = 0;

  const RingMatrix& image(const Letter& l) const {
    return l.sign > 0 ? generator(l.index) : generator_inverse(l.index);
  }

  virtual RingMatrix evaluate(const Word& w) const;

 protected:
  void require_context(const Word& w) const;
};

/// Faithful representation of the context (for braid(n), Lawrence-Krammer
/// when `rescaled` is false; the centre-killing rescaled representation when
/// true). `rescaled` is ignored by the other contexts.
std::unique_ptr<Representation> make_representation(Context ctx, bool rescaled = false);

/// Whether rep sends w1 * w2^{-1} to the identity.
bool equal_words(const Word& w1, const Word& w2, const Representation& rep);
bool equal_words(const Word& w1, const Word& w2);

}  // namespace mcgrep
