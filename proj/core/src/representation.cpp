#include "mcgrep/representation.hpp"

#include <stdexcept>

#include "mcgrep/genus2.hpp"
#include "mcgrep/lawrence_krammer.hpp"
#include "mcgrep/sphere.hpp"

namespace mcgrep {

void Representation::require_context(const Word& w) const {
  if (!(w.context() == context())) {
    throw std::invalid_argument(name() + " cannot evaluate a word from " + w.context().name());
  }
}

RingMatrix Representation::evaluate(const Word& w) const {
  require_context(w);
  RingMatrix r = RingMatrix::identity(dimension());
  for (const auto& l : w.letters()) r = r * image(l);
  return r;
}

std::unique_ptr<Representation> make_representation(Context ctx, bool rescaled) {
  switch (ctx.kind()) {
    case GroupKind::braid:
      return std::make_unique<LawrenceKrammer>(ctx.parameter(), rescaled);
    case GroupKind::sphere:
      return std::make_unique<SphereRep>(ctx.parameter());
    case GroupKind::genus2:
      return std::make_unique<Genus2Rep>();
    case GroupKind::hyperelliptic:
      return std::make_unique<HyperellipticRep>(ctx.parameter());
  }
  throw std::invalid_argument("unknown context");
}

bool equal_words(const Word& w1, const Word& w2, const Representation& rep) {
  if (!(w1.context() == w2.context())) {
    throw std::invalid_argument("equal_words: words from " + w1.context().name() + " and " +
                                w2.context().name());
  }
  return is_identity(rep.evaluate(free_reduce(w1 * w2.inverse())));
}

bool equal_words(const Word& w1, const Word& w2) {
  if (!(w1.context() == w2.context())) {
    throw std::invalid_argument("equal_words: words from " + w1.context().name() + " and " +
                                w2.context().name());
  }
  return equal_words(w1, w2, *make_representation(w1.context()));
}

}  // namespace mcgrep
