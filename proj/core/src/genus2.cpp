#include "mcgrep/genus2.hpp"

#include <stdexcept>
#include <string>

namespace mcgrep {

namespace {

void require_genus(int g) {
  if (g < 2) throw std::out_of_range("genus must be at least 2");
}

Context context_for_genus(int g) {
  return g == 2 ? Context::genus2() : Context::hyperelliptic(g);
}

RingMatrix to_ring(const IntMatrix& m) {
  RingMatrix r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (m[i][j] != 0) r.at(i, j) = LaurentPoly(Integer(m[i][j]));
    }
  }
  return r;
}

Word as_sphere_word(const Word& w) {
  return w.in_context(Context::sphere(w.context().strands()));
}

}  // namespace

HomologyClass HomologyClass::zero(int g) {
  return HomologyClass{std::vector<std::int64_t>(2 * static_cast<std::size_t>(g), 0)};
}

HomologyClass HomologyClass::a(int g, int i) {
  HomologyClass c = zero(g);
  c.coords.at(2 * static_cast<std::size_t>(i - 1)) = 1;
  return c;
}

HomologyClass HomologyClass::b(int g, int i) {
  HomologyClass c = zero(g);
  c.coords.at(2 * static_cast<std::size_t>(i - 1) + 1) = 1;
  return c;
}

HomologyClass HomologyClass::operator+(const HomologyClass& other) const {
  if (coords.size() != other.coords.size()) throw std::invalid_argument("genus mismatch");
  HomologyClass r = *this;
  for (std::size_t k = 0; k < coords.size(); ++k) r.coords[k] += other.coords[k];
  return r;
}

std::int64_t intersection(const HomologyClass& x, const HomologyClass& y) {
  if (x.coords.size() != y.coords.size()) throw std::invalid_argument("genus mismatch");
  std::int64_t s = 0;
  for (std::size_t k = 0; k + 1 < x.coords.size(); k += 2) {
    s += x.coords[k] * y.coords[k + 1] - x.coords[k + 1] * y.coords[k];
  }
  return s;
}

IntMatrix transvection_integer(const HomologyClass& c) {
  const std::size_t n = c.coords.size();
  IntMatrix m(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t col = 0; col < n; ++col) {
    HomologyClass e{std::vector<std::int64_t>(n, 0)};
    e.coords[col] = 1;
    const std::int64_t w = intersection(e, c);
    for (std::size_t row = 0; row < n; ++row) m[row][col] = e.coords[row] + w * c.coords[row];
  }
  return m;
}

RingMatrix transvection(const HomologyClass& c) { return to_ring(transvection_integer(c)); }

IntMatrix symplectic_form_matrix(int g) {
  const std::size_t n = 2 * static_cast<std::size_t>(g);
  IntMatrix j(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t k = 0; k < n; k += 2) {
    j[k][k + 1] = 1;
    j[k + 1][k] = -1;
  }
  return j;
}

std::vector<HomologyClass> lickorish_classes(int g) {
  require_genus(g);
  std::vector<HomologyClass> out{HomologyClass::a(g, 1)};
  for (int k = 1; k <= g; ++k) {
    out.push_back(HomologyClass::b(g, k));
    out.push_back(k < g ? HomologyClass::a(g, k) + HomologyClass::a(g, k + 1)
                        : HomologyClass::a(g, k));
  }
  return out;
}

IntMatrix symplectic_generator_integer(int g, int i) {
  const auto classes = lickorish_classes(g);
  if (i < 1 || i > static_cast<int>(classes.size())) {
    throw std::out_of_range("symplectic_generator: index out of range");
  }
  return transvection_integer(classes[static_cast<std::size_t>(i - 1)]);
}

RingMatrix symplectic_generator(int g, int i) {
  return to_ring(symplectic_generator_integer(g, i));
}

Word involution_word(int g) {
  require_genus(g);
  const Context ctx = context_for_genus(g);
  const int m = ctx.generator_count();
  return chain_word(ctx, 1, m) * chain_word(ctx, m, 1);
}

SymplecticRep::SymplecticRep(int g, Context ctx) : g_(g), ctx_(ctx) {
  require_genus(g);
  for (int i = 1; i <= 2 * g + 1; ++i) {
    gens_.push_back(symplectic_generator(g, i));
    invs_.push_back(inverse(gens_.back()));
  }
}

const RingMatrix& SymplecticRep::generator(int i) const {
  return gens_.at(static_cast<std::size_t>(i - 1));
}

const RingMatrix& SymplecticRep::generator_inverse(int i) const {
  return invs_.at(static_cast<std::size_t>(i - 1));
}

HyperellipticRep::HyperellipticRep(int g) : HyperellipticRep(g, Context::hyperelliptic(g)) {}

HyperellipticRep::HyperellipticRep(int g, Context ctx)
    : g_((require_genus(g), g)), ctx_(ctx), sphere_(2 * g + 2), symplectic_(g, ctx) {
  for (int i = 1; i <= 2 * g + 1; ++i) {
    gens_.push_back(direct_sum(sphere_.generator(i), symplectic_.generator(i)));
    invs_.push_back(direct_sum(sphere_.generator_inverse(i), symplectic_.generator_inverse(i)));
  }
}

std::string HyperellipticRep::name() const {
  return "sphere (+) symplectic representation on " + ctx_.name();
}

std::size_t HyperellipticRep::dimension() const {
  return sphere_.dimension() + symplectic_.dimension();
}

const RingMatrix& HyperellipticRep::generator(int i) const {
  return gens_.at(static_cast<std::size_t>(i - 1));
}

const RingMatrix& HyperellipticRep::generator_inverse(int i) const {
  return invs_.at(static_cast<std::size_t>(i - 1));
}

RingMatrix HyperellipticRep::evaluate(const Word& w) const {
  const bool accepted =
      w.context() == ctx_ || (g_ == 2 && (w.context() == Context::genus2() ||
                                          w.context() == Context::hyperelliptic(2)));
  if (!accepted) {
    throw std::invalid_argument(name() + " cannot evaluate a word from " + w.context().name());
  }
  const Word local = w.in_context(ctx_);
  return direct_sum(sphere_.evaluate(as_sphere_word(local)), symplectic_.evaluate(local));
}

Genus2Rep::Genus2Rep() : HyperellipticRep(2, Context::genus2()) {}

std::size_t hyperelliptic_dimension(int g) {
  require_genus(g);
  const auto n = static_cast<std::size_t>(2 * g + 2);
  return n * binomial2(2 * g + 1) + 2 * static_cast<std::size_t>(g);
}

RingMatrix genus2_eval(const Word& w) { return Genus2Rep().evaluate(w); }

}  // namespace mcgrep
