#include "mcgrep/sphere.hpp"

#include <stdexcept>
#include <string>

#include "mcgrep/free_group.hpp"

namespace mcgrep {

namespace {

void require_punctures(int n) {
  if (n < 4) throw std::out_of_range("sphere representation needs n >= 4");
}

void require_indices(int n, int i, int j) {
  if (i < 1 || i > n - 1 || j < 1 || j > n) {
    throw std::out_of_range("coset index out of range: i=" + std::to_string(i) +
                            ", j=" + std::to_string(j));
  }
}

}  // namespace

Word tau_word(int n) {
  require_punctures(n);
  const Context ctx = Context::braid(n - 1);
  return chain_word(ctx, 1, n - 2) * chain_word(ctx, n - 2, 1);
}

Word nu_word(int n, int j) {
  require_punctures(n);
  if (j < 3 || j > n) throw std::out_of_range("nu_word: need 3 <= j <= n");
  return chain_word(Context::braid(n - 1), n - j + 1, n - 2);
}

Word coset_word(int n, int j) {
  require_punctures(n);
  if (j < 1 || j > n) throw std::out_of_range("coset_word: need 1 <= j <= n");
  const Context ctx = Context::braid(n);
  const Word last(ctx, {n - 1});
  if (j == 1) return Word(ctx);
  if (j == 2) return last;
  const Word nu = nu_word(n, j).in_context(ctx);
  return nu * last * nu.inverse();
}

int coset_permutation(int n, int i, int j) {
  require_indices(n, i, j);
  if (j == n - i) return n - i + 1;
  if (j == n - i + 1) return n - i;
  return j;
}

CosetSystem CosetSystem::build(int n) {
  require_punctures(n);
  CosetSystem s;
  s.n = n;
  for (int j = 1; j <= n; ++j) s.coset_words.push_back(coset_word(n, j));
  for (int i = 1; i < n; ++i) s.transpositions.emplace_back(n - i, n - i + 1);
  return s;
}

int CosetSystem::apply(int i, int j) const {
  const auto [a, b] = transpositions.at(static_cast<std::size_t>(i - 1));
  return j == a ? b : j == b ? a : j;
}

Word coset_factor(int n, int i, int j) {
  require_punctures(n);
  require_indices(n, i, j);
  const Context ctx = Context::braid(n - 1);
  if (i != n - 1) {
    if (j != n + 1 - i) return Word(ctx, {i});
    const Word prefix = i > 1 ? chain_word(ctx, 1, i - 1) : Word(ctx);
    return prefix.inverse() * tau_word(n).inverse() * prefix * Word(ctx, {-i});
  }
  if (j == 1) return Word(ctx);
  if (j == 2) return (chain_word(ctx, n - 2, 1) * chain_word(ctx, 1, n - 2)).inverse();
  const Word nu = nu_word(n, j);
  return nu * Word(ctx, {n - 2}) * nu.inverse();
}

bool verify_coset_identity(int n, int i, int j) {
  const Context ctx = Context::braid(n);
  const Word element =
      coset_word(n, coset_permutation(n, i, j)).inverse() * Word(ctx, {i}) * coset_word(n, j);
  if (strand_permutation(element).back() != n) return false;
  const Word factor = coset_factor(n, i, j).in_context(ctx);
  return is_trivial_in_sphere_group(element * factor.inverse());
}

SphereRep::SphereRep(int n)
    : n_((require_punctures(n), n)), base_(n - 1, true), cosets_(CosetSystem::build(n)) {
  const std::size_t bd = base_.dimension();
  for (int i = 1; i < n; ++i) {
    std::vector<BlockPlacement> forward, backward;
    for (int j = 1; j <= n; ++j) {
      const Word f = coset_factor(n, i, j);
      const auto row = static_cast<std::size_t>(cosets_.apply(i, j) - 1);
      const auto col = static_cast<std::size_t>(j - 1);
      forward.push_back({row, col, base_.evaluate(f)});
      backward.push_back({col, row, base_.evaluate(f.inverse())});
    }
    gens_.push_back(block_assemble(static_cast<std::size_t>(n), bd, forward));
    invs_.push_back(block_assemble(static_cast<std::size_t>(n), bd, backward));
  }
}

std::string SphereRep::name() const { return "induced representation on " + context().name(); }

const RingMatrix& SphereRep::generator(int i) const {
  return gens_.at(static_cast<std::size_t>(i - 1));
}

const RingMatrix& SphereRep::generator_inverse(int i) const {
  return invs_.at(static_cast<std::size_t>(i - 1));
}

RingMatrix SphereRep::elimination_inverse(int i) const { return inverse(generator(i)); }

RingMatrix induced_generator(int n, int i) {
  if (i < 1 || i > n - 1) throw std::out_of_range("induced_generator: index out of range");
  return SphereRep(n).generator(i);
}

RingMatrix sphere_eval(int n, const Word& w) { return SphereRep(n).evaluate(w); }

}  // namespace mcgrep
