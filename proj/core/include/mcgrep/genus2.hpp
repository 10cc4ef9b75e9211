#pragma once

// The symplectic action of Dehn twists on first homology and the direct sum
// with the 2g+2 punctured sphere representation, giving a faithful
// representation of the hyperelliptic mapping class group (for g = 2, the whole
// mapping class group).

#include <cstdint>
#include <vector>

#include "mcgrep/representation.hpp"
#include "mcgrep/sphere.hpp"

namespace mcgrep {

/// Coordinates in the basis (a_1, b_1, ..., a_g, b_g) with <a_i, b_i> = 1.
struct HomologyClass {
  std::vector<std::int64_t> coords;

  static HomologyClass zero(int g);
  static HomologyClass a(int g, int i);
  static HomologyClass b(int g, int i);

  int genus() const { return static_cast<int>(coords.size() / 2); }
  HomologyClass operator+(const HomologyClass& other) const;
  bool operator==(const HomologyClass&) const = default;
};

/// Algebraic intersection form.
std::int64_t intersection(const HomologyClass& x, const HomologyClass& y);

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// x -> x + <x, c> c as a 2g x 2g integer matrix acting on column vectors.
IntMatrix transvection_integer(const HomologyClass& c);
RingMatrix transvection(const HomologyClass& c);

/// The standard symplectic form matrix J with J[a_i][b_i] = 1, J[b_i][a_i] = -1.
IntMatrix symplectic_form_matrix(int g);

/// Homology classes of the 2g+1 chain curves: c_1 = a_1, c_{2k} = b_k,
/// c_{2k+1} = a_k + a_{k+1} with a_{g+1} = 0.
std::vector<HomologyClass> lickorish_classes(int g);

/// Transvection along lickorish_classes(g)[i-1], 1 <= i <= 2g+1.
RingMatrix symplectic_generator(int g, int i);
IntMatrix symplectic_generator_integer(int g, int i);

/// t_1 ... t_{2g+1} t_{2g+1} ... t_1 in the genus2 context (g = 2) or
/// hyperelliptic(g).
Word involution_word(int g);

/// Symplectic summand on its own: t_i -> symplectic_generator(g, i).
class SymplecticRep final : public Representation {
 public:
  explicit SymplecticRep(int g, Context ctx);

  Context context() const override { return ctx_; }
  std::string name() const override { return "symplectic representation on " + ctx_.name(); }
  std::size_t dimension() const override { return 2 * static_cast<std::size_t>(g_); }
  const RingMatrix& generator(int i) const override;
  const RingMatrix& generator_inverse(int i) const override;

 private:
  int g_;
  Context ctx_;
  std::vector<RingMatrix> gens_;
  std::vector<RingMatrix> invs_;
};

/// Direct sum of the sphere representation on 2g+2 punctures (t_i -> s_i) and
/// the symplectic representation; dimension (2g+2) C(2g+1,2) + 2g.
class HyperellipticRep : public Representation {
 public:
  explicit HyperellipticRep(int g);

  int genus() const { return g_; }
  const SphereRep& sphere_part() const { return sphere_; }
  const SymplecticRep& symplectic_part() const { return symplectic_; }

  Context context() const override { return ctx_; }
  std::string name() const override;
  std::size_t dimension() const override;
  const RingMatrix& generator(int i) const override;
  const RingMatrix& generator_inverse(int i) const override;

  /// Direct sum of the two summands evaluated separately. Accepts words in
  /// hyperelliptic(g), and in genus2 when g = 2.
  RingMatrix evaluate(const Word& w) const override;

 protected:
  HyperellipticRep(int g, Context ctx);

 private:
  int g_;
  Context ctx_;
  SphereRep sphere_;
  SymplecticRep symplectic_;
  std::vector<RingMatrix> gens_;
  std::vector<RingMatrix> invs_;
};

/// The 64-dimensional representation of the genus-2 mapping class group.
class Genus2Rep final : public HyperellipticRep {
 public:
  Genus2Rep();
};

std::size_t hyperelliptic_dimension(int g);

RingMatrix genus2_eval(const Word& w);

}  // namespace mcgrep
