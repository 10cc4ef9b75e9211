#include "mcgrep/lawrence_krammer.hpp"

#include <stdexcept>
#include <string>

namespace mcgrep {

std::size_t binomial2(int n) {
  return n < 2 ? 0 : static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
}

std::size_t lk_basis_index(int n, int j, int k) {
  if (j < 1 || j >= k || k > n) throw std::out_of_range("invalid basis pair (j,k)");
  // Pairs with first entry below j come first: sum_{a<j} (n - a).
  const std::size_t before = static_cast<std::size_t>(j - 1) * static_cast<std::size_t>(n) -
                             static_cast<std::size_t>(j - 1) * static_cast<std::size_t>(j) / 2;
  return before + static_cast<std::size_t>(k - j - 1);
}

std::pair<int, int> lk_basis_pair(int n, std::size_t index) {
  for (int j = 1; j < n; ++j) {
    const auto row = static_cast<std::size_t>(n - j);
    if (index < row) return {j, j + 1 + static_cast<int>(index)};
    index -= row;
  }
  throw std::out_of_range("basis index out of range");
}

RingMatrix lk_generator(int n, int i) {
  if (n < 2 || i < 1 || i > n - 1) {
    throw std::out_of_range("lk_generator: need n >= 2 and 1 <= i <= n-1");
  }
  const LaurentPoly q = LaurentPoly::q();
  const LaurentPoly t = LaurentPoly::t();
  const LaurentPoly one(1);
  const LaurentPoly q2_minus_q = q * q - q;

  RingMatrix m(binomial2(n));
  for (int j = 1; j < n; ++j) {
    for (int k = j + 1; k <= n; ++k) {
      const std::size_t col = lk_basis_index(n, j, k);
      auto put = [&](int a, int b, const LaurentPoly& c) {
        m.at(lk_basis_index(n, a, b), col) += c;
      };
      if (i == j - 1) {
        put(i, k, q);
        put(i, j, q2_minus_q);
        put(j, k, one - q);
      } else if (i == j && i == k - 1) {
        put(j, k, -(t * q * q));
      } else if (i == j) {
        put(j + 1, k, one);
      } else if (i == k - 1) {
        put(j, i, q);
        put(j, k, one - q);
        put(i, k, -(q2_minus_q * t));
      } else if (i == k) {
        put(j, k + 1, one);
      } else {
        put(j, k, one);
      }
    }
  }
  return m;
}

RingMatrix lk_generator_inverse(int n, int i) { return inverse(lk_generator(n, i)); }

int abelianization(const Word& w) {
  if (w.context().kind() != GroupKind::braid) {
    throw std::invalid_argument("abelianization expects a braid(n) word, got " +
                                w.context().name());
  }
  return letter_sum(w);
}

Monomial rescaling_scalar(int n) {
  if (n < 2) throw std::out_of_range("rescaling_scalar: need n >= 2");
  const auto d = static_cast<std::int64_t>(binomial2(n));
  return Monomial{1, Exponent(-n, d), Exponent(-1, d)};
}

Word full_twist_word(int n) {
  const Context ctx = Context::braid(n);
  return chain_word(ctx, 1, n - 1).power(n);
}

LaurentPoly full_twist_scalar(int n) { return LaurentPoly::monomial(1, 2 * n, 2); }

LawrenceKrammer::LawrenceKrammer(int n, bool rescaled) : n_(n), rescaled_(rescaled) {
  if (n < 2) throw std::out_of_range("LawrenceKrammer: need n >= 2");
  const Monomial s = rescaling_scalar(n);
  for (int i = 1; i < n; ++i) {
    gens_.push_back(lk_generator(n, i));
    invs_.push_back(inverse(gens_.back()));
    if (rescaled_) {
      rgens_.push_back(gens_.back().scaled(s));
      rinvs_.push_back(inverse(rgens_.back()));
    }
  }
}

std::string LawrenceKrammer::name() const {
  return std::string(rescaled_ ? "rescaled Lawrence-Krammer" : "Lawrence-Krammer") + " on " +
         context().name();
}

const RingMatrix& LawrenceKrammer::generator(int i) const {
  return (rescaled_ ? rgens_ : gens_).at(static_cast<std::size_t>(i - 1));
}

const RingMatrix& LawrenceKrammer::generator_inverse(int i) const {
  return (rescaled_ ? rinvs_ : invs_).at(static_cast<std::size_t>(i - 1));
}

RingMatrix LawrenceKrammer::evaluate(const Word& w) const {
  require_context(w);
  RingMatrix r = RingMatrix::identity(dimension());
  for (const auto& l : w.letters()) {
    r = r * (l.sign > 0 ? gens_ : invs_)[static_cast<std::size_t>(l.index - 1)];
  }
  if (!rescaled_) return r;
  const LaurentPoly factor = mono_pow(rescaling_scalar(n_), abelianization(w));
  return r.scaled(*factor.as_monomial());
}

RingMatrix lk_eval(int n, const Word& w, bool rescaled) {
  return LawrenceKrammer(n, rescaled).evaluate(w);
}

}  // namespace mcgrep
