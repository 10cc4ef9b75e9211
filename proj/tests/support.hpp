#pragma once

// Shared helpers for the test suites: random generators for property tests.

#include <cstdint>
#include <random>
#include <vector>

#include "mcgrep/laurent.hpp"
#include "mcgrep/matrix.hpp"
#include "mcgrep/word.hpp"

namespace mcgrep::testing {

inline LaurentPoly random_poly(std::mt19937_64& rng, int max_terms = 4, int exp_range = 3,
                               int denominator = 1) {
  std::uniform_int_distribution<int> count(0, max_terms);
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<int> expo(-exp_range * denominator, exp_range * denominator);
  std::vector<Monomial> terms;
  const int n = count(rng);
  for (int i = 0; i < n; ++i) {
    terms.push_back(Monomial{coeff(rng), Exponent(expo(rng), denominator),
                             Exponent(expo(rng), denominator)});
  }
  return LaurentPoly::from_terms(std::move(terms));
}

inline RingMatrix random_matrix(std::mt19937_64& rng, std::size_t dim) {
  RingMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) m.at(i, j) = random_poly(rng, 2, 2);
  }
  return m;
}

inline Word random_word(std::mt19937_64& rng, Context ctx, std::size_t length) {
  std::uniform_int_distribution<int> index(1, ctx.generator_count());
  std::bernoulli_distribution sign(0.5);
  std::vector<Letter> letters;
  for (std::size_t i = 0; i < length; ++i) letters.push_back(Letter{index(rng), sign(rng) ? 1 : -1});
  return Word(ctx, std::move(letters));
}

/// Every word of exactly `length` letters over generators and inverses.
inline std::vector<Word> all_words(Context ctx, std::size_t length) {
  std::vector<Word> out{Word(ctx)};
  for (std::size_t step = 0; step < length; ++step) {
    std::vector<Word> next;
    for (const auto& w : out) {
      for (int i = 1; i <= ctx.generator_count(); ++i) {
        for (int s : {1, -1}) next.push_back(w * Word(ctx, {Letter{i, s}}));
      }
    }
    out = std::move(next);
  }
  return out;
}

inline std::vector<Word> all_words_up_to(Context ctx, std::size_t max_length) {
  std::vector<Word> out;
  for (std::size_t len = 0; len <= max_length; ++len) {
    auto ws = all_words(ctx, len);
    out.insert(out.end(), ws.begin(), ws.end());
  }
  return out;
}

}  // namespace mcgrep::testing
