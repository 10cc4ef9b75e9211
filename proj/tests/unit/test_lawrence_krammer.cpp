#include <doctest.h>

#include <map>

#include "mcgrep/export.hpp"
#include "mcgrep/free_group.hpp"
#include "mcgrep/lawrence_krammer.hpp"
#include "support.hpp"

using namespace mcgrep;

namespace {

const LaurentPoly q = LaurentPoly::q();
const LaurentPoly t = LaurentPoly::t();
const LaurentPoly one(1);

// Column of the matrix, i.e. the image of one basis vector.
std::map<std::pair<int, int>, LaurentPoly> image_of(const RingMatrix& m, int n, int j, int k) {
  std::map<std::pair<int, int>, LaurentPoly> out;
  const std::size_t col = lk_basis_index(n, j, k);
  for (std::size_t row = 0; row < m.dim(); ++row) {
    if (!m(row, col).is_zero()) out[lk_basis_pair(n, row)] = m(row, col);
  }
  return out;
}

}  // namespace

TEST_SUITE("lawrence_krammer") {
  TEST_CASE("basis ordering is lexicographic") {
    CHECK(lk_basis_index(4, 1, 2) == 0);
    CHECK(lk_basis_index(4, 1, 4) == 2);
    CHECK(lk_basis_index(4, 2, 3) == 3);
    CHECK(lk_basis_index(4, 3, 4) == 5);
    for (std::size_t i = 0; i < binomial2(6); ++i) {
      const auto [j, k] = lk_basis_pair(6, i);
      CHECK(lk_basis_index(6, j, k) == i);
    }
  }

  TEST_CASE("two strands") {
    CHECK(lk_generator(2, 1) == RingMatrix::scalar(1, -(t * q * q)));
    CHECK(lk_generator_inverse(2, 1) == RingMatrix::scalar(1, LaurentPoly::monomial(-1, -2, -1)));
  }

  TEST_CASE("three strand generators, full matrices") {
    RingMatrix s1(3), s2(3);
    s1.at(0, 0) = -(t * q * q);
    s1.at(2, 1) = one;
    s1.at(1, 2) = q;
    s1.at(0, 2) = q * q - q;
    s1.at(2, 2) = one - q;
    s2.at(1, 0) = one;
    s2.at(0, 1) = q;
    s2.at(1, 1) = one - q;
    s2.at(2, 1) = -((q * q - q) * t);
    s2.at(2, 2) = -(t * q * q);
    CHECK(lk_generator(3, 1) == s1);
    CHECK(lk_generator(3, 2) == s2);
  }

  TEST_CASE("individual cases of the action") {
    const auto img = image_of(lk_generator(3, 1), 3, 2, 3);
    CHECK(img.size() == 3);
    CHECK(img.at({1, 3}) == q);
    CHECK(img.at({1, 2}) == q * q - q);
    CHECK(img.at({2, 3}) == one - q);

    const auto fixed = image_of(lk_generator(4, 1), 4, 3, 4);
    REQUIRE(fixed.size() == 1);
    CHECK(fixed.at({3, 4}) == one);

    CHECK_THROWS_AS(lk_generator(4, 4), std::out_of_range);
    CHECK_THROWS_AS(lk_generator(4, 0), std::out_of_range);
  }

  TEST_CASE("inverses") {
    for (int n = 2; n <= 6; ++n) {
      for (int i = 1; i < n; ++i) {
        CHECK(is_identity(lk_generator(n, i) * lk_generator_inverse(n, i)));
      }
    }
    const LawrenceKrammer lk(3);
    CHECK(lk.evaluate(Word(Context::braid(3), {-1})) == lk_generator_inverse(3, 1));
  }

  TEST_CASE("rescaled inverses match scaling the unscaled inverse") {
    for (int n = 2; n <= 6; ++n) {
      const LawrenceKrammer lk(n, true);
      const auto d = static_cast<std::int64_t>(n * (n - 1) / 2);
      const Monomial s_inv{1, Exponent(n, d), Exponent(1, d)};
      for (int i = 1; i < n; ++i) {
        CHECK(lk.generator(i) == lk_generator(n, i).scaled(rescaling_scalar(n)));
        CHECK(lk.generator_inverse(i) == lk_generator_inverse(n, i).scaled(s_inv));
      }
    }
  }

  TEST_CASE("braid relations for n <= 6") {
    for (int n = 3; n <= 6; ++n) {
      for (bool rescaled : {false, true}) {
        const LawrenceKrammer lk(n, rescaled);
        for (int i = 1; i + 1 < n; ++i) {
          const auto& a = lk.generator(i);
          const auto& b = lk.generator(i + 1);
          CHECK(a * b * a == b * a * b);
        }
        for (int i = 1; i < n; ++i) {
          for (int j = i + 2; j < n; ++j) {
            CHECK(lk.generator(i) * lk.generator(j) == lk.generator(j) * lk.generator(i));
          }
        }
      }
    }
  }

  TEST_CASE("abelianization") {
    CHECK(abelianization(Word(Context::braid(3), {1, -2})) == 0);
    CHECK(abelianization(full_twist_word(4)) == 12);
    CHECK(abelianization(Word(Context::braid(3))) == 0);
    CHECK_THROWS_AS(abelianization(Word(Context::sphere(4), {1})), std::invalid_argument);
    for (int n = 2; n <= 7; ++n) CHECK(abelianization(full_twist_word(n)) == n * (n - 1));
  }

  TEST_CASE("rescaling scalar") {
    CHECK(rescaling_scalar(5) == Monomial{1, Exponent(-1, 2), Exponent(-1, 10)});
    CHECK(rescaling_scalar(2) == Monomial{1, -2, -1});
    for (int n = 2; n <= 8; ++n) {
      CHECK((mono_pow(rescaling_scalar(n), n * (n - 1)) * full_twist_scalar(n)).is_one());
    }
  }

  TEST_CASE("full twist word") {
    CHECK(full_twist_word(3) == Word(Context::braid(3), {1, 2, 1, 2, 1, 2}));
    CHECK(full_twist_word(4).size() == 12);
  }

  TEST_CASE("centre acts by q^{2n} t^2 and the rescaling kills it") {
    for (int n = 2; n <= 6; ++n) {
      const auto lambda = is_scalar(lk_eval(n, full_twist_word(n), false));
      REQUIRE(lambda);
      CHECK(*lambda == LaurentPoly::monomial(1, 2 * n, 2));
      CHECK(is_identity(lk_eval(n, full_twist_word(n), true)));
    }
    CHECK(lk_eval(3, Word(Context::braid(3), {1, 2, 1}), true) ==
          lk_eval(3, Word(Context::braid(3), {2, 1, 2}), true));
  }

  TEST_CASE("rescaled images are unchanged by inserting the full twist") {
    std::mt19937_64 rng(17);
    const Context b4 = Context::braid(4);
    const LawrenceKrammer lk(4, true);
    for (int trial = 0; trial < 10; ++trial) {
      const Word w = testing::random_word(rng, b4, 6);
      const std::size_t cut = trial % 7;
      std::vector<Letter> letters = w.letters();
      const auto twist = full_twist_word(4).power(trial % 2 == 0 ? 1 : -1);
      letters.insert(letters.begin() + static_cast<std::ptrdiff_t>(cut), twist.letters().begin(),
                     twist.letters().end());
      CHECK(lk.evaluate(Word(b4, letters)) == lk.evaluate(w));
    }
  }

  TEST_CASE("free reduction does not change images") {
    std::mt19937_64 rng(23);
    const LawrenceKrammer lk(4);
    for (int trial = 0; trial < 10; ++trial) {
      const Word w = testing::random_word(rng, Context::braid(4), 10);
      CHECK(lk.evaluate(w) == lk.evaluate(free_reduce(w)));
    }
  }

  TEST_CASE("matrix equality matches the free-group model on short 3-braids") {
    const auto words = testing::all_words_up_to(Context::braid(3), 3);
    const LawrenceKrammer lk(3);
    std::vector<std::string> matrices;
    std::vector<FreeGroupEndo> endos;
    for (const auto& w : words) {
      matrices.push_back(export_matrix(lk.evaluate(w)));
      endos.push_back(artin_apply(w));
    }
    std::size_t equal_pairs = 0;
    for (std::size_t a = 0; a < words.size(); ++a) {
      for (std::size_t b = a + 1; b < words.size(); ++b) {
        const bool by_matrix = matrices[a] == matrices[b];
        CHECK(by_matrix == (endos[a] == endos[b]));
        equal_pairs += by_matrix;
      }
    }
    CHECK(equal_pairs > 0);
  }

  TEST_CASE("wrong context is rejected") {
    const LawrenceKrammer lk(3);
    CHECK_THROWS_AS(lk.evaluate(Word(Context::braid(4), {1})), std::invalid_argument);
  }
}
