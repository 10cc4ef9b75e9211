#include <doctest.h>

#include "mcgrep/lawrence_krammer.hpp"
#include "mcgrep/matrix.hpp"
#include "support.hpp"

using namespace mcgrep;

namespace {

const LaurentPoly q = LaurentPoly::q();
const LaurentPoly t = LaurentPoly::t();

RingMatrix one_by_one(const LaurentPoly& p) { return RingMatrix::scalar(1, p); }

RingMatrix integer_matrix(std::initializer_list<std::initializer_list<int>> rows) {
  RingMatrix m(rows.size());
  std::size_t i = 0;
  for (const auto& r : rows) {
    std::size_t j = 0;
    for (int v : r) m.at(i, j++) = LaurentPoly(v);
    ++i;
  }
  return m;
}

}  // namespace

TEST_SUITE("matrix") {
  TEST_CASE("mat_mul") {
    std::mt19937_64 rng(11);
    const RingMatrix a = testing::random_matrix(rng, 3);
    CHECK(RingMatrix::identity(3) * a == a);
    CHECK(a * RingMatrix::identity(3) == a);
    CHECK(is_identity(one_by_one(-(t * q * q)) *
                      one_by_one(LaurentPoly::monomial(-1, -2, -1))));
    CHECK_THROWS_AS(mat_mul(RingMatrix(2), RingMatrix(3)), std::invalid_argument);
  }

  TEST_CASE("braid relation on explicit 3-strand matrices") {
    const RingMatrix s1 = lk_generator(3, 1), s2 = lk_generator(3, 2);
    CHECK(s1 * s2 * s1 == s2 * s1 * s2);
    CHECK_FALSE(s1 * s2 == s2 * s1);
  }

  TEST_CASE("mat_mul is associative") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 20; ++trial) {
      const auto a = testing::random_matrix(rng, 3);
      const auto b = testing::random_matrix(rng, 3);
      const auto c = testing::random_matrix(rng, 3);
      CHECK((a * b) * c == a * (b * c));
    }
  }

  TEST_CASE("inverse") {
    CHECK(inverse(RingMatrix::identity(4)) == RingMatrix::identity(4));
    CHECK(inverse(one_by_one(-(t * q * q))) == one_by_one(LaurentPoly::monomial(-1, -2, -1)));
    const RingMatrix s1 = lk_generator(3, 1);
    CHECK(is_identity(inverse(s1) * s1));
  }

  TEST_CASE("inverse needs pivoting past a zero") {
    RingMatrix m(2);
    m.at(0, 1) = q;
    m.at(1, 0) = t;
    RingMatrix expected(2);
    expected.at(0, 1) = LaurentPoly::monomial(1, 0, -1);
    expected.at(1, 0) = LaurentPoly::monomial(1, -1, 0);
    CHECK(inverse(m) == expected);
  }

  TEST_CASE("inverse of unimodular integer matrices") {
    const RingMatrix m = integer_matrix({{2, 1, 0}, {1, 1, 0}, {0, 3, 1}});
    const RingMatrix inv = inverse(m);
    CHECK(inv == integer_matrix({{1, -1, 0}, {-1, 2, 0}, {3, -6, 1}}));
  }

  TEST_CASE("inverse of a non-trivial Laurent unit") {
    // Upper unitriangular times diagonal units: determinant -q t^2.
    RingMatrix m(3);
    m.at(0, 0) = -q;
    m.at(0, 1) = q * q + t;
    m.at(0, 2) = LaurentPoly(1) - q;
    m.at(1, 1) = t;
    m.at(1, 2) = q * t * t - 3;
    m.at(2, 2) = t;
    const RingMatrix inv = inverse(m);
    CHECK(is_identity(m * inv));
    CHECK(is_identity(inv * m));
  }

  TEST_CASE("inverse errors") {
    CHECK_THROWS_AS(inverse(integer_matrix({{1, 2}, {2, 4}})), SingularMatrixError);
    CHECK_THROWS_AS(inverse(integer_matrix({{2, 0}, {0, 1}})), NonUnitMatrixError);
    CHECK_THROWS_AS(inverse(one_by_one(q + 1)), NonUnitMatrixError);
    CHECK_THROWS_AS(inverse(direct_sum(RingMatrix(1), one_by_one(-1))), SingularMatrixError);
  }

  TEST_CASE("block_assemble") {
    const std::vector<BlockPlacement> one{{0, 0, RingMatrix::identity(2)}};
    CHECK(block_assemble(2, 2, one) == direct_sum(RingMatrix::identity(2), RingMatrix(2)));

    const std::vector<BlockPlacement> swap{{1, 0, RingMatrix::identity(2)},
                                           {0, 1, RingMatrix::identity(2)}};
    const RingMatrix p = block_assemble(2, 2, swap);
    CHECK(is_identity(p * p));
    CHECK_FALSE(is_identity(p));

    const std::vector<BlockPlacement> dup{{0, 0, RingMatrix::identity(2)},
                                          {0, 0, RingMatrix::identity(2)}};
    CHECK_THROWS_AS(block_assemble(2, 2, dup), std::invalid_argument);
    const std::vector<BlockPlacement> wrong{{0, 0, RingMatrix::identity(3)}};
    CHECK_THROWS_AS(block_assemble(2, 2, wrong), std::invalid_argument);
  }

  TEST_CASE("block_assemble then extract_block round trips") {
    std::mt19937_64 rng(13);
    std::vector<BlockPlacement> placements;
    for (std::size_t r = 0; r < 3; ++r) {
      for (std::size_t c = 0; c < 3; ++c) {
        if ((r + c) % 2 == 0) placements.push_back({r, c, testing::random_matrix(rng, 2)});
      }
    }
    const RingMatrix m = block_assemble(3, 2, placements);
    for (const auto& p : placements) CHECK(extract_block(m, 2, p.block_row, p.block_col) == p.block);
    CHECK(is_zero(extract_block(m, 2, 0, 1)));
  }

  TEST_CASE("direct_sum") {
    CHECK(direct_sum(RingMatrix::identity(2), RingMatrix::identity(3)) == RingMatrix::identity(5));
    CHECK(direct_sum(RingMatrix(60), RingMatrix(4)).dim() == 64);
  }

  TEST_CASE("is_scalar and is_identity") {
    const auto s = is_scalar(RingMatrix::scalar(3, q * q));
    REQUIRE(s);
    CHECK(*s == q * q);
    CHECK_FALSE(is_scalar(lk_generator(3, 1)));
    CHECK(is_identity(RingMatrix::identity(1)));
    CHECK_FALSE(is_identity(RingMatrix(2)));
  }

  TEST_CASE("block_structure") {
    const std::vector<BlockPlacement> swap{{1, 0, RingMatrix::scalar(2, q)},
                                           {0, 1, RingMatrix::identity(2)}};
    const auto s = block_structure(block_assemble(2, 2, swap), 2);
    REQUIRE(s);
    CHECK(s->block_perm == std::vector<std::size_t>{1, 0});
    CHECK(s->blocks[0] == RingMatrix::scalar(2, q));
    CHECK_FALSE(block_structure(RingMatrix(4), 2));
  }
}
