#include <doctest.h>

#include "mcgrep/word.hpp"
#include "support.hpp"

using namespace mcgrep;

TEST_SUITE("word") {
  TEST_CASE("contexts") {
    CHECK(Context::braid(3).generator_count() == 2);
    CHECK(Context::sphere(6).generator_count() == 5);
    CHECK(Context::genus2().generator_count() == 5);
    CHECK(Context::hyperelliptic(3).generator_count() == 7);
    CHECK(Context::genus2().name() == "genus2");
    CHECK(Context::hyperelliptic(3).name() == "hyperelliptic(3)");
    CHECK_THROWS(Context::braid(1));
  }

  TEST_CASE("parse_word") {
    const Word w = parse_word("s1 s2^-1", Context::braid(3));
    CHECK(w == Word(Context::braid(3), {1, -2}));
    CHECK(parse_word("t5 t5", Context::genus2()) == Word(Context::genus2(), {5, 5}));
    CHECK(parse_word("", Context::genus2()).empty());
    CHECK(parse_word("  e ", Context::braid(4)).empty());
    CHECK(parse_word("(s1 s2)^3", Context::braid(3)) ==
          Word(Context::braid(3), {1, 2, 1, 2, 1, 2}));
    CHECK(parse_word("(s1 s2^-1)^-2", Context::braid(3)) ==
          Word(Context::braid(3), {2, -1, 2, -1}));
    CHECK(parse_word("s1^2", Context::braid(3)) == Word(Context::braid(3), {1, 1}));
  }

  TEST_CASE("parse errors carry positions") {
    try {
      parse_word("s1 s7", Context::sphere(6));
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.position() == 3);
    }
    CHECK_THROWS_AS(parse_word("s1 x2", Context::braid(3)), ParseError);
    CHECK_THROWS_AS(parse_word("t1", Context::braid(3)), ParseError);
    CHECK_THROWS_AS(parse_word("(s1", Context::braid(3)), ParseError);
    CHECK_THROWS_AS(parse_word("s1)", Context::braid(3)), ParseError);
    CHECK_THROWS_AS(parse_word("s", Context::braid(3)), ParseError);
    CHECK_THROWS_AS(parse_word("s0", Context::braid(3)), ParseError);
  }

  TEST_CASE("to_text round trips through parse_word") {
    std::mt19937_64 rng(5);
    for (const Context ctx : {Context::braid(5), Context::genus2(), Context::sphere(6)}) {
      for (int trial = 0; trial < 20; ++trial) {
        const Word w = testing::random_word(rng, ctx, 12);
        CHECK(parse_word(to_text(w), ctx) == w);
      }
    }
    CHECK(to_text(Word(Context::braid(3), {1, -2})) == "s1 s2^-1");
  }

  TEST_CASE("free_reduce") {
    const Context b3 = Context::braid(3);
    CHECK(free_reduce(Word(b3, {1, -1})).empty());
    CHECK(free_reduce(Word(b3, {1, 2, -2, 1})) == Word(b3, {1, 1}));
    CHECK(free_reduce(Word(b3, {1, 2, 1})) == Word(b3, {1, 2, 1}));
    CHECK(free_reduce(Word(b3, {2, 1, -1, -2, 1})) == Word(b3, {1}));
  }

  TEST_CASE("inverse and power") {
    const Context b4 = Context::braid(4);
    const Word w(b4, {1, -3, 2});
    CHECK(w.inverse() == Word(b4, {-2, 3, -1}));
    CHECK(free_reduce(w * w.inverse()).empty());
    CHECK(w.power(0).empty());
    CHECK(w.power(2).size() == 6);
    CHECK(w.power(-1) == w.inverse());
    CHECK_THROWS(Word(b4, {1}) * Word(Context::sphere(4), {1}));
  }

  TEST_CASE("relation suites") {
    const auto b3 = relation_suite(Context::braid(3));
    REQUIRE(b3.size() == 1);
    CHECK(b3[0] == Word(Context::braid(3), {1, 2, 1, -2, -1, -2}));

    const auto s6 = relation_suite(Context::sphere(6));
    const Word boundary(Context::sphere(6), {1, 2, 3, 4, 5, 5, 4, 3, 2, 1});
    CHECK(std::find(s6.begin(), s6.end(), boundary) != s6.end());
    CHECK(std::find(s6.begin(), s6.end(), chain_word(Context::sphere(6), 1, 5).power(6)) !=
          s6.end());

    const auto g2 = relation_suite(Context::genus2());
    CHECK(std::find(g2.begin(), g2.end(), chain_word(Context::genus2(), 1, 5).power(6)) !=
          g2.end());
    // 4 braid + 6 commutation + chain + involution squared + 5 centrality
    CHECK(g2.size() == 17);
  }

  TEST_CASE("chain_word") {
    const Context b5 = Context::braid(5);
    CHECK(chain_word(b5, 1, 3) == Word(b5, {1, 2, 3}));
    CHECK(chain_word(b5, 3, 1) == Word(b5, {3, 2, 1}));
    CHECK(chain_word(b5, 2, 2) == Word(b5, {2}));
  }
}
