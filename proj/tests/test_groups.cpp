#include <catch2/catch_amalgamated.hpp>

#include "charvar/group_ring.hpp"
#include "charvar/numeric.hpp"
#include "charvar/presentation.hpp"
#include "charvar/word.hpp"

using namespace charvar;

namespace {
Word w(std::initializer_list<std::pair<int, int>> ls) {
  std::vector<Letter> v;
  for (auto [g, s] : ls) v.push_back(Letter{g, s});
  return Word(std::move(v));
}
}  // namespace

TEST_CASE("free reduction") {
  CHECK(w({{1, 1}, {1, -1}}).empty());
  CHECK(w({{1, 1}, {2, 1}, {2, -1}, {1, 1}}) == w({{1, 1}, {1, 1}}));
  CHECK(Word().empty());
  // nested cancellation
  CHECK(w({{1, 1}, {2, 1}, {2, -1}, {1, -1}}).empty());
}

TEST_CASE("word algebra") {
  Word a = Word::gen(1), b = Word::gen(2);
  CHECK(inverse(a * b) == inverse(b) * inverse(a));
  CHECK((a * inverse(a)).empty());
  CHECK(power(a, 3) == a * a * a);
  CHECK(power(a, -2) == inverse(a) * inverse(a));
  CHECK(commutator(a, b) == w({{1, 1}, {2, 1}, {1, -1}, {2, -1}}));
  CHECK(conjugate(a, b) == a * b * inverse(a));
  CHECK((Word() * a) == a);
  CHECK((a * Word()) == a);
}

TEST_CASE("word serialization round trip") {
  auto names = surface_generator_names(1, 2);  // a1 b1 c1
  Word word = w({{1, 1}, {2, -1}, {3, 1}});
  CHECK(format_word(word, names) == "a1 B1 c1");
  CHECK(parse_word("a1 B1 c1", names) == word);
  CHECK(format_word(Word(), names) == "e");
  CHECK(parse_word("e", names).empty());
  CHECK_THROWS_AS(parse_word("z9", names), Error);
}

TEST_CASE("surface presentations") {
  SECTION("torus") {
    auto p = surface_presentation(1, 0);
    CHECK(p.rank == 2);
    REQUIRE(p.relator.has_value());
    CHECK(*p.relator == commutator(Word::gen(1), Word::gen(2)));
    CHECK(p.punctures.empty());
    CHECK(euler_characteristic(p) == 0);
  }
  SECTION("thrice-punctured sphere") {
    auto p = surface_presentation(0, 3);
    CHECK(p.rank == 2);
    CHECK_FALSE(p.relator.has_value());
    REQUIRE(p.punctures.size() == 3);
    CHECK(p.punctures[0] == Word::gen(1));
    CHECK(p.punctures[1] == Word::gen(2));
    CHECK(p.punctures[2] == inverse(Word::gen(1) * Word::gen(2)));
    CHECK(euler_characteristic(p) == -1);
    CHECK(p.rank == 1 - euler_characteristic(p));
  }
  SECTION("genus 2, one puncture") {
    auto p = surface_presentation(2, 1);
    CHECK(p.rank == 4);
    REQUIRE(p.punctures.size() == 1);
    CHECK(p.punctures[0] == inverse(commutator_product(2)));
    CHECK(euler_characteristic(p) == -3);
  }
  SECTION("excluded surfaces") {
    CHECK_THROWS_AS(surface_presentation(0, 0), Error);
    CHECK_THROWS_AS(surface_presentation(0, 1), Error);
  }
  SECTION("puncture words multiply to the inverse commutator product") {
    for (auto [g, b] : {std::pair{0, 3}, {1, 1}, {1, 2}, {2, 2}, {0, 2}}) {
      auto p = surface_presentation(g, b);
      Word prod = commutator_product(g);
      for (const auto& c : p.punctures) prod = prod * c;
      CHECK(prod.empty());
    }
  }
}

TEST_CASE("fox derivative axioms") {
  Word a = Word::gen(1), b = Word::gen(2);
  CHECK(fox_derivative(a, 1) == GroupRingElement::unit());
  CHECK(fox_derivative(a, 2).zero());
  CHECK(fox_derivative(inverse(a), 1) == GroupRingElement::single(-1, inverse(a)));
  CHECK(fox_derivative(a * b, 2) == GroupRingElement::single(1, a));
  // d[a,b]/da = 1 - a b a^{-1}
  GroupRingElement expect;
  expect.add_term(1, Word());
  expect.add_term(-1, a * b * inverse(a));
  CHECK(fox_derivative(commutator(a, b), 1) == expect);
}

TEST_CASE("fox fundamental identity on random words") {
  Rng rng(12345);
  for (int trial = 0; trial < 200; ++trial) {
    int rank = 1 + static_cast<int>(rng.integer(0, 3));
    std::vector<Letter> ls;
    int len = static_cast<int>(rng.integer(0, 12));
    for (int t = 0; t < len; ++t)
      ls.push_back(Letter{1 + static_cast<int>(rng.integer(0, static_cast<std::uint64_t>(rank - 1))),
                          rng.integer(0, 1) ? 1 : -1});
    Word word(std::move(ls));
    CHECK(fox_identity_holds(word, rank));
  }
}

TEST_CASE("group ring arithmetic normal form") {
  GroupRingElement e;
  e.add_term(2, Word::gen(1));
  e.add_term(-2, Word::gen(1));
  CHECK(e.zero());
  e.add_term(1, Word::gen(1));
  e.add_term(1, Word::gen(1, -1) * Word::gen(1) * Word::gen(1));  // reduces to the same word
  CHECK(e == GroupRingElement::single(2, Word::gen(1)));
}
