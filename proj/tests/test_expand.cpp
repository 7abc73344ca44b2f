#include <catch2/catch_amalgamated.hpp>

#include "pbraid/expand.hpp"

using namespace pbraid;

namespace {

Word sigma(const ConvexDisc& disc, int i, int sign = 1) {
  return Word::letter(Generator::band(disc, i, i + 1), sign);
}

}  // namespace

TEST_CASE("band expansion fixtures") {
  ConvexDisc d3(3), d5(5);
  REQUIRE(band_to_artin(1, 2, 3) == sigma(d3, 1));
  REQUIRE(band_to_artin(1, 3, 3) == sigma(d3, 2) * sigma(d3, 1) * sigma(d3, 2, -1));
  REQUIRE(band_to_artin(2, 4, 5) == sigma(d5, 3) * sigma(d5, 2) * sigma(d5, 3, -1));
  REQUIRE_THROWS_AS(band_to_artin(2, 2, 5), std::invalid_argument);
  REQUIRE_THROWS_AS(band_to_artin(3, 2, 5), std::invalid_argument);
}

TEST_CASE("rotation expansion") {
  ConvexDisc disc(6);
  PunctureSet B(disc, {1, 3, 4});
  Word w = rotation_to_bands(B);
  REQUIRE(w == Word::letter(Generator::band(disc, 1, 3)) *
                   Word::letter(Generator::band(disc, 1, 4)));

  PunctureSet pair(disc, {2, 5});
  REQUIRE(rotation_to_bands(pair) == Word::letter(Generator::band(disc, 2, 5)));
  REQUIRE_THROWS_AS(rotation_to_bands(PunctureSet(disc, {2})), std::invalid_argument);
}

TEST_CASE("swing expansion") {
  ConvexDisc disc(5);
  PunctureSet B(disc, {1, 2, 4});
  Word w = swing_to_rotations(B);
  REQUIRE(w == Word::letter(Generator::rotation(B)).pow(3));
  REQUIRE(swing_to_rotations(PunctureSet(disc, {3})).empty());
  REQUIRE(swing_to_rotations(PunctureSet(disc, {2, 3})) ==
          Word::letter(Generator::band(disc, 2, 3)).pow(2));
}

TEST_CASE("twist expansion drops singleton factors") {
  ConvexDisc disc(6);
  PunctureSet b1(disc, {1}), b2(disc, {2}), B(disc, {1, 2}), C(disc, {4, 5});
  REQUIRE(twist_to_swings(b1, b2) == Word::letter(Generator::swing(PunctureSet(disc, {1, 2}))));
  Word w = twist_to_swings(B, C);
  REQUIRE(w.size() == 3);
  REQUIRE(w == Word::letter(Generator::swing(B), -1) * Word::letter(Generator::swing(C), -1) *
                   Word::letter(Generator::swing(B.united(C))));
  Word v = twist_to_swings(b1, C);
  REQUIRE(v.size() == 2);
  REQUIRE(v == Word::letter(Generator::swing(C), -1) *
                   Word::letter(Generator::swing(b1.united(C))));
}

TEST_CASE("full expansion lands in the Artin alphabet") {
  ConvexDisc disc(6);
  std::vector<Word> samples = {
      Word::letter(Generator::swing(PunctureSet(disc, {2, 3, 5}))),
      Word::letter(Generator::rotation(PunctureSet(disc, {1, 4, 5, 6}))),
      Word::letter(Generator::twist(PunctureSet(disc, {1, 2}), PunctureSet(disc, {4, 5})), -1),
      Word::letter(Generator::band(disc, 2, 6)),
  };
  for (const auto& w : samples) {
    Word e = expand_full(w);
    for (const auto& L : e.letters()) {
      REQUIRE(L.gen.kind() == GenKind::band);
      REQUIRE(L.gen.band_high() == L.gen.band_low() + 1);
    }
  }
  REQUIRE(expand_full(Word()).empty());
}

TEST_CASE("expansion of an inverse is the inverse expansion") {
  ConvexDisc disc(6);
  Word g = Word::letter(Generator::swing(PunctureSet(disc, {1, 3, 4})));
  REQUIRE(expand_full(g.inverse()) == expand_full(g).inverse());
}
