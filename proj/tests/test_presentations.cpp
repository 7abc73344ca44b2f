#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "pbraid/presentations.hpp"

using namespace pbraid;

namespace {

long long choose2(int n) { return static_cast<long long>(n) * (n - 1) / 2; }

bool has_relator(const Presentation& p, const Word& w, const std::string& tag) {
  for (std::size_t i = 0; i < p.relators.size(); ++i)
    if (p.relators[i] == w && p.relation_tags[i] == tag) return true;
  return false;
}

}  // namespace

TEST_CASE("generator counts match the closed forms") {
  for (int n = 2; n <= 10; ++n) {
    ConvexDisc disc(n);
    (void)disc;
    REQUIRE(rotation_presentation(n).generators.size() ==
            static_cast<std::size_t>((1ll << n) - n - 1));
    REQUIRE(bkl_presentation(n).generators.size() == static_cast<std::size_t>(choose2(n)));
    REQUIRE(artin_presentation(n).generators.size() == static_cast<std::size_t>(choose2(n)));
    REQUIRE(modified_artin_presentation(n).generators.size() ==
            static_cast<std::size_t>(choose2(n)));
    REQUIRE(swing_presentation(n).generators.size() == static_cast<std::size_t>((1ll << n) - 1));
    REQUIRE(boundary_swing_presentation(n).generators.size() ==
            static_cast<std::size_t>((1ll << n) - 1));
    if (n >= 3 && n <= 7)
      REQUIRE(twist_presentation(n).generators.size() ==
              static_cast<std::size_t>(static_cast<long long>(n) * (n - 1) * (1ll << (n - 3))));
  }
  std::vector<std::size_t> twist_counts;
  for (int n = 3; n <= 7; ++n) twist_counts.push_back(twist_presentation(n).generators.size());
  REQUIRE(twist_counts == std::vector<std::size_t>{6, 24, 80, 240, 672});
}

TEST_CASE("small relator counts") {
  // three punctures: one split family and nothing to commute
  Presentation rot3 = rotation_presentation(3);
  REQUIRE(rot3.relators.size() == 3);
  for (const auto& t : rot3.relation_tags) REQUIRE(t == "split");

  Presentation bkl3 = bkl_presentation(3);
  REQUIRE(bkl3.generators.size() == 3);
  REQUIRE(bkl3.relators.size() == 2);
  for (const auto& t : bkl3.relation_tags) REQUIRE(t == "triple");

  Presentation bkl4 = bkl_presentation(4);
  REQUIRE(std::count(bkl4.relation_tags.begin(), bkl4.relation_tags.end(),
                     "non-crossing commute") == 2);

  Presentation art2 = artin_presentation(2);
  REQUIRE(art2.generators.size() == 1);
  REQUIRE(art2.relators.empty());

  Presentation art3 = artin_presentation(3);
  REQUIRE(art3.relators.size() == 2);
  REQUIRE(std::count(art3.relation_tags.begin(), art3.relation_tags.end(), "shared middle") == 1);
  REQUIRE(std::count(art3.relation_tags.begin(), art3.relation_tags.end(), "shared endpoint") ==
          1);

  Presentation mod3 = modified_artin_presentation(3);
  REQUIRE(mod3.relators.size() == 2);
  for (const auto& t : mod3.relation_tags) REQUIRE(t == "chain");

  Presentation sw3 = swing_presentation(3);
  REQUIRE(sw3.relators.size() == 22);
  REQUIRE(std::count(sw3.relation_tags.begin(), sw3.relation_tags.end(), "trivial swing") == 3);
  REQUIRE(std::count(sw3.relation_tags.begin(), sw3.relation_tags.end(), "compatible commute") ==
          18);
  REQUIRE(std::count(sw3.relation_tags.begin(), sw3.relation_tags.end(), "lantern") == 1);

  Presentation bsw3 = boundary_swing_presentation(3);
  REQUIRE(bsw3.relators.size() == 19);
  REQUIRE(std::count(bsw3.relation_tags.begin(), bsw3.relation_tags.end(), "trivial swing") == 0);
}

TEST_CASE("split relator counts per subset") {
  Presentation rot5 = rotation_presentation(5);
  long long splits = 0;
  for (int m = 3; m <= 5; ++m) {
    long long subsets = 1;
    for (int k = 0; k < m; ++k) subsets = subsets * (5 - k) / (k + 1);
    splits += subsets * m * (m - 2);
  }
  REQUIRE(std::count(rot5.relation_tags.begin(), rot5.relation_tags.end(), "split") == splits);

  Presentation tw6 = twist_presentation(6);
  long long tsplits = 0;
  for (int m = 3; m <= 6; ++m) {
    long long subsets = 1, c3 = 1;
    for (int k = 0; k < m; ++k) subsets = subsets * (6 - k) / (k + 1);
    c3 = static_cast<long long>(m) * (m - 1) * (m - 2) / 6;
    tsplits += subsets * 3 * c3;
  }
  REQUIRE(std::count(tw6.relation_tags.begin(), tw6.relation_tags.end(), "split") == tsplits);
  REQUIRE(tsplits == 480);
}

TEST_CASE("nested and non-crossing twist pairs never coincide") {
  for (int n = 3; n <= 6; ++n) REQUIRE(twist_presentation(n).nested_noncrossing_overlap == 0);
}

TEST_CASE("fixture relators appear") {
  ConvexDisc d8(8);
  Presentation rot8 = rotation_presentation(8);
  Word rsplit = Word::letter(Generator::rotation(PunctureSet(d8, {1, 2, 3, 4}))) *
                Word::letter(Generator::rotation(PunctureSet(d8, {1, 5, 6, 7, 8}))) *
                Word::letter(Generator::rotation(PunctureSet::full(d8)), -1);
  REQUIRE(has_relator(rot8, rsplit, "split"));

  Presentation tw8 = twist_presentation(8);
  PunctureSet B(d8, {4, 5, 6}), C(d8, {7, 8, 1}), D(d8, {2, 3});
  Word tsplit = Word::letter(Generator::twist(B, C.united(D)), -1) *
                Word::letter(Generator::twist(B, C)) * Word::letter(Generator::twist(B, D));
  REQUIRE(has_relator(tw8, tsplit, "split"));

  ConvexDisc d4(4);
  Presentation tw4 = twist_presentation(4);
  Generator inner = Generator::twist(PunctureSet(d4, {2}), PunctureSet(d4, {3}));
  Generator outer = Generator::twist(PunctureSet(d4, {1}), PunctureSet(d4, {2, 3}));
  Word nestcomm = Word::reduced({{inner, 1}, {outer, 1}, {inner, -1}, {outer, -1}});
  Word nestcomm2 = Word::reduced({{outer, 1}, {inner, 1}, {outer, -1}, {inner, -1}});
  REQUIRE((has_relator(tw4, nestcomm, "nested commute") ||
           has_relator(tw4, nestcomm2, "nested commute")));

  Presentation mod4 = modified_artin_presentation(4);
  auto S2 = [&](int i, int j) { return Generator::swing(PunctureSet(d4, {i, j})); };
  Generator rs = S2(1, 3), ij = S2(2, 4), sj = S2(3, 4);
  Word crossrel = Word::reduced({{ij, 1}, {sj, 1}, {rs, 1}, {sj, -1}, {ij, -1}, {sj, 1},
                                 {rs, -1}, {sj, -1}});
  REQUIRE(has_relator(mod4, crossrel, "crossing commute"));

  ConvexDisc d3(3);
  Presentation sw3 = swing_presentation(3);
  auto S = [&](std::vector<int> v) { return Generator::swing(PunctureSet(d3, v)); };
  Word lantern = Word::reduced({{S({1, 2, 3}), 1}, {S({1}), 1}, {S({2}), 1}, {S({3}), 1},
                                {S({2, 3}), -1}, {S({1, 3}), -1}, {S({1, 2}), -1}});
  REQUIRE(has_relator(sw3, lantern, "lantern"));
}

TEST_CASE("relators are freely reduced and pure") {
  for (int n = 2; n <= 7; ++n) {
    for (const auto& name : presentation_names()) {
      if (name == "twist" && n < 3) continue;
      Presentation p = presentation_by_name(name, n);
      REQUIRE(p.relators.size() == p.relation_tags.size());
      for (const auto& r : p.relators) {
        REQUIRE(Word::reduced(r.letters()) == r);
        REQUIRE(is_pure(r, n));
      }
    }
  }
}

TEST_CASE("verification passes for every presentation up to five punctures") {
  for (int n = 2; n <= 5; ++n) {
    for (const auto& name : presentation_names()) {
      if (name == "twist" && n < 3) continue;
      Presentation p = presentation_by_name(name, n);
      VerifyReport rep = verify_presentation(p);
      INFO(name << " n=" << n);
      REQUIRE(rep.checks.size() == p.relators.size());
      REQUIRE(rep.all_passed());
      REQUIRE(rep.quotient_only == (name == "boundary_swing"));
    }
  }
}

TEST_CASE("verification pinpoints a corrupted relator") {
  Presentation p = swing_presentation(4);
  std::size_t victim = 7;
  p.relators[victim] =
      p.relators[victim] *
      Word::letter(Generator::swing(PunctureSet(ConvexDisc(4), {1, 2})));
  VerifyReport rep = verify_presentation(p);
  REQUIRE(rep.failures.size() == 1);
  REQUIRE(rep.failures[0] == victim);
  REQUIRE_FALSE(rep.checks[victim].trivial);
  REQUIRE(rep.checks[victim].pure);
}

TEST_CASE("parallel verification agrees with serial") {
  Presentation p = twist_presentation(4);
  VerifyReport serial = verify_presentation(p, 1);
  VerifyReport parallel = verify_presentation(p, 4);
  REQUIRE(serial.failures == parallel.failures);
  REQUIRE(serial.checks.size() == parallel.checks.size());
  REQUIRE(parallel.all_passed());
}

TEST_CASE("abelianization of a finite cyclic toy presentation") {
  ConvexDisc disc(2);
  Presentation p;
  p.name = "toy";
  p.n = 2;
  Generator g = Generator::band(disc, 1, 2);
  p.generators = {g};
  p.relators = {Word::letter(g).pow(2)};
  p.relation_tags = {"square"};
  AbelianInvariants inv = abelianize(p);
  REQUIRE(inv.free_rank == 0);
  REQUIRE(inv.torsion.size() == 1);
  REQUIRE(inv.torsion[0] == 2);
}

TEST_CASE("abelian invariants at small sizes") {
  for (int n = 3; n <= 4; ++n) {
    AbelianInvariants a = abelianize(artin_presentation(n));
    REQUIRE(a.free_rank == choose2(n));
    REQUIRE(a.torsion.empty());
    REQUIRE(abelianize(modified_artin_presentation(n)) == a);
    REQUIRE(abelianize(twist_presentation(n)) == a);
    REQUIRE(abelianize(swing_presentation(n)) == a);

    AbelianInvariants rot = abelianize(rotation_presentation(n));
    REQUIRE(rot.free_rank == 1);
    REQUIRE(rot.torsion.empty());
    AbelianInvariants bkl = abelianize(bkl_presentation(n));
    REQUIRE(bkl.free_rank == 1);
    REQUIRE(bkl.torsion.empty());

    AbelianInvariants bsw = abelianize(boundary_swing_presentation(n));
    REQUIRE(bsw.free_rank == choose2(n) + n);
    REQUIRE(bsw.torsion.empty());
  }
}

TEST_CASE("building twice gives identical output") {
  for (const auto& name : presentation_names()) {
    Presentation a = presentation_by_name(name, 5);
    Presentation b = presentation_by_name(name, 5);
    REQUIRE(presentation_to_json(a) == presentation_to_json(b));
    REQUIRE(presentation_to_text(a) == presentation_to_text(b));
  }
}

TEST_CASE("swing relators are pairwise distinct") {
  for (int n = 2; n <= 6; ++n) {
    Presentation p = swing_presentation(n);
    std::set<std::string> seen;
    for (const auto& r : p.relators) REQUIRE(seen.insert(print_word(r)).second);
  }
}

TEST_CASE("structured export round-trips") {
  Presentation p = twist_presentation(4);
  nlohmann::ordered_json doc = presentation_to_json(p);
  REQUIRE(doc.at("name") == "twist");
  REQUIRE(doc.at("n") == 4);
  REQUIRE(doc.at("generators").size() == p.generators.size());
  REQUIRE(doc.at("relators").size() == p.relators.size());
  REQUIRE(doc.at("tags").size() == p.relation_tags.size());

  // key order is part of the format
  std::string dumped = doc.dump();
  REQUIRE(dumped.find("\"name\"") < dumped.find("\"n\""));
  REQUIRE(dumped.find("\"n\"") < dumped.find("\"generators\""));
  REQUIRE(dumped.find("\"generators\"") < dumped.find("\"relators\""));
  REQUIRE(dumped.find("\"relators\"") < dumped.find("\"tags\""));

  ConvexDisc disc(4);
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    Word back = parse_word(doc.at("relators")[i].get<std::string>(), disc);
    REQUIRE(back == p.relators[i]);
  }
  for (std::size_t i = 0; i < p.generators.size(); ++i) {
    Word back = parse_word(doc.at("generators")[i].get<std::string>(), disc);
    REQUIRE(back.size() == 1);
    REQUIRE(back.letters()[0].gen == p.generators[i]);
  }
}

TEST_CASE("text export shape") {
  Presentation p = bkl_presentation(3);
  std::string text = presentation_to_text(p);
  REQUIRE(text.rfind("bkl n=3\n", 0) == 0);
  REQUIRE(text.find("gens:\n") != std::string::npos);
  REQUIRE(text.find("rels:\n") != std::string::npos);
  REQUIRE(text.find("  R{1,2}\n") != std::string::npos);
}

TEST_CASE("presentations are found by name") {
  REQUIRE(presentation_names().size() == 7);
  for (const auto& name : presentation_names())
    REQUIRE(presentation_by_name(name, 3).name == name);
  REQUIRE_THROWS_AS(presentation_by_name("nope", 3), std::invalid_argument);
}
