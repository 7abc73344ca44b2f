#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "pbraid/derivations.hpp"

using namespace pbraid;

namespace {

nlohmann::ordered_json chain_binding(int n, int r, int s, int j) {
  nlohmann::ordered_json b;
  b["n"] = n;
  b["r"] = r;
  b["s"] = s;
  b["j"] = j;
  return b;
}

nlohmann::ordered_json set_binding(int n, std::initializer_list<std::pair<const char*, std::vector<int>>> sets) {
  nlohmann::ordered_json b;
  b["n"] = n;
  for (const auto& [key, val] : sets) b[key] = val;
  return b;
}

}  // namespace

TEST_CASE("relation instances verify on construction") {
  OracleEngine engine(5);
  for (const char* tag : {"chain-first", "chain-second", "chain-conjugate",
                          "chain-conjugate-inverse"}) {
    RelationInstance inst = relation_instance(tag, chain_binding(5, 1, 3, 4), engine);
    REQUIRE(inst.tag == tag);
    REQUIRE(engine.equivalent(inst.lhs, inst.rhs));
    // rotated labels stay admissible
    REQUIRE_NOTHROW(relation_instance(tag, chain_binding(5, 3, 4, 1), engine));
    // counter-clockwise labels are rejected
    REQUIRE_THROWS_AS(relation_instance(tag, chain_binding(5, 1, 4, 3), engine),
                      std::invalid_argument);
  }

  nlohmann::ordered_json b4;
  b4["n"] = 5;
  b4["r"] = 1;
  b4["i"] = 2;
  b4["s"] = 3;
  b4["j"] = 5;
  REQUIRE_NOTHROW(relation_instance("crossing-commute", b4, engine));
  REQUIRE_NOTHROW(relation_instance("crossing-commute-solved", b4, engine));
  REQUIRE_NOTHROW(relation_instance("twist-chain-conjugate", chain_binding(5, 2, 3, 5), engine));

  auto split = set_binding(5, {{"B", {1, 2}}, {"C", {3}}, {"D", {4, 5}}});
  REQUIRE_NOTHROW(relation_instance("twist-split", split, engine));
  REQUIRE_NOTHROW(relation_instance("twist-split-second", split, engine));
  REQUIRE_NOTHROW(relation_instance("lantern", split, engine));
  auto badsplit = set_binding(5, {{"B", {1, 2}}, {"C", {4, 5}}, {"D", {3}}});
  REQUIRE_THROWS_AS(relation_instance("twist-split", badsplit, engine), std::invalid_argument);

  auto nestb = set_binding(5, {{"B", {2}}, {"C", {3}}, {"D", {1}}, {"E", {2, 3}}});
  REQUIRE_NOTHROW(relation_instance("twist-nested-commute", nestb, engine));
  auto farb = set_binding(5, {{"B", {1}}, {"C", {2}}, {"D", {4}}, {"E", {5}}});
  REQUIRE_NOTHROW(relation_instance("twist-noncrossing-commute", farb, engine));
  REQUIRE_THROWS_AS(relation_instance("twist-nested-commute", farb, engine),
                    std::invalid_argument);

  auto swb = set_binding(5, {{"B", {1, 2}}, {"C", {3, 4}}});
  RelationInstance sw = relation_instance("swing-commute", swb, engine);
  REQUIRE(sw.lhs.size() == 2);
  auto swbad = set_binding(5, {{"B", {1, 3}}, {"C", {2, 5}}});
  REQUIRE_THROWS_AS(relation_instance("swing-commute", swbad, engine), std::invalid_argument);

  RelationInstance triv =
      relation_instance("swing-triviality", set_binding(5, {{"B", {3}}}), engine);
  REQUIRE(triv.rhs.empty());
  REQUIRE_THROWS_AS(
      relation_instance("swing-triviality", set_binding(5, {{"B", {3, 4}}}), engine),
      std::invalid_argument);

  REQUIRE_THROWS_AS(relation_instance("no-such-tag", chain_binding(5, 1, 2, 3), engine),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(relation_instance("chain-first", chain_binding(4, 1, 2, 3), engine),
                    std::invalid_argument);  // engine size mismatch
}

TEST_CASE("signed commute instances") {
  OracleEngine engine(5);
  auto b = set_binding(5, {{"B", {1, 2}}, {"C", {3, 4}}});
  b["sb"] = -1;
  b["sc"] = 1;
  RelationInstance inst = relation_instance("swing-commute", b, engine);
  REQUIRE(inst.lhs.letters()[0].sign == -1);
  REQUIRE(inst.lhs.letters()[1].sign == 1);
  b["sb"] = 2;
  REQUIRE_THROWS_AS(relation_instance("swing-commute", b, engine), std::invalid_argument);
}

TEST_CASE("substitution steps") {
  OracleEngine engine(4);
  RelationInstance chain = relation_instance("chain-first", chain_binding(4, 1, 2, 3), engine);
  ConvexDisc disc(4);
  auto S2 = [&](int i, int j) { return Generator::swing(PunctureSet(disc, {i, j})); };
  Generator rs = S2(1, 2), sj = S2(2, 3), rj = S2(1, 3);

  // the shared-middle relator collapses after one substitution
  Word start = Word::reduced({{rs, -1}, {sj, 1}, {rs, 1}, {rj, 1}, {sj, -1}, {rj, -1}});
  RewriteStep step{chain, 1, StepDirection::lhs_to_rhs, StepMode::substitute};
  Word after = apply_step(start, step);
  REQUIRE(after.empty());

  RewriteStep misplaced{chain, 0, StepDirection::lhs_to_rhs, StepMode::substitute};
  REQUIRE_THROWS_WITH(apply_step(start, misplaced),
                      Catch::Matchers::ContainsSubstring("pattern mismatch at position"));
  RewriteStep outside{chain, 5, StepDirection::lhs_to_rhs, StepMode::substitute};
  REQUIRE_THROWS_WITH(apply_step(start, outside),
                      Catch::Matchers::ContainsSubstring("does not fit"));

  // substituting an empty source inserts the other side
  RelationInstance triv =
      relation_instance("swing-triviality", set_binding(4, {{"B", {2}}}), engine);
  RewriteStep insert{triv, 2, StepDirection::rhs_to_lhs, StepMode::substitute};
  Word padded = apply_step(start, insert);
  REQUIRE(padded.size() == start.size() + 1);
  REQUIRE(padded.letters()[2].gen == Generator::swing(PunctureSet(disc, {2})));
  REQUIRE(engine.equivalent(padded, start));
}

TEST_CASE("multiply steps preserve the element") {
  OracleEngine engine(4);
  RelationInstance lant = relation_instance(
      "lantern", set_binding(4, {{"B", {1}}, {"C", {2, 3}}, {"D", {4}}}), engine);
  ConvexDisc disc(4);
  Word w = Word::letter(Generator::swing(PunctureSet(disc, {1, 2}))) *
           Word::letter(Generator::band(disc, 2, 4), -1);
  for (StepDirection dir : {StepDirection::lhs_to_rhs, StepDirection::rhs_to_lhs}) {
    RewriteStep left{lant, 0, dir, StepMode::left_multiply};
    RewriteStep right{lant, 0, dir, StepMode::right_multiply};
    REQUIRE(engine.equivalent(apply_step(w, left), w));
    REQUIRE(engine.equivalent(apply_step(w, right), w));
    REQUIRE(apply_step(w, left) != w);
    REQUIRE(apply_step(w, right) != w);
  }
}

TEST_CASE("bundled scripts replay at four punctures") {
  OracleEngine engine(4);
  for (const auto& name : bundled_script_names()) {
    auto scripts = make_bundled_scripts(name, 4, engine);
    INFO(name);
    REQUIRE_FALSE(scripts.empty());
    for (const auto& s : scripts) {
      ScriptReport rep = check_script(s, engine, true);
      INFO(s.name << ": " << rep.message);
      REQUIRE(rep.passed);
      REQUIRE(rep.steps_applied == s.steps.size());
    }
  }
  REQUIRE(make_bundled_scripts("artin-3rd-from-(3)", 4, engine).size() == 12);
  REQUIRE(make_bundled_scripts("artin-5th-from-(2)(3)", 4, engine).size() == 1);
  REQUIRE(make_bundled_scripts("triangles-lemma", 4, engine).size() == 48);
  REQUIRE_THROWS_AS(make_bundled_scripts("nope", 4, engine), std::invalid_argument);
}

TEST_CASE("failing scripts report instead of throwing") {
  OracleEngine engine(4);
  auto scripts = make_bundled_scripts("artin-3rd-from-(3)", 4, engine);
  RewriteScript s = scripts.front();

  SECTION("wrong goal") {
    s.goal = Word::letter(Generator::swing(PunctureSet(ConvexDisc(4), {1, 2})));
    ScriptReport rep = check_script(s, engine);
    REQUIRE_FALSE(rep.passed);
    REQUIRE(rep.message.find("differs from goal") != std::string::npos);
  }
  SECTION("wrong position") {
    s.steps[0].position = 2;
    ScriptReport rep = check_script(s, engine);
    REQUIRE_FALSE(rep.passed);
    REQUIRE(rep.steps_applied == 0);
    REQUIRE(rep.message.find("step 0") != std::string::npos);
  }
}

TEST_CASE("random rewriting fuzz preserves the oracle class") {
  OracleEngine engine(5);
  std::vector<RelationInstance> pool;
  pool.push_back(relation_instance("chain-first", chain_binding(5, 1, 2, 4), engine));
  pool.push_back(relation_instance("chain-conjugate", chain_binding(5, 2, 3, 5), engine));
  pool.push_back(relation_instance(
      "twist-split", set_binding(5, {{"B", {1, 2}}, {"C", {3}}, {"D", {4, 5}}}), engine));
  pool.push_back(relation_instance(
      "lantern", set_binding(5, {{"B", {2}}, {"C", {3, 4}}, {"D", {5}}}), engine));
  pool.push_back(relation_instance(
      "swing-commute", set_binding(5, {{"B", {1, 2}}, {"C", {3, 4}}}), engine));
  pool.push_back(relation_instance(
      "twist-noncrossing-commute",
      set_binding(5, {{"B", {1}}, {"C", {2}}, {"D", {3}}, {"E", {4, 5}}}), engine));
  pool.push_back(
      relation_instance("swing-triviality", set_binding(5, {{"B", {4}}}), engine));

  ConvexDisc disc(5);
  std::vector<Generator> gens;
  for (std::uint64_t m = 1; m < 32; ++m)
    gens.push_back(Generator::swing(PunctureSet::from_mask(disc, m)));
  gens.push_back(Generator::twist(PunctureSet(disc, {1, 2}), PunctureSet(disc, {3})));
  gens.push_back(Generator::twist(PunctureSet(disc, {1}), PunctureSet(disc, {2})));

  std::mt19937 rng(20240819);
  int applied = 0;
  for (int iter = 0; iter < 200; ++iter) {
    std::vector<SignedGen> raw;
    int len = static_cast<int>(rng() % 8);
    for (int t = 0; t < len; ++t)
      raw.push_back({gens[rng() % gens.size()], rng() % 2 ? 1 : -1});
    Word w = Word::reduced(raw);
    RewriteStep step;
    step.instance = pool[rng() % pool.size()];
    step.direction = rng() % 2 ? StepDirection::lhs_to_rhs : StepDirection::rhs_to_lhs;
    int mode = static_cast<int>(rng() % 3);
    step.mode = mode == 0   ? StepMode::substitute
                : mode == 1 ? StepMode::left_multiply
                            : StepMode::right_multiply;
    step.position = rng() % (w.size() + 1);
    try {
      Word out = apply_step(w, step);
      ++applied;
      REQUIRE(engine.equivalent(w, out));
    } catch (const std::invalid_argument&) {
      // substitution at a non-matching spot; nothing to check
    }
  }
  REQUIRE(applied > 100);  // multiply modes always apply
}

TEST_CASE("central witness fixtures") {
  ConvexDisc d2(2);
  REQUIRE(central_witness(1, 2, 2).empty());

  ConvexDisc d4(4);
  Word w12 = central_witness(1, 2, 4);
  PunctureSet b34(d4, {3, 4}), b12(d4, {1, 2});
  REQUIRE(w12 == Word::letter(Generator::swing(b34)) *
                     Word::letter(Generator::twist(b12, b34)));

  Word w13 = central_witness(1, 3, 4);
  PunctureSet p2(d4, {2}), p4(d4, {4}), p13(d4, {1, 3});
  REQUIRE(w13 == Word::letter(Generator::swing(p2)) * Word::letter(Generator::swing(p4)) *
                     Word::letter(Generator::twist(p13, p4)) *
                     Word::letter(Generator::twist(p2, p13.united(p4))));

  REQUIRE_THROWS_AS(central_witness(2, 2, 4), std::invalid_argument);
  REQUIRE_THROWS_AS(central_witness(0, 2, 4), std::invalid_argument);
}

TEST_CASE("central witness products give the full swing") {
  for (int n = 2; n <= 5; ++n) {
    ConvexDisc disc(n);
    OracleEngine engine(n);
    Word full = Word::letter(Generator::swing(PunctureSet::full(disc)));
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        if (i == j) continue;
        Word u = central_witness(i, j, n);
        Word sij = Word::letter(Generator::swing(PunctureSet(disc, {i, j})));
        REQUIRE(engine.equivalent(sij * u, full));
        REQUIRE(engine.equivalent(u * sij, full));
      }
  }
}

TEST_CASE("the full swing is central") {
  ConvexDisc disc(4);
  OracleEngine engine(4);
  Word full = Word::letter(Generator::swing(PunctureSet::full(disc)));
  std::vector<Generator> gens;
  for (std::uint64_t m = 1; m < 16; ++m)
    gens.push_back(Generator::swing(PunctureSet::from_mask(disc, m)));
  gens.push_back(Generator::band(disc, 1, 3));
  gens.push_back(Generator::rotation(PunctureSet(disc, {1, 2, 4})));
  gens.push_back(Generator::twist(PunctureSet(disc, {1}), PunctureSet(disc, {2, 3})));
  for (const auto& g : gens) {
    Word w = Word::letter(g);
    REQUIRE(engine.equivalent(full * w, w * full));
  }
}

TEST_CASE("swings factor through twists") {
  ConvexDisc d6(6);
  PunctureSet B(d6, {1, 2, 3});
  Word w = swing_as_twists(B);
  REQUIRE(w == Word::letter(Generator::twist(PunctureSet(d6, {2}), PunctureSet(d6, {3}))) *
                   Word::letter(Generator::twist(PunctureSet(d6, {1}), PunctureSet(d6, {2, 3}))));
  REQUIRE(swing_as_twists(PunctureSet(d6, {4})).empty());
  REQUIRE_THROWS_AS(swing_as_twists(PunctureSet(d6, {})), std::invalid_argument);

  for (int n = 2; n <= 5; ++n) {
    ConvexDisc disc(n);
    OracleEngine engine(n);
    for (std::uint64_t m = 1; m < (1ull << n); ++m) {
      PunctureSet S = PunctureSet::from_mask(disc, m);
      Word tw = swing_as_twists(S);
      REQUIRE(engine.equivalent(tw, Word::letter(Generator::swing(S))));
      // expanding the twists back into swings round-trips to the same element
      Word back;
      for (const auto& L : tw.letters()) {
        Word e = twist_to_swings(L.gen.first(), L.gen.second());
        back = back * (L.sign == 1 ? e : e.inverse());
      }
      REQUIRE(engine.equivalent(back, Word::letter(Generator::swing(S))));
    }
  }

  // a twist of two singletons IS the pair swing
  ConvexDisc d5(5);
  for (int i = 1; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j) {
      Word t = twist_to_swings(PunctureSet(d5, {i}), PunctureSet(d5, {j}));
      REQUIRE(t == Word::letter(Generator::swing(PunctureSet(d5, {i, j}))));
    }
}

TEST_CASE("scripts serialize and load back") {
  OracleEngine engine(4);
  auto scripts = make_bundled_scripts("lantern-implies-twist-factorization", 4, engine);
  const RewriteScript& s = scripts.front();
  nlohmann::ordered_json doc = script_to_json(s);
  REQUIRE(doc.at("name") == s.name);
  REQUIRE(doc.at("steps").size() == s.steps.size());

  RewriteScript back = script_from_json(doc, engine);
  REQUIRE(back.name == s.name);
  REQUIRE(back.start == s.start);
  REQUIRE(back.goal == s.goal);
  REQUIRE(back.steps.size() == s.steps.size());
  for (std::size_t i = 0; i < back.steps.size(); ++i) {
    REQUIRE(back.steps[i].instance.tag == s.steps[i].instance.tag);
    REQUIRE(back.steps[i].instance.lhs == s.steps[i].instance.lhs);
    REQUIRE(back.steps[i].position == s.steps[i].position);
    REQUIRE(back.steps[i].direction == s.steps[i].direction);
    REQUIRE(back.steps[i].mode == s.steps[i].mode);
  }
  REQUIRE(check_script(back, engine, true).passed);
  REQUIRE(script_to_json(back).dump() == doc.dump());

  OracleEngine wrong(5);
  REQUIRE_THROWS_AS(script_from_json(doc, wrong), std::invalid_argument);
}
