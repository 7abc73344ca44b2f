#pragma once

#include "pbraid/presentations.hpp"

namespace pbraid {

enum class StepDirection { lhs_to_rhs, rhs_to_lhs };
enum class StepMode { substitute, left_multiply, right_multiply };

inline const char* to_string(StepDirection d) {
  return d == StepDirection::lhs_to_rhs ? "lhs_to_rhs" : "rhs_to_lhs";
}
inline const char* to_string(StepMode m) {
  switch (m) {
    case StepMode::substitute: return "substitute";
    case StepMode::left_multiply: return "left-multiply";
    case StepMode::right_multiply: return "right-multiply";
  }
  return "?";
}

inline StepDirection direction_from_string(const std::string& s) {
  if (s == "lhs_to_rhs") return StepDirection::lhs_to_rhs;
  if (s == "rhs_to_lhs") return StepDirection::rhs_to_lhs;
  throw std::invalid_argument("unknown step direction: " + s);
}
inline StepMode mode_from_string(const std::string& s) {
  if (s == "substitute") return StepMode::substitute;
  if (s == "left-multiply") return StepMode::left_multiply;
  if (s == "right-multiply") return StepMode::right_multiply;
  throw std::invalid_argument("unknown step mode: " + s);
}

// A concrete equation lhs = rhs obtained by substituting a binding into one of the
// named relation schemas; the equation is checked against the oracle on construction.
struct RelationInstance {
  std::string tag;
  nlohmann::ordered_json binding;
  Word lhs;
  Word rhs;
  int n = 0;
};

namespace detail {

inline int binding_int(const nlohmann::ordered_json& b, const char* key) {
  if (!b.contains(key) || !b[key].is_number_integer())
    throw std::invalid_argument(std::string("binding needs integer field '") + key + "'");
  return b[key].get<int>();
}

inline int binding_sign(const nlohmann::ordered_json& b, const char* key) {
  if (!b.contains(key)) return 1;
  int v = b[key].get<int>();
  if (v != 1 && v != -1) throw std::invalid_argument(std::string("sign field '") + key + "' must be 1 or -1");
  return v;
}

inline PunctureSet binding_set(const nlohmann::ordered_json& b, const char* key,
                               const ConvexDisc& disc) {
  if (!b.contains(key) || !b[key].is_array())
    throw std::invalid_argument(std::string("binding needs set field '") + key + "'");
  std::vector<int> labels;
  for (const auto& v : b[key]) labels.push_back(v.get<int>());
  return PunctureSet(disc, labels);
}

inline void require_admissible_labels(const ConvexDisc& disc, std::vector<int> labels) {
  std::vector<PunctureSet> blocks;
  for (int x : labels) blocks.push_back(PunctureSet(disc, {x}));
  if (!admissible(blocks))
    throw std::invalid_argument("binding labels are not in clockwise cyclic order");
}

}  // namespace detail

// Builds the lhs = rhs equation for a relation tag and binding.  Tags cover the
// chain, crossing-commute, twist factorization/commute, swing commute/triviality
// and lantern schemas used by the bundled derivation scripts.
inline RelationInstance relation_instance(const std::string& tag,
                                          const nlohmann::ordered_json& binding,
                                          OracleEngine& engine) {
  RelationInstance inst;
  inst.tag = tag;
  inst.binding = binding;
  inst.n = detail::binding_int(binding, "n");
  if (inst.n != engine.n()) throw std::invalid_argument("binding disc size differs from engine");
  ConvexDisc disc(inst.n);
  auto Sw = [&](const PunctureSet& B) { return Generator::swing(B); };
  auto S2 = [&](int i, int j) { return Generator::swing(PunctureSet(disc, {i, j})); };
  auto T1 = [&](int i, int j) {
    return Generator::twist(PunctureSet(disc, {i}), PunctureSet(disc, {j}));
  };

  if (tag == "chain-first" || tag == "chain-second" || tag == "chain-conjugate" ||
      tag == "chain-conjugate-inverse") {
    int r = detail::binding_int(binding, "r");
    int s = detail::binding_int(binding, "s");
    int j = detail::binding_int(binding, "j");
    detail::require_admissible_labels(disc, {r, s, j});
    Generator rs = S2(r, s), sj = S2(s, j), rj = S2(r, j);
    if (tag == "chain-first") {
      inst.lhs = Word::reduced({{sj, 1}, {rs, 1}, {rj, 1}});
      inst.rhs = Word::reduced({{rs, 1}, {rj, 1}, {sj, 1}});
    } else if (tag == "chain-second") {
      inst.lhs = Word::reduced({{rs, 1}, {rj, 1}, {sj, 1}});
      inst.rhs = Word::reduced({{rj, 1}, {sj, 1}, {rs, 1}});
    } else if (tag == "chain-conjugate") {
      inst.lhs = Word::reduced({{rs, -1}, {sj, 1}, {rs, 1}});
      inst.rhs = Word::reduced({{rj, 1}, {sj, 1}, {rj, -1}});
    } else {
      inst.lhs = Word::reduced({{rs, -1}, {sj, -1}, {rs, 1}});
      inst.rhs = Word::reduced({{rj, 1}, {sj, -1}, {rj, -1}});
    }
  } else if (tag == "crossing-commute" || tag == "crossing-commute-solved") {
    int r = detail::binding_int(binding, "r");
    int i = detail::binding_int(binding, "i");
    int s = detail::binding_int(binding, "s");
    int j = detail::binding_int(binding, "j");
    detail::require_admissible_labels(disc, {r, i, s, j});
    Generator rs = S2(r, s), ij = S2(i, j), sj = S2(s, j);
    Word V = Word::reduced({{sj, 1}, {rs, 1}, {sj, -1}});
    if (tag == "crossing-commute") {
      inst.lhs = Word::letter(ij) * V;
      inst.rhs = V * Word::letter(ij);
    } else {
      inst.lhs = Word::letter(ij);
      inst.rhs = V * Word::letter(ij) * V.inverse();
    }
  } else if (tag == "twist-split" || tag == "twist-split-second") {
    PunctureSet B = detail::binding_set(binding, "B", disc);
    PunctureSet C = detail::binding_set(binding, "C", disc);
    PunctureSet D = detail::binding_set(binding, "D", disc);
    if (!admissible({B, C, D})) throw std::invalid_argument("binding (B,C,D) is not admissible");
    if (tag == "twist-split") {
      inst.lhs = Word::letter(Generator::twist(B, C.united(D)));
      inst.rhs = Word::letter(Generator::twist(B, C)) * Word::letter(Generator::twist(B, D));
    } else {
      inst.lhs = Word::letter(Generator::twist(B, D));
      inst.rhs = Word::letter(Generator::twist(B, C), -1) *
                 Word::letter(Generator::twist(B, C.united(D)));
    }
  } else if (tag == "twist-nested-commute" || tag == "twist-noncrossing-commute") {
    PunctureSet B = detail::binding_set(binding, "B", disc);
    PunctureSet C = detail::binding_set(binding, "C", disc);
    PunctureSet D = detail::binding_set(binding, "D", disc);
    PunctureSet E = detail::binding_set(binding, "E", disc);
    int s1 = detail::binding_sign(binding, "s1");
    int s2 = detail::binding_sign(binding, "s2");
    Generator t1 = Generator::twist(B, C);
    Generator t2 = Generator::twist(D, E);
    if (tag == "twist-nested-commute") {
      if (!nested({B, C}, {D, E}))
        throw std::invalid_argument("binding pairs (B,C),(D,E) are not nested");
    } else {
      PunctureSet u1 = B.united(C), u2 = D.united(E);
      if (!u1.disjoint_from(u2) || crossing(u1, u2))
        throw std::invalid_argument("binding supports are not disjoint non-crossing");
    }
    inst.lhs = Word::reduced({{t1, s1}, {t2, s2}});
    inst.rhs = Word::reduced({{t2, s2}, {t1, s1}});
  } else if (tag == "twist-chain-conjugate") {
    int r = detail::binding_int(binding, "r");
    int s = detail::binding_int(binding, "s");
    int j = detail::binding_int(binding, "j");
    detail::require_admissible_labels(disc, {r, s, j});
    inst.lhs = Word::reduced({{T1(s, j), 1}, {T1(r, s), 1}, {T1(s, j), -1}});
    inst.rhs = Word::reduced({{T1(r, j), -1}, {T1(r, s), 1}, {T1(r, j), 1}});
  } else if (tag == "swing-commute") {
    PunctureSet B = detail::binding_set(binding, "B", disc);
    PunctureSet C = detail::binding_set(binding, "C", disc);
    int sb = detail::binding_sign(binding, "sb");
    int sc = detail::binding_sign(binding, "sc");
    if (B.mask() == C.mask()) throw std::invalid_argument("swing-commute sets must differ");
    if (!compatible(B, C)) throw std::invalid_argument("swing-commute sets must be compatible");
    inst.lhs = Word::reduced({{Sw(B), sb}, {Sw(C), sc}});
    inst.rhs = Word::reduced({{Sw(C), sc}, {Sw(B), sb}});
  } else if (tag == "swing-triviality") {
    PunctureSet B = detail::binding_set(binding, "B", disc);
    if (B.size() != 1) throw std::invalid_argument("swing-triviality needs a singleton set");
    inst.lhs = Word::letter(Sw(B));
    inst.rhs = Word();
  } else if (tag == "lantern") {
    PunctureSet B = detail::binding_set(binding, "B", disc);
    PunctureSet C = detail::binding_set(binding, "C", disc);
    PunctureSet D = detail::binding_set(binding, "D", disc);
    if (!admissible({B, C, D})) throw std::invalid_argument("binding (B,C,D) is not admissible");
    inst.lhs = Word::reduced(
        {{Sw(B.united(C).united(D)), 1}, {Sw(B), 1}, {Sw(C), 1}, {Sw(D), 1}});
    inst.rhs = Word::reduced({{Sw(C.united(B)), 1}, {Sw(B.united(D)), 1}, {Sw(D.united(C)), 1}});
  } else {
    throw std::invalid_argument("unknown relation tag: " + tag);
  }

  if (!engine.equivalent(inst.lhs, inst.rhs))
    throw std::invalid_argument("relation instance does not hold under the oracle: " + tag);
  return inst;
}

struct RewriteStep {
  RelationInstance instance;
  std::size_t position = 0;
  StepDirection direction = StepDirection::lhs_to_rhs;
  StepMode mode = StepMode::substitute;
};

// Applies one rewriting step.  Substitution requires the source side to occur
// letter-for-letter at the position; the multiply modes append or prepend the
// trivial factor carrying the equation, so every mode preserves the group element.
inline Word apply_step(const Word& w, const RewriteStep& step) {
  const Word& from =
      step.direction == StepDirection::lhs_to_rhs ? step.instance.lhs : step.instance.rhs;
  const Word& to =
      step.direction == StepDirection::lhs_to_rhs ? step.instance.rhs : step.instance.lhs;
  switch (step.mode) {
    case StepMode::substitute: {
      const auto& ls = w.letters();
      const auto& fs = from.letters();
      if (step.position > ls.size() || fs.size() > ls.size() - step.position)
        throw std::invalid_argument("substitution does not fit at position " +
                                    std::to_string(step.position));
      for (std::size_t k = 0; k < fs.size(); ++k)
        if (!(ls[step.position + k] == fs[k]))
          throw std::invalid_argument("pattern mismatch at position " +
                                      std::to_string(step.position + k));
      std::vector<SignedGen> out(ls.begin(),
                                 ls.begin() + static_cast<std::ptrdiff_t>(step.position));
      for (const auto& L : to.letters()) out.push_back(L);
      for (std::size_t k = step.position + fs.size(); k < ls.size(); ++k) out.push_back(ls[k]);
      return Word::reduced(out);
    }
    case StepMode::left_multiply:
      return to * from.inverse() * w;
    case StepMode::right_multiply:
      return w * from.inverse() * to;
  }
  throw std::logic_error("unknown step mode");
}

struct RewriteScript {
  std::string name;
  nlohmann::ordered_json binding;
  Word start;
  std::vector<RewriteStep> steps;
  Word goal;
};

struct ScriptReport {
  std::string name;
  bool passed = false;
  std::size_t steps_applied = 0;
  std::string message;
};

// Replays a script.  Passing requires every step to apply, the final word to equal
// the goal letter-for-letter, and start ≡ goal under the oracle.  In debug mode
// every intermediate step is additionally checked to preserve the group element.
inline ScriptReport check_script(const RewriteScript& s, OracleEngine& engine,
                                 bool debug = false) {
  ScriptReport rep;
  rep.name = s.name;
  Word cur = s.start;
  for (std::size_t i = 0; i < s.steps.size(); ++i) {
    Word nxt;
    try {
      nxt = apply_step(cur, s.steps[i]);
    } catch (const std::exception& e) {
      rep.message = "step " + std::to_string(i) + ": " + e.what();
      return rep;
    }
    if (debug && !engine.equivalent(cur, nxt)) {
      rep.message = "step " + std::to_string(i) + " changed the group element";
      return rep;
    }
    cur = nxt;
    ++rep.steps_applied;
  }
  if (cur != s.goal) {
    rep.message = "final word '" + print_word(cur) + "' differs from goal '" +
                  print_word(s.goal) + "'";
    return rep;
  }
  if (!engine.equivalent(s.start, s.goal)) {
    rep.message = "start and goal are not oracle-equal";
    return rep;
  }
  rep.passed = true;
  return rep;
}

namespace detail {

inline nlohmann::ordered_json set_json(const PunctureSet& s) {
  return nlohmann::ordered_json(s.members());
}

inline std::vector<std::array<int, 3>> admissible_singleton_triples(int n) {
  std::vector<std::array<int, 3>> out;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c) {
        out.push_back({a, b, c});
        out.push_back({b, c, a});
        out.push_back({c, a, b});
      }
  return out;
}

inline std::vector<std::array<PunctureSet, 3>> admissible_ordered_triples(const ConvexDisc& disc) {
  std::vector<std::array<PunctureSet, 3>> out;
  for (const auto& U : all_subsets(disc, 3)) {
    const auto ord = canonical_admissible_order(U);
    const int m = static_cast<int>(ord.size());
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b)
        for (int c = b + 1; c < m; ++c) {
          auto arcs = cut_arcs(disc, ord, a, b, c);
          for (int t = 0; t < 3; ++t)
            out.push_back({arcs[static_cast<std::size_t>(t)],
                           arcs[static_cast<std::size_t>((t + 1) % 3)],
                           arcs[static_cast<std::size_t>((t + 2) % 3)]});
        }
  }
  return out;
}

inline RewriteStep make_step(const std::string& tag, nlohmann::ordered_json binding,
                             StepDirection dir, StepMode mode, std::size_t pos,
                             OracleEngine& engine) {
  RewriteStep st;
  st.instance = relation_instance(tag, std::move(binding), engine);
  st.direction = dir;
  st.mode = mode;
  st.position = pos;
  return st;
}

}  // namespace detail

inline const std::vector<std::string>& bundled_script_names() {
  static const std::vector<std::string> names = {"artin-3rd-from-(3)",
                                                 "artin-4th-A4'-from-(3)",
                                                 "artin-5th-from-(2)(3)",
                                                 "triangles-lemma",
                                                 "twist-rel-second-modified-artin",
                                                 "swing-rel-nested-noncrossing",
                                                 "lantern-implies-twist-factorization"};
  return names;
}

// Instantiates a bundled derivation over every valid binding at disc size n.
inline std::vector<RewriteScript> make_bundled_scripts(const std::string& name, int n,
                                                       OracleEngine& engine) {
  ConvexDisc disc(n);
  std::vector<RewriteScript> out;
  auto S2 = [&](int i, int j) { return Generator::swing(PunctureSet(disc, {i, j})); };
  auto T1 = [&](int i, int j) {
    return Generator::twist(PunctureSet(disc, {i}), PunctureSet(disc, {j}));
  };
  auto chain_binding = [&](int r, int s, int j) {
    nlohmann::ordered_json b;
    b["n"] = n;
    b["r"] = r;
    b["s"] = s;
    b["j"] = j;
    return b;
  };

  if (name == "artin-3rd-from-(3)") {
    for (const auto& t : detail::admissible_singleton_triples(n)) {
      int r = t[0], s = t[1], j = t[2];
      Generator rs = S2(r, s), sj = S2(s, j), rj = S2(r, j);
      RewriteScript sc;
      sc.name = name + " (r,s,j)=(" + std::to_string(r) + "," + std::to_string(s) + "," +
                std::to_string(j) + ")";
      sc.binding = chain_binding(r, s, j);
      sc.start = Word::reduced({{rs, -1}, {sj, 1}, {rs, 1}, {rj, 1}, {sj, -1}, {rj, -1}});
      sc.steps.push_back(detail::make_step("chain-first", chain_binding(r, s, j),
                                           StepDirection::lhs_to_rhs, StepMode::substitute, 1,
                                           engine));
      out.push_back(std::move(sc));
    }
  } else if (name == "artin-4th-A4'-from-(3)") {
    for (const auto& t : detail::admissible_singleton_triples(n)) {
      int r = t[0], s = t[1], j = t[2];
      Generator rs = S2(r, s), sj = S2(s, j), rj = S2(r, j);
      RewriteScript sc;
      sc.name = name + " (r,s,j)=(" + std::to_string(r) + "," + std::to_string(s) + "," +
                std::to_string(j) + ")";
      sc.binding = chain_binding(r, s, j);
      sc.start = Word::reduced(
          {{rj, 1}, {rs, 1}, {rj, 1}, {sj, 1}, {rj, -1}, {sj, -1}, {rj, -1}, {rs, -1}});
      sc.steps.push_back(detail::make_step("chain-first", chain_binding(r, s, j),
                                           StepDirection::rhs_to_lhs, StepMode::substitute, 1,
                                           engine));
      sc.steps.push_back(detail::make_step("chain-second", chain_binding(r, s, j),
                                           StepDirection::rhs_to_lhs, StepMode::substitute, 0,
                                           engine));
      out.push_back(std::move(sc));
    }
  } else if (name == "artin-5th-from-(2)(3)") {
    for (int a = 1; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b)
        for (int c = b + 1; c <= n; ++c)
          for (int d = c + 1; d <= n; ++d) {
            int r = a, i = b, s = c, j = d;
            Generator rs = S2(r, s), ij = S2(i, j), rj = S2(r, j), sj = S2(s, j);
            RewriteScript sc;
            sc.name = name + " (r,i,s,j)=(" + std::to_string(r) + "," + std::to_string(i) + "," +
                      std::to_string(s) + "," + std::to_string(j) + ")";
            nlohmann::ordered_json b4;
            b4["n"] = n;
            b4["r"] = r;
            b4["i"] = i;
            b4["s"] = s;
            b4["j"] = j;
            sc.binding = b4;
            sc.start = Word::reduced({{rs, -1},
                                      {ij, 1},
                                      {rs, 1},
                                      {rj, 1},
                                      {sj, 1},
                                      {rj, -1},
                                      {sj, -1},
                                      {ij, -1},
                                      {sj, 1},
                                      {rj, 1},
                                      {sj, -1},
                                      {rj, -1}});
            sc.steps.push_back(detail::make_step("crossing-commute-solved", b4,
                                                 StepDirection::lhs_to_rhs, StepMode::substitute,
                                                 1, engine));
            sc.steps.push_back(detail::make_step("chain-conjugate", chain_binding(r, s, j),
                                                 StepDirection::lhs_to_rhs, StepMode::substitute,
                                                 0, engine));
            sc.steps.push_back(detail::make_step("chain-conjugate-inverse",
                                                 chain_binding(r, s, j),
                                                 StepDirection::lhs_to_rhs, StepMode::substitute,
                                                 6, engine));
            out.push_back(std::move(sc));
          }
  } else if (name == "triangles-lemma") {
    for (const auto& tr : detail::admissible_ordered_triples(disc)) {
      const PunctureSet &B = tr[0], &C = tr[1], &D = tr[2];
      Generator tcb = Generator::twist(C, B);
      Generator tbd = Generator::twist(B, D);
      Generator tdc = Generator::twist(D, C);
      auto split_binding = [&](const PunctureSet& x, const PunctureSet& y, const PunctureSet& z) {
        nlohmann::ordered_json b;
        b["n"] = n;
        b["B"] = detail::set_json(x);
        b["C"] = detail::set_json(y);
        b["D"] = detail::set_json(z);
        return b;
      };
      auto nest_binding = [&](const PunctureSet& b1, const PunctureSet& c1, const PunctureSet& d1,
                              const PunctureSet& e1) {
        nlohmann::ordered_json b;
        b["n"] = n;
        b["B"] = detail::set_json(b1);
        b["C"] = detail::set_json(c1);
        b["D"] = detail::set_json(d1);
        b["E"] = detail::set_json(e1);
        return b;
      };
      std::string suffix = " B=" + B.to_string() + " C=" + C.to_string() + " D=" + D.to_string();
      {
        RewriteScript sc;
        sc.name = name + " (first)" + suffix;
        sc.binding = split_binding(B, C, D);
        sc.start = Word::reduced(
            {{tcb, 1}, {tbd, 1}, {tdc, 1}, {tcb, -1}, {tdc, -1}, {tbd, -1}});
        sc.steps.push_back(detail::make_step("twist-split", split_binding(D, B, C),
                                             StepDirection::rhs_to_lhs, StepMode::substitute, 1,
                                             engine));
        sc.steps.push_back(detail::make_step("twist-nested-commute",
                                             nest_binding(C, B, D, B.united(C)),
                                             StepDirection::lhs_to_rhs, StepMode::substitute, 0,
                                             engine));
        sc.steps.push_back(detail::make_step("twist-split", split_binding(D, B, C),
                                             StepDirection::lhs_to_rhs, StepMode::substitute, 0,
                                             engine));
        out.push_back(std::move(sc));
      }
      {
        RewriteScript sc;
        sc.name = name + " (second)" + suffix;
        sc.binding = split_binding(B, C, D);
        sc.start = Word::reduced(
            {{tbd, 1}, {tdc, 1}, {tcb, 1}, {tbd, -1}, {tcb, -1}, {tdc, -1}});
        sc.steps.push_back(detail::make_step("twist-split", split_binding(C, D, B),
                                             StepDirection::rhs_to_lhs, StepMode::substitute, 1,
                                             engine));
        sc.steps.push_back(detail::make_step("twist-nested-commute",
                                             nest_binding(B, D, C, D.united(B)),
                                             StepDirection::lhs_to_rhs, StepMode::substitute, 0,
                                             engine));
        sc.steps.push_back(detail::make_step("twist-split", split_binding(C, D, B),
                                             StepDirection::lhs_to_rhs, StepMode::substitute, 0,
                                             engine));
        out.push_back(std::move(sc));
      }
    }
  } else if (name == "twist-rel-second-modified-artin") {
    for (int a = 1; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b)
        for (int c = b + 1; c <= n; ++c)
          for (int d = c + 1; d <= n; ++d) {
            int r = a, i = b, s = c, j = d;
            PunctureSet pr(disc, {r}), pi(disc, {i}), ps(disc, {s}), pj(disc, {j});
            PunctureSet is = pi.united(ps), ris = pr.united(is);
            Generator tij = T1(i, j), tsj = T1(s, j), trs = T1(r, s);
            auto set_binding3 = [&](const PunctureSet& x, const PunctureSet& y,
                                    const PunctureSet& z) {
              nlohmann::ordered_json bb;
              bb["n"] = n;
              bb["B"] = detail::set_json(x);
              bb["C"] = detail::set_json(y);
              bb["D"] = detail::set_json(z);
              return bb;
            };
            RewriteScript sc;
            sc.name = name + " (r,i,s,j)=(" + std::to_string(r) + "," + std::to_string(i) + "," +
                      std::to_string(s) + "," + std::to_string(j) + ")";
            nlohmann::ordered_json b4;
            b4["n"] = n;
            b4["r"] = r;
            b4["i"] = i;
            b4["s"] = s;
            b4["j"] = j;
            sc.binding = b4;
            sc.start = Word::reduced({{tij, 1},
                                      {tsj, 1},
                                      {trs, 1},
                                      {tsj, -1},
                                      {tij, -1},
                                      {tsj, 1},
                                      {trs, -1},
                                      {tsj, -1}});
            sc.steps.push_back(detail::make_step("twist-split", set_binding3(pj, pi, ps),
                                                 StepDirection::rhs_to_lhs, StepMode::substitute,
                                                 0, engine));
            sc.steps.push_back(detail::make_step("twist-split-second", set_binding3(pj, pr, is),
                                                 StepDirection::lhs_to_rhs, StepMode::substitute,
                                                 0, engine));
            {
              nlohmann::ordered_json bb;
              bb["n"] = n;
              bb["B"] = detail::set_json(ris);
              bb["C"] = detail::set_json(pj);
              bb["D"] = detail::set_json(pr);
              bb["E"] = detail::set_json(ps);
              sc.steps.push_back(detail::make_step("twist-nested-commute", bb,
                                                   StepDirection::lhs_to_rhs, StepMode::substitute,
                                                   1, engine));
            }
            sc.steps.push_back(detail::make_step("twist-split", set_binding3(pj, pr, is),
                                                 StepDirection::lhs_to_rhs, StepMode::substitute,
                                                 2, engine));
            sc.steps.push_back(detail::make_step("twist-split", set_binding3(pj, pi, ps),
                                                 StepDirection::lhs_to_rhs, StepMode::substitute,
                                                 3, engine));
            sc.steps.push_back(detail::make_step("twist-chain-conjugate", chain_binding(r, s, j),
                                                 StepDirection::rhs_to_lhs, StepMode::substitute,
                                                 0, engine));
            out.push_back(std::move(sc));
          }
  } else if (name == "swing-rel-nested-noncrossing") {
    std::vector<Generator> tgens;
    auto sets = detail::all_subsets(disc, 1);
    for (std::size_t i = 0; i < sets.size(); ++i)
      for (std::size_t j = i + 1; j < sets.size(); ++j)
        if (sets[i].disjoint_from(sets[j]) && non_crossing(sets[i], sets[j]))
          tgens.push_back(Generator::twist(sets[i], sets[j]));
    std::sort(tgens.begin(), tgens.end());
    for (std::size_t gi = 0; gi < tgens.size(); ++gi)
      for (std::size_t gj = gi + 1; gj < tgens.size(); ++gj) {
        const PunctureSet &B = tgens[gi].first(), &C = tgens[gi].second();
        const PunctureSet &D = tgens[gj].first(), &E = tgens[gj].second();
        PunctureSet u1 = B.united(C), u2 = D.united(E);
        bool nc = u1.disjoint_from(u2) && non_crossing(u1, u2);
        bool nest = nested({B, C}, {D, E});
        if (!nc && !nest) continue;
        RewriteScript sc;
        sc.name = name + " " + tgens[gi].to_string() + " vs " + tgens[gj].to_string();
        nlohmann::ordered_json bb;
        bb["n"] = n;
        bb["B"] = detail::set_json(B);
        bb["C"] = detail::set_json(C);
        bb["D"] = detail::set_json(D);
        bb["E"] = detail::set_json(E);
        sc.binding = bb;
        Word w1 = twist_to_swings(B, C);
        Word w2 = twist_to_swings(D, E);
        sc.start = w1 * w2 * w1.inverse() * w2.inverse();
        // Sort the swing letters by bubbling: every adjacent transposition is an
        // instance of the compatible-commute relation; the sorted word reduces to
        // nothing because every generator has net exponent zero.
        Word cur = sc.start;
        for (;;) {
          const auto& ls = cur.letters();
          std::size_t p = ls.size();
          for (std::size_t k = 0; k + 1 < ls.size(); ++k)
            if (ls[k + 1].gen < ls[k].gen) {
              p = k;
              break;
            }
          if (p == ls.size()) break;
          nlohmann::ordered_json sb;
          sb["n"] = n;
          sb["B"] = detail::set_json(ls[p].gen.set());
          sb["C"] = detail::set_json(ls[p + 1].gen.set());
          sb["sb"] = ls[p].sign;
          sb["sc"] = ls[p + 1].sign;
          RewriteStep st = detail::make_step("swing-commute", sb, StepDirection::lhs_to_rhs,
                                             StepMode::substitute, p, engine);
          cur = apply_step(cur, st);
          sc.steps.push_back(std::move(st));
        }
        sc.goal = Word();
        out.push_back(std::move(sc));
      }
  } else if (name == "lantern-implies-twist-factorization") {
    for (const auto& tr : detail::admissible_ordered_triples(disc)) {
      const PunctureSet &B = tr[0], &C = tr[1], &D = tr[2];
      PunctureSet CD = C.united(D), BC = B.united(C), BD = B.united(D), U = B.united(CD);
      Generator sB = Generator::swing(B), sC = Generator::swing(C), sD = Generator::swing(D);
      Generator sCD = Generator::swing(CD), sBC = Generator::swing(BC), sBD = Generator::swing(BD);
      Generator sU = Generator::swing(U);
      auto lant_binding = [&](const PunctureSet& x, const PunctureSet& y, const PunctureSet& z) {
        nlohmann::ordered_json b;
        b["n"] = n;
        b["B"] = detail::set_json(x);
        b["C"] = detail::set_json(y);
        b["D"] = detail::set_json(z);
        return b;
      };
      auto swap_binding = [&](const SignedGen& u, const SignedGen& v) {
        nlohmann::ordered_json b;
        b["n"] = n;
        b["B"] = detail::set_json(u.gen.set());
        b["C"] = detail::set_json(v.gen.set());
        b["sb"] = u.sign;
        b["sc"] = v.sign;
        return b;
      };
      RewriteScript sc;
      sc.name = name + " B=" + B.to_string() + " C=" + C.to_string() + " D=" + D.to_string();
      sc.binding = lant_binding(B, C, D);
      sc.start = Word::reduced({{sB, -1}, {sCD, -1}, {sU, 1}});
      sc.goal =
          Word::reduced({{sB, -1}, {sC, -1}, {sBC, 1}, {sB, -1}, {sD, -1}, {sBD, 1}});
      Word cur = sc.start;
      auto push_step = [&](const std::string& tag, nlohmann::ordered_json bnd, StepDirection dir,
                           StepMode mode, std::size_t pos) {
        RewriteStep st = detail::make_step(tag, std::move(bnd), dir, mode, pos, engine);
        cur = apply_step(cur, st);
        sc.steps.push_back(std::move(st));
      };
      auto swap_at = [&](std::size_t pos) {
        const auto& ls = cur.letters();
        push_step("swing-commute", swap_binding(ls[pos], ls[pos + 1]),
                  StepDirection::lhs_to_rhs, StepMode::substitute, pos);
      };
      push_step("lantern", lant_binding(B, C, D), StepDirection::lhs_to_rhs,
                StepMode::right_multiply, 0);
      swap_at(2);  // move S_BCD right, past the inverses of S_D, S_C, S_B
      swap_at(3);
      swap_at(4);  // cancels against S_BCD^-1
      swap_at(1);  // move S_CD^-1 right, past the inverses of S_D, S_C, S_B
      swap_at(2);
      swap_at(3);
      push_step("lantern", lant_binding(B, C, D), StepDirection::rhs_to_lhs,
                StepMode::substitute, 5);
      swap_at(6);  // move the reborn S_B right
      swap_at(7);
      push_step("lantern", lant_binding(C, D, B), StepDirection::lhs_to_rhs,
                StepMode::substitute, 5);
      swap_at(1);  // sort the leading inverses and settle the tail
      swap_at(2);
      swap_at(3);
      swap_at(2);
      out.push_back(std::move(sc));
    }
  } else {
    throw std::invalid_argument("unknown bundled script: " + name);
  }
  return out;
}

// Witness U with S_ij · U = U · S_ij = S_full, following the three cases of the
// centrality argument: nothing to do when {i,j} is everything; a single twist when
// i and j are neighbours; otherwise both complementary arcs take part.
inline Word central_witness(int i, int j, int n) {
  ConvexDisc disc(n);
  disc.check_label(i);
  disc.check_label(j);
  if (i == j) throw std::invalid_argument("witness labels must differ");
  PunctureSet ij(disc, {i, j});
  if (ij.size() == disc.size()) return Word();
  if (disc.successor(i) == j || disc.successor(j) == i) {
    PunctureSet B = ij.complement();
    return Word::letter(Generator::swing(B)) * Word::letter(Generator::twist(ij, B));
  }
  PunctureSet B = clockwise_arc(disc, i, j);
  PunctureSet C = clockwise_arc(disc, j, i);
  return Word::reduced({{Generator::swing(B), 1},
                        {Generator::swing(C), 1},
                        {Generator::twist(ij, C), 1},
                        {Generator::twist(B, ij.united(C)), 1}});
}

// S_B as a product of convex twists: peel off the head of the canonical order and
// recurse on the tail; singleton swings are trivial and drop out.
inline Word swing_as_twists(const PunctureSet& B) {
  require_nonempty(B, "swing_as_twists argument");
  if (B.size() == 1) return Word();
  ConvexDisc disc = B.disc();
  PunctureSet head(disc, {canonical_admissible_order(B)[0]});
  PunctureSet tail = B.minus(head);
  return swing_as_twists(tail) * Word::letter(Generator::twist(head, tail));
}

inline nlohmann::ordered_json script_to_json(const RewriteScript& s) {
  nlohmann::ordered_json doc;
  doc["name"] = s.name;
  doc["binding"] = s.binding;
  doc["start"] = print_word(s.start);
  auto steps = nlohmann::ordered_json::array();
  for (const auto& st : s.steps) {
    nlohmann::ordered_json e;
    e["relation_tag"] = st.instance.tag;
    e["binding"] = st.instance.binding;
    e["position"] = st.position;
    e["direction"] = to_string(st.direction);
    e["mode"] = to_string(st.mode);
    steps.push_back(std::move(e));
  }
  doc["steps"] = steps;
  doc["goal"] = print_word(s.goal);
  return doc;
}

inline RewriteScript script_from_json(const nlohmann::ordered_json& doc, OracleEngine& engine) {
  RewriteScript s;
  s.name = doc.at("name").get<std::string>();
  s.binding = doc.at("binding");
  const int n = detail::binding_int(s.binding, "n");
  if (n != engine.n()) throw std::invalid_argument("script disc size differs from engine");
  ConvexDisc disc(n);
  s.start = parse_word(doc.at("start").get<std::string>(), disc);
  for (const auto& e : doc.at("steps")) {
    RewriteStep st;
    st.instance = relation_instance(e.at("relation_tag").get<std::string>(), e.at("binding"),
                                    engine);
    st.position = e.at("position").get<std::size_t>();
    st.direction = direction_from_string(e.at("direction").get<std::string>());
    st.mode = mode_from_string(e.at("mode").get<std::string>());
    s.steps.push_back(std::move(st));
  }
  s.goal = parse_word(doc.at("goal").get<std::string>(), disc);
  return s;
}

}  // namespace pbraid
