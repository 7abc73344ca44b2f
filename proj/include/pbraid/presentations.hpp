#pragma once

#include "pbraid/oracle.hpp"
#include "pbraid/smith.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <atomic>
#include <thread>

namespace pbraid {

struct Presentation {
  std::string name;
  int n = 0;
  std::vector<Generator> generators;
  std::vector<Word> relators;
  std::vector<std::string> relation_tags;  // parallel to relators
  // Generator pairs matched by both commutator schemas of the twist presentation.
  // Expected to be zero (the schemas are mutually exclusive); counted, not assumed.
  int nested_noncrossing_overlap = 0;
};

namespace detail {

// All subsets with at least min_size members, sorted lexicographically on the
// ascending member lists.  This order is the canonical enumeration order.
inline std::vector<PunctureSet> all_subsets(const ConvexDisc& disc, int min_size) {
  std::vector<PunctureSet> out;
  const std::uint64_t top = std::uint64_t{1} << disc.size();
  for (std::uint64_t mask = 1; mask < top; ++mask)
    if (std::popcount(mask) >= min_size) out.push_back(PunctureSet::from_mask(disc, mask));
  std::sort(out.begin(), out.end());
  return out;
}

inline Word commutator(const Generator& g, const Generator& h) {
  return Word::reduced({{g, 1}, {h, 1}, {g, -1}, {h, -1}});
}

inline void add_relator(Presentation& p, const Word& r, const std::string& tag) {
  p.relators.push_back(r);
  p.relation_tags.push_back(tag);
}

// The three arcs of U's cyclic order determined by cut positions p < q < r.
inline std::array<PunctureSet, 3> cut_arcs(const ConvexDisc& disc, const std::vector<int>& ord,
                                           int p, int q, int r) {
  const int m = static_cast<int>(ord.size());
  std::vector<int> x1, x2, x3;
  for (int t = p; t < q; ++t) x1.push_back(ord[static_cast<std::size_t>(t)]);
  for (int t = q; t < r; ++t) x2.push_back(ord[static_cast<std::size_t>(t)]);
  for (int t = r; t < m; ++t) x3.push_back(ord[static_cast<std::size_t>(t)]);
  for (int t = 0; t < p; ++t) x3.push_back(ord[static_cast<std::size_t>(t)]);
  return {PunctureSet(disc, x1), PunctureSet(disc, x2), PunctureSet(disc, x3)};
}

}  // namespace detail

inline Presentation rotation_presentation(int n) {
  if (n < 2) throw std::invalid_argument("rotation presentation requires n >= 2");
  ConvexDisc disc(n);
  Presentation p;
  p.name = "rotation";
  p.n = n;
  auto sets = detail::all_subsets(disc, 2);
  for (const auto& B : sets) p.generators.push_back(Generator::rotation(B));
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = i + 1; j < sets.size(); ++j)
      if (sets[i].disjoint_from(sets[j]) && non_crossing(sets[i], sets[j]))
        detail::add_relator(p, detail::commutator(p.generators[i], p.generators[j]),
                            "non-crossing commute");
  // R_{iB} R_{iC} = R_{iBC} for every admissible ({i}, B, C): pivot i, then a cut
  // of the remaining labels read clockwise from i.
  for (const auto& U : sets) {
    const auto ord = canonical_admissible_order(U);
    const int m = static_cast<int>(ord.size());
    if (m < 3) continue;
    for (int a = 0; a < m; ++a)
      for (int c = 1; c <= m - 2; ++c) {
        std::vector<int> ib{ord[static_cast<std::size_t>(a)]};
        std::vector<int> ic{ord[static_cast<std::size_t>(a)]};
        for (int t = 1; t < m; ++t)
          (t <= c ? ib : ic).push_back(ord[static_cast<std::size_t>((a + t) % m)]);
        Word r = Word::letter(Generator::rotation(PunctureSet(disc, ib))) *
                 Word::letter(Generator::rotation(PunctureSet(disc, ic))) *
                 Word::letter(Generator::rotation(U), -1);
        detail::add_relator(p, r, "split");
      }
  }
  return p;
}

inline Presentation bkl_presentation(int n) {
  if (n < 2) throw std::invalid_argument("bkl presentation requires n >= 2");
  ConvexDisc disc(n);
  Presentation p;
  p.name = "bkl";
  p.n = n;
  std::vector<PunctureSet> pairs;
  for (const auto& B : detail::all_subsets(disc, 2))
    if (B.size() == 2) pairs.push_back(B);
  for (const auto& B : pairs) {
    auto m = B.members();
    p.generators.push_back(Generator::band(disc, m[0], m[1]));
  }
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (std::size_t j = i + 1; j < pairs.size(); ++j)
      if (pairs[i].disjoint_from(pairs[j]) && non_crossing(pairs[i], pairs[j]))
        detail::add_relator(p, detail::commutator(p.generators[i], p.generators[j]),
                            "non-crossing commute");
  // The triple rotation's three factorizations, equated pairwise (two independent
  // relators per 3-subset; the cyclic reorderings repeat the same set).
  for (const auto& T : detail::all_subsets(disc, 3)) {
    if (T.size() != 3) continue;
    auto m = T.members();
    Generator ab = Generator::band(disc, m[0], m[1]);
    Generator ac = Generator::band(disc, m[0], m[2]);
    Generator bc = Generator::band(disc, m[1], m[2]);
    detail::add_relator(p, Word::reduced({{ab, 1}, {ac, 1}, {bc, -1}, {ac, -1}}), "triple");
    detail::add_relator(p, Word::reduced({{ac, 1}, {bc, 1}, {ab, -1}, {bc, -1}}), "triple");
  }
  return p;
}

inline Presentation artin_presentation(int n) {
  if (n < 2) throw std::invalid_argument("artin presentation requires n >= 2");
  ConvexDisc disc(n);
  Presentation p;
  p.name = "artin";
  p.n = n;
  auto S = [&](int i, int j) { return Generator::swing(PunctureSet(disc, {i, j})); };
  for (const auto& B : detail::all_subsets(disc, 2))
    if (B.size() == 2) p.generators.push_back(Generator::swing(B));
  // Conjugation of S_{ij} by S_{rs}, five cases by the relative order of indices;
  // every relator is S_rs^-1 S_ij S_rs · (case expression)^-1.
  std::vector<std::vector<int>> quads, triples;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c) {
        triples.push_back({a, b, c});
        for (int d = c + 1; d <= n; ++d) quads.push_back({a, b, c, d});
      }
  for (const auto& q : quads) {  // r < s < i < j
    Generator rs = S(q[0], q[1]), ij = S(q[2], q[3]);
    detail::add_relator(p, Word::reduced({{rs, -1}, {ij, 1}, {rs, 1}, {ij, -1}}),
                        "disjoint pairs");
  }
  for (const auto& q : quads) {  // i < r < s < j
    Generator rs = S(q[1], q[2]), ij = S(q[0], q[3]);
    detail::add_relator(p, Word::reduced({{rs, -1}, {ij, 1}, {rs, 1}, {ij, -1}}), "nested pairs");
  }
  for (const auto& t : triples) {  // r < i = s < j: conjugate is S_rj S_sj S_rj^-1
    Generator rs = S(t[0], t[1]), sj = S(t[1], t[2]), rj = S(t[0], t[2]);
    detail::add_relator(
        p, Word::reduced({{rs, -1}, {sj, 1}, {rs, 1}, {rj, 1}, {sj, -1}, {rj, -1}}),
        "shared middle");
  }
  for (const auto& t : triples) {  // r = i < s < j: conjugate is (S_ij S_sj) S_ij (S_ij S_sj)^-1
    Generator rs = S(t[0], t[1]), ij = S(t[0], t[2]), sj = S(t[1], t[2]);
    detail::add_relator(p,
                        Word::reduced({{rs, -1},
                                       {ij, 1},
                                       {rs, 1},
                                       {ij, 1},
                                       {sj, 1},
                                       {ij, -1},
                                       {sj, -1},
                                       {ij, -1}}),
                        "shared endpoint");
  }
  for (const auto& q : quads) {  // r < i < s < j: conjugate by the commutator [S_rj, S_sj]
    Generator rs = S(q[0], q[2]), ij = S(q[1], q[3]), rj = S(q[0], q[3]), sj = S(q[2], q[3]);
    detail::add_relator(p,
                        Word::reduced({{rs, -1},
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
                                       {rj, -1}}),
                        "crossing pairs");
  }
  return p;
}

inline Presentation modified_artin_presentation(int n) {
  if (n < 2) throw std::invalid_argument("modified artin presentation requires n >= 2");
  ConvexDisc disc(n);
  Presentation p;
  p.name = "modified_artin";
  p.n = n;
  std::vector<PunctureSet> pairs;
  for (const auto& B : detail::all_subsets(disc, 2))
    if (B.size() == 2) pairs.push_back(B);
  for (const auto& B : pairs) p.generators.push_back(Generator::swing(B));
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (std::size_t j = i + 1; j < pairs.size(); ++j)
      if (pairs[i].disjoint_from(pairs[j]) && non_crossing(pairs[i], pairs[j]))
        detail::add_relator(p, detail::commutator(p.generators[i], p.generators[j]),
                            "non-crossing commute");
  // Crossing pairs commute after conjugation: [S_ij, S_sj S_rs S_sj^-1], with roles
  // (r,i,s,j) read off in cyclic order from the smallest involved label.
  auto S = [&](int i, int j) { return Generator::swing(PunctureSet(disc, {i, j})); };
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      if (!pairs[i].disjoint_from(pairs[j]) || !crossing(pairs[i], pairs[j])) continue;
      auto all = pairs[i].united(pairs[j]).members();
      Generator rs = S(all[0], all[2]), ij = S(all[1], all[3]);
      Generator sj = S(all[2], all[3]);
      detail::add_relator(p,
                          Word::reduced({{ij, 1},
                                         {sj, 1},
                                         {rs, 1},
                                         {sj, -1},
                                         {ij, -1},
                                         {sj, 1},
                                         {rs, -1},
                                         {sj, -1}}),
                          "crossing commute");
    }
  // S_sj S_rs S_rj = S_rs S_rj S_sj = S_rj S_sj S_rs, two relators per 3-subset.
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c) {
        Generator ab = S(a, b), ac = S(a, c), bc = S(b, c);
        detail::add_relator(
            p, Word::reduced({{bc, 1}, {ab, 1}, {ac, 1}, {bc, -1}, {ac, -1}, {ab, -1}}),
            "chain");
        detail::add_relator(
            p, Word::reduced({{ab, 1}, {ac, 1}, {bc, 1}, {ab, -1}, {bc, -1}, {ac, -1}}),
            "chain");
      }
  return p;
}

inline Presentation twist_presentation(int n) {
  if (n < 2) throw std::invalid_argument("twist presentation requires n >= 2");
  ConvexDisc disc(n);
  Presentation p;
  p.name = "twist";
  p.n = n;
  auto sets = detail::all_subsets(disc, 1);
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = i + 1; j < sets.size(); ++j)
      if (sets[i].disjoint_from(sets[j]) && non_crossing(sets[i], sets[j]))
        p.generators.push_back(Generator::twist(sets[i], sets[j]));
  std::sort(p.generators.begin(), p.generators.end());
  for (std::size_t i = 0; i < p.generators.size(); ++i)
    for (std::size_t j = i + 1; j < p.generators.size(); ++j) {
      const Generator& g = p.generators[i];
      const Generator& h = p.generators[j];
      PunctureSet u1 = g.first().united(g.second());
      PunctureSet u2 = h.first().united(h.second());
      bool nc = u1.disjoint_from(u2) && non_crossing(u1, u2);
      bool nest = nested({g.first(), g.second()}, {h.first(), h.second()});
      if (nc && nest) ++p.nested_noncrossing_overlap;
      if (nc)
        detail::add_relator(p, detail::commutator(g, h), "non-crossing commute");
      else if (nest)
        detail::add_relator(p, detail::commutator(g, h), "nested commute");
    }
  // T_{B,CD} = T_{B,C} T_{B,D} over all admissible (B,C,D): cut each subset's
  // cyclic order at three points and take all three rotations of the blocks.
  for (const auto& U : detail::all_subsets(disc, 3)) {
    const auto ord = canonical_admissible_order(U);
    const int m = static_cast<int>(ord.size());
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b)
        for (int c = b + 1; c < m; ++c) {
          auto arcs = detail::cut_arcs(disc, ord, a, b, c);
          for (int t = 0; t < 3; ++t) {
            const PunctureSet& B = arcs[static_cast<std::size_t>(t)];
            const PunctureSet& C = arcs[static_cast<std::size_t>((t + 1) % 3)];
            const PunctureSet& D = arcs[static_cast<std::size_t>((t + 2) % 3)];
            Word r = Word::letter(Generator::twist(B, C.united(D)), -1) *
                     Word::letter(Generator::twist(B, C)) * Word::letter(Generator::twist(B, D));
            detail::add_relator(p, r, "split");
          }
        }
  }
  return p;
}

inline Presentation swing_presentation(int n) {
  if (n < 2) throw std::invalid_argument("swing presentation requires n >= 2");
  ConvexDisc disc(n);
  Presentation p;
  p.name = "swing";
  p.n = n;
  auto sets = detail::all_subsets(disc, 1);
  for (const auto& B : sets) p.generators.push_back(Generator::swing(B));
  for (std::size_t i = 0; i < sets.size(); ++i)
    if (sets[i].size() == 1)
      detail::add_relator(p, Word::letter(p.generators[i]), "trivial swing");
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = i + 1; j < sets.size(); ++j)
      if (compatible(sets[i], sets[j]))
        detail::add_relator(p, detail::commutator(p.generators[i], p.generators[j]),
                            "compatible commute");
  // Lantern S_BCD S_B S_C S_D = S_CB S_BD S_DC, one relator per cyclic class of
  // admissible (B,C,D): the representative's first block holds the smallest label.
  for (const auto& U : detail::all_subsets(disc, 3)) {
    const auto ord = canonical_admissible_order(U);
    const int m = static_cast<int>(ord.size());
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b)
        for (int c = b + 1; c < m; ++c) {
          auto arcs = detail::cut_arcs(disc, ord, a, b, c);
          const PunctureSet& B = (a == 0) ? arcs[0] : arcs[2];
          const PunctureSet& C = (a == 0) ? arcs[1] : arcs[0];
          const PunctureSet& D = (a == 0) ? arcs[2] : arcs[1];
          Word r = Word::reduced({{Generator::swing(U), 1},
                                  {Generator::swing(B), 1},
                                  {Generator::swing(C), 1},
                                  {Generator::swing(D), 1},
                                  {Generator::swing(D.united(C)), -1},
                                  {Generator::swing(B.united(D)), -1},
                                  {Generator::swing(C.united(B)), -1}});
          detail::add_relator(p, r, "lantern");
        }
  }
  return p;
}

inline Presentation boundary_swing_presentation(int n) {
  Presentation p = swing_presentation(n);
  p.name = "boundary_swing";
  std::vector<Word> rels;
  std::vector<std::string> tags;
  for (std::size_t i = 0; i < p.relators.size(); ++i)
    if (p.relation_tags[i] != "trivial swing") {
      rels.push_back(p.relators[i]);
      tags.push_back(p.relation_tags[i]);
    }
  p.relators = std::move(rels);
  p.relation_tags = std::move(tags);
  return p;
}

inline const std::vector<std::string>& presentation_names() {
  static const std::vector<std::string> names = {
      "rotation", "bkl", "artin", "modified_artin", "twist", "swing", "boundary_swing"};
  return names;
}

inline Presentation presentation_by_name(const std::string& name, int n) {
  if (name == "rotation") return rotation_presentation(n);
  if (name == "bkl") return bkl_presentation(n);
  if (name == "artin") return artin_presentation(n);
  if (name == "modified_artin") return modified_artin_presentation(n);
  if (name == "twist") return twist_presentation(n);
  if (name == "swing") return swing_presentation(n);
  if (name == "boundary_swing") return boundary_swing_presentation(n);
  throw std::invalid_argument("unknown presentation: " + name);
}

struct RelatorCheck {
  bool pure = false;
  bool trivial = false;
  bool passed() const { return pure && trivial; }
};

struct VerifyReport {
  std::string name;
  int n = 0;
  std::vector<RelatorCheck> checks;     // canonical relator order
  std::vector<std::size_t> failures;    // indices of failed relators
  bool quotient_only = false;           // boundary case: checked modulo trivial swings
  int nested_noncrossing_overlap = 0;
  bool all_passed() const { return failures.empty(); }
};

// Checks every relator for purity and triviality under the oracle.  Workers pull
// relators from a shared counter; the engine is prewarmed first so the concurrent
// phase only reads the caches.
inline VerifyReport verify_presentation(const Presentation& p, int jobs = 1) {
  VerifyReport rep;
  rep.name = p.name;
  rep.n = p.n;
  rep.quotient_only = (p.name == "boundary_swing");
  rep.nested_noncrossing_overlap = p.nested_noncrossing_overlap;
  rep.checks.resize(p.relators.size());

  OracleEngine engine(p.n);
  engine.prewarm(p.generators);
  const OracleEngine& ce = engine;

  std::atomic<std::size_t> next{0};
  auto work = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= p.relators.size()) break;
      rep.checks[i].pure = ce.pure(p.relators[i]);
      rep.checks[i].trivial = ce.trivial(p.relators[i]);
    }
  };
  if (jobs < 1) jobs = 1;
  if (jobs == 1 || p.relators.size() < 2) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int t = 1; t < jobs; ++t) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();
  }
  for (std::size_t i = 0; i < rep.checks.size(); ++i)
    if (!rep.checks[i].passed()) rep.failures.push_back(i);
  return rep;
}

struct AbelianInvariants {
  int free_rank = 0;
  std::vector<BigInt> torsion;  // invariant factors > 1, in divisibility order
  friend bool operator==(const AbelianInvariants& a, const AbelianInvariants& b) {
    return a.free_rank == b.free_rank && a.torsion == b.torsion;
  }
  friend bool operator!=(const AbelianInvariants& a, const AbelianInvariants& b) {
    return !(a == b);
  }
};

inline AbelianInvariants abelianize(const Presentation& p) {
  std::map<Generator, std::size_t> index;
  for (std::size_t i = 0; i < p.generators.size(); ++i) index.emplace(p.generators[i], i);
  IntMatrix rows;
  for (const auto& r : p.relators) {
    std::vector<BigInt> row(p.generators.size(), 0);
    for (const auto& L : r.letters()) {
      auto it = index.find(L.gen);
      if (it == index.end()) throw std::logic_error("relator uses a non-generator");
      row[it->second] += L.sign;
    }
    bool zero = true;
    for (const auto& v : row)
      if (v != 0) {
        zero = false;
        break;
      }
    if (!zero) rows.push_back(std::move(row));  // zero rows carry no abelian content
  }
  SmithResult s = smith_normal_form(std::move(rows));
  AbelianInvariants out;
  out.free_rank = static_cast<int>(p.generators.size()) - s.rank;
  for (const auto& d : s.invariants)
    if (d > 1) out.torsion.push_back(d);
  return out;
}

inline nlohmann::ordered_json presentation_to_json(const Presentation& p) {
  nlohmann::ordered_json doc;
  doc["name"] = p.name;
  doc["n"] = p.n;
  auto gens = nlohmann::ordered_json::array();
  for (const auto& g : p.generators) gens.push_back(g.to_string());
  doc["generators"] = gens;
  auto rels = nlohmann::ordered_json::array();
  for (const auto& r : p.relators) rels.push_back(print_word(r));
  doc["relators"] = rels;
  doc["tags"] = p.relation_tags;
  return doc;
}

inline std::string presentation_to_text(const Presentation& p) {
  std::string out = p.name + " n=" + std::to_string(p.n) + "\n";
  out += "gens:\n";
  for (const auto& g : p.generators) out += "  " + g.to_string() + "\n";
  out += "rels:\n";
  for (const auto& r : p.relators) out += "  " + print_word(r) + "\n";
  return out;
}

}  // namespace pbraid
