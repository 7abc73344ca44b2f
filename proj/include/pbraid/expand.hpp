#pragma once

#include "pbraid/words.hpp"

namespace pbraid {

// Band generator as a word in adjacent bands: the conjugate
// (s_{j-1} ... s_{i+1}) s_i (s_{i+1}^-1 ... s_{j-1}^-1); s_i itself when j = i+1.
inline Word band_to_artin(int i, int j, int n) {
  ConvexDisc disc(n);
  disc.check_label(i);
  disc.check_label(j);
  if (i >= j) throw std::invalid_argument("band_to_artin requires i < j");
  std::vector<SignedGen> raw;
  for (int k = j - 1; k > i; --k) raw.push_back({Generator::band(disc, k, k + 1), 1});
  raw.push_back({Generator::band(disc, i, i + 1), 1});
  for (int k = i + 1; k < j; ++k) raw.push_back({Generator::band(disc, k, k + 1), -1});
  return Word::reduced(raw);
}

// R_B = R_{b1 b2} R_{b1 b3} ... R_{b1 bk} along the canonical reading of B.
inline Word rotation_to_bands(const PunctureSet& B) {
  if (B.size() < 2) throw std::invalid_argument("rotation_to_bands needs at least two punctures");
  auto ord = canonical_admissible_order(B);
  std::vector<SignedGen> raw;
  for (std::size_t t = 1; t < ord.size(); ++t)
    raw.push_back({Generator::band(B.disc(), ord[0], ord[t]), 1});
  return Word::reduced(raw);
}

// S_B = (R_B)^{|B|}; the swing of a single puncture is the trivial motion.
inline Word swing_to_rotations(const PunctureSet& B) {
  require_nonempty(B, "swing_to_rotations argument");
  if (B.size() == 1) return Word();
  return Word::letter(Generator::rotation(B)).pow(B.size());
}

// T_{B,C} = S_B^-1 S_C^-1 S_{BC} in argument order; trivial singleton swings drop.
inline Word twist_to_swings(const PunctureSet& B, const PunctureSet& C) {
  if (crossing(B, C)) throw std::invalid_argument("twist components must be non-crossing");
  std::vector<SignedGen> raw;
  if (B.size() > 1) raw.push_back({Generator::swing(B), -1});
  if (C.size() > 1) raw.push_back({Generator::swing(C), -1});
  raw.push_back({Generator::swing(B.united(C)), 1});
  return Word::reduced(raw);
}

inline Word expand_full(const Word& w);

inline Word expand_generator_full(const Generator& g) {
  switch (g.kind()) {
    case GenKind::band:
      return band_to_artin(g.band_low(), g.band_high(), g.n());
    case GenKind::rotation:
      return expand_full(rotation_to_bands(g.set()));
    case GenKind::swing:
      return expand_full(swing_to_rotations(g.set()));
    case GenKind::twist:
      return expand_full(twist_to_swings(g.first(), g.second()));
  }
  throw std::logic_error("unknown generator kind");
}

// Fully expanded, freely reduced word over adjacent band generators.
inline Word expand_full(const Word& w) {
  Word out;
  for (const auto& L : w.letters()) {
    Word e = expand_generator_full(L.gen);
    out = out * (L.sign == 1 ? e : e.inverse());
  }
  return out;
}

}  // namespace pbraid
