#pragma once

#include "pbraid/expand.hpp"

#include <cstdlib>
#include <map>
#include <numeric>
#include <utility>

namespace pbraid {

// A word in a free group of rank n: letter +k is the k-th basis element, -k its inverse.
using FreeWord = std::vector<int>;

inline void push_reduced(FreeWord& out, int letter) {
  if (!out.empty() && out.back() == -letter)
    out.pop_back();
  else
    out.push_back(letter);
}

inline FreeWord reduce_free(const FreeWord& w) {
  FreeWord out;
  for (int x : w) {
    if (x == 0) throw std::invalid_argument("free letter 0 is not allowed");
    push_reduced(out, x);
  }
  return out;
}

inline FreeWord inverse_free(const FreeWord& w) {
  FreeWord out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
  return out;
}

// Substitute each basis letter by its image, reducing on the fly.
inline FreeWord apply_images(const std::vector<FreeWord>& images, const FreeWord& w) {
  FreeWord out;
  for (int x : w) {
    const FreeWord& im = images[static_cast<std::size_t>(std::abs(x)) - 1];
    if (x > 0)
      for (int y : im) push_reduced(out, y);
    else
      for (auto it = im.rbegin(); it != im.rend(); ++it) push_reduced(out, -*it);
  }
  return out;
}

// An automorphism of the free group, with its inverse stored as a witness.
struct FreeAutomorphism {
  int rank = 0;
  std::vector<FreeWord> images;
  std::vector<FreeWord> inverse_images;

  static FreeAutomorphism identity(int rank) {
    FreeAutomorphism a;
    a.rank = rank;
    a.images.reserve(static_cast<std::size_t>(rank));
    a.inverse_images.reserve(static_cast<std::size_t>(rank));
    for (int k = 1; k <= rank; ++k) {
      a.images.push_back({k});
      a.inverse_images.push_back({k});
    }
    return a;
  }

  bool is_identity() const {
    for (int k = 1; k <= rank; ++k) {
      const FreeWord& im = images[static_cast<std::size_t>(k) - 1];
      if (im.size() != 1 || im[0] != k) return false;
    }
    return true;
  }

  FreeAutomorphism inverted() const {
    FreeAutomorphism a;
    a.rank = rank;
    a.images = inverse_images;
    a.inverse_images = images;
    return a;
  }

  friend bool operator==(const FreeAutomorphism& x, const FreeAutomorphism& y) {
    return x.rank == y.rank && x.images == y.images;
  }
  friend bool operator!=(const FreeAutomorphism& x, const FreeAutomorphism& y) {
    return !(x == y);
  }
};

// Composite that performs `first`, then `then` (word order).
inline FreeAutomorphism compose_lr(const FreeAutomorphism& first, const FreeAutomorphism& then) {
  if (first.rank != then.rank) throw std::invalid_argument("rank mismatch in composition");
  FreeAutomorphism out;
  out.rank = first.rank;
  out.images.reserve(static_cast<std::size_t>(out.rank));
  out.inverse_images.reserve(static_cast<std::size_t>(out.rank));
  for (int k = 0; k < out.rank; ++k)
    out.images.push_back(apply_images(then.images, first.images[static_cast<std::size_t>(k)]));
  for (int k = 0; k < out.rank; ++k)
    out.inverse_images.push_back(
        apply_images(first.inverse_images, then.inverse_images[static_cast<std::size_t>(k)]));
  return out;
}

// The adjacent band generator on punctures (i, i+1) acts by
// x_i -> x_i x_{i+1} x_i^-1,  x_{i+1} -> x_i,  all other basis elements fixed.
inline FreeAutomorphism artin_action(int i, int n) {
  if (i < 1 || i + 1 > n) throw std::invalid_argument("adjacent band index out of range");
  FreeAutomorphism a = FreeAutomorphism::identity(n);
  a.images[static_cast<std::size_t>(i) - 1] = {i, i + 1, -i};
  a.images[static_cast<std::size_t>(i)] = {i};
  a.inverse_images[static_cast<std::size_t>(i) - 1] = {i + 1};
  a.inverse_images[static_cast<std::size_t>(i)] = {-(i + 1), i, i + 1};
  return a;
}

inline FreeAutomorphism action_of(const Word& w, int n) {
  FreeAutomorphism cur = FreeAutomorphism::identity(n);
  const Word expanded = expand_full(w);
  for (const auto& L : expanded.letters()) {
    if (L.gen.n() != n) throw std::invalid_argument("word lives on a different disc");
    FreeAutomorphism g = artin_action(L.gen.band_low(), n);
    cur = compose_lr(cur, L.sign == 1 ? g : g.inverted());
  }
  return cur;
}

inline bool equal(const Word& w1, const Word& w2, int n) {
  return action_of(w1, n) == action_of(w2, n);
}

class Permutation {
 public:
  explicit Permutation(int n) : map_(static_cast<std::size_t>(n)) {
    if (n < 1) throw std::invalid_argument("permutation size must be positive");
    std::iota(map_.begin(), map_.end(), 1);
  }

  static Permutation transposition(int n, int i, int j) {
    Permutation p(n);
    p.check(i);
    p.check(j);
    std::swap(p.map_[static_cast<std::size_t>(i) - 1], p.map_[static_cast<std::size_t>(j) - 1]);
    return p;
  }

  int size() const { return static_cast<int>(map_.size()); }

  int operator()(int k) const {
    check(k);
    return map_[static_cast<std::size_t>(k) - 1];
  }

  // Apply this permutation first, then `next`.
  Permutation then(const Permutation& next) const {
    if (size() != next.size()) throw std::invalid_argument("permutation size mismatch");
    Permutation r(size());
    for (int k = 1; k <= size(); ++k)
      r.map_[static_cast<std::size_t>(k) - 1] = next((*this)(k));
    return r;
  }

  Permutation inverse() const {
    Permutation r(size());
    for (int k = 1; k <= size(); ++k) r.map_[static_cast<std::size_t>((*this)(k)) - 1] = k;
    return r;
  }

  bool is_identity() const {
    for (int k = 1; k <= size(); ++k)
      if ((*this)(k) != k) return false;
    return true;
  }

  friend bool operator==(const Permutation& a, const Permutation& b) { return a.map_ == b.map_; }
  friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }

 private:
  void check(int k) const {
    if (k < 1 || k > size()) throw std::invalid_argument("permutation point out of range");
  }
  std::vector<int> map_;
};

// Image in the symmetric group: each adjacent band maps to the transposition of its
// punctures.  Deliberately independent of the free-group action, for cross-checking.
inline Permutation permutation_of(const Word& w, int n) {
  Permutation p(n);
  const Word expanded = expand_full(w);
  for (const auto& L : expanded.letters()) {
    if (L.gen.n() != n) throw std::invalid_argument("word lives on a different disc");
    p = p.then(Permutation::transposition(n, L.gen.band_low(), L.gen.band_high()));
  }
  return p;
}

inline bool is_pure(const Word& w, int n) { return permutation_of(w, n).is_identity(); }

// Memoizing evaluator.  Per-generator actions are computed once, one expansion level
// at a time (twist over swings, swing over rotations, rotation over bands), so large
// alphabets stay cheap.  prewarm() everything before concurrent use: the const
// methods never mutate the caches, falling back to local computation on a miss.
class OracleEngine {
 public:
  explicit OracleEngine(int n) : n_(n) {}

  int n() const { return n_; }

  void prewarm(const std::vector<Generator>& gens) {
    for (const auto& g : gens) {
      action(g);
      perm(g);
    }
  }

  const FreeAutomorphism& action(const Generator& g) {
    auto it = acts_.find(g);
    if (it != acts_.end()) return it->second;
    FreeAutomorphism a = compute_action(g);
    return acts_.emplace(g, std::move(a)).first->second;
  }

  const Permutation& perm(const Generator& g) {
    auto it = perms_.find(g);
    if (it != perms_.end()) return it->second;
    Permutation p = compute_perm(g);
    return perms_.emplace(g, std::move(p)).first->second;
  }

  FreeAutomorphism evaluate(const Word& w) {
    for (const auto& L : w.letters()) action(check_letter(L));
    return fold_action(w);
  }

  FreeAutomorphism evaluate(const Word& w) const {
    for (const auto& L : w.letters()) check_letter(L);
    return fold_action(w);
  }

  Permutation permutation(const Word& w) {
    for (const auto& L : w.letters()) perm(check_letter(L));
    return fold_perm(w);
  }

  Permutation permutation(const Word& w) const {
    for (const auto& L : w.letters()) check_letter(L);
    return fold_perm(w);
  }

  // Triviality via a midpoint split: w = p q is trivial exactly when the actions of
  // p and q^-1 agree; this avoids composing past the word's widest point.
  bool trivial(const Word& w) const {
    const auto& ls = w.letters();
    const std::size_t h = ls.size() / 2;
    std::vector<SignedGen> front(ls.begin(), ls.begin() + static_cast<std::ptrdiff_t>(h));
    std::vector<SignedGen> backinv;
    backinv.reserve(ls.size() - h);
    for (std::size_t i = ls.size(); i > h; --i) backinv.push_back({ls[i - 1].gen, -ls[i - 1].sign});
    return evaluate(Word::reduced(front)) == evaluate(Word::reduced(backinv));
  }
  bool trivial(const Word& w) {
    for (const auto& L : w.letters()) action(check_letter(L));
    return std::as_const(*this).trivial(w);
  }

  bool equivalent(const Word& a, const Word& b) const { return evaluate(a) == evaluate(b); }
  bool equivalent(const Word& a, const Word& b) { return evaluate(a) == evaluate(b); }

  bool pure(const Word& w) const { return permutation(w).is_identity(); }
  bool pure(const Word& w) { return permutation(w).is_identity(); }

 private:
  const Generator& check_letter(const SignedGen& L) const {
    if (L.gen.n() != n_) throw std::invalid_argument("word lives on a different disc");
    return L.gen;
  }

  FreeAutomorphism fold_action(const Word& w) const {
    FreeAutomorphism cur = FreeAutomorphism::identity(n_);
    for (const auto& L : w.letters()) {
      auto it = acts_.find(L.gen);
      FreeAutomorphism local = (it == acts_.end()) ? compute_action(L.gen) : FreeAutomorphism();
      const FreeAutomorphism& g = (it == acts_.end()) ? local : it->second;
      cur = compose_lr(cur, L.sign == 1 ? g : g.inverted());
    }
    return cur;
  }

  FreeAutomorphism compute_action(const Generator& g) const {
    switch (g.kind()) {
      case GenKind::band: {
        FreeAutomorphism cur = FreeAutomorphism::identity(n_);
        const Word artin = band_to_artin(g.band_low(), g.band_high(), n_);
        for (const auto& L : artin.letters()) {
          FreeAutomorphism a = artin_action(L.gen.band_low(), n_);
          cur = compose_lr(cur, L.sign == 1 ? a : a.inverted());
        }
        return cur;
      }
      case GenKind::rotation:
        return fold_action(rotation_to_bands(g.set()));
      case GenKind::swing:
        return fold_action(swing_to_rotations(g.set()));
      case GenKind::twist:
        return fold_action(twist_to_swings(g.first(), g.second()));
    }
    throw std::logic_error("unknown generator kind");
  }

  Permutation fold_perm(const Word& w) const {
    Permutation cur(n_);
    for (const auto& L : w.letters()) {
      auto it = perms_.find(L.gen);
      Permutation g = (it == perms_.end()) ? compute_perm(L.gen) : it->second;
      cur = cur.then(L.sign == 1 ? g : g.inverse());
    }
    return cur;
  }

  Permutation compute_perm(const Generator& g) const {
    switch (g.kind()) {
      case GenKind::band: {
        Permutation cur(n_);
        const Word artin = band_to_artin(g.band_low(), g.band_high(), n_);
        for (const auto& L : artin.letters())
          cur = cur.then(Permutation::transposition(n_, L.gen.band_low(), L.gen.band_high()));
        return cur;
      }
      case GenKind::rotation:
        return fold_perm(rotation_to_bands(g.set()));
      case GenKind::swing:
        return fold_perm(swing_to_rotations(g.set()));
      case GenKind::twist:
        return fold_perm(twist_to_swings(g.first(), g.second()));
    }
    throw std::logic_error("unknown generator kind");
  }

  int n_;
  std::map<Generator, FreeAutomorphism> acts_;
  std::map<Generator, Permutation> perms_;
};

}  // namespace pbraid
