#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pbraid {

// Punctures sit on a circle, labeled 1..n clockwise; the successor of n wraps to 1.
class ConvexDisc {
 public:
  explicit ConvexDisc(int n) : n_(n) {
    if (n < 1 || n > 64)
      throw std::invalid_argument("puncture count must be between 1 and 64");
  }

  int size() const { return n_; }

  int successor(int label) const {
    check_label(label);
    return label % n_ + 1;
  }

  void check_label(int label) const {
    if (label < 1 || label > n_)
      throw std::invalid_argument("label " + std::to_string(label) +
                                  " out of range 1.." + std::to_string(n_));
  }

  friend bool operator==(const ConvexDisc& a, const ConvexDisc& b) { return a.n_ == b.n_; }
  friend bool operator!=(const ConvexDisc& a, const ConvexDisc& b) { return a.n_ != b.n_; }

 private:
  int n_;
};

// A subset of the disc's labels, stored as a bitmask; members() is always ascending,
// which coincides with clockwise order read from the minimum label.
class PunctureSet {
 public:
  PunctureSet(const ConvexDisc& disc, const std::vector<int>& labels)
      : n_(disc.size()), mask_(0) {
    for (int x : labels) {
      disc.check_label(x);
      std::uint64_t bit = std::uint64_t{1} << (x - 1);
      if (mask_ & bit) throw std::invalid_argument("duplicate label " + std::to_string(x));
      mask_ |= bit;
    }
  }

  static PunctureSet from_mask(const ConvexDisc& disc, std::uint64_t mask) {
    PunctureSet s(disc, {});
    if (disc.size() < 64 && (mask >> disc.size()) != 0)
      throw std::invalid_argument("mask has bits outside the disc");
    s.mask_ = mask;
    return s;
  }

  static PunctureSet full(const ConvexDisc& disc) {
    std::uint64_t all = (disc.size() == 64) ? ~std::uint64_t{0}
                                            : (std::uint64_t{1} << disc.size()) - 1;
    return from_mask(disc, all);
  }

  ConvexDisc disc() const { return ConvexDisc(n_); }
  int n() const { return n_; }
  int size() const { return std::popcount(mask_); }
  bool empty() const { return mask_ == 0; }
  std::uint64_t mask() const { return mask_; }

  bool contains(int label) const {
    return label >= 1 && label <= n_ && ((mask_ >> (label - 1)) & 1) != 0;
  }

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (int k = 1; k <= n_; ++k)
      if (contains(k)) out.push_back(k);
    return out;
  }

  PunctureSet united(const PunctureSet& o) const {
    require_same_disc(o);
    PunctureSet r = *this;
    r.mask_ |= o.mask_;
    return r;
  }

  PunctureSet minus(const PunctureSet& o) const {
    require_same_disc(o);
    PunctureSet r = *this;
    r.mask_ &= ~o.mask_;
    return r;
  }

  PunctureSet complement() const { return full(disc()).minus(*this); }

  bool subset_of(const PunctureSet& o) const {
    require_same_disc(o);
    return (mask_ & ~o.mask_) == 0;
  }

  bool disjoint_from(const PunctureSet& o) const {
    require_same_disc(o);
    return (mask_ & o.mask_) == 0;
  }

  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for (int k : members()) {
      if (!first) out += ",";
      out += std::to_string(k);
      first = false;
    }
    return out + "}";
  }

  void require_same_disc(const PunctureSet& o) const {
    if (n_ != o.n_) throw std::invalid_argument("puncture sets live on different discs");
  }

  friend bool operator==(const PunctureSet& a, const PunctureSet& b) {
    return a.n_ == b.n_ && a.mask_ == b.mask_;
  }
  friend bool operator!=(const PunctureSet& a, const PunctureSet& b) { return !(a == b); }

  // Total order: disc size first, then lexicographic on the ascending member lists.
  friend bool operator<(const PunctureSet& a, const PunctureSet& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    std::uint64_t d = a.mask_ ^ b.mask_;
    if (d == 0) return false;
    int low = std::countr_zero(d);  // masks agree strictly below this position
    if ((a.mask_ >> low) & 1) return (b.mask_ >> low) != 0;  // b continues later, or a has the extra tail
    return (a.mask_ >> low) == 0;                            // a is a proper prefix of b
  }

 private:
  int n_;
  std::uint64_t mask_;
};

inline void require_nonempty(const PunctureSet& s, const char* what) {
  if (s.empty()) throw std::invalid_argument(std::string(what) + " must be nonempty");
}

// Two disjoint sets cross when their labels interleave around the circle:
// reading the union clockwise, the tag sequence changes owner more than twice.
inline bool crossing(const PunctureSet& B, const PunctureSet& C) {
  B.require_same_disc(C);
  require_nonempty(B, "crossing: first set");
  require_nonempty(C, "crossing: second set");
  if (!B.disjoint_from(C)) throw std::invalid_argument("crossing requires disjoint sets");
  std::vector<int> tags;
  for (int k = 1; k <= B.n(); ++k) {
    if (B.contains(k)) tags.push_back(0);
    else if (C.contains(k)) tags.push_back(1);
  }
  const std::size_t m = tags.size();
  int changes = 0;
  for (std::size_t i = 0; i < m; ++i)
    if (tags[i] != tags[(i + 1) % m]) ++changes;
  return changes > 2;
}

inline bool non_crossing(const PunctureSet& B, const PunctureSet& C) { return !crossing(B, C); }

inline bool non_crossing_family(const std::vector<PunctureSet>& sets) {
  for (std::size_t i = 0; i < sets.size(); ++i) {
    require_nonempty(sets[i], "family member");
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      sets[i].require_same_disc(sets[j]);
      if (!sets[i].disjoint_from(sets[j]))
        throw std::invalid_argument("family members must be pairwise disjoint");
    }
  }
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = i + 1; j < sets.size(); ++j)
      if (crossing(sets[i], sets[j])) return false;
  return true;
}

// An ordered sequence of disjoint blocks is admissible when, reading the circle
// clockwise restricted to the union, the blocks appear as contiguous runs in the
// given cyclic order.
inline bool admissible(const std::vector<PunctureSet>& blocks) {
  if (blocks.empty()) throw std::invalid_argument("admissible: empty sequence");
  const int k = static_cast<int>(blocks.size());
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    require_nonempty(blocks[i], "admissible block");
    for (std::size_t j = i + 1; j < blocks.size(); ++j) {
      blocks[i].require_same_disc(blocks[j]);
      if (!blocks[i].disjoint_from(blocks[j]))
        throw std::invalid_argument("admissible blocks must be pairwise disjoint");
    }
  }
  const int n = blocks[0].n();
  std::vector<int> seq;
  for (int label = 1; label <= n; ++label)
    for (int b = 0; b < k; ++b)
      if (blocks[b].contains(label)) {
        seq.push_back(b);
        break;
      }
  std::vector<int> comp;
  for (int b : seq)
    if (comp.empty() || comp.back() != b) comp.push_back(b);
  if (comp.size() > 1 && comp.front() == comp.back()) comp.pop_back();
  if (static_cast<int>(comp.size()) != k) return false;
  int pos0 = -1;
  for (int i = 0; i < k; ++i)
    if (comp[i] == 0) pos0 = i;
  for (int t = 0; t < k; ++t)
    if (comp[(pos0 + t) % k] != t) return false;
  return true;
}

// Pairs (B,C) and (D,E) of non-crossing disjoint sets are nested when the union of
// one pair fits inside a single member of the other.
inline bool nested(const std::pair<PunctureSet, PunctureSet>& p1,
                   const std::pair<PunctureSet, PunctureSet>& p2) {
  if (crossing(p1.first, p1.second))
    throw std::invalid_argument("nested: first pair members must be non-crossing");
  if (crossing(p2.first, p2.second))
    throw std::invalid_argument("nested: second pair members must be non-crossing");
  p1.first.require_same_disc(p2.first);
  PunctureSet u1 = p1.first.united(p1.second);
  PunctureSet u2 = p2.first.united(p2.second);
  return u1.subset_of(p2.first) || u1.subset_of(p2.second) ||
         u2.subset_of(p1.first) || u2.subset_of(p1.second);
}

// Compatible sets: related by containment, or disjoint and non-crossing.
inline bool compatible(const PunctureSet& B, const PunctureSet& C) {
  B.require_same_disc(C);
  require_nonempty(B, "compatible: first set");
  require_nonempty(C, "compatible: second set");
  if (B.subset_of(C) || C.subset_of(B)) return true;
  return B.disjoint_from(C) && non_crossing(B, C);
}

// Clockwise reading of B starting at its minimum label; with labels 1..n clockwise
// this is exactly the ascending member list.
inline std::vector<int> canonical_admissible_order(const PunctureSet& B) {
  require_nonempty(B, "canonical_admissible_order argument");
  return B.members();
}

// Labels strictly between `from` and `to`, walking clockwise; may be empty.
inline PunctureSet clockwise_arc(const ConvexDisc& disc, int from, int to) {
  disc.check_label(from);
  disc.check_label(to);
  if (from == to) throw std::invalid_argument("clockwise_arc endpoints must differ");
  std::vector<int> labels;
  for (int k = disc.successor(from); k != to; k = disc.successor(k)) labels.push_back(k);
  return PunctureSet(disc, labels);
}

}  // namespace pbraid
