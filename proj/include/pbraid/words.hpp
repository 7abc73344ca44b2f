#pragma once

#include "pbraid/convex.hpp"

#include <cstddef>
#include <cctype>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pbraid {

enum class GenKind { band, rotation, swing, twist };

// One generator of the mixed alphabet.  Construction canonicalizes:
// a rotation on two punctures IS the band generator on them, and twist
// components are stored with the lexicographically smaller set first.
class Generator {
 public:
  static Generator band(const ConvexDisc& disc, int i, int j) {
    disc.check_label(i);
    disc.check_label(j);
    if (i == j) throw std::invalid_argument("band generator needs two distinct punctures");
    return Generator(GenKind::band, PunctureSet(disc, {i, j}), PunctureSet(disc, {}));
  }

  static Generator rotation(const PunctureSet& B) {
    if (B.size() < 2) throw std::invalid_argument("rotation needs at least two punctures");
    if (B.size() == 2) {
      auto m = B.members();
      return band(B.disc(), m[0], m[1]);
    }
    return Generator(GenKind::rotation, B, PunctureSet(B.disc(), {}));
  }

  static Generator swing(const PunctureSet& B) {
    require_nonempty(B, "swing set");
    return Generator(GenKind::swing, B, PunctureSet(B.disc(), {}));
  }

  static Generator twist(const PunctureSet& B, const PunctureSet& C) {
    if (crossing(B, C)) throw std::invalid_argument("twist components must be non-crossing");
    if (C < B) return Generator(GenKind::twist, C, B);
    return Generator(GenKind::twist, B, C);
  }

  GenKind kind() const { return kind_; }
  int n() const { return a_.n(); }

  // Band, rotation and swing generators are indexed by one set.
  const PunctureSet& set() const { return a_; }

  // Twist components in canonical order.
  const PunctureSet& first() const { return a_; }
  const PunctureSet& second() const {
    if (kind_ != GenKind::twist) throw std::logic_error("second() is only for twists");
    return b_;
  }

  int band_low() const { return a_.members()[0]; }
  int band_high() const { return a_.members()[1]; }

  std::string to_string() const {
    switch (kind_) {
      case GenKind::band:
      case GenKind::rotation:
        return "R" + a_.to_string();
      case GenKind::swing:
        return "S" + a_.to_string();
      case GenKind::twist:
        return "T" + a_.to_string() + "|" + b_.to_string();
    }
    return "";
  }

  friend bool operator==(const Generator& x, const Generator& y) {
    return x.kind_ == y.kind_ && x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const Generator& x, const Generator& y) { return !(x == y); }
  friend bool operator<(const Generator& x, const Generator& y) {
    if (x.n() != y.n()) return x.n() < y.n();
    if (x.kind_ != y.kind_) return static_cast<int>(x.kind_) < static_cast<int>(y.kind_);
    if (x.a_ != y.a_) return x.a_ < y.a_;
    return x.b_ < y.b_;
  }

 private:
  Generator(GenKind kind, PunctureSet a, PunctureSet b) : kind_(kind), a_(a), b_(b) {}
  GenKind kind_;
  PunctureSet a_;
  PunctureSet b_;
};

struct SignedGen {
  Generator gen;
  int sign;  // +1 or -1
  friend bool operator==(const SignedGen& x, const SignedGen& y) {
    return x.sign == y.sign && x.gen == y.gen;
  }
  friend bool operator!=(const SignedGen& x, const SignedGen& y) { return !(x == y); }
};

// A freely reduced sequence of signed generators; composition reads left to right
// (the left factor is the motion performed first).
class Word {
 public:
  Word() = default;

  static Word reduced(const std::vector<SignedGen>& raw) {
    Word w;
    for (const auto& L : raw) w.push(L);
    return w;
  }

  static Word letter(const Generator& g, int sign = 1) {
    Word w;
    w.push({g, sign});
    return w;
  }

  const std::vector<SignedGen>& letters() const { return ls_; }
  bool empty() const { return ls_.empty(); }
  std::size_t size() const { return ls_.size(); }

  Word inverse() const {
    Word w;
    for (auto it = ls_.rbegin(); it != ls_.rend(); ++it) w.push({it->gen, -it->sign});
    return w;
  }

  Word pow(int k) const {
    if (k < 0) return inverse().pow(-k);
    Word out;
    for (int t = 0; t < k; ++t) out = out * (*this);
    return out;
  }

  friend Word operator*(const Word& a, const Word& b) {
    Word w = a;
    for (const auto& L : b.ls_) w.push(L);
    return w;
  }

  friend bool operator==(const Word& a, const Word& b) { return a.ls_ == b.ls_; }
  friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }

 private:
  void push(const SignedGen& L) {
    if (L.sign != 1 && L.sign != -1) throw std::invalid_argument("letter sign must be +1 or -1");
    if (!ls_.empty() && ls_.back().gen == L.gen && ls_.back().sign == -L.sign)
      ls_.pop_back();
    else
      ls_.push_back(L);
  }
  std::vector<SignedGen> ls_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t position)
      : std::runtime_error(msg + " (at position " + std::to_string(position) + ")"),
        pos_(position) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

namespace detail {

struct WordParser {
  const std::string& text;
  const ConvexDisc& disc;
  std::size_t pos = 0;

  bool at_end() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }

  void skip_separators() {
    while (!at_end() && (std::isspace(static_cast<unsigned char>(peek())) || peek() == '*')) ++pos;
  }

  int parse_int() {
    std::size_t start = pos;
    bool negative = false;
    if (!at_end() && peek() == '-') {
      negative = true;
      ++pos;
    }
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
      throw ParseError("expected an integer", pos);
    long value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (peek() - '0');
      if (value > 1000000) throw ParseError("number too large", start);
      ++pos;
    }
    return static_cast<int>(negative ? -value : value);
  }

  PunctureSet parse_braces() {
    std::size_t start = pos;
    if (at_end() || peek() != '{') throw ParseError("expected '{'", pos);
    ++pos;
    std::vector<int> labels;
    while (true) {
      labels.push_back(parse_int());
      if (at_end()) throw ParseError("unterminated set", start);
      if (peek() == ',') {
        ++pos;
        continue;
      }
      if (peek() == '}') {
        ++pos;
        break;
      }
      throw ParseError("expected ',' or '}'", pos);
    }
    try {
      return PunctureSet(disc, labels);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), start);
    }
  }

  void parse_atom(std::vector<SignedGen>& out) {
    std::size_t start = pos;
    char c = peek();
    std::optional<Generator> made;
    try {
      if (c == 'R') {
        ++pos;
        made = Generator::rotation(parse_braces());
      } else if (c == 'S') {
        ++pos;
        made = Generator::swing(parse_braces());
      } else if (c == 'T') {
        ++pos;
        PunctureSet B = parse_braces();
        if (at_end() || peek() != '|') throw ParseError("expected '|' between twist components", pos);
        ++pos;
        made = Generator::twist(B, parse_braces());
      } else if (c == 's') {
        ++pos;
        int k = parse_int();
        made = Generator::band(disc, k, k + 1);
      } else {
        throw ParseError("expected a generator atom (R{...}, S{...}, T{...}|{...} or s<k>)", pos);
      }
    } catch (const ParseError&) {
      throw;
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), start);
    }
    int exponent = 1;
    if (!at_end() && peek() == '^') {
      ++pos;
      exponent = parse_int();
    }
    int sign = exponent >= 0 ? 1 : -1;
    for (int t = 0; t < (exponent >= 0 ? exponent : -exponent); ++t) out.push_back({*made, sign});
  }
};

}  // namespace detail

inline Word parse_word(const std::string& text, const ConvexDisc& disc) {
  detail::WordParser p{text, disc};
  std::vector<SignedGen> raw;
  p.skip_separators();
  while (!p.at_end()) {
    p.parse_atom(raw);
    p.skip_separators();
  }
  return Word::reduced(raw);
}

inline PunctureSet parse_set(const std::string& text, const ConvexDisc& disc) {
  detail::WordParser p{text, disc};
  p.skip_separators();
  PunctureSet s = p.parse_braces();
  p.skip_separators();
  if (!p.at_end()) throw ParseError("trailing characters after set", p.pos);
  return s;
}

// Canonical text form; runs of the same signed generator collapse to ^k.
// The empty word prints as the empty string.  With artin_shorthand, a band on
// neighbouring punctures {i,i+1} prints as s<i>.
inline std::string print_word(const Word& w, bool artin_shorthand = false) {
  std::string out;
  const auto& ls = w.letters();
  std::size_t i = 0;
  while (i < ls.size()) {
    std::size_t j = i;
    while (j < ls.size() && ls[j].gen == ls[i].gen && ls[j].sign == ls[i].sign) ++j;
    int e = static_cast<int>(j - i) * ls[i].sign;
    if (!out.empty()) out += " ";
    const Generator& g = ls[i].gen;
    if (artin_shorthand && g.kind() == GenKind::band && g.band_high() == g.band_low() + 1)
      out += "s" + std::to_string(g.band_low());
    else
      out += g.to_string();
    if (e != 1) out += "^" + std::to_string(e);
    i = j;
  }
  return out;
}

}  // namespace pbraid
