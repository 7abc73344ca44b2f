#pragma once

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "pbraid/convex.hpp"

namespace pbraid {

namespace detail {

inline std::string fmt2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return std::string(buf);
}

}  // namespace detail

// Renders the disc as SVG: n points equally spaced clockwise on a circle,
// labelled 1..n starting at the top, each requested set drawn as the outline of
// its convex hull.  The output is a pure function of the inputs, byte for byte.
inline std::string emit_diagram(int n, const std::vector<PunctureSet>& sets) {
  ConvexDisc disc(n);
  for (const auto& s : sets) {
    if (s.n() != n) throw std::invalid_argument("set does not live on the requested disc");
    require_nonempty(s, "diagram set");
  }
  const double cx = 200.0, cy = 200.0, rim = 150.0, label_r = 172.0;
  const double pi = 3.14159265358979323846;
  auto angle = [&](int k) { return (-90.0 + (k - 1) * 360.0 / n) * pi / 180.0; };
  auto px = [&](int k, double r) { return cx + r * std::cos(angle(k)); };
  auto py = [&](int k, double r) { return cy + r * std::sin(angle(k)); };

  static const char* palette[] = {"#c0392b", "#2980b9", "#27ae60",
                                  "#8e44ad", "#d35400", "#16a085"};
  const std::size_t ncolors = sizeof(palette) / sizeof(palette[0]);

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 400 400\">\n";
  out += "<circle cx=\"200.00\" cy=\"200.00\" r=\"150.00\" fill=\"none\" stroke=\"#888888\" "
         "stroke-width=\"1\"/>\n";
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const auto members = sets[i].members();
    const char* color = palette[i % ncolors];
    if (members.size() == 1) {
      out += "<circle cx=\"" + detail::fmt2(px(members[0], rim)) + "\" cy=\"" +
             detail::fmt2(py(members[0], rim)) + "\" r=\"12.00\" fill=\"" + color +
             "\" fill-opacity=\"0.15\" stroke=\"" + color + "\" stroke-width=\"2\"/>\n";
    } else if (members.size() == 2) {
      out += "<line x1=\"" + detail::fmt2(px(members[0], rim)) + "\" y1=\"" +
             detail::fmt2(py(members[0], rim)) + "\" x2=\"" + detail::fmt2(px(members[1], rim)) +
             "\" y2=\"" + detail::fmt2(py(members[1], rim)) + "\" stroke=\"" + color +
             "\" stroke-width=\"2\"/>\n";
    } else {
      out += "<polygon points=\"";
      for (std::size_t k = 0; k < members.size(); ++k) {
        if (k) out += " ";
        out += detail::fmt2(px(members[k], rim)) + "," + detail::fmt2(py(members[k], rim));
      }
      out += "\" fill=\"" + std::string(color) + "\" fill-opacity=\"0.15\" stroke=\"" + color +
             "\" stroke-width=\"2\"/>\n";
    }
  }
  for (int k = 1; k <= n; ++k) {
    out += "<circle cx=\"" + detail::fmt2(px(k, rim)) + "\" cy=\"" + detail::fmt2(py(k, rim)) +
           "\" r=\"4.00\" fill=\"#222222\"/>\n";
    out += "<text x=\"" + detail::fmt2(px(k, label_r)) + "\" y=\"" +
           detail::fmt2(py(k, label_r)) +
           "\" font-size=\"14\" font-family=\"sans-serif\" text-anchor=\"middle\" "
           "dominant-baseline=\"central\" fill=\"#222222\">" +
           std::to_string(k) + "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace pbraid
