#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <vector>

namespace pbraid {

using BigInt = boost::multiprecision::cpp_int;
using IntMatrix = std::vector<std::vector<BigInt>>;

struct SmithResult {
  std::vector<BigInt> invariants;  // nonzero diagonal entries, each dividing the next
  int rank = 0;
};

// Diagonalize an integer matrix by row/column operations.  Classic algorithm:
// bring the smallest nonzero entry to the pivot, clear its row and column
// (restarting whenever a division leaves a remainder), then enforce the
// divisibility chain by folding any offending entry into the pivot's row.
inline SmithResult smith_normal_form(IntMatrix m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  for (const auto& r : m)
    if (r.size() != cols) throw std::invalid_argument("ragged matrix");

  auto abs_of = [](const BigInt& v) { return v < 0 ? BigInt(-v) : v; };

  SmithResult res;
  std::size_t t = 0;  // current pivot index
  while (t < rows && t < cols) {
    // Find the entry of minimal absolute value in the untouched block.
    std::size_t pr = t, pc = t;
    bool found = false;
    BigInt best = 0;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        if (m[i][j] == 0) continue;
        BigInt a = abs_of(m[i][j]);
        if (!found || a < best) {
          found = true;
          best = a;
          pr = i;
          pc = j;
        }
      }
    if (!found) break;
    std::swap(m[t], m[pr]);
    for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][t], m[i][pc]);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0) continue;
        BigInt q = m[i][t] / m[t][t];
        for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        if (m[i][t] != 0) {  // remainder: it is smaller, promote it to pivot
          std::swap(m[t], m[i]);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0) continue;
        BigInt q = m[t][j] / m[t][t];
        for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) {
          for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][t], m[i][j]);
          clean = false;
        }
      }
    }

    // Pivot must divide everything below-right; if not, mix that row in and redo.
    bool redo = false;
    for (std::size_t i = t + 1; i < rows && !redo; ++i)
      for (std::size_t j = t + 1; j < cols && !redo; ++j)
        if (m[i][j] % m[t][t] != 0) {
          for (std::size_t c = t; c < cols; ++c) m[t][c] += m[i][c];
          redo = true;
        }
    if (redo) continue;

    if (m[t][t] < 0) m[t][t] = -m[t][t];
    res.invariants.push_back(m[t][t]);
    ++t;
  }
  res.rank = static_cast<int>(res.invariants.size());
  return res;
}

}  // namespace pbraid
