#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "plr/aut_engine.hpp"
#include "plr/bigint.hpp"
#include "plr/rectangle.hpp"

namespace helpers {

// Independent oracle: all color- and adjacency-preserving vertex
// permutations by n! enumeration.  Usable up to ~8 vertices.
inline std::vector<std::vector<int>> brute_force_graph_automorphisms(const plr::ColoredGraph& g) {
  std::vector<int> sigma(g.n);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    bool ok = true;
    for (int v = 0; v < g.n && ok; ++v) {
      if (g.color[v] != g.color[sigma[v]]) ok = false;
      for (int u = v + 1; u < g.n && ok; ++u)
        if (g.adjacent(u, v) != g.adjacent(sigma[u], sigma[v])) ok = false;
    }
    if (ok) out.push_back(sigma);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

// Independent oracle: the full group order by enumerating all (alpha, beta,
// gamma) triples of the rectangle as given (no reduction).
inline plr::BigInt naive_total_order(const plr::PartialLatinRectangle& L) {
  std::vector<int> a(L.rows()), b(L.cols()), c(L.symbols());
  std::iota(a.begin(), a.end(), 0);
  plr::BigInt count = 0;
  do {
    std::iota(b.begin(), b.end(), 0);
    do {
      std::iota(c.begin(), c.end(), 0);
      do {
        if (plr::is_autotopism(L, {plr::Permutation(a), plr::Permutation(b),
                                   plr::Permutation(c)}))
          ++count;
      } while (std::next_permutation(c.begin(), c.end()));
    } while (std::next_permutation(b.begin(), b.end()));
  } while (std::next_permutation(a.begin(), a.end()));
  return count;
}

// All partial Latin rectangles of the given shape, by direct enumeration of
// the cell values with row/column clash filtering.
inline std::vector<plr::PartialLatinRectangle> all_plrs(int r, int s, int n) {
  std::vector<plr::PartialLatinRectangle> out;
  std::vector<std::vector<int>> grid(r, std::vector<int>(s, 0));
  auto ok_cell = [&](int i, int j, int v) {
    if (v == 0) return true;
    for (int jj = 0; jj < j; ++jj)
      if (grid[i][jj] == v) return false;
    for (int ii = 0; ii < i; ++ii)
      if (grid[ii][j] == v) return false;
    return true;
  };
  auto rec = [&](auto&& self, int cell) -> void {
    if (cell == r * s) {
      out.push_back(plr::PartialLatinRectangle::from_grid(r, s, n, grid));
      return;
    }
    const int i = cell / s, j = cell % s;
    for (int v = 0; v <= n; ++v) {
      if (!ok_cell(i, j, v)) continue;
      grid[i][j] = v;
      self(self, cell + 1);
    }
    grid[i][j] = 0;
  };
  rec(rec, 0);
  return out;
}

// Revalidates an instance through the checking constructor.
inline bool is_valid_plr(const plr::PartialLatinRectangle& L) {
  std::vector<std::vector<int>> grid(L.rows(), std::vector<int>(L.cols(), 0));
  for (int i = 0; i < L.rows(); ++i)
    for (int j = 0; j < L.cols(); ++j)
      if (L.filled(i, j)) grid[i][j] = L.at(i, j) + 1;
  try {
    return plr::PartialLatinRectangle::from_grid(L.rows(), L.cols(), L.symbols(), grid) == L;
  } catch (const plr::PlrError&) {
    return false;
  }
}

}  // namespace helpers
