#include "plr/generators.hpp"

#include <algorithm>
#include <cassert>

namespace plr {

PartialLatinRectangle gen_set_a(int r, int s, int n, int attempts, RngStream& rng) {
  if (r < 1 || s < 1 || n < 1 || attempts < 0)
    throw PlrError(ErrorKind::BadParameters, "bad set A parameters");
  std::vector<int> grid(static_cast<size_t>(r) * s, -1);
  std::vector<char> row_has(static_cast<size_t>(r) * n, 0), col_has(static_cast<size_t>(s) * n, 0);
  std::vector<Entry> entries;
  for (int t = 0; t < attempts; ++t) {
    const int i = rng.uniform_int(0, r - 1);
    const int j = rng.uniform_int(0, s - 1);
    const int k = rng.uniform_int(0, n - 1);
    if (grid[static_cast<size_t>(i) * s + j] != -1) continue;
    if (row_has[static_cast<size_t>(i) * n + k] || col_has[static_cast<size_t>(j) * n + k])
      continue;
    grid[static_cast<size_t>(i) * s + j] = k;
    row_has[static_cast<size_t>(i) * n + k] = 1;
    col_has[static_cast<size_t>(j) * n + k] = 1;
    entries.push_back({i, j, k});
  }
  return PartialLatinRectangle::from_entries_unchecked(r, s, n, entries);
}

namespace {

// 0/1 incidence cube with at most one -1 cell (the improper cell).
struct IncidenceCube {
  int n;
  std::vector<int8_t> x;  // n^3, x[i][j][k]

  explicit IncidenceCube(int order) : n(order), x(static_cast<size_t>(n) * n * n, 0) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) at(i, j, (i + j) % n) = 1;
  }

  int8_t& at(int i, int j, int k) {
    return x[(static_cast<size_t>(i) * n + j) * n + k];
  }

  // the unique/chosen slot with value 1 along each of the three lines
  int row_with_one(int j, int k, RngStream& rng, bool pick_of_two) {
    int found[2], cnt = 0;
    for (int i = 0; i < n; ++i)
      if (at(i, j, k) == 1) found[std::min(cnt++, 1)] = i;
    return pick_of_two ? found[rng.uniform_int(0, cnt - 1)] : found[0];
  }
  int col_with_one(int i, int k, RngStream& rng, bool pick_of_two) {
    int found[2], cnt = 0;
    for (int j = 0; j < n; ++j)
      if (at(i, j, k) == 1) found[std::min(cnt++, 1)] = j;
    return pick_of_two ? found[rng.uniform_int(0, cnt - 1)] : found[0];
  }
  int sym_with_one(int i, int j, RngStream& rng, bool pick_of_two) {
    int found[2], cnt = 0;
    for (int k = 0; k < n; ++k)
      if (at(i, j, k) == 1) found[std::min(cnt++, 1)] = k;
    return pick_of_two ? found[rng.uniform_int(0, cnt - 1)] : found[0];
  }
};

}  // namespace

PartialLatinRectangle jacobson_matthews(int n, long moves, RngStream& rng) {
  if (n < 1) throw PlrError(ErrorKind::BadParameters, "order must be positive");
  IncidenceCube cube(n);
  if (n == 1) {
    return PartialLatinRectangle::from_entries_unchecked(1, 1, 1, {{0, 0, 0}});
  }

  bool improper = false;
  int pi = 0, pj = 0, pk = 0;  // improper cell when improper
  long done = 0;
  while (done < moves || improper) {
    int i, j, k;
    if (!improper) {
      // uniform 0-cell: a uniform cell plus a uniform non-occupant symbol
      i = rng.uniform_int(0, n - 1);
      j = rng.uniform_int(0, n - 1);
      const int occupant = cube.sym_with_one(i, j, rng, false);
      k = rng.uniform_int(0, n - 2);
      if (k >= occupant) ++k;
    } else {
      i = pi;
      j = pj;
      k = pk;
    }
    const int i1 = cube.row_with_one(j, k, rng, improper);
    const int j1 = cube.col_with_one(i, k, rng, improper);
    const int k1 = cube.sym_with_one(i, j, rng, improper);
    ++cube.at(i, j, k);
    --cube.at(i, j, k1);
    --cube.at(i1, j, k);
    --cube.at(i, j1, k);
    ++cube.at(i1, j, k1);
    ++cube.at(i, j1, k1);
    ++cube.at(i1, j1, k);
    const int8_t corner = --cube.at(i1, j1, k1);
    improper = corner < 0;
    if (improper) {
      pi = i1;
      pj = j1;
      pk = k1;
    }
    ++done;
  }

  std::vector<Entry> entries;
  entries.reserve(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k)
        if (cube.at(i, j, k) == 1) {
          entries.push_back({i, j, k});
          break;
        }
    }
  assert(static_cast<int>(entries.size()) == n * n);
  return PartialLatinRectangle::from_entries_unchecked(n, n, n, entries);
}

PartialLatinRectangle gen_set_b(int r, int s, int n, int target_entries, RngStream& rng) {
  if (r < 1 || s < 1 || n < std::max(r, s))
    throw PlrError(ErrorKind::BadParameters, "set B requires n >= max(r, s)");
  if (target_entries < 0 || target_entries > r * s)
    throw PlrError(ErrorKind::BadParameters, "target entry count out of range");
  const PartialLatinRectangle square = jacobson_matthews(n, default_jm_moves(n), rng);
  std::vector<Entry> entries;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < s; ++j) entries.push_back({i, j, square.at(i, j)});
  // Fisher-Yates, then keep the first target_entries
  for (int t = static_cast<int>(entries.size()) - 1; t > 0; --t)
    std::swap(entries[t], entries[rng.uniform_int(0, t)]);
  entries.resize(target_entries);
  return PartialLatinRectangle::from_entries_unchecked(r, s, n, entries);
}

}  // namespace plr
