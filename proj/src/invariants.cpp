#include "plr/invariants.hpp"

#include <algorithm>
#include <map>

namespace plr {

namespace {

constexpr int kBitX = 1 << 0;  // x undefined
constexpr int kBitY = 1 << 1;  // y undefined
constexpr int kBitZ = 1 << 2;  // z undefined
constexpr int kBitD = 1 << 3;  // k == z
constexpr int kBitE = 1 << 4;  // x == y

// Bucketed square-invariant computation: start from the counts implied by
// the row/column marginals assuming z undefined, then correct one cell at a
// time over the entries outside row i and column j.  O(|Ent|) per entry.
SquareValue square_invariant_bucketed(const PartialLatinRectangle& L,
                                      const std::vector<Entry>& all,
                                      const std::vector<int>& row_count,
                                      const std::vector<int>& col_count,
                                      const Entry& e) {
  const int r = L.rows(), s = L.cols();
  SquareValue counts{};
  const int a0 = row_count[e.row] - 1;      // defined x positions
  const int a1 = (s - 1) - a0;              // undefined x positions
  const int b0 = col_count[e.col] - 1;
  const int b1 = (r - 1) - b0;
  // Matches x == y among defined pairs: symbol v at (e.row, j') and (i', e.col).
  std::vector<int> row_sym(L.symbols(), 0), col_sym(L.symbols(), 0);
  for (int j = 0; j < s; ++j)
    if (j != e.col && L.filled(e.row, j)) ++row_sym[L.at(e.row, j)];
  for (int i = 0; i < r; ++i)
    if (i != e.row && L.filled(i, e.col)) ++col_sym[L.at(i, e.col)];
  long matches = 0;
  for (int v = 0; v < L.symbols(); ++v) matches += static_cast<long>(row_sym[v]) * col_sym[v];
  counts[kBitX | kBitY | kBitZ] = a1 * b1;
  counts[kBitX | kBitZ] = a1 * b0;
  counts[kBitY | kBitZ] = a0 * b1;
  counts[kBitZ | kBitE] = static_cast<int>(matches);
  counts[kBitZ] = a0 * b0 - static_cast<int>(matches);
  for (const Entry& f : all) {
    if (f.row == e.row || f.col == e.col) continue;
    const int x = L.at(e.row, f.col);
    const int y = L.at(f.row, e.col);
    int mask = 0;
    if (x == PartialLatinRectangle::kEmpty) mask |= kBitX;
    if (y == PartialLatinRectangle::kEmpty) mask |= kBitY;
    if (f.sym == e.sym) mask |= kBitD;
    if (x != PartialLatinRectangle::kEmpty && x == y) mask |= kBitE;
    const int assumed = (mask & (kBitX | kBitY | kBitE)) | kBitZ;
    --counts[assumed];
    ++counts[mask];
  }
  return counts;
}

std::vector<int> encode_sei(const SeiValue& v) {
  return {v.row_count, v.col_count, v.sym_count};
}

std::vector<int> encode_square(const SquareValue& v) {
  return std::vector<int>(v.begin(), v.end());
}

}  // namespace

std::vector<SeiValue> sei_values(const PartialLatinRectangle& L) {
  std::vector<int> row_count(L.rows(), 0), col_count(L.cols(), 0), sym_count(L.symbols(), 0);
  const auto entries = L.entries();
  for (const Entry& e : entries) {
    ++row_count[e.row];
    ++col_count[e.col];
    ++sym_count[e.sym];
  }
  std::vector<SeiValue> out;
  out.reserve(entries.size());
  for (const Entry& e : entries)
    out.push_back({row_count[e.row], col_count[e.col], sym_count[e.sym]});
  return out;
}

SquareValue square_invariant_naive(const PartialLatinRectangle& L, const Entry& e) {
  SquareValue counts{};
  for (int i = 0; i < L.rows(); ++i) {
    if (i == e.row) continue;
    for (int j = 0; j < L.cols(); ++j) {
      if (j == e.col) continue;
      const int x = L.at(e.row, j);
      const int y = L.at(i, e.col);
      const int z = L.at(i, j);
      int mask = 0;
      if (x == PartialLatinRectangle::kEmpty) mask |= kBitX;
      if (y == PartialLatinRectangle::kEmpty) mask |= kBitY;
      if (z == PartialLatinRectangle::kEmpty) mask |= kBitZ;
      if (z != PartialLatinRectangle::kEmpty && z == e.sym) mask |= kBitD;
      if (x != PartialLatinRectangle::kEmpty && x == y) mask |= kBitE;
      ++counts[mask];
    }
  }
  return counts;
}

InvariantTable compute_entry_invariant(const PartialLatinRectangle& L, InvariantKind kind) {
  InvariantTable table;
  table.kind = kind;
  table.entries = L.entries();
  table.class_grid.assign(static_cast<size_t>(L.rows()) * L.cols(), -1);

  const size_t m = table.entries.size();
  table.values.reserve(m);
  if (kind == InvariantKind::None) {
    table.values.assign(m, {0});
  } else {
    std::vector<SeiValue> sei;
    if (kind != InvariantKind::Square) sei = sei_values(L);
    std::vector<int> row_count(L.rows(), 0), col_count(L.cols(), 0);
    for (const Entry& e : table.entries) {
      ++row_count[e.row];
      ++col_count[e.col];
    }
    for (size_t t = 0; t < m; ++t) {
      std::vector<int> key;
      if (kind == InvariantKind::Sei) {
        key = encode_sei(sei[t]);
      } else {
        auto sq = encode_square(
            square_invariant_bucketed(L, table.entries, row_count, col_count, table.entries[t]));
        if (kind == InvariantKind::Square) {
          key = std::move(sq);
        } else {  // Combined: lexicographic pair (SEI, square)
          key = encode_sei(sei[t]);
          key.insert(key.end(), sq.begin(), sq.end());
        }
      }
      table.values.push_back(std::move(key));
    }
  }

  std::map<std::vector<int>, int> ids;
  table.class_of.resize(m);
  for (size_t t = 0; t < m; ++t) {
    auto [it, fresh] = ids.try_emplace(table.values[t], table.class_count);
    if (fresh) ++table.class_count;
    table.class_of[t] = it->second;
    const Entry& e = table.entries[t];
    table.class_grid[static_cast<size_t>(e.row) * L.cols() + e.col] = it->second;
  }
  return table;
}

namespace {

// Groups line indices by equal multiset; empty lines get class -1 and are
// excluded from the partition.
void build_lines(const std::vector<std::vector<int>>& multisets,
                 std::vector<std::vector<int>>& partition, std::vector<int>& line_class) {
  line_class.assign(multisets.size(), -1);
  std::map<std::vector<int>, int> ids;
  for (size_t i = 0; i < multisets.size(); ++i) {
    if (multisets[i].empty()) continue;
    auto [it, fresh] = ids.try_emplace(multisets[i], static_cast<int>(partition.size()));
    if (fresh) partition.emplace_back();
    line_class[i] = it->second;
    partition[it->second].push_back(static_cast<int>(i));
  }
}

}  // namespace

LineInvariants line_invariants(const PartialLatinRectangle& L, const InvariantTable& table) {
  LineInvariants li;
  li.row_multisets.resize(L.rows());
  li.col_multisets.resize(L.cols());
  li.sym_multisets.resize(L.symbols());
  for (size_t t = 0; t < table.entries.size(); ++t) {
    const Entry& e = table.entries[t];
    const int c = table.class_of[t];
    li.row_multisets[e.row].push_back(c);
    li.col_multisets[e.col].push_back(c);
    li.sym_multisets[e.sym].push_back(c);
  }
  for (auto* group : {&li.row_multisets, &li.col_multisets, &li.sym_multisets})
    for (auto& ms : *group) std::sort(ms.begin(), ms.end());
  build_lines(li.row_multisets, li.row_partition, li.row_class);
  build_lines(li.col_multisets, li.col_partition, li.col_class);
  build_lines(li.sym_multisets, li.sym_partition, li.sym_class);
  return li;
}

Certificate triviality_certificate(const PartialLatinRectangle& L, const InvariantTable& table) {
  if (table.class_count == static_cast<int>(table.entries.size()) && !table.entries.empty())
    return Certificate::TrivialDistinctEntries;
  const LineInvariants li = line_invariants(L, table);
  auto discrete = [](const std::vector<std::vector<int>>& partition) {
    return std::all_of(partition.begin(), partition.end(),
                       [](const std::vector<int>& cell) { return cell.size() == 1; });
  };
  const int n_discrete = static_cast<int>(discrete(li.row_partition)) +
                         static_cast<int>(discrete(li.col_partition)) +
                         static_cast<int>(discrete(li.sym_partition));
  if (n_discrete >= 2 && !table.entries.empty()) return Certificate::TrivialDiscreteLines;
  return Certificate::NotCertified;
}

ColumnVectors column_vectors(const PartialLatinRectangle& L, const InvariantTable& table) {
  ColumnVectors cv;
  cv.vec.assign(L.cols(), std::vector<int>(L.rows(), -1));
  cv.support.resize(L.cols());
  for (size_t t = 0; t < table.entries.size(); ++t) {
    const Entry& e = table.entries[t];
    cv.vec[e.col][e.row] = table.class_of[t];
    cv.support[e.col].push_back(e.row);
  }
  return cv;
}

}  // namespace plr
