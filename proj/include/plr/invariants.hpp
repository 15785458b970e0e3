#pragma once

#include <array>
#include <vector>

#include "plr/rectangle.hpp"

namespace plr {

enum class InvariantKind { None, Sei, Square, Combined };

/// Strong entry invariant of an entry (i,j,k): entries in row i, entries in
/// column j, and occurrences of symbol k in the whole rectangle.
struct SeiValue {
  int row_count = 0;
  int col_count = 0;
  int sym_count = 0;

  bool operator==(const SeiValue&) const = default;
  auto operator<=>(const SeiValue&) const = default;
};

/// Counts of the (r-1)(s-1) 2x2 submatrices through an entry, indexed by the
/// 5-bit mask over: bit0 x undefined, bit1 y undefined, bit2 z undefined,
/// bit3 k=z, bit4 x=y (for the submatrix [[k,x],[y,z]]).
using SquareValue = std::array<int, 32>;

/// Per-entry invariant values with a dense relabeling of distinct values;
/// class ids are assigned in first-occurrence order over a row-major scan.
struct InvariantTable {
  InvariantKind kind = InvariantKind::None;
  std::vector<Entry> entries;          // row-major, matches L.entries()
  std::vector<int> class_of;           // parallel to entries, 0-based dense
  std::vector<std::vector<int>> values;  // encoded raw values, parallel
  int class_count = 0;
  std::vector<int> class_grid;  // r*s row-major, -1 on empty cells

  int class_at(int i, int j, int s) const { return class_grid[static_cast<size_t>(i) * s + j]; }
};

InvariantTable compute_entry_invariant(const PartialLatinRectangle& L, InvariantKind kind);

std::vector<SeiValue> sei_values(const PartialLatinRectangle& L);

/// O(r*s) per entry reference computation; the bucketed form used by
/// compute_entry_invariant is checked against this in tests.
SquareValue square_invariant_naive(const PartialLatinRectangle& L, const Entry& e);

/// Row/column/symbol multisets of entry classes, and the partitions of the
/// non-empty lines by equal multiset.  line *_class ids are -1 on empty lines.
struct LineInvariants {
  std::vector<std::vector<int>> row_multisets, col_multisets, sym_multisets;  // sorted
  std::vector<std::vector<int>> row_partition, col_partition, sym_partition;
  std::vector<int> row_class, col_class, sym_class;
};

LineInvariants line_invariants(const PartialLatinRectangle& L, const InvariantTable& table);

/// Sufficient conditions for a trivial autotopism group of a reduced
/// rectangle: (a) all entry classes distinct, or (b) at least two of the
/// three line partitions are discrete.
enum class Certificate { TrivialDistinctEntries, TrivialDiscreteLines, NotCertified };

Certificate triviality_certificate(const PartialLatinRectangle& L, const InvariantTable& table);

/// Per-column class-id vectors and their supports, used to prune the
/// admissible column images once a row permutation is fixed.
struct ColumnVectors {
  std::vector<std::vector<int>> vec;      // vec[j][i]: class id or -1
  std::vector<std::vector<int>> support;  // sorted row indices of filled cells
};

ColumnVectors column_vectors(const PartialLatinRectangle& L, const InvariantTable& table);

}  // namespace plr
