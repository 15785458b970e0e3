#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "plr/permutation.hpp"

namespace plr {

enum class ErrorKind {
  BadShape,
  SymbolOutOfRange,
  RowClash,
  ColClash,
  DegreeMismatch,
  BadParameters,
  CapExceeded,
  TooLargeForOracle,
  ParseError,
};

class PlrError : public std::runtime_error {
 public:
  PlrError(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

/// A filled cell: row i, column j, symbol k (all 0-based internally).
struct Entry {
  int row = 0;
  int col = 0;
  int sym = 0;

  bool operator==(const Entry&) const = default;
  auto operator<=>(const Entry&) const = default;
};

/// An r x s array over n symbols where each symbol occurs at most once in
/// every row and every column.  Immutable after construction.
class PartialLatinRectangle {
 public:
  static constexpr int kEmpty = -1;

  PartialLatinRectangle() = default;  // 0 x 0

  /// Validates and builds from a grid where 0 means empty and 1..n are
  /// symbols (the external convention; symbols are stored 0-based).
  static PartialLatinRectangle from_grid(int r, int s, int n,
                                         const std::vector<std::vector<int>>& cells);

  /// Builds from 0-based entries without clash checks; caller guarantees
  /// validity (used where the Latin property is preserved by construction).
  static PartialLatinRectangle from_entries_unchecked(int r, int s, int n,
                                                      const std::vector<Entry>& entries);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int symbols() const { return symbols_; }

  bool filled(int i, int j) const { return cells_[i * cols_ + j] != kEmpty; }
  /// 0-based symbol, or kEmpty.
  int at(int i, int j) const { return cells_[i * cols_ + j]; }

  int entry_count() const { return entry_count_; }
  /// Row-major order.
  std::vector<Entry> entries() const;

  bool operator==(const PartialLatinRectangle&) const = default;

 private:
  int rows_ = 0, cols_ = 0, symbols_ = 0;
  int entry_count_ = 0;
  std::vector<int> cells_;  // row-major, kEmpty or 0-based symbol
};

/// A triple of permutations acting on rows, columns, and symbols.
struct Isotopism {
  Permutation rows;
  Permutation cols;
  Permutation syms;

  static Isotopism identity(int r, int s, int n);
  Isotopism inverse() const;
  friend Isotopism operator*(const Isotopism& p, const Isotopism& q);

  bool operator==(const Isotopism&) const = default;
  auto operator<=>(const Isotopism&) const = default;
};

/// Image of L under t: entry (i,j,k) maps to (alpha(i), beta(j), gamma(k)).
PartialLatinRectangle apply_isotopism(const PartialLatinRectangle& L, const Isotopism& t);

/// True iff L and its image under t have the same entry set.
bool is_autotopism(const PartialLatinRectangle& L, const Isotopism& t);

}  // namespace plr
