#include "plr/rectangle.hpp"

#include <string>

namespace plr {

PartialLatinRectangle PartialLatinRectangle::from_grid(
    int r, int s, int n, const std::vector<std::vector<int>>& cells) {
  if (r < 1 || s < 1 || n < 1)
    throw PlrError(ErrorKind::BadShape, "dimensions must be positive");
  if (static_cast<int>(cells.size()) != r)
    throw PlrError(ErrorKind::BadShape, "grid has wrong number of rows");
  PartialLatinRectangle L;
  L.rows_ = r;
  L.cols_ = s;
  L.symbols_ = n;
  L.cells_.assign(static_cast<size_t>(r) * s, kEmpty);
  // seen_row[i*n+k] marks symbol k in row i; likewise for columns.
  std::vector<char> seen_row(static_cast<size_t>(r) * n, 0);
  std::vector<char> seen_col(static_cast<size_t>(s) * n, 0);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(cells[i].size()) != s)
      throw PlrError(ErrorKind::BadShape, "grid row " + std::to_string(i + 1) + " has wrong length");
    for (int j = 0; j < s; ++j) {
      int v = cells[i][j];
      if (v == 0) continue;
      if (v < 1 || v > n)
        throw PlrError(ErrorKind::SymbolOutOfRange,
                       "symbol " + std::to_string(v) + " out of range at (" +
                           std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
      int k = v - 1;
      if (seen_row[static_cast<size_t>(i) * n + k])
        throw PlrError(ErrorKind::RowClash,
                       "symbol " + std::to_string(v) + " repeated in row " + std::to_string(i + 1));
      if (seen_col[static_cast<size_t>(j) * n + k])
        throw PlrError(ErrorKind::ColClash,
                       "symbol " + std::to_string(v) + " repeated in column " + std::to_string(j + 1));
      seen_row[static_cast<size_t>(i) * n + k] = 1;
      seen_col[static_cast<size_t>(j) * n + k] = 1;
      L.cells_[static_cast<size_t>(i) * s + j] = k;
      ++L.entry_count_;
    }
  }
  return L;
}

PartialLatinRectangle PartialLatinRectangle::from_entries_unchecked(
    int r, int s, int n, const std::vector<Entry>& entries) {
  PartialLatinRectangle L;
  L.rows_ = r;
  L.cols_ = s;
  L.symbols_ = n;
  L.cells_.assign(static_cast<size_t>(r) * s, kEmpty);
  for (const Entry& e : entries) L.cells_[static_cast<size_t>(e.row) * s + e.col] = e.sym;
  L.entry_count_ = static_cast<int>(entries.size());
  return L;
}

std::vector<Entry> PartialLatinRectangle::entries() const {
  std::vector<Entry> out;
  out.reserve(entry_count_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (int k = at(i, j); k != kEmpty) out.push_back({i, j, k});
  return out;
}

Isotopism Isotopism::identity(int r, int s, int n) {
  return {Permutation::identity(r), Permutation::identity(s), Permutation::identity(n)};
}

Isotopism Isotopism::inverse() const {
  return {rows.inverse(), cols.inverse(), syms.inverse()};
}

Isotopism operator*(const Isotopism& p, const Isotopism& q) {
  return {p.rows * q.rows, p.cols * q.cols, p.syms * q.syms};
}

PartialLatinRectangle apply_isotopism(const PartialLatinRectangle& L, const Isotopism& t) {
  if (t.rows.degree() != L.rows() || t.cols.degree() != L.cols() ||
      t.syms.degree() != L.symbols())
    throw PlrError(ErrorKind::DegreeMismatch, "isotopism degrees do not match rectangle");
  std::vector<Entry> image;
  image.reserve(L.entry_count());
  for (const Entry& e : L.entries())
    image.push_back({t.rows(e.row), t.cols(e.col), t.syms(e.sym)});
  return PartialLatinRectangle::from_entries_unchecked(L.rows(), L.cols(), L.symbols(), image);
}

bool is_autotopism(const PartialLatinRectangle& L, const Isotopism& t) {
  return apply_isotopism(L, t) == L;
}

}  // namespace plr
