#include "plr/autotopism.hpp"

#include <algorithm>

namespace plr {

bool GammaCompletion::total() const {
  return std::find(forced.begin(), forced.end(), -1) == forced.end();
}

Permutation GammaCompletion::as_permutation() const {
  return Permutation(forced);
}

GammaOutcome complete_symbol_permutation(const PartialLatinRectangle& L,
                                         const Permutation& alpha,
                                         const Permutation& beta) {
  if (alpha.degree() != L.rows() || beta.degree() != L.cols())
    throw PlrError(ErrorKind::DegreeMismatch, "alpha/beta degrees do not match rectangle");
  const int n = L.symbols();
  std::vector<int> forward(n, -1), backward(n, -1);
  int used = 0;
  for (int i = 0; i < L.rows(); ++i) {
    for (int j = 0; j < L.cols(); ++j) {
      int k = L.at(i, j);
      if (k == PartialLatinRectangle::kEmpty) continue;
      int target = L.at(alpha(i), beta(j));
      if (target == PartialLatinRectangle::kEmpty) return GammaClash::TargetUndefined;
      if (forward[k] != -1) {
        if (forward[k] != target) return GammaClash::ForwardConflict;
      } else if (backward[target] != -1) {
        if (backward[target] != k) return GammaClash::BackwardConflict;
      } else {
        forward[k] = target;
        backward[target] = k;
        ++used;
      }
    }
  }
  return GammaCompletion{std::move(forward), factorial(n - used)};
}

Reduction reduce(const PartialLatinRectangle& L) {
  std::vector<char> row_used(L.rows(), 0), col_used(L.cols(), 0), sym_used(L.symbols(), 0);
  for (const Entry& e : L.entries()) {
    row_used[e.row] = 1;
    col_used[e.col] = 1;
    sym_used[e.sym] = 1;
  }
  Reduction red;
  std::vector<int> row_new(L.rows(), -1), col_new(L.cols(), -1), sym_new(L.symbols(), -1);
  for (int i = 0; i < L.rows(); ++i)
    if (row_used[i]) {
      row_new[i] = static_cast<int>(red.row_map.size());
      red.row_map.push_back(i);
    }
  for (int j = 0; j < L.cols(); ++j)
    if (col_used[j]) {
      col_new[j] = static_cast<int>(red.col_map.size());
      red.col_map.push_back(j);
    }
  for (int k = 0; k < L.symbols(); ++k)
    if (sym_used[k]) {
      sym_new[k] = static_cast<int>(red.sym_map.size());
      red.sym_map.push_back(k);
    }
  std::vector<Entry> entries;
  entries.reserve(L.entry_count());
  for (const Entry& e : L.entries())
    entries.push_back({row_new[e.row], col_new[e.col], sym_new[e.sym]});
  red.reduced = PartialLatinRectangle::from_entries_unchecked(
      static_cast<int>(red.row_map.size()), static_cast<int>(red.col_map.size()),
      static_cast<int>(red.sym_map.size()), entries);
  red.row_factor = factorial(L.rows() - red.reduced.rows());
  red.col_factor = factorial(L.cols() - red.reduced.cols());
  red.sym_factor = factorial(L.symbols() - red.reduced.symbols());
  return red;
}

AutotopismGroup make_group(const Reduction& red, std::vector<Isotopism> autos) {
  std::sort(autos.begin(), autos.end());
  autos.erase(std::unique(autos.begin(), autos.end()), autos.end());
  AutotopismGroup g;
  g.reduced_autotopisms = std::move(autos);
  g.row_factor = red.row_factor;
  g.col_factor = red.col_factor;
  g.sym_factor = red.sym_factor;
  g.total_order = g.row_factor * g.col_factor * g.sym_factor *
                  BigInt(g.reduced_autotopisms.size());
  return g;
}

}  // namespace plr
