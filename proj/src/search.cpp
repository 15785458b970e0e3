#include "plr/search.hpp"

#include <algorithm>
#include <numeric>

namespace plr {

namespace {

[[noreturn]] void cap_exceeded() {
  throw PlrError(ErrorKind::CapExceeded, "autotopism cap exceeded");
}

// Shared per-search state for the alpha-beta solver on a reduced rectangle.
struct AlphaBetaSearch {
  const PartialLatinRectangle& L;
  const SearchOptions& opts;
  int r, s, n;
  std::vector<int> row_class, col_class;  // line invariant class per line
  const std::vector<int>* row_orbit = nullptr;
  const std::vector<int>* col_orbit = nullptr;
  ColumnVectors cv;
  bool have_cv = false;

  std::vector<int> row_order, col_order;
  std::vector<int> alpha, alpha_inv, beta, beta_inv;
  std::vector<int> gamma, gamma_inv;
  std::vector<std::pair<int, int>> trail;  // gamma assignments per column level

  std::vector<Isotopism> results;

  AlphaBetaSearch(const PartialLatinRectangle& plr, const SearchOptions& o)
      : L(plr), opts(o), r(plr.rows()), s(plr.cols()), n(plr.symbols()) {
    InvariantTable table = compute_entry_invariant(L, opts.invariant);
    const LineInvariants li = line_invariants(L, table);
    row_class = li.row_class;
    col_class = li.col_class;
    if (opts.orbit_constraints) {
      row_orbit = &opts.orbit_constraints->first;
      col_orbit = &opts.orbit_constraints->second;
    }
    if (opts.use_cv) {
      cv = column_vectors(L, table);
      have_cv = true;
    }
    // smallest invariant class first, to fail fast
    row_order = order_by_class_size(row_class, r);
    col_order = order_by_class_size(col_class, s);
    alpha.assign(r, -1);
    alpha_inv.assign(r, -1);
    beta.assign(s, -1);
    beta_inv.assign(s, -1);
    gamma.assign(n, -1);
    gamma_inv.assign(n, -1);
  }

  static std::vector<int> order_by_class_size(const std::vector<int>& cls, int count) {
    std::vector<int> size_of_class;
    for (int i = 0; i < count; ++i) {
      if (cls[i] >= static_cast<int>(size_of_class.size()))
        size_of_class.resize(cls[i] + 1, 0);
      ++size_of_class[cls[i]];
    }
    std::vector<int> order(count);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return size_of_class[cls[a]] < size_of_class[cls[b]];
    });
    return order;
  }

  void run() { search_alpha(0); }

  void search_alpha(int level) {
    if (level == r) {
      search_beta(0);
      return;
    }
    const int i = row_order[level];
    for (int a = 0; a < r; ++a) {
      if (alpha_inv[a] != -1) continue;
      if (row_class[i] != row_class[a]) continue;
      if (row_orbit && (*row_orbit)[i] != (*row_orbit)[a]) continue;
      alpha[i] = a;
      alpha_inv[a] = i;
      search_alpha(level + 1);
      alpha[i] = -1;
      alpha_inv[a] = -1;
    }
  }

  void search_beta(int level) {
    if (level == s) {
      // all entries processed, so gamma is total on the reduced rectangle
      results.push_back({Permutation(alpha), Permutation(beta), Permutation(gamma)});
      if (static_cast<long>(results.size()) > opts.autotopism_cap) cap_exceeded();
      return;
    }
    const int j = col_order[level];
    for (int b = 0; b < s; ++b) {
      if (beta_inv[b] != -1) continue;
      if (col_class[j] != col_class[b]) continue;
      if (col_orbit && (*col_orbit)[j] != (*col_orbit)[b]) continue;
      if (have_cv && !cv_admissible(j, b)) continue;
      if (!close_column(j, b)) continue;
      beta[j] = b;
      beta_inv[b] = j;
      search_beta(level + 1);
      beta[j] = -1;
      beta_inv[b] = -1;
      undo_column();
    }
  }

  // Column-vector test under the (complete) row permutation.
  bool cv_admissible(int j, int b) const {
    for (int i = 0; i < r; ++i)
      if (cv.vec[j][i] != cv.vec[b][alpha[i]]) return false;
    return true;
  }

  // Incremental symbol-map closing for beta(j) = b: the fill patterns must
  // correspond under alpha and the forced gamma must stay consistent.
  bool close_column(int j, int b) {
    size_t mark = trail.size();
    for (int i = 0; i < r; ++i) {
      const int k = L.at(i, j);
      const int k2 = L.at(alpha[i], b);
      if ((k == PartialLatinRectangle::kEmpty) != (k2 == PartialLatinRectangle::kEmpty)) {
        rollback(mark);
        return false;
      }
      if (k == PartialLatinRectangle::kEmpty) continue;
      if (gamma[k] != -1) {
        if (gamma[k] != k2) {
          rollback(mark);
          return false;
        }
      } else if (gamma_inv[k2] != -1) {
        rollback(mark);
        return false;
      } else {
        gamma[k] = k2;
        gamma_inv[k2] = k;
        trail.emplace_back(k, k2);
      }
    }
    marks.push_back(mark);
    return true;
  }

  void undo_column() {
    rollback(marks.back());
    marks.pop_back();
  }

  void rollback(size_t mark) {
    while (trail.size() > mark) {
      auto [k, k2] = trail.back();
      trail.pop_back();
      gamma[k] = -1;
      gamma_inv[k2] = -1;
    }
  }

  std::vector<size_t> marks;
};

struct EntrywiseSearch {
  const PartialLatinRectangle& L;
  const SearchOptions& opts;
  std::vector<Entry> entries;
  std::vector<int> order;  // level -> entry index
  std::vector<int> class_of, row_class, col_class;
  const std::vector<int>* row_orbit = nullptr;
  const std::vector<int>* col_orbit = nullptr;

  std::vector<int> af, ab, bf, bb, gf, gb;
  std::vector<char> target_used;
  std::vector<Isotopism> results;

  EntrywiseSearch(const PartialLatinRectangle& plr, const SearchOptions& o)
      : L(plr), opts(o), entries(plr.entries()) {
    InvariantTable table = compute_entry_invariant(L, opts.invariant);
    class_of = table.class_of;
    const LineInvariants li = line_invariants(L, table);
    row_class = li.row_class;
    col_class = li.col_class;
    if (opts.orbit_constraints) {
      row_orbit = &opts.orbit_constraints->first;
      col_orbit = &opts.orbit_constraints->second;
    }
    build_order();
    af.assign(L.rows(), -1);
    ab.assign(L.rows(), -1);
    bf.assign(L.cols(), -1);
    bb.assign(L.cols(), -1);
    gf.assign(L.symbols(), -1);
    gb.assign(L.symbols(), -1);
    target_used.assign(entries.size(), 0);
  }

  // Greedy spanning order: prefer entries overlapping already-decided rows,
  // columns, and symbols; ties broken row-major.
  void build_order() {
    const size_t m = entries.size();
    std::vector<char> taken(m, 0), row_seen(L.rows(), 0), col_seen(L.cols(), 0),
        sym_seen(L.symbols(), 0);
    for (size_t level = 0; level < m; ++level) {
      int best = -1, best_score = -1;
      for (size_t t = 0; t < m; ++t) {
        if (taken[t]) continue;
        const Entry& e = entries[t];
        const int score = row_seen[e.row] + col_seen[e.col] + sym_seen[e.sym];
        if (score > best_score) {
          best_score = score;
          best = static_cast<int>(t);
        }
      }
      taken[best] = 1;
      order.push_back(best);
      row_seen[entries[best].row] = 1;
      col_seen[entries[best].col] = 1;
      sym_seen[entries[best].sym] = 1;
    }
  }

  void run() { search(0); }

  void search(size_t level) {
    if (level == order.size()) {
      // reduced rectangle: all lines and symbols are covered by entries
      Isotopism t{Permutation(af), Permutation(bf), Permutation(gf)};
      if (is_autotopism(L, t)) {
        results.push_back(std::move(t));
        if (static_cast<long>(results.size()) > opts.autotopism_cap) cap_exceeded();
      }
      return;
    }
    const Entry& e = entries[order[level]];
    for (size_t ft = 0; ft < entries.size(); ++ft) {
      if (target_used[ft]) continue;
      const Entry& f = entries[ft];
      if (class_of[order[level]] != class_of[ft]) continue;
      if (row_class[e.row] != row_class[f.row]) continue;
      if (col_class[e.col] != col_class[f.col]) continue;
      if (row_orbit && (*row_orbit)[e.row] != (*row_orbit)[f.row]) continue;
      if (col_orbit && (*col_orbit)[e.col] != (*col_orbit)[f.col]) continue;
      // the six forward/inverse clashes
      if (af[e.row] != -1 ? af[e.row] != f.row : ab[f.row] != -1) continue;
      if (bf[e.col] != -1 ? bf[e.col] != f.col : bb[f.col] != -1) continue;
      if (gf[e.sym] != -1 ? gf[e.sym] != f.sym : gb[f.sym] != -1) continue;
      const bool set_a = af[e.row] == -1, set_b = bf[e.col] == -1, set_g = gf[e.sym] == -1;
      if (set_a) { af[e.row] = f.row; ab[f.row] = e.row; }
      if (set_b) { bf[e.col] = f.col; bb[f.col] = e.col; }
      if (set_g) { gf[e.sym] = f.sym; gb[f.sym] = e.sym; }
      target_used[ft] = 1;
      search(level + 1);
      target_used[ft] = 0;
      if (set_a) { af[e.row] = -1; ab[f.row] = -1; }
      if (set_b) { bf[e.col] = -1; bb[f.col] = -1; }
      if (set_g) { gf[e.sym] = -1; gb[f.sym] = -1; }
    }
  }
};

}  // namespace

std::vector<Isotopism> alphabeta_reduced(const PartialLatinRectangle& reduced,
                                         const SearchOptions& opts) {
  if (reduced.entry_count() == 0)
    return {Isotopism::identity(reduced.rows(), reduced.cols(), reduced.symbols())};
  AlphaBetaSearch search(reduced, opts);
  search.run();
  return std::move(search.results);
}

std::vector<Isotopism> entrywise_reduced(const PartialLatinRectangle& reduced,
                                         const SearchOptions& opts) {
  if (reduced.entry_count() == 0)
    return {Isotopism::identity(reduced.rows(), reduced.cols(), reduced.symbols())};
  EntrywiseSearch search(reduced, opts);
  search.run();
  return std::move(search.results);
}

AutotopismGroup alphabeta_atop(const PartialLatinRectangle& L, const SearchOptions& opts) {
  Reduction red = reduce(L);
  auto autos = alphabeta_reduced(red.reduced, opts);
  return make_group(red, std::move(autos));
}

AutotopismGroup entrywise_atop(const PartialLatinRectangle& L, const SearchOptions& opts) {
  Reduction red = reduce(L);
  auto autos = entrywise_reduced(red.reduced, opts);
  return make_group(red, std::move(autos));
}

AutotopismGroup brute_force_atop(const PartialLatinRectangle& L, double max_pairs) {
  Reduction red = reduce(L);
  const PartialLatinRectangle& R = red.reduced;
  if (R.entry_count() == 0)
    return make_group(red, {Isotopism::identity(R.rows(), R.cols(), R.symbols())});
  double pairs = 1;
  for (int i = 2; i <= R.rows(); ++i) pairs *= i;
  for (int j = 2; j <= R.cols(); ++j) pairs *= j;
  if (pairs > max_pairs)
    throw PlrError(ErrorKind::TooLargeForOracle, "too many (alpha, beta) pairs for the oracle");

  std::vector<Isotopism> autos;
  std::vector<int> a(R.rows());
  std::iota(a.begin(), a.end(), 0);
  do {
    Permutation alpha(a);
    std::vector<int> b(R.cols());
    std::iota(b.begin(), b.end(), 0);
    do {
      Permutation beta(b);
      auto outcome = complete_symbol_permutation(R, alpha, beta);
      if (auto* done = std::get_if<GammaCompletion>(&outcome)) {
        // reduced rectangle: all symbols used, gamma unique
        autos.push_back({alpha, beta, done->as_permutation()});
      }
    } while (std::next_permutation(b.begin(), b.end()));
  } while (std::next_permutation(a.begin(), a.end()));
  return make_group(red, std::move(autos));
}

}  // namespace plr
