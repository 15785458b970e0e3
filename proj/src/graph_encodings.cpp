#include "plr/graph_encodings.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <variant>

#include "plr/autotopism.hpp"

namespace plr {

namespace {

// Entry vertices come first in row-major order; with an invariant coloring
// they are colored by class id, otherwise they share one color.  Later
// vertex groups get colors past the entry range.
int entry_color_span(const InvariantTable* coloring) {
  return coloring && coloring->class_count > 0 ? coloring->class_count : 1;
}

struct Builder {
  std::vector<int> colors;
  std::vector<VertexTag> tags;
  std::vector<std::pair<int, int>> edges;

  int add(TagType type, int index, int color) {
    colors.push_back(color);
    tags.push_back({type, index});
    return static_cast<int>(colors.size()) - 1;
  }

  EncodedGraph finish() {
    EncodedGraph eg;
    const int n = static_cast<int>(colors.size());
    eg.graph = ColoredGraph(n, std::move(colors));
    for (auto [u, v] : edges) eg.graph.add_edge(u, v);
    eg.graph.finalize();
    eg.tags = std::move(tags);
    return eg;
  }
};

}  // namespace

std::vector<std::vector<bool>> incidence_matrix(const PartialLatinRectangle& L) {
  std::vector<std::vector<bool>> m(L.rows(), std::vector<bool>(L.cols(), false));
  for (int i = 0; i < L.rows(); ++i)
    for (int j = 0; j < L.cols(); ++j) m[i][j] = L.filled(i, j);
  return m;
}

EncodedGraph build_graph(const PartialLatinRectangle& L, GraphKind kind,
                         const InvariantTable* coloring) {
  const auto entries = L.entries();
  const int m = static_cast<int>(entries.size());
  Builder b;
  const int span = entry_color_span(coloring);
  auto entry_color = [&](int t) { return coloring ? coloring->class_of[t] : 0; };

  if (kind == GraphKind::Bipartite) {
    // side colors keep the engine from exchanging rows with columns
    LineInvariants li;
    if (coloring) li = line_invariants(L, *coloring);
    for (int i = 0; i < L.rows(); ++i) {
      const int c = coloring && li.row_class[i] >= 0 ? li.row_class[i] : 0;
      b.add(TagType::RowVertex, i, c);
    }
    const int col_base = coloring ? static_cast<int>(li.row_partition.size()) + 1 : 1;
    for (int j = 0; j < L.cols(); ++j) {
      const int c = coloring && li.col_class[j] >= 0 ? li.col_class[j] : 0;
      b.add(TagType::ColVertex, j, col_base + c);
    }
    for (const Entry& e : entries) b.edges.emplace_back(e.row, L.rows() + e.col);
    return b.finish();
  }

  for (int t = 0; t < m; ++t) b.add(TagType::EntryVertex, t, entry_color(t));

  auto same_row_edges = [&](int base) {
    for (int t1 = 0; t1 < m; ++t1)
      for (int t2 = t1 + 1; t2 < m; ++t2)
        if (entries[t1].row == entries[t2].row) b.edges.emplace_back(base + t1, base + t2);
  };
  auto same_col_edges = [&](int base) {
    for (int t1 = 0; t1 < m; ++t1)
      for (int t2 = t1 + 1; t2 < m; ++t2)
        if (entries[t1].col == entries[t2].col) b.edges.emplace_back(base + t1, base + t2);
  };
  auto same_sym_edges = [&](int base) {
    for (int t1 = 0; t1 < m; ++t1)
      for (int t2 = t1 + 1; t2 < m; ++t2)
        if (entries[t1].sym == entries[t2].sym) b.edges.emplace_back(base + t1, base + t2);
  };

  switch (kind) {
    case GraphKind::Mmm: {
      // one line vertex per non-empty row/column and used symbol
      std::vector<int> row_v(L.rows(), -1), col_v(L.cols(), -1), sym_v(L.symbols(), -1);
      for (const Entry& e : entries) row_v[e.row] = col_v[e.col] = sym_v[e.sym] = 0;
      for (int i = 0; i < L.rows(); ++i)
        if (row_v[i] == 0) row_v[i] = b.add(TagType::RowVertex, i, span);
      for (int j = 0; j < L.cols(); ++j)
        if (col_v[j] == 0) col_v[j] = b.add(TagType::ColVertex, j, span + 1);
      for (int k = 0; k < L.symbols(); ++k)
        if (sym_v[k] == 0) sym_v[k] = b.add(TagType::SymVertex, k, span + 2);
      for (int t = 0; t < m; ++t) {
        b.edges.emplace_back(t, row_v[entries[t].row]);
        b.edges.emplace_back(t, col_v[entries[t].col]);
        b.edges.emplace_back(t, sym_v[entries[t].sym]);
      }
      break;
    }
    case GraphKind::PlrFlat:
      same_row_edges(0);
      same_col_edges(0);
      same_sym_edges(0);
      break;
    case GraphKind::RookFlat:
      same_row_edges(0);
      same_col_edges(0);
      break;
    case GraphKind::PlrExpanded: {
      for (int t = 0; t < m; ++t) b.add(TagType::RowShadow, t, span);
      for (int t = 0; t < m; ++t) b.add(TagType::ColShadow, t, span + 1);
      for (int t = 0; t < m; ++t) b.add(TagType::SymShadow, t, span + 2);
      for (int t = 0; t < m; ++t) {
        b.edges.emplace_back(t, m + t);
        b.edges.emplace_back(t, 2 * m + t);
        b.edges.emplace_back(t, 3 * m + t);
      }
      same_row_edges(m);
      same_col_edges(2 * m);
      same_sym_edges(3 * m);
      break;
    }
    case GraphKind::RookExpanded: {
      for (int t = 0; t < m; ++t) b.add(TagType::RowShadow, t, span);
      for (int t = 0; t < m; ++t) b.add(TagType::ColShadow, t, span + 1);
      std::vector<int> sym_v(L.symbols(), -1);
      for (const Entry& e : entries) sym_v[e.sym] = 0;
      for (int k = 0; k < L.symbols(); ++k)
        if (sym_v[k] == 0) sym_v[k] = b.add(TagType::SymVertex, k, span + 2);
      for (int t = 0; t < m; ++t) {
        b.edges.emplace_back(t, m + t);
        b.edges.emplace_back(t, 2 * m + t);
        b.edges.emplace_back(m + t, sym_v[entries[t].sym]);
        b.edges.emplace_back(2 * m + t, sym_v[entries[t].sym]);
      }
      same_row_edges(m);
      same_col_edges(2 * m);
      break;
    }
    case GraphKind::Bipartite:
      break;  // handled above
  }
  return b.finish();
}

namespace {

// Builds (alpha, beta, gamma) from an entry index permutation, with
// forward/inverse clash detection.  Returns false on any inconsistency.
bool triple_from_entry_map(const PartialLatinRectangle& L, const std::vector<Entry>& entries,
                           const std::vector<int>& entry_map, Isotopism& out) {
  std::vector<int> af(L.rows(), -1), ab(L.rows(), -1);
  std::vector<int> bf(L.cols(), -1), bb(L.cols(), -1);
  std::vector<int> gf(L.symbols(), -1), gb(L.symbols(), -1);
  auto assign = [](std::vector<int>& fwd, std::vector<int>& bwd, int from, int to) {
    if (fwd[from] != -1) return fwd[from] == to;
    if (bwd[to] != -1) return false;
    fwd[from] = to;
    bwd[to] = from;
    return true;
  };
  for (size_t t = 0; t < entries.size(); ++t) {
    const Entry& e = entries[t];
    const Entry& f = entries[entry_map[t]];
    if (!assign(af, ab, e.row, f.row) || !assign(bf, bb, e.col, f.col) ||
        !assign(gf, gb, e.sym, f.sym))
      return false;
  }
  // reduced input: every row, column, and symbol occurs in some entry
  out = {Permutation(af), Permutation(bf), Permutation(gf)};
  return true;
}

}  // namespace

DecodedAutotopisms decode_automorphisms(const PartialLatinRectangle& L, GraphKind kind,
                                        const std::vector<VertexTag>& tags,
                                        const std::vector<std::vector<int>>& autos) {
  const auto entries = L.entries();
  const int m = static_cast<int>(entries.size());
  DecodedAutotopisms out;

  for (const auto& sigma : autos) {
    Isotopism t;
    bool ok = true;
    switch (kind) {
      case GraphKind::Mmm: {
        std::vector<int> a(L.rows()), bv(L.cols()), g(L.symbols());
        for (size_t v = 0; v < sigma.size(); ++v) {
          const VertexTag& tag = tags[v];
          if (tag.type == TagType::RowVertex) a[tag.index] = tags[sigma[v]].index;
          else if (tag.type == TagType::ColVertex) bv[tag.index] = tags[sigma[v]].index;
          else if (tag.type == TagType::SymVertex) g[tag.index] = tags[sigma[v]].index;
        }
        t = {Permutation(a), Permutation(bv), Permutation(g)};
        break;
      }
      case GraphKind::Bipartite: {
        std::vector<int> a(L.rows()), bv(L.cols());
        for (size_t v = 0; v < sigma.size(); ++v) {
          const VertexTag& tag = tags[v];
          if (tag.type == TagType::RowVertex) a[tag.index] = tags[sigma[v]].index;
          else bv[tag.index] = tags[sigma[v]].index;
        }
        Permutation alpha(a), beta(bv);
        auto outcome = complete_symbol_permutation(L, alpha, beta);
        if (auto* done = std::get_if<GammaCompletion>(&outcome); done && done->total()) {
          t = {std::move(alpha), std::move(beta), done->as_permutation()};
        } else {
          ok = false;
        }
        break;
      }
      case GraphKind::PlrFlat:
      case GraphKind::RookFlat: {
        std::vector<int> entry_map(sigma.begin(), sigma.begin() + m);
        ok = triple_from_entry_map(L, entries, entry_map, t) && is_autotopism(L, t);
        break;
      }
      case GraphKind::PlrExpanded: {
        std::vector<int> entry_map(sigma.begin(), sigma.begin() + m);
        ok = triple_from_entry_map(L, entries, entry_map, t);
        break;
      }
      case GraphKind::RookExpanded: {
        std::vector<int> entry_map(sigma.begin(), sigma.begin() + m);
        std::vector<int> g(L.symbols(), -1);
        for (size_t v = 0; v < sigma.size(); ++v)
          if (tags[v].type == TagType::SymVertex) g[tags[v].index] = tags[sigma[v]].index;
        Isotopism partial;
        ok = triple_from_entry_map(L, entries, entry_map, partial);
        if (ok) {
          t = {partial.rows, partial.cols, Permutation(g)};
          ok = is_autotopism(L, t);
        }
        break;
      }
    }
    if (ok) out.autotopisms.push_back(std::move(t));
    else ++out.rejected;
  }
  std::sort(out.autotopisms.begin(), out.autotopisms.end());
  out.autotopisms.erase(std::unique(out.autotopisms.begin(), out.autotopisms.end()),
                        out.autotopisms.end());
  return out;
}

std::string export_graph(const EncodedGraph& eg) {
  std::ostringstream out;
  out << "graph " << eg.graph.n << "\n";
  for (int v = 0; v < eg.graph.n; ++v) {
    out << v << ' ' << eg.graph.color[v];
    for (int w : eg.graph.adj[v]) out << ' ' << w;
    out << "\n";
  }
  return out.str();
}

}  // namespace plr
