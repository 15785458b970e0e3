#include "plr/aut_engine.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <map>
#include <numeric>
#include <stdexcept>

namespace plr {

ColoredGraph::ColoredGraph(int vertex_count, std::vector<int> colors)
    : n(vertex_count), color(std::move(colors)), adj(vertex_count) {
  if (color.empty()) color.assign(n, 0);
  if (static_cast<int>(color.size()) != n)
    throw std::invalid_argument("color vector size mismatch");
}

void ColoredGraph::add_edge(int u, int v) {
  if (u == v) throw std::invalid_argument("self loop");
  if (u < 0 || v < 0 || u >= n || v >= n) throw std::invalid_argument("vertex out of range");
  adj[u].push_back(v);
  adj[v].push_back(u);
}

void ColoredGraph::finalize() {
  for (auto& nb : adj) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  }
  // densify colors preserving numeric order
  std::map<int, int> remap;
  for (int c : color) remap.emplace(c, 0);
  int next = 0;
  for (auto& [c, id] : remap) id = next++;
  for (int& c : color) c = remap[c];
  words_ = (n + 63) / 64;
  bits_.assign(static_cast<size_t>(n) * words_, 0);
  for (int u = 0; u < n; ++u)
    for (int v : adj[u]) bits_[static_cast<size_t>(u) * words_ + (v >> 6)] |= 1ull << (v & 63);
}

namespace {

// Partition with stable cell ids; `order` holds the ids in partition order.
struct Partition {
  std::vector<std::vector<int>> cell;  // by id
  std::vector<int> order;              // ids in partition order
  std::vector<int> cell_of;            // vertex -> id

  static Partition from_cells(const OrderedPartition& cells, int n) {
    Partition p;
    p.cell_of.assign(n, -1);
    for (const auto& c : cells) {
      int id = static_cast<int>(p.cell.size());
      p.cell.push_back(c);
      p.order.push_back(id);
      for (int v : c) p.cell_of[v] = id;
    }
    return p;
  }

  OrderedPartition to_cells() const {
    OrderedPartition out;
    for (int id : order) out.push_back(cell[id]);
    return out;
  }

  bool discrete() const {
    for (int id : order)
      if (cell[id].size() > 1) return false;
    return true;
  }

  std::vector<int> sizes() const {
    std::vector<int> out;
    out.reserve(order.size());
    for (int id : order) out.push_back(static_cast<int>(cell[id].size()));
    return out;
  }
};

// Worklist refinement: process splitter cells until equitable.  Fragments
// of a split cell replace the parent in place, ordered by neighbor-count
// key ascending; all fragments are re-queued.
void refine(const ColoredGraph& g, Partition& p, std::deque<int> queue) {
  std::vector<int> count(g.n, 0);
  std::vector<int> touched;  // vertices with nonzero count
  std::vector<char> queued(p.cell.size(), 0);
  for (int id : queue) queued[id] = 1;

  while (!queue.empty()) {
    const int splitter = queue.front();
    queue.pop_front();
    queued[splitter] = 0;

    touched.clear();
    for (int v : p.cell[splitter])
      for (int w : g.adj[v]) {
        if (count[w] == 0) touched.push_back(w);
        ++count[w];
      }

    // affected cells in current partition order
    std::vector<int> affected;
    for (int w : touched) {
      const int c = p.cell_of[w];
      if (p.cell[c].size() > 1) affected.push_back(c);
    }
    std::sort(affected.begin(), affected.end());
    affected.erase(std::unique(affected.begin(), affected.end()), affected.end());
    std::vector<int> pos_of(p.cell.size(), -1);
    for (size_t i = 0; i < p.order.size(); ++i) pos_of[p.order[i]] = static_cast<int>(i);
    std::sort(affected.begin(), affected.end(),
              [&](int a, int b) { return pos_of[a] < pos_of[b]; });

    for (int c : affected) {
      // group members by count, ascending key, stable within a group
      std::map<int, std::vector<int>> groups;
      for (int v : p.cell[c]) groups[count[v]].push_back(v);
      if (groups.size() <= 1) continue;

      std::vector<int> new_ids;
      bool first = true;
      for (auto& [key, verts] : groups) {
        (void)key;
        int id;
        if (first) {
          id = c;
          p.cell[c] = std::move(verts);
          first = false;
        } else {
          id = static_cast<int>(p.cell.size());
          for (int v : verts) p.cell_of[v] = id;
          p.cell.push_back(std::move(verts));
          queued.push_back(0);
        }
        new_ids.push_back(id);
      }
      // replace c in order by the fragment ids
      auto it = std::find(p.order.begin(), p.order.end(), c);
      assert(it != p.order.end());
      it = p.order.erase(it);
      p.order.insert(it, new_ids.begin(), new_ids.end());
      for (int id : new_ids)
        if (!queued[id]) {
          queue.push_back(id);
          queued[id] = 1;
        }
    }

    for (int w : touched) count[w] = 0;
  }
}

Partition initial_partition(const ColoredGraph& g) {
  int max_color = -1;
  for (int c : g.color) max_color = std::max(max_color, c);
  OrderedPartition cells(static_cast<size_t>(max_color + 1));
  for (int v = 0; v < g.n; ++v) cells[g.color[v]].push_back(v);
  cells.erase(std::remove_if(cells.begin(), cells.end(),
                             [](const std::vector<int>& c) { return c.empty(); }),
              cells.end());
  return Partition::from_cells(cells, g.n);
}

std::deque<int> all_ids(const Partition& p) {
  return std::deque<int>(p.order.begin(), p.order.end());
}

// Individualization-refinement search over one partition; automorphisms are
// read off by comparing discrete leaves against the first (base) leaf.
class AutSearch {
 public:
  AutSearch(const ColoredGraph& g, long cap) : g_(g), cap_(cap) {}

  AutomorphismList run() {
    AutomorphismList out;
    if (g_.n == 0) {
      out.perms.push_back({});
      return out;
    }
    Partition p = initial_partition(g_);
    refine(g_, p, all_ids(p));
    dfs(p, 0);
    out.perms = std::move(autos_);
    out.cap_hit = cap_hit_;
    out.complete = !cap_hit_;
    return out;
  }

 private:
  // returns false to abort the whole search (cap hit)
  bool dfs(const Partition& p, int depth) {
    const std::vector<int> sig = p.sizes();
    if (depth < static_cast<int>(base_sig_.size())) {
      if (sig != base_sig_[depth]) return true;  // prune: cannot match base leaf
    } else {
      base_sig_.push_back(sig);  // leftmost path defines the base trace
    }

    if (p.discrete()) {
      std::vector<int> lab;
      lab.reserve(g_.n);
      for (int id : p.order) lab.push_back(p.cell[id].front());
      if (base_lab_.empty()) {
        base_lab_ = lab;
        std::vector<int> ident(g_.n);
        std::iota(ident.begin(), ident.end(), 0);
        autos_.push_back(std::move(ident));
      } else {
        std::vector<int> sigma(g_.n);
        for (int k = 0; k < g_.n; ++k) sigma[base_lab_[k]] = lab[k];
        if (is_automorphism(sigma)) {
          if (static_cast<long>(autos_.size()) >= cap_) {
            cap_hit_ = true;
            return false;
          }
          autos_.push_back(std::move(sigma));
        }
      }
      return true;
    }

    // target cell: first non-singleton of minimum size
    int target_pos = -1;
    size_t best = static_cast<size_t>(-1);
    for (size_t i = 0; i < p.order.size(); ++i) {
      const size_t sz = p.cell[p.order[i]].size();
      if (sz > 1 && sz < best) {
        best = sz;
        target_pos = static_cast<int>(i);
      }
    }
    const int target_id = p.order[target_pos];
    const std::vector<int> branch = p.cell[target_id];
    for (int v : branch) {
      Partition child = p;
      // split target cell into {v} followed by the rest
      std::vector<int> rest;
      rest.reserve(branch.size() - 1);
      for (int u : branch)
        if (u != v) rest.push_back(u);
      const int rest_id = static_cast<int>(child.cell.size());
      child.cell[target_id] = {v};
      child.cell.push_back(std::move(rest));
      for (int u : child.cell[rest_id]) child.cell_of[u] = rest_id;
      auto it = std::find(child.order.begin(), child.order.end(), target_id);
      child.order.insert(it + 1, rest_id);
      refine(g_, child, {target_id, rest_id});
      if (!dfs(child, depth + 1)) return false;
    }
    return true;
  }

  bool is_automorphism(const std::vector<int>& sigma) const {
    for (int u = 0; u < g_.n; ++u) {
      if (g_.color[u] != g_.color[sigma[u]]) return false;
      for (int w : g_.adj[u])
        if (!g_.adjacent(sigma[u], sigma[w])) return false;
    }
    return true;
  }

  const ColoredGraph& g_;
  long cap_;
  bool cap_hit_ = false;
  std::vector<int> base_lab_;
  std::vector<std::vector<int>> base_sig_;
  std::vector<std::vector<int>> autos_;
};

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

OrderedPartition equitable_refinement(const ColoredGraph& g, OrderedPartition p) {
  Partition part = Partition::from_cells(p, g.n);
  refine(g, part, all_ids(part));
  return part.to_cells();
}

AutomorphismList automorphisms(const ColoredGraph& g, long cap) {
  return AutSearch(g, cap).run();
}

OrbitResult orbits(const ColoredGraph& g, long cap) {
  const AutomorphismList autos = automorphisms(g, cap);
  OrbitResult out;
  out.cap_hit = autos.cap_hit;
  UnionFind uf(g.n);
  for (const auto& sigma : autos.perms)
    for (int v = 0; v < g.n; ++v) uf.unite(v, sigma[v]);
  std::map<int, std::vector<int>> groups;
  for (int v = 0; v < g.n; ++v) groups[uf.find(v)].push_back(v);
  for (auto& [root, cell] : groups) {
    (void)root;
    out.cells.push_back(std::move(cell));
  }
  std::sort(out.cells.begin(), out.cells.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

}  // namespace plr
