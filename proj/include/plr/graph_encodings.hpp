#pragma once

#include <string>
#include <vector>

#include "plr/aut_engine.hpp"
#include "plr/invariants.hpp"
#include "plr/rectangle.hpp"

namespace plr {

enum class GraphKind { Mmm, Bipartite, PlrFlat, PlrExpanded, RookFlat, RookExpanded };

enum class TagType { EntryVertex, RowVertex, ColVertex, SymVertex, RowShadow, ColShadow, SymShadow };

/// Maps a graph vertex back to an entry (by index into L.entries()) or a
/// row/column/symbol index.
struct VertexTag {
  TagType type;
  int index;
};

struct EncodedGraph {
  ColoredGraph graph;
  std::vector<VertexTag> tags;
};

/// 0/1 fill pattern of L; the biadjacency matrix of the bipartite encoding.
std::vector<std::vector<bool>> incidence_matrix(const PartialLatinRectangle& L);

/// Builds the requested encoding.  An optional invariant table refines the
/// color classes of entry vertices (for the bipartite encoding, which has no
/// entry vertices, the induced row/column line classes refine the two sides).
EncodedGraph build_graph(const PartialLatinRectangle& L, GraphKind kind,
                         const InvariantTable* coloring = nullptr);

struct DecodedAutotopisms {
  std::vector<Isotopism> autotopisms;  // sorted, deduped
  int rejected = 0;                    // engine automorphisms that were not autotopisms
};

/// Turns engine automorphisms of the encoding back into autotopisms of L.
/// L must have no empty lines or unused symbols (i.e. be reduced).
DecodedAutotopisms decode_automorphisms(const PartialLatinRectangle& L, GraphKind kind,
                                        const std::vector<VertexTag>& tags,
                                        const std::vector<std::vector<int>>& autos);

/// One vertex per line: "<vertex> <color> <neighbors...>", preceded by a
/// "graph <n>" header.  For debugging and cross-checks with external tools.
std::string export_graph(const EncodedGraph& eg);

}  // namespace plr
