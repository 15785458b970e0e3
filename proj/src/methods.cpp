#include "plr/methods.hpp"

#include <stdexcept>

#include "plr/graph_encodings.hpp"
#include "plr/search.hpp"

namespace plr {

std::string to_string(MethodFamily family) {
  switch (family) {
    case MethodFamily::AlphaBeta: return "alpha-beta";
    case MethodFamily::AlphaBetaCV: return "alpha-beta-cv";
    case MethodFamily::Entrywise: return "entrywise";
    case MethodFamily::Mmm: return "mmm";
    case MethodFamily::Bipartite: return "bipartite";
    case MethodFamily::BipartiteOrbitsEntrywise: return "bipartite-orbits-ew";
    case MethodFamily::BipartiteOrbitsAlphaBeta: return "bipartite-orbits-ab";
    case MethodFamily::PlrFlat: return "plr-flat";
    case MethodFamily::PlrExpanded: return "plr-expanded";
    case MethodFamily::RookFlat: return "rook-flat";
    case MethodFamily::RookExpanded: return "rook-expanded";
  }
  return "?";
}

std::string to_string(InvariantKind kind) {
  switch (kind) {
    case InvariantKind::None: return "none";
    case InvariantKind::Sei: return "sei";
    case InvariantKind::Square: return "square";
    case InvariantKind::Combined: return "combined";
  }
  return "?";
}

std::string to_string(const MethodSpec& spec) {
  return to_string(spec.family) + ":" + to_string(spec.invariant);
}

MethodFamily parse_method_family(const std::string& label) {
  for (MethodFamily f : kAllFamilies)
    if (to_string(f) == label) return f;
  throw PlrError(ErrorKind::BadParameters, "unknown method family: " + label);
}

InvariantKind parse_invariant_kind(const std::string& label) {
  for (InvariantKind k : {InvariantKind::None, InvariantKind::Sei, InvariantKind::Square,
                          InvariantKind::Combined})
    if (to_string(k) == label) return k;
  throw PlrError(ErrorKind::BadParameters, "unknown invariant kind: " + label);
}

MethodSpec parse_method_spec(const std::string& label) {
  const auto colon = label.find(':');
  MethodSpec spec;
  if (colon == std::string::npos) {
    spec.family = parse_method_family(label);
  } else {
    spec.family = parse_method_family(label.substr(0, colon));
    spec.invariant = parse_invariant_kind(label.substr(colon + 1));
  }
  return spec;
}

namespace {

GraphKind graph_kind_of(MethodFamily family) {
  switch (family) {
    case MethodFamily::Mmm: return GraphKind::Mmm;
    case MethodFamily::Bipartite: return GraphKind::Bipartite;
    case MethodFamily::PlrFlat: return GraphKind::PlrFlat;
    case MethodFamily::PlrExpanded: return GraphKind::PlrExpanded;
    case MethodFamily::RookFlat: return GraphKind::RookFlat;
    case MethodFamily::RookExpanded: return GraphKind::RookExpanded;
    default: throw std::logic_error("not a graph family");
  }
}

std::vector<Isotopism> graph_family_autotopisms(const PartialLatinRectangle& reduced,
                                                MethodFamily family,
                                                const InvariantTable* table, long cap) {
  const EncodedGraph eg = build_graph(reduced, graph_kind_of(family), table);
  const AutomorphismList autos = automorphisms(eg.graph, cap);
  if (autos.cap_hit)
    throw PlrError(ErrorKind::CapExceeded, "graph automorphism cap exceeded");
  return decode_automorphisms(reduced, graph_kind_of(family), eg.tags, autos.perms).autotopisms;
}

// Finest row/column partitions from the orbits of the bipartite encoding.
std::pair<std::vector<int>, std::vector<int>> bipartite_orbit_constraints(
    const PartialLatinRectangle& reduced, const InvariantTable* table, long cap) {
  const EncodedGraph eg = build_graph(reduced, GraphKind::Bipartite, table);
  const OrbitResult res = orbits(eg.graph, cap);
  if (res.cap_hit)
    throw PlrError(ErrorKind::CapExceeded, "orbit computation cap exceeded");
  std::vector<int> row_orbit(reduced.rows(), -1), col_orbit(reduced.cols(), -1);
  for (size_t c = 0; c < res.cells.size(); ++c)
    for (int v : res.cells[c]) {
      const VertexTag& tag = eg.tags[v];
      if (tag.type == TagType::RowVertex) row_orbit[tag.index] = static_cast<int>(c);
      else col_orbit[tag.index] = static_cast<int>(c);
    }
  return {std::move(row_orbit), std::move(col_orbit)};
}

}  // namespace

AutotopismGroup compute_autotopism_group(const PartialLatinRectangle& L, const MethodSpec& spec,
                                         long cap) {
  Reduction red = reduce(L);
  const PartialLatinRectangle& R = red.reduced;
  if (R.entry_count() == 0)
    return make_group(red, {Isotopism::identity(R.rows(), R.cols(), R.symbols())});

  InvariantTable table;
  const bool use_invariant = spec.invariant != InvariantKind::None;
  if (use_invariant) {
    table = compute_entry_invariant(R, spec.invariant);
    if (triviality_certificate(R, table) != Certificate::NotCertified)
      return make_group(red, {Isotopism::identity(R.rows(), R.cols(), R.symbols())});
  }

  SearchOptions opts;
  opts.invariant = spec.invariant;
  opts.autotopism_cap = cap;

  std::vector<Isotopism> autos;
  switch (spec.family) {
    case MethodFamily::AlphaBeta:
      autos = alphabeta_reduced(R, opts);
      break;
    case MethodFamily::AlphaBetaCV:
      opts.use_cv = true;
      autos = alphabeta_reduced(R, opts);
      break;
    case MethodFamily::Entrywise:
      autos = entrywise_reduced(R, opts);
      break;
    case MethodFamily::BipartiteOrbitsAlphaBeta:
      opts.orbit_constraints = bipartite_orbit_constraints(R, use_invariant ? &table : nullptr, cap);
      autos = alphabeta_reduced(R, opts);
      break;
    case MethodFamily::BipartiteOrbitsEntrywise:
      opts.orbit_constraints = bipartite_orbit_constraints(R, use_invariant ? &table : nullptr, cap);
      autos = entrywise_reduced(R, opts);
      break;
    default:
      autos = graph_family_autotopisms(R, spec.family, use_invariant ? &table : nullptr, cap);
      break;
  }
  return make_group(red, std::move(autos));
}

bool computation_required(const PartialLatinRectangle& L, InvariantKind kind) {
  Reduction red = reduce(L);
  if (red.reduced.entry_count() == 0) return false;
  if (kind == InvariantKind::None) return true;
  const InvariantTable table = compute_entry_invariant(red.reduced, kind);
  return triviality_certificate(red.reduced, table) == Certificate::NotCertified;
}

}  // namespace plr
