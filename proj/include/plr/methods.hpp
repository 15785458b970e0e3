#pragma once

#include <string>

#include "plr/autotopism.hpp"
#include "plr/invariants.hpp"

namespace plr {

enum class MethodFamily {
  AlphaBeta,
  AlphaBetaCV,
  Entrywise,
  Mmm,
  Bipartite,
  BipartiteOrbitsEntrywise,
  BipartiteOrbitsAlphaBeta,
  PlrFlat,
  PlrExpanded,
  RookFlat,
  RookExpanded,
};

constexpr MethodFamily kAllFamilies[] = {
    MethodFamily::AlphaBeta,      MethodFamily::AlphaBetaCV,
    MethodFamily::Entrywise,      MethodFamily::Mmm,
    MethodFamily::Bipartite,      MethodFamily::BipartiteOrbitsEntrywise,
    MethodFamily::BipartiteOrbitsAlphaBeta,
    MethodFamily::PlrFlat,        MethodFamily::PlrExpanded,
    MethodFamily::RookFlat,       MethodFamily::RookExpanded,
};

struct MethodSpec {
  MethodFamily family = MethodFamily::PlrExpanded;
  InvariantKind invariant = InvariantKind::None;

  bool operator==(const MethodSpec&) const = default;
};

std::string to_string(MethodFamily family);
std::string to_string(InvariantKind kind);
std::string to_string(const MethodSpec& spec);

MethodFamily parse_method_family(const std::string& label);
InvariantKind parse_invariant_kind(const std::string& label);
/// Parses "family" or "family:invariant", e.g. "plr-expanded:square".
MethodSpec parse_method_spec(const std::string& label);

/// Computes the autotopism group via the given method: reduces first, stops
/// early when the invariant certifies a trivial group, then runs the
/// family's search or graph pipeline.
AutotopismGroup compute_autotopism_group(const PartialLatinRectangle& L, const MethodSpec& spec,
                                         long cap = 1'000'000);

/// True when the group must be searched for: the reduction plus the
/// invariant's triviality certificate do not settle it.  Method-family
/// independent by construction.
bool computation_required(const PartialLatinRectangle& L, InvariantKind kind);

}  // namespace plr
