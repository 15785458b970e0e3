#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "plr/autotopism.hpp"
#include "plr/invariants.hpp"

namespace plr {

struct SearchOptions {
  InvariantKind invariant = InvariantKind::None;
  bool use_cv = false;
  /// Orbit ids per reduced row / reduced column (from the bipartite orbit
  /// computation); a line may only map within its orbit.
  std::optional<std::pair<std::vector<int>, std::vector<int>>> orbit_constraints;
  long autotopism_cap = 1'000'000;
};

/// Row permutations first, then column permutations, each leaf closed by
/// the forced-symbol-map construction; optional invariant partition, column
/// vector, and orbit pruning.
AutotopismGroup alphabeta_atop(const PartialLatinRectangle& L, const SearchOptions& opts = {});

/// Entry-to-entry backtracking with simultaneous alpha/beta/gamma clash checks.
AutotopismGroup entrywise_atop(const PartialLatinRectangle& L, const SearchOptions& opts = {});

/// Test oracle: enumerates all (alpha, beta) pairs of the reduced rectangle.
AutotopismGroup brute_force_atop(const PartialLatinRectangle& L, double max_pairs = 1e8);

/// Internal layers operating on an already-reduced rectangle (no empty
/// lines, all symbols used); exposed for the method dispatcher.
std::vector<Isotopism> alphabeta_reduced(const PartialLatinRectangle& reduced,
                                         const SearchOptions& opts);
std::vector<Isotopism> entrywise_reduced(const PartialLatinRectangle& reduced,
                                         const SearchOptions& opts);

}  // namespace plr
