#pragma once

#include <variant>
#include <vector>

#include "plr/bigint.hpp"
#include "plr/rectangle.hpp"

namespace plr {

/// Why no symbol permutation completes a given (alpha, beta).
enum class GammaClash {
  TargetUndefined,   // L[alpha(i), beta(j)] is empty for some entry
  ForwardConflict,   // gamma(k) already set to something else
  BackwardConflict,  // gamma^-1(k') already set to something else
};

/// The forced partial symbol map for a given (alpha, beta), defined exactly
/// on the used symbols; every extension to a permutation of [n] is the
/// symbol part of an autotopism, and there are completion_count of them.
struct GammaCompletion {
  std::vector<int> forced;  // size n, -1 where undefined
  BigInt completion_count;

  bool total() const;
  /// Requires total(); the unique gamma when all symbols are used.
  Permutation as_permutation() const;
};

using GammaOutcome = std::variant<GammaCompletion, GammaClash>;

GammaOutcome complete_symbol_permutation(const PartialLatinRectangle& L,
                                         const Permutation& alpha,
                                         const Permutation& beta);

/// Removal of empty rows/columns and relabeling of used symbols onto [n']
/// preserving ascending order.  The maps take reduced indices to originals.
struct Reduction {
  PartialLatinRectangle reduced;
  BigInt row_factor, col_factor, sym_factor;  // (r-r')!, (s-s')!, (n-n')!
  std::vector<int> row_map, col_map, sym_map;
};

Reduction reduce(const PartialLatinRectangle& L);

/// The autotopism group: the explicit group of the reduced rectangle plus
/// the factorial factors accounting for empty lines and unused symbols.
struct AutotopismGroup {
  std::vector<Isotopism> reduced_autotopisms;  // sorted, contains identity
  BigInt row_factor = 1, col_factor = 1, sym_factor = 1;
  BigInt total_order = 1;
};

/// Sorts, dedupes, and computes total_order = factors * |autos|.
AutotopismGroup make_group(const Reduction& red, std::vector<Isotopism> autos);

}  // namespace plr
