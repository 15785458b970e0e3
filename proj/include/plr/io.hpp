#pragma once

#include <string>

#include "plr/autotopism.hpp"
#include "plr/rectangle.hpp"

namespace plr {

/// Text format: header "PLR r s n", then r lines of s whitespace-separated
/// tokens, each "." or a 1-based symbol.
PartialLatinRectangle parse_plr_file(const std::string& text);
std::string format_plr(const PartialLatinRectangle& L);

/// "order <N>", a factors line, then one reduced autotopism per line as
/// three cycle-notation permutations, sorted lexicographically.
std::string format_group(const AutotopismGroup& g);

}  // namespace plr
