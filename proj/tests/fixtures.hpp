#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "plr/rectangle.hpp"

namespace fixtures {

// 6x9 rectangle over 7 symbols with exactly one nontrivial autotopism.
inline std::vector<std::vector<int>> worked_grid() {
  return {
      {1, 0, 2, 0, 0, 0, 3, 0, 0},
      {2, 0, 0, 4, 1, 5, 6, 0, 7},
      {0, 1, 5, 3, 0, 4, 0, 0, 0},
      {0, 2, 0, 5, 0, 3, 0, 4, 0},
      {4, 3, 0, 0, 5, 0, 1, 0, 2},
      {0, 0, 0, 0, 2, 0, 0, 1, 3},
  };
}

inline plr::PartialLatinRectangle worked() {
  return plr::PartialLatinRectangle::from_grid(6, 9, 7, worked_grid());
}

// Expected dense SEI class matrix of worked() (1-based classes, 0 = empty),
// classes numbered by first occurrence in a row-major scan.
inline std::vector<std::vector<int>> worked_sei_classes() {
  return {
      {1, 0, 2, 0, 0, 0, 1, 0, 0},
      {3, 0, 0, 4, 3, 4, 5, 0, 5},
      {0, 6, 7, 6, 0, 8, 0, 0, 0},
      {0, 6, 0, 8, 0, 6, 0, 7, 0},
      {9, 10, 0, 0, 9, 0, 10, 0, 10},
      {0, 0, 0, 0, 1, 0, 0, 2, 1},
  };
}

inline const char* worked_alpha() { return "(1 6)(3 4)"; }
inline const char* worked_beta() { return "(1 5)(3 8)(4 6)(7 9)"; }
inline const char* worked_gamma() { return "(1 2)(4 5)(6 7)"; }

// Order-5 Latin square whose square invariant has exactly three classes.
inline std::vector<std::vector<int>> square5_grid() {
  return {
      {2, 1, 3, 4, 5},
      {1, 4, 2, 5, 3},
      {4, 3, 5, 1, 2},
      {5, 2, 1, 3, 4},
      {3, 5, 4, 2, 1},
  };
}

inline plr::PartialLatinRectangle square5() {
  return plr::PartialLatinRectangle::from_grid(5, 5, 5, square5_grid());
}

inline std::vector<std::vector<int>> square5_square_classes() {
  return {
      {1, 2, 1, 1, 2},
      {2, 1, 1, 1, 2},
      {1, 1, 1, 2, 2},
      {1, 1, 2, 1, 2},
      {2, 2, 2, 2, 3},
  };
}

inline std::string data_path(const std::string& name) {
  return std::string(PLR_TEST_DATA_DIR) + "/" + name;
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace fixtures
