#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace plr {

/// A permutation of {0, ..., m-1} stored as a one-line image array.
/// Cycle notation (1-based) is an I/O format only.
class Permutation {
 public:
  Permutation() = default;  // degree 0
  explicit Permutation(std::vector<int> image);

  static Permutation identity(int degree);

  int degree() const { return static_cast<int>(image_.size()); }
  int operator()(int i) const { return image_[i]; }
  const std::vector<int>& image() const { return image_; }

  bool is_identity() const;
  Permutation inverse() const;

  /// Function composition: (p * q)(i) == p(q(i)).
  friend Permutation operator*(const Permutation& p, const Permutation& q);

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

  /// E.g. "(1 6)(3 4)"; fixed points omitted; identity prints "()".
  std::string to_cycles() const;
  static Permutation from_cycles(std::string_view text, int degree);

 private:
  std::vector<int> image_;
};

}  // namespace plr
