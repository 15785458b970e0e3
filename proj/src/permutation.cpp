#include "plr/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace plr {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  const int m = degree();
  std::vector<char> seen(m, 0);
  for (int v : image_) {
    if (v < 0 || v >= m || seen[v]) throw std::invalid_argument("not a bijection");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<int> img(degree);
  for (int i = 0; i < degree; ++i) img[i] = i;
  Permutation p;
  p.image_ = std::move(img);
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (image_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(degree());
  for (int i = 0; i < degree(); ++i) inv[image_[i]] = i;
  Permutation p;
  p.image_ = std::move(inv);
  return p;
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw std::invalid_argument("degree mismatch");
  std::vector<int> img(p.degree());
  for (int i = 0; i < p.degree(); ++i) img[i] = p(q(i));
  Permutation r;
  r.image_ = std::move(img);
  return r;
}

std::string Permutation::to_cycles() const {
  std::ostringstream out;
  std::vector<char> seen(degree(), 0);
  bool any = false;
  for (int i = 0; i < degree(); ++i) {
    if (seen[i] || image_[i] == i) continue;
    any = true;
    out << '(';
    int j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = 1;
      if (!first) out << ' ';
      out << (j + 1);
      first = false;
      j = image_[j];
    }
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

Permutation Permutation::from_cycles(std::string_view text, int degree) {
  std::vector<int> img(degree);
  for (int i = 0; i < degree; ++i) img[i] = i;
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(') throw std::invalid_argument("expected '('");
    ++pos;
    std::vector<int> cycle;
    skip_ws();
    while (pos < text.size() && text[pos] != ')') {
      int v = 0;
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        throw std::invalid_argument("expected number in cycle");
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        v = v * 10 + (text[pos++] - '0');
      if (v < 1 || v > degree) throw std::invalid_argument("cycle element out of range");
      cycle.push_back(v - 1);
      skip_ws();
    }
    if (pos >= text.size()) throw std::invalid_argument("unterminated cycle");
    ++pos;  // ')'
    std::vector<char> in_cycle(degree, 0);
    for (int v : cycle) {
      if (in_cycle[v]) throw std::invalid_argument("repeated element in cycle");
      in_cycle[v] = 1;
    }
    for (size_t t = 0; t < cycle.size(); ++t) {
      int from = cycle[t], to = cycle[(t + 1) % cycle.size()];
      if (img[from] != from && img[from] != to)
        throw std::invalid_argument("overlapping cycles");
      img[from] = to;
    }
    skip_ws();
  }
  return Permutation(std::move(img));
}

}  // namespace plr
