#include <doctest.h>

#include <numeric>

#include "plr/generators.hpp"
#include "plr/invariants.hpp"
#include "plr/search.hpp"

#include "fixtures.hpp"
#include "helpers.hpp"

using namespace plr;

namespace {

std::vector<std::vector<int>> class_matrix(const PartialLatinRectangle& L,
                                           const InvariantTable& table) {
  std::vector<std::vector<int>> out(L.rows(), std::vector<int>(L.cols(), 0));
  for (int i = 0; i < L.rows(); ++i)
    for (int j = 0; j < L.cols(); ++j) {
      const int c = table.class_at(i, j, L.cols());
      out[i][j] = c < 0 ? 0 : c + 1;
    }
  return out;
}

}  // namespace

TEST_CASE("SEI values of the worked example") {
  const auto L = fixtures::worked();
  const auto vals = sei_values(L);
  const auto entries = L.entries();
  REQUIRE(vals.size() == entries.size());
  // first entry (0,0,1): 3 entries in row 0, 3 in column 0, symbol 1 occurs 5 times
  CHECK(vals[0] == SeiValue{3, 3, 5});
  for (size_t t = 0; t < vals.size(); ++t) {
    int rc = 0, cc = 0, sc = 0;
    for (const Entry& e : entries) {
      rc += e.row == entries[t].row;
      cc += e.col == entries[t].col;
      sc += e.sym == entries[t].sym;
    }
    CHECK(vals[t] == SeiValue{rc, cc, sc});
  }
}

TEST_CASE("SEI relabeling of the worked example") {
  const auto L = fixtures::worked();
  const auto table = compute_entry_invariant(L, InvariantKind::Sei);
  CHECK(table.class_count == 10);
  CHECK(class_matrix(L, table) == fixtures::worked_sei_classes());
}

TEST_CASE("SEI line partitions of the worked example") {
  const auto L = fixtures::worked();
  const auto table = compute_entry_invariant(L, InvariantKind::Sei);
  const auto li = line_invariants(L, table);
  CHECK(li.row_partition ==
        std::vector<std::vector<int>>{{0, 5}, {1}, {2, 3}, {4}});
  CHECK(li.col_partition ==
        std::vector<std::vector<int>>{{0, 4}, {1}, {2, 7}, {3, 5}, {6, 8}});
}

TEST_CASE("square invariant relabeling of the order-5 square") {
  const auto L = fixtures::square5();
  const auto table = compute_entry_invariant(L, InvariantKind::Square);
  CHECK(table.class_count == 3);
  CHECK(class_matrix(L, table) == fixtures::square5_square_classes());
}

TEST_CASE("square invariant counts sum to (r-1)(s-1)") {
  RngStream rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const auto L = gen_set_a(4, 5, 4, trial, rng);
    for (const Entry& e : L.entries()) {
      const SquareValue v = square_invariant_naive(L, e);
      CHECK(std::accumulate(v.begin(), v.end(), 0) == (L.rows() - 1) * (L.cols() - 1));
      // a defined x or y cannot equal the entry's own symbol in its line,
      // and k=z requires z defined
      constexpr int kX = 1, kY = 2, kZ = 4, kD = 8, kE = 16;
      for (int mask = 0; mask < 32; ++mask)
        if (((mask & kD) && (mask & kZ)) || ((mask & kE) && ((mask & kX) || (mask & kY))))
          CHECK(v[mask] == 0);
    }
  }
}

TEST_CASE("bucketed square invariant matches the naive form") {
  RngStream rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    const int r = rng.uniform_int(1, 5), s = rng.uniform_int(1, 5);
    const int n = rng.uniform_int(std::max(r, s), 6);
    const auto L = gen_set_a(r, s, n, rng.uniform_int(0, 2 * r * s), rng);
    const auto table = compute_entry_invariant(L, InvariantKind::Square);
    const auto entries = L.entries();
    // identical classes must have identical naive vectors and vice versa
    std::vector<SquareValue> naive;
    naive.reserve(entries.size());
    for (const Entry& e : entries) naive.push_back(square_invariant_naive(L, e));
    for (size_t a = 0; a < entries.size(); ++a)
      for (size_t b = a + 1; b < entries.size(); ++b)
        CHECK((table.class_of[a] == table.class_of[b]) == (naive[a] == naive[b]));
  }
}

TEST_CASE("combined invariant refines both parts") {
  RngStream rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const auto L = gen_set_a(4, 4, 4, trial, rng);
    const auto sei = compute_entry_invariant(L, InvariantKind::Sei);
    const auto sq = compute_entry_invariant(L, InvariantKind::Square);
    const auto both = compute_entry_invariant(L, InvariantKind::Combined);
    const size_t m = L.entries().size();
    for (size_t a = 0; a < m; ++a)
      for (size_t b = a + 1; b < m; ++b) {
        if (both.class_of[a] == both.class_of[b]) {
          CHECK(sei.class_of[a] == sei.class_of[b]);
          CHECK(sq.class_of[a] == sq.class_of[b]);
        }
        if (sei.class_of[a] != sei.class_of[b] || sq.class_of[a] != sq.class_of[b])
          CHECK(both.class_of[a] != both.class_of[b]);
      }
  }
}

TEST_CASE("invariant classes are preserved by autotopisms") {
  // the defining property: entries in the same orbit share a class
  const auto L = fixtures::worked();
  const auto entries = L.entries();
  const Isotopism t{Permutation::from_cycles(fixtures::worked_alpha(), 6),
                    Permutation::from_cycles(fixtures::worked_beta(), 9),
                    Permutation::from_cycles(fixtures::worked_gamma(), 7)};
  for (const InvariantKind kind :
       {InvariantKind::Sei, InvariantKind::Square, InvariantKind::Combined}) {
    const auto table = compute_entry_invariant(L, kind);
    for (size_t a = 0; a < entries.size(); ++a) {
      const Entry image{t.rows(entries[a].row), t.cols(entries[a].col),
                        t.syms(entries[a].sym)};
      const int c = table.class_at(image.row, image.col, L.cols());
      CHECK(c == table.class_of[a]);
    }
  }
}

TEST_CASE("triviality certificate: all-distinct entry classes") {
  const auto L = PartialLatinRectangle::from_grid(2, 2, 2, {{1, 2}, {0, 1}});
  const auto table = compute_entry_invariant(L, InvariantKind::Sei);
  CHECK(table.class_count == 3);
  CHECK(triviality_certificate(L, table) == Certificate::TrivialDistinctEntries);
  CHECK(brute_force_atop(L).total_order == 1);
}

TEST_CASE("triviality certificate is sound and both branches occur") {
  int distinct = 0, discrete = 0;
  for (const auto& L : helpers::all_plrs(3, 3, 3)) {
    const auto red = reduce(L);
    if (red.reduced.entry_count() == 0) continue;
    const auto table = compute_entry_invariant(red.reduced, InvariantKind::Combined);
    const auto cert = triviality_certificate(red.reduced, table);
    if (cert == Certificate::NotCertified) continue;
    CHECK(brute_force_atop(red.reduced).total_order == 1);
    distinct += cert == Certificate::TrivialDistinctEntries;
    discrete += cert == Certificate::TrivialDiscreteLines;
  }
  CHECK(distinct > 0);
  CHECK(discrete > 0);
}

TEST_CASE("worked example is not certified trivial") {
  const auto L = fixtures::worked();
  for (const InvariantKind kind :
       {InvariantKind::Sei, InvariantKind::Square, InvariantKind::Combined}) {
    const auto table = compute_entry_invariant(L, kind);
    CHECK(triviality_certificate(L, table) == Certificate::NotCertified);
  }
}

TEST_CASE("column vectors and supports of the worked example") {
  const auto L = fixtures::worked();
  const auto table = compute_entry_invariant(L, InvariantKind::Sei);
  const auto cv = column_vectors(L, table);
  REQUIRE(cv.vec.size() == 9);
  CHECK(cv.support[0] == std::vector<int>{0, 1, 4});
  CHECK(cv.support[4] == std::vector<int>{1, 4, 5});
  // vec entries carry the dense class at each filled row
  CHECK(cv.vec[0][0] == table.class_at(0, 0, 9));
  CHECK(cv.vec[0][2] == -1);
}
