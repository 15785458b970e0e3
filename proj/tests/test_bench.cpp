#include <doctest.h>

#include <cmath>

#include "plr/bench.hpp"
#include "plr/search.hpp"

#include "helpers.hpp"

using namespace plr;

namespace {

BenchConfig tiny_config() {
  BenchConfig cfg;
  cfg.suite = Suite::SetA;
  cfg.r = cfg.s = cfg.n = 3;
  cfg.x_values = {2, 6};
  cfg.samples_per_x = 5;
  cfg.methods = {{MethodFamily::AlphaBeta, InvariantKind::None},
                 {MethodFamily::PlrExpanded, InvariantKind::Sei}};
  cfg.seed = 21;
  cfg.warmup = 1;
  return cfg;
}

}  // namespace

TEST_CASE("benchmark run shape and determinism") {
  const auto cfg = tiny_config();
  const auto result = run_bench(cfg);
  CHECK(result.records.size() == 2u * 5u * 2u);  // x values * samples * methods
  for (const auto& rec : result.records) {
    CHECK(rec.r == 3);
    CHECK((rec.x == 2 || rec.x == 6));
    CHECK(rec.time_us >= 0);
    CHECK_FALSE(rec.timeout);
    CHECK(rec.group_order >= 1);
  }
  // the same (x, index) sample is shared by all methods: equal group orders
  for (size_t i = 0; i + 1 < result.records.size(); i += 2) {
    CHECK(result.records[i].seed == result.records[i + 1].seed);
    CHECK(result.records[i].group_order == result.records[i + 1].group_order);
  }
  const auto again = run_bench(cfg);
  REQUIRE(again.records.size() == result.records.size());
  for (size_t i = 0; i < result.records.size(); ++i) {
    CHECK(again.records[i].seed == result.records[i].seed);
    CHECK(again.records[i].group_order == result.records[i].group_order);
  }
}

TEST_CASE("CSV round trip") {
  const auto result = run_bench(tiny_config());
  const std::string csv = emit_csv(result.records);
  CHECK(csv.rfind("method,invariant,suite,r,s,n,x,entries,seed,time_us,group_order,"
                  "computation_required,timeout\n", 0) == 0);
  const auto parsed = parse_csv(csv);
  REQUIRE(parsed.size() == result.records.size());
  for (size_t i = 0; i < parsed.size(); ++i) {
    CHECK(parsed[i].method == result.records[i].method);
    CHECK(parsed[i].suite == result.records[i].suite);
    CHECK(parsed[i].x == result.records[i].x);
    CHECK(parsed[i].entries == result.records[i].entries);
    CHECK(parsed[i].seed == result.records[i].seed);
    CHECK(parsed[i].group_order == result.records[i].group_order);
    CHECK(parsed[i].computation_required == result.records[i].computation_required);
    CHECK(parsed[i].timeout == result.records[i].timeout);
  }
}

TEST_CASE("aggregates") {
  const auto result = run_bench(tiny_config());
  const auto aggs = aggregate_records(result.records);
  CHECK(aggs.size() == 4);  // 2 methods * 2 x values
  for (const auto& agg : aggs) {
    CHECK(agg.samples == 5);
    CHECK(agg.timeouts == 0);
    CHECK(agg.mean_us >= 0);
    CHECK(agg.stddev_us >= 0);
    CHECK(agg.proportion_computed >= 0);
    CHECK(agg.proportion_computed <= 1);
  }
  // recomputing from the emitted CSV gives the same aggregates
  const auto reparsed = aggregate_records(parse_csv(emit_csv(result.records)));
  REQUIRE(reparsed.size() == aggs.size());
  for (size_t i = 0; i < aggs.size(); ++i) {
    CHECK(reparsed[i].method == aggs[i].method);
    CHECK(reparsed[i].x == aggs[i].x);
    CHECK(std::abs(reparsed[i].mean_us - aggs[i].mean_us) < 1e-3 * (1 + aggs[i].mean_us));
    CHECK(reparsed[i].proportion_computed == aggs[i].proportion_computed);
  }
  const std::string agg_csv = emit_aggregates_csv(aggs);
  CHECK(agg_csv.rfind("method,invariant,x,", 0) == 0);
}

TEST_CASE("bad configs are rejected") {
  BenchConfig cfg = tiny_config();
  cfg.x_values.clear();
  CHECK_THROWS_AS(run_bench(cfg), PlrError);
  cfg = tiny_config();
  cfg.methods.clear();
  CHECK_THROWS_AS(run_bench(cfg), PlrError);
  cfg = tiny_config();
  cfg.suite = Suite::SetB;
  cfg.x_values = {10};  // exceeds r*s
  CHECK_THROWS_AS(run_bench(cfg), PlrError);
}

TEST_CASE("agreement verification catches a lying method") {
  RngStream rng(77);
  std::vector<PartialLatinRectangle> samples;
  for (int t = 0; t < 10; ++t) samples.push_back(gen_set_a(3, 3, 3, t, rng));

  const std::vector<MethodSpec> honest = {{MethodFamily::AlphaBeta, InvariantKind::None},
                                          {MethodFamily::Entrywise, InvariantKind::Sei},
                                          {MethodFamily::RookExpanded, InvariantKind::Square}};
  CHECK(verify_agreement(honest, samples).ok());

  std::vector<std::pair<std::string, MethodFn>> fns = {
      {"honest", [](const PartialLatinRectangle& L) { return brute_force_atop(L); }},
      {"liar",
       [](const PartialLatinRectangle& L) {
         auto g = brute_force_atop(L);
         g.total_order += 1;
         return g;
       }},
  };
  const auto report = verify_agreement(fns, samples);
  CHECK(report.divergences.size() == samples.size());
  CHECK(report.divergences.front().sample_index == 0);
  CHECK_FALSE(report.divergences.front().plr_text.empty());
  CHECK(report.divergences.front().detail.find("liar") != std::string::npos);

  CHECK_THROWS_AS(verify_agreement(std::vector<MethodSpec>{honest[0]}, samples), PlrError);
}
