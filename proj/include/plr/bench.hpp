#pragma once

#include <functional>
#include <string>
#include <vector>

#include "plr/generators.hpp"
#include "plr/methods.hpp"

namespace plr {

enum class Suite { SetA, SetB };

std::string to_string(Suite suite);

struct BenchConfig {
  Suite suite = Suite::SetA;
  int r = 5, s = 5, n = 5;
  std::vector<int> x_values;      // attempts (set A) or target entries (set B)
  int samples_per_x = 10000;
  std::vector<MethodSpec> methods;
  uint64_t seed = 1;
  double time_budget_s = 10.0;    // per sample; exceeding samples are flagged
  int warmup = 10;                // untimed samples per method
  long cap = 1'000'000;
};

struct SampleRecord {
  MethodSpec method;
  Suite suite = Suite::SetA;
  int r = 0, s = 0, n = 0, x = 0, entries = 0;
  uint64_t seed = 0;  // per-sample generator seed
  double time_us = 0;
  BigInt group_order = 0;
  bool computation_required = false;
  bool timeout = false;
};

struct Aggregate {
  MethodSpec method;
  int x = 0;
  int samples = 0;
  int timeouts = 0;
  double mean_us = 0;    // over non-timeout samples
  double stddev_us = 0;
  double proportion_computed = 0;  // over all samples
};

struct BenchResult {
  std::vector<SampleRecord> records;
  std::vector<Aggregate> aggregates;
};

BenchResult run_bench(const BenchConfig& cfg);

/// Recomputes aggregates from raw records (grouped by method then x).
std::vector<Aggregate> aggregate_records(const std::vector<SampleRecord>& records);

std::string emit_csv(const std::vector<SampleRecord>& records);
std::string emit_aggregates_csv(const std::vector<Aggregate>& aggregates);
std::vector<SampleRecord> parse_csv(const std::string& text);

struct AgreementReport {
  struct Divergence {
    size_t sample_index;
    std::string detail;
    std::string plr_text;
  };
  std::vector<Divergence> divergences;
  bool ok() const { return divergences.empty(); }
};

using MethodFn = std::function<AutotopismGroup(const PartialLatinRectangle&)>;

/// Asserts equal total order and equal reduced autotopism sets across all
/// methods on every sample.
AgreementReport verify_agreement(const std::vector<MethodSpec>& methods,
                                 const std::vector<PartialLatinRectangle>& samples);
AgreementReport verify_agreement(const std::vector<std::pair<std::string, MethodFn>>& methods,
                                 const std::vector<PartialLatinRectangle>& samples);

}  // namespace plr
