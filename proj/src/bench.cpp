#include "plr/bench.hpp"

#include <chrono>
#include <cmath>
#include <map>
#include <sstream>

#include "plr/io.hpp"

namespace plr {

std::string to_string(Suite suite) { return suite == Suite::SetA ? "a" : "b"; }

namespace {

uint64_t splitmix64(uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

uint64_t sample_seed(uint64_t base, int x, int index) {
  return splitmix64(base ^ splitmix64(static_cast<uint64_t>(x) << 32 ^
                                      static_cast<uint64_t>(index)));
}

PartialLatinRectangle draw_sample(const BenchConfig& cfg, int x, uint64_t seed) {
  RngStream rng(seed);
  return cfg.suite == Suite::SetA ? gen_set_a(cfg.r, cfg.s, cfg.n, x, rng)
                                  : gen_set_b(cfg.r, cfg.s, cfg.n, x, rng);
}

}  // namespace

BenchResult run_bench(const BenchConfig& cfg) {
  if (cfg.samples_per_x < 1 || cfg.x_values.empty() || cfg.methods.empty())
    throw PlrError(ErrorKind::BadParameters, "bench config incomplete");
  for (int x : cfg.x_values)
    if (x < 0 || (cfg.suite == Suite::SetB && x > cfg.r * cfg.s))
      throw PlrError(ErrorKind::BadParameters, "x out of range");

  BenchResult result;
  using clock = std::chrono::steady_clock;

  // warm-up: untimed samples so the first timed call is not paying for
  // cold caches
  for (const MethodSpec& method : cfg.methods)
    for (int w = 0; w < cfg.warmup; ++w) {
      const auto L = draw_sample(cfg, cfg.x_values.front(),
                                 sample_seed(~cfg.seed, cfg.x_values.front(), w));
      try {
        compute_autotopism_group(L, method, cfg.cap);
      } catch (const PlrError&) {
      }
    }

  for (int x : cfg.x_values) {
    for (int idx = 0; idx < cfg.samples_per_x; ++idx) {
      const uint64_t seed = sample_seed(cfg.seed, x, idx);
      const PartialLatinRectangle L = draw_sample(cfg, x, seed);
      for (const MethodSpec& method : cfg.methods) {
        SampleRecord rec;
        rec.method = method;
        rec.suite = cfg.suite;
        rec.r = cfg.r;
        rec.s = cfg.s;
        rec.n = cfg.n;
        rec.x = x;
        rec.entries = L.entry_count();
        rec.seed = seed;
        rec.computation_required = computation_required(L, method.invariant);
        const auto t0 = clock::now();
        try {
          rec.group_order = compute_autotopism_group(L, method, cfg.cap).total_order;
        } catch (const PlrError& e) {
          if (e.kind() != ErrorKind::CapExceeded) throw;
          rec.timeout = true;
        }
        const auto t1 = clock::now();
        rec.time_us = std::chrono::duration<double, std::micro>(t1 - t0).count();
        if (rec.time_us > cfg.time_budget_s * 1e6) rec.timeout = true;
        result.records.push_back(std::move(rec));
      }
    }
  }
  result.aggregates = aggregate_records(result.records);
  return result;
}

std::vector<Aggregate> aggregate_records(const std::vector<SampleRecord>& records) {
  std::map<std::pair<std::string, int>, std::vector<const SampleRecord*>> groups;
  for (const SampleRecord& rec : records)
    groups[{to_string(rec.method), rec.x}].push_back(&rec);
  std::vector<Aggregate> out;
  for (const auto& [key, recs] : groups) {
    Aggregate agg;
    agg.method = recs.front()->method;
    agg.x = key.second;
    agg.samples = static_cast<int>(recs.size());
    double sum = 0, sumsq = 0;
    int timed = 0, computed = 0;
    for (const SampleRecord* rec : recs) {
      if (rec->computation_required) ++computed;
      if (rec->timeout) {
        ++agg.timeouts;
        continue;
      }
      sum += rec->time_us;
      sumsq += rec->time_us * rec->time_us;
      ++timed;
    }
    if (timed > 0) {
      agg.mean_us = sum / timed;
      const double var = std::max(0.0, sumsq / timed - agg.mean_us * agg.mean_us);
      agg.stddev_us = std::sqrt(var);
    }
    agg.proportion_computed = static_cast<double>(computed) / agg.samples;
    out.push_back(agg);
  }
  return out;
}

std::string emit_csv(const std::vector<SampleRecord>& records) {
  std::ostringstream out;
  out << "method,invariant,suite,r,s,n,x,entries,seed,time_us,group_order,"
         "computation_required,timeout\n";
  for (const SampleRecord& rec : records) {
    out << to_string(rec.method.family) << ',' << to_string(rec.method.invariant) << ','
        << to_string(rec.suite) << ',' << rec.r << ',' << rec.s << ',' << rec.n << ','
        << rec.x << ',' << rec.entries << ',' << rec.seed << ',' << rec.time_us << ','
        << rec.group_order << ',' << (rec.computation_required ? 1 : 0) << ','
        << (rec.timeout ? 1 : 0) << "\n";
  }
  return out.str();
}

std::string emit_aggregates_csv(const std::vector<Aggregate>& aggregates) {
  std::ostringstream out;
  out << "method,invariant,x,samples,timeouts,mean_us,stddev_us,proportion_computed\n";
  for (const Aggregate& agg : aggregates) {
    out << to_string(agg.method.family) << ',' << to_string(agg.method.invariant) << ','
        << agg.x << ',' << agg.samples << ',' << agg.timeouts << ',' << agg.mean_us << ','
        << agg.stddev_us << ',' << agg.proportion_computed << "\n";
  }
  return out.str();
}

std::vector<SampleRecord> parse_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);  // header
  std::vector<SampleRecord> out;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string field;
    auto next = [&] {
      if (!std::getline(row, field, ',')) throw PlrError(ErrorKind::ParseError, "short CSV row");
      return field;
    };
    SampleRecord rec;
    rec.method.family = parse_method_family(next());
    rec.method.invariant = parse_invariant_kind(next());
    rec.suite = next() == "a" ? Suite::SetA : Suite::SetB;
    rec.r = std::stoi(next());
    rec.s = std::stoi(next());
    rec.n = std::stoi(next());
    rec.x = std::stoi(next());
    rec.entries = std::stoi(next());
    rec.seed = std::stoull(next());
    rec.time_us = std::stod(next());
    rec.group_order = BigInt(next());
    rec.computation_required = next() == "1";
    rec.timeout = next() == "1";
    out.push_back(std::move(rec));
  }
  return out;
}

AgreementReport verify_agreement(const std::vector<MethodSpec>& methods,
                                 const std::vector<PartialLatinRectangle>& samples) {
  std::vector<std::pair<std::string, MethodFn>> fns;
  for (const MethodSpec& spec : methods)
    fns.emplace_back(to_string(spec), [spec](const PartialLatinRectangle& L) {
      return compute_autotopism_group(L, spec);
    });
  return verify_agreement(fns, samples);
}

AgreementReport verify_agreement(const std::vector<std::pair<std::string, MethodFn>>& methods,
                                 const std::vector<PartialLatinRectangle>& samples) {
  if (methods.size() < 2)
    throw PlrError(ErrorKind::BadParameters, "agreement check needs at least two methods");
  AgreementReport report;
  for (size_t idx = 0; idx < samples.size(); ++idx) {
    const PartialLatinRectangle& L = samples[idx];
    AutotopismGroup reference;
    for (size_t mi = 0; mi < methods.size(); ++mi) {
      AutotopismGroup g = methods[mi].second(L);
      if (mi == 0) {
        reference = std::move(g);
        continue;
      }
      if (g.total_order != reference.total_order ||
          g.reduced_autotopisms != reference.reduced_autotopisms) {
        std::ostringstream detail;
        detail << methods[0].first << " order " << reference.total_order << " vs "
               << methods[mi].first << " order " << g.total_order;
        report.divergences.push_back({idx, detail.str(), format_plr(L)});
      }
    }
  }
  return report;
}

}  // namespace plr
