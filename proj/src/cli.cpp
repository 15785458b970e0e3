#include "plr/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "plr/bench.hpp"
#include "plr/io.hpp"

namespace plr {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PlrError(ErrorKind::ParseError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

uint64_t default_seed() {
  if (const char* env = std::getenv("PLR_SEED")) return std::stoull(env);
  return 1;
}

std::vector<MethodSpec> parse_method_list(const std::string& list) {
  std::vector<MethodSpec> out;
  std::istringstream in(list);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(parse_method_spec(item));
  return out;
}

std::vector<int> parse_int_list(const std::string& list) {
  std::vector<int> out;
  std::istringstream in(list);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(std::stoi(item));
  return out;
}

void print_class_matrix(const PartialLatinRectangle& L, const InvariantTable& table,
                        std::ostream& out) {
  for (int i = 0; i < L.rows(); ++i) {
    for (int j = 0; j < L.cols(); ++j) {
      if (j) out << ' ';
      const int c = table.class_at(i, j, L.cols());
      if (c < 0) out << '.';
      else out << (c + 1);
    }
    out << "\n";
  }
}

BenchConfig parse_bench_config(const std::string& text) {
  BenchConfig cfg;
  cfg.samples_per_x = 100;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string v) {
      const auto a = v.find_first_not_of(" \t\r");
      if (a == std::string::npos) return std::string();
      const auto b = v.find_last_not_of(" \t\r");
      return v.substr(a, b - a + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "suite") cfg.suite = value == "b" ? Suite::SetB : Suite::SetA;
    else if (key == "r") cfg.r = std::stoi(value);
    else if (key == "s") cfg.s = std::stoi(value);
    else if (key == "n") cfg.n = std::stoi(value);
    else if (key == "x") cfg.x_values = parse_int_list(value);
    else if (key == "samples") cfg.samples_per_x = std::stoi(value);
    else if (key == "methods") cfg.methods = parse_method_list(value);
    else if (key == "seed") cfg.seed = std::stoull(value);
    else if (key == "budget_s") cfg.time_budget_s = std::stod(value);
    else if (key == "warmup") cfg.warmup = std::stoi(value);
    else throw PlrError(ErrorKind::BadParameters, "unknown bench config key: " + key);
  }
  return cfg;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"autotopism groups of partial Latin rectangles"};
  app.require_subcommand(1);

  // compute
  std::string method_label = "plr-expanded", invariant_label = "none", input_path;
  auto* compute = app.add_subcommand("compute", "compute the autotopism group of a PLR file");
  compute->add_option("--method", method_label, "method family")->capture_default_str();
  compute->add_option("--invariant", invariant_label, "entry invariant")->capture_default_str();
  compute->add_option("file", input_path, "PLR file")->required();

  // generate
  std::string suite_label = "a", out_path;
  int gr = 5, gs = 5, gn = 5, gx = 0;
  uint64_t seed = default_seed();
  auto* generate = app.add_subcommand("generate", "generate a random PLR");
  generate->add_option("--suite", suite_label, "a or b")->capture_default_str();
  generate->add_option("--r", gr)->required();
  generate->add_option("--s", gs)->required();
  generate->add_option("--n", gn)->required();
  generate->add_option("--x", gx, "attempts (a) or entries (b)")->required();
  generate->add_option("--seed", seed);
  generate->add_option("--out", out_path, "output file (default stdout)");

  // invariants
  std::string kind_label = "sei", inv_path;
  auto* invariants = app.add_subcommand("invariants", "print the relabeled invariant matrix");
  invariants->add_option("--kind", kind_label, "sei, square, or combined")->capture_default_str();
  invariants->add_option("file", inv_path, "PLR file")->required();

  // agree
  std::string methods_label;
  int samples = 100, ar = 4, as = 4, an = 4;
  uint64_t aseed = default_seed();
  auto* agree = app.add_subcommand("agree", "cross-check methods on random PLRs");
  agree->add_option("--methods", methods_label, "comma list of family[:invariant]")->required();
  agree->add_option("--samples", samples);
  agree->add_option("--seed", aseed);
  agree->add_option("--r", ar);
  agree->add_option("--s", as);
  agree->add_option("--n", an);

  // bench
  std::string config_path, bench_out;
  auto* bench = app.add_subcommand("bench", "run the benchmark harness");
  bench->add_option("--config", config_path, "key=value config file")->required();
  bench->add_option("--out", bench_out, "output file prefix (default stdout)");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (compute->parsed()) {
      MethodSpec spec{parse_method_family(method_label), parse_invariant_kind(invariant_label)};
      const auto L = parse_plr_file(read_file(input_path));
      out << format_group(compute_autotopism_group(L, spec));
    } else if (generate->parsed()) {
      RngStream rng(seed);
      const auto L = suite_label == "b" ? gen_set_b(gr, gs, gn, gx, rng)
                                        : gen_set_a(gr, gs, gn, gx, rng);
      const std::string text = format_plr(L);
      if (out_path.empty()) {
        out << text;
      } else {
        std::ofstream file(out_path);
        if (!file) throw PlrError(ErrorKind::BadParameters, "cannot write " + out_path);
        file << text;
      }
    } else if (invariants->parsed()) {
      const auto L = parse_plr_file(read_file(inv_path));
      const auto table = compute_entry_invariant(L, parse_invariant_kind(kind_label));
      print_class_matrix(L, table, out);
    } else if (agree->parsed()) {
      const auto methods = parse_method_list(methods_label);
      std::vector<PartialLatinRectangle> plrs;
      for (int i = 0; i < samples; ++i) {
        RngStream rng(aseed + static_cast<uint64_t>(i));
        plrs.push_back(gen_set_a(ar, as, an, i % (2 * ar * as + 1), rng));
      }
      const AgreementReport report = verify_agreement(methods, plrs);
      if (!report.ok()) {
        for (const auto& d : report.divergences)
          err << "divergence on sample " << d.sample_index << ": " << d.detail << "\n"
              << d.plr_text;
        return 2;
      }
      out << "agreement: " << samples << " samples, " << methods.size() << " methods, ok\n";
    } else if (bench->parsed()) {
      const BenchConfig cfg = parse_bench_config(read_file(config_path));
      const BenchResult result = run_bench(cfg);
      if (bench_out.empty()) {
        out << emit_csv(result.records) << emit_aggregates_csv(result.aggregates);
      } else {
        std::ofstream recs(bench_out + ".csv"), aggs(bench_out + "_agg.csv");
        if (!recs || !aggs)
          throw PlrError(ErrorKind::BadParameters, "cannot write output files");
        recs << emit_csv(result.records);
        aggs << emit_aggregates_csv(result.aggregates);
      }
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace plr
