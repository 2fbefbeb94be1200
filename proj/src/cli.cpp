#include "tisp/cli.hpp"

#include <algorithm>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "tisp/io.hpp"
#include "tisp/miner.hpp"
#include "tisp/oracle.hpp"
#include "tisp/synth.hpp"

namespace tisp::cli {

namespace {

// Thrown for bad option values that CLI11 cannot validate on its own.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Itemset parse_target(const std::string& text) {
  std::vector<ItemId> ids;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) throw UsageError("--target: empty item in '" + text + "'");
    try {
      ids.emplace_back(tok);
    } catch (const Error& e) {
      throw UsageError(std::string("--target: ") + e.what());
    }
  }
  if (ids.empty()) throw UsageError("--target must name at least one item");
  return Itemset(std::move(ids));
}

MinSupport parse_min_supp(const std::string& text) {
  try {
    return MinSupport::parse(text);
  } catch (const Error&) {
    throw UsageError("--min-supp must be a decimal fraction in (0, 1], got '" + text + "'");
  }
}

io::InputFormat input_format(const std::string& name, const std::string& path) {
  if (name.empty()) return io::infer_input_format(path);
  try {
    return io::parse_input_format(name);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

struct MineOptions {
  std::string input;
  std::string format;
  std::string target;
  std::string min_supp;
  std::optional<std::size_t> max_length;
  std::string output = "table";
  std::string dump_dir;
  unsigned threads = 1;
};

struct GenOptions {
  std::size_t sequences = 4;
  std::size_t items = 4;
  std::size_t max_events = 6;
  std::uint64_t seed = 0;
  std::string out;
  std::string format;
};

struct CheckOptions {
  std::string input;
  std::string format;
  std::string target;
  std::string min_supp;
  std::size_t max_length = 5;
};

int run_mine(const MineOptions& o, std::ostream& out) {
  MiningConfig cfg{TargetSpec{parse_target(o.target)}, parse_min_supp(o.min_supp), o.max_length,
                   std::max(1u, o.threads)};
  if (cfg.max_length && *cfg.max_length < 2) throw UsageError("--max-length must be at least 2");
  io::ReportFormat report;
  try {
    report = io::parse_report_format(o.output);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  const auto fmt = input_format(o.format, o.input);

  const Dataset d = io::load_dataset(o.input, fmt);
  const MiningTrace trace = mine_with_trace(d, cfg);
  if (!o.dump_dir.empty()) io::dump_intermediate(trace, o.dump_dir);
  out << io::render_report(trace.patterns, report);
  return kExitOk;
}

int run_gen(const GenOptions& o, std::ostream& out) {
  if (o.sequences == 0 || o.items == 0 || o.max_events < 2) {
    throw UsageError("gen needs --sequences >= 1, --items >= 1 and --max-events >= 2");
  }
  synth::SynthParams p;
  p.sequences = o.sequences;
  p.items = o.items;
  p.max_events = o.max_events;
  p.max_time = std::max<Timestamp>(30, static_cast<Timestamp>(o.max_events) - 1);
  const Dataset d = synth::generate_dataset(p, o.seed);
  io::save_dataset(o.out, d, input_format(o.format, o.out));
  out << "wrote " << d.n() << " sequences to " << o.out << "\n";
  return kExitOk;
}

int run_check(const CheckOptions& o, std::ostream& out, std::ostream& err) {
  const Itemset target = parse_target(o.target);
  const MinSupport min_supp = parse_min_supp(o.min_supp);
  if (o.max_length < 2 || o.max_length > 5) throw UsageError("--max-length must be between 2 and 5");
  const Dataset d = io::load_dataset(o.input, input_format(o.format, o.input));
  oracle::check_guards(d);

  const MiningTrace trace = mine_with_trace(d, MiningConfig{TargetSpec{target}, min_supp, o.max_length, 1});
  const auto expected = oracle::exhaustive_mine(d, oracle::OracleConfig{TargetSpec{target}, min_supp, o.max_length});

  int mismatches = 0;
  for (const auto& level : trace.interval_levels) {
    for (const auto& [p, s] : level.candidates) {
      const Support naive = oracle::naive_support(trace.working, p);
      if (naive != s) {
        ++mismatches;
        err << "support mismatch for " << render_pattern(p) << ": miner " << s.count << "/" << s.denominator
            << ", oracle " << naive.count << "/" << naive.denominator << "\n";
      }
    }
  }
  if (trace.patterns != expected) {
    ++mismatches;
    err << "pattern sets differ\n--- miner\n"
        << io::render_report(trace.patterns, io::ReportFormat::Table) << "--- oracle\n"
        << io::render_report(expected, io::ReportFormat::Table);
  }
  if (mismatches) return kExitMismatch;
  out << "ok: " << trace.patterns.size() << " patterns agree with the exhaustive oracle\n";
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Mine target-oriented sequential patterns with time intervals", "tisp"};
  app.require_subcommand(1);

  MineOptions mine_opts;
  auto* mine_cmd = app.add_subcommand("mine", "Mine patterns ending with a target itemset");
  mine_cmd->add_option("--input", mine_opts.input, "Dataset path")->required();
  mine_cmd->add_option("--format", mine_opts.format, "csv or jsonl (default: from extension)");
  mine_cmd->add_option("--target", mine_opts.target, "Target itemset, comma-separated items")->required();
  mine_cmd->add_option("--min-supp", mine_opts.min_supp, "Minimum support in (0, 1]")->required();
  mine_cmd->add_option("--max-length", mine_opts.max_length, "Longest pattern to mine");
  mine_cmd->add_option("--output", mine_opts.output, "json or table")->capture_default_str();
  mine_cmd->add_option("--dump-intermediate", mine_opts.dump_dir, "Directory for per-level tables");
  mine_cmd->add_option("--threads", mine_opts.threads, "Support-counting threads")->capture_default_str();

  GenOptions gen_opts;
  auto* gen_cmd = app.add_subcommand("gen", "Write a seeded synthetic dataset");
  gen_cmd->add_option("--sequences", gen_opts.sequences, "Number of sequences")->required();
  gen_cmd->add_option("--items", gen_opts.items, "Alphabet size")->required();
  gen_cmd->add_option("--max-events", gen_opts.max_events, "Maximum events per sequence")->required();
  gen_cmd->add_option("--seed", gen_opts.seed, "RNG seed")->required();
  gen_cmd->add_option("--out", gen_opts.out, "Output path")->required();
  gen_cmd->add_option("--format", gen_opts.format, "csv or jsonl (default: from extension)");

  CheckOptions check_opts;
  auto* check_cmd = app.add_subcommand("check", "Compare the miner against the exhaustive oracle");
  check_cmd->add_option("--input", check_opts.input, "Dataset path")->required();
  check_cmd->add_option("--format", check_opts.format, "csv or jsonl (default: from extension)");
  check_cmd->add_option("--target", check_opts.target, "Target itemset")->required();
  check_cmd->add_option("--min-supp", check_opts.min_supp, "Minimum support in (0, 1]")->required();
  check_cmd->add_option("--max-length", check_opts.max_length, "Pattern length cap (2-5)")->capture_default_str();

  std::vector<const char*> argv{"tisp"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (mine_cmd->parsed()) return run_mine(mine_opts, out);
    if (gen_cmd->parsed()) return run_gen(gen_opts, out);
    return run_check(check_opts, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error (" << to_string(e.code()) << "): " << e.what() << "\n";
    return kExitData;
  }
}

}  // namespace tisp::cli
