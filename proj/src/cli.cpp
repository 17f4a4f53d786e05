#include "lefschetz/cli.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "lefschetz/analysis.hpp"
#include "lefschetz/inverse_systems.hpp"
#include "lefschetz/linsys.hpp"
#include "lefschetz/oracle.hpp"
#include "lefschetz/report_json.hpp"
#include "lefschetz/sweep.hpp"

namespace lefschetz::cli {

namespace {

using nlohmann::json;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct OracleFlags {
  PrimeFieldConfig cfg = PrimeFieldConfig::from_env();

  void attach(CLI::App* cmd) {
    cmd->add_option("--prime", cfg.prime, "prime modulus for the oracle (env LEFSCHETZ_PRIME)");
    cmd->add_option("--trials", cfg.trials, "random specializations per oracle query");
    cmd->add_option("--seed", cfg.seed, "seed for the oracle streams (env LEFSCHETZ_SEED)");
  }
};

PowerSequence checked_powers(const std::vector<Int>& powers, std::size_t min_r) {
  if (powers.size() < min_r) throw UsageError("need at least " + std::to_string(min_r) + " powers");
  for (Int a : powers)
    if (a < 1) throw UsageError("powers must be positive");
  return PowerSequence(powers);
}

std::string join(const std::vector<Int>& v, const char* sep = ",") {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
  return os.str();
}

int cmd_hf(const std::vector<Int>& raw, const std::string& format, bool use_oracle, const PrimeFieldConfig& cfg,
           std::ostream& out, std::ostream& err) {
  const PowerSequence powers = checked_powers(raw, 3);
  DegreeFallback fallback;
  if (use_oracle) fallback = [&](Int j) { return oracle_quotient_dim(powers, j, std::nullopt, cfg); };
  std::vector<Int> hf;
  try {
    hf = hilbert_function(powers, fallback);
  } catch (const UndeterminedError& e) {
    err << e.what() << " (rerun with --oracle)\n";
    return kInconclusive;
  }
  if (format == "json") {
    out << json{{"powers", powers.values()}, {"hilbert_function", hf}}.dump() << '\n';
  } else if (format == "csv") {
    out << "degree,dim\n";
    for (std::size_t j = 0; j < hf.size(); ++j) out << j << ',' << hf[j] << '\n';
  } else {
    out << "degree  dim\n";
    for (std::size_t j = 0; j < hf.size(); ++j) out << std::setw(6) << j << "  " << hf[j] << '\n';
    out << "hilbert function: " << join(hf) << '\n';
  }
  return kOk;
}

int cmd_linsys(Int degree, const std::vector<Int>& mults, bool trace, bool use_oracle, const std::string& format,
               const PrimeFieldConfig& cfg, std::ostream& out, std::ostream& err) {
  if (degree < 0) throw UsageError("--degree must be >= 0");
  const LinearSystem sys{degree, mults};
  const DimResult res = dim_linear_system(sys);
  std::optional<Int> oracle;
  if (use_oracle) oracle = oracle_linsys_dim(sys, cfg);
  const bool agree = !oracle || !res.exact() || *oracle == *res.value;

  if (format == "json") {
    json j = {{"system", to_json(sys)}, {"exact", res.exact()}};
    j["dim"] = res.exact() ? json(*res.value) : json(nullptr);
    if (trace) j["trace"] = to_json(res.trace);
    if (oracle) {
      j["oracle"] = *oracle;
      j["agree"] = agree;
    }
    out << j.dump() << '\n';
  } else {
    std::ostringstream sys_text;
    sys_text << sys;
    if (res.exact())
      out << "dim " << sys_text.str() << " = " << *res.value << '\n';
    else
      out << "dim " << sys_text.str() << " = undetermined (terminal " << res.trace.terminal << ")\n";
    if (trace) {
      for (const ReductionStep& s : res.trace.steps) {
        out << "  " << to_string(s.kind);
        if (s.kind == StepKind::Cremona) out << "(m=" << s.shift << ")";
        out << ": " << s.before << " -> " << s.after << '\n';
      }
    }
    if (oracle) out << "oracle = " << *oracle << (res.exact() ? (agree ? "  AGREE" : "  DISAGREE") : "") << '\n';
  }
  if (!agree) return kFailure;
  if (!res.exact() && !oracle) {
    err << "reductions left the system undetermined (rerun with --oracle)\n";
    return kInconclusive;
  }
  return kOk;
}

int cmd_verify(const std::vector<Int>& raw, Int shift, bool use_oracle, const std::string& format,
               const PrimeFieldConfig& cfg, std::ostream& out, std::ostream& err) {
  const PowerSequence powers = checked_powers(raw, 3);
  if (shift < 1) throw UsageError("--shift must be >= 1");
  const std::optional<PrimeFieldConfig> oracle_cfg = use_oracle ? std::optional(cfg) : std::nullopt;

  RankReport report = shift == 2 ? verify_theorem(powers, oracle_cfg) : rank_profile(powers, shift, Engine::Combinatorial);
  std::optional<RankReport> oracle;
  std::vector<Int> disagreements;
  if (use_oracle) {
    oracle = rank_profile(powers, shift, Engine::Oracle, cfg);
    for (RankRow& row : report.rows) {
      const auto it = std::find_if(oracle->rows.begin(), oracle->rows.end(),
                                   [&](const RankRow& o) { return o.degree == row.degree; });
      if (!row.determined && it != oracle->rows.end()) row = *it;
      if (it == oracle->rows.end() || !row.same_values(*it)) disagreements.push_back(row.degree);
    }
    if (oracle->rows.size() != report.rows.size() && disagreements.empty())
      disagreements.push_back(report.rows.empty() ? shift : report.rows.back().degree + 1);
    report.verdict = aggregate_verdict(report.rows);
  }

  const std::string engine = use_oracle ? "Combinatorial+Oracle" : "Combinatorial";
  if (format == "json") {
    json j = to_json(report, engine, oracle_cfg);
    j["case_data"] = to_json(compute_case_data(powers));
    if (oracle) {
      json rows = json::array();
      for (const RankRow& row : oracle->rows) rows.push_back(to_json(row));
      j["oracle_rows"] = std::move(rows);
      j["oracle_verdict"] = to_string(oracle->verdict.kind);
      j["engines_agree"] = disagreements.empty();
      j["disagreements"] = disagreements;
    }
    out << j.dump() << '\n';
  } else {
    out << "x L^" << shift << " on R/I, powers " << powers << "\n";
    out << "degree  source  target  quotient  rank  maximal\n";
    for (const RankRow& row : report.rows) {
      out << std::setw(6) << row.degree;
      if (row.determined)
        out << std::setw(8) << row.dim_source << std::setw(8) << row.dim_target << std::setw(10) << row.dim_quotient
            << std::setw(6) << row.rank << "  " << (row.maximal ? "yes" : "NO") << '\n';
      else
        out << "  undetermined\n";
    }
    out << "verdict: " << to_string(report.verdict.kind) << '\n';
  }

  if (!report.verdict.failures.empty() || (oracle && oracle->verdict.kind == VerdictKind::FailuresAt)) {
    err << "maximal rank fails at degrees " << join(report.verdict.failures) << '\n';
    if (oracle) {
      for (Int d : report.verdict.failures)
        for (const RankRow& o : oracle->rows)
          if (o.degree == d)
            err << "  degree " << d << ": oracle rank " << o.rank << " of min(" << o.dim_source << ',' << o.dim_target
                << ")\n";
    }
    return kFailure;
  }
  if (!disagreements.empty()) {
    err << "engines disagree at degrees " << join(disagreements) << '\n';
    return kFailure;
  }
  if (report.verdict.kind == VerdictKind::Inconclusive) {
    err << "some degrees are undetermined (rerun with --oracle)\n";
    return kInconclusive;
  }
  return kOk;
}

int cmd_sweep(const std::string& r_range, const std::string& a_range, Int count, std::uint64_t seed, int jobs,
              const std::string& out_path, const PrimeFieldConfig& cfg, std::ostream& out, std::ostream& err) {
  SweepOptions opts;
  try {
    opts.r = parse_range(r_range);
    opts.a = parse_range(a_range);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  opts.count = count;
  opts.seed = seed;
  opts.jobs = jobs;
  opts.cfg = cfg;
  if (count < 1) throw UsageError("--count must be >= 1");
  if (opts.r.lo < 3 || opts.a.lo < 1) throw UsageError("ranges need r >= 3 and a >= 1");

  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path, std::ios::app);
    if (!file) throw UsageError("cannot open " + out_path);
  }
  const SweepSummary s = run_sweep(opts, out_path.empty() ? nullptr : &file);
  out << "sequences: " << s.total << " (case I: " << s.case_i << ", case II: " << s.case_ii << ")\n"
      << "x L^2 failures: " << s.failures << "\n"
      << "x L failures: " << s.wlp_failures << "\n"
      << "engine disagreements: " << s.disagreements << "\n"
      << "errors: " << s.errors << '\n';
  if (!s.ok()) err << "sweep found failures or disagreements\n";
  return s.ok() ? kOk : kFailure;
}

int run_app(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hilbert functions and Lefschetz-type maximal rank for powers of general linear forms in K[x,y,z]"};
  app.require_subcommand(1);

  std::vector<Int> powers, mults;
  std::string format = "table";
  bool use_oracle = false, trace = false;
  Int degree = 0, shift = 2, count = 100;
  std::string r_range = "5..10", a_range = "1..12", out_path;
  int jobs = 1;
  OracleFlags oracle_flags;
  std::uint64_t sweep_seed = oracle_flags.cfg.seed;

  auto* hf = app.add_subcommand("hf", "Hilbert function of R/(L_1^a_1, ..., L_r^a_r)");
  hf->add_option("--powers", powers, "comma-separated powers a_i")->required()->delimiter(',');
  hf->add_option("--format", format)->check(CLI::IsMember({"table", "json", "csv"}));
  hf->add_flag("--oracle", use_oracle, "resolve undetermined degrees with the oracle");
  oracle_flags.attach(hf);

  auto* linsys = app.add_subcommand("linsys", "dimension of the fat-point system L(j; b_1, ..., b_n)");
  linsys->add_option("--degree", degree)->required();
  linsys->add_option("--mults", mults, "comma-separated multiplicities")->delimiter(',');
  linsys->add_flag("--trace", trace, "print the reduction steps");
  linsys->add_flag("--oracle", use_oracle, "cross-check against random points over Z/p");
  linsys->add_option("--format", format)->check(CLI::IsMember({"table", "json"}));
  oracle_flags.attach(linsys);

  auto* verify = app.add_subcommand("verify", "maximal rank of x L^k in every degree");
  verify->add_option("--powers", powers)->required()->delimiter(',');
  verify->add_option("--shift", shift, "k (default 2)");
  verify->add_flag("--oracle", use_oracle, "also run the oracle engine and compare");
  verify->add_option("--format", format)->check(CLI::IsMember({"table", "json"}));
  oracle_flags.attach(verify);

  auto* sweep = app.add_subcommand("sweep", "seeded random campaign over both engines");
  sweep->add_option("--r", r_range, "range of r, e.g. 5..10");
  sweep->add_option("--a", a_range, "range of powers, e.g. 1..12");
  sweep->add_option("--count", count);
  sweep->add_option("--seed", sweep_seed, "sampling and oracle seed (env LEFSCHETZ_SEED)");
  sweep->add_option("--jobs", jobs);
  sweep->add_option("--out", out_path, "append JSONL records here");
  sweep->add_option("--prime", oracle_flags.cfg.prime);
  sweep->add_option("--trials", oracle_flags.cfg.trials);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  if (verify->parsed() && format == "table" && verify->count("--format") == 0) format = "json";

  try {
    const PrimeFieldConfig& cfg = oracle_flags.cfg;
    if (use_oracle) cfg.validate(0);
    if (hf->parsed()) return cmd_hf(powers, format, use_oracle, cfg, out, err);
    if (linsys->parsed()) return cmd_linsys(degree, mults, trace, use_oracle, format, cfg, out, err);
    if (verify->parsed()) return cmd_verify(powers, shift, use_oracle, format, cfg, out, err);
    return cmd_sweep(r_range, a_range, count, sweep_seed, jobs, out_path, cfg, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ConfigError& e) {
    err << "configuration error: " << e.what() << '\n';
    return kUsage;
  } catch (const ContractError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kFailure;
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  try {
    return run_app(argc, argv, out, err);
  } catch (const ConfigError& e) {
    // environment defaults are read before parsing
    err << "configuration error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace lefschetz::cli
