#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dyadkde/bandwidth.hpp"
#include "dyadkde/density.hpp"
#include "dyadkde/design.hpp"
#include "dyadkde/edge_list_io.hpp"
#include "dyadkde/error.hpp"
#include "dyadkde/kernel.hpp"
#include "dyadkde/parallel.hpp"
#include "dyadkde/simulation.hpp"

namespace dyadkde::cli {
namespace {

using nlohmann::ordered_json;

// Bad flag values or combinations (exit 2).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid input data (exit 1).
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { Csv, Json };

struct Common {
  std::string format = "csv";
  std::string out_path;
  bool full_precision = false;

  Format fmt() const { return format == "json" ? Format::Json : Format::Csv; }
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--output", c.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  sub->add_option("--out", c.out_path, "Write to this file instead of stdout");
  sub->add_flag("--full-precision", c.full_precision,
                "Print CSV numbers with 17 significant digits (default 6)");
}

std::string num(double v, bool full) {
  char buf[64];
  std::snprintf(buf, sizeof buf, full ? "%.17g" : "%.6g", v);
  return buf;
}

// Writes to --out when given, stdout otherwise.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& stdout_stream) : stream_(&stdout_stream) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw UsageError("--out: cannot open `" + path + "` for writing");
      stream_ = &file_;
    }
  }
  std::ostream& get() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

std::vector<double> parse_points(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto first = item.find_first_not_of(' ');
    const auto last = item.find_last_not_of(' ');
    if (first == std::string::npos) throw UsageError("--points: empty entry");
    item = item.substr(first, last - first + 1);
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc{} || ptr != item.data() + item.size() || !std::isfinite(v)) {
      throw UsageError("--points: `" + item + "` is not a finite number");
    }
    out.push_back(v);
  }
  if (out.empty()) throw UsageError("--points: no values given");
  return out;
}

std::vector<double> parse_grid(const std::string& text) {
  const auto a = text.find(':');
  const auto b = a == std::string::npos ? std::string::npos : text.find(':', a + 1);
  if (b == std::string::npos) throw UsageError("--grid: expected lo:hi:count");
  double lo = 0.0;
  double hi = 0.0;
  long count = 0;
  try {
    std::size_t used = 0;
    lo = std::stod(text.substr(0, a), &used);
    hi = std::stod(text.substr(a + 1, b - a - 1), &used);
    count = std::stol(text.substr(b + 1), &used);
  } catch (const std::exception&) {
    throw UsageError("--grid: expected lo:hi:count, got `" + text + "`");
  }
  if (count < 1) throw UsageError("--grid: count must be at least 1");
  if (count > 1 && !(hi > lo)) throw UsageError("--grid: hi must exceed lo");
  std::vector<double> out(static_cast<std::size_t>(count));
  for (long k = 0; k < count; ++k) {
    out[static_cast<std::size_t>(k)] =
        count == 1 ? lo : lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(count - 1);
  }
  return out;
}

KernelSpec kernel_or_usage(const std::string& name) {
  try {
    return kernel_by_name(name);
  } catch (const Error& e) {
    throw UsageError(std::string("--kernel: ") + e.what());
  }
}

EdgeListFile load_input(const std::string& path) {
  try {
    return read_edge_list(std::filesystem::path(path));
  } catch (const Error& e) {
    throw DataError(e.what());
  }
}

// ---------------------------------------------------------------- estimate

struct EstimateArgs {
  Common common;
  std::string input;
  std::string points;
  std::string grid;
  std::optional<double> bandwidth;
  std::string rule;
  std::optional<double> omega2;
  std::optional<double> b;
  std::string kernel = "epanechnikov";
  double alpha = 0.05;
};

void setup_estimate(CLI::App& app, EstimateArgs& a) {
  auto* sub = app.add_subcommand("estimate", "Dyadic kernel density estimates with robust SEs");
  sub->add_option("--input", a.input, "Edge-list CSV (header i,j,w)")->required();
  auto* pts = sub->add_option("--points", a.points, "Comma-separated evaluation points");
  auto* grd = sub->add_option("--grid", a.grid, "Evaluation grid lo:hi:count");
  pts->excludes(grd);
  grd->excludes(pts);
  auto* bw = sub->add_option("--bandwidth", a.bandwidth, "Bandwidth h > 0");
  auto* rl = sub->add_option("--rule", a.rule, "Bandwidth rule")
                 ->check(CLI::IsMember({"mse-oracle", "undersmooth", "knife-edge"}));
  bw->excludes(rl);
  rl->excludes(bw);
  sub->add_option("--omega2", a.omega2, "Omega2 for the mse-oracle rule");
  sub->add_option("--b", a.b, "Bias coefficient B for the mse-oracle rule");
  sub->add_option("--kernel", a.kernel, "epanechnikov or gaussian")->capture_default_str();
  sub->add_option("--alpha", a.alpha, "Wald interval level is 1 - alpha")->capture_default_str();
  add_common(sub, a.common);
}

int run_estimate(const EstimateArgs& a, std::ostream& out) {
  if (a.points.empty() == a.grid.empty()) {
    throw UsageError("estimate: exactly one of --points or --grid is required");
  }
  if (!a.bandwidth && a.rule.empty()) {
    throw UsageError("estimate: exactly one of --bandwidth or --rule is required");
  }
  if (a.bandwidth && !(*a.bandwidth > 0.0)) throw UsageError("--bandwidth: must be positive");
  if (!(a.alpha > 0.0 && a.alpha < 1.0)) throw UsageError("--alpha: must lie in (0, 1)");
  if (a.rule == "mse-oracle" && (!a.omega2 || !a.b)) {
    throw UsageError("--rule mse-oracle requires --omega2 and --b");
  }
  const KernelSpec kernel = kernel_or_usage(a.kernel);
  const std::vector<double> points = a.points.empty() ? parse_grid(a.grid) : parse_points(a.points);

  const EdgeListFile file = load_input(a.input);
  const DyadicSample& sample = file.sample;
  if (sample.n_nodes() < 3) {
    throw DataError(a.input + ": TooFewNodes: variance estimation needs N >= 3, file has N=" +
                    std::to_string(sample.n_nodes()));
  }

  BandwidthChoice choice{BandwidthRule::MseOracle, 0.0, 0.0, 0.0};
  std::string rule_name = "fixed";
  try {
    if (a.bandwidth) {
      choice.h = *a.bandwidth;
    } else {
      const BandwidthRule rule = bandwidth_rule_by_name(a.rule);
      rule_name = std::string(to_string(rule));
      switch (rule) {
        case BandwidthRule::MseOracle:
          choice = mse_oracle_bandwidth(sample, *a.omega2, *a.b);
          break;
        case BandwidthRule::Undersmooth:
          choice = undersmooth_bandwidth(sample, kernel);
          break;
        case BandwidthRule::KnifeEdge:
          choice = knife_edge_bandwidth(sample, kernel);
          break;
      }
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ZeroBiasCoefficient || e.code() == ErrorCode::InvalidArgument) {
      if (a.rule == "mse-oracle") throw UsageError(std::string("--rule mse-oracle: ") + e.what());
      throw DataError(a.input + ": " + e.what());
    }
    throw;
  }

  std::vector<DensityFit> fits;
  fits.reserve(points.size());
  for (double w : points) fits.push_back(fit(sample, w, choice.h, kernel, a.alpha));

  Sink sink(a.common.out_path, out);
  std::ostream& os = sink.get();
  if (a.common.fmt() == Format::Json) {
    ordered_json j;
    j["input"] = a.input;
    j["kernel"] = std::string(kernel.name);
    j["alpha"] = a.alpha;
    j["bandwidth"] = {{"rule", rule_name},
                      {"h", choice.h},
                      {"constant", choice.constant},
                      {"epsilon", choice.epsilon}};
    j["N"] = sample.n_nodes();
    j["n"] = sample.n_dyads();
    ordered_json rows = ordered_json::array();
    for (const auto& f : fits) {
      rows.push_back({{"w", f.w},
                      {"f_hat", f.f_hat},
                      {"se", f.se},
                      {"se_iid", f.se_iid},
                      {"ci_low", f.ci_low},
                      {"ci_high", f.ci_high},
                      {"omega1_hat", f.omega1_hat},
                      {"omega2_hat", f.omega2_hat},
                      {"h", f.h},
                      {"N", f.n_nodes},
                      {"n", f.n_dyads},
                      {"clamped", f.clamped}});
    }
    j["estimates"] = std::move(rows);
    os << j.dump(2) << '\n';
    return kExitOk;
  }

  const bool full = a.common.full_precision;
  os << "# kernel=" << kernel.name << " alpha=" << num(a.alpha, full) << " rule=" << rule_name;
  if (rule_name != "fixed") {
    os << " constant=" << num(choice.constant, full) << " epsilon=" << num(choice.epsilon, full);
  }
  os << '\n';
  os << "w,f_hat,se,se_iid,ci_low,ci_high,omega1_hat,omega2_hat,h,N,n,clamped\n";
  for (const auto& f : fits) {
    os << num(f.w, full) << ',' << num(f.f_hat, full) << ',' << num(f.se, full) << ','
       << num(f.se_iid, full) << ',' << num(f.ci_low, full) << ',' << num(f.ci_high, full) << ','
       << num(f.omega1_hat, full) << ',' << num(f.omega2_hat, full) << ',' << num(f.h, full)
       << ',' << f.n_nodes << ',' << f.n_dyads << ',' << (f.clamped ? 1 : 0) << '\n';
  }
  return kExitOk;
}

// ---------------------------------------------------------------- simulate

struct SimulateArgs {
  Common common;
  double pi = 1.0 / 3.0;
  double w = 1.645;
  long n_nodes = 100;
  double h = 0.2496;
  std::string kernel = "gaussian";
  long reps = 1000;
  std::uint64_t seed = 20190701;
  double alpha = 0.05;
  std::string per_rep;
  long threads = 0;
};

void setup_simulate(CLI::App& app, SimulateArgs& a) {
  auto* sub = app.add_subcommand("simulate", "Monte Carlo study of the two-point design");
  sub->add_option("--pi", a.pi, "P(A_i = -1)")->capture_default_str();
  sub->add_option("--w", a.w, "Evaluation point")->capture_default_str();
  sub->add_option("--N", a.n_nodes, "Number of nodes")->capture_default_str();
  sub->add_option("--h", a.h, "Bandwidth")->capture_default_str();
  sub->add_option("--kernel", a.kernel, "epanechnikov or gaussian")->capture_default_str();
  sub->add_option("--reps", a.reps, "Monte Carlo replications")->capture_default_str();
  sub->add_option("--seed", a.seed, "64-bit seed")->capture_default_str();
  sub->add_option("--alpha", a.alpha, "Wald interval level is 1 - alpha")->capture_default_str();
  sub->add_option("--per-rep", a.per_rep, "Write per-replication CSV to this path");
  sub->add_option("--threads", a.threads,
                  "Worker threads (default: DYADKDE_THREADS or hardware concurrency)");
  add_common(sub, a.common);
}

int run_simulate(const SimulateArgs& a, std::ostream& out) {
  SimConfig cfg;
  if (a.n_nodes < 3) throw UsageError("--N: simulation needs N >= 3");
  if (a.reps < 1) throw UsageError("--reps: must be at least 1");
  if (a.threads < 0) throw UsageError("--threads: must be nonnegative");
  cfg.design = NgpDesign{a.pi, a.w};
  cfg.n_nodes = static_cast<std::size_t>(a.n_nodes);
  cfg.h = a.h;
  cfg.kernel = kernel_or_usage(a.kernel);
  cfg.replications = static_cast<std::size_t>(a.reps);
  cfg.seed = a.seed;
  cfg.alpha = a.alpha;
  try {
    cfg.validate();
  } catch (const Error& e) {
    throw UsageError(std::string("simulate: ") + e.what());
  }
  const std::size_t threads =
      a.threads > 0 ? static_cast<std::size_t>(a.threads) : default_thread_count();

  Sink sink(a.common.out_path, out);
  std::optional<std::ofstream> per_rep;
  if (!a.per_rep.empty()) {
    per_rep.emplace(a.per_rep);
    if (!*per_rep) throw UsageError("--per-rep: cannot open `" + a.per_rep + "` for writing");
  }

  const McResult result = run_monte_carlo(cfg, threads);
  const McSummary& s = result.summary;
  const bool full = a.common.full_precision;

  if (per_rep) {
    std::ostream& pr = *per_rep;
    pr << "# seed=" << cfg.seed << '\n';
    pr << "rep,f_hat,se,se_iid,ci_hit_fg,ci_hit_iid\n";
    for (const auto& r : result.records) {
      pr << r.rep << ',' << num(r.f_hat, full) << ',' << num(r.se, full) << ','
         << num(r.se_iid, full) << ',' << (r.ci_hit_fg ? 1 : 0) << ',' << (r.ci_hit_iid ? 1 : 0)
         << '\n';
    }
  }

  std::ostream& os = sink.get();
  if (a.common.fmt() == Format::Json) {
    ordered_json j;
    j["seed"] = cfg.seed;
    j["pi"] = cfg.design.pi;
    j["w"] = cfg.design.w;
    j["kernel"] = std::string(cfg.kernel.name);
    j["alpha"] = cfg.alpha;
    j["N"] = cfg.n_nodes;
    j["h"] = cfg.h;
    j["reps"] = s.replications;
    j["median_bias"] = s.median_bias;
    j["robust_sd"] = s.robust_sd;
    j["median_se"] = s.median_se;
    j["coverage_iid"] = s.coverage_iid;
    j["coverage_fg"] = s.coverage_fg;
    j["f_true"] = s.f_true;
    j["mean_f_hat"] = s.mean_f_hat;
    j["clamped"] = s.clamped;
    os << j.dump(2) << '\n';
    return kExitOk;
  }
  os << "# seed=" << cfg.seed << " pi=" << num(cfg.design.pi, full)
     << " w=" << num(cfg.design.w, full) << " kernel=" << cfg.kernel.name
     << " alpha=" << num(cfg.alpha, full) << '\n';
  os << "N,h,reps,median_bias,robust_sd,median_se,coverage_iid,coverage_fg,f_true\n";
  os << cfg.n_nodes << ',' << num(cfg.h, full) << ',' << s.replications << ','
     << num(s.median_bias, full) << ',' << num(s.robust_sd, full) << ','
     << num(s.median_se, full) << ',' << num(s.coverage_iid, full) << ','
     << num(s.coverage_fg, full) << ',' << num(s.f_true, full) << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------- design

struct DesignArgs {
  Common common;
  double pi = 1.0 / 3.0;
  double w = 1.645;
  std::string kernel = "gaussian";
  long n_nodes = 100;
  std::optional<double> h;
};

void setup_design(CLI::App& app, DesignArgs& a) {
  auto* sub = app.add_subcommand("design", "Closed-form properties of the two-point design");
  sub->add_option("--pi", a.pi, "P(A_i = -1)")->capture_default_str();
  sub->add_option("--w", a.w, "Evaluation point")->capture_default_str();
  sub->add_option("--kernel", a.kernel, "epanechnikov or gaussian")->capture_default_str();
  sub->add_option("--N", a.n_nodes, "Number of nodes")->capture_default_str();
  sub->add_option("--h", a.h, "Bandwidth (default: the MSE-optimal h*)");
  add_common(sub, a.common);
}

int run_design(const DesignArgs& a, std::ostream& out) {
  const KernelSpec kernel = kernel_or_usage(a.kernel);
  const NgpDesign design{a.pi, a.w};
  if (a.n_nodes < 3) throw UsageError("--N: design quantities need N >= 3");
  DesignQuantities q;
  try {
    design.validate();
    const auto n_nodes = static_cast<std::size_t>(a.n_nodes);
    double h = 0.0;
    if (a.h) {
      h = *a.h;
    } else {
      h = mse_optimal_bandwidth(true_omega2(design, kernel), true_bias_coefficient(design, kernel),
                                dyad_count(n_nodes));
    }
    q = table1_panel_b(design, kernel, n_nodes, h);
  } catch (const Error& e) {
    throw UsageError(std::string("design: ") + e.what());
  }

  Sink sink(a.common.out_path, out);
  std::ostream& os = sink.get();
  if (a.common.fmt() == Format::Json) {
    ordered_json j;
    j["pi"] = design.pi;
    j["w"] = design.w;
    j["kernel"] = std::string(kernel.name);
    j["N"] = q.n_nodes;
    j["n"] = q.n_dyads;
    j["h"] = q.h;
    j["f_w"] = q.f_w;
    j["f_w_cond_plus"] = q.f_w_cond_plus;
    j["f_w_cond_minus"] = q.f_w_cond_minus;
    j["omega1"] = q.omega1;
    j["omega2"] = q.omega2;
    j["bias_coef_b"] = q.bias_coef_b;
    j["h2_bias"] = q.smoothing_bias;
    j["h_star"] = q.h_star;
    j["ase_total"] = q.ase_total;
    j["ase_t3"] = q.ase_t3;
    j["ase_t1"] = q.ase_t1;
    os << j.dump(2) << '\n';
    return kExitOk;
  }
  const bool full = a.common.full_precision;
  os << "pi,w,kernel,N,n,h,f_w,f_w_cond_plus,f_w_cond_minus,omega1,omega2,bias_coef_b,h2_bias,"
        "h_star,ase_total,ase_t3,ase_t1\n";
  os << num(design.pi, full) << ',' << num(design.w, full) << ',' << kernel.name << ','
     << q.n_nodes << ',' << q.n_dyads << ',' << num(q.h, full) << ',' << num(q.f_w, full) << ','
     << num(q.f_w_cond_plus, full) << ',' << num(q.f_w_cond_minus, full) << ','
     << num(q.omega1, full) << ',' << num(q.omega2, full) << ',' << num(q.bias_coef_b, full)
     << ',' << num(q.smoothing_bias, full) << ',' << num(q.h_star, full) << ','
     << num(q.ase_total, full) << ',' << num(q.ase_t3, full) << ',' << num(q.ase_t1, full)
     << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------- validate

struct ValidateArgs {
  std::string input;
};

void setup_validate(CLI::App& app, ValidateArgs& a) {
  auto* sub = app.add_subcommand("validate", "Check an edge-list file and summarize it");
  sub->add_option("input,--input", a.input, "Edge-list CSV")->required();
}

int run_validate(const ValidateArgs& a, std::ostream& out) {
  const EdgeListFile file = load_input(a.input);
  const auto w = file.sample.weights();
  const auto [lo, hi] = std::minmax_element(w.begin(), w.end());
  out << "file: " << a.input << '\n';
  out << "status: valid\n";
  out << "N: " << file.sample.n_nodes() << '\n';
  out << "n: " << file.sample.n_dyads() << '\n';
  out << "rows: " << file.data_rows << '\n';
  out << "duplicate_rows: " << file.duplicate_rows << " (all symmetric, values agree)\n";
  out << "labels: " << (file.identity_labels ? "dense 0..N-1" : "compacted to 0..N-1") << '\n';
  out << "w_min: " << num(*lo, true) << '\n';
  out << "w_max: " << num(*hi, true) << '\n';
  out << "w_mean: " << num(dyad_mean(file.sample), true) << '\n';
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Kernel density estimation for undirected dyadic data", "dyadkde"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);

  EstimateArgs est;
  SimulateArgs sim;
  DesignArgs des;
  ValidateArgs val;
  setup_estimate(app, est);
  setup_simulate(app, sim);
  setup_design(app, des);
  setup_validate(app, val);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "dyadkde: " << e.what() << '\n';
    err << "Run with --help for usage.\n";
    return kExitUsage;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  try {
    if (name == "estimate") return run_estimate(est, out);
    if (name == "simulate") return run_simulate(sim, out);
    if (name == "design") return run_design(des, out);
    return run_validate(val, out);
  } catch (const UsageError& e) {
    err << "dyadkde " << name << ": usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DataError& e) {
    err << "dyadkde " << name << ": data error: " << e.what() << '\n';
    return kExitDataError;
  } catch (const Error& e) {
    err << "dyadkde " << name << ": data error: " << e.what() << '\n';
    return kExitDataError;
  }
}

}  // namespace dyadkde::cli
