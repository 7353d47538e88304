// qbool: command line laboratory for involution operators on qubits —
// spectra, property tests, coefficient learning, noise inequalities,
// influences, closeness diagnostics, and chain dynamics.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qbool/build.hpp"
#include "qbool/dynamics.hpp"
#include "qbool/fkn.hpp"
#include "qbool/fourier.hpp"
#include "qbool/influence.hpp"
#include "qbool/io.hpp"
#include "qbool/learning.hpp"
#include "qbool/noise.hpp"
#include "qbool/testing.hpp"

using json = nlohmann::json;
using namespace qbool;

namespace {

struct Context {
  std::uint64_t seed = 0;
  double tol = 1e-9;
  std::string out_path;  // empty = stdout
  std::string format = "text";
  json report;
  bool check_failed = false;
};

std::uint64_t entropy_seed() {
  std::random_device rd;
  return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

OperatorFileKind parse_kind(const std::string& kind) {
  if (kind == "auto") return OperatorFileKind::Auto;
  if (kind == "spectrum") return OperatorFileKind::Spectrum;
  if (kind == "dense") return OperatorFileKind::Dense;
  if (kind == "table") return OperatorFileKind::TruthTable;
  throw CLI::ValidationError("--kind must be auto|spectrum|dense|table");
}

json spectrum_json(const Spectrum& spec) {
  json entries = json::object();
  for (const auto& [s, c] : spec)
    entries[s.str()] = format_coefficient(c, spec.real_coefficients());
  return json{{"n", spec.qubits()},
              {"real", spec.real_coefficients()},
              {"entries", entries}};
}

json witness_json(const std::optional<Witness>& w) {
  if (!w) return nullptr;
  return json{{"word", w->s.str()}, {"weight", w->weight}, {"phase", w->phase}};
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Accept: return "accept-property";
    case Verdict::Reject: return "reject-property";
    default: return "inconclusive";
  }
}

void record_input(Context& ctx, const std::string& path) {
  ctx.report["inputs"][path] = file_digest(path);
}

void print_text(std::ostream& os, const json& j, int indent) {
  const std::string pad(indent, ' ');
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      os << pad << key << ":\n";
      print_text(os, value, indent + 2);
    } else if (value.is_array()) {
      os << pad << key << ": " << value.dump() << "\n";
    } else {
      os << pad << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
         << "\n";
    }
  }
}

void emit(Context& ctx, double wall_seconds) {
  std::ofstream file;
  std::ostream* os = &std::cout;
  if (!ctx.out_path.empty()) {
    file.open(ctx.out_path);
    if (!file) throw std::invalid_argument("cannot open output file: " + ctx.out_path);
    os = &file;
  }
  if (ctx.format == "structured") {
    // No wall clock here: identical argv + seed must give identical bytes.
    *os << ctx.report.dump(2) << "\n";
  } else {
    print_text(*os, ctx.report, 0);
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.3f", wall_seconds);
    *os << "wall_clock_s: " << buf << "\n";
  }
}

DenseOperator load(Context& ctx, const std::string& path, const std::string& kind) {
  record_input(ctx, path);
  return load_operator(path, parse_kind(kind));
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(std::stoi(item));
  }
  return out;
}

int parse_pauli_symbol(const std::string& text) {
  if (text == "x" || text == "X" || text == "1") return 1;
  if (text == "y" || text == "Y" || text == "2") return 2;
  if (text == "z" || text == "Z" || text == "3") return 3;
  throw CLI::ValidationError("--pauli must be x, y or z");
}

// ---------------------------------------------------------------------------

void run_spectrum(Context& ctx, const std::string& in, const std::string& kind) {
  const DenseOperator f = load(ctx, in, kind);
  const Spectrum spec = fourier_transform(f, ctx.tol);
  ctx.report["spectrum"] = spectrum_json(spec);
  ctx.report["degree"] = spec.degree();
  ctx.report["weight_per_level"] = spec.weight_per_level();
  json support = json::array();
  for (int j : spec.support()) support.push_back(j);
  ctx.report["support"] = support;
}

void write_operator(Context& ctx, const DenseOperator& f, const std::string& emit_kind) {
  std::ostringstream body;
  if (emit_kind == "spectrum")
    write_spectrum(body, fourier_transform(f, ctx.tol));
  else
    write_dense(body, f);
  ctx.report["quantum_boolean"] = is_quantum_boolean(f, ctx.tol);
  if (!ctx.out_path.empty()) {
    // build writes the operator itself to --out; the report stays on stdout
    std::ofstream file(ctx.out_path);
    if (!file) throw std::invalid_argument("cannot open output file: " + ctx.out_path);
    file << body.str();
    ctx.report["written"] = ctx.out_path;
    ctx.out_path.clear();
  } else {
    ctx.report["operator"] = body.str();
  }
}

void run_build(Context& ctx, const std::string& what, const std::string& in,
               const std::vector<std::string>& ins, const std::vector<double>& alphas,
               const std::string& emit_kind) {
  if (what == "combine") {
    std::vector<DenseOperator> fs;
    for (const auto& path : ins) fs.push_back(load(ctx, path, "auto"));
    write_operator(ctx, anticommuting_combination(alphas, fs, ctx.tol), emit_kind);
    return;
  }
  if (what == "phase" || what == "bit") {
    record_input(ctx, in);
    std::ifstream file(in);
    if (!file) throw std::invalid_argument("cannot open file: " + in);
    const TruthTable t = read_truth_table(file);
    write_operator(ctx, what == "phase" ? phase_oracle(t) : bit_oracle(t), emit_kind);
    return;
  }
  const DenseOperator f = load(ctx, in, "auto");
  if (what == "sign")
    write_operator(ctx, sign_function(f, ctx.tol), emit_kind);
  else if (what == "projector")
    write_operator(ctx, projector_qbf(f, ctx.tol), emit_kind);
  else if (what == "balance")
    write_operator(ctx, balance(f, ctx.tol), emit_kind);
  else
    throw CLI::ValidationError("unknown build target: " + what);
}

void run_test(Context& ctx, const std::string& which, const std::string& in,
              long long trials, double delta, double epsilon) {
  const DenseOperator f = load(ctx, in, "auto");
  if (which == "stabilizer") {
    const SampleReport rep = stabilizer_test_sample(f, trials, ctx.seed, ctx.tol);
    ctx.report["exact_probability"] = rep.exact_probability;
    ctx.report["accepted"] = rep.accepted;
    ctx.report["trials"] = rep.trials;
    ctx.report["fraction"] = rep.fraction();
    ctx.report["verdict"] = verdict_name(rep.verdict);
    ctx.report["witness"] = witness_json(rep.witness);
  } else if (which == "locality") {
    ctx.report["exact_probability"] = locality_test_probability(f, 6, ctx.tol);
  } else if (which == "hastad") {
    const HastadReport rep = hastad_verdict(f, epsilon, ctx.tol);
    ctx.report["exact_probability"] = rep.probability;
    ctx.report["delta"] = rep.delta;
    ctx.report["epsilon"] = rep.epsilon;
    ctx.report["verdict"] = verdict_name(rep.verdict);
    ctx.report["witness"] = witness_json(rep.witness);
    if (trials > 0) {
      const SampleReport samp = hastad_test_sample(f, rep.delta, trials, ctx.seed, ctx.tol);
      ctx.report["accepted"] = samp.accepted;
      ctx.report["trials"] = samp.trials;
      ctx.report["fraction"] = samp.fraction();
    }
  }
}

void run_gl(Context& ctx, const std::string& in, double gamma, double delta, bool exact) {
  const DenseOperator f = load(ctx, in, "auto");
  OracleHandle oracle(f, ctx.seed, exact, ctx.tol);
  const GlResult res = goldreich_levin(oracle, gamma, delta);
  json list = json::object();
  for (const auto& [s, c] : res.coefficients) list[s.str()] = c;
  ctx.report["list"] = list;
  ctx.report["estimations"] = res.estimations;
  ctx.report["queries"] = res.queries;
  ctx.report["max_list_size"] = res.max_list_size;
  ctx.report["list_cap"] = res.list_cap;
  ctx.report["exact_mode"] = exact;
}

void run_noise(Context& ctx, const std::string& in, double epsilon, bool channel) {
  const DenseOperator f = load(ctx, in, "auto");
  Spectrum noisy;
  if (channel) {
    noisy = fourier_transform(depolarize(f, epsilon), ctx.tol);
  } else {
    noisy = apply_noise(fourier_transform(f, ctx.tol), epsilon);
  }
  ctx.report["epsilon"] = epsilon;
  ctx.report["completely_positive"] = epsilon >= kCompletelyPositiveFloor && epsilon <= 1.0;
  ctx.report["path"] = channel ? "channel" : "multiplier";
  ctx.report["spectrum"] = spectrum_json(noisy);
}

void run_hyper_check(Context& ctx, const std::string& in, double p, double q, double eps,
                     const std::string& grid) {
  if (!grid.empty()) {
    int n = 2;
    int count = 100;
    std::stringstream ss(grid);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.rfind("n=", 0) == 0) n = std::stoi(item.substr(2));
      if (item.rfind("count=", 0) == 0) count = std::stoi(item.substr(6));
    }
    Rng rng(ctx.seed);
    double min_margin = std::numeric_limits<double>::infinity();
    bool regime = false;
    for (int i = 0; i < count; ++i) {
      const DenseOperator f = random_hermitian(n, rng);
      const HyperReport rep = hypercontractivity_check(f, p, q, eps, ctx.tol);
      min_margin = std::min(min_margin, rep.margin);
      regime = rep.in_theorem_regime;
    }
    ctx.report["grid_n"] = n;
    ctx.report["grid_count"] = count;
    ctx.report["min_margin"] = min_margin;
    ctx.report["in_theorem_regime"] = regime;
    if (regime && min_margin < -1e-9) ctx.check_failed = true;
    return;
  }
  const DenseOperator f = load(ctx, in, "auto");
  const HyperReport rep = hypercontractivity_check(f, p, q, eps, ctx.tol);
  ctx.report["input_norm"] = rep.input_norm;
  ctx.report["noisy_norm"] = rep.noisy_norm;
  ctx.report["margin"] = rep.margin;
  ctx.report["in_theorem_regime"] = rep.in_theorem_regime;
  if (rep.in_theorem_regime && rep.margin < -1e-9) ctx.check_failed = true;
}

void run_hyper_search(Context& ctx, double p, double q, double eps, int n, int restarts) {
  const SearchReport rep = search_violation(p, q, eps, n, restarts, ctx.seed);
  ctx.report["best_ratio"] = rep.best_ratio;
  ctx.report["evaluations"] = rep.evaluations;
  ctx.report["restarts"] = rep.restarts;
  ctx.report["in_theorem_regime"] = rep.in_theorem_regime;
  ctx.report["best_spectrum"] = spectrum_json(rep.best_spectrum);
  if (rep.in_theorem_regime && rep.best_ratio > 1.0 + 1e-6) ctx.check_failed = true;
}

void run_influence(Context& ctx, const std::string& in, int qubit,
                   const std::string& set_list, bool total, bool poincare, bool talagrand,
                   bool kkl) {
  const DenseOperator f = load(ctx, in, "auto");
  const Spectrum spec = fourier_transform(f, ctx.tol);
  if (qubit >= 0) {
    ctx.report["qubit"] = qubit;
    ctx.report["influence"] = influence(spec, qubit);
  } else if (!set_list.empty()) {
    const std::vector<int> J = parse_int_list(set_list);
    ctx.report["set"] = J;
    ctx.report["influence"] = influence_set(spec, J);
  } else if (poincare) {
    const PoincareReport rep = poincare_check(f, ctx.tol);
    ctx.report["variance"] = rep.variance;
    ctx.report["total_influence"] = rep.total_influence;
    ctx.report["margin"] = rep.margin;
    ctx.report["influences"] = rep.influences;
    ctx.report["max_influence"] = rep.max_influence;
    ctx.report["max_qubit"] = rep.max_qubit;
    ctx.report["traceless_boolean"] = rep.traceless_boolean;
    ctx.report["influential_bound"] = rep.influential_bound;
    if (rep.margin < -1e-10) ctx.check_failed = true;
    if (rep.traceless_boolean && rep.max_influence < rep.influential_bound - 1e-10)
      ctx.check_failed = true;
  } else if (talagrand) {
    const TalagrandReport rep = talagrand_check(f, ctx.tol);
    ctx.report["lhs"] = rep.lhs;
    ctx.report["rhs"] = rep.rhs;
    ctx.report["margin"] = rep.margin;
    ctx.report["terms"] = rep.terms;
    if (rep.margin < -1e-9) ctx.check_failed = true;
  } else if (kkl) {
    const AnticommutingKklReport rep = anticommuting_kkl_check(f, ctx.tol);
    ctx.report["influences"] = rep.influences;
    ctx.report["sum_of_squares"] = rep.sum_of_squares;
    ctx.report["max_influence"] = rep.max_influence;
    ctx.report["max_qubit"] = rep.max_qubit;
    ctx.report["bound"] = rep.bound;
    ctx.report["holds"] = rep.holds;
    if (!rep.holds) ctx.check_failed = true;
  } else if (total) {
    ctx.report["total_influence"] = total_influence(spec);
  } else {
    ctx.report["influences"] = influences(spec);
    ctx.report["total_influence"] = total_influence(spec);
  }
}

void run_fkn(Context& ctx, const std::string& in, bool two_norm, bool exact,
             const std::string& g_path, double epsilon) {
  const DenseOperator f = load(ctx, in, "auto");
  if (exact) {
    const ExactFknReport rep = exact_fkn_check(f, ctx.tol);
    const char* kind = rep.kind == ExactFknReport::Kind::Dictator ? "dictator"
                       : rep.kind == ExactFknReport::Kind::Constant ? "constant"
                                                                    : "rejected";
    ctx.report["kind"] = kind;
    ctx.report["qubit"] = rep.qubit;
    ctx.report["lambdas"] = rep.lambdas;
    ctx.report["lambda_sum"] = rep.lambda_sum;
    ctx.report["balanced_first"] = rep.balanced_first;
    if (!rep.reason.empty()) ctx.report["reason"] = rep.reason;
    if (rep.kind == ExactFknReport::Kind::Rejected) ctx.check_failed = true;
    return;
  }
  if (!g_path.empty()) {
    const DenseOperator g = load(ctx, g_path, "auto");
    const FknInftyReport rep = fkn_infty_check(f, g, epsilon, ctx.tol);
    ctx.report["epsilon"] = rep.epsilon;
    ctx.report["input_distance"] = rep.input_distance;
    ctx.report["dictator_distance"] = rep.dictator_distance;
    ctx.report["bound"] = rep.bound;
    ctx.report["holds"] = rep.holds;
    ctx.report["max_weyl_gap"] = rep.max_weyl_gap;
    ctx.report["balanced_first"] = rep.balanced_first;
    if (!rep.holds) ctx.check_failed = true;
    return;
  }
  // Default: the 2-norm closeness evidence.
  const TwoNormEvidence rep = two_norm_evidence(f, ctx.tol);
  ctx.report["high_level_weight"] = rep.high_level;
  ctx.report["dictator_found"] = rep.dictator.found;
  ctx.report["dictator_qubit"] = rep.dictator.qubit;
  ctx.report["distance"] = rep.dictator.distance;
  ctx.report["ratio"] = rep.ratio;
  ctx.report["deg2_bound_ok"] = rep.deg2_bound_ok;
  ctx.report["balanced_first"] = rep.dictator.balanced_first;
  (void)two_norm;
}

void run_dynamics_profile(Context& ctx, int n, int qubit, int symbol,
                          const std::vector<double>& ts, const std::string& radii_list) {
  Rng rng(ctx.seed);
  const ChainHamiltonian chain = ChainHamiltonian::random(n, rng);
  std::vector<int> radii = parse_int_list(radii_list);
  if (radii.empty())
    for (int r = 0; r <= n; ++r) radii.push_back(r);

  std::vector<std::pair<double, std::vector<ProfilePoint>>> all;
  json profiles = json::array();
  std::string table = "t radius window_size discrepancy";
  for (double t : ts) {
    const auto profile = lieb_robinson_profile(chain, qubit, symbol, t, radii);
    json rows = json::array();
    for (const auto& p : profile) {
      rows.push_back(json{{"radius", p.radius},
                          {"window_size", p.window_size},
                          {"discrepancy", p.discrepancy}});
      char line[96];
      std::snprintf(line, sizeof(line), "\n%g %d %d %.12e", t, p.radius, p.window_size,
                    p.discrepancy);
      table += line;
    }
    profiles.push_back(json{{"t", t}, {"points", rows}});
    all.emplace_back(t, profile);
  }
  ctx.report["n"] = n;
  ctx.report["qubit"] = qubit;
  ctx.report["profiles"] = profiles;
  ctx.report["table"] = table;
  const DecayFit fit = fit_light_cone(all);
  ctx.report["decay_fit"] =
      json{{"c", fit.c}, {"k", fit.k}, {"v", fit.v}, {"points", fit.points}};
}

void run_dynamics_learn(Context& ctx, int n, int qubit, int symbol, double t, double gamma,
                        double epsilon, double delta) {
  Rng rng(ctx.seed);
  const ChainHamiltonian chain = ChainHamiltonian::random(n, rng);
  const LearnDynamicsResult res =
      learn_dynamics(chain, qubit, symbol, t, gamma, epsilon, delta, derive_seed(ctx.seed, 1));
  json list = json::object();
  for (const auto& [s, c] : res.gl.coefficients) list[s.str()] = c;
  ctx.report["list"] = list;
  ctx.report["error_sq"] = res.error_sq;
  ctx.report["epsilon"] = epsilon;
  ctx.report["contract_met"] = res.error_sq <= epsilon;
  ctx.report["queries"] = res.queries;
  ctx.report["coefficient_eta"] = res.coefficient_eta;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical laboratory for quantum boolean functions"};
  app.require_subcommand(1);
  app.fallthrough();

  Context ctx;
  ctx.seed = entropy_seed();
  app.add_option("--seed", ctx.seed, "RNG seed (default: OS entropy, always echoed)");
  app.add_option("--tol", ctx.tol, "numerical tolerance")->capture_default_str();
  app.add_option("--out", ctx.out_path, "output file (default stdout)");
  app.add_option("--format", ctx.format, "text|structured")
      ->check(CLI::IsMember({"text", "structured"}))
      ->capture_default_str();

  std::string in, kind = "auto", g_path, grid, set_list, radii, emit_kind = "dense";
  std::vector<std::string> ins;
  std::vector<double> alphas, ts;
  double delta = 0.1, epsilon = 0.01, gamma = 0.25, p = 2, q = 4, noise_eps = 0.5;
  long long trials = 0;
  int qubit = -1, n = 4, restarts = 20;
  std::string pauli = "z";
  bool exact = false, channel = false, total = false, poincare = false, talagrand = false,
       kkl = false, two_norm = false;

  auto* spectrum_cmd = app.add_subcommand("spectrum", "Fourier spectrum of an operator");
  spectrum_cmd->add_option("--in", in, "operator file")->required();
  spectrum_cmd->add_option("--kind", kind, "auto|spectrum|dense|table");

  auto* build_cmd = app.add_subcommand("build", "construct involution operators");
  std::string build_what;
  build_cmd->add_option("what", build_what, "phase|bit|sign|projector|balance|combine")
      ->required();
  build_cmd->add_option("--in", in, "input file");
  build_cmd->add_option("--ins", ins, "input files for combine");
  build_cmd->add_option("--alpha", alphas, "coefficients for combine");
  build_cmd->add_option("--emit", emit_kind, "dense|spectrum");

  auto* test_cmd = app.add_subcommand("test", "property tests");
  std::string test_which;
  test_cmd->add_option("which", test_which, "stabilizer|locality|hastad")->required();
  test_cmd->add_option("--in", in, "operator file")->required();
  test_cmd->add_option("--trials", trials, "Monte-Carlo trials (0 = exact only)");
  test_cmd->add_option("--delta", delta, "damping parameter");
  test_cmd->add_option("--epsilon", epsilon, "closeness parameter");

  auto* gl_cmd = app.add_subcommand("gl", "list large Fourier coefficients");
  gl_cmd->add_option("--in", in, "operator file")->required();
  gl_cmd->add_option("--gamma", gamma, "listing threshold")->required();
  gl_cmd->add_option("--delta", delta, "failure probability")->required();
  gl_cmd->add_flag("--exact", exact, "noiseless estimates");

  auto* noise_cmd = app.add_subcommand("noise", "apply the noise superoperator");
  noise_cmd->add_option("--in", in, "operator file")->required();
  noise_cmd->add_option("--epsilon", noise_eps, "noise rate")->required();
  noise_cmd->add_flag("--channel", channel, "qubitwise channel path");

  auto* hyper_cmd = app.add_subcommand("hyper", "norm inequalities under noise");
  auto* hyper_check_cmd = hyper_cmd->add_subcommand("check", "margin of one operator or a grid");
  hyper_check_cmd->add_option("--in", in, "operator file");
  hyper_check_cmd->add_option("--p", p, "input norm")->required();
  hyper_check_cmd->add_option("--q", q, "output norm")->required();
  hyper_check_cmd->add_option("--epsilon", noise_eps, "noise rate")->required();
  hyper_check_cmd->add_option("--grid", grid, "random sweep, e.g. n=3,count=500");
  auto* hyper_search_cmd = hyper_cmd->add_subcommand("search", "maximize the noisy norm ratio");
  hyper_search_cmd->add_option("--p", p, "input norm")->required();
  hyper_search_cmd->add_option("--q", q, "output norm")->required();
  hyper_search_cmd->add_option("--epsilon", noise_eps, "noise rate")->required();
  hyper_search_cmd->add_option("--n", n, "qubits")->required();
  hyper_search_cmd->add_option("--restarts", restarts, "random restarts");
  hyper_cmd->require_subcommand(1);

  auto* infl_cmd = app.add_subcommand("influence", "derivatives and influence bounds");
  infl_cmd->add_option("--in", in, "operator file")->required();
  infl_cmd->add_option("--qubit", qubit, "single-qubit influence");
  infl_cmd->add_option("--set", set_list, "multi-qubit influence, e.g. 0,2");
  infl_cmd->add_flag("--total", total, "total influence");
  infl_cmd->add_flag("--poincare", poincare, "variance vs total influence");
  infl_cmd->add_flag("--talagrand", talagrand, "derivative norm-ratio bound");
  infl_cmd->add_flag("--anticommuting-kkl", kkl, "influence bound for anticommuting spectra");

  auto* fkn_cmd = app.add_subcommand("fkn", "closeness-to-dictator diagnostics");
  fkn_cmd->add_option("--in", in, "operator file")->required();
  fkn_cmd->add_flag("--two-norm", two_norm, "2-norm evidence (default)");
  fkn_cmd->add_flag("--exact", exact, "exact degree-1 classification");
  fkn_cmd->add_option("--g", g_path, "degree-1 comparison operator (sup-norm variant)");
  fkn_cmd->add_option("--epsilon", epsilon, "sup-norm closeness parameter");

  auto* dyn_cmd = app.add_subcommand("dynamics", "chain evolution experiments");
  auto* dyn_profile = dyn_cmd->add_subcommand("profile", "truncation discrepancy profile");
  dyn_profile->add_option("--n", n, "chain length")->required();
  dyn_profile->add_option("--qubit", qubit, "observable qubit")->required();
  dyn_profile->add_option("--pauli", pauli, "observable x|y|z");
  dyn_profile->add_option("--t", ts, "evolution times")->required();
  dyn_profile->add_option("--radii", radii, "window radii, e.g. 0,1,2,3");
  auto* dyn_learn = dyn_cmd->add_subcommand("learn", "learn an evolved observable");
  dyn_learn->add_option("--n", n, "chain length")->required();
  dyn_learn->add_option("--qubit", qubit, "observable qubit")->required();
  dyn_learn->add_option("--pauli", pauli, "observable x|y|z");
  dyn_learn->add_option("--t", ts, "evolution time")->required();
  dyn_learn->add_option("--gamma", gamma, "listing threshold")->required();
  dyn_learn->add_option("--epsilon", epsilon, "reconstruction error budget")->required();
  dyn_learn->add_option("--delta", delta, "failure probability")->required();
  dyn_cmd->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    // help exits clean; anything else is a usage error
    return code == 0 ? 0 : 2;
  }

  const auto start = std::chrono::steady_clock::now();
  ctx.report["seed"] = ctx.seed;
  ctx.report["tol"] = ctx.tol;
  ctx.report["inputs"] = json::object();

  try {
    if (*spectrum_cmd) {
      ctx.report["command"] = "spectrum";
      run_spectrum(ctx, in, kind);
    } else if (*build_cmd) {
      ctx.report["command"] = "build " + build_what;
      run_build(ctx, build_what, in, ins, alphas, emit_kind);
    } else if (*test_cmd) {
      ctx.report["command"] = "test " + test_which;
      run_test(ctx, test_which, in, trials, delta, epsilon);
    } else if (*gl_cmd) {
      ctx.report["command"] = "gl";
      run_gl(ctx, in, gamma, delta, exact);
    } else if (*noise_cmd) {
      ctx.report["command"] = "noise";
      run_noise(ctx, in, noise_eps, channel);
    } else if (*hyper_check_cmd) {
      ctx.report["command"] = "hyper check";
      run_hyper_check(ctx, in, p, q, noise_eps, grid);
    } else if (*hyper_search_cmd) {
      ctx.report["command"] = "hyper search";
      run_hyper_search(ctx, p, q, noise_eps, n, restarts);
    } else if (*infl_cmd) {
      ctx.report["command"] = "influence";
      run_influence(ctx, in, qubit, set_list, total, poincare, talagrand, kkl);
    } else if (*fkn_cmd) {
      ctx.report["command"] = "fkn";
      run_fkn(ctx, in, two_norm, exact, g_path, epsilon);
    } else if (*dyn_profile) {
      ctx.report["command"] = "dynamics profile";
      run_dynamics_profile(ctx, n, qubit, parse_pauli_symbol(pauli), ts, radii);
    } else if (*dyn_learn) {
      ctx.report["command"] = "dynamics learn";
      if (ts.empty()) throw std::invalid_argument("missing --t");
      run_dynamics_learn(ctx, n, qubit, parse_pauli_symbol(pauli), ts.front(), gamma, epsilon,
                         delta);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  ctx.report["check_failed"] = ctx.check_failed;
  try {
    emit(ctx, wall);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return ctx.check_failed ? 1 : 0;
}
