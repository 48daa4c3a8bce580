// netcoord: experiment runner for local coordination on finite graphs.
// Reports are JSON on stdout (or a CSV row with --format csv), human
// summaries on stderr. Exit code 0 iff every asserted bound passed.

#include <chrono>
#include <cmath>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "netcoord/certify.hpp"
#include "netcoord/equilibrium.hpp"
#include "netcoord/graph.hpp"
#include "netcoord/influence.hpp"
#include "netcoord/partition.hpp"

using nlohmann::json;
using namespace netcoord;

namespace {

constexpr const char* kVersion = "0.1.0";

struct Output {
  std::string format = "json";  // json | csv
  json report;
  std::vector<std::pair<std::string, std::string>> csv_row;
  bool ok = true;

  void metric(const std::string& key, const json& value) {
    report["metrics"][key] = value;
    if (value.is_number_float())
      csv_row.push_back({key, std::to_string(value.get<double>())});
    else if (value.is_number_integer())
      csv_row.push_back({key, std::to_string(value.get<long long>())});
    else if (value.is_boolean())
      csv_row.push_back({key, value.get<bool>() ? "1" : "0"});
    else if (value.is_string())
      csv_row.push_back({key, value.get<std::string>()});
  }

  void bound(const std::string& name, double value, double limit, bool pass) {
    report["bounds"].push_back({{"name", name}, {"value", value}, {"limit", limit},
                                {"pass", pass}});
    csv_row.push_back({name + "_pass", pass ? "1" : "0"});
    if (!pass) ok = false;
  }

  void emit(double wall_clock_s, bool csv_header) {
    report["wall_clock_s"] = wall_clock_s;
    report["version"] = kVersion;
    report["all_bounds_pass"] = ok;
    if (format == "csv") {
      if (csv_header) {
        for (std::size_t i = 0; i < csv_row.size(); ++i)
          std::cout << (i ? "," : "") << csv_row[i].first;
        std::cout << '\n';
      }
      for (std::size_t i = 0; i < csv_row.size(); ++i)
        std::cout << (i ? "," : "") << csv_row[i].second;
      std::cout << '\n';
    } else {
      std::cout << report.dump(2) << '\n';
    }
  }
};

json stats_json(const MonteCarloStats& stats, double bound, bool bound_satisfied) {
  return json{{"mean", stats.mean},       {"std_error", stats.std_error},
              {"trials", stats.trials},   {"seed", stats.seed},
              {"bound", bound},           {"bound_satisfied", bound_satisfied}};
}

Graph require_torus(const LoadedGraph& lg, int& w, int& h) {
  if (w == 0 && h == 0) {
    if (lg.family.kind != "torus")
      throw std::invalid_argument(
          "graph file carries no torus dimensions; pass --w and --h explicitly");
    w = lg.family.w;
    h = lg.family.h;
  }
  return lg.graph;
}

bool is_canonical_cycle(const Graph& g) {
  int n = g.vertex_count();
  if (n < 3) return false;
  for (int v = 0; v < n; ++v) {
    std::vector<int> expected{(v + n - 1) % n, (v + 1) % n};
    std::sort(expected.begin(), expected.end());
    expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
    if (g.neighbors(v) != expected) return false;
  }
  return true;
}

// ---- generate ----------------------------------------------------------------

int run_generate(const std::string& family, int n, int w, int h, int depth, double d,
                 std::uint64_t seed, const std::string& out_path, Output& output,
                 bool csv_header) {
  auto start = std::chrono::steady_clock::now();
  Graph g;
  FamilyTag tag;
  tag.kind = family;
  if (family == "cycle") {
    g = make_cycle(n);
    tag.n = n;
  } else if (family == "torus") {
    g = make_torus(w, h);
    tag.w = w;
    tag.h = h;
  } else if (family == "tree") {
    g = make_binary_tree(depth);
    tag.depth = depth;
  } else {
    g = make_erdos_renyi(n, d, seed);
    tag.n = n;
    tag.expected_degree = d;
    tag.seed = seed;
  }
  save_graph(g, tag, out_path);

  output.report["command"] = "generate";
  output.report["config"] = {{"family", family}, {"out", out_path}, {"seed", seed}};
  output.metric("family", family);
  output.metric("n", g.vertex_count());
  output.metric("ordered_edges", g.ordered_edge_count());
  output.metric("max_degree", g.max_degree());
  std::cerr << "generate " << family << ": " << g.vertex_count() << " vertices, ordered edges "
            << g.ordered_edge_count() << ", d_max " << g.max_degree() << " -> " << out_path
            << '\n';
  output.emit(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(),
              csv_header);
  return 0;
}

// ---- partition ---------------------------------------------------------------

int run_partition(const std::string& graph_path, int r, std::string mode, std::uint64_t seed,
                  int w, int h, const std::string& out_path, Output& output, bool csv_header) {
  auto start = std::chrono::steady_clock::now();
  LoadedGraph lg = load_graph(graph_path);
  const Graph& g = lg.graph;

  if (mode == "auto") {
    if (is_canonical_cycle(g) && g.vertex_count() % (2 * r + 1) == 0)
      mode = "cycle";
    else if (lg.family.kind == "torus" && r % 2 == 0 && lg.family.w % (r + 1) == 0 &&
             lg.family.h % (r + 1) == 0)
      mode = "torus";
    else
      mode = "greedy";
  }

  PartitionCertificate cert;
  try {
    if (mode == "cycle") {
      cert = tile_cycle(g, r);
    } else if (mode == "torus") {
      Graph torus = require_torus(lg, w, h);
      cert = tile_torus(torus, w, h, r);
    } else {
      cert = greedy_ball_carve(g, r, seed);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "partition failed: " << e.what()
              << " (hint: --mode greedy works on any graph)\n";
    return 2;
  }
  VerifyResult check = verify_certificate(g, cert);
  if (!out_path.empty()) save_certificate(cert, out_path);

  output.report["command"] = "partition";
  output.report["config"] = {{"graph", graph_path}, {"r", r}, {"mode", mode}, {"seed", seed}};
  output.metric("mode", mode);
  output.metric("n", g.vertex_count());
  output.metric("r", r);
  output.metric("communities", (long long)cert.communities.size());
  output.metric("cut_edges", (long long)cert.cut_edges.size());
  output.metric("epsilon", check.epsilon);
  output.metric("non_amenable_regime", check.epsilon > 0.5);
  output.bound("certificate_valid", check.valid ? 1.0 : 0.0, 1.0, check.valid);
  std::cerr << "partition (" << mode << "): " << cert.communities.size()
            << " communities, epsilon " << check.epsilon
            << (check.epsilon > 0.5 ? " [non-amenable regime]" : "")
            << (check.valid ? ", certificate valid" : ", INVALID: " + check.violation);
  if (!out_path.empty()) std::cerr << " -> " << out_path;
  std::cerr << '\n';
  output.emit(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(),
              csv_header);
  return output.ok ? 0 : 1;
}

// ---- simulate ----------------------------------------------------------------

int run_simulate(const std::string& graph_path, const std::string& cert_path,
                 const std::string& sim, long long trials, std::uint64_t seed, int r, int w,
                 int h, Output& output, bool csv_header) {
  auto start = std::chrono::steady_clock::now();
  LoadedGraph lg = load_graph(graph_path);
  const Graph& g = lg.graph;

  output.report["command"] = "simulate";
  output.report["config"] = {{"graph", graph_path}, {"sim", sim}, {"trials", trials},
                             {"seed", seed}};
  output.metric("sim", sim);
  output.metric("n", g.vertex_count());
  output.metric("trials", trials);
  output.metric("seed", (long long)seed);

  if (sim == "private") {
    PartitionCertificate cert = load_certificate(cert_path);
    double exact = exact_private_leader(g, cert);
    MonteCarloStats stats = simulate_private_leader(g, cert, trials, seed);
    double tol = 4.0 * stats.std_error;
    output.metric("exact", exact);
    output.metric("mean", stats.mean);
    output.metric("std_error", stats.std_error);
    output.report["metrics"]["stats"] = stats_json(stats, cert.epsilon, true);
    output.bound("mean_within_4se_of_exact", std::abs(stats.mean - exact), tol,
                 std::abs(stats.mean - exact) <= tol);
    output.bound("mean_at_most_epsilon", stats.mean, cert.epsilon + tol,
                 stats.mean <= cert.epsilon + tol);
    std::cerr << "private leader play: exact " << exact << ", mc " << stats.mean << " +- "
              << stats.std_error << '\n';
  } else if (sim == "public") {
    PartitionCertificate cert = load_certificate(cert_path);
    PeelTrace trace;
    StablePartition sp = peel_to_stable(g, cert, &trace);
    double exact = exact_public_stable(g, sp);
    double limit = cert.epsilon * double(g.max_degree());
    MonteCarloStats stats = simulate_public_stable(g, sp, trials, seed);
    double tol = 4.0 * stats.std_error;
    output.metric("peel_steps", trace.steps);
    output.metric("unassigned", (long long)sp.unassigned.size());
    output.metric("deleted_fraction", exact);
    output.metric("mean", stats.mean);
    output.metric("std_error", stats.std_error);
    output.report["metrics"]["stats"] = stats_json(stats, limit, stats.mean <= limit + tol);
    output.bound("mean_within_4se_of_exact", std::abs(stats.mean - exact), tol,
                 std::abs(stats.mean - exact) <= tol);
    output.bound("mean_at_most_epsilon_dmax", stats.mean, limit + tol,
                 stats.mean <= limit + tol);
    std::cerr << "public stable play: peeled " << trace.steps << " vertices, mc "
              << stats.mean << " vs bound " << limit << '\n';
  } else if (sim == "transitive") {
    Graph torus = require_torus(lg, w, h);
    LocalTransitiveResult res = simulate_local_transitive(torus, w, h, r, trials, seed);
    double tol = 4.0 * res.deleted_fraction.std_error;
    double usig = 4.0 * std::max(res.uncovered_rate.std_error, 1e-12);
    output.metric("r", r);
    output.metric("selection_p", res.selection_p);
    output.metric("squares_per_vertex", res.squares_per_vertex);
    output.metric("tile_epsilon", res.tile_epsilon);
    output.metric("inefficiency_mean", res.inefficiency.mean);
    output.metric("deleted_mean", res.deleted_fraction.mean);
    output.metric("deleted_std_error", res.deleted_fraction.std_error);
    output.metric("uncovered_mean", res.uncovered_rate.mean);
    output.report["metrics"]["stats"] =
        stats_json(res.deleted_fraction, res.deleted_bound,
                   res.deleted_fraction.mean <= res.deleted_bound + tol);
    output.bound("deleted_at_most_selection_bound", res.deleted_fraction.mean,
                 res.deleted_bound + tol, res.deleted_fraction.mean <= res.deleted_bound + tol);
    output.bound("uncovered_matches_expectation",
                 std::abs(res.uncovered_rate.mean - res.expected_uncovered), usig,
                 std::abs(res.uncovered_rate.mean - res.expected_uncovered) <= usig);
    std::cerr << "tile-selection play: p " << res.selection_p << ", deleted "
              << res.deleted_fraction.mean << " vs bound " << res.deleted_bound
              << ", inefficiency " << res.inefficiency.mean << '\n';
  } else {
    std::cerr << "unknown simulator: " << sim << '\n';
    return 2;
  }
  output.emit(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(),
              csv_header);
  return output.ok ? 0 : 1;
}

// ---- influence ---------------------------------------------------------------

int run_influence(const std::string& fn_path, const std::string& fn2_path, bool sweep,
                  int count, int max_inputs, std::uint64_t seed, Output& output,
                  bool csv_header) {
  auto start = std::chrono::steady_clock::now();
  output.report["command"] = "influence";
  output.report["config"] = {{"fn", fn_path}, {"fn2", fn2_path}, {"sweep", sweep},
                             {"count", count}, {"max_inputs", max_inputs}, {"seed", seed}};

  if (sweep) {
    auto model = uniform_binary_model(max_inputs);
    Rng rng(seed);
    int violations = 0;
    double max_dev = 0.0;
    double max_margin = -1.0;
    for (int rep = 0; rep < count; ++rep) {
      std::vector<int> scope;
      for (int v = 0; v < max_inputs; ++v)
        if (rng.next_unit() < 0.6) scope.push_back(v);
      if (scope.empty()) scope.push_back(int(rng.next_below(std::uint64_t(max_inputs))));
      LocalFunction f = random_standardized_function(model, scope, rng);
      LocalFunction h = f;
      if (rep % 2 == 0) {
        double delta = (rep % 4 == 0) ? 0.05 : 0.5;
        for (double& x : h.table) x += delta * (2.0 * rng.next_unit() - 1.0);
        h = normalize(h);
      } else {
        h = random_standardized_function(model, scope, rng);
      }
      ContractionReport rep_out = contraction_check(f, h);
      if (!rep_out.holds) ++violations;
      max_margin = std::max(max_margin, rep_out.tv - rep_out.l2);

      SubsetValues weights = fourier_weights(f);
      SubsetValues dividends = harsanyi_dividends(variance_game(f));
      for (std::size_t mask = 0; mask < weights.size(); ++mask)
        max_dev = std::max(max_dev, std::abs(weights[mask] - dividends[mask]));
    }
    output.metric("pairs", count);
    output.metric("violations", violations);
    output.metric("max_tv_minus_l2", max_margin);
    output.metric("max_fourier_moebius_dev", max_dev);
    output.bound("contraction_violations", violations, 0, violations == 0);
    output.bound("fourier_matches_moebius", max_dev, 1e-9, max_dev < 1e-9);
    std::cerr << "influence sweep: " << count << " pairs, " << violations
              << " violations, max fourier/moebius deviation " << max_dev << '\n';
  } else if (!fn2_path.empty()) {
    LocalFunction f = normalize(load_function(fn_path));
    LocalFunction h = normalize(load_function(fn2_path));
    ContractionReport rep = contraction_check(f, h);
    output.metric("tv", rep.tv);
    output.metric("l2", rep.l2);
    output.metric("dividend_gap", rep.dividend_gap);
    output.bound("tv_at_most_l2", rep.tv, rep.l2 + 1e-9, rep.holds);
    std::cerr << "contraction: tv " << rep.tv << " <= l2 " << rep.l2 << " : "
              << (rep.holds ? "holds" : "VIOLATED") << '\n';
  } else {
    LocalFunction f = normalize(load_function(fn_path));
    InfluenceDistribution mu = shapley_influence(f);
    output.report["metrics"]["mu"] = mu;
    double sum = 0.0;
    for (double mass : mu) sum += mass;
    output.metric("mass_total", sum);
    output.bound("mu_is_probability", std::abs(sum - 1.0), 1e-9, std::abs(sum - 1.0) <= 1e-9);
    std::cerr << "influence distribution over " << mu.size() << " variables written\n";
  }
  output.emit(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(),
              csv_header);
  return output.ok ? 0 : 1;
}

// ---- certify -----------------------------------------------------------------

int run_certify(const std::string& graph_path, const std::string& profile_path,
                const std::string& builtin, const std::string& cert_path, double self_weight,
                int r, long long trials, std::uint64_t seed, const std::string& out_path,
                Output& output, bool csv_header) {
  auto start = std::chrono::steady_clock::now();
  LoadedGraph lg = load_graph(graph_path);
  const Graph& g = lg.graph;

  StrategyProfile profile;
  if (!profile_path.empty()) {
    profile = load_profile(profile_path);
  } else if (builtin == "iid") {
    profile = make_iid_profile(g);
  } else {
    PartitionCertificate base = load_certificate(cert_path);
    profile = builtin == "perturbed" ? make_perturbed_leader_profile(g, base, self_weight)
                                     : make_leader_profile(g, base);
  }

  DistributionFamily family = profile_influences(g, r, profile);
  double eps = profile_epsilon(g, profile);
  CertificateEstimate est = extract_certificate(g, r, family, trials, seed, eps);
  double tol = 4.0 * est.std_error;

  const PartitionCertificate& sample = est.samples.at(0);
  VerifyResult check = verify_certificate(g, sample);
  int max_set_radius = 0;
  for (const VertexSet& c : sample.communities)
    max_set_radius = std::max(max_set_radius, set_radius(g, c).radius);
  if (!out_path.empty()) save_certificate(sample, out_path);

  output.report["command"] = "certify";
  output.report["config"] = {{"graph", graph_path},   {"profile", profile_path},
                             {"builtin", builtin},    {"r", r},
                             {"trials", trials},      {"seed", seed},
                             {"self_weight", self_weight}};
  output.metric("n", g.vertex_count());
  output.metric("r", r);
  output.metric("trials", trials);
  output.metric("profile_epsilon", eps);
  output.metric("mean_cut_fraction", est.mean_cut_fraction);
  output.metric("std_error", est.std_error);
  output.metric("bound", est.bound);
  output.metric("sample_communities", (long long)sample.communities.size());
  // Two radius notions for the sample: containment in the leader's ball
  // (guaranteed at r) and the tighter member-centered set radius.
  output.metric("sample_containment_radius", r);
  output.metric("sample_max_set_radius", max_set_radius);
  output.bound("cut_fraction_at_most_sqrt_8eps", est.mean_cut_fraction, est.bound + tol,
               est.mean_cut_fraction <= est.bound + tol);
  output.bound("sample_certificate_valid", check.valid ? 1.0 : 0.0, 1.0, check.valid);
  std::cerr << "certify: profile epsilon " << eps << ", cut fraction " << est.mean_cut_fraction
            << " <= " << est.bound << (output.ok ? " (pass)" : " (FAIL)");
  if (!out_path.empty()) std::cerr << ", sample -> " << out_path;
  std::cerr << '\n';
  output.emit(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(),
              csv_header);
  return output.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"netcoord: local coordination experiments on finite graphs"};
  app.set_config("--config", "", "key=value config file; command-line flags take precedence");
  app.require_subcommand(1);
  // --h is a torus dimension below, so help lives on --help only.
  app.set_help_flag("--help", "print help");

  std::string format = "json";
  bool csv_header = false;
  app.add_option("--format", format, "report format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_flag("--csv-header", csv_header, "emit a CSV header line before the row");

  // generate
  auto* gen = app.add_subcommand("generate", "write a graph file");
  gen->set_help_flag("--help");
  gen->fallthrough();
  gen->require_subcommand(1);
  struct GenOpts {
    int n = 0, w = 0, h = 0, depth = 0;
    double d = 0.0;
    std::uint64_t seed = 0;
    std::string out;
  } gen_opts;
  auto* gen_cycle = gen->add_subcommand("cycle");
  gen_cycle->set_help_flag("--help");
  gen_cycle->fallthrough();
  gen_cycle->add_option("--n", gen_opts.n)->required();
  auto* gen_torus = gen->add_subcommand("torus");
  gen_torus->set_help_flag("--help");
  gen_torus->fallthrough();
  gen_torus->add_option("--w", gen_opts.w)->required();
  gen_torus->add_option("--h", gen_opts.h)->required();
  auto* gen_tree = gen->add_subcommand("tree");
  gen_tree->set_help_flag("--help");
  gen_tree->fallthrough();
  gen_tree->add_option("--depth", gen_opts.depth)->required();
  auto* gen_er = gen->add_subcommand("er");
  gen_er->set_help_flag("--help");
  gen_er->fallthrough();
  gen_er->add_option("--n", gen_opts.n)->required();
  gen_er->add_option("--d", gen_opts.d)->required();
  gen_er->add_option("--seed", gen_opts.seed);
  for (auto* sub : {gen_cycle, gen_torus, gen_tree, gen_er})
    sub->add_option("--out", gen_opts.out, "output graph file")->required();

  // partition
  auto* part = app.add_subcommand("partition", "build and verify a certificate");
  part->set_help_flag("--help");
  part->fallthrough();
  std::string part_graph, part_mode = "auto", part_out;
  int part_r = 0, part_w = 0, part_h = 0;
  std::uint64_t part_seed = 0;
  part->add_option("--graph", part_graph)->required();
  part->add_option("--r", part_r)->required();
  part->add_option("--mode", part_mode)->check(CLI::IsMember({"auto", "cycle", "torus", "greedy"}));
  part->add_option("--seed", part_seed);
  part->add_option("--w", part_w);
  part->add_option("--h", part_h);
  part->add_option("--out", part_out, "certificate output file");

  // simulate
  auto* sim = app.add_subcommand("simulate", "run a leader-play simulator");
  sim->set_help_flag("--help");
  sim->fallthrough();
  std::string sim_graph, sim_cert, sim_kind;
  long long sim_trials = 10000;
  std::uint64_t sim_seed = 0;
  int sim_r = 0, sim_w = 0, sim_h = 0;
  sim->add_option("--graph", sim_graph)->required();
  sim->add_option("--sim", sim_kind, "private | public | transitive")->required();
  sim->add_option("--cert", sim_cert);
  sim->add_option("--trials", sim_trials);
  sim->add_option("--seed", sim_seed);
  sim->add_option("--r", sim_r);
  sim->add_option("--w", sim_w);
  sim->add_option("--h", sim_h);

  // influence
  auto* infl = app.add_subcommand("influence", "influence distributions and contraction");
  infl->set_help_flag("--help");
  infl->fallthrough();
  std::string infl_fn, infl_fn2;
  bool infl_sweep = false;
  int infl_count = 1000, infl_inputs = 8;
  std::uint64_t infl_seed = 0;
  infl->add_option("--fn", infl_fn);
  infl->add_option("--fn2", infl_fn2);
  infl->add_flag("--sweep", infl_sweep, "random contraction + fourier cross-check sweep");
  infl->add_option("--count", infl_count);
  infl->add_option("--max-inputs", infl_inputs)->check(CLI::Range(1, 12));
  infl->add_option("--seed", infl_seed);

  // certify
  auto* cert = app.add_subcommand("certify", "certificate from a strategy profile");
  cert->set_help_flag("--help");
  cert->fallthrough();
  std::string cert_graph, cert_profile, cert_builtin = "leader", cert_base, cert_out;
  double cert_self = 0.1;
  int cert_r = 0;
  long long cert_trials = 200;
  std::uint64_t cert_seed = 0;
  cert->add_option("--graph", cert_graph)->required();
  cert->add_option("--r", cert_r)->required();
  cert->add_option("--profile", cert_profile, "profile file; overrides --builtin");
  cert->add_option("--builtin", cert_builtin, "leader | perturbed | iid")
      ->check(CLI::IsMember({"leader", "perturbed", "iid"}));
  cert->add_option("--cert", cert_base, "certificate for the built-in leader profiles");
  cert->add_option("--self-weight", cert_self);
  cert->add_option("--trials", cert_trials);
  cert->add_option("--seed", cert_seed);
  cert->add_option("--out", cert_out, "sample certificate output file");

  CLI11_PARSE(app, argc, argv);

  Output output;
  output.format = format;
  try {
    if (gen->parsed()) {
      std::string family = gen_cycle->parsed()   ? "cycle"
                           : gen_torus->parsed() ? "torus"
                           : gen_tree->parsed()  ? "tree"
                                                 : "er";
      return run_generate(family, gen_opts.n, gen_opts.w, gen_opts.h, gen_opts.depth,
                          gen_opts.d, gen_opts.seed, gen_opts.out, output, csv_header);
    }
    if (part->parsed())
      return run_partition(part_graph, part_r, part_mode, part_seed, part_w, part_h, part_out,
                           output, csv_header);
    if (sim->parsed())
      return run_simulate(sim_graph, sim_cert, sim_kind, sim_trials, sim_seed, sim_r, sim_w,
                          sim_h, output, csv_header);
    if (infl->parsed()) {
      if (!infl_sweep && infl_fn.empty()) {
        std::cerr << "influence: pass --fn (and optionally --fn2) or --sweep\n";
        return 2;
      }
      return run_influence(infl_fn, infl_fn2, infl_sweep, infl_count, infl_inputs, infl_seed,
                           output, csv_header);
    }
    if (cert->parsed()) {
      if (cert_profile.empty() && cert_builtin != "iid" && cert_base.empty()) {
        std::cerr << "certify: built-in leader profiles need --cert\n";
        return 2;
      }
      return run_certify(cert_graph, cert_profile, cert_builtin, cert_base, cert_self, cert_r,
                         cert_trials, cert_seed, cert_out, output, csv_header);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
