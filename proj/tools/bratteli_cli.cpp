// Command-line front end: counting tables, graph exports, chain tables,
// verification runs, and Monte Carlo experiments as reproducible file
// outputs. Exit codes: 0 success, 1 invalid config, 2 verification failure,
// 3 internal invariant violation.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <bratteli/chains.hpp>
#include <bratteli/fusscat.hpp>
#include <bratteli/graphs.hpp>
#include <bratteli/montecarlo.hpp>
#include <bratteli/numeric.hpp>
#include <bratteli/paths.hpp>

namespace {

using namespace bratteli;

constexpr const char* kVersion = "bratteli 1.0";

std::string fmtd(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

struct Range {
  long lo = 0, hi = 0;
};

Range parse_range(const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos)
    throw std::invalid_argument("range must look like lo..hi: " + text);
  Range r;
  size_t used = 0;
  r.lo = std::stol(text.substr(0, dots), &used);
  if (used != dots) throw std::invalid_argument("bad range bound: " + text);
  std::string hi = text.substr(dots + 2);
  r.hi = std::stol(hi, &used);
  if (used != hi.size()) throw std::invalid_argument("bad range bound: " + text);
  if (r.lo > r.hi) throw std::invalid_argument("empty range: " + text);
  return r;
}

LatticePoint parse_point(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos)
    throw std::invalid_argument("point must look like x,y: " + text);
  LatticePoint p;
  size_t used = 0;
  p.x = std::stol(text.substr(0, comma), &used);
  if (used != comma) throw std::invalid_argument("bad point: " + text);
  std::string y = text.substr(comma + 1);
  p.y = std::stol(y, &used);
  if (used != y.size()) throw std::invalid_argument("bad point: " + text);
  return p;
}

std::pair<LatticePoint, LatticePoint> parse_segment(const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos)
    throw std::invalid_argument("segment must look like x,y..x,y: " + text);
  return {parse_point(text.substr(0, dots)), parse_point(text.substr(dots + 2))};
}

std::string mode_name(bool exact) { return exact ? "exact" : "float"; }

// Resolves the output stream: stdout by default, --out PATH otherwise, with
// relative paths joined onto $BRATTELI_OUT_DIR when that is set.
struct Sink {
  std::ofstream file;
  std::ostream* os = &std::cout;

  explicit Sink(const std::string& out_path) {
    if (out_path.empty()) return;
    std::string path = out_path;
    const char* dir = std::getenv("BRATTELI_OUT_DIR");
    if (dir && *dir && path.front() != '/')
      path = std::string(dir) + "/" + path;
    file.open(path, std::ios::binary);
    if (!file) throw std::invalid_argument("cannot open output file " + path);
    os = &file;
  }
  std::ostream& out() { return *os; }
};

void header(std::ostream& os, const std::string& config) {
  os << "# " << kVersion << "\n# config: " << config << "\n";
}

// ---- count ------------------------------------------------------------------

struct CountArgs {
  std::string motzkin_numbers, fuss_catalan, bracket_n, ballot, motzkin_paths;
  bool bracket = false;
  bool derooted = false;
  int s = 2;
  std::string w;
  std::string out;
};

int run_count(const CountArgs& a) {
  int selected = !a.motzkin_numbers.empty() + !a.fuss_catalan.empty() +
                 a.bracket + !a.ballot.empty() + !a.motzkin_paths.empty();
  if (selected != 1)
    throw std::invalid_argument(
        "pick exactly one of --motzkin-numbers, --fuss-catalan, --bracket, "
        "--ballot, --motzkin-paths");
  Sink sink(a.out);
  std::ostream& os = sink.out();
  if (!a.motzkin_numbers.empty()) {
    Range r = parse_range(a.motzkin_numbers);
    header(os, "count motzkin-numbers=" + a.motzkin_numbers + " format=csv");
    os << "n,value\n";
    for (long n = r.lo; n <= r.hi; ++n)
      os << n << "," << motzkin_number(n).get_str() << "\n";
  } else if (!a.fuss_catalan.empty()) {
    Range r = parse_range(a.fuss_catalan);
    header(os, "count fuss-catalan=" + a.fuss_catalan +
                   " s=" + std::to_string(a.s) + " format=csv");
    os << "n,value\n";
    for (long n = r.lo; n <= r.hi; ++n)
      os << n << "," << fuss_catalan(a.s, n).get_str() << "\n";
  } else if (a.bracket) {
    if (a.bracket_n.empty())
      throw std::invalid_argument("--bracket needs --n lo..hi");
    Range r = parse_range(a.bracket_n);
    header(os, "count bracket s=" + std::to_string(a.s) + " n=" + a.bracket_n +
                   " w=" + a.w + " derooted=" + (a.derooted ? "1" : "0") +
                   " format=csv");
    os << "n,value\n";
    for (long n = r.lo; n <= r.hi; ++n)
      os << n << ","
         << (a.derooted ? bracket_dim_derooted(a.s, n, a.w)
                        : bracket_dim(a.s, n, a.w))
                .get_str()
         << "\n";
  } else if (!a.ballot.empty()) {
    auto [from, to] = parse_segment(a.ballot);
    header(os, "count ballot=" + a.ballot + " format=csv");
    os << "from_x,from_y,to_x,to_y,count\n";
    os << from.x << "," << from.y << "," << to.x << "," << to.y << ","
       << count_ballot(from, to).get_str() << "\n";
  } else {
    auto [from, to] = parse_segment(a.motzkin_paths);
    header(os, "count motzkin-paths=" + a.motzkin_paths + " format=csv");
    os << "from_x,from_y,to_x,to_y,count\n";
    os << from.x << "," << from.y << "," << to.x << "," << to.y << ","
       << count_motzkin(from, to).get_str() << "\n";
  }
  return 0;
}

// ---- graph ------------------------------------------------------------------

struct GraphArgs {
  bool semi_pascal = false, motzkin = false, half_line = false, bsharp = false,
       fc_tree_sel = false;
  int s = 2;
  bool derooted = false;
  bool do_pascalize = false, do_contraction = false;
  int levels = 5;
  std::string format = "dot";
  int verify_iso = -1;
  std::string out;
};

int run_graph(const GraphArgs& a) {
  int selected = a.semi_pascal + a.motzkin + a.half_line + a.bsharp +
                 static_cast<int>(a.fc_tree_sel);
  if (selected != 1)
    throw std::invalid_argument(
        "pick exactly one of --semi-pascal, --motzkin, --half-line, "
        "--bsharp, --fc-tree");
  if (a.levels < 0) throw std::invalid_argument("--levels must be >= 0");
  Sink sink(a.out);
  std::ostream& os = sink.out();

  if (a.verify_iso >= 0) {
    if (!a.bsharp)
      throw std::invalid_argument("--verify-iso applies to --bsharp");
    header(os, "graph builder=bsharp verify-iso=" + std::to_string(a.verify_iso));
    auto p = pascalize(fc_tree(2, a.verify_iso, true), a.verify_iso);
    auto b = bsharp_graph(a.verify_iso);
    auto iso = graphs_isomorphic_up_to(
        p, b, a.verify_iso,
        [](int, const std::string& w) { return phi_map(w); });
    if (iso.isomorphic) {
      os << "verify bsharp-iso levels=" << a.verify_iso << ": PASS\n";
      return 0;
    }
    os << "verify bsharp-iso levels=" << a.verify_iso
       << ": FAIL at level " << iso.failed_level << "\n";
    return 2;
  }

  std::string name;
  LeveledMultiGraph g;
  if (a.semi_pascal) {
    name = "semi-pascal";
    g = semi_pascal(a.levels);
  } else if (a.motzkin) {
    name = "motzkin";
    g = motzkin_graph(a.levels);
  } else if (a.half_line) {
    name = "half-line";
    g = half_line(a.levels);
  } else if (a.bsharp) {
    name = "bsharp";
    g = bsharp_graph(a.levels);
  } else {
    name = "fc-tree";
    g = fc_tree(a.s, a.levels, a.derooted);
  }
  std::string transform = "none";
  if (a.do_pascalize && a.do_contraction)
    throw std::invalid_argument("--pascalize and --even-contraction conflict");
  if (a.do_pascalize) {
    transform = "pascalize";
    g = pascalize(g, a.levels);
  } else if (a.do_contraction) {
    transform = "even-contraction";
    g = even_contraction(g, a.levels);
  }
  if (a.format != "dot" && a.format != "json")
    throw std::invalid_argument("--format must be dot or json");
  std::ostringstream cfg;
  cfg << "graph builder=" << name;
  if (a.fc_tree_sel)
    cfg << " s=" << a.s << " derooted=" << (a.derooted ? 1 : 0);
  cfg << " transform=" << transform << " levels=" << a.levels
      << " format=" << a.format;
  header(os, cfg.str());
  os << (a.format == "dot" ? graph_dot(g, a.levels) : graph_json(g, a.levels));
  return 0;
}

// ---- chain ------------------------------------------------------------------

struct ChainArgs {
  std::string kind;
  std::string lambda, l1, l2, eta, up;
  std::string end = "2";
  int s = 2;
  bool derooted = false;
  int levels = 8;
  std::string format = "csv";
  std::vector<std::string> verify;  // levels, tol
  int weights_level = -1;
  std::string out;
};

ChainModel build_chain(const ChainArgs& a, std::ostringstream& cfg) {
  cfg << "chain kind=" << a.kind;
  auto need = [](const std::string& v, const char* flag) {
    if (v.empty())
      throw std::invalid_argument(std::string("missing ") + flag);
    return parse_real(v);
  };
  if (a.kind == "ballot") {
    Prob l = need(a.lambda, "--lambda");
    cfg << " lambda=" << a.lambda;
    return ballot_chain(l);
  }
  if (a.kind == "control") {
    Prob u = need(a.up, "--up");
    cfg << " up=" << a.up;
    return control_chain(u);
  }
  if (a.kind == "motzkin") {
    Prob p1 = need(a.l1, "--l1"), p2 = need(a.l2, "--l2");
    cfg << " l1=" << a.l1 << " l2=" << a.l2;
    return motzkin_chain(p1, p2);
  }
  if (a.kind == "fib") {
    Prob e = need(a.eta, "--eta");
    cfg << " eta=" << a.eta << " end=" << a.end << " s=" << a.s
        << " derooted=" << (a.derooted ? 1 : 0);
    return fib_walk(parse_end(a.end, a.s, !a.derooted), e, a.s, a.derooted);
  }
  if (a.kind == "aux") {
    Prob e = need(a.eta, "--eta");
    cfg << " eta=" << a.eta;
    return aux_walk(e);
  }
  throw std::invalid_argument("unknown chain kind " + a.kind);
}

int run_chain(const ChainArgs& a) {
  Sink sink(a.out);
  std::ostream& os = sink.out();
  std::ostringstream cfg;
  ChainModel chain = build_chain(a, cfg);
  cfg << " mode=" << mode_name(chain.exact);

  if (!a.verify.empty()) {
    int n = std::stoi(a.verify.at(0));
    double tol = std::stod(a.verify.at(1));
    cfg << " verify-centrality=" << n << " tol=" << a.verify.at(1);
    header(os, cfg.str());
    auto rep = verify_centrality(chain, n, tol);
    if (rep.pass) {
      os << "verify centrality levels=" << rep.levels_checked
         << ": PASS max_spread=" << fmtd(rep.max_spread) << "\n";
      return 0;
    }
    os << "verify centrality levels=" << rep.levels_checked
       << ": FAIL at level " << rep.worst_level << " vertex "
       << rep.worst_vertex << " spread=" << fmtd(rep.max_spread) << " ("
       << rep.reason << ")\n";
    return 2;
  }

  if (a.weights_level >= 0) {
    cfg << " trace-weights=" << a.weights_level << " format=csv";
    header(os, cfg.str());
    auto w = trace_weights(chain, a.weights_level);
    auto dims = dims_of_level(chain.graph, a.weights_level);
    os << "level,vertex,dim,weight\n";
    for (size_t i = 0; i < w.size(); ++i)
      os << a.weights_level << "," << chain.graph.levels[a.weights_level][i]
         << "," << dims[i].get_str() << "," << w[i].str() << "\n";
    return 0;
  }

  if (a.format != "csv" && a.format != "json")
    throw std::invalid_argument("--format must be csv or json");
  cfg << " levels=" << a.levels << " format=" << a.format;
  header(os, cfg.str());
  chain.ensure(std::min(a.levels, chain.horizon));
  if (chain.horizon < a.levels)
    os << "# horizon: " << chain.horizon << "\n";
  os << (a.format == "csv" ? chain_csv(chain, a.levels)
                           : chain_json(chain, a.levels) + "\n");
  return 0;
}

// ---- simulate ----------------------------------------------------------------

struct SimArgs {
  std::string experiment;
  std::string eta = "0";
  std::string end = "2";
  int s = 2;
  bool derooted = false;
  bool aux = false;
  long n = 1;
  long k = 10;
  long count = 10000;
  long steps = 1000;
  long horizon = 0;  // 0: derived from k
  long margin = 30;
  int threshold = 10;
  std::string method = "increments";
  double l1 = 0, l2 = 0;
  int order = 32;
  std::uint64_t seed = 12345;
  std::string out;
};

ChainModel sim_walk(const SimArgs& a, const Prob& eta) {
  if (a.aux) return aux_walk(eta);
  return fib_walk(parse_end(a.end, a.s, !a.derooted), eta, a.s, a.derooted);
}

void summary_line(std::ostream& os, const nlohmann::json& j) {
  os << "# summary " << j.dump() << "\n";
}

void estimate_csv(std::ostream& os, const std::string& parameter,
                  double estimate, double stderr_,
                  const std::string& exact_target) {
  os << "parameter,estimate,stderr,exact_target\n";
  os << parameter << "," << fmtd(estimate) << "," << fmtd(stderr_) << ","
     << exact_target << "\n";
}

int run_simulate(const SimArgs& a) {
  Sink sink(a.out);
  std::ostream& os = sink.out();
  std::ostringstream cfg;
  cfg << "simulate experiment=" << a.experiment;
  nlohmann::json summary;
  summary["experiment"] = a.experiment;
  summary["seed"] = a.seed;

  if (a.experiment == "su2") {
    cfg << " l1=" << fmtd(a.l1) << " l2=" << fmtd(a.l2) << " n=" << a.n
        << " order=" << a.order;
    header(os, cfg.str());
    auto r = su2_moment(a.l1, a.l2, a.n, a.order);
    double target =
        motzkin_marginal_rows(Prob(a.l1), Prob(a.l2), static_cast<int>(a.n))
            .at(static_cast<size_t>(a.n))
            .at(0)
            .value();
    estimate_csv(os, "n=" + std::to_string(a.n), r.value, r.err, fmtd(target));
    summary["value"] = r.value;
    summary["err"] = r.err;
    summary["exact_target"] = target;
    summary_line(os, summary);
    return 0;
  }

  Prob eta = parse_real(a.eta);
  cfg << " eta=" << a.eta << " mode=" << mode_name(eta.is_exact());
  summary["eta"] = eta.value();

  if (a.experiment == "returns") {
    auto chain = sim_walk(a, eta);
    cfg << " end=" << a.end << " s=" << a.s << " n=" << a.n
        << " count=" << a.count << " seed=" << a.seed;
    header(os, cfg.str());
    auto r = empirical_return_probability(chain, a.n, a.count, a.seed);
    estimate_csv(os, "n=" + std::to_string(a.n), r.estimate, r.stderr_,
                 fmtd(r.exact_target));
    summary["estimate"] = r.estimate;
    summary["stderr"] = r.stderr_;
    summary["exact_target"] = r.exact_target;
    summary["count"] = r.count;
    summary_line(os, summary);
    return 0;
  }

  if (a.experiment == "exit-times") {
    if (a.method != "increments" && a.method != "direct")
      throw std::invalid_argument("--method must be increments or direct");
    cfg << " end=" << a.end << " k=" << a.k << " count=" << a.count
        << " method=" << a.method << " seed=" << a.seed;
    std::vector<ExitTimeRecord> recs;
    if (a.method == "increments") {
      header(os, cfg.str());
      recs = exit_times_increments(parse_end(a.end, a.s, !a.derooted),
                                   eta.value(), a.k, a.count, a.seed);
    } else {
      long horizon = a.horizon > 0 ? a.horizon : 100 * a.k + 4000;
      cfg << " horizon=" << horizon << " margin=" << a.margin;
      header(os, cfg.str());
      auto chain = sim_walk(a, eta);
      recs = exit_times_direct(chain, a.k, horizon, a.count, a.seed, a.margin);
    }
    os << exit_records_csv(recs);
    double mean = 0;
    long used = 0, censored = 0;
    for (const auto& r : recs) {
      censored += r.censored;
      if (!r.censored) {
        mean += r.ratio;
        ++used;
      }
    }
    summary["k"] = a.k;
    summary["count"] = a.count;
    summary["censored"] = censored;
    summary["mean_ratio"] = used > 0 ? mean / static_cast<double>(used) : 0.0;
    summary["method"] = a.method;
    summary_line(os, summary);
    return 0;
  }

  if (a.experiment == "lln") {
    cfg << " end=" << a.end << " k=" << a.k << " count=" << a.count
        << " seed=" << a.seed;
    header(os, cfg.str());
    auto r = lln_experiment(parse_end(a.end, a.s, !a.derooted), eta.value(),
                            a.k, a.count, a.seed);
    os << "eta,k,count,mean,stddev,stderr,median,target,censored\n";
    os << fmtd(r.eta) << "," << r.k << "," << r.count << "," << fmtd(r.mean)
       << "," << fmtd(r.stddev) << "," << fmtd(r.stderr_) << ","
       << fmtd(r.median) << "," << fmtd(r.target) << "," << r.censored << "\n";
    summary["k"] = r.k;
    summary["count"] = r.count;
    summary["mean"] = r.mean;
    summary["stderr"] = r.stderr_;
    summary["median"] = r.median;
    summary["target"] = r.target;
    summary["censored"] = r.censored;
    summary_line(os, summary);
    return 0;
  }

  if (a.experiment == "convergence") {
    auto chain = sim_walk(a, eta);
    cfg << " end=" << a.end << " aux=" << (a.aux ? 1 : 0)
        << " steps=" << a.steps << " count=" << a.count
        << " threshold=" << a.threshold << " seed=" << a.seed;
    header(os, cfg.str());
    double f =
        convergence_to_end(chain, parse_end(a.end, a.s, true), static_cast<int>(a.steps),
                           a.count, a.seed, a.threshold);
    double se = std::sqrt(f * (1 - f) / static_cast<double>(a.count));
    estimate_csv(os, "threshold=" + std::to_string(a.threshold), f, se, "");
    summary["fraction"] = f;
    summary["steps"] = a.steps;
    summary["count"] = a.count;
    summary["threshold"] = a.threshold;
    summary_line(os, summary);
    return 0;
  }

  if (a.experiment == "recurrence") {
    auto chain = sim_walk(a, eta);
    cfg << " aux=" << (a.aux ? 1 : 0) << " steps=" << a.steps
        << " count=" << a.count << " seed=" << a.seed;
    header(os, cfg.str());
    auto returns = root_returns(chain, a.steps, a.count, a.seed);
    double mean = 0;
    for (long r : returns) mean += static_cast<double>(r);
    mean /= static_cast<double>(returns.size());
    double var = 0;
    for (long r : returns) {
      double d = static_cast<double>(r) - mean;
      var += d * d;
    }
    double se = returns.size() > 1
                    ? std::sqrt(var / static_cast<double>(returns.size() - 1) /
                                static_cast<double>(returns.size()))
                    : 0.0;
    estimate_csv(os, "steps=" + std::to_string(a.steps), mean, se, "");
    summary["mean_returns"] = mean;
    summary["steps"] = a.steps;
    summary["count"] = a.count;
    summary_line(os, summary);
    return 0;
  }

  throw std::invalid_argument("unknown experiment " + a.experiment);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact combinatorics and simulation on branching graphs"};
  app.require_subcommand(1);

  CountArgs ca;
  auto* count = app.add_subcommand("count", "counting tables");
  count->add_option("--motzkin-numbers", ca.motzkin_numbers, "range lo..hi");
  count->add_option("--fuss-catalan", ca.fuss_catalan, "range lo..hi");
  count->add_flag("--bracket", ca.bracket, "bracket dimensions of a word");
  count->add_option("--n", ca.bracket_n, "bracket range lo..hi");
  count->add_option("--w", ca.w, "bracket word (digits, empty for the root)");
  count->add_option("--s", ca.s, "tree order")->check(CLI::PositiveNumber);
  count->add_flag("--derooted", ca.derooted, "derooted bracket");
  count->add_option("--ballot", ca.ballot, "segment x,y..x,y");
  count->add_option("--motzkin-paths", ca.motzkin_paths, "segment x,y..x,y");
  count->add_option("--out", ca.out, "output file (default stdout)");

  GraphArgs ga;
  auto* graph = app.add_subcommand("graph", "graph exports and verification");
  graph->add_flag("--semi-pascal", ga.semi_pascal, "");
  graph->add_flag("--motzkin", ga.motzkin, "");
  graph->add_flag("--half-line", ga.half_line, "");
  graph->add_flag("--bsharp", ga.bsharp, "");
  graph->add_flag("--fc-tree", ga.fc_tree_sel, "");
  graph->add_option("--s", ga.s, "tree order")->check(CLI::PositiveNumber);
  graph->add_flag("--derooted", ga.derooted, "");
  graph->add_flag("--pascalize", ga.do_pascalize, "");
  graph->add_flag("--even-contraction", ga.do_contraction, "");
  graph->add_option("--levels", ga.levels, "levels to materialize");
  graph->add_option("--format", ga.format, "dot|json");
  graph->add_flag_callback("--dot", [&ga] { ga.format = "dot"; }, "");
  graph->add_flag_callback("--json", [&ga] { ga.format = "json"; }, "");
  graph->add_option("--verify-iso", ga.verify_iso,
                    "check bsharp == pascalized derooted Fibonacci tree");
  graph->add_option("--out", ga.out, "output file (default stdout)");

  ChainArgs ha;
  auto* chain = app.add_subcommand("chain", "central chain tables");
  chain->add_option("kind", ha.kind, "ballot|motzkin|fib|aux|control")
      ->required();
  chain->add_option("--lambda", ha.lambda, "ballot parameter");
  chain->add_option("--up", ha.up, "control chain up-probability");
  chain->add_option("--l1", ha.l1, "Motzkin lambda1");
  chain->add_option("--l2", ha.l2, "Motzkin lambda2");
  chain->add_option("--eta", ha.eta, "walk parameter");
  chain->add_option("--end", ha.end, "end as prefix:period over {1..s}");
  chain->add_option("--s", ha.s, "tree order")->check(CLI::PositiveNumber);
  chain->add_flag("--derooted", ha.derooted, "");
  chain->add_option("--levels,--depth", ha.levels, "table depth");
  chain->add_option("--format", ha.format, "csv|json");
  chain
      ->add_option("--verify-centrality", ha.verify,
                   "run the exhaustive centrality check: LEVELS TOL")
      ->expected(2);
  chain->add_option("--trace-weights", ha.weights_level,
                    "emit trace weights at this level");
  chain->add_option("--out", ha.out, "output file (default stdout)");

  SimArgs sa;
  auto* sim = app.add_subcommand("simulate", "Monte Carlo experiments");
  sim->add_option("experiment", sa.experiment,
                  "returns|exit-times|lln|convergence|recurrence|su2")
      ->required();
  sim->add_option("--eta", sa.eta, "walk parameter");
  sim->add_option("--end", sa.end, "end as prefix:period");
  sim->add_option("--s", sa.s, "tree order")->check(CLI::PositiveNumber);
  sim->add_flag("--derooted", sa.derooted, "");
  sim->add_flag("--aux", sa.aux, "use the auxiliary walk");
  sim->add_option("--n", sa.n, "return time index / su2 moment order");
  sim->add_option("--k", sa.k, "exit-time end index");
  sim->add_option("--count", sa.count, "trajectories");
  sim->add_option("--steps", sa.steps, "walk steps");
  sim->add_option("--horizon", sa.horizon, "direct exit-time horizon");
  sim->add_option("--margin", sa.margin, "direct declaration margin");
  sim->add_option("--threshold", sa.threshold, "convergence prefix length");
  sim->add_option("--method", sa.method, "increments|direct");
  sim->add_option("--l1", sa.l1, "su2 lambda1");
  sim->add_option("--l2", sa.l2, "su2 lambda2");
  sim->add_option("--order", sa.order, "su2 quadrature order");
  sim->add_option("--seed", sa.seed, "RNG seed");
  sim->add_option("--out", sa.out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    std::cout << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (count->parsed()) return run_count(ca);
    if (graph->parsed()) return run_graph(ga);
    if (chain->parsed()) return run_chain(ha);
    return run_simulate(sa);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
