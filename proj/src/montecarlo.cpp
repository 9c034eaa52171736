#include <bratteli/montecarlo.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <limits>
#include <optional>
#include <random>
#include <stdexcept>
#include <utility>

#include <bratteli/fusscat.hpp>

namespace bratteli {

namespace {

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

// ---- direct walk simulation on tree words -----------------------------------
//
// The chain tables cannot reach Monte Carlo depths (pascalized levels grow
// exponentially), so the samplers re-derive the stepping rule on tree words.
// Tables shared by all trajectories of one walk; a trajectory's state is the
// anchor index along the end plus the stack of labels hanging below it, so a
// step costs O(s) at any depth.

struct WalkTables {
  int s;
  bool derooted;
  bool aux;
  EndSpec end;
  double eta;
  double G;
  std::vector<double> gpow;      // G^0 .. G^s
  std::vector<double> fwd, bwd;  // fwd[j] = p(t_j -> t_{j+1}), bwd[0] = 0

  explicit WalkTables(const WalkParams& p)
      : s(p.s),
        derooted(p.derooted),
        aux(p.aux),
        end(p.end),
        eta(p.eta),
        G(p.g),
        gpow(static_cast<size_t>(p.s) + 1, 1.0) {
    for (int l = 1; l <= s; ++l) gpow[l] = gpow[l - 1] * G;
  }

  int end_label(size_t pos) const { return end.letter_at(pos) - '0'; }

  // labels of the children of t_j other than t_{j+1}
  std::vector<int> off_children(long j) const {
    std::vector<int> out;
    int lo = 1;
    if (j == 0) {
      if (!derooted) return out;  // rooted root: its only child is t_1
    } else {
      lo = s - end_label(static_cast<size_t>(j) - 1) + 1;
    }
    int next = end_label(static_cast<size_t>(j));
    for (int l = lo; l <= s; ++l)
      if (l != next) out.push_back(l);
    return out;
  }

  void ensure_fwd(long j) {
    if (aux) return;
    if (fwd.empty()) {
      double f0 = 1.0;
      for (int l : off_children(0)) f0 -= eta * gpow[l];
      fwd.push_back(f0);
      bwd.push_back(0.0);
    }
    while (static_cast<long>(fwd.size()) <= j) {
      long i = static_cast<long>(fwd.size());
      double b = eta / fwd[i - 1];
      double f = 1.0 - b;
      for (int l : off_children(i)) f -= eta * gpow[l];
      if (!(f > 0.0))
        throw std::logic_error("walk forward probability not positive");
      fwd.push_back(f);
      bwd.push_back(b);
    }
  }
};

struct WalkSim {
  WalkTables* t;
  long j = 0;             // anchor: current vertex sits below t_j
  std::vector<int> off;   // labels below the anchor, root side first

  explicit WalkSim(WalkTables& tables) : t(&tables) {}

  long depth() const { return j + static_cast<long>(off.size()); }
  bool at_root() const { return depth() == 0; }
  bool on_end_at(long k) const { return off.empty() && j == k; }

  void reset() {
    j = 0;
    off.clear();
  }

  void step(std::mt19937_64& rng) {
    double u = uniform01(rng);
    if (t->aux && off.empty()) {
      off.push_back(u * (1.0 + t->G) < 1.0 ? 1 : 2);
      return;
    }
    if (!off.empty()) {
      int c = off.back();
      double acc = 1.0 / t->gpow[c];  // parent
      if (u < acc) {
        off.pop_back();
        return;
      }
      for (int l = t->s - c + 1; l < t->s; ++l) {
        acc += t->eta * t->gpow[l];
        if (u < acc) {
          off.push_back(l);
          return;
        }
      }
      // remainder: 1/G^c + eta sum_{l=s-c+1}^{s} G^l = 1 identically, so the
      // label-s child absorbs the roundoff dust
      off.push_back(t->s);
      return;
    }
    t->ensure_fwd(j + 1);
    double acc = 0.0;
    if (j > 0) {
      acc += t->bwd[j];
      if (u < acc) {
        --j;
        return;
      }
    }
    for (int l : t->off_children(j)) {
      acc += t->eta * t->gpow[l];
      if (u < acc) {
        off.push_back(l);
        return;
      }
    }
    ++j;  // forward along the end as the remainder
  }

  std::string word() const {
    std::string w = t->end.vertex_at(static_cast<size_t>(j));
    for (int l : off) w.push_back(static_cast<char>('0' + l));
    return w;
  }
};

WalkTables walk_tables_of(const ChainModel& chain) {
  if (!chain.walk)
    throw std::invalid_argument(chain.name + " is not a tree walk");
  return WalkTables(*chain.walk);
}

// ---- increment laws ----------------------------------------------------------

// Inverse-CDF table for Y^(j), P[Y^(j) = 2n] = C^j_n eta^n / G^j, built with
// the s = 2 ratio recurrence
//   p_{n+1}/p_n = eta (3n+j)(3n+j+1)(3n+j+2) / ((n+1)(2n+j+1)(2n+j+2))
// and truncated at tail mass 1e-12 or at the hard cap (only reached near
// criticality, where draws past the cap come back censored).
struct YTable {
  std::vector<double> cum;
  long cap_value = 0;

  YTable(int jlab, double eta, double G) {
    const long hard_cap = 1000000;
    double p = 1.0;
    for (int i = 0; i < jlab; ++i) p /= G;
    double c = p;
    cum.push_back(c);
    for (long n = 0; 1.0 - c > 1e-12 && n < hard_cap; ++n) {
      double dn = static_cast<double>(n), dj = jlab;
      p *= eta * (3 * dn + dj) * (3 * dn + dj + 1) * (3 * dn + dj + 2) /
           ((dn + 1) * (2 * dn + dj + 1) * (2 * dn + dj + 2));
      c += p;
      cum.push_back(c);
    }
    cap_value = 2 * static_cast<long>(cum.size());
  }

  std::pair<long, bool> draw(double u) const {  // (Y, censored)
    auto it = std::upper_bound(cum.begin(), cum.end(), u);
    if (it == cum.end()) return {cap_value, true};
    return {2 * static_cast<long>(it - cum.begin()), false};
  }
};

void check_end_labels(const EndSpec& end) {
  for (char ch : end.prefix + end.period)
    if (ch != '1' && ch != '2')
      throw std::invalid_argument("increment laws need labels in {1,2}");
}

// ---- Gauss-Legendre nodes ------------------------------------------------------

void legendre_nodes(int m, std::vector<double>& xs, std::vector<double>& ws) {
  const double pi = std::acos(-1.0);
  xs.assign(m, 0.0);
  ws.assign(m, 0.0);
  for (int i = 0; i < (m + 1) / 2; ++i) {
    double t = std::cos(pi * (i + 0.75) / (m + 0.5));
    double dp = 1.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = t;
      for (int k = 2; k <= m; ++k) {
        double pk = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = pk;
      }
      dp = m * (t * p1 - p0) / (t * t - 1.0);
      double dt = p1 / dp;
      t -= dt;
      if (std::fabs(dt) < 1e-15) break;
    }
    xs[i] = t;
    xs[m - 1 - i] = -t;
    double w = 2.0 / ((1.0 - t * t) * dp * dp);
    ws[i] = w;
    ws[m - 1 - i] = w;
  }
}

double su2_eval(double l1, double l2, long n, int m) {
  const double pi = std::acos(-1.0);
  std::vector<double> xs, ws;
  legendre_nodes(m, xs, ws);
  long mphi = std::max<long>(m, n + 1);
  long mpsi = std::max<long>(2L * m, n + 1);
  double l3 = 1.0 - l1 - l2;
  double total = 0.0;
  for (int i = 0; i < m; ++i) {
    double c = std::sqrt((1.0 + xs[i]) / 2.0);  // cos(theta/2)
    double sub = 0.0;
    for (long a = 0; a < mphi; ++a) {
      double phi = 2.0 * pi * static_cast<double>(a) / static_cast<double>(mphi);
      for (long b = 0; b < mpsi; ++b) {
        double psi =
            4.0 * pi * static_cast<double>(b) / static_cast<double>(mpsi);
        std::complex<double> alpha = std::polar(c, 0.5 * (phi + psi));
        std::complex<double> z = l1 * alpha + l2 * std::conj(alpha) + l3;
        std::complex<double> zn = 1.0;
        for (long p = 0; p < n; ++p) zn *= z;
        sub += zn.real();
      }
    }
    total += ws[i] * sub / static_cast<double>(mphi * mpsi);
  }
  return total / 2.0;  // Legendre weights carry total mass 2
}

}  // namespace

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + (index + 1) * 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::vector<Trajectory> sample_trajectories(ChainModel& chain, int steps,
                                            long count, std::uint64_t seed) {
  if (steps < 0 || count < 1)
    throw std::invalid_argument("steps must be >= 0 and count positive");
  if (steps > chain.horizon)
    throw std::invalid_argument(chain.name + ": steps exceed the horizon");
  chain.ensure(steps);
  std::vector<Trajectory> out;
  out.reserve(static_cast<size_t>(count));
  for (long i = 0; i < count; ++i) {
    Trajectory t;
    t.seed = mix_seed(seed, static_cast<std::uint64_t>(i));
    std::mt19937_64 rng(t.seed);
    int idx = 0;
    t.vertices.push_back(chain.graph.levels[0][0]);
    for (int n = 0; n < steps; ++n) {
      const auto& row = chain.rows[n][static_cast<size_t>(idx)];
      if (!row)
        throw std::logic_error(chain.name + ": sampled an unreachable vertex");
      double u = uniform01(rng);
      double acc = 0.0;
      int next = -1;
      for (const auto& [w, p] : *row) {
        double pv = p.value();
        if (pv <= 0.0) continue;
        next = w;
        acc += pv;
        if (u < acc) break;
      }
      if (next < 0)
        throw std::logic_error(chain.name + ": row without positive mass");
      idx = next;
      t.vertices.push_back(chain.graph.levels[n + 1][static_cast<size_t>(idx)]);
    }
    out.push_back(std::move(t));
  }
  return out;
}

EstimateResult empirical_return_probability(ChainModel& chain, long n,
                                            long count, std::uint64_t seed) {
  WalkTables tables = walk_tables_of(chain);
  if (tables.aux || tables.derooted)
    throw std::invalid_argument(
        "return probability targets the rooted end-directed walk");
  if (n < 0 || count < 1)
    throw std::invalid_argument("n must be >= 0 and count positive");
  long hits = 0;
  WalkSim sim(tables);
  for (long i = 0; i < count; ++i) {
    std::mt19937_64 rng(mix_seed(seed, static_cast<std::uint64_t>(i)));
    sim.reset();
    for (long u = 0; u < 2 * n; ++u) sim.step(rng);
    hits += sim.at_root();
  }
  EstimateResult r;
  r.count = count;
  r.estimate = static_cast<double>(hits) / static_cast<double>(count);
  r.stderr_ =
      std::sqrt(r.estimate * (1.0 - r.estimate) / static_cast<double>(count));
  r.exact_target = fuss_catalan(tables.s, n).get_d() *
                   std::pow(tables.eta, static_cast<double>(n));
  return r;
}

std::vector<ExitTimeRecord> exit_times_increments(const EndSpec& end,
                                                  double eta, long k_max,
                                                  long count,
                                                  std::uint64_t seed) {
  check_end_labels(end);
  if (!(eta >= 0.0) || eta > critical_point(2) + 1e-12)
    throw std::invalid_argument("eta must lie in [0, 4/27]");
  if (k_max < 1 || count < 1)
    throw std::invalid_argument("k_max and count must be positive");
  double G = g_eval(2, eta).value;
  std::optional<YTable> tables[3];
  auto table_for = [&](int jlab) -> const YTable& {
    if (!tables[jlab]) tables[jlab].emplace(jlab, eta, G);
    return *tables[jlab];
  };
  long r = label_sum(end.vertex_at(static_cast<size_t>(k_max)));
  std::vector<ExitTimeRecord> out;
  out.reserve(static_cast<size_t>(count));
  for (long i = 0; i < count; ++i) {
    std::mt19937_64 rng(mix_seed(seed, static_cast<std::uint64_t>(i)));
    // base segment: the last visit to the root is itself Y^(1)-distributed
    // (pmf exponent r(t_0) = 1), which is what makes the total exponent
    // r(t_k) = 1 + sum of labels and E[(N_k - k)/r(t_k)] = f(eta) exactly
    auto [y0, c0] = table_for(1).draw(uniform01(rng));
    long n = k_max + y0;
    bool cens = c0;
    for (long step = 1; step <= k_max; ++step) {
      int jlab = end.letter_at(static_cast<size_t>(step) - 1) - '0';
      auto [y, c] = table_for(jlab).draw(uniform01(rng));
      n += y;
      cens = cens || c;
    }
    ExitTimeRecord rec;
    rec.k = k_max;
    rec.n_k = n;
    rec.r_k = r;
    rec.ratio = static_cast<double>(n - k_max) / static_cast<double>(r);
    rec.censored = cens;
    out.push_back(rec);
  }
  return out;
}

std::vector<ExitTimeRecord> exit_times_direct(ChainModel& chain, long k_max,
                                              long horizon, long count,
                                              std::uint64_t seed, long margin) {
  WalkTables tables = walk_tables_of(chain);
  if (tables.aux)
    throw std::invalid_argument("exit times need an end-directed walk");
  if (k_max < 1 || horizon < 1 || count < 1 || margin < 1)
    throw std::invalid_argument(
        "k_max, horizon, count, and margin must be positive");
  long r = label_sum(tables.end.vertex_at(static_cast<size_t>(k_max)));
  std::vector<ExitTimeRecord> out;
  out.reserve(static_cast<size_t>(count));
  WalkSim sim(tables);
  for (long i = 0; i < count; ++i) {
    std::mt19937_64 rng(mix_seed(seed, static_cast<std::uint64_t>(i)));
    sim.reset();
    long last = -1;
    bool declared = false;
    for (long step = 1; step <= horizon; ++step) {
      sim.step(rng);
      if (sim.on_end_at(k_max)) last = step;
      // declare only from strictly inside the subtree below t_k: anchored at
      // or past it and 2*margin levels deeper (a deep excursion elsewhere
      // does not preclude another visit)
      if (sim.j >= k_max && sim.depth() >= k_max + 2 * margin) {
        declared = true;
        break;
      }
    }
    ExitTimeRecord rec;
    rec.k = k_max;
    rec.r_k = r;
    rec.censored = !declared || last < 0;
    rec.n_k = last < 0 ? 0 : last;
    rec.ratio = rec.censored ? std::numeric_limits<double>::quiet_NaN()
                             : static_cast<double>(rec.n_k - k_max) /
                                   static_cast<double>(r);
    out.push_back(rec);
  }
  return out;
}

LlnSummary lln_experiment(const EndSpec& end, double eta, long k_max,
                          long count, std::uint64_t seed) {
  auto recs = exit_times_increments(end, eta, k_max, count, seed);
  LlnSummary s;
  s.eta = eta;
  s.k = k_max;
  s.count = count;
  std::vector<double> ratios;
  ratios.reserve(recs.size());
  for (const auto& r : recs) {
    ratios.push_back(r.ratio);
    s.censored += r.censored;
  }
  double m = 0.0;
  for (double x : ratios) m += x;
  m /= static_cast<double>(ratios.size());
  double v = 0.0;
  for (double x : ratios) v += (x - m) * (x - m);
  s.mean = m;
  s.stddev = ratios.size() > 1
                 ? std::sqrt(v / static_cast<double>(ratios.size() - 1))
                 : 0.0;
  s.stderr_ = s.stddev / std::sqrt(static_cast<double>(ratios.size()));
  auto mid = ratios.begin() + static_cast<long>(ratios.size() / 2);
  std::nth_element(ratios.begin(), mid, ratios.end());
  s.median = *mid;
  s.target = eta >= critical_point(2) - 1e-12
                 ? std::numeric_limits<double>::quiet_NaN()
                 : lln_limit(eta);
  return s;
}

double convergence_to_end(ChainModel& chain, const EndSpec& end, int steps,
                          long count, std::uint64_t seed, int threshold) {
  WalkTables tables = walk_tables_of(chain);
  if (steps < 1 || count < 1 || threshold < 1)
    throw std::invalid_argument("steps, count, and threshold must be positive");
  std::string target =
      end.vertex_at(static_cast<size_t>(steps) + static_cast<size_t>(threshold));
  long hits = 0;
  WalkSim sim(tables);
  for (long i = 0; i < count; ++i) {
    std::mt19937_64 rng(mix_seed(seed, static_cast<std::uint64_t>(i)));
    sim.reset();
    for (int u = 0; u < steps; ++u) sim.step(rng);
    hits +=
        common_prefix(sim.word(), target).size() >= static_cast<size_t>(threshold);
  }
  return static_cast<double>(hits) / static_cast<double>(count);
}

std::vector<long> root_returns(ChainModel& chain, long steps, long count,
                               std::uint64_t seed) {
  WalkTables tables = walk_tables_of(chain);
  if (steps < 1 || count < 1)
    throw std::invalid_argument("steps and count must be positive");
  std::vector<long> out;
  out.reserve(static_cast<size_t>(count));
  WalkSim sim(tables);
  for (long i = 0; i < count; ++i) {
    std::mt19937_64 rng(mix_seed(seed, static_cast<std::uint64_t>(i)));
    sim.reset();
    long returns = 0;
    for (long u = 0; u < steps; ++u) {
      sim.step(rng);
      returns += sim.at_root();
    }
    out.push_back(returns);
  }
  return out;
}

double recurrence_probe(ChainModel& chain, long steps, long count,
                        std::uint64_t seed) {
  auto rs = root_returns(chain, steps, count, seed);
  double m = 0.0;
  for (long r : rs) m += static_cast<double>(r);
  return m / static_cast<double>(rs.size());
}

Su2Result su2_moment(double lambda1, double lambda2, long n, int order) {
  if (!(lambda1 >= 0.0) || !(lambda2 >= 0.0) ||
      lambda1 + lambda2 > 1.0 + 1e-15)
    throw std::invalid_argument(
        "lambda parameters must be nonnegative with sum at most 1");
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  if (order < 8) throw std::invalid_argument("order must be at least 8");
  double coarse = su2_eval(lambda1, lambda2, n, order);
  Su2Result r;
  r.value = su2_eval(lambda1, lambda2, n, order + 9);
  r.err = std::fabs(r.value - coarse);
  if (r.err > 1e-6)
    throw std::runtime_error("su2 quadrature did not converge");
  return r;
}

std::string trajectories_csv(const std::vector<Trajectory>& ts) {
  std::string out = "traj_id,step,vertex\n";
  for (size_t i = 0; i < ts.size(); ++i)
    for (size_t n = 0; n < ts[i].vertices.size(); ++n)
      out += std::to_string(i) + "," + std::to_string(n) + "," +
             ts[i].vertices[n] + "\n";
  return out;
}

std::string exit_records_csv(const std::vector<ExitTimeRecord>& rs) {
  std::string out = "traj_id,k,N_k,r_k,ratio,censored\n";
  for (size_t i = 0; i < rs.size(); ++i) {
    const auto& r = rs[i];
    out += std::to_string(i) + "," + std::to_string(r.k) + "," +
           std::to_string(r.n_k) + "," + std::to_string(r.r_k) + "," +
           fmt(r.ratio) + "," + (r.censored ? "1" : "0") + "\n";
  }
  return out;
}

}  // namespace bratteli
