#include <bratteli/chains.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <memory>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include <bratteli/fusscat.hpp>
#include <bratteli/paths.hpp>

#include <nlohmann/json.hpp>

namespace bratteli {

namespace {

Prob prob_pow(const Prob& b, long k) {
  Prob r = b.is_exact() ? Prob(Rat(1)) : Prob(1.0);
  for (long i = 0; i < k; ++i) r = r * b;
  return r;
}

bool prob_neg(const Prob& p) {
  return p.is_exact() ? p.rat() < 0 : p.value() < 0.0;
}

std::string fmt_double(double d) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", d);
  return buf;
}

// every present row must be a probability vector
void check_row_sum(bool exact, const std::vector<std::pair<int, Prob>>& row) {
  if (exact) {
    Rat s = 0;
    for (const auto& [j, p] : row) {
      (void)j;
      s += p.rat();
    }
    if (s != 1) throw std::logic_error("transition row does not sum to 1");
  } else {
    double s = 0;
    for (const auto& [j, p] : row) {
      (void)j;
      s += p.value();
    }
    if (std::fabs(s - 1.0) > 1e-9)
      throw std::logic_error("transition row does not sum to 1");
  }
}

Rat crit_rat(int s) {
  CountInt num, den;
  mpz_ui_pow_ui(num.get_mpz_t(), static_cast<unsigned long>(s),
                static_cast<unsigned long>(s));
  mpz_ui_pow_ui(den.get_mpz_t(), static_cast<unsigned long>(s + 1),
                static_cast<unsigned long>(s + 1));
  return Rat(num) / Rat(den);
}

// Rational fixed point G = eta G^(s+1) + 1, when one exists. Writing
// G = p/q in lowest terms forces q^s | num(eta) and p^(s+1) | den(eta),
// so only a handful of candidates need the exact check.
std::optional<Rat> rational_g(int s, const Rat& eta) {
  if (eta == 0) return Rat(1);
  if (eta == crit_rat(s)) return Rat(s + 1, s);
  const CountInt zn = eta.get_num(), zd = eta.get_den();
  if (zn > 1000000 || zd > 1000000) return std::nullopt;
  for (long p = 2;; ++p) {
    CountInt ps1;
    mpz_ui_pow_ui(ps1.get_mpz_t(), static_cast<unsigned long>(p),
                  static_cast<unsigned long>(s + 1));
    if (ps1 > zd) break;
    if (zd % ps1 != 0) continue;
    for (long q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      CountInt qs;
      mpz_ui_pow_ui(qs.get_mpz_t(), static_cast<unsigned long>(q),
                    static_cast<unsigned long>(s));
      if (zn % qs != 0) continue;
      if (zn * ps1 == zd * qs * (p - q)) return Rat(p, q);
    }
  }
  return std::nullopt;
}

// ---- ballot chain ------------------------------------------------------------

Prob ballot_up_prob(const Prob& lambda, long s) {
  const Prob one(Rat(1));
  const Prob x = Prob(Rat(2)) * lambda - one;
  const Prob xx = x * x;
  Prob num = one - one, den = num;  // zero in the right mode
  Prob pw = lambda.is_exact() ? Prob(Rat(1)) : Prob(1.0);
  for (long j = 1; j <= s + 2; j += 2) {
    num = num + Prob(Rat(binom(s + 2, j))) * pw;
    if (j <= s + 1) den = den + Prob(Rat(binom(s + 1, j))) * pw;
    pw = pw * xx;
  }
  return num / (Prob(Rat(2)) * den);
}

void check_lambda_domain(const Prob& lambda) {
  bool ok = lambda.is_exact()
                ? lambda.rat() >= Rat(1, 2) && lambda.rat() <= 1
                : lambda.value() >= 0.5 && lambda.value() <= 1.0;
  if (!ok)
    throw std::invalid_argument("ballot parameter must lie in [1/2, 1]");
}

// semi-Pascal chain with an arbitrary height-indexed up-probability table
ChainModel semi_pascal_chain(std::string name, bool exact,
                             std::function<Prob(long)> up) {
  ChainModel c;
  c.name = std::move(name);
  c.exact = exact;
  c.graph = semi_pascal(0);
  c.marginals = {{Prob(Rat(1))}};
  auto table = std::make_shared<std::vector<Prob>>();
  auto up_fn = std::make_shared<std::function<Prob(long)>>(std::move(up));
  c.extend = [table, up_fn](ChainModel& m) {
    const int n = m.built_to();
    m.graph.ensure_level(n + 1);
    while (static_cast<long>(table->size()) <= n + 1)
      table->push_back((*up_fn)(static_cast<long>(table->size())));
    const auto& lvl = m.graph.levels[n];
    std::vector<std::optional<std::vector<std::pair<int, Prob>>>> rows(
        lvl.size());
    std::vector<Prob> marg(m.graph.levels[n + 1].size(),
                           m.exact ? Prob(Rat(0)) : Prob(0.0));
    for (size_t i = 0; i < lvl.size(); ++i) {
      long s = parse_pair_key(lvl[i]).second;
      std::vector<std::pair<int, Prob>> out;
      for (const auto& [j, mult] : m.graph.edges[n][i]) {
        (void)mult;
        long s2 = parse_pair_key(m.graph.levels[n + 1][j]).second;
        Prob p = s2 == s + 1 ? (*table)[s]
                             : Prob(Rat(1)) - (*table)[s];
        out.emplace_back(j, p);
        marg[j] = marg[j] + m.marginals[n][i] * p;
      }
      check_row_sum(m.exact, out);
      rows[i] = std::move(out);
    }
    m.rows.push_back(std::move(rows));
    m.marginals.push_back(std::move(marg));
  };
  return c;
}

// ---- Motzkin chain -----------------------------------------------------------

struct MotzkinCore {
  Prob l12, l3;
  bool exact = true;
  std::vector<std::vector<Prob>> q{{Prob(Rat(1))}};

  Prob zero() const { return exact ? Prob(Rat(0)) : Prob(0.0); }

  // appends the q row for level q.size(); returns whether it is nonnegative
  bool append_row() {
    const long n = static_cast<long>(q.size());
    Prob v0 = zero();
    for (long l = 0; 2 * l <= n; ++l) {
      Rat coef(binom(n, 2 * l) * catalan(l));
      v0 = v0 + Prob(coef) * prob_pow(l12, l) * prob_pow(l3, n - 2 * l);
    }
    std::vector<Prob> row(n + 1, zero());
    row[0] = v0 / Prob(Rat(count_motzkin({0, 0}, {n, 0})));
    for (long d = 0; d < n; ++d)
      row[d + 1] = q[n - 1][d] - (d >= 1 ? row[d - 1] : zero()) - row[d];
    bool valid = true;
    for (auto& e : row) {
      if (!exact && !e.is_zero() && e.value() < 0.0 && e.value() > -1e-12)
        e = Prob(0.0);  // roundoff dust, not a genuine sign change
      if (prob_neg(e)) valid = false;
    }
    q.push_back(std::move(row));
    return valid;
  }

  Prob v(long n, long d) const {
    return q[n][d] * Prob(Rat(count_motzkin({0, 0}, {n, d})));
  }
};

void check_motzkin_domain(const Prob& l1, const Prob& l2) {
  auto bad = [](const Prob& p) {
    return p.is_exact() ? (p.rat() < 0 || p.rat() > 1)
                        : (p.value() < 0.0 || p.value() > 1.0);
  };
  bool over = (l1.is_exact() && l2.is_exact())
                  ? l1.rat() + l2.rat() > 1
                  : l1.value() + l2.value() > 1.0;
  if (bad(l1) || bad(l2) || over)
    throw std::invalid_argument(
        "Motzkin parameters need lambda1, lambda2 >= 0 with sum <= 1");
}

// ---- end-directed walks ------------------------------------------------------

struct WalkState {
  int s = 2;
  bool derooted = false;
  bool aux = false;
  EndSpec end;
  Prob eta, G;
  std::vector<Prob> fwd, bwd;  // along-end step probabilities; bwd[0] unused

  Prob one() const { return eta.is_exact() ? Prob(Rat(1)) : Prob(1.0); }

  void ensure_tables(size_t depth) {
    while (fwd.size() < depth) {
      const size_t j = fwd.size();
      const std::string tj = end.vertex_at(j);
      const std::string tj1 = end.vertex_at(j + 1);
      Prob off = one() - one();
      for (const auto& ch : tree_children(tj, s, derooted))
        if (ch != tj1)
          off = off + eta * prob_pow(G, tree_label(ch, s, derooted));
      Prob f(Rat(0));
      if (j == 0) {
        bwd.push_back(one() - one());
        f = one() - off;
      } else {
        Prob b = eta / fwd[j - 1];
        bwd.push_back(b);
        f = one() - b - off;
      }
      bool pos = f.is_exact() ? f.rat() > 0 : f.value() > 1e-13;
      if (!pos)
        throw std::logic_error("forward probability vanished along the end");
      fwd.push_back(f);
    }
  }

  bool on_end(const std::string& v) const {
    return end.vertex_at(v.size()) == v;
  }

  Prob edge_prob(const std::string& v, const std::string& w) {
    if (aux) {
      if (v.empty())
        return (w == "1" ? one() : G) / (one() + G);
      if (w.size() + 1 == v.size())
        return one() / prob_pow(G, tree_label(v, s, true));
      return eta * prob_pow(G, tree_label(w, s, true));
    }
    if (w.size() == v.size() + 1) {
      if (on_end(v) && w == end.vertex_at(v.size() + 1)) {
        ensure_tables(v.size() + 1);
        return fwd[v.size()];
      }
      return eta * prob_pow(G, tree_label(w, s, derooted));
    }
    if (on_end(v)) {
      ensure_tables(v.size() + 1);
      return bwd[v.size()];
    }
    return one() / prob_pow(G, tree_label(v, s, derooted));
  }
};

ChainModel walk_chain(std::string name, std::shared_ptr<WalkState> W) {
  ChainModel c;
  c.name = std::move(name);
  c.exact = W->eta.is_exact();
  c.graph = pascalize(fc_tree(W->s, 0, W->derooted), 0);
  c.marginals = {{Prob(Rat(1))}};
  c.extend = [W](ChainModel& m) {
    const int n = m.built_to();
    m.graph.ensure_level(n + 1);
    const auto& lvl = m.graph.levels[n];
    std::vector<std::optional<std::vector<std::pair<int, Prob>>>> rows(
        lvl.size());
    std::vector<Prob> marg(m.graph.levels[n + 1].size(),
                           m.exact ? Prob(Rat(0)) : Prob(0.0));
    for (size_t i = 0; i < lvl.size(); ++i) {
      std::vector<std::pair<int, Prob>> out;
      for (const auto& [j, mult] : m.graph.edges[n][i]) {
        (void)mult;
        Prob p = W->edge_prob(lvl[i], m.graph.levels[n + 1][j]);
        out.emplace_back(j, p);
        marg[j] = marg[j] + m.marginals[n][i] * p;
      }
      check_row_sum(m.exact, out);
      rows[i] = std::move(out);
    }
    m.rows.push_back(std::move(rows));
    m.marginals.push_back(std::move(marg));
  };
  return c;
}

// picks the arithmetic mode: exact eta with a rational fixed point keeps
// rational arithmetic, anything else drops to doubles via the generating
// function evaluator
std::pair<Prob, Prob> resolve_eta_g(int s, const Prob& eta) {
  if (eta.is_exact()) {
    if (auto g = rational_g(s, eta.rat()))
      return {eta, Prob(*g)};
    return {Prob(eta.value()),
            Prob(g_eval(s, eta.value()).value)};
  }
  return {eta, Prob(g_eval(s, eta.value()).value)};
}

}  // namespace

// ---- ChainModel --------------------------------------------------------------

void ChainModel::ensure(int n) {
  while (built_to() < n) {
    if (!extend) throw std::logic_error("chain has no extender installed");
    const int before = built_to();
    extend(*this);
    if (built_to() <= before)
      throw std::logic_error("extender failed to advance the chain");
  }
}

std::optional<Prob> ChainModel::transition(int n, const std::string& v,
                                           const std::string& w) {
  if (n < 0) throw std::invalid_argument("negative level");
  ensure(n + 1);
  const int i = graph.idx(n, v);
  const int j = graph.idx(n + 1, w);
  if (i < 0 || j < 0) return std::nullopt;
  if (n >= static_cast<int>(rows.size())) return std::nullopt;
  const auto& row = rows[n][i];
  if (!row) return std::nullopt;
  for (const auto& [jj, p] : *row)
    if (jj == j) return p;
  return std::nullopt;
}

// ---- chain builders ----------------------------------------------------------

ChainModel ballot_chain(const Prob& lambda) {
  check_lambda_domain(lambda);
  return semi_pascal_chain("ballot[" + lambda.str() + "]", lambda.is_exact(),
                           [lambda](long s) { return ballot_up_prob(lambda, s); });
}

ChainModel control_chain(const Prob& up) {
  bool ok = up.is_exact() ? up.rat() > 0 && up.rat() <= 1
                          : up.value() > 0.0 && up.value() <= 1.0;
  if (!ok) throw std::invalid_argument("control up-probability must be in (0,1]");
  return semi_pascal_chain("control[" + up.str() + "]", up.is_exact(),
                           [up](long s) {
                             return s == 0 ? (up.is_exact() ? Prob(Rat(1))
                                                            : Prob(1.0))
                                           : up;
                           });
}

ChainModel motzkin_chain(const Prob& lambda1, const Prob& lambda2) {
  check_motzkin_domain(lambda1, lambda2);
  auto core = std::make_shared<MotzkinCore>();
  core->l12 = lambda1 * lambda2;
  core->l3 = Prob(Rat(1)) - lambda1 - lambda2;
  core->exact = core->l3.is_exact();
  ChainModel c;
  c.name = "motzkin[" + lambda1.str() + "," + lambda2.str() + "]";
  c.exact = core->exact;
  c.graph = motzkin_graph(0);
  c.marginals = {{Prob(Rat(1))}};
  c.extend = [core](ChainModel& m) {
    const int n = m.built_to();
    const long n1 = n + 1;
    m.graph.ensure_level(n + 1);
    const bool valid = core->append_row();
    if (m.horizon == std::numeric_limits<int>::max()) {
      if (!valid) {
        m.horizon = n;
      } else {
        const auto& lvl = m.graph.levels[n];
        std::vector<std::optional<std::vector<std::pair<int, Prob>>>> rows(
            lvl.size());
        for (size_t i = 0; i < lvl.size(); ++i) {
          const long d = parse_pair_key(lvl[i]).second;
          const Prob& qv = core->q[n][d];
          if (qv.is_zero()) continue;  // unreachable: no conditional law
          std::vector<std::pair<int, Prob>> out;
          for (const auto& [j, mult] : m.graph.edges[n][i]) {
            (void)mult;
            const long d2 = parse_pair_key(m.graph.levels[n + 1][j]).second;
            out.emplace_back(j, core->q[n1][d2] / qv);
          }
          check_row_sum(m.exact, out);
          rows[i] = std::move(out);
        }
        m.rows.push_back(std::move(rows));
      }
    }
    std::vector<Prob> marg(m.graph.levels[n + 1].size());
    for (long d = 0; d <= n1; ++d)
      marg[m.graph.idx(n + 1, pair_key(n1, d))] = core->v(n1, d);
    m.marginals.push_back(std::move(marg));
  };
  return c;
}

std::vector<std::vector<Prob>> motzkin_marginal_rows(const Prob& lambda1,
                                                     const Prob& lambda2,
                                                     int n_max) {
  check_motzkin_domain(lambda1, lambda2);
  MotzkinCore core;
  core.l12 = lambda1 * lambda2;
  core.l3 = Prob(Rat(1)) - lambda1 - lambda2;
  core.exact = core.l3.is_exact();
  std::vector<std::vector<Prob>> out;
  for (long n = 0; n <= n_max; ++n) {
    if (n > 0) core.append_row();
    std::vector<Prob> row;
    for (long d = 0; d <= n; ++d) row.push_back(core.v(n, d));
    out.push_back(std::move(row));
  }
  return out;
}

ChainModel fib_walk(const EndSpec& end, const Prob& eta, int s,
                    bool derooted) {
  if (s < 2) throw std::invalid_argument("tree order must be at least 2");
  const std::string probe = end.prefix + end.period + end.period;
  if (end.period.empty() || !word_admissible(probe, s, !derooted))
    throw std::invalid_argument("end is not admissible for this tree");
  bool in_range = eta.is_exact()
                      ? eta.rat() >= 0 && eta.rat() <= crit_rat(s)
                      : eta.value() >= 0.0 &&
                            eta.value() <= critical_point(s) + 1e-12;
  if (!in_range)
    throw std::invalid_argument(
        "eta must lie in [0, s^s/(s+1)^(s+1)]");
  auto W = std::make_shared<WalkState>();
  W->s = s;
  W->derooted = derooted;
  W->end = end;
  std::tie(W->eta, W->G) = resolve_eta_g(s, eta);
  std::string name = "fib_walk[s=" + std::to_string(s) +
                     (derooted ? ",derooted" : "") + ",end=" + end.prefix +
                     ":" + end.period + ",eta=" + eta.str() + "]";
  WalkParams wp;
  wp.s = s;
  wp.derooted = derooted;
  wp.end = end;
  wp.eta = W->eta.value();
  wp.g = W->G.value();
  ChainModel c = walk_chain(std::move(name), std::move(W));
  c.walk = std::move(wp);
  return c;
}

ChainModel aux_walk(const Prob& eta) {
  bool in_range = eta.is_exact()
                      ? eta.rat() > 0 && eta.rat() <= Rat(4, 27)
                      : eta.value() > 0.0 && eta.value() <= 4.0 / 27.0 + 1e-12;
  if (!in_range)
    throw std::invalid_argument("eta must lie in (0, 4/27]");
  auto W = std::make_shared<WalkState>();
  W->s = 2;
  W->derooted = true;
  W->aux = true;
  std::tie(W->eta, W->G) = resolve_eta_g(2, eta);
  WalkParams wp;
  wp.derooted = true;
  wp.aux = true;
  wp.eta = W->eta.value();
  wp.g = W->G.value();
  ChainModel c = walk_chain("aux_walk[eta=" + eta.str() + "]", std::move(W));
  c.walk = std::move(wp);
  return c;
}

// ---- centrality, weights, ergodic ratios -------------------------------------

CentralityReport verify_centrality(ChainModel& chain, int n_max, double tol) {
  CentralityReport rep;
  chain.ensure(n_max);
  rep.levels_checked = n_max;
  if (chain.horizon < n_max) {
    rep.reason = "no central chain beyond level " +
                 std::to_string(chain.horizon) +
                 " (negative marginal in the recursion)";
    rep.worst_level = chain.horizon;
    return rep;
  }
  const bool exact = chain.exact;
  std::vector<Prob> q = {Prob(Rat(1))};
  if (chain.graph.levels[0].size() != 1)
    throw std::logic_error("expected a single root vertex");
  for (int n = 0; n < n_max; ++n) {
    const size_t width = chain.graph.levels[n + 1].size();
    std::vector<Prob> qn(width), lo(width), hi(width);
    std::vector<char> has(width, 0);
    for (size_t i = 0; i < chain.graph.levels[n].size(); ++i) {
      const bool dead = q[i].is_zero();
      const auto& row = chain.rows[n][i];
      if (!dead && !row) {
        rep.reason = "reachable vertex " + chain.graph.levels[n][i] +
                     " at level " + std::to_string(n) +
                     " has no transition row";
        rep.worst_level = n;
        rep.worst_vertex = chain.graph.levels[n][i];
        return rep;
      }
      auto feed = [&](int j, const Prob& cand) {
        if (!has[j]) {
          has[j] = 1;
          qn[j] = cand;
          lo[j] = cand;
          hi[j] = cand;
          return;
        }
        const bool lower = exact ? cand.rat() < lo[j].rat()
                                 : cand.value() < lo[j].value();
        const bool higher = exact ? cand.rat() > hi[j].rat()
                                  : cand.value() > hi[j].value();
        if (lower) lo[j] = cand;
        if (higher) hi[j] = cand;
      };
      if (dead) {
        const Prob zero = exact ? Prob(Rat(0)) : Prob(0.0);
        for (const auto& [j, mult] : chain.graph.edges[n][i]) {
          (void)mult;
          feed(j, zero);
        }
      } else {
        for (const auto& [j, p] : *row) feed(j, q[i] * p);
      }
    }
    for (size_t j = 0; j < width; ++j) {
      if (!has[j])
        throw std::logic_error("vertex without parents in the graph");
      double spread = exact ? Rat(hi[j].rat() - lo[j].rat()).get_d()
                            : hi[j].value() - lo[j].value();
      if (exact && spread == 0.0 && hi[j].rat() != lo[j].rat())
        spread = 1e-300;  // exact mismatch too small for a double
      if (spread > rep.max_spread) {
        rep.max_spread = spread;
        rep.worst_level = n + 1;
        rep.worst_vertex = chain.graph.levels[n + 1][j];
      }
    }
    q = std::move(qn);
  }
  rep.pass = rep.max_spread <= tol;
  if (!rep.pass && rep.reason.empty())
    rep.reason = "path probabilities into " + rep.worst_vertex +
                 " disagree by " + fmt_double(rep.max_spread);
  return rep;
}

std::vector<Prob> trace_weights(ChainModel& chain, int n) {
  chain.ensure(n);
  auto dims = dims_of_level(chain.graph, n);
  std::vector<Prob> out;
  out.reserve(dims.size());
  for (size_t i = 0; i < dims.size(); ++i)
    out.push_back(chain.marginals[n][i] / Prob(Rat(dims[i])));
  return out;
}

std::vector<std::optional<double>> ergodic_estimate(
    const LeveledMultiGraph& g,
    const std::vector<std::pair<int, std::string>>& tail, int nv,
    const std::string& v, const std::string& w) {
  LeveledMultiGraph gg = g;
  int need = nv + 1;
  for (const auto& [lev, key] : tail) {
    (void)key;
    if (lev < nv + 1)
      throw std::invalid_argument("tail must start past the edge");
    need = std::max(need, lev);
  }
  gg.ensure_level(need);
  if (gg.idx(nv, v) < 0 || gg.idx(nv + 1, w) < 0 || gg.mult(nv, v, w) == 0)
    throw std::invalid_argument("not an edge of the graph");
  std::vector<std::optional<double>> out;
  for (const auto& [lev, key] : tail) {
    CountInt den = dim_between(gg, nv, v, lev, key);
    if (den == 0) {
      out.push_back(std::nullopt);
      continue;
    }
    CountInt num = dim_between(gg, nv + 1, w, lev, key);
    out.push_back(Rat(Rat(num) / Rat(den)).get_d());
  }
  return out;
}

// ---- exports -----------------------------------------------------------------

std::string chain_csv(ChainModel& chain, int n_max) {
  chain.ensure(n_max);
  std::ostringstream os;
  os << (chain.exact ? "level,from,to,p_num,p_den" : "level,from,to,p")
     << "\n";
  const int steps = std::min(n_max, static_cast<int>(chain.rows.size()));
  for (int n = 0; n < steps; ++n) {
    for (size_t i = 0; i < chain.rows[n].size(); ++i) {
      if (!chain.rows[n][i]) continue;
      for (const auto& [j, p] : *chain.rows[n][i]) {
        os << n << ',' << chain.graph.levels[n][i] << ','
           << chain.graph.levels[n + 1][j] << ',';
        if (chain.exact)
          os << p.rat().get_num().get_str() << ','
             << p.rat().get_den().get_str();
        else
          os << fmt_double(p.value());
        os << "\n";
      }
    }
  }
  return os.str();
}

std::string chain_json(ChainModel& chain, int n_max) {
  chain.ensure(n_max);
  nlohmann::json j;
  j["name"] = chain.name;
  j["mode"] = chain.exact ? "exact" : "float";
  j["horizon"] = chain.horizon == std::numeric_limits<int>::max()
                     ? nlohmann::json()
                     : nlohmann::json(chain.horizon);
  j["levels"] = nlohmann::json::array();
  j["marginals"] = nlohmann::json::array();
  for (int n = 0; n <= n_max; ++n) {
    j["levels"].push_back(chain.graph.levels[n]);
    nlohmann::json row = nlohmann::json::array();
    for (const auto& p : chain.marginals[n]) {
      if (chain.exact)
        row.push_back(rat_str(p.rat()));
      else
        row.push_back(p.value());
    }
    j["marginals"].push_back(std::move(row));
  }
  j["transitions"] = nlohmann::json::array();
  const int steps = std::min(n_max, static_cast<int>(chain.rows.size()));
  for (int n = 0; n < steps; ++n) {
    for (size_t i = 0; i < chain.rows[n].size(); ++i) {
      if (!chain.rows[n][i]) continue;
      for (const auto& [jj, p] : *chain.rows[n][i]) {
        nlohmann::json t = {n, chain.graph.levels[n][i],
                            chain.graph.levels[n + 1][jj]};
        if (chain.exact)
          t.push_back(rat_str(p.rat()));
        else
          t.push_back(p.value());
        j["transitions"].push_back(std::move(t));
      }
    }
  }
  return j.dump(2);
}

}  // namespace bratteli
