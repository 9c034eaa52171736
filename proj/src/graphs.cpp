#include <bratteli/graphs.hpp>

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace bratteli {

// ---- LeveledMultiGraph basics ----------------------------------------------

void LeveledMultiGraph::ensure_level(int n) {
  while (max_level() < n) {
    if (!grow) throw std::logic_error("graph has no grower installed");
    int before = max_level();
    grow(*this);
    if (max_level() <= before)
      throw std::logic_error("grower failed to extend the graph");
  }
}

int LeveledMultiGraph::push_level() {
  levels.emplace_back();
  index.emplace_back();
  edges.emplace_back();
  return max_level();
}

int LeveledMultiGraph::add_vertex(int n, const std::string& key) {
  if (n < 0 || n > max_level())
    throw std::logic_error("add_vertex: level not allocated");
  auto [it, inserted] = index[n].emplace(key, static_cast<int>(levels[n].size()));
  if (!inserted) return it->second;
  levels[n].push_back(key);
  edges[n].emplace_back();
  return it->second;
}

void LeveledMultiGraph::add_edge(int n, const std::string& v,
                                 const std::string& w, long m) {
  int i = idx(n, v);
  int j = idx(n + 1, w);
  if (i < 0 || j < 0) throw std::logic_error("add_edge: unknown endpoint");
  for (auto& [jj, mm] : edges[n][i]) {
    if (jj == j) {
      mm += m;
      return;
    }
  }
  edges[n][i].emplace_back(j, m);
}

int LeveledMultiGraph::idx(int n, const std::string& key) const {
  if (n < 0 || n > max_level()) return -1;
  auto it = index[n].find(key);
  return it == index[n].end() ? -1 : it->second;
}

long LeveledMultiGraph::mult(int n, const std::string& v,
                             const std::string& w) const {
  int i = idx(n, v);
  int j = idx(n + 1, w);
  if (i < 0 || j < 0) return 0;
  for (const auto& [jj, mm] : edges[n][i])
    if (jj == j) return mm;
  return 0;
}

// ---- key helpers -------------------------------------------------------------

std::string pair_key(long m, long s) {
  return "(" + std::to_string(m) + "," + std::to_string(s) + ")";
}

std::pair<long, long> parse_pair_key(const std::string& key) {
  long m = 0, s = 0;
  int used = 0;
  if (std::sscanf(key.c_str(), "(%ld,%ld)%n", &m, &s, &used) != 2 ||
      used != static_cast<int>(key.size()))
    throw std::invalid_argument("bad pair key: " + key);
  return {m, s};
}

// ---- builders ----------------------------------------------------------------

LeveledMultiGraph semi_pascal(int n_max) {
  LeveledMultiGraph g;
  g.name = "semi_pascal";
  g.push_level();
  g.add_vertex(0, pair_key(0, 0));
  g.grow = [](LeveledMultiGraph& gg) {
    int n = gg.max_level();
    gg.push_level();
    for (long s = (n + 1) % 2; s <= n + 1; s += 2)
      gg.add_vertex(n + 1, pair_key(n + 1, s));
    for (const auto& key : gg.levels[n]) {
      auto [m, s] = parse_pair_key(key);
      if (s - 1 >= 0) gg.add_edge(n, key, pair_key(m + 1, s - 1));
      gg.add_edge(n, key, pair_key(m + 1, s + 1));
    }
  };
  g.ensure_level(n_max);
  return g;
}

LeveledMultiGraph motzkin_graph(int n_max) {
  LeveledMultiGraph g;
  g.name = "motzkin";
  g.push_level();
  g.add_vertex(0, pair_key(0, 0));
  g.grow = [](LeveledMultiGraph& gg) {
    int n = gg.max_level();
    gg.push_level();
    for (long d = 0; d <= n + 1; ++d) gg.add_vertex(n + 1, pair_key(n + 1, d));
    for (const auto& key : gg.levels[n]) {
      auto [m, d] = parse_pair_key(key);
      for (long dd = std::max(0L, d - 1); dd <= d + 1; ++dd)
        gg.add_edge(n, key, pair_key(m + 1, dd));
    }
  };
  g.ensure_level(n_max);
  return g;
}

LeveledMultiGraph half_line(int n_max) {
  LeveledMultiGraph g;
  g.name = "half_line";
  g.push_level();
  g.add_vertex(0, "0");
  g.grow = [](LeveledMultiGraph& gg) {
    int n = gg.max_level();
    gg.push_level();
    gg.add_vertex(n + 1, std::to_string(n + 1));
    gg.add_edge(n, std::to_string(n), std::to_string(n + 1));
  };
  g.ensure_level(n_max);
  return g;
}

std::vector<std::string> tree_children(const std::string& v, int s,
                                       bool derooted) {
  long lab = tree_label(v, s, derooted);
  std::vector<std::string> out;
  for (long c = s; c >= s - lab + 1; --c)
    out.push_back(v + static_cast<char>('0' + c));
  return out;
}

long tree_label(const std::string& v, int s, bool derooted) {
  // The rooted root behaves like a label-1 vertex: one child, labeled s.
  if (v.empty()) return derooted ? s : 1;
  return v.back() - '0';
}

LeveledMultiGraph fc_tree(int s, int n_max, bool derooted) {
  if (s < 2 || s > 9) throw std::invalid_argument("fc_tree: order must be in 2..9");
  LeveledMultiGraph g;
  g.name = "fc_tree_s" + std::to_string(s) + (derooted ? "_derooted" : "");
  g.push_level();
  g.add_vertex(0, "");
  g.grow = [s, derooted](LeveledMultiGraph& gg) {
    int n = gg.max_level();
    gg.push_level();
    for (const auto& w : gg.levels[n]) {
      for (const auto& c : tree_children(w, s, derooted)) {
        gg.add_vertex(n + 1, c);
        gg.add_edge(n, w, c);
      }
    }
  };
  g.ensure_level(n_max);
  return g;
}

LeveledMultiGraph bsharp_graph(int n_max) {
  LeveledMultiGraph g;
  g.name = "bsharp";
  g.push_level();
  g.add_vertex(0, "");
  g.grow = [](LeveledMultiGraph& gg) {
    int n = gg.max_level();
    // beta(n+1) appends 'a' at odd 1-based positions, 'b' at even ones; the
    // distinct subwords of beta(n+1) are those of beta(n) plus their
    // one-letter extensions by the new letter.
    char c = ((n + 1) % 2 == 1) ? 'a' : 'b';
    std::set<std::string> next(gg.levels[n].begin(), gg.levels[n].end());
    for (const auto& w : gg.levels[n]) next.insert(w + c);
    std::vector<std::string> keys(next.begin(), next.end());
    std::sort(keys.begin(), keys.end(), [](const auto& x, const auto& y) {
      return x.size() != y.size() ? x.size() < y.size() : x < y;
    });
    gg.push_level();
    for (const auto& k : keys) gg.add_vertex(n + 1, k);
    char app = (n % 2 == 0) ? 'a' : 'b';
    char strip = (n % 2 == 0) ? 'b' : 'a';
    for (const auto& u : gg.levels[n]) {
      gg.add_edge(n, u, u);
      if (gg.idx(n + 1, u + app) >= 0) gg.add_edge(n, u, u + app);
      if (!u.empty() && u.back() == strip) {
        std::string w = u.substr(0, u.size() - 1);
        if (gg.idx(n + 1, w) >= 0) gg.add_edge(n, u, w);
      }
    }
  };
  g.ensure_level(n_max);
  return g;
}

// ---- derived graphs ------------------------------------------------------------

namespace {

// Undirected adjacency of a leveled graph: for a vertex at level k, the
// down-neighbors (level k+1) and up-neighbors (level k-1) with multiplicities.
struct UpLists {
  // up[n][i]: list of (index into level n-1, mult)
  std::vector<std::vector<std::vector<std::pair<int, long>>>> up;
  explicit UpLists(const LeveledMultiGraph& g) {
    up.resize(g.levels.size());
    for (size_t n = 0; n < g.levels.size(); ++n)
      up[n].resize(g.levels[n].size());
    for (size_t n = 0; n + 1 < g.levels.size(); ++n)
      for (size_t i = 0; i < g.edges[n].size(); ++i)
        for (const auto& [j, m] : g.edges[n][i])
          up[n + 1][j].emplace_back(static_cast<int>(i), m);
  }
};

LeveledMultiGraph materialized_copy(const LeveledMultiGraph& g, int depth) {
  LeveledMultiGraph base = g;
  if (base.max_level() < depth) base.ensure_level(depth);
  return base;
}

// Appends one level to a pascalization, pulling the base graph deeper as
// needed.  depth records the base level of every key seen so far.
void pascal_append(LeveledMultiGraph& p, LeveledMultiGraph& base,
                   std::unordered_map<std::string, int>& depth) {
  const int n = p.max_level();
  const int n1 = n + 1;
  base.ensure_level(n1);
  for (const auto& key : base.levels[n1]) depth.emplace(key, n1);
  p.push_level();
  for (int k = n1 % 2; k <= n1; k += 2)
    for (const auto& key : base.levels[k]) p.add_vertex(n1, key);
  UpLists ups(base);
  for (const auto& key : p.levels[n]) {
    int k = depth.at(key);
    int i = base.idx(k, key);
    for (const auto& [j, m] : base.edges[k][i])
      p.add_edge(n, key, base.levels[k + 1][j], m);
    if (k >= 1)
      for (const auto& [j, m] : ups.up[k][i])
        p.add_edge(n, key, base.levels[k - 1][j], m);
  }
}

void contraction_append(LeveledMultiGraph& c, LeveledMultiGraph& base) {
  const int n = c.max_level();
  base.ensure_level(2 * (n + 1));
  c.push_level();
  for (const auto& key : base.levels[2 * (n + 1)]) c.add_vertex(n + 1, key);
  const int k = 2 * n;
  for (size_t i = 0; i < base.levels[k].size(); ++i)
    for (const auto& [j1, m1] : base.edges[k][i])
      for (const auto& [j2, m2] : base.edges[k + 1][j1])
        c.add_edge(n, base.levels[k][i], base.levels[k + 2][j2], m1 * m2);
}

}  // namespace

LeveledMultiGraph pascalize(const LeveledMultiGraph& g, int n_max) {
  auto base = std::make_shared<LeveledMultiGraph>(g);
  auto depth = std::make_shared<std::unordered_map<std::string, int>>();
  for (const auto& key : base->levels[0]) depth->emplace(key, 0);
  LeveledMultiGraph p;
  p.name = "pascalize(" + base->name + ")";
  p.push_level();
  for (const auto& key : base->levels[0]) p.add_vertex(0, key);
  for (int n = 0; n < n_max; ++n) pascal_append(p, *base, *depth);
  p.grow = [base, depth](LeveledMultiGraph& self) {
    pascal_append(self, *base, *depth);
  };
  return p;
}

LeveledMultiGraph even_contraction(const LeveledMultiGraph& g, int n_max) {
  auto base = std::make_shared<LeveledMultiGraph>(g);
  base->ensure_level(0);
  LeveledMultiGraph c;
  c.name = "even_contraction(" + base->name + ")";
  c.push_level();
  for (const auto& key : base->levels[0]) c.add_vertex(0, key);
  for (int n = 0; n < n_max; ++n) contraction_append(c, *base);
  c.grow = [base](LeveledMultiGraph& self) { contraction_append(self, *base); };
  return c;
}

// ---- path counting ----------------------------------------------------------

CountInt dim_between(const LeveledMultiGraph& g, int nv, const std::string& v,
                     int nw, const std::string& w) {
  if (nv > nw) return 0;
  int iv = g.idx(nv, v);
  int iw = g.idx(nw, w);
  if (iv < 0 || iw < 0) return 0;
  std::vector<CountInt> cur(g.levels[nv].size(), 0);
  cur[iv] = 1;
  for (int n = nv; n < nw; ++n) {
    std::vector<CountInt> nxt(g.levels[n + 1].size(), 0);
    for (size_t i = 0; i < cur.size(); ++i) {
      if (cur[i] == 0) continue;
      for (const auto& [j, m] : g.edges[n][i]) nxt[j] += cur[i] * m;
    }
    cur = std::move(nxt);
  }
  return cur[iw];
}

std::vector<CountInt> dims_of_level(const LeveledMultiGraph& g, int n) {
  std::vector<CountInt> cur(g.levels.at(0).size(), 0);
  cur[0] = 1;
  for (int k = 0; k < n; ++k) {
    std::vector<CountInt> nxt(g.levels.at(k + 1).size(), 0);
    for (size_t i = 0; i < cur.size(); ++i) {
      if (cur[i] == 0) continue;
      for (const auto& [j, m] : g.edges[k][i]) nxt[j] += cur[i] * m;
    }
    cur = std::move(nxt);
  }
  return cur;
}

// ---- isomorphism ----------------------------------------------------------------

namespace {

using WitnessFn = std::function<std::string(int, const std::string&)>;

// Checks a fully specified vertex bijection; returns the first bad level or
// -1 when everything matches.
int check_witness(const LeveledMultiGraph& a, const LeveledMultiGraph& b,
                  int n_max, const WitnessFn& w,
                  std::vector<std::unordered_map<std::string, std::string>>* out) {
  std::vector<std::vector<int>> map_ab(n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    map_ab[n].assign(a.levels[n].size(), -1);
    std::vector<bool> used(b.levels[n].size(), false);
    for (size_t i = 0; i < a.levels[n].size(); ++i) {
      std::string img = w(n, a.levels[n][i]);
      int j = b.idx(n, img);
      if (j < 0 || used[j]) return n;
      used[j] = true;
      map_ab[n][i] = j;
    }
  }
  for (int n = 0; n < n_max; ++n) {
    for (size_t i = 0; i < a.levels[n].size(); ++i) {
      std::vector<std::pair<int, long>> ea, eb;
      for (const auto& [j, m] : a.edges[n][i]) ea.emplace_back(map_ab[n + 1][j], m);
      eb = b.edges[n][map_ab[n][i]];
      std::sort(ea.begin(), ea.end());
      std::sort(eb.begin(), eb.end());
      if (ea != eb) return n;
    }
  }
  if (out) {
    out->resize(n_max + 1);
    for (int n = 0; n <= n_max; ++n)
      for (size_t i = 0; i < a.levels[n].size(); ++i)
        (*out)[n][a.levels[n][i]] = b.levels[n][map_ab[n][i]];
  }
  return -1;
}

struct IsoSearch {
  const LeveledMultiGraph& a;
  const LeveledMultiGraph& b;
  int n_max;
  UpLists ua, ub;
  std::vector<std::vector<int>> ca, cb;  // refinement colors
  std::vector<std::vector<int>> assign;  // a-index -> b-index per level
  std::vector<std::vector<bool>> used;
  long steps = 0;

  IsoSearch(const LeveledMultiGraph& a_, const LeveledMultiGraph& b_, int nm)
      : a(a_), b(b_), n_max(nm), ua(a_), ub(b_) {}

  void refine() {
    ca.assign(n_max + 1, {});
    cb.assign(n_max + 1, {});
    for (int n = 0; n <= n_max; ++n) {
      ca[n].assign(a.levels[n].size(), 0);
      cb[n].assign(b.levels[n].size(), 0);
    }
    for (int round = 0; round < n_max + 2; ++round) {
      std::map<std::string, int> dict;
      auto sig = [&](const LeveledMultiGraph& g, const UpLists& u,
                     const std::vector<std::vector<int>>& c, int n, int i) {
        std::vector<std::pair<long, int>> down, up;
        if (n < n_max)
          for (const auto& [j, m] : g.edges[n][i]) down.emplace_back(m, c[n + 1][j]);
        if (n > 0)
          for (const auto& [j, m] : u.up[n][i]) up.emplace_back(m, c[n - 1][j]);
        std::sort(down.begin(), down.end());
        std::sort(up.begin(), up.end());
        std::ostringstream os;
        os << n << '|' << c[n][i] << '|';
        for (auto& [m, cc] : down) os << m << ',' << cc << ';';
        os << '|';
        for (auto& [m, cc] : up) os << m << ',' << cc << ';';
        return os.str();
      };
      std::vector<std::vector<int>> na(n_max + 1), nb(n_max + 1);
      for (int n = 0; n <= n_max; ++n) {
        na[n].resize(a.levels[n].size());
        nb[n].resize(b.levels[n].size());
        for (size_t i = 0; i < a.levels[n].size(); ++i) {
          auto s = sig(a, ua, ca, n, static_cast<int>(i));
          na[n][i] = dict.emplace(s, static_cast<int>(dict.size())).first->second;
        }
        for (size_t i = 0; i < b.levels[n].size(); ++i) {
          auto s = sig(b, ub, cb, n, static_cast<int>(i));
          nb[n][i] = dict.emplace(s, static_cast<int>(dict.size())).first->second;
        }
      }
      ca = std::move(na);
      cb = std::move(nb);
    }
  }

  // colors per level must agree as multisets; returns bad level or -1
  int color_check() const {
    for (int n = 0; n <= n_max; ++n) {
      auto x = ca[n];
      auto y = cb[n];
      std::sort(x.begin(), x.end());
      std::sort(y.begin(), y.end());
      if (x != y) return n;
    }
    return -1;
  }

  std::vector<std::pair<int, long>> profile_a(int n, int i) const {
    std::vector<std::pair<int, long>> pr;
    for (const auto& [p, m] : ua.up[n][i]) pr.emplace_back(assign[n - 1][p], m);
    std::sort(pr.begin(), pr.end());
    return pr;
  }

  std::vector<std::pair<int, long>> profile_b(int n, int j) const {
    auto pr = ub.up[n][j];
    std::sort(pr.begin(), pr.end());
    return pr;
  }

  bool search(int n, int i) {
    if (++steps > 5'000'000)
      throw std::runtime_error("isomorphism search exceeded its step budget");
    if (n > n_max) return true;
    if (i == static_cast<int>(a.levels[n].size())) return search(n + 1, 0);
    auto want = n > 0 ? profile_a(n, i) : std::vector<std::pair<int, long>>{};
    for (size_t j = 0; j < b.levels[n].size(); ++j) {
      if (used[n][j] || cb[n][j] != ca[n][i]) continue;
      if (n > 0 && profile_b(n, static_cast<int>(j)) != want) continue;
      assign[n][i] = static_cast<int>(j);
      used[n][j] = true;
      if (search(n, i + 1)) return true;
      used[n][j] = false;
      assign[n][i] = -1;
    }
    return false;
  }
};

}  // namespace

IsoResult graphs_isomorphic_up_to(const LeveledMultiGraph& g1,
                                  const LeveledMultiGraph& g2, int n_max,
                                  const WitnessFn& witness) {
  LeveledMultiGraph a = materialized_copy(g1, n_max);
  LeveledMultiGraph b = materialized_copy(g2, n_max);
  IsoResult res;
  for (int n = 0; n <= n_max; ++n) {
    if (a.levels[n].size() != b.levels[n].size()) {
      res.failed_level = n;
      return res;
    }
  }
  if (witness) {
    int bad = check_witness(a, b, n_max, witness, &res.witness);
    res.isomorphic = bad < 0;
    res.failed_level = bad;
    if (!res.isomorphic) res.witness.clear();
    return res;
  }
  // identity keys are often the right witness; try them before searching
  bool ids_ok = true;
  for (int n = 0; n <= n_max && ids_ok; ++n)
    for (const auto& key : a.levels[n])
      if (b.idx(n, key) < 0) {
        ids_ok = false;
        break;
      }
  if (ids_ok) {
    int bad = check_witness(a, b, n_max,
                            [](int, const std::string& k) { return k; },
                            &res.witness);
    if (bad < 0) {
      res.isomorphic = true;
      res.failed_level = -1;
      return res;
    }
    res.witness.clear();
  }
  IsoSearch s(a, b, n_max);
  s.refine();
  int bad = s.color_check();
  if (bad >= 0) {
    res.failed_level = bad;
    return res;
  }
  s.assign.resize(n_max + 1);
  s.used.resize(n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    s.assign[n].assign(a.levels[n].size(), -1);
    s.used[n].assign(b.levels[n].size(), false);
  }
  if (!s.search(0, 0)) {
    res.failed_level = 0;  // exhausted: no level-respecting bijection
    return res;
  }
  res.isomorphic = true;
  res.failed_level = -1;
  res.witness.resize(n_max + 1);
  for (int n = 0; n <= n_max; ++n)
    for (size_t i = 0; i < a.levels[n].size(); ++i)
      res.witness[n][a.levels[n][i]] = b.levels[n][s.assign[n][i]];
  return res;
}

// ---- words and ends ------------------------------------------------------------

bool word_admissible(const std::string& w, int s, bool rooted) {
  for (char c : w)
    if (c < '1' || c > '0' + s) return false;
  if (rooted && !w.empty() && w[0] != '0' + s) return false;
  for (size_t i = 1; i < w.size(); ++i) {
    int prev = w[i - 1] - '0';
    if (w[i] - '0' < s - prev + 1) return false;
  }
  return true;
}

long label_sum(const std::string& w) {
  long r = 1;
  for (char c : w) r += c - '0';
  return r;
}

std::string common_prefix(const std::string& v, const std::string& w) {
  auto [it, _] = std::mismatch(v.begin(), v.end(), w.begin(), w.end());
  return std::string(v.begin(), it);
}

char EndSpec::letter_at(size_t j) const {
  if (j < prefix.size()) return prefix[j];
  return period[(j - prefix.size()) % period.size()];
}

std::string EndSpec::vertex_at(size_t k) const {
  std::string out;
  out.reserve(k);
  for (size_t j = 0; j < k; ++j) out.push_back(letter_at(j));
  return out;
}

EndSpec parse_end(const std::string& text, int s, bool rooted) {
  EndSpec e;
  auto pos = text.find(':');
  if (pos == std::string::npos) {
    e.period = text;
  } else {
    e.prefix = text.substr(0, pos);
    e.period = text.substr(pos + 1);
  }
  if (e.period.empty())
    throw std::invalid_argument("end spec needs a nonempty period");
  // two copies of the period cover the junction and the wrap-around
  std::string probe = e.prefix + e.period + e.period;
  if (!word_admissible(probe, s, rooted))
    throw std::invalid_argument("end spec is not an admissible word: " + text);
  return e;
}

std::string phi_map(const std::string& derooted_word) {
  bool digits = false, letters = false;
  for (char c : derooted_word) {
    if (c == '1' || c == '2') digits = true;
    else if (c == 'a' || c == 'b') letters = true;
    else throw std::invalid_argument("phi_map: unexpected letter in word");
  }
  if (digits && letters)
    throw std::invalid_argument("phi_map: mixed alphabets in word");
  std::string out;
  for (size_t p = 0; p < derooted_word.size(); ++p) {
    char c = derooted_word[p];
    bool is_a = digits ? (c == '2') : (c == 'a');
    if (!is_a) continue;  // 'b' letters drop out
    out.push_back((p + 1) % 2 == 1 ? 'a' : 'b');
  }
  return out;
}

// ---- exports ---------------------------------------------------------------------

std::string graph_dot(const LeveledMultiGraph& g, int n_max) {
  if (g.max_level() < n_max)
    throw std::invalid_argument("graph_dot: graph not materialized that deep");
  std::ostringstream os;
  os << "digraph \"" << g.name << "\" {\n  rankdir=TB;\n";
  for (int n = 0; n <= n_max; ++n) {
    os << "  subgraph cluster_" << n << " {\n    label=\"level " << n
       << "\";\n    rank=same;\n";
    for (const auto& key : g.levels[n])
      os << "    \"L" << n << "/" << key << "\" [label=\"" << key << "\"];\n";
    os << "  }\n";
  }
  for (int n = 0; n < n_max; ++n) {
    for (size_t i = 0; i < g.levels[n].size(); ++i) {
      for (const auto& [j, m] : g.edges[n][i]) {
        os << "  \"L" << n << "/" << g.levels[n][i] << "\" -> \"L" << n + 1
           << "/" << g.levels[n + 1][j] << "\"";
        if (m != 1) os << " [label=\"" << m << "\"]";
        os << ";\n";
      }
    }
  }
  os << "}\n";
  return os.str();
}

std::string graph_json(const LeveledMultiGraph& g, int n_max) {
  if (g.max_level() < n_max)
    throw std::invalid_argument("graph_json: graph not materialized that deep");
  nlohmann::json js;
  js["name"] = g.name;
  js["levels"] = nlohmann::json::array();
  for (int n = 0; n <= n_max; ++n) js["levels"].push_back(g.levels[n]);
  js["edges"] = nlohmann::json::array();
  for (int n = 0; n < n_max; ++n)
    for (size_t i = 0; i < g.levels[n].size(); ++i)
      for (const auto& [j, m] : g.edges[n][i])
        js["edges"].push_back(nlohmann::json::array(
            {n, g.levels[n][i], g.levels[n + 1][j], m}));
  return js.dump(2);
}

}  // namespace bratteli
