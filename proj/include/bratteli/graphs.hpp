#pragma once

// Leveled multigraphs and the concrete branching graphs: the semi-Pascal
// graph, the Motzkin graph, s-Fuss-Catalan trees (rooted and derooted), the
// B# subword graph, pascalization, even-level contraction, and the exact
// path-count dynamic programming that the chain constructions sit on.
//
// Vertex keys are canonical strings, unique across the whole graph, so that
// isomorphism witnesses and golden files stay stable: "(m,s)" pairs for the
// lattice graphs, label words ("", "2", "21", ...) for trees, and subwords
// over {a,b} for the B# graph.

#include <functional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <bratteli/numeric.hpp>

namespace bratteli {

struct LeveledMultiGraph {
  std::string name;
  // levels[n] lists the level-n keys; edges[n][i] holds (index into level
  // n+1, multiplicity) pairs for the i-th level-n vertex.
  std::vector<std::vector<std::string>> levels;
  std::vector<std::vector<std::vector<std::pair<int, long>>>> edges;
  std::vector<std::unordered_map<std::string, int>> index;
  // Appends one level (and the edge block leading to it). Extension is a
  // single-writer operation by contract; queries on materialized levels are
  // read-only and safe to run concurrently.
  std::function<void(LeveledMultiGraph&)> grow;

  int max_level() const { return static_cast<int>(levels.size()) - 1; }
  void ensure_level(int n);
  int push_level();  // appends an empty level, returns its number
  int add_vertex(int n, const std::string& key);
  void add_edge(int n, const std::string& v, const std::string& w,
                long mult = 1);
  int idx(int n, const std::string& key) const;  // -1 when absent
  long mult(int n, const std::string& v, const std::string& w) const;
  const std::string& root() const { return levels.at(0).at(0); }
};

// ---- concrete builders ----------------------------------------------------

// Heights s <= m with s == m (mod 2); edges (m,s) -> (m+1, s +- 1).
LeveledMultiGraph semi_pascal(int n_max);

// Vertices (n,d) for 0 <= d <= n; edges whenever |d - d'| <= 1.
LeveledMultiGraph motzkin_graph(int n_max);

// The path graph on 0,1,2,...; its pascalization is the semi-Pascal graph.
LeveledMultiGraph half_line(int n_max);

// s-Fuss-Catalan tree. The root has a single child labeled s; a vertex
// labeled i has i children labeled s, s-1, ..., s-i+1. Keys are label words
// as digit strings. The derooted variant starts at the original level-1
// vertex (label s); its keys drop that leading letter, so its root is "".
LeveledMultiGraph fc_tree(int s, int n_max, bool derooted = false);

// Level n holds the distinct subwords of the alternating word beta(n) =
// "abab..."; edges from level n to n+1:
//   n even:  w == u, or w == u+"a", or u == w+"b"
//   n odd:   w == u, or w == u+"b", or u == w+"a"
LeveledMultiGraph bsharp_graph(int n_max);

// Pascalization: level n holds (n,v) for v at depth k <= n, k == n (mod 2);
// ((n,v),(n+1,w)) inherits the multiplicity of the undirected edge {v,w}.
// Level-local keys reuse the underlying keys (unique by the key contract).
LeveledMultiGraph pascalize(const LeveledMultiGraph& g, int n_max);

// Level n of the result is level 2n of g; multiplicities count two-step
// paths through the dropped odd level.
LeveledMultiGraph even_contraction(const LeveledMultiGraph& g, int n_max);

// ---- exact path counting ---------------------------------------------------

// Number of paths from (nv, v) to (nw, w), multiplicities multiplied along
// each path. dim(v,v) = 1; zero when nw < nv or a key is absent.
CountInt dim_between(const LeveledMultiGraph& g, int nv, const std::string& v,
                     int nw, const std::string& w);

// dim_between from the root, as a full level row (index-aligned).
std::vector<CountInt> dims_of_level(const LeveledMultiGraph& g, int n);

// ---- leveled-graph isomorphism ---------------------------------------------

struct IsoResult {
  bool isomorphic = false;
  int failed_level = -1;  // first level where the check broke, -1 if none
  // per level, key-of-g1 -> key-of-g2
  std::vector<std::unordered_map<std::string, std::string>> witness;
};

// Level-preserving multiplicity-respecting isomorphism up to n_max. When a
// witness function is supplied (level, key-of-g1) -> key-of-g2, only that
// mapping is checked; otherwise identity keys are tried first and a
// refinement-guided backtracking search after that.
IsoResult graphs_isomorphic_up_to(
    const LeveledMultiGraph& g1, const LeveledMultiGraph& g2, int n_max,
    const std::function<std::string(int, const std::string&)>& witness = {});

// ---- tree words, ends, and the B# relabeling -------------------------------

// Words are digit strings over labels {1..s}. Admissibility: a letter i is
// followed by one of s, s-1, ..., s-i+1 (for s=2: a 1 is always followed by
// a 2). `rooted` words must begin with the label s; stripped (derooted)
// words may begin with any label.
bool word_admissible(const std::string& w, int s, bool rooted);

// r(w) = 1 + sum of the labels of w.
long label_sum(const std::string& w);

std::string common_prefix(const std::string& v, const std::string& w);

// Depth-local structure used by walks: children of a vertex in fc_tree key
// space, its parent, and its label. Derooted roots carry label s.
std::vector<std::string> tree_children(const std::string& v, int s,
                                       bool derooted);
long tree_label(const std::string& v, int s, bool derooted);

// An eventually periodic end: prefix once, then the period forever.
struct EndSpec {
  std::string prefix;
  std::string period;  // nonempty

  char letter_at(size_t j) const;        // 0-based letter of the infinite word
  std::string vertex_at(size_t k) const; // word of the first k letters
};

// Parses "prefix:period" (or just "period"); validates admissibility for the
// tree of order s, including the wrap-arounds and, for rooted trees, the
// leading label s.
EndSpec parse_end(const std::string& text, int s, bool rooted);

// The B# relabeling: take a derooted tree word (digits or letters; 2 <-> a,
// 1 <-> b), keep each 'a' (odd 1-based position stays 'a', even position
// turns into 'b'), delete every 'b'.
std::string phi_map(const std::string& derooted_word);

// ---- exports ----------------------------------------------------------------

std::string graph_dot(const LeveledMultiGraph& g, int n_max);
std::string graph_json(const LeveledMultiGraph& g, int n_max);

// Helpers for "(m,s)" lattice keys.
std::string pair_key(long m, long s);
std::pair<long, long> parse_pair_key(const std::string& key);

}  // namespace bratteli
