#pragma once

// Central Markov chains on the branching graphs: the ballot chain M^lambda
// on the semi-Pascal graph, the Motzkin chain M^(lambda1,lambda2), the
// end-directed walks S_(t,eta) on (de)rooted Fuss-Catalan trees, and the
// auxiliary walk S^eta, together with exact centrality verification, trace
// weights, and the ergodic-method dimension-ratio estimator.

#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <bratteli/graphs.hpp>
#include <bratteli/numeric.hpp>

namespace bratteli {

// Parameters of a tree walk, kept on the chain so samplers can re-derive
// the stepping rule directly on tree words instead of materializing the
// pascalized graph (whose levels grow exponentially with depth).
struct WalkParams {
  int s = 2;
  bool derooted = false;
  bool aux = false;
  EndSpec end;  // meaningful for the end-directed walk only
  double eta = 0.0;
  double g = 1.0;
};

struct ChainModel {
  std::string name;
  bool exact = true;
  LeveledMultiGraph graph;
  // rows[n][i]: outgoing transition list of the i-th level-n vertex, aligned
  // with graph indices; a missing row marks an unreachable vertex (its
  // conditional law is undefined, not zero).
  std::vector<std::vector<std::optional<std::vector<std::pair<int, Prob>>>>>
      rows;
  // marginals[n][i] = nu(X_n = v_i). For the Motzkin chain this is the
  // recursion-built v_{n,d} table (meaningful even past the horizon);
  // otherwise the pushforward of the transition rows.
  std::vector<std::vector<Prob>> marginals;
  // Largest level for which levels 0..horizon carry nonnegative marginals,
  // i.e. through which a central chain actually exists. Rows are only
  // materialized up to the horizon.
  int horizon = std::numeric_limits<int>::max();
  // appends one level of graph, marginals, and (within horizon) rows;
  // single-writer by contract, queries on built levels are read-only
  std::function<void(ChainModel&)> extend;
  // set by the walk builders; empty for lattice chains
  std::optional<WalkParams> walk;

  int built_to() const { return static_cast<int>(marginals.size()) - 1; }
  void ensure(int n);
  // nullopt when the source vertex is unreachable, the target is not a
  // child, or the step lies beyond the horizon
  std::optional<Prob> transition(int n, const std::string& v,
                                 const std::string& w);
};

// Ballot chain on the semi-Pascal graph. Up-step probability from height s,
// written in the cancellation-free form obtained by substituting x = 2l-1
// into ((1-l)^(s+2)-l^(s+2))/((1-l)^(s+1)-l^(s+1)):
//   p_up(s) = sum_{j odd} binom(s+2,j) x^(j-1) / (2 sum_{j odd} binom(s+1,j) x^(j-1)),
// which reduces to (s+2)/(2(s+1)) at x=0. Requires 1/2 <= lambda <= 1.
ChainModel ballot_chain(const Prob& lambda);

// Motzkin chain. The level marginals v_{n,d} are built from the closed form
//   v_{n,0} = sum_l binom(n,2l) Cat(l) (l1 l2)^l (1-l1-l2)^(n-2l)
// and the per-path recursion q_{n,d+1} = q_{n-1,d} - q_{n,d-1} - q_{n,d}
// (q_{n,d} = v_{n,d}/m_{n,d}), which makes every row sum to 1 identically.
// Transitions are p((n-1,d)->(n,d')) = q_{n,d'}/q_{n-1,d} where defined.
// Rows stay nonnegative for all n exactly when l1 l2 = (1-l1-l2)^2; off that
// curve the first negative entry freezes the horizon. Parameters are
// accepted in either order and must satisfy l1,l2 >= 0, l1+l2 <= 1.
ChainModel motzkin_chain(const Prob& lambda1, const Prob& lambda2);

// End-directed central walk on the order-s Fuss-Catalan tree, presented as a
// chain on the pascalized tree. Off the end: G^(-l(v)) toward the end,
// eta G^(l(w)) to each child w. Along the end, forward probabilities follow
// the normalization induction with p(t0 -> t1) = 1 - sum_{off-end children}
// eta G^(l(w)) and backward ones the crossing identity p_back = eta/p_fwd.
// eta in [0, s^s/(s+1)^(s+1)]; exact mode when eta is rational and the G
// fixed-point equation has a rational root (eta = 0 and eta critical do).
ChainModel fib_walk(const EndSpec& end, const Prob& eta, int s = 2,
                    bool derooted = false);

// Auxiliary walk on the derooted Fibonacci tree: root probabilities
// 1/(1+G) to the label-1 child and G/(1+G) to the label-2 child, the usual
// off-root rule elsewhere. eta in (0, 4/27].
ChainModel aux_walk(const Prob& eta);

// Constant-up chain on the semi-Pascal graph (up with probability p at
// heights >= 1, forced up on the axis). Deliberately non-central for
// p != the ballot values; used as a verification control.
ChainModel control_chain(const Prob& up);

struct CentralityReport {
  bool pass = false;
  int levels_checked = 0;
  double max_spread = 0.0;
  int worst_level = -1;
  std::string worst_vertex;
  std::string reason;
};

// Checks that all rooted paths into each vertex at levels <= n_max carry the
// same probability, by inductively propagating the per-path value and
// measuring the spread of parent candidates at each vertex (equivalent to
// exhaustive enumeration, vertex by vertex). Paths through an unreachable
// vertex carry probability 0 before any absent row is consulted.
CentralityReport verify_centrality(ChainModel& chain, int n_max, double tol);

// nu(X_n = v)/dim(v) per level-n vertex, aligned with graph.levels[n].
std::vector<Prob> trace_weights(ChainModel& chain, int n);

// Ergodic-method ratio sequence dim(w -> omega_i)/dim(v -> omega_i) for an
// edge v (at level nv) -> w (at level nv+1) along a tail of vertices at
// strictly increasing levels. nullopt entries mark tail vertices unreachable
// from v.
std::vector<std::optional<double>> ergodic_estimate(
    const LeveledMultiGraph& g, const std::vector<std::pair<int, std::string>>& tail,
    int nv, const std::string& v, const std::string& w);

// The v_{n,d} marginal table rows 0..n_max (exact when the parameters are),
// regardless of whether a central chain exists off the curve.
std::vector<std::vector<Prob>> motzkin_marginal_rows(const Prob& lambda1,
                                                     const Prob& lambda2,
                                                     int n_max);

// Exports: CSV columns level,from,to,p_num,p_den (exact) or level,from,to,p
// (floating); JSON mirrors the table with marginals attached.
std::string chain_csv(ChainModel& chain, int n_max);
std::string chain_json(ChainModel& chain, int n_max);

}  // namespace bratteli
