#pragma once

// Monte Carlo layer: trajectory sampling from chain tables, direct walk
// simulation on tree words (constant work per step, so horizons of 10^4+ are
// cheap), exit-time statistics through the increment laws Y^(j), the
// law-of-large-numbers experiment, return/recurrence probes, and the SU(2)
// quadrature oracle for the Motzkin marginals.

#include <cstdint>
#include <string>
#include <vector>

#include <bratteli/chains.hpp>
#include <bratteli/graphs.hpp>

namespace bratteli {

struct Trajectory {
  std::uint64_t seed = 0;  // derived per-trajectory seed actually used
  std::vector<std::string> vertices;  // vertices[0] is the root key
};

struct ExitTimeRecord {
  long k = 0;        // end index
  long n_k = 0;      // last-passage step N_k
  long r_k = 1;      // label sum r(t_k)
  double ratio = 0;  // (N_k - k)/r_k
  bool censored = false;
};

struct EstimateResult {
  double estimate = 0;
  double stderr_ = 0;
  double exact_target = 0;
  long count = 0;
};

struct LlnSummary {
  double eta = 0;
  long k = 0;
  long count = 0;
  double mean = 0;
  double stddev = 0;
  double stderr_ = 0;
  double median = 0;
  double target = 0;  // lln_limit(eta); NaN at the critical point
  long censored = 0;
};

struct Su2Result {
  double value = 0;
  double err = 0;  // estimated quadrature error
};

// Fixed splittable scheme: trajectory i always draws from mix_seed(seed, i),
// so batching or parallel order cannot change results.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

// Samples `count` trajectories of `steps` steps from the chain's transition
// tables (the chain is materialized to that depth, so keep steps moderate).
std::vector<Trajectory> sample_trajectories(ChainModel& chain, int steps,
                                            long count, std::uint64_t seed);

// Frequency of {position at step 2n = root} for a rooted end-directed walk,
// with binomial standard error and the exact target C^s_n eta^n.
EstimateResult empirical_return_probability(ChainModel& chain, long n,
                                            long count, std::uint64_t seed);

// Samples N_k at k = k_max via independent increments: the root segment
// N_0 ~ Y^(1), then N_t - N_{t-1} - 1 ~ Y^(l(t_t)), with
// P[Y^(j) = 2n] = C^j_n eta^n / G^j, so the total exponent is r(t_k) and
// E[(N_k - k)/r(t_k)] = f(eta) exactly. Inverse-CDF tables are truncated at
// tail mass 1e-12 (or at the hard cap near criticality, where draws past
// the cap come back censored). One record per trajectory. Requires
// 0 <= eta <= 4/27 and an end over labels {1,2}.
std::vector<ExitTimeRecord> exit_times_increments(const EndSpec& end,
                                                  double eta, long k_max,
                                                  long count,
                                                  std::uint64_t seed);

// Simulates the walk itself and records the last step at t_{k_max},
// declaring the passage final once the walk sits below t_{k_max} at least
// 2*margin levels deeper. Trajectories that fail to declare within the
// horizon are flagged censored, never dropped.
std::vector<ExitTimeRecord> exit_times_direct(ChainModel& chain, long k_max,
                                              long horizon, long count,
                                              std::uint64_t seed,
                                              long margin = 30);

// Distribution of (N_k - k)/r(t_k) at k = k_max from the increment sampler,
// summarized against the exact limit from lln_limit.
LlnSummary lln_experiment(const EndSpec& end, double eta, long k_max,
                          long count, std::uint64_t seed);

// Fraction of trajectories whose final position shares a prefix of length
// >= threshold with the given end.
double convergence_to_end(ChainModel& chain, const EndSpec& end, int steps,
                          long count, std::uint64_t seed, int threshold);

// Root-return counts over a fixed horizon, one entry per trajectory, and
// their mean. Recurrent walks keep accumulating returns as the horizon
// grows; transient ones saturate.
std::vector<long> root_returns(ChainModel& chain, long steps, long count,
                               std::uint64_t seed);
double recurrence_probe(ChainModel& chain, long steps, long count,
                        std::uint64_t seed);

// Haar-measure moment of (l1 a + l2 conj(a) + 1-l1-l2)^n on SU(2) by
// quadrature (Gauss-Legendre in theta, uniform grids in phi and psi).
// Throws if the internal error estimate exceeds 1e-6.
Su2Result su2_moment(double lambda1, double lambda2, long n, int order = 32);

std::string trajectories_csv(const std::vector<Trajectory>& ts);
std::string exit_records_csv(const std::vector<ExitTimeRecord>& rs);

}  // namespace bratteli
