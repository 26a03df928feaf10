#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "graphflow/graph.hpp"
#include "graphflow/rational.hpp"
#include "graphflow/semiflow.hpp"

namespace graphflow {

inline constexpr double kDefaultChainTol = 1e-9;

/// Row-stochastic transition matrix. When constructed from rational entries
/// whose rows sum to exactly one, an exact view is kept alongside the
/// double view and the linear solves run on it.
class TransitionMatrix {
 public:
  explicit TransitionMatrix(std::vector<std::vector<double>> rows,
                            double tol = kDefaultChainTol);
  explicit TransitionMatrix(const std::vector<std::vector<Rational>>& rows,
                            double tol = kDefaultChainTol);

  int d() const { return d_; }
  double tol() const { return tol_; }

  double at(int i, int j) const { return p_[i][j]; }
  const std::vector<std::vector<double>>& rows() const { return p_; }

  bool exact() const { return exact_.has_value(); }
  const std::vector<std::vector<Rational>>& exact_rows() const { return *exact_; }

 private:
  void validate();

  int d_ = 0;
  double tol_;
  std::vector<std::vector<double>> p_;
  std::optional<std::vector<std::vector<Rational>>> exact_;
};

/// Probability vector on the states; entries are clamped at zero within tol
/// and must sum to one within tol.
struct Distribution {
  std::vector<double> weights;

  Distribution(std::vector<double> w, double tol = kDefaultChainTol);

  static Distribution point_mass(int d, int state);
  static Distribution uniform(int d);

  int d() const { return static_cast<int>(weights.size()); }
};

enum class StateKind { transient, positive_recurrent };

/// Per-state long-run tags. Positive recurrent exactly on the union of the
/// order-maximal communicating classes; the period of a state is the period
/// of its class, absent when no loop passes through the state.
struct StateClassification {
  ClassDecomposition classes;
  std::vector<int> maximal;  // canonical indices of the maximal classes
  std::vector<StateKind> kind;
  std::vector<std::optional<int>> period;
};

struct InvariantDistribution {
  VertexSet support;  // one maximal class
  Distribution mu;
};

/// Absorption probabilities: rows[i][nu] is the probability that the chain
/// started at i enters maximal class `classes[nu]` first.
struct AbsorptionMatrix {
  std::vector<VertexSet> classes;
  std::vector<std::vector<double>> rows;
};

inline constexpr double kInfiniteMean = std::numeric_limits<double>::infinity();

/// First-hitting data for one target set.
struct HittingAnalysis {
  VertexSet target;
  std::vector<double> probability;       // F(i,A)
  std::vector<double> mean;              // mu(i,A); +infinity when F < 1
  std::vector<std::vector<double>> distribution;  // distribution[n-1][i] = f_n(i,A)
};

enum class LimitMode { pointwise, cesaro };

struct LimitResult {
  Distribution dist;
  LimitMode mode;
};

inline constexpr int kLeakingHorizon = 50;

/// Certificate for the geometric leaking bound. `n` is the shortest escape
/// length from the start state and `rho` the uniform n-step escape mass
/// over the reachable not-yet-escaped region, so the bound
/// p_{mn+alpha}(i,j) <= (1-rho)^m holds for j in B. margins[m-1] is the
/// worst bound-minus-probability gap over alpha at window m.
struct LeakingReport {
  double rho;
  int n;
  std::vector<int> escape_path;  // maximum-probability shortest escape path
  double path_probability;
  std::vector<double> margins;
  double min_margin;
};

struct SimulationResult {
  std::uint64_t seed;
  int trajectories;
  int horizon;
  std::vector<std::uint64_t> visit_counts;  // per state, steps 1..horizon, all trajectories
  std::vector<std::int64_t> hitting_times;  // per trajectory; -1 when the run never hit
  std::vector<VertexSet> maximal_classes;
  std::vector<std::uint64_t> absorption_counts;  // per maximal class
  std::uint64_t unabsorbed;

  double occupancy(int state) const {
    return static_cast<double>(visit_counts[state]) /
           (static_cast<double>(trajectories) * horizon);
  }
};

struct FactCheck {
  std::string fact;
  bool applicable;
  bool pass;
  std::string note;
};

struct DictionaryReport {
  std::vector<FactCheck> facts;

  bool all_pass() const {
    for (const FactCheck& f : facts)
      if (f.applicable && !f.pass) return false;
    return true;
  }
};

/// The graph with an edge wherever a transition probability is positive.
/// Always an L-graph.
DirectedGraph underlying_graph(const TransitionMatrix& chain);

/// P^n, with P^0 = I.
std::vector<std::vector<double>> n_step(const TransitionMatrix& chain, int n);
std::vector<std::vector<Rational>> n_step_exact(const TransitionMatrix& chain, int n);

/// Probability that the chain realizes the vertex sequence `gamma` from
/// initial distribution pi0. The sequence need not be a path; missing edges
/// contribute zero factors.
double path_probability(const TransitionMatrix& chain, const Distribution& pi0,
                        const std::vector<int>& gamma);

/// First-hitting time distribution f_1..f_{n_max}(i, target) by the taboo
/// recursion.
std::vector<double> hitting_distribution(const TransitionMatrix& chain, int state,
                                         const VertexSet& target, int n_max);

/// F(i, target) for every state, by the one-step linear system restricted
/// to the states that can reach the target.
std::vector<double> hitting_probabilities(const TransitionMatrix& chain,
                                          const VertexSet& target);
double hitting_probability(const TransitionMatrix& chain, int state, const VertexSet& target);

/// mu(i, target) for every state; +infinity where F(i, target) < 1.
std::vector<double> mean_hitting_times(const TransitionMatrix& chain, const VertexSet& target);
double mean_hitting_time(const TransitionMatrix& chain, int state, const VertexSet& target);

HittingAnalysis hitting_analysis(const TransitionMatrix& chain, const VertexSet& target,
                                 int n_max);

StateClassification classify_states(const TransitionMatrix& chain);

/// One extreme invariant distribution per maximal class, in canonical class
/// order.
std::vector<InvariantDistribution> invariant_distributions(const TransitionMatrix& chain);

AbsorptionMatrix absorption_probabilities(const TransitionMatrix& chain);

/// The limit of the state distribution when every maximal class is
/// aperiodic (pointwise), and the Cesaro limit otherwise.
LimitResult limit_distribution(const TransitionMatrix& chain, const Distribution& pi0);

LeakingReport leaking_bound_check(const TransitionMatrix& chain, int state, const VertexSet& b);

/// Residual of the first-entrance decomposition
/// p_n(i,j) = sum_r f_r(i,j) p_{n-r}(j,j); zero on exact chains.
double random_ck_check(const TransitionMatrix& chain, int i, int j, int n);

SimulationResult simulate(const TransitionMatrix& chain, const Distribution& pi0,
                          std::uint64_t seed, int horizon, int trajectories);

/// States with positive absorption probability into at least two distinct
/// maximal classes.
VertexSet multistable_states(const TransitionMatrix& chain);

/// Machine checks of the chain/graph/semiflow dictionary (Facts 1-18) on
/// this instance.
DictionaryReport verify_dictionary(const TransitionMatrix& chain,
                                   int exhaustive_threshold = kDefaultExhaustiveThreshold);

}  // namespace graphflow
