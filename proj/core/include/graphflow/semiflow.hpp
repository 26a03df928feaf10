#pragma once

#include <string>
#include <vector>

#include "graphflow/graph.hpp"

namespace graphflow {

/// Eventually periodic structure of the trajectory A, F(A), F(F(A)), ...
/// under the one-step set map F = phi(g,1,.). The power set is finite, so
/// every trajectory enters a cycle; `cycle_sets` lists one full cycle
/// starting at step `transient_length`.
struct TrajectorySummary {
  int transient_length;
  int period;
  std::vector<VertexSet> cycle_sets;
};

/// Disjoint weakly invariant sets covering the recurrent set, together with
/// the order pairs induced by omega-limit overlap chains (reflexive pairs
/// included). Indices follow the canonical total extension of the order.
struct MorseDecomposition {
  std::vector<VertexSet> sets;
  std::vector<std::pair<int, int>> order;
};

struct AttractorReport {
  VertexSet attractor;
  VertexSet repeller;
};

/// Result of the Morse-decomposition test, with the first violated
/// condition on failure.
struct MorseCheck {
  enum class Failure {
    none,
    empty_member,
    not_disjoint,
    not_weakly_invariant,
    recurrent_not_covered,
    cycle_violation,
  };

  bool ok;
  Failure reason;
  std::string detail;
};

/// Attractor listing. `exhaustive` is false when the list came from the
/// candidate generator instead of the full subset scan.
struct AttractorList {
  std::vector<VertexSet> sets;
  bool exhaustive;
};

inline constexpr int kDefaultExhaustiveThreshold = 20;

/// Endpoints of length-n paths starting in `a`. phi(g,0,a) == a.
VertexSet phi(const DirectedGraph& g, int n, const VertexSet& a);

/// The time-reversed semiflow: phi on the transposed graph.
VertexSet phi_minus(const DirectedGraph& g, int n, const VertexSet& a);

TrajectorySummary trajectory_summary(const DirectedGraph& g, const VertexSet& a);

/// Union of the cycle sets of the trajectory of `a` (forward), or of the
/// transposed graph's trajectory (backward).
VertexSet omega_limit(const DirectedGraph& g, const VertexSet& a,
                      Direction dir = Direction::forward);

/// Vertices i with i in omega({i}); equals the union of the communicating
/// classes.
VertexSet recurrent_set(const DirectedGraph& g);

/// True iff phi(n,a) meets a for every n; decided on one trajectory period.
bool is_weakly_invariant(const DirectedGraph& g, const VertexSet& a);

/// The finest Morse decomposition: the communicating classes with their
/// order. Requires an L-graph.
MorseDecomposition finest_morse_decomposition(const DirectedGraph& g);

MorseCheck is_morse_decomposition(const DirectedGraph& g, const std::vector<VertexSet>& sets);

/// All sets with omega(a) == a, the empty set included, sorted by
/// cardinality then canonical set order. Scans all 2^d subsets when d is at
/// most `exhaustive_threshold`; otherwise falls back to omega-validated
/// candidates generated from up-closed unions of finest Morse sets.
AttractorList attractors(const DirectedGraph& g,
                         int exhaustive_threshold = kDefaultExhaustiveThreshold);

std::vector<VertexSet> attractors_exhaustive(const DirectedGraph& g);

std::vector<VertexSet> attractor_candidates(const DirectedGraph& g);

/// Attractor-repeller pairs for every attractor of `g`.
std::vector<AttractorReport> attractor_reports(
    const DirectedGraph& g, int exhaustive_threshold = kDefaultExhaustiveThreshold);

/// The complementary repeller {i : omega({i}) \ a is nonempty}. `a` must be
/// an attractor.
VertexSet complementary_repeller(const DirectedGraph& g, const VertexSet& a);

/// Morse sets from a strictly increasing attractor sequence [empty, A1,
/// ..., An]: M_{n-i} = A_{i+1} intersected with the repeller of A_i.
MorseDecomposition morse_from_attractor_sequence(const DirectedGraph& g,
                                                 const std::vector<VertexSet>& seq);

/// The attractor sequence of a Morse decomposition in canonical index
/// order: A_k = orbit of the union of the k top Morse sets, prefixed by the
/// empty set.
std::vector<VertexSet> attractor_sequence_from_morse(const DirectedGraph& g,
                                                     const MorseDecomposition& m);

/// The recurrent set as the intersection of A union A* over all attractors
/// (exhaustive enumeration).
VertexSet recurrent_via_attractors(const DirectedGraph& g);

/// Maximal subsets of `b` in which every ordered vertex pair is joined by a
/// stepwise path staying inside `b`. On the recurrent set these are the
/// finest Morse sets.
std::vector<VertexSet> phi_connected_components(const DirectedGraph& g, const VertexSet& b);

/// Diagnostic for the alternative no-return formulation: every vertex whose
/// forward and backward omega-limits both meet `a` lies in `a`. Not claimed
/// equivalent to the no-cycle condition.
bool is_no_return_set(const DirectedGraph& g, const VertexSet& a);

}  // namespace graphflow
