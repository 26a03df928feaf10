#include "graphflow/semiflow.hpp"

#include <algorithm>
#include <unordered_map>

namespace graphflow {

namespace {

void require_l_graph(const DirectedGraph& g) {
  if (!is_l_graph(g))
    throw Error(ErrorCode::NotAnLGraph, "operation requires every vertex to have out-degree >= 1");
}

void require_dimension(const DirectedGraph& g, const VertexSet& a) {
  if (a.dimension() != g.d())
    throw Error(ErrorCode::DimensionMismatch, "set dimension does not match graph");
}

std::vector<VertexSet> singleton_omegas(const DirectedGraph& g) {
  std::vector<VertexSet> omegas;
  omegas.reserve(g.d());
  for (int i = 0; i < g.d(); ++i) {
    VertexSet s(g.d());
    s.insert(i);
    omegas.push_back(omega_limit(g, s));
  }
  return omegas;
}

VertexSet omega_from_singletons(const std::vector<VertexSet>& omegas, const VertexSet& a) {
  VertexSet r(a.dimension());
  a.for_each([&](int i) { r |= omegas[i]; });
  return r;
}

VertexSet repeller_from_singletons(const std::vector<VertexSet>& omegas, const VertexSet& a) {
  VertexSet r(a.dimension());
  for (int i = 0; i < a.dimension(); ++i)
    if (!(omegas[i] - a).empty()) r.insert(i);
  return r;
}

// Order pairs induced by omega-overlap chains: the reflexive-transitive
// closure of the relation "omega(sets[i]) meets sets[j]".
std::vector<std::pair<int, int>> overlap_order(const DirectedGraph& g,
                                               const std::vector<VertexSet>& sets) {
  int k = static_cast<int>(sets.size());
  std::vector<std::vector<char>> reach(k, std::vector<char>(k, 0));
  for (int i = 0; i < k; ++i) {
    VertexSet om = omega_limit(g, sets[i]);
    for (int j = 0; j < k; ++j) reach[i][j] = om.intersects(sets[j]);
  }
  for (int via = 0; via < k; ++via)
    for (int i = 0; i < k; ++i)
      if (reach[i][via])
        for (int j = 0; j < k; ++j)
          if (reach[via][j]) reach[i][j] = 1;
  std::vector<std::pair<int, int>> order;
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j)
      if (i != j && reach[i][j]) order.emplace_back(i, j);
    order.emplace_back(i, i);
  }
  std::sort(order.begin(), order.end());
  return order;
}

}  // namespace

VertexSet phi(const DirectedGraph& g, int n, const VertexSet& a) {
  require_dimension(g, a);
  if (n < 0) throw Error(ErrorCode::DimensionMismatch, "time must be nonnegative");
  VertexSet r = a;
  for (int step = 0; step < n && !r.empty(); ++step) r = g.image(r);
  return r;
}

VertexSet phi_minus(const DirectedGraph& g, int n, const VertexSet& a) {
  require_dimension(g, a);
  if (n < 0) throw Error(ErrorCode::DimensionMismatch, "time must be nonnegative");
  VertexSet r = a;
  for (int step = 0; step < n && !r.empty(); ++step) r = g.preimage(r);
  return r;
}

TrajectorySummary trajectory_summary(const DirectedGraph& g, const VertexSet& a) {
  require_dimension(g, a);
  std::unordered_map<VertexSet, int, VertexSetHash> seen;
  std::vector<VertexSet> trajectory{a};
  seen.emplace(a, 0);
  for (;;) {
    VertexSet next = g.image(trajectory.back());
    auto [it, inserted] = seen.emplace(next, static_cast<int>(trajectory.size()));
    if (!inserted) {
      int start = it->second;
      TrajectorySummary s;
      s.transient_length = start;
      s.period = static_cast<int>(trajectory.size()) - start;
      s.cycle_sets.assign(trajectory.begin() + start, trajectory.end());
      return s;
    }
    trajectory.push_back(std::move(next));
  }
}

VertexSet omega_limit(const DirectedGraph& g, const VertexSet& a, Direction dir) {
  if (dir == Direction::backward) return omega_limit(g.transposed(), a, Direction::forward);
  TrajectorySummary s = trajectory_summary(g, a);
  VertexSet r(g.d());
  for (const VertexSet& c : s.cycle_sets) r |= c;
  return r;
}

VertexSet recurrent_set(const DirectedGraph& g) {
  VertexSet r(g.d());
  for (int i = 0; i < g.d(); ++i) {
    VertexSet s(g.d());
    s.insert(i);
    if (omega_limit(g, s).contains(i)) r.insert(i);
  }
  return r;
}

bool is_weakly_invariant(const DirectedGraph& g, const VertexSet& a) {
  require_dimension(g, a);
  if (a.empty()) throw Error(ErrorCode::EmptySet, "weak invariance is defined for nonempty sets");
  // Past transient_length + period the images repeat, so this window decides
  // all n.
  TrajectorySummary s = trajectory_summary(g, a);
  VertexSet r = a;
  for (int n = 1; n <= s.transient_length + s.period; ++n) {
    r = g.image(r);
    if (!r.intersects(a)) return false;
  }
  return true;
}

MorseDecomposition finest_morse_decomposition(const DirectedGraph& g) {
  require_l_graph(g);
  ClassDecomposition cd = communicating_classes(g);
  return MorseDecomposition{cd.classes, cd.order};
}

MorseCheck is_morse_decomposition(const DirectedGraph& g, const std::vector<VertexSet>& sets) {
  require_l_graph(g);
  using Failure = MorseCheck::Failure;
  int k = static_cast<int>(sets.size());

  for (int i = 0; i < k; ++i) {
    require_dimension(g, sets[i]);
    if (sets[i].empty())
      return MorseCheck{false, Failure::empty_member,
                        "member " + std::to_string(i + 1) + " is empty"};
  }
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (sets[i].intersects(sets[j]))
        return MorseCheck{false, Failure::not_disjoint,
                          "members " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                              " intersect"};
  for (int i = 0; i < k; ++i)
    if (!is_weakly_invariant(g, sets[i]))
      return MorseCheck{false, Failure::not_weakly_invariant,
                        "member " + std::to_string(i + 1) + " is not weakly invariant"};

  VertexSet covered(g.d());
  for (const VertexSet& s : sets) covered |= s;
  VertexSet missing = recurrent_set(g) - covered;
  if (!missing.empty())
    return MorseCheck{false, Failure::recurrent_not_covered,
                      "recurrent vertices " + missing.to_string() + " are not covered"};

  // No-cycle condition: the omega-overlap relation may not admit a directed
  // cycle through two distinct members.
  std::vector<std::vector<char>> reach(k, std::vector<char>(k, 0));
  for (int i = 0; i < k; ++i) {
    VertexSet om = omega_limit(g, sets[i]);
    for (int j = 0; j < k; ++j) reach[i][j] = om.intersects(sets[j]);
  }
  for (int via = 0; via < k; ++via)
    for (int i = 0; i < k; ++i)
      if (reach[i][via])
        for (int j = 0; j < k; ++j)
          if (reach[via][j]) reach[i][j] = 1;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (reach[i][j] && reach[j][i])
        return MorseCheck{false, Failure::cycle_violation,
                          "members " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                              " lie on an omega-overlap cycle"};

  return MorseCheck{true, Failure::none, ""};
}

std::vector<VertexSet> attractors_exhaustive(const DirectedGraph& g) {
  require_l_graph(g);
  int d = g.d();
  if (d > 25)
    throw Error(ErrorCode::DimensionMismatch,
                "exhaustive attractor scan over 2^" + std::to_string(d) + " subsets refused");
  std::vector<VertexSet> omegas = singleton_omegas(g);

  std::vector<VertexSet> found;
  for (std::uint64_t mask = 0; mask < (1ULL << d); ++mask) {
    VertexSet a(d);
    VertexSet om(d);
    for (int i = 0; i < d; ++i)
      if (mask >> i & 1) {
        a.insert(i);
        om |= omegas[i];
      }
    if (om == a) found.push_back(std::move(a));
  }
  std::sort(found.begin(), found.end(), cardinality_then_canonical_less);
  return found;
}

std::vector<VertexSet> attractor_candidates(const DirectedGraph& g) {
  require_l_graph(g);
  ClassDecomposition cd = communicating_classes(g);
  int k = static_cast<int>(cd.classes.size());
  std::vector<VertexSet> omegas = singleton_omegas(g);

  std::vector<std::vector<char>> above(k, std::vector<char>(k, 0));
  for (const auto& [mu, nu] : cd.order) above[mu][nu] = 1;

  std::vector<VertexSet> found{VertexSet(g.d())};
  for (std::uint64_t mask = 1; mask < (1ULL << k); ++mask) {
    bool up_closed = true;
    for (int mu = 0; mu < k && up_closed; ++mu)
      if (mask >> mu & 1)
        for (int nu = 0; nu < k; ++nu)
          if (above[mu][nu] && !(mask >> nu & 1)) {
            up_closed = false;
            break;
          }
    if (!up_closed) continue;
    VertexSet seed(g.d());
    for (int mu = 0; mu < k; ++mu)
      if (mask >> mu & 1) seed |= cd.classes[mu];
    VertexSet candidate = orbit(g, seed, Direction::forward);
    if (omega_from_singletons(omegas, candidate) == candidate) found.push_back(candidate);
  }
  std::sort(found.begin(), found.end(), cardinality_then_canonical_less);
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return found;
}

AttractorList attractors(const DirectedGraph& g, int exhaustive_threshold) {
  if (g.d() <= exhaustive_threshold) return AttractorList{attractors_exhaustive(g), true};
  return AttractorList{attractor_candidates(g), false};
}

std::vector<AttractorReport> attractor_reports(const DirectedGraph& g, int exhaustive_threshold) {
  AttractorList list = attractors(g, exhaustive_threshold);
  std::vector<VertexSet> omegas = singleton_omegas(g);
  std::vector<AttractorReport> out;
  out.reserve(list.sets.size());
  for (const VertexSet& a : list.sets)
    out.push_back(AttractorReport{a, repeller_from_singletons(omegas, a)});
  return out;
}

VertexSet complementary_repeller(const DirectedGraph& g, const VertexSet& a) {
  require_l_graph(g);
  require_dimension(g, a);
  if (!(omega_limit(g, a) == a))
    throw Error(ErrorCode::NotAnAttractor, "set " + a.to_string() + " is not an attractor");
  return repeller_from_singletons(singleton_omegas(g), a);
}

MorseDecomposition morse_from_attractor_sequence(const DirectedGraph& g,
                                                 const std::vector<VertexSet>& seq) {
  require_l_graph(g);
  if (seq.size() < 2 || !seq.front().empty())
    throw Error(ErrorCode::NotStrictlyIncreasing,
                "sequence must start with the empty set and contain at least one attractor");
  for (std::size_t k = 0; k + 1 < seq.size(); ++k) {
    require_dimension(g, seq[k]);
    if (!(seq[k].is_subset_of(seq[k + 1])) || seq[k] == seq[k + 1])
      throw Error(ErrorCode::NotStrictlyIncreasing,
                  "attractor sequence is not strictly increasing at position " +
                      std::to_string(k + 1));
  }
  require_dimension(g, seq.back());
  std::vector<VertexSet> omegas = singleton_omegas(g);
  for (const VertexSet& a : seq)
    if (!(omega_from_singletons(omegas, a) == a))
      throw Error(ErrorCode::NotAnAttractor, "set " + a.to_string() + " is not an attractor");

  int n = static_cast<int>(seq.size()) - 1;
  MorseDecomposition m;
  m.sets.assign(n, VertexSet(g.d()));
  for (int i = 0; i <= n - 1; ++i)
    m.sets[n - i - 1] = seq[i + 1] & repeller_from_singletons(omegas, seq[i]);
  m.order = overlap_order(g, m.sets);
  return m;
}

std::vector<VertexSet> attractor_sequence_from_morse(const DirectedGraph& g,
                                                     const MorseDecomposition& m) {
  MorseCheck check = is_morse_decomposition(g, m.sets);
  if (!check.ok)
    throw Error(ErrorCode::InvalidMorseDecomposition, "not a Morse decomposition: " + check.detail);
  for (const auto& [alpha, beta] : overlap_order(g, m.sets))
    if (alpha > beta)
      throw Error(ErrorCode::InvalidMorseDecomposition,
                  "indices do not respect the canonical order");

  int n = static_cast<int>(m.sets.size());
  std::vector<VertexSet> seq{VertexSet(g.d())};
  VertexSet tops(g.d());
  for (int k = 1; k <= n; ++k) {
    tops |= m.sets[n - k];
    seq.push_back(orbit(g, tops, Direction::forward));
  }
  for (std::size_t k = 0; k + 1 < seq.size(); ++k)
    if (!(seq[k].is_subset_of(seq[k + 1])) || seq[k] == seq[k + 1])
      throw Error(ErrorCode::InvalidMorseDecomposition,
                  "decomposition does not induce a strictly increasing attractor sequence");
  return seq;
}

VertexSet recurrent_via_attractors(const DirectedGraph& g) {
  std::vector<VertexSet> all = attractors_exhaustive(g);
  std::vector<VertexSet> omegas = singleton_omegas(g);
  VertexSet r = VertexSet::full(g.d());
  for (const VertexSet& a : all) r &= a | repeller_from_singletons(omegas, a);
  return r;
}

std::vector<VertexSet> phi_connected_components(const DirectedGraph& g, const VertexSet& b) {
  require_dimension(g, b);
  // Stepwise reachability inside b, paths of length 0 included.
  std::vector<int> members = b.members();
  std::unordered_map<int, VertexSet> reach;
  for (int v : members) {
    VertexSet r(g.d());
    r.insert(v);
    VertexSet frontier = r;
    while (!frontier.empty()) {
      VertexSet next = (g.image(frontier) & b) - r;
      r |= next;
      frontier = next;
    }
    reach.emplace(v, std::move(r));
  }
  std::vector<VertexSet> components;
  VertexSet assigned(g.d());
  for (int v : members) {
    if (assigned.contains(v)) continue;
    VertexSet comp(g.d());
    for (int w : members)
      if (reach.at(v).contains(w) && reach.at(w).contains(v)) comp.insert(w);
    assigned |= comp;
    components.push_back(std::move(comp));
  }
  return components;
}

bool is_no_return_set(const DirectedGraph& g, const VertexSet& a) {
  require_dimension(g, a);
  DirectedGraph gt = g.transposed();
  for (int i = 0; i < g.d(); ++i) {
    if (a.contains(i)) continue;
    VertexSet s(g.d());
    s.insert(i);
    if (omega_limit(g, s).intersects(a) && omega_limit(gt, s).intersects(a)) return false;
  }
  return true;
}

}  // namespace graphflow
