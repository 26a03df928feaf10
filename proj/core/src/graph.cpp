#include "graphflow/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace graphflow {

namespace {

std::string vertex_name(int i) { return std::to_string(i + 1); }

}  // namespace

DirectedGraph::DirectedGraph(int vertex_count, std::vector<std::pair<int, int>> edge_list)
    : d_(vertex_count), edges_(std::move(edge_list)) {
  if (d_ <= 0) throw Error(ErrorCode::EmptyVertexSet, "graph needs at least one vertex");
  std::sort(edges_.begin(), edges_.end());
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    auto [i, j] = edges_[k];
    if (i < 0 || i >= d_ || j < 0 || j >= d_)
      throw Error(ErrorCode::VertexOutOfRange,
                  "edge (" + vertex_name(i) + "," + vertex_name(j) + ") leaves 1.." +
                      std::to_string(d_));
    if (k > 0 && edges_[k] == edges_[k - 1])
      throw Error(ErrorCode::DuplicateEdge,
                  "duplicate edge (" + vertex_name(i) + "," + vertex_name(j) + ")");
  }
  out_.assign(d_, VertexSet(d_));
  in_.assign(d_, VertexSet(d_));
  for (auto [i, j] : edges_) {
    out_[i].insert(j);
    in_[j].insert(i);
  }
}

bool DirectedGraph::has_edge(int i, int j) const {
  return i >= 0 && i < d_ && out_[i].contains(j);
}

const VertexSet& DirectedGraph::out(int i) const {
  check_vertex(i);
  return out_[i];
}

const VertexSet& DirectedGraph::in(int i) const {
  check_vertex(i);
  return in_[i];
}

VertexSet DirectedGraph::image(const VertexSet& a) const {
  if (a.dimension() != d_)
    throw Error(ErrorCode::DimensionMismatch, "set dimension does not match graph");
  VertexSet r(d_);
  a.for_each([&](int i) { r |= out_[i]; });
  return r;
}

VertexSet DirectedGraph::preimage(const VertexSet& a) const {
  if (a.dimension() != d_)
    throw Error(ErrorCode::DimensionMismatch, "set dimension does not match graph");
  VertexSet r(d_);
  a.for_each([&](int j) { r |= in_[j]; });
  return r;
}

DirectedGraph DirectedGraph::transposed() const {
  std::vector<std::pair<int, int>> rev;
  rev.reserve(edges_.size());
  for (auto [i, j] : edges_) rev.emplace_back(j, i);
  return DirectedGraph(d_, std::move(rev));
}

void DirectedGraph::check_vertex(int i) const {
  if (i < 0 || i >= d_)
    throw Error(ErrorCode::VertexOutOfRange,
                "vertex " + vertex_name(i) + " not in 1.." + std::to_string(d_));
}

Path::Path(const DirectedGraph& g, std::vector<int> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw Error(ErrorCode::NotAPath, "a path has at least one vertex");
  for (int v : vertices_)
    if (v < 0 || v >= g.d())
      throw Error(ErrorCode::VertexOutOfRange,
                  "vertex " + vertex_name(v) + " not in 1.." + std::to_string(g.d()));
  for (std::size_t k = 0; k + 1 < vertices_.size(); ++k)
    if (!g.has_edge(vertices_[k], vertices_[k + 1]))
      throw Error(ErrorCode::NotAPath, "(" + vertex_name(vertices_[k]) + "," +
                                           vertex_name(vertices_[k + 1]) + ") is not an edge");
}

Degrees degrees(const DirectedGraph& g, int i) {
  return Degrees{g.out(i).size(), g.in(i).size()};
}

bool is_l_graph(const DirectedGraph& g) {
  for (int i = 0; i < g.d(); ++i)
    if (g.out(i).empty()) return false;
  return true;
}

VertexSet orbit(const DirectedGraph& g, int i, Direction dir) {
  VertexSet seed(g.d());
  seed.insert(i);
  return orbit(g, seed, dir);
}

VertexSet orbit(const DirectedGraph& g, const VertexSet& u, Direction dir) {
  // Closure of the one-step image; paths of length 0 are excluded, so the
  // seed itself enters only if it is reached again.
  VertexSet reached(g.d());
  VertexSet frontier = dir == Direction::forward ? g.image(u) : g.preimage(u);
  while (!frontier.empty()) {
    reached |= frontier;
    VertexSet next = dir == Direction::forward ? g.image(frontier) : g.preimage(frontier);
    frontier = next - reached;
  }
  return reached;
}

std::optional<VertexSet> communicating_class_of(const DirectedGraph& g, int i) {
  VertexSet c = orbit(g, i, Direction::forward) & orbit(g, i, Direction::backward);
  if (c.empty()) return std::nullopt;
  return c;
}

namespace {

struct SccResult {
  std::vector<int> component;  // per-vertex component id
  int count = 0;
};

// Kosaraju with explicit stacks; component ids are assigned in reverse
// finish order, so they already form a topological order of the condensation.
SccResult strongly_connected_components(const DirectedGraph& g) {
  int d = g.d();
  std::vector<int> order;
  order.reserve(d);
  std::vector<char> seen(d, 0);
  for (int s = 0; s < d; ++s) {
    if (seen[s]) continue;
    std::vector<std::pair<int, int>> stack{{s, 0}};
    seen[s] = 1;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      std::vector<int> succ = g.out(v).members();
      if (next < static_cast<int>(succ.size())) {
        int w = succ[next++];
        if (!seen[w]) {
          seen[w] = 1;
          stack.emplace_back(w, 0);
        }
      } else {
        order.push_back(v);
        stack.pop_back();
      }
    }
  }

  SccResult r;
  r.component.assign(d, -1);
  for (int k = d - 1; k >= 0; --k) {
    int s = order[k];
    if (r.component[s] != -1) continue;
    std::vector<int> stack{s};
    r.component[s] = r.count;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      g.in(v).for_each([&](int w) {
        if (r.component[w] == -1) {
          r.component[w] = r.count;
          stack.push_back(w);
        }
      });
    }
    ++r.count;
  }
  return r;
}

}  // namespace

ClassDecomposition communicating_classes(const DirectedGraph& g) {
  int d = g.d();
  SccResult scc = strongly_connected_components(g);

  std::vector<VertexSet> comp_sets(scc.count, VertexSet(d));
  for (int v = 0; v < d; ++v) comp_sets[scc.component[v]].insert(v);

  // A component is a communicating class iff it carries a loop: more than
  // one vertex, or a single vertex with a self-loop.
  std::vector<int> class_of_component(scc.count, -1);
  std::vector<VertexSet> classes;
  VertexSet transitory(d);
  for (int c = 0; c < scc.count; ++c) {
    const VertexSet& members = comp_sets[c];
    int v = members.min_member();
    if (members.size() >= 2 || g.has_edge(v, v)) {
      class_of_component[c] = static_cast<int>(classes.size());
      classes.push_back(members);
    } else {
      transitory.insert(v);
    }
  }

  int k = static_cast<int>(classes.size());

  // Reachability between classes, via the orbit of one representative.
  std::vector<std::vector<char>> reach(k, std::vector<char>(k, 0));
  for (int mu = 0; mu < k; ++mu) {
    VertexSet o = orbit(g, classes[mu].min_member(), Direction::forward);
    for (int nu = 0; nu < k; ++nu) reach[mu][nu] = mu == nu || o.intersects(classes[nu]);
  }

  // Canonical total extension: topological order, ties by smallest member.
  std::vector<int> indeg(k, 0);
  for (int mu = 0; mu < k; ++mu)
    for (int nu = 0; nu < k; ++nu)
      if (mu != nu && reach[mu][nu]) ++indeg[nu];
  auto by_min_member = [&](int a, int b) {
    return classes[a].min_member() > classes[b].min_member();
  };
  std::priority_queue<int, std::vector<int>, decltype(by_min_member)> ready(by_min_member);
  for (int mu = 0; mu < k; ++mu)
    if (indeg[mu] == 0) ready.push(mu);
  std::vector<int> topo;
  topo.reserve(k);
  while (!ready.empty()) {
    int mu = ready.top();
    ready.pop();
    topo.push_back(mu);
    for (int nu = 0; nu < k; ++nu)
      if (mu != nu && reach[mu][nu] && --indeg[nu] == 0) ready.push(nu);
  }

  ClassDecomposition cd;
  cd.transitory = transitory;
  cd.classes.reserve(k);
  std::vector<int> position(k);
  for (int p = 0; p < k; ++p) {
    position[topo[p]] = p;
    cd.classes.push_back(classes[topo[p]]);
  }
  for (int mu = 0; mu < k; ++mu)
    for (int nu = 0; nu < k; ++nu)
      if (reach[mu][nu]) cd.order.emplace_back(position[mu], position[nu]);
  std::sort(cd.order.begin(), cd.order.end());

  cd.membership.assign(d, -1);
  for (int p = 0; p < k; ++p)
    cd.classes[p].for_each([&](int v) { cd.membership[v] = p; });
  return cd;
}

std::vector<VertexSet> maximal_classes(const DirectedGraph& g) {
  ClassDecomposition cd = communicating_classes(g);
  int k = static_cast<int>(cd.classes.size());
  std::vector<char> maximal(k, 1);
  for (const auto& [mu, nu] : cd.order)
    if (mu != nu) maximal[mu] = 0;
  std::vector<VertexSet> out;
  for (int p = 0; p < k; ++p)
    if (maximal[p]) out.push_back(cd.classes[p]);
  return out;
}

InvarianceKind invariance_kind(const DirectedGraph& g, const VertexSet& u) {
  bool fwd = orbit(g, u, Direction::forward).is_subset_of(u);
  bool bwd = orbit(g, u, Direction::backward).is_subset_of(u);
  return InvarianceKind{fwd, bwd, fwd && bwd};
}

std::optional<LoopBounds> find_loop(const Path& p) {
  const auto& v = p.vertices();
  int n = static_cast<int>(v.size());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (v[a] == v[b]) return LoopBounds{a, b};
  return std::nullopt;
}

namespace {

// Emits `batch` (a subset of transitory vertices, closed under unemitted
// predecessors) in topological order with smallest-id ties.
void emit_transitory(const DirectedGraph& g, const VertexSet& batch, std::vector<char>& emitted,
                     std::vector<QuotientNode>& nodes) {
  std::vector<int> members = batch.members();
  std::vector<int> indeg(g.d(), 0);
  for (int v : members)
    g.in(v).for_each([&](int w) {
      if (batch.contains(w) && w != v) ++indeg[v];
    });
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (int v : members)
    if (indeg[v] == 0) ready.push(v);
  while (!ready.empty()) {
    int v = ready.top();
    ready.pop();
    emitted[v] = 1;
    VertexSet single(g.d());
    single.insert(v);
    nodes.push_back(QuotientNode{false, single});
    g.out(v).for_each([&](int w) {
      if (batch.contains(w) && !emitted[w] && --indeg[w] == 0) ready.push(w);
    });
  }
}

}  // namespace

QuotientGraph extended_quotient_graph(const DirectedGraph& g) {
  ClassDecomposition cd = communicating_classes(g);
  int d = g.d();

  QuotientGraph q;
  std::vector<char> emitted(d, 0);

  // Classes in canonical order; before each class, the not-yet-emitted
  // transitory vertices that can reach it. This interleaving is a
  // topological order of the quotient, so the block form it induces is
  // upper triangular.
  for (const VertexSet& c : cd.classes) {
    VertexSet pred = orbit(g, c, Direction::backward) & cd.transitory;
    VertexSet batch(d);
    pred.for_each([&](int v) {
      if (!emitted[v]) batch.insert(v);
    });
    emit_transitory(g, batch, emitted, q.nodes);
    q.nodes.push_back(QuotientNode{true, c});
  }
  VertexSet leftovers(d);
  cd.transitory.for_each([&](int v) {
    if (!emitted[v]) leftovers.insert(v);
  });
  emit_transitory(g, leftovers, emitted, q.nodes);

  std::vector<int> node_of(d, -1);
  for (std::size_t n = 0; n < q.nodes.size(); ++n)
    q.nodes[n].members.for_each([&](int v) { node_of[v] = static_cast<int>(n); });

  std::set<std::pair<int, int>> edge_set;
  for (auto [i, j] : g.edges()) edge_set.emplace(node_of[i], node_of[j]);
  q.edges.assign(edge_set.begin(), edge_set.end());
  return q;
}

DirectedGraph QuotientGraph::as_graph() const {
  return DirectedGraph(static_cast<int>(nodes.size()), edges);
}

Restriction restrict_to(const DirectedGraph& g, const VertexSet& keep) {
  if (keep.empty()) throw Error(ErrorCode::EmptySet, "cannot restrict to the empty set");
  if (keep.dimension() != g.d())
    throw Error(ErrorCode::DimensionMismatch, "set dimension does not match graph");
  std::vector<int> originals = keep.members();
  std::vector<int> new_id(g.d(), -1);
  for (std::size_t k = 0; k < originals.size(); ++k) new_id[originals[k]] = static_cast<int>(k);
  std::vector<std::pair<int, int>> edges;
  for (auto [i, j] : g.edges())
    if (new_id[i] >= 0 && new_id[j] >= 0) edges.emplace_back(new_id[i], new_id[j]);
  return Restriction{DirectedGraph(static_cast<int>(originals.size()), std::move(edges)),
                     std::move(originals)};
}

}  // namespace graphflow
