#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "graphflow/errors.hpp"
#include "graphflow/vertex_set.hpp"

namespace graphflow {

enum class Direction { forward, backward };

/// Finite directed graph without multiple edges. Vertices are 0-based here;
/// file formats and JSON reports are 1-based and convert at the io boundary.
class DirectedGraph {
 public:
  DirectedGraph(int vertex_count, std::vector<std::pair<int, int>> edge_list);

  int d() const { return d_; }

  /// Edges in canonical order, sorted by (source, target).
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  bool has_edge(int i, int j) const;

  /// Successor set of i, i.e. the i-th adjacency row.
  const VertexSet& out(int i) const;

  /// Predecessor set of i.
  const VertexSet& in(int i) const;

  /// One-step image of a set: all endpoints of edges starting in `a`.
  VertexSet image(const VertexSet& a) const;

  /// One-step preimage: all starting points of edges ending in `a`.
  VertexSet preimage(const VertexSet& a) const;

  DirectedGraph transposed() const;

  friend bool operator==(const DirectedGraph& a, const DirectedGraph& b) {
    return a.d_ == b.d_ && a.edges_ == b.edges_;
  }

 private:
  void check_vertex(int i) const;

  int d_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<VertexSet> out_, in_;
};

/// A vertex sequence in which every consecutive pair is an edge of the
/// owning graph. Length 0 means a single vertex.
class Path {
 public:
  Path(const DirectedGraph& g, std::vector<int> vertices);

  const std::vector<int>& vertices() const { return vertices_; }
  int length() const { return static_cast<int>(vertices_.size()) - 1; }

 private:
  std::vector<int> vertices_;
};

/// Communicating classes, transitory vertices and the reachability order.
///
/// Classes are listed in the canonical total extension of the order: a
/// topological order of class reachability with ties broken by smallest
/// member vertex. `order` holds the exact order pairs (mu,nu) meaning
/// C_mu precedes-or-equals C_nu, reflexive pairs included.
struct ClassDecomposition {
  std::vector<VertexSet> classes;
  VertexSet transitory;
  std::vector<std::pair<int, int>> order;
  std::vector<int> membership;  // per-vertex class index, -1 for transitory

  bool ordered(int mu, int nu) const {
    for (const auto& [a, b] : order)
      if (a == mu && b == nu) return true;
    return false;
  }
};

/// Node of the extended quotient graph: a communicating class or a single
/// transitory vertex.
struct QuotientNode {
  bool is_class;
  VertexSet members;  // singleton for transitory nodes

  int vertex() const { return members.min_member(); }
};

/// Extended quotient graph. Nodes appear in canonical block order (a
/// topological order embedding the canonical class order); taking the
/// quotient again reproduces the same shape.
struct QuotientGraph {
  std::vector<QuotientNode> nodes;
  std::vector<std::pair<int, int>> edges;  // node index pairs, sorted

  /// Node-level shape as a plain graph (nodes become vertices).
  DirectedGraph as_graph() const;
};

/// Induced subgraph with vertices renumbered 0..k-1 in ascending original
/// order, plus the renumbering map.
struct Restriction {
  DirectedGraph graph;
  std::vector<int> original_vertices;  // new id -> original id
};

struct Degrees {
  int out;
  int in;
};

struct InvarianceKind {
  bool forward;
  bool backward;
  bool invariant;
};

struct LoopBounds {
  int start;
  int end;  // indices into the path's vertex sequence, vertices equal
};

Degrees degrees(const DirectedGraph& g, int i);

/// True iff every vertex has out-degree >= 1.
bool is_l_graph(const DirectedGraph& g);

/// Vertices reachable from i by paths of length >= 1 (forward), or from
/// which i is reachable (backward). Computed by breadth-first closure over
/// one-step images.
VertexSet orbit(const DirectedGraph& g, int i, Direction dir = Direction::forward);

/// Orbit of a set: the union of member orbits.
VertexSet orbit(const DirectedGraph& g, const VertexSet& u,
                Direction dir = Direction::forward);

/// The class of i as the orbit intersection, or nullopt when i is
/// transitory.
std::optional<VertexSet> communicating_class_of(const DirectedGraph& g, int i);

ClassDecomposition communicating_classes(const DirectedGraph& g);

/// The order-maximal classes; in an L-graph these are nonempty and forward
/// invariant.
std::vector<VertexSet> maximal_classes(const DirectedGraph& g);

InvarianceKind invariance_kind(const DirectedGraph& g, const VertexSet& u);

/// First loop inside a path: the pair (a,b) with smallest a, then smallest
/// b, such that vertices a and b of the path coincide. Any path of length
/// >= d contains one.
std::optional<LoopBounds> find_loop(const Path& p);

QuotientGraph extended_quotient_graph(const DirectedGraph& g);

Restriction restrict_to(const DirectedGraph& g, const VertexSet& keep);

}  // namespace graphflow
