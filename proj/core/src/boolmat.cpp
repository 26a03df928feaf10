#include "graphflow/boolmat.hpp"

#include <numeric>
#include <queue>

namespace graphflow {

BoolMatrix::BoolMatrix(int d) : d_(d), rows_(d, VertexSet(d)) {
  if (d <= 0) throw Error(ErrorCode::EmptyVertexSet, "matrix needs positive dimension");
}

BoolMatrix::BoolMatrix(int d, std::vector<VertexSet> rows) : d_(d), rows_(std::move(rows)) {
  if (d <= 0) throw Error(ErrorCode::EmptyVertexSet, "matrix needs positive dimension");
  if (static_cast<int>(rows_.size()) != d)
    throw Error(ErrorCode::NotSquare, "expected " + std::to_string(d) + " rows");
  for (const VertexSet& r : rows_)
    if (r.dimension() != d)
      throw Error(ErrorCode::NotSquare, "row width does not match dimension");
}

BoolMatrix BoolMatrix::identity(int d) {
  BoolMatrix m(d);
  for (int i = 0; i < d; ++i) m.rows_[i].insert(i);
  return m;
}

void BoolMatrix::set(int i, int j, bool value) {
  if (value)
    rows_[i].insert(j);
  else
    rows_[i].erase(j);
}

BoolMatrix BoolMatrix::transposed() const {
  BoolMatrix t(d_);
  for (int i = 0; i < d_; ++i)
    rows_[i].for_each([&](int j) { t.rows_[j].insert(i); });
  return t;
}

bool BoolMatrix::all_ones() const {
  for (const VertexSet& r : rows_)
    if (r.size() != d_) return false;
  return true;
}

BoolMatrix adjacency(const DirectedGraph& g) {
  std::vector<VertexSet> rows;
  rows.reserve(g.d());
  for (int i = 0; i < g.d(); ++i) rows.push_back(g.out(i));
  return BoolMatrix(g.d(), std::move(rows));
}

DirectedGraph graph_of(const BoolMatrix& a) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < a.d(); ++i) a.row(i).for_each([&](int j) { edges.emplace_back(i, j); });
  return DirectedGraph(a.d(), std::move(edges));
}

BoolMatrix bool_product(const BoolMatrix& a, const BoolMatrix& b) {
  if (a.d() != b.d()) throw Error(ErrorCode::DimensionMismatch, "matrix dimensions differ");
  std::vector<VertexSet> rows(a.d(), VertexSet(a.d()));
  for (int i = 0; i < a.d(); ++i)
    a.row(i).for_each([&](int k) { rows[i] |= b.row(k); });
  return BoolMatrix(a.d(), std::move(rows));
}

BoolMatrix bool_sum(const BoolMatrix& a, const BoolMatrix& b) {
  if (a.d() != b.d()) throw Error(ErrorCode::DimensionMismatch, "matrix dimensions differ");
  std::vector<VertexSet> rows;
  rows.reserve(a.d());
  for (int i = 0; i < a.d(); ++i) rows.push_back(a.row(i) | b.row(i));
  return BoolMatrix(a.d(), std::move(rows));
}

BoolMatrix bool_pow(const BoolMatrix& a, int n) {
  if (n < 0) throw Error(ErrorCode::DimensionMismatch, "exponent must be nonnegative");
  BoolMatrix result = BoolMatrix::identity(a.d());
  BoolMatrix base = a;
  while (n > 0) {
    if (n & 1) result = bool_product(result, base);
    n >>= 1;
    if (n) base = bool_product(base, base);
  }
  return result;
}

std::vector<int> CubeVertex::coords() const {
  std::vector<int> c(bits.dimension(), 0);
  bits.for_each([&](int i) { c[i] = 1; });
  return c;
}

CubeVertex iota(const VertexSet& a, int d) {
  if (a.dimension() != d)
    throw Error(ErrorCode::DimensionMismatch, "set of dimension " +
                                                  std::to_string(a.dimension()) +
                                                  " embedded into cube of dimension " +
                                                  std::to_string(d));
  return CubeVertex{a};
}

VertexSet iota_inv(const CubeVertex& q) { return q.bits; }

CubeVertex psi(const BoolMatrix& a, int n, const CubeVertex& q, Direction dir) {
  if (q.dimension() != a.d())
    throw Error(ErrorCode::DimensionMismatch, "cube vertex does not match matrix dimension");
  const BoolMatrix power = bool_pow(dir == Direction::forward ? a : a.transposed(), n);
  VertexSet image(a.d());
  q.bits.for_each([&](int i) { image |= power.row(i); });
  return CubeVertex{image};
}

bool is_irreducible(const BoolMatrix& a) {
  ClassDecomposition cd = communicating_classes(graph_of(a));
  return cd.classes.size() == 1 && cd.transitory.empty();
}

namespace {

int period_of_irreducible_graph(const DirectedGraph& g) {
  // gcd over edges (u,v) of level(u) + 1 - level(v) for breadth-first
  // levels; every loop length is a multiple of the result.
  std::vector<int> level(g.d(), -1);
  std::queue<int> queue;
  level[0] = 0;
  queue.push(0);
  int gcd = 0;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop();
    g.out(u).for_each([&](int v) {
      if (level[v] == -1) {
        level[v] = level[u] + 1;
        queue.push(v);
      }
    });
  }
  for (auto [u, v] : g.edges()) gcd = std::gcd(gcd, std::abs(level[u] + 1 - level[v]));
  return gcd == 0 ? 1 : gcd;
}

}  // namespace

int matrix_period(const BoolMatrix& a) {
  if (!is_irreducible(a))
    throw Error(ErrorCode::NotIrreducible, "period is defined for irreducible matrices");
  return period_of_irreducible_graph(graph_of(a));
}

bool is_aperiodic(const BoolMatrix& a) {
  if (!is_irreducible(a))
    throw Error(ErrorCode::NotIrreducible, "aperiodicity is defined for irreducible matrices");
  int bound = (a.d() - 1) * (a.d() - 1) + 1;
  BoolMatrix power = a;
  for (int n = 1; n <= bound; ++n) {
    if (power.all_ones()) return true;
    if (n < bound) power = bool_product(power, a);
  }
  return false;
}

int class_period(const DirectedGraph& g, const VertexSet& c) {
  if (c.dimension() != g.d())
    throw Error(ErrorCode::DimensionMismatch, "set dimension does not match graph");
  std::optional<VertexSet> cls =
      c.empty() ? std::nullopt : communicating_class_of(g, c.min_member());
  if (!cls || !(*cls == c))
    throw Error(ErrorCode::NotACommunicatingClass,
                c.to_string() + " is not a communicating class");
  return period_of_irreducible_graph(restrict_to(g, c).graph);
}

BlockForm block_form(const BoolMatrix& a) {
  QuotientGraph q = extended_quotient_graph(graph_of(a));
  BlockForm form;
  form.permutation.reserve(a.d());
  for (const QuotientNode& node : q.nodes) {
    int begin = static_cast<int>(form.permutation.size());
    for (int v : node.members.members()) form.permutation.push_back(v);
    form.blocks.push_back(
        BlockForm::Block{node.is_class, begin, static_cast<int>(form.permutation.size())});
  }
  return form;
}

BoolMatrix permuted(const BoolMatrix& a, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != a.d())
    throw Error(ErrorCode::DimensionMismatch, "permutation length does not match dimension");
  BoolMatrix b(a.d());
  for (int p = 0; p < a.d(); ++p)
    for (int r = 0; r < a.d(); ++r)
      if (a.at(perm[p], perm[r])) b.set(p, r, true);
  return b;
}

VertexSet recurrent_vertices_via_matrix(const BoolMatrix& a) {
  // Boolean power sum up to n = d (not d-1): a shortest loop through a
  // vertex can have length exactly d.
  VertexSet diag(a.d());
  BoolMatrix power = BoolMatrix::identity(a.d());
  for (int n = 1; n <= a.d(); ++n) {
    power = bool_product(power, a);
    for (int i = 0; i < a.d(); ++i)
      if (power.at(i, i)) diag.insert(i);
  }
  return diag;
}

}  // namespace graphflow
