#pragma once

#include <vector>

#include "graphflow/graph.hpp"

namespace graphflow {

/// Square {0,1} matrix under Boolean sum and product. Rows are stored as
/// vertex-set bit masks, so products are word-parallel.
class BoolMatrix {
 public:
  explicit BoolMatrix(int d);
  BoolMatrix(int d, std::vector<VertexSet> rows);

  static BoolMatrix identity(int d);

  int d() const { return d_; }

  bool at(int i, int j) const { return rows_[i].contains(j); }
  void set(int i, int j, bool value);

  const VertexSet& row(int i) const { return rows_[i]; }

  BoolMatrix transposed() const;
  bool all_ones() const;

  friend bool operator==(const BoolMatrix& a, const BoolMatrix& b) {
    return a.d_ == b.d_ && a.rows_ == b.rows_;
  }

 private:
  int d_;
  std::vector<VertexSet> rows_;
};

/// A vertex of the d-dimensional unit cube; the image of a vertex set under
/// the coordinate embedding.
struct CubeVertex {
  VertexSet bits;

  int dimension() const { return bits.dimension(); }
  std::vector<int> coords() const;

  friend bool operator==(const CubeVertex& a, const CubeVertex& b) { return a.bits == b.bits; }
};

/// Permutation similarity transform exhibiting the block upper triangular
/// form: position p of the permutation holds the original vertex placed
/// there. Diagonal blocks are communicating classes (irreducible) or 1x1
/// transitory blocks, ordered minimal classes first.
struct BlockForm {
  struct Block {
    bool is_class;
    int begin;  // half-open index range into the permutation
    int end;
  };

  std::vector<int> permutation;
  std::vector<Block> blocks;
};

BoolMatrix adjacency(const DirectedGraph& g);
DirectedGraph graph_of(const BoolMatrix& a);

BoolMatrix bool_product(const BoolMatrix& a, const BoolMatrix& b);
BoolMatrix bool_sum(const BoolMatrix& a, const BoolMatrix& b);

/// n-th Boolean power by repeated squaring; entry (i,j) is 1 iff a path of
/// length n runs from i to j. The 0-th power is the identity.
BoolMatrix bool_pow(const BoolMatrix& a, int n);

CubeVertex iota(const VertexSet& a, int d);
VertexSet iota_inv(const CubeVertex& q);

/// The cube semiflow (q^T .* A^{n*})^T; backward direction uses the
/// transposed matrix.
CubeVertex psi(const BoolMatrix& a, int n, const CubeVertex& q,
               Direction dir = Direction::forward);

/// True iff the graph of `a` consists of exactly one communicating class
/// covering all vertices.
bool is_irreducible(const BoolMatrix& a);

/// gcd of the loop lengths of the graph of an irreducible matrix, from a
/// breadth-first level assignment.
int matrix_period(const BoolMatrix& a);

/// True iff some Boolean power up to the Wielandt bound (d-1)^2 + 1 is
/// all-ones. Requires irreducibility.
bool is_aperiodic(const BoolMatrix& a);

/// Period of a communicating class: the period of its diagonal block.
int class_period(const DirectedGraph& g, const VertexSet& c);

BlockForm block_form(const BoolMatrix& a);

/// The matrix conjugated by a permutation given as position -> original
/// vertex, i.e. result(p,q) = a(perm[p], perm[q]).
BoolMatrix permuted(const BoolMatrix& a, const std::vector<int>& perm);

/// Vertices with a 1 on the diagonal of the Boolean sum of A^{n*} for
/// n = 1..d. Agrees with the recurrent set of the graph of `a`.
VertexSet recurrent_vertices_via_matrix(const BoolMatrix& a);

}  // namespace graphflow
