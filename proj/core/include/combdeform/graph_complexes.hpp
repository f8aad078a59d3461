#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "combdeform/complex.hpp"
#include "combdeform/cw_poset.hpp"
#include "combdeform/graph.hpp"
#include "combdeform/poset.hpp"

namespace combdeform {

/// N(G): vertices are the non-isolated vertices, S is a simplex iff N(S) is
/// nonempty. Throws InputError on a graph without edges.
SimplicialComplex neighborhood_complex(const Graph& g);

/// Vertex sets of the faces of N(G), in complex order.
std::vector<VertexSet> neighborhood_faces(const Graph& g);

/// Im N = { N(A) : A a face of N(G) }, sorted by (size, label).
std::vector<VertexSet> neighborhood_image(const Graph& g);

struct LovaszComplex {
  /// Im N under inclusion, elements labelled by their vertex tuples.
  Poset poset;
  std::vector<VertexSet> sets;
  /// involution[i] = index of N(sets[i]).
  std::vector<ElementIndex> involution;
  SimplicialComplex complex;
};

/// Lo(G) = Delta(Im N) together with the Z_2 action A -> N(A).
LovaszComplex lovasz_complex(const Graph& g);

struct InvolutionReport {
  /// False when the graph has loops and the check was skipped.
  bool checked = false;
  bool free = false;
  std::string notice;
};

/// Checks that A -> N(A) fixes no element of Im N and no simplex of Lo(G).
InvolutionReport lovasz_involution_free(const Graph& g);

struct HomCell {
  VertexSet a;
  VertexSet b;
  int dim() const noexcept { return popcount(a) + popcount(b) - 2; }
};

struct HomComplex {
  /// Cells (A,B) with A x B inside E(G), sorted by (dimension, label).
  std::vector<HomCell> cells;
  /// Cell i is element i; labelled ("hom", A, B).
  RegularCWPoset poset;
};

/// Hom(K_2, G) as the componentwise-inclusion poset of complete bipartite
/// pairs. Throws InputError on a graph without edges.
HomComplex hom_k2(const Graph& g);

/// Label ("hom", A-tuple, B-tuple) of a cell.
Label hom_cell_label(const Graph& g, const HomCell& c);

/// Bd Hom(K_2, G) = Delta of the cell poset.
SimplicialComplex hom_k2_subdivision(const Graph& g);

struct HomLattice {
  /// P = F^op(Hom(K_2, G)) with "bottom" and "top" adjoined.
  BoundedLattice lattice;
  /// cell_of[x] = index into hom.cells, or -1 for the bounds.
  std::vector<long> cell_of;
  HomComplex hom;
};

HomLattice hom_k2_lattice(const Graph& g);

/// Gamma(P) from the pair description: vertices are the A in Im N (labelled
/// by vertex tuple), simplices are the sets with nonempty intersection whose
/// union has a common neighbour.
SimplicialComplex gamma_p_description(const Graph& g);

/// Maps the atom ("hom", A, B) of P to the label of A.
Label gamma_p_vertex(const Label& hom_label);

struct LovaszLattice {
  /// Im N under inclusion with "bottom" and "top" adjoined.
  BoundedLattice lattice;
  /// sets[x] = the vertex set of element x (0 for the bounds).
  std::vector<VertexSet> sets;
};

LovaszLattice lovasz_lattice(const Graph& g);

/// DG_n on vertices (i,j), 1 <= i < j <= n. DG_2 is empty.
SimplicialComplex disconnected_graphs_complex(int n);

struct PartitionLattice {
  BoundedLattice lattice;
  /// blocks[x][k] = block number of k+1 in partition x.
  std::vector<std::vector<int>> blocks;
};

/// Pi_n under refinement; labels look like "12|3" (blocks separated by
/// commas for n >= 10). Throws SizeCapError above `cap`.
PartitionLattice partition_lattice(int n, int cap = 7);

/// For an atom of Pi_n: the pair (i,j) it merges, labelled as in DG_n.
Label partition_atom_edge(const PartitionLattice& p, ElementIndex atom);

}  // namespace combdeform
