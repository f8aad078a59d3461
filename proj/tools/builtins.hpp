#pragma once

#include <string>
#include <vector>

#include "combdeform/complex.hpp"
#include "combdeform/graph.hpp"
#include "combdeform/poset.hpp"

namespace combdeform::cli {

// Named inputs, so common cases need no file.
//   graphs:    K<n>, C<n>, P<n>
//   lattices:  B<n>, Pi<n>, chain<n> (n elements)
//   complexes: simplex<n> (the full n-simplex), sphere<n> (boundary of the
//              (n+1)-simplex)
Graph builtin_graph(const std::string& name);
BoundedLattice builtin_lattice(const std::string& name);
SimplicialComplex builtin_complex(const std::string& name);

/// Crosscut of L: "atoms", "coatoms", an inline JSON list of element names,
/// or a file holding such a list.
std::vector<ElementIndex> crosscut_from_arg(const std::string& arg, const BoundedLattice& l);

}  // namespace combdeform::cli
