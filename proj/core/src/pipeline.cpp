#include "combdeform/pipeline.hpp"

#include <cmath>
#include <limits>
#include <functional>

#include "combdeform/deformation.hpp"
#include "combdeform/graph_complexes.hpp"
#include "combdeform/lattice_complexes.hpp"
#include "combdeform/matching.hpp"

namespace combdeform {
namespace {

StageSummary summarize(std::string name, const DeformationCertificate& c) {
  return StageSummary{std::move(name), c.collapse_count(), c.expansion_count(), c.start().f_vector(),
                      c.end().f_vector()};
}

template <class F>
auto run_stage(std::size_t stage, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const PipelineError&) {
    throw;
  } catch (const std::exception& e) {
    throw PipelineError(stage, e.what());
  }
}

}  // namespace

std::size_t subdivision_size_bound(const SimplicialComplex& k) {
  // chains of nonempty subsets of an n-set: sum over j of C(n,j) * (ordered partitions of j)
  std::vector<long double> fubini{1.0L};
  long double total = 0;
  for (std::size_t f : k.facet_indices()) {
    const std::size_t n = k.simplex(f).size();
    for (std::size_t j = fubini.size(); j <= n; ++j) {
      long double sum = 0, c = 1;
      for (std::size_t i = 1; i <= j; ++i) {
        c = c * static_cast<long double>(j - i + 1) / static_cast<long double>(i);
        sum += c * fubini[j - i];
      }
      fubini.push_back(sum);
    }
    long double c = 1;
    for (std::size_t j = 1; j <= n; ++j) {
      c = c * static_cast<long double>(n - j + 1) / static_cast<long double>(j);
      total += c * fubini[j];
    }
  }
  constexpr auto most = static_cast<long double>(std::numeric_limits<std::size_t>::max() / 2);
  return total >= most ? static_cast<std::size_t>(most) : static_cast<std::size_t>(std::llround(total));
}

PipelineResult hom_to_neighborhood_deformation(const Graph& g, std::size_t face_budget) {
  PipelineResult out;
  const HomLattice hl = run_stage(1, [&] { return hom_k2_lattice(g); });
  const BoundedLattice& p = hl.lattice;

  auto c1 = run_stage(1, [&] {
    return matching_to_collapses(interior_matching(proper_part(p), atom_join_map(p)));
  });

  const SimplicialComplex gamma = run_stage(2, [&] {
    SimplicialComplex direct = gamma_p_description(g);
    if (!(atom_crosscut_complex(p).relabeled(gamma_p_vertex) == direct))
      throw InternalError("Gamma(P) from the pair description differs from the lattice route");
    return direct;
  });
  if (const std::size_t bound = subdivision_size_bound(gamma); bound > face_budget)
    throw SizeCapError("Bd Gamma(P) may have up to " + std::to_string(bound) + " faces, over the budget of " +
                       std::to_string(face_budget));

  // Faces of Gamma(P) fixed by sigma -> atoms below its join are renamed to
  // the Hom cell of the join.
  std::vector<std::size_t> phi(gamma.size());
  std::vector<ElementIndex> join_of(gamma.size());
  run_stage(2, [&] {
    std::vector<ElementIndex> atom_of(gamma.vertex_count());
    for (VertexIndex v = 0; v < gamma.vertex_count(); ++v) {
      const VertexSet a = *g.set_of(gamma.vertex(v).items());
      atom_of[v] = *p.index_of(hom_cell_label(g, HomCell{a, g.common_neighbors(a)}));
    }
    for (std::size_t i = 0; i < gamma.size(); ++i) {
      ElementIndex j = p.bottom();
      for (VertexIndex v : gamma.simplex(i)) j = p.join(j, atom_of[v]);
      join_of[i] = j;
      Simplex below;
      for (VertexIndex v = 0; v < gamma.vertex_count(); ++v)
        if (p.leq(atom_of[v], j)) below.push_back(v);
      phi[i] = *gamma.find(below);
    }
    return 0;
  });
  const std::function<Label(const Label&)> rename = [&](const Label& x) -> Label {
    if (x.is_atom()) return x;
    auto i = gamma.find(x.items());
    if (i && phi[*i] == *i) return p.label(join_of[*i]);
    return x;
  };
  auto c2 = run_stage(2, [&] {
    return matching_to_collapses(closure_matching(gamma, [&](std::size_t i) { return phi[i]; }))
        .relabeled(rename)
        .reversed();
  });
  auto c3 = run_stage(3, [&] { return bd_deformation(gamma).relabeled(rename).reversed(); });
  auto c4 = run_stage(4, [&] { return matching_to_collapses(restricted_jl_matching(g)); });
  auto c5 = run_stage(5, [&] { return neighborhood_to_lovasz(g).reversed(); });
  auto c6 = run_stage(6, [&] { return bd_deformation(neighborhood_complex(g)).reversed(); });

  const char* names[] = {"Bd Hom(K2,G) -> Delta(bar P_a)", "Delta(bar P_a) -> Bd Gamma(P)",
                         "Bd Gamma(P) -> Gamma(P)",         "Gamma(P) -> Lo(G)",
                         "Lo(G) -> Bd N(G)",                "Bd N(G) -> N(G)"};
  const DeformationCertificate* parts[] = {&c1, &c2, &c3, &c4, &c5, &c6};
  DeformationCertificate total = c1;
  out.stages.push_back(summarize(names[0], c1));
  for (std::size_t s = 1; s < 6; ++s) {
    total = run_stage(s + 1, [&] { return total.then(*parts[s]); });
    out.stages.push_back(summarize(names[s], *parts[s]));
  }
  out.certificate = std::move(total);
  return out;
}

}  // namespace combdeform
