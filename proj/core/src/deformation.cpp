#include "combdeform/deformation.hpp"

#include <algorithm>

#include "combdeform/graph_complexes.hpp"
#include "combdeform/lattice_complexes.hpp"

namespace combdeform {
namespace {

std::vector<Label> sorted(std::vector<Label> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<Label> plus(const std::vector<Label>& v, const Label& l) {
  std::vector<Label> out = v;
  out.push_back(l);
  return sorted(std::move(out));
}

bool contains_all(const std::vector<Label>& big, const std::vector<Label>& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

void order_steps(std::vector<DeformationStep>& steps, bool ascending) {
  std::stable_sort(steps.begin(), steps.end(), [&](const DeformationStep& a, const DeformationStep& b) {
    if (a.free_face.size() != b.free_face.size())
      return ascending ? a.free_face.size() < b.free_face.size() : a.free_face.size() > b.free_face.size();
    return a.free_face < b.free_face;
  });
}

// Steps of one stellar move, without building the end complex.
std::vector<DeformationStep> stellar_steps(const SimplicialComplex& k, const std::vector<Label>& sigma,
                                           const Label& apex) {
  const Label w = sigma.front();
  const SimplicialComplex st = star(k, sigma);
  std::vector<DeformationStep> expand;
  expand.push_back({StepKind::expand, {apex}, sorted({apex, w})});
  for (const auto& s : st.simplices()) {
    auto tau = st.labels(s);
    if (std::binary_search(tau.begin(), tau.end(), w)) continue;
    auto lower = plus(tau, apex);
    auto upper = plus(lower, w);
    expand.push_back({StepKind::expand, std::move(lower), std::move(upper)});
  }
  order_steps(expand, true);
  std::vector<DeformationStep> collapse;
  for (const auto& s : k.simplices()) {
    auto rho = k.labels(s);
    if (rho.size() < sigma.size() || !contains_all(rho, sigma)) continue;
    auto upper = plus(rho, apex);
    collapse.push_back({StepKind::collapse, std::move(rho), std::move(upper)});
  }
  order_steps(collapse, false);
  expand.insert(expand.end(), collapse.begin(), collapse.end());
  return expand;
}

}  // namespace

DeformationCertificate stellar_deformation(const SimplicialComplex& k, std::span<const Label> sigma) {
  return stellar_deformation(k, sigma, face_label(sigma));
}

DeformationCertificate stellar_deformation(const SimplicialComplex& k, std::span<const Label> sigma,
                                           const Label& apex) {
  SimplicialComplex end = stellar_subdivision(k, sigma, apex);
  auto steps = stellar_steps(k, sorted(std::vector<Label>(sigma.begin(), sigma.end())), apex);
  return DeformationCertificate(k, std::move(steps), std::move(end));
}

DeformationCertificate bd_deformation(const SimplicialComplex& k) {
  if (k.empty()) throw InputError("cannot subdivide the empty complex");
  std::vector<std::size_t> order(k.size());
  for (std::size_t i = 0; i < k.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return k.simplex(a).size() > k.simplex(b).size(); });
  SimplicialComplex current = k;
  std::vector<DeformationStep> steps;
  for (std::size_t i : order) {
    const auto sigma = k.labels(k.simplex(i));
    const Label apex = face_label(sigma);
    auto more = stellar_steps(current, sigma, apex);
    steps.insert(steps.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
    current = stellar_subdivision(current, sigma, apex);
  }
  if (!(current == barycentric_subdivision(k))) throw InternalError("stellar sequence does not reach Bd K");
  return DeformationCertificate(k, std::move(steps), std::move(current));
}

MorseMatching neighborhood_lovasz_matching(const Graph& g) {
  const SimplicialComplex n = neighborhood_complex(g);
  std::vector<std::size_t> phi(n.size());
  for (std::size_t i = 0; i < n.size(); ++i) {
    const VertexSet a = *g.set_of(n.labels(n.simplex(i)));
    const VertexSet closed = g.common_neighbors(g.common_neighbors(a));
    auto idx = n.find(g.labels_of(closed));
    if (!idx) throw InternalError("N^2 leaves N(G) at " + g.set_label(a).str());
    phi[i] = *idx;
  }
  return closure_matching(n, [&](std::size_t i) { return phi[i]; });
}

DeformationCertificate neighborhood_to_lovasz(const Graph& g) {
  return matching_to_collapses(neighborhood_lovasz_matching(g));
}

DeformationCertificate jl_deformation(const BoundedLattice& l) { return matching_to_collapses(jl_matching(l)); }

GammaDeformation gamma_deformation(const BoundedLattice& l) {
  const SimplicialComplex gamma = atom_crosscut_complex(l);
  std::vector<ElementIndex> atom_of(gamma.vertex_count());
  for (VertexIndex v = 0; v < gamma.vertex_count(); ++v) atom_of[v] = *l.index_of(gamma.vertex(v));
  std::vector<ElementIndex> join_of(gamma.size());
  std::vector<std::size_t> phi(gamma.size());
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    ElementIndex j = l.bottom();
    for (VertexIndex v : gamma.simplex(i)) j = l.join(j, atom_of[v]);
    join_of[i] = j;
    Simplex below;
    for (VertexIndex v = 0; v < gamma.vertex_count(); ++v)
      if (l.leq(atom_of[v], j)) below.push_back(v);
    phi[i] = *gamma.find(below);
  }
  const auto rename = [&](const Label& x) -> Label {
    if (x.is_atom()) return x;
    auto i = gamma.find(x.items());
    if (i && phi[*i] == *i) return l.label(join_of[*i]);
    return x;
  };
  GammaDeformation out;
  out.to_atomic = matching_to_collapses(closure_matching(gamma, [&](std::size_t i) { return phi[i]; })).relabeled(rename);
  out.from_proper = matching_to_collapses(interior_matching(proper_part(l), atom_join_map(l)));
  out.combined = out.to_atomic.then(out.from_proper.reversed());
  return out;
}

DeformationCertificate crosscut_deformation(const BoundedLattice& l, std::span<const ElementIndex> c) {
  const CrosscutStages st = crosscut_stages(l, c);
  const auto first = matching_to_collapses(interior_matching(st.domain, st.lower));
  const auto second = matching_to_collapses(closure_matching(st.middle, st.upper));
  return first.then(second);
}

}  // namespace combdeform
