#include "combdeform/graph_complexes.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <unordered_map>

#include "combdeform/errors.hpp"

namespace combdeform {
namespace {

void require_edges(const Graph& g) {
  if (g.endpoints() == 0) throw InputError("graph has no edges; the complex would be empty");
}

template <class F>
void for_each_nonempty_submask(VertexSet m, F&& f) {
  for (VertexSet s = m; s; s = (s - 1) & m) f(s);
}

void sort_sets(const Graph& g, std::vector<VertexSet>& sets) {
  std::sort(sets.begin(), sets.end(), [&](VertexSet a, VertexSet b) {
    if (popcount(a) != popcount(b)) return popcount(a) < popcount(b);
    return g.set_label(a) < g.set_label(b);
  });
}

std::vector<Label> set_labels(const Graph& g, const std::vector<VertexSet>& sets) {
  std::vector<Label> out;
  out.reserve(sets.size());
  for (VertexSet s : sets) out.push_back(g.set_label(s));
  return out;
}

bool proper_subset(VertexSet a, VertexSet b) { return a != b && (a & ~b) == 0; }

Label num(int i) { return Label::atom(std::to_string(i)); }

}  // namespace

SimplicialComplex neighborhood_complex(const Graph& g) {
  require_edges(g);
  std::vector<std::vector<Label>> facets;
  for (std::size_t w = 0; w < g.size(); ++w)
    if (g.neighbors(w)) facets.push_back(g.labels_of(g.neighbors(w)));
  return SimplicialComplex::from_facets(facets);
}

std::vector<VertexSet> neighborhood_faces(const Graph& g) {
  const auto k = neighborhood_complex(g);
  std::vector<VertexSet> out;
  out.reserve(k.size());
  for (const auto& s : k.simplices()) out.push_back(*g.set_of(k.labels(s)));
  return out;
}

std::vector<VertexSet> neighborhood_image(const Graph& g) {
  std::vector<VertexSet> out;
  for (VertexSet a : neighborhood_faces(g)) out.push_back(g.common_neighbors(a));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  sort_sets(g, out);
  return out;
}

LovaszComplex lovasz_complex(const Graph& g) {
  LovaszComplex lo;
  lo.sets = neighborhood_image(g);
  const auto& sets = lo.sets;
  lo.poset = Poset::from_less(set_labels(g, sets),
                              [&](ElementIndex i, ElementIndex j) { return proper_subset(sets[i], sets[j]); });
  std::unordered_map<VertexSet, ElementIndex> index;
  for (ElementIndex i = 0; i < sets.size(); ++i) index.emplace(sets[i], i);
  for (VertexSet s : sets) {
    auto it = index.find(g.common_neighbors(s));
    if (it == index.end()) throw InternalError("N does not map Im N to itself at " + g.set_label(s).str());
    lo.involution.push_back(it->second);
  }
  lo.complex = order_complex(lo.poset);
  return lo;
}

InvolutionReport lovasz_involution_free(const Graph& g) {
  InvolutionReport r;
  if (g.has_loops()) {
    r.notice = "graph has loops; freeness check skipped";
    return r;
  }
  r.checked = true;
  const auto lo = lovasz_complex(g);
  for (ElementIndex i = 0; i < lo.sets.size(); ++i) {
    if (lo.involution[i] == i) {
      r.notice = "N fixes " + lo.poset.label(i).str();
      return r;
    }
  }
  for (const auto& s : lo.complex.simplices()) {
    std::vector<Label> image;
    for (VertexIndex v : s) {
      const ElementIndex e = *lo.poset.index_of(lo.complex.vertex(v));
      image.push_back(lo.poset.label(lo.involution[e]));
    }
    std::sort(image.begin(), image.end());
    if (image == lo.complex.labels(s)) {
      r.notice = "N fixes a simplex of Lo(G)";
      return r;
    }
  }
  r.free = true;
  return r;
}

Label hom_cell_label(const Graph& g, const HomCell& c) {
  return Label::tuple({Label::atom("hom"), g.set_label(c.a), g.set_label(c.b)});
}

Label gamma_p_vertex(const Label& hom_label) {
  if (hom_label.is_atom() || hom_label.items().size() != 3) throw InputError("not a Hom cell label: " + hom_label.str());
  return hom_label.items()[1];
}

HomComplex hom_k2(const Graph& g) {
  require_edges(g);
  HomComplex h;
  for (VertexSet a = 1; a <= g.all_vertices() && a != 0; ++a) {
    const VertexSet na = g.common_neighbors(a);
    for_each_nonempty_submask(na, [&](VertexSet b) { h.cells.push_back(HomCell{a, b}); });
    if (a == g.all_vertices()) break;
  }
  std::vector<Label> labels;
  for (const auto& c : h.cells) labels.push_back(hom_cell_label(g, c));
  std::vector<std::size_t> order(h.cells.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    if (h.cells[x].dim() != h.cells[y].dim()) return h.cells[x].dim() < h.cells[y].dim();
    return labels[x] < labels[y];
  });
  std::vector<HomCell> cells;
  std::vector<Label> sorted_labels;
  std::vector<int> dims;
  for (std::size_t i : order) {
    cells.push_back(h.cells[i]);
    sorted_labels.push_back(labels[i]);
    dims.push_back(h.cells[i].dim());
  }
  h.cells = std::move(cells);

  std::map<std::pair<VertexSet, VertexSet>, std::size_t> index;
  for (std::size_t i = 0; i < h.cells.size(); ++i) index.emplace(std::make_pair(h.cells[i].a, h.cells[i].b), i);
  std::vector<std::pair<Label, Label>> covers;
  for (std::size_t i = 0; i < h.cells.size(); ++i) {
    const auto [a, b] = h.cells[i];
    if (popcount(a) > 1)
      for (VertexSet v = a; v; v &= v - 1)
        covers.emplace_back(sorted_labels[index.at({a & ~(v & -v), b})], sorted_labels[i]);
    if (popcount(b) > 1)
      for (VertexSet v = b; v; v &= v - 1)
        covers.emplace_back(sorted_labels[index.at({a, b & ~(v & -v)})], sorted_labels[i]);
  }
  h.poset = RegularCWPoset::make(Poset::from_covers(std::move(sorted_labels), covers), std::move(dims));
  return h;
}

SimplicialComplex hom_k2_subdivision(const Graph& g) { return order_complex(hom_k2(g).poset.order); }

HomLattice hom_k2_lattice(const Graph& g) {
  HomComplex hom = hom_k2(g);
  const std::size_t m = hom.cells.size();
  std::vector<Label> labels(hom.poset.order.labels().begin(), hom.poset.order.labels().end());
  labels.push_back(Label::atom("bottom"));
  labels.push_back(Label::atom("top"));
  const Poset& cells = hom.poset.order;
  Poset p = Poset::from_less(std::move(labels), [&](ElementIndex i, ElementIndex j) {
    if (i == j) return false;
    if (i == m) return true;
    if (j == m + 1) return i != m + 1;
    if (i == m + 1 || j == m) return false;
    return cells.less(j, i);
  });
  std::vector<long> cell_of(m + 2, -1);
  for (std::size_t i = 0; i < m; ++i) cell_of[i] = static_cast<long>(i);
  return HomLattice{BoundedLattice::from_poset(std::move(p)), std::move(cell_of), std::move(hom)};
}

SimplicialComplex gamma_p_description(const Graph& g) {
  const auto image = neighborhood_image(g);
  std::vector<Simplex> family;
  Simplex current;
  auto extend = [&](auto&& self, std::size_t from, VertexSet meet, VertexSet join) -> void {
    for (std::size_t i = from; i < image.size(); ++i) {
      const VertexSet m2 = meet & image[i];
      const VertexSet j2 = join | image[i];
      if (m2 == 0 || g.common_neighbors(j2) == 0) continue;
      current.push_back(static_cast<VertexIndex>(i));
      family.push_back(current);
      self(self, i + 1, m2, j2);
      current.pop_back();
    }
  };
  extend(extend, 0, g.all_vertices(), 0);
  return SimplicialComplex::from_family(set_labels(g, image), std::move(family));
}

LovaszLattice lovasz_lattice(const Graph& g) {
  std::vector<VertexSet> sets = neighborhood_image(g);
  const std::size_t m = sets.size();
  std::vector<Label> labels = set_labels(g, sets);
  labels.push_back(Label::atom("bottom"));
  labels.push_back(Label::atom("top"));
  Poset p = Poset::from_less(std::move(labels), [&](ElementIndex i, ElementIndex j) {
    if (i == j) return false;
    if (i == m) return true;
    if (j == m + 1) return i != m + 1;
    if (i == m + 1 || j == m) return false;
    return proper_subset(sets[i], sets[j]);
  });
  sets.push_back(0);
  sets.push_back(0);
  return LovaszLattice{BoundedLattice::from_poset(std::move(p)), std::move(sets)};
}

SimplicialComplex disconnected_graphs_complex(int n) {
  if (n < 2) throw InputError("DG_n needs n >= 2");
  if (n > 7) throw SizeCapError("DG_n is limited to n <= 7");
  std::vector<std::pair<int, int>> pairs;
  std::vector<Label> verts;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      pairs.emplace_back(i - 1, j - 1);
      verts.push_back(Label::tuple({num(i), num(j)}));
    }
  auto connected = [&](const std::vector<std::size_t>& chosen) {
    std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
    for (std::size_t e : chosen) {
      adj[static_cast<std::size_t>(pairs[e].first)] |= 1u << pairs[e].second;
      adj[static_cast<std::size_t>(pairs[e].second)] |= 1u << pairs[e].first;
    }
    std::uint32_t seen = 1, frontier = 1;
    while (frontier) {
      std::uint32_t next = 0;
      for (int v = 0; v < n; ++v)
        if ((frontier >> v) & 1u) next |= adj[static_cast<std::size_t>(v)];
      frontier = next & ~seen;
      seen |= next;
    }
    return seen == (1u << n) - 1;
  };
  std::vector<Simplex> family;
  std::vector<std::size_t> chosen;
  auto extend = [&](auto&& self, std::size_t from) -> void {
    for (std::size_t e = from; e < pairs.size(); ++e) {
      chosen.push_back(e);
      if (!connected(chosen)) {
        family.emplace_back(chosen.begin(), chosen.end());
        self(self, e + 1);
      }
      chosen.pop_back();
    }
  };
  extend(extend, 0);
  std::vector<char> used(pairs.size(), 0);
  for (const auto& s : family)
    for (VertexIndex v : s) used[v] = 1;
  std::vector<VertexIndex> remap(pairs.size(), 0);
  std::vector<Label> kept;
  for (std::size_t e = 0; e < pairs.size(); ++e) {
    remap[e] = static_cast<VertexIndex>(kept.size());
    if (used[e]) kept.push_back(verts[e]);
  }
  for (auto& s : family)
    for (auto& v : s) v = remap[v];
  return SimplicialComplex::from_family(std::move(kept), std::move(family));
}

PartitionLattice partition_lattice(int n, int cap) {
  if (n < 1) throw InputError("partition lattice needs n >= 1");
  if (n > cap) throw SizeCapError("partition lattice size " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  PartitionLattice out;
  // Restricted growth strings enumerate each set partition once.
  std::vector<int> rgs(static_cast<std::size_t>(n), 0);
  auto emit = [&](auto&& self, int pos, int max_block) -> void {
    if (pos == n) {
      out.blocks.push_back(rgs);
      return;
    }
    for (int b = 0; b <= max_block + 1; ++b) {
      rgs[static_cast<std::size_t>(pos)] = b;
      self(self, pos + 1, std::max(max_block, b));
    }
  };
  rgs[0] = 0;
  emit(emit, 1, 0);
  std::vector<Label> labels;
  for (const auto& x : out.blocks) {
    const int nb = *std::max_element(x.begin(), x.end()) + 1;
    std::string name;
    for (int b = 0; b < nb; ++b) {
      if (b) name += "|";
      bool first = true;
      for (int k = 0; k < n; ++k) {
        if (x[static_cast<std::size_t>(k)] != b) continue;
        if (!first && n >= 10) name += ",";
        name += std::to_string(k + 1);
        first = false;
      }
    }
    labels.push_back(Label::atom(name));
  }
  const auto& blocks = out.blocks;
  auto refines = [&](ElementIndex i, ElementIndex j) {
    std::vector<int> image(static_cast<std::size_t>(n), -1);
    for (int k = 0; k < n; ++k) {
      auto& slot = image[static_cast<std::size_t>(blocks[i][static_cast<std::size_t>(k)])];
      const int target = blocks[j][static_cast<std::size_t>(k)];
      if (slot == -1) slot = target;
      else if (slot != target) return false;
    }
    return true;
  };
  out.lattice = BoundedLattice::from_poset(
      Poset::from_less(std::move(labels), [&](ElementIndex i, ElementIndex j) { return i != j && refines(i, j); }));
  return out;
}

Label partition_atom_edge(const PartitionLattice& p, ElementIndex atom) {
  const auto& x = p.blocks.at(atom);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j)
      if (x[i] == x[j]) return Label::tuple({num(static_cast<int>(i) + 1), num(static_cast<int>(j) + 1)});
  throw InputError("element " + p.lattice.label(atom).str() + " is not an atom of the partition lattice");
}

}  // namespace combdeform
