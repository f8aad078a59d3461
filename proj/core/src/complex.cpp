#include "combdeform/complex.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "combdeform/errors.hpp"

namespace combdeform {
namespace {

bool simplex_less(const Simplex& a, const Simplex& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

bool is_subset(const Simplex& small, const Simplex& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

Simplex set_difference(const Simplex& a, const Simplex& b) {
  Simplex out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Simplex set_union(const Simplex& a, const Simplex& b) {
  Simplex out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Every nonempty subset of `s` (including s itself).
template <class F>
void for_each_nonempty_subset(const Simplex& s, F&& f) {
  const std::size_t m = s.size();
  Simplex sub;
  sub.reserve(m);
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    sub.clear();
    for (std::size_t i = 0; i < m; ++i)
      if (mask & (std::uint64_t{1} << i)) sub.push_back(s[i]);
    f(sub);
  }
}

// Closed family over the vertex table of `k` that may not use every vertex.
SimplicialComplex subcomplex_from_family(const SimplicialComplex& k,
                                        const std::unordered_set<Simplex, SimplexHash>& family) {
  std::vector<char> used(k.vertex_count(), 0);
  for (const auto& s : family)
    for (VertexIndex v : s) used[v] = 1;
  std::vector<VertexIndex> remap(k.vertex_count(), 0);
  std::vector<Label> verts;
  for (VertexIndex v = 0; v < k.vertex_count(); ++v) {
    if (!used[v]) continue;
    remap[v] = static_cast<VertexIndex>(verts.size());
    verts.push_back(k.vertex(v));
  }
  std::vector<Simplex> simplices;
  simplices.reserve(family.size());
  for (const auto& s : family) {
    Simplex t;
    t.reserve(s.size());
    for (VertexIndex v : s) t.push_back(remap[v]);
    simplices.push_back(std::move(t));
  }
  return SimplicialComplex::from_family(std::move(verts), std::move(simplices));
}

std::vector<std::size_t> cofaces_of(const SimplicialComplex& k, const Simplex& s) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < k.size(); ++i)
    if (k.simplex(i).size() >= s.size() && is_subset(s, k.simplex(i))) out.push_back(i);
  return out;
}

Simplex require_simplex(const SimplicialComplex& k, std::span<const Label> sigma) {
  auto s = k.to_simplex(sigma);
  if (!s || !k.find(*s)) {
    std::string name = "{";
    for (std::size_t i = 0; i < sigma.size(); ++i) name += (i ? "," : "") + sigma[i].str();
    throw InputError("simplex " + name + "} is not in the complex");
  }
  return *s;
}

}  // namespace

SimplicialComplex::SimplicialComplex() : data_(std::make_shared<Data>()) {}

SimplicialComplex SimplicialComplex::from_facets(const std::vector<std::vector<Label>>& facets) {
  std::vector<Label> verts;
  std::unordered_map<Label, VertexIndex, LabelHash> ids;
  std::unordered_set<Simplex, SimplexHash> family;
  for (const auto& facet : facets) {
    if (facet.empty()) throw InputError("empty facet");
    if (facet.size() > 62) throw SizeCapError("facet with more than 62 vertices");
    Simplex s;
    for (const auto& l : facet) {
      auto [it, inserted] = ids.try_emplace(l, static_cast<VertexIndex>(verts.size()));
      if (inserted) verts.push_back(l);
      s.push_back(it->second);
    }
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      throw InputError("facet repeats a vertex");
    if (family.count(s)) continue;
    for_each_nonempty_subset(s, [&](const Simplex& sub) { family.insert(sub); });
  }
  return from_family(std::move(verts), std::vector<Simplex>(family.begin(), family.end()));
}

SimplicialComplex SimplicialComplex::from_family(std::vector<Label> vertices, std::vector<Simplex> simplices) {
  auto d = std::make_shared<Data>();
  std::vector<VertexIndex> order(vertices.size());
  std::iota(order.begin(), order.end(), VertexIndex{0});
  std::sort(order.begin(), order.end(), [&](VertexIndex a, VertexIndex b) { return vertices[a] < vertices[b]; });
  std::vector<VertexIndex> remap(vertices.size());
  d->vertices.reserve(vertices.size());
  for (VertexIndex k = 0; k < order.size(); ++k) {
    if (k > 0 && vertices[order[k]] == vertices[order[k - 1]])
      throw InputError("duplicate vertex label " + vertices[order[k]].str());
    remap[order[k]] = k;
    d->vertices.push_back(vertices[order[k]]);
  }
  for (auto& s : simplices) {
    if (s.empty()) throw InputError("empty simplex in family");
    for (auto& v : s) {
      if (v >= remap.size()) throw InputError("simplex references an unknown vertex");
      v = remap[v];
    }
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw InputError("simplex repeats a vertex");
  }
  std::sort(simplices.begin(), simplices.end(), simplex_less);
  simplices.erase(std::unique(simplices.begin(), simplices.end()), simplices.end());
  d->simplices = std::move(simplices);
  d->simplex_lookup.reserve(d->simplices.size());
  for (std::size_t i = 0; i < d->simplices.size(); ++i) d->simplex_lookup.emplace(d->simplices[i], i);
  for (VertexIndex v = 0; v < d->vertices.size(); ++v) {
    d->vertex_lookup.emplace(d->vertices[v], v);
    if (!d->simplex_lookup.count(Simplex{v}))
      throw InputError("vertex " + d->vertices[v].str() + " lies in no simplex");
  }
  Simplex face;
  for (const auto& s : d->simplices) {
    if (s.size() < 2) continue;
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
      face.assign(s.begin(), s.end());
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(drop));
      if (!d->simplex_lookup.count(face)) throw InputError("simplex family is not closed under faces");
    }
  }
  return SimplicialComplex(std::move(d));
}

std::optional<VertexIndex> SimplicialComplex::vertex_index(const Label& l) const {
  auto it = data_->vertex_lookup.find(l);
  if (it == data_->vertex_lookup.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> SimplicialComplex::find(const Simplex& s) const {
  auto it = data_->simplex_lookup.find(s);
  if (it == data_->simplex_lookup.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> SimplicialComplex::find(std::span<const Label> s) const {
  auto t = to_simplex(s);
  if (!t) return std::nullopt;
  return find(*t);
}

std::optional<Simplex> SimplicialComplex::to_simplex(std::span<const Label> s) const {
  Simplex out;
  out.reserve(s.size());
  for (const auto& l : s) {
    auto v = vertex_index(l);
    if (!v) return std::nullopt;
    out.push_back(*v);
  }
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) return std::nullopt;
  return out;
}

std::vector<Label> SimplicialComplex::labels(const Simplex& s) const {
  std::vector<Label> out;
  out.reserve(s.size());
  for (VertexIndex v : s) out.push_back(vertex(v));
  return out;
}

int SimplicialComplex::dimension() const noexcept {
  if (empty()) return -1;
  return static_cast<int>(data_->simplices.back().size()) - 1;
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
  std::vector<std::size_t> f(static_cast<std::size_t>(dimension() + 1), 0);
  for (const auto& s : data_->simplices) ++f[s.size() - 1];
  return f;
}

long long euler_characteristic(std::span<const std::size_t> f_vector) {
  long long chi = 0;
  for (std::size_t i = 0; i < f_vector.size(); ++i)
    chi += (i % 2 == 0 ? 1 : -1) * static_cast<long long>(f_vector[i]);
  return chi;
}

long long SimplicialComplex::euler_characteristic() const {
  const auto f = f_vector();
  return combdeform::euler_characteristic(f);
}

std::vector<std::size_t> SimplicialComplex::facet_indices() const {
  std::vector<char> covered(size(), 0);
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t f : boundary_faces(i)) covered[f] = 1;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i)
    if (!covered[i]) out.push_back(i);
  return out;
}

std::vector<std::vector<Label>> SimplicialComplex::facets() const {
  std::vector<std::vector<Label>> out;
  for (std::size_t i : facet_indices()) out.push_back(labels(simplex(i)));
  return out;
}

std::vector<std::size_t> SimplicialComplex::boundary_faces(std::size_t i) const {
  const Simplex& s = simplex(i);
  std::vector<std::size_t> out;
  if (s.size() < 2) return out;
  Simplex face;
  for (std::size_t drop = 0; drop < s.size(); ++drop) {
    face.assign(s.begin(), s.end());
    face.erase(face.begin() + static_cast<std::ptrdiff_t>(drop));
    out.push_back(*find(face));
  }
  return out;
}

SimplicialComplex SimplicialComplex::relabeled(const std::function<Label(const Label&)>& rename) const {
  std::vector<Label> verts;
  verts.reserve(vertex_count());
  for (const auto& l : vertices()) verts.push_back(rename(l));
  return from_family(std::move(verts), data_->simplices);
}

SimplicialComplex SimplicialComplex::induced(const std::function<bool(VertexIndex)>& keep) const {
  std::unordered_set<Simplex, SimplexHash> family;
  for (const auto& s : data_->simplices)
    if (std::all_of(s.begin(), s.end(), keep)) family.insert(s);
  return subcomplex_from_family(*this, family);
}

SimplicialComplex SimplicialComplex::closure_of(std::span<const std::size_t> simplex_indices) const {
  std::unordered_set<Simplex, SimplexHash> family;
  for (std::size_t i : simplex_indices) {
    if (family.count(simplex(i))) continue;
    for_each_nonempty_subset(simplex(i), [&](const Simplex& sub) { family.insert(sub); });
  }
  return subcomplex_from_family(*this, family);
}

bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
  if (a.data_ == b.data_) return true;
  return a.data_->vertices == b.data_->vertices && a.data_->simplices == b.data_->simplices;
}

Label face_label(std::span<const Label> face) {
  return sorted_tuple(std::vector<Label>(face.begin(), face.end()));
}

IndexedSubdivision barycentric_subdivision_indexed(const SimplicialComplex& k) {
  std::vector<Label> verts;
  verts.reserve(k.size());
  for (const auto& s : k.simplices()) verts.push_back(Label::tuple(k.labels(s)));

  std::vector<Simplex> chains;
  Simplex chain;
  // Chains are enumerated top-down: each step picks a proper nonempty face of
  // the current smallest element.
  std::function<void(std::size_t)> descend = [&](std::size_t bottom) {
    chains.push_back(chain);
    const Simplex& b = k.simplex(bottom);
    const std::size_t m = b.size();
    if (m < 2) return;
    Simplex sub;
    for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << m); ++mask) {
      sub.clear();
      for (std::size_t i = 0; i < m; ++i)
        if (mask & (std::uint64_t{1} << i)) sub.push_back(b[i]);
      const std::size_t idx = *k.find(sub);
      chain.push_back(static_cast<VertexIndex>(idx));
      descend(idx);
      chain.pop_back();
    }
  };
  for (std::size_t top = 0; top < k.size(); ++top) {
    chain.assign(1, static_cast<VertexIndex>(top));
    descend(top);
  }
  IndexedSubdivision out{SimplicialComplex::from_family(verts, std::move(chains)), {}};
  out.face_of_vertex.resize(out.complex.vertex_count());
  for (std::size_t f = 0; f < k.size(); ++f)
    out.face_of_vertex[*out.complex.vertex_index(verts[f])] = f;
  return out;
}

SimplicialComplex barycentric_subdivision(const SimplicialComplex& k) {
  return barycentric_subdivision_indexed(k).complex;
}

SimplicialComplex stellar_subdivision(const SimplicialComplex& k, std::span<const Label> sigma) {
  return stellar_subdivision(k, sigma, face_label(sigma));
}

SimplicialComplex stellar_subdivision(const SimplicialComplex& k, std::span<const Label> sigma, const Label& apex) {
  const Simplex s = require_simplex(k, sigma);
  if (k.vertex_index(apex)) throw InputError("apex label " + apex.str() + " is already a vertex");
  const auto apex_id = static_cast<VertexIndex>(k.vertex_count());
  std::vector<Label> verts(k.vertices().begin(), k.vertices().end());
  verts.push_back(apex);

  std::vector<Simplex> out;
  for (const auto& t : k.simplices())
    if (!is_subset(s, t)) out.push_back(t);
  std::unordered_set<Simplex, SimplexHash> cone;
  const std::size_t m = s.size();
  for (std::size_t c : cofaces_of(k, s)) {
    const Simplex lambda = set_difference(k.simplex(c), s);
    // apex joined with (proper face of sigma) * (link face)
    for (std::uint64_t mask = 0; mask + 1 < (std::uint64_t{1} << m); ++mask) {
      Simplex alpha;
      for (std::size_t i = 0; i < m; ++i)
        if (mask & (std::uint64_t{1} << i)) alpha.push_back(s[i]);
      Simplex tau = set_union(alpha, lambda);
      tau.push_back(apex_id);
      cone.insert(std::move(tau));
    }
  }
  out.insert(out.end(), cone.begin(), cone.end());
  if (m == 1) {
    // subdividing at a vertex replaces it by the apex
    const VertexIndex gone = s[0];
    verts.erase(verts.begin() + gone);
    for (auto& t : out)
      for (auto& v : t)
        if (v > gone) --v;
  }
  return SimplicialComplex::from_family(std::move(verts), std::move(out));
}

SimplicialComplex link(const SimplicialComplex& k, std::span<const Label> sigma) {
  const Simplex s = require_simplex(k, sigma);
  std::unordered_set<Simplex, SimplexHash> family;
  for (std::size_t c : cofaces_of(k, s)) {
    Simplex lambda = set_difference(k.simplex(c), s);
    if (!lambda.empty()) family.insert(std::move(lambda));
  }
  return subcomplex_from_family(k, family);
}

SimplicialComplex star(const SimplicialComplex& k, std::span<const Label> sigma) {
  const Simplex s = require_simplex(k, sigma);
  std::unordered_set<Simplex, SimplexHash> family;
  for (std::size_t c : cofaces_of(k, s)) {
    if (family.count(k.simplex(c))) continue;
    for_each_nonempty_subset(k.simplex(c), [&](const Simplex& sub) { family.insert(sub); });
  }
  return subcomplex_from_family(k, family);
}

}  // namespace combdeform
