#include "combdeform/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "combdeform/errors.hpp"

namespace combdeform {

Graph::Graph() : data_(std::make_shared<Data>()) {}

Graph Graph::from_edges(std::vector<Label> vertices, const std::vector<std::pair<Label, Label>>& edges) {
  for (const auto& [u, v] : edges) {
    vertices.push_back(u);
    vertices.push_back(v);
  }
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  if (vertices.size() > 64) throw SizeCapError("graphs are limited to 64 vertices");
  auto d = std::make_shared<Data>();
  d->labels = std::move(vertices);
  for (std::size_t i = 0; i < d->labels.size(); ++i) d->lookup.emplace(d->labels[i], i);
  d->adjacency.assign(d->labels.size(), 0);
  for (const auto& [u, v] : edges) {
    const std::size_t a = d->lookup.at(u);
    const std::size_t b = d->lookup.at(v);
    if ((d->adjacency[a] >> b) & 1u) throw InputError("repeated edge " + u.str() + " " + v.str());
    d->adjacency[a] |= VertexSet{1} << b;
    d->adjacency[b] |= VertexSet{1} << a;
  }
  Graph g;
  g.data_ = std::move(d);
  return g;
}

std::optional<std::size_t> Graph::index_of(const Label& l) const {
  auto it = data_->lookup.find(l);
  if (it == data_->lookup.end()) return std::nullopt;
  return it->second;
}

bool Graph::has_loops() const noexcept {
  for (std::size_t v = 0; v < size(); ++v)
    if (adjacent(v, v)) return true;
  return false;
}

std::size_t Graph::edge_count() const noexcept { return edges().size(); }

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < size(); ++u)
    for (std::size_t v = u; v < size(); ++v)
      if (adjacent(u, v)) out.emplace_back(u, v);
  return out;
}

VertexSet Graph::all_vertices() const noexcept {
  return size() == 64 ? ~VertexSet{0} : (VertexSet{1} << size()) - 1;
}

VertexSet Graph::endpoints() const noexcept {
  VertexSet out = 0;
  for (std::size_t v = 0; v < size(); ++v)
    if (neighbors(v)) out |= VertexSet{1} << v;
  return out;
}

VertexSet Graph::common_neighbors(VertexSet s) const noexcept {
  if (s == 0) return endpoints();
  VertexSet out = all_vertices();
  for (std::size_t v = 0; v < size(); ++v)
    if ((s >> v) & 1u) out &= neighbors(v);
  return out;
}

std::vector<Label> Graph::labels_of(VertexSet s) const {
  std::vector<Label> out;
  for (std::size_t v = 0; v < size(); ++v)
    if ((s >> v) & 1u) out.push_back(label(v));
  return out;
}

Label Graph::set_label(VertexSet s) const { return Label::tuple(labels_of(s)); }

std::optional<VertexSet> Graph::set_of(std::span<const Label> labels) const {
  VertexSet s = 0;
  for (const auto& l : labels) {
    auto v = index_of(l);
    if (!v) return std::nullopt;
    s |= VertexSet{1} << *v;
  }
  return s;
}

bool Graph::is_connected() const noexcept {
  if (size() == 0) return true;
  VertexSet seen = 1;
  VertexSet frontier = 1;
  while (frontier) {
    VertexSet next = 0;
    for (std::size_t v = 0; v < size(); ++v)
      if ((frontier >> v) & 1u) next |= neighbors(v);
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == all_vertices();
}

namespace {

Label num(int i) { return Label::atom(std::to_string(i)); }

}  // namespace

Graph complete_graph(int n) {
  std::vector<Label> vs;
  std::vector<std::pair<Label, Label>> es;
  for (int i = 1; i <= n; ++i) {
    vs.push_back(num(i));
    for (int j = i + 1; j <= n; ++j) es.emplace_back(num(i), num(j));
  }
  return Graph::from_edges(vs, es);
}

Graph cycle_graph(int n) {
  if (n < 3) throw InputError("a cycle needs at least 3 vertices");
  std::vector<std::pair<Label, Label>> es;
  for (int i = 0; i < n; ++i) es.emplace_back(num(i), num((i + 1) % n));
  return Graph::from_edges({}, es);
}

Graph path_graph(int n) {
  std::vector<Label> vs;
  std::vector<std::pair<Label, Label>> es;
  for (int i = 1; i <= n; ++i) {
    vs.push_back(num(i));
    if (i < n) es.emplace_back(num(i), num(i + 1));
  }
  return Graph::from_edges(vs, es);
}

}  // namespace combdeform
