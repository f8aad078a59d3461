#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "combdeform/label.hpp"

namespace combdeform {

/// Vertex subset of a graph with at most 64 vertices, bit i = vertex i.
using VertexSet = std::uint64_t;

/// Finite undirected graph without multi-edges; loops (v,v) are allowed.
/// Vertices are sorted by label.
class Graph {
 public:
  Graph();

  /// Vertices are `vertices` plus every edge endpoint. Throws InputError on
  /// more than 64 vertices or a repeated edge.
  static Graph from_edges(std::vector<Label> vertices, const std::vector<std::pair<Label, Label>>& edges);

  std::size_t size() const noexcept { return data_->labels.size(); }
  const Label& label(std::size_t v) const { return data_->labels.at(v); }
  std::span<const Label> labels() const noexcept { return data_->labels; }
  std::optional<std::size_t> index_of(const Label& l) const;

  VertexSet neighbors(std::size_t v) const { return data_->adjacency.at(v); }
  bool adjacent(std::size_t u, std::size_t v) const { return (neighbors(u) >> v) & 1u; }
  bool has_loops() const noexcept;
  std::size_t edge_count() const noexcept;
  /// Edges (u <= v) in lexicographic order of vertex index.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;
  VertexSet all_vertices() const noexcept;
  /// Vertices lying on at least one edge.
  VertexSet endpoints() const noexcept;

  /// N(S): vertices adjacent to every member of S; N(empty) = endpoints().
  VertexSet common_neighbors(VertexSet s) const noexcept;

  /// Labels of the members of `s`, in vertex order.
  std::vector<Label> labels_of(VertexSet s) const;
  /// Tuple of the members' labels; equals the face label of s in N(G).
  Label set_label(VertexSet s) const;
  std::optional<VertexSet> set_of(std::span<const Label> labels) const;

  bool is_connected() const noexcept;

 private:
  struct Data {
    std::vector<Label> labels;
    std::unordered_map<Label, std::size_t, LabelHash> lookup;
    std::vector<VertexSet> adjacency;
  };
  std::shared_ptr<const Data> data_;
};

/// K_n on vertices 1..n.
Graph complete_graph(int n);
/// C_n on vertices 0..n-1.
Graph cycle_graph(int n);
/// Path on vertices 1..n.
Graph path_graph(int n);

inline int popcount(VertexSet s) noexcept { return __builtin_popcountll(s); }

}  // namespace combdeform
