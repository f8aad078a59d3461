#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "combdeform/label.hpp"

namespace combdeform {

using VertexIndex = std::uint32_t;

/// Strictly increasing list of vertex indices into a complex's vertex table.
using Simplex = std::vector<VertexIndex>;

struct SimplexHash {
  std::size_t operator()(const Simplex& s) const noexcept {
    std::size_t h = s.size();
    for (VertexIndex v : s) h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

/// Finite abstract simplicial complex stored as its full closed family of
/// nonempty simplices.
///
/// Vertices are kept sorted by label, and simplices sorted by (dimension,
/// lexicographic), so two complexes with the same labelled faces are equal
/// member for member. Values are immutable and share their storage.
class SimplicialComplex {
 public:
  SimplicialComplex();

  /// Smallest complex containing every facet. Throws InputError on an empty
  /// facet or a facet with a repeated vertex.
  static SimplicialComplex from_facets(const std::vector<std::vector<Label>>& facets);

  /// Complex over `vertices` whose simplices index into that table. The
  /// family must be closed under taking nonempty faces and must contain every
  /// vertex as a 0-simplex; both are checked.
  static SimplicialComplex from_family(std::vector<Label> vertices, std::vector<Simplex> simplices);

  bool empty() const noexcept { return data_->simplices.empty(); }
  std::size_t vertex_count() const noexcept { return data_->vertices.size(); }
  std::span<const Label> vertices() const noexcept { return data_->vertices; }
  const Label& vertex(VertexIndex v) const { return data_->vertices.at(v); }
  std::optional<VertexIndex> vertex_index(const Label& l) const;

  std::size_t size() const noexcept { return data_->simplices.size(); }
  const std::vector<Simplex>& simplices() const noexcept { return data_->simplices; }
  const Simplex& simplex(std::size_t i) const { return data_->simplices.at(i); }

  std::optional<std::size_t> find(const Simplex& s) const;
  std::optional<std::size_t> find(std::span<const Label> s) const;
  bool contains(std::span<const Label> s) const { return find(s).has_value(); }

  /// Sorted vertex-index form of a label set, if every label is a vertex.
  std::optional<Simplex> to_simplex(std::span<const Label> s) const;
  std::vector<Label> labels(const Simplex& s) const;

  int dimension() const noexcept;
  std::vector<std::size_t> f_vector() const;
  long long euler_characteristic() const;

  /// Indices of the maximal simplices, in simplex order.
  std::vector<std::size_t> facet_indices() const;
  std::vector<std::vector<Label>> facets() const;

  /// Indices of the codimension-one faces of simplex `i` (empty for vertices).
  std::vector<std::size_t> boundary_faces(std::size_t i) const;

  /// Same complex with every vertex renamed; the renaming must be injective.
  SimplicialComplex relabeled(const std::function<Label(const Label&)>& rename) const;

  /// Subcomplex of the simplices whose vertices all satisfy `keep`.
  SimplicialComplex induced(const std::function<bool(VertexIndex)>& keep) const;

  /// Subcomplex generated by the listed simplices (their closure).
  SimplicialComplex closure_of(std::span<const std::size_t> simplex_indices) const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b);

 private:
  struct Data {
    std::vector<Label> vertices;
    std::unordered_map<Label, VertexIndex, LabelHash> vertex_lookup;
    std::vector<Simplex> simplices;
    std::unordered_map<Simplex, std::size_t, SimplexHash> simplex_lookup;
  };
  explicit SimplicialComplex(std::shared_ptr<const Data> d) : data_(std::move(d)) {}

  std::shared_ptr<const Data> data_;
};

/// Euler characteristic of an f-vector (unreduced).
long long euler_characteristic(std::span<const std::size_t> f_vector);

/// Barycentric subdivision together with the face of the original complex
/// that each new vertex stands for.
struct IndexedSubdivision {
  SimplicialComplex complex;
  /// face_of_vertex[v] = index in the original complex of the face whose
  /// barycenter is vertex v of `complex`.
  std::vector<std::size_t> face_of_vertex;
};

/// Label used for the barycenter of a face: the tuple of its vertex labels.
Label face_label(std::span<const Label> face);

/// Bd K: vertices are the faces of K (tuple-labelled), simplices are chains
/// of faces under inclusion.
SimplicialComplex barycentric_subdivision(const SimplicialComplex& k);
IndexedSubdivision barycentric_subdivision_indexed(const SimplicialComplex& k);

/// Stellar subdivision sd(K, sigma) with apex `face_label(sigma)`.
SimplicialComplex stellar_subdivision(const SimplicialComplex& k, std::span<const Label> sigma);
/// Stellar subdivision with an explicit apex label, which must not already be
/// a vertex of K.
SimplicialComplex stellar_subdivision(const SimplicialComplex& k, std::span<const Label> sigma, const Label& apex);

/// lk_K(sigma) = { tau : tau disjoint from sigma, tau u sigma in K }.
SimplicialComplex link(const SimplicialComplex& k, std::span<const Label> sigma);
/// Closed star: closure of all cofaces of sigma.
SimplicialComplex star(const SimplicialComplex& k, std::span<const Label> sigma);

}  // namespace combdeform
