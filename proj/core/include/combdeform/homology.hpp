#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "combdeform/certificate.hpp"
#include "combdeform/complex.hpp"

namespace combdeform {

using BigInt = boost::multiprecision::cpp_int;

/// Sparse exact integer matrix, stored by columns.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}
  static IntMatrix from_dense(const std::vector<std::vector<BigInt>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return columns_.size(); }
  /// Adds `value` to entry (r, c).
  void add(std::size_t r, std::size_t c, const BigInt& value);
  BigInt at(std::size_t r, std::size_t c) const;
  /// Nonzero entries of column c as (row, value), by row.
  const std::vector<std::pair<std::size_t, BigInt>>& column(std::size_t c) const { return columns_.at(c); }

 private:
  std::size_t rows_ = 0;
  std::vector<std::vector<std::pair<std::size_t, BigInt>>> columns_;
};

/// d-th boundary map: rows are the (d-1)-faces and columns the d-faces, each
/// in complex order. Face i of a simplex (vertex i removed) has sign (-1)^i.
/// Throws InputError unless 1 <= d <= dim K.
IntMatrix boundary_matrix(const SimplicialComplex& k, int d);

struct SmithForm {
  std::size_t rank = 0;
  /// Nonzero invariant factors d_1 | d_2 | ..., all positive.
  std::vector<BigInt> factors;
};

/// Unit pivots are eliminated sparsely (in checked 64-bit arithmetic, falling
/// back to big integers on overflow); what remains is diagonalized densely.
SmithForm smith_normal_form(const IntMatrix& m);

struct HomologyGroup {
  std::size_t betti = 0;
  /// Invariant factors greater than one.
  std::vector<BigInt> torsion;

  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

/// Unreduced integral homology, one entry per dimension 0..dim K.
struct HomologySummary {
  std::vector<HomologyGroup> dims;

  long long euler() const;
  friend bool operator==(const HomologySummary&, const HomologySummary&) = default;
};

HomologySummary homology(const SimplicialComplex& k);

/// Equality after dropping trailing trivial dimensions.
bool homology_equal(const HomologySummary& a, const HomologySummary& b);
bool homology_equal(const SimplicialComplex& a, const SimplicialComplex& b);

/// Exhaustive search for a sequence of elementary collapses from K onto
/// `target`. Throws SizeCapError if K has more than `cap` faces (cap <= 64).
std::optional<DeformationCertificate> brute_force_collapse_search(const SimplicialComplex& k,
                                                                  const SimplicialComplex& target,
                                                                  std::size_t cap = 18);

}  // namespace combdeform
