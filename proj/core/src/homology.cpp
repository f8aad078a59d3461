#include "combdeform/homology.hpp"

#include <algorithm>
#include <unordered_set>

#include "combdeform/errors.hpp"

namespace combdeform {
namespace {

struct Overflow {};

// int64 that throws Overflow instead of wrapping.
struct Checked {
  std::int64_t v = 0;

  friend Checked operator*(Checked a, Checked b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a.v, b.v, &r)) throw Overflow{};
    return {r};
  }
  friend Checked operator-(Checked a, Checked b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a.v, b.v, &r)) throw Overflow{};
    return {r};
  }
  bool is_zero() const { return v == 0; }
  bool is_unit() const { return v == 1 || v == -1; }
  BigInt big() const { return BigInt(v); }
};

struct Big {
  BigInt v;

  friend Big operator*(const Big& a, const Big& b) { return {a.v * b.v}; }
  friend Big operator-(const Big& a, const Big& b) { return {a.v - b.v}; }
  bool is_zero() const { return v.is_zero(); }
  bool is_unit() const { return v == 1 || v == -1; }
  BigInt big() const { return v; }
};

template <class T>
T from_big(const BigInt& b);
template <>
Checked from_big<Checked>(const BigInt& b) {
  if (b > std::numeric_limits<std::int64_t>::max() || b < std::numeric_limits<std::int64_t>::min()) throw Overflow{};
  return {static_cast<std::int64_t>(b)};
}
template <>
Big from_big<Big>(const BigInt& b) {
  return {b};
}

// Sparse elimination of unit pivots. Returns the number of pivots and leaves
// the unreduced part in `rest` (dense, zero rows and columns dropped).
template <class T>
std::size_t eliminate_units(const IntMatrix& m, std::vector<std::vector<BigInt>>& rest) {
  using Row = std::vector<std::pair<std::size_t, T>>;
  std::vector<Row> rows(m.rows());
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (const auto& [r, v] : m.column(c)) rows[r].emplace_back(c, from_big<T>(v));
  std::vector<std::vector<std::size_t>> col_rows(m.cols());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& e : rows[r]) col_rows[e.first].push_back(r);
  std::vector<char> row_alive(rows.size(), 1);

  auto entry = [&](const Row& row, std::size_t c) -> const T* {
    auto it = std::lower_bound(row.begin(), row.end(), c, [](const auto& e, std::size_t x) { return e.first < x; });
    return it != row.end() && it->first == c ? &it->second : nullptr;
  };

  std::size_t rank = 0;
  Row merged;
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (!row_alive[r] || rows[r].empty()) continue;
      std::size_t best = m.cols();
      for (const auto& [c, v] : rows[r])
        if (v.is_unit() && (best == m.cols() || col_rows[c].size() < col_rows[best].size())) best = c;
      if (best == m.cols()) continue;
      const T pivot = *entry(rows[r], best);
      const std::vector<std::size_t> others = col_rows[best];
      for (std::size_t r2 : others) {
        if (r2 == r || !row_alive[r2]) continue;
        const T* w = entry(rows[r2], best);
        if (!w) continue;
        const T factor = *w * pivot;
        merged.clear();
        auto a = rows[r2].begin();
        auto b = rows[r].begin();
        while (a != rows[r2].end() || b != rows[r].end()) {
          if (b == rows[r].end() || (a != rows[r2].end() && a->first < b->first)) {
            merged.push_back(*a++);
          } else if (a == rows[r2].end() || b->first < a->first) {
            merged.emplace_back(b->first, T{} - factor * b->second);
            col_rows[b->first].push_back(r2);
            ++b;
          } else {
            T v = a->second - factor * b->second;
            if (!v.is_zero()) merged.emplace_back(a->first, v);
            ++a;
            ++b;
          }
        }
        rows[r2].swap(merged);
      }
      row_alive[r] = 0;
      col_rows[best].clear();
      ++rank;
      progress = true;
    }
  }
  std::vector<std::size_t> col_index(m.cols(), m.cols());
  std::size_t ncols = 0;
  for (std::size_t r = 0; r < rows.size(); ++r)
    if (row_alive[r])
      for (const auto& e : rows[r])
        if (col_index[e.first] == m.cols()) col_index[e.first] = ncols++;
  rest.clear();
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (!row_alive[r] || rows[r].empty()) continue;
    std::vector<BigInt> dense(ncols);
    for (const auto& e : rows[r]) dense[col_index[e.first]] = e.second.big();
    rest.push_back(std::move(dense));
  }
  return rank;
}

std::vector<BigInt> dense_smith(std::vector<std::vector<BigInt>> a) {
  std::vector<BigInt> factors;
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // Smallest nonzero entry of the remaining block becomes the pivot.
    auto find_min = [&](std::size_t& pi, std::size_t& pj) {
      bool found = false;
      BigInt best;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (!a[i][j].is_zero() && (!found || abs(a[i][j]) < best)) {
            best = abs(a[i][j]);
            pi = i;
            pj = j;
            found = true;
          }
      return found;
    };
    std::size_t pi = 0, pj = 0;
    if (!find_min(pi, pj)) break;
    for (;;) {
      std::swap(a[t], a[pi]);
      for (std::size_t i = 0; i < rows; ++i) std::swap(a[i][t], a[i][pj]);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t].is_zero()) continue;
        const BigInt q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        if (!a[i][t].is_zero()) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j].is_zero()) continue;
        const BigInt q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        if (!a[t][j].is_zero()) clean = false;
      }
      if (!clean) {
        // A remainder smaller than the pivot is left in row or column t.
        BigInt best = abs(a[t][t]);
        pi = t;
        pj = t;
        for (std::size_t i = t + 1; i < rows; ++i)
          if (!a[i][t].is_zero() && abs(a[i][t]) < best) best = abs(a[i][t]), pi = i, pj = t;
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!a[t][j].is_zero() && abs(a[t][j]) < best) best = abs(a[t][j]), pi = t, pj = j;
        continue;
      }
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (BigInt(a[i][j] % a[t][t]) != 0) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      for (std::size_t j = t; j < cols; ++j) a[t][j] += a[bad][j];
      pi = t;
      pj = t;
    }
    factors.push_back(abs(a[t][t]));
  }
  return factors;
}

}  // namespace

IntMatrix IntMatrix::from_dense(const std::vector<std::vector<BigInt>>& rows) {
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols()) throw InputError("ragged matrix");
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!rows[r][c].is_zero()) m.add(r, c, rows[r][c]);
  }
  return m;
}

void IntMatrix::add(std::size_t r, std::size_t c, const BigInt& value) {
  if (r >= rows_ || c >= cols()) throw InputError("matrix index out of range");
  auto& col = columns_[c];
  auto it = std::lower_bound(col.begin(), col.end(), r, [](const auto& e, std::size_t x) { return e.first < x; });
  if (it != col.end() && it->first == r) {
    it->second += value;
    if (it->second.is_zero()) col.erase(it);
  } else if (!value.is_zero()) {
    col.insert(it, {r, value});
  }
}

BigInt IntMatrix::at(std::size_t r, std::size_t c) const {
  const auto& col = columns_.at(c);
  auto it = std::lower_bound(col.begin(), col.end(), r, [](const auto& e, std::size_t x) { return e.first < x; });
  return it != col.end() && it->first == r ? it->second : BigInt(0);
}

IntMatrix boundary_matrix(const SimplicialComplex& k, int d) {
  if (d < 1 || d > k.dimension()) throw InputError("boundary dimension " + std::to_string(d) + " out of range");
  const auto f = k.f_vector();
  std::size_t row_offset = 0;
  for (int i = 0; i < d - 1; ++i) row_offset += f[static_cast<std::size_t>(i)];
  const std::size_t col_offset = row_offset + f[static_cast<std::size_t>(d - 1)];
  IntMatrix m(f[static_cast<std::size_t>(d - 1)], f[static_cast<std::size_t>(d)]);
  Simplex face;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    const Simplex& s = k.simplex(col_offset + c);
    for (std::size_t i = 0; i < s.size(); ++i) {
      face.assign(s.begin(), s.end());
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
      m.add(*k.find(face) - row_offset, c, BigInt(i % 2 == 0 ? 1 : -1));
    }
  }
  return m;
}

SmithForm smith_normal_form(const IntMatrix& m) {
  std::vector<std::vector<BigInt>> rest;
  std::size_t units;
  try {
    units = eliminate_units<Checked>(m, rest);
  } catch (const Overflow&) {
    units = eliminate_units<Big>(m, rest);
  }
  SmithForm out;
  out.factors.assign(units, BigInt(1));
  for (auto& f : dense_smith(std::move(rest))) out.factors.push_back(std::move(f));
  out.rank = out.factors.size();
  return out;
}

long long HomologySummary::euler() const {
  long long chi = 0;
  for (std::size_t i = 0; i < dims.size(); ++i) chi += (i % 2 == 0 ? 1 : -1) * static_cast<long long>(dims[i].betti);
  return chi;
}

HomologySummary homology(const SimplicialComplex& k) {
  HomologySummary h;
  const int top = k.dimension();
  if (top < 0) return h;
  const auto f = k.f_vector();
  std::vector<SmithForm> snf(static_cast<std::size_t>(top) + 2);
  for (int d = 1; d <= top; ++d) snf[static_cast<std::size_t>(d)] = smith_normal_form(boundary_matrix(k, d));
  for (int d = 0; d <= top; ++d) {
    const auto du = static_cast<std::size_t>(d);
    HomologyGroup g;
    g.betti = f[du] - snf[du].rank - snf[du + 1].rank;
    for (const auto& x : snf[du + 1].factors)
      if (x > 1) g.torsion.push_back(x);
    h.dims.push_back(std::move(g));
  }
  return h;
}

bool homology_equal(const HomologySummary& a, const HomologySummary& b) {
  auto trimmed = [](std::vector<HomologyGroup> v) {
    while (!v.empty() && v.back().betti == 0 && v.back().torsion.empty()) v.pop_back();
    return v;
  };
  return trimmed(a.dims) == trimmed(b.dims);
}

bool homology_equal(const SimplicialComplex& a, const SimplicialComplex& b) {
  return homology_equal(homology(a), homology(b));
}

std::optional<DeformationCertificate> brute_force_collapse_search(const SimplicialComplex& k,
                                                                  const SimplicialComplex& target, std::size_t cap) {
  if (cap > 64) throw SizeCapError("collapse search cap cannot exceed 64 faces");
  if (k.size() > cap)
    throw SizeCapError("complex has " + std::to_string(k.size()) + " faces, above the search cap " + std::to_string(cap));
  const std::size_t n = k.size();
  std::uint64_t goal = 0;
  for (const auto& s : target.simplices()) {
    auto i = k.find(target.labels(s));
    if (!i) return std::nullopt;
    goal |= std::uint64_t{1} << *i;
  }
  std::vector<std::vector<std::size_t>> cofaces(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t f : k.boundary_faces(i)) cofaces[f].push_back(i);
  const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;

  std::unordered_set<std::uint64_t> failed;
  std::vector<std::pair<std::size_t, std::size_t>> path;
  auto search = [&](auto&& self, std::uint64_t state) -> bool {
    if (state == goal) return true;
    if (failed.count(state)) return false;
    for (std::size_t tau = 0; tau < n; ++tau) {
      if (!((state >> tau) & 1u) || ((goal >> tau) & 1u)) continue;
      std::size_t present = 0, sigma = n;
      for (std::size_t c : cofaces[tau])
        if ((state >> c) & 1u) ++present, sigma = c;
      if (present != 1 || ((goal >> sigma) & 1u)) continue;
      bool maximal = true;
      for (std::size_t c : cofaces[sigma]) maximal = maximal && !((state >> c) & 1u);
      if (!maximal) continue;
      path.emplace_back(tau, sigma);
      if (self(self, state & ~(std::uint64_t{1} << tau) & ~(std::uint64_t{1} << sigma))) return true;
      path.pop_back();
    }
    failed.insert(state);
    return false;
  };
  if (!search(search, full)) return std::nullopt;
  std::vector<DeformationStep> steps;
  for (const auto& [tau, sigma] : path)
    steps.push_back({StepKind::collapse, k.labels(k.simplex(tau)), k.labels(k.simplex(sigma))});
  return DeformationCertificate(k, std::move(steps), target);
}

}  // namespace combdeform
