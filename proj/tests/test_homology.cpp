#include <gtest/gtest.h>

#include <numeric>

#include "combdeform/graph_complexes.hpp"
#include "combdeform/homology.hpp"
#include "combdeform/lattice_complexes.hpp"
#include "combdeform/random.hpp"
#include "oracles.hpp"

using namespace combdeform;
using oracle::cx;
using oracle::face;

namespace {

using Dense = std::vector<std::vector<long long>>;

IntMatrix to_matrix(const Dense& d) {
  std::vector<std::vector<BigInt>> rows;
  for (const auto& r : d) rows.emplace_back(r.begin(), r.end());
  return IntMatrix::from_dense(rows);
}

BigInt det(std::vector<std::vector<BigInt>> m) {
  // Bareiss fraction-free elimination
  const std::size_t n = m.size();
  BigInt sign = 1, prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

// Invariant factors from gcds of k x k minors: d_k = D_k / D_{k-1}.
std::vector<BigInt> factors_by_minors(const Dense& a) {
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  std::vector<BigInt> out;
  BigInt prev = 1;
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    BigInt g = 0;
    std::vector<std::size_t> ri(k), ci(k);
    std::function<void(std::size_t, std::size_t)> pick_rows, pick_cols;
    pick_cols = [&](std::size_t at, std::size_t from) {
      if (at == k) {
        std::vector<std::vector<BigInt>> m(k, std::vector<BigInt>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) m[i][j] = a[ri[i]][ci[j]];
        g = boost::multiprecision::gcd(g, abs(det(m)));
        return;
      }
      for (std::size_t c = from; c < cols; ++c) {
        ci[at] = c;
        pick_cols(at + 1, c + 1);
      }
    };
    pick_rows = [&](std::size_t at, std::size_t from) {
      if (at == k) {
        pick_cols(0, 0);
        return;
      }
      for (std::size_t r = from; r < rows; ++r) {
        ri[at] = r;
        pick_rows(at + 1, r + 1);
      }
    };
    pick_rows(0, 0);
    if (g == 0) break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

SimplicialComplex rp2() {
  return cx({{1, 2, 4}, {1, 2, 6}, {1, 3, 4}, {1, 3, 5}, {1, 5, 6}, {2, 3, 5}, {2, 3, 6}, {2, 4, 5}, {3, 4, 6}, {4, 5, 6}});
}

std::vector<std::size_t> bettis(const HomologySummary& h) {
  std::vector<std::size_t> out;
  for (const auto& g : h.dims) out.push_back(g.betti);
  return out;
}

}  // namespace

TEST(BoundaryMatrix, EdgeAndTriangle) {
  const auto e = boundary_matrix(cx({{1, 2}}), 1);
  EXPECT_EQ(e.at(0, 0), -1);
  EXPECT_EQ(e.at(1, 0), 1);
  const auto t = boundary_matrix(cx({{1, 2, 3}}), 2);
  // edges in order 12, 13, 23
  EXPECT_EQ(t.at(0, 0), 1);
  EXPECT_EQ(t.at(1, 0), -1);
  EXPECT_EQ(t.at(2, 0), 1);
  EXPECT_EQ(smith_normal_form(boundary_matrix(cx({{1, 2}, {1, 3}, {2, 3}}), 1)).rank, 2u);
  EXPECT_THROW(boundary_matrix(cx({{1, 2}}), 2), InputError);
  EXPECT_THROW(boundary_matrix(cx({{1, 2}}), 0), InputError);
}

TEST(Smith, SpecExamples) {
  const auto a = smith_normal_form(to_matrix({{2, 0}, {0, 3}}));
  EXPECT_EQ(a.factors, (std::vector<BigInt>{1, 6}));
  const auto z = smith_normal_form(to_matrix({{0, 0}, {0, 0}}));
  EXPECT_EQ(z.rank, 0u);
  EXPECT_TRUE(z.factors.empty());
  EXPECT_EQ(smith_normal_form(to_matrix({{2, 0}, {0, 2}})).factors, (std::vector<BigInt>{2, 2}));
}

TEST(Smith, MatchesMinorGcds) {
  Rng rng(99);
  for (int t = 0; t < 150; ++t) {
    const std::size_t r = rng.uniform(1, 4), c = rng.uniform(1, 4);
    Dense a(r, std::vector<long long>(c));
    for (auto& row : a)
      for (auto& x : row) x = static_cast<long long>(rng.uniform(0, 12)) - 6;
    const auto snf = smith_normal_form(to_matrix(a));
    const auto want = factors_by_minors(a);
    EXPECT_EQ(snf.factors, want);
    EXPECT_EQ(snf.rank, want.size());
  }
}

TEST(Smith, InvariantUnderUnimodularMoves) {
  Rng rng(5);
  for (int t = 0; t < 40; ++t) {
    Dense a(4, std::vector<long long>(5));
    for (auto& row : a)
      for (auto& x : row) x = static_cast<long long>(rng.uniform(0, 8)) - 4;
    Dense b = a;
    for (int s = 0; s < 12; ++s) {
      const std::size_t i = rng.uniform(0, 3), j = rng.uniform(0, 3);
      if (i == j) continue;
      const long long f = static_cast<long long>(rng.uniform(0, 4)) - 2;
      for (std::size_t k = 0; k < 5; ++k) b[i][k] += f * b[j][k];
      const std::size_t p = rng.uniform(0, 4), q = rng.uniform(0, 4);
      if (p == q) continue;
      for (std::size_t k = 0; k < 4; ++k) b[k][p] -= f * b[k][q];
      std::swap(b[i], b[j]);
    }
    EXPECT_EQ(smith_normal_form(to_matrix(a)).factors, smith_normal_form(to_matrix(b)).factors);
  }
}

TEST(Smith, LargeEntriesStayExact) {
  const long long big = 3037000499LL;  // about sqrt(2^63)
  const auto s = smith_normal_form(to_matrix({{big, big - 1}, {big + 1, big}}));
  // determinant big^2 - (big^2 - 1) = 1
  EXPECT_EQ(s.factors, (std::vector<BigInt>{1, 1}));
  const auto t = smith_normal_form(to_matrix({{big, 0}, {0, big}}));
  EXPECT_EQ(t.factors, (std::vector<BigInt>{big, big}));
}

TEST(Homology, Point) {
  const auto h = homology(cx({{1}}));
  ASSERT_EQ(h.dims.size(), 1u);
  EXPECT_EQ(h.dims[0].betti, 1u);
}

TEST(Homology, Hexagon) {
  const auto h = homology(barycentric_subdivision(cx({{1, 2}, {1, 3}, {2, 3}})));
  EXPECT_EQ(bettis(h), (std::vector<std::size_t>{1, 1}));
}

TEST(Homology, ProjectivePlaneHasTwoTorsion) {
  const auto k = rp2();
  // closed pseudomanifold: every edge lies in two triangles
  for (const auto& s : k.simplices())
    if (s.size() == 2) {
      std::size_t n = 0;
      for (const auto& t : k.simplices()) n += t.size() == 3 && std::includes(t.begin(), t.end(), s.begin(), s.end());
      EXPECT_EQ(n, 2u);
    }
  const auto h = homology(k);
  EXPECT_EQ(bettis(h), (std::vector<std::size_t>{1, 0, 0}));
  EXPECT_EQ(h.dims[1].torsion, std::vector<BigInt>{2});
  EXPECT_TRUE(h.dims[2].torsion.empty());
  EXPECT_EQ(h.euler(), 1);
}

TEST(Homology, BettiNumbersMatchModPRanks) {
  Rng rng(21);
  std::vector<SimplicialComplex> ks{rp2(), order_complex(proper_part(partition_lattice(4).lattice)),
                                    neighborhood_complex(cycle_graph(7))};
  for (int n = 1; n <= 4; ++n)
    for (const auto& f : oracle::complexes_on(n))
      if (rng.chance(1, 8)) ks.push_back(SimplicialComplex::from_facets(f));
  for (const auto& k : ks) {
    const auto h = homology(k);
    const auto want = oracle::betti_mod_p(oracle::faces_of(k));
    ASSERT_EQ(h.dims.size(), want.size());
    for (std::size_t d = 0; d < want.size(); ++d) EXPECT_EQ(static_cast<long long>(h.dims[d].betti), want[d]);
    EXPECT_EQ(h.euler(), k.euler_characteristic());
  }
}

TEST(Homology, SpotValues) {
  EXPECT_EQ(bettis(homology(order_complex(proper_part(partition_lattice(4).lattice)))),
            (std::vector<std::size_t>{1, 6}));
  EXPECT_EQ(bettis(homology(neighborhood_complex(cycle_graph(5)))), (std::vector<std::size_t>{1, 1}));
  EXPECT_EQ(bettis(homology(atom_crosscut_complex(partition_lattice(3).lattice))), std::vector<std::size_t>{3});
}

TEST(Homology, EqualityTrimsTrailingZeros) {
  EXPECT_TRUE(homology_equal(neighborhood_complex(complete_graph(3)), hom_k2_subdivision(complete_graph(3))));
  EXPECT_FALSE(homology_equal(cx({{1}}), cx({{1}, {2}})));
  EXPECT_TRUE(homology_equal(cx({{1, 2, 3}}), cx({{1}})));
  EXPECT_TRUE(homology_equal(order_complex(proper_part(partition_lattice(3).lattice)),
                             atom_crosscut_complex(partition_lattice(3).lattice)));
}

TEST(BruteForce, ConeCollapsesToVertex) {
  const auto c = brute_force_collapse_search(cx({{1, 2, 3}}), cx({{1}}));
  ASSERT_TRUE(c.has_value());
  EXPECT_TRUE(verify_certificate(*c).ok);
}

TEST(BruteForce, SphereHasNoFreeFace) {
  const auto s = cx({{1, 2}, {1, 3}, {2, 3}});
  EXPECT_FALSE(brute_force_collapse_search(s, cx({{1, 2}, {1, 3}})).has_value());
  EXPECT_FALSE(brute_force_collapse_search(s, cx({{1}})).has_value());
}

TEST(BruteForce, IdenticalComplexesNeedNoSteps) {
  const auto j = bounded_below_complex(boolean_lattice(2));
  const auto c = brute_force_collapse_search(j, order_complex(proper_part(boolean_lattice(2))));
  ASSERT_TRUE(c.has_value());
  EXPECT_TRUE(c->steps().empty());
}

TEST(BruteForce, CapIsEnforced) {
  EXPECT_THROW(brute_force_collapse_search(cx({{1, 2, 3, 4, 5}}), cx({{1}})), SizeCapError);
  EXPECT_THROW(brute_force_collapse_search(cx({{1}}), cx({{1}}), 65), SizeCapError);
}
