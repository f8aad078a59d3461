#include <gtest/gtest.h>

#include "combdeform/deformation.hpp"
#include "combdeform/io.hpp"
#include "combdeform/pipeline.hpp"
#include "oracles.hpp"

using namespace combdeform;
using oracle::cx;
using oracle::L;

namespace {

template <class F>
std::size_t error_line(F&& f) {
  try {
    f();
  } catch (const InputError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST(ComplexIO, TextAndJsonAgree) {
  const auto a = parse_complex("# triangle and a tail\n1 2 3\n\n3 4   # tail\n");
  const auto b = parse_complex(R"({"facets": [["1","2","3"], ["3","4"]]})");
  EXPECT_EQ(a, b);
  EXPECT_EQ(parse_complex(complex_to_json(a)), a);
}

TEST(ComplexIO, TupleLabelsRoundTrip) {
  const auto k = barycentric_subdivision(cx({{1, 2}}));
  EXPECT_EQ(parse_complex(complex_to_json(k)), k);
}

TEST(ComplexIO, ErrorsCarryLineNumbers) {
  EXPECT_EQ(error_line([] { parse_complex("1 2\n\n3 3\n"); }), 3u);
  EXPECT_THROW(parse_complex("{\"facets\": 3}"), InputError);
  EXPECT_THROW(parse_complex("{\"facets\": [[1.5]]}"), InputError);
  EXPECT_THROW(parse_complex("{ not json"), InputError);
}

TEST(GraphIO, EdgeListAndJson) {
  const auto g = parse_graph("1 2\n2 3\n3 1\n7\n");
  EXPECT_EQ(g.size(), 4u);
  EXPECT_EQ(g.edge_count(), 3u);
  const auto h = parse_graph(graph_to_json(g));
  EXPECT_EQ(h.size(), 4u);
  EXPECT_EQ(h.edges(), g.edges());
  EXPECT_EQ(error_line([] { parse_graph("1 2\n1 2 3\n"); }), 2u);
  EXPECT_THROW(parse_graph(R"({"vertices": [], "edges": [["1"]]})"), InputError);
}

TEST(LatticeIO, RoundTripAndValidation) {
  const auto l = boolean_lattice(3);
  const auto m = parse_lattice(lattice_to_json(l));
  EXPECT_EQ(m.size(), 8u);
  EXPECT_EQ(order_complex(proper_part(m)), order_complex(proper_part(l)));
  EXPECT_THROW(parse_lattice(R"({"elements": ["0","a","b"], "covers": [["0","a"],["0","b"]]})"), NotALattice);
  EXPECT_THROW(parse_lattice(R"({"covers": []})"), InputError);
}

TEST(CrosscutIO, NamesMustExist) {
  const auto l = boolean_lattice(3);
  EXPECT_EQ(parse_crosscut(R"(["x","y","z"])", l), l.atoms());
  EXPECT_THROW(parse_crosscut(R"(["q"])", l), InputError);
  EXPECT_THROW(parse_crosscut(R"({"x": 1})", l), InputError);
}

TEST(CertificateIO, RoundTrip) {
  const auto c = hom_to_neighborhood_deformation(complete_graph(3)).certificate;
  const auto text = certificate_to_jsonl(c);
  const auto back = parse_certificate(text);
  EXPECT_EQ(back, c);
  EXPECT_EQ(certificate_to_jsonl(back), text);
}

TEST(CertificateIO, BadLinesAreLocated) {
  const auto text = certificate_to_jsonl(bd_deformation(cx({{1, 2}})));
  const auto first_break = text.find('\n');
  std::string bad = text.substr(0, first_break + 1) + "{\"op\": \"twist\", \"free\": [], \"coface\": []}\n";
  EXPECT_EQ(error_line([&] { parse_certificate(bad); }), 2u);
  EXPECT_THROW(parse_certificate(""), InputError);
  EXPECT_THROW(parse_certificate("{\"start_facets\": []}\n"), InputError);
}

TEST(HomologyIO, Shape) {
  HomologySummary h;
  h.dims.push_back({1, {}});
  h.dims.push_back({0, {BigInt(2)}});
  EXPECT_EQ(homology_to_json(h), "{\"dims\":[{\"betti\":1,\"torsion\":[]},{\"betti\":0,\"torsion\":[2]}],\"euler\":1}\n");
}
