#pragma once

#include <string>
#include <vector>

#include "combdeform/certificate.hpp"
#include "combdeform/complex.hpp"
#include "combdeform/graph.hpp"
#include "combdeform/graph_complexes.hpp"
#include "combdeform/homology.hpp"
#include "combdeform/poset.hpp"

namespace combdeform {

// Labels appear in JSON as strings (atoms) or arrays (tuples).
std::string label_to_json(const Label& l);

/// Complex from text (one facet per line, whitespace separated, '#' starts a
/// comment) or from JSON {"facets": [[...], ...]}; JSON is recognised by a
/// leading '{'. Errors carry the line number.
SimplicialComplex parse_complex(const std::string& text);
std::string complex_to_json(const SimplicialComplex& k);

/// Graph from text (one edge "u v" per line, a single token adds an isolated
/// vertex) or JSON {"vertices": [...], "edges": [[u, v], ...]}.
Graph parse_graph(const std::string& text);
std::string graph_to_json(const Graph& g);

/// Lattice from JSON {"elements": [...], "covers": [[lo, hi], ...]}.
BoundedLattice parse_lattice(const std::string& text);
std::string lattice_to_json(const BoundedLattice& l);

/// Crosscut as a JSON list of element names of `l`.
std::vector<ElementIndex> parse_crosscut(const std::string& text, const BoundedLattice& l);

std::string hom_to_json(const Graph& g, const HomComplex& h);

/// JSON lines: a header {"start_facets", "end_facets"} and one
/// {"op", "free", "coface"} record per step.
std::string certificate_to_jsonl(const DeformationCertificate& cert);
DeformationCertificate parse_certificate(const std::string& text);

/// {"dims": [{"betti": b, "torsion": [...]}, ...], "euler": chi}
std::string homology_to_json(const HomologySummary& h);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace combdeform
