#include "combdeform/io.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>

#include "json.hpp"

namespace combdeform {
namespace {

using nlohmann::ordered_json;

ordered_json label_json(const Label& l) {
  if (l.is_atom()) return l.name();
  ordered_json arr = ordered_json::array();
  for (const auto& x : l.items()) arr.push_back(label_json(x));
  return arr;
}

Label json_label(const ordered_json& j) {
  if (j.is_string()) return Label::atom(j.get<std::string>());
  if (j.is_number_integer()) return Label::atom(j.dump());
  if (j.is_array()) {
    std::vector<Label> items;
    for (const auto& x : j) items.push_back(json_label(x));
    return Label::tuple(std::move(items));
  }
  throw InputError("label must be a string, an integer or an array, got " + j.dump());
}

ordered_json face_json(const std::vector<Label>& face) {
  ordered_json arr = ordered_json::array();
  for (const auto& l : face) arr.push_back(label_json(l));
  return arr;
}

std::vector<Label> json_face(const ordered_json& j) {
  if (!j.is_array()) throw InputError("face must be an array of labels");
  std::vector<Label> out;
  for (const auto& x : j) out.push_back(json_label(x));
  return out;
}

ordered_json facets_json(const SimplicialComplex& k) {
  ordered_json arr = ordered_json::array();
  for (const auto& f : k.facets()) arr.push_back(face_json(f));
  return arr;
}

SimplicialComplex json_complex(const ordered_json& facets) {
  if (!facets.is_array()) throw InputError("\"facets\" must be an array");
  std::vector<std::vector<Label>> out;
  for (const auto& f : facets) out.push_back(json_face(f));
  return SimplicialComplex::from_facets(out);
}

ordered_json parse_json(const std::string& text, std::size_t line = 0) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what(), line);
  }
}

bool looks_like_json(const std::string& text) {
  const auto pos = text.find_first_not_of(" \t\r\n");
  return pos != std::string::npos && text[pos] == '{';
}

// Non-empty, comment-stripped lines with their 1-based numbers.
std::vector<std::pair<std::size_t, std::vector<std::string>>> token_lines(const std::string& text) {
  std::vector<std::pair<std::size_t, std::vector<std::string>>> out;
  std::istringstream in(text);
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::vector<std::string> tokens;
    for (std::string w; words >> w;) tokens.push_back(w);
    if (!tokens.empty()) out.emplace_back(n, std::move(tokens));
  }
  return out;
}

template <class F>
auto with_json_errors(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("unexpected JSON shape: ") + e.what());
  }
}

}  // namespace

std::string label_to_json(const Label& l) { return label_json(l).dump(); }

SimplicialComplex parse_complex(const std::string& text) {
  if (looks_like_json(text)) {
    return with_json_errors([&] {
      const auto j = parse_json(text);
      if (!j.contains("facets")) throw InputError("complex JSON needs \"facets\"");
      return json_complex(j.at("facets"));
    });
  }
  std::vector<std::vector<Label>> facets;
  for (const auto& [line, tokens] : token_lines(text)) {
    std::vector<Label> facet;
    for (const auto& t : tokens) facet.push_back(Label::atom(t));
    std::vector<Label> sorted = facet;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw InputError("facet repeats a vertex", line);
    facets.push_back(std::move(facet));
  }
  return SimplicialComplex::from_facets(facets);
}

std::string complex_to_json(const SimplicialComplex& k) {
  ordered_json j;
  j["facets"] = facets_json(k);
  ordered_json f = ordered_json::array();
  for (auto x : k.f_vector()) f.push_back(x);
  j["f_vector"] = f;
  j["euler"] = k.euler_characteristic();
  return j.dump() + "\n";
}

Graph parse_graph(const std::string& text) {
  if (looks_like_json(text)) {
    return with_json_errors([&] {
      const auto j = parse_json(text);
      std::vector<Label> vs;
      if (j.contains("vertices"))
        for (const auto& v : j.at("vertices")) vs.push_back(json_label(v));
      std::vector<std::pair<Label, Label>> es;
      if (j.contains("edges"))
        for (const auto& e : j.at("edges")) {
          if (!e.is_array() || e.size() != 2) throw InputError("edge must be a pair, got " + e.dump());
          es.emplace_back(json_label(e[0]), json_label(e[1]));
        }
      return Graph::from_edges(vs, es);
    });
  }
  std::vector<Label> vs;
  std::vector<std::pair<Label, Label>> es;
  for (const auto& [line, tokens] : token_lines(text)) {
    if (tokens.size() == 1) {
      vs.push_back(Label::atom(tokens[0]));
    } else if (tokens.size() == 2) {
      es.emplace_back(Label::atom(tokens[0]), Label::atom(tokens[1]));
    } else {
      throw InputError("expected \"u v\" or a single vertex", line);
    }
  }
  try {
    return Graph::from_edges(vs, es);
  } catch (const InputError& e) {
    throw InputError(e.what());
  }
}

std::string graph_to_json(const Graph& g) {
  ordered_json j;
  j["vertices"] = face_json(std::vector<Label>(g.labels().begin(), g.labels().end()));
  ordered_json es = ordered_json::array();
  for (const auto& [u, v] : g.edges()) es.push_back({label_json(g.label(u)), label_json(g.label(v))});
  j["edges"] = es;
  return j.dump() + "\n";
}

BoundedLattice parse_lattice(const std::string& text) {
  return with_json_errors([&] {
    const auto j = parse_json(text);
    if (!j.contains("elements")) throw InputError("lattice JSON needs \"elements\"");
    std::vector<Label> elements;
    for (const auto& e : j.at("elements")) elements.push_back(json_label(e));
    std::vector<std::pair<Label, Label>> covers;
    if (j.contains("covers"))
      for (const auto& c : j.at("covers")) {
        if (!c.is_array() || c.size() != 2) throw InputError("cover must be a pair, got " + c.dump());
        covers.emplace_back(json_label(c[0]), json_label(c[1]));
      }
    return BoundedLattice::from_poset(Poset::from_covers(std::move(elements), covers));
  });
}

std::string lattice_to_json(const BoundedLattice& l) {
  ordered_json j;
  ordered_json elems = ordered_json::array();
  ordered_json covers = ordered_json::array();
  for (ElementIndex x : l.poset().linear_extension()) {
    elems.push_back(label_json(l.label(x)));
    for (ElementIndex y : l.poset().upper_covers(x)) covers.push_back({label_json(l.label(x)), label_json(l.label(y))});
  }
  j["elements"] = elems;
  j["covers"] = covers;
  return j.dump() + "\n";
}

std::vector<ElementIndex> parse_crosscut(const std::string& text, const BoundedLattice& l) {
  return with_json_errors([&] {
    const auto j = parse_json(text);
    if (!j.is_array()) throw InputError("crosscut must be a JSON list of element names");
    std::vector<ElementIndex> out;
    for (const auto& x : j) {
      const Label name = json_label(x);
      auto idx = l.index_of(name);
      if (!idx) throw InputError("crosscut names unknown element " + name.str());
      out.push_back(*idx);
    }
    return out;
  });
}

std::string hom_to_json(const Graph& g, const HomComplex& h) {
  ordered_json cells = ordered_json::array();
  for (const auto& c : h.cells)
    cells.push_back({{"A", face_json(g.labels_of(c.a))}, {"B", face_json(g.labels_of(c.b))}, {"dim", c.dim()}});
  ordered_json j;
  j["cells"] = cells;
  return j.dump() + "\n";
}

std::string certificate_to_jsonl(const DeformationCertificate& cert) {
  std::string out;
  ordered_json header;
  header["start_facets"] = facets_json(cert.start());
  header["end_facets"] = facets_json(cert.end());
  out += header.dump() + "\n";
  for (const auto& s : cert.steps()) {
    ordered_json j;
    j["op"] = s.kind == StepKind::collapse ? "collapse" : "expand";
    j["free"] = face_json(s.free_face);
    j["coface"] = face_json(s.coface);
    out += j.dump() + "\n";
  }
  return out;
}

DeformationCertificate parse_certificate(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t n = 0;
  std::optional<ordered_json> header;
  std::vector<DeformationStep> steps;
  while (std::getline(in, line)) {
    ++n;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto j = parse_json(line, n);
    try {
      if (!header) {
        if (!j.contains("start_facets") || !j.contains("end_facets"))
          throw InputError("certificate header needs start_facets and end_facets", n);
        header = j;
        continue;
      }
      const auto op = j.at("op").get<std::string>();
      if (op != "collapse" && op != "expand") throw InputError("unknown op \"" + op + "\"", n);
      auto free = json_face(j.at("free"));
      auto coface = json_face(j.at("coface"));
      std::sort(free.begin(), free.end());
      std::sort(coface.begin(), coface.end());
      steps.push_back({op == "collapse" ? StepKind::collapse : StepKind::expand, std::move(free), std::move(coface)});
    } catch (const nlohmann::json::exception& e) {
      throw InputError(std::string("malformed step: ") + e.what(), n);
    }
  }
  if (!header) throw InputError("certificate is empty");
  return with_json_errors([&] {
    return DeformationCertificate(json_complex(header->at("start_facets")), std::move(steps),
                                  json_complex(header->at("end_facets")));
  });
}

std::string homology_to_json(const HomologySummary& h) {
  ordered_json dims = ordered_json::array();
  for (const auto& g : h.dims) {
    ordered_json t = ordered_json::array();
    for (const auto& x : g.torsion) {
      if (x <= std::numeric_limits<std::int64_t>::max())
        t.push_back(x.convert_to<std::int64_t>());
      else
        t.push_back(x.str());  // too wide for a JSON integer
    }
    dims.push_back({{"betti", g.betti}, {"torsion", t}});
  }
  ordered_json j;
  j["dims"] = dims;
  j["euler"] = h.euler();
  return j.dump() + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << content;
}

}  // namespace combdeform
