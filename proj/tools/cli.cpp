#include "cli.hpp"

#include <CLI11.hpp>
#include <limits>
#include <sstream>

#include "builtins.hpp"
#include "combdeform/deformation.hpp"
#include "combdeform/graph_complexes.hpp"
#include "combdeform/homology.hpp"
#include "combdeform/io.hpp"
#include "combdeform/lattice_complexes.hpp"
#include "combdeform/pipeline.hpp"
#include "combdeform/random.hpp"
#include "json.hpp"

namespace combdeform::cli {
namespace {

using nlohmann::ordered_json;

constexpr std::size_t graph_cap = 8;
constexpr std::size_t lattice_cap = 14;
constexpr std::size_t partition_cap = 7;
constexpr std::size_t subdivision_cap = 500000;
constexpr std::size_t probe_points = 6;
constexpr int probe_generators = 6;
constexpr std::size_t probe_elements = 10;
constexpr std::size_t witness_vertices = 5;

struct Options {
  std::string kind;
  std::string input;
  std::string builtin;
  std::string output;
  std::size_t cap = 0;
  bool unsafe = false;
  std::uint64_t seed = 1;
  int n = 0;
  std::string face;
  std::string crosscut;
  std::size_t trials = 50;
  bool graphs = false;
};

std::string fvec(const std::vector<std::size_t>& f) {
  std::string s = "(";
  for (std::size_t i = 0; i < f.size(); ++i) s += (i ? ", " : "") + std::to_string(f[i]);
  return s + ")";
}

// Effective cap; SIZE_MAX under --unsafe-size.
std::size_t cap_of(const Options& o, std::size_t fallback) {
  if (o.unsafe) return std::numeric_limits<std::size_t>::max();
  return o.cap ? o.cap : fallback;
}

void enforce(const Options& o, std::size_t value, std::size_t fallback, const std::string& what) {
  const std::size_t cap = cap_of(o, fallback);
  if (value > cap)
    throw SizeCapError(what + " is " + std::to_string(value) + ", over the cap of " + std::to_string(cap) +
                       " (raise it with --cap or pass --unsafe-size)");
}

std::string input_text(const Options& o) {
  if (o.input.empty()) throw InputError("no input: pass --input FILE or --builtin NAME");
  return read_file(o.input);
}

Graph load_graph(const Options& o) {
  return o.builtin.empty() ? parse_graph(input_text(o)) : builtin_graph(o.builtin);
}

BoundedLattice load_lattice(const Options& o) {
  return o.builtin.empty() ? parse_lattice(input_text(o)) : builtin_lattice(o.builtin);
}

SimplicialComplex load_complex(const Options& o) {
  return o.builtin.empty() ? parse_complex(input_text(o)) : builtin_complex(o.builtin);
}

HomologySummary homology_or_empty(const SimplicialComplex& k) { return k.empty() ? HomologySummary{} : homology(k); }

std::string describe(const HomologyGroup& g) {
  std::string s = g.betti == 0 ? "0" : g.betti == 1 ? "Z" : "Z^" + std::to_string(g.betti);
  for (const auto& t : g.torsion) s += (s == "0" ? std::string() : std::string(" + ")) + "Z/" + t.str();
  if (s.rfind("0Z/", 0) == 0) s.erase(0, 1);
  return s;
}

void print_complex(std::ostream& out, const SimplicialComplex& k) {
  out << "f-vector: " << fvec(k.f_vector()) << "\n";
  out << "euler: " << k.euler_characteristic() << "\n";
}

int cmd_build(const Options& o, std::ostream& out) {
  SimplicialComplex k;
  std::string artifact;
  if (o.kind == "neighborhood" || o.kind == "lovasz" || o.kind == "homk2") {
    const Graph g = load_graph(o);
    if (o.kind == "neighborhood") {
      k = neighborhood_complex(g);
    } else if (o.kind == "lovasz") {
      k = lovasz_complex(g).complex;
    } else {
      enforce(o, g.size(), graph_cap, "vertex count");
      const HomComplex h = hom_k2(g);
      std::vector<std::size_t> cells;
      for (const auto& c : h.cells) {
        if (cells.size() <= static_cast<std::size_t>(c.dim())) cells.resize(c.dim() + 1, 0);
        ++cells[c.dim()];
      }
      out << "cells by dimension: " << fvec(cells) << "\n";
      out << "subdivision:\n";
      k = hom_k2_subdivision(g);
    }
  } else if (o.kind == "gamma" || o.kind == "jl") {
    const BoundedLattice l = load_lattice(o);
    if (o.kind == "jl") {
      enforce(o, l.size(), lattice_cap, "lattice size");
      k = bounded_below_complex(l);
    } else {
      k = o.crosscut.empty() ? atom_crosscut_complex(l) : crosscut_complex(l, crosscut_from_arg(o.crosscut, l));
    }
  } else if (o.kind == "dgn" || o.kind == "partition") {
    if (o.n < 1) throw InputError("pass the size n, e.g. `build " + o.kind + " 4`");
    enforce(o, static_cast<std::size_t>(o.n), partition_cap, "n");
    if (o.kind == "dgn") {
      k = disconnected_graphs_complex(o.n);
    } else {
      const auto p = partition_lattice(o.n, o.n);
      artifact = lattice_to_json(p.lattice);
      out << "elements: " << p.lattice.size() << "\n";
      out << "order complex of the proper part:\n";
      k = order_complex(proper_part(p.lattice));
    }
  }
  if (artifact.empty()) artifact = complex_to_json(k);
  print_complex(out, k);
  if (!o.output.empty()) write_file(o.output, artifact);
  return ok;
}

std::vector<Label> parse_face(const std::string& text) {
  if (text.empty()) throw InputError("x2stellar needs --face, e.g. --face \"1 2\"");
  if (text.front() == '[') {
    const auto k = parse_complex("{\"facets\": [" + text + "]}");
    if (k.facets().size() != 1) throw InputError("--face must name a single face");
    return k.facets().front();
  }
  std::istringstream in(text);
  std::vector<Label> out;
  for (std::string w; in >> w;) out.push_back(Label::atom(w));
  return out;
}

int cmd_deform(const Options& o, std::ostream& out) {
  DeformationCertificate cert;
  if (o.kind == "hom2n" || o.kind == "bdnbhd2lovasz") {
    const Graph g = load_graph(o);
    enforce(o, g.size(), graph_cap, "vertex count");
    if (o.kind == "hom2n") {
      const auto r = hom_to_neighborhood_deformation(g, o.unsafe ? std::numeric_limits<std::size_t>::max() : subdivision_cap);
      for (std::size_t i = 0; i < r.stages.size(); ++i) {
        const auto& s = r.stages[i];
        out << "stage " << i + 1 << " " << s.name << ": collapses=" << s.collapses << " expansions=" << s.expansions
            << " start_f=" << fvec(s.start_f) << " end_f=" << fvec(s.end_f) << "\n";
      }
      cert = r.certificate;
    } else {
      cert = neighborhood_to_lovasz(g);
    }
  } else if (o.kind == "jl2order" || o.kind == "bdgamma2order") {
    const BoundedLattice l = load_lattice(o);
    if (o.kind == "jl2order") {
      enforce(o, l.size(), lattice_cap, "lattice size");
      cert = jl_deformation(l);
    } else {
      enforce(o, subdivision_size_bound(atom_crosscut_complex(l)), subdivision_cap, "face bound of the subdivision");
      cert = gamma_deformation(l).combined;
    }
  } else {
    const SimplicialComplex k = load_complex(o);
    if (o.kind == "x2bd") {
      enforce(o, subdivision_size_bound(k), subdivision_cap, "face bound of the subdivision");
      cert = bd_deformation(k);
    } else {
      cert = stellar_deformation(k, parse_face(o.face));
    }
  }
  if (!o.output.empty()) write_file(o.output, certificate_to_jsonl(cert));
  out << "collapses=" << cert.collapse_count() << " expansions=" << cert.expansion_count()
      << " start_f=" << fvec(cert.start().f_vector()) << " end_f=" << fvec(cert.end().f_vector()) << "\n";
  const VerifyReport rep = verify_certificate(cert);
  if (!rep.ok) {
    out << "verified: no (step " << *rep.failed_step << ": " << rep.reason << ")\n";
    return verification_failed;
  }
  if (!homology_equal(homology_or_empty(cert.start()), homology_or_empty(cert.end()))) {
    out << "verified: no (homology of the ends differs)\n";
    return verification_failed;
  }
  out << "verified: yes\n";
  return ok;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const DeformationCertificate cert = parse_certificate(input_text(o));
  const VerifyReport rep = verify_certificate(cert);
  out << "steps: " << cert.steps().size() << "\n";
  if (!rep.ok) {
    if (*rep.failed_step == cert.steps().size())
      out << "FAILED: " << rep.reason << "\n";
    else
      out << "FAILED at step " << *rep.failed_step << ": " << rep.reason << "\n";
    return verification_failed;
  }
  if (!homology_equal(homology_or_empty(cert.start()), homology_or_empty(cert.end()))) {
    out << "FAILED: start and end have different homology\n";
    return verification_failed;
  }
  out << "ok\n";
  return ok;
}

int cmd_homology(const Options& o, std::ostream& out) {
  const SimplicialComplex k = load_complex(o);
  const HomologySummary h = homology_or_empty(k);
  for (std::size_t d = 0; d < h.dims.size(); ++d) out << "H_" << d << ": " << describe(h.dims[d]) << "\n";
  out << "euler: " << h.euler() << "\n";
  if (!o.output.empty()) write_file(o.output, homology_to_json(h));
  return ok;
}

ordered_json homology_json(const HomologySummary& h) { return ordered_json::parse(homology_to_json(h)); }

ordered_json probe_case(const BoundedLattice& l, const std::vector<ElementIndex>& c) {
  const SimplicialComplex gamma = crosscut_complex(l, c);
  std::vector<ElementIndex> inner;
  for (ElementIndex x : crosscut_elements(l, c))
    if (x != l.bottom() && x != l.top()) inner.push_back(x);
  const SimplicialComplex lc = order_complex(l.poset().induced(inner));
  const SimplicialComplex full = order_complex(proper_part(l));
  const auto hg = homology_or_empty(gamma), hlc = homology_or_empty(lc), hl = homology_or_empty(full);

  const DeformationCertificate retraction = crosscut_deformation(l, c);
  const bool retraction_ok = verify_certificate(retraction).ok && retraction.end() == lc;

  ordered_json j;
  j["lattice"] = ordered_json::parse(lattice_to_json(l));
  ordered_json names = ordered_json::array();
  for (ElementIndex x : c) names.push_back(ordered_json::parse(label_to_json(l.label(x))));
  j["crosscut"] = names;
  j["gamma_f"] = gamma.f_vector();
  j["lc_f"] = lc.f_vector();
  j["homology_gamma"] = homology_json(hg);
  j["homology_lc"] = homology_json(hlc);
  j["homology_l"] = homology_json(hl);
  j["gamma_matches_lc"] = homology_equal(hg, hlc);
  j["gamma_matches_l"] = homology_equal(hg, hl);
  j["retraction_verified"] = retraction_ok;
  return j;
}

int cmd_probe(const Options& o, std::ostream& out) {
  ordered_json cases = ordered_json::array();
  if (!o.input.empty() || !o.builtin.empty()) {
    const BoundedLattice l = load_lattice(o);
    cases.push_back(probe_case(l, crosscut_from_arg(o.crosscut.empty() ? "atoms" : o.crosscut, l)));
  } else {
    Rng rng(o.seed);
    const std::size_t max_elements = cap_of(o, probe_elements);
    for (std::size_t t = 0; t < o.trials; ++t) {
      const BoundedLattice l = random_lattice(rng, probe_points, probe_generators, max_elements);
      cases.push_back(probe_case(l, random_crosscut(rng, l)));
    }
  }
  std::size_t lc_mismatch = 0, l_mismatch = 0, retraction_fail = 0;
  ordered_json mismatches = ordered_json::array();
  for (std::size_t i = 0; i < cases.size(); ++i) {
    auto& c = cases[i];
    c["trial"] = i;
    const bool a = c["gamma_matches_lc"], b = c["gamma_matches_l"], r = c["retraction_verified"];
    lc_mismatch += !a;
    l_mismatch += !b;
    retraction_fail += !r;
    if (!a || !b || !r) mismatches.push_back(i);
    out << "trial " << i << ": |L|=" << c["lattice"]["elements"].size() << " |C|=" << c["crosscut"].size()
        << " gamma~LC " << (a ? "match" : "MISMATCH") << " gamma~L " << (b ? "match" : "MISMATCH")
        << " retraction " << (r ? "verified" : "FAILED") << "\n";
  }
  ordered_json report;
  report["seed"] = o.seed;
  report["trials"] = cases.size();
  report["note"] =
      "homology is a necessary condition only; matches do not establish equal simple homotopy type";
  report["gamma_vs_lc_mismatches"] = lc_mismatch;
  report["gamma_vs_l_mismatches"] = l_mismatch;
  report["retraction_failures"] = retraction_fail;
  report["mismatched_trials"] = mismatches;
  report["cases"] = cases;
  out << "cases: " << cases.size() << " gamma~LC mismatches: " << lc_mismatch << " gamma~L mismatches: " << l_mismatch
      << " retraction failures: " << retraction_fail << "\n";
  if (!o.output.empty()) write_file(o.output, report.dump(1) + "\n");
  return ok;
}

// Stages 1, 2, 4 and 5 of the Hom-to-N pipeline are the four sequences of
// collapses and expansions; 3 and 6 only undo subdivisions.
bool four_sequences_nondegenerate(const PipelineResult& r) {
  for (std::size_t s : {0, 1, 3, 4})
    if (r.stages[s].collapses + r.stages[s].expansions == 0) return false;
  return true;
}

// Connected graphs on 2..max vertices, labelled 1..n, in edge-mask order.
int cmd_probe_graphs(const Options& o, std::ostream& out) {
  const std::size_t max_n = o.cap ? o.cap : witness_vertices;
  if (!o.unsafe && max_n > graph_cap)
    throw SizeCapError("vertex bound " + std::to_string(max_n) + " is over the cap of " + std::to_string(graph_cap) +
                       " (pass --unsafe-size)");
  std::size_t searched = 0, skipped = 0;
  ordered_json report;
  report["max_vertices"] = max_n;
  for (std::size_t n = 2; n <= max_n && !report.contains("witness"); ++n) {
    std::vector<Label> verts;
    std::vector<std::pair<Label, Label>> pairs;
    for (std::size_t i = 1; i <= n; ++i) verts.push_back(Label::atom(std::to_string(i)));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(verts[i], verts[j]);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
      std::vector<std::pair<Label, Label>> edges;
      for (std::size_t e = 0; e < pairs.size(); ++e)
        if ((mask >> e) & 1u) edges.push_back(pairs[e]);
      const Graph g = Graph::from_edges(verts, edges);
      if (!g.is_connected()) continue;
      ++searched;
      try {
        const PipelineResult r = hom_to_neighborhood_deformation(g, o.unsafe ? std::numeric_limits<std::size_t>::max() : subdivision_cap);
        if (!four_sequences_nondegenerate(r)) continue;
        ordered_json stages = ordered_json::array();
        for (const auto& st : r.stages)
          stages.push_back({{"name", st.name}, {"collapses", st.collapses}, {"expansions", st.expansions}});
        report["witness"] = {{"graph", ordered_json::parse(graph_to_json(g))}, {"stages", stages}};
        out << "witness on " << n << " vertices, edges:";
        for (const auto& [a, b] : edges) out << " " << a.str() << "-" << b.str();
        out << "\n";
        for (const auto& st : r.stages)
          out << "  " << st.name << ": collapses=" << st.collapses << " expansions=" << st.expansions << "\n";
        break;
      } catch (const SizeCapError&) {
        ++skipped;
      }
    }
  }
  report["graphs_searched"] = searched;
  report["skipped_over_budget"] = skipped;
  if (!report.contains("witness")) out << "no witness among " << searched << " graphs\n";
  out << "searched: " << searched << " skipped: " << skipped << "\n";
  if (!o.output.empty()) write_file(o.output, report.dump(1) + "\n");
  return ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Formal deformations between graph and lattice complexes, with replayable certificates."};
  app.name("combdeform");
  app.require_subcommand(1);
  Options o;

  const auto add_common = [&](CLI::App* s) {
    s->add_option("--input,-i", o.input, "input file");
    s->add_option("--builtin,-b", o.builtin, "named input: K<n> C<n> P<n>, B<n> Pi<n> chain<n>, simplex<n> sphere<n>");
    s->add_option("--output,-o", o.output, "output file");
    s->add_option("--cap", o.cap, "size cap for this command (0 = default)");
    s->add_flag("--unsafe-size", o.unsafe, "disable size caps");
  };

  auto* build = app.add_subcommand("build", "build a complex or lattice, print its f-vector and Euler characteristic");
  build->add_option("kind", o.kind, "what to build")
      ->required()
      ->check(CLI::IsMember({"neighborhood", "lovasz", "homk2", "gamma", "jl", "dgn", "partition"}));
  build->add_option("n", o.n, "size for dgn and partition");
  build->add_option("--crosscut", o.crosscut, "gamma with a crosscut: atoms, coatoms, JSON list or file");
  add_common(build);

  auto* deform = app.add_subcommand("deform", "produce and verify a deformation certificate");
  deform->add_option("pipeline", o.kind, "which deformation")
      ->required()
      ->check(CLI::IsMember({"hom2n", "bdnbhd2lovasz", "jl2order", "bdgamma2order", "x2bd", "x2stellar"}));
  deform->add_option("--face", o.face, "face to subdivide for x2stellar, e.g. \"1 2\"");
  add_common(deform);

  auto* verify = app.add_subcommand("verify", "replay a certificate; exit 0 iff it is valid");
  add_common(verify);

  auto* hom = app.add_subcommand("homology", "integral homology of a complex");
  add_common(hom);

  auto* probe = app.add_subcommand("probe-conjecture", "compare Gamma(C,L) with Delta(bar L_C) on random lattices");
  probe->add_option("--seed", o.seed, "random seed");
  probe->add_option("--trials", o.trials, "number of random (L, C) pairs");
  probe->add_option("--crosscut", o.crosscut, "crosscut for a single --input/--builtin lattice");
  probe->add_flag("--graphs", o.graphs,
                  "instead, search small connected graphs for one where all four Hom-to-N sequences are nonempty "
                  "(--cap sets the vertex bound)");
  add_common(probe);

  std::vector<std::string> argv_store{"combdeform"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return e.get_exit_code() == 0 ? ok : input_error;
  }

  try {
    if (*build) return cmd_build(o, out);
    if (*deform) return cmd_deform(o, out);
    if (*verify) return cmd_verify(o, out);
    if (*hom) return cmd_homology(o, out);
    return o.graphs ? cmd_probe_graphs(o, out) : cmd_probe(o, out);
  } catch (const SizeCapError& e) {
    err << "size cap: " << e.what() << "\n";
    return size_cap;
  } catch (const PipelineError& e) {
    err << "pipeline failed at " << e.what() << "\n";
    return verification_failed;
  } catch (const InternalError& e) {
    err << "internal check failed: " << e.what() << "\n";
    return verification_failed;
  } catch (const Error& e) {
    err << "input error: " << e.what() << "\n";
    return input_error;
  }
}

}  // namespace combdeform::cli
