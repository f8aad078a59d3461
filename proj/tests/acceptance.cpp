// Acceptance suite: one PASS/FAIL line per criterion. Exit status is 0 only
// if every criterion passes. Tolerances and corpus seeds are fixed here.

#include <chrono>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "cli.hpp"
#include "combdeform/deformation.hpp"
#include "combdeform/graph_complexes.hpp"
#include "combdeform/homology.hpp"
#include "combdeform/io.hpp"
#include "combdeform/lattice_complexes.hpp"
#include "combdeform/pipeline.hpp"
#include "combdeform/random.hpp"
#include "json.hpp"
#include "oracles.hpp"

using namespace combdeform;
namespace fs = std::filesystem;

namespace {

constexpr double hom2n_seconds = 30.0;
constexpr double lovasz_seconds = 5.0;
constexpr double dg5_seconds = 60.0;
constexpr std::uint64_t graph_seed = 20240601;
constexpr int random_graphs = 20;
constexpr int max_graph_vertices = 6;
constexpr std::uint64_t edge_num = 1, edge_den = 3;
constexpr std::uint64_t lattice_seed = 777;
constexpr int random_lattices = 30;
constexpr std::size_t max_lattice_elements = 12;
constexpr std::uint64_t nonatomic_seed = 4242;
constexpr int nonatomic_lattices = 10;
constexpr std::size_t collapse_search_cap = 64;
constexpr int probe_trials = 50;
constexpr std::uint64_t probe_seed = 1;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

using Clock = std::chrono::steady_clock;
double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::string fmt(double x) {
  std::ostringstream s;
  s.precision(3);
  s << x;
  return s.str();
}

std::string graph_name(const Graph& g) {
  std::string s = std::to_string(g.size()) + " vertices:";
  for (auto [u, v] : g.edges()) s += " " + g.label(u).str() + "-" + g.label(v).str();
  return s;
}

std::vector<std::pair<std::string, Graph>> graph_corpus() {
  std::vector<std::pair<std::string, Graph>> out{{"K2", complete_graph(2)}, {"K3", complete_graph(3)},
                                                 {"K4", complete_graph(4)}, {"C4", cycle_graph(4)},
                                                 {"C5", cycle_graph(5)},    {"C6", cycle_graph(6)},
                                                 {"P4", path_graph(4)}};
  Rng rng(graph_seed);
  for (int i = 0; i < random_graphs; ++i) {
    Graph g = random_connected_graph(rng, 2, max_graph_vertices, edge_num, edge_den);
    out.emplace_back(graph_name(g), g);
  }
  return out;
}

std::vector<std::pair<std::string, BoundedLattice>> lattice_corpus() {
  std::vector<std::pair<std::string, BoundedLattice>> out{
      {"B2", boolean_lattice(2)},           {"B3", boolean_lattice(3)},           {"B4", boolean_lattice(4)},
      {"Pi3", partition_lattice(3).lattice}, {"Pi4", partition_lattice(4).lattice}, {"3-chain", chain_lattice(3)}};
  Rng rng(lattice_seed);
  for (int i = 0; i < random_lattices; ++i)
    out.emplace_back("random #" + std::to_string(i), random_lattice(rng, 6, 6, max_lattice_elements));
  return out;
}

Outcome criterion1(const std::vector<std::pair<std::string, Graph>>& graphs) {
  Outcome o;
  double worst = 0;
  for (const auto& [name, g] : graphs) {
    const auto t = Clock::now();
    try {
      const auto r = hom_to_neighborhood_deformation(g);
      const auto v = verify_certificate(r.certificate);
      if (!v.ok) o.fail(name + ": " + v.reason);
      if (!(r.certificate.start() == hom_k2_subdivision(g))) o.fail(name + ": start is not Bd Hom(K2,G)");
      if (!(r.certificate.end() == neighborhood_complex(g))) o.fail(name + ": end is not N(G)");
      if (!homology_equal(r.certificate.start(), r.certificate.end())) o.fail(name + ": homology differs");
    } catch (const std::exception& e) {
      o.fail(name + ": " + e.what());
    }
    const double s = seconds_since(t);
    worst = std::max(worst, s);
    if (s > hom2n_seconds) o.fail(name + ": took " + fmt(s) + " s");
  }
  if (o.pass) o.detail = std::to_string(graphs.size()) + " graphs, slowest " + fmt(worst) + " s";
  return o;
}

Outcome criterion2(const std::vector<std::pair<std::string, Graph>>& graphs) {
  Outcome o;
  double worst = 0;
  for (const auto& [name, g] : graphs) {
    const auto t = Clock::now();
    try {
      const auto m = neighborhood_lovasz_matching(g);
      if (oracle::faces_of(m.critical) != oracle::lovasz(oracle::PlainGraph(g)))
        o.fail(name + ": critical cells are not the chains of Im N");
      const auto c = matching_to_collapses(m);
      const auto v = verify_certificate(c);
      if (!v.ok) o.fail(name + ": " + v.reason);
      if (!(c.start() == barycentric_subdivision(neighborhood_complex(g)))) o.fail(name + ": start is not Bd N(G)");
      if (!(c.end() == lovasz_complex(g).complex)) o.fail(name + ": end is not Lo(G)");
    } catch (const std::exception& e) {
      o.fail(name + ": " + e.what());
    }
    const double s = seconds_since(t);
    worst = std::max(worst, s);
    if (s > lovasz_seconds) o.fail(name + ": took " + fmt(s) + " s");
  }
  if (o.pass) o.detail = std::to_string(graphs.size()) + " graphs, slowest " + fmt(worst) + " s";
  return o;
}

Outcome criterion3(const std::vector<std::pair<std::string, BoundedLattice>>& lattices) {
  Outcome o;
  std::size_t steps = 0;
  for (const auto& [name, l] : lattices) {
    try {
      const auto m = jl_matching(l);
      if (!check_acyclic(m.matching).acyclic) o.fail(name + ": matching has a cycle");
      const auto chains = oracle::proper_chains(l);
      if (oracle::faces_of(m.critical) != chains) o.fail(name + ": critical cells are not the chains of bar L");
      const auto c = matching_to_collapses(m);
      const auto v = verify_certificate(c);
      if (!v.ok) o.fail(name + ": " + v.reason);
      if (!(replay_prefix(c, c.steps().size()) == order_complex(proper_part(l))) || oracle::faces_of(c.end()) != chains)
        o.fail(name + ": replay does not end at Delta(bar L)");
      steps += c.steps().size();
    } catch (const std::exception& e) {
      o.fail(name + ": " + e.what());
    }
  }
  if (o.pass) o.detail = std::to_string(lattices.size()) + " lattices, " + std::to_string(steps) + " collapses";
  return o;
}

Outcome criterion4() {
  Outcome o;
  const std::vector<std::pair<std::string, BoundedLattice>> atomic{{"B3", boolean_lattice(3)},
                                                                   {"B4", boolean_lattice(4)},
                                                                   {"Pi3", partition_lattice(3).lattice},
                                                                   {"Pi4", partition_lattice(4).lattice}};
  for (const auto& [name, l] : atomic) {
    try {
      const auto d = gamma_deformation(l);
      const auto v = verify_certificate(d.combined);
      if (!v.ok) o.fail(name + ": " + v.reason);
      if (d.combined.expansion_count() != 0) o.fail(name + ": expected a pure collapse");
      if (d.combined.start().f_vector() != barycentric_subdivision(atom_crosscut_complex(l)).f_vector())
        o.fail(name + ": start is not Bd Gamma(L)");
      if (!(d.combined.end() == order_complex(proper_part(l)))) o.fail(name + ": end is not Delta(bar L)");
    } catch (const std::exception& e) {
      o.fail(name + ": " + e.what());
    }
  }
  Rng rng(nonatomic_seed);
  int done = 0;
  while (done < nonatomic_lattices) {
    const auto l = random_lattice(rng, 6, 6, max_lattice_elements);
    if (l.is_atomic()) continue;
    const std::string name = "non-atomic #" + std::to_string(done++);
    try {
      const auto d = gamma_deformation(l);
      const auto a = verify_certificate(d.to_atomic), b = verify_certificate(d.from_proper);
      if (!a.ok) o.fail(name + " Bd Gamma(L) side: " + a.reason);
      if (!b.ok) o.fail(name + " Delta(bar L) side: " + b.reason);
      if (d.to_atomic.expansion_count() + d.from_proper.expansion_count() != 0) o.fail(name + ": expansions present");
      const auto la = order_complex(proper_part(atomic_sublattice(l)));
      if (!(d.to_atomic.end() == la) || !(d.from_proper.end() == la)) o.fail(name + ": junction is not Delta(bar L_a)");
      if (!(d.from_proper.start() == order_complex(proper_part(l)))) o.fail(name + ": start is not Delta(bar L)");
    } catch (const std::exception& e) {
      o.fail(name + ": " + e.what());
    }
  }
  if (o.pass) o.detail = "4 atomic, " + std::to_string(nonatomic_lattices) + " non-atomic";
  return o;
}

Outcome criterion5() {
  Outcome o;
  double dg5 = 0;
  for (int n = 3; n <= 5; ++n) {
    const auto t = Clock::now();
    const auto p = partition_lattice(n);
    const auto gamma = atom_crosscut_complex(p.lattice).relabeled([&](const Label& x) {
      return partition_atom_edge(p, *p.lattice.index_of(x));
    });
    const auto dg = disconnected_graphs_complex(n);
    if (!(gamma == dg)) o.fail("n=" + std::to_string(n) + ": complexes differ");
    if (n == 5) {
      dg5 = seconds_since(t);
      if (dg.vertex_count() != 10) o.fail("DG5 does not have 10 vertices");
      if (dg5 > dg5_seconds) o.fail("n=5 took " + fmt(dg5) + " s");
    }
  }
  if (o.pass) o.detail = "n=3,4,5; n=5 in " + fmt(dg5) + " s";
  return o;
}

std::vector<std::size_t> bettis(const SimplicialComplex& k) {
  std::vector<std::size_t> out;
  for (const auto& g : homology(k).dims) out.push_back(g.betti);
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

bool torsion_free(const SimplicialComplex& k) {
  for (const auto& g : homology(k).dims)
    if (!g.torsion.empty()) return false;
  return true;
}

Outcome criterion6() {
  Outcome o;
  using V = std::vector<std::size_t>;
  const auto pi4 = order_complex(proper_part(partition_lattice(4).lattice));
  if (bettis(pi4) != V{1, 6} || !torsion_free(pi4)) o.fail("Delta(bar Pi4) is not (1, 6)");
  const V spheres[] = {V{2}, V{1, 1}, V{1, 0, 1}};
  for (int n = 2; n <= 4; ++n) {
    const auto k = hom_k2_subdivision(complete_graph(n));
    if (bettis(k) != spheres[n - 2] || !torsion_free(k)) o.fail("Hom(K2,K" + std::to_string(n) + ") is not a sphere");
  }
  const auto c5 = neighborhood_complex(cycle_graph(5));
  if (bettis(c5) != V{1, 1} || !torsion_free(c5)) o.fail("N(C5) is not a circle");
  if (bettis(atom_crosscut_complex(partition_lattice(3).lattice)) != V{3}) o.fail("Gamma(Pi3) does not have 3 points");
  if (o.pass) o.detail = "Delta(bar Pi4) (1,6); Hom(K2,Kn) ~ S^(n-2), n=2..4; N(C5) ~ S^1; Gamma(Pi3) 3 points";
  return o;
}

Outcome criterion7() {
  Outcome o;
  std::vector<std::vector<std::vector<Label>>> corpus;
  for (int n = 1; n <= 4; ++n)
    for (auto& f : oracle::complexes_on(n)) corpus.push_back(std::move(f));
  corpus.push_back({{oracle::L(1), oracle::L(2), oracle::L(3)},
                    {oracle::L(1), oracle::L(2), oracle::L(4)},
                    {oracle::L(1), oracle::L(3), oracle::L(4)},
                    {oracle::L(2), oracle::L(3), oracle::L(4)}});
  std::size_t searched = 0, skipped = 0;
  for (const auto& facets : corpus) {
    const auto k = SimplicialComplex::from_facets(facets);
    const auto c = bd_deformation(k);
    const auto v = verify_certificate(c);
    if (!v.ok) o.fail("x2bd certificate rejected: " + v.reason);
    if (!(c.end() == barycentric_subdivision(k)) || oracle::faces_of(c.end()) != oracle::barycentric(oracle::faces_of(k)))
      o.fail("x2bd does not end at Bd K");

    // Rebuild the schedule move by move and search each collapse phase.
    std::vector<std::size_t> order(k.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return k.simplex(a).size() > k.simplex(b).size(); });
    SimplicialComplex current = k;
    std::vector<DeformationStep> all;
    for (std::size_t i : order) {
      const auto sigma = k.labels(k.simplex(i));
      const auto move = stellar_deformation(current, sigma);
      all.insert(all.end(), move.steps().begin(), move.steps().end());
      const auto coned = replay_prefix(move, move.expansion_count());
      if (coned.size() <= collapse_search_cap) {
        ++searched;
        if (!brute_force_collapse_search(coned, move.end(), collapse_search_cap))
          o.fail("no collapse sequence found after coning at " + face_label(sigma).str());
      } else {
        ++skipped;
      }
      current = move.end();
    }
    if (all != c.steps()) o.fail("x2bd steps differ from the stellar moves");
  }
  if (searched == 0) o.fail("no stellar move fell within the search cap");
  if (o.pass)
    o.detail = std::to_string(corpus.size()) + " complexes; " + std::to_string(searched) +
               " collapse phases searched, " + std::to_string(skipped) + " above the cap of " +
               std::to_string(collapse_search_cap) + " faces";
  return o;
}

Outcome criterion8(const std::vector<std::pair<std::string, Graph>>& graphs) {
  Outcome o;
  for (const auto& [name, g] : graphs) {
    const auto r = lovasz_involution_free(g);
    if (!r.checked || !r.free) o.fail(name + ": " + (r.notice.empty() ? "involution has a fixed point" : r.notice));
  }
  if (o.pass) o.detail = std::to_string(graphs.size()) + " loopless graphs";
  return o;
}

int cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  return cli::run(args, out, err);
}

Outcome criterion9(const std::vector<std::pair<std::string, Graph>>& graphs,
                   const std::vector<std::pair<std::string, BoundedLattice>>& lattices, const fs::path& dir) {
  Outcome o;
  for (const auto& [name, g] : graphs) {
    const auto a = certificate_to_jsonl(hom_to_neighborhood_deformation(g).certificate);
    const auto b = certificate_to_jsonl(hom_to_neighborhood_deformation(g).certificate);
    if (a != b) o.fail(name + ": hom2n certificates differ");
    if (certificate_to_jsonl(neighborhood_to_lovasz(g)) != certificate_to_jsonl(neighborhood_to_lovasz(g)))
      o.fail(name + ": Bd N(G) certificates differ");
  }
  for (const auto& [name, l] : lattices) {
    if (certificate_to_jsonl(jl_deformation(l)) != certificate_to_jsonl(jl_deformation(l)))
      o.fail(name + ": J(L) certificates differ");
    if (certificate_to_jsonl(gamma_deformation(l).combined) != certificate_to_jsonl(gamma_deformation(l).combined))
      o.fail(name + ": Gamma certificates differ");
  }
  for (const std::string& b : {"K4", "C6"}) {
    const auto p1 = (dir / ("hom2n_" + b + "_1.jsonl")).string(), p2 = (dir / ("hom2n_" + b + "_2.jsonl")).string();
    if (cli({"deform", "hom2n", "-b", b, "-o", p1}) != 0 || cli({"deform", "hom2n", "-b", b, "-o", p2}) != 0)
      o.fail("CLI hom2n on " + b + " failed");
    else if (read_file(p1) != read_file(p2))
      o.fail("CLI hom2n on " + b + " is not byte-identical");
  }
  const auto r1 = (dir / "probe_repeat_1.json").string(), r2 = (dir / "probe_repeat_2.json").string();
  cli({"probe-conjecture", "--seed", "3", "--trials", "10", "-o", r1});
  cli({"probe-conjecture", "--seed", "3", "--trials", "10", "-o", r2});
  if (read_file(r1) != read_file(r2)) o.fail("probe reports differ");
  if (o.pass) o.detail = "library and CLI reruns byte-identical";
  return o;
}

Outcome criterion10(const fs::path& dir) {
  Outcome o;
  const auto path = (dir / "probe_report.json").string();
  const int code = cli({"probe-conjecture", "--seed", std::to_string(probe_seed), "--trials",
                        std::to_string(probe_trials), "-o", path});
  if (code != 0) {
    o.fail("probe exited with " + std::to_string(code));
    return o;
  }
  const auto report = nlohmann::json::parse(read_file(path));
  const auto& cases = report.at("cases");
  if (cases.size() != static_cast<std::size_t>(probe_trials)) o.fail("report has " + std::to_string(cases.size()) + " cases");
  std::size_t lc = 0, l = 0, flagged = 0;
  for (const auto& c : cases) {
    const bool a = c.at("gamma_matches_lc"), b = c.at("gamma_matches_l"), r = c.at("retraction_verified");
    lc += !a;
    l += !b;
    flagged += (!a || !b || !r);
  }
  if (report.at("gamma_vs_lc_mismatches") != lc || report.at("gamma_vs_l_mismatches") != l ||
      report.at("mismatched_trials").size() != flagged)
    o.fail("report totals do not account for every case");
  if (o.pass)
    o.detail = std::to_string(cases.size()) + " pairs, " + std::to_string(lc) + " Gamma(C,L)/Delta(bar L_C) and " +
               std::to_string(l) + " Gamma(C,L)/Delta(bar L) homology mismatches; report " + path;
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const fs::path dir = argc > 1 ? fs::path(argv[1]) : fs::path("acceptance_artifacts");
  fs::create_directories(dir);
  const auto graphs = graph_corpus();
  const auto lattices = lattice_corpus();

  struct Entry {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Entry> criteria{
      {"Bd Hom(K2,G) to N(G) pipeline", [&] { return criterion1(graphs); }},
      {"Bd N(G) collapses onto Lo(G)", [&] { return criterion2(graphs); }},
      {"J(L) collapses onto Delta(bar L)", [&] { return criterion3(lattices); }},
      {"Bd Gamma(L) and Delta(bar L)", [&] { return criterion4(); }},
      {"DG_n equals Gamma(Pi_n)", [&] { return criterion5(); }},
      {"homology spot values", [&] { return criterion6(); }},
      {"subdivision deformations", [&] { return criterion7(); }},
      {"free involution on Lo(G)", [&] { return criterion8(graphs); }},
      {"determinism", [&] { return criterion9(graphs, lattices, dir); }},
      {"crosscut conjecture probe", [&] { return criterion10(dir); }},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto t = Clock::now();
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    failed += !o.pass;
    std::cout << "criterion " << i + 1 << " (" << criteria[i].name << "): " << (o.pass ? "PASS" : "FAIL") << " - "
              << o.detail << " [" << fmt(seconds_since(t)) << " s]" << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
