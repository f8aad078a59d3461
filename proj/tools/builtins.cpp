#include "builtins.hpp"

#include <charconv>
#include <optional>

#include "combdeform/errors.hpp"
#include "combdeform/graph_complexes.hpp"
#include "combdeform/io.hpp"

namespace combdeform::cli {
namespace {

// "K4" with prefix "K" -> 4
std::optional<int> suffix_number(const std::string& name, const std::string& prefix) {
  if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix) != 0) return std::nullopt;
  int n = 0;
  const char* first = name.data() + prefix.size();
  const char* last = name.data() + name.size();
  auto [ptr, ec] = std::from_chars(first, last, n);
  if (ec != std::errc() || ptr != last) return std::nullopt;
  return n;
}

std::vector<Label> letters(int n) {
  std::vector<Label> out;
  for (int i = 0; i < n; ++i) out.push_back(Label::atom(std::to_string(i)));
  return out;
}

}  // namespace

Graph builtin_graph(const std::string& name) {
  if (auto n = suffix_number(name, "K"); n && *n >= 2) return complete_graph(*n);
  if (auto n = suffix_number(name, "C"); n && *n >= 3) return cycle_graph(*n);
  if (auto n = suffix_number(name, "P"); n && *n >= 2) return path_graph(*n);
  throw InputError("unknown builtin graph \"" + name + "\" (expected K<n>, C<n> or P<n>)");
}

BoundedLattice builtin_lattice(const std::string& name) {
  if (auto n = suffix_number(name, "Pi"); n && *n >= 1) return partition_lattice(*n).lattice;
  if (auto n = suffix_number(name, "B"); n && *n >= 1) return boolean_lattice(*n);
  if (auto n = suffix_number(name, "chain"); n && *n >= 2) return chain_lattice(*n);
  throw InputError("unknown builtin lattice \"" + name + "\" (expected B<n>, Pi<n> or chain<n>)");
}

SimplicialComplex builtin_complex(const std::string& name) {
  if (auto n = suffix_number(name, "simplex"); n && *n >= 0 && *n < 16)
    return SimplicialComplex::from_facets({letters(*n + 1)});
  if (auto n = suffix_number(name, "sphere"); n && *n >= 0 && *n < 15) {
    std::vector<std::vector<Label>> facets;
    const auto all = letters(*n + 2);
    for (std::size_t drop = 0; drop < all.size(); ++drop) {
      auto f = all;
      f.erase(f.begin() + static_cast<std::ptrdiff_t>(drop));
      facets.push_back(std::move(f));
    }
    return SimplicialComplex::from_facets(facets);
  }
  throw InputError("unknown builtin complex \"" + name + "\" (expected simplex<n> or sphere<n>)");
}

std::vector<ElementIndex> crosscut_from_arg(const std::string& arg, const BoundedLattice& l) {
  if (arg == "atoms") return l.atoms();
  if (arg == "coatoms") return l.poset().lower_covers(l.top());
  if (arg.find_first_not_of(" \t") != std::string::npos && arg[arg.find_first_not_of(" \t")] == '[')
    return parse_crosscut(arg, l);
  return parse_crosscut(read_file(arg), l);
}

}  // namespace combdeform::cli
