#include "combdeform/label.hpp"

#include <algorithm>

namespace combdeform {
namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

bool is_numeric(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

std::strong_ordering compare_atoms(const std::string& a, const std::string& b) {
  const bool na = is_numeric(a);
  const bool nb = is_numeric(b);
  if (na != nb) return na ? std::strong_ordering::less : std::strong_ordering::greater;
  if (na) {
    auto strip = [](const std::string& s) {
      const auto pos = s.find_first_not_of('0');
      return pos == std::string::npos ? std::string_view("0") : std::string_view(s).substr(pos);
    };
    const auto sa = strip(a);
    const auto sb = strip(b);
    if (sa.size() != sb.size()) return sa.size() <=> sb.size();
    if (auto c = sa.compare(sb); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    // "01" and "1" are distinct labels; fall back to the raw spelling.
  }
  const int c = a.compare(b);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace

Label::Label() : Label(Label::atom("")) {}

Label Label::atom(std::string name) {
  auto rep = std::make_shared<Rep>();
  rep->is_atom = true;
  rep->hash = mix(0x51ed27, std::hash<std::string>{}(name));
  rep->name = std::move(name);
  return Label(std::move(rep));
}

Label Label::tuple(std::vector<Label> items) {
  auto rep = std::make_shared<Rep>();
  rep->is_atom = false;
  std::size_t h = 0x7a11e;
  for (const auto& it : items) h = mix(h, it.hash());
  rep->hash = mix(h, items.size());
  rep->items = std::move(items);
  return Label(std::move(rep));
}

std::string Label::str() const {
  if (is_atom()) return name();
  std::string out = "(";
  bool first = true;
  for (const auto& it : items()) {
    if (!first) out += ',';
    first = false;
    out += it.str();
  }
  out += ')';
  return out;
}

bool operator==(const Label& a, const Label& b) noexcept {
  if (a.rep_ == b.rep_) return true;
  if (a.hash() != b.hash() || a.is_atom() != b.is_atom()) return false;
  if (a.is_atom()) return a.name() == b.name();
  return std::equal(a.items().begin(), a.items().end(), b.items().begin(), b.items().end());
}

std::strong_ordering operator<=>(const Label& a, const Label& b) noexcept {
  if (a.rep_ == b.rep_) return std::strong_ordering::equal;
  if (a.is_atom() != b.is_atom()) return a.is_atom() ? std::strong_ordering::less : std::strong_ordering::greater;
  if (a.is_atom()) return compare_atoms(a.name(), b.name());
  const auto ia = a.items();
  const auto ib = b.items();
  const std::size_t n = std::min(ia.size(), ib.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = ia[i] <=> ib[i]; c != 0) return c;
  }
  return ia.size() <=> ib.size();
}

Label sorted_tuple(std::vector<Label> items) {
  std::sort(items.begin(), items.end());
  return Label::tuple(std::move(items));
}

}  // namespace combdeform
