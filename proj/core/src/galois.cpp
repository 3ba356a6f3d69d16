#include "fanorat/galois.hpp"

#include <algorithm>
#include <set>

namespace fanorat {

Perm perm_identity(int degree) {
  Perm p(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) p[static_cast<std::size_t>(i)] = i;
  return p;
}

Perm perm_compose(const Perm& a, const Perm& b) {
  if (a.size() != b.size()) throw MathError("permutation degree mismatch");
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = a[static_cast<std::size_t>(b[i])];
  return r;
}

Perm perm_inverse(const Perm& a) {
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[static_cast<std::size_t>(a[i])] = static_cast<int>(i);
  return r;
}

std::string perm_to_cycles(const Perm& a) {
  std::string out;
  std::vector<bool> seen(a.size(), false);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (seen[i] || a[i] == static_cast<int>(i)) continue;
    out += "(";
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out += " ";
      out += std::to_string(j + 1);
      first = false;
      j = static_cast<std::size_t>(a[j]);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

Perm perm_from_cycles(int degree, const std::string& text) {
  Perm p = perm_identity(degree);
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] != '(') {
      if (text[i] == ' ') {
        ++i;
        continue;
      }
      throw MathError("malformed cycle notation: " + text);
    }
    std::vector<int> cycle;
    ++i;
    while (i < text.size() && text[i] != ')') {
      while (i < text.size() && (text[i] == ' ' || text[i] == ',')) ++i;
      if (i >= text.size() || text[i] == ')') break;
      int v = 0;
      bool got = false;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
        v = v * 10 + (text[i] - '0');
        got = true;
        ++i;
      }
      if (!got) throw MathError("malformed cycle notation: " + text);
      if (v < 1 || v > degree) throw MathError("cycle entry out of range: " + text);
      cycle.push_back(v - 1);
    }
    if (i >= text.size()) throw MathError("unterminated cycle: " + text);
    ++i;  // skip ')'
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      int from = cycle[k];
      int to = cycle[(k + 1) % cycle.size()];
      if (p[static_cast<std::size_t>(from)] != from)
        throw MathError("repeated entry in cycle notation: " + text);
      p[static_cast<std::size_t>(from)] = to;
    }
    // entries repeated across cycles also collide through the check above
  }
  return p;
}

PermGroup::PermGroup(int degree, std::vector<Perm> generators)
    : degree_(degree), generators_(std::move(generators)) {
  if (degree_ < 1) throw MathError("permutation degree must be positive");
  for (const auto& g : generators_) {
    if (static_cast<int>(g.size()) != degree_)
      throw MathError("generator degree mismatch");
    std::vector<bool> seen(g.size(), false);
    for (int v : g) {
      if (v < 0 || v >= degree_ || seen[static_cast<std::size_t>(v)])
        throw MathError("generator is not a permutation");
      seen[static_cast<std::size_t>(v)] = true;
    }
  }
  std::set<Perm> closed{perm_identity(degree_)};
  std::vector<Perm> frontier(closed.begin(), closed.end());
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& e : frontier)
      for (const auto& g : generators_) {
        Perm ge = perm_compose(g, e);
        if (closed.insert(ge).second) next.push_back(std::move(ge));
      }
    frontier = std::move(next);
  }
  elements_.assign(closed.begin(), closed.end());

  for (const auto& e : elements_)
    if (!closed.count(perm_inverse(e)))
      throw MathError("closure is not inverse-closed");
  long long factorial = 1;
  for (int i = 2; i <= degree_; ++i) factorial *= i;
  if (factorial % order() != 0)
    throw MathError("group order does not divide the degree factorial");
}

bool PermGroup::contains(const Perm& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

std::vector<std::vector<int>> PermGroup::orbits() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(static_cast<std::size_t>(degree_), false);
  for (int s = 0; s < degree_; ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    std::vector<int> orbit{s};
    seen[static_cast<std::size_t>(s)] = true;
    for (std::size_t k = 0; k < orbit.size(); ++k)
      for (const auto& g : elements_) {
        int img = g[static_cast<std::size_t>(orbit[k])];
        if (!seen[static_cast<std::size_t>(img)]) {
          seen[static_cast<std::size_t>(img)] = true;
          orbit.push_back(img);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

bool PermGroup::is_transitive() const { return orbits().size() == 1; }

std::vector<std::vector<int>> PermGroup::cycle_type_census() const {
  std::vector<std::vector<int>> census;
  for (const auto& e : elements_) {
    std::vector<int> type;
    std::vector<bool> seen(e.size(), false);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (seen[i]) continue;
      int len = 0;
      std::size_t j = i;
      while (!seen[j]) {
        seen[j] = true;
        ++len;
        j = static_cast<std::size_t>(e[j]);
      }
      type.push_back(len);
    }
    std::sort(type.rbegin(), type.rend());
    census.push_back(std::move(type));
  }
  return census;
}

int invariant_rank(const PermGroup& g) { return static_cast<int>(g.orbits().size()); }

namespace {

const std::vector<Perm>& double_transpositions() {
  static const std::vector<Perm> kDt{{1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  return kDt;
}

}  // namespace

bool contains_klein(const PermGroup& g) {
  if (g.degree() != 4) throw MathError("Klein-group test needs degree 4");
  for (const auto& t : double_transpositions())
    if (!g.contains(t)) return false;
  return true;
}

std::string classify_transitive_s4(const PermGroup& g) {
  if (g.degree() != 4) throw MathError("classification needs degree 4");
  if (!g.is_transitive()) return "not transitive";
  switch (g.order()) {
    case 24:
      return "S4";
    case 12:
      return "A4";
    case 8:
      return "D4";
    case 4:
      return contains_klein(g) ? "V4" : "C4";
    default:
      throw MathError("transitive degree-4 group of unexpected order " +
                      std::to_string(g.order()));
  }
}

std::vector<PermGroup> all_subgroups_s4() {
  PermGroup s4(4, {perm_from_cycles(4, "(1 2)"), perm_from_cycles(4, "(1 2 3 4)")});
  std::set<std::vector<Perm>> seen;
  std::vector<PermGroup> out;
  for (const auto& a : s4.elements())
    for (const auto& b : s4.elements()) {
      PermGroup h(4, {a, b});
      if (seen.insert(h.elements()).second) out.push_back(std::move(h));
    }
  return out;
}

const std::vector<FanoType>& fano_table() {
  static const std::vector<FanoType> kTable{
      {FanoTag::x33, "(3,3)", 1, 2, 20, 11, 3},
      {FanoTag::x1111, "(1,1,1,1)", 1, 4, 24, 13, 1},
      {FanoTag::x44, "(4,4)", 1, 2, 28, 15, 0},
      {FanoTag::x222, "(2,2,2)", 1, 3, 30, 16, 0},
      {FanoTag::x22, "(2,2)", 2, 2, 48, 25, 0},
      {FanoTag::x111, "(1,1,1)", 2, 3, 48, 25, 0},
  };
  return kTable;
}

const FanoType& fano_type(FanoTag tag) {
  for (const auto& t : fano_table())
    if (t.tag == tag) return t;
  throw MathError("unknown type tag");
}

FanoTag parse_fano_tag(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != '(' && c != ')' && c != ' ') s += c;
  for (const auto& t : fano_table()) {
    std::string plain;
    for (char c : t.name)
      if (c != '(' && c != ')') plain += c;
    if (s == plain) return t.tag;
  }
  throw MathError("unknown type: " + text);
}

HilbertCounts hilbert_component_counts(const FanoType& t) {
  if (t.index != 1)
    throw MathError("curve component counts cover only the index-1 types");
  HilbertCounts c;
  c.lines_components = t.rho_bar;
  switch (t.tag) {
    case FanoTag::x222:
      c.conics_components = 3;
      c.cubics_through_point_components = 1;
      break;
    case FanoTag::x44:
      c.conics_components = 1;
      c.cubics_through_point_components = 2;
      break;
    case FanoTag::x33:
      c.conics_components = 1;
      c.cubics_through_point_components = 2;
      break;
    case FanoTag::x1111:
      c.conics_components = 6;
      c.cubics_through_point_components = 8;
      break;
    default:
      throw MathError("curve component counts cover only the index-1 types");
  }
  return c;
}

int lines_through_point_length(const FanoType& t, bool any_line_through_x) {
  if (t.index != 1)
    throw MathError("line counts through a point cover only the index-1 types");
  return any_line_through_x ? t.rho_bar : 0;
}

std::string tristate_name(TriState s) {
  switch (s) {
    case TriState::yes:
      return "yes";
    case TriState::no:
      return "no";
    case TriState::open:
      return "open";
  }
  throw MathError("bad tristate");
}

Verdict verdict(const FanoType& t, bool has_k_point) {
  Verdict v;
  if (!has_k_point) {
    v.unirational = false;
    v.rational = TriState::no;
    v.reason = "no_rational_point";
    return v;
  }
  v.unirational = true;
  switch (t.tag) {
    case FanoTag::x33:
      v.rational = TriState::no;
      v.reason = "never_rational";
      break;
    case FanoTag::x1111:
      v.rational = TriState::open;
      v.reason = "irrationality_conjectural";
      break;
    default:
      v.rational = TriState::yes;
      v.reason = "rational_iff_point";
      break;
  }
  return v;
}

}  // namespace fanorat
