// Command line front end. Every command prints a deterministic plain-text
// report; --out copies the report to a file, --json writes a machine-readable
// sidecar with exact values as strings. Exit codes: 0 all checks passed,
// 1 a check or expectation failed, 2 usage or malformed input,
// 3 mathematical precondition or resource failure.

#include <algorithm>
#include <array>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fanorat/chow.hpp"
#include "fanorat/cohomology.hpp"
#include "fanorat/degeneration.hpp"
#include "fanorat/determinantal.hpp"
#include "fanorat/field_spec.hpp"
#include "fanorat/fixture_io.hpp"
#include "fanorat/galois.hpp"
#include "fanorat/quartic_smooth.hpp"
#include "fanorat/toric_link.hpp"

#ifndef FANORAT_DEFAULT_DATA_DIR
#define FANORAT_DEFAULT_DATA_DIR "data"
#endif

namespace {

using namespace fanorat;
using nlohmann::json;

struct Out {
  std::ostringstream text;
  json sidecar;
  bool failed = false;

  void line(const std::string& s) { text << s << "\n"; }
  void check(const std::string& label, bool ok) {
    line(label + ": " + (ok ? "ok" : "FAILED"));
    if (!ok) failed = true;
  }
};

int finish(Out& out, const std::string& out_path, const std::string& json_path) {
  std::string report = out.text.str();
  std::cout << report;
  if (!out_path.empty()) {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot write report to " + out_path);
    f << report;
  }
  if (!json_path.empty()) {
    std::ofstream f(json_path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot write sidecar to " + json_path);
    f << out.sidecar.dump(2) << "\n";
  }
  return out.failed ? 1 : 0;
}

// Parsing user-supplied mathematical text is an input problem, not a
// computation failure, so the module-level error is downgraded here.
template <class Fn>
auto as_input(Fn&& fn) {
  try {
    return fn();
  } catch (const MathError& e) {
    throw std::invalid_argument(e.what());
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string trimmed(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  for (const auto& part : split(s, ',')) {
    std::string t = trimmed(part);
    try {
      std::size_t used = 0;
      int v = std::stoi(t, &used);
      if (used != t.size()) throw std::invalid_argument(t);
      out.push_back(v);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad integer list: " + s);
    }
  }
  return out;
}

template <class F>
std::vector<typename F::Elem> parse_elem_list(const F& f, const std::string& s) {
  std::vector<typename F::Elem> out;
  for (const auto& part : split(s, ','))
    out.push_back(fanorat::detail::parse_elem(f, trimmed(part)));
  return out;
}

std::string factors_to_string(const std::vector<Int>& fs) {
  std::string out = "[";
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (i) out += ", ";
    out += fs[i].str();
  }
  return out + "]";
}

template <class F>
std::string poly_to_string(const F& f, const MultiPoly<F>& q) {
  if (q.is_zero()) return "0";
  const BlockStructure& bs = q.vars();
  std::string out;
  for (const auto& [e, c] : q.terms()) {
    std::string mono;
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += bs.var_name(static_cast<int>(v));
      if (e[v] > 1) mono += "^" + std::to_string(e[v]);
    }
    std::string cs = f.to_string(c);
    std::string term;
    if (mono.empty())
      term = cs;
    else if (cs == "1")
      term = mono;
    else if (cs == "-1")
      term = "-" + mono;
    else
      term = cs + "*" + mono;
    if (out.empty())
      out = term;
    else if (term[0] == '-')
      out += " - " + term.substr(1);
    else
      out += " + " + term;
  }
  return out;
}

template <class F>
std::string vec_to_string(const F& f, const std::vector<typename F::Elem>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += f.to_string(v[i]);
  }
  return out + ")";
}

// ---------------------------------------------------------------- table ---

struct StoredRow {
  std::string name;
  long long index = 0, rho = 0, degree = 0, genus = 0, h12 = 0;
};

std::vector<StoredRow> read_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open constants file " + path);
  std::vector<StoredRow> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    StoredRow r;
    if (!(ls >> r.name >> r.index >> r.rho >> r.degree >> r.genus >> r.h12))
      throw std::invalid_argument("malformed constants line: " + line);
    rows.push_back(r);
  }
  return rows;
}

long long recomputed_degree(FanoTag tag) {
  auto ci = [](std::vector<int> dims, std::vector<std::vector<long long>> div) {
    return ci_anticanonical_degree(dims, div).degree.convert_to<long long>();
  };
  switch (tag) {
    case FanoTag::x33:
      return ci({3, 3}, {{1, 1}, {1, 1}, {1, 1}});
    case FanoTag::x1111:
      return ci({1, 1, 1, 1}, {{1, 1, 1, 1}});
    case FanoTag::x44:
      // quadric threefold blown up along a rational quartic curve
      return cube_on_blowup(curve_blowup_products(54, 12, 0), 1, -1);
    case FanoTag::x222:
      return ci({2, 2, 2}, {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
    case FanoTag::x22:
      return ci({2, 2}, {{1, 1}});
    case FanoTag::x111:
      return ci({1, 1, 1}, {});
  }
  throw MathError("unknown type tag");
}

int cmd_table(const std::string& constants, const std::string& out_path,
              const std::string& json_path) {
  Out out;
  auto stored = read_table_file(constants);
  out.line("deformation families, recomputed and diffed against " + constants);
  out.line("");
  {
    std::ostringstream h;
    h << std::left << std::setw(12) << "type" << std::right << std::setw(6) << "index"
      << std::setw(9) << "rho_bar" << std::setw(8) << "degree" << std::setw(7) << "genus"
      << std::setw(6) << "h12" << "  status";
    out.line(h.str());
  }
  json rows = json::array();
  bool all_ok = true;
  std::vector<std::string> diffs;
  for (const auto& t : fano_table()) {
    long long deg = recomputed_degree(t.tag);
    long long genus = deg / 2 + 1;
    const StoredRow* file_row = nullptr;
    for (const auto& r : stored)
      if (r.name == t.name) file_row = &r;
    std::vector<std::string> bad;
    auto want = [&](const std::string& what, long long stored_v, long long v) {
      if (stored_v != v)
        bad.push_back(t.name + " " + what + ": stored " + std::to_string(stored_v) +
                      ", recomputed " + std::to_string(v));
    };
    if (!file_row) {
      bad.push_back(t.name + ": row missing from the constants file");
    } else {
      want("degree", file_row->degree, deg);
      want("genus", file_row->genus, genus);
      want("index", file_row->index, t.index);
      want("rho_bar", file_row->rho, t.rho_bar);
      want("h12", file_row->h12, t.h12);
    }
    std::ostringstream r;
    r << std::left << std::setw(12) << t.name << std::right << std::setw(6) << t.index
      << std::setw(9) << t.rho_bar << std::setw(8) << deg << std::setw(7) << genus
      << std::setw(6) << t.h12 << "  " << (bad.empty() ? "OK" : "MISMATCH");
    out.line(r.str());
    rows.push_back({{"type", t.name},
                    {"index", t.index},
                    {"rho_bar", t.rho_bar},
                    {"degree", deg},
                    {"genus", genus},
                    {"h12", t.h12},
                    {"status", bad.empty() ? "ok" : "mismatch"}});
    if (!bad.empty()) all_ok = false;
    diffs.insert(diffs.end(), bad.begin(), bad.end());
  }
  if (static_cast<int>(stored.size()) != static_cast<int>(fano_table().size())) {
    all_ok = false;
    diffs.push_back("constants file has " + std::to_string(stored.size()) +
                    " rows, expected " + std::to_string(fano_table().size()));
  }
  out.line("");
  for (const auto& d : diffs) out.line("diff: " + d);
  out.check("recomputed table matches the stored constants", all_ok);
  out.sidecar = {{"command", "table"}, {"rows", rows}, {"match", all_ok}};
  return finish(out, out_path, json_path);
}

// -------------------------------------------------------------- verdict ---

std::vector<Perm> parse_generators(int degree, const std::string& text) {
  std::vector<Perm> gens;
  for (const auto& g : split(text, ';')) {
    std::string s = trimmed(g);
    if (s.empty() || s == "()") continue;
    gens.push_back(as_input([&] { return perm_from_cycles(degree, s); }));
  }
  return gens;
}

int cmd_verdict(const std::string& type_text, bool has_point, const std::string& group_text,
                const std::string& out_path, const std::string& json_path) {
  Out out;
  const FanoType& t = fano_type(as_input([&] { return parse_fano_tag(type_text); }));
  std::vector<Perm> gens = parse_generators(t.rho_bar, group_text);
  PermGroup g(t.rho_bar, gens);
  out.line("type: " + t.name + "  (index " + std::to_string(t.index) + ", rho_bar " +
           std::to_string(t.rho_bar) + ", degree " + std::to_string(t.degree) + ", genus " +
           std::to_string(t.genus) + ")");
  std::string gen_text;
  for (const auto& p : g.generators()) {
    if (!gen_text.empty()) gen_text += "; ";
    gen_text += perm_to_cycles(p);
  }
  if (gen_text.empty()) gen_text = "trivial";
  out.line("galois action on the geometric picard generators: " + gen_text + " (order " +
           std::to_string(g.order()) + ")");
  int rank = invariant_rank(g);
  out.line("ground-field picard rank (invariant rank): " + std::to_string(rank));
  if (rank != 1)
    throw MathError("the ground-field picard rank is " + std::to_string(rank) +
                    "; the rationality dichotomy needs rank one");
  out.line(std::string("k-point: ") + (has_point ? "yes" : "no"));
  Verdict v = verdict(t, has_point);
  std::string rat = v.rational == TriState::yes    ? "rational"
                    : v.rational == TriState::no   ? "not rational"
                                                   : "rationality open";
  std::string summary = std::string(v.unirational ? "unirational" : "not unirational") + "; " + rat;
  out.line("verdict: " + summary);
  out.line("reason: " + v.reason);
  if (t.index == 1) {
    HilbertCounts hc = hilbert_component_counts(t);
    out.line("curve components: lines " + std::to_string(hc.lines_components) + ", conics " +
             std::to_string(hc.conics_components) + ", twisted cubics through a point " +
             std::to_string(hc.cubics_through_point_components));
  }
  out.sidecar = {{"command", "verdict"},
                 {"type", t.name},
                 {"k_point", has_point},
                 {"invariant_rank", rank},
                 {"unirational", v.unirational},
                 {"rational", tristate_name(v.rational)},
                 {"reason", v.reason},
                 {"summary", summary}};
  return finish(out, out_path, json_path);
}

// ----------------------------------------------------------- cohomology ---

struct NamedGroup {
  int degree;
  std::vector<std::string> gens;
};

const std::map<std::string, NamedGroup>& named_groups() {
  static const std::map<std::string, NamedGroup> k{
      {"C1", {1, {}}},
      {"C2", {2, {"(1 2)"}}},
      {"C3", {3, {"(1 2 3)"}}},
      {"C4", {4, {"(1 2 3 4)"}}},
      {"C5", {5, {"(1 2 3 4 5)"}}},
      {"C6", {6, {"(1 2 3 4 5 6)"}}},
      {"V4", {4, {"(1 2)(3 4)", "(1 3)(2 4)"}}},
      {"D4", {4, {"(1 2 3 4)", "(1 3)"}}},
      {"A4", {4, {"(1 2 3)", "(1 2)(3 4)"}}},
      {"S4", {4, {"(1 2)", "(1 2 3 4)"}}},
  };
  return k;
}

PermGroup resolve_group(const std::string& name, const std::string& gens_text, int letters) {
  if (!name.empty()) {
    auto it = named_groups().find(name);
    if (it == named_groups().end())
      throw std::invalid_argument("unknown group name " + name +
                                  " (known: C1..C6, V4, D4, A4, S4; or use --generators)");
    std::vector<Perm> gens;
    for (const auto& s : it->second.gens)
      gens.push_back(perm_from_cycles(it->second.degree, s));
    return PermGroup(it->second.degree, gens);
  }
  if (gens_text.empty())
    throw std::invalid_argument("need a group name or --generators with --letters");
  if (letters < 1) throw std::invalid_argument("--letters must be at least 1");
  return PermGroup(letters, parse_generators(letters, gens_text));
}

int cmd_cohomology(const std::string& name, const std::string& module_kind, int degree,
                   const std::string& gens_text, int letters, const std::string& out_path,
                   const std::string& json_path) {
  if (degree < 0 || degree > 3)
    throw std::invalid_argument("cohomological degree must lie in 0..3");
  if (module_kind != "trivial" && module_kind != "perm")
    throw std::invalid_argument("--module must be \"trivial\" or \"perm\"");
  Out out;
  PermGroup pg = resolve_group(name, gens_text, letters);
  out.line("group: " + (name.empty() ? std::string("custom") : name) + " of order " +
           std::to_string(pg.order()) + ", acting on " + std::to_string(pg.degree()) +
           " letters");
  GModule m = module_kind == "perm" ? permutation_module(pg)
                                    : trivial_module(GroupTable::from_perm_group(pg));
  out.line(std::string("module: ") +
           (module_kind == "perm"
                ? "permutation lattice Z^" + std::to_string(pg.degree())
                : "trivial lattice Z"));
  CohomologyResult res = cohomology(m, degree);
  out.line("H^" + std::to_string(degree) + " = " + factors_to_string(res.factors));
  out.check("coboundary composite vanishes", res.composite_checked);
  json side = {{"command", "cohomology"},
               {"group", name.empty() ? "custom" : name},
               {"order", pg.order()},
               {"module", module_kind},
               {"degree", degree},
               {"composite_checked", res.composite_checked}};
  json jf = json::array();
  for (const auto& x : res.factors) jf.push_back(x.str());
  side["factors"] = jf;
  if (pg.degree() == 4 && pg.is_transitive()) {
    std::string cls = classify_transitive_s4(pg);
    bool obstructed = norm_one_obstruction(pg);
    bool klein = contains_klein(pg);
    out.line("transitive degree-4 class: " + cls);
    out.line(std::string("norm-one torus obstruction: ") + (obstructed ? "nonzero" : "zero"));
    out.line(std::string("contains the klein four-group: ") + (klein ? "yes" : "no"));
    side["transitive_class"] = cls;
    side["norm_one_obstruction"] = obstructed;
    side["contains_klein"] = klein;
  }
  out.sidecar = side;
  return finish(out, out_path, json_path);
}

// ----------------------------------------------------------------- link ---

std::string join_terms(const std::vector<std::pair<long long, std::string>>& terms) {
  std::string out;
  for (const auto& [c, name] : terms) {
    if (c == 0) continue;
    long long a = c < 0 ? -c : c;
    std::string mag = a == 1 ? "" : std::to_string(a);
    if (out.empty())
      out += (c < 0 ? "-" : "") + mag + name;
    else
      out += (c > 0 ? " + " : " - ") + mag + name;
  }
  return out.empty() ? "0" : out;
}

std::string format_source_class(const DivClass& c, const LinkDims& dims) {
  std::vector<std::pair<long long, std::string>> terms;
  bool equal = dims.r > 1;
  for (int i = 1; i < dims.r; ++i)
    if (c.coeffs[static_cast<std::size_t>(i)] != c.coeffs[0]) equal = false;
  if (equal && c.coeffs[0] != 0) {
    terms.push_back({c.coeffs[0], "ΣH_i"});
  } else {
    for (int i = 0; i < dims.r; ++i)
      terms.push_back({c.coeffs[static_cast<std::size_t>(i)], "H_" + std::to_string(i + 1)});
  }
  terms.push_back({c.coeffs[static_cast<std::size_t>(dims.r)], "E"});
  return join_terms(terms);
}

std::string format_target_class(const DivClass& c, const LinkDims& dims) {
  std::vector<std::pair<long long, std::string>> terms;
  terms.push_back({c.coeffs[static_cast<std::size_t>(dims.r)], "h"});
  bool h_equal = dims.p > 1;
  for (int i = 1; i < dims.p; ++i)
    if (c.coeffs[static_cast<std::size_t>(i)] != c.coeffs[0]) h_equal = false;
  if (h_equal && c.coeffs[0] != 0) {
    terms.push_back({c.coeffs[0], "Σh_i"});
  } else {
    for (int i = 0; i < dims.p; ++i)
      terms.push_back({c.coeffs[static_cast<std::size_t>(i)], "h_" + std::to_string(i + 1)});
  }
  bool e_equal = dims.q > 1;
  for (int j = dims.p + 1; j < dims.r; ++j)
    if (c.coeffs[static_cast<std::size_t>(j)] != c.coeffs[static_cast<std::size_t>(dims.p)])
      e_equal = false;
  if (e_equal && c.coeffs[static_cast<std::size_t>(dims.p)] != 0) {
    terms.push_back({c.coeffs[static_cast<std::size_t>(dims.p)], "Σe_i"});
  } else {
    for (int j = dims.p; j < dims.r; ++j)
      terms.push_back({c.coeffs[static_cast<std::size_t>(j)], "e_" + std::to_string(j + 1)});
  }
  return join_terms(terms);
}

int cmd_link(const std::string& dims_text, const std::string& field_text, std::uint64_t seed,
             long long samples, const std::string& out_path, const std::string& json_path) {
  Out out;
  LinkDims dims = as_input([&] { return LinkDims(parse_int_list(dims_text)); });
  {
    std::string d;
    for (std::size_t i = 0; i < dims.n.size(); ++i)
      d += (i ? "," : "") + std::to_string(dims.n[i]);
    out.line("factor dimensions: (" + d + ")  r = " + std::to_string(dims.r) + "  p = " +
             std::to_string(dims.p) + "  q = " + std::to_string(dims.q));
  }
  DivisorClassMap cmap(dims);
  bool roundtrip = true;
  for (int i = 0; i <= dims.r; ++i) {
    DivClass b{"H,E", std::vector<long long>(static_cast<std::size_t>(dims.r + 1), 0)};
    b.coeffs[static_cast<std::size_t>(i)] = 1;
    if (!(cmap.backward(cmap.forward(b)) == b)) roundtrip = false;
    DivClass tb{"h,e,h", std::vector<long long>(static_cast<std::size_t>(dims.r + 1), 0)};
    tb.coeffs[static_cast<std::size_t>(i)] = 1;
    if (!(cmap.forward(cmap.backward(tb)) == tb)) roundtrip = false;
  }
  out.check("class maps compose to the identity", roundtrip);
  out.line("");
  out.line("class map (source to target):");
  std::vector<DivClass> sources;
  for (int i = 0; i < dims.r; ++i) {
    DivClass h{"H,E", std::vector<long long>(static_cast<std::size_t>(dims.r + 1), 0)};
    h.coeffs[static_cast<std::size_t>(i)] = 1;
    sources.push_back(h);
  }
  DivClass e{"H,E", std::vector<long long>(static_cast<std::size_t>(dims.r + 1), 0)};
  e.coeffs[static_cast<std::size_t>(dims.r)] = 1;
  sources.push_back(e);
  DivClass hsum{"H,E", std::vector<long long>(static_cast<std::size_t>(dims.r + 1), 1)};
  hsum.coeffs[static_cast<std::size_t>(dims.r)] = 0;
  sources.push_back(hsum);
  DivClass member = hsum;
  member.coeffs[static_cast<std::size_t>(dims.r)] = -1;
  sources.push_back(member);
  DivClass mk{"H,E", {}};
  for (int i = 0; i < dims.r; ++i)
    mk.coeffs.push_back(dims.n[static_cast<std::size_t>(i)] + 1);
  mk.coeffs.push_back(-(dims.total - 1));
  sources.push_back(mk);
  json fwd = json::array();
  for (const auto& c : sources) {
    DivClass img = cmap.forward(c);
    out.line("  " + format_source_class(c, dims) + "  ->  " + format_target_class(img, dims));
    fwd.push_back({{"source", c.coeffs}, {"target", img.coeffs}});
  }
  out.line("");
  out.line("class map (target to source):");
  json bwd = json::array();
  for (int i = 0; i <= dims.r; ++i) {
    DivClass tb{"h,e,h", std::vector<long long>(static_cast<std::size_t>(dims.r + 1), 0)};
    tb.coeffs[static_cast<std::size_t>(i)] = 1;
    DivClass img = cmap.backward(tb);
    out.line("  " + format_target_class(tb, dims) + "  ->  " + format_source_class(img, dims));
    bwd.push_back({{"source", tb.coeffs}, {"target", img.coeffs}});
  }
  out.line("");
  bool canon = canonical_class_check(dims);
  bool ample = ampleness_certificate(dims);
  out.check("canonical classes agree under the map", canon);
  out.check("positivity bookkeeping identities", ample);

  FieldSpec fs = parse_field_spec(field_text);
  if (fs.rational) throw std::invalid_argument("the stratum census needs a finite field");
  const FqField& f = finite_field_for(fs);
  Rng rng(seed);
  LinkConfig<FqField> cfg = make_link_config(f, dims);
  StratumCensus census = stratum_census(cfg, rng, samples);
  out.line("");
  out.line("stratum census over " + fs.name() + ", seed " + std::to_string(seed) + ", " +
           std::to_string(samples) + " open samples plus forced batches:");
  for (const auto& [k, v] : census.source_counts)
    out.line("  source " + k + ": " + std::to_string(v));
  for (const auto& [k, v] : census.target_counts)
    out.line("  target " + k + ": " + std::to_string(v));
  out.line("  indeterminate images: " + std::to_string(census.indeterminate));
  out.line("  correspondence violations: " + std::to_string(census.violations));
  out.line("  open-orbit collisions: " + std::to_string(census.collisions));
  out.check("census clean", census.violations == 0 && census.collisions == 0);

  json jc = {{"samples", census.samples},
             {"indeterminate", census.indeterminate},
             {"violations", census.violations},
             {"collisions", census.collisions},
             {"source_counts", census.source_counts},
             {"target_counts", census.target_counts}};
  out.sidecar = {{"command", "link"},       {"dims", dims.n},
                 {"forward", fwd},          {"backward", bwd},
                 {"roundtrip", roundtrip},  {"canonical_check", canon},
                 {"ampleness", ample},      {"census", jc},
                 {"field", fs.name()},      {"seed", seed}};
  return finish(out, out_path, json_path);
}

// ---------------------------------------------------------------- net33 ---

void diff_expectations(Out& out, const std::map<std::string, std::string>& expect,
                       const std::map<std::string, std::string>& got) {
  if (expect.empty()) {
    out.line("expectations: none in the fixture");
    return;
  }
  std::vector<std::string> mismatches;
  for (const auto& [k, v] : expect) {
    auto it = got.find(k);
    if (it == got.end())
      mismatches.push_back(k + ": expected " + v + ", but nothing was computed");
    else if (it->second != v)
      mismatches.push_back(k + ": expected " + v + ", computed " + it->second);
  }
  for (const auto& m : mismatches) out.line("  mismatch " + m);
  out.check("expectations (" + std::to_string(expect.size()) + ")", mismatches.empty());
}

template <class F>
void run_net33(const F& f, const NetFixture& fx, std::uint64_t seed, long long samples,
               const std::string& lambda_text, Out& out) {
  Net33<F> net = net33_from_fixture(f, fx);
  BasePoint33<F> x0 = base33_from_fixture(f, net, fx);
  out.line("net: three independent 4x4 forms; base point annihilates all three");
  std::map<std::string, std::string> got;
  LineDetection ld = lines_through_base_point(f, net, x0);
  out.line("line detection: left kernel " + std::to_string(ld.left_kernel_dim) +
           ", right kernel " + std::to_string(ld.right_kernel_dim) + " -> " +
           (ld.has_line ? "a line passes through the base point"
                        : "no line through the base point"));
  got["has_line"] = ld.has_line ? "true" : "false";
  got["left_kernel"] = std::to_string(ld.left_kernel_dim);
  got["right_kernel"] = std::to_string(ld.right_kernel_dim);

  Xi33<F> xi = build_xi_33(f, net, x0);
  bool deg_ok = xi33_degrees_ok(xi);
  out.check("structured matrix column bidegrees (1,1), (1,0), (0,1)", deg_ok);

  PlaneQuartic<F> quartic = discriminant_quartic(f, net);
  out.line(std::string("pencil determinant: ") +
           (quartic.degenerate ? "degenerate" : "plane quartic of degree 4"));
  got["quartic_degree"] = quartic.degenerate ? "degenerate" : "4";

  out.sidecar["has_line"] = ld.has_line;
  out.sidecar["quartic_degenerate"] = quartic.degenerate;

  if (!ld.has_line) {
    BidegreeSurface<F> surf = xplus_equation(f, net, x0);
    out.check("image equation has bidegree (2,2)", !surf.degenerate);
    got["image_bidegree"] = surf.degenerate ? "degenerate" : "(2,2)";
    if (!quartic.degenerate) {
      QuarticSmoothness sm = is_smooth_quartic(f, quartic.poly);
      out.line(std::string("discriminant smoothness: ") + (sm.smooth ? "smooth" : "singular") +
               " (" + sm.route + ")");
      if (sm.witness)
        out.line("  witness in degree " + std::to_string(sm.witness->d) + ": (" +
                 sm.witness->coords[0] + " : " + sm.witness->coords[1] + " : " +
                 sm.witness->coords[2] + ")");
      if (!sm.note.empty()) out.line("  note: " + sm.note);
      got["smooth"] = sm.smooth ? "true" : "false";
      out.sidecar["smooth"] = sm.smooth;
      out.sidecar["smoothness_route"] = sm.route;

      Rng rng(seed);
      long long agree = 0, singular_seen = 0, degenerate_fibers = 0, checked = 0;
      for (long long s = 0; s < samples; ++s) {
        std::vector<typename F::Elem> lambda(3, f.zero());
        bool zero = true;
        while (zero) {
          for (auto& x : lambda) x = f.random(rng);
          for (const auto& x : lambda)
            if (!f.is_zero(x)) zero = false;
        }
        ConicFiber<F> fib = conic_fiber(f, net, x0, lambda);
        if (fib.degenerate_fiber) {
          ++degenerate_fibers;
          continue;
        }
        ++checked;
        bool on_curve = f.is_zero(quartic.poly.evaluate(f, lambda));
        if (fib.is_singular_fiber == on_curve) ++agree;
        if (fib.is_singular_fiber) ++singular_seen;
      }
      out.line("fiber against discriminant: " + std::to_string(checked) +
               " sampled members, " + std::to_string(agree) + " agree, " +
               std::to_string(singular_seen) + " singular, " +
               std::to_string(degenerate_fibers) + " degenerate");
      out.check("fiber/discriminant agreement", agree == checked);
      got["fiber_agreement"] = agree == checked ? "true" : "false";
      out.sidecar["fiber_samples"] = checked;
      out.sidecar["fiber_agreement"] = agree == checked;
    }
  } else {
    out.line("fiber stage skipped: fibers need a base point with no line through it");
  }

  if (!lambda_text.empty()) {
    std::vector<typename F::Elem> lambda = parse_elem_list(f, lambda_text);
    ConicFiber<F> fib = conic_fiber(f, net, x0, lambda);
    out.line("fiber at lambda = " + vec_to_string(f, lambda) + ": " +
             (fib.degenerate_fiber      ? std::string("degenerate")
              : fib.is_singular_fiber   ? std::string("singular conic")
                                        : std::string("smooth conic")));
    if (!fib.degenerate_fiber && fib.is_singular_fiber) {
      FiberComponents<F> comps = singular_fiber_components(f, net, x0, lambda);
      if (comps.non_reduced) {
        out.line("  non-reduced fiber: the restricted block vanishes");
      } else {
        out.line("  component contracted in factor 1 at " +
                 vec_to_string(f, comps.one.pinned_ambient));
        out.line("  component contracted in factor 2 at " +
                 vec_to_string(f, comps.two.pinned_ambient));
        if (comps.coincident) out.line("  the two components touch (tangent member)");
      }
    }
  }

  diff_expectations(out, fx.expect, got);
  out.sidecar["computed"] = got;
}

int cmd_net33(const std::string& path, std::uint64_t seed, long long samples,
              const std::string& lambda_text, const std::string& out_path,
              const std::string& json_path) {
  Out out;
  NetFixture fx = load_net_fixture(path);
  FieldSpec fs = parse_field_spec(fx.field);
  out.line("fixture: " + path);
  out.line("field: " + fs.name());
  out.sidecar = {{"command", "net33"}, {"fixture", path}, {"field", fs.name()}, {"seed", seed}};
  if (fs.rational)
    run_net33(RationalField{}, fx, seed, samples, lambda_text, out);
  else
    run_net33(finite_field_for(fs), fx, seed, samples, lambda_text, out);
  return finish(out, out_path, json_path);
}

// --------------------------------------------------------------- net222 ---

template <class F>
void run_net222(const F& f, const NetFixture& fx, std::uint64_t seed, Out& out) {
  Net222<F> net = net222_from_fixture(f, fx);
  out.line("pair forms: all three nondegenerate; base triple annihilates each pair form");
  std::map<std::string, std::string> got;
  Xi222<F> xi = build_xi_222(f, net);
  bool deg_ok = xi222_degrees_ok(xi);
  out.line("column twists: (1,1,1), (1,1,0), (1,0,1), (0,1,1); row twists: (0,0,1), (0,1,0), (1,0,0)");
  out.check("structured matrix multidegrees with one structural zero per row", deg_ok);
  got["degrees_ok"] = deg_ok ? "true" : "false";

  Rng rng(seed);
  PairRestrictionCertificates cert = certify_pair_restrictions(f, xi, rng);
  static const std::array<std::array<int, 2>, 3> pairs{{{3, 4}, {2, 4}, {2, 3}}};
  bool all_found = true;
  for (int k = 0; k < 3; ++k) {
    bool okk = cert.rank_two_found[static_cast<std::size_t>(k)];
    all_found = all_found && okk;
    out.line("  columns (" + std::to_string(pairs[static_cast<std::size_t>(k)][0]) + "," +
             std::to_string(pairs[static_cast<std::size_t>(k)][1]) + "): " +
             (okk ? "rank two at sample " +
                        std::to_string(cert.samples_used[static_cast<std::size_t>(k)])
                  : "rank two not found"));
  }
  out.check("pair-restriction certificates", all_found);
  got["certificates"] = all_found ? "true" : "false";
  diff_expectations(out, fx.expect, got);
  out.sidecar["computed"] = got;
  out.sidecar["degrees_ok"] = deg_ok;
  out.sidecar["certificates"] = all_found;
}

int cmd_net222(const std::string& path, std::uint64_t seed, const std::string& out_path,
               const std::string& json_path) {
  Out out;
  NetFixture fx = load_net_fixture(path);
  FieldSpec fs = parse_field_spec(fx.field);
  out.line("fixture: " + path);
  out.line("field: " + fs.name());
  out.sidecar = {{"command", "net222"}, {"fixture", path}, {"field", fs.name()}, {"seed", seed}};
  if (fs.rational)
    run_net222(RationalField{}, fx, seed, out);
  else
    run_net222(finite_field_for(fs), fx, seed, out);
  return finish(out, out_path, json_path);
}

// ----------------------------------------------------------- degeneration ---

int cmd_deg_weights(const std::string& out_path, const std::string& json_path) {
  Out out;
  auto dec = weight_decomposition();
  out.line("torus weights of the sixteen multidegree-(1,1,1,1) monomials:");
  TorusWeight zero{};
  bool zero_double = false, others_simple = true;
  json jw = json::array();
  for (const auto& [w, masks] : dec) {
    std::string ms = "{";
    for (std::size_t i = 0; i < masks.size(); ++i)
      ms += (i ? ", " : "") + std::to_string(masks[i]);
    ms += "}";
    out.line("  " + w.to_string() + ": masks " + ms +
             (masks.size() > 1 ? "  (multiplicity " + std::to_string(masks.size()) + ")" : ""));
    if (w == zero)
      zero_double = masks.size() == 2 && masks[0] == 0 && masks[1] == 15;
    else if (masks.size() != 1)
      others_simple = false;
    jw.push_back({{"weight", w.w}, {"masks", masks}});
  }
  out.check("zero weight carried by exactly the two extreme monomials", zero_double);
  out.check("every nonzero weight is simple", others_simple);
  out.line("invariant pencil: spanned by the all-u and all-v monomials");
  out.sidecar = {{"command", "degeneration weights"},
                 {"weights", jw},
                 {"zero_weight_multiplicity_two", zero_double},
                 {"nonzero_weights_simple", others_simple}};
  return finish(out, out_path, json_path);
}

template <class F>
void run_deg_odp(const F& f, Out& out) {
  out.line("invariant member through the marked point: all-u monomial minus all-v monomial");
  auto pts = invariant_divisor_singular_points(f);
  out.line("singular points (u = 0 exactly in {p,q}, v = 0 elsewhere):");
  bool all_odp = true;
  json jp = json::array();
  for (const auto& pt : pts) {
    bool odp = pt.cert.constant_zero && pt.cert.linear_zero && pt.cert.quadratic_rank == 4;
    all_odp = all_odp && odp;
    out.line("  x_{" + std::to_string(pt.p) + "," + std::to_string(pt.q) +
             "}: chart equation " + poly_to_string(f, pt.cert.local_equation) +
             "; quadratic rank " + std::to_string(pt.cert.quadratic_rank) +
             (odp ? " -> ordinary double point" : " -> NOT an ordinary double point"));
    jp.push_back({{"p", pt.p},
                  {"q", pt.q},
                  {"constant_zero", pt.cert.constant_zero},
                  {"linear_zero", pt.cert.linear_zero},
                  {"quadratic_rank", pt.cert.quadratic_rank}});
  }
  out.check("exactly six invariant singular points", pts.size() == 6);
  out.check("all six are ordinary double points of rank four", all_odp);
  out.sidecar["points"] = jp;
  out.sidecar["all_odp"] = all_odp;
}

template <class F>
void run_deg_curves(const F& f, Out& out) {
  QuadrilinearForm<F> g = invariant_divisor_through(f, standard_marked_point(f));
  static const std::array<std::array<std::array<int, 2>, 2>, 3> configs{
      {{{{1, 2}, {3, 4}}}, {{{1, 3}, {2, 4}}}, {{{1, 4}, {2, 3}}}}};
  bool all_on = true;
  std::vector<std::array<int, 2>> labels;
  json jc = json::array();
  for (const auto& cfgp : configs) {
    OrbitCurve<F> c = orbit_curve(f, cfgp[0], cfgp[1]);
    MultiPoly<F> r = restrict_to_curve(f, g, c);
    bool on = r.is_zero();
    all_on = all_on && on;
    out.line("curve with (u:v) = (t:1) in factors {" + std::to_string(cfgp[0][0]) + "," +
             std::to_string(cfgp[0][1]) + "} and (1:t) in {" + std::to_string(cfgp[1][0]) +
             "," + std::to_string(cfgp[1][1]) + "}:");
    out.line(std::string("  restriction of the invariant member: ") +
             (on ? "identically zero (the curve lies on it)" : poly_to_string(f, r)));
    out.line("  limits: t -> 0 at x_{" + std::to_string(c.limit_zero_label[0]) + "," +
             std::to_string(c.limit_zero_label[1]) + "}, t -> infinity at x_{" +
             std::to_string(c.limit_infinity_label[0]) + "," +
             std::to_string(c.limit_infinity_label[1]) + "}");
    labels.push_back(c.limit_zero_label);
    labels.push_back(c.limit_infinity_label);
    jc.push_back({{"first", cfgp[0]},
                  {"second", cfgp[1]},
                  {"on_divisor", on},
                  {"limit_zero", c.limit_zero_label},
                  {"limit_infinity", c.limit_infinity_label}});
  }
  std::sort(labels.begin(), labels.end());
  bool partition = labels.size() == 6 &&
                   std::adjacent_find(labels.begin(), labels.end()) == labels.end();
  out.check("all three curves lie on the invariant member", all_on);
  out.check("the six singular points split into three disjoint incidence pairs", partition);
  out.sidecar["curves"] = jc;
  out.sidecar["partition"] = partition;
}

int cmd_deg_field_report(const std::string& which, const std::string& field_text,
                         const std::string& out_path, const std::string& json_path) {
  Out out;
  FieldSpec fs = parse_field_spec(field_text);
  out.line("coefficient field: " + fs.name());
  out.sidecar = {{"command", "degeneration " + which}, {"field", fs.name()}};
  if (fs.rational) {
    RationalField f;
    if (which == "odp")
      run_deg_odp(f, out);
    else
      run_deg_curves(f, out);
  } else {
    const FqField& f = finite_field_for(fs);
    if (which == "odp")
      run_deg_odp(f, out);
    else
      run_deg_curves(f, out);
  }
  return finish(out, out_path, json_path);
}

int cmd_deg_probe(const std::string& field_text, const std::string& t_text,
                  const std::string& second_path, std::uint32_t max_degree,
                  const std::string& out_path, const std::string& json_path) {
  Out out;
  FieldSpec fs = parse_field_spec(field_text);
  if (fs.rational || fs.d != 1)
    throw std::invalid_argument("the probe needs a prime finite field, e.g. F7");
  const FqField& f = finite_field_for(fs);
  QuadrilinearForm<FqField> second;
  std::string second_desc;
  if (!second_path.empty()) {
    QuadrilinearFixture qfx = load_quadrilinear_fixture(second_path);
    FieldSpec qfs = parse_field_spec(qfx.field);
    if (qfs.rational || qfs.p != fs.p || qfs.d != fs.d)
      throw std::invalid_argument("second-form fixture field " + qfx.field +
                                  " does not match " + fs.name());
    second = quadrilinear_from_fixture(f, qfx);
    second_desc = second_path;
  } else {
    long long total = 0;
    for (int m = 1; m < 16; ++m) {
      second.coeff[static_cast<std::size_t>(m)] = f.from_int(m);
      total += m;
    }
    second.coeff[0] = f.from_int(-total);
    second_desc = "built-in default (coefficient m at mask m, balanced at mask 0)";
  }
  std::vector<FqElem> ts;
  for (const auto& part : split(t_text, ','))
    ts.push_back(fanorat::detail::parse_elem(f, trimmed(part)));
  PencilProbeReport rep = pencil_smoothness_probe(f, second, ts, max_degree);
  out.line("pencil probe over " + fs.name() + "; member at t = invariant member + t * (second form)");
  out.line("second form: " + second_desc);
  out.line("extension degrees probed: 1.." + std::to_string(rep.max_degree));
  json jr = json::array();
  for (const auto& row : rep.rows) {
    std::string counts = "[";
    for (std::size_t i = 0; i < row.count_per_degree.size(); ++i)
      counts += (i ? ", " : "") + std::to_string(row.count_per_degree[i]);
    counts += "]";
    out.line("t = " + f.to_string(row.t) + ": singular point counts by degree " + counts +
             (row.smooth_member ? "; smooth through the probed degrees" : "; singular member"));
    json jpts = json::array();
    for (const auto& pt : row.base_field_points) {
      std::string s = "(";
      for (int i = 0; i < 8; ++i) {
        if (i == 4) s += " | ";
        else if (i) s += ", ";
        s += f.to_string(pt[static_cast<std::size_t>(i)]);
      }
      s += ")";
      out.line("    base-field singular point " + s);
      jpts.push_back(s);
    }
    jr.push_back({{"t", f.to_string(row.t)},
                  {"counts", row.count_per_degree},
                  {"smooth", row.smooth_member},
                  {"points", jpts}});
  }
  out.sidecar = {{"command", "degeneration probe"},
                 {"field", fs.name()},
                 {"second_form", second_desc},
                 {"max_degree", rep.max_degree},
                 {"rows", jr}};
  return finish(out, out_path, json_path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact workbench for rationality of geometrically rational Fano threefolds"};
  app.require_subcommand(1);

  std::string out_path, json_path;
  auto add_io = [&](CLI::App* cmd) {
    cmd->add_option("--out", out_path, "also write the text report to this file");
    cmd->add_option("--json", json_path, "write a JSON sidecar with exact values as strings");
  };

  auto* table = app.add_subcommand(
      "table", "recompute the family degrees and genera, diff against the stored constants");
  std::string constants = std::string(FANORAT_DEFAULT_DATA_DIR) + "/fano_table.tsv";
  table->add_option("--constants", constants, "constants file to diff against");
  add_io(table);

  auto* link = app.add_subcommand("link", "divisor class maps and stratum census of the toric link");
  std::string link_dims = "1,1,1,1", link_field = "F5";
  std::uint64_t link_seed = 0;
  long long link_samples = 100;
  link->add_option("--dims", link_dims, "factor dimensions, e.g. 3,2 or 1,1,1,1");
  link->add_option("--field", link_field, "finite field for the census, e.g. F5");
  link->add_option("--seed", link_seed, "census seed")->required();
  link->add_option("--samples", link_samples, "open-stratum sample count");
  add_io(link);

  auto* net33 = app.add_subcommand("net33", "pipeline over a net of 4x4 bilinear forms");
  std::string net33_path, net33_lambda;
  std::uint64_t net33_seed = 0;
  long long net33_samples = 50;
  net33->add_option("fixture", net33_path, "net fixture file")->required();
  net33->add_option("--seed", net33_seed, "sampling seed")->required();
  net33->add_option("--samples", net33_samples, "pencil members to sample");
  net33->add_option("--lambda", net33_lambda, "explicit pencil member, e.g. 1,0,3");
  add_io(net33);

  auto* net222 = app.add_subcommand("net222", "pipeline over a triple of pair forms");
  std::string net222_path;
  std::uint64_t net222_seed = 0;
  net222->add_option("fixture", net222_path, "pair-form fixture file")->required();
  net222->add_option("--seed", net222_seed, "certificate sampling seed")->required();
  add_io(net222);

  auto* verdict_cmd = app.add_subcommand("verdict", "rationality verdict for one family");
  std::string verdict_type, verdict_group;
  bool verdict_point = false;
  verdict_cmd->add_option("type", verdict_type, "family tag, e.g. \"(3,3)\"")->required();
  verdict_cmd->add_flag("--point", verdict_point, "the variety has a rational point");
  verdict_cmd->add_option("--group", verdict_group,
                          "galois generators in cycle notation, separated by ';'");
  add_io(verdict_cmd);

  auto* coh = app.add_subcommand("cohomology", "group cohomology of a lattice action");
  std::string coh_group, coh_module = "trivial", coh_gens;
  int coh_degree = 3, coh_letters = 0;
  coh->add_option("group", coh_group, "group name: C1..C6, V4, D4, A4, S4");
  coh->add_option("--module", coh_module, "trivial | perm");
  coh->add_option("--degree", coh_degree, "cohomological degree, 0..3");
  coh->add_option("--generators", coh_gens, "custom generators in cycle notation, ';' separated");
  coh->add_option("--letters", coh_letters, "letter count for custom generators");
  add_io(coh);

  auto* deg = app.add_subcommand("degeneration", "invariant divisor on the product of four lines");
  deg->require_subcommand(1);
  auto* degw = deg->add_subcommand("weights", "torus weight decomposition of the monomial basis");
  add_io(degw);
  std::string deg_field_odp = "Q", deg_field_curves = "Q";
  auto* dego = deg->add_subcommand("odp", "singular points with double-point certificates");
  dego->add_option("--field", deg_field_odp, "coefficient field, Q or F<p>[^d]");
  add_io(dego);
  auto* degc = deg->add_subcommand("curves", "invariant curves and their incidences");
  degc->add_option("--field", deg_field_curves, "coefficient field, Q or F<p>[^d]");
  add_io(degc);
  auto* degp = deg->add_subcommand("probe", "singular point census of pencil members");
  std::string probe_field = "F7", probe_t = "0", probe_second;
  std::uint32_t probe_maxdeg = 3;
  degp->add_option("--field", probe_field, "prime field, e.g. F7");
  degp->add_option("--t", probe_t, "comma-separated pencil parameters");
  degp->add_option("--second", probe_second, "fixture file with the second pencil form");
  degp->add_option("--max-degree", probe_maxdeg, "largest extension degree to census");
  add_io(degp);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (table->parsed()) return cmd_table(constants, out_path, json_path);
    if (link->parsed())
      return cmd_link(link_dims, link_field, link_seed, link_samples, out_path, json_path);
    if (net33->parsed())
      return cmd_net33(net33_path, net33_seed, net33_samples, net33_lambda, out_path, json_path);
    if (net222->parsed()) return cmd_net222(net222_path, net222_seed, out_path, json_path);
    if (verdict_cmd->parsed())
      return cmd_verdict(verdict_type, verdict_point, verdict_group, out_path, json_path);
    if (coh->parsed())
      return cmd_cohomology(coh_group, coh_module, coh_degree, coh_gens, coh_letters, out_path,
                            json_path);
    if (deg->parsed()) {
      if (degw->parsed()) return cmd_deg_weights(out_path, json_path);
      if (dego->parsed()) return cmd_deg_field_report("odp", deg_field_odp, out_path, json_path);
      if (degc->parsed())
        return cmd_deg_field_report("curves", deg_field_curves, out_path, json_path);
      if (degp->parsed())
        return cmd_deg_probe(probe_field, probe_t, probe_second, probe_maxdeg, out_path,
                             json_path);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const ResourceError& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return 3;
  } catch (const MathError& e) {
    std::cerr << "math error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
