#include "bicanon/tools/scenario.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <sstream>

#include "bicanon/beauville.hpp"
#include "bicanon/covers.hpp"
#include "bicanon/exact_linalg.hpp"
#include "bicanon/fermat.hpp"
#include "bicanon/grouplib.hpp"
#include "bicanon/linsys.hpp"
#include "bicanon/piclattice.hpp"
#include "bicanon/proofcheck.hpp"
#include "reader.hpp"

namespace bicanon::tools {

namespace {

using detail::located;
using detail::Node;
using grouplib::AbelianGroup;
using grouplib::Character;
using grouplib::GroupElement;
using piclattice::DivisorClass;

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string tuple_string(const std::vector<std::int64_t>& v) {
  std::vector<std::string> parts;
  for (auto x : v) parts.push_back(std::to_string(x));
  return "(" + join(parts, ",") + ")";
}

std::string group_name(const AbelianGroup& G) {
  const auto& m = G.moduli();
  if (std::all_of(m.begin(), m.end(), [&](auto n) { return n == m.front(); })) {
    return "Z" + std::to_string(m.front()) + (m.size() > 1 ? "^" + std::to_string(m.size()) : "");
  }
  std::vector<std::string> parts;
  for (auto n : m) parts.push_back("Z" + std::to_string(n));
  return join(parts, "×");
}

std::vector<std::string> element_names(const std::vector<GroupElement>& elements) {
  std::vector<std::string> out;
  for (const auto& g : elements) out.push_back(grouplib::symbolic_name(g));
  return out;
}

std::string kernel_string(const grouplib::ElementSubgroup& k) { return "{" + join(element_names(k.elements()), ", ") + "}"; }

Json invariants_json(const covers::CoverInvariants& inv) {
  return Json{{"K2", inv.K2}, {"chi", inv.chi}, {"pg", inv.pg}, {"q", inv.q}};
}

// "degree 2" when the verdict pins the degree of a composed map, else the full verdict.
std::string verdict_tail(const covers::BicanonicalVerdict& v) {
  if (v.kind == covers::VerdictKind::ComposedWithSubgroup && v.degree) return "degree " + std::to_string(*v.degree);
  return covers::to_string(v);
}

// ---------------------------------------------------------------------------
// Shared readers.

AbelianGroup read_group(const Node& n) {
  const auto moduli = n.integers();
  return located(n, [&] { return AbelianGroup(moduli); });
}

grouplib::Residues read_coords(const AbelianGroup& G, const Node& n) {
  const auto coords = n.integers();
  if (coords.size() != G.rank()) n.fail("expected " + std::to_string(G.rank()) + " coordinates");
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] < 0 || coords[i] >= G.moduli()[i]) {
      n.fail("coordinate " + std::to_string(i) + " must lie in [0, " + std::to_string(G.moduli()[i]) + ")");
    }
  }
  return coords;
}

GroupElement read_element(const AbelianGroup& G, const Node& n) { return G.element(read_coords(G, n)); }
Character read_character(const AbelianGroup& G, const Node& n) { return G.character(read_coords(G, n)); }

struct ClassContext {
  std::shared_ptr<const piclattice::Lattice> lattice;
  const piclattice::DivisorCatalog* catalog = nullptr;
};

// A class is a catalog name or basis label, a labelled coefficient map, or {"sum": [class, ...]}.
DivisorClass read_class(const ClassContext& ctx, const Node& n) {
  if (n.is_string()) {
    const auto name = n.string();
    if (ctx.catalog && ctx.catalog->contains(name)) return ctx.catalog->at(name);
    const auto& labels = ctx.lattice->labels();
    if (std::find(labels.begin(), labels.end(), name) != labels.end()) return DivisorClass::basis(ctx.lattice, name);
    n.fail("unknown class \"" + name + "\"");
  }
  if (n.has("sum")) {
    n.only({"sum"});
    auto total = DivisorClass::zero(ctx.lattice);
    for (const auto& item : n.at("sum").items()) total += read_class(ctx, item);
    return total;
  }
  std::map<std::string, std::int64_t> coeffs;
  for (const auto& [label, value] : n.fields()) coeffs[label] = value.integer();
  return located(n, [&] { return DivisorClass::from_map(ctx.lattice, coeffs); });
}

struct Surface {
  std::shared_ptr<const linsys::PointConfig> config;
  ClassContext classes;
  std::string description;
};

linsys::ProjectivePoint read_point(const Node& n) {
  const auto c = n.integers();
  if (c.size() != 3) n.fail("expected 3 homogeneous coordinates");
  return {{linsys::BigInt(c[0]), linsys::BigInt(c[1]), linsys::BigInt(c[2])}};
}

// "quadrilateral" (the default, with its named classes) or explicit points.
Surface read_configuration(const Node& scenario) {
  if (!scenario.has("configuration") || (scenario.at("configuration").is_string() &&
                                         scenario.at("configuration").string() == "quadrilateral")) {
    const auto& cat = piclattice::quadrilateral_catalog();
    return {std::make_shared<linsys::PointConfig>(linsys::quadrilateral_config()), {cat.lattice(), &cat},
            "quadrilateral"};
  }
  const auto n = scenario.at("configuration");
  if (n.is_string()) n.fail("unknown configuration \"" + n.string() + "\"");
  n.only({"points", "collinear", "noncollinear"});
  std::vector<linsys::ProjectivePoint> points;
  for (const auto& p : n.at("points").items()) points.push_back(read_point(p));
  std::vector<linsys::Incidence> incidences;
  for (const char* key : {"collinear", "noncollinear"}) {
    if (!n.has(key)) continue;
    for (const auto& t : n.at(key).items()) {
      const auto idx = t.integers();
      if (idx.size() != 3) t.fail("expected 3 point indices");
      for (auto i : idx) {
        if (i < 0 || i >= static_cast<std::int64_t>(points.size())) t.fail("point index out of range");
      }
      incidences.push_back({{static_cast<std::size_t>(idx[0]), static_cast<std::size_t>(idx[1]),
                             static_cast<std::size_t>(idx[2])},
                            std::string(key) == "collinear"});
    }
  }
  auto cfg = located(n, [&] { return std::make_shared<linsys::PointConfig>(std::move(points), incidences); });
  auto lat = std::make_shared<const piclattice::Lattice>(piclattice::Lattice::blowup(static_cast<int>(cfg->size())));
  return {cfg, {lat, nullptr}, std::to_string(cfg->size()) + " points"};
}

covers::H0Oracle h0_oracle(const std::shared_ptr<const linsys::PointConfig>& cfg) {
  return [cfg](const DivisorClass& d) { return linsys::h0_class(*cfg, d).dimension; };
}

// ---------------------------------------------------------------------------

Report run_double_cover(const Node& s, const RunOptions&) {
  s.only({"kind", "name", "description", "cases"});
  Report r;
  Json rows = Json::array();
  std::vector<std::string> summary;
  for (const auto& c : s.at("cases").items()) {
    c.only({"label", "base", "M", "h0_K_plus_M"});
    const auto label = c.has("label") ? c.at("label").string() : "case " + std::to_string(rows.size() + 1);
    const auto base = c.at("base");
    base.only({"chi", "pg", "K2"});
    const auto M = c.at("M");
    M.only({"squared", "dot_K"});
    covers::DoubleCoverInput in;
    in.chi_base = base.at("chi").integer();
    in.pg_base = base.at("pg").integer();
    in.K2_base = base.at("K2").integer();
    in.M_squared = M.at("squared").integer();
    in.M_dot_K = M.at("dot_K").integer();
    in.h0_K_plus_M = c.at("h0_K_plus_M").integer();
    const auto inv = located(c, [&] { return covers::double_cover_invariants(in); });
    const bool holds = proofcheck::check_corollary(inv.K2, inv.q);
    rows.push_back(Json{{"label", label},
                        {"K2", inv.K2},
                        {"chi", inv.chi},
                        {"pg", inv.pg},
                        {"q", inv.q},
                        {"K2_at_least_16(q-1)", holds}});
    summary.push_back(label + ": (K²,χ,p_g,q)=" + tuple_string({inv.K2, inv.chi, inv.pg, inv.q}) +
                      (holds ? "" : ", K²<16(q-1)"));
  }
  r.body["covers"] = rows;
  r.summary = join(summary, "; ");
  return r;
}

Report run_surface_cover(const Node& s, const RunOptions& opt) {
  s.only({"kind", "name", "description", "group", "configuration", "branch", "line_bundles"});
  const auto G = read_group(s.at("group"));
  const auto surf = read_configuration(s);
  const auto& ctx = surf.classes;

  covers::BranchDataSurface data{G, ctx.lattice, {}, {}};
  for (const auto& e : s.at("branch").items()) {
    e.only({"element", "components", "class"});
    covers::BranchEntrySurface entry{read_element(G, e.at("element")), DivisorClass::zero(ctx.lattice), {}, {}};
    if (e.has("components")) {
      for (const auto& c : e.at("components").items()) {
        entry.components.push_back(read_class(ctx, c));
        entry.component_names.push_back(c.is_string() ? c.string() : piclattice::to_string(entry.components.back()));
        entry.divisor += entry.components.back();
      }
    }
    if (e.has("class")) {
      const auto d = read_class(ctx, e.at("class"));
      if (e.has("components") && !(d == entry.divisor)) e.at("class").fail("class differs from the sum of components");
      entry.divisor = d;
    } else if (!e.has("components")) {
      e.fail("branch entry needs \"components\" or \"class\"");
    }
    data.entries.push_back(std::move(entry));
  }
  if (s.has("line_bundles")) {
    for (const auto& lb : s.at("line_bundles").items()) {
      lb.only({"character", "class"});
      data.line_bundles.push_back({read_character(G, lb.at("character")), read_class(ctx, lb.at("class"))});
    }
  }

  const auto validation = located(s, [&] { return covers::validate_building_data(data); });
  // the relations tie branch and line_bundles together, so the error sits at the root
  if (!validation.ok()) s.fail("invalid building data: " + validation.failures.front());

  const auto h0 = h0_oracle(surf.config);
  const auto res = located(s, [&] { return covers::z22_surface_cover_invariants(data, h0); });
  const auto dims = covers::projection_decomposition(res.bicanonical_base, res.eigensheaves, h0);

  std::int64_t p2 = 0;
  std::vector<std::int64_t> dim_values;
  std::vector<Character> contributing;
  Json table = Json::array();
  for (const auto& d : dims) {
    p2 += d.dimension;
    dim_values.push_back(d.dimension);
    if (d.dimension > 0) contributing.push_back(d.character);
    table.push_back(Json{{"character", d.character.coords},
                         {"name", d.label == "trivial" ? "trivial" : grouplib::symbolic_name(d.character)},
                         {"dimension", d.dimension}});
  }
  auto minimal = res.invariants;
  minimal.K2 = res.minimal_K2;
  if (minimal.K2 > 0 && p2 != minimal.K2 + minimal.chi) {
    throw InconsistentData("eigentable sums to p₂=" + std::to_string(p2) + " but K²+χ=" +
                           std::to_string(minimal.K2 + minimal.chi));
  }

  // g acts on |2K| as the identity iff all contributing characters agree on it
  std::vector<Character> differences;
  for (const auto& c : contributing) differences.push_back(G.subtract(c, contributing.front()));
  const auto kernel = grouplib::common_kernel(G, differences);
  const auto verdict = covers::bicanonical_verdict(kernel, minimal.K2, false);

  Report r;
  r.body["group"] = group_name(G);
  r.body["configuration"] = surf.description;
  r.body["validation"] = "ok";
  if (opt.verbose) r.body["validation_checks"] = validation.checks;
  Json branch = Json::array();
  for (const auto& e : data.entries) {
    Json row{{"element", e.element.coords}, {"name", grouplib::symbolic_name(e.element)}};
    if (!e.component_names.empty()) row["components"] = join(e.component_names, " + ");
    row["class"] = piclattice::to_string(e.divisor);
    branch.push_back(row);
  }
  r.body["branch"] = branch;
  Json eig = Json::array();
  for (const auto& lb : res.eigensheaves) {
    eig.push_back(Json{{"character", lb.character.coords},
                       {"name", grouplib::symbolic_name(lb.character)},
                       {"class", piclattice::to_string(lb.line_bundle)}});
  }
  r.body["eigensheaves"] = eig;
  if (opt.verbose) {
    Json parts = Json::array();
    for (const auto& p : res.canonical_parts) {
      parts.push_back(Json{{"character", p.character.coords}, {"K_plus_L", piclattice::to_string(p.adjoint)}, {"h0", p.h0}});
    }
    r.body["canonical_parts"] = parts;
  }
  r.body["cover"] = invariants_json(res.invariants);
  r.body["minus_one_curves"] = res.minus_one_curves;
  r.body["minimal_model"] = invariants_json(minimal);
  r.body["bicanonical_class"] = piclattice::to_string(res.bicanonical_base);
  r.body["eigentable"] = table;
  r.body["p2"] = p2;
  r.body["kernel"] = element_names(kernel.elements());
  r.body["verdict"] = covers::to_string(verdict);
  if (opt.verbose) r.body["reason"] = verdict.reason;

  r.summary = "K²=" + std::to_string(minimal.K2) + ", p_g=" + std::to_string(minimal.pg) + ", p₂=" + std::to_string(p2) +
              ", eigentable " + tuple_string(dim_values) + ", bicanonical " + covers::to_string(verdict);
  return r;
}

covers::BranchDataP1 read_curve(const AbelianGroup& G, const Node& n) {
  n.only({"branch", "line_bundles"});
  covers::BranchDataP1 d{G, {}, {}};
  for (const auto& e : n.at("branch").items()) {
    e.only({"element", "points", "degree"});
    covers::BranchEntryP1 entry{read_element(G, e.at("element")), 0, {}};
    if (e.has("points")) {
      entry.points = e.at("points").strings();
      entry.degree = static_cast<std::int64_t>(entry.points.size());
      if (e.has("degree") && e.at("degree").integer() != entry.degree) e.at("degree").fail("degree differs from the number of points");
    } else if (e.has("degree")) {
      entry.degree = e.at("degree").integer();
      if (entry.degree <= 0) e.at("degree").fail("degree must be positive");
    } else {
      e.fail("branch entry needs \"points\" or \"degree\"");
    }
    d.entries.push_back(std::move(entry));
  }
  if (n.has("line_bundles")) {
    for (const auto& lb : n.at("line_bundles").items()) {
      lb.only({"character", "degree"});
      d.line_bundles.push_back({read_character(G, lb.at("character")), lb.at("degree").integer()});
    }
  }
  const auto v = located(n, [&] { return covers::validate_building_data(d); });
  if (!v.ok()) n.fail("invalid building data: " + v.failures.front());
  return d;
}

beauville::ElementSet read_element_set(const AbelianGroup& G, const Node& n) {
  beauville::ElementSet out;
  for (const auto& e : n.items()) out.push_back(read_element(G, e));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Report run_product_quotient(const Node& s, const RunOptions& opt) {
  s.only({"kind", "name", "description", "group", "psi", "curve1", "curve2", "fixed1", "fixed2"});
  const auto G = read_group(s.at("group"));
  const auto psi_node = s.at("psi");
  std::vector<grouplib::Residues> images;
  for (const auto& col : psi_node.items()) images.push_back(read_coords(G, col));
  const auto psi = located(psi_node, [&] { return grouplib::Automorphism(G, images); });
  beauville::ProductQuotientSpec spec{psi, read_curve(G, s.at("curve1")), read_curve(G, s.at("curve2")), {}, {}};
  if (s.has("fixed1")) spec.fixed1 = read_element_set(G, s.at("fixed1"));
  if (s.has("fixed2")) spec.fixed2 = read_element_set(G, s.at("fixed2"));

  const auto rep = located(s, [&] { return beauville::bicanonical_report(spec); });

  Report r;
  r.body["group"] = group_name(G);
  Json cols = Json::array();
  for (const auto& g : psi.images()) cols.push_back(g.coords);
  r.body["psi"] = cols;
  r.body["genera"] = {rep.genus1, rep.genus2};
  r.body["free"] = rep.freeness.free;
  r.body["invariants"] = invariants_json(rep.invariants);
  r.body["bidegree"] = {rep.bidegree.first, rep.bidegree.second};
  Json table = Json::array();
  for (const auto& row : rep.eigentable) {
    if (row.dimension == 0 && !opt.verbose) continue;
    table.push_back(Json{{"chi1", row.chi1.coords},
                         {"chi2", row.chi2.coords},
                         {"bidegree", {row.degree1, row.degree2}},
                         {"dimension", row.dimension}});
  }
  r.body["eigentable"] = table;
  r.body["p2"] = rep.p2;
  r.body["kernel"] = element_names(rep.kernel.elements());
  r.body["verdict"] = covers::to_string(rep.verdict);
  if (opt.verbose) r.body["reason"] = rep.verdict.reason;

  r.summary = "K²=" + std::to_string(rep.invariants.K2) + ", p_g=" + std::to_string(rep.invariants.pg) +
              ", p₂=" + std::to_string(rep.p2) + ", bidegree " +
              tuple_string({rep.bidegree.first, rep.bidegree.second}) + ", eigentable " +
              tuple_string(rep.nonzero_dimensions()) + ", kernel " + kernel_string(rep.kernel) + ", " +
              verdict_tail(rep.verdict);
  return r;
}

Report run_fermat(const Node& s, const RunOptions& opt) {
  s.only({"kind", "name", "description"});
  const auto rep = fermat::fermat_report();
  if (!rep.derivation.holds) throw InconsistentData("action exponent identity fails");
  for (const auto& [name, ok] : rep.identities) {
    if (!ok) throw InconsistentData("ratio identity " + name + " fails");
  }

  Report r;
  r.body["group"] = group_name(fermat::fermat_group());
  r.body["genus"] = fermat::fermat_genus();
  r.body["invariants"] = invariants_json(rep.invariants);
  r.body["free"] = rep.freeness.free;
  r.body["action_exponent"] = Json{{"holds", rep.derivation.holds}, {"tuples_checked", rep.derivation.tuples_checked}};
  Json monos = Json::array();
  for (const auto& m : rep.invariant_basis) monos.push_back(fermat::to_string(m));
  r.body["invariant_monomial_count"] = rep.invariant_basis.size();
  r.body["invariant_monomials"] = monos;
  Json ids = Json::array();
  for (const auto& id : fermat::displayed_identities()) {
    Json row{{"name", id.name}, {"target", fermat::to_string(id.target)}};
    if (opt.verbose) {
      Json terms = Json::array();
      for (const auto& [m, power] : id.combo) terms.push_back(Json{{"monomial", fermat::to_string(m)}, {"power", power}});
      row["terms"] = terms;
    }
    row["holds"] = true;
    ids.push_back(row);
  }
  r.body["ratio_identities"] = ids;
  r.body["ratio_lattice"] = Json{{"x⁵z⁻⁵", rep.contains_x_ratio}, {"x₁⁵z₁⁻⁵", rep.contains_x1_ratio}};
  r.body["kernel"] = element_names(rep.kernel.elements());
  r.body["verdict"] = covers::to_string(rep.verdict);

  r.summary = "K²=" + std::to_string(rep.invariants.K2) + ", p_g=" + std::to_string(rep.invariants.pg) +
              ", p₂=" + std::to_string(rep.invariant_basis.size()) + ", " +
              std::to_string(rep.invariant_basis.size()) + " invariant monomials, kernel " +
              kernel_string(rep.kernel) + ", " + covers::to_string(rep.verdict);
  return r;
}

Report run_proofcheck(const Node& s, const RunOptions& opt) {
  s.only({"kind", "name", "description", "checks", "corollary", "reider_K2"});
  const std::vector<std::string> all{"case-table", "corollary", "reider", "lattice-exclusion"};
  std::vector<std::string> checks = all;
  if (s.has("checks")) {
    checks.clear();
    for (const auto& c : s.at("checks").items()) {
      const auto name = c.string();
      if (std::find(all.begin(), all.end(), name) == all.end()) c.fail("unknown check \"" + name + "\"");
      checks.push_back(name);
    }
  }
  auto wanted = [&](const std::string& c) { return std::find(checks.begin(), checks.end(), c) != checks.end(); };

  Report r;
  std::vector<std::string> summary;
  if (wanted("case-table")) {
    Json rows = Json::array();
    std::int64_t contradictions = 0;
    const auto table = proofcheck::run_case_table();
    for (const auto& rec : table) {
      if (!rec.verdict) ++contradictions;
      Json row{{"label", rec.label}, {"image", rec.base}};
      if (opt.verbose) {
        row["base"] = Json{{"K2", rec.input.K2_base}, {"chi", rec.input.chi_base}, {"pg", rec.input.pg_base}};
        row["M"] = Json{{"squared", rec.input.M_squared}, {"dot_K", rec.input.M_dot_K}};
        row["h0_K_plus_M"] = rec.input.h0_K_plus_M;
      }
      row["cover"] = invariants_json(rec.invariants);
      row["K2_at_least_16(q-1)"] = rec.verdict;
      rows.push_back(row);
    }
    r.body["case_table"] = rows;
    summary.push_back(std::to_string(contradictions) + "/" + std::to_string(table.size()) +
                      " double covers violate K²≥16(q-1)");
  }
  if (wanted("corollary") && s.has("corollary")) {
    Json rows = Json::array();
    for (const auto& c : s.at("corollary").items()) {
      c.only({"K2", "q"});
      const auto K2 = c.at("K2").integer();
      const auto q = c.at("q").integer();
      const bool holds = located(c, [&] { return proofcheck::check_corollary(K2, q); });
      rows.push_back(Json{{"K2", K2}, {"q", q}, {"holds", holds}});
    }
    r.body["corollary"] = rows;
  }
  if (wanted("reider")) {
    const auto K2 = s.has("reider_K2") ? s.at("reider_K2").integer() : 9;
    const auto ms = located(s.has("reider_K2") ? s.at("reider_K2") : s, [&] { return proofcheck::reider_enumeration(K2); });
    r.body["reider"] = Json{{"K2", K2}, {"multiples", ms}};
    std::vector<std::string> parts;
    for (auto m : ms) parts.push_back(std::to_string(m));
    summary.push_back("Reider: C ~ mL only for m ∈ {" + join(parts, ",") + "}");
  }
  if (wanted("lattice-exclusion")) {
    const auto l = proofcheck::double_cover_cases();
    Json rows = Json::array();
    for (const auto& row : l.rows) {
      rows.push_back(Json{{"a", row.a}, {"theta_dot_C", row.theta_dot_C}, {"C_squared", row.C_squared}, {"matches", row.matches}});
    }
    Json minors = Json::array();
    for (const auto& m : l.minors) minors.push_back(static_cast<std::int64_t>(m));
    Json body{{"K_dot_L0", l.K_dot_L0}, {"L0_squared", l.L0_squared}, {"L0_divisible_by_2", l.L0_divisible_by_2}, {"rows", rows}};
    if (opt.verbose) body["gram"] = l.excluded_gram;
    body["leading_minors"] = minors;
    body["negative_definite"] = l.negative_definite;
    body["excluded"] = l.excluded;
    r.body["lattice_exclusion"] = body;
    summary.push_back(l.excluded ? "rank-3 negative definite case excluded" : "lattice case NOT excluded");
  }
  r.summary = join(summary, "; ");
  return r;
}

Report run_linsys(const Node& s, const RunOptions& opt) {
  s.only({"kind", "name", "description", "configuration", "projectivity", "classes"});
  auto surf = read_configuration(s);
  if (s.has("projectivity")) {
    const auto pn = s.at("projectivity");
    const auto rows = pn.items();
    if (rows.size() != 3) pn.fail("expected a 3x3 matrix");
    linsys::Projectivity m{};
    for (std::size_t i = 0; i < 3; ++i) {
      const auto v = rows[i].integers();
      if (v.size() != 3) rows[i].fail("expected 3 entries");
      for (std::size_t j = 0; j < 3; ++j) m[i][j] = v[j];
    }
    surf.config = located(pn, [&] { return std::make_shared<linsys::PointConfig>(surf.config->transformed(m)); });
  }

  Report r;
  r.body["configuration"] = surf.description;
  Json rows = Json::array();
  std::vector<std::string> summary;
  for (const auto& c : s.at("classes").items()) {
    c.only({"name", "class", "degree", "multiplicities"});
    Json row;
    linsys::H0Result res;
    if (c.has("class")) {
      const auto cls = read_class(surf.classes, c.at("class"));
      res = located(c, [&] { return linsys::h0_class(*surf.config, cls); });
      row["name"] = c.has("name") ? c.at("name").string() : piclattice::to_string(cls);
      row["class"] = piclattice::to_string(cls);
    } else {
      res.system = {c.at("degree").integer(), c.at("multiplicities").integers()};
      res.dimension = located(c, [&] { return linsys::h0_fat_points(*surf.config, res.system); });
      row["name"] = c.has("name") ? c.at("name").string() : "degree " + std::to_string(res.system.degree);
    }
    row["degree"] = res.system.degree;
    row["multiplicities"] = res.system.multiplicities;
    row["h0"] = res.dimension;
    if (opt.verbose && !res.steps.empty()) row["steps"] = res.steps;
    summary.push_back(row["name"].get<std::string>() + "=" + std::to_string(res.dimension));
    rows.push_back(row);
  }
  r.body["systems"] = rows;
  r.summary = "h⁰: " + join(summary, ", ");
  return r;
}

Report run_lattice(const Node& s, const RunOptions& opt) {
  s.only({"kind", "name", "description", "lattice", "classes"});
  ClassContext ctx;
  const auto ln = s.at("lattice");
  if (ln.is_string()) {
    const auto name = ln.string();
    if (name == "quadrilateral") {
      ctx = {piclattice::quadrilateral_catalog().lattice(), &piclattice::quadrilateral_catalog()};
    } else if (name == "quadric") {
      ctx.lattice = std::make_shared<const piclattice::Lattice>(piclattice::Lattice::quadric());
    } else {
      ln.fail("unknown lattice \"" + name + "\"");
    }
  } else if (ln.has("blowup")) {
    ln.only({"blowup"});
    const auto n = ln.at("blowup").integer();
    ctx.lattice = located(ln, [&] {
      return std::make_shared<const piclattice::Lattice>(piclattice::Lattice::blowup(static_cast<int>(n)));
    });
  } else {
    ln.only({"labels", "gram"});
    const auto labels = ln.at("labels").strings();
    piclattice::IntMatrix gram;
    for (const auto& row : ln.at("gram").items()) gram.push_back(row.integers());
    ctx.lattice = located(ln, [&] {
      return std::make_shared<const piclattice::Lattice>(piclattice::Lattice::custom(labels, gram));
    });
  }

  std::optional<DivisorClass> K;
  if (ctx.lattice->kind() != piclattice::LatticeKind::Custom) K = piclattice::canonical_class(ctx.lattice);

  std::vector<std::string> names;
  std::vector<DivisorClass> classes;
  for (const auto& [name, node] : s.at("classes").fields()) {
    names.push_back(name);
    classes.push_back(read_class(ctx, node));
  }
  if (classes.empty()) s.at("classes").fail("expected at least one class");

  Report r;
  r.body["lattice"] = ctx.lattice->name();
  Json rows = Json::array();
  piclattice::IntMatrix gram(classes.size(), std::vector<std::int64_t>(classes.size()));
  for (std::size_t i = 0; i < classes.size(); ++i) {
    for (std::size_t j = 0; j < classes.size(); ++j) gram[i][j] = piclattice::intersect(classes[i], classes[j]);
    Json row{{"name", names[i]}, {"class", piclattice::to_string(classes[i])}, {"self_intersection", gram[i][i]}};
    if (K) row["K_dot"] = piclattice::intersect(*K, classes[i]);
    if (opt.verbose) row["divisible_by_2"] = piclattice::is_divisible_by(classes[i], 2);
    rows.push_back(row);
  }
  r.body["classes"] = rows;
  r.body["intersection_matrix"] = gram;
  Json minors = Json::array();
  for (const auto& m : exact::leading_principal_minors(exact::from_int64(gram))) minors.push_back(static_cast<std::int64_t>(m));
  r.body["leading_minors"] = minors;
  const bool nd = piclattice::is_negative_definite(gram);
  r.body["negative_definite"] = nd;
  r.summary = std::to_string(classes.size()) + " classes on " + ctx.lattice->name() + ", intersection matrix " +
              (nd ? "negative definite" : "not negative definite");
  return r;
}

using Runner = std::function<Report(const Node&, const RunOptions&)>;

const std::map<std::string, Runner>& runners() {
  static const std::map<std::string, Runner> table{
      {"double-cover", run_double_cover}, {"z22-surface-cover", run_surface_cover},
      {"product-quotient", run_product_quotient}, {"fermat", run_fermat},
      {"proofcheck", run_proofcheck},     {"linsys", run_linsys},
      {"lattice", run_lattice},
  };
  return table;
}

}  // namespace

Report run_scenario(const Json& scenario, const RunOptions& options) {
  const Node root(scenario, "");
  if (!root.is_object()) root.fail("scenario must be a JSON object");
  const auto kind_node = root.at("kind");
  const auto kind = kind_node.string();
  const auto it = runners().find(kind);
  if (it == runners().end()) {
    std::vector<std::string> known;
    for (const auto& [k, _] : runners()) known.push_back(k);
    kind_node.fail("unknown kind \"" + kind + "\" (expected one of " + join(known, ", ") + ")");
  }
  if (root.has("description")) root.at("description").string();
  Report r = it->second(root, options);
  r.kind = kind;
  r.name = root.has("name") ? root.at("name").string() : kind;
  return r;
}

}  // namespace bicanon::tools
