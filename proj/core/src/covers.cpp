#include "bicanon/covers.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <utility>

#include "bicanon/errors.hpp"

namespace bicanon::covers {

namespace {

std::string char_label(const Character& c) { return "χ=" + grouplib::to_string(c); }

// Subgroup generated by the elements with nonempty branch divisor.
ElementSubgroup inertia_span(const AbelianGroup& g, const std::vector<GroupElement>& branch_elements) {
  return ElementSubgroup(g, branch_elements);
}

void check_elements(const AbelianGroup& group, const std::vector<GroupElement>& elements, ValidationReport& rep) {
  std::set<GroupElement> seen;
  for (const auto& e : elements) {
    if (!group.contains(e)) {
      rep.failures.push_back("branch element " + grouplib::to_string(e) + " is not a reduced element of the group");
      continue;
    }
    if (e == group.zero()) rep.failures.push_back("branch divisor attached to the zero element");
    if (!seen.insert(e).second) rep.failures.push_back("element " + grouplib::to_string(e) + " listed twice");
  }
}

}  // namespace

CoverInvariants make_invariants(std::int64_t K2, std::int64_t chi, std::int64_t pg) {
  if (pg < 0) throw InvalidInput("p_g must be >= 0");
  const std::int64_t q = pg + 1 - chi;
  if (q < 0) throw InconsistentData("negative irregularity from p_g=" + std::to_string(pg) + ", chi=" + std::to_string(chi));
  return {K2, chi, pg, q};
}

std::string to_string(const CoverInvariants& inv) {
  std::ostringstream os;
  os << "K²=" << inv.K2 << ", χ=" << inv.chi << ", p_g=" << inv.pg << ", q=" << inv.q;
  return os.str();
}

DoubleCoverInput DoubleCoverInput::from_classes(std::int64_t chi_base, std::int64_t pg_base, const DivisorClass& K,
                                                const DivisorClass& M, std::int64_t h0_K_plus_M,
                                                const std::optional<DivisorClass>& branch) {
  if (branch && !(2 * M == *branch)) {
    throw InvalidInput("double cover data: 2M = " + piclattice::to_string(2 * M) + " differs from branch class " +
                       piclattice::to_string(*branch));
  }
  if (h0_K_plus_M < 0) throw InvalidInput("h0(K+M) must be >= 0");
  DoubleCoverInput in;
  in.chi_base = chi_base;
  in.pg_base = pg_base;
  in.K2_base = piclattice::intersect(K, K);
  in.M_squared = piclattice::intersect(M, M);
  in.M_dot_K = piclattice::intersect(M, K);
  in.h0_K_plus_M = h0_K_plus_M;
  return in;
}

CoverInvariants double_cover_invariants(const DoubleCoverInput& in) {
  if (in.h0_K_plus_M < 0) throw InvalidInput("h0(K+M) must be >= 0");
  const std::int64_t m_km = in.M_dot_K + in.M_squared;  // M(K+M)
  if (m_km % 2 != 0) {
    throw InvalidInput("M(K+M) = " + std::to_string(m_km) + " is odd: chi of the double cover is not an integer");
  }
  const std::int64_t km2 = in.K2_base + 2 * in.M_dot_K + in.M_squared;  // (K+M)^2
  return make_invariants(2 * km2, 2 * in.chi_base + m_km / 2, in.pg_base + in.h0_K_plus_M);
}

std::int64_t BranchDataP1::degree_of(const GroupElement& g) const {
  std::int64_t d = 0;
  for (const auto& e : entries) {
    if (e.element == g) d += e.degree;
  }
  return d;
}

std::int64_t BranchDataP1::total_degree() const {
  std::int64_t d = 0;
  for (const auto& e : entries) d += e.degree;
  return d;
}

DivisorClass BranchDataSurface::total_branch() const {
  DivisorClass total = DivisorClass::zero(lattice);
  for (const auto& e : entries) total += e.divisor;
  return total;
}

ValidationReport validate_building_data(const BranchDataP1& data) {
  ValidationReport rep;
  const auto& G = data.group;
  std::vector<GroupElement> elements;
  for (const auto& e : data.entries) elements.push_back(e.element);
  check_elements(G, elements, rep);

  std::set<std::string> used_points;
  for (const auto& e : data.entries) {
    if (e.degree < 0) rep.failures.push_back("negative branch degree for " + grouplib::to_string(e.element));
    if (!e.points.empty() && static_cast<std::int64_t>(e.points.size()) != e.degree) {
      rep.failures.push_back("branch degree of " + grouplib::to_string(e.element) + " does not match its point list");
    }
    for (const auto& p : e.points) {
      if (!used_points.insert(p).second) {
        rep.failures.push_back("point " + p + " appears in more than one branch divisor");
      }
    }
  }
  if (!used_points.empty()) rep.checks.push_back("branch supports are pairwise disjoint");

  if (!G.is_elementary_2()) {
    rep.checks.push_back("relations 2L = ΣεD are only checked for Z2^n; skipped");
    return rep;
  }

  for (const auto& lb : data.line_bundles) {
    if (lb.character.coords.size() != G.rank()) {
      rep.failures.push_back("line bundle character " + grouplib::to_string(lb.character) + " has the wrong rank");
      continue;
    }
    std::int64_t rhs = 0;
    for (const auto& e : data.entries) {
      if (G.pair(lb.character, e.element) != 0) rhs += e.degree;
    }
    const std::string rel = "2L_" + grouplib::symbolic_name(lb.character) + " ≡ Σ ε(γ) D_γ";
    if (2 * lb.degree != rhs) {
      rep.failures.push_back("relation " + rel + " fails: 2·" + std::to_string(lb.degree) + " ≠ " + std::to_string(rhs));
    } else {
      rep.checks.push_back(rel + " (" + std::to_string(rhs) + ")");
    }
  }
  for (const auto& chi : G.characters()) {
    std::int64_t rhs = 0;
    for (const auto& e : data.entries) {
      if (G.pair(chi, e.element) != 0) rhs += e.degree;
    }
    if (rhs % 2 != 0) {
      rep.failures.push_back("branch degree outside ker " + char_label(chi) + " is odd (" + std::to_string(rhs) + ")");
    }
  }
  std::vector<GroupElement> ramified;
  for (const auto& e : data.entries) {
    if (e.degree > 0) ramified.push_back(e.element);
  }
  if (inertia_span(G, ramified).order() != G.order()) {
    rep.failures.push_back("inertia elements do not generate the group: the cover is disconnected");
  } else {
    rep.checks.push_back("inertia elements generate the group");
  }
  return rep;
}

ValidationReport validate_building_data(const BranchDataSurface& data) {
  ValidationReport rep;
  const auto& G = data.group;
  if (!G.is_elementary_2()) {
    rep.failures.push_back("surface building data is only supported for Z2^n");
    return rep;
  }
  if (!data.lattice) {
    rep.failures.push_back("surface building data has no lattice");
    return rep;
  }
  std::vector<GroupElement> elements;
  for (const auto& e : data.entries) elements.push_back(e.element);
  check_elements(G, elements, rep);

  for (const auto& e : data.entries) {
    if (!(e.divisor.lattice() == *data.lattice)) {
      rep.failures.push_back("branch divisor for " + grouplib::to_string(e.element) + " is on the wrong lattice");
      return rep;
    }
    if (!e.components.empty()) {
      DivisorClass sum = DivisorClass::zero(data.lattice);
      for (const auto& c : e.components) sum += c;
      if (!(sum == e.divisor)) {
        rep.failures.push_back("components of D_" + grouplib::symbolic_name(e.element) + " do not add up to it");
      }
    }
  }

  for (const auto& lb : data.line_bundles) {
    if (lb.character.coords.size() != G.rank()) {
      rep.failures.push_back("line bundle character " + grouplib::to_string(lb.character) + " has the wrong rank");
      continue;
    }
    DivisorClass rhs = DivisorClass::zero(data.lattice);
    for (const auto& e : data.entries) {
      if (G.pair(lb.character, e.element) != 0) rhs += e.divisor;
    }
    const std::string rel = "2L_" + grouplib::symbolic_name(lb.character) + " ≡ Σ ε(γ) D_γ";
    if (!(2 * lb.line_bundle == rhs)) {
      rep.failures.push_back("relation " + rel + " fails: 2(" + piclattice::to_string(lb.line_bundle) +
                             ") ≠ " + piclattice::to_string(rhs));
    } else {
      rep.checks.push_back(rel + " (" + piclattice::to_string(rhs) + ")");
    }
  }
  for (const auto& chi : G.characters()) {
    DivisorClass rhs = DivisorClass::zero(data.lattice);
    for (const auto& e : data.entries) {
      if (G.pair(chi, e.element) != 0) rhs += e.divisor;
    }
    if (!piclattice::is_divisible_by(rhs, 2)) {
      rep.failures.push_back("branch divisor outside ker " + char_label(chi) + " is not divisible by 2");
    }
  }
  return rep;
}

std::int64_t rh_genus(const BranchDataP1& data) {
  const auto& G = data.group;
  const std::int64_t n = G.order();
  std::int64_t twice_g_minus_2 = -2 * n;
  for (const auto& e : data.entries) {
    if (!G.contains(e.element) || e.element == G.zero()) {
      throw InvalidInput("branch divisor attached to an invalid or zero element");
    }
    if (e.degree < 0) throw InvalidInput("negative branch degree");
    const std::int64_t ord = G.order_of(e.element);
    twice_g_minus_2 += e.degree * (n - n / ord);
  }
  if (twice_g_minus_2 % 2 != 0 || twice_g_minus_2 < -2) {
    throw InvalidInput("Riemann-Hurwitz gives a non-integral or negative genus (2g-2 = " +
                       std::to_string(twice_g_minus_2) + ")");
  }
  return twice_g_minus_2 / 2 + 1;
}

std::int64_t EigensheafTable::degree_of(const Character& chi) const {
  for (const auto& e : entries) {
    if (e.character == chi) return e.degree;
  }
  throw InvalidInput("character " + grouplib::to_string(chi) + " is not in the eigensheaf table");
}

EigensheafTable eigensheaf_degrees(const BranchDataP1& data) {
  const auto& G = data.group;
  if (!G.is_elementary_2()) {
    throw InvalidInput("eigensheaf degrees are only implemented for Z2^n groups");
  }
  EigensheafTable table{G, {}};
  for (const auto& chi : G.characters()) {
    std::int64_t sum = 0;
    for (const auto& e : data.entries) {
      if (G.pair(chi, e.element) != 0) sum += e.degree;
    }
    if (sum % 2 != 0) {
      throw InvalidInput("branch degree outside ker " + char_label(chi) + " is odd (" + std::to_string(sum) + ")");
    }
    table.entries.push_back({chi, sum / 2});
  }
  return table;
}

std::int64_t genus_from_eigensheaves(const EigensheafTable& table) {
  std::int64_t chi_sum = 0;
  for (const auto& e : table.entries) chi_sum += 1 - e.degree;
  return 1 - chi_sum;
}

std::vector<LineBundleSurface> surface_eigensheaves(const BranchDataSurface& data) {
  const auto& G = data.group;
  if (!G.is_elementary_2()) throw InvalidInput("surface eigensheaves are only implemented for Z2^n groups");
  std::vector<LineBundleSurface> out;
  for (const auto& chi : G.characters()) {
    if (chi == G.trivial_character()) continue;
    DivisorClass sum = DivisorClass::zero(data.lattice);
    for (const auto& e : data.entries) {
      if (G.pair(chi, e.element) != 0) sum += e.divisor;
    }
    out.push_back({chi, sum.divided_by(2)});
  }
  return out;
}

SurfaceCoverResult z22_surface_cover_invariants(const BranchDataSurface& data, const H0Oracle& h0) {
  ValidationReport rep = validate_building_data(data);
  if (!rep.ok()) throw InvalidInput("invalid building data: " + rep.failures.front());

  const auto& G = data.group;
  const DivisorClass K = piclattice::canonical_class(data.lattice);
  const DivisorClass D = data.total_branch();
  auto eigensheaves = surface_eigensheaves(data);

  std::int64_t pg = 0;
  std::int64_t twice_chi_excess = 0;  // sum L (K + L)
  std::vector<CanonicalPart> parts;
  for (const auto& lb : eigensheaves) {
    const DivisorClass adjoint = K + lb.line_bundle;
    const std::int64_t h = h0(adjoint);
    pg += h;
    twice_chi_excess += piclattice::intersect(lb.line_bundle, adjoint);
    parts.push_back({lb.character, lb.line_bundle, adjoint, h});
  }
  if (twice_chi_excess % 2 != 0) {
    throw InvalidInput("sum L(K+L) = " + std::to_string(twice_chi_excess) + " is odd: chi is not an integer");
  }
  const std::int64_t chi = G.order() + twice_chi_excess / 2;

  const DivisorClass bicanonical = 2 * K + D;
  const std::int64_t scaled = G.order() * piclattice::intersect(bicanonical, bicanonical);
  if (scaled % 4 != 0) throw InvalidInput("K_X^2 is not an integer for this branch data");

  // A (-2)-curve C inside D_gamma that misses every other branch component
  // pulls back to |G|/2 disjoint (-1)-curves.
  std::int64_t minus_one = 0;
  for (const auto& e : data.entries) {
    for (const auto& c : e.components) {
      if (piclattice::intersect(c, c) != -2 || piclattice::intersect(K, c) != 0) continue;
      bool isolated = piclattice::intersect(c, e.divisor - c) == 0;
      for (const auto& other : data.entries) {
        if (other.element != e.element && piclattice::intersect(c, other.divisor) != 0) isolated = false;
      }
      if (isolated) minus_one += G.order() / 2;
    }
  }

  if (pg + 1 - chi < 0) {
    // e.g. an unramified cover with trivial L_chi: the formulas still hold
    // componentwise, but the total space is not connected
    throw InconsistentData("cover is disconnected (χ=" + std::to_string(chi) + ", K²=" + std::to_string(scaled / 4) +
                           ", p_g=" + std::to_string(pg) + " give q < 0)");
  }

  SurfaceCoverResult out{make_invariants(scaled / 4, chi, pg), std::move(rep), std::move(eigensheaves),
                         std::move(parts), bicanonical, minus_one, scaled / 4 + minus_one};
  return out;
}

std::vector<CharacterDimension> projection_decomposition(const DivisorClass& total,
                                                         const std::vector<LineBundleSurface>& line_bundles,
                                                         const H0Oracle& h0) {
  std::vector<CharacterDimension> out;
  const std::size_t rank = line_bundles.empty() ? 0 : line_bundles.front().character.coords.size();
  out.push_back({Character{grouplib::Residues(rank, 0)}, "trivial", h0(total)});
  for (const auto& lb : line_bundles) {
    out.push_back({lb.character, grouplib::to_string(lb.character), h0(total - lb.line_bundle)});
  }
  return out;
}

BicanonicalVerdict bicanonical_verdict(const ElementSubgroup& kernel, std::int64_t K2, bool separates_orbits) {
  BicanonicalVerdict v;
  v.subgroup_order = kernel.order();
  if (!kernel.is_trivial()) {
    v.kind = VerdictKind::ComposedWithSubgroup;
    v.subgroup_generators = kernel.generators();
    if (kernel.order() == 2 && (K2 == 7 || K2 == 8)) {
      v.degree = 2;
      v.reason = "composed with an involution, and the degree is at most 2 when K²=7,8";
    } else {
      v.reason = "degree is a multiple of " + std::to_string(kernel.order());
    }
    return v;
  }
  if (separates_orbits) {
    v.kind = VerdictKind::Birational;
    v.degree = 1;
    v.reason = "no nonzero group element acts trivially on H⁰(2K) and the invariant part separates orbits";
  } else {
    v.kind = VerdictKind::Undetermined;
    v.reason = "no nonzero group element acts trivially on H⁰(2K)";
  }
  return v;
}

std::string to_string(const BicanonicalVerdict& v) {
  switch (v.kind) {
    case VerdictKind::Birational:
      return "birational";
    case VerdictKind::ComposedWithSubgroup: {
      std::string out;
      if (v.subgroup_order == 2 && v.subgroup_generators.size() == 1) {
        out = "composed with " + grouplib::symbolic_name(v.subgroup_generators.front());
      } else {
        out = "composed with a subgroup of order " + std::to_string(v.subgroup_order);
      }
      if (v.degree) out += ", degree " + std::to_string(*v.degree);
      return out;
    }
    case VerdictKind::Undetermined:
      break;
  }
  return "not composed with any group element";
}

}  // namespace bicanon::covers
