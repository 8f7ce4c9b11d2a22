#include "bicanon/beauville.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "bicanon/errors.hpp"

namespace bicanon::beauville {

namespace {

std::int64_t sections(std::int64_t degree) { return degree >= 0 ? degree + 1 : 0; }

void require_valid(const BranchDataP1& data, const char* which) {
  const auto rep = covers::validate_building_data(data);
  if (!rep.ok()) throw InvalidInput(std::string(which) + ": " + rep.failures.front());
}

}  // namespace

ElementSet fixed_point_elements(const BranchDataP1& data) {
  const auto& G = data.group;
  std::set<GroupElement> out;
  for (const auto& e : data.entries) {
    if (e.degree == 0) continue;
    GroupElement m = e.element;
    while (m != G.zero()) {
      out.insert(m);
      m = G.add(m, e.element);
    }
  }
  return {out.begin(), out.end()};
}

FreenessResult is_free(const Automorphism& psi, const ElementSet& fix1, const ElementSet& fix2) {
  const std::set<GroupElement> second(fix2.begin(), fix2.end());
  for (const auto& g : fix1) {
    if (g == psi.group().zero()) continue;
    if (second.count(psi.apply(g)) != 0) return {false, g};
  }
  return {true, std::nullopt};
}

CoverInvariants beauville_invariants(std::int64_t g1, std::int64_t g2, std::int64_t order) {
  if (order < 1) throw InvalidInput("group order must be positive");
  if (g1 < 2 || g2 < 2) throw InvalidInput("both curves need genus >= 2");
  if ((g1 - 1) * (g2 - 1) != order) {
    throw InvalidInput("(g1-1)(g2-1) = " + std::to_string((g1 - 1) * (g2 - 1)) + " differs from |G| = " +
                       std::to_string(order));
  }
  // chi(O_{C1 x C2}) = (g1-1)(g2-1), K^2 = 8 (g1-1)(g2-1); both divide by |G|.
  const std::int64_t chi = (g1 - 1) * (g2 - 1) / order;
  return covers::make_invariants(8 * chi, chi, chi - 1);
}

Bidegree two_k_bidegree(const BranchDataP1& branch1, const BranchDataP1& branch2) {
  for (const auto* b : {&branch1, &branch2}) {
    for (const auto& e : b->entries) {
      if (e.degree > 0 && b->group.order_of(e.element) != 2) {
        throw InvalidInput("two_k_bidegree assumes every inertia group has order 2");
      }
    }
  }
  return {branch1.total_degree() - 4, branch2.total_degree() - 4};
}

GroupElement quotient_iso(const Automorphism& psi, const GroupElement& a, const GroupElement& b) {
  const auto& G = psi.group();
  return G.add(b, G.negate(psi.apply(a)));
}

GroupElement quotient_representative(const Automorphism& psi, const GroupElement& h, const GroupElement& a) {
  const auto& G = psi.group();
  return grouplib::join(a, G.add(h, psi.apply(a)));
}

Character push_to_quotient(const Automorphism& psi, const Character& joint) {
  const auto& G = psi.group();
  const auto GG = grouplib::direct_product(G, G);
  grouplib::Residues coords(G.rank());
  for (std::size_t j = 0; j < G.rank(); ++j) {
    const std::int64_t value = GG.pair(joint, grouplib::join(G.zero(), G.basis(j)));
    const std::int64_t unit = G.exponent() / G.moduli()[j];
    if (value % unit != 0) throw InvalidInput("character does not descend to the quotient");
    coords[j] = value / unit;
  }
  return G.character(std::move(coords));
}

std::int64_t BicanonicalReport::dimension_of(const Character& chi1, const Character& chi2) const {
  for (const auto& row : eigentable) {
    if (row.chi1 == chi1 && row.chi2 == chi2) return row.dimension;
  }
  throw InvalidInput("character (" + grouplib::to_string(chi1) + ", " + grouplib::to_string(chi2) +
                     ") is not orthogonal to the graph subgroup");
}

std::vector<std::int64_t> BicanonicalReport::nonzero_dimensions() const {
  std::vector<std::int64_t> out;
  for (const auto& row : eigentable) {
    if (row.dimension != 0) out.push_back(row.dimension);
  }
  return out;
}

BicanonicalReport bicanonical_report(const ProductQuotientSpec& spec) {
  const auto& G = spec.psi.group();
  if (!(spec.branch1.group == G) || !(spec.branch2.group == G)) {
    throw InvalidInput("branch data and automorphism use different groups");
  }
  require_valid(spec.branch1, "first curve");
  require_valid(spec.branch2, "second curve");

  const std::int64_t g1 = covers::rh_genus(spec.branch1);
  const std::int64_t g2 = covers::rh_genus(spec.branch2);
  if ((g1 - 1) * (g2 - 1) != G.order()) {
    throw InvalidInput("invariant mismatch: (g1-1)(g2-1) = " + std::to_string((g1 - 1) * (g2 - 1)) +
                       " but |G| = " + std::to_string(G.order()));
  }

  const ElementSet fix1 = spec.fixed1 ? *spec.fixed1 : fixed_point_elements(spec.branch1);
  const ElementSet fix2 = spec.fixed2 ? *spec.fixed2 : fixed_point_elements(spec.branch2);
  const FreenessResult freeness = is_free(spec.psi, fix1, fix2);
  if (!freeness.free) {
    throw InvalidInput("the graph of psi does not act freely: " + grouplib::symbolic_name(*freeness.witness) +
                       " has fixed points on both curves");
  }

  const CoverInvariants inv = beauville_invariants(g1, g2, G.order());
  const Bidegree bideg = two_k_bidegree(spec.branch1, spec.branch2);
  const auto table1 = covers::eigensheaf_degrees(spec.branch1);
  const auto table2 = covers::eigensheaf_degrees(spec.branch2);

  const auto gamma = grouplib::graph_subgroup(spec.psi);
  const auto perp = grouplib::orthogonal_complement(gamma);

  std::vector<EigenRow> rows;
  std::vector<Character> contributing;
  std::int64_t p2 = 0;
  for (const auto& joint : perp.elements()) {
    auto [chi1, chi2] = grouplib::split(joint, G.rank());
    EigenRow row{chi1, chi2, table1.degree_of(chi1), table2.degree_of(chi2), 0};
    row.dimension = sections(bideg.first - row.degree1) * sections(bideg.second - row.degree2);
    p2 += row.dimension;
    if (row.dimension > 0) contributing.push_back(push_to_quotient(spec.psi, joint));
    rows.push_back(std::move(row));
  }
  if (p2 != inv.K2 + inv.chi) {
    throw InconsistentData("eigentable sums to " + std::to_string(p2) + ", expected K²+χ = " +
                           std::to_string(inv.K2 + inv.chi));
  }

  ElementSubgroup kernel = grouplib::common_kernel(G, contributing);
  const bool very_ample = bideg.first >= 1 && bideg.second >= 1;
  auto verdict = covers::bicanonical_verdict(kernel, inv.K2, very_ample);

  return BicanonicalReport{g1,   g2, freeness,          inv, bideg, std::move(rows), p2,
                           std::move(kernel), std::move(verdict)};
}

}  // namespace bicanon::beauville
