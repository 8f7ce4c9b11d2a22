#pragma once

// Building data of the worked examples, built directly in C++ so
// that tests never go through the scenario parser.

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "bicanon/beauville.hpp"
#include "bicanon/covers.hpp"
#include "bicanon/grouplib.hpp"
#include "bicanon/piclattice.hpp"

namespace fixtures {

using bicanon::covers::BranchDataP1;
using bicanon::covers::BranchDataSurface;
using bicanon::grouplib::AbelianGroup;
using bicanon::grouplib::Automorphism;
using bicanon::grouplib::Character;
using bicanon::grouplib::GroupElement;
using bicanon::piclattice::DivisorClass;

inline const bicanon::piclattice::DivisorCatalog& cat() { return bicanon::piclattice::quadrilateral_catalog(); }
inline DivisorClass named(const std::string& n) { return cat().at(n); }
inline DivisorClass cls(const std::map<std::string, std::int64_t>& m) {
  return DivisorClass::from_map(cat().lattice(), m);
}

// Z2^2 cover of the blown-up quadrilateral.
inline AbelianGroup inoue7_group() { return AbelianGroup({2, 2}); }

inline DivisorClass inoue7_L1() { return cls({{"l", 5}, {"e1", -1}, {"e2", -2}, {"e3", -1}, {"e4", -3}, {"e5", -2}, {"e6", -2}}); }
inline DivisorClass inoue7_L2() { return cls({{"l", 6}, {"e1", -2}, {"e2", -2}, {"e3", -2}, {"e4", -2}, {"e5", -3}, {"e6", -3}}); }
inline DivisorClass inoue7_L3() { return cls({{"l", 4}, {"e1", -2}, {"e2", -2}, {"e3", -2}, {"e4", -1}, {"e5", -1}, {"e6", -1}}); }

inline BranchDataSurface inoue7_data() {
  const auto G = inoue7_group();
  auto entry = [&](GroupElement g, std::vector<std::string> names) {
    bicanon::covers::BranchEntrySurface e{std::move(g), cat().sum(names), {}, names};
    for (const auto& n : names) e.components.push_back(named(n));
    return e;
  };
  BranchDataSurface d{G, cat().lattice(), {}, {}};
  d.entries.push_back(entry(G.element({1, 0}), {"Delta1", "f2", "S1", "S2"}));
  d.entries.push_back(entry(G.element({0, 1}), {"Delta2", "f3"}));
  d.entries.push_back(entry(G.element({1, 1}), {"Delta3", "f1", "f1", "S3", "S4"}));
  // chi_i is the nontrivial character orthogonal to gamma_i.
  d.line_bundles.push_back({G.character({0, 1}), inoue7_L1()});
  d.line_bundles.push_back({G.character({1, 0}), inoue7_L2()});
  return d;
}

// -K + f1 + sum S_j, the class whose pullback is 2K_X.
inline DivisorClass inoue7_bicanonical_total() {
  return -named("K") + named("f1") + cat().sum({"S1", "S2", "S3", "S4"});
}

inline std::vector<bicanon::covers::LineBundleSurface> inoue7_line_bundles() {
  const auto G = inoue7_group();
  return {{G.character({0, 1}), inoue7_L1()}, {G.character({1, 0}), inoue7_L2()}, {G.character({1, 1}), inoue7_L3()}};
}

inline BranchDataP1 p1_data(const AbelianGroup& G, const std::vector<std::pair<std::vector<std::int64_t>, std::vector<std::string>>>& entries) {
  BranchDataP1 d{G, {}, {}};
  for (const auto& [coords, pts] : entries) {
    d.entries.push_back({G.element(coords), static_cast<std::int64_t>(pts.size()), pts});
  }
  return d;
}

inline void add_dual_basis_bundles(BranchDataP1& d, std::int64_t degree) {
  for (std::size_t i = 0; i < d.group.rank(); ++i) {
    std::vector<std::int64_t> c(d.group.rank(), 0);
    c[i] = 1;
    d.line_bundles.push_back({d.group.character(c), degree});
  }
}

inline AbelianGroup beauville8_group() { return AbelianGroup({2, 2, 2}); }

inline BranchDataP1 beauville8_c1() {
  auto d = p1_data(beauville8_group(), {{{1, 0, 0}, {"P1", "P2"}}, {{0, 1, 0}, {"P3", "P4"}}, {{0, 0, 1}, {"P5", "P6"}}});
  add_dual_basis_bundles(d, 1);
  return d;
}

inline BranchDataP1 beauville8_c2() {
  auto d = p1_data(beauville8_group(),
                   {{{1, 0, 0}, {"Q1"}}, {{0, 1, 0}, {"Q2"}}, {{1, 1, 0}, {"Q3"}}, {{0, 0, 1}, {"Q4", "Q5"}}});
  add_dual_basis_bundles(d, 1);
  return d;
}

inline Automorphism beauville8_psi() {
  return Automorphism(beauville8_group(), {{1, 0, 1}, {0, 1, 1}, {1, 1, 1}});
}

inline bicanon::beauville::ProductQuotientSpec beauville8_spec() { return {beauville8_psi(), beauville8_c1(), beauville8_c2(), {}, {}}; }

inline AbelianGroup z24_group() { return AbelianGroup({2, 2, 2, 2}); }

inline BranchDataP1 z24_curve(const std::string& stem) {
  auto d = p1_data(z24_group(), {{{1, 1, 1, 1}, {stem + "0"}},
                                 {{1, 0, 0, 0}, {stem + "1"}},
                                 {{0, 1, 0, 0}, {stem + "2"}},
                                 {{0, 0, 1, 0}, {stem + "3"}},
                                 {{0, 0, 0, 1}, {stem + "4"}}});
  add_dual_basis_bundles(d, 1);
  return d;
}

inline Automorphism z24_psi() {
  return Automorphism(z24_group(), {{1, 0, 1, 0}, {0, 1, 0, 1}, {1, 0, 0, 1}, {1, 0, 1, 1}});
}

inline bicanon::beauville::ProductQuotientSpec z24_spec() { return {z24_psi(), z24_curve("P"), z24_curve("Q"), {}, {}}; }

}  // namespace fixtures
