#pragma once

// Random inputs for the property suites, shared by the unit tests and the
// acceptance binary.

#include <algorithm>
#include <optional>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "bicanon/beauville.hpp"
#include "bicanon/covers.hpp"
#include "bicanon/errors.hpp"
#include "bicanon/grouplib.hpp"
#include "bicanon/linsys.hpp"

namespace gen {

using bicanon::covers::BranchDataP1;
using bicanon::grouplib::AbelianGroup;
using bicanon::grouplib::Automorphism;
using bicanon::grouplib::ElementSubgroup;
using bicanon::grouplib::GroupElement;

// Random Z2^n data on P1 (n <= 4, at most 8 points) that satisfies the parity
// and generation conditions, with line bundles for the dual basis.
inline std::vector<BranchDataP1> random_valid_data(std::mt19937& rng, int wanted) {
  std::vector<BranchDataP1> out;
  std::uniform_int_distribution<int> rank(1, 4), npts(0, 8);
  int serial = 0;
  while (static_cast<int>(out.size()) < wanted) {
    const auto G = AbelianGroup(std::vector<std::int64_t>(rank(rng), 2));
    const auto elements = G.elements();
    std::uniform_int_distribution<std::size_t> pick(1, elements.size() - 1);
    BranchDataP1 d{G, {}, {}};
    const int k = npts(rng);
    for (int p = 0; p < k; ++p) {
      const auto g = elements[pick(rng)];
      auto it = std::find_if(d.entries.begin(), d.entries.end(), [&](const auto& e) { return e.element == g; });
      const std::string name = "p" + std::to_string(serial++);
      if (it == d.entries.end()) {
        d.entries.push_back({g, 1, {name}});
      } else {
        it->degree += 1;
        it->points.push_back(name);
      }
    }
    bool ok = true;
    for (const auto& chi : G.characters()) {
      std::int64_t s = 0;
      for (const auto& e : d.entries)
        if (G.pair(chi, e.element)) s += e.degree;
      ok = ok && s % 2 == 0;
    }
    std::vector<GroupElement> gens;
    for (const auto& e : d.entries) gens.push_back(e.element);
    ok = ok && ElementSubgroup(G, gens).order() == G.order();
    if (!ok) continue;
    for (std::size_t i = 0; i < G.rank(); ++i) {
      std::vector<std::int64_t> c(G.rank(), 0);
      c[i] = 1;
      std::int64_t s = 0;
      for (const auto& e : d.entries)
        if (e.element.coords[i]) s += e.degree;
      d.line_bundles.push_back({G.character(c), s / 2});
    }
    out.push_back(std::move(d));
  }
  return out;
}

// Draws k-1 branch elements from `allowed` and closes up with their sum, so the
// product of the local monodromies is trivial.
inline std::optional<BranchDataP1> random_curve(std::mt19937& rng, const AbelianGroup& G, int points,
                                                const std::string& stem, const std::vector<GroupElement>& allowed) {
  if (allowed.empty()) return std::nullopt;
  std::uniform_int_distribution<std::size_t> pick(0, allowed.size() - 1);
  std::vector<GroupElement> drawn;
  GroupElement total = G.zero();
  for (int p = 0; p + 1 < points; ++p) {
    drawn.push_back(allowed[pick(rng)]);
    total = G.add(total, drawn.back());
  }
  if (std::find(allowed.begin(), allowed.end(), total) == allowed.end()) return std::nullopt;
  drawn.push_back(total);
  BranchDataP1 d{G, {}, {}};
  for (std::size_t p = 0; p < drawn.size(); ++p) {
    const auto& g = drawn[p];
    auto it = std::find_if(d.entries.begin(), d.entries.end(), [&](const auto& e) { return e.element == g; });
    const auto name = stem + std::to_string(p);
    if (it == d.entries.end()) {
      d.entries.push_back({g, 1, {name}});
    } else {
      ++it->degree;
      it->points.push_back(name);
    }
  }
  return d;
}

inline std::optional<Automorphism> random_automorphism(std::mt19937& rng, const AbelianGroup& G) {
  std::uniform_int_distribution<int> bit(0, 1);
  std::vector<bicanon::grouplib::Residues> cols(G.rank(), bicanon::grouplib::Residues(G.rank()));
  for (auto& c : cols)
    for (auto& v : c) v = bit(rng);
  try {
    return Automorphism(G, cols);
  } catch (const bicanon::InvalidInput&) {
    return std::nullopt;
  }
}

// One draw of the product-quotient fuzzer; nullopt when a filter rejects it.
// Point counts k satisfy (g1-1)(g2-1) = |G| with g - 1 = 2^(n-2) (k - 4). For
// n = 2 both fixed sets need two of the three nonzero elements, so no free
// action exists there.
inline std::optional<bicanon::beauville::ProductQuotientSpec> random_free_spec(std::mt19937& rng) {
  static const std::vector<std::tuple<int, int, int>> shapes{{3, 5, 6}, {3, 6, 5}, {4, 5, 5}};
  std::uniform_int_distribution<std::size_t> pick_shape(0, shapes.size() - 1);
  const auto [n, k1, k2] = shapes[pick_shape(rng)];
  const AbelianGroup G(std::vector<std::int64_t>(n, 2));
  const auto psi = random_automorphism(rng, G);
  if (!psi) return std::nullopt;
  std::vector<GroupElement> nonzero;
  for (const auto& g : G.elements())
    if (g != G.zero()) nonzero.push_back(g);
  const auto c1 = random_curve(rng, G, k1, "P", nonzero);
  if (!c1) return std::nullopt;
  // second curve avoids psi(fix1)
  const auto fix1 = bicanon::beauville::fixed_point_elements(*c1);
  const auto inv = psi->inverse();
  std::vector<GroupElement> allowed;
  for (const auto& g : nonzero)
    if (std::find(fix1.begin(), fix1.end(), inv.apply(g)) == fix1.end()) allowed.push_back(g);
  const auto c2 = random_curve(rng, G, k2, "Q", allowed);
  if (!c2) return std::nullopt;
  if (!bicanon::covers::validate_building_data(*c1).ok() || !bicanon::covers::validate_building_data(*c2).ok()) {
    return std::nullopt;
  }
  return bicanon::beauville::ProductQuotientSpec{*psi, *c1, *c2, {}, {}};
}

inline bicanon::linsys::Projectivity random_unimodular(std::mt19937& rng) {
  bicanon::linsys::Projectivity m{};
  for (int i = 0; i < 3; ++i) m[i][i] = 1;
  std::uniform_int_distribution<int> idx(0, 2), coef(-2, 2);
  for (int step = 0; step < 8; ++step) {
    int r = idx(rng), s = idx(rng);
    if (r == s) continue;
    const int k = coef(rng);
    for (int c = 0; c < 3; ++c) m[r][c] += k * m[s][c];
  }
  return m;
}

}  // namespace gen
