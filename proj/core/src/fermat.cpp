#include "bicanon/fermat.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "bicanon/errors.hpp"
#include "bicanon/exact_linalg.hpp"

namespace bicanon::fermat {

namespace {

constexpr std::int64_t kP = 5;  // the group is Z_kP^2 and the curve has degree kP

std::int64_t mod5(std::int64_t v) {
  const std::int64_t r = v % kP;
  return r < 0 ? r + kP : r;
}

std::string superscript(std::int64_t k) {
  static const char* digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  std::string out;
  if (k < 0) {
    out = "⁻";
    k = -k;
  }
  for (char c : std::to_string(k)) out += digits[c - '0'];
  return out;
}

void require_degree_zero(const RatioVector& v) {
  if (v[0] + v[1] + v[2] != 0 || v[3] + v[4] + v[5] != 0) {
    throw InvalidInput("ratio vector " + to_string(v) + " is not of degree 0 on each factor");
  }
}

exact::Row to_row(const RatioVector& v) {
  exact::Row r;
  for (auto x : v) r.emplace_back(x);
  return r;
}

}  // namespace

bool BiMonomial::valid() const noexcept {
  return i >= 0 && j >= 0 && alpha >= 0 && beta >= 0 && i + j <= 4 && alpha + beta <= 4;
}

RatioVector exponents(const BiMonomial& m) {
  return {m.i, m.j, 4 - m.i - m.j, m.alpha, m.beta, 4 - m.alpha - m.beta};
}

std::string to_string(const RatioVector& v) {
  static const char* names[] = {"x", "y", "z", "x₁", "y₁", "z₁"};
  std::string out;
  for (std::size_t k = 0; k < 6; ++k) {
    if (v[k] == 0) continue;
    out += names[k];
    if (v[k] != 1) out += superscript(v[k]);
  }
  return out.empty() ? "1" : out;
}

std::string to_string(const BiMonomial& m) { return to_string(exponents(m)); }

AbelianGroup fermat_group() { return AbelianGroup({kP, kP}); }

Automorphism fermat_automorphism() { return Automorphism(fermat_group(), {{1, -1}, {1, 2}}); }

std::int64_t fermat_genus() { return (kP - 1) * (kP - 2) / 2; }

std::int64_t weight(std::int64_t a, std::int64_t b, const BiMonomial& m) {
  return mod5(a * (2 + m.i + m.alpha - m.beta) + b * (3 + m.j + m.alpha + 2 * m.beta));
}

std::int64_t product_weight(const GroupElement& g1, const GroupElement& g2, const BiMonomial& m) {
  const auto factor = [](const GroupElement& g, std::int64_t ex, std::int64_t ey) {
    return g.coords.at(0) * (ex + 2) + g.coords.at(1) * (ey + 2);
  };
  return mod5(factor(g1, m.i, m.j) + factor(g2, m.alpha, m.beta));
}

std::vector<BiMonomial> all_bicanonical_monomials() {
  std::vector<BiMonomial> out;
  for (int i = 0; i <= 4; ++i) {
    for (int j = 0; i + j <= 4; ++j) {
      for (int a = 0; a <= 4; ++a) {
        for (int b = 0; a + b <= 4; ++b) out.push_back({i, j, a, b});
      }
    }
  }
  return out;
}

std::vector<BiMonomial> invariant_monomials() {
  const auto G = fermat_group();
  const auto elems = G.elements();
  std::vector<BiMonomial> out;
  for (const auto& m : all_bicanonical_monomials()) {
    const bool inv = std::all_of(elems.begin(), elems.end(),
                                 [&](const GroupElement& g) { return weight(g.coords[0], g.coords[1], m) == 0; });
    if (inv) out.push_back(m);
  }
  return out;
}

ActionDerivation derive_action_exponent() {
  const auto G = fermat_group();
  const auto psi = fermat_automorphism();
  ActionDerivation out;
  for (std::int64_t a = 0; a < kP; ++a) {
    for (std::int64_t b = 0; b < kP; ++b) {
      const GroupElement g = G.element({a, b});
      const GroupElement pg = psi.apply(g);
      for (int i = 0; i < kP; ++i) {
        for (int j = 0; j < kP; ++j) {
          for (int al = 0; al < kP; ++al) {
            for (int be = 0; be < kP; ++be) {
              // Exponents are taken mod 5 here, so the check is the polynomial identity.
              const BiMonomial m{i, j, al, be};
              ++out.tuples_checked;
              if (product_weight(g, pg, m) != weight(a, b, m) && out.holds) {
                out.holds = false;
                out.counterexample = std::array<std::int64_t, 6>{a, b, i, j, al, be};
              }
            }
          }
        }
      }
    }
  }
  return out;
}

Character residual_character(const BiMonomial& m) {
  const auto G = fermat_group();
  grouplib::Residues coords(G.rank());
  for (std::size_t k = 0; k < G.rank(); ++k) coords[k] = product_weight(G.zero(), G.basis(k), m);
  return G.character(std::move(coords));
}

ElementSubgroup residual_kernel(const std::vector<BiMonomial>& monomials, const BiMonomial& base) {
  const auto G = fermat_group();
  const Character lambda0 = residual_character(base);
  std::vector<Character> diffs;
  for (const auto& m : monomials) diffs.push_back(G.subtract(residual_character(m), lambda0));
  return grouplib::common_kernel(G, diffs);
}

ElementSubgroup residual_kernel(const std::vector<BiMonomial>& monomials) {
  if (monomials.empty()) return grouplib::common_kernel(fermat_group(), {});
  return residual_kernel(monomials, monomials.front());
}

bool verify_ratio_identity(const RatioVector& target, const Combination& combo) {
  RatioVector sum{};
  for (const auto& [m, power] : combo) {
    const auto e = exponents(m);
    for (std::size_t k = 0; k < 6; ++k) sum[k] += power * e[k];
  }
  return sum == target;
}

bool field_lattice_contains(const RatioVector& target, const std::vector<RatioVector>& generators) {
  require_degree_zero(target);
  exact::Matrix gens;
  for (const auto& g : generators) {
    require_degree_zero(g);
    gens.push_back(to_row(g));
  }
  return exact::lattice_contains(gens, to_row(target));
}

std::vector<RatioVector> ratio_generators(const std::vector<BiMonomial>& monomials) {
  std::vector<RatioVector> out;
  if (monomials.empty()) return out;
  const auto base = exponents(monomials.front());
  for (std::size_t n = 1; n < monomials.size(); ++n) {
    auto e = exponents(monomials[n]);
    for (std::size_t k = 0; k < 6; ++k) e[k] -= base[k];
    out.push_back(e);
  }
  return out;
}

std::vector<RatioIdentity> displayed_identities() {
  const BiMonomial x4y1z1{4, 0, 0, 1};     // x^4 y1 z1^3
  const BiMonomial y3z{0, 3, 0, 2};        // y^3 z y1^2 z1^2
  const BiMonomial xyz2{1, 1, 0, 3};       // x y z^2 y1^3 z1
  const BiMonomial x2yz{2, 1, 1, 0};       // x^2 y z x1 z1^3
  const BiMonomial z4{0, 0, 1, 3};         // z^4 x1 y1^3
  const BiMonomial x3y{3, 1, 2, 2};        // x^3 y x1^2 y1^2
  return {
      {"x⁵z⁻⁵", {5, 0, -5, 0, 0, 0}, {{x3y, 1}, {x4y1z1, 1}, {x2yz, -1}, {z4, -1}}},
      {"x₁⁵z₁⁻⁵", {0, 0, 0, 5, 0, -5}, {{z4, 2}, {y3z, 1}, {x3y, 2}, {x2yz, -1}, {xyz2, -4}}},
  };
}

beauville::ElementSet fermat_fixed_elements() {
  const auto G = fermat_group();
  // (a,b) scales (x, y, z) by eps^(a, b, 0). A point on {x_k = 0} has its two
  // other coordinates nonzero, so it is fixed iff their scalings agree.
  std::set<GroupElement> out;
  for (const auto& g : G.elements()) {
    if (g == G.zero()) continue;
    const std::array<std::int64_t, 3> scale{g.coords[0], g.coords[1], 0};
    for (std::size_t k = 0; k < 3; ++k) {
      const std::size_t u = (k + 1) % 3;
      const std::size_t v = (k + 2) % 3;
      if (mod5(scale[u] - scale[v]) == 0) out.insert(g);
    }
  }
  return {out.begin(), out.end()};
}

FermatReport fermat_report() {
  const auto G = fermat_group();
  const auto psi = fermat_automorphism();
  const auto inv = beauville::beauville_invariants(fermat_genus(), fermat_genus(), G.order());
  const auto fixed = fermat_fixed_elements();
  const auto freeness = beauville::is_free(psi, fixed, fixed);
  if (!freeness.free) throw InvalidInput("the Fermat action is not free");

  auto basis = invariant_monomials();
  if (static_cast<std::int64_t>(basis.size()) != inv.K2 + inv.chi) {
    throw InconsistentData("invariant bicanonical monomials: " + std::to_string(basis.size()) +
                           ", expected K²+χ = " + std::to_string(inv.K2 + inv.chi));
  }

  std::vector<std::pair<std::string, bool>> identities;
  for (const auto& id : displayed_identities()) identities.emplace_back(id.name, verify_ratio_identity(id.target, id.combo));

  const auto gens = ratio_generators(basis);
  const bool has_x = field_lattice_contains({5, 0, -5, 0, 0, 0}, gens);
  const bool has_x1 = field_lattice_contains({0, 0, 0, 5, 0, -5}, gens);

  auto kernel = residual_kernel(basis);
  // The ratios generate a field containing C(P1 x P1); with no group element
  // acting trivially on it, the field is all of C(S).
  auto verdict = covers::bicanonical_verdict(kernel, inv.K2, has_x && has_x1);
  if (verdict.kind == covers::VerdictKind::Birational) {
    verdict.reason = "the monomial ratios contain C(P¹×P¹) and no nonzero element of G fixes them";
  }
  return FermatReport{inv,     freeness, derive_action_exponent(), std::move(basis), std::move(identities),
                      has_x,   has_x1,   std::move(kernel),        std::move(verdict)};
}

}  // namespace bicanon::fermat
