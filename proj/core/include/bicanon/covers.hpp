#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bicanon/grouplib.hpp"
#include "bicanon/piclattice.hpp"

namespace bicanon::covers {

using grouplib::AbelianGroup;
using grouplib::Character;
using grouplib::ElementSubgroup;
using grouplib::GroupElement;
using piclattice::DivisorClass;

struct CoverInvariants {
  std::int64_t K2 = 0;
  std::int64_t chi = 0;
  std::int64_t pg = 0;
  std::int64_t q = 0;

  bool operator==(const CoverInvariants&) const = default;
};

// q = pg + 1 - chi; throws if that is negative.
CoverInvariants make_invariants(std::int64_t K2, std::int64_t chi, std::int64_t pg);

std::string to_string(const CoverInvariants& inv);

// ---------------------------------------------------------------------------
// Double covers defined by 2M = D.

struct DoubleCoverInput {
  std::int64_t chi_base = 1;
  std::int64_t pg_base = 0;
  std::int64_t K2_base = 0;
  std::int64_t M_squared = 0;
  std::int64_t M_dot_K = 0;
  std::int64_t h0_K_plus_M = 0;

  // Reads M^2, M.K, K^2 off explicit classes. When a branch class is given,
  // 2M = D is checked.
  static DoubleCoverInput from_classes(std::int64_t chi_base, std::int64_t pg_base, const DivisorClass& K,
                                       const DivisorClass& M, std::int64_t h0_K_plus_M,
                                       const std::optional<DivisorClass>& branch = std::nullopt);
};

// K_Y^2 = 2(K+M)^2, chi(O_Y) = 2 chi(O_S) + M(K+M)/2, p_g(Y) = p_g(S) + h0(K+M).
CoverInvariants double_cover_invariants(const DoubleCoverInput& in);

// ---------------------------------------------------------------------------
// Building data.

struct ValidationReport {
  std::vector<std::string> checks;    // relations that were verified
  std::vector<std::string> failures;  // relations that failed, first failure first

  bool ok() const noexcept { return failures.empty(); }
};

struct BranchEntryP1 {
  GroupElement element;
  std::int64_t degree = 0;
  std::vector<std::string> points;  // optional; when present degree must equal points.size()
};

struct LineBundleP1 {
  Character character;
  std::int64_t degree = 0;
};

struct BranchDataP1 {
  AbelianGroup group;
  std::vector<BranchEntryP1> entries;
  std::vector<LineBundleP1> line_bundles;

  std::int64_t degree_of(const GroupElement& g) const;  // 0 when absent
  std::int64_t total_degree() const;
};

struct BranchEntrySurface {
  GroupElement element;
  DivisorClass divisor;
  // Optional decomposition into irreducible components (names are for display).
  std::vector<DivisorClass> components;
  std::vector<std::string> component_names;
};

struct LineBundleSurface {
  Character character;
  DivisorClass line_bundle;
};

struct BranchDataSurface {
  AbelianGroup group;
  std::shared_ptr<const piclattice::Lattice> lattice;
  std::vector<BranchEntrySurface> entries;
  std::vector<LineBundleSurface> line_bundles;

  DivisorClass total_branch() const;
};

// For Z2^n: 2 L_chi = sum of D_gamma over gamma outside ker chi, for every
// given L_chi; plus support disjointness (P1) and connectedness of the cover.
ValidationReport validate_building_data(const BranchDataP1& data);
ValidationReport validate_building_data(const BranchDataSurface& data);

// Riemann-Hurwitz with cyclic inertia <gamma> over each point of D_gamma:
// 2g - 2 = |G| (-2 + sum_P (1 - 1/ord(gamma_P))).
std::int64_t rh_genus(const BranchDataP1& data);

struct EigensheafEntry {
  Character character;
  std::int64_t degree = 0;
};

struct EigensheafTable {
  AbelianGroup group;
  std::vector<EigensheafEntry> entries;  // every character, lexicographic

  std::int64_t degree_of(const Character& chi) const;
};

// Z2^n only: deg L_chi = (1/2) sum_{gamma not in ker chi} deg D_gamma.
EigensheafTable eigensheaf_degrees(const BranchDataP1& data);

// g = 1 - sum_chi (1 - deg L_chi).
std::int64_t genus_from_eigensheaves(const EigensheafTable& table);

// Z2^n only: L_chi = (1/2) sum_{gamma not in ker chi} D_gamma for every
// nontrivial chi, in lexicographic character order.
std::vector<LineBundleSurface> surface_eigensheaves(const BranchDataSurface& data);

using H0Oracle = std::function<std::int64_t(const DivisorClass&)>;

struct CanonicalPart {
  Character character;
  DivisorClass line_bundle;  // L_chi
  DivisorClass adjoint;      // K + L_chi
  std::int64_t h0 = 0;
};

struct SurfaceCoverResult {
  CoverInvariants invariants;          // of the cover X itself
  ValidationReport validation;
  std::vector<LineBundleSurface> eigensheaves;
  std::vector<CanonicalPart> canonical_parts;
  DivisorClass bicanonical_base;       // 2K + D, with 2K_X = pi^*(2K + D)
  std::int64_t minus_one_curves = 0;   // (-1)-curves over (-2)-curves in the branch locus
  std::int64_t minimal_K2 = 0;         // K^2 after contracting them
};

// Z2^n cover X -> Sigma of a rational surface:
//   p_g(X) = sum_chi h0(K + L_chi), chi(O_X) = |G| + (1/2) sum L_chi (K + L_chi),
//   K_X^2 = |G| (2K + D)^2 / 4.
// Throws InvalidInput when validation fails or chi is not integral.
SurfaceCoverResult z22_surface_cover_invariants(const BranchDataSurface& data, const H0Oracle& h0);

struct CharacterDimension {
  Character character;
  std::string label;
  std::int64_t dimension = 0;
};

// [h0(total), h0(total - L_chi) for each given chi]. Trivial character first.
std::vector<CharacterDimension> projection_decomposition(const DivisorClass& total,
                                                         const std::vector<LineBundleSurface>& line_bundles,
                                                         const H0Oracle& h0);

// ---------------------------------------------------------------------------
// Degree verdicts shared by the cover examples.

enum class VerdictKind { Birational, ComposedWithSubgroup, Undetermined };

struct BicanonicalVerdict {
  VerdictKind kind = VerdictKind::Undetermined;
  std::int64_t subgroup_order = 1;
  std::vector<GroupElement> subgroup_generators;
  std::optional<std::int64_t> degree;
  std::string reason;
};

// kernel: subgroup of the Galois group acting trivially on H0(2K).
// separates_orbits: the invariant part is known to give a map that is
// birational on the Galois quotient (e.g. a very ample base system).
BicanonicalVerdict bicanonical_verdict(const ElementSubgroup& kernel, std::int64_t K2, bool separates_orbits);

std::string to_string(const BicanonicalVerdict& v);

}  // namespace bicanon::covers
