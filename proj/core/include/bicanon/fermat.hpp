#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bicanon/beauville.hpp"
#include "bicanon/covers.hpp"
#include "bicanon/grouplib.hpp"

namespace bicanon::fermat {

using grouplib::AbelianGroup;
using grouplib::Automorphism;
using grouplib::Character;
using grouplib::ElementSubgroup;
using grouplib::GroupElement;

// x^i y^j z^(4-i-j) x1^alpha y1^beta z1^(4-alpha-beta): a bicanonical
// monomial on the product of two Fermat quintics.
struct BiMonomial {
  int i = 0;
  int j = 0;
  int alpha = 0;
  int beta = 0;

  auto operator<=>(const BiMonomial&) const = default;
  bool valid() const noexcept;
};

// Exponents over (x, y, z, x1, y1, z1).
using RatioVector = std::array<std::int64_t, 6>;

RatioVector exponents(const BiMonomial& m);
std::string to_string(const BiMonomial& m);
std::string to_string(const RatioVector& v);

AbelianGroup fermat_group();             // Z5^2
Automorphism fermat_automorphism();      // (1,0) -> (1,-1), (0,1) -> (1,2)
std::int64_t fermat_genus();             // genus of the plane quintic

// l = a(2+i+alpha-beta) + b(3+j+alpha+2beta) mod 5.
std::int64_t weight(std::int64_t a, std::int64_t b, const BiMonomial& m);

// Weight of (g1, g2) in G x G on m, from first principles: on each factor a
// 1-form is g/F dx^dy^dz with deg g = 2, so (a,b) contributes a(i+2)+b(j+2).
std::int64_t product_weight(const GroupElement& g1, const GroupElement& g2, const BiMonomial& m);

std::vector<BiMonomial> all_bicanonical_monomials();  // 225, lexicographic

// Monomials of weight 0 for every group element, lexicographic.
std::vector<BiMonomial> invariant_monomials();

struct ActionDerivation {
  bool holds = true;
  std::int64_t tuples_checked = 0;
  std::optional<std::array<std::int64_t, 6>> counterexample;  // (a,b,i,j,alpha,beta)
};

// product_weight(g, psi(g), m) == weight(g, m) for all (a,b,i,j,alpha,beta) mod 5.
ActionDerivation derive_action_exponent();

// lambda_m on (G x G)/Gamma = G: weight of the representative (0, h).
Character residual_character(const BiMonomial& m);

// Intersection of ker(lambda_m - lambda_base) over all m; base is the first monomial.
ElementSubgroup residual_kernel(const std::vector<BiMonomial>& monomials);
ElementSubgroup residual_kernel(const std::vector<BiMonomial>& monomials, const BiMonomial& base);

using Combination = std::vector<std::pair<BiMonomial, std::int64_t>>;

bool verify_ratio_identity(const RatioVector& target, const Combination& combo);

// Integer-lattice membership (Hermite reduction). Throws InvalidInput if a
// vector is not of degree 0 on each factor.
bool field_lattice_contains(const RatioVector& target, const std::vector<RatioVector>& generators);

// m / base for every other monomial m.
std::vector<RatioVector> ratio_generators(const std::vector<BiMonomial>& monomials);

struct RatioIdentity {
  std::string name;
  RatioVector target;
  Combination combo;
};

// x^5 z^-5 and x1^5 z1^-5 as products of invariant monomials.
std::vector<RatioIdentity> displayed_identities();

// Elements of G with fixed points on the Fermat quintic; they fix the points
// on the coordinate lines: {(a,0)} on x=0, {(0,b)} on y=0, {(a,a)} on z=0.
beauville::ElementSet fermat_fixed_elements();

struct FermatReport {
  covers::CoverInvariants invariants;
  beauville::FreenessResult freeness;
  ActionDerivation derivation;
  std::vector<BiMonomial> invariant_basis;
  std::vector<std::pair<std::string, bool>> identities;
  bool contains_x_ratio = false;   // x^5 z^-5 in the ratio lattice
  bool contains_x1_ratio = false;  // x1^5 z1^-5 in the ratio lattice
  ElementSubgroup kernel;
  covers::BicanonicalVerdict verdict;
};

// Throws InconsistentData when the basis size differs from K^2 + chi.
FermatReport fermat_report();

}  // namespace bicanon::fermat
