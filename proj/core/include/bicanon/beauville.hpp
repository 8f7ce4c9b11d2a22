#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bicanon/covers.hpp"
#include "bicanon/grouplib.hpp"

namespace bicanon::beauville {

using covers::BicanonicalVerdict;
using covers::BranchDataP1;
using covers::CoverInvariants;
using grouplib::AbelianGroup;
using grouplib::Automorphism;
using grouplib::Character;
using grouplib::ElementSubgroup;
using grouplib::GroupElement;

// Sorted, duplicate free.
using ElementSet = std::vector<GroupElement>;

// Nonzero elements of the inertia groups <gamma> over the branch points.
ElementSet fixed_point_elements(const BranchDataP1& data);

struct FreenessResult {
  bool free = true;
  std::optional<GroupElement> witness;  // some g != 0 with g in fix1 and psi(g) in fix2
};

FreenessResult is_free(const Automorphism& psi, const ElementSet& fix1, const ElementSet& fix2);

// chi = (g1-1)(g2-1)/|G| = 1, K^2 = 8 chi, p_g = q = 0.
CoverInvariants beauville_invariants(std::int64_t g1, std::int64_t g2, std::int64_t order);

struct Bidegree {
  std::int64_t first = 0;
  std::int64_t second = 0;
  bool operator==(const Bidegree&) const = default;
};

// 2K_S = pi^* O(deg B1 - 4, deg B2 - 4) when every inertia group has order 2.
Bidegree two_k_bidegree(const BranchDataP1& branch1, const BranchDataP1& branch2);

// (G x G)/Gamma_psi -> G, [(a, b)] -> b - psi(a).
GroupElement quotient_iso(const Automorphism& psi, const GroupElement& a, const GroupElement& b);

// The representative (a, h + psi(a)) of the class mapped to h.
GroupElement quotient_representative(const Automorphism& psi, const GroupElement& h, const GroupElement& a);

// A character of G x G vanishing on Gamma, seen as a character of G through quotient_iso.
Character push_to_quotient(const Automorphism& psi, const Character& joint);

struct ProductQuotientSpec {
  Automorphism psi;
  BranchDataP1 branch1;
  BranchDataP1 branch2;
  // Explicit fixed-element sets, for curves not given by building data.
  std::optional<ElementSet> fixed1;
  std::optional<ElementSet> fixed2;
};

struct EigenRow {
  Character chi1;
  Character chi2;
  std::int64_t degree1 = 0;  // bidegree of M_chi
  std::int64_t degree2 = 0;
  std::int64_t dimension = 0;
};

struct BicanonicalReport {
  std::int64_t genus1 = 0;
  std::int64_t genus2 = 0;
  FreenessResult freeness;
  CoverInvariants invariants;
  Bidegree bidegree;
  std::vector<EigenRow> eigentable;  // all of Gamma^perp, lexicographic
  std::int64_t p2 = 0;
  ElementSubgroup kernel;            // inside (G x G)/Gamma = G
  BicanonicalVerdict verdict;

  // Throws InvalidInput for characters outside Gamma^perp.
  std::int64_t dimension_of(const Character& chi1, const Character& chi2) const;
  std::vector<std::int64_t> nonzero_dimensions() const;
};

// Throws InvalidInput on invalid branch data, (g1-1)(g2-1) != |G| or a non-free
// action, and InconsistentData when the eigentable does not sum to K^2 + chi.
BicanonicalReport bicanonical_report(const ProductQuotientSpec& spec);

}  // namespace bicanon::beauville
