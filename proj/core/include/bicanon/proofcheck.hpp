#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bicanon/covers.hpp"
#include "bicanon/exact_linalg.hpp"
#include "bicanon/piclattice.hpp"

namespace bicanon::proofcheck {

// Facts about the degree-K^2 surfaces that a degree-4 bicanonical map would
// have to land on. They come from the classification of such surfaces and
// are encoded here rather than derived.
namespace nagata {
inline constexpr std::int64_t kMapDegree = 4;
// h0(2K - L) when L maps onto a twisted cubic (K^2 = 7).
inline constexpr std::int64_t kH0TwistedCubic = 4;
// h0(2K - L - D) in the case L_0 = 2D (K^2 = 7).
inline constexpr std::int64_t kH0HalfPencil = 3;
// h0(A) for A the pullback of a hyperplane of the quadric (K^2 = 8).
inline constexpr std::int64_t kH0QuadricHyperplane = 4;
// h0(L + L_0) for the anticanonical image of P2 blown up at one point (K^2 = 8).
inline constexpr std::int64_t kH0OnePointBlowup = 5;
}  // namespace nagata

// K_Y^2 >= 16 (q(Y) - 1).
bool check_corollary(std::int64_t K2_Y, std::int64_t q_Y);

struct CaseRecord {
  std::string label;
  std::string base;              // the bicanonical image
  covers::DoubleCoverInput input;
  covers::CoverInvariants invariants;
  bool verdict = true;           // false: the inequality fails, i.e. a contradiction
};

// The four double covers that rule out degree 4 for K^2 = 7, 8. Throws
// InconsistentData if any record disagrees with its stored expectation.
std::vector<CaseRecord> run_case_table();

// All m >= 1 with C ~ mL satisfying K.C - 2 <= C^2 < K.C/2 < 2, where
// K ~ 3L and L^2 = 1. Only K2 = 9 is meaningful.
std::vector<std::int64_t> reider_enumeration(std::int64_t K2);

struct DoubleCoverCaseRow {
  std::int64_t a = 0;
  std::int64_t theta_dot_C = 0;
  std::int64_t C_squared = 0;
  bool matches = false;  // theta.C = 2a and C^2 = -4 - 2a^2
};

struct DoubleCoverCaseReport {
  std::int64_t K_dot_L0 = 0;
  std::int64_t L0_squared = 0;
  bool L0_divisible_by_2 = false;
  std::vector<DoubleCoverCaseRow> rows;
  piclattice::IntMatrix excluded_gram;   // A, B, theta with AB = 0, a = 1
  std::vector<exact::BigInt> minors;
  bool negative_definite = false;
  bool excluded = false;  // negative definite rank 3 inside a form of signature (1, 2)
};

DoubleCoverCaseReport double_cover_cases();

}  // namespace bicanon::proofcheck
