#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "bicanon/exact_linalg.hpp"
#include "bicanon/piclattice.hpp"

namespace bicanon::linsys {

using exact::BigInt;

// Point of P2 with integer homogeneous coordinates (rational points are
// given after clearing denominators).
struct ProjectivePoint {
  std::array<BigInt, 3> coords;
};

// Three points (zero-based indices) declared collinear or non-collinear.
struct Incidence {
  std::array<std::size_t, 3> points;
  bool collinear = true;
};

using Projectivity = std::array<std::array<BigInt, 3>, 3>;

class PointConfig {
 public:
  // Verifies that the points are pairwise distinct and every declared incidence holds.
  PointConfig(std::vector<ProjectivePoint> points, std::vector<Incidence> incidences = {});

  const std::vector<ProjectivePoint>& points() const noexcept { return points_; }
  const std::vector<Incidence>& incidences() const noexcept { return incidences_; }
  std::size_t size() const noexcept { return points_.size(); }

  bool collinear(std::size_t i, std::size_t j, std::size_t k) const;

  // Image under an invertible 3x3 integer matrix; incidences carry over.
  PointConfig transformed(const Projectivity& m) const;

 private:
  std::vector<ProjectivePoint> points_;
  std::vector<Incidence> incidences_;
};

// P1=(1:0:0), P2=(0:1:0), P3=(0:0:1), P4=(1:1:1), P5=(1:1:0), P6=(0:1:1),
// with P5 on P1P2 and P3P4, P6 on P1P4 and P2P3.
PointConfig quadrilateral_config();

// Plane curves of degree `degree` with multiplicity multiplicities[i] at point i.
struct FatPointSystem {
  std::int64_t degree = 0;
  std::vector<std::int64_t> multiplicities;
};

// Number of monomials of degree d in three variables.
std::int64_t monomial_count(std::int64_t degree);

// The interpolation matrix: one column per degree-d monomial, one row per
// partial derivative of order < m_i evaluated at P_i.
exact::Matrix interpolation_matrix(const PointConfig& cfg, const FatPointSystem& sys);

// h0 of the system: (d+1)(d+2)/2 - rank of the interpolation matrix.
std::int64_t h0_fat_points(const PointConfig& cfg, const FatPointSystem& sys);

struct H0Result {
  std::int64_t dimension = 0;
  FatPointSystem system;            // the system actually evaluated
  std::vector<std::string> steps;   // fixed-component removals and other notes
};

// h0 of d l - sum m_i e_i on the blowup of P2 at the configuration's points.
// Exceptional curves with cls.e_i < 0 are fixed components and are removed first.
H0Result h0_class(const PointConfig& cfg, const piclattice::DivisorClass& cls);

}  // namespace bicanon::linsys
