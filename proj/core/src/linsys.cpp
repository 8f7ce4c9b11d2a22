#include "bicanon/linsys.hpp"

#include <utility>

#include "bicanon/errors.hpp"

namespace bicanon::linsys {

namespace {

BigInt det3(const std::array<BigInt, 3>& a, const std::array<BigInt, 3>& b, const std::array<BigInt, 3>& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
         a[2] * (b[0] * c[1] - b[1] * c[0]);
}

bool proportional(const ProjectivePoint& p, const ProjectivePoint& q) {
  const auto& a = p.coords;
  const auto& b = q.coords;
  return a[0] * b[1] == a[1] * b[0] && a[0] * b[2] == a[2] * b[0] && a[1] * b[2] == a[2] * b[1];
}

// n (n-1) ... (n-k+1)
BigInt falling(std::int64_t n, std::int64_t k) {
  BigInt out = 1;
  for (std::int64_t i = 0; i < k; ++i) out *= (n - i);
  return out;
}

BigInt power(const BigInt& base, std::int64_t e) {
  BigInt out = 1;
  for (std::int64_t i = 0; i < e; ++i) out *= base;
  return out;
}

std::vector<std::array<std::int64_t, 3>> exponent_triples(std::int64_t total) {
  std::vector<std::array<std::int64_t, 3>> out;
  for (std::int64_t a = total; a >= 0; --a) {
    for (std::int64_t b = total - a; b >= 0; --b) out.push_back({a, b, total - a - b});
  }
  return out;
}

}  // namespace

PointConfig::PointConfig(std::vector<ProjectivePoint> points, std::vector<Incidence> incidences)
    : points_(std::move(points)), incidences_(std::move(incidences)) {
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const auto& c = points_[i].coords;
    if (c[0] == 0 && c[1] == 0 && c[2] == 0) {
      throw InvalidInput("point P" + std::to_string(i + 1) + " has all coordinates zero");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (proportional(points_[i], points_[j])) {
        throw InvalidInput("points P" + std::to_string(j + 1) + " and P" + std::to_string(i + 1) + " coincide");
      }
    }
  }
  for (const auto& inc : incidences_) {
    for (auto idx : inc.points) {
      if (idx >= points_.size()) throw InvalidInput("incidence refers to a missing point");
    }
    if (collinear(inc.points[0], inc.points[1], inc.points[2]) != inc.collinear) {
      throw InvalidInput("declared incidence fails for P" + std::to_string(inc.points[0] + 1) + ", P" +
                         std::to_string(inc.points[1] + 1) + ", P" + std::to_string(inc.points[2] + 1));
    }
  }
}

bool PointConfig::collinear(std::size_t i, std::size_t j, std::size_t k) const {
  return det3(points_.at(i).coords, points_.at(j).coords, points_.at(k).coords) == 0;
}

PointConfig PointConfig::transformed(const Projectivity& m) const {
  if (det3(m[0], m[1], m[2]) == 0) throw InvalidInput("projectivity matrix is singular");
  std::vector<ProjectivePoint> image;
  image.reserve(points_.size());
  for (const auto& p : points_) {
    ProjectivePoint q;
    for (std::size_t r = 0; r < 3; ++r) {
      q.coords[r] = m[r][0] * p.coords[0] + m[r][1] * p.coords[1] + m[r][2] * p.coords[2];
    }
    image.push_back(std::move(q));
  }
  return PointConfig(std::move(image), incidences_);
}

PointConfig quadrilateral_config() {
  auto pt = [](int x, int y, int z) { return ProjectivePoint{{BigInt(x), BigInt(y), BigInt(z)}}; };
  std::vector<ProjectivePoint> pts{pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1), pt(1, 1, 1), pt(1, 1, 0), pt(0, 1, 1)};
  std::vector<Incidence> inc{
      {{0, 1, 4}, true},   // P5 on P1P2
      {{2, 3, 4}, true},   // P5 on P3P4
      {{0, 3, 5}, true},   // P6 on P1P4
      {{1, 2, 5}, true},   // P6 on P2P3
      {{0, 1, 2}, false},  // the quadrilateral is nondegenerate
      {{0, 1, 3}, false},
      {{0, 2, 3}, false},
      {{1, 2, 3}, false},
  };
  return PointConfig(std::move(pts), std::move(inc));
}

std::int64_t monomial_count(std::int64_t degree) {
  return degree < 0 ? 0 : (degree + 1) * (degree + 2) / 2;
}

exact::Matrix interpolation_matrix(const PointConfig& cfg, const FatPointSystem& sys) {
  if (sys.degree < 0) throw InvalidInput("interpolation matrix needs degree >= 0");
  if (sys.multiplicities.size() > cfg.size()) {
    throw InvalidInput("more multiplicities than points in the configuration");
  }
  const auto monomials = exponent_triples(sys.degree);
  exact::Matrix rows;
  for (std::size_t i = 0; i < sys.multiplicities.size(); ++i) {
    const auto m = sys.multiplicities[i];
    if (m < 0) throw InvalidInput("multiplicities must be >= 0");
    const auto& p = cfg.points()[i].coords;
    for (std::int64_t order = 0; order < m; ++order) {
      for (const auto& der : exponent_triples(order)) {
        exact::Row row;
        row.reserve(monomials.size());
        for (const auto& mono : monomials) {
          if (mono[0] < der[0] || mono[1] < der[1] || mono[2] < der[2]) {
            row.emplace_back(0);
            continue;
          }
          BigInt v = falling(mono[0], der[0]) * falling(mono[1], der[1]) * falling(mono[2], der[2]);
          for (std::size_t k = 0; k < 3 && v != 0; ++k) v *= power(p[k], mono[k] - der[k]);
          row.push_back(std::move(v));
        }
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

std::int64_t h0_fat_points(const PointConfig& cfg, const FatPointSystem& sys) {
  if (sys.degree < 0) return 0;
  const auto rows = interpolation_matrix(cfg, sys);
  return monomial_count(sys.degree) - static_cast<std::int64_t>(exact::rank(rows));
}

H0Result h0_class(const PointConfig& cfg, const piclattice::DivisorClass& cls) {
  const auto& lat = cls.lattice();
  if (lat.kind() != piclattice::LatticeKind::Blowup) {
    throw InvalidInput("h0_class needs a class on a blowup of P2, got " + lat.name());
  }
  const auto n = static_cast<std::size_t>(lat.blowup_points());
  if (n != cfg.size()) {
    throw InvalidInput("lattice blows up " + std::to_string(n) + " points but the configuration has " +
                       std::to_string(cfg.size()));
  }
  H0Result result;
  result.system.degree = cls[0];
  result.system.multiplicities.resize(n);
  for (std::size_t i = 0; i < n; ++i) result.system.multiplicities[i] = -cls[i + 1];

  if (result.system.degree < 0) {
    result.steps.push_back("negative degree " + std::to_string(result.system.degree) + ": h0 = 0");
    result.dimension = 0;
    return result;
  }
  piclattice::DivisorClass current = cls;
  for (std::size_t i = 0; i < n; ++i) {
    const auto e = piclattice::DivisorClass::basis(cls.lattice_ptr(), lat.labels()[i + 1]);
    while (piclattice::intersect(current, e) < 0) {
      result.steps.push_back("removed fixed component " + lat.labels()[i + 1] + " (class." + lat.labels()[i + 1] +
                             " = " + std::to_string(piclattice::intersect(current, e)) + ")");
      current -= e;
    }
    result.system.multiplicities[i] = -current[i + 1];
  }
  result.dimension = h0_fat_points(cfg, result.system);
  return result;
}

}  // namespace bicanon::linsys
