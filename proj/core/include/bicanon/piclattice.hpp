#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace bicanon::piclattice {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

enum class LatticeKind { Blowup, Quadric, Custom };

// Picard lattice with a fixed, labelled basis and its intersection form.
//  - Blowup(n): basis l, e1..en with gram diag(1, -1, ..., -1).
//  - Quadric:   basis h1, h2 (the two rulings of P1 x P1), gram [[0,1],[1,0]].
class Lattice {
 public:
  static Lattice blowup(int points);
  static Lattice quadric();
  static Lattice custom(std::vector<std::string> labels, IntMatrix gram);

  LatticeKind kind() const noexcept { return kind_; }
  std::size_t rank() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const IntMatrix& gram() const noexcept { return gram_; }
  // Number of blown-up points; only meaningful for Blowup.
  int blowup_points() const noexcept { return kind_ == LatticeKind::Blowup ? static_cast<int>(rank()) - 1 : 0; }
  std::size_t index_of(const std::string& label) const;
  std::string name() const;

  bool operator==(const Lattice& other) const {
    return kind_ == other.kind_ && labels_ == other.labels_ && gram_ == other.gram_;
  }

 private:
  Lattice(LatticeKind kind, std::vector<std::string> labels, IntMatrix gram);

  LatticeKind kind_;
  std::vector<std::string> labels_;
  IntMatrix gram_;
};

Lattice make_blowup_lattice(int points);

class DivisorClass {
 public:
  DivisorClass(std::shared_ptr<const Lattice> lattice, std::vector<std::int64_t> coeffs);

  static DivisorClass zero(std::shared_ptr<const Lattice> lattice);
  static DivisorClass basis(std::shared_ptr<const Lattice> lattice, const std::string& label);
  // Missing labels are zero; unknown labels throw.
  static DivisorClass from_map(std::shared_ptr<const Lattice> lattice,
                               const std::map<std::string, std::int64_t>& coeffs);

  const Lattice& lattice() const noexcept { return *lattice_; }
  const std::shared_ptr<const Lattice>& lattice_ptr() const noexcept { return lattice_; }
  const std::vector<std::int64_t>& coeffs() const noexcept { return coeffs_; }
  std::int64_t coeff(const std::string& label) const;
  std::int64_t operator[](std::size_t i) const { return coeffs_.at(i); }
  bool is_zero() const;

  DivisorClass operator+(const DivisorClass& other) const;
  DivisorClass operator-(const DivisorClass& other) const;
  DivisorClass operator-() const;
  DivisorClass& operator+=(const DivisorClass& other);
  DivisorClass& operator-=(const DivisorClass& other);
  friend DivisorClass operator*(std::int64_t k, const DivisorClass& d);

  // Exact division of every coefficient; throws when some coefficient is not divisible.
  DivisorClass divided_by(std::int64_t k) const;

  bool operator==(const DivisorClass& other) const;

  // Labelled nonzero coefficients, e.g. {"l": 5, "e1": -1}.
  std::map<std::string, std::int64_t> to_map() const;

 private:
  void require_same_lattice(const DivisorClass& other) const;

  std::shared_ptr<const Lattice> lattice_;
  std::vector<std::int64_t> coeffs_;
};

// "5l-e1-2e2", "-2h1-2h2", "0".
std::string to_string(const DivisorClass& d);

std::int64_t intersect(const DivisorClass& a, const DivisorClass& b);
inline std::int64_t self_intersection(const DivisorClass& a) { return intersect(a, a); }

DivisorClass canonical_class(const std::shared_ptr<const Lattice>& lattice);

// Intersection of pullbacks under a finite map of the given degree.
std::int64_t pullback_numerics(std::int64_t degree, const DivisorClass& a, const DivisorClass& b);

// Sylvester's criterion on exact leading minors.
bool is_negative_definite(const IntMatrix& gram);

bool is_divisible_by(const DivisorClass& a, std::int64_t k);

// Named classes on the blowup of P2 at the six points of the complete
// quadrilateral P1P2P3P4 (P5 = P1P2 ∩ P3P4, P6 = P1P4 ∩ P2P3):
//   l, e1..e6, K           the usual generators and canonical class
//   S1..S4                 strict transforms of the sides P_iP_{i+1}
//   Delta1..Delta3         strict transforms of P1P3, P2P4, P5P6
//   f1..f3                 conics through P2P4P5P6, P1P3P5P6, P1P2P3P4
class DivisorCatalog {
 public:
  DivisorCatalog(std::shared_ptr<const Lattice> lattice, std::map<std::string, DivisorClass> entries);

  const std::shared_ptr<const Lattice>& lattice() const noexcept { return lattice_; }
  const DivisorClass& at(const std::string& name) const;
  bool contains(const std::string& name) const { return entries_.count(name) != 0; }
  std::vector<std::string> names() const;
  // Sum of catalog names; repeats allowed ("f1", "f1" is 2 f1).
  DivisorClass sum(const std::vector<std::string>& names) const;

 private:
  std::shared_ptr<const Lattice> lattice_;
  std::map<std::string, DivisorClass> entries_;
};

const DivisorCatalog& quadrilateral_catalog();

}  // namespace bicanon::piclattice
