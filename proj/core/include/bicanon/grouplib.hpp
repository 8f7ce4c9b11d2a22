#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace bicanon::grouplib {

using Residues = std::vector<std::int64_t>;

// Element of a finite abelian group prod Z_{n_i}, in reduced coordinates.
struct GroupElement {
  Residues coords;
  auto operator<=>(const GroupElement&) const = default;
};

// Element of the dual group, written in the dual basis: chi(g) is
// exp(2 pi i * sum_k coords[k] g[k] / n_k). Values are kept as exponents.
struct Character {
  Residues coords;
  auto operator<=>(const Character&) const = default;
};

class AbelianGroup {
 public:
  explicit AbelianGroup(std::vector<std::int64_t> moduli);

  const std::vector<std::int64_t>& moduli() const noexcept { return moduli_; }
  std::size_t rank() const noexcept { return moduli_.size(); }
  std::int64_t order() const noexcept { return order_; }
  // lcm of the moduli; character values live in Z_exponent.
  std::int64_t exponent() const noexcept { return exponent_; }
  bool is_elementary_2() const noexcept;

  GroupElement zero() const;
  GroupElement element(Residues coords) const;  // reduces
  GroupElement basis(std::size_t i) const;
  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement negate(const GroupElement& a) const;
  GroupElement scale(std::int64_t k, const GroupElement& a) const;
  std::int64_t order_of(const GroupElement& a) const;
  bool contains(const GroupElement& a) const;  // shape and reduction check

  Character trivial_character() const;
  Character character(Residues coords) const;  // reduces
  Character add(const Character& a, const Character& b) const;
  Character subtract(const Character& a, const Character& b) const;

  // Pairing chi(g) as an exponent in Z_exponent().
  std::int64_t pair(const Character& chi, const GroupElement& g) const;

  // Lexicographic enumeration of all elements / characters.
  std::vector<GroupElement> elements() const;
  std::vector<Character> characters() const;

  bool operator==(const AbelianGroup& other) const { return moduli_ == other.moduli_; }

 private:
  Residues reduce(Residues coords) const;

  std::vector<std::int64_t> moduli_;
  std::int64_t order_ = 1;
  std::int64_t exponent_ = 1;
};

AbelianGroup make_group(std::vector<std::int64_t> moduli);
AbelianGroup direct_product(const AbelianGroup& a, const AbelianGroup& b);

GroupElement join(const GroupElement& a, const GroupElement& b);
Character join(const Character& a, const Character& b);
// Splits an element of G x G into its two halves.
std::pair<GroupElement, GroupElement> split(const GroupElement& ab, std::size_t left_rank);
std::pair<Character, Character> split(const Character& ab, std::size_t left_rank);

// A subgroup of the group (or of its dual, when E = Character), stored with
// its generators and its saturated, sorted element list.
template <class E>
class Subgroup {
 public:
  Subgroup(AbelianGroup ambient, std::vector<E> generators);
  // Builds the subgroup from a complete member list, choosing generators
  // greedily in the given order. Members must already be closed.
  static Subgroup from_members(AbelianGroup ambient, const std::vector<E>& members);

  const AbelianGroup& ambient() const noexcept { return ambient_; }
  const std::vector<E>& generators() const noexcept { return generators_; }
  const std::vector<E>& elements() const noexcept { return elements_; }
  std::int64_t order() const noexcept { return static_cast<std::int64_t>(elements_.size()); }
  bool is_trivial() const noexcept { return elements_.size() == 1; }
  bool contains(const E& e) const;

 private:
  AbelianGroup ambient_;
  std::vector<E> generators_;
  std::vector<E> elements_;
};

using ElementSubgroup = Subgroup<GroupElement>;
using CharacterSubgroup = Subgroup<Character>;

extern template class Subgroup<GroupElement>;
extern template class Subgroup<Character>;

// Endomorphism given by the images of the standard generators; construction
// fails unless the map is well defined and bijective.
class Automorphism {
 public:
  Automorphism(AbelianGroup group, std::vector<Residues> images_of_generators);
  static Automorphism identity(const AbelianGroup& group);

  const AbelianGroup& group() const noexcept { return group_; }
  const std::vector<GroupElement>& images() const noexcept { return images_; }

  GroupElement apply(const GroupElement& g) const;
  Automorphism inverse() const;
  Automorphism compose(const Automorphism& inner) const;  // this o inner

 private:
  AbelianGroup group_;
  std::vector<GroupElement> images_;
};

GroupElement apply_automorphism(const Automorphism& psi, const GroupElement& g);

// Gamma_psi = {(g, psi(g))} inside G x G.
ElementSubgroup graph_subgroup(const Automorphism& psi);

// All characters of the ambient group that vanish on h.
CharacterSubgroup orthogonal_complement(const ElementSubgroup& h);

// Intersection of the kernels of chars (the whole group for an empty set).
ElementSubgroup common_kernel(const AbelianGroup& group, const std::vector<Character>& chars);

std::string to_string(const Residues& coords);
inline std::string to_string(const GroupElement& g) { return to_string(g.coords); }
inline std::string to_string(const Character& c) { return to_string(c.coords); }

// "0", "γ₃", "γ₁+γ₂", "2γ₁+γ₂" in terms of the standard generators.
std::string symbolic_name(const GroupElement& g, const std::string& stem = "γ");
std::string symbolic_name(const Character& c, const std::string& stem = "χ");

}  // namespace bicanon::grouplib
