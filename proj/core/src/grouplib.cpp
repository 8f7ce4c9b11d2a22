#include "bicanon/grouplib.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>
#include <utility>

#include "bicanon/errors.hpp"

namespace bicanon::grouplib {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t n) {
  const std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

std::string subscript(std::size_t k) {
  static const char* digits[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
  const std::string plain = std::to_string(k);
  std::string out;
  for (char c : plain) out += digits[c - '0'];
  return out;
}

std::string symbolic(const Residues& coords, const std::string& stem) {
  std::string out;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (coords[i] != 1) out += std::to_string(coords[i]);
    out += stem + subscript(i + 1);
  }
  return out.empty() ? "0" : out;
}

}  // namespace

AbelianGroup::AbelianGroup(std::vector<std::int64_t> moduli) : moduli_(std::move(moduli)) {
  if (moduli_.empty()) throw InvalidInput("abelian group needs at least one modulus");
  for (auto n : moduli_) {
    if (n < 2) throw InvalidInput("group modulus must be >= 2, got " + std::to_string(n));
    order_ *= n;
    exponent_ = std::lcm(exponent_, n);
  }
}

bool AbelianGroup::is_elementary_2() const noexcept {
  return std::all_of(moduli_.begin(), moduli_.end(), [](auto n) { return n == 2; });
}

Residues AbelianGroup::reduce(Residues coords) const {
  if (coords.size() != moduli_.size()) {
    throw InvalidInput("expected " + std::to_string(moduli_.size()) + " coordinates, got " +
                       std::to_string(coords.size()));
  }
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] = mod(coords[i], moduli_[i]);
  return coords;
}

GroupElement AbelianGroup::zero() const { return {Residues(moduli_.size(), 0)}; }

GroupElement AbelianGroup::element(Residues coords) const { return {reduce(std::move(coords))}; }

GroupElement AbelianGroup::basis(std::size_t i) const {
  if (i >= rank()) throw InvalidInput("basis index out of range");
  GroupElement e = zero();
  e.coords[i] = 1;
  return e;
}

GroupElement AbelianGroup::add(const GroupElement& a, const GroupElement& b) const {
  Residues out(rank());
  for (std::size_t i = 0; i < rank(); ++i) out[i] = mod(a.coords.at(i) + b.coords.at(i), moduli_[i]);
  return {out};
}

GroupElement AbelianGroup::negate(const GroupElement& a) const {
  Residues out(rank());
  for (std::size_t i = 0; i < rank(); ++i) out[i] = mod(-a.coords.at(i), moduli_[i]);
  return {out};
}

GroupElement AbelianGroup::scale(std::int64_t k, const GroupElement& a) const {
  Residues out(rank());
  for (std::size_t i = 0; i < rank(); ++i) out[i] = mod(mod(k, moduli_[i]) * a.coords.at(i), moduli_[i]);
  return {out};
}

std::int64_t AbelianGroup::order_of(const GroupElement& a) const {
  std::int64_t ord = 1;
  for (std::size_t i = 0; i < rank(); ++i) {
    ord = std::lcm(ord, moduli_[i] / std::gcd(moduli_[i], a.coords.at(i)));
  }
  return ord;
}

bool AbelianGroup::contains(const GroupElement& a) const {
  if (a.coords.size() != rank()) return false;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (a.coords[i] < 0 || a.coords[i] >= moduli_[i]) return false;
  }
  return true;
}

Character AbelianGroup::trivial_character() const { return {Residues(moduli_.size(), 0)}; }

Character AbelianGroup::character(Residues coords) const { return {reduce(std::move(coords))}; }

Character AbelianGroup::add(const Character& a, const Character& b) const {
  return {add(GroupElement{a.coords}, GroupElement{b.coords}).coords};
}

Character AbelianGroup::subtract(const Character& a, const Character& b) const {
  return {add(GroupElement{a.coords}, negate(GroupElement{b.coords})).coords};
}

std::int64_t AbelianGroup::pair(const Character& chi, const GroupElement& g) const {
  if (chi.coords.size() != rank() || g.coords.size() != rank()) {
    throw InvalidInput("pairing: character and element belong to different groups");
  }
  std::int64_t value = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    value = mod(value + chi.coords[i] * g.coords[i] * (exponent_ / moduli_[i]), exponent_);
  }
  return value;
}

std::vector<GroupElement> AbelianGroup::elements() const {
  std::vector<GroupElement> out;
  out.reserve(static_cast<std::size_t>(order_));
  Residues cur(rank(), 0);
  for (std::int64_t n = 0; n < order_; ++n) {
    out.push_back({cur});
    for (std::size_t i = rank(); i-- > 0;) {
      if (++cur[i] < moduli_[i]) break;
      cur[i] = 0;
    }
  }
  return out;
}

std::vector<Character> AbelianGroup::characters() const {
  std::vector<Character> out;
  out.reserve(static_cast<std::size_t>(order_));
  for (auto& g : elements()) out.push_back({std::move(g.coords)});
  return out;
}

AbelianGroup make_group(std::vector<std::int64_t> moduli) { return AbelianGroup(std::move(moduli)); }

AbelianGroup direct_product(const AbelianGroup& a, const AbelianGroup& b) {
  auto moduli = a.moduli();
  moduli.insert(moduli.end(), b.moduli().begin(), b.moduli().end());
  return AbelianGroup(std::move(moduli));
}

GroupElement join(const GroupElement& a, const GroupElement& b) {
  Residues out = a.coords;
  out.insert(out.end(), b.coords.begin(), b.coords.end());
  return {out};
}

Character join(const Character& a, const Character& b) {
  return {join(GroupElement{a.coords}, GroupElement{b.coords}).coords};
}

std::pair<GroupElement, GroupElement> split(const GroupElement& ab, std::size_t left_rank) {
  if (left_rank > ab.coords.size()) throw InvalidInput("split: rank out of range");
  const auto mid = ab.coords.begin() + static_cast<std::ptrdiff_t>(left_rank);
  return {GroupElement{Residues(ab.coords.begin(), mid)}, GroupElement{Residues(mid, ab.coords.end())}};
}

std::pair<Character, Character> split(const Character& ab, std::size_t left_rank) {
  auto [a, b] = split(GroupElement{ab.coords}, left_rank);
  return {Character{std::move(a.coords)}, Character{std::move(b.coords)}};
}

template <class E>
Subgroup<E>::Subgroup(AbelianGroup ambient, std::vector<E> generators)
    : ambient_(std::move(ambient)), generators_(std::move(generators)) {
  std::set<E> seen;
  std::deque<E> frontier;
  E zero{Residues(ambient_.rank(), 0)};
  seen.insert(zero);
  frontier.push_back(zero);
  for (auto& g : generators_) g = E{ambient_.element(g.coords).coords};
  while (!frontier.empty()) {
    const E cur = frontier.front();
    frontier.pop_front();
    for (const auto& g : generators_) {
      E next{ambient_.add(GroupElement{cur.coords}, GroupElement{g.coords}).coords};
      if (seen.insert(next).second) frontier.push_back(std::move(next));
    }
  }
  elements_.assign(seen.begin(), seen.end());
}

template <class E>
Subgroup<E> Subgroup<E>::from_members(AbelianGroup ambient, const std::vector<E>& members) {
  Subgroup<E> sub(ambient, {});
  for (const auto& m : members) {
    if (sub.contains(m)) continue;
    auto gens = sub.generators();
    gens.push_back(m);
    sub = Subgroup<E>(ambient, std::move(gens));
  }
  if (sub.order() != static_cast<std::int64_t>(members.size())) {
    throw InvalidInput("member list is not closed under addition");
  }
  return sub;
}

template <class E>
bool Subgroup<E>::contains(const E& e) const {
  return std::binary_search(elements_.begin(), elements_.end(), e);
}

template class Subgroup<GroupElement>;
template class Subgroup<Character>;

Automorphism::Automorphism(AbelianGroup group, std::vector<Residues> images_of_generators)
    : group_(std::move(group)) {
  if (images_of_generators.size() != group_.rank()) {
    throw InvalidInput("automorphism needs one image per generator");
  }
  for (std::size_t j = 0; j < images_of_generators.size(); ++j) {
    GroupElement img = group_.element(images_of_generators[j]);
    // The image of a generator of order n_j must itself be killed by n_j.
    if (group_.scale(group_.moduli()[j], img) != group_.zero()) {
      throw InvalidInput("automorphism is not well defined on generator " + std::to_string(j + 1));
    }
    images_.push_back(std::move(img));
  }
  std::set<GroupElement> image_set;
  for (const auto& g : group_.elements()) image_set.insert(apply(g));
  if (static_cast<std::int64_t>(image_set.size()) != group_.order()) {
    throw InvalidInput("endomorphism is not invertible");
  }
}

Automorphism Automorphism::identity(const AbelianGroup& group) {
  std::vector<Residues> cols;
  for (std::size_t i = 0; i < group.rank(); ++i) cols.push_back(group.basis(i).coords);
  return Automorphism(group, std::move(cols));
}

GroupElement Automorphism::apply(const GroupElement& g) const {
  if (g.coords.size() != group_.rank()) throw InvalidInput("automorphism: dimension mismatch");
  GroupElement out = group_.zero();
  for (std::size_t j = 0; j < images_.size(); ++j) {
    out = group_.add(out, group_.scale(g.coords[j], images_[j]));
  }
  return out;
}

Automorphism Automorphism::inverse() const {
  std::vector<Residues> cols(group_.rank());
  for (const auto& g : group_.elements()) {
    const GroupElement img = apply(g);
    for (std::size_t i = 0; i < group_.rank(); ++i) {
      if (img == group_.basis(i)) cols[i] = g.coords;
    }
  }
  return Automorphism(group_, std::move(cols));
}

Automorphism Automorphism::compose(const Automorphism& inner) const {
  if (!(inner.group() == group_)) throw InvalidInput("compose: group mismatch");
  std::vector<Residues> cols;
  for (const auto& img : inner.images()) cols.push_back(apply(img).coords);
  return Automorphism(group_, std::move(cols));
}

GroupElement apply_automorphism(const Automorphism& psi, const GroupElement& g) { return psi.apply(g); }

ElementSubgroup graph_subgroup(const Automorphism& psi) {
  const AbelianGroup& g = psi.group();
  std::vector<GroupElement> gens;
  for (std::size_t i = 0; i < g.rank(); ++i) gens.push_back(join(g.basis(i), psi.apply(g.basis(i))));
  return ElementSubgroup(direct_product(g, g), std::move(gens));
}

CharacterSubgroup orthogonal_complement(const ElementSubgroup& h) {
  const AbelianGroup& amb = h.ambient();
  std::vector<Character> members;
  for (const auto& chi : amb.characters()) {
    const bool vanishes = std::all_of(h.generators().begin(), h.generators().end(),
                                      [&](const GroupElement& g) { return amb.pair(chi, g) == 0; });
    if (vanishes) members.push_back(chi);
  }
  return CharacterSubgroup::from_members(amb, members);
}

ElementSubgroup common_kernel(const AbelianGroup& group, const std::vector<Character>& chars) {
  std::vector<GroupElement> members;
  for (const auto& g : group.elements()) {
    const bool in_kernel =
        std::all_of(chars.begin(), chars.end(), [&](const Character& c) { return group.pair(c, g) == 0; });
    if (in_kernel) members.push_back(g);
  }
  return ElementSubgroup::from_members(group, members);
}

std::string to_string(const Residues& coords) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) os << ',';
    os << coords[i];
  }
  os << ')';
  return os.str();
}

std::string symbolic_name(const GroupElement& g, const std::string& stem) { return symbolic(g.coords, stem); }

std::string symbolic_name(const Character& c, const std::string& stem) { return symbolic(c.coords, stem); }

}  // namespace bicanon::grouplib
