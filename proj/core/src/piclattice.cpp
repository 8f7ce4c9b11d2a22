#include "bicanon/piclattice.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "bicanon/errors.hpp"
#include "bicanon/exact_linalg.hpp"

namespace bicanon::piclattice {

Lattice::Lattice(LatticeKind kind, std::vector<std::string> labels, IntMatrix gram)
    : kind_(kind), labels_(std::move(labels)), gram_(std::move(gram)) {
  const std::size_t n = labels_.size();
  if (n == 0) throw InvalidInput("lattice must have positive rank");
  if (gram_.size() != n) throw InvalidInput("gram matrix size does not match the number of labels");
  for (std::size_t i = 0; i < n; ++i) {
    if (gram_[i].size() != n) throw InvalidInput("gram matrix is not square");
    for (std::size_t j = 0; j < i; ++j) {
      if (gram_[i][j] != gram_[j][i]) throw InvalidInput("gram matrix is not symmetric");
    }
  }
}

Lattice Lattice::blowup(int points) {
  if (points < 0) throw InvalidInput("number of blown-up points must be >= 0");
  const auto n = static_cast<std::size_t>(points) + 1;
  std::vector<std::string> labels{"l"};
  IntMatrix gram(n, std::vector<std::int64_t>(n, 0));
  gram[0][0] = 1;
  for (std::size_t i = 1; i < n; ++i) {
    labels.push_back("e" + std::to_string(i));
    gram[i][i] = -1;
  }
  return Lattice(LatticeKind::Blowup, std::move(labels), std::move(gram));
}

Lattice Lattice::quadric() { return Lattice(LatticeKind::Quadric, {"h1", "h2"}, {{0, 1}, {1, 0}}); }

Lattice Lattice::custom(std::vector<std::string> labels, IntMatrix gram) {
  return Lattice(LatticeKind::Custom, std::move(labels), std::move(gram));
}

std::size_t Lattice::index_of(const std::string& label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw InvalidInput("unknown basis label '" + label + "' for lattice " + name());
  return static_cast<std::size_t>(it - labels_.begin());
}

std::string Lattice::name() const {
  switch (kind_) {
    case LatticeKind::Blowup:
      return "blowup(" + std::to_string(blowup_points()) + ")";
    case LatticeKind::Quadric:
      return "quadric";
    case LatticeKind::Custom:
      break;
  }
  return "custom(rank " + std::to_string(rank()) + ")";
}

Lattice make_blowup_lattice(int points) { return Lattice::blowup(points); }

DivisorClass::DivisorClass(std::shared_ptr<const Lattice> lattice, std::vector<std::int64_t> coeffs)
    : lattice_(std::move(lattice)), coeffs_(std::move(coeffs)) {
  if (!lattice_) throw InvalidInput("divisor class without a lattice");
  if (coeffs_.size() != lattice_->rank()) {
    throw InvalidInput("divisor class has " + std::to_string(coeffs_.size()) + " coefficients, lattice " +
                       lattice_->name() + " has rank " + std::to_string(lattice_->rank()));
  }
}

DivisorClass DivisorClass::zero(std::shared_ptr<const Lattice> lattice) {
  const std::size_t n = lattice->rank();
  return DivisorClass(std::move(lattice), std::vector<std::int64_t>(n, 0));
}

DivisorClass DivisorClass::basis(std::shared_ptr<const Lattice> lattice, const std::string& label) {
  DivisorClass d = zero(lattice);
  d.coeffs_[lattice->index_of(label)] = 1;
  return d;
}

DivisorClass DivisorClass::from_map(std::shared_ptr<const Lattice> lattice,
                                    const std::map<std::string, std::int64_t>& coeffs) {
  DivisorClass d = zero(lattice);
  for (const auto& [label, v] : coeffs) d.coeffs_[lattice->index_of(label)] = v;
  return d;
}

std::int64_t DivisorClass::coeff(const std::string& label) const { return coeffs_[lattice_->index_of(label)]; }

bool DivisorClass::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](auto v) { return v == 0; });
}

void DivisorClass::require_same_lattice(const DivisorClass& other) const {
  if (lattice_ != other.lattice_ && !(*lattice_ == *other.lattice_)) {
    throw InvalidInput("divisor classes live on different lattices: " + lattice_->name() + " vs " +
                       other.lattice_->name());
  }
}

DivisorClass DivisorClass::operator+(const DivisorClass& other) const {
  DivisorClass out = *this;
  out += other;
  return out;
}

DivisorClass DivisorClass::operator-(const DivisorClass& other) const {
  DivisorClass out = *this;
  out -= other;
  return out;
}

DivisorClass DivisorClass::operator-() const { return -1 * *this; }

DivisorClass& DivisorClass::operator+=(const DivisorClass& other) {
  require_same_lattice(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& other) {
  require_same_lattice(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

DivisorClass operator*(std::int64_t k, const DivisorClass& d) {
  DivisorClass out = d;
  for (auto& v : out.coeffs_) v *= k;
  return out;
}

DivisorClass DivisorClass::divided_by(std::int64_t k) const {
  if (k == 0) throw InvalidInput("division of a divisor class by zero");
  if (!std::all_of(coeffs_.begin(), coeffs_.end(), [k](auto v) { return v % k == 0; })) {
    throw InvalidInput("class " + to_string(*this) + " is not divisible by " + std::to_string(k));
  }
  DivisorClass out = *this;
  for (auto& v : out.coeffs_) v /= k;
  return out;
}

bool DivisorClass::operator==(const DivisorClass& other) const {
  require_same_lattice(other);
  return coeffs_ == other.coeffs_;
}

std::map<std::string, std::int64_t> DivisorClass::to_map() const {
  std::map<std::string, std::int64_t> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) out[lattice_->labels()[i]] = coeffs_[i];
  }
  return out;
}

std::string to_string(const DivisorClass& d) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < d.coeffs().size(); ++i) {
    const auto v = d[i];
    if (v == 0) continue;
    if (v < 0) {
      os << '-';
    } else if (!first) {
      os << '+';
    }
    const auto mag = v < 0 ? -v : v;
    if (mag != 1) os << mag;
    os << d.lattice().labels()[i];
    first = false;
  }
  return first ? "0" : os.str();
}

std::int64_t intersect(const DivisorClass& a, const DivisorClass& b) {
  if (!(a.lattice() == b.lattice())) {
    throw InvalidInput("cannot intersect classes from " + a.lattice().name() + " and " + b.lattice().name());
  }
  const auto& g = a.lattice().gram();
  std::int64_t total = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < g.size(); ++j) total += a[i] * g[i][j] * b[j];
  }
  return total;
}

DivisorClass canonical_class(const std::shared_ptr<const Lattice>& lattice) {
  switch (lattice->kind()) {
    case LatticeKind::Blowup: {
      std::vector<std::int64_t> coeffs(lattice->rank(), 1);
      coeffs[0] = -3;
      return DivisorClass(lattice, std::move(coeffs));
    }
    case LatticeKind::Quadric:
      return DivisorClass(lattice, {-2, -2});
    case LatticeKind::Custom:
      break;
  }
  throw InvalidInput("canonical class is only known for blowup and quadric lattices");
}

std::int64_t pullback_numerics(std::int64_t degree, const DivisorClass& a, const DivisorClass& b) {
  if (degree < 1) throw InvalidInput("map degree must be >= 1");
  return degree * intersect(a, b);
}

bool is_negative_definite(const IntMatrix& gram) {
  const std::size_t n = gram.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (gram[i].size() != n) throw InvalidInput("gram matrix is not square");
    for (std::size_t j = 0; j < i; ++j) {
      if (gram[i][j] != gram[j][i]) throw InvalidInput("gram matrix is not symmetric");
    }
  }
  const auto minors = exact::leading_principal_minors(exact::from_int64(gram));
  // Negative definite iff (-1)^k d_k > 0 for every k.
  for (std::size_t k = 0; k < minors.size(); ++k) {
    const bool odd = (k % 2) == 0;  // k is zero-based, so d_{k+1}
    if (odd ? minors[k] >= 0 : minors[k] <= 0) return false;
  }
  return true;
}

bool is_divisible_by(const DivisorClass& a, std::int64_t k) {
  if (k < 2) throw InvalidInput("divisibility test needs k >= 2");
  return std::all_of(a.coeffs().begin(), a.coeffs().end(), [k](auto v) { return v % k == 0; });
}

DivisorCatalog::DivisorCatalog(std::shared_ptr<const Lattice> lattice, std::map<std::string, DivisorClass> entries)
    : lattice_(std::move(lattice)), entries_(std::move(entries)) {}

const DivisorClass& DivisorCatalog::at(const std::string& name) const {
  const auto it = entries_.find(name);
  if (it == entries_.end()) throw InvalidInput("unknown catalog divisor '" + name + "'");
  return it->second;
}

std::vector<std::string> DivisorCatalog::names() const {
  std::vector<std::string> out;
  for (const auto& [k, _] : entries_) out.push_back(k);
  return out;
}

DivisorClass DivisorCatalog::sum(const std::vector<std::string>& names) const {
  DivisorClass total = DivisorClass::zero(lattice_);
  for (const auto& n : names) total += at(n);
  return total;
}

namespace {

DivisorCatalog build_quadrilateral_catalog() {
  auto lat = std::make_shared<const Lattice>(Lattice::blowup(6));
  // Plane class d*l - sum m_i e_i from the degree and the points it passes through.
  auto plane = [&](std::int64_t d, std::vector<int> through) {
    std::vector<std::int64_t> c(7, 0);
    c[0] = d;
    for (int p : through) c[static_cast<std::size_t>(p)] -= 1;
    return DivisorClass(lat, c);
  };
  std::map<std::string, DivisorClass> m;
  m.emplace("l", DivisorClass::basis(lat, "l"));
  for (int i = 1; i <= 6; ++i) m.emplace("e" + std::to_string(i), DivisorClass::basis(lat, "e" + std::to_string(i)));
  m.emplace("K", canonical_class(lat));
  m.emplace("S1", plane(1, {1, 2, 5}));
  m.emplace("S2", plane(1, {2, 3, 6}));
  m.emplace("S3", plane(1, {3, 4, 5}));
  m.emplace("S4", plane(1, {4, 1, 6}));
  m.emplace("Delta1", plane(1, {1, 3}));
  m.emplace("Delta2", plane(1, {2, 4}));
  m.emplace("Delta3", plane(1, {5, 6}));
  m.emplace("f1", plane(2, {2, 4, 5, 6}));
  m.emplace("f2", plane(2, {1, 3, 5, 6}));
  m.emplace("f3", plane(2, {1, 2, 3, 4}));
  return DivisorCatalog(lat, std::move(m));
}

}  // namespace

const DivisorCatalog& quadrilateral_catalog() {
  static const DivisorCatalog catalog = build_quadrilateral_catalog();
  return catalog;
}

}  // namespace bicanon::piclattice
