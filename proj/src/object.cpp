#include "mdeg/object.hpp"

#include <stdexcept>

#include "mdeg/monomial.hpp"

namespace mdeg {

DerivedObject::DerivedObject(std::map<Vertex, int> multiplicities) {
  for (auto [v, k] : multiplicities) add(v, k);
}

DerivedObject::DerivedObject(std::initializer_list<Vertex> summands) {
  for (const auto& v : summands) add(v);
}

void DerivedObject::add(const Vertex& v, int mult) {
  if (mult < 0) throw std::invalid_argument("negative multiplicity for " + mdeg::to_string(v));
  if (mult == 0) return;
  mult_[v] += mult;
}

bool DerivedObject::remove(const Vertex& v) {
  auto it = mult_.find(v);
  if (it == mult_.end()) return false;
  if (--it->second == 0) mult_.erase(it);
  return true;
}

int DerivedObject::multiplicity(const Vertex& v) const {
  auto it = mult_.find(v);
  return it == mult_.end() ? 0 : it->second;
}

int DerivedObject::size() const {
  int s = 0;
  for (const auto& [v, k] : mult_) s += k;
  return s;
}

std::vector<Vertex> DerivedObject::summands() const {
  std::vector<Vertex> out;
  for (const auto& [v, k] : mult_) out.insert(out.end(), static_cast<std::size_t>(k), v);
  return out;
}

DerivedObject& DerivedObject::operator+=(const DerivedObject& o) {
  for (const auto& [v, k] : o.mult_) mult_[v] += k;
  return *this;
}

bool DerivedObject::contains(const DerivedObject& o) const {
  for (const auto& [v, k] : o.mult_) {
    if (multiplicity(v) < k) return false;
  }
  return true;
}

DerivedObject DerivedObject::minus(const DerivedObject& o) const {
  if (!contains(o)) {
    throw std::invalid_argument(o.to_string() + " is not a summand of " + to_string());
  }
  DerivedObject out = *this;
  for (const auto& [v, k] : o.mult_) {
    auto it = out.mult_.find(v);
    it->second -= k;
    if (it->second == 0) out.mult_.erase(it);
  }
  return out;
}

std::string DerivedObject::to_string() const {
  if (mult_.empty()) return "0";
  std::string s;
  for (const auto& v : summands()) {
    if (!s.empty()) s += '+';
    s += "V(" + std::to_string(v.i) + "," + std::to_string(v.p) + ")";
  }
  return s;
}

DerivedObject from_monomial(const LaurentMonomial& m) {
  if (!m.is_dominant()) {
    throw InputError("from_monomial: " + m.to_string() + " is not dominant");
  }
  return DerivedObject(m.exponents());
}

LaurentMonomial to_monomial(const DerivedObject& x) {
  return LaurentMonomial(x.multiplicities());
}

std::pair<int, int> p_extremes(const DerivedObject& x) {
  if (x.is_zero()) throw InputError("p_extremes: the zero object has no extremes");
  const auto& m = x.multiplicities();
  return {m.begin()->first.p, m.rbegin()->first.p};
}

Slice slice(const DerivedObject& x, int threshold, SliceSide side) {
  Slice out;
  for (const auto& [v, k] : x.multiplicities()) {
    bool in_part = false;
    switch (side) {
      case SliceSide::AtMax:
      case SliceSide::AtMin: in_part = v.p == threshold; break;
      case SliceSide::Above: in_part = v.p > threshold; break;
      case SliceSide::Below: in_part = v.p < threshold; break;
    }
    (in_part ? out.part : out.rest).add(v, k);
  }
  return out;
}

K0Class k0_class(const Quiver& q, const DerivedObject& x) {
  K0Class c(q.rank());
  for (const auto& [v, k] : x.multiplicities()) {
    K0Class one = k0_class(q, v);
    for (int r = 0; r < k; ++r) c += one;
  }
  return c;
}

void require_hat_i(const Quiver& q, const DerivedObject& x, const std::string& what) {
  for (const auto& [v, k] : x.multiplicities()) {
    (void)k;
    q.require_hat_i(v, what);
  }
}

}  // namespace mdeg
