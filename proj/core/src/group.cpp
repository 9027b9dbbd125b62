#include "injgen/group.hpp"

#include "injgen/field.hpp"

namespace injgen {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<std::int64_t> factors) : factors_(std::move(factors)) {
  for (auto n : factors_) {
    if (n < 1) throw InputError("group factors must be positive");
    order_ *= static_cast<std::size_t>(n);
    if (order_ > (std::size_t{1} << 24)) throw InputError("group too large");
  }
}

FiniteAbelianGroup FiniteAbelianGroup::product(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
  std::vector<std::int64_t> f = a.factors_;
  f.insert(f.end(), b.factors_.begin(), b.factors_.end());
  return FiniteAbelianGroup(std::move(f));
}

GroupElem FiniteAbelianGroup::add(const GroupElem& a, const GroupElem& b) const {
  GroupElem out(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) out[i] = (a[i] + b[i]) % factors_[i];
  return out;
}

GroupElem FiniteAbelianGroup::sub(const GroupElem& a, const GroupElem& b) const {
  GroupElem out(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) out[i] = ((a[i] - b[i]) % factors_[i] + factors_[i]) % factors_[i];
  return out;
}

GroupElem FiniteAbelianGroup::neg(const GroupElem& a) const {
  return sub(zero(), a);
}

GroupElem FiniteAbelianGroup::reduce(const GroupElem& a) const {
  if (a.size() != factors_.size()) throw InputError("group element has wrong length");
  GroupElem out(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) out[i] = ((a[i] % factors_[i]) + factors_[i]) % factors_[i];
  return out;
}

bool FiniteAbelianGroup::contains(const GroupElem& a) const {
  if (a.size() != factors_.size()) return false;
  for (std::size_t i = 0; i < factors_.size(); ++i)
    if (a[i] < 0 || a[i] >= factors_[i]) return false;
  return true;
}

std::size_t FiniteAbelianGroup::index(const GroupElem& a) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) idx = idx * factors_[i] + static_cast<std::size_t>(a[i]);
  return idx;
}

GroupElem FiniteAbelianGroup::element(std::size_t index) const {
  GroupElem out(factors_.size());
  for (std::size_t i = factors_.size(); i-- > 0;) {
    out[i] = static_cast<std::int64_t>(index % factors_[i]);
    index /= factors_[i];
  }
  return out;
}

std::vector<GroupElem> FiniteAbelianGroup::elements() const {
  std::vector<GroupElem> out;
  out.reserve(order_);
  for (std::size_t i = 0; i < order_; ++i) out.push_back(element(i));
  return out;
}

std::string FiniteAbelianGroup::to_string(const GroupElem& a) const {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(a[i]);
  }
  return s + ")";
}

}  // namespace injgen
