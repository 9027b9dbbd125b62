#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace injgen {

using GroupElem = std::vector<std::int64_t>;

// Z/n1 x ... x Z/nk given by its factors; elements are residue vectors.
// The empty factor list is the trivial group.
class FiniteAbelianGroup {
 public:
  FiniteAbelianGroup() = default;
  explicit FiniteAbelianGroup(std::vector<std::int64_t> factors);

  static FiniteAbelianGroup trivial() { return FiniteAbelianGroup(); }
  static FiniteAbelianGroup cyclic(std::int64_t n) { return FiniteAbelianGroup({n}); }
  static FiniteAbelianGroup product(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b);

  const std::vector<std::int64_t>& factors() const { return factors_; }
  std::size_t rank() const { return factors_.size(); }
  std::size_t order() const { return order_; }
  bool is_trivial() const { return order_ == 1; }
  bool is_cyclic() const { return factors_.size() == 1; }

  GroupElem zero() const { return GroupElem(factors_.size(), 0); }
  GroupElem add(const GroupElem& a, const GroupElem& b) const;
  GroupElem sub(const GroupElem& a, const GroupElem& b) const;
  GroupElem neg(const GroupElem& a) const;
  GroupElem reduce(const GroupElem& a) const;
  bool contains(const GroupElem& a) const;

  // Canonical order: mixed radix, first factor most significant.
  std::size_t index(const GroupElem& a) const;
  GroupElem element(std::size_t index) const;
  std::vector<GroupElem> elements() const;

  std::string to_string(const GroupElem& a) const;

  friend bool operator==(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
    return a.factors_ == b.factors_;
  }

 private:
  std::vector<std::int64_t> factors_;
  std::size_t order_ = 1;
};

}  // namespace injgen
