#pragma once

#include <sl2branch/root_system.hpp>
#include <sl2branch/vec.hpp>

#include <vector>

namespace sl2branch {

// One Weyl group element, stored as a word in the simple reflections of the
// positive system it was generated from.
struct WeylElement {
  std::vector<int> word;  // indices into the simple roots, applied right to left
  int sign = 1;           // (-1)^{length}
};

// A fully materialized finite Weyl group.
class WeylGroup {
 public:
  // Enumerates the group generated by the simple reflections of `sys`.
  // Refuses to materialize more than `max_order` elements (default 10!).
  static WeylGroup materialize(const PositiveSystem& sys, const Int& max_order = Int(3628800));

  const std::vector<WeylElement>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }

  Vec apply(const WeylElement& w, const Vec& v) const;

 private:
  std::vector<Vec> simple_;
  std::vector<WeylElement> elements_;
};

}  // namespace sl2branch
