#include <sl2branch/weyl.hpp>

#include <sl2branch/errors.hpp>

#include <deque>
#include <map>

namespace sl2branch {

WeylGroup WeylGroup::materialize(const PositiveSystem& sys, const Int& max_order) {
  // The order is known from the diagram before any enumeration, so the
  // guard never starts a hopeless BFS.
  Int order = weyl_group_order(classify_simple_system(sys.simple));
  if (order > max_order) {
    throw unsupported_error("Weyl group of order " + order.str() +
                            " exceeds the materialization guard (" + max_order.str() + ")");
  }

  WeylGroup g;
  g.simple_ = sys.simple;

  // rho is strictly dominant and regular for the subsystem, so w |-> w(rho)
  // is injective; BFS over images enumerates the group once each.
  std::map<Vec, bool> seen;
  std::deque<std::pair<Vec, WeylElement>> queue;
  queue.push_back({sys.rho, WeylElement{}});
  seen[sys.rho] = true;
  while (!queue.empty()) {
    auto [image, elem] = queue.front();
    queue.pop_front();
    g.elements_.push_back(elem);
    for (int i = 0; i < int(g.simple_.size()); ++i) {
      Vec next = reflect(image, g.simple_[i]);
      if (seen.emplace(next, true).second) {
        WeylElement w;
        w.word = elem.word;
        w.word.insert(w.word.begin(), i);  // s_i composed after elem
        w.sign = -elem.sign;
        queue.push_back({next, w});
      }
    }
  }
  if (Int(g.elements_.size()) != order) {
    throw invariant_violation("Weyl enumeration found " + std::to_string(g.elements_.size()) +
                              " elements, expected " + order.str());
  }
  return g;
}

Vec WeylGroup::apply(const WeylElement& w, const Vec& v) const {
  Vec r = v;
  for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) {
    r = reflect(r, simple_[*it]);
  }
  return r;
}

}  // namespace sl2branch
