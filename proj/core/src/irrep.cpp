#include <sl2branch/irrep.hpp>

#include <sl2branch/errors.hpp>

#include <deque>
#include <memory>
#include <set>

namespace sl2branch {

void require_strictly_dominant(const PositiveSystem& sys, const Vec& xi, const char* who) {
  for (const Vec& alpha : sys.positive) {
    if (inner(xi, alpha) <= 0) {
      throw domain_error(std::string(who) + ": " + xi.to_string() +
                         " is not strictly dominant; fails at root " + alpha.to_string());
    }
  }
}

Int weyl_dimension(const Irrep& rep) {
  require_strictly_dominant(rep.system, rep.infinitesimal_character, "weyl_dimension");
  Rational dim = 1;
  for (const Vec& alpha : rep.system.positive) {
    dim *= inner(rep.infinitesimal_character, alpha) / inner(rep.system.rho, alpha);
  }
  if (!is_integer(dim) || dim <= 0) {
    throw invariant_violation("Weyl dimension came out as " + rat_to_string(dim));
  }
  return to_int(dim);
}

namespace {

// Freudenthal evaluator memoized over dominant weights; every query is
// first folded into the dominant chamber (the multiplicity function is
// Weyl invariant). A dominant weight below the highest weight in the same
// root-lattice coset is always in the support, so along each root
// direction the recursion may stop at the first zero multiplicity.
class Freudenthal {
 public:
  explicit Freudenthal(const Irrep& rep)
      : sys_(rep.system),
        hw_(rep.highest_weight()),
        cap_norm_(inner(rep.infinitesimal_character, rep.infinitesimal_character)) {
    if (!sys_.simple.empty()) basis_ = std::make_unique<SimpleBasis>(sys_.simple);
  }

  Vec dominantize(Vec v) const {
    bool moved = true;
    while (moved) {
      moved = false;
      for (const Vec& alpha : sys_.simple) {
        if (inner(v, alpha) < 0) {
          v = reflect(v, alpha);
          moved = true;
        }
      }
    }
    return v;
  }

  // hw - v is a nonnegative integer combination of the simple roots?
  bool below_highest(const Vec& v) const {
    Vec diff = hw_ - v;
    if (diff.is_zero()) return true;
    if (!basis_) return false;
    if (!basis_->in_span(diff)) return false;
    for (const Rational& c : basis_->coefficients(diff)) {
      if (!is_integer(c) || c < 0) return false;
    }
    return true;
  }

  Int mult(const Vec& mu) {
    Vec dom = dominantize(mu);
    if (dom == hw_) return 1;
    auto it = memo_.find(dom);
    if (it != memo_.end()) return it->second;
    if (!below_highest(dom)) {
      memo_.emplace(dom, 0);
      return 0;
    }

    Vec shifted = dom + sys_.rho;
    Rational denom = cap_norm_ - inner(shifted, shifted);
    if (denom <= 0) {
      throw invariant_violation("Freudenthal denominator not positive at " + dom.to_string());
    }
    Rational num = 0;
    for (const Vec& alpha : sys_.positive) {
      Vec up = dom + alpha;
      while (true) {
        Int m = mult(up);
        if (m == 0) break;
        num += Rational(m) * inner(up, alpha);
        up += alpha;
      }
    }
    Rational value = 2 * num / denom;
    if (!is_integer(value) || value < 0) {
      throw invariant_violation("Freudenthal produced " + rat_to_string(value) + " at " +
                                dom.to_string());
    }
    Int result = to_int(value);
    memo_.emplace(dom, result);
    return result;
  }

 private:
  const PositiveSystem& sys_;
  Vec hw_;
  Rational cap_norm_;
  std::unique_ptr<SimpleBasis> basis_;
  std::map<Vec, Int> memo_;
};

}  // namespace

std::map<Vec, Int> weight_multiplicities(const Irrep& rep) {
  require_strictly_dominant(rep.system, rep.infinitesimal_character, "weight_multiplicities");
  Freudenthal fr(rep);
  const Vec hw = rep.highest_weight();
  const Rational hw_norm = inner(hw, hw);

  // The support is saturated: every supported weight is reachable from the
  // highest weight through supported weights by simple-root steps.
  std::map<Vec, Int> out;
  std::deque<Vec> queue{hw};
  std::set<Vec> visited{hw};
  while (!queue.empty()) {
    Vec mu = queue.front();
    queue.pop_front();
    Int m = fr.mult(mu);
    if (m == 0) continue;
    out.emplace(mu, m);
    for (const Vec& alpha : rep.system.simple) {
      Vec next = mu - alpha;
      if (inner(next, next) > hw_norm) continue;
      if (visited.insert(next).second) queue.push_back(next);
    }
  }
  return out;
}

}  // namespace sl2branch
