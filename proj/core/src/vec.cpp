#include <sl2branch/vec.hpp>

#include <sl2branch/errors.hpp>

#include <algorithm>

namespace sl2branch {

namespace {

void require_same_dim(const Vec& a, const Vec& b, const char* op) {
  if (a.dim() != b.dim()) {
    throw usage_error(std::string(op) + ": dimension mismatch (" +
                      std::to_string(a.dim()) + " vs " + std::to_string(b.dim()) + ")");
  }
}

}  // namespace

bool Vec::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return x == 0; });
}

Vec Vec::operator+(const Vec& o) const {
  require_same_dim(*this, o, "Vec::operator+");
  Vec r(*this);
  r += o;
  return r;
}

Vec Vec::operator-(const Vec& o) const {
  require_same_dim(*this, o, "Vec::operator-");
  Vec r(*this);
  r -= o;
  return r;
}

Vec Vec::operator-() const {
  Vec r(dim());
  for (std::size_t i = 0; i < dim(); ++i) r.c_[i] = -c_[i];
  return r;
}

Vec Vec::operator*(const Rational& s) const {
  Vec r(dim());
  for (std::size_t i = 0; i < dim(); ++i) r.c_[i] = c_[i] * s;
  return r;
}

Vec& Vec::operator+=(const Vec& o) {
  require_same_dim(*this, o, "Vec::operator+=");
  for (std::size_t i = 0; i < dim(); ++i) c_[i] += o.c_[i];
  return *this;
}

Vec& Vec::operator-=(const Vec& o) {
  require_same_dim(*this, o, "Vec::operator-=");
  for (std::size_t i = 0; i < dim(); ++i) c_[i] -= o.c_[i];
  return *this;
}

std::strong_ordering Vec::operator<=>(const Vec& o) const {
  if (auto c = dim() <=> o.dim(); c != 0) return c;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (c_[i] < o.c_[i]) return std::strong_ordering::less;
    if (c_[i] > o.c_[i]) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string Vec::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < dim(); ++i) {
    if (i > 0) s += ", ";
    s += rat_to_string(c_[i]);
  }
  return s + ")";
}

Rational inner(const Vec& a, const Vec& b) {
  require_same_dim(a, b, "inner");
  Rational r = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) r += a[i] * b[i];
  return r;
}

Rational coroot_pairing(const Vec& lambda, const Vec& gamma) {
  if (gamma.is_zero()) {
    throw usage_error("coroot_pairing: gamma must be nonzero");
  }
  return 2 * inner(lambda, gamma) / inner(gamma, gamma);
}

Vec coroot(const Vec& gamma) {
  if (gamma.is_zero()) {
    throw usage_error("coroot: gamma must be nonzero");
  }
  return gamma * (Rational(2) / inner(gamma, gamma));
}

Vec reflect(const Vec& v, const Vec& alpha) {
  return v - alpha * coroot_pairing(v, alpha);
}

Vec unit_vec(std::size_t dim, std::size_t i) {
  Vec v(dim);
  v[i] = 1;
  return v;
}

}  // namespace sl2branch
