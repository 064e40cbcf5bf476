#pragma once

#include <sl2branch/rational.hpp>

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace sl2branch {

// A vector of exact rationals in a fixed ambient orthonormal basis.
// Serves both as a weight (functional on the Cartan) and as a Cartan
// element; the two are identified through the coordinate dot product.
class Vec {
 public:
  Vec() = default;
  explicit Vec(std::size_t dim) : c_(dim) {}
  Vec(std::initializer_list<Rational> coords) : c_(coords) {}
  explicit Vec(std::vector<Rational> coords) : c_(std::move(coords)) {}

  std::size_t dim() const { return c_.size(); }
  const Rational& operator[](std::size_t i) const { return c_[i]; }
  Rational& operator[](std::size_t i) { return c_[i]; }
  const std::vector<Rational>& coords() const { return c_; }

  bool is_zero() const;

  Vec operator+(const Vec& o) const;
  Vec operator-(const Vec& o) const;
  Vec operator-() const;
  Vec operator*(const Rational& s) const;
  Vec& operator+=(const Vec& o);
  Vec& operator-=(const Vec& o);

  bool operator==(const Vec& o) const { return c_ == o.c_; }
  // Lexicographic; used only to key ordered containers.
  std::strong_ordering operator<=>(const Vec& o) const;

  std::string to_string() const;  // "(1, 1/2, -1)"

 private:
  std::vector<Rational> c_;
};

// Euclidean form in the ambient coordinates. On each simple factor this is
// a positive multiple of the Killing form, which is all that every
// downstream ratio, sign and orthogonality test depends on.
Rational inner(const Vec& a, const Vec& b);

// lambda evaluated on the coroot of gamma: 2(lambda,gamma)/(gamma,gamma).
Rational coroot_pairing(const Vec& lambda, const Vec& gamma);

// 2*gamma/(gamma,gamma), the coroot as an ambient vector.
Vec coroot(const Vec& gamma);

// Reflection of v in the hyperplane orthogonal to root alpha.
Vec reflect(const Vec& v, const Vec& alpha);

// Unit coordinate vector e_i (0-based) in the given dimension.
Vec unit_vec(std::size_t dim, std::size_t i);

}  // namespace sl2branch
