#pragma once

#include <sl2branch/vec.hpp>

#include <optional>
#include <string>
#include <vector>

namespace sl2branch {

enum class CartanType { A, B, C, D, E6, E7 };

std::string cartan_type_name(CartanType t);

// A finite reduced root system with exact rational coordinates, a fixed
// ordered set of simple roots and the induced positive system.
struct RootSystem {
  CartanType type;
  int rank = 0;
  std::size_t ambient_dim = 0;
  std::vector<Vec> roots;         // sorted, closed under negation
  std::vector<Vec> simple_roots;  // ordered per the usual conventions
  Vec highest_root;

  bool is_root(const Vec& v) const;
  std::vector<Vec> positive_roots() const;  // nonneg simple-root coefficients

  // Checks closure under negation/reflection, signed integrality of
  // simple-root coefficients, the classical root count and dominance of
  // the highest root. Throws invariant_violation on failure.
  void validate() const;
};

// Expected |roots| for the classical counts (A: n(n+1), B/C: 2n^2,
// D: 2n(n-1), E6: 72, E7: 126).
std::size_t root_count_for(CartanType t, int rank);

// Standard coordinates: A_n in n+1 coordinates, B/C/D_n in n, E6/E7 in the
// 8-dimensional ambient space with Bourbaki simple-root ordering.
// Ranks: A >= 1, B >= 1, C >= 1, D >= 3.
RootSystem build_root_system(CartanType t, int rank);

// Exact coordinate solver over an independent family of vectors.
class SimpleBasis {
 public:
  explicit SimpleBasis(std::vector<Vec> basis);

  const std::vector<Vec>& basis() const { return basis_; }
  bool in_span(const Vec& v) const;
  // Coefficients of v in the basis; throws usage_error if v is not in the span.
  std::vector<Rational> coefficients(const Vec& v) const;
  // Orthogonal projection onto the span.
  Vec project(const Vec& v) const;

 private:
  std::vector<Vec> basis_;
  std::vector<std::vector<Rational>> gram_inv_;
};

// Root partial order: a <= b iff b - a is a nonnegative combination of the
// simple roots underlying `basis`.
bool root_leq(const SimpleBasis& basis, const Vec& a, const Vec& b);

// The unique maximal element of `candidates` under the root order, or
// nullopt when the maximal element is not unique. Empty input is an error.
std::optional<Vec> unique_maximal(const SimpleBasis& basis, const std::vector<Vec>& candidates);

// A positive system given extensionally, e.g. the compact positive roots of
// a Hermitian pair or a centralizer subsystem. Simple roots are derived as
// the indecomposable elements.
struct PositiveSystem {
  std::size_t ambient_dim = 0;
  std::vector<Vec> positive;
  std::vector<Vec> simple;
  Vec rho;

  static PositiveSystem from_positive(std::size_t ambient_dim, std::vector<Vec> positive);
};

struct TypeComponent {
  char letter;  // 'A'..'E', 'F', 'G'
  int rank;
  bool operator==(const TypeComponent&) const = default;
};

// Classifies the Dynkin diagram of an (abstract) simple-root family into
// irreducible components.
std::vector<TypeComponent> classify_simple_system(const std::vector<Vec>& simple);

// "D4", "A1+A2", or "0" for the empty system.
std::string type_string(const std::vector<TypeComponent>& components);

// Order of the Weyl group of the given components.
Int weyl_group_order(const std::vector<TypeComponent>& components);

}  // namespace sl2branch
