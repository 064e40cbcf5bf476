#pragma once

#include <sl2branch/root_system.hpp>
#include <sl2branch/vec.hpp>

#include <map>

namespace sl2branch {

// An irreducible representation of a compact connected group, given by the
// positive system of its root system and a strictly dominant infinitesimal
// character (= highest weight + half-sum of those positive roots).
// Central torus directions simply ride along in the ambient coordinates.
struct Irrep {
  PositiveSystem system;
  Vec infinitesimal_character;

  Vec highest_weight() const { return infinitesimal_character - system.rho; }
};

// Throws domain_error unless (xi, alpha) > 0 for every positive root alpha.
void require_strictly_dominant(const PositiveSystem& sys, const Vec& xi, const char* who);

// Weyl dimension formula: prod (Lambda, alpha) / (rho, alpha) over the
// positive roots. Always a positive integer.
Int weyl_dimension(const Irrep& rep);

// Full weight multiplicity map by the Freudenthal recursion.
// Sums to weyl_dimension(rep) and is Weyl-group invariant.
std::map<Vec, Int> weight_multiplicities(const Irrep& rep);

}  // namespace sl2branch
