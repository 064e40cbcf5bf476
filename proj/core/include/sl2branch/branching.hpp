#pragma once

#include <sl2branch/dirac.hpp>
#include <sl2branch/hermitian.hpp>
#include <sl2branch/irrep.hpp>
#include <sl2branch/kstriple.hpp>

#include <map>
#include <string>
#include <vector>

namespace sl2branch {

// A Harish-Chandra parameter for a holomorphic discrete series: strictly
// dominant for the compact positive roots, positive on the noncompact
// positive roots, and coroot-integral after the rho shift.
struct HCParameter {
  Vec lambda;  // already projected onto the root span
};

// Projects onto the root span (trace projection for su(p,q)), then checks
// the three conditions above. Throws domain_error naming the violated
// condition and the offending root.
HCParameter validate_parameter(const HermitianPair& pair, const Vec& raw);

// rho, the smallest valid parameter.
HCParameter minimal_parameter(const HermitianPair& pair);

// Fundamental weights dual to the simple coroots, inside the root span.
std::vector<Vec> fundamental_weights(const HermitianPair& pair);

// The lowest K-type of the discrete series with parameter lambda, as a
// K-irrep with infinitesimal character lambda + rho_n.
Irrep lowest_k_type(const HermitianPair& pair, const HCParameter& lambda);

struct KTypeEntry {
  Vec mu;  // highest weight of the K_z constituent (mu + rho_z is its
           // infinitesimal character)
  Int multiplicity;
};

struct KTypeDecomposition {
  std::vector<KTypeEntry> entries;
};

// Branches a K-irrep to K_z (the centralizer of Z0) by character
// subtraction on the shared torus: repeatedly extract the maximal
// remaining weight and subtract that K_z-character. Dimensions are
// conserved: sum of multiplicity * dim equals dim of the input.
KTypeDecomposition k_to_kz_branch(const HermitianPair& pair, const KSData& ks,
                                  const Irrep& lowest_k_type);

enum class BranchPath { closed_form, weyl_sum, oracle };

std::string path_name(BranchPath p);
BranchPath path_from_name(const std::string& name);

// m(pi_lambda, sigma_{m phi}) for the distinguished sl2-subgroup; the map
// is complete for every m <= cap and stores only nonzero multiplicities.
struct BranchingResult {
  std::map<long long, Int> entries;
  long long cap = 0;
  BranchPath path = BranchPath::closed_form;
  // Set when the requested cap lies below the first parameter.
  bool below_first_parameter = false;
};

// Closed form: for each K_z-constituent (mu_j, mult_j) of the lowest
// K-type, a delta at (mu_j + rho_z)(Z0) - 1 convolved with
// z_phi^{*c} * z_{2phi}^{*d} and scaled by mult_j * dim; summed over j.
// With c = 0 this degenerates to the tube formula.
BranchingResult branch_closed_form(const HermitianPair& pair, const KSData& ks,
                                   const HCParameter& lambda, long long cap);

// Alternating Weyl sum over W_K (divided by |W_z|), entirely independent
// of k_to_kz_branch. Agrees with branch_closed_form exactly.
BranchingResult branch_weyl_sum(const HermitianPair& pair, const KSData& ks,
                                const HCParameter& lambda, long long cap);

}  // namespace sl2branch
