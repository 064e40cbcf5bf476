#pragma once

#include <sl2branch/hermitian.hpp>

#include <string>
#include <vector>

namespace sl2branch {

// Data attached to the distinguished sl2-subalgebra of a Hermitian pair:
// the maximal strongly orthogonal set S, the characteristic vector Z0 (the
// sum of the coroots over S), the induced weights on the simple roots, and
// the counts that drive every branching formula downstream.
struct KSData {
  std::vector<Vec> S;               // gamma_1, ..., gamma_r in greedy order
  Vec Z0;
  std::vector<Int> simple_weights;  // w_j = beta_j(Z0), in simple-root order
  Int a = 0;         // #{ alpha in Psi_c : alpha(Z0) = 1 }
  Int c = 0;         // #{ gamma in Psi_n : gamma(Z0) = 1 }
  Int d_plus_1 = 0;  // #{ gamma in Psi_n : gamma(Z0) = 2 }
  bool tube = false;
  std::size_t real_rank = 0;
};

// Greedy construction: gamma_1 is the maximal root of Psi_n; each next
// gamma is the unique maximal root of Psi_n orthogonal to all previous
// ones. Asserts uniqueness of the maximal element at every step.
std::vector<Vec> harish_chandra_set(const HermitianPair& pair);

// Z0 = sum of the coroots of the elements of S.
Vec characteristic_vector(const HermitianPair& pair, const std::vector<Vec>& S);

KSData ks_data(const HermitianPair& pair);

// Admissibility of restriction to exp(R i Z) for a characteristic vector
// with the given simple-root weights: w_l > 0, or w_l < 0 with all compact
// weights zero (l = the noncompact position). Compact entries must be
// nonnegative.
bool is_admissible_characteristic(const HermitianPair& pair, const std::vector<Int>& weights);

struct VoganNode {
  bool noncompact = false;
  Int weight = 0;
};

// A Dynkin diagram with one painted node and integer node weights.
struct WeightedVoganDiagram {
  std::vector<VoganNode> nodes;                       // simple-root order
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // with multiplicity below
  std::vector<int> edge_multiplicity;
  CartanType type;
  int rank = 0;
};

WeightedVoganDiagram vogan_diagram(const HermitianPair& pair, const KSData& ks);

// UTF-8 rendering; layout depends on the diagram type.
std::string render_vogan_diagram(const WeightedVoganDiagram& d);

struct SignedYoungDiagram {
  std::vector<std::string> rows;  // strings over {+,-}, lengths weakly decreasing
};

// Classical families only; throws unsupported_error for EIII/EVII.
SignedYoungDiagram signed_young_diagram(const HermitianPair& pair);

std::string render_signed_young_diagram(const SignedYoungDiagram& d);

}  // namespace sl2branch
