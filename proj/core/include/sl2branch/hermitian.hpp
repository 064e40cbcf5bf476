#pragma once

#include <sl2branch/root_system.hpp>
#include <sl2branch/vec.hpp>

#include <memory>
#include <string>
#include <vector>

namespace sl2branch {

enum class PairFamily { AIII, BDI, CI, DIII, EIII, EVII };

std::string family_name(PairFamily f);

// Identifies one Hermitian symmetric pair (g, k).
struct PairSpec {
  PairFamily family = PairFamily::AIII;
  int p = 0;        // AIII, BDI, DIII
  int q = 0;        // AIII
  int n = 0;        // CI
  bool odd = true;  // BDI: so(2p+1,2) when odd, so(2p,2) when even

  // Throws config_error when the parameters are out of range.
  void validate() const;

  // Grammar: "AIII:p=2,q=3", "BDI:odd,p=3", "BDI:even,p=4", "CI:n=2",
  // "DIII:p=5", "EIII", "EVII".
  std::string to_string() const;
  static PairSpec parse(const std::string& s);

  std::string algebra_name() const;  // "su(2,3)", "so(5,2)", "sp(3,R)", ...

  bool operator==(const PairSpec&) const = default;
};

struct FamilyTemplate {
  PairFamily family;
  std::string name;
  std::string algebra;      // "su(p,q)"
  std::string compact;      // "su(p)+su(q)+so(2)"
  std::string constraints;  // human-readable parameter constraints
  std::string example;      // a spec string that parses back
};

// The six families, in a stable order.
std::vector<FamilyTemplate> catalog();

// A Hermitian symmetric pair with its fixed holomorphic positive system,
// in the diagonal coordinates of the realizations used throughout:
//   AIII  su(p,q)    p+q coordinates (eps_1..eps_p, delta_1..delta_q)
//   BDI   so(*,2)    p+1 coordinates (eps_1..eps_p, delta_1)
//   CI    sp(n,R)    n coordinates
//   DIII  so*(2p)    p coordinates
//   EIII/EVII        the 8-dimensional ambient space, Bourbaki simple roots
struct HermitianPair {
  PairSpec spec;
  RootSystem system;  // full root system; simple_roots in diagram order;
                      // highest_root = the maximal root of Psi_n
  std::vector<Vec> psi;    // positive system Psi
  std::vector<Vec> psi_c;  // Psi ∩ Phi(k,t)
  std::vector<Vec> psi_n;  // Psi ∩ Phi_n
  std::size_t noncompact_simple_index = 0;  // 0-based position in simple_roots
  Vec rho, rho_n, rho_c;

  std::size_t ambient_dim() const { return system.ambient_dim; }
  const Vec& noncompact_simple() const { return system.simple_roots[noncompact_simple_index]; }
  bool is_noncompact(const Vec& root) const;

  PositiveSystem compact_system() const;

  // Orthogonal projection onto the span of the roots. For su(p,q) this is
  // exactly the trace projection; for B/C/D it is the identity.
  Vec project_to_root_span(const Vec& v) const;

  std::shared_ptr<const SimpleBasis> simple_basis;  // basis = simple_roots
};

HermitianPair build_pair(const PairSpec& spec);

// Phi_z = { alpha in Phi(k,t) : alpha(Z) = 0 }, evaluated through the
// coordinate pairing; rho_z is the half-sum of Psi ∩ Phi_z.
struct CentralizerSubsystem {
  std::vector<Vec> phi_z_positive;
  Vec rho_z;
  std::vector<TypeComponent> semisimple_type;

  PositiveSystem positive_system(std::size_t ambient_dim) const;
};

CentralizerSubsystem centralizer_subsystem(const HermitianPair& pair, const Vec& Z);

}  // namespace sl2branch
