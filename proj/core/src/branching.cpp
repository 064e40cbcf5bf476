#include <sl2branch/branching.hpp>

#include <sl2branch/errors.hpp>
#include <sl2branch/weyl.hpp>

#include <algorithm>

namespace sl2branch {

HCParameter validate_parameter(const HermitianPair& pair, const Vec& raw) {
  if (raw.dim() != pair.ambient_dim()) {
    throw domain_error("parameter has " + std::to_string(raw.dim()) + " coordinates, expected " +
                       std::to_string(pair.ambient_dim()));
  }
  Vec lambda = pair.project_to_root_span(raw);
  for (const Vec& alpha : pair.psi_c) {
    if (inner(lambda, alpha) <= 0) {
      throw domain_error("parameter is not strictly dominant for the compact positive roots; "
                         "fails at " + alpha.to_string());
    }
  }
  for (const Vec& alpha : pair.psi_n) {
    if (inner(lambda, alpha) <= 0) {
      throw domain_error("parameter is not holomorphic (positive on the noncompact positive "
                         "roots); fails at " + alpha.to_string());
    }
  }
  Vec shifted = lambda + pair.rho;
  for (const Vec& alpha : pair.system.roots) {
    if (!is_integer(coroot_pairing(shifted, alpha))) {
      throw domain_error("parameter + rho is not coroot-integral; fails at " + alpha.to_string());
    }
  }
  return HCParameter{lambda};
}

HCParameter minimal_parameter(const HermitianPair& pair) {
  return HCParameter{pair.rho};
}

std::vector<Vec> fundamental_weights(const HermitianPair& pair) {
  const auto& simples = pair.system.simple_roots;
  const std::size_t k = simples.size();
  // Solve <w_i, beta_j^vee> = delta_ij inside the root span: w_i = sum_k x_k beta_k
  // with C x = e_i, C_jk = <beta_k, beta_j^vee>.
  std::vector<std::vector<Rational>> m(k, std::vector<Rational>(2 * k));
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t l = 0; l < k; ++l) m[j][l] = coroot_pairing(simples[l], simples[j]);
    m[j][k + j] = 1;
  }
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t pivot = col;
    while (pivot < k && m[pivot][col] == 0) ++pivot;
    if (pivot == k) throw invariant_violation("singular Cartan matrix");
    std::swap(m[pivot], m[col]);
    Rational inv = Rational(1) / m[col][col];
    for (auto& x : m[col]) x *= inv;
    for (std::size_t row = 0; row < k; ++row) {
      if (row == col || m[row][col] == 0) continue;
      Rational f = m[row][col];
      for (std::size_t j = 0; j < 2 * k; ++j) m[row][j] -= f * m[col][j];
    }
  }
  std::vector<Vec> out;
  for (std::size_t i = 0; i < k; ++i) {
    Vec w(pair.ambient_dim());
    for (std::size_t l = 0; l < k; ++l) w += simples[l] * m[l][k + i];
    out.push_back(w);
  }
  return out;
}

Irrep lowest_k_type(const HermitianPair& pair, const HCParameter& lambda) {
  return Irrep{pair.compact_system(), lambda.lambda + pair.rho_n};
}

namespace {

// nu <= nu' in the root order of the given (sub)system simple roots.
bool subsystem_leq(const SimpleBasis* basis, const Vec& nu, const Vec& nu_prime) {
  Vec diff = nu_prime - nu;
  if (diff.is_zero()) return true;
  if (!basis || !basis->in_span(diff)) return false;
  auto coeffs = basis->coefficients(diff);
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& c) { return c >= 0; });
}

}  // namespace

KTypeDecomposition k_to_kz_branch(const HermitianPair& pair, const KSData& ks,
                                  const Irrep& lowest) {
  const CentralizerSubsystem cz = centralizer_subsystem(pair, ks.Z0);
  const PositiveSystem kz_sys = cz.positive_system(pair.ambient_dim());
  std::unique_ptr<SimpleBasis> kz_basis;
  if (!kz_sys.simple.empty()) kz_basis = std::make_unique<SimpleBasis>(kz_sys.simple);

  std::map<Vec, Int> remaining = weight_multiplicities(lowest);
  const Int total_dim = weyl_dimension(lowest);

  KTypeDecomposition out;
  Int accounted = 0;
  while (!remaining.empty()) {
    // A maximal remaining weight in the K_z root order; maximality forces
    // K_z-dominance because the remainder is a K_z-invariant character.
    const Vec* pick = nullptr;
    for (const auto& [nu, mult] : remaining) {
      bool dominated = false;
      for (const auto& [other, m2] : remaining) {
        if (!(other == nu) && subsystem_leq(kz_basis.get(), nu, other)) {
          dominated = true;
          break;
        }
      }
      if (!dominated) pick = &nu;  // lexicographically largest maximal wins
    }
    if (pick == nullptr) throw invariant_violation("no maximal weight in a nonempty remainder");
    Vec mu = *pick;
    Int mult = remaining.at(mu);
    if (mult < 0) {
      throw invariant_violation("negative remainder at weight " + mu.to_string());
    }
    for (const Vec& alpha : kz_sys.positive) {
      if (inner(mu, alpha) < 0) {
        throw invariant_violation("maximal remaining weight " + mu.to_string() +
                                  " is not K_z-dominant");
      }
    }

    Irrep constituent{kz_sys, mu + kz_sys.rho};
    for (const auto& [nu, m] : weight_multiplicities(constituent)) {
      auto it = remaining.find(nu);
      if (it == remaining.end() || it->second < mult * m) {
        throw invariant_violation("character subtraction went negative at " + nu.to_string());
      }
      it->second -= mult * m;
      if (it->second == 0) remaining.erase(it);
    }
    accounted += mult * weyl_dimension(constituent);
    out.entries.push_back({mu, mult});
  }
  if (accounted != total_dim) {
    throw invariant_violation("K -> K_z branching lost dimensions: " + accounted.str() + " vs " +
                              total_dim.str());
  }
  std::sort(out.entries.begin(), out.entries.end(), [&](const KTypeEntry& x, const KTypeEntry& y) {
    Rational vx = inner(x.mu, ks.Z0), vy = inner(y.mu, ks.Z0);
    if (vx != vy) return vx < vy;
    return x.mu < y.mu;
  });
  return out;
}

std::string path_name(BranchPath p) {
  switch (p) {
    case BranchPath::closed_form: return "closed_form";
    case BranchPath::weyl_sum: return "weyl_sum";
    case BranchPath::oracle: return "oracle";
  }
  throw invariant_violation("unknown BranchPath");
}

BranchPath path_from_name(const std::string& name) {
  if (name == "closed_form") return BranchPath::closed_form;
  if (name == "weyl_sum") return BranchPath::weyl_sum;
  if (name == "oracle") return BranchPath::oracle;
  throw usage_error("unknown path '" + name + "'");
}

namespace {

// Collects the integer-exponent coefficients of `acc` into a result map,
// checking that every multiplicity is a nonnegative integer at a positive
// parameter.
BranchingResult collect_entries(const DiracSeries& acc, long long cap, BranchPath path) {
  BranchingResult result;
  result.path = path;
  result.cap = cap;
  if (!acc.unbounded() && acc.window_end() < cap) {
    throw invariant_violation("series window " + rat_to_string(acc.window_end()) +
                              " does not cover the requested cap");
  }
  for (const auto& [step, coeff] : acc.coefficients()) {
    if (step > acc.cap()) break;
    Rational exponent = acc.offset() + Rational(step, 2);
    if (!is_integer(exponent)) {
      throw invariant_violation("branching entry at non-integer parameter " +
                                rat_to_string(exponent));
    }
    Int m = to_int(exponent);
    if (m > cap) continue;
    if (coeff == 0) continue;
    if (!is_integer(coeff) || coeff < 0) {
      throw invariant_violation("multiplicity " + rat_to_string(coeff) + " at parameter " +
                                m.str() + " is not a nonnegative integer");
    }
    if (m <= 0) {
      throw invariant_violation("branching entry at nonpositive parameter " + m.str());
    }
    result.entries[m.convert_to<long long>()] = to_int(coeff);
  }
  result.below_first_parameter = result.entries.empty();
  return result;
}

}  // namespace

BranchingResult branch_closed_form(const HermitianPair& pair, const KSData& ks,
                                   const HCParameter& lambda, long long cap) {
  const CentralizerSubsystem cz = centralizer_subsystem(pair, ks.Z0);
  const PositiveSystem kz_sys = cz.positive_system(pair.ambient_dim());
  const KTypeDecomposition decomp = k_to_kz_branch(pair, ks, lowest_k_type(pair, lambda));

  const long c = long(ks.c.convert_to<long long>());
  const long d = long((ks.d_plus_1 - 1).convert_to<long long>());

  // Base exponents (mu_j + rho_z)(Z0) - 1; rho_z vanishes on Z0 but is kept
  // in the formula it belongs to.
  std::vector<Rational> bases;
  for (const auto& entry : decomp.entries) {
    Rational w = inner(entry.mu + cz.rho_z, ks.Z0);
    if (!is_integer(w)) {
      throw invariant_violation("constituent with non-integral Z0-value " + rat_to_string(w));
    }
    bases.push_back(w - 1);
  }
  Rational first = *std::min_element(bases.begin(), bases.end());
  if (Rational(cap) < first) {
    BranchingResult empty;
    empty.path = BranchPath::closed_form;
    empty.cap = cap;
    empty.below_first_parameter = true;
    return empty;
  }

  long long steps = ((Rational(cap) - first) * 2).convert_to<long long>();
  DiracSeries base = z_series(1, c, steps).convolve(z_series(2, d, steps));

  DiracSeries acc = DiracSeries::zero(first);
  for (std::size_t j = 0; j < decomp.entries.size(); ++j) {
    Irrep constituent{kz_sys, decomp.entries[j].mu + kz_sys.rho};
    Rational scale = Rational(decomp.entries[j].multiplicity * weyl_dimension(constituent));
    acc = acc.add(base.shifted(bases[j]).scaled(scale));
  }
  return collect_entries(acc, cap, BranchPath::closed_form);
}

BranchingResult branch_weyl_sum(const HermitianPair& pair, const KSData& ks,
                                const HCParameter& lambda, long long cap) {
  const CentralizerSubsystem cz = centralizer_subsystem(pair, ks.Z0);
  const PositiveSystem kz_sys = cz.positive_system(pair.ambient_dim());
  const Int wz_order = weyl_group_order(classify_simple_system(kz_sys.simple));

  WeylGroup wk = [&] {
    try {
      return WeylGroup::materialize(pair.compact_system());
    } catch (const unsupported_error& e) {
      throw unsupported_error(std::string(e.what()) +
                              "; use the closed-form path for this pair");
    }
  }();
  if (Int(wk.order()) % wz_order != 0) {
    throw invariant_violation("|W_K| is not divisible by |W_z|");
  }

  const Vec shifted = lambda.lambda + pair.rho_n;
  const long a = long(ks.a.convert_to<long long>());
  const long c = long(ks.c.convert_to<long long>());
  const long d = long((ks.d_plus_1 - 1).convert_to<long long>());

  std::vector<Vec> images;
  images.reserve(wk.order());
  Rational min_offset;
  bool have_min = false;
  for (const auto& w : wk.elements()) {
    images.push_back(wk.apply(w, shifted));
    Rational off = inner(images.back(), ks.Z0) + Rational(a, 2) - 1;
    if (!have_min || off < min_offset) {
      min_offset = off;
      have_min = true;
    }
  }

  long long steps = 0;
  if (Rational(cap) > min_offset) {
    steps = ((Rational(cap) - min_offset) * 2).convert_to<long long>();
  }
  DiracSeries base = z_series(1, c + a, steps).convolve(z_series(2, d, steps));

  DiracSeries acc = DiracSeries::zero(min_offset).truncated(steps);
  for (std::size_t i = 0; i < wk.elements().size(); ++i) {
    const Vec& image = images[i];
    Rational varpi = 1;
    for (const Vec& alpha : cz.phi_z_positive) {
      varpi *= inner(image, alpha) / inner(cz.rho_z, alpha);
      if (varpi == 0) break;
    }
    if (varpi == 0) continue;
    Rational offset = inner(image, ks.Z0) + Rational(a, 2) - 1;
    acc = acc.add(base.shifted(offset).scaled(varpi * wk.elements()[i].sign));
  }

  // The summand is W_z-coset invariant, so the full-group sum overcounts by
  // |W_z|; the parity of a = |Psi_c \ Phi_z|/... fixes the expansion sign of
  // the y-factors.
  Rational normalizer = Rational(a % 2 == 0 ? 1 : -1) / Rational(wz_order);
  acc = acc.scaled(normalizer);
  return collect_entries(acc, cap, BranchPath::weyl_sum);
}

}  // namespace sl2branch
