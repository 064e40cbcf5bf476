#include <sl2branch/hermitian.hpp>

#include <sl2branch/errors.hpp>

#include <algorithm>
#include <set>

namespace sl2branch {

std::string family_name(PairFamily f) {
  switch (f) {
    case PairFamily::AIII: return "AIII";
    case PairFamily::BDI: return "BDI";
    case PairFamily::CI: return "CI";
    case PairFamily::DIII: return "DIII";
    case PairFamily::EIII: return "EIII";
    case PairFamily::EVII: return "EVII";
  }
  throw invariant_violation("unknown PairFamily");
}

void PairSpec::validate() const {
  switch (family) {
    case PairFamily::AIII:
      if (p < 1 || p > q || p + q < 2) {
        throw config_error("AIII requires 1 <= p <= q and p+q >= 2");
      }
      return;
    case PairFamily::BDI:
      if (odd ? p < 1 : p < 2) {
        throw config_error(odd ? "BDI:odd requires p >= 1" : "BDI:even requires p >= 2");
      }
      return;
    case PairFamily::CI:
      if (n < 1) throw config_error("CI requires n >= 1");
      return;
    case PairFamily::DIII:
      if (p < 2) throw config_error("DIII requires p >= 2");
      return;
    case PairFamily::EIII:
    case PairFamily::EVII:
      return;
  }
  throw config_error("unknown family");
}

std::string PairSpec::to_string() const {
  switch (family) {
    case PairFamily::AIII:
      return "AIII:p=" + std::to_string(p) + ",q=" + std::to_string(q);
    case PairFamily::BDI:
      return std::string("BDI:") + (odd ? "odd" : "even") + ",p=" + std::to_string(p);
    case PairFamily::CI: return "CI:n=" + std::to_string(n);
    case PairFamily::DIII: return "DIII:p=" + std::to_string(p);
    case PairFamily::EIII: return "EIII";
    case PairFamily::EVII: return "EVII";
  }
  throw invariant_violation("unknown PairFamily");
}

std::string PairSpec::algebra_name() const {
  switch (family) {
    case PairFamily::AIII:
      return "su(" + std::to_string(p) + "," + std::to_string(q) + ")";
    case PairFamily::BDI:
      return "so(" + std::to_string(odd ? 2 * p + 1 : 2 * p) + ",2)";
    case PairFamily::CI: return "sp(" + std::to_string(n) + ",R)";
    case PairFamily::DIII: return "so*(" + std::to_string(2 * p) + ")";
    case PairFamily::EIII: return "e6(-14)";
    case PairFamily::EVII: return "e7(-25)";
  }
  throw invariant_violation("unknown PairFamily");
}

namespace {

[[noreturn]] void parse_fail(const std::string& s, const std::string& why) {
  throw config_error("cannot parse pair '" + s + "': " + why +
                     "; expected e.g. AIII:p=2,q=3 | BDI:odd,p=3 | CI:n=2 | DIII:p=5 | EIII | EVII");
}

int parse_param(const std::string& s, const std::string& token, char name) {
  if (token.size() < 3 || token[0] != name || token[1] != '=') {
    parse_fail(s, std::string("expected ") + name + "=<integer>, got '" + token + "'");
  }
  try {
    std::size_t used = 0;
    int value = std::stoi(token.substr(2), &used);
    if (used != token.size() - 2) parse_fail(s, "trailing characters in '" + token + "'");
    return value;
  } catch (const std::exception&) {
    parse_fail(s, "bad integer in '" + token + "'");
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

PairSpec PairSpec::parse(const std::string& input) {
  std::string s = input;
  s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == ' ' || c == '\t'; }),
          s.end());
  auto colon = s.find(':');
  std::string head = s.substr(0, colon);
  std::string tail = colon == std::string::npos ? "" : s.substr(colon + 1);

  PairSpec spec;
  if (head == "AIII") {
    spec.family = PairFamily::AIII;
    auto parts = split(tail, ',');
    if (parts.size() != 2) parse_fail(input, "AIII takes p=..,q=..");
    spec.p = parse_param(input, parts[0], 'p');
    spec.q = parse_param(input, parts[1], 'q');
  } else if (head == "BDI") {
    spec.family = PairFamily::BDI;
    auto parts = split(tail, ',');
    if (parts.size() != 2 || (parts[0] != "odd" && parts[0] != "even")) {
      parse_fail(input, "BDI takes odd|even,p=..");
    }
    spec.odd = parts[0] == "odd";
    spec.p = parse_param(input, parts[1], 'p');
  } else if (head == "CI") {
    spec.family = PairFamily::CI;
    auto parts = split(tail, ',');
    if (parts.size() != 1) parse_fail(input, "CI takes n=..");
    spec.n = parse_param(input, parts[0], 'n');
  } else if (head == "DIII") {
    spec.family = PairFamily::DIII;
    auto parts = split(tail, ',');
    if (parts.size() != 1) parse_fail(input, "DIII takes p=..");
    spec.p = parse_param(input, parts[0], 'p');
  } else if (head == "EIII") {
    spec.family = PairFamily::EIII;
    if (!tail.empty()) parse_fail(input, "EIII takes no parameters");
  } else if (head == "EVII") {
    spec.family = PairFamily::EVII;
    if (!tail.empty()) parse_fail(input, "EVII takes no parameters");
  } else {
    parse_fail(input, "unknown family '" + head + "'");
  }
  spec.validate();
  return spec;
}

std::vector<FamilyTemplate> catalog() {
  return {
      {PairFamily::AIII, "AIII", "su(p,q)", "su(p)+su(q)+so(2)", "1 <= p <= q, p+q >= 2",
       "AIII:p=2,q=3"},
      {PairFamily::BDI, "BDI", "so(m,2)", "so(m)+so(2)",
       "m = 2p+1 with p >= 1 (odd) or m = 2p with p >= 2 (even)", "BDI:odd,p=2"},
      {PairFamily::CI, "CI", "sp(n,R)", "u(n)", "n >= 1", "CI:n=2"},
      {PairFamily::DIII, "DIII", "so*(2p)", "u(p)", "p >= 2", "DIII:p=4"},
      {PairFamily::EIII, "EIII", "e6(-14)", "so(10)+so(2)", "", "EIII"},
      {PairFamily::EVII, "EVII", "e7(-25)", "e6+so(2)", "", "EVII"},
  };
}

bool HermitianPair::is_noncompact(const Vec& root) const {
  return std::binary_search(psi_n.begin(), psi_n.end(), root) ||
         std::binary_search(psi_n.begin(), psi_n.end(), -root);
}

PositiveSystem HermitianPair::compact_system() const {
  return PositiveSystem::from_positive(ambient_dim(), psi_c);
}

Vec HermitianPair::project_to_root_span(const Vec& v) const {
  return simple_basis->project(v);
}

namespace {

struct PairData {
  CartanType type;
  int rank;
  std::size_t dim;
  std::vector<Vec> psi_c, psi_n;
  std::vector<Vec> simple;
  std::size_t noncompact_index;  // 0-based
};

PairData make_aiii(int p, int q) {
  PairData d;
  d.type = CartanType::A;
  d.rank = p + q - 1;
  d.dim = std::size_t(p + q);
  auto eps = [&](int i) { return unit_vec(d.dim, std::size_t(i - 1)); };
  auto del = [&](int j) { return unit_vec(d.dim, std::size_t(p + j - 1)); };
  for (int r = 1; r <= p; ++r) {
    for (int s = r + 1; s <= p; ++s) d.psi_c.push_back(eps(r) - eps(s));
  }
  for (int i = 1; i <= q; ++i) {
    for (int j = i + 1; j <= q; ++j) d.psi_c.push_back(del(i) - del(j));
  }
  for (int i = 1; i <= p; ++i) {
    for (int j = 1; j <= q; ++j) d.psi_n.push_back(eps(i) - del(j));
  }
  for (int i = 1; i < p; ++i) d.simple.push_back(eps(i) - eps(i + 1));
  d.simple.push_back(eps(p) - del(1));
  for (int j = 1; j < q; ++j) d.simple.push_back(del(j) - del(j + 1));
  d.noncompact_index = std::size_t(p - 1);
  return d;
}

PairData make_bdi(int p, bool odd) {
  PairData d;
  d.type = odd ? CartanType::B : CartanType::D;
  d.rank = p + 1;
  d.dim = std::size_t(p + 1);
  auto eps = [&](int i) { return unit_vec(d.dim, std::size_t(i - 1)); };
  const Vec delta1 = unit_vec(d.dim, std::size_t(p));
  for (int i = 1; i <= p; ++i) {
    for (int j = i + 1; j <= p; ++j) {
      d.psi_c.push_back(eps(i) - eps(j));
      d.psi_c.push_back(eps(i) + eps(j));
    }
    if (odd) d.psi_c.push_back(eps(i));
    d.psi_n.push_back(delta1 + eps(i));
    d.psi_n.push_back(delta1 - eps(i));
  }
  if (odd) d.psi_n.push_back(delta1);
  d.simple.push_back(delta1 - eps(1));
  for (int i = 1; i < p; ++i) d.simple.push_back(eps(i) - eps(i + 1));
  d.simple.push_back(odd ? eps(p) : eps(p - 1) + eps(p));
  d.noncompact_index = 0;
  return d;
}

PairData make_ci(int n) {
  PairData d;
  d.type = CartanType::C;
  d.rank = n;
  d.dim = std::size_t(n);
  auto eps = [&](int i) { return unit_vec(d.dim, std::size_t(i - 1)); };
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) d.psi_c.push_back(eps(i) - eps(j));
    for (int r = i; r <= n; ++r) d.psi_n.push_back(eps(i) + eps(r));
  }
  for (int i = 1; i < n; ++i) d.simple.push_back(eps(i) - eps(i + 1));
  d.simple.push_back(eps(n) * 2);
  d.noncompact_index = std::size_t(n - 1);
  return d;
}

PairData make_diii(int p) {
  PairData d;
  d.type = CartanType::D;
  d.rank = p;
  d.dim = std::size_t(p);
  auto eps = [&](int i) { return unit_vec(d.dim, std::size_t(i - 1)); };
  for (int i = 1; i <= p; ++i) {
    for (int j = i + 1; j <= p; ++j) {
      d.psi_c.push_back(eps(i) - eps(j));
      d.psi_n.push_back(eps(i) + eps(j));
    }
  }
  for (int i = 1; i < p; ++i) d.simple.push_back(eps(i) - eps(i + 1));
  d.simple.push_back(eps(p - 1) + eps(p));
  d.noncompact_index = std::size_t(p - 1);
  return d;
}

PairData make_exceptional(PairFamily family) {
  PairData d;
  d.type = family == PairFamily::EIII ? CartanType::E6 : CartanType::E7;
  d.rank = family == PairFamily::EIII ? 6 : 7;
  d.dim = 8;
  RootSystem abstract = build_root_system(d.type, d.rank);
  d.simple = abstract.simple_roots;
  d.noncompact_index = std::size_t(d.rank - 1);
  SimpleBasis basis(d.simple);
  for (const Vec& r : abstract.roots) {
    auto coeffs = basis.coefficients(r);
    if (std::any_of(coeffs.begin(), coeffs.end(), [](const Rational& c) { return c < 0; })) {
      continue;
    }
    const Rational& last = coeffs.back();
    if (last == 0) {
      d.psi_c.push_back(r);
    } else if (last == 1) {
      d.psi_n.push_back(r);
    } else {
      throw invariant_violation("noncompact simple-root coefficient " + rat_to_string(last));
    }
  }
  return d;
}

std::size_t expected_psi_n_size(const PairSpec& s) {
  switch (s.family) {
    case PairFamily::AIII: return std::size_t(s.p) * s.q;
    case PairFamily::BDI: return std::size_t(s.odd ? 2 * s.p + 1 : 2 * s.p);
    case PairFamily::CI: return std::size_t(s.n) * (s.n + 1) / 2;
    case PairFamily::DIII: return std::size_t(s.p) * (s.p - 1) / 2;
    case PairFamily::EIII: return 16;
    case PairFamily::EVII: return 27;
  }
  throw invariant_violation("unknown PairFamily");
}

}  // namespace

HermitianPair build_pair(const PairSpec& spec) {
  spec.validate();
  PairData d;
  switch (spec.family) {
    case PairFamily::AIII: d = make_aiii(spec.p, spec.q); break;
    case PairFamily::BDI: d = make_bdi(spec.p, spec.odd); break;
    case PairFamily::CI: d = make_ci(spec.n); break;
    case PairFamily::DIII: d = make_diii(spec.p); break;
    case PairFamily::EIII:
    case PairFamily::EVII: d = make_exceptional(spec.family); break;
  }

  HermitianPair pair;
  pair.spec = spec;
  pair.system.type = d.type;
  pair.system.rank = d.rank;
  pair.system.ambient_dim = d.dim;
  pair.noncompact_simple_index = d.noncompact_index;

  std::sort(d.psi_c.begin(), d.psi_c.end());
  std::sort(d.psi_n.begin(), d.psi_n.end());
  pair.psi_c = d.psi_c;
  pair.psi_n = d.psi_n;
  pair.psi = d.psi_c;
  pair.psi.insert(pair.psi.end(), d.psi_n.begin(), d.psi_n.end());
  std::sort(pair.psi.begin(), pair.psi.end());

  std::vector<Vec> roots = pair.psi;
  for (const Vec& r : pair.psi) roots.push_back(-r);
  std::sort(roots.begin(), roots.end());
  pair.system.roots = std::move(roots);
  pair.system.simple_roots = d.simple;
  pair.simple_basis = std::make_shared<SimpleBasis>(d.simple);

  // beta_M, the maximal root of Psi_n (for a simple g this is the highest
  // root of the whole system).
  auto maximal = unique_maximal(*pair.simple_basis, pair.psi_n);
  if (!maximal) {
    throw invariant_violation(spec.to_string() + ": maximal root of Psi_n is not unique");
  }
  pair.system.highest_root = *maximal;

  pair.rho = Vec(d.dim);
  pair.rho_n = Vec(d.dim);
  for (const Vec& a : pair.psi) pair.rho += a;
  for (const Vec& a : pair.psi_n) pair.rho_n += a;
  pair.rho = pair.rho * Rational(1, 2);
  pair.rho_n = pair.rho_n * Rational(1, 2);
  pair.rho_c = pair.rho - pair.rho_n;

  // Construction invariants.
  if (pair.psi_n.size() != expected_psi_n_size(spec)) {
    throw invariant_violation(spec.to_string() + ": |Psi_n| = " +
                              std::to_string(pair.psi_n.size()));
  }
  std::size_t noncompact_simples = 0;
  for (const Vec& b : pair.system.simple_roots) {
    if (std::binary_search(pair.psi_n.begin(), pair.psi_n.end(), b)) ++noncompact_simples;
  }
  if (noncompact_simples != 1 ||
      !std::binary_search(pair.psi_n.begin(), pair.psi_n.end(), pair.noncompact_simple())) {
    throw invariant_violation(spec.to_string() + ": noncompact simple root is not unique");
  }
  for (const Vec& a : pair.psi_n) {
    for (const Vec& b : pair.psi_n) {
      if (pair.system.is_root(a + b)) {
        throw invariant_violation(spec.to_string() + ": positive system is not holomorphic at " +
                                  a.to_string() + " + " + b.to_string());
      }
    }
  }
  return pair;
}

CentralizerSubsystem centralizer_subsystem(const HermitianPair& pair, const Vec& Z) {
  CentralizerSubsystem cz;
  for (const Vec& alpha : pair.psi_c) {
    if (inner(alpha, Z) == 0) cz.phi_z_positive.push_back(alpha);
  }
  cz.rho_z = Vec(pair.ambient_dim());
  for (const Vec& alpha : cz.phi_z_positive) cz.rho_z += alpha;
  cz.rho_z = cz.rho_z * Rational(1, 2);
  auto sys = PositiveSystem::from_positive(pair.ambient_dim(), cz.phi_z_positive);
  cz.semisimple_type = classify_simple_system(sys.simple);
  return cz;
}

PositiveSystem CentralizerSubsystem::positive_system(std::size_t ambient_dim) const {
  return PositiveSystem::from_positive(ambient_dim, phi_z_positive);
}

}  // namespace sl2branch
