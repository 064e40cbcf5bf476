#include <sl2branch/root_system.hpp>

#include <sl2branch/errors.hpp>

#include <algorithm>
#include <map>
#include <set>

namespace sl2branch {

std::string cartan_type_name(CartanType t) {
  switch (t) {
    case CartanType::A: return "A";
    case CartanType::B: return "B";
    case CartanType::C: return "C";
    case CartanType::D: return "D";
    case CartanType::E6: return "E6";
    case CartanType::E7: return "E7";
  }
  throw invariant_violation("unknown CartanType");
}

bool RootSystem::is_root(const Vec& v) const {
  return std::binary_search(roots.begin(), roots.end(), v);
}

std::vector<Vec> RootSystem::positive_roots() const {
  SimpleBasis basis(simple_roots);
  std::vector<Vec> pos;
  for (const Vec& r : roots) {
    auto coeffs = basis.coefficients(r);
    bool nonneg = std::all_of(coeffs.begin(), coeffs.end(),
                              [](const Rational& c) { return c >= 0; });
    if (nonneg) pos.push_back(r);
  }
  return pos;
}

std::size_t root_count_for(CartanType t, int rank) {
  switch (t) {
    case CartanType::A: return std::size_t(rank) * (rank + 1);
    case CartanType::B:
    case CartanType::C: return 2 * std::size_t(rank) * rank;
    case CartanType::D: return 2 * std::size_t(rank) * (rank - 1);
    case CartanType::E6: return 72;
    case CartanType::E7: return 126;
  }
  throw invariant_violation("unknown CartanType");
}

void RootSystem::validate() const {
  if (roots.size() != root_count_for(type, rank)) {
    throw invariant_violation(cartan_type_name(type) + std::to_string(rank) +
                              ": expected " + std::to_string(root_count_for(type, rank)) +
                              " roots, have " + std::to_string(roots.size()));
  }
  SimpleBasis basis(simple_roots);
  for (const Vec& a : roots) {
    if (!is_root(-a)) {
      throw invariant_violation("root set not closed under negation at " + a.to_string());
    }
    auto coeffs = basis.coefficients(a);
    bool all_nonneg = true, all_nonpos = true;
    for (const Rational& c : coeffs) {
      if (!is_integer(c)) {
        throw invariant_violation("non-integer simple-root coefficient for " + a.to_string());
      }
      if (c < 0) all_nonneg = false;
      if (c > 0) all_nonpos = false;
    }
    if (!all_nonneg && !all_nonpos) {
      throw invariant_violation("mixed-sign simple-root coefficients for " + a.to_string());
    }
    for (const Vec& b : roots) {
      if (!is_root(reflect(b, a))) {
        throw invariant_violation("reflection closure fails: s_" + a.to_string() +
                                  " applied to " + b.to_string());
      }
    }
  }
  for (const Vec& a : roots) {
    if (!root_leq(basis, a, highest_root)) {
      throw invariant_violation("highest root does not dominate " + a.to_string());
    }
  }
}

namespace {

RootSystem finish(CartanType t, int rank, std::size_t dim,
                  std::vector<Vec> roots, std::vector<Vec> simple) {
  RootSystem rs;
  rs.type = t;
  rs.rank = rank;
  rs.ambient_dim = dim;
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  rs.roots = std::move(roots);
  rs.simple_roots = std::move(simple);
  SimpleBasis basis(rs.simple_roots);
  auto m = unique_maximal(basis, rs.positive_roots());
  if (!m) {
    throw invariant_violation("highest root is not unique for " + cartan_type_name(t));
  }
  rs.highest_root = *m;
  return rs;
}

std::vector<Vec> e8_roots() {
  std::vector<Vec> roots;
  for (std::size_t i = 0; i < 8; ++i) {
    for (std::size_t j = i + 1; j < 8; ++j) {
      for (int si : {1, -1}) {
        for (int sj : {1, -1}) {
          Vec v(8);
          v[i] = si;
          v[j] = sj;
          roots.push_back(v);
        }
      }
    }
  }
  // Half-integral roots: all coordinates +-1/2, evenly many minus signs.
  for (unsigned mask = 0; mask < 256; ++mask) {
    if (__builtin_popcount(mask) % 2 != 0) continue;
    Vec v(8);
    for (std::size_t i = 0; i < 8; ++i) {
      v[i] = (mask >> i) & 1 ? Rational(-1, 2) : Rational(1, 2);
    }
    roots.push_back(v);
  }
  return roots;
}

std::vector<Vec> bourbaki_e_simple_roots() {
  std::vector<Vec> s;
  Vec a1(8);
  a1[0] = Rational(1, 2);
  a1[7] = Rational(1, 2);
  for (std::size_t i = 1; i <= 6; ++i) a1[i] = Rational(-1, 2);
  s.push_back(a1);
  Vec a2(8);
  a2[0] = 1;
  a2[1] = 1;
  s.push_back(a2);
  for (std::size_t i = 1; i <= 6; ++i) {
    Vec a(8);
    a[i] = 1;
    a[i - 1] = -1;
    s.push_back(a);  // alpha_{i+2} = e_{i+1} - e_i
  }
  return s;  // alpha_1 .. alpha_8
}

}  // namespace

RootSystem build_root_system(CartanType t, int rank) {
  const int min_rank = (t == CartanType::D) ? 3 : 1;
  if ((t == CartanType::E6 && rank != 6) || (t == CartanType::E7 && rank != 7)) {
    throw config_error("exceptional type has a fixed rank");
  }
  if (rank < min_rank) {
    throw config_error(cartan_type_name(t) + ": rank " + std::to_string(rank) +
                       " out of range");
  }

  std::vector<Vec> roots;
  std::vector<Vec> simple;
  const std::size_t n = std::size_t(rank);

  switch (t) {
    case CartanType::A: {
      const std::size_t dim = n + 1;
      for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
          if (i != j) roots.push_back(unit_vec(dim, i) - unit_vec(dim, j));
        }
      }
      for (std::size_t i = 0; i + 1 < dim; ++i) {
        simple.push_back(unit_vec(dim, i) - unit_vec(dim, i + 1));
      }
      return finish(t, rank, dim, std::move(roots), std::move(simple));
    }
    case CartanType::B:
    case CartanType::C:
    case CartanType::D: {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          for (int si : {1, -1}) {
            for (int sj : {1, -1}) {
              Vec v(n);
              v[i] = si;
              v[j] = sj;
              roots.push_back(v);
            }
          }
        }
      }
      if (t == CartanType::B) {
        for (std::size_t i = 0; i < n; ++i) {
          roots.push_back(unit_vec(n, i));
          roots.push_back(-unit_vec(n, i));
        }
      } else if (t == CartanType::C) {
        for (std::size_t i = 0; i < n; ++i) {
          roots.push_back(unit_vec(n, i) * 2);
          roots.push_back(unit_vec(n, i) * Rational(-2));
        }
      }
      for (std::size_t i = 0; i + 1 < n; ++i) {
        simple.push_back(unit_vec(n, i) - unit_vec(n, i + 1));
      }
      if (t == CartanType::B) {
        simple.push_back(unit_vec(n, n - 1));
      } else if (t == CartanType::C) {
        simple.push_back(unit_vec(n, n - 1) * 2);
      } else {
        simple.push_back(unit_vec(n, n - 2) + unit_vec(n, n - 1));
      }
      return finish(t, rank, n, std::move(roots), std::move(simple));
    }
    case CartanType::E6:
    case CartanType::E7: {
      // Cut out of E8: E7 is orthogonal to e7+e8, E6 additionally to e6+e8.
      Vec v78(8), v68(8);
      v78[6] = 1;
      v78[7] = 1;
      v68[5] = 1;
      v68[7] = 1;
      for (const Vec& r : e8_roots()) {
        if (inner(r, v78) != 0) continue;
        if (t == CartanType::E6 && inner(r, v68) != 0) continue;
        roots.push_back(r);
      }
      auto all = bourbaki_e_simple_roots();
      simple.assign(all.begin(), all.begin() + rank);
      return finish(t, rank, 8, std::move(roots), std::move(simple));
    }
  }
  throw invariant_violation("unknown CartanType");
}

SimpleBasis::SimpleBasis(std::vector<Vec> basis) : basis_(std::move(basis)) {
  const std::size_t k = basis_.size();
  // Invert the Gram matrix by Gauss-Jordan elimination.
  std::vector<std::vector<Rational>> m(k, std::vector<Rational>(2 * k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) m[i][j] = inner(basis_[i], basis_[j]);
    m[i][k + i] = 1;
  }
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t pivot = col;
    while (pivot < k && m[pivot][col] == 0) ++pivot;
    if (pivot == k) {
      throw usage_error("SimpleBasis: vectors are linearly dependent");
    }
    std::swap(m[pivot], m[col]);
    Rational inv = Rational(1) / m[col][col];
    for (auto& x : m[col]) x *= inv;
    for (std::size_t row = 0; row < k; ++row) {
      if (row == col || m[row][col] == 0) continue;
      Rational f = m[row][col];
      for (std::size_t j = 0; j < 2 * k; ++j) m[row][j] -= f * m[col][j];
    }
  }
  gram_inv_.assign(k, std::vector<Rational>(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) gram_inv_[i][j] = m[i][k + j];
  }
}

std::vector<Rational> SimpleBasis::coefficients(const Vec& v) const {
  const std::size_t k = basis_.size();
  std::vector<Rational> b(k);
  for (std::size_t i = 0; i < k; ++i) b[i] = inner(basis_[i], v);
  std::vector<Rational> x(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) x[i] += gram_inv_[i][j] * b[j];
  }
  // Reconstruct to detect components outside the span.
  Vec rec(v.dim());
  for (std::size_t i = 0; i < k; ++i) rec += basis_[i] * x[i];
  if (!(rec == v)) {
    throw usage_error("vector " + v.to_string() + " is not in the span of the basis");
  }
  return x;
}

bool SimpleBasis::in_span(const Vec& v) const {
  return project(v) == v;
}

Vec SimpleBasis::project(const Vec& v) const {
  const std::size_t k = basis_.size();
  std::vector<Rational> b(k);
  for (std::size_t i = 0; i < k; ++i) b[i] = inner(basis_[i], v);
  Vec rec(v.dim());
  for (std::size_t i = 0; i < k; ++i) {
    Rational xi = 0;
    for (std::size_t j = 0; j < k; ++j) xi += gram_inv_[i][j] * b[j];
    rec += basis_[i] * xi;
  }
  return rec;
}

bool root_leq(const SimpleBasis& basis, const Vec& a, const Vec& b) {
  auto coeffs = basis.coefficients(b - a);
  return std::all_of(coeffs.begin(), coeffs.end(),
                     [](const Rational& c) { return c >= 0; });
}

std::optional<Vec> unique_maximal(const SimpleBasis& basis, const std::vector<Vec>& candidates) {
  if (candidates.empty()) {
    throw usage_error("unique_maximal: empty candidate set");
  }
  std::vector<Vec> maximal;
  for (const Vec& a : candidates) {
    bool dominated = false;
    for (const Vec& b : candidates) {
      if (!(a == b) && root_leq(basis, a, b)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) maximal.push_back(a);
  }
  if (maximal.size() == 1) return maximal.front();
  return std::nullopt;
}

PositiveSystem PositiveSystem::from_positive(std::size_t ambient_dim, std::vector<Vec> positive) {
  PositiveSystem ps;
  ps.ambient_dim = ambient_dim;
  std::sort(positive.begin(), positive.end());
  positive.erase(std::unique(positive.begin(), positive.end()), positive.end());
  ps.positive = std::move(positive);
  std::set<Vec> lookup(ps.positive.begin(), ps.positive.end());
  for (const Vec& a : ps.positive) {
    bool decomposable = false;
    for (const Vec& b : ps.positive) {
      if (b == a) continue;
      if (lookup.count(a - b)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) ps.simple.push_back(a);
  }
  ps.rho = Vec(ambient_dim);
  for (const Vec& a : ps.positive) ps.rho += a;
  ps.rho = ps.rho * Rational(1, 2);
  return ps;
}

namespace {

int bond_multiplicity(const Vec& a, const Vec& b) {
  Rational m = coroot_pairing(a, b) * coroot_pairing(b, a);
  if (!is_integer(m) || m < 0 || m > 3) {
    throw invariant_violation("invalid Cartan bond between " + a.to_string() + " and " +
                              b.to_string());
  }
  return int(to_int(m));
}

}  // namespace

std::vector<TypeComponent> classify_simple_system(const std::vector<Vec>& simple) {
  const std::size_t n = simple.size();
  std::vector<std::vector<std::pair<std::size_t, int>>> adj(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      int m = bond_multiplicity(simple[i], simple[j]);
      if (m > 0) {
        adj[i].push_back({j, m});
        adj[j].push_back({i, m});
      }
    }
  }
  std::vector<bool> seen(n, false);
  std::vector<TypeComponent> out;
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<std::size_t> comp;
    std::vector<std::size_t> stack{start};
    seen[start] = true;
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (auto [w, m] : adj[v]) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    const int rank = int(comp.size());
    int max_bond = 1;
    std::size_t branch_node = n;
    int n_branch = 0;
    std::pair<std::size_t, std::size_t> double_edge{n, n};
    for (auto v : comp) {
      if (adj[v].size() > 2) {
        ++n_branch;
        branch_node = v;
      }
      for (auto [w, m] : adj[v]) {
        if (m > max_bond) max_bond = m;
        if (m == 2) double_edge = {v, w};
      }
    }
    TypeComponent tc{'A', rank};
    if (max_bond == 3) {
      tc.letter = 'G';
    } else if (max_bond == 2) {
      auto [u, v] = double_edge;
      bool u_leaf = adj[u].size() == 1;
      bool v_leaf = adj[v].size() == 1;
      if (!u_leaf && !v_leaf) {
        tc.letter = 'F';
      } else {
        // Leaf at the double bond: B when the leaf side is short, C when long.
        std::size_t leaf = u_leaf ? u : v;
        std::size_t other = u_leaf ? v : u;
        if (rank == 2) {
          tc.letter = 'B';
        } else {
          tc.letter = inner(simple[leaf], simple[leaf]) < inner(simple[other], simple[other])
                          ? 'B'
                          : 'C';
        }
      }
    } else if (n_branch == 1) {
      // Branch lengths from the trivalent node decide D vs E.
      std::vector<int> lengths;
      for (auto [w, m] : adj[branch_node]) {
        int len = 1;
        std::size_t prev = branch_node, cur = w;
        while (true) {
          std::size_t next = n;
          for (auto [x, mm] : adj[cur]) {
            if (x != prev) next = x;
          }
          if (next == n) break;
          prev = cur;
          cur = next;
          ++len;
        }
        lengths.push_back(len);
      }
      std::sort(lengths.begin(), lengths.end());
      if (lengths.size() != 3) {
        throw invariant_violation("unrecognized branching diagram");
      }
      if (lengths[0] == 1 && lengths[1] == 1) {
        tc.letter = 'D';
      } else if (lengths[0] == 1 && lengths[1] == 2) {
        tc.letter = 'E';
      } else {
        throw invariant_violation("unrecognized simply-laced diagram");
      }
    } else if (n_branch > 1) {
      throw invariant_violation("diagram with multiple branch nodes");
    }
    out.push_back(tc);
  }
  std::sort(out.begin(), out.end(), [](const TypeComponent& a, const TypeComponent& b) {
    return a.letter != b.letter ? a.letter < b.letter : a.rank < b.rank;
  });
  return out;
}

std::string type_string(const std::vector<TypeComponent>& components) {
  if (components.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (i) s += "+";
    s += components[i].letter + std::to_string(components[i].rank);
  }
  return s;
}

Int weyl_group_order(const std::vector<TypeComponent>& components) {
  auto factorial = [](int n) {
    Int f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
  };
  Int order = 1;
  for (const auto& c : components) {
    switch (c.letter) {
      case 'A': order *= factorial(c.rank + 1); break;
      case 'B':
      case 'C': order *= factorial(c.rank) << c.rank; break;
      case 'D': order *= factorial(c.rank) << (c.rank - 1); break;
      case 'E':
        if (c.rank == 6) order *= 51840;
        else if (c.rank == 7) order *= 2903040;
        else if (c.rank == 8) order *= Int(696729600);
        else throw invariant_violation("bad E rank");
        break;
      case 'F': order *= 1152; break;
      case 'G': order *= 12; break;
      default: throw invariant_violation("bad component letter");
    }
  }
  return order;
}

}  // namespace sl2branch
