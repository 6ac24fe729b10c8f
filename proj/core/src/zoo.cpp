#include "hopf_forge/zoo.hpp"

#include <numeric>

#include "hopf_forge/errors.hpp"

namespace hopf_forge {

namespace {

std::size_t find_identity(const std::vector<std::vector<std::size_t>>& t) {
  const std::size_t m = t.size();
  for (std::size_t e = 0; e < m; ++e) {
    bool ok = true;
    for (std::size_t b = 0; b < m && ok; ++b) ok = t[e][b] == b && t[b][e] == b;
    if (ok) return e;
  }
  throw Error(Errc::NotAGroup, "no identity element");
}

}  // namespace

HopfPresentation build_group_algebra(const std::vector<std::vector<std::size_t>>& table,
                                     std::optional<int> order, std::string name,
                                     std::vector<std::string> labels) {
  const std::size_t m = table.size();
  if (m == 0) throw Error(Errc::NotAGroup, "empty table");
  for (const auto& row : table) {
    if (row.size() != m) throw Error(Errc::NotAGroup, "table is not square");
    for (std::size_t v : row) {
      if (v >= m) throw Error(Errc::NotAGroup, "entry out of range");
    }
  }
  const std::size_t e = find_identity(table);
  std::vector<std::size_t> inv(m, m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      if (table[a][b] == e && table[b][a] == e) inv[a] = b;
    }
    if (inv[a] == m) throw Error(Errc::NotAGroup, "element " + std::to_string(a) + " has no inverse");
  }
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      for (std::size_t c = 0; c < m; ++c) {
        if (table[table[a][b]][c] != table[a][table[b][c]]) {
          throw Error(Errc::NotAGroup, "table is not associative");
        }
      }
    }
  }

  int exponent = 1;
  for (std::size_t a = 0; a < m; ++a) {
    int element_order = 1;
    for (std::size_t p = a; p != e; p = table[p][a]) ++element_order;
    exponent = std::lcm(exponent, element_order);
  }
  const int n_order = order.value_or(exponent);
  if (labels.empty()) {
    for (std::size_t a = 0; a < m; ++a) labels.push_back(a == e ? "1" : "g" + std::to_string(a));
  }
  if (name.empty()) name = "k[G" + std::to_string(m) + "]";

  const CycNumber one = CycNumber::one(n_order);
  std::vector<StructureEntry> mult, comult;
  Vec unit = zero_vec(m, n_order);
  Vec counit(m, one);
  Mat s(m, m, n_order);
  unit[e] = one;
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) mult.push_back({a, b, table[a][b], one});
    comult.push_back({a, a, a, one});
    s(inv[a], a) = one;
  }
  return HopfPresentation(std::move(name), n_order, std::move(labels), std::move(mult),
                          std::move(comult), std::move(unit), std::move(counit), std::move(s));
}

HopfPresentation build_abelian_group_algebra(const std::vector<int>& cyclic_orders,
                                             std::optional<int> order) {
  if (cyclic_orders.empty()) throw Error(Errc::BadParameters, "no cyclic factors");
  std::size_t m = 1;
  for (int c : cyclic_orders) {
    if (c < 1 || c > kMaxCyclotomicOrder) {
      throw Error(Errc::BadParameters, "cyclic order " + std::to_string(c) + " out of range");
    }
    m *= static_cast<std::size_t>(c);
  }
  const std::size_t r = cyclic_orders.size();
  auto digits = [&](std::size_t idx) {
    std::vector<int> d(r);
    for (std::size_t f = r; f-- > 0;) {
      d[f] = static_cast<int>(idx % cyclic_orders[f]);
      idx /= cyclic_orders[f];
    }
    return d;
  };
  auto index = [&](const std::vector<int>& d) {
    std::size_t idx = 0;
    for (std::size_t f = 0; f < r; ++f) idx = idx * cyclic_orders[f] + d[f];
    return idx;
  };

  static const char* const kGenerators = "ghkuvw";
  std::vector<std::vector<std::size_t>> table(m, std::vector<std::size_t>(m));
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < m; ++a) {
    const auto da = digits(a);
    for (std::size_t b = 0; b < m; ++b) {
      const auto db = digits(b);
      std::vector<int> sum(r);
      for (std::size_t f = 0; f < r; ++f) sum[f] = (da[f] + db[f]) % cyclic_orders[f];
      table[a][b] = index(sum);
    }
    std::string label;
    for (std::size_t f = 0; f < r; ++f) {
      if (da[f] == 0) continue;
      if (!label.empty()) label += " ";
      label += r <= 6 ? std::string(1, kGenerators[f]) : "g" + std::to_string(f) + "_";
      if (da[f] > 1) label += "^" + std::to_string(da[f]);
    }
    labels.push_back(label.empty() ? "1" : label);
  }
  std::string name = "k[";
  for (std::size_t f = 0; f < r; ++f) {
    if (f > 0) name += "x";
    name += "Z" + std::to_string(cyclic_orders[f]);
  }
  name += "]";
  return build_group_algebra(table, order, std::move(name), std::move(labels));
}

HopfPresentation build_cyclic_group_algebra(int n, std::optional<int> order) {
  return build_abelian_group_algebra({n}, order);
}

HopfPresentation build_taft(int n, int root_power, std::optional<int> order) {
  if (n < 2) throw Error(Errc::BadParameters, "Taft algebra needs n >= 2");
  if (std::gcd(root_power, n) != 1) {
    throw Error(Errc::BadParameters, "root power must be coprime to n");
  }
  const int big_n = order.value_or(n);
  if (big_n < 1 || big_n > kMaxCyclotomicOrder || big_n % n != 0) {
    throw Error(Errc::BadParameters, "cyclotomic order must be a multiple of n");
  }
  const std::size_t un = static_cast<std::size_t>(n);
  const std::size_t dim = un * un;
  const long step = big_n / n;
  const long rp = ((root_power % n) + n) % n;
  auto w_pow = [&](long e) { return root_of_unity(big_n, step * ((e * rp) % n)); };
  auto idx = [un](std::size_t i, std::size_t j) { return (i % un) * un + j; };

  // q-binomial coefficients (j choose k)_w by the q-Pascal rule.
  std::vector<std::vector<CycNumber>> qbinom(un, std::vector<CycNumber>(un, CycNumber(big_n)));
  for (std::size_t j = 0; j < un; ++j) {
    qbinom[j][0] = CycNumber::one(big_n);
    for (std::size_t k = 1; k <= j; ++k) {
      qbinom[j][k] = qbinom[j - 1][k - 1] + (k < j ? w_pow(static_cast<long>(k)) * qbinom[j - 1][k]
                                                   : CycNumber(big_n));
    }
  }

  std::vector<StructureEntry> mult, comult;
  std::vector<std::string> labels;
  for (std::size_t i1 = 0; i1 < un; ++i1) {
    for (std::size_t j1 = 0; j1 < un; ++j1) {
      std::string label;
      if (i1 > 0) label += i1 == 1 ? "g" : "g^" + std::to_string(i1);
      if (j1 > 0) label += j1 == 1 ? "x" : "x^" + std::to_string(j1);
      labels.push_back(label.empty() ? "1" : label);
      for (std::size_t i2 = 0; i2 < un; ++i2) {
        for (std::size_t j2 = 0; j1 + j2 < un; ++j2) {
          // x^j1 g^i2 = w^{j1 i2} g^i2 x^j1
          mult.push_back({idx(i1, j1), idx(i2, j2), idx(i1 + i2, j1 + j2),
                          w_pow(static_cast<long>(j1 * i2))});
        }
      }
      for (std::size_t k = 0; k <= j1; ++k) {
        comult.push_back({idx(i1, j1), idx(i1, k), idx(i1 + k, j1 - k), qbinom[j1][k]});
      }
    }
  }
  Vec unit = unit_vec(dim, 0, big_n);
  Vec counit = zero_vec(dim, big_n);
  for (std::size_t i = 0; i < un; ++i) counit[idx(i, 0)] = CycNumber::one(big_n);

  std::string name = "taft" + std::to_string(n);
  if (rp != 1) name += "_w" + std::to_string(rp);
  HopfPresentation bare(name, big_n, std::move(labels), std::move(mult), std::move(comult),
                        std::move(unit), std::move(counit), std::nullopt);

  // S(g^i x^j) = S(x)^j S(g)^i with S(g) = g^{n-1}, S(x) = -x g^{n-1}.
  const Vec s_g = bare.basis_vector(idx(un - 1, 0));
  Vec s_x = bare.multiply(bare.basis_vector(idx(0, 1)), s_g);
  for (auto& c : s_x) c = CycNumber(big_n) - c;
  Mat s(dim, dim, big_n);
  Vec s_gi = bare.unit();
  for (std::size_t i = 0; i < un; ++i) {
    Vec image = s_gi;
    for (std::size_t j = 0; j < un; ++j) {
      for (std::size_t r = 0; r < dim; ++r) s(r, idx(i, j)) = image[r];
      image = bare.multiply(s_x, image);
    }
    s_gi = bare.multiply(s_gi, s_g);
  }
  return bare.with_antipode(std::move(s));
}

HopfPresentation build_sweedler() { return build_taft(2).renamed("sweedler"); }

HopfPresentation build_tensor(const HopfPresentation& h1, const HopfPresentation& h2) {
  if (h1.order() != h2.order()) {
    throw Error(Errc::OrderMismatch, "tensor factors live in Q(zeta_" + std::to_string(h1.order()) +
                                         ") and Q(zeta_" + std::to_string(h2.order()) + ")");
  }
  const std::size_t n2 = h2.dim();
  auto combine = [n2](const std::vector<StructureEntry>& a, const std::vector<StructureEntry>& b) {
    std::vector<StructureEntry> out;
    out.reserve(a.size() * b.size());
    for (const auto& x : a) {
      for (const auto& y : b) {
        out.push_back({x.i * n2 + y.i, x.j * n2 + y.j, x.k * n2 + y.k, x.value * y.value});
      }
    }
    return out;
  };
  auto kron_vec = [](const Vec& a, const Vec& b) {
    Vec out;
    out.reserve(a.size() * b.size());
    for (const auto& x : a) {
      for (const auto& y : b) out.push_back(x * y);
    }
    return out;
  };
  std::vector<std::string> labels;
  for (const auto& a : h1.basis()) {
    for (const auto& b : h2.basis()) labels.push_back(a + "|" + b);
  }
  std::optional<Mat> s;
  if (h1.has_antipode() && h2.has_antipode()) s = kronecker(h1.antipode(), h2.antipode());
  return HopfPresentation("tensor(" + h1.name() + "," + h2.name() + ")", h1.order(),
                          std::move(labels), combine(h1.mult(), h2.mult()),
                          combine(h1.comult(), h2.comult()), kron_vec(h1.unit(), h2.unit()),
                          kron_vec(h1.counit(), h2.counit()), std::move(s));
}

HopfPresentation build_dual_spec(const HopfPresentation& h) { return dual(h); }

HopfPresentation build_idempotent_monoid_bialgebra() {
  const CycNumber one = CycNumber::one(1);
  std::vector<StructureEntry> mult{{0, 0, 0, one}, {0, 1, 1, one}, {1, 0, 1, one}, {1, 1, 1, one}};
  std::vector<StructureEntry> comult{{0, 0, 0, one}, {1, 1, 1, one}};
  return HopfPresentation("monoid{1,z}", 1, {"1", "z"}, std::move(mult), std::move(comult),
                          unit_vec(2, 0, 1), Vec{one, one}, std::nullopt);
}

}  // namespace hopf_forge
