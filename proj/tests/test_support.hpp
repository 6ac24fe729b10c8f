#pragma once

#include <complex>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "hopf_forge/cyclofield.hpp"
#include "hopf_forge/hopf.hpp"
#include "hopf_forge/linalg.hpp"
#include "hopf_forge/zoo.hpp"

namespace hopf_forge::fixtures {

/// Image of x under the complex embedding zeta_N -> exp(2 pi i / N).
inline std::complex<double> embed(const CycNumber& x) {
  const auto c = x.coeffs();
  const double step = 2.0 * std::numbers::pi / x.order();
  std::complex<double> out{0.0, 0.0};
  for (std::size_t t = 0; t < c.size(); ++t) {
    out += c[t].get_d() * std::polar(1.0, step * static_cast<double>(t));
  }
  return out;
}

inline std::complex<double> complex_root(int n, long k) {
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / n);
}

/// Random element with small integer numerators over a small denominator.
inline CycNumber random_cyc(std::mt19937& rng, int order, int bound = 3) {
  std::uniform_int_distribution<int> coeff(-bound, bound);
  std::uniform_int_distribution<int> den(1, 3);
  std::vector<Rational> c(static_cast<std::size_t>(euler_phi(order)));
  for (auto& v : c) v = Rational(coeff(rng), den(rng));
  return CycNumber::from_coeffs(order, c);
}

inline Mat random_mat(std::mt19937& rng, std::size_t n, int order, int bound = 2) {
  Mat m(n, n, order);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) m(r, c) = random_cyc(rng, order, bound);
  }
  return m;
}

struct CorpusEntry {
  std::string label;
  HopfPresentation h;
};

/// The eight algebras every cross-cutting property is checked on.
inline std::vector<CorpusEntry> corpus() {
  const auto t3 = build_taft(3);
  std::vector<CorpusEntry> out;
  out.push_back({"k[Z3]", build_cyclic_group_algebra(3)});
  out.push_back({"k[Z5]", build_cyclic_group_algebra(5)});
  out.push_back({"k[Z15]", build_cyclic_group_algebra(15)});
  out.push_back({"k[Z3xZ3]", build_abelian_group_algebra({3, 3})});
  out.push_back({"T3", t3});
  out.push_back({"T5", build_taft(5)});
  out.push_back({"dual(T3)", build_dual_spec(t3)});
  out.push_back({"T3(x)k[Z5]", build_tensor(lift_order(t3, 15), build_cyclic_group_algebra(5, 15))});
  return out;
}

}  // namespace hopf_forge::fixtures
