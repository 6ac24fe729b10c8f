#include "hopf_forge/integrals.hpp"

#include <optional>

#include "hopf_forge/errors.hpp"
#include "integral_spaces.hpp"

namespace hopf_forge {

namespace detail {

Subspace left_integral_space(const HopfPresentation& h) {
  const std::size_t n = h.dim();
  Mat system(n * n, n, h.order());
  for (std::size_t i = 0; i < n; ++i) {
    const Mat left = h.left_mult_matrix(h.basis_vector(i));
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) system(i * n + r, c) = left(r, c);
      system(i * n + r, r) -= h.counit()[i];
    }
  }
  return null_space(system);
}

Subspace right_integral_space_dual(const HopfPresentation& h) {
  const std::size_t n = h.dim();
  // For each basis a and output coordinate k:
  //   sum_j d(a, j, k) l_j - l_a unit_k = 0.
  Mat system(n * n, n, h.order());
  for (const auto& e : h.comult()) system(e.i * n + e.k, e.j) += e.value;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t k = 0; k < n; ++k) system(a * n + k, a) -= h.unit()[k];
  }
  return null_space(system);
}

Vec canonical_scaling(Vec v) {
  std::size_t i = 0;
  while (i < v.size() && v[i].is_zero()) ++i;
  if (i == v.size()) return v;
  const CycNumber inv = cyc_invert(v[i]);
  for (auto& x : v) {
    if (!x.is_zero()) x *= inv;
  }
  return v;
}

}  // namespace detail

HopfElement left_integral(const HopfPresentation& h) {
  const Subspace space = detail::left_integral_space(h);
  if (space.dim() != 1) {
    throw Error(Errc::IntegralSpaceNotOneDim,
                "left integrals of " + h.name() + " span " + std::to_string(space.dim()) + " dims");
  }
  return HopfElement{detail::canonical_scaling(space.basis().row(0))};
}

Functional right_integral_dual(const HopfPresentation& h) {
  const Subspace space = detail::right_integral_space_dual(h);
  if (space.dim() != 1) {
    throw Error(Errc::IntegralSpaceNotOneDim, "right integrals of the dual of " + h.name() +
                                                  " span " + std::to_string(space.dim()) + " dims");
  }
  return Functional{detail::canonical_scaling(space.basis().row(0))};
}

IntegralPair normalize(IntegralPair pair) {
  const CycNumber pairing = pair.right_integral(pair.left_integral);
  if (pairing.is_zero()) throw Error(Errc::DegeneratePairing, "l(L) = 0");
  const CycNumber inv = cyc_invert(pairing);
  for (auto& x : pair.right_integral.coords) {
    if (!x.is_zero()) x *= inv;
  }
  pair.normalized = true;
  return pair;
}

namespace {

// c with v = c * base, if one exists.
std::optional<CycNumber> proportionality(const Vec& v, const Vec& base) {
  std::size_t p = 0;
  while (p < base.size() && base[p].is_zero()) ++p;
  if (p == base.size()) return std::nullopt;
  const CycNumber c = v[p] / base[p];
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != c * base[i]) return std::nullopt;
  }
  return c;
}

}  // namespace

HopfElement distinguished_g(const HopfPresentation& h, const IntegralPair& pair) {
  const std::size_t n = h.dim();
  HopfElement g{zero_vec(n, h.order())};
  for (std::size_t i = 0; i < n; ++i) {
    const Functional product = convolve(h, Functional{h.basis_vector(i)}, pair.right_integral);
    auto c = proportionality(product.coords, pair.right_integral.coords);
    if (!c) {
      throw Error(Errc::NotProportional,
                  "e" + std::to_string(i) + "^* l is not a multiple of l");
    }
    g.coords[i] = *c;
  }
  if (!is_grouplike(h, g)) throw Error(Errc::NotProportional, "distinguished g is not grouplike");
  return g;
}

Functional distinguished_alpha(const HopfPresentation& h, const IntegralPair& pair) {
  const std::size_t n = h.dim();
  Functional alpha{zero_vec(n, h.order())};
  for (std::size_t j = 0; j < n; ++j) {
    const Vec product = h.multiply(pair.left_integral.coords, h.basis_vector(j));
    auto c = proportionality(product, pair.left_integral.coords);
    if (!c) {
      throw Error(Errc::NotProportional, "L e" + std::to_string(j) + " is not a multiple of L");
    }
    alpha.coords[j] = *c;
  }
  if (!alpha(h.unit()).is_one()) throw Error(Errc::NotProportional, "alpha(1) != 1");
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (alpha(h.multiply(h.basis_vector(a), h.basis_vector(b))) !=
          alpha.coords[a] * alpha.coords[b]) {
        throw Error(Errc::NotProportional, "alpha is not an algebra map");
      }
    }
  }
  return alpha;
}

IntegralPair make_integral_pair(const HopfPresentation& h) {
  IntegralPair pair{left_integral(h), right_integral_dual(h), false, {}, {}};
  pair = normalize(std::move(pair));
  pair.distinguished_g = distinguished_g(h, pair);
  pair.distinguished_alpha = distinguished_alpha(h, pair);
  return pair;
}

bool is_unimodular(const HopfPresentation& h, const IntegralPair& pair) {
  return pair.distinguished_alpha.coords == h.counit();
}

bool is_semisimple(const HopfPresentation& h, const IntegralPair& pair) {
  return !h.counit_of(pair.left_integral.coords).is_zero();
}

bool is_cosemisimple(const HopfPresentation& h, const IntegralPair& pair) {
  return !pair.right_integral(h.unit()).is_zero();
}

CycNumber radford_trace(const HopfPresentation& h, const IntegralPair& pair, const Mat& f,
                        TraceVariant variant) {
  if (!pair.normalized || !pair.right_integral(pair.left_integral).is_one()) {
    throw Error(Errc::NotNormalized, "trace formula needs l(L) = 1");
  }
  const std::size_t n = h.dim();
  if (f.rows() != n || f.cols() != n) throw Error(Errc::DimensionMismatch, "endomorphism size");
  const Mat& s = h.antipode();
  const Mat d = h.comultiply(pair.left_integral.coords);
  CycNumber total(h.order());
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      if (d(j, k).is_zero()) continue;
      // Sweedler legs L_1 = e_j, L_2 = e_k.
      Vec product;
      switch (variant) {
        case TraceVariant::AntipodeOnSecondLeg:
          product = h.multiply(s.column(k), f.column(j));
          break;
        case TraceVariant::AntipodeAfterF:
          product = h.multiply(s * f.column(k), h.basis_vector(j));
          break;
        case TraceVariant::AntipodeBeforeF:
          product = h.multiply(f * s.column(k), h.basis_vector(j));
          break;
      }
      total.add_product(d(j, k), pair.right_integral(product));
    }
  }
  return total;
}

bool verify_s4_formula(const HopfPresentation& h, const IntegralPair& pair) {
  const Mat s4 = antipode_power(h, 4);
  const Functional& alpha = pair.distinguished_alpha;
  const Functional alpha_inv = compose_with_antipode(h, alpha);
  const Vec& g = pair.distinguished_g.coords;
  const Vec g_inv = h.antipode() * g;
  for (std::size_t a = 0; a < h.dim(); ++a) {
    const HopfElement e{h.basis_vector(a)};
    const HopfElement acted = harpoon_right(h, harpoon_left(h, alpha, e), alpha_inv);
    const Vec rhs = h.multiply(h.multiply(g, acted.coords), g_inv);
    if (rhs != s4.column(a)) return false;
  }
  return true;
}

}  // namespace hopf_forge
