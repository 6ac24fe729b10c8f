// Coradical of H and the grouplike search built on top of it.

#include <algorithm>
#include <map>
#include <optional>

#include "coradical.hpp"
#include "hopf_forge/errors.hpp"
#include "hopf_forge/hopf.hpp"
#include "qpoly.hpp"

namespace hopf_forge {

namespace detail {

Mat dual_trace_form(const HopfPresentation& h) {
  const std::size_t n = h.dim();
  // Tr(L_{e_i^*}) = sum_m d(m, i, m).
  Vec traces = zero_vec(n, h.order());
  for (const auto& e : h.comult()) {
    if (e.i == e.k) traces[e.j] += e.value;
  }
  Mat form(n, n, h.order());
  for (const auto& e : h.comult()) form(e.j, e.k).add_product(e.value, traces[e.i]);
  return form;
}

Subspace dual_jacobson_radical(const HopfPresentation& h) {
  return null_space(dual_trace_form(h));
}

Subspace coradical_subspace(const HopfPresentation& h) {
  const Subspace radical = dual_jacobson_radical(h);
  if (radical.dim() == 0) {
    return Subspace::span_of_rows(Mat::identity(h.dim(), h.order()));
  }
  return null_space(radical.basis());
}

}  // namespace detail

namespace {

std::vector<Integer> divisors(Integer value) {
  value = abs(value);
  constexpr long kTrialLimit = 1000000;
  std::vector<std::pair<Integer, int>> factors;
  for (long p = 2; p <= kTrialLimit && Integer(p) * p <= value; ++p) {
    int e = 0;
    while (mpz_divisible_ui_p(value.get_mpz_t(), static_cast<unsigned long>(p))) {
      value /= p;
      ++e;
    }
    if (e) factors.emplace_back(Integer(p), e);
  }
  if (value > 1) {
    if (value > Integer(kTrialLimit) * kTrialLimit) {
      throw Error(Errc::EigenvalueNotInField,
                  "rational root search needs to factor " + value.get_str());
    }
    factors.emplace_back(value, 1);
  }
  std::vector<Integer> out{Integer(1)};
  for (const auto& [p, e] : factors) {
    const std::size_t base = out.size();
    Integer pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  return out;
}

// Nonzero rational roots of p.
std::vector<Rational> rational_roots(qpoly::Poly p) {
  qpoly::trim(p);
  std::vector<Rational> roots;
  if (qpoly::degree(p) < 1) return roots;
  std::size_t low = 0;
  while (p[low] == 0) ++low;
  p.erase(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(low));
  if (qpoly::degree(p) < 1) return roots;
  if (qpoly::degree(p) == 1) return {-p[0] / p[1]};
  Integer den = 1;
  for (const auto& c : p) den = lcm(den, Integer(c.get_den()));
  std::vector<Integer> ints;
  for (const auto& c : p) ints.push_back(c.get_num() * (den / c.get_den()));
  for (const auto& num : divisors(ints.front())) {
    for (const auto& lead : divisors(ints.back())) {
      for (int sign : {1, -1}) {
        Rational r(num * sign, lead);
        r.canonicalize();
        if (std::find(roots.begin(), roots.end(), r) != roots.end()) continue;
        if (qpoly::eval(p, r) == 0) roots.push_back(r);
      }
    }
  }
  return roots;
}

// Divides poly by (x - root) once; returns false if root is not a root.
bool deflate(Vec& poly, const CycNumber& root) {
  const std::size_t deg = poly.size() - 1;
  if (deg == 0) return false;
  Vec quotient(deg, CycNumber(root.order()));
  CycNumber carry(root.order());
  for (std::size_t t = deg + 1; t-- > 0;) {
    CycNumber value = poly[t] + carry * root;
    if (t == 0) {
      if (!value.is_zero()) return false;
      break;
    }
    quotient[t - 1] = value;
    carry = value;
  }
  poly = std::move(quotient);
  return true;
}

// Roots of poly of the form r zeta_N^t (r rational, possibly zero), with
// multiplicity. Throws EigenvalueNotInField if they do not account for
// the full degree.
std::vector<CycNumber> candidate_roots(const Vec& poly) {
  const int order = poly.front().order();
  const auto& field = CyclotomicField::get(order);
  std::vector<CycNumber> distinct;
  auto remember = [&distinct](const CycNumber& c) {
    if (std::find(distinct.begin(), distinct.end(), c) == distinct.end()) distinct.push_back(c);
  };
  if (poly.front().is_zero()) remember(CycNumber(order));
  for (int t = 0; t < order; ++t) {
    // p(zeta^t y) split into power-basis components, each a polynomial in y over Q.
    std::vector<qpoly::Poly> parts(field.degree(), qpoly::Poly(poly.size(), Rational(0)));
    for (std::size_t m = 0; m < poly.size(); ++m) {
      const CycNumber twisted = poly[m] * root_of_unity(order, static_cast<long>(t) * static_cast<long>(m));
      const auto coeffs = twisted.coeffs();
      for (int s = 0; s < field.degree(); ++s) parts[s][m] = coeffs[s];
    }
    qpoly::Poly common;
    for (auto& part : parts) {
      qpoly::trim(part);
      if (part.empty()) continue;
      common = common.empty() ? qpoly::monic(part) : qpoly::gcd(common, part);
      if (qpoly::degree(common) == 0) break;
    }
    for (const auto& r : rational_roots(common)) remember(CycNumber(order, r) * root_of_unity(order, t));
  }

  std::vector<CycNumber> with_multiplicity;
  Vec remaining = poly;
  for (const auto& c : distinct) {
    while (deflate(remaining, c)) with_multiplicity.push_back(c);
  }
  if (remaining.size() > 1) {
    throw Error(Errc::EigenvalueNotInField,
                "characteristic polynomial has " + std::to_string(remaining.size() - 1) +
                    " roots outside {r zeta_" + std::to_string(order) +
                    "^t}; raise cyclotomic_order");
  }
  return with_multiplicity;
}

// Affine constraint set {v : A v = b}, kept reduced.
struct Affine {
  Mat rows;  // augmented [A | b]
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

std::optional<Affine> reduce(const Mat& augmented) {
  auto r = rref(augmented);
  const std::size_t n = augmented.cols() - 1;
  if (!r.pivot_columns.empty() && r.pivot_columns.back() == n) return std::nullopt;
  Mat kept(r.rank, augmented.cols(), augmented.order());
  for (std::size_t i = 0; i < r.rank; ++i) {
    for (std::size_t c = 0; c < augmented.cols(); ++c) kept(i, c) = r.reduced(i, c);
  }
  return Affine{std::move(kept), r.rank, std::move(r.pivot_columns)};
}

Mat append_rows(const Mat& top, const Mat& bottom) {
  Mat out(top.rows() + bottom.rows(), top.cols(), top.order());
  for (std::size_t r = 0; r < top.rows(); ++r) {
    for (std::size_t c = 0; c < top.cols(); ++c) out(r, c) = top(r, c);
  }
  for (std::size_t r = 0; r < bottom.rows(); ++r) {
    for (std::size_t c = 0; c < top.cols(); ++c) out(top.rows() + r, c) = bottom(r, c);
  }
  return out;
}

// Value of coordinate k if the constraints pin it down.
std::optional<CycNumber> determined_value(const Affine& a, std::size_t k) {
  for (std::size_t i = 0; i < a.rank; ++i) {
    if (a.pivots[i] != k) continue;
    const std::size_t n = a.rows.cols() - 1;
    for (std::size_t c = k + 1; c < n; ++c) {
      if (!a.rows(i, c).is_zero()) return std::nullopt;
    }
    return a.rows(i, n);
  }
  // Not a pivot: coordinate is free.
  return std::nullopt;
}

Vec point_of(const Affine& a) {
  const std::size_t n = a.rows.cols() - 1;
  Vec v = zero_vec(n, a.rows.order());
  for (std::size_t i = 0; i < a.rank; ++i) v[a.pivots[i]] = a.rows(i, n);
  return v;
}

bool coords_less(const HopfElement& x, const HopfElement& y) {
  auto first_nonzero = [](const Vec& v) {
    std::size_t i = 0;
    while (i < v.size() && v[i].is_zero()) ++i;
    return i;
  };
  const auto fx = first_nonzero(x.coords), fy = first_nonzero(y.coords);
  if (fx != fy) return fx < fy;
  for (std::size_t i = 0; i < x.coords.size(); ++i) {
    if (x.coords[i] == y.coords[i]) continue;
    return x.coords[i].to_string() < y.coords[i].to_string();
  }
  return false;
}

}  // namespace

std::vector<HopfElement> find_grouplikes(const HopfPresentation& h) {
  const std::size_t n = h.dim();
  const int order = h.order();
  const Subspace corad = detail::coradical_subspace(h);
  const std::size_t c = corad.dim();

  // Coordinate operators L_k : a -> (e_k^* (x) id) Delta(a) preserve every
  // subcoalgebra, so their restriction to the coradical is well defined.
  // A grouplike a satisfies L_k a = a_k a.
  std::vector<Mat> ops(n);
  std::vector<std::optional<std::vector<CycNumber>>> candidates(n);
  auto op = [&](std::size_t k) -> const Mat& {
    if (ops[k].rows() == 0) {
      Mat m(n, n, order);
      for (const auto& e : h.comult()) {
        if (e.j == k) m(e.k, e.i) += e.value;
      }
      ops[k] = std::move(m);
    }
    return ops[k];
  };
  auto roots_for = [&](std::size_t k) -> const std::vector<CycNumber>& {
    if (!candidates[k]) {
      // Matrix of L_k on the coradical in the coordinates given by its
      // RREF pivots.
      std::vector<std::size_t> pivots;
      for (std::size_t r = 0; r < c; ++r) {
        std::size_t p = 0;
        while (corad.basis()(r, p).is_zero()) ++p;
        pivots.push_back(p);
      }
      Mat restricted(c, c, order);
      for (std::size_t r = 0; r < c; ++r) {
        const Vec image = op(k) * corad.basis().row(r);
        for (std::size_t s = 0; s < c; ++s) restricted(s, r) = image[pivots[s]];
      }
      auto roots = c == 0 ? std::vector<CycNumber>{} : candidate_roots(characteristic_polynomial(restricted));
      std::vector<CycNumber> distinct;
      for (auto& r : roots) {
        if (std::find(distinct.begin(), distinct.end(), r) == distinct.end()) distinct.push_back(r);
      }
      candidates[k] = std::move(distinct);
    }
    return *candidates[k];
  };

  // Start: v in the coradical and eps(v) = 1.
  const Subspace radical = detail::dual_jacobson_radical(h);
  Mat start(radical.dim() + 1, n + 1, order);
  for (std::size_t r = 0; r < radical.dim(); ++r) {
    for (std::size_t col = 0; col < n; ++col) start(r, col) = radical.basis()(r, col);
  }
  for (std::size_t col = 0; col < n; ++col) start(radical.dim(), col) = h.counit()[col];
  start(radical.dim(), n) = CycNumber::one(order);

  std::vector<HopfElement> found;
  std::vector<std::pair<Affine, std::size_t>> stack;
  if (auto a = reduce(start)) stack.emplace_back(std::move(*a), 0);
  while (!stack.empty()) {
    auto [aff, k] = std::move(stack.back());
    stack.pop_back();
    if (aff.rank == n || k == n) {
      HopfElement candidate{point_of(aff)};
      if (aff.rank == n && is_grouplike(h, candidate)) found.push_back(std::move(candidate));
      continue;
    }
    std::vector<CycNumber> values;
    if (auto fixed = determined_value(aff, k)) {
      values.push_back(*fixed);
    } else {
      values = roots_for(k);
    }
    for (const auto& value : values) {
      // (L_k - value) v = 0 and v_k = value.
      Mat extra(n + 1, n + 1, order);
      const Mat& lk = op(k);
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t col = 0; col < n; ++col) extra(r, col) = lk(r, col);
        extra(r, r) -= value;
      }
      extra(n, k) = CycNumber::one(order);
      extra(n, n) = value;
      if (auto next = reduce(append_rows(aff.rows, extra))) {
        stack.emplace_back(std::move(*next), k + 1);
      }
    }
  }
  std::sort(found.begin(), found.end(), coords_less);
  return found;
}

}  // namespace hopf_forge
