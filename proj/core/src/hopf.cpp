#include "hopf_forge/hopf.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <tuple>

#include "hopf_forge/errors.hpp"
#include "integral_spaces.hpp"

namespace hopf_forge {

namespace {

std::vector<StructureEntry> canonical_entries(std::vector<StructureEntry> entries,
                                              std::size_t dim, int order, const char* what) {
  std::map<std::array<std::size_t, 3>, CycNumber> merged;
  for (auto& e : entries) {
    if (e.i >= dim || e.j >= dim || e.k >= dim) {
      throw Error(Errc::MalformedTensor, std::string(what) + " entry (" + std::to_string(e.i) +
                                             ", " + std::to_string(e.j) + ", " +
                                             std::to_string(e.k) + ") out of range for dim " +
                                             std::to_string(dim));
    }
    if (e.value.order() != order) {
      throw Error(Errc::OrderMismatch, std::string(what) + " scalar of order " +
                                           std::to_string(e.value.order()));
    }
    auto [it, inserted] = merged.try_emplace({e.i, e.j, e.k}, e.value);
    if (!inserted) it->second += e.value;
  }
  std::vector<StructureEntry> out;
  out.reserve(merged.size());
  for (auto& [key, value] : merged) {
    if (!value.is_zero()) out.push_back({key[0], key[1], key[2], value});
  }
  return out;
}

void check_vector(const Vec& v, std::size_t dim, int order, const char* what) {
  if (v.size() != dim) {
    throw Error(Errc::MalformedTensor, std::string(what) + " has length " +
                                           std::to_string(v.size()) + ", expected " +
                                           std::to_string(dim));
  }
  for (const auto& x : v) {
    if (x.order() != order) throw Error(Errc::OrderMismatch, std::string(what) + " scalar order");
  }
}

using Triple = std::array<std::size_t, 3>;
using SparseCube = std::map<Triple, CycNumber>;

void accumulate(SparseCube& cube, const Triple& key, const CycNumber& value) {
  auto [it, inserted] = cube.try_emplace(key, value);
  if (!inserted) it->second += value;
}

bool sparse_equal(SparseCube a, SparseCube b) {
  std::erase_if(a, [](const auto& kv) { return kv.second.is_zero(); });
  std::erase_if(b, [](const auto& kv) { return kv.second.is_zero(); });
  return a == b;
}

}  // namespace

HopfPresentation::HopfPresentation(std::string name, int order, std::vector<std::string> basis,
                                   std::vector<StructureEntry> mult,
                                   std::vector<StructureEntry> comult, Vec unit, Vec counit,
                                   std::optional<Mat> antipode)
    : name_(std::move(name)), order_(order), basis_(std::move(basis)) {
  const std::size_t n = basis_.size();
  if (n == 0) throw Error(Errc::MalformedTensor, "dimension must be at least 1");
  CyclotomicField::get(order);
  mult_ = canonical_entries(std::move(mult), n, order, "mult");
  comult_ = canonical_entries(std::move(comult), n, order, "comult");
  check_vector(unit, n, order, "unit");
  check_vector(counit, n, order, "counit");
  unit_ = std::move(unit);
  counit_ = std::move(counit);
  if (antipode) {
    if (antipode->rows() != n || antipode->cols() != n) {
      throw Error(Errc::MalformedTensor, "antipode must be " + std::to_string(n) + "x" +
                                             std::to_string(n));
    }
    if (antipode->order() != order) throw Error(Errc::OrderMismatch, "antipode order");
  }
  antipode_ = std::move(antipode);

  products_.resize(n * n);
  for (const auto& e : mult_) products_[e.i * n + e.j].push_back({e.k, e.value});
  coproducts_.resize(n);
  for (const auto& e : comult_) coproducts_[e.i].push_back({e.j, e.k, e.value});
}

const Mat& HopfPresentation::antipode() const {
  if (!antipode_) throw Error(Errc::NoAntipode, name_ + " carries no antipode");
  return *antipode_;
}

HopfPresentation HopfPresentation::with_antipode(Mat antipode) const {
  return HopfPresentation(name_, order_, basis_, mult_, comult_, unit_, counit_,
                          std::move(antipode));
}

HopfPresentation HopfPresentation::renamed(std::string name) const {
  HopfPresentation copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

Vec HopfPresentation::multiply(const Vec& a, const Vec& b) const {
  const std::size_t n = dim();
  Vec out = zero_vec(n, order_);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j].is_zero()) continue;
      const auto& terms = products_[i * n + j];
      if (terms.empty()) continue;
      const CycNumber ab = a[i] * b[j];
      for (const auto& t : terms) out[t.k].add_product(ab, t.value);
    }
  }
  return out;
}

Mat HopfPresentation::comultiply(const Vec& a) const {
  const std::size_t n = dim();
  Mat out(n, n, order_);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (const auto& t : coproducts_[i]) out(t.j, t.k).add_product(a[i], t.value);
  }
  return out;
}

Mat HopfPresentation::left_mult_matrix(const Vec& a) const {
  const std::size_t n = dim();
  Mat out(n, n, order_);
  for (std::size_t c = 0; c < n; ++c) {
    Vec col = multiply(a, basis_vector(c));
    for (std::size_t r = 0; r < n; ++r) out(r, c) = std::move(col[r]);
  }
  return out;
}

Mat HopfPresentation::right_mult_matrix(const Vec& a) const {
  const std::size_t n = dim();
  Mat out(n, n, order_);
  for (std::size_t c = 0; c < n; ++c) {
    Vec col = multiply(basis_vector(c), a);
    for (std::size_t r = 0; r < n; ++r) out(r, c) = std::move(col[r]);
  }
  return out;
}

Mat HopfPresentation::tensor_multiply(const Mat& x, const Mat& y) const {
  const std::size_t n = dim();
  struct NonZero {
    std::size_t j, k;
    const CycNumber* value;
  };
  auto nonzeros = [n](const Mat& m) {
    std::vector<NonZero> out;
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (!m(j, k).is_zero()) out.push_back({j, k, &m(j, k)});
      }
    }
    return out;
  };
  Mat out(n, n, order_);
  for (const auto& a : nonzeros(x)) {
    for (const auto& b : nonzeros(y)) {
      const auto& left = products_[a.j * n + b.j];
      const auto& right = products_[a.k * n + b.k];
      if (left.empty() || right.empty()) continue;
      const CycNumber ab = *a.value * *b.value;
      for (const auto& l : left) {
        const CycNumber abl = ab * l.value;
        for (const auto& r : right) out(l.k, r.k).add_product(abl, r.value);
      }
    }
  }
  return out;
}

bool operator==(const HopfPresentation& lhs, const HopfPresentation& rhs) {
  auto same_entries = [](const std::vector<StructureEntry>& a,
                         const std::vector<StructureEntry>& b) {
    return std::equal(a.begin(), a.end(), b.begin(), b.end(), [](const auto& x, const auto& y) {
      return x.i == y.i && x.j == y.j && x.k == y.k && x.value == y.value;
    });
  };
  return lhs.name_ == rhs.name_ && lhs.order_ == rhs.order_ && lhs.basis_ == rhs.basis_ &&
         same_entries(lhs.mult_, rhs.mult_) && same_entries(lhs.comult_, rhs.comult_) &&
         lhs.unit_ == rhs.unit_ && lhs.counit_ == rhs.counit_ && lhs.antipode_ == rhs.antipode_;
}

bool Checklist::all_passed() const {
  return std::none_of(results.begin(), results.end(),
                      [](const auto& r) { return r.status == CheckStatus::Fail; });
}

const CheckResult* Checklist::find(const std::string& name) const {
  for (const auto& r : results) {
    if (r.name == name) return &r;
  }
  return nullptr;
}

std::vector<std::string> Checklist::failures() const {
  std::vector<std::string> out;
  for (const auto& r : results) {
    if (r.status == CheckStatus::Fail) out.push_back(r.name);
  }
  return out;
}

namespace {

struct Term {
  std::size_t k;
  const CycNumber* value;
};

struct CoTerm {
  std::size_t j, k;
  const CycNumber* value;
};

// Sparse views of the structure constants, indexed like the private
// lookup tables of HopfPresentation.
struct SparseTables {
  explicit SparseTables(const HopfPresentation& h) : n(h.dim()), products(n * n), coproducts(n) {
    for (const auto& e : h.mult()) products[e.i * n + e.j].push_back({e.k, &e.value});
    for (const auto& e : h.comult()) coproducts[e.i].push_back({e.j, e.k, &e.value});
  }
  const std::vector<Term>& product(std::size_t i, std::size_t j) const {
    return products[i * n + j];
  }

  std::size_t n;
  std::vector<std::vector<Term>> products;
  std::vector<std::vector<CoTerm>> coproducts;
};

CheckResult check_associativity(const HopfPresentation& h, const SparseTables& t) {
  const std::size_t n = h.dim();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        Vec lhs = zero_vec(n, h.order()), rhs = zero_vec(n, h.order());
        for (const auto& p : t.product(a, b)) {
          for (const auto& q : t.product(p.k, c)) lhs[q.k].add_product(*p.value, *q.value);
        }
        for (const auto& p : t.product(b, c)) {
          for (const auto& q : t.product(a, p.k)) rhs[q.k].add_product(*p.value, *q.value);
        }
        if (lhs != rhs) {
          return {"associativity", CheckStatus::Fail,
                  "(e" + std::to_string(a) + " e" + std::to_string(b) + ") e" +
                      std::to_string(c) + " differs"};
        }
      }
    }
  }
  return {"associativity", CheckStatus::Pass, ""};
}

CheckResult check_unit(const HopfPresentation& h) {
  for (std::size_t a = 0; a < h.dim(); ++a) {
    const Vec e = h.basis_vector(a);
    if (h.multiply(h.unit(), e) != e || h.multiply(e, h.unit()) != e) {
      return {"unit", CheckStatus::Fail, "1 e" + std::to_string(a) + " != e" + std::to_string(a)};
    }
  }
  return {"unit", CheckStatus::Pass, ""};
}

CheckResult check_coassociativity(const HopfPresentation& h, const SparseTables& t) {
  for (std::size_t a = 0; a < h.dim(); ++a) {
    SparseCube left, right;
    for (const auto& x : t.coproducts[a]) {
      for (const auto& y : t.coproducts[x.j]) accumulate(left, {y.j, y.k, x.k}, *x.value * *y.value);
      for (const auto& y : t.coproducts[x.k]) accumulate(right, {x.j, y.j, y.k}, *x.value * *y.value);
    }
    if (!sparse_equal(std::move(left), std::move(right))) {
      return {"coassociativity", CheckStatus::Fail,
              "(Delta (x) id) Delta(e" + std::to_string(a) + ") != (id (x) Delta) Delta(e" +
                  std::to_string(a) + ")"};
    }
  }
  return {"coassociativity", CheckStatus::Pass, ""};
}

CheckResult check_counit(const HopfPresentation& h) {
  const std::size_t n = h.dim();
  for (std::size_t a = 0; a < n; ++a) {
    const Mat d = h.comultiply(h.basis_vector(a));
    Vec left = zero_vec(n, h.order()), right = zero_vec(n, h.order());
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (d(j, k).is_zero()) continue;
        left[k].add_product(h.counit()[j], d(j, k));
        right[j].add_product(h.counit()[k], d(j, k));
      }
    }
    const Vec e = h.basis_vector(a);
    if (left != e || right != e) {
      return {"counit", CheckStatus::Fail, "counit fails on e" + std::to_string(a)};
    }
  }
  return {"counit", CheckStatus::Pass, ""};
}

CheckResult check_comult_multiplicative(const HopfPresentation& h, const SparseTables& t) {
  const std::size_t n = h.dim();
  Mat unit_sq(n, n, h.order());
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) unit_sq(j, k) = h.unit()[j] * h.unit()[k];
  }
  if (h.comultiply(h.unit()) != unit_sq) {
    return {"comultiplication-multiplicative", CheckStatus::Fail, "Delta(1) != 1 (x) 1"};
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      Mat lhs(n, n, h.order());
      for (const auto& p : t.product(a, b)) {
        for (const auto& c : t.coproducts[p.k]) lhs(c.j, c.k).add_product(*p.value, *c.value);
      }
      // (a_1 b_1) (x) (a_2 b_2)
      Mat rhs(n, n, h.order());
      for (const auto& x : t.coproducts[a]) {
        for (const auto& y : t.coproducts[b]) {
          const auto& left = t.product(x.j, y.j);
          const auto& right = t.product(x.k, y.k);
          if (left.empty() || right.empty()) continue;
          const CycNumber xy = *x.value * *y.value;
          for (const auto& l : left) {
            const CycNumber xyl = xy * *l.value;
            for (const auto& r : right) rhs(l.k, r.k).add_product(xyl, *r.value);
          }
        }
      }
      if (lhs != rhs) {
        return {"comultiplication-multiplicative", CheckStatus::Fail,
                "Delta(e" + std::to_string(a) + " e" + std::to_string(b) + ") differs"};
      }
    }
  }
  return {"comultiplication-multiplicative", CheckStatus::Pass, ""};
}

CheckResult check_counit_multiplicative(const HopfPresentation& h, const SparseTables& t) {
  if (!h.counit_of(h.unit()).is_one()) {
    return {"counit-multiplicative", CheckStatus::Fail, "eps(1) != 1"};
  }
  for (std::size_t a = 0; a < h.dim(); ++a) {
    for (std::size_t b = 0; b < h.dim(); ++b) {
      CycNumber lhs(h.order());
      for (const auto& p : t.product(a, b)) lhs.add_product(*p.value, h.counit()[p.k]);
      if (lhs != h.counit()[a] * h.counit()[b]) {
        return {"counit-multiplicative", CheckStatus::Fail,
                "eps(e" + std::to_string(a) + " e" + std::to_string(b) + ") differs"};
      }
    }
  }
  return {"counit-multiplicative", CheckStatus::Pass, ""};
}

// Returns the first basis index where sum S(x_1) x_2 or sum x_1 S(x_2)
// differs from eps(x) 1.
std::optional<std::size_t> antipode_violation(const HopfPresentation& h, const Mat& s) {
  const std::size_t n = h.dim();
  std::vector<Vec> images;
  images.reserve(n);
  for (std::size_t j = 0; j < n; ++j) images.push_back(s.column(j));
  for (std::size_t a = 0; a < n; ++a) {
    const Mat d = h.comultiply(h.basis_vector(a));
    Vec left = zero_vec(n, h.order()), right = zero_vec(n, h.order());
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (d(j, k).is_zero()) continue;
        Vec l = h.multiply(images[j], h.basis_vector(k));
        Vec r = h.multiply(h.basis_vector(j), images[k]);
        for (std::size_t c = 0; c < n; ++c) {
          left[c].add_product(d(j, k), l[c]);
          right[c].add_product(d(j, k), r[c]);
        }
      }
    }
    Vec expected = h.unit();
    for (auto& x : expected) x *= h.counit()[a];
    if (left != expected || right != expected) return a;
  }
  return std::nullopt;
}

}  // namespace

Checklist check_axioms(const HopfPresentation& h) {
  Checklist list;
  const SparseTables tables(h);
  list.results.push_back(check_associativity(h, tables));
  list.results.push_back(check_unit(h));
  list.results.push_back(check_coassociativity(h, tables));
  list.results.push_back(check_counit(h));
  list.results.push_back(check_comult_multiplicative(h, tables));
  list.results.push_back(check_counit_multiplicative(h, tables));
  if (!h.has_antipode()) {
    list.results.push_back({"antipode", CheckStatus::Skipped, "no antipode supplied"});
  } else if (auto bad = antipode_violation(h, h.antipode())) {
    list.results.push_back({"antipode", CheckStatus::Fail,
                            "antipode identity fails on e" + std::to_string(*bad) + " (" +
                                h.basis()[*bad] + ")"});
  } else {
    list.results.push_back({"antipode", CheckStatus::Pass, ""});
  }
  return list;
}

Mat compute_antipode(const HopfPresentation& h) {
  const std::size_t n = h.dim();
  const Subspace left = detail::left_integral_space(h);
  const Subspace right = detail::right_integral_space_dual(h);
  if (left.dim() != 1 || right.dim() != 1) {
    throw Error(Errc::NoAntipode, "integral spaces have dimensions " + std::to_string(left.dim()) +
                                      " and " + std::to_string(right.dim()) + ", not 1");
  }
  const Vec big = left.basis().row(0);
  Functional small{right.basis().row(0)};
  const CycNumber pairing = small(big);
  if (pairing.is_zero()) throw Error(Errc::NoAntipode, "integrals pair to zero");
  for (auto& c : small.coords) c /= pairing;

  // Columns of S^{-1}: e_a -> sum l(e_a L_1) L_2.
  const Mat d = h.comultiply(big);
  Mat inv_s(n, n, h.order());
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t j = 0; j < n; ++j) {
      bool any = false;
      for (std::size_t k = 0; k < n && !any; ++k) any = !d(j, k).is_zero();
      if (!any) continue;
      const CycNumber w = small(h.multiply(h.basis_vector(a), h.basis_vector(j)));
      if (w.is_zero()) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (!d(j, k).is_zero()) inv_s(k, a).add_product(w, d(j, k));
      }
    }
  }
  Mat s;
  try {
    s = inverse(inv_s);
  } catch (const Error&) {
    throw Error(Errc::NoAntipode, "candidate inverse antipode is singular");
  }
  if (auto bad = antipode_violation(h, s)) {
    throw Error(Errc::NoAntipode, "antipode identity fails on e" + std::to_string(*bad));
  }
  return s;
}

Mat antipode_by_linear_system(const HopfPresentation& h) {
  const std::size_t n = h.dim();
  // Unknown S(p, j) sits at column p * n + j; equation (a, c) is the e_c
  // coordinate of sum_{j,k} d(a,j,k) S(e_j) e_k = eps(e_a) 1.
  Mat system(n * n, n * n, h.order());
  Vec rhs = zero_vec(n * n, h.order());
  for (const auto& co : h.comult()) {
    for (const auto& m : h.mult()) {
      if (m.j != co.k) continue;
      const std::size_t row = co.i * n + m.k;
      system(row, m.i * n + co.j).add_product(co.value, m.value);
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t c = 0; c < n; ++c) rhs[a * n + c] = h.counit()[a] * h.unit()[c];
  }
  Vec solution;
  if (!solve(system, rhs, solution)) {
    throw Error(Errc::NoAntipode, "sum S(x_1) x_2 = eps(x) 1 has no solution");
  }
  Mat s(n, n, h.order());
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t j = 0; j < n; ++j) s(p, j) = solution[p * n + j];
  }
  if (auto bad = antipode_violation(h, s)) {
    throw Error(Errc::NoAntipode, "solution violates an antipode identity on e" +
                                      std::to_string(*bad));
  }
  return s;
}

namespace {

std::string dual_label(const std::string& label) {
  if (label.size() > 1 && label.back() == '*') return label.substr(0, label.size() - 1);
  return label + "*";
}

std::string dual_name(const std::string& name) {
  if (name.rfind("dual(", 0) == 0 && name.back() == ')') return name.substr(5, name.size() - 6);
  return "dual(" + name + ")";
}

}  // namespace

HopfPresentation dual(const HopfPresentation& h) {
  std::vector<StructureEntry> mult, comult;
  // e_j^* e_k^* = sum_i d(i, j, k) e_i^*
  for (const auto& e : h.comult()) mult.push_back({e.j, e.k, e.i, e.value});
  // Delta(e_k^*) = sum_{i,j} m(i, j, k) e_i^* (x) e_j^*
  for (const auto& e : h.mult()) comult.push_back({e.k, e.i, e.j, e.value});
  std::vector<std::string> labels;
  for (const auto& l : h.basis()) labels.push_back(dual_label(l));
  std::optional<Mat> s;
  if (h.has_antipode()) s = h.antipode().transpose();
  return HopfPresentation(dual_name(h.name()), h.order(), std::move(labels), std::move(mult),
                          std::move(comult), h.counit(), h.unit(), std::move(s));
}

HopfPresentation lift_order(const HopfPresentation& h, int order) {
  auto lift_entries = [order](const std::vector<StructureEntry>& entries) {
    std::vector<StructureEntry> out;
    for (const auto& e : entries) out.push_back({e.i, e.j, e.k, lift(e.value, order)});
    return out;
  };
  auto lift_vec = [order](const Vec& v) {
    Vec out;
    for (const auto& x : v) out.push_back(lift(x, order));
    return out;
  };
  std::optional<Mat> s;
  if (h.has_antipode()) {
    Mat m(h.dim(), h.dim(), order);
    for (std::size_t r = 0; r < h.dim(); ++r) {
      for (std::size_t c = 0; c < h.dim(); ++c) m(r, c) = lift(h.antipode()(r, c), order);
    }
    s = std::move(m);
  }
  return HopfPresentation(h.name(), order, h.basis(), lift_entries(h.mult()),
                          lift_entries(h.comult()), lift_vec(h.unit()), lift_vec(h.counit()),
                          std::move(s));
}

HopfElement harpoon_left(const HopfPresentation& h, const Functional& beta, const HopfElement& a) {
  if (beta.coords.size() != h.dim() || a.coords.size() != h.dim()) {
    throw Error(Errc::DimensionMismatch, "harpoon operands");
  }
  const Mat d = h.comultiply(a.coords);
  return HopfElement{d * beta.coords};
}

HopfElement harpoon_right(const HopfPresentation& h, const HopfElement& a, const Functional& beta) {
  if (beta.coords.size() != h.dim() || a.coords.size() != h.dim()) {
    throw Error(Errc::DimensionMismatch, "harpoon operands");
  }
  const Mat d = h.comultiply(a.coords);
  return HopfElement{d.transpose() * beta.coords};
}

Mat delta_op(const HopfPresentation& h, const HopfElement& a) {
  return h.comultiply(a.coords).transpose();
}

Mat antipode_power(const HopfPresentation& h, long t) { return mat_pow(h.antipode(), t); }

HopfElement apply_S_power(const HopfPresentation& h, long t, const HopfElement& a) {
  return HopfElement{antipode_power(h, t) * a.coords};
}

bool is_grouplike(const HopfPresentation& h, const HopfElement& a) {
  if (is_zero(a.coords)) return false;
  const Mat d = h.comultiply(a.coords);
  for (std::size_t j = 0; j < h.dim(); ++j) {
    for (std::size_t k = 0; k < h.dim(); ++k) {
      if (d(j, k) != a.coords[j] * a.coords[k]) return false;
    }
  }
  return true;
}

Functional convolve(const HopfPresentation& h, const Functional& beta, const Functional& gamma) {
  Functional out{zero_vec(h.dim(), h.order())};
  for (const auto& e : h.comult()) {
    out.coords[e.i].add_product(e.value, beta.coords[e.j] * gamma.coords[e.k]);
  }
  return out;
}

Functional compose_with_antipode(const HopfPresentation& h, const Functional& beta) {
  return Functional{h.antipode().transpose() * beta.coords};
}

}  // namespace hopf_forge
