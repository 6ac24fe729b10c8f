#include "hopf_forge/cyclofield.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

#include "hopf_forge/errors.hpp"
#include "modular_inverse.hpp"
#include "qpoly.hpp"

namespace hopf_forge {

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<Rational> cyclotomic_poly(int n) {
  if (n < 1 || n > kMaxCyclotomicOrder) {
    throw Error(Errc::BoundExceeded,
                "cyclotomic order " + std::to_string(n) + " outside [1, " +
                    std::to_string(kMaxCyclotomicOrder) + "]");
  }
  // x^n - 1 divided by Phi_d for every proper divisor d.
  qpoly::Poly p(n + 1, Rational(0));
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    p = qpoly::divmod(p, cyclotomic_poly(d)).first;
  }
  return p;
}

namespace {

std::vector<Integer> reduce_power(int k, const std::vector<Integer>& modulus, int degree) {
  // z^k mod Phi_N by repeated multiplication by z.
  std::vector<Integer> v(degree, Integer(0));
  if (degree == 0) return v;
  v[0] = 1;
  for (int step = 0; step < k; ++step) {
    Integer top = v[degree - 1];
    for (int t = degree - 1; t > 0; --t) v[t] = v[t - 1];
    v[0] = 0;
    if (top != 0) {
      for (int t = 0; t < degree; ++t) v[t] -= top * modulus[t];
    }
  }
  return v;
}

}  // namespace

CyclotomicField::CyclotomicField(int order) : order_(order), degree_(euler_phi(order)) {
  for (const auto& c : cyclotomic_poly(order)) modulus_.push_back(c.get_num());
  powers_.reserve(order);
  for (int k = 0; k < order; ++k) powers_.push_back(reduce_power(k, modulus_, degree_));
  zeros_.assign(degree_, Integer(0));
}

const CyclotomicField& CyclotomicField::get(int order) {
  if (order < 1 || order > kMaxCyclotomicOrder) {
    throw Error(Errc::BoundExceeded, "cyclotomic order " + std::to_string(order));
  }
  static std::array<std::atomic<const CyclotomicField*>, kMaxCyclotomicOrder + 1> slots{};
  static std::mutex mutex;
  static std::vector<std::unique_ptr<CyclotomicField>> owned;
  if (const auto* hit = slots[order].load(std::memory_order_acquire)) return *hit;
  std::lock_guard lock(mutex);
  if (const auto* hit = slots[order].load(std::memory_order_acquire)) return *hit;
  owned.push_back(std::unique_ptr<CyclotomicField>(new CyclotomicField(order)));
  slots[order].store(owned.back().get(), std::memory_order_release);
  return *owned.back();
}

CycNumber::CycNumber() : CycNumber(1) {}

CycNumber::CycNumber(int order)
    : field_(&CyclotomicField::get(order)), den_(1) {}

CycNumber::CycNumber(int order, const Rational& value) : CycNumber(order) {
  if (value == 0) return;
  num_.assign(degree(), Integer(0));
  num_[0] = value.get_num();
  den_ = value.get_den();
}

CycNumber CycNumber::from_coeffs(int order, const std::vector<Rational>& coeffs) {
  CycNumber out(order);
  if (static_cast<int>(coeffs.size()) != out.degree()) {
    throw Error(Errc::DimensionMismatch, "expected " + std::to_string(out.degree()) +
                                             " coefficients for order " + std::to_string(order));
  }
  Integer den = 1;
  for (const auto& c : coeffs) den = lcm(den, Integer(c.get_den()));
  out.num_.assign(coeffs.size(), Integer(0));
  for (std::size_t t = 0; t < coeffs.size(); ++t) {
    out.num_[t] = coeffs[t].get_num() * (den / coeffs[t].get_den());
  }
  out.den_ = den;
  out.normalize();
  return out;
}

CycNumber CycNumber::from_integers(int order, std::vector<Integer> num, Integer den) {
  CycNumber out(order);
  if (static_cast<int>(num.size()) != out.degree()) {
    throw Error(Errc::DimensionMismatch, "expected " + std::to_string(out.degree()) +
                                             " coefficients for order " + std::to_string(order));
  }
  if (den == 0) throw Error(Errc::DivisionByZero, "zero denominator");
  out.num_ = std::move(num);
  out.den_ = std::move(den);
  out.normalize();
  return out;
}

std::vector<Rational> CycNumber::coeffs() const {
  if (num_.empty()) return std::vector<Rational>(degree(), Rational(0));
  std::vector<Rational> out;
  out.reserve(num_.size());
  for (const auto& a : num_) {
    Rational q(a, den_);
    q.canonicalize();
    out.push_back(q);
  }
  return out;
}

bool CycNumber::is_zero() const noexcept { return num_.empty(); }

bool CycNumber::is_one() const noexcept {
  if (num_.empty() || den_ != 1 || num_[0] != 1) return false;
  for (std::size_t t = 1; t < num_.size(); ++t) {
    if (num_[t] != 0) return false;
  }
  return true;
}

bool CycNumber::is_rational() const noexcept {
  for (std::size_t t = 1; t < num_.size(); ++t) {
    if (num_[t] != 0) return false;
  }
  return true;
}

std::optional<Rational> CycNumber::to_rational() const {
  if (!is_rational()) return std::nullopt;
  if (num_.empty()) return Rational(0);
  Rational q(num_[0], den_);
  q.canonicalize();
  return q;
}

void CycNumber::normalize() {
  if (den_ < 0) {
    den_ = -den_;
    for (auto& a : num_) a = -a;
  }
  if (std::all_of(num_.begin(), num_.end(), [](const Integer& a) { return a == 0; })) {
    num_.clear();
    den_ = 1;
    return;
  }
  if (den_ == 1) return;
  Integer g = den_;
  for (const auto& a : num_) {
    if (a == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
    if (g == 1) return;
  }
  den_ /= g;
  for (auto& a : num_) mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
}

void CycNumber::check_same_order(const CycNumber& rhs) const {
  if (field_ != rhs.field_) {
    throw Error(Errc::OrderMismatch, "orders " + std::to_string(order()) + " and " +
                                         std::to_string(rhs.order()));
  }
}

CycNumber CycNumber::operator-() const {
  CycNumber out = *this;
  for (auto& a : out.num_) a = -a;
  return out;
}

CycNumber& CycNumber::operator+=(const CycNumber& rhs) {
  check_same_order(rhs);
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  if (den_ == rhs.den_) {
    for (std::size_t t = 0; t < num_.size(); ++t) num_[t] += rhs.num_[t];
  } else {
    for (std::size_t t = 0; t < num_.size(); ++t) {
      num_[t] = num_[t] * rhs.den_ + rhs.num_[t] * den_;
    }
    den_ *= rhs.den_;
  }
  normalize();
  return *this;
}

CycNumber& CycNumber::operator-=(const CycNumber& rhs) {
  check_same_order(rhs);
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = -rhs;
  if (den_ == rhs.den_) {
    for (std::size_t t = 0; t < num_.size(); ++t) num_[t] -= rhs.num_[t];
  } else {
    for (std::size_t t = 0; t < num_.size(); ++t) {
      num_[t] = num_[t] * rhs.den_ - rhs.num_[t] * den_;
    }
    den_ *= rhs.den_;
  }
  normalize();
  return *this;
}

namespace {

// Polynomial product of two numerator vectors reduced modulo Phi_N.
std::vector<Integer> multiply_reduce(const std::vector<Integer>& a, const std::vector<Integer>& b,
                                     const std::vector<Integer>& modulus) {
  const int d = static_cast<int>(a.size());
  std::vector<Integer> prod(2 * d - 1, Integer(0));
  for (int i = 0; i < d; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < d; ++j) {
      if (b[j] == 0) continue;
      mpz_addmul(prod[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  for (int m = 2 * d - 2; m >= d; --m) {
    if (prod[m] == 0) continue;
    for (int t = 0; t < d; ++t) {
      if (modulus[t] == 0) continue;
      mpz_submul(prod[m - d + t].get_mpz_t(), prod[m].get_mpz_t(), modulus[t].get_mpz_t());
    }
  }
  prod.resize(d);
  return prod;
}

}  // namespace

CycNumber operator*(const CycNumber& lhs, const CycNumber& rhs) {
  lhs.check_same_order(rhs);
  CycNumber out(lhs.order());
  if (lhs.is_zero() || rhs.is_zero()) return out;
  out.num_.resize(lhs.num_.size());
  if (rhs.is_rational()) {
    for (std::size_t t = 0; t < out.num_.size(); ++t) out.num_[t] = lhs.num_[t] * rhs.num_[0];
  } else if (lhs.is_rational()) {
    for (std::size_t t = 0; t < out.num_.size(); ++t) out.num_[t] = rhs.num_[t] * lhs.num_[0];
  } else {
    out.num_ = multiply_reduce(lhs.num_, rhs.num_, lhs.field_->modulus());
  }
  out.den_ = lhs.den_ * rhs.den_;
  out.normalize();
  return out;
}

CycNumber& CycNumber::operator*=(const CycNumber& rhs) { return *this = *this * rhs; }

CycNumber& CycNumber::operator/=(const CycNumber& rhs) { return *this = *this * cyc_invert(rhs); }

void CycNumber::add_product(const CycNumber& a, const CycNumber& b) {
  if (a.is_zero() || b.is_zero()) {
    check_same_order(a);
    check_same_order(b);
    return;
  }
  if (is_zero()) {
    *this = a * b;
    return;
  }
  *this += a * b;
}

bool operator==(const CycNumber& lhs, const CycNumber& rhs) {
  return lhs.field_ == rhs.field_ && lhs.den_ == rhs.den_ && lhs.num_ == rhs.num_;
}

std::string CycNumber::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream body;
  int terms = 0;
  for (std::size_t t = 0; t < num_.size(); ++t) {
    const Integer& a = num_[t];
    if (a == 0) continue;
    Integer mag = abs(a);
    if (terms == 0) {
      if (a < 0) body << "-";
    } else {
      body << (a < 0 ? " - " : " + ");
    }
    if (t == 0) {
      body << mag.get_str();
    } else {
      if (mag != 1) body << mag.get_str() << "*";
      body << "z";
      if (t > 1) body << "^" << t;
    }
    ++terms;
  }
  if (den_ == 1) return body.str();
  if (terms == 1) return body.str() + "/" + den_.get_str();
  return "(" + body.str() + ")/" + den_.get_str();
}

CycNumber cyc_arith(const CycNumber& lhs, const CycNumber& rhs, ArithKind kind) {
  switch (kind) {
    case ArithKind::Add: return lhs + rhs;
    case ArithKind::Sub: return lhs - rhs;
    case ArithKind::Mul: return lhs * rhs;
  }
  return lhs;
}

CycNumber cyc_invert(const CycNumber& a) {
  if (a.is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
  if (auto q = a.to_rational()) return CycNumber(a.order(), 1 / *q);
  // a = A / den, so a^{-1} = den * A^{-1} (mod Phi_N).
  auto s = detail::inverse_mod_irreducible(a.numerators(), a.field().modulus());
  for (auto& c : s) c *= a.denominator();
  return CycNumber::from_coeffs(a.order(), s);
}

CycNumber root_of_unity(int order, long k) {
  const auto& field = CyclotomicField::get(order);
  long e = k % order;
  if (e < 0) e += order;
  return CycNumber::from_integers(order, field.power(static_cast<int>(e)), Integer(1));
}

std::optional<CycNumber> root_of_unity_in(int order, int m, long k) {
  if (m < 1) return std::nullopt;
  if (order % m == 0) return root_of_unity(order, k * (order / m));
  if (order % 2 == 1 && (2 * order) % m == 0) {
    // zeta_{2N} = -zeta_N^((N+1)/2) for odd N.
    long j = (k * ((2L * order) / m)) % (2L * order);
    if (j < 0) j += 2L * order;
    CycNumber z = root_of_unity(order, j * ((order + 1) / 2));
    return (j % 2 == 0) ? z : -z;
  }
  return std::nullopt;
}

CycNumber lift(const CycNumber& a, int order) {
  if (order == a.order()) return a;
  if (order % a.order() != 0) {
    throw Error(Errc::OrderMismatch, "cannot embed order " + std::to_string(a.order()) +
                                         " into order " + std::to_string(order));
  }
  const int step = order / a.order();
  const auto& target = CyclotomicField::get(order);
  std::vector<Integer> num(target.degree(), Integer(0));
  for (int t = 0; t < a.degree(); ++t) {
    const Integer& c = a.numerators()[t];
    if (c == 0) continue;
    const auto& image = target.power(t * step);
    for (int s = 0; s < target.degree(); ++s) num[s] += c * image[s];
  }
  return CycNumber::from_integers(order, std::move(num), a.denominator());
}

}  // namespace hopf_forge
