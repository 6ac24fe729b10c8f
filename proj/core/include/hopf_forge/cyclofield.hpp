#pragma once

// Exact arithmetic in Q(zeta_N), represented in the power basis
// 1, z, ..., z^(phi(N)-1) modulo the N-th cyclotomic polynomial.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hopf_forge {

using Integer = mpz_class;
using Rational = mpq_class;

/// Largest cyclotomic order accepted anywhere in the library.
inline constexpr int kMaxCyclotomicOrder = 1000;

int euler_phi(int n);

/// Coefficients of Phi_n, lowest degree first. Throws BoundExceeded
/// outside 1 <= n <= kMaxCyclotomicOrder.
std::vector<Rational> cyclotomic_poly(int n);

/// Interned per-order context: the modulus and the power-basis images of
/// every power of zeta_N. Instances live for the whole program.
class CyclotomicField {
 public:
  static const CyclotomicField& get(int order);

  int order() const noexcept { return order_; }
  int degree() const noexcept { return degree_; }
  /// Integer coefficients of Phi_N, lowest first (monic, length degree+1).
  const std::vector<Integer>& modulus() const noexcept { return modulus_; }
  /// Power-basis coordinates of zeta_N^k for 0 <= k < N.
  const std::vector<Integer>& power(int k) const { return powers_[k]; }
  /// All-zero coordinate vector of length degree.
  const std::vector<Integer>& zeros() const noexcept { return zeros_; }

  CyclotomicField(const CyclotomicField&) = delete;
  CyclotomicField& operator=(const CyclotomicField&) = delete;

 private:
  explicit CyclotomicField(int order);

  int order_;
  int degree_;
  std::vector<Integer> modulus_;
  std::vector<std::vector<Integer>> powers_;
  std::vector<Integer> zeros_;
};

class CycNumber {
 public:
  /// Zero of Q (order 1).
  CycNumber();
  /// Zero of Q(zeta_N).
  explicit CycNumber(int order);
  CycNumber(int order, const Rational& value);
  CycNumber(int order, long value) : CycNumber(order, Rational(value)) {}

  static CycNumber zero(int order) { return CycNumber(order); }
  static CycNumber one(int order) { return CycNumber(order, 1L); }
  /// coeffs must have length phi(order).
  static CycNumber from_coeffs(int order, const std::vector<Rational>& coeffs);
  /// (sum num[t] z^t) / den, den nonzero.
  static CycNumber from_integers(int order, std::vector<Integer> num, Integer den);

  int order() const noexcept { return field_->order(); }
  int degree() const noexcept { return field_->degree(); }
  const CyclotomicField& field() const noexcept { return *field_; }

  /// Canonical numerator vector; gcd(num..., den) = 1 and den > 0.
  const std::vector<Integer>& numerators() const noexcept {
    return num_.empty() ? field_->zeros() : num_;
  }
  const Integer& denominator() const noexcept { return den_; }
  std::vector<Rational> coeffs() const;

  bool is_zero() const noexcept;
  bool is_one() const noexcept;
  bool is_rational() const noexcept;
  std::optional<Rational> to_rational() const;

  CycNumber operator-() const;
  CycNumber& operator+=(const CycNumber& rhs);
  CycNumber& operator-=(const CycNumber& rhs);
  CycNumber& operator*=(const CycNumber& rhs);
  CycNumber& operator/=(const CycNumber& rhs);

  friend CycNumber operator+(CycNumber lhs, const CycNumber& rhs) { return lhs += rhs; }
  friend CycNumber operator-(CycNumber lhs, const CycNumber& rhs) { return lhs -= rhs; }
  friend CycNumber operator*(const CycNumber& lhs, const CycNumber& rhs);
  friend CycNumber operator/(CycNumber lhs, const CycNumber& rhs) { return lhs /= rhs; }
  friend bool operator==(const CycNumber& lhs, const CycNumber& rhs);

  /// lhs += a * b without a temporary result object.
  void add_product(const CycNumber& a, const CycNumber& b);

  /// Human-readable form in the power basis, e.g. "(1 - 2*z^3)/5".
  std::string to_string() const;

 private:
  void normalize();
  void check_same_order(const CycNumber& rhs) const;

  const CyclotomicField* field_;
  std::vector<Integer> num_;  // empty for zero, otherwise length degree
  Integer den_;
};

enum class ArithKind { Add, Sub, Mul };

/// Field operation with an explicit order check (OrderMismatch).
CycNumber cyc_arith(const CycNumber& lhs, const CycNumber& rhs, ArithKind kind);

/// Multiplicative inverse via the extended Euclidean algorithm against
/// Phi_N. Throws DivisionByZero for 0.
CycNumber cyc_invert(const CycNumber& a);

/// zeta_N^(k mod N).
CycNumber root_of_unity(int order, long k);

/// zeta_m^k as an element of Q(zeta_N), if it lies there (m | N, or N odd
/// and m | 2N). Returns nullopt otherwise.
std::optional<CycNumber> root_of_unity_in(int order, int m, long k);

/// Image of a under the embedding Q(zeta_N) -> Q(zeta_M), zeta_N -> zeta_M^(M/N).
/// Throws OrderMismatch unless N divides M.
CycNumber lift(const CycNumber& a, int order);

}  // namespace hopf_forge
