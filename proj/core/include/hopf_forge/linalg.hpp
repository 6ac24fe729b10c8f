#pragma once

// Dense exact linear algebra over Q(zeta_N).

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "hopf_forge/cyclofield.hpp"

namespace hopf_forge {

using Vec = std::vector<CycNumber>;

class Mat {
 public:
  Mat() : Mat(0, 0, 1) {}
  Mat(std::size_t rows, std::size_t cols, int order);

  static Mat identity(std::size_t n, int order);
  static Mat diagonal(const Vec& diag);
  /// Rows given as coordinate vectors; all must share a length and order.
  static Mat from_rows(const std::vector<Vec>& rows, std::size_t cols, int order);
  static Mat from_columns(const std::vector<Vec>& cols, std::size_t rows, int order);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  int order() const noexcept { return order_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  CycNumber& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const CycNumber& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  /// Row-major storage; for a dim x dim matrix viewed as an element of
  /// H (x) H, entry (j, k) sits at index j * dim + k.
  std::span<const CycNumber> entries() const noexcept { return entries_; }

  Vec row(std::size_t r) const;
  Vec column(std::size_t c) const;
  Mat transpose() const;
  bool is_zero() const noexcept;

  Mat& operator+=(const Mat& rhs);
  Mat& operator-=(const Mat& rhs);
  friend Mat operator+(Mat lhs, const Mat& rhs) { return lhs += rhs; }
  friend Mat operator-(Mat lhs, const Mat& rhs) { return lhs -= rhs; }
  friend Mat operator*(const Mat& lhs, const Mat& rhs);
  friend Mat operator*(const CycNumber& s, const Mat& m);
  friend Vec operator*(const Mat& m, const Vec& v);
  friend bool operator==(const Mat& lhs, const Mat& rhs);

  std::string to_string() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  int order_;
  std::vector<CycNumber> entries_;
};

/// Row space of a coordinate matrix kept in reduced row-echelon form, so
/// that two subspaces are equal exactly when their bases are equal.
class Subspace {
 public:
  Subspace(std::size_t ambient_dim, int order);
  /// Canonicalizes the span of the rows of `spanning`.
  static Subspace span_of_rows(const Mat& spanning);
  static Subspace span_of_vectors(const std::vector<Vec>& vectors, std::size_t ambient_dim,
                                  int order);

  std::size_t ambient_dim() const noexcept { return basis_.cols(); }
  std::size_t dim() const noexcept { return basis_.rows(); }
  const Mat& basis() const noexcept { return basis_; }
  std::vector<Vec> vectors() const;
  bool contains(const Vec& v) const;

  friend bool operator==(const Subspace& lhs, const Subspace& rhs) {
    return lhs.basis_ == rhs.basis_;
  }

 private:
  explicit Subspace(Mat basis) : basis_(std::move(basis)) {}
  Mat basis_;
};

struct RrefResult {
  Mat reduced;
  std::size_t rank;
  std::vector<std::size_t> pivot_columns;
};

RrefResult rref(const Mat& m);
std::size_t rank(const Mat& m);
Subspace null_space(const Mat& m);
Subspace eigenspace(const Mat& m, const CycNumber& eigenvalue);
Subspace intersect(const Subspace& a, const Subspace& b);
CycNumber mat_trace(const Mat& m);
Mat mat_pow(const Mat& m, long exponent);
/// Throws NotInvertible for singular input.
Mat inverse(const Mat& m);
/// Least t >= 1 with m^t = I. Throws NotInvertible or OrderExceedsBound.
long operator_order(const Mat& m, long bound);
/// Index convention (i (x) j) -> i * b.cols() + j on both axes.
Mat kronecker(const Mat& a, const Mat& b);
/// Coefficients of det(x I - m), lowest first, via Hessenberg reduction.
Vec characteristic_polynomial(const Mat& m);
/// Solves m x = rhs; returns false when inconsistent.
bool solve(const Mat& m, const Vec& rhs, Vec& solution);

Vec zero_vec(std::size_t n, int order);
Vec unit_vec(std::size_t n, std::size_t i, int order);
bool is_zero(const Vec& v);
CycNumber dot(const Vec& a, const Vec& b);

}  // namespace hopf_forge
