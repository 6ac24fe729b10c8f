#pragma once

// Finite-dimensional Hopf algebras given by structure constants.
//
// Conventions used everywhere in the library:
//   e_i * e_j     = sum_k mult(i, j, k) e_k
//   Delta(e_i)    = sum_{j,k} comult(i, j, k) e_j (x) e_k
//   antipode(r, c) = coefficient of e_r in S(e_c)   (column c is S(e_c))
// An element of H (x) H is a dim x dim Mat whose (j, k) entry is the
// coefficient of e_j (x) e_k, i.e. the Kronecker index j * dim + k.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hopf_forge/linalg.hpp"

namespace hopf_forge {

struct StructureEntry {
  std::size_t i;
  std::size_t j;
  std::size_t k;
  CycNumber value;
};

struct HopfElement {
  Vec coords;
};

struct Functional {
  Vec coords;

  CycNumber operator()(const Vec& a) const { return dot(coords, a); }
  CycNumber operator()(const HopfElement& a) const { return dot(coords, a.coords); }
};

class HopfPresentation {
 public:
  /// Duplicate (i, j, k) entries are summed and zero entries dropped.
  /// Throws MalformedTensor on out-of-range indices or wrong vector lengths,
  /// OrderMismatch when a scalar lives in a different cyclotomic field.
  HopfPresentation(std::string name, int order, std::vector<std::string> basis,
                   std::vector<StructureEntry> mult, std::vector<StructureEntry> comult, Vec unit,
                   Vec counit, std::optional<Mat> antipode);

  const std::string& name() const noexcept { return name_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  int order() const noexcept { return order_; }
  const std::vector<std::string>& basis() const noexcept { return basis_; }
  /// Sorted by (i, j, k), no zero values.
  const std::vector<StructureEntry>& mult() const noexcept { return mult_; }
  const std::vector<StructureEntry>& comult() const noexcept { return comult_; }
  const Vec& unit() const noexcept { return unit_; }
  const Vec& counit() const noexcept { return counit_; }
  bool has_antipode() const noexcept { return antipode_.has_value(); }
  /// Throws NoAntipode when absent.
  const Mat& antipode() const;

  HopfPresentation with_antipode(Mat antipode) const;
  HopfPresentation renamed(std::string name) const;

  Vec basis_vector(std::size_t i) const { return unit_vec(dim(), i, order_); }
  Vec multiply(const Vec& a, const Vec& b) const;
  /// Delta(a) as a dim x dim matrix.
  Mat comultiply(const Vec& a) const;
  CycNumber counit_of(const Vec& a) const { return dot(counit_, a); }
  /// Matrix of u -> a u.
  Mat left_mult_matrix(const Vec& a) const;
  /// Matrix of u -> u a, written r(a).
  Mat right_mult_matrix(const Vec& a) const;
  /// Product in the algebra H (x) H.
  Mat tensor_multiply(const Mat& x, const Mat& y) const;

  friend bool operator==(const HopfPresentation& lhs, const HopfPresentation& rhs);

 private:
  struct Term {
    std::size_t k;
    CycNumber value;
  };
  struct CoTerm {
    std::size_t j;
    std::size_t k;
    CycNumber value;
  };

  std::string name_;
  int order_;
  std::vector<std::string> basis_;
  std::vector<StructureEntry> mult_;
  std::vector<StructureEntry> comult_;
  Vec unit_;
  Vec counit_;
  std::optional<Mat> antipode_;
  std::vector<std::vector<Term>> products_;     // index i * dim + j
  std::vector<std::vector<CoTerm>> coproducts_; // index i
};

enum class CheckStatus { Pass, Fail, Skipped };

struct CheckResult {
  std::string name;
  CheckStatus status;
  std::string detail;
};

struct Checklist {
  std::vector<CheckResult> results;

  bool all_passed() const;
  const CheckResult* find(const std::string& name) const;
  std::vector<std::string> failures() const;
};

/// Exact verification of the bialgebra axioms and, when present, the
/// antipode axiom. Entry names: associativity, unit, coassociativity,
/// counit, comultiplication-multiplicative, counit-multiplicative, antipode.
Checklist check_axioms(const HopfPresentation& h);

/// The antipode of a Hopf algebra given without one. Built from a left
/// integral L of H and a right integral l of H* via
/// S^{-1}(a) = sum l(a L_1) L_2, then verified against both antipode
/// identities. Throws NoAntipode when any step fails, which happens
/// exactly when the bialgebra is not Hopf.
Mat compute_antipode(const HopfPresentation& h);

/// Same antipode obtained by solving the dim^2 linear system
/// sum S(x_1) x_2 = eps(x) 1 directly. Quadratic memory in dim^2; meant
/// for small inputs and for cross-checking compute_antipode.
Mat antipode_by_linear_system(const HopfPresentation& h);

/// Structure constants transposed: mult <-> comult, unit <-> counit, S -> S^T.
HopfPresentation dual(const HopfPresentation& h);

/// Re-expresses every scalar in Q(zeta_M); M must be a multiple of the order.
HopfPresentation lift_order(const HopfPresentation& h, int order);

/// beta -> a = sum a_1 beta(a_2)
HopfElement harpoon_left(const HopfPresentation& h, const Functional& beta, const HopfElement& a);
/// a <- beta = sum beta(a_1) a_2
HopfElement harpoon_right(const HopfPresentation& h, const HopfElement& a, const Functional& beta);

/// Delta^op(a): Delta(a) with the tensor legs swapped.
Mat delta_op(const HopfPresentation& h, const HopfElement& a);

/// Matrix of S^t; negative t uses the inverse (NotInvertible if singular).
Mat antipode_power(const HopfPresentation& h, long t);
HopfElement apply_S_power(const HopfPresentation& h, long t, const HopfElement& a);

bool is_grouplike(const HopfPresentation& h, const HopfElement& a);

/// Every grouplike element with coordinates in Q(zeta_N), sorted by
/// coordinates. Throws EigenvalueNotInField when a coordinate operator has
/// an eigenvalue outside the candidate set {0} u {r zeta_N^t : r rational}.
std::vector<HopfElement> find_grouplikes(const HopfPresentation& h);

/// Convolution in H*: (beta gamma)(a) = sum beta(a_1) gamma(a_2).
Functional convolve(const HopfPresentation& h, const Functional& beta, const Functional& gamma);
/// beta o S
Functional compose_with_antipode(const HopfPresentation& h, const Functional& beta);

}  // namespace hopf_forge
