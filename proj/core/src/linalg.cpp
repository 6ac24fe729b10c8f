#include "hopf_forge/linalg.hpp"

#include <sstream>

#include "hopf_forge/errors.hpp"

namespace hopf_forge {

namespace {

void require_square(const Mat& m, const char* op) {
  if (!m.is_square()) {
    throw Error(Errc::NotSquare, std::string(op) + " needs a square matrix, got " +
                                     std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

void require_order(int a, int b) {
  if (a != b) {
    throw Error(Errc::OrderMismatch,
                "orders " + std::to_string(a) + " and " + std::to_string(b));
  }
}

}  // namespace

Mat::Mat(std::size_t rows, std::size_t cols, int order)
    : rows_(rows), cols_(cols), order_(order), entries_(rows * cols, CycNumber(order)) {}

Mat Mat::identity(std::size_t n, int order) {
  Mat m(n, n, order);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = CycNumber::one(order);
  return m;
}

Mat Mat::diagonal(const Vec& diag) {
  const int order = diag.empty() ? 1 : diag.front().order();
  Mat m(diag.size(), diag.size(), order);
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows, std::size_t cols, int order) {
  Mat m(rows.size(), cols, order);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(Errc::DimensionMismatch, "ragged row");
    for (std::size_t c = 0; c < cols; ++c) {
      require_order(rows[r][c].order(), order);
      m(r, c) = rows[r][c];
    }
  }
  return m;
}

Mat Mat::from_columns(const std::vector<Vec>& cols, std::size_t rows, int order) {
  return from_rows(cols, rows, order).transpose();
}

Vec Mat::row(std::size_t r) const {
  return Vec(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
             entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vec Mat::column(std::size_t c) const {
  Vec out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
  return out;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_, order_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

bool Mat::is_zero() const noexcept {
  for (const auto& e : entries_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

Mat& Mat::operator+=(const Mat& rhs) {
  require_order(order_, rhs.order_);
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw Error(Errc::DimensionMismatch, "matrix +");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += rhs.entries_[i];
  return *this;
}

Mat& Mat::operator-=(const Mat& rhs) {
  require_order(order_, rhs.order_);
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw Error(Errc::DimensionMismatch, "matrix -");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= rhs.entries_[i];
  return *this;
}

Mat operator*(const Mat& lhs, const Mat& rhs) {
  require_order(lhs.order_, rhs.order_);
  if (lhs.cols_ != rhs.rows_) throw Error(Errc::DimensionMismatch, "matrix product");
  Mat out(lhs.rows_, rhs.cols_, lhs.order_);
  // i-k-j order so zero entries of lhs skip a whole row update.
  for (std::size_t i = 0; i < lhs.rows_; ++i) {
    for (std::size_t k = 0; k < lhs.cols_; ++k) {
      const CycNumber& a = lhs(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        const CycNumber& b = rhs(k, j);
        if (b.is_zero()) continue;
        out(i, j).add_product(a, b);
      }
    }
  }
  return out;
}

Mat operator*(const CycNumber& s, const Mat& m) {
  require_order(s.order(), m.order_);
  Mat out = m;
  for (auto& e : out.entries_) {
    if (!e.is_zero()) e = s * e;
  }
  return out;
}

Vec operator*(const Mat& m, const Vec& v) {
  if (m.cols_ != v.size()) throw Error(Errc::DimensionMismatch, "matrix-vector product");
  Vec out = zero_vec(m.rows_, m.order_);
  for (std::size_t c = 0; c < m.cols_; ++c) {
    if (v[c].is_zero()) continue;
    require_order(v[c].order(), m.order_);
    for (std::size_t r = 0; r < m.rows_; ++r) {
      const CycNumber& a = m(r, c);
      if (!a.is_zero()) out[r].add_product(a, v[c]);
    }
  }
  return out;
}

bool operator==(const Mat& lhs, const Mat& rhs) {
  return lhs.rows_ == rhs.rows_ && lhs.cols_ == rhs.cols_ && lhs.order_ == rhs.order_ &&
         lhs.entries_ == rhs.entries_;
}

std::string Mat::to_string() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    out << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) out << ", ";
      out << (*this)(r, c).to_string();
    }
    out << "]";
  }
  out << "]";
  return out.str();
}

Vec zero_vec(std::size_t n, int order) { return Vec(n, CycNumber(order)); }

Vec unit_vec(std::size_t n, std::size_t i, int order) {
  Vec v = zero_vec(n, order);
  v[i] = CycNumber::one(order);
  return v;
}

bool is_zero(const Vec& v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

CycNumber dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw Error(Errc::DimensionMismatch, "dot product");
  CycNumber acc = a.empty() ? CycNumber() : CycNumber(a.front().order());
  for (std::size_t i = 0; i < a.size(); ++i) acc.add_product(a[i], b[i]);
  return acc;
}

RrefResult rref(const Mat& m) {
  Mat a = m;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < a.rows() && a(pivot, col).is_zero()) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != row) {
      for (std::size_t c = col; c < a.cols(); ++c) std::swap(a(pivot, c), a(row, c));
    }
    const CycNumber inv = cyc_invert(a(row, col));
    for (std::size_t c = col; c < a.cols(); ++c) {
      if (!a(row, c).is_zero()) a(row, c) = a(row, c) * inv;
    }
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col).is_zero()) continue;
      const CycNumber factor = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c) {
        if (a(row, c).is_zero()) continue;
        a(r, c) -= factor * a(row, c);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(a), pivots.size(), std::move(pivots)};
}

std::size_t rank(const Mat& m) { return rref(m).rank; }

Subspace::Subspace(std::size_t ambient_dim, int order) : basis_(0, ambient_dim, order) {}

Subspace Subspace::span_of_rows(const Mat& spanning) {
  auto r = rref(spanning);
  Mat basis(r.rank, spanning.cols(), spanning.order());
  for (std::size_t i = 0; i < r.rank; ++i) {
    for (std::size_t c = 0; c < spanning.cols(); ++c) basis(i, c) = r.reduced(i, c);
  }
  return Subspace(std::move(basis));
}

Subspace Subspace::span_of_vectors(const std::vector<Vec>& vectors, std::size_t ambient_dim,
                                   int order) {
  return span_of_rows(Mat::from_rows(vectors, ambient_dim, order));
}

std::vector<Vec> Subspace::vectors() const {
  std::vector<Vec> out;
  out.reserve(dim());
  for (std::size_t r = 0; r < dim(); ++r) out.push_back(basis_.row(r));
  return out;
}

bool Subspace::contains(const Vec& v) const {
  auto rows = vectors();
  rows.push_back(v);
  return rank(Mat::from_rows(rows, ambient_dim(), basis_.order())) == dim();
}

Subspace null_space(const Mat& m) {
  auto r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : r.pivot_columns) is_pivot[p] = true;
  std::vector<Vec> kernel;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v = unit_vec(m.cols(), free, m.order());
    for (std::size_t i = 0; i < r.rank; ++i) v[r.pivot_columns[i]] = -r.reduced(i, free);
    kernel.push_back(std::move(v));
  }
  return Subspace::span_of_vectors(kernel, m.cols(), m.order());
}

Subspace eigenspace(const Mat& m, const CycNumber& eigenvalue) {
  require_square(m, "eigenspace");
  Mat shifted = m;
  for (std::size_t i = 0; i < m.rows(); ++i) shifted(i, i) -= eigenvalue;
  return null_space(shifted);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw Error(Errc::DimensionMismatch, "intersect");
  const std::size_t n = a.ambient_dim();
  const int order = a.basis().order();
  if (a.dim() == 0 || b.dim() == 0) return Subspace(n, order);
  // Solve sum_i s_i a_i - sum_j t_j b_j = 0 for coefficients (s, t).
  Mat system(n, a.dim() + b.dim(), order);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t c = 0; c < n; ++c) system(c, i) = a.basis()(i, c);
  }
  for (std::size_t j = 0; j < b.dim(); ++j) {
    for (std::size_t c = 0; c < n; ++c) system(c, a.dim() + j) = -b.basis()(j, c);
  }
  std::vector<Vec> common;
  for (const auto& coeff : null_space(system).vectors()) {
    Vec v = zero_vec(n, order);
    for (std::size_t i = 0; i < a.dim(); ++i) {
      if (coeff[i].is_zero()) continue;
      for (std::size_t c = 0; c < n; ++c) v[c].add_product(coeff[i], a.basis()(i, c));
    }
    common.push_back(std::move(v));
  }
  return Subspace::span_of_vectors(common, n, order);
}

CycNumber mat_trace(const Mat& m) {
  require_square(m, "trace");
  CycNumber acc(m.order());
  for (std::size_t i = 0; i < m.rows(); ++i) acc += m(i, i);
  return acc;
}

Mat inverse(const Mat& m) {
  require_square(m, "inverse");
  const std::size_t n = m.rows();
  Mat augmented(n, 2 * n, m.order());
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) augmented(r, c) = m(r, c);
    augmented(r, n + r) = CycNumber::one(m.order());
  }
  auto red = rref(augmented);
  if (red.rank < n || red.pivot_columns[n - 1] != n - 1) {
    throw Error(Errc::NotInvertible, "singular matrix");
  }
  Mat inv(n, n, m.order());
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = red.reduced(r, n + c);
  }
  return inv;
}

Mat mat_pow(const Mat& m, long exponent) {
  require_square(m, "power");
  Mat base = exponent < 0 ? inverse(m) : m;
  unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent)
                                 : static_cast<unsigned long>(exponent);
  Mat result = Mat::identity(m.rows(), m.order());
  while (e > 0) {
    if (e & 1UL) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

long operator_order(const Mat& m, long bound) {
  require_square(m, "operator order");
  if (rank(m) < m.rows()) throw Error(Errc::NotInvertible, "operator order of singular matrix");
  const Mat id = Mat::identity(m.rows(), m.order());
  Mat power = m;
  for (long t = 1; t <= bound; ++t) {
    if (power == id) return t;
    power = power * m;
  }
  throw Error(Errc::OrderExceedsBound, "no t <= " + std::to_string(bound) + " with m^t = I");
}

Mat kronecker(const Mat& a, const Mat& b) {
  require_order(a.order(), b.order());
  Mat out(a.rows() * b.rows(), a.cols() * b.cols(), a.order());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const CycNumber& s = a(i, j);
      if (s.is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          if (b(k, l).is_zero()) continue;
          out(i * b.rows() + k, j * b.cols() + l) = s * b(k, l);
        }
      }
    }
  }
  return out;
}

Vec characteristic_polynomial(const Mat& m) {
  require_square(m, "characteristic polynomial");
  const std::size_t n = m.rows();
  const int order = m.order();
  Mat h = m;
  // Similarity reduction to upper Hessenberg form.
  for (std::size_t col = 0; col + 2 < n; ++col) {
    std::size_t pivot = col + 1;
    while (pivot < n && h(pivot, col).is_zero()) ++pivot;
    if (pivot == n) continue;
    if (pivot != col + 1) {
      for (std::size_t c = 0; c < n; ++c) std::swap(h(pivot, c), h(col + 1, c));
      for (std::size_t r = 0; r < n; ++r) std::swap(h(r, pivot), h(r, col + 1));
    }
    const CycNumber inv = cyc_invert(h(col + 1, col));
    for (std::size_t r = col + 2; r < n; ++r) {
      if (h(r, col).is_zero()) continue;
      const CycNumber t = h(r, col) * inv;
      for (std::size_t c = 0; c < n; ++c) {
        if (!h(col + 1, c).is_zero()) h(r, c) -= t * h(col + 1, c);
      }
      for (std::size_t rr = 0; rr < n; ++rr) {
        if (!h(rr, r).is_zero()) h(rr, col + 1) += t * h(rr, r);
      }
    }
  }
  // p_{k+1} = (x - h_kk) p_k - sum_{i<k} h_ik (prod_{j=i+1..k} h_{j,j-1}) p_i
  std::vector<Vec> p;
  p.push_back(Vec{CycNumber::one(order)});
  for (std::size_t k = 0; k < n; ++k) {
    Vec next = zero_vec(k + 2, order);
    for (std::size_t t = 0; t <= k; ++t) {
      next[t + 1] += p[k][t];
      next[t].add_product(-h(k, k), p[k][t]);
    }
    CycNumber sub = CycNumber::one(order);
    for (std::size_t i = k; i-- > 0;) {
      sub *= h(i + 1, i);
      if (sub.is_zero()) break;
      const CycNumber coeff = h(i, k) * sub;
      if (coeff.is_zero()) continue;
      for (std::size_t t = 0; t < p[i].size(); ++t) next[t].add_product(-coeff, p[i][t]);
    }
    p.push_back(std::move(next));
  }
  return p[n];
}

bool solve(const Mat& m, const Vec& rhs, Vec& solution) {
  if (rhs.size() != m.rows()) throw Error(Errc::DimensionMismatch, "solve");
  Mat augmented(m.rows(), m.cols() + 1, m.order());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) augmented(r, c) = m(r, c);
    augmented(r, m.cols()) = rhs[r];
  }
  auto red = rref(augmented);
  if (!red.pivot_columns.empty() && red.pivot_columns.back() == m.cols()) return false;
  solution = zero_vec(m.cols(), m.order());
  for (std::size_t i = 0; i < red.rank; ++i) {
    solution[red.pivot_columns[i]] = red.reduced(i, m.cols());
  }
  return true;
}

}  // namespace hopf_forge
