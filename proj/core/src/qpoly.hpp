#pragma once

// Dense univariate polynomials over Q, lowest coefficient first. Internal.

#include <utility>
#include <vector>

#include "hopf_forge/cyclofield.hpp"

namespace hopf_forge::qpoly {

using Poly = std::vector<Rational>;

inline void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

inline Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

inline Poly sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

/// Quotient and remainder; b must be nonzero after trimming.
inline std::pair<Poly, Poly> divmod(Poly a, Poly b) {
  trim(a);
  trim(b);
  if (a.size() < b.size()) return {{}, a};
  Poly q(a.size() - b.size() + 1, Rational(0));
  const Rational lead = b.back();
  for (int i = degree(a); i >= degree(b); --i) {
    if (a[i] == 0) continue;
    Rational c = a[i] / lead;
    q[i - degree(b)] = c;
    for (int j = 0; j <= degree(b); ++j) a[i - degree(b) + j] -= c * b[j];
  }
  trim(q);
  a.resize(b.size() - 1);
  trim(a);
  return {q, a};
}

inline Poly monic(Poly p) {
  trim(p);
  if (p.empty()) return p;
  Rational lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

inline Poly gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

inline Rational eval(const Poly& p, const Rational& x) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace hopf_forge::qpoly
