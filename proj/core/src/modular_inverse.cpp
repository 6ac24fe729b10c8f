#include "modular_inverse.hpp"

#include <cstdint>
#include <mutex>

#include "hopf_forge/errors.hpp"

namespace hopf_forge::detail {

namespace {

using u64 = std::uint64_t;
__extension__ using u128 = unsigned __int128;
using ModPoly = std::vector<u64>;
static_assert(sizeof(unsigned long) == sizeof(u64), "GMP ui calls need 64-bit unsigned long");

u64 mul_mod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }
u64 sub_mod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + (p - b); }

u64 pow_mod(u64 base, u64 e, u64 p) {
  u64 out = 1;
  while (e > 0) {
    if (e & 1) out = mul_mod(out, base, p);
    base = mul_mod(base, base, p);
    e >>= 1;
  }
  return out;
}

u64 inv_mod(u64 a, u64 p) { return pow_mod(a, p - 2, p); }

void trim(ModPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

/// Primes just above 2^62, generated on demand and shared between calls.
u64 nth_prime(std::size_t index) {
  static std::mutex mutex;
  static std::vector<u64> primes;
  std::lock_guard lock(mutex);
  while (primes.size() <= index) {
    const Integer start = primes.empty() ? Integer(1) << 62 : Integer(primes.back());
    Integer next;
    mpz_nextprime(next.get_mpz_t(), start.get_mpz_t());
    primes.push_back(next.get_ui());
  }
  return primes[index];
}

ModPoly reduce(const std::vector<Integer>& f, u64 p) {
  ModPoly out(f.size());
  for (std::size_t t = 0; t < f.size(); ++t) out[t] = mpz_fdiv_ui(f[t].get_mpz_t(), p);
  trim(out);
  return out;
}

/// s with s * a = 1 (mod m, p), or empty when a and m share a factor mod p.
ModPoly inverse_mod_p(ModPoly a, ModPoly m, u64 p) {
  ModPoly s0, s1{1};
  while (a.size() > 1) {
    // m <- m mod a, tracking the quotient into s0 <- s0 - q s1.
    const u64 lead_inv = inv_mod(a.back(), p);
    const std::size_t da = a.size() - 1;
    while (m.size() >= a.size()) {
      const std::size_t shift = m.size() - a.size();
      const u64 c = mul_mod(m.back(), lead_inv, p);
      for (std::size_t t = 0; t <= da; ++t) m[shift + t] = sub_mod(m[shift + t], mul_mod(c, a[t], p), p);
      if (s0.size() < s1.size() + shift) s0.resize(s1.size() + shift, 0);
      for (std::size_t t = 0; t < s1.size(); ++t) s0[shift + t] = sub_mod(s0[shift + t], mul_mod(c, s1[t], p), p);
      trim(m);
    }
    trim(s0);
    if (m.empty()) return {};
    std::swap(a, m);
    std::swap(s0, s1);
  }
  if (a.empty()) return {};
  const u64 scale = inv_mod(a[0], p);
  for (auto& c : s1) c = mul_mod(c, scale, p);
  return s1;
}

/// r / s with |r|, |s| <= sqrt(M / 2) and r = u s (mod M), if one exists.
bool rational_reconstruct(const Integer& u, const Integer& modulus, const Integer& bound,
                          Rational& out) {
  Integer r0 = modulus, r1 = u, t0 = 0, t1 = 1, q, tmp;
  while (r1 > bound) {
    mpz_fdiv_q(q.get_mpz_t(), r0.get_mpz_t(), r1.get_mpz_t());
    tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (t1 == 0 || abs(t1) > bound) return false;
  Integer g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
  if (g != 1) return false;
  out = Rational(r1, t1);
  out.canonicalize();
  return true;
}

/// Reconstructs every residue, reusing the running common denominator so
/// that most coefficients need only a symmetric reduction.
bool reconstruct_all(const std::vector<Integer>& residues, const Integer& modulus,
                     std::vector<Rational>& out) {
  Integer bound;
  mpz_sqrt(bound.get_mpz_t(), Integer(modulus / 2).get_mpz_t());
  Integer common = 1, v;
  out.assign(residues.size(), Rational(0));
  for (std::size_t t = 0; t < residues.size(); ++t) {
    mpz_mul(v.get_mpz_t(), residues[t].get_mpz_t(), common.get_mpz_t());
    mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), modulus.get_mpz_t());
    if (v > modulus / 2) v -= modulus;
    if (abs(v) <= bound) {
      out[t] = Rational(v, common);
      out[t].canonicalize();
      continue;
    }
    if (!rational_reconstruct(residues[t], modulus, bound, out[t])) return false;
    mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), out[t].get_den_mpz_t());
    if (common > bound) return false;
  }
  return true;
}

/// Exact check that a * s = 1 (mod m), done over the integers after
/// clearing the denominators of s.
bool is_inverse(const std::vector<Integer>& a, const std::vector<Integer>& m,
                const std::vector<Rational>& s) {
  const std::size_t n = m.size() - 1;
  Integer den = 1;
  for (const auto& c : s) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> scaled(s.size());
  for (std::size_t t = 0; t < s.size(); ++t) scaled[t] = s[t].get_num() * (den / s[t].get_den());
  std::vector<Integer> prod(a.size() + s.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < scaled.size(); ++j) {
      mpz_addmul(prod[i + j].get_mpz_t(), a[i].get_mpz_t(), scaled[j].get_mpz_t());
    }
  }
  // m is monic, so reduction stays integral.
  for (std::size_t top = prod.size(); top-- > n;) {
    if (prod[top] == 0) continue;
    const Integer c = prod[top];
    for (std::size_t t = 0; t <= n; ++t) {
      if (m[t] != 0) mpz_submul(prod[top - n + t].get_mpz_t(), c.get_mpz_t(), m[t].get_mpz_t());
    }
  }
  if (prod[0] != den) return false;
  for (std::size_t t = 1; t < n; ++t) {
    if (prod[t] != 0) return false;
  }
  return true;
}

}  // namespace

std::vector<Rational> inverse_mod_irreducible(const std::vector<Integer>& a,
                                              const std::vector<Integer>& m) {
  const std::size_t n = m.size() - 1;
  std::vector<Integer> residues(n, Integer(0));
  Integer modulus = 1;
  std::size_t used = 0;
  std::size_t next_attempt = 2;
  std::vector<Rational> candidate;
  constexpr std::size_t kMaxPrimes = 1 << 16;
  for (std::size_t index = 0; index < kMaxPrimes; ++index) {
    const u64 p = nth_prime(index);
    const ModPoly ap = reduce(a, p);
    if (ap.empty()) continue;
    ModPoly sp = inverse_mod_p(ap, reduce(m, p), p);
    if (sp.empty()) continue;
    sp.resize(n, 0);

    const u64 mod_p_inv = inv_mod(mpz_fdiv_ui(modulus.get_mpz_t(), p), p);
    for (std::size_t k = 0; k < n; ++k) {
      const u64 x_mod_p = mpz_fdiv_ui(residues[k].get_mpz_t(), p);
      const u64 t = mul_mod(sub_mod(sp[k], x_mod_p, p), mod_p_inv, p);
      if (t != 0) mpz_addmul_ui(residues[k].get_mpz_t(), modulus.get_mpz_t(), t);
    }
    modulus *= p;
    ++used;

    if (used == next_attempt) {
      next_attempt += std::max<std::size_t>(2, used / 2);
      if (reconstruct_all(residues, modulus, candidate) && is_inverse(a, m, candidate)) {
        return candidate;
      }
    }
  }
  throw Error(Errc::DivisionByZero, "no inverse found modulo the cyclotomic polynomial");
}

}  // namespace hopf_forge::detail
