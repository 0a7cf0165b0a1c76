#ifndef QP_POLY_HPP
#define QP_POLY_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <vector>

#include "qp/params.hpp"

namespace qp {

using Int = boost::multiprecision::cpp_int;
using Mono = std::vector<int32_t>;  // Laurent exponents per variable

// Sparse multivariate Laurent polynomial. Coefficients are arbitrary
// precision integers; when mod != 0 they are kept reduced to [0, mod).
struct Poly {
  std::map<Mono, Int> terms;

  bool zero() const { return terms.empty(); }

  static Poly constant(Int c, int nvars, uint64_t mod) {
    Poly p;
    if (mod) c = ((c % mod) + mod) % mod;
    if (c != 0) p.terms.emplace(Mono(nvars, 0), std::move(c));
    return p;
  }

  static Poly monomial(Int c, Mono m, uint64_t mod) {
    Poly p;
    if (mod) c = ((c % mod) + mod) % mod;
    if (c != 0) p.terms.emplace(std::move(m), std::move(c));
    return p;
  }

  void add_term(const Mono& m, Int c, uint64_t mod) {
    if (mod) c = ((c % mod) + mod) % mod;
    auto it = terms.find(m);
    if (it == terms.end()) {
      if (c != 0) terms.emplace(m, std::move(c));
      return;
    }
    it->second += c;
    if (mod) it->second %= mod;
    if (it->second == 0) terms.erase(it);
  }
};

inline Poly poly_add(const Poly& a, const Poly& b, uint64_t mod) {
  Poly r = a;
  for (const auto& [m, c] : b.terms) r.add_term(m, c, mod);
  return r;
}

inline Poly poly_neg(const Poly& a, uint64_t mod) {
  Poly r;
  for (const auto& [m, c] : a.terms)
    r.terms.emplace(m, mod ? Int((mod - (uint64_t)c) % mod) : Int(-c));
  return r;
}

inline Poly poly_sub(const Poly& a, const Poly& b, uint64_t mod) {
  return poly_add(a, poly_neg(b, mod), mod);
}

inline Poly poly_mul(const Poly& a, const Poly& b, uint64_t mod) {
  Poly r;
  if (a.zero() || b.zero()) return r;
  for (const auto& [ma, ca] : a.terms)
    for (const auto& [mb, cb] : b.terms) {
      Mono m(ma);
      for (size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
      r.add_term(m, ca * cb, mod);
    }
  return r;
}

inline bool poly_eq(const Poly& a, const Poly& b) { return a.terms == b.terms; }
inline bool operator==(const Poly& a, const Poly& b) { return poly_eq(a, b); }

// Exponent range of one variable across all terms.
inline void poly_var_range(const Poly& a, int v, int32_t& lo, int32_t& hi) {
  lo = 0;
  hi = 0;
  bool first = true;
  for (const auto& [m, c] : a.terms) {
    if (first || m[v] < lo) lo = m[v];
    if (first || m[v] > hi) hi = m[v];
    first = false;
  }
}

inline bool poly_uses_var(const Poly& a, int v) {
  for (const auto& [m, c] : a.terms)
    if (m[v] != 0) return true;
  return false;
}

// Multiply by a single Laurent monomial (shift all exponents).
inline Poly poly_shift(const Poly& a, const Mono& sh) {
  Poly r;
  for (const auto& [m, c] : a.terms) {
    Mono n(m);
    for (size_t i = 0; i < n.size(); ++i) n[i] += sh[i];
    r.terms.emplace(std::move(n), c);
  }
  return r;
}

// Coefficient of qroot^e viewed as a polynomial in the remaining variables.
inline Poly poly_coeff_of_qroot(const Poly& a, int32_t e) {
  Poly r;
  for (const auto& [m, c] : a.terms)
    if (m[VAR_QROOT] == e) {
      Mono n(m);
      n[VAR_QROOT] = 0;
      r.terms.emplace(std::move(n), c);
    }
  return r;
}

// Evaluate all assigned variables of a Prime-backend spec; remaining
// variables (qroot, possibly) stay formal.
inline Poly poly_eval_assigned(const Poly& a, const ParamSpec& sp) {
  Poly r;
  for (const auto& [m, c] : a.terms) {
    uint64_t f = (uint64_t)(((c % QP_PRIME) + QP_PRIME) % QP_PRIME);
    Mono n(m.size(), 0);
    for (size_t v = 0; v < m.size(); ++v) {
      if (m[v] == 0) continue;
      if (sp.assigned((int)v))
        f = fp_mul(f, fp_pow(*sp.assign[v], m[v]));
      else
        n[v] = m[v];
    }
    r.add_term(n, Int(f), QP_PRIME);
  }
  return r;
}

}  // namespace qp

#endif
