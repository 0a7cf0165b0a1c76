#ifndef QP_PARAMS_HPP
#define QP_PARAMS_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <vector>

#include "qp/common.hpp"

namespace qp {

// Variable roster for the coefficient field, in fixed order:
//   qroot (= q^{1/D}), vsh (= k_sh^{1/2}), vlg (= k_lg^{1/2}),
//   z_1..z_s (free torus parameters), h_1..h_m (metaplectic parameters).
enum : int { VAR_QROOT = 0, VAR_VSH = 1, VAR_VLG = 2 };

enum class Backend { Symbolic, Prime };

// Modular arithmetic at p = 2^61 - 1.
constexpr uint64_t QP_PRIME = (uint64_t(1) << 61) - 1;

inline uint64_t fp_add(uint64_t a, uint64_t b) {
  uint64_t s = a + b;
  if (s >= QP_PRIME) s -= QP_PRIME;
  return s;
}
inline uint64_t fp_sub(uint64_t a, uint64_t b) {
  return a >= b ? a - b : a + QP_PRIME - b;
}
inline uint64_t fp_mul(uint64_t a, uint64_t b) {
  return (uint64_t)(((unsigned __int128)a * b) % QP_PRIME);
}
inline uint64_t fp_pow(uint64_t a, long long e) {
  bool inv = e < 0;
  unsigned long long n = inv ? -(unsigned long long)e : (unsigned long long)e;
  uint64_t r = 1;
  while (n) {
    if (n & 1) r = fp_mul(r, a);
    a = fp_mul(a, a);
    n >>= 1;
  }
  if (inv) {
    if (r == 0) throw DivisionByZero("inverse of 0 mod p");
    r = fp_pow(r, (long long)(QP_PRIME - 2));
  }
  return r;
}
inline uint64_t fp_inv(uint64_t a) { return fp_pow(a, -1); }

struct ParamSpec {
  int D = 1;       // q-root denominator: qroot = q^{1/D}
  int nz = 0;      // number of z-variables
  int nh = 0;      // number of h-variables
  Backend backend = Backend::Symbolic;
  // Prime backend: residue per variable; qroot may stay formal.
  std::vector<std::optional<uint64_t>> assign;

  int nvars() const { return 3 + nz + nh; }

  bool assigned(int v) const {
    return backend == Backend::Prime && v < (int)assign.size() &&
           assign[v].has_value();
  }

  std::string var_name(int v) const {
    if (v == VAR_QROOT) return "q";
    if (v == VAR_VSH) return "vsh";
    if (v == VAR_VLG) return "vlg";
    if (v < 3 + nz) return "z_" + std::to_string(v - 2);
    return "h_" + std::to_string(v - 2 - nz);
  }

  // Prime spec with the same roster; every variable (or all but qroot)
  // receives a nonzero residue. qroot is a D-divisible power of a fixed
  // element so fractional q-powers evaluate consistently.
  static std::shared_ptr<const ParamSpec> primed(const ParamSpec& base,
                                                 uint64_t seed,
                                                 bool keep_qroot = false) {
    auto sp = std::make_shared<ParamSpec>(base);
    sp->backend = Backend::Prime;
    sp->assign.assign(sp->nvars(), std::nullopt);
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    auto draw = [&]() {
      uint64_t r;
      do { r = rng() % QP_PRIME; } while (r <= 1);
      return r;
    };
    for (int v = 0; v < sp->nvars(); ++v) {
      if (v == VAR_QROOT) {
        if (keep_qroot) continue;
        sp->assign[v] = fp_pow(draw(), sp->D);
      } else {
        sp->assign[v] = draw();
      }
    }
    return sp;
  }
};

using SpecPtr = std::shared_ptr<const ParamSpec>;

inline SpecPtr make_spec(int D, int nz = 0, int nh = 0) {
  auto sp = std::make_shared<ParamSpec>();
  sp->D = D;
  sp->nz = nz;
  sp->nh = nh;
  return sp;
}

}  // namespace qp

#endif
