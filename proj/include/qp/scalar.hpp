#ifndef QP_SCALAR_HPP
#define QP_SCALAR_HPP

#include <string>
#include <vector>

#include "qp/poly.hpp"

namespace qp {

// Element of the coefficient field: a fraction of sparse Laurent
// polynomials over Z (or over F_p in the Prime backend). The numerator is
// kept expanded while the denominator is kept as an integer content times
// a multiset of normalized polynomial factors; reduction is trial
// division of the numerator by each factor, so no polynomial gcd is ever
// computed. Equality goes through subtraction.
class Scalar {
public:
  Scalar() = default;
  // den enters as a single factor
  Scalar(SpecPtr spec, Poly num, Poly den);

  static Scalar zero(SpecPtr sp);
  static Scalar one(SpecPtr sp);
  static Scalar integer(SpecPtr sp, long long n);
  static Scalar monomial(SpecPtr sp, int var, int32_t e);
  // q^e for rational e; requires D*e integral.
  static Scalar q_power(SpecPtr sp, const Rat& e);

  const SpecPtr& spec() const { return spec_; }
  const Poly& num() const { return num_; }
  // expanded denominator
  Poly den() const;

  bool is_zero() const { return num_.zero(); }
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  Scalar inv() const;
  Scalar pow(long long e) const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  std::string str() const;
  static Scalar parse(SpecPtr sp, const std::string& s);

  // Map into a Prime-backend spec sharing the roster. Throws
  // UnluckySpecialization when the denominator vanishes.
  Scalar specialize(SpecPtr prime_spec) const;

  // Value at qroot^{-1} = 0 by comparing degrees in qroot; exact when the
  // fraction is a genuine rational function of qroot over the other
  // variables. Throws PoleAtInfinity when the numerator degree dominates.
  Scalar whittaker_value() const;

  // Value at variable v -> 0 after cancelling the common lowest power of v.
  Scalar limit_var_zero(int v) const;

private:
  Scalar(SpecPtr spec, Poly num, std::vector<Poly> fac, Int dc);
  void push_factor(Poly f);
  void canonicalize();
  uint64_t mod() const {
    return spec_ && spec_->backend == Backend::Prime ? QP_PRIME : 0;
  }

  SpecPtr spec_;
  Poly num_;
  // value = num_ / (dc_ * prod dfac_); factors are sorted, monomial-free,
  // primitive with positive leading coefficient (monic in the Prime
  // backend), dc_ is a positive integer (1 in the Prime backend)
  std::vector<Poly> dfac_;
  Int dc_ = 1;
};

std::string poly_str(const Poly& p, const ParamSpec& sp);

}  // namespace qp

#endif
