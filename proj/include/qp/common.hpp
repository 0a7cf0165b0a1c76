#ifndef QP_COMMON_HPP
#define QP_COMMON_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace qp {

// Exact rational over 64-bit integers with 128-bit intermediates. Exponent
// vectors and root coordinates stay tiny, so this never grows large.
class Rat {
public:
  Rat() : n_(0), d_(1) {}
  Rat(long long n) : n_(n), d_(1) {}
  Rat(long long n, long long d) { init((__int128)n, (__int128)d); }

  long long numerator() const { return n_; }
  long long denominator() const { return d_; }

  Rat operator-() const { return Rat(-n_, d_); }
  Rat operator+(const Rat& o) const {
    return make((__int128)n_ * o.d_ + (__int128)o.n_ * d_,
                (__int128)d_ * o.d_);
  }
  Rat operator-(const Rat& o) const {
    return make((__int128)n_ * o.d_ - (__int128)o.n_ * d_,
                (__int128)d_ * o.d_);
  }
  Rat operator*(const Rat& o) const {
    return make((__int128)n_ * o.n_, (__int128)d_ * o.d_);
  }
  Rat operator/(const Rat& o) const {
    return make((__int128)n_ * o.d_, (__int128)d_ * o.n_);
  }
  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }
  Rat& operator*=(const Rat& o) { return *this = *this * o; }
  Rat& operator/=(const Rat& o) { return *this = *this / o; }

  bool operator==(const Rat& o) const { return n_ == o.n_ && d_ == o.d_; }
  bool operator!=(const Rat& o) const { return !(*this == o); }
  bool operator<(const Rat& o) const {
    return (__int128)n_ * o.d_ < (__int128)o.n_ * d_;
  }
  bool operator>(const Rat& o) const { return o < *this; }
  bool operator<=(const Rat& o) const { return !(o < *this); }
  bool operator>=(const Rat& o) const { return !(*this < o); }

private:
  static Rat make(__int128 n, __int128 d) {
    Rat r;
    r.init(n, d);
    return r;
  }
  void init(__int128 n, __int128 d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 a = n < 0 ? -n : n, b = d;
    while (b) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    if (a > 1) {
      n /= a;
      d /= a;
    }
    if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
      throw std::overflow_error("rational overflow");
    n_ = (long long)n;
    d_ = (long long)d;
  }
  long long n_, d_;
};

using Vec = std::vector<Rat>;

// Error taxonomy shared across modules. what() starts with the error name so
// the CLI can report it verbatim.
class QpError : public std::runtime_error {
public:
  QpError(const std::string& name, const std::string& msg)
      : std::runtime_error(name + ": " + msg), name_(name) {}
  const std::string& name() const { return name_; }

private:
  std::string name_;
};

#define QP_ERROR(Name)                                              \
  class Name : public QpError {                                     \
  public:                                                           \
    explicit Name(const std::string& msg = "") : QpError(#Name, msg) {} \
  }

QP_ERROR(DenominatorOverflow);
QP_ERROR(UnluckySpecialization);
QP_ERROR(PoleAtInfinity);
QP_ERROR(DivisionByZero);
QP_ERROR(NotInFundamentalAlcove);
QP_ERROR(NotInTJ);
QP_ERROR(NotInOrbit);
QP_ERROR(InvalidCharacter);
QP_ERROR(SpectralCollision);
QP_ERROR(NormalizationZero);
QP_ERROR(FaceNotInClosure);
QP_ERROR(DomainRestriction);
QP_ERROR(InvalidHTable);
QP_ERROR(LatticeTooSmall);
QP_ERROR(IntertwinerDegenerate);
QP_ERROR(NotJGeneric);
QP_ERROR(InvalidQuadraticForm);
QP_ERROR(InvalidHParameters);
QP_ERROR(ParseError);
QP_ERROR(UnsupportedType);

#undef QP_ERROR

inline long long floor_rat(const Rat& x) {
  long long n = x.numerator(), d = x.denominator();  // d > 0
  long long q = n / d;
  if (n % d != 0 && n < 0) --q;
  return q;
}

inline bool is_int(const Rat& x) { return x.denominator() == 1; }

// eta = chi_{Z>0} - chi_{Z<=0}; eta(0) = -1, eta on non-integers = 0.
inline int eta_step(const Rat& x) {
  if (!is_int(x)) return 0;
  return x > 0 ? 1 : -1;
}

inline int chi_int(const Rat& x) { return is_int(x) ? 1 : 0; }

inline Rat dot(const Vec& a, const Vec& b) {
  Rat s(0);
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Vec add(const Vec& a, const Vec& b) {
  Vec r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

inline Vec sub(const Vec& a, const Vec& b) {
  Vec r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

inline Vec scale(const Rat& c, const Vec& a) {
  Vec r(a);
  for (auto& x : r) x *= c;
  return r;
}

inline Vec neg(const Vec& a) { return scale(Rat(-1), a); }

inline bool is_zero_vec(const Vec& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

inline std::string rat_str(const Rat& x) {
  std::string s = std::to_string(x.numerator());
  if (x.denominator() != 1) s += "/" + std::to_string(x.denominator());
  return s;
}

inline std::string vec_str(const Vec& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += rat_str(v[i]);
  }
  return s;
}

}  // namespace qp

#endif
