#ifndef QP_QUASI_HPP
#define QP_QUASI_HPP

#include <map>
#include <memory>

#include "qp/affine_weyl.hpp"
#include "qp/scalar.hpp"

namespace qp {

// k-variable (vsh or vlg) attached to the length class of a root
int kvar(const RootDatum& R, const Vec& root);

// Torus character stored by its values on the simple coroots.
struct TorusChar {
  std::vector<Scalar> val;

  static TorusChar trivial(SpecPtr sp, int rank);
  bool operator==(const TorusChar& o) const { return val == o.val; }
  bool operator!=(const TorusChar& o) const { return !(*this == o); }
};

// q^{2/|phi|^2}, the q-power attached to level 1 at the highest root
Scalar q_phi(const RootDatum& R, SpecPtr sp);

// t^{mu + lvl*K} for mu in the coroot lattice; t^{mu+lK} = q^l t^mu
Scalar char_eval(const RootDatum& R, const TorusChar& t, const Vec& mu,
                 const Rat& lvl = Rat(0));
// t^{a vee} for an affine root a = (alpha, l): q^{l * 2/|alpha|^2} t^{alpha vee}
Scalar char_eval_aff(const RootDatum& R, const TorusChar& t, const ARoot& a);

TorusChar char_mul(const TorusChar& a, const TorusChar& b);
TorusChar char_inv(const TorusChar& a);
// (w t)^{xi} = q^{<nu,xi>} t^{v^{-1} xi} for w = tau(nu) v
TorusChar char_act(const RootDatum& R, const WElem& w, const TorusChar& t);

// s_y = prod_{alpha>0} k_alpha^{eta(alpha(y)) alpha}
TorusChar s_char(const RootDatum& R, SpecPtr sp, const Vec& y);
// k(y) = prod_{alpha>0} v_alpha^{eta(alpha(y))}
Scalar k_of(const RootDatum& R, SpecPtr sp, const Vec& y);
// kappa_v(y) = prod_{alpha in Pi(v)} k_alpha^{-eta(alpha(y))}, v finite
Scalar kappa_v(const RootDatum& R, SpecPtr sp, const WElem& v, const Vec& y);
// k_w(y) = k(wy)/k(y), w affine
Scalar k_w(const RootDatum& R, SpecPtr sp, const WElem& w, const Vec& y);

// least D with q^{1/D} covering 2h, the pairings alpha(c), and extra
long long context_denominator(const RootDatum& R, const Vec& c,
                              long long extra = 1);

struct SpectrumChar {
  TorusChar ty;     // t_y = w_y t
  TorusChar sy_ty;  // s_y t_y = w_y (s_J t)
};

struct ModuleCtx {
  std::shared_ptr<const RootDatum> R;
  SpecPtr sp;
  Vec c;
  std::vector<int> J;  // {j : a_j(c) = 0}, sorted
  TorusChar t, sJ, sJt;
  bool is_J_regular = false;
  bool is_J_generic = false;
  long long level_bound = 0;

  bool J_has(int j) const;
  // cached (t_y, s_y t_y); write-once per orbit point
  const SpectrumChar& spectrum(const Vec& y) const;

 private:
  mutable std::map<Vec, SpectrumChar> spec_cache_;
};

// checks c in the closed fundamental alcove and t in T_J; computes the
// genericity flags by a level scan
ModuleCtx validate_ctx(std::shared_ptr<const RootDatum> R, SpecPtr sp,
                       const Vec& c, TorusChar t, long long Lmax = 8);

SpectrumChar spectrum_char(const ModuleCtx& ctx, const Vec& y);

// sparse quasi-polynomial: exponent vector in E -> coefficient
struct QuasiPolynomial {
  SpecPtr sp;
  std::map<Vec, Scalar> terms;

  static QuasiPolynomial zero(SpecPtr sp);
  static QuasiPolynomial monomial(SpecPtr sp, const Vec& y, Scalar c);
  void add_term(const Vec& y, const Scalar& c);
  bool is_zero() const { return terms.empty(); }
  Scalar coeff(const Vec& y) const;
  bool operator==(const QuasiPolynomial& o) const;
  bool operator!=(const QuasiPolynomial& o) const { return !(*this == o); }
};

QuasiPolynomial qp_add(const QuasiPolynomial& a, const QuasiPolynomial& b);
QuasiPolynomial qp_sub(const QuasiPolynomial& a, const QuasiPolynomial& b);
QuasiPolynomial qp_scale(const Scalar& s, const QuasiPolynomial& f);
// x^mu f: shift every exponent by mu
QuasiPolynomial qp_shift(const Vec& mu, const QuasiPolynomial& f);

}  // namespace qp

#endif
