#include "qp/rep.hpp"

namespace qp {

namespace {

// gradient of a_j
const Vec grad_aff(const RootDatum& R, int j) {
  return j == 0 ? neg(R.highest) : R.simple[j - 1];
}

// multiply (coeff, y) by x^{s * a_j vee}; for j = 0 this contributes
// q_phi^s x^{-s phi vee}
void shifted_term(const ModuleCtx& ctx, int j, long long s, const Vec& y,
                  const Scalar& c, QuasiPolynomial& out) {
  const RootDatum& R = *ctx.R;
  if (j == 0) {
    Scalar f = c * q_phi(R, ctx.sp).pow(s);
    out.add_term(sub(y, scale(Rat(s), R.coroot(R.highest))), f);
  } else {
    out.add_term(add(y, scale(Rat(s), R.coroot(R.simple[j - 1]))), c);
  }
}

}  // namespace

Scalar k_scalar(const ModuleCtx& ctx, int j) {
  const Vec g = grad_aff(*ctx.R, j);
  return Scalar::monomial(ctx.sp, kvar(*ctx.R, j == 0 ? ctx.R->highest : g), 2);
}

QuasiPolynomial qp_mul(const QuasiPolynomial& a, const QuasiPolynomial& b) {
  QuasiPolynomial r = QuasiPolynomial::zero(a.sp);
  for (const auto& [y, c] : a.terms)
    for (const auto& [z, d] : b.terms) r.add_term(add(y, z), c * d);
  return r;
}

QuasiPolynomial nabla(const ModuleCtx& ctx, int j, const QuasiPolynomial& f) {
  const RootDatum& R = *ctx.R;
  Vec g = grad_aff(R, j);
  QuasiPolynomial out = QuasiPolynomial::zero(ctx.sp);
  for (const auto& [y, c] : f.terms) {
    long long b = floor_rat(R.pair(g, y));
    if (b > 0)
      for (long long s = 1; s <= b; ++s) shifted_term(ctx, j, -s, y, -c, out);
    else
      for (long long s = 0; s < -b; ++s) shifted_term(ctx, j, s, y, c, out);
  }
  return out;
}

QuasiPolynomial act_T(const ModuleCtx& ctx, int j, int sign,
                      const QuasiPolynomial& f) {
  const RootDatum& R = *ctx.R;
  Scalar kj = k_scalar(ctx, j);
  Scalar dk = kj - kj.inv();
  QuasiPolynomial out = qp_scale(dk, nabla(ctx, j, f));
  for (const auto& [y, c] : f.terms) {
    Scalar coef = c;
    if (chi_int(R.aff_eval(R.simple_aff(j), y))) coef *= kj;
    if (j == 0) {
      coef *= char_eval(R, ctx.spectrum(y).ty, R.coroot(R.highest));
      out.add_term(R.reflect(y, R.highest), coef);
    } else {
      out.add_term(R.reflect(y, R.simple[j - 1]), coef);
    }
  }
  if (sign < 0) out = qp_sub(out, qp_scale(dk, f));
  return out;
}

QuasiPolynomial act_T_word(const ModuleCtx& ctx, const std::vector<int>& word,
                           int sign, QuasiPolynomial f) {
  if (sign > 0) {
    for (auto it = word.rbegin(); it != word.rend(); ++it)
      f = act_T(ctx, *it, 1, f);
  } else {
    for (int j : word) f = act_T(ctx, j, -1, f);
  }
  return f;
}

QuasiPolynomial act_w_t(const ModuleCtx& ctx, const WElem& w,
                        const QuasiPolynomial& f) {
  const RootDatum& R = *ctx.R;
  QuasiPolynomial out = QuasiPolynomial::zero(ctx.sp);
  for (const auto& [y, c] : f.terms) {
    Vec vy = w.apply_lin(y);
    Scalar coef = c * char_eval(R, ctx.spectrum(vy).ty, neg(w.tr));
    out.add_term(vy, coef);
  }
  return out;
}

QuasiPolynomial act_Y(const ModuleCtx& ctx, const Vec& mu,
                      const QuasiPolynomial& f) {
  const RootDatum& R = *ctx.R;
  // Y^mu = T_{j_1}^{e_1} ... T_{j_l}^{e_l} along a reduced word of tau(mu),
  // with e_i read off the scan b_i = s_{j_l} ... s_{j_{i+1}}(a_{j_i}):
  // e_i = +1 iff the gradient of b_i is a positive root
  auto word = reduced_word(R, translation(R, mu));
  std::vector<int> eps(word.size(), 1);
  for (size_t i = 0; i < word.size(); ++i) {
    ARoot b = R.simple_aff(word[i]);
    for (size_t k = i + 1; k < word.size(); ++k)
      b = simple_refl(R, word[k]).apply_aff(R, b);
    eps[i] = R.is_pos_root(b.grad) ? 1 : -1;
  }
  QuasiPolynomial g = f;
  for (size_t i = word.size(); i-- > 0;) g = act_T(ctx, word[i], eps[i], g);
  return g;
}

QuasiPolynomial act_delta_T(const ModuleCtx& ctx, int j, int sign,
                            const QuasiPolynomial& f) {
  if (j >= 1) return act_T(ctx, j, sign, f);
  const RootDatum& R = *ctx.R;
  Vec phv = R.coroot(R.highest);
  if (sign > 0) {
    QuasiPolynomial g = qp_shift(neg(phv), f);
    g = act_T(ctx, 0, 1, g);
    return act_Y(ctx, neg(phv), g);
  }
  // inverse of delta(T_0) = Y^{-phi vee} T_0 x^{-phi vee}
  QuasiPolynomial g = act_Y(ctx, phv, f);
  g = act_T(ctx, 0, -1, g);
  return qp_shift(phv, g);
}

QuasiPolynomial act_delta_T_word(const ModuleCtx& ctx,
                                 const std::vector<int>& word,
                                 QuasiPolynomial f) {
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    f = act_delta_T(ctx, *it, 1, f);
  return f;
}

QuasiPolynomial act_SY(const ModuleCtx& ctx, int j, const QuasiPolynomial& f) {
  const RootDatum& R = *ctx.R;
  QuasiPolynomial g = QuasiPolynomial::zero(ctx.sp);
  if (j == 0) {
    // (Y^{-1})^{alpha_0 vee} = q_phi Y^{phi vee}
    g = qp_scale(q_phi(R, ctx.sp), act_Y(ctx, R.coroot(R.highest), f));
  } else {
    g = act_Y(ctx, neg(R.coroot(R.simple[j - 1])), f);
  }
  g = qp_sub(g, f);
  g = act_delta_T(ctx, j, 1, g);
  Scalar kj = k_scalar(ctx, j);
  return qp_add(g, qp_scale(kj - kj.inv(), f));
}

QuasiPolynomial act_SY_word(const ModuleCtx& ctx, const std::vector<int>& word,
                            QuasiPolynomial f) {
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    f = act_SY(ctx, *it, f);
  return f;
}

}  // namespace qp
