#include "qp/eigen.hpp"

#include <stdexcept>

namespace qp {

namespace {

OrbitPoint orbit_point(const ModuleCtx& ctx, const Vec& y) {
  OrbitPoint p = orbit_normal_form(*ctx.R, y);
  if (p.c != ctx.c) throw NotInOrbit("point outside the orbit of c");
  return p;
}

Scalar k_param(const ModuleCtx& ctx, const Vec& root) {
  return Scalar::monomial(ctx.sp, kvar(*ctx.R, root), 2);
}

}  // namespace

Scalar eval_products(const ModuleCtx& ctx, const WElem& w, ProdKind kind) {
  const RootDatum& R = *ctx.R;
  Scalar out = Scalar::one(ctx.sp);
  for (const ARoot& a : inversions(R, w)) {
    Scalar xa = char_eval_aff(R, ctx.sJt, a);
    Scalar ka = k_param(ctx, a.grad);
    Scalar ki = ka.inv();
    switch (kind) {
      case ProdKind::D:
        out = out * (xa - Scalar::one(ctx.sp));
        break;
      case ProdKind::R:
        out = out * (ka * xa - ki);
        break;
      case ProdKind::Nq:
        out = out * (ki - ka * xa) * (ki - ka * xa.inv());
        break;
      case ProdKind::Norm: {
        Scalar den = ka * xa - ki;
        if (den.is_zero())
          throw NormalizationZero("vanishing factor in N^w");
        out = out * (ki * xa - ka) * den.inv();
        break;
      }
    }
  }
  return out;
}

QuasiPolynomial mpoly(const ModuleCtx& ctx, const Vec& y) {
  OrbitPoint p = orbit_point(ctx, y);
  QuasiPolynomial f =
      QuasiPolynomial::monomial(ctx.sp, ctx.c, Scalar::one(ctx.sp));
  return act_delta_T_word(ctx, p.word, f);
}

namespace {

QuasiPolynomial epoly_intertwiner(const ModuleCtx& ctx, const OrbitPoint& p) {
  Scalar d = eval_products(ctx, p.w, ProdKind::D);
  if (d.is_zero())
    throw IntertwinerDegenerate("d_{w_y}(s_J t) = 0");
  Scalar lead = d * k_w(*ctx.R, ctx.sp, p.w, ctx.c);
  QuasiPolynomial f =
      QuasiPolynomial::monomial(ctx.sp, ctx.c, Scalar::one(ctx.sp));
  return qp_scale(lead.inv(), act_SY_word(ctx, p.word, f));
}

QuasiPolynomial epoly_solve(const ModuleCtx& ctx, const Vec& y) {
  const RootDatum& R = *ctx.R;
  std::vector<Vec> pts = lower_set(R, y);
  size_t n = pts.size();
  if (pts.back() != y) throw std::logic_error("lower set misordered");
  std::map<Vec, size_t> index;
  for (size_t i = 0; i < n; ++i) index.emplace(pts[i], i);

  // candidate exponents mu for act_Y; the first is dominant and regular
  std::vector<Vec> mus;
  Vec two_rho(R.N, Rat(0));
  for (const Vec& av : R.pos_coroot) two_rho = add(two_rho, av);
  mus.push_back(two_rho);
  for (int i = 0; i < R.rank; ++i) mus.push_back(R.coroot(R.simple[i]));
  mus.push_back(R.coroot(R.highest));

  // lazily built matrices of act_Y(mu) on the lower-set basis, and the
  // eigenvalues (s_z t_z)^{-mu} along the diagonal
  std::vector<std::vector<std::vector<Scalar>>> mat(mus.size());
  std::vector<std::vector<Scalar>> eig(mus.size());
  auto build = [&](size_t m) {
    if (!mat[m].empty()) return;
    mat[m].assign(n, std::vector<Scalar>(n, Scalar::zero(ctx.sp)));
    for (size_t j = 0; j < n; ++j) {
      QuasiPolynomial col = act_Y(
          ctx, mus[m],
          QuasiPolynomial::monomial(ctx.sp, pts[j], Scalar::one(ctx.sp)));
      for (const auto& [z, c] : col.terms) {
        auto it = index.find(z);
        if (it == index.end())
          throw std::logic_error("act_Y left the lower-set span");
        mat[m][it->second][j] = c;
      }
    }
    eig[m].reserve(n);
    for (size_t j = 0; j < n; ++j)
      eig[m].push_back(
          char_eval(R, ctx.spectrum(pts[j]).sy_ty, mus[m]).inv());
  };

  std::vector<Scalar> coef(n, Scalar::zero(ctx.sp));
  coef[n - 1] = Scalar::one(ctx.sp);
  for (size_t i = n - 1; i-- > 0;) {
    bool done = false;
    for (size_t m = 0; m < mus.size() && !done; ++m) {
      build(m);
      Scalar gap = eig[m][n - 1] - eig[m][i];
      if (gap.is_zero()) continue;
      Scalar rhs = Scalar::zero(ctx.sp);
      for (size_t j = i + 1; j < n; ++j) {
        if (mat[m][i][j].is_zero() || coef[j].is_zero()) continue;
        rhs = rhs + mat[m][i][j] * coef[j];
      }
      coef[i] = rhs * gap.inv();
      done = true;
    }
    if (!done)
      throw SpectralCollision("spectrum not separated on the lower set");
  }

  QuasiPolynomial out = QuasiPolynomial::zero(ctx.sp);
  for (size_t i = 0; i < n; ++i)
    if (!coef[i].is_zero()) out.add_term(pts[i], coef[i]);

  // residual check against the dominant regular choice
  build(0);
  for (size_t i = 0; i < n; ++i) {
    Scalar r = eig[0][n - 1] * coef[i];
    for (size_t j = 0; j < n; ++j) {
      if (mat[0][i][j].is_zero() || coef[j].is_zero()) continue;
      r = r - mat[0][i][j] * coef[j];
    }
    if (!r.is_zero())
      throw SpectralCollision("solved vector fails the eigen equation");
  }
  return out;
}

}  // namespace

QuasiPolynomial epoly(const ModuleCtx& ctx, const Vec& y, EMethod method) {
  OrbitPoint p = orbit_point(ctx, y);
  if (p.word.empty())
    return QuasiPolynomial::monomial(ctx.sp, ctx.c, Scalar::one(ctx.sp));
  if (method == EMethod::Intertwiner) return epoly_intertwiner(ctx, p);
  return epoly_solve(ctx, y);
}

QuasiPolynomial ppoly(const ModuleCtx& ctx, const Vec& y) {
  OrbitPoint p = orbit_point(ctx, y);
  Scalar r = eval_products(ctx, p.w, ProdKind::R);
  if (r.is_zero()) throw NormalizationZero("r_{w_y}(s_J t) = 0");
  QuasiPolynomial f =
      QuasiPolynomial::monomial(ctx.sp, ctx.c, Scalar::one(ctx.sp));
  return qp_scale(r.inv(), act_SY_word(ctx, p.word, f));
}

QuasiPolynomial act_sym(const ModuleCtx& ctx, int sign,
                        const QuasiPolynomial& f) {
  const RootDatum& R = *ctx.R;
  QuasiPolynomial out = QuasiPolynomial::zero(ctx.sp);
  for (const std::vector<int>& word : finite_weyl_words(R)) {
    WElem v = word_elem(R, word);
    Scalar kv = kappa_v(R, ctx.sp, v, Vec(R.N, Rat(0)));
    Scalar coef = sign > 0 ? kv : kv.inv();
    if (sign < 0 && word.size() % 2 == 1) coef = -coef;
    out = qp_add(out, qp_scale(coef, act_T_word(ctx, word, 1, f)));
  }
  return out;
}

QuasiPolynomial sym_pm(const ModuleCtx& ctx, const Vec& y, int sign,
                       EMethod method) {
  return act_sym(ctx, sign, epoly(ctx, y, method));
}

TorusChar face_source_char(const ModuleCtx& dst, const Vec& c_source) {
  TorusChar sJ_src = s_char(*dst.R, dst.sp, c_source);
  return char_mul(char_inv(sJ_src), dst.sJt);
}

QuasiPolynomial project_face(const ModuleCtx& src, const ModuleCtx& dst,
                             const QuasiPolynomial& f) {
  const RootDatum& R = *src.R;
  for (int j : src.J)
    if (!dst.J_has(j))
      throw FaceNotInClosure("target face not in the closure of the source");
  if (src.sJt != dst.sJt)
    throw InvalidCharacter("source character must be s_J^{-1} s_{J'} t'");
  QuasiPolynomial out = QuasiPolynomial::zero(src.sp);
  for (const auto& [y, c] : f.terms) {
    OrbitPoint p = orbit_point(src, y);
    WElem v = p.w;
    v.tr = Vec(R.N, Rat(0));
    Scalar ratio = kappa_v(R, src.sp, v, dst.c) *
                   kappa_v(R, src.sp, v, src.c).inv();
    out.add_term(add(p.w.tr, v.apply(dst.c)), c * ratio);
  }
  return out;
}

}  // namespace qp
