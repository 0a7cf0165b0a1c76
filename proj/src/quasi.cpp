#include "qp/quasi.hpp"

#include <numeric>

namespace qp {

int kvar(const RootDatum& R, const Vec& root) {
  return R.class_of(root) == 0 ? VAR_VSH : VAR_VLG;
}

TorusChar TorusChar::trivial(SpecPtr sp, int rank) {
  TorusChar t;
  t.val.assign(rank, Scalar::one(sp));
  return t;
}

Scalar q_phi(const RootDatum& R, SpecPtr sp) {
  return Scalar::q_power(sp, Rat(R.two_over_normsq(R.highest)));
}

Scalar char_eval(const RootDatum& R, const TorusChar& t, const Vec& mu,
                 const Rat& lvl) {
  SpecPtr sp = t.val.at(0).spec();
  Scalar out = Scalar::q_power(sp, lvl);
  std::vector<Rat> co = R.coroot_coords(mu);
  for (int i = 0; i < R.rank; ++i) {
    if (!is_int(co[i]))
      throw DenominatorOverflow("character argument not in the coroot lattice");
    long long e = co[i].numerator();
    if (e != 0) out *= t.val[i].pow(e);
  }
  return out;
}

Scalar char_eval_aff(const RootDatum& R, const TorusChar& t, const ARoot& a) {
  return char_eval(R, t, R.coroot(a.grad),
                   a.lvl * Rat(R.two_over_normsq(a.grad)));
}

TorusChar char_mul(const TorusChar& a, const TorusChar& b) {
  TorusChar r = a;
  for (size_t i = 0; i < r.val.size(); ++i) r.val[i] *= b.val[i];
  return r;
}

TorusChar char_inv(const TorusChar& a) {
  TorusChar r = a;
  for (auto& v : r.val) v = v.inv();
  return r;
}

TorusChar char_act(const RootDatum& R, const WElem& w, const TorusChar& t) {
  SpecPtr sp = t.val.at(0).spec();
  WElem vinv = WElem{w.mat, Vec(w.tr.size(), Rat(0))}.inverse();
  TorusChar r;
  for (int i = 0; i < R.rank; ++i) {
    Vec avee = R.coroot(R.simple[i]);
    Rat e = R.pair(R.simple[i], w.tr) * Rat(R.q_exp[i]);  // <nu, alpha_i vee>
    r.val.push_back(Scalar::q_power(sp, e) *
                    char_eval(R, t, vinv.apply_lin(avee)));
  }
  return r;
}

TorusChar s_char(const RootDatum& R, SpecPtr sp, const Vec& y) {
  TorusChar r;
  for (int i = 0; i < R.rank; ++i) {
    Vec avee = R.coroot(R.simple[i]);
    Scalar v = Scalar::one(sp);
    for (const auto& al : R.pos) {
      Rat p = R.pair(al, avee);
      if (!is_int(p)) throw DenominatorOverflow("non-integral coroot pairing");
      long long e = 2 * eta_step(R.pair(al, y)) * p.numerator();
      if (e != 0) v *= Scalar::monomial(sp, kvar(R, al), (int32_t)e);
    }
    r.val.push_back(v);
  }
  return r;
}

Scalar k_of(const RootDatum& R, SpecPtr sp, const Vec& y) {
  Scalar v = Scalar::one(sp);
  for (const auto& al : R.pos) {
    int e = eta_step(R.pair(al, y));
    if (e != 0) v *= Scalar::monomial(sp, kvar(R, al), e);
  }
  return v;
}

Scalar kappa_v(const RootDatum& R, SpecPtr sp, const WElem& v, const Vec& y) {
  Scalar out = Scalar::one(sp);
  for (const auto& al : finite_inversions(R, v)) {
    int e = -2 * eta_step(R.pair(al, y));
    if (e != 0) out *= Scalar::monomial(sp, kvar(R, al), e);
  }
  return out;
}

Scalar k_w(const RootDatum& R, SpecPtr sp, const WElem& w, const Vec& y) {
  return k_of(R, sp, w.apply(y)) / k_of(R, sp, y);
}

long long context_denominator(const RootDatum& R, const Vec& c,
                              long long extra) {
  long long D = std::lcm(2LL * R.coxeter, extra);
  for (size_t i = 0; i < R.pos.size(); ++i) {
    Rat p = R.pair(R.pos[i], c) * Rat(R.q_exp[i]);
    D = std::lcm(D, p.denominator());
  }
  return D;
}

bool ModuleCtx::J_has(int j) const {
  return std::find(J.begin(), J.end(), j) != J.end();
}

const SpectrumChar& ModuleCtx::spectrum(const Vec& y) const {
  auto it = spec_cache_.find(y);
  if (it == spec_cache_.end())
    it = spec_cache_.emplace(y, spectrum_char(*this, y)).first;
  return it->second;
}

ModuleCtx validate_ctx(std::shared_ptr<const RootDatum> R, SpecPtr sp,
                       const Vec& c, TorusChar t, long long Lmax) {
  ModuleCtx ctx;
  ctx.R = R;
  ctx.sp = sp;
  ctx.c = c;
  ctx.level_bound = Lmax;
  for (const auto& al : R->pos) {
    Rat p = R->pair(al, c);
    if (p < Rat(0) || p > Rat(1))
      throw NotInFundamentalAlcove("alcove inequality fails at " + vec_str(al));
  }
  for (int j = 0; j <= R->rank; ++j)
    if (R->aff_eval(R->simple_aff(j), c) == Rat(0)) ctx.J.push_back(j);
  if ((int)ctx.J.size() > R->rank)
    throw NotInFundamentalAlcove("face index set must be proper");
  ctx.t = std::move(t);
  Scalar one = Scalar::one(sp);
  for (int j : ctx.J) {
    if (j == 0) {
      if (char_eval(*R, ctx.t, R->coroot(R->highest)) != q_phi(*R, sp))
        throw NotInTJ("t^{phi vee} must equal q_phi when 0 is in J");
    } else if (ctx.t.val.at(j - 1) != one) {
      throw NotInTJ("t^{alpha_j vee} must be 1 for j in J");
    }
  }
  ctx.sJ = s_char(*R, sp, c);
  ctx.sJt = char_mul(ctx.sJ, ctx.t);
  ctx.is_J_regular = true;
  ctx.is_J_generic = true;
  for (size_t i = 0; i < R->pos.size(); ++i) {
    const Vec& al = R->pos[i];
    Scalar ksq = Scalar::monomial(sp, kvar(*R, al), 4);  // k_a^2
    for (long long l = -Lmax; l <= Lmax; ++l) {
      ARoot a{al, Rat(l)};
      if (R->aff_eval(a, c) == Rat(0)) continue;  // a in Phi_J
      Scalar v = char_eval_aff(*R, ctx.sJt, a);
      if (v == one) ctx.is_J_regular = false;
      if (R->aff_positive(a) && v * ksq == one) ctx.is_J_generic = false;
    }
  }
  if (!ctx.is_J_regular) ctx.is_J_generic = false;
  return ctx;
}

SpectrumChar spectrum_char(const ModuleCtx& ctx, const Vec& y) {
  OrbitPoint p = orbit_normal_form(*ctx.R, y);
  if (p.c != ctx.c) throw NotInOrbit("point is not in the orbit of c");
  return SpectrumChar{char_act(*ctx.R, p.w, ctx.t),
                      char_act(*ctx.R, p.w, ctx.sJt)};
}

QuasiPolynomial QuasiPolynomial::zero(SpecPtr sp) {
  QuasiPolynomial f;
  f.sp = std::move(sp);
  return f;
}

QuasiPolynomial QuasiPolynomial::monomial(SpecPtr sp, const Vec& y, Scalar c) {
  QuasiPolynomial f;
  f.sp = std::move(sp);
  if (!c.is_zero()) f.terms.emplace(y, std::move(c));
  return f;
}

void QuasiPolynomial::add_term(const Vec& y, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = terms.find(y);
  if (it == terms.end()) {
    terms.emplace(y, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms.erase(it);
}

Scalar QuasiPolynomial::coeff(const Vec& y) const {
  auto it = terms.find(y);
  return it == terms.end() ? Scalar::zero(sp) : it->second;
}

bool QuasiPolynomial::operator==(const QuasiPolynomial& o) const {
  if (terms.size() != o.terms.size()) return false;
  auto it = o.terms.begin();
  for (const auto& [y, c] : terms) {
    if (it->first != y || it->second != c) return false;
    ++it;
  }
  return true;
}

QuasiPolynomial qp_add(const QuasiPolynomial& a, const QuasiPolynomial& b) {
  QuasiPolynomial r = a;
  for (const auto& [y, c] : b.terms) r.add_term(y, c);
  return r;
}

QuasiPolynomial qp_sub(const QuasiPolynomial& a, const QuasiPolynomial& b) {
  QuasiPolynomial r = a;
  for (const auto& [y, c] : b.terms) r.add_term(y, -c);
  return r;
}

QuasiPolynomial qp_scale(const Scalar& s, const QuasiPolynomial& f) {
  QuasiPolynomial r = QuasiPolynomial::zero(f.sp);
  if (s.is_zero()) return r;
  for (const auto& [y, c] : f.terms) r.add_term(y, s * c);
  return r;
}

QuasiPolynomial qp_shift(const Vec& mu, const QuasiPolynomial& f) {
  QuasiPolynomial r = QuasiPolynomial::zero(f.sp);
  for (const auto& [y, c] : f.terms) r.add_term(add(y, mu), c);
  return r;
}

}  // namespace qp
