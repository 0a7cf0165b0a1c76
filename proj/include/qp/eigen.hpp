#ifndef QP_EIGEN_HPP
#define QP_EIGEN_HPP

#include "qp/rep.hpp"

namespace qp {

enum class EMethod { Intertwiner, Solve };

// products over the inversion set Pi(w), evaluated at s_J t:
//   D:    prod (t^{a vee} - 1)
//   R:    prod (k_a t^{a vee} - k_a^{-1})
//   Nq:   prod (k_a^{-1} - k_a t^{a vee})(k_a^{-1} - k_a t^{-a vee})
//   Norm: prod (k_a^{-1} t^{a vee} - k_a) / (k_a t^{a vee} - k_a^{-1})
enum class ProdKind { D, R, Nq, Norm };

Scalar eval_products(const ModuleCtx& ctx, const WElem& w, ProdKind kind);

// m_y = delta(T_{w_y^{-1}}) applied to x^c; leading term k_{w_y}(c) x^y
QuasiPolynomial mpoly(const ModuleCtx& ctx, const Vec& y);

// monic eigenfunction E_y: x^y + lower-order terms, joint Y-eigenfunction
// with eigenvalue character (s_y t_y)^{-1}
QuasiPolynomial epoly(const ModuleCtx& ctx, const Vec& y,
                      EMethod method = EMethod::Solve);

// S_{w_y}^Y x^c / r_{w_y}(s_J t); proportional to E_y
QuasiPolynomial ppoly(const ModuleCtx& ctx, const Vec& y);

// pi(1_+) (sign > 0) or pi(1_-) (sign < 0) applied to f
QuasiPolynomial act_sym(const ModuleCtx& ctx, int sign,
                        const QuasiPolynomial& f);

// E_y^{J,+/-} = pi(1_{+/-}) epoly(y)
QuasiPolynomial sym_pm(const ModuleCtx& ctx, const Vec& y, int sign,
                       EMethod method = EMethod::Solve);

// character of the source module for projecting onto the face of dst:
// t = s_{J(c_source)}^{-1} s_{J'} t' with (J', t') from dst
TorusChar face_source_char(const ModuleCtx& dst, const Vec& c_source);

// module map x^{mu + v c} -> (kappa_v(c') / kappa_v(c)) x^{mu + v c'};
// requires J(src.c) subset of J(dst.c) and src.t = s_J^{-1} s_{J'} dst.t
QuasiPolynomial project_face(const ModuleCtx& src, const ModuleCtx& dst,
                             const QuasiPolynomial& f);

}  // namespace qp

#endif
