#ifndef QP_REP_HPP
#define QP_REP_HPP

#include "qp/quasi.hpp"

namespace qp {

// k_j for the affine node j (the k-variable of the gradient's length class)
Scalar k_scalar(const ModuleCtx& ctx, int j);

// product of two quasi-polynomials (exponent convolution); x^{alpha_0 vee}
// never appears formally, callers expand it as q_phi x^{-phi vee}
QuasiPolynomial qp_mul(const QuasiPolynomial& a, const QuasiPolynomial& b);

// truncated divided difference: ((1 - x^{-floor(Da_j(y)) a_j vee}) /
// (1 - x^{a_j vee})) x^y, extended linearly
QuasiPolynomial nabla(const ModuleCtx& ctx, int j, const QuasiPolynomial& f);

// pi(T_j^{sign}); sign -1 uses T_j^{-1} = T_j - k_j + k_j^{-1}
QuasiPolynomial act_T(const ModuleCtx& ctx, int j, int sign,
                      const QuasiPolynomial& f);
// T_{j_1} ... T_{j_l} applied as an operator product (last letter acts first);
// sign -1 applies the inverse of the whole product
QuasiPolynomial act_T_word(const ModuleCtx& ctx, const std::vector<int>& word,
                           int sign, QuasiPolynomial f);

// the t-twisted W-action: v by exponent reflection, tau(mu) by t_y^{-mu}
QuasiPolynomial act_w_t(const ModuleCtx& ctx, const WElem& w,
                        const QuasiPolynomial& f);

// pi(Y^mu) for mu in the coroot lattice, via a dominant decomposition
QuasiPolynomial act_Y(const ModuleCtx& ctx, const Vec& mu,
                      const QuasiPolynomial& f);

// pi(delta(T_j)): T_j for j >= 1, Y^{-phi vee} T_0 x^{-phi vee} for j = 0
QuasiPolynomial act_delta_T(const ModuleCtx& ctx, int j, int sign,
                            const QuasiPolynomial& f);
// delta(T_{j_1}) ... delta(T_{j_l}) as an operator product
QuasiPolynomial act_delta_T_word(const ModuleCtx& ctx,
                                 const std::vector<int>& word,
                                 QuasiPolynomial f);

// Y-intertwiner S_j^Y = delta(T_j)((Y^{-1})^{alpha_j vee} - 1) + k_j - k_j^{-1}
QuasiPolynomial act_SY(const ModuleCtx& ctx, int j, const QuasiPolynomial& f);
// S_{j_1}^Y ... S_{j_l}^Y as an operator product
QuasiPolynomial act_SY_word(const ModuleCtx& ctx, const std::vector<int>& word,
                            QuasiPolynomial f);

}  // namespace qp

#endif
