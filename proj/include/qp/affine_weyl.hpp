#ifndef QP_AFFINE_WEYL_HPP
#define QP_AFFINE_WEYL_HPP

#include <optional>

#include "qp/root_datum.hpp"

namespace qp {

// Element of W = W0 x Q^vee acting on E as y -> M y + tr, with M the
// orthogonal finite part and tr a coroot-lattice translation.
struct WElem {
  std::vector<Vec> mat;  // columns: images of the standard basis
  Vec tr;

  static WElem identity(int N);
  bool is_identity() const;
  Vec apply(const Vec& y) const;
  Vec apply_lin(const Vec& y) const;  // finite part only
  WElem then(const WElem& first) const;  // (*this) o first
  WElem inverse() const;
  bool operator==(const WElem& o) const { return mat == o.mat && tr == o.tr; }
  bool operator<(const WElem& o) const {
    return mat != o.mat ? mat < o.mat : tr < o.tr;
  }
  // image of an affine root: (w a)(y) = a(w^{-1} y)
  ARoot apply_aff(const RootDatum& R, const ARoot& a) const;
};

WElem simple_refl(const RootDatum& R, int j);          // j in [0, r]
WElem finite_refl(const RootDatum& R, const Vec& root);
WElem translation(const RootDatum& R, const Vec& mu);
WElem word_elem(const RootDatum& R, const std::vector<int>& word);

// Inversion set Pi(w) = Phi+ cap w^{-1} Phi-, by level scan bounded by the
// translation part; l(w) = #Pi(w).
std::vector<ARoot> inversions(const RootDatum& R, const WElem& w);
long long length(const RootDatum& R, const WElem& w);
// closed form: sum over Phi0+ of |alpha(mu) - chi(v^-1 alpha in Phi0-)|
long long length_translation_formula(const RootDatum& R, const WElem& w);

bool is_left_descent(const RootDatum& R, const WElem& w, int j);
std::vector<int> reduced_word(const RootDatum& R, WElem w);

// Finite Weyl group, as reduced words in [1, r].
std::vector<std::vector<int>> finite_weyl_words(const RootDatum& R);
// minimal g with g y = dominant (resp. antidominant) representative
std::vector<int> finite_word_to_dominant(const RootDatum& R, Vec& y);
std::vector<int> finite_word_to_antidominant(const RootDatum& R, Vec& y);

// Pi(v) = {alpha in Phi0+ : v alpha in Phi0-}, finite part of v only
std::vector<Vec> finite_inversions(const RootDatum& R, const WElem& v);

struct OrbitPoint {
  Vec c;                   // alcove representative c_y
  std::vector<int> word;   // reduced word of w_y (left-to-right letters)
  WElem w;                 // w_y, minimal with w_y c = y
  std::vector<int> J;      // J(c_y): vanishing simple affine roots at c_y
};

// y -> (c_y, w_y, J(c_y)) by greedy descent into the closed alcove.
OrbitPoint orbit_normal_form(const RootDatum& R, const Vec& y);

bool bruhat_leq(const RootDatum& R, const WElem& u, const WElem& w);

// {z in O_c : w_z <=_B w_y} by subword enumeration, sorted by increasing
// l(w_z) then coordinates; includes y itself.
std::vector<Vec> lower_set(const RootDatum& R, const Vec& y);

// covering-style relation z prec_alpha y used as an order oracle
bool prec_alpha_step(const RootDatum& R, const Vec& y, const Vec& z);

}  // namespace qp

#endif
