#ifndef QP_ROOT_DATUM_HPP
#define QP_ROOT_DATUM_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "qp/common.hpp"

namespace qp {

// Solve A x = b over the rationals (A square, invertible).
std::vector<Rat> solve_lin(std::vector<std::vector<Rat>> A, std::vector<Rat> b);

// Finite crystallographic root system with an explicit ambient realization.
// The ambient inner product is metric * (standard dot product); the scalar
// metric keeps coordinates rational for the models whose long roots would
// otherwise need irrational rescaling. Long roots have squared length
// 2/m_norm^2 once the global 1/m_norm rescaling is applied.
struct FiniteRoots {
  int N = 0;           // ambient dimension
  int rank = 0;
  Rat metric{1};       // g: <x,y> = g * dot(x,y)
  std::vector<Vec> simple;
  std::vector<Vec> pos;              // positive roots; pos[i] = simple[i] for i < rank
  std::vector<Vec> pos_coroot;
  std::vector<long long> q_exp;      // 2/||alpha||^2 per positive root
  std::vector<int> len_class;        // 0 = short, 1 = long; single-length systems use 0
  Vec highest;                       // dominant long root phi
  Vec highest_short;                 // dominant short root theta
  std::vector<Vec> fund_coweight;    // varpi_i^vee, alpha_j(varpi_i^vee) = delta_ij

  Rat ip(const Vec& a, const Vec& b) const { return metric * dot(a, b); }
  Rat pair(const Vec& root, const Vec& y) const { return ip(root, y); }
  Vec coroot(const Vec& root) const {
    return scale(Rat(2) / ip(root, root), root);
  }
  long long two_over_normsq(const Vec& root) const;
  Vec reflect(const Vec& y, const Vec& root) const {
    return sub(y, scale(pair(root, y), coroot(root)));
  }
  // index into pos for +-root; returns (index, sign)
  std::pair<int, int> find_root(const Vec& a) const;
  bool is_root(const Vec& a) const { return find_root(a).second != 0; }
  bool is_pos_root(const Vec& a) const {
    auto [i, s] = find_root(a);
    return s > 0;
  }
  int class_of(const Vec& root) const {
    auto [i, s] = find_root(root);
    if (s == 0) throw UnsupportedType("not a root");
    return len_class[i];
  }
  // expansion of y in the simple-root basis (y must lie in the span)
  std::vector<Rat> simple_coords(const Vec& y) const;
  // expansion of y in the simple-coroot basis
  std::vector<Rat> coroot_coords(const Vec& y) const;
  Vec from_coroot_coords(const std::vector<Rat>& c) const;

  // built by reflection closure from the simple roots
  static FiniteRoots close(int N, Rat metric, std::vector<Vec> simple);
};

// Affine root a = (Dalpha, level): a(y) = Dalpha(y) + level.
struct ARoot {
  Vec grad;
  Rat lvl;
  bool operator==(const ARoot& o) const { return grad == o.grad && lvl == o.lvl; }
};

struct RootDatum : FiniteRoots {
  char type = 'A';
  int m_norm = 1;
  int coxeter = 0;       // Coxeter number h
  int phi_level_m = 1;   // m(phi): lcm of coweight-coordinate denominators scale

  Rat aff_eval(const ARoot& a, const Vec& y) const {
    return pair(a.grad, y) + a.lvl;
  }
  bool aff_positive(const ARoot& a) const;
  ARoot simple_aff(int j) const {  // a_0 = (-phi, 1), a_i = (alpha_i, 0)
    if (j == 0) return ARoot{neg(highest), Rat(1)};
    return ARoot{simple[j - 1], Rat(0)};
  }
  // affine simple reflection on points of E
  Vec s_aff(int j, const Vec& y) const {
    if (j == 0) return add(reflect(y, highest), coroot(highest));
    return reflect(y, simple[j - 1]);
  }
  // roots alpha in Phi0+ with alpha(phi^vee) = 1, plus phi itself:
  // the inversion set of s_phi
  std::vector<Vec> inversions_s_phi() const;
  // reduced word of s_phi in the finite simple reflections
  std::vector<int> s_phi_word() const;

  std::string dump() const;

  static std::shared_ptr<const RootDatum> build(char type, int rank,
                                                int m_norm = 1);
};

using DatumPtr = std::shared_ptr<const RootDatum>;

}  // namespace qp

#endif
