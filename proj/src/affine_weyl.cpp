#include "qp/affine_weyl.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace qp {

WElem WElem::identity(int N) {
  WElem w;
  w.mat.assign(N, Vec(N, Rat(0)));
  for (int i = 0; i < N; ++i) w.mat[i][i] = 1;
  w.tr.assign(N, Rat(0));
  return w;
}

bool WElem::is_identity() const {
  if (!is_zero_vec(tr)) return false;
  for (size_t i = 0; i < mat.size(); ++i)
    for (size_t j = 0; j < mat[i].size(); ++j)
      if (mat[i][j] != Rat(i == j ? 1 : 0)) return false;
  return true;
}

Vec WElem::apply_lin(const Vec& y) const {
  Vec r(mat.size(), Rat(0));
  for (size_t i = 0; i < mat.size(); ++i)
    r = add(r, scale(y[i], mat[i]));
  return r;
}

Vec WElem::apply(const Vec& y) const { return add(apply_lin(y), tr); }

WElem WElem::then(const WElem& first) const {
  WElem r;
  r.mat.reserve(mat.size());
  for (const auto& col : first.mat) r.mat.push_back(apply_lin(col));
  r.tr = apply(first.tr);
  return r;
}

WElem WElem::inverse() const {
  // finite parts are orthogonal for the scalar ambient metric
  int N = (int)mat.size();
  WElem r;
  r.mat.assign(N, Vec(N, Rat(0)));
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) r.mat[i][j] = mat[j][i];
  r.tr = neg(r.apply_lin(tr));
  return r;
}

ARoot WElem::apply_aff(const RootDatum& R, const ARoot& a) const {
  Vec g = apply_lin(a.grad);
  return ARoot{g, a.lvl - R.pair(g, tr)};
}

WElem finite_refl(const RootDatum& R, const Vec& root) {
  int N = R.N;
  WElem w = WElem::identity(N);
  for (int i = 0; i < N; ++i) {
    Vec ei(N, Rat(0));
    ei[i] = 1;
    w.mat[i] = R.reflect(ei, root);
  }
  return w;
}

WElem simple_refl(const RootDatum& R, int j) {
  if (j == 0) {
    WElem w = finite_refl(R, R.highest);
    w.tr = R.coroot(R.highest);
    return w;
  }
  return finite_refl(R, R.simple[j - 1]);
}

WElem translation(const RootDatum& R, const Vec& mu) {
  WElem w = WElem::identity(R.N);
  w.tr = mu;
  return w;
}

WElem word_elem(const RootDatum& R, const std::vector<int>& word) {
  WElem w = WElem::identity(R.N);
  for (int j : word) w = w.then(simple_refl(R, j));
  return w;
}

std::vector<ARoot> inversions(const RootDatum& R, const WElem& w) {
  long long bound = 1;
  for (const auto& a : R.pos) {
    Rat p = R.pair(a, w.tr);
    long long v = floor_rat(p < 0 ? -p : p) + 1;
    bound = std::max(bound, v + 1);
  }
  std::vector<ARoot> out;
  for (const auto& al : R.pos) {
    for (long long l = 0; l <= bound; ++l) {
      ARoot a{al, Rat(l)};
      if (!R.aff_positive(w.apply_aff(R, a))) out.push_back(a);
    }
    for (long long l = 1; l <= bound; ++l) {
      ARoot a{neg(al), Rat(l)};
      if (!R.aff_positive(w.apply_aff(R, a))) out.push_back(a);
    }
  }
  return out;
}

long long length(const RootDatum& R, const WElem& w) {
  return (long long)inversions(R, w).size();
}

long long length_translation_formula(const RootDatum& R, const WElem& w) {
  WElem vinv = WElem{w.mat, Vec(w.tr.size(), Rat(0))}.inverse();
  long long total = 0;
  for (const auto& al : R.pos) {
    Rat am = R.pair(al, w.tr);
    bool v_neg = !R.is_pos_root(vinv.apply_lin(al));
    Rat term = v_neg ? am - Rat(1) : am;
    if (term < 0) term = -term;
    total += term.numerator();  // integral for coroot-lattice translations
  }
  return total;
}

bool is_left_descent(const RootDatum& R, const WElem& w, int j) {
  ARoot a = w.inverse().apply_aff(R, R.simple_aff(j));
  return !R.aff_positive(a);
}

std::vector<int> reduced_word(const RootDatum& R, WElem w) {
  std::vector<int> word;
  while (!w.is_identity()) {
    int found = -1;
    for (int j = 0; j <= R.rank; ++j)
      if (is_left_descent(R, w, j)) {
        found = j;
        break;
      }
    if (found < 0) throw UnsupportedType("no descent for non-identity element");
    w = simple_refl(R, found).then(w);
    word.push_back(found);
  }
  return word;
}

std::vector<std::vector<int>> finite_weyl_words(const RootDatum& R) {
  std::map<WElem, std::vector<int>> seen;
  WElem id = WElem::identity(R.N);
  seen.emplace(id, std::vector<int>{});
  std::vector<WElem> frontier{id};
  while (!frontier.empty()) {
    std::vector<WElem> next;
    for (const auto& w : frontier)
      for (int i = 1; i <= R.rank; ++i) {
        WElem u = w.then(simple_refl(R, i));
        if (!seen.count(u)) {
          auto word = seen[w];
          word.push_back(i);
          seen.emplace(u, word);
          next.push_back(u);
        }
      }
    frontier = std::move(next);
  }
  std::vector<std::vector<int>> words;
  for (auto& [w, word] : seen) words.push_back(word);
  std::sort(words.begin(), words.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              return a.size() != b.size() ? a.size() < b.size() : a < b;
            });
  return words;
}

std::vector<int> finite_word_to_dominant(const RootDatum& R, Vec& y) {
  std::vector<int> applied;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 1; i <= R.rank; ++i)
      if (R.pair(R.simple[i - 1], y) < 0) {
        y = R.reflect(y, R.simple[i - 1]);
        applied.push_back(i);
        moved = true;
        break;
      }
  }
  std::reverse(applied.begin(), applied.end());
  return applied;  // word_elem(word) applied to the original y is dominant
}

std::vector<int> finite_word_to_antidominant(const RootDatum& R, Vec& y) {
  std::vector<int> applied;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 1; i <= R.rank; ++i)
      if (R.pair(R.simple[i - 1], y) > 0) {
        y = R.reflect(y, R.simple[i - 1]);
        applied.push_back(i);
        moved = true;
        break;
      }
  }
  std::reverse(applied.begin(), applied.end());
  return applied;
}

OrbitPoint orbit_normal_form(const RootDatum& R, const Vec& y) {
  OrbitPoint p;
  Vec z = y;
  std::vector<int> word;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int j = 0; j <= R.rank; ++j)
      if (R.aff_eval(R.simple_aff(j), z) < 0) {
        z = R.s_aff(j, z);
        word.push_back(j);
        moved = true;
        break;
      }
  }
  p.c = z;
  p.word = word;
  p.w = word_elem(R, word);
  for (int j = 0; j <= R.rank; ++j)
    if (R.aff_eval(R.simple_aff(j), z) == 0) p.J.push_back(j);
  return p;
}

namespace {
bool leq_rec(const RootDatum& R, WElem u, const std::vector<int>& word,
             size_t pos) {
  while (true) {
    if (u.is_identity()) return true;
    if (pos == word.size()) return false;
    int j = word[pos++];
    if (is_left_descent(R, u, j)) u = simple_refl(R, j).then(u);
  }
}
}  // namespace

bool bruhat_leq(const RootDatum& R, const WElem& u, const WElem& w) {
  return leq_rec(R, u, reduced_word(R, w), 0);
}

std::vector<Vec> lower_set(const RootDatum& R, const Vec& y) {
  OrbitPoint p = orbit_normal_form(R, y);
  size_t L = p.word.size();
  if (L > 25) throw UnsupportedType("lower set too large for subword scan");
  std::set<Vec> pts;
  for (size_t mask = 0; mask < (size_t(1) << L); ++mask) {
    Vec z = p.c;
    for (size_t i = L; i-- > 0;)
      if (mask & (size_t(1) << i)) z = R.s_aff(p.word[i], z);
    pts.insert(z);
  }
  std::vector<std::pair<long long, Vec>> order;
  for (const auto& z : pts)
    order.emplace_back((long long)orbit_normal_form(R, z).word.size(), z);
  std::sort(order.begin(), order.end());
  std::vector<Vec> out;
  for (auto& [l, z] : order) out.push_back(z);
  return out;
}

std::vector<Vec> finite_inversions(const RootDatum& R, const WElem& v) {
  std::vector<Vec> out;
  for (const auto& al : R.pos)
    if (std::find(R.pos.begin(), R.pos.end(), v.apply_lin(al)) ==
        R.pos.end())
      out.push_back(al);
  return out;
}

bool prec_alpha_step(const RootDatum& R, const Vec& y, const Vec& z) {
  long long bound = 1;
  for (const auto& al : R.pos) {
    for (const Vec* pt : {&z, &y}) {
      Rat p = R.pair(al, *pt);
      if (p < 0) p = -p;
      bound = std::max(bound, floor_rat(p) + 2);
    }
  }
  for (const auto& al : R.pos) {
    for (int sgn : {1, -1}) {
      Vec g = sgn > 0 ? al : neg(al);
      for (long long l = (sgn > 0 ? 0 : 1); l <= bound; ++l) {
        ARoot a{g, Rat(l)};
        Rat az = R.aff_eval(a, z);
        Vec img = sub(z, scale(az, R.coroot(g)));
        if (img != y) continue;
        Rat ay = R.pair(g, y), azl = R.pair(g, z);
        Rat aay = ay < 0 ? -ay : ay, aaz = azl < 0 ? -azl : azl;
        if (aay < aaz) return true;
        if (ay == -azl && ay > 0) return true;
      }
    }
  }
  return false;
}

}  // namespace qp
