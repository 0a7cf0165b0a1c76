#include "qp/root_datum.hpp"

#include <algorithm>
#include <set>

namespace qp {

std::vector<Rat> solve_lin(std::vector<std::vector<Rat>> A,
                           std::vector<Rat> b) {
  int n = (int)A.size();
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (A[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) throw UnsupportedType("singular linear system");
    std::swap(A[col], A[piv]);
    std::swap(b[col], b[piv]);
    Rat d = A[col][col];
    for (int j = col; j < n; ++j) A[col][j] /= d;
    b[col] /= d;
    for (int r = 0; r < n; ++r) {
      if (r == col || A[r][col] == 0) continue;
      Rat f = A[r][col];
      for (int j = col; j < n; ++j) A[r][j] -= f * A[col][j];
      b[r] -= f * b[col];
    }
  }
  return b;
}

long long FiniteRoots::two_over_normsq(const Vec& root) const {
  Rat q = Rat(2) / ip(root, root);
  if (!is_int(q))
    throw UnsupportedType("2/||alpha||^2 not integral in this realization");
  return q.numerator();
}

std::pair<int, int> FiniteRoots::find_root(const Vec& a) const {
  for (int i = 0; i < (int)pos.size(); ++i) {
    if (pos[i] == a) return {i, 1};
    if (neg(pos[i]) == a) return {i, -1};
  }
  return {-1, 0};
}

std::vector<Rat> FiniteRoots::simple_coords(const Vec& y) const {
  std::vector<std::vector<Rat>> G(rank, std::vector<Rat>(rank));
  std::vector<Rat> b(rank);
  for (int i = 0; i < rank; ++i) {
    for (int j = 0; j < rank; ++j) G[i][j] = ip(simple[i], simple[j]);
    b[i] = ip(simple[i], y);
  }
  return solve_lin(std::move(G), std::move(b));
}

std::vector<Rat> FiniteRoots::coroot_coords(const Vec& y) const {
  std::vector<std::vector<Rat>> G(rank, std::vector<Rat>(rank));
  std::vector<Rat> b(rank);
  for (int i = 0; i < rank; ++i) {
    Vec ci = coroot(simple[i]);
    for (int j = 0; j < rank; ++j) G[i][j] = ip(ci, coroot(simple[j]));
    b[i] = ip(ci, y);
  }
  return solve_lin(std::move(G), std::move(b));
}

Vec FiniteRoots::from_coroot_coords(const std::vector<Rat>& c) const {
  Vec y(N, Rat(0));
  for (int i = 0; i < rank; ++i) y = add(y, scale(c[i], coroot(simple[i])));
  return y;
}

FiniteRoots FiniteRoots::close(int N, Rat metric, std::vector<Vec> simple) {
  FiniteRoots R;
  R.N = N;
  R.metric = metric;
  R.rank = (int)simple.size();
  R.simple = std::move(simple);

  std::set<Vec> all(R.simple.begin(), R.simple.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Vec> cur(all.begin(), all.end());
    for (const auto& a : cur)
      for (const auto& s : R.simple) {
        Vec b = R.reflect(a, s);
        if (all.insert(b).second) grew = true;
        Vec c = R.reflect(neg(a), s);
        if (all.insert(c).second) grew = true;
      }
  }
  // positivity: nonnegative coordinates in the simple-root basis
  std::vector<std::pair<Rat, Vec>> positives;  // (height, root)
  for (const auto& a : all) {
    auto co = R.simple_coords(a);
    bool nng = true, npos = true;
    Rat h(0);
    for (const auto& c : co) {
      if (c < 0) nng = false;
      if (c > 0) npos = false;
      h += c;
    }
    if (!nng && !npos)
      throw UnsupportedType("reflection closure produced a non-root");
    if (nng) positives.emplace_back(h, a);
  }
  std::sort(positives.begin(), positives.end());
  R.pos = R.simple;
  for (auto& [h, a] : positives)
    if (std::find(R.pos.begin(), R.pos.end(), a) == R.pos.end())
      R.pos.push_back(a);

  Rat maxn(0), minn(0);
  bool first = true;
  for (const auto& a : R.pos) {
    Rat n = R.ip(a, a);
    if (first || n > maxn) maxn = n;
    if (first || n < minn) minn = n;
    first = false;
  }
  for (const auto& a : R.pos) {
    R.pos_coroot.push_back(R.coroot(a));
    R.q_exp.push_back(R.two_over_normsq(a));
    R.len_class.push_back(R.ip(a, a) == maxn && maxn != minn ? 1 : 0);
  }
  for (int i = 0; i < (int)R.pos.size(); ++i) {
    bool dom = true;
    for (int j = 0; j < R.rank; ++j)
      if (R.pair(R.simple[j], R.coroot(R.pos[i])) < 0) dom = false;
    if (dom) {
      if (R.ip(R.pos[i], R.pos[i]) == maxn) R.highest = R.pos[i];
      if (R.ip(R.pos[i], R.pos[i]) == minn) R.highest_short = R.pos[i];
    }
  }
  // fundamental coweights from the inverse Cartan matrix
  std::vector<std::vector<Rat>> A(R.rank, std::vector<Rat>(R.rank));
  for (int i = 0; i < R.rank; ++i)
    for (int j = 0; j < R.rank; ++j)
      A[i][j] = R.pair(R.simple[i], R.coroot(R.simple[j]));
  for (int i = 0; i < R.rank; ++i) {
    std::vector<Rat> e(R.rank, Rat(0));
    e[i] = 1;
    auto c = solve_lin(A, e);
    Vec w(R.N, Rat(0));
    for (int kk = 0; kk < R.rank; ++kk)
      w = add(w, scale(c[kk], R.coroot(R.simple[kk])));
    R.fund_coweight.push_back(w);
  }
  return R;
}

bool RootDatum::aff_positive(const ARoot& a) const {
  if (a.lvl != 0) return a.lvl > 0;
  return is_pos_root(a.grad);
}

std::vector<Vec> RootDatum::inversions_s_phi() const {
  std::vector<Vec> out;
  Vec pc = coroot(highest);
  for (const auto& a : pos)
    if (pair(a, pc) == 1) out.push_back(a);
  out.push_back(highest);
  return out;
}

std::vector<int> RootDatum::s_phi_word() const {
  // greedy descent of s_phi(p) to the regular dominant point p
  Vec p(N, Rat(0));
  for (int i = 0; i < rank; ++i)
    p = add(p, scale(Rat(i + 1), fund_coweight[i]));
  Vec y = reflect(p, highest);
  std::vector<int> word;
  while (y != p) {
    int found = -1;
    for (int i = 0; i < rank; ++i)
      if (pair(simple[i], y) < 0) {
        found = i;
        break;
      }
    if (found < 0) throw UnsupportedType("descent failed");
    y = reflect(y, simple[found]);
    word.push_back(found + 1);
  }
  return word;
}

std::string RootDatum::dump() const {
  std::string s = std::string(1, type) + std::to_string(rank) +
                  " m_norm=" + std::to_string(m_norm) +
                  " h=" + std::to_string(coxeter) + " metric=" +
                  rat_str(metric) + "\n";
  for (int i = 0; i < (int)pos.size(); ++i) {
    s += "root " + vec_str(pos[i]) + " coroot " + vec_str(pos_coroot[i]) +
         " class " + (len_class[i] ? "lg" : "sh") + " qexp " +
         std::to_string(q_exp[i]) + "\n";
  }
  s += "phi " + vec_str(highest) + "\n";
  s += "theta " + vec_str(highest_short) + "\n";
  return s;
}

std::shared_ptr<const RootDatum> RootDatum::build(char type, int rank,
                                                  int m_norm) {
  if (m_norm < 1) throw UnsupportedType("m_norm must be >= 1");
  int N;
  Rat g(1);
  std::vector<Vec> simple;
  auto e = [&](int i) {
    Vec v(N, Rat(0));
    v[i] = 1;
    return v;
  };
  int h = 0;
  switch (type) {
    case 'A': {
      if (rank < 1) throw UnsupportedType("A_r needs r >= 1");
      N = rank + 1;
      for (int i = 0; i < rank; ++i) simple.push_back(sub(e(i), e(i + 1)));
      h = rank + 1;
      break;
    }
    case 'B': {
      if (rank < 2) throw UnsupportedType("B_r needs r >= 2");
      N = rank;
      for (int i = 0; i + 1 < rank; ++i) simple.push_back(sub(e(i), e(i + 1)));
      simple.push_back(e(rank - 1));
      h = 2 * rank;
      break;
    }
    case 'C': {
      if (rank < 2) throw UnsupportedType("C_r needs r >= 2");
      N = rank;
      g = Rat(1, 2);
      for (int i = 0; i + 1 < rank; ++i) simple.push_back(sub(e(i), e(i + 1)));
      simple.push_back(scale(Rat(2), e(rank - 1)));
      h = 2 * rank;
      break;
    }
    case 'D': {
      if (rank < 3) throw UnsupportedType("D_r needs r >= 3");
      N = rank;
      for (int i = 0; i + 1 < rank; ++i) simple.push_back(sub(e(i), e(i + 1)));
      simple.push_back(add(e(rank - 2), e(rank - 1)));
      h = 2 * rank - 2;
      break;
    }
    case 'E': {
      if (rank < 6 || rank > 8) throw UnsupportedType("E_r needs r in 6..8");
      N = 8;
      Vec a1(N, Rat(-1, 2));
      a1[0] = Rat(1, 2);
      a1[7] = Rat(1, 2);
      for (int i = 1; i < 7; ++i) a1[i] = Rat(-1, 2);
      simple.push_back(a1);
      simple.push_back(add(e(0), e(1)));
      simple.push_back(sub(e(1), e(0)));
      for (int i = 2; i < rank - 1; ++i) simple.push_back(sub(e(i), e(i - 1)));
      h = rank == 6 ? 12 : rank == 7 ? 18 : 30;
      break;
    }
    case 'F': {
      if (rank != 4) throw UnsupportedType("F type has rank 4");
      N = 4;
      simple.push_back(sub(e(1), e(2)));
      simple.push_back(sub(e(2), e(3)));
      simple.push_back(e(3));
      Vec a4(N, Rat(-1, 2));
      a4[0] = Rat(1, 2);
      simple.push_back(a4);
      h = 12;
      break;
    }
    case 'G': {
      if (rank != 2) throw UnsupportedType("G type has rank 2");
      N = 3;
      g = Rat(1, 3);
      simple.push_back(sub(e(0), e(1)));
      Vec a2 = add(sub(e(1), e(0)), sub(e(2), e(0)));
      simple.push_back(a2);
      h = 6;
      break;
    }
    default:
      throw UnsupportedType(std::string("unknown type ") + type);
  }
  if (m_norm > 1)
    for (auto& s : simple) s = scale(Rat(1, m_norm), s);
  auto R = std::make_shared<RootDatum>();
  static_cast<FiniteRoots&>(*R) = FiniteRoots::close(N, g, simple);
  R->type = type;
  R->rank = rank;
  R->m_norm = m_norm;
  R->coxeter = h;
  return R;
}

}  // namespace qp
