#include "qp/scalar.hpp"

#include <algorithm>
#include <cctype>

namespace qp {

namespace {

using boost::multiprecision::gcd;

// divide out the monomial content so all exponents are >= 0 with min 0;
// returns the shift applied (the same shift keeps a quotient consistent)
Mono strip_mono(Poly& p) {
  int nv = (int)p.terms.begin()->first.size();
  Mono sh(nv, 0);
  bool any = false;
  for (int v = 0; v < nv; ++v) {
    int32_t lo, hi;
    poly_var_range(p, v, lo, hi);
    sh[v] = -lo;
    if (lo != 0) any = true;
  }
  if (any) p = poly_shift(p, sh);
  return sh;
}

// division that may fail (non-divisible leading coefficient or monomial);
// quotient valid only when true is returned
bool poly_trydiv(Poly a, const Poly& b, Poly& q, uint64_t mod) {
  q = Poly();
  const auto& ltb = *b.terms.rbegin();
  uint64_t ib = mod ? fp_inv((uint64_t)ltb.second) : 0;
  const size_t cap = 64 + 8 * a.terms.size() * b.terms.size();
  while (!a.zero()) {
    const auto& lta = *a.terms.rbegin();
    if (!mod && lta.second % ltb.second != 0) return false;
    Mono qm(lta.first);
    for (size_t i = 0; i < qm.size(); ++i) {
      qm[i] -= ltb.first[i];
      if (qm[i] < 0) return false;
    }
    Int qc = mod ? Int(fp_mul((uint64_t)lta.second, ib))
                 : lta.second / ltb.second;
    for (const auto& [m, c] : b.terms) {
      Mono n(m);
      for (size_t i = 0; i < n.size(); ++i) n[i] += qm[i];
      a.add_term(n, -(qc * c), mod);
    }
    q.terms.emplace(std::move(qm), std::move(qc));
    if (q.terms.size() > cap) return false;
  }
  return true;
}

Int int_content(const Poly& p) {
  Int g = 0;
  for (const auto& [m, c] : p.terms) g = gcd(g, c);
  return g;
}

}  // namespace

Scalar::Scalar(SpecPtr spec, Poly num, Poly den)
    : spec_(std::move(spec)), num_(std::move(num)) {
  push_factor(std::move(den));
  canonicalize();
}

Scalar::Scalar(SpecPtr spec, Poly num, std::vector<Poly> fac, Int dc)
    : spec_(std::move(spec)), num_(std::move(num)), dc_(std::move(dc)) {
  dfac_.reserve(fac.size());
  for (auto& f : fac) push_factor(std::move(f));
  canonicalize();
}

// normalize one denominator factor, moving units into num_ / dc_
void Scalar::push_factor(Poly f) {
  if (f.zero()) throw DivisionByZero("zero denominator");
  uint64_t m = mod();
  Mono sh = strip_mono(f);
  bool shifted = false;
  for (int32_t e : sh)
    if (e != 0) shifted = true;
  if (shifted && !num_.zero()) num_ = poly_shift(num_, sh);
  if (m) {
    uint64_t lc = (uint64_t)f.terms.rbegin()->second;
    if (lc != 1) {
      uint64_t il = fp_inv(lc);
      for (auto& [mo, c] : f.terms) c = Int(fp_mul((uint64_t)c, il));
      for (auto& [mo, c] : num_.terms) c = Int(fp_mul((uint64_t)c, il));
    }
  } else {
    Int cf = int_content(f);
    if (f.terms.rbegin()->second < 0) cf = -cf;
    if (cf != 1) {
      for (auto& [mo, c] : f.terms) c /= cf;
      if (cf < 0) {
        for (auto& [mo, c] : num_.terms) c = -c;
        cf = -cf;
      }
      dc_ *= cf;
    }
  }
  if (f.terms.size() == 1) return;  // reduced to a unit
  dfac_.push_back(std::move(f));
}

void Scalar::canonicalize() {
  uint64_t m = mod();
  if (num_.zero()) {
    dfac_.clear();
    dc_ = 1;
    return;
  }
  // cancel factors that divide the numerator
  if (!dfac_.empty()) {
    Mono sh = strip_mono(num_);
    bool progress = true;
    while (progress && !dfac_.empty()) {
      progress = false;
      for (size_t i = 0; i < dfac_.size(); ++i) {
        Poly q;
        if (num_.terms.size() >= dfac_[i].terms.size() &&
            poly_trydiv(num_, dfac_[i], q, m)) {
          num_ = std::move(q);
          dfac_.erase(dfac_.begin() + i);
          progress = true;
          break;
        }
      }
    }
    for (auto& e : sh) e = -e;
    bool shifted = false;
    for (int32_t e : sh)
      if (e != 0) shifted = true;
    if (shifted) num_ = poly_shift(num_, sh);
  }
  if (m == 0 && dc_ != 1) {
    Int g = gcd(int_content(num_), dc_);
    if (g > 1) {
      for (auto& [mo, c] : num_.terms) c /= g;
      dc_ /= g;
    }
  }
  std::sort(dfac_.begin(), dfac_.end(),
            [](const Poly& a, const Poly& b) { return a.terms < b.terms; });
}

Scalar Scalar::zero(SpecPtr sp) {
  int nv = sp->nvars();
  uint64_t mod = sp->backend == Backend::Prime ? QP_PRIME : 0;
  return Scalar(sp, Poly(), Poly::constant(1, nv, mod));
}

Scalar Scalar::one(SpecPtr sp) { return integer(sp, 1); }

Scalar Scalar::integer(SpecPtr sp, long long n) {
  int nv = sp->nvars();
  uint64_t mod = sp->backend == Backend::Prime ? QP_PRIME : 0;
  return Scalar(sp, Poly::constant(n, nv, mod), Poly::constant(1, nv, mod));
}

Scalar Scalar::monomial(SpecPtr sp, int var, int32_t e) {
  int nv = sp->nvars();
  uint64_t mod = sp->backend == Backend::Prime ? QP_PRIME : 0;
  Mono m(nv, 0);
  m[var] = e;
  return Scalar(sp, Poly::monomial(1, m, mod), Poly::constant(1, nv, mod));
}

Scalar Scalar::q_power(SpecPtr sp, const Rat& e) {
  Rat a = e * sp->D;
  if (!is_int(a))
    throw DenominatorOverflow("q-exponent " + rat_str(e) +
                              " not representable with D=" +
                              std::to_string(sp->D));
  long long n = a.numerator();
  if (n < INT32_MIN || n > INT32_MAX)
    throw DenominatorOverflow("q-exponent too large");
  return monomial(sp, VAR_QROOT, (int32_t)n);
}

Poly Scalar::den() const {
  uint64_t m = mod();
  Poly d = Poly::constant(dc_, spec_->nvars(), m);
  for (const auto& f : dfac_) d = poly_mul(d, f, m);
  return d;
}

bool Scalar::is_one() const {
  if (!dfac_.empty() || dc_ != 1 || num_.terms.size() != 1) return false;
  const auto& [m, c] = *num_.terms.begin();
  if (c != 1) return false;
  for (int32_t e : m)
    if (e != 0) return false;
  return true;
}

namespace {

// lcm-style merge of two sorted factor lists; ex1/ex2 collect the factors
// missing from the respective side
void merge_factors(const std::vector<Poly>& a, const std::vector<Poly>& b,
                   std::vector<Poly>& merged, std::vector<const Poly*>& ex1,
                   std::vector<const Poly*>& ex2) {
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].terms == b[j].terms) {
      merged.push_back(a[i]);
      ++i;
      ++j;
    } else if (a[i].terms < b[j].terms) {
      merged.push_back(a[i]);
      ex2.push_back(&a[i]);
      ++i;
    } else {
      merged.push_back(b[j]);
      ex1.push_back(&b[j]);
      ++j;
    }
  }
  for (; i < a.size(); ++i) {
    merged.push_back(a[i]);
    ex2.push_back(&a[i]);
  }
  for (; j < b.size(); ++j) {
    merged.push_back(b[j]);
    ex1.push_back(&b[j]);
  }
}

}  // namespace

Scalar Scalar::operator+(const Scalar& o) const {
  uint64_t m = mod();
  if (dfac_ == o.dfac_ && dc_ == o.dc_)
    return Scalar(spec_, poly_add(num_, o.num_, m), dfac_, dc_);
  std::vector<Poly> merged;
  std::vector<const Poly*> ex1, ex2;
  merge_factors(dfac_, o.dfac_, merged, ex1, ex2);
  Int g = m ? Int(1) : gcd(dc_, o.dc_);
  Int l = dc_ / g * o.dc_;
  Poly n1 = poly_mul(num_, Poly::constant(o.dc_ / g, spec_->nvars(), m), m);
  for (const Poly* f : ex1) n1 = poly_mul(n1, *f, m);
  Poly n2 = poly_mul(o.num_, Poly::constant(dc_ / g, spec_->nvars(), m), m);
  for (const Poly* f : ex2) n2 = poly_mul(n2, *f, m);
  return Scalar(spec_, poly_add(n1, n2, m), std::move(merged), std::move(l));
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  uint64_t m = mod();
  std::vector<Poly> fac = dfac_;
  fac.insert(fac.end(), o.dfac_.begin(), o.dfac_.end());
  return Scalar(spec_, poly_mul(num_, o.num_, m), std::move(fac),
                dc_ * o.dc_);
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inv(); }

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.num_ = poly_neg(r.num_, mod());
  return r;
}

Scalar Scalar::inv() const {
  if (is_zero()) throw DivisionByZero("inverse of zero scalar");
  uint64_t m = mod();
  Poly n = Poly::constant(dc_, spec_->nvars(), m);
  for (const auto& f : dfac_) n = poly_mul(n, f, m);
  return Scalar(spec_, std::move(n), num_);
}

Scalar Scalar::pow(long long e) const {
  Scalar base = e < 0 ? inv() : *this;
  unsigned long long n = e < 0 ? -(unsigned long long)e : (unsigned long long)e;
  Scalar r = one(spec_);
  while (n) {
    if (n & 1) r *= base;
    if (n >>= 1) base *= base;
  }
  return r;
}

bool Scalar::operator==(const Scalar& o) const {
  if (num_.zero()) return o.num_.zero();
  if (o.num_.zero()) return false;
  if (dfac_ == o.dfac_ && dc_ == o.dc_) return poly_eq(num_, o.num_);
  return (*this - o).is_zero();
}

Scalar Scalar::specialize(SpecPtr prime_spec) const {
  Poly n = poly_eval_assigned(num_, *prime_spec);
  Poly d = Poly::constant(((dc_ % QP_PRIME) + QP_PRIME) % QP_PRIME,
                          prime_spec->nvars(), QP_PRIME);
  for (const auto& f : dfac_) {
    Poly fi = poly_eval_assigned(f, *prime_spec);
    if (fi.zero())
      throw UnluckySpecialization("denominator vanished at the sample point");
    d = poly_mul(d, fi, QP_PRIME);
  }
  if (d.zero())
    throw UnluckySpecialization("denominator vanished at the sample point");
  return Scalar(prime_spec, std::move(n), std::move(d));
}

Scalar Scalar::whittaker_value() const {
  if (is_zero()) return *this;
  int32_t ln, hn, lf, hf;
  poly_var_range(num_, VAR_QROOT, ln, hn);
  int32_t hd = 0;
  for (const auto& f : dfac_) {
    poly_var_range(f, VAR_QROOT, lf, hf);
    hd += hf;
  }
  if (hn > hd) throw PoleAtInfinity("degree in q-root: numerator " +
                                    std::to_string(hn) + " > denominator " +
                                    std::to_string(hd));
  if (hn < hd) return zero(spec_);
  uint64_t m = mod();
  Poly dtop = Poly::constant(dc_, spec_->nvars(), m);
  for (const auto& f : dfac_) {
    poly_var_range(f, VAR_QROOT, lf, hf);
    dtop = poly_mul(dtop, poly_coeff_of_qroot(f, hf), m);
  }
  return Scalar(spec_, poly_coeff_of_qroot(num_, hn), std::move(dtop));
}

Scalar Scalar::limit_var_zero(int v) const {
  if (is_zero()) return *this;
  int32_t ln, hn;
  poly_var_range(num_, v, ln, hn);
  // factors carry no monomial content, so the denominator's low exponent
  // in v is zero
  if (ln < 0) throw PoleAtInfinity("pole at " + spec_->var_name(v) + " = 0");
  if (ln > 0) return zero(spec_);
  Poly n;
  for (const auto& [mo, c] : num_.terms)
    if (mo[v] == 0) n.terms.emplace(mo, c);
  std::vector<Poly> fac;
  fac.reserve(dfac_.size());
  for (const auto& f : dfac_) {
    Poly fl;
    for (const auto& [mo, c] : f.terms)
      if (mo[v] == 0) fl.terms.emplace(mo, c);
    fac.push_back(std::move(fl));
  }
  return Scalar(spec_, std::move(n), std::move(fac), dc_);
}

// --- serialization ---

std::string poly_str(const Poly& p, const ParamSpec& sp) {
  if (p.zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : p.terms) {
    if (!first) s += " + ";
    first = false;
    s += c.str();
    for (int v = 0; v < sp.nvars(); ++v) {
      if (m[v] == 0) continue;
      if (v == VAR_QROOT) {
        long long g = std::gcd((long long)std::abs(m[v]), (long long)sp.D);
        long long a = m[v] / g, b = sp.D / g;
        s += " * q^";
        if (b == 1)
          s += std::to_string(a);
        else
          s += "(" + std::to_string(a) + "/" + std::to_string(b) + ")";
      } else {
        s += " * " + sp.var_name(v) + "^" + std::to_string(m[v]);
      }
    }
  }
  return s;
}

std::string Scalar::str() const {
  std::string n = poly_str(num_, *spec_);
  if (dfac_.empty() && dc_ == 1) return n;
  return "(" + n + ") / (" + poly_str(den(), *spec_) + ")";
}

namespace {

struct Lexer {
  const std::string& s;
  size_t i = 0;
  explicit Lexer(const std::string& str) : s(str) {}
  void skip() {
    while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
  }
  bool eof() {
    skip();
    return i >= s.size();
  }
  char peek() {
    skip();
    return i < s.size() ? s[i] : '\0';
  }
  bool eat(char c) {
    skip();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  long long read_ll() {
    skip();
    size_t j = i;
    if (j < s.size() && (s[j] == '-' || s[j] == '+')) ++j;
    size_t k = j;
    while (k < s.size() && std::isdigit((unsigned char)s[k])) ++k;
    if (k == j) throw ParseError("expected integer at position " +
                                 std::to_string(i) + " in scalar string");
    long long v = std::stoll(s.substr(i, k - i));
    i = k;
    return v;
  }
  Int read_int() {
    skip();
    size_t j = i;
    if (j < s.size() && (s[j] == '-' || s[j] == '+')) ++j;
    size_t k = j;
    while (k < s.size() && std::isdigit((unsigned char)s[k])) ++k;
    if (k == j) throw ParseError("expected integer at position " +
                                 std::to_string(i));
    Int v(s.substr(i, k - i));
    i = k;
    return v;
  }
  std::string read_name() {
    skip();
    size_t k = i;
    while (k < s.size() &&
           (std::isalnum((unsigned char)s[k]) || s[k] == '_'))
      ++k;
    std::string n = s.substr(i, k - i);
    i = k;
    return n;
  }
};

int var_index(const ParamSpec& sp, const std::string& n) {
  if (n == "q" || n == "qroot") return VAR_QROOT;
  if (n == "vsh") return VAR_VSH;
  if (n == "vlg") return VAR_VLG;
  if (n.size() > 2 && n[0] == 'z' && n[1] == '_') {
    int k = std::stoi(n.substr(2));
    if (k >= 1 && k <= sp.nz) return 2 + k;
  }
  if (n.size() > 2 && n[0] == 'h' && n[1] == '_') {
    int k = std::stoi(n.substr(2));
    if (k >= 1 && k <= sp.nh) return 2 + sp.nz + k;
  }
  throw ParseError("unknown variable '" + n + "'");
}

Poly parse_poly(Lexer& lx, const ParamSpec& sp, uint64_t mod) {
  Poly p;
  bool first = true;
  while (true) {
    int sign = 1;
    if (!first) {
      if (lx.eat('+')) {
      } else if (lx.eat('-')) {
        sign = -1;
      } else {
        break;
      }
    } else if (lx.eat('-')) {
      sign = -1;
    }
    first = false;
    Int coeff(1);
    Mono m(sp.nvars(), 0);
    bool have_factor = false;
    while (true) {
      char c = lx.peek();
      if (std::isdigit((unsigned char)c) ||
          ((c == '-' || c == '+') && !have_factor)) {
        coeff *= lx.read_int();
      } else if (std::isalpha((unsigned char)c)) {
        int v = var_index(sp, lx.read_name());
        long long e = 1;
        if (lx.eat('^')) {
          if (lx.eat('(')) {
            long long a = lx.read_ll();
            if (!lx.eat('/')) throw ParseError("expected '/' in exponent");
            long long b = lx.read_ll();
            if (!lx.eat(')')) throw ParseError("expected ')' in exponent");
            if (v != VAR_QROOT)
              throw ParseError("fractional exponent on " + sp.var_name(v));
            if ((a * sp.D) % b != 0)
              throw DenominatorOverflow("q-exponent " + std::to_string(a) +
                                        "/" + std::to_string(b) +
                                        " incompatible with D=" +
                                        std::to_string(sp.D));
            e = a * sp.D / b;
          } else {
            e = lx.read_ll();
            if (v == VAR_QROOT) e *= sp.D;  // plain q^n is an integer q-power
          }
        } else if (v == VAR_QROOT) {
          e = sp.D;
        }
        m[v] += (int32_t)e;
        have_factor = true;
      } else {
        break;
      }
      if (!lx.eat('*')) break;
    }
    p.add_term(m, sign * coeff, mod);
  }
  return p;
}

}  // namespace

Scalar Scalar::parse(SpecPtr sp, const std::string& s) {
  uint64_t mod = sp->backend == Backend::Prime ? QP_PRIME : 0;
  Lexer lx(s);
  Poly num, den = Poly::constant(1, sp->nvars(), mod);
  bool paren = lx.eat('(');
  num = parse_poly(lx, *sp, mod);
  if (paren && !lx.eat(')')) throw ParseError("unbalanced '('");
  if (lx.eat('/')) {
    bool p2 = lx.eat('(');
    den = parse_poly(lx, *sp, mod);
    if (p2 && !lx.eat(')')) throw ParseError("unbalanced '(' in denominator");
  }
  if (!lx.eof()) throw ParseError("trailing input at position " +
                                  std::to_string(lx.i));
  return Scalar(sp, std::move(num), std::move(den));
}

}  // namespace qp
