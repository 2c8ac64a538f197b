#include "reflekt/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace reflekt {

namespace {

const Rat kOne = 1;

Expo zero_expo() {
  Expo e{};
  e.fill(0);
  return e;
}

Expo add_expo(const Expo& a, const Expo& b) {
  Expo r;
  for (int i = 0; i < kNumVars; ++i) r[i] = static_cast<int16_t>(a[i] + b[i]);
  return r;
}

Expo sub_expo(const Expo& a, const Expo& b) {
  Expo r;
  for (int i = 0; i < kNumVars; ++i) r[i] = static_cast<int16_t>(a[i] - b[i]);
  return r;
}

using BigInt = boost::multiprecision::mpz_int;

}  // namespace

const VarTable& vars() {
  static const VarTable table = [] {
    VarTable t;
    t.names = {"v", "z", "y", "xi", "gamma", "sigma", "a", "w"};
    t.root_den.assign(t.names.size(), 1);
    return t;
  }();
  return table;
}

int VarTable::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return static_cast<int>(i);
  return -1;
}

int cmp_expo(const Expo& a, const Expo& b) {
  int da = 0, db = 0;
  for (int i = 0; i < kNumVars; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (int i = 0; i < kNumVars; ++i)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

MultiPoly MultiPoly::constant(const Rat& c) {
  MultiPoly p;
  if (c != 0) p.terms_.push_back({zero_expo(), c});
  return p;
}

MultiPoly MultiPoly::variable(int var, int power) {
  MultiPoly p;
  if (power == 0) return constant(1);
  Expo e = zero_expo();
  e[var] = static_cast<int16_t>(power);
  p.terms_.push_back({e, kOne});
  return p;
}

MultiPoly MultiPoly::monomial(const Expo& e, const Rat& c) {
  MultiPoly p;
  if (c != 0) p.terms_.push_back({e, c});
  return p;
}

bool MultiPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].c == 1 &&
         cmp_expo(terms_[0].e, zero_expo()) == 0;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && cmp_expo(terms_[0].e, zero_expo()) == 0);
}

const Term& MultiPoly::leading() const {
  if (terms_.empty()) throw Error(ErrorCode::Internal, "leading() of zero");
  return terms_.front();
}

int MultiPoly::degree_in(int var) const {
  int d = 0;
  for (const auto& t : terms_) d = std::max<int>(d, t.e[var]);
  return d;
}

int MultiPoly::min_exponent(int var) const {
  if (terms_.empty()) return 0;
  int d = terms_[0].e[var];
  for (const auto& t : terms_) d = std::min<int>(d, t.e[var]);
  return d;
}

void MultiPoly::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return cmp_expo(a.e, b.e) > 0; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && cmp_expo(out.back().e, t.e) == 0) {
      out.back().c += t.c;
      if (out.back().c == 0) out.pop_back();
    } else if (t.c != 0) {
      out.push_back(std::move(t));
    }
  }
  terms_ = std::move(out);
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  MultiPoly r;
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = cmp_expo(terms_[i].e, o.terms_[j].e);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      Rat s = terms_[i].c + o.terms_[j].c;
      if (s != 0) r.terms_.push_back({terms_[i].e, s});
      ++i, ++j;
    }
  }
  while (i < terms_.size()) r.terms_.push_back(terms_[i++]);
  while (j < o.terms_.size()) r.terms_.push_back(o.terms_[j++]);
  return r;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.c = -t.c;
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  if (is_zero() || o.is_zero()) return MultiPoly();
  if (o.terms_.size() == 1) {
    MultiPoly r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_)
      r.terms_.push_back({add_expo(t.e, o.terms_[0].e), t.c * o.terms_[0].c});
    return r;  // monomial multiplication preserves the order
  }
  std::map<Expo, Rat, bool (*)(const Expo&, const Expo&)> acc(
      [](const Expo& a, const Expo& b) { return cmp_expo(a, b) > 0; });
  for (const auto& t : terms_)
    for (const auto& u : o.terms_) {
      Expo e = add_expo(t.e, u.e);
      auto it = acc.find(e);
      if (it == acc.end()) {
        acc.emplace(e, t.c * u.c);
      } else {
        it->second += t.c * u.c;
        if (it->second == 0) acc.erase(it);
      }
    }
  MultiPoly r;
  r.terms_.reserve(acc.size());
  for (auto& [e, c] : acc) r.terms_.push_back({e, c});
  return r;
}

MultiPoly MultiPoly::scaled(const Rat& c) const {
  if (c == 0) return MultiPoly();
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.c *= c;
  return r;
}

MultiPoly MultiPoly::shifted(const Expo& e) const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.e = add_expo(t.e, e);
  return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (cmp_expo(terms_[i].e, o.terms_[i].e) != 0 || terms_[i].c != o.terms_[i].c)
      return false;
  return true;
}

Rat MultiPoly::rational_content() const {
  if (terms_.empty()) return 0;
  BigInt g = 0, l = 1;
  for (const auto& t : terms_) {
    g = boost::multiprecision::gcd(g, boost::multiprecision::numerator(t.c));
    l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(t.c));
  }
  Rat c(g, l);
  if (terms_[0].c < 0) c = -c;
  return c;
}

MultiPoly MultiPoly::primitive() const {
  if (terms_.empty()) return *this;
  return scaled(1 / rational_content());
}

MultiPoly divexact(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "divexact by zero");
  if (b.is_one()) return a;
  MultiPoly rem = a, quot;
  const Term& lb = b.leading();
  while (!rem.is_zero()) {
    const Term& lr = rem.leading();
    Expo e = sub_expo(lr.e, lb.e);
    for (int i = 0; i < kNumVars; ++i)
      if (e[i] < 0)
        throw Error(ErrorCode::Internal, "divexact: not divisible");
    MultiPoly t = MultiPoly::monomial(e, lr.c / lb.c);
    quot = quot + t;
    rem = rem - t * b;
  }
  return quot;
}

namespace {

// Univariate view helpers for the gcd recursion.
std::vector<MultiPoly> coeffs_in(const MultiPoly& p, int var) {
  std::vector<MultiPoly> cs(p.degree_in(var) + 1);
  for (const auto& t : p.terms()) {
    Expo e = t.e;
    int d = e[var];
    e[var] = 0;
    cs[d] = cs[d] + MultiPoly::monomial(e, t.c);
  }
  return cs;
}

MultiPoly gcd_list(const std::vector<MultiPoly>& ps) {
  MultiPoly g;
  for (const auto& p : ps) {
    if (p.is_zero()) continue;
    g = g.is_zero() ? p.primitive() : poly_gcd(g, p);
    if (g.is_one()) break;
  }
  return g.is_zero() ? MultiPoly::constant(1) : g;
}

MultiPoly content_in(const MultiPoly& p, int var) {
  return gcd_list(coeffs_in(p, var));
}

// Pseudo-remainder of p by q in the variable var.
MultiPoly prem(MultiPoly p, const MultiPoly& q, int var) {
  int dq = q.degree_in(var);
  auto qc = coeffs_in(q, var);
  const MultiPoly& lq = qc[dq];
  while (!p.is_zero()) {
    int dp = p.degree_in(var);
    if (dp < dq) break;
    auto pc = coeffs_in(p, var);
    MultiPoly shift = MultiPoly::variable(var, dp - dq);
    p = p * lq - pc[dp] * shift * q;
  }
  return p;
}

}  // namespace

namespace {

MultiPoly poly_gcd_prs(const MultiPoly& a, const MultiPoly& b) {
  int var = -1;
  for (int i = 0; i < kNumVars; ++i)
    if (a.degree_in(i) > 0 || b.degree_in(i) > 0) {
      var = i;
      break;
    }
  if (var < 0) return MultiPoly::constant(1);

  if (a.degree_in(var) == 0) return poly_gcd(a, content_in(b, var));
  if (b.degree_in(var) == 0) return poly_gcd(b, content_in(a, var));

  MultiPoly ca = content_in(a, var), cb = content_in(b, var);
  MultiPoly cg = poly_gcd(ca, cb);
  MultiPoly p = divexact(a, ca).primitive();
  MultiPoly q = divexact(b, cb).primitive();
  if (p.degree_in(var) < q.degree_in(var)) std::swap(p, q);
  while (true) {
    MultiPoly r = prem(p, q, var);
    if (r.is_zero()) break;
    r = divexact(r, content_in(r, var)).primitive();
    p = q;
    q = r;
    if (q.degree_in(var) == 0) return cg;  // coprime primitive parts
  }
  return (cg * q.primitive()).primitive();
}

bool try_divexact(const MultiPoly& a, const MultiPoly& b, MultiPoly& quot) {
  MultiPoly rem = a, acc;
  const Term& lb = b.leading();
  while (!rem.is_zero()) {
    const Term& lr = rem.leading();
    Expo e = sub_expo(lr.e, lb.e);
    for (int i = 0; i < kNumVars; ++i)
      if (e[i] < 0) return false;
    Rat c = lr.c / lb.c;
    if (boost::multiprecision::denominator(c) != 1 &&
        boost::multiprecision::denominator(lr.c) == 1 &&
        boost::multiprecision::denominator(lb.c) == 1)
      return false;  // integer polys: coefficient must divide
    MultiPoly t = MultiPoly::monomial(e, c);
    acc = acc + t;
    rem = rem - t * b;
  }
  quot = acc;
  return true;
}

BigInt max_norm(const MultiPoly& p) {
  BigInt n = 0;
  for (const auto& t : p.terms()) {
    BigInt a = boost::multiprecision::abs(
        boost::multiprecision::numerator(t.c));
    if (a > n) n = a;
  }
  return n;
}

MultiPoly eval_var(const MultiPoly& p, int var, const BigInt& xi) {
  MultiPoly r;
  std::map<Expo, Rat, bool (*)(const Expo&, const Expo&)> acc(
      [](const Expo& a, const Expo& b) { return cmp_expo(a, b) > 0; });
  for (const auto& t : p.terms()) {
    Expo e = t.e;
    int d = e[var];
    e[var] = 0;
    Rat c = t.c * Rat(boost::multiprecision::pow(
                      xi, static_cast<unsigned>(d)));
    auto it = acc.find(e);
    if (it == acc.end()) {
      acc.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) acc.erase(it);
    }
  }
  for (auto& [e, c] : acc) r = r + MultiPoly::monomial(e, c);
  return r;
}

// Symmetric remainder of every coefficient modulo xi.
MultiPoly smod_poly(const MultiPoly& p, const BigInt& xi) {
  MultiPoly r;
  for (const auto& t : p.terms()) {
    BigInt n = boost::multiprecision::numerator(t.c);
    BigInt m = n % xi;
    if (m < 0) m += xi;
    if (2 * m > xi) m -= xi;
    if (m != 0) r = r + MultiPoly::monomial(t.e, Rat(m));
  }
  return r;
}

// Heuristic gcd on integer polynomials.  The integer content is split off
// per level; the reconstructed candidate is accepted only after trial
// division (which also certifies maximality for admissible xi).
bool heu_gcd(const MultiPoly& a0, const MultiPoly& b0, int depth,
             MultiPoly& out) {
  if (depth > 8) return false;
  Rat ca = a0.rational_content(), cb = b0.rational_content();
  MultiPoly a = a0.scaled(1 / ca), b = b0.scaled(1 / cb);
  Rat gi(boost::multiprecision::gcd(boost::multiprecision::numerator(ca),
                                    boost::multiprecision::numerator(cb)));
  int var = -1;
  for (int i = kNumVars - 1; i >= 0; --i)
    if (a.degree_in(i) > 0 || b.degree_in(i) > 0) {
      var = i;
      break;
    }
  if (var < 0) {
    out = MultiPoly::constant(gi);
    return true;
  }
  BigInt xi = 2 * std::min(max_norm(a), max_norm(b)) + 29;
  for (int attempt = 0; attempt < 6; ++attempt) {
    MultiPoly ax = eval_var(a, var, xi);
    MultiPoly bx = eval_var(b, var, xi);
    if (!ax.is_zero() && !bx.is_zero()) {
      MultiPoly gx;
      if (heu_gcd(ax, bx, depth + 1, gx)) {
        // Reconstruct along var from the xi-adic expansion.
        MultiPoly g, e = gx;
        int digit = 0;
        int cap = std::min(a.degree_in(var), b.degree_in(var)) + 1;
        bool ok = true;
        while (!e.is_zero()) {
          if (digit >= cap + 1) {
            ok = false;
            break;
          }
          MultiPoly c = smod_poly(e, xi);
          if (!c.is_zero())
            g = g + c.shifted([&] {
                  Expo ex{};
                  ex.fill(0);
                  ex[var] = static_cast<int16_t>(digit);
                  return ex;
                }());
          e = (e - c).scaled(Rat(1, 1) / Rat(xi));
          ++digit;
        }
        if (ok && !g.is_zero()) {
          // Contents were split off at entry, so the true gcd here is
          // integer-primitive; stripping the candidate's content removes
          // spurious factors shared by the evaluations.
          g = g.primitive();
          MultiPoly q;
          if (try_divexact(a, g, q) && try_divexact(b, g, q)) {
            out = g.scaled(gi);
            return true;
          }
        }
      }
    }
    xi = xi * 73794 / 27011 + 17;  // irrational-ish growth between retries
  }
  return false;
}

}  // namespace

MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero()) return b.primitive();
  if (b.is_zero()) return a.primitive();
  if (a == b) return a.primitive();
  if (a.is_constant() || b.is_constant()) return MultiPoly::constant(1);
  // Fast path: single-monomial input.
  auto monomial_gcd = [](const MultiPoly& m, const MultiPoly& p) {
    Expo e = m.leading().e;
    for (int i = 0; i < kNumVars; ++i)
      e[i] = static_cast<int16_t>(std::min<int>(e[i], p.min_exponent(i)));
    return MultiPoly::monomial(e, 1);
  };
  if (a.term_count() == 1) return monomial_gcd(a, b);
  if (b.term_count() == 1) return monomial_gcd(b, a);

  // Heuristic evaluation-reconstruction gcd on the integer-primitive
  // parts, with the primitive PRS as the deterministic fallback.
  MultiPoly pa = a.primitive(), pb = b.primitive();
  MultiPoly g;
  if (heu_gcd(pa, pb, 0, g)) return g.primitive();
  return poly_gcd_prs(pa, pb);
}

// ---------------------------------------------------------------------------
// Scalar

Scalar::Scalar(int n)
    : num_(MultiPoly::constant(n)), den_(MultiPoly::constant(1)) {}

Scalar::Scalar(const Rat& r)
    : num_(MultiPoly::constant(r)), den_(MultiPoly::constant(1)) {}

Scalar::Scalar(const MultiPoly& p) : num_(p), den_(MultiPoly::constant(1)) {
  reduce();
}

Scalar::Scalar(const MultiPoly& num, const MultiPoly& den)
    : num_(num), den_(den) {
  if (den_.is_zero())
    throw Error(ErrorCode::DivisionByZero, "zero denominator");
  reduce();
}

Scalar Scalar::variable(int var, int power) {
  Scalar s;
  if (power >= 0) {
    s.num_ = MultiPoly::variable(var, power);
  } else {
    s.num_ = MultiPoly::constant(1);
    s.den_ = MultiPoly::variable(var, -power);
  }
  return s;
}

bool Scalar::is_one() const { return num_.is_one() && den_.is_one(); }

void Scalar::reduce() {
  if (num_.is_zero()) {
    den_ = MultiPoly::constant(1);
    return;
  }
  // Clear negative (Laurent) exponents and cancel common monomials.
  Expo shift = zero_expo();
  bool need = false;
  for (int i = 0; i < kNumVars; ++i) {
    int m = std::min({num_.min_exponent(i), den_.min_exponent(i), 0});
    int common = std::min(num_.min_exponent(i) - m, den_.min_exponent(i) - m);
    shift[i] = static_cast<int16_t>(-m - common);
    if (shift[i] != 0 || m != 0 || common != 0) need = true;
  }
  if (need) {
    Expo sn = shift, sd = shift;
    // shift[i] = -m - common applies to both; recompute per side:
    for (int i = 0; i < kNumVars; ++i) {
      int m = std::min({num_.min_exponent(i), den_.min_exponent(i), 0});
      int common = std::min(num_.min_exponent(i) - m, den_.min_exponent(i) - m);
      sn[i] = static_cast<int16_t>(-num_.min_exponent(i) +
                                   (num_.min_exponent(i) - m - common));
      sd[i] = static_cast<int16_t>(-den_.min_exponent(i) +
                                   (den_.min_exponent(i) - m - common));
    }
    num_ = num_.shifted(sn);
    den_ = den_.shifted(sd);
  }
  if (!den_.is_one()) {
    MultiPoly g = poly_gcd(num_, den_);
    if (!g.is_one()) {
      num_ = divexact(num_, g);
      den_ = divexact(den_, g);
    }
  }
  Rat lc = den_.leading().c;
  if (lc != 1) {
    num_ = num_.scaled(1 / lc);
    den_ = den_.scaled(1 / lc);
  }
}

Scalar Scalar::operator+(const Scalar& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (den_ == o.den_) return Scalar(num_ + o.num_, den_);
  if (den_.is_one()) return Scalar(num_ * o.den_ + o.num_, o.den_);
  if (o.den_.is_one()) return Scalar(num_ + o.num_ * den_, den_);
  MultiPoly g = poly_gcd(den_, o.den_);
  if (g.is_one())
    return Scalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  MultiPoly da = divexact(den_, g), db = divexact(o.den_, g);
  return Scalar(num_ * db + o.num_ * da, den_ * db);
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.num_ = -r.num_;
  return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
  if (is_zero() || o.is_zero()) return Scalar();
  // Cross-cancel before multiplying to keep gcd inputs small.
  MultiPoly n1 = num_, d1 = den_, n2 = o.num_, d2 = o.den_;
  if (!d2.is_one()) {
    MultiPoly g = poly_gcd(n1, d2);
    if (!g.is_one()) {
      n1 = divexact(n1, g);
      d2 = divexact(d2, g);
    }
  }
  if (!d1.is_one()) {
    MultiPoly g = poly_gcd(n2, d1);
    if (!g.is_one()) {
      n2 = divexact(n2, g);
      d1 = divexact(d1, g);
    }
  }
  return Scalar(n1 * n2, d1 * d2);
}

Scalar Scalar::operator/(const Scalar& o) const {
  if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
  if (is_zero()) return Scalar();
  return *this * o.inverse();
}

Scalar Scalar::inverse() const {
  if (is_zero())
    throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  return Scalar(den_, num_);
}

Scalar Scalar::pow(int k) const {
  if (k == 0) return Scalar(1);
  Scalar base = k > 0 ? *this : inverse();
  int n = k > 0 ? k : -k;
  Scalar r(1);
  while (n > 0) {
    if (n & 1) r = r * base;
    base = base * base;
    n >>= 1;
  }
  return r;
}

bool Scalar::operator==(const Scalar& o) const {
  return num_ == o.num_ && den_ == o.den_;
}

namespace {

Scalar eval_poly(const MultiPoly& p, const std::map<int, Scalar>& bindings) {
  Scalar acc;
  for (const auto& t : p.terms()) {
    Scalar term = Scalar(Rat(t.c));
    for (int i = 0; i < kNumVars; ++i) {
      if (t.e[i] == 0) continue;
      auto it = bindings.find(i);
      Scalar base = it != bindings.end() ? it->second : Scalar::variable(i);
      term = term * base.pow(t.e[i]);
    }
    acc = acc + term;
  }
  return acc;
}

}  // namespace

Scalar Scalar::substitute(const std::map<int, Scalar>& bindings) const {
  for (const auto& [var, val] : bindings) {
    if (var < 0 || var >= kNumVars)
      throw Error(ErrorCode::ConfigError, "substitute: unregistered variable");
    (void)val;
  }
  Scalar d = eval_poly(den_, bindings);
  if (d.is_zero())
    throw Error(ErrorCode::SpecializationPole,
                "substitution makes a denominator vanish");
  return eval_poly(num_, bindings) / d;
}

namespace {

MultiPoly poly_derivative(const MultiPoly& p, int var) {
  MultiPoly r;
  for (const auto& t : p.terms()) {
    if (t.e[var] == 0) continue;
    Expo e = t.e;
    Rat c = t.c * e[var];
    e[var] = static_cast<int16_t>(e[var] - 1);
    r = r + MultiPoly::monomial(e, c);
  }
  return r;
}

}  // namespace

Scalar Scalar::derivative(int var) const {
  if (var < 0 || var >= kNumVars)
    throw Error(ErrorCode::ConfigError, "derivative: unregistered variable");
  MultiPoly dn = poly_derivative(num_, var);
  MultiPoly dd = poly_derivative(den_, var);
  return Scalar(dn * den_ - num_ * dd, den_ * den_);
}

// ---------------------------------------------------------------------------
// Serialization: "num/den" with graded-lex monomials; v^{2k} prints as q^k.

namespace {

void print_monomial(std::ostream& os, const Expo& e, const Rat& coeff,
                    bool leading) {
  Rat c = coeff;
  if (c < 0) {
    os << (leading ? "-" : " - ");
    c = -c;
  } else if (!leading) {
    os << " + ";
  }
  bool any_var = false;
  for (int i = 0; i < kNumVars; ++i) any_var |= e[i] != 0;
  bool printed = false;
  if (c != 1 || !any_var) {
    os << c;
    printed = true;
  }
  for (int i = 0; i < kNumVars; ++i) {
    if (e[i] == 0) continue;
    if (printed) os << "*";
    int p = e[i];
    std::string name = vars().names[i];
    if (i == kVarV && p % 2 == 0) {
      name = "q";
      p /= 2;
    }
    os << name;
    if (p != 1) os << "^" << p;
    printed = true;
  }
}

void print_poly(std::ostream& os, const MultiPoly& p) {
  if (p.is_zero()) {
    os << "0";
    return;
  }
  bool leading = true;
  for (const auto& t : p.terms()) {
    print_monomial(os, t.e, t.c, leading);
    leading = false;
  }
}

}  // namespace

std::string Scalar::to_string() const {
  // Print with integer coefficients: pull the rational content out of both
  // parts and fold it into the leading integers.
  std::ostringstream os;
  if (num_.is_zero()) return "0";
  Rat cn = num_.rational_content();
  Rat cd = den_.rational_content();
  Rat r = cn / cd;
  MultiPoly pn =
      num_.primitive().scaled(Rat(boost::multiprecision::numerator(r)));
  MultiPoly pd =
      den_.primitive().scaled(Rat(boost::multiprecision::denominator(r)));
  if (pd.is_one()) {
    print_poly(os, pn);
    return os.str();
  }
  bool wrap_num = pn.term_count() > 1;
  bool wrap_den = pd.term_count() > 1;
  if (wrap_num) os << "(";
  print_poly(os, pn);
  if (wrap_num) os << ")";
  os << "/";
  if (wrap_den) os << "(";
  print_poly(os, pd);
  if (wrap_den) os << ")";
  return os.str();
}

// Recursive-descent parser for the same grammar.
namespace {

struct Parser {
  const std::string& s;
  std::size_t pos = 0;

  explicit Parser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool eat(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }

  Scalar parse_expr() {
    Scalar r = parse_term();
    while (true) {
      char c = peek();
      if (c == '+') {
        ++pos;
        r = r + parse_term();
      } else if (c == '-') {
        ++pos;
        r = r - parse_term();
      } else {
        return r;
      }
    }
  }

  Scalar parse_term() {
    Scalar r = parse_factor();
    while (true) {
      char c = peek();
      if (c == '*') {
        ++pos;
        r = r * parse_factor();
      } else if (c == '/') {
        ++pos;
        Scalar d = parse_factor();
        if (d.is_zero())
          throw Error(ErrorCode::DivisionByZero, "parse: division by zero");
        r = r / d;
      } else {
        return r;
      }
    }
  }

  Scalar parse_factor() {
    if (eat('-')) return -parse_factor();
    Scalar base = parse_atom();
    if (eat('^')) {
      bool neg = eat('-');
      int k = parse_int();
      base = base.pow(neg ? -k : k);
    }
    return base;
  }

  int parse_int() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (start == pos)
      throw Error(ErrorCode::ConfigError, "parse: expected integer");
    return std::stoi(s.substr(start, pos - start));
  }

  Scalar parse_atom() {
    char c = peek();
    if (c == '(') {
      ++pos;
      Scalar r = parse_expr();
      if (!eat(')'))
        throw Error(ErrorCode::ConfigError, "parse: missing ')'");
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return Scalar(parse_int());
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos;
      while (pos < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
        ++pos;
      std::string name = s.substr(start, pos - start);
      if (name == "q") return Scalar::qpow(1);
      int idx = vars().index_of(name);
      if (idx < 0)
        throw Error(ErrorCode::ConfigError, "parse: unknown symbol " + name);
      return Scalar::variable(idx);
    }
    throw Error(ErrorCode::ConfigError, "parse: unexpected character");
  }
};

}  // namespace

Scalar Scalar::parse(const std::string& text) {
  Parser p(text);
  Scalar r = p.parse_expr();
  p.skip_ws();
  if (p.pos != text.size())
    throw Error(ErrorCode::ConfigError, "parse: trailing input");
  return r;
}

}  // namespace reflekt
