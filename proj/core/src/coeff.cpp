#include "qschubert/coeff.hpp"

#include <algorithm>
#include <functional>
#include <ostream>
#include <sstream>

namespace qschubert {

namespace {

using Poly = std::vector<Int>;  // ascending coefficients, no trailing zeros

void poly_trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Int poly_content(const Poly& p) {
  Int g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void poly_primitive(Poly& p) {
  if (p.empty()) return;
  Int g = poly_content(p);
  if (p.back() < 0) g = -g;
  if (g != 1)
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

// Pseudo-remainder of a by b, made primitive.
Poly poly_prem(Poly a, const Poly& b) {
  const std::size_t db = b.size() - 1;
  const Int& lb = b.back();
  while (!a.empty() && a.size() - 1 >= db) {
    Int la = a.back();
    std::size_t shift = a.size() - 1 - db;
    for (auto& c : a) c *= lb;
    for (std::size_t k = 0; k <= db; ++k) a[k + shift] -= la * b[k];
    poly_trim(a);
    poly_primitive(a);
  }
  return a;
}

Poly poly_gcd(Poly a, Poly b) {
  if (a.empty()) {
    poly_primitive(b);
    return b;
  }
  if (b.empty()) {
    poly_primitive(a);
    return a;
  }
  Int ca = poly_content(a), cb = poly_content(b), c;
  mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  poly_primitive(a);
  poly_primitive(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    Poly r = poly_prem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  poly_primitive(a);
  for (auto& x : a) x *= c;
  return a;
}

}  // namespace

Laurent::Laurent(long c) {
  if (c != 0) c_.emplace_back(c);
}

Laurent::Laurent(const Int& c) {
  if (c != 0) c_.push_back(c);
}

Laurent Laurent::monomial(int exp, const Int& c) {
  Laurent r;
  if (c != 0) {
    r.lo_ = exp;
    r.c_.push_back(c);
  }
  return r;
}

Laurent Laurent::from_terms(const std::vector<std::pair<int, Int>>& terms) {
  Laurent r;
  for (const auto& [e, c] : terms) r.add_scaled(Laurent::monomial(e, 1), c);
  return r;
}

Int Laurent::coeff(int exp) const {
  if (c_.empty() || exp < lo_ || exp > high()) return 0;
  return c_[exp - lo_];
}

std::vector<std::pair<int, Int>> Laurent::terms() const {
  std::vector<std::pair<int, Int>> out;
  for (std::size_t k = 0; k < c_.size(); ++k)
    if (c_[k] != 0) out.emplace_back(lo_ + static_cast<int>(k), c_[k]);
  return out;
}

void Laurent::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
  std::size_t z = 0;
  while (z < c_.size() && c_[z] == 0) ++z;
  if (z > 0) {
    c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(z));
    lo_ += static_cast<int>(z);
  }
  if (c_.empty()) lo_ = 0;
}

Laurent Laurent::operator-() const {
  Laurent r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

void Laurent::add_shifted(const Laurent& a, int shift, int sign) {
  if (a.c_.empty()) return;
  const int alo = a.lo_ + shift;
  const int ahi = alo + static_cast<int>(a.c_.size()) - 1;
  if (c_.empty()) {
    lo_ = alo;
    c_ = a.c_;
    if (sign < 0)
      for (auto& c : c_) c = -c;
    return;
  }
  if (alo < lo_) {
    c_.insert(c_.begin(), static_cast<std::size_t>(lo_ - alo), Int(0));
    lo_ = alo;
  }
  if (ahi > high()) c_.resize(static_cast<std::size_t>(ahi - lo_ + 1), Int(0));
  const std::size_t off = static_cast<std::size_t>(alo - lo_);
  if (sign >= 0)
    for (std::size_t k = 0; k < a.c_.size(); ++k) c_[off + k] += a.c_[k];
  else
    for (std::size_t k = 0; k < a.c_.size(); ++k) c_[off + k] -= a.c_[k];
  if (c_.front() == 0 || c_.back() == 0) trim();
}

void Laurent::add_scaled(const Laurent& a, const Int& s, int shift) {
  if (a.c_.empty() || s == 0) return;
  if (s == 1) return add_shifted(a, shift, 1);
  if (s == -1) return add_shifted(a, shift, -1);
  const int alo = a.lo_ + shift;
  const int ahi = alo + static_cast<int>(a.c_.size()) - 1;
  if (c_.empty()) {
    lo_ = alo;
    c_.assign(a.c_.size(), Int(0));
  }
  if (alo < lo_) {
    c_.insert(c_.begin(), static_cast<std::size_t>(lo_ - alo), Int(0));
    lo_ = alo;
  }
  if (ahi > high()) c_.resize(static_cast<std::size_t>(ahi - lo_ + 1), Int(0));
  const std::size_t off = static_cast<std::size_t>(alo - lo_);
  for (std::size_t k = 0; k < a.c_.size(); ++k)
    mpz_addmul(c_[off + k].get_mpz_t(), a.c_[k].get_mpz_t(), s.get_mpz_t());
  trim();
}

Laurent& Laurent::operator+=(const Laurent& o) {
  add_shifted(o, 0, 1);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
  add_shifted(o, 0, -1);
  return *this;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  Laurent r;
  if (a.c_.empty() || b.c_.empty()) return r;
  if (b.c_.size() == 1) {
    r = a;
    r.lo_ += b.lo_;
    if (b.c_[0] != 1)
      for (auto& c : r.c_) c *= b.c_[0];
    return r;
  }
  if (a.c_.size() == 1) return b * a;
  r.lo_ = a.lo_ + b.lo_;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      mpz_addmul(r.c_[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
  }
  r.trim();
  return r;
}

Laurent& Laurent::operator*=(const Laurent& o) {
  *this = *this * o;
  return *this;
}

Laurent& Laurent::operator*=(const Int& c) {
  if (c == 0) {
    c_.clear();
    lo_ = 0;
    return *this;
  }
  for (auto& x : c_) x *= c;
  return *this;
}

Laurent Laurent::shifted(int k) const {
  Laurent r = *this;
  if (!r.c_.empty()) r.lo_ += k;
  return r;
}

Laurent Laurent::bar() const {
  Laurent r;
  if (c_.empty()) return r;
  r.c_.assign(c_.rbegin(), c_.rend());
  r.lo_ = -high();
  return r;
}

Laurent Laurent::substitute(int d) const {
  if (d < 1) raise(ErrorKind::InvalidArgument, "substitution exponent must be positive");
  if (d == 1 || c_.empty()) return *this;
  Laurent r;
  r.lo_ = lo_ * d;
  r.c_.assign((c_.size() - 1) * static_cast<std::size_t>(d) + 1, Int(0));
  for (std::size_t k = 0; k < c_.size(); ++k) r.c_[k * static_cast<std::size_t>(d)] = c_[k];
  return r;
}

Laurent Laurent::pow(int n) const {
  if (n < 0) raise(ErrorKind::InvalidArgument, "negative power of a Laurent polynomial");
  Laurent r(1L), b = *this;
  while (n > 0) {
    if (n & 1) r *= b;
    n >>= 1;
    if (n) b = b * b;
  }
  return r;
}

Int Laurent::content() const {
  Poly p(c_.begin(), c_.end());
  return poly_content(p);
}

void Laurent::divide_integer(const Int& c) {
  if (c == 0) raise(ErrorKind::DivisionByZero, "integer division by zero");
  for (auto& x : c_) {
    if (!mpz_divisible_p(x.get_mpz_t(), c.get_mpz_t()))
      raise(ErrorKind::Internal, "inexact integer division");
    mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  }
}

std::optional<Laurent> Laurent::divide_exact(const Laurent& d) const {
  if (d.c_.empty()) raise(ErrorKind::DivisionByZero, "division by the zero polynomial");
  if (c_.empty()) return Laurent();
  if (d.c_.size() == 1) {
    Laurent q = *this;
    q.lo_ -= d.lo_;
    if (d.c_[0] == 1) return q;
    if (d.c_[0] == -1) return -q;
    for (auto& x : q.c_) {
      if (!mpz_divisible_p(x.get_mpz_t(), d.c_[0].get_mpz_t())) return std::nullopt;
      mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), d.c_[0].get_mpz_t());
    }
    return q;
  }
  if (c_.size() < d.c_.size()) return std::nullopt;
  std::vector<Int> rem = c_;
  const std::size_t dn = d.c_.size();
  const std::size_t qn = c_.size() - dn + 1;
  std::vector<Int> q(qn);
  Int t;
  for (std::size_t k = qn; k-- > 0;) {
    Int& top = rem[k + dn - 1];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), d.c_.back().get_mpz_t())) return std::nullopt;
    mpz_divexact(t.get_mpz_t(), top.get_mpz_t(), d.c_.back().get_mpz_t());
    q[k] = t;
    for (std::size_t j = 0; j < dn; ++j)
      mpz_submul(rem[k + j].get_mpz_t(), t.get_mpz_t(), d.c_[j].get_mpz_t());
  }
  for (const auto& x : rem)
    if (x != 0) return std::nullopt;
  Laurent r;
  r.lo_ = lo_ - d.lo_;
  r.c_ = std::move(q);
  r.trim();
  return r;
}

std::size_t Laurent::hash() const {
  std::size_t h = std::hash<int>()(lo_) ^ (c_.size() * 0x9e3779b97f4a7c15ULL);
  for (const auto& c : c_) {
    h ^= std::hash<long>()(mpz_get_si(c.get_mpz_t())) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::string Laurent::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int e = high(); e >= lo_; --e) {
    Int c = c_[static_cast<std::size_t>(e - lo_)];
    if (c == 0) continue;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    if (e == 0) {
      os << c.get_str();
      continue;
    }
    if (c != 1) os << c.get_str() << "*";
    os << var;
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Laurent& a) { return os << a.str(); }

Laurent gcd(const Laurent& a, const Laurent& b) {
  auto to_poly = [](const Laurent& x) {
    Poly p;
    if (x.is_zero()) return p;
    for (int e = x.low(); e <= x.high(); ++e) p.push_back(x.coeff(e));
    return p;
  };
  Poly g = poly_gcd(to_poly(a), to_poly(b));
  Laurent r;
  for (std::size_t k = 0; k < g.size(); ++k)
    r.add_scaled(Laurent::monomial(static_cast<int>(k), 1), g[k]);
  return r;
}

Rat::Rat(const Laurent& n, const Laurent& d) : num_(n), den_(d) { normalize(); }

void Rat::normalize() {
  if (den_.is_zero()) raise(ErrorKind::DivisionByZero, "zero denominator");
  if (num_.is_zero()) {
    den_ = Laurent(1L);
    return;
  }
  if (den_.is_one()) return;
  if (den_.is_monomial()) {
    Int c = den_.leading();
    num_ = num_.shifted(-den_.low());
    if (c < 0) {
      num_ = -num_;
      c = -c;
    }
    if (c != 1) {
      Int g = num_.content();
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
      if (g != 1) {
        num_.divide_integer(g);
        c /= g;
      }
    }
    den_ = Laurent(c);
    return;
  }
  if (auto q = num_.divide_exact(den_)) {
    num_ = std::move(*q);
    den_ = Laurent(1L);
    return;
  }
  Laurent g = gcd(num_, den_);
  if (!g.is_one()) {
    num_ = *num_.divide_exact(g);
    den_ = *den_.divide_exact(g);
  }
  const int s = den_.low();
  num_ = num_.shifted(-s);
  den_ = den_.shifted(-s);
  if (den_.leading() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

Rat Rat::operator-() const {
  Rat r = *this;
  r.num_ = -r.num_;
  return r;
}

Rat& Rat::operator+=(const Rat& o) {
  if (o.num_.is_zero()) return *this;
  if (den_.is_one() && o.den_.is_one()) {
    num_ += o.num_;
    return *this;
  }
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  normalize();
  return *this;
}

Rat& Rat::operator-=(const Rat& o) { return *this += -o; }

Rat& Rat::operator*=(const Rat& o) {
  if (den_.is_one() && o.den_.is_one()) {
    num_ *= o.num_;
    return *this;
  }
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.num_.is_zero()) raise(ErrorKind::DivisionByZero, "division by zero");
  Laurent n = num_ * o.den_;
  Laurent d = den_ * o.num_;
  num_ = std::move(n);
  den_ = std::move(d);
  normalize();
  return *this;
}

Rat Rat::bar() const { return Rat(num_.bar(), den_.bar()); }

Rat Rat::shifted(int k) const {
  Rat r = *this;
  r.num_ = r.num_.shifted(k);
  return r;
}

std::string Rat::str(const std::string& var) const {
  if (den_.is_one()) return num_.str(var);
  return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

std::ostream& operator<<(std::ostream& os, const Rat& a) { return os << a.str(); }

Rat arith(const Rat& a, const Rat& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div: return a / b;
    case ArithOp::Neg: return -a;
  }
  raise(ErrorKind::InvalidArgument, "unknown arithmetic operation");
}

Laurent as_laurent(const Rat& a) {
  if (!a.is_laurent())
    raise(ErrorKind::NotALaurentPolynomial, a.str() + " is not a Laurent polynomial");
  return a.num();
}

bool membership(const Laurent& a, ScalarSet set) {
  switch (set) {
    case ScalarSet::A: return true;
    case ScalarSet::A0:
      for (const auto& [e, c] : a.terms())
        if (e % 2 != 0) return false;
      return true;
    case ScalarSet::Kminus:
      for (const auto& [e, c] : a.terms())
        if (e % 2 != 0 || e > -2) return false;
      return true;
    case ScalarSet::OnePlusKminus: return membership(a - Laurent(1L), ScalarSet::Kminus);
  }
  return false;
}

bool membership(const Rat& a, ScalarSet set) {
  if (!a.is_laurent()) return false;
  return membership(a.num(), set);
}

namespace {
void check_scale(int scale) {
  if (scale < 1) raise(ErrorKind::InvalidArgument, "scale must be a positive integer");
}
}  // namespace

Laurent q_angle(int n, int scale) {
  check_scale(scale);
  return Laurent::monomial(n * scale) - Laurent::monomial(-n * scale);
}

Laurent q_round(int n, int scale) {
  check_scale(scale);
  if (n < 0) return -q_round(-n, scale);
  Laurent r;
  for (int k = 0; k < n; ++k) r += Laurent::monomial(scale * (n - 1 - 2 * k));
  return r;
}

Laurent q_angle_factorial(int n, int scale) {
  check_scale(scale);
  if (n < 0) raise(ErrorKind::InvalidArgument, "factorial of a negative integer");
  Laurent r(1L);
  for (int t = 1; t <= n; ++t) r *= q_angle(t, scale);
  return r;
}

Laurent q_round_factorial(int n, int scale) {
  check_scale(scale);
  if (n < 0) raise(ErrorKind::InvalidArgument, "factorial of a negative integer");
  Laurent r(1L);
  for (int t = 1; t <= n; ++t) r *= q_round(t, scale);
  return r;
}

Laurent q_binomial(int n, int k, int scale) {
  check_scale(scale);
  if (k < 0) raise(ErrorKind::InvalidArgument, "binomial with negative lower index");
  Laurent num(1L);
  for (int t = 0; t < k; ++t) num *= q_round(n - t, scale);
  auto q = num.divide_exact(q_round_factorial(k, scale));
  if (!q) raise(ErrorKind::Internal, "quantum binomial is not a Laurent polynomial");
  return *q;
}

Laurent q_bracket(int k, int scale) {
  check_scale(scale);
  if (k < 0) raise(ErrorKind::InvalidArgument, "bracket of a negative integer");
  Laurent r;
  for (int l = 0; l < k; ++l) r += Laurent::monomial(l * scale);
  return r;
}

Laurent gauss_binomial(int m, int n, int scale) {
  check_scale(scale);
  if (m < 0 || n < 0) raise(ErrorKind::InvalidArgument, "Gaussian binomial needs m, n >= 0");
  if (n > m) return Laurent();
  Laurent num(1L), den(1L);
  for (int t = 0; t < n; ++t) {
    num *= q_bracket(m - t, scale);
    den *= q_bracket(t + 1, scale);
  }
  auto q = num.divide_exact(den);
  if (!q) raise(ErrorKind::Internal, "Gaussian binomial is not a polynomial");
  return *q;
}

Laurent q_combinatorics(QKind kind, const std::vector<int>& args, int scale) {
  auto need = [&](std::size_t n) {
    if (args.size() != n) raise(ErrorKind::InvalidArgument, "wrong number of arguments");
  };
  switch (kind) {
    case QKind::AngleInt: need(1); return q_angle(args[0], scale);
    case QKind::RoundInt: need(1); return q_round(args[0], scale);
    case QKind::AngleFact: need(1); return q_angle_factorial(args[0], scale);
    case QKind::RoundFact: need(1); return q_round_factorial(args[0], scale);
    case QKind::Binom: need(2); return q_binomial(args[0], args[1], scale);
    case QKind::GaussBinom: need(2); return gauss_binomial(args[0], args[1], scale);
  }
  raise(ErrorKind::InvalidArgument, "unknown q-combinatorics kind");
}

}  // namespace qschubert
