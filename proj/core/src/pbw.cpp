#include "qschubert/pbw.hpp"

#include <functional>
#include <set>
#include <sstream>

namespace qschubert {

namespace {

Laurent lcm_of(const Laurent& a, const Laurent& b) {
  if (a.is_one()) return b;
  if (b.is_one() || a == b) return a;
  return a * *b.divide_exact(gcd(a, b));
}

}  // namespace

std::string exps_str(const Exps& a) {
  std::ostringstream os;
  os << "(";
  for (std::size_t k = 0; k < a.size(); ++k) os << (k ? "," : "") << a[k];
  os << ")";
  return os.str();
}

PBWFrame::PBWFrame(const Algebra& alg, ReducedWord word)
    : alg_(&alg), word_(std::move(word)), roots_(word_.roots()) {
  X_ = root_vectors(alg, word_);
  for (auto& x : X_) {
    if (!x.has_nc()) raise(ErrorKind::Internal, "root vector without a representative");
    Laurent den(1L);
    for (const auto& [w, c] : x.nc().terms()) den = lcm_of(den, c.den());
    std::vector<std::pair<Word, Laurent>> terms;
    for (const auto& [w, c] : x.nc().terms())
      terms.emplace_back(w, c.den() == den ? c.num() : c.num() * *den.divide_exact(c.den()));
    xterms_.push_back(std::move(terms));
    xden_.push_back(den);
  }
}

int PBWFrame::lambda(int k, int l) const {
  if (k == l) return 0;
  int s = datum().pairing(roots_[k], roots_[l]);
  return l > k ? s : -s;
}

int PBWFrame::lambda(const Exps& a, const Exps& b) const {
  int s = 0;
  for (int k = 0; k < length(); ++k) {
    if (a[k] == 0) continue;
    for (int l = 0; l < length(); ++l)
      if (b[l] != 0) s += a[k] * b[l] * lambda(k, l);
  }
  return s;
}

Weight PBWFrame::degree(const Exps& a) const {
  if (static_cast<int>(a.size()) != length())
    raise(ErrorKind::InvalidArgument, "exponent vector has the wrong length");
  Weight g = datum().zero();
  for (int k = 0; k < length(); ++k) {
    if (a[k] < 0) raise(ErrorKind::InvalidArgument, "negative exponent");
    for (int i = 0; i < datum().rank(); ++i) g[i] += a[k] * roots_[k][i];
  }
  return g;
}

int PBWFrame::q_prefactor_exp(const Exps& a) const {
  int s = 0;
  for (int k = 0; k < length(); ++k)
    for (int l = k + 1; l < length(); ++l)
      if (a[k] && a[l]) s += datum().pairing(roots_[k], roots_[l]) * a[k] * a[l];
  return s;
}

Laurent PBWFrame::angle_factorial(const Exps& a) const {
  Laurent f(1L);
  for (int k = 0; k < length(); ++k)
    if (a[k] > 1) f *= q_angle_factorial(a[k], 2 * datum().d(word_.letter(k)));
    else if (a[k] == 1) f *= alg_->angle1(word_.letter(k));
  return f;
}

int PBWFrame::dual_exp(const Exps& a) const {
  int s = 0;
  for (int k = 0; k < length(); ++k) {
    if (a[k] == 0) continue;
    int eta = 0;
    for (int i = 0; i < datum().rank(); ++i) eta += roots_[k][i] * datum().d(i);
    s += a[k] * (eta - datum().d(word_.letter(k)));
  }
  return s;
}

void PBWFrame::enumerate(int k, Weight& rem, Exps& cur, std::vector<Exps>& out) const {
  if (k == length()) {
    for (int x : rem)
      if (x != 0) return;
    out.push_back(cur);
    return;
  }
  int cap = -1;
  for (std::size_t i = 0; i < rem.size(); ++i) {
    if (roots_[k][i] == 0) continue;
    int c = rem[i] / roots_[k][i];
    if (cap < 0 || c < cap) cap = c;
  }
  if (cap < 0) cap = 0;
  for (int t = 0; t <= cap; ++t) {
    cur[k] = t;
    enumerate(k + 1, rem, cur, out);
    for (std::size_t i = 0; i < rem.size(); ++i) rem[i] -= roots_[k][i];
  }
  for (std::size_t i = 0; i < rem.size(); ++i) rem[i] += (cap + 1) * roots_[k][i];
  cur[k] = 0;
}

const std::vector<Exps>& PBWFrame::slice(const Weight& deg) const {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  auto it = slices_.find(deg);
  if (it != slices_.end()) return it->second;
  if (static_cast<int>(deg.size()) != datum().rank())
    raise(ErrorKind::InvalidArgument, "degree has the wrong rank");
  std::vector<Exps> out;
  if (is_nonnegative(deg)) {
    Weight rem = deg;
    Exps cur(length(), 0);
    enumerate(0, rem, cur, out);
  }
  return slices_.emplace(deg, std::move(out)).first->second;
}

std::vector<Weight> PBWFrame::degrees_up_to(int h) const {
  std::set<Weight> seen;
  Exps cur(length(), 0);
  std::function<void(int, int)> rec = [&](int k, int left) {
    if (k == length()) {
      seen.insert(degree(cur));
      return;
    }
    int hk = height(roots_[k]);
    for (int t = 0; t * hk <= left; ++t) {
      cur[k] = t;
      rec(k + 1, left - t * hk);
    }
    cur[k] = 0;
  };
  rec(0, h);
  return {seen.begin(), seen.end()};
}

const Element& PBWFrame::raw_monomial(const Exps& a) const {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  auto it = raw_.find(a);
  if (it != raw_.end()) return it->second;
  int last = -1;
  for (int k = 0; k < length(); ++k)
    if (a[k] > 0) last = k;
  Element r;
  if (last < 0) {
    r = Element::one(alg_);
    r.drop_nc();
  } else {
    Exps prev = a;
    --prev[last];
    r = raw_monomial(prev).rmul(X_[last].nc());
    r.drop_nc();
  }
  return raw_.emplace(a, std::move(r)).first->second;
}

Element PBWFrame::monomial(const Exps& a, MonomialKind kind) const {
  degree(a);
  Element r = raw_monomial(a);
  if (kind == MonomialKind::Plain) r *= Rat(q_prefactor(a));
  else r *= Rat(Laurent(1L), angle_factorial(a));
  return r;
}

NcElement PBWFrame::monomial_nc(const Exps& a, MonomialKind kind, std::size_t max_terms) const {
  degree(a);
  NcElement r = NcElement::one(alg_);
  for (int k = 0; k < length(); ++k)
    for (int t = 0; t < a[k]; ++t) {
      r = r * X_[k].nc();
      if (r.size() > max_terms)
        raise(ErrorKind::InvalidArgument, "monomial representative exceeds the term cap");
    }
  if (kind == MonomialKind::Plain) r *= Rat(q_prefactor(a));
  else r *= Rat(Laurent(1L), angle_factorial(a));
  return r;
}

const PBWFrame::DualVec& PBWFrame::raw_dual(const Exps& a) const {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  auto it = dual_.find(a);
  if (it != dual_.end()) return it->second;
  int last = -1;
  for (int k = 0; k < length(); ++k)
    if (a[k] > 0) last = k;
  DualVec r;
  if (last < 0) {
    r.num.assign(1, Laurent(1L));
  } else {
    Exps prev = a;
    --prev[last];
    const DualVec& p = raw_dual(prev);
    const WordSpace& ps = alg_->space(degree(prev));
    const WordSpace& ns = alg_->space(degree(a));
    r.num.assign(ns.size(), Laurent());
    for (std::size_t j = 0; j < p.num.size(); ++j) {
      if (p.num[j].is_zero()) continue;
      for (const auto& [w, c] : xterms_[last]) {
        Word u = ps.words[j];
        u.insert(u.end(), w.begin(), w.end());
        r.num[ns.find(u)] += p.num[j] * c;
      }
    }
    r.den = p.den * xden_[last];
    Laurent g = r.den;
    for (const auto& e : r.num) {
      if (g.is_one()) break;
      if (!e.is_zero()) g = gcd(g, e);
    }
    if (!g.is_one()) {
      for (auto& e : r.num)
        if (!e.is_zero()) e = *e.divide_exact(g);
      r.den = *r.den.divide_exact(g);
    }
  }
  return dual_.emplace(a, std::move(r)).first->second;
}

Laurent PBWFrame::monomial_norm(const Exps& a) const {
  Laurent n = Laurent::monomial(datum().mu_exponent(degree(a)));
  for (int k = 0; k < length(); ++k) {
    const int d = datum().d(word_.letter(k));
    for (int t = 1; t <= a[k]; ++t) n *= Laurent(1L) - Laurent::monomial(-4 * d * t);
  }
  return n;
}

Rat PBWFrame::pair_with_monomial(const Element& x, const Exps& a) const {
  if (x.degree() != degree(a)) return Rat();
  const DualVec& d = raw_dual(a);
  const auto& xn = x.phi().num();
  Laurent s;
  for (std::size_t j = 0; j < d.num.size(); ++j)
    if (!d.num[j].is_zero() && !xn[j].is_zero()) s += d.num[j] * xn[j];
  return Rat(s * Laurent::monomial(q_prefactor_exp(a)), d.den * x.phi().den());
}

Rat PBWFrame::peel_pair(const Element& x, const Exps& a) const {
  if (x.degree() != degree(a)) return Rat();
  Element y = x;
  for (int k = length() - 1; k >= 0; --k)
    for (int t = 0; t < a[k]; ++t) {
      y = y.adjoint(X_[k].nc(), Side::Right);
      if (y.is_zero()) return Rat();
    }
  return y.scalar() * Rat(q_prefactor(a));
}

PBWVector PBWFrame::expand(const Element& x, bool check) const {
  if (x.algebra() != alg_) raise(ErrorKind::InvalidArgument, "element of another algebra");
  PBWVector out;
  if (!x.is_zero())
    for (const auto& a : slice(x.degree())) {
      Rat c = pair_with_monomial(x, a);
      if (!c.is_zero()) out[a] = c / Rat(monomial_norm(a));
    }
  if (check && !reconstructs(out, x))
    raise(ErrorKind::NotInCell, "element is not in the Schubert cell of " + word_.str());
  return out;
}

bool PBWFrame::reconstructs(const PBWVector& v, const Element& x) const {
  struct Term {
    const PhiVec* phi;
    Laurent num, den;
  };
  std::vector<Term> terms;
  Laurent L(1L);
  for (const auto& [a, c] : v) {
    if (degree(a) != x.degree()) return false;
    const PhiVec& p = raw_monomial(a).phi();
    Term t{&p, c.num() * Laurent::monomial(q_prefactor_exp(a)), c.den() * p.den()};
    L = lcm_of(L, t.den);
    terms.push_back(std::move(t));
  }
  const auto& xn = x.phi().num();
  std::vector<Laurent> sum(xn.size());
  for (auto& t : terms) {
    Laurent f = t.num * *L.divide_exact(t.den);
    const auto& pn = t.phi->num();
    for (std::size_t j = 0; j < pn.size(); ++j)
      if (!pn[j].is_zero()) sum[j] += pn[j] * f;
  }
  for (std::size_t j = 0; j < xn.size(); ++j)
    if (sum[j] * x.phi().den() != xn[j] * L) return false;
  return true;
}

Element PBWFrame::reconstruct(const PBWVector& v, const Weight& deg) const {
  Element r(alg_, deg);
  for (const auto& [a, c] : v) {
    if (degree(a) != deg) raise(ErrorKind::InvalidArgument, "mixed degrees in PBW vector");
    r += monomial(a) * c;
  }
  return r;
}

Rat PBWFrame::pair(const Element& x, const Element& y) const {
  if (x.degree() != y.degree()) return Rat();
  Rat s;
  for (const auto& [a, c] : expand(x, true)) s += c * pair_with_monomial(y, a);
  return s;
}

const PBWVector& PBWFrame::straighten(int k, int l) const {
  if (k < 0 || l >= length() || k >= l)
    raise(ErrorKind::InvalidArgument, "straightening needs 1 <= k < l <= length");
  std::lock_guard<std::recursive_mutex> lock(mu_);
  auto key = std::make_pair(k, l);
  auto it = straight_.find(key);
  if (it != straight_.end()) return it->second;
  int s = datum().pairing(roots_[k], roots_[l]);
  Element xl = X_[l], xk = X_[k];
  xl.drop_nc();
  xk.drop_nc();
  Element lhs = xl.rmul(X_[k].nc()) * Rat(Laurent::monomial(-s)) -
                xk.rmul(X_[l].nc()) * Rat(Laurent::monomial(s));
  lhs *= Rat(Laurent(1L), alg_->angle1(word_.letter(k)));
  PBWVector v = expand(lhs, true);
  for (const auto& [a, c] : v) {
    if (!membership(c, ScalarSet::A0))
      raise(ErrorKind::IntegralityViolation,
            "straightening coefficient " + c.str() + " at " + exps_str(a) + " is not in A0");
    for (int t = 0; t < length(); ++t)
      if (a[t] != 0 && (t <= k || t >= l))
        raise(ErrorKind::IntegralityViolation,
              "straightening support " + exps_str(a) + " leaves the open interval");
  }
  return straight_.emplace(key, std::move(v)).first->second;
}

void PBWFrame::ensure_straightening() const {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  if (straight_ready_) return;
  std::set<Exps> gens;
  for (int k = 0; k < length(); ++k)
    for (int l = k + 2; l < length(); ++l)
      for (const auto& [a, c] : straighten(k, l)) {
        Exps g = a;
        for (auto& x : g) x = -x;
        ++g[k];
        ++g[l];
        gens.insert(g);
      }
  generators_.assign(gens.begin(), gens.end());
  straight_ready_ = true;
}

const SliceOrder& PBWFrame::order(const Weight& deg) const {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  auto it = orders_.find(deg);
  if (it != orders_.end()) return *it->second;
  ensure_straightening();
  auto so = std::make_unique<SliceOrder>();
  so->slice = slice(deg);
  const int n = static_cast<int>(so->slice.size());
  for (int j = 0; j < n; ++j) so->index[so->slice[j]] = j;
  so->below.assign(n, std::vector<bool>(n, false));
  std::vector<int> state(n, 0);  // 0 new, 1 open, 2 done
  std::function<void(int)> visit = [&](int j) {
    state[j] = 1;
    const Exps& a = so->slice[j];
    for (const auto& g : generators_) {
      Exps b = a;
      bool ok = true;
      for (int t = 0; t < length() && ok; ++t) ok = (b[t] -= g[t]) >= 0;
      if (!ok) continue;
      int c = so->index.at(b);
      if (state[c] == 1) raise(ErrorKind::Internal, "straightening order has a cycle");
      if (state[c] == 0) visit(c);
      so->below[j][c] = true;
      for (int t = 0; t < n; ++t)
        if (so->below[c][t]) so->below[j][t] = true;
    }
    state[j] = 2;
    so->topo.push_back(j);
  };
  for (int j = 0; j < n; ++j)
    if (state[j] == 0) visit(j);
  return *orders_.emplace(deg, std::move(so)).first->second;
}

bool PBWFrame::order_leq(const Exps& a, const Exps& b) const {
  Weight ga = degree(a), gb = degree(b);
  if (ga != gb) return false;
  const SliceOrder& so = order(ga);
  return so.leq(so.index.at(a), so.index.at(b));
}

BarMatrix PBWFrame::bar_matrix(const Weight& deg) const {
  {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    auto it = bars_.find(deg);
    if (it != bars_.end()) return it->second;
  }
  BarMatrix m;
  m.degree = deg;
  m.slice = slice(deg);
  std::map<Exps, int> index;
  for (std::size_t j = 0; j < m.slice.size(); ++j) index[m.slice[j]] = static_cast<int>(j);
  m.entries.assign(m.slice.size(), std::vector<Laurent>(m.slice.size()));
  for (std::size_t j = 0; j < m.slice.size(); ++j) {
    PBWVector row = expand(monomial(m.slice[j]).bar(), true);
    for (const auto& [a, c] : row) {
      if (!c.is_laurent())
        raise(ErrorKind::IntegralityViolation,
              "bar coefficient " + c.str() + " of " + exps_str(m.slice[j]) + " is not in A");
      m.entries[j][index.at(a)] = c.num();
    }
  }
  std::lock_guard<std::recursive_mutex> lock(mu_);
  return bars_.emplace(deg, std::move(m)).first->second;
}

bool PBWFrame::lambda_commutator_check(const Exps& a, const Exps& b) const {
  Exps ab = a;
  for (int k = 0; k < length(); ++k) ab[k] += b[k];
  const Weight deg = degree(ab);
  const SliceOrder& so = order(deg);
  const int top = so.index.at(ab);
  const int lam = lambda(a, b);

  auto times = [&](const Exps& x, const Exps& y) {
    Element r = monomial(x);
    for (int k = 0; k < length(); ++k)
      for (int t = 0; t < y[k]; ++t) r = r.rmul(X_[k].nc());
    r.drop_nc();
    return r * Rat(q_prefactor(y));
  };
  // every coefficient, rescaled by v^{-shift}, lies in A0 on strictly lower terms
  auto lower_in_A0 = [&](const Element& x, int shift) {
    for (const auto& [e, c] : expand(x, true)) {
      int j = so.index.at(e);
      if (j == top || !so.below[top][j]) return false;
      if (!membership(c * Rat(Laurent::monomial(-shift)), ScalarSet::A0)) return false;
    }
    return true;
  };
  Element xab = times(a, b), xba = times(b, a);
  Element first = xab - monomial(ab) * Rat(Laurent::monomial(-lam));
  Element second = xba - xab * Rat(Laurent::monomial(2 * lam));
  return lower_in_A0(first, -lam) && lower_in_A0(second, lam);
}

std::vector<std::string> bar_matrix_defects(const PBWFrame& frame, const Weight& deg) {
  std::vector<std::string> out;
  const SliceOrder& so = frame.order(deg);
  const BarMatrix m = frame.bar_matrix(deg);
  const std::size_t n = m.slice.size();
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t t = 0; t < n; ++t) {
      const Laurent& e = m.entries[j][t];
      const std::string at = exps_str(m.slice[j]) + "," + exps_str(m.slice[t]);
      if (j == t && !e.is_one()) out.push_back("diagonal entry at " + at + " is " + e.str());
      if (j != t && !e.is_zero() && !so.below[j][t])
        out.push_back("entry at " + at + " is off the order");
      if (!membership(e, ScalarSet::A0)) out.push_back("entry at " + at + " is not in A0");
    }
  // (bar(M) M)[j][t] = sum_u bar(M[j][u]) M[u][t], over the nonzero pattern
  std::vector<std::vector<std::size_t>> nz(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t t = 0; t < n; ++t)
      if (!m.entries[j][t].is_zero()) nz[j].push_back(t);
  for (std::size_t j = 0; j < n; ++j) {
    std::map<std::size_t, Laurent> row;
    for (std::size_t u : nz[j]) {
      Laurent b = m.entries[j][u].bar();
      for (std::size_t t : nz[u]) row[t] += b * m.entries[u][t];
    }
    for (std::size_t t = 0; t < n; ++t) {
      auto it = row.find(t);
      Laurent s = it == row.end() ? Laurent() : it->second;
      if (s != Laurent(j == t ? 1L : 0L))
        out.push_back("bar(M) M differs from I at " + exps_str(m.slice[j]) + "," +
                      exps_str(m.slice[t]));
    }
  }
  return out;
}

}  // namespace qschubert
