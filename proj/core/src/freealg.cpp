#include "qschubert/freealg.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <sstream>

namespace qschubert {

namespace {

bool has_negative(const Weight& g) {
  for (int x : g)
    if (x < 0) return true;
  return false;
}

Laurent lcm(const Laurent& a, const Laurent& b) {
  if (a == b) return a;
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  Laurent g = gcd(a, b);
  return *(a * b).divide_exact(g);
}

// Integer-coefficient form of a free-algebra element: terms with Laurent
// coefficients over a common denominator.
struct ScaledTerms {
  std::vector<std::pair<Word, Laurent>> terms;
  Laurent den{1L};
};

ScaledTerms scaled_terms(const NcElement& z) {
  ScaledTerms out;
  for (const auto& [w, c] : z.terms()) out.den = lcm(out.den, c.den());
  for (const auto& [w, c] : z.terms()) {
    if (c.den() == out.den)
      out.terms.emplace_back(w, c.num());
    else
      out.terms.emplace_back(w, c.num() * *out.den.divide_exact(c.den()));
  }
  return out;
}

enum class ChainOp { RightMul, LeftMul, RightAdj, LeftAdj };

// Sum over terms c_u of (operator attached to u) applied to `start`, where
// each word is processed letter by letter and shared prefixes of the
// processing order are evaluated once.
std::vector<Laurent> run_chain(const Algebra& alg, const Weight& start_deg,
                               const std::vector<Laurent>& start,
                               const std::vector<std::pair<Word, Laurent>>& terms, ChainOp op,
                               Weight& out_deg) {
  const RootDatum& rd = alg.datum();
  std::vector<std::pair<Word, const Laurent*>> seqs;
  seqs.reserve(terms.size());
  for (const auto& [w, c] : terms) {
    Word s = w;
    if (op == ChainOp::LeftMul || op == ChainOp::RightAdj) std::reverse(s.begin(), s.end());
    seqs.emplace_back(std::move(s), &c);
  }
  std::sort(seqs.begin(), seqs.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });

  auto step = [&](const Weight& deg, const std::vector<Laurent>& in, int i, Weight& ndeg) {
    std::vector<Laurent> out;
    if (op == ChainOp::RightMul || op == ChainOp::LeftMul) {
      ndeg = add(deg, rd.simple(i));
      const WordSpace& s2 = alg.space_with_removal(ndeg);
      const int len = s2.length;
      const int d2 = 2 * rd.d(i);
      const int sign = op == ChainOp::RightMul ? 1 : -1;
      out.assign(s2.size(), Laurent());
      Laurent acc;
      for (std::size_t j = 0; j < s2.size(); ++j) {
        acc = Laurent();
        const Word& w = s2.words[j];
        for (int p = 0; p < len; ++p) {
          if (w[p] != i) continue;
          const Laurent& src = in[s2.rem_index[j * len + p]];
          if (src.is_zero()) continue;
          acc.add_shifted(src, sign * s2.rem_exp[j * len + p]);
        }
        if (acc.is_zero()) continue;
        out[j] = acc.shifted(d2);
        out[j].add_shifted(acc, -d2, -1);
      }
    } else {
      ndeg = sub(deg, rd.simple(i));
      if (has_negative(ndeg)) return out;
      const auto& table =
          alg.append_table(ndeg, i, op == ChainOp::RightAdj ? Side::Right : Side::Left);
      out.resize(table.size());
      for (std::size_t j = 0; j < table.size(); ++j) out[j] = in[table[j]];
    }
    return out;
  };

  std::vector<Laurent> acc;
  bool acc_init = false;
  std::vector<std::pair<Weight, std::vector<Laurent>>> levels;
  levels.emplace_back(start_deg, start);
  Word prev;
  for (const auto& [seq, coeff] : seqs) {
    std::size_t common = 0;
    while (common < prev.size() && common < seq.size() && common + 1 < levels.size() &&
           prev[common] == seq[common])
      ++common;
    levels.resize(common + 1);
    for (std::size_t d = common; d < seq.size(); ++d) {
      Weight nd;
      auto v = step(levels.back().first, levels.back().second, seq[d], nd);
      levels.emplace_back(std::move(nd), std::move(v));
    }
    prev = seq;
    const auto& [deg, vec] = levels.back();
    if (!acc_init) {
      out_deg = deg;
      acc.assign(vec.size(), Laurent());
      acc_init = true;
    } else if (deg != out_deg) {
      raise(ErrorKind::InvalidArgument, "inhomogeneous operand in a product");
    }
    const Laurent& c = *coeff;
    if (c.is_monomial() && (c.leading() == 1 || c.leading() == -1)) {
      const int sgn = c.leading() == 1 ? 1 : -1;
      for (std::size_t j = 0; j < vec.size(); ++j)
        if (!vec[j].is_zero()) acc[j].add_shifted(vec[j], c.low(), sgn);
    } else {
      for (std::size_t j = 0; j < vec.size(); ++j)
        if (!vec[j].is_zero()) acc[j] += c * vec[j];
    }
  }
  if (!acc_init) {
    // no terms: the result is zero; its degree is left to the caller
    out_deg = start_deg;
  }
  return acc;
}

void enumerate_words(const RootDatum& rd, Weight& rem, Word& cur, std::vector<Word>& out) {
  bool done = true;
  for (int i = 0; i < rd.rank(); ++i) {
    if (rem[i] == 0) continue;
    done = false;
    --rem[i];
    cur.push_back(i);
    enumerate_words(rd, rem, cur, out);
    cur.pop_back();
    ++rem[i];
  }
  if (done) out.push_back(cur);
}

}  // namespace

int WordSpace::find(const Word& w) const {
  auto it = index.find(w);
  return it == index.end() ? -1 : it->second;
}

Algebra::Algebra(RootDatum rd, std::size_t max_words) : rd_(std::move(rd)), max_words_(max_words) {
  for (int i = 0; i < rd_.rank(); ++i) angle1_.push_back(q_angle(1, 2 * rd_.d(i)));
}

std::size_t Algebra::word_count(const Weight& deg) const {
  if (has_negative(deg)) return 0;
  mpz_class n = 1, f;
  int total = 0;
  for (int x : deg) {
    for (int k = 1; k <= x; ++k) {
      ++total;
      n *= total;
      n /= k;
    }
  }
  if (n > mpz_class(static_cast<unsigned long>(SIZE_MAX / 2))) return SIZE_MAX / 2;
  return n.get_ui();
}

WordSpace& Algebra::raw_space(const Weight& deg) const {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  auto it = spaces_.find(deg);
  if (it != spaces_.end()) return *it->second;
  if (static_cast<int>(deg.size()) != rd_.rank())
    raise(ErrorKind::InvalidArgument, "degree has the wrong rank");
  const std::size_t count = word_count(deg);
  if (count > max_words_)
    raise(ErrorKind::DegreeTooLarge, "degree " + weight_str(deg) + " has " +
                                         std::to_string(count) + " words, above the bound " +
                                         std::to_string(max_words_));
  auto s = std::make_unique<WordSpace>();
  s->deg = deg;
  if (!has_negative(deg)) {
    s->length = height(deg);
    Weight rem = deg;
    Word cur;
    s->words.reserve(count);
    enumerate_words(rd_, rem, cur, s->words);
    s->index.reserve(s->words.size());
    for (std::size_t j = 0; j < s->words.size(); ++j)
      s->index.emplace(s->words[j], static_cast<int>(j));
  }
  WordSpace& ref = *s;
  spaces_.emplace(deg, std::move(s));
  return ref;
}

const WordSpace& Algebra::space(const Weight& deg) const { return raw_space(deg); }

const WordSpace& Algebra::space_with_removal(const Weight& deg) const {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  WordSpace& s = raw_space(deg);
  if (s.removal_ready) return s;
  const int len = s.length;
  std::vector<const WordSpace*> subs(rd_.rank(), nullptr);
  for (int i = 0; i < rd_.rank(); ++i)
    if (deg[i] > 0) subs[i] = &raw_space(sub(deg, rd_.simple(i)));
  s.rem_index.assign(s.size() * len, -1);
  s.rem_exp.assign(s.size() * len, 0);
  Word tmp;
  for (std::size_t j = 0; j < s.size(); ++j) {
    const Word& w = s.words[j];
    for (int p = 0; p < len; ++p) {
      const int i = w[p];
      int left = 0, right = 0;
      for (int k = 0; k < p; ++k) left += rd_.sym(i, w[k]);
      for (int k = p + 1; k < len; ++k) right += rd_.sym(i, w[k]);
      tmp.assign(w.begin(), w.begin() + p);
      tmp.insert(tmp.end(), w.begin() + p + 1, w.end());
      s.rem_index[j * len + p] = subs[i]->find(tmp);
      s.rem_exp[j * len + p] = right - left;
    }
  }
  s.removal_ready = true;
  return s;
}

const std::vector<std::int32_t>& Algebra::append_table(const Weight& deg, int i,
                                                       Side side) const {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  WordSpace& s = raw_space(deg);
  auto& tables = side == Side::Right ? s.append : s.prepend;
  if (tables.empty()) tables.resize(rd_.rank());
  auto& t = tables[i];
  if (!t.empty() || s.size() == 0) return t;
  const WordSpace& s2 = raw_space(add(deg, rd_.simple(i)));
  t.resize(s.size());
  Word tmp;
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (side == Side::Right) {
      tmp = s.words[j];
      tmp.push_back(i);
    } else {
      tmp.assign(1, i);
      tmp.insert(tmp.end(), s.words[j].begin(), s.words[j].end());
    }
    t[j] = s2.find(tmp);
  }
  return t;
}

const std::vector<std::int32_t>& Algebra::reverse_table(const Weight& deg) const {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  WordSpace& s = raw_space(deg);
  if (s.reverse.size() == s.size()) return s.reverse;
  s.reverse.resize(s.size());
  for (std::size_t j = 0; j < s.size(); ++j) {
    Word r(s.words[j].rbegin(), s.words[j].rend());
    s.reverse[j] = s.find(r);
  }
  return s.reverse;
}

// ---------------------------------------------------------------- NcElement

NcElement NcElement::one(const Algebra* alg) { return word(alg, {}); }

NcElement NcElement::generator(const Algebra* alg, int i) {
  alg->datum().check_node(i);
  return word(alg, {i});
}

NcElement NcElement::word(const Algebra* alg, const Word& w, const Rat& c) {
  NcElement x(alg);
  for (int i : w) alg->datum().check_node(i);
  x.add_term(w, c);
  return x;
}

void NcElement::add_term(const Word& w, const Rat& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

NcElement& NcElement::operator+=(const NcElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

NcElement& NcElement::operator-=(const NcElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

NcElement& NcElement::operator*=(const Rat& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  if (c.is_one()) return *this;
  for (auto& [w, x] : terms_) x *= c;
  return *this;
}

NcElement operator*(const NcElement& a, const NcElement& b) {
  NcElement r(a.alg_);
  for (const auto& [u, c] : a.terms_)
    for (const auto& [w, d] : b.terms_) {
      Word uw = u;
      uw.insert(uw.end(), w.begin(), w.end());
      r.add_term(uw, c * d);
    }
  return r;
}

NcElement NcElement::bar() const {
  NcElement r(alg_);
  for (const auto& [w, c] : terms_) r.add_term(Word(w.rbegin(), w.rend()), c.bar());
  return r;
}

NcElement NcElement::star() const {
  NcElement r(alg_);
  for (const auto& [w, c] : terms_) r.add_term(Word(w.rbegin(), w.rend()), c);
  return r;
}

NcElement NcElement::tilde() const {
  NcElement r(alg_);
  const RootDatum& rd = alg_->datum();
  for (const auto& [w, c] : terms_) {
    Rat b = c.bar();
    if (rd.sgn(word_degree(w)) < 0) b = -b;
    r.add_term(w, b);
  }
  return r;
}

NcElement NcElement::partial(int i, Side side) const {
  const RootDatum& rd = alg_->datum();
  rd.check_node(i);
  NcElement r(alg_);
  for (const auto& [w, c] : terms_) {
    const int len = static_cast<int>(w.size());
    int total = 0;
    for (int k = 0; k < len; ++k) total += rd.sym(i, w[k]);
    int left = 0;
    for (int p = 0; p < len; ++p) {
      const int here = rd.sym(i, w[p]);
      if (w[p] == i) {
        const int right = total - left - here;
        const int e = side == Side::Right ? right - left : left - right;
        Word rest(w.begin(), w.begin() + p);
        rest.insert(rest.end(), w.begin() + p + 1, w.end());
        r.add_term(rest, c.shifted(e));
      }
      left += here;
    }
  }
  return r;
}

Weight NcElement::word_degree(const Word& w) const {
  Weight g(alg_->rank(), 0);
  for (int i : w) ++g[i];
  return g;
}

std::map<Weight, NcElement> NcElement::components() const {
  std::map<Weight, NcElement> out;
  for (const auto& [w, c] : terms_) {
    auto it = out.try_emplace(word_degree(w), alg_).first;
    it->second.terms_.emplace(w, c);
  }
  return out;
}

bool NcElement::is_homogeneous() const { return components().size() <= 1; }

Weight NcElement::degree() const {
  if (terms_.empty()) return Weight(alg_->rank(), 0);
  Weight g = word_degree(terms_.begin()->first);
  for (const auto& [w, c] : terms_)
    if (word_degree(w) != g) raise(ErrorKind::InvalidArgument, "element is not homogeneous");
  return g;
}

std::string NcElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")*E_{";
    for (std::size_t k = 0; k < w.size(); ++k) os << (k ? " " : "") << w[k] + 1;
    os << "}";
  }
  return os.str();
}

// ------------------------------------------------------------------- PhiVec

PhiVec::PhiVec(const WordSpace* space, std::vector<Laurent> num, Laurent den)
    : space_(space), num_(std::move(num)), den_(std::move(den)) {
  if (num_.size() != space_->size()) raise(ErrorKind::Internal, "coordinate vector size mismatch");
  normalize();
}

bool PhiVec::is_zero() const {
  for (const auto& x : num_)
    if (!x.is_zero()) return false;
  return true;
}

void PhiVec::negate() {
  for (auto& x : num_) x = -x;
}

void PhiVec::normalize() {
  if (den_.is_zero()) raise(ErrorKind::DivisionByZero, "zero denominator");
  if (den_.is_one()) return;
  if (is_zero()) {
    den_ = Laurent(1L);
    return;
  }
  // Exact division of every entry settles the common case.
  {
    std::vector<Laurent> q;
    q.reserve(num_.size());
    bool ok = true;
    for (const auto& x : num_) {
      auto r = x.divide_exact(den_);
      if (!r) {
        ok = false;
        break;
      }
      q.push_back(std::move(*r));
    }
    if (ok) {
      num_ = std::move(q);
      den_ = Laurent(1L);
      return;
    }
  }
  Laurent g = den_;
  for (const auto& x : num_) {
    if (x.is_zero()) continue;
    g = gcd(g, x);
    if (g.is_one()) break;
  }
  if (!g.is_one()) {
    for (auto& x : num_)
      if (!x.is_zero()) x = *x.divide_exact(g);
    den_ = *den_.divide_exact(g);
  }
  const int s = den_.low();
  bool neg = den_.leading() < 0;
  if (s != 0 || neg) {
    den_ = den_.shifted(-s);
    if (neg) den_ = -den_;
    for (auto& x : num_) {
      x = x.shifted(-s);
      if (neg) x = -x;
    }
  }
}

PhiVec& PhiVec::operator+=(const PhiVec& o) {
  if (space_ != o.space_) raise(ErrorKind::Internal, "adding elements of different degrees");
  if (den_ == o.den_) {
    for (std::size_t j = 0; j < num_.size(); ++j) num_[j] += o.num_[j];
    normalize();
    return *this;
  }
  Laurent g = gcd(den_, o.den_);
  Laurent m1 = *o.den_.divide_exact(g), m2 = *den_.divide_exact(g);
  for (std::size_t j = 0; j < num_.size(); ++j) {
    Laurent t = num_[j] * m1;
    if (!o.num_[j].is_zero()) t += o.num_[j] * m2;
    num_[j] = std::move(t);
  }
  den_ = den_ * m1;
  normalize();
  return *this;
}

PhiVec& PhiVec::operator-=(const PhiVec& o) {
  PhiVec t = o;
  t.negate();
  return *this += t;
}

PhiVec& PhiVec::operator*=(const Rat& c) {
  if (c.is_zero()) {
    for (auto& x : num_) x = Laurent();
    den_ = Laurent(1L);
    return *this;
  }
  if (c.is_one()) return *this;
  if (!c.num().is_one())
    for (auto& x : num_)
      if (!x.is_zero()) x = x * c.num();
  den_ = den_ * c.den();
  normalize();
  return *this;
}

// ------------------------------------------------------------------ Element

Element::Element(const Algebra* alg, const Weight& deg)
    : alg_(alg), deg_(deg), nc_(NcElement(alg)) {
  const WordSpace* s = &alg->space(deg);
  phi_ = PhiVec(s, std::vector<Laurent>(s->size()));
}

Element Element::one(const Algebra* alg) {
  Element e(alg, Weight(alg->rank(), 0));
  e.phi_.num_[0] = Laurent(1L);
  e.nc_ = NcElement::one(alg);
  return e;
}

Element Element::generator(const Algebra* alg, int i) {
  alg->datum().check_node(i);
  Element e(alg, alg->datum().simple(i));
  e.phi_.num_[e.phi_.space_->find({i})] = alg->angle1(i);
  e.nc_ = NcElement::generator(alg, i);
  return e;
}

Element Element::divided_generator(const Algebra* alg, int i, int n) {
  if (n < 0) raise(ErrorKind::InvalidArgument, "negative divided power");
  NcElement z = NcElement::word(alg, Word(n, i),
                                Rat(Laurent(1L), q_angle_factorial(n, 2 * alg->datum().d(i))));
  return from_nc(z, scale(alg->datum().simple(i), n));
}

Element Element::from_nc(const NcElement& x, bool keep_nc) {
  return from_nc(x, x.degree(), keep_nc);
}

Element Element::from_nc(const NcElement& x, const Weight& deg, bool keep_nc) {
  return one(x.algebra()).rmul(x).with_degree_check(deg, keep_nc);
}

Element Element::from_phi(const Algebra* alg, PhiVec phi) {
  Element e;
  e.alg_ = alg;
  e.deg_ = phi.space()->deg;
  e.phi_ = std::move(phi);
  return e;
}

Element Element::with_degree_check(const Weight& deg, bool keep_nc) const {
  Element e = *this;
  if (e.deg_ != deg) {
    if (!e.is_zero() || (e.nc_ && !e.nc_->empty()))
      raise(ErrorKind::InvalidArgument, "element is not of degree " + weight_str(deg));
    e = Element(alg_, deg);
  }
  if (!keep_nc) e.nc_.reset();
  return e;
}

Rat Element::phi_at(const Word& w) const {
  int j = phi_.space_->find(w);
  if (j < 0) return Rat();
  return phi_.at(static_cast<std::size_t>(j));
}

const NcElement& Element::nc() const {
  if (!nc_) raise(ErrorKind::Internal, "element carries no free-algebra representative");
  return *nc_;
}

Rat Element::scalar() const {
  if (height(deg_) == 0 && !has_negative(deg_)) return phi_.at(0);
  if (is_zero()) return Rat();
  raise(ErrorKind::InvalidArgument, "element of nonzero degree has no scalar value");
}

Element& Element::operator+=(const Element& o) {
  if (deg_ != o.deg_) {
    if (o.is_zero()) return *this;
    if (is_zero()) {
      *this = o;
      return *this;
    }
    raise(ErrorKind::InvalidArgument, "adding elements of different degrees");
  }
  phi_ += o.phi_;
  if (nc_ && o.nc_)
    *nc_ += *o.nc_;
  else
    nc_.reset();
  return *this;
}

Element& Element::operator-=(const Element& o) {
  Element t = o;
  t *= Rat(-1L);
  return *this += t;
}

Element& Element::operator*=(const Rat& c) {
  phi_ *= c;
  if (nc_) *nc_ *= c;
  return *this;
}

bool operator==(const Element& a, const Element& b) {
  if (a.deg_ != b.deg_) return a.is_zero() && b.is_zero();
  if (a.phi_.den() == b.phi_.den()) return a.phi_.num() == b.phi_.num();
  const auto &an = a.phi_.num(), &bn = b.phi_.num();
  for (std::size_t j = 0; j < an.size(); ++j) {
    if (an[j].is_zero() != bn[j].is_zero()) return false;
    if (!an[j].is_zero() && an[j] * b.phi_.den() != bn[j] * a.phi_.den()) return false;
  }
  return true;
}

Element Element::rmul(const NcElement& z) const {
  ScaledTerms st = scaled_terms(z);
  Element r;
  r.alg_ = alg_;
  if (st.terms.empty()) {
    r = Element(alg_, deg_);
    if (!nc_) r.nc_.reset();
    return r;
  }
  Weight od;
  auto num = run_chain(*alg_, deg_, phi_.num_, st.terms, ChainOp::RightMul, od);
  r.deg_ = od;
  r.phi_ = PhiVec(&alg_->space(od), std::move(num), phi_.den_ * st.den);
  if (nc_) r.nc_ = *nc_ * z;
  return r;
}

Element Element::lmul(const NcElement& z) const {
  ScaledTerms st = scaled_terms(z);
  Element r;
  r.alg_ = alg_;
  if (st.terms.empty()) {
    r = Element(alg_, deg_);
    if (!nc_) r.nc_.reset();
    return r;
  }
  Weight od;
  auto num = run_chain(*alg_, deg_, phi_.num_, st.terms, ChainOp::LeftMul, od);
  r.deg_ = od;
  r.phi_ = PhiVec(&alg_->space(od), std::move(num), phi_.den_ * st.den);
  if (nc_) r.nc_ = z * *nc_;
  return r;
}

Element operator*(const Element& a, const Element& b) {
  if (b.nc_ && (!a.nc_ || b.nc_->size() <= a.nc_->size())) {
    if (b.nc_->empty()) {
      Element z(a.alg_, add(a.deg_, b.deg_));
      if (!a.nc_) z.nc_.reset();
      return z;
    }
    return a.rmul(*b.nc_);
  }
  if (a.nc_) {
    if (a.nc_->empty()) {
      Element z(a.alg_, add(a.deg_, b.deg_));
      if (!b.nc_) z.nc_.reset();
      return z;
    }
    return b.lmul(*a.nc_);
  }
  return Element::shuffle_product(a, b);
}

Element Element::shuffle_product(const Element& a, const Element& b) {
  const Algebra& alg = *a.alg_;
  const RootDatum& rd = alg.datum();
  const Weight deg = add(a.deg_, b.deg_);
  const WordSpace& s = alg.space(deg);
  const WordSpace& sa = *a.phi_.space_;
  const WordSpace& sb = *b.phi_.space_;
  std::vector<Laurent> out(s.size());
  const int pre = -rd.pairing(a.deg_, b.deg_);
  for (std::size_t j = 0; j < s.size(); ++j) {
    const Word& w = s.words[j];
    const int len = static_cast<int>(w.size());
    Weight need = a.deg_;
    Weight degc(rd.rank(), 0);
    Word ws, wc;
    Laurent acc;
    std::function<void(int, int)> rec = [&](int p, int e) {
      if (p == len) {
        const int ja = sa.find(ws), jb = sb.find(wc);
        const Laurent& xa = a.phi_.num_[ja];
        const Laurent& xb = b.phi_.num_[jb];
        if (xa.is_zero() || xb.is_zero()) return;
        acc.add_shifted(xa * xb, 2 * e);
        return;
      }
      const int i = w[p];
      const int remaining_c = len - p - height(need);
      if (need[i] > 0) {
        --need[i];
        ws.push_back(i);
        rec(p + 1, e + rd.pairing_simple(i, degc));
        ws.pop_back();
        ++need[i];
      }
      if (remaining_c > 0) {
        wc.push_back(i);
        ++degc[i];
        rec(p + 1, e);
        --degc[i];
        wc.pop_back();
      }
    };
    rec(0, 0);
    if (!acc.is_zero()) out[j] = acc.shifted(pre);
  }
  Element r;
  r.alg_ = a.alg_;
  r.deg_ = deg;
  r.phi_ = PhiVec(&s, std::move(out), a.phi_.den_ * b.phi_.den_);
  if (a.nc_ && b.nc_) r.nc_ = *a.nc_ * *b.nc_;
  return r;
}

Element Element::bar() const {
  Element r = *this;
  const int sg = alg_->datum().sgn(deg_);
  const int s = phi_.den_.high();
  for (auto& x : r.phi_.num_) {
    x = x.bar().shifted(s);
    if (sg < 0) x = -x;
  }
  r.phi_.den_ = phi_.den_.bar().shifted(s);
  r.phi_.normalize();
  if (nc_) r.nc_ = nc_->bar();
  return r;
}

Element Element::star() const {
  Element r = *this;
  const auto& rev = alg_->reverse_table(deg_);
  for (std::size_t j = 0; j < rev.size(); ++j) r.phi_.num_[j] = phi_.num_[rev[j]];
  if (nc_) r.nc_ = nc_->star();
  return r;
}

Element Element::tilde() const {
  Element r = bar().star();
  if (alg_->datum().sgn(deg_) < 0) r *= Rat(-1L);
  return r;
}

Element Element::pow(int n) const {
  if (n < 0) raise(ErrorKind::InvalidArgument, "negative power");
  Element r = one(alg_);
  for (int k = 0; k < n; ++k) r = r * *this;
  return r;
}

namespace {
std::vector<Laurent> gather(const std::vector<Laurent>& in, const std::vector<std::int32_t>& t) {
  std::vector<Laurent> out(t.size());
  for (std::size_t j = 0; j < t.size(); ++j) out[j] = in[t[j]];
  return out;
}
}  // namespace

Element Element::partial(int i, Side side, int n) const {
  const RootDatum& rd = alg_->datum();
  rd.check_node(i);
  if (n < 0) raise(ErrorKind::InvalidArgument, "negative derivative order");
  Element r = *this;
  for (int k = 0; k < n; ++k) {
    Weight nd = sub(r.deg_, rd.simple(i));
    const WordSpace* s = &alg_->space(nd);
    std::vector<Laurent> num;
    if (!has_negative(nd)) num = gather(r.phi_.num_, alg_->append_table(nd, i, side));
    r.deg_ = nd;
    r.phi_ = PhiVec(s, std::move(num), r.phi_.den_ * alg_->angle1(i));
    if (r.nc_) r.nc_ = r.nc_->partial(i, side);
  }
  return r;
}

Element Element::partial_divided(int i, Side side, int n) const {
  const RootDatum& rd = alg_->datum();
  rd.check_node(i);
  if (n < 0) raise(ErrorKind::InvalidArgument, "negative derivative order");
  Element r = *this;
  r.nc_.reset();
  for (int k = 0; k < n; ++k) {
    Weight nd = sub(r.deg_, rd.simple(i));
    std::vector<Laurent> num;
    if (!has_negative(nd)) num = gather(r.phi_.num_, alg_->append_table(nd, i, side));
    r.deg_ = nd;
    r.phi_.space_ = &alg_->space(nd);
    r.phi_.num_ = std::move(num);
  }
  r.phi_.den_ = r.phi_.den_ * q_angle_factorial(n, 2 * rd.d(i));
  r.phi_.normalize();
  if (nc_) {
    NcElement z = *nc_;
    for (int k = 0; k < n; ++k) z = z.partial(i, side);
    z *= Rat(Laurent(1L), q_round_factorial(n, 2 * rd.d(i)));
    r.nc_ = std::move(z);
  }
  return r;
}

Element Element::adjoint(const NcElement& z, Side side) const {
  ScaledTerms st = scaled_terms(z);
  Element r;
  r.alg_ = alg_;
  if (st.terms.empty()) raise(ErrorKind::InvalidArgument, "adjoint of the zero operator");
  Weight od;
  auto num = run_chain(*alg_, deg_, phi_.num_, st.terms,
                       side == Side::Right ? ChainOp::RightAdj : ChainOp::LeftAdj, od);
  r.deg_ = sub(deg_, z.degree());
  const WordSpace* s = &alg_->space(r.deg_);
  if (num.size() != s->size()) num.assign(s->size(), Laurent());
  r.phi_ = PhiVec(s, std::move(num), phi_.den_ * st.den);
  return r;
}

int Element::ell(int i, Side side) const {
  if (is_zero()) raise(ErrorKind::ZeroElement, "ell of the zero element");
  int best = 0;
  const WordSpace& s = *phi_.space_;
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (phi_.num_[j].is_zero()) continue;
    const Word& w = s.words[j];
    int k = 0;
    if (side == Side::Right)
      while (k < static_cast<int>(w.size()) && w[w.size() - 1 - k] == i) ++k;
    else
      while (k < static_cast<int>(w.size()) && w[k] == i) ++k;
    best = std::max(best, k);
  }
  return best;
}

Element Element::partial_top(int i, Side side) const {
  return partial_divided(i, side, ell(i, side));
}

Rat Element::pair(const NcElement& y) const {
  std::vector<std::pair<Word, Laurent>> terms;
  NcElement yd(alg_);
  for (const auto& [w, c] : y.terms())
    if (y.word_degree(w) == deg_) yd.add_term(w, c);
  ScaledTerms st = scaled_terms(yd);
  Laurent acc;
  for (const auto& [w, c] : st.terms) {
    const int j = phi_.space_->find(w);
    const Laurent& x = phi_.num_[j];
    if (!x.is_zero()) acc += c * x;
  }
  return Rat(acc, phi_.den_ * st.den);
}

Rat Element::pair(const Element& y) const {
  if (deg_ != y.deg_) return Rat();
  if (y.nc_) return pair(*y.nc_);
  if (nc_) return y.pair(*nc_);
  raise(ErrorKind::Internal, "pairing needs a free-algebra representative on one side");
}

bool Element::lattice_member() const {
  const RootDatum& rd = alg_->datum();
  const WordSpace& s = *phi_.space_;
  for (std::size_t j = 0; j < s.size(); ++j) {
    const Laurent& x = phi_.num_[j];
    if (x.is_zero()) continue;
    const Word& w = s.words[j];
    Laurent f(1L);
    for (std::size_t p = 0; p < w.size();) {
      std::size_t q = p;
      while (q < w.size() && w[q] == w[p]) ++q;
      f *= q_angle_factorial(static_cast<int>(q - p), 2 * rd.d(w[p]));
      p = q;
    }
    if (phi_.den_.is_one()) {
      auto r = x.divide_exact(f);
      if (!r || !membership(*r, ScalarSet::A0)) return false;
    } else if (!membership(Rat(x, phi_.den_ * f), ScalarSet::A0)) {
      return false;
    }
  }
  return true;
}

std::string Element::str() const {
  if (nc_) return nc_->str();
  std::ostringstream os;
  os << "phi[";
  bool first = true;
  const WordSpace& s = *phi_.space_;
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (phi_.num_[j].is_zero()) continue;
    if (!first) os << ", ";
    first = false;
    os << "E_{";
    for (std::size_t k = 0; k < s.words[j].size(); ++k)
      os << (k ? " " : "") << s.words[j][k] + 1;
    os << "}: " << phi_.at(j).str();
  }
  os << "]";
  return os.str();
}

// ------------------------------------------------------- free-algebra level

NcElement multiply(const NcElement& x, const NcElement& y) { return x * y; }

Rat pair(const NcElement& x, const NcElement& y) {
  Rat acc;
  auto cy = y.components();
  for (const auto& [deg, xc] : x.components()) {
    auto it = cy.find(deg);
    if (it == cy.end()) continue;
    acc += Element::from_nc(xc, deg, false).pair(it->second);
  }
  return acc;
}

bool is_zero(const NcElement& x) {
  for (const auto& [deg, xc] : x.components())
    if (!Element::from_nc(xc, deg, false).is_zero()) return false;
  return true;
}

bool lattice_member(const NcElement& x) {
  for (const auto& [deg, xc] : x.components())
    if (!Element::from_nc(xc, deg, false).lattice_member()) return false;
  return true;
}

int ell(int i, Side side, const NcElement& x) {
  int best = -1;
  for (const auto& [deg, xc] : x.components()) {
    Element e = Element::from_nc(xc, deg, false);
    if (e.is_zero()) continue;
    best = std::max(best, e.ell(i, side));
  }
  if (best < 0) raise(ErrorKind::ZeroElement, "ell of the zero element");
  return best;
}

NcElement partial_top(int i, Side side, const NcElement& x) {
  const int n = ell(i, side, x);
  NcElement z = x;
  for (int k = 0; k < n; ++k) z = z.partial(i, side);
  z *= Rat(Laurent(1L), q_round_factorial(n, 2 * x.algebra()->datum().d(i)));
  return z;
}

}  // namespace qschubert
