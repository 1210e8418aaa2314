#include "qschubert/canon.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace qschubert {

namespace {

// c = sum of the strictly negative powers of g
Laurent negative_part(const Laurent& g) {
  std::vector<std::pair<int, Int>> t;
  for (const auto& [e, c] : g.terms())
    if (e < 0) t.emplace_back(e, c);
  return Laurent::from_terms(t);
}

// topological order (lower first) with ties broken by a seeded shuffle
std::vector<int> linear_extension(const SliceOrder& so, std::uint64_t seed) {
  const int n = static_cast<int>(so.slice.size());
  std::vector<int> indeg(n, 0);  // number of elements strictly below
  for (int j = 0; j < n; ++j)
    for (int t = 0; t < n; ++t)
      if (so.below[j][t]) ++indeg[j];
  std::mt19937_64 rng(seed);
  std::vector<int> ready, out;
  for (int j = 0; j < n; ++j)
    if (indeg[j] == 0) ready.push_back(j);
  while (!ready.empty()) {
    std::uniform_int_distribution<std::size_t> pick(0, ready.size() - 1);
    std::size_t k = pick(rng);
    int j = ready[k];
    ready.erase(ready.begin() + static_cast<std::ptrdiff_t>(k));
    out.push_back(j);
    for (int u = 0; u < n; ++u)
      if (so.below[u][j] && --indeg[u] == 0) ready.push_back(u);
  }
  return out;
}

Rat mu_normalized_norm(const Element& b, const PBWFrame* frame) {
  Rat nb;
  if (b.has_nc()) nb = b.pair(b.nc());
  else if (frame) nb = frame->pair(b, b);
  else raise(ErrorKind::Unsupported, "norm of an element without representative needs a frame");
  const RootDatum& rd = b.algebra()->datum();
  return nb * Rat(Laurent::monomial(-rd.mu_exponent(b.degree())));
}

std::vector<int> nodes_with_positive_ell(const Element& y) {
  std::vector<int> r;
  for (int i = 0; i < y.algebra()->rank(); ++i) {
    Weight d = y.degree();
    if (d[i] == 0) continue;
    if (!y.partial(i, Side::Right).is_zero()) r.push_back(i);
  }
  return r;
}

bool all_zero(const Weight& g) {
  for (int x : g)
    if (x != 0) return false;
  return true;
}

Rat random_cascade(const Element& b, std::mt19937_64& rng) {
  Element y = b;
  while (!all_zero(y.degree())) {
    auto nodes = nodes_with_positive_ell(y);
    if (nodes.empty()) return Rat();
    std::uniform_int_distribution<std::size_t> pick(0, nodes.size() - 1);
    y = y.partial_top(nodes[pick(rng)], Side::Right);
  }
  return y.scalar();
}

}  // namespace

std::vector<CanonicalElement> lusztig_solve(const PBWFrame& frame, const Weight& deg,
                                            const SolveOptions& opts) {
  const SliceOrder& so = frame.order(deg);
  const BarMatrix bm = frame.bar_matrix(deg);
  const int n = static_cast<int>(so.slice.size());
  for (int j = 0; j < n; ++j)
    for (int t = 0; t < n; ++t) {
      const Laurent& e = bm.entries[j][t];
      if (j == t && !e.is_one())
        raise(ErrorKind::Inconsistency, "bar matrix diagonal entry is not 1");
      if (j != t && !e.is_zero() && !so.below[j][t])
        raise(ErrorKind::Inconsistency, "bar matrix is not triangular for the order");
    }
  std::vector<int> ext = opts.shuffle_seed ? linear_extension(so, *opts.shuffle_seed) : so.topo;

  std::vector<CanonicalElement> out;
  out.reserve(n);
  for (int j = 0; j < n; ++j) {
    std::vector<Laurent> p(n);
    p[j] = Laurent(1L);
    // upper elements first, so every a'' above a' is settled when a' is reached
    for (auto it = ext.rbegin(); it != ext.rend(); ++it) {
      int t = *it;
      if (!so.below[j][t]) continue;
      Laurent g;
      for (int u = 0; u < n; ++u)
        if (u != t && !p[u].is_zero() && !bm.entries[u][t].is_zero())
          g += p[u].bar() * bm.entries[u][t];
      if (!(g + g.bar()).is_zero() || g.coeff(0) != 0)
        raise(ErrorKind::Inconsistency, "bar defect of " + exps_str(so.slice[t]) +
                                            " is not antisymmetric");
      p[t] = negative_part(g);
      if (!p[t].is_zero() && !membership(p[t], ScalarSet::Kminus))
        raise(ErrorKind::Inconsistency, "solved coefficient leaves q^-1 Z[q^-1]");
    }
    CanonicalElement ce;
    ce.a = so.slice[j];
    Element b(&frame.algebra(), deg);
    for (int t = 0; t < n; ++t) {
      if (p[t].is_zero()) continue;
      ce.pbw[so.slice[t]] = Rat(p[t]);
      b += frame.monomial(so.slice[t]) * Rat(p[t]);
    }
    if (opts.expansion_cap > 0) {
      try {
        NcElement nc(&frame.algebra());
        for (const auto& [a, c] : ce.pbw) nc += frame.monomial_nc(a, MonomialKind::Plain,
                                                                  opts.expansion_cap) * c;
        if (nc.size() <= opts.expansion_cap) ce.expansion = std::move(nc);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::InvalidArgument) throw;
      }
    }
    ce.element = std::move(b);
    if (opts.with_norms) ce.norm = mu_normalized_norm(ce.element, &frame);
    if (opts.with_strings) ce.string = greedy_string(ce.element);
    out.push_back(std::move(ce));
  }
  return out;
}

std::string Certificate::summary() const {
  std::ostringstream os;
  os << "lattice=" << lattice << " bar=" << bar_invariant << " norm=" << norm.str("v")
     << " norm_ok=" << norm_ok << " scalar=" << scalar.str("v") << " paths=" << paths_agree;
  return os.str();
}

StringDatum greedy_string(const Element& b, Rat* scalar) {
  if (b.is_zero()) raise(ErrorKind::ZeroElement, "string of the zero element");
  StringDatum s;
  Element y = b;
  while (!all_zero(y.degree())) {
    int node = -1;
    for (int i = 0; i < y.algebra()->rank() && node < 0; ++i)
      if (y.degree()[i] > 0 && !y.partial(i, Side::Right).is_zero()) node = i;
    if (node < 0) raise(ErrorKind::Internal, "nonzero element killed by every derivation");
    int l = y.ell(node, Side::Right);
    s.emplace_back(node, l);
    y = y.partial_divided(node, Side::Right, l);
  }
  if (scalar) *scalar = y.scalar();
  return s;
}

Rat cascade(const Element& b, const StringDatum& path) {
  Element y = b;
  for (const auto& [i, k] : path) {
    if (y.ell(i, Side::Right) != k)
      raise(ErrorKind::InvalidArgument, "path step is not a top derivation");
    y = y.partial_divided(i, Side::Right, k);
  }
  if (!all_zero(y.degree())) raise(ErrorKind::InvalidArgument, "path does not reach degree 0");
  return y.scalar();
}

Certificate verify_upper_global(const Element& b, const PBWFrame* frame, std::uint64_t seed) {
  if (b.is_zero()) raise(ErrorKind::ZeroElement, "cannot certify the zero element");
  Certificate c;
  c.lattice = b.lattice_member();
  c.bar_invariant = b.bar() == b;
  c.norm = mu_normalized_norm(b, frame);
  c.norm_ok = membership(c.norm, ScalarSet::OnePlusKminus);
  c.string = greedy_string(b, &c.scalar);
  if (c.scalar != Rat(1L) && c.scalar != Rat(-1L))
    raise(ErrorKind::NotSigned, "string cascade ends at " + c.scalar.str());
  std::mt19937_64 rng(seed);
  c.paths_agree = true;
  for (int k = 0; k < 3; ++k)
    if (random_cascade(b, rng) != c.scalar) c.paths_agree = false;
  return c;
}

StringDatum string_name(const Element& b, const PBWFrame* frame) {
  Certificate c = verify_upper_global(b, frame);
  if (!c.pass()) raise(ErrorKind::NotCanonical, "not in the upper global basis: " + c.summary());
  return c.string;
}

std::string string_label(const StringDatum& s) {
  std::ostringstream os;
  os << "E_{";
  bool plain = true;
  for (const auto& [i, k] : s)
    if (k != 1 || i >= 9) plain = false;
  for (std::size_t t = 0; t < s.size(); ++t) {
    if (!plain && t) os << " ";
    os << s[t].first + 1;
    if (s[t].second != 1) os << "^" << s[t].second;
  }
  os << "}";
  return os.str();
}

const PBWFrame& FrameCache::frame(const std::vector<int>& letters) {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  auto it = frames_.find(letters);
  if (it != frames_.end()) return *it->second;
  auto f = std::make_unique<PBWFrame>(*alg_, make_reduced_word(alg_->datum(), letters));
  return *frames_.emplace(letters, std::move(f)).first->second;
}

const PBWFrame& FrameCache::longest() {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  if (!longest_) longest_ = longest_word(alg_->datum());
  return frame(*longest_);
}

const std::vector<CanonicalElement>& FrameCache::basis(const std::vector<int>& letters,
                                                       const Weight& deg) {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  auto key = std::make_pair(letters, deg);
  auto it = bases_.find(key);
  if (it != bases_.end()) return it->second;
  auto set = lusztig_solve(frame(letters), deg);
  return bases_.emplace(key, std::move(set)).first->second;
}

std::vector<std::pair<std::vector<int>, Weight>> FrameCache::solved() {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  std::vector<std::pair<std::vector<int>, Weight>> out;
  for (const auto& [key, set] : bases_) out.push_back(key);
  return out;
}

int find_element(const std::vector<CanonicalElement>& set, const Element& x) {
  for (std::size_t j = 0; j < set.size(); ++j)
    if (set[j].element == x) return static_cast<int>(j);
  return -1;
}

namespace {

std::vector<Weight> sorted_roots(const ReducedWord& w) {
  auto r = w.roots();
  std::sort(r.begin(), r.end());
  return r;
}

bool same_set(const std::vector<CanonicalElement>& s1, const std::vector<CanonicalElement>& s2) {
  if (s1.size() != s2.size()) return false;
  std::vector<bool> used(s1.size(), false);
  for (const auto& e : s2) {
    bool hit = false;
    for (std::size_t j = 0; j < s1.size() && !hit; ++j)
      if (!used[j] && s1[j].element == e.element) used[j] = hit = true;
    if (!hit) return false;
  }
  return true;
}

}  // namespace

bool compare_frames(const PBWFrame& f1, const PBWFrame& f2, const Weight& deg) {
  if (&f1.algebra() != &f2.algebra())
    raise(ErrorKind::FrameMismatch, "frames over different algebras");
  if (sorted_roots(f1.word()) != sorted_roots(f2.word()))
    raise(ErrorKind::FrameMismatch, "words " + f1.word().str() + " and " + f2.word().str() +
                                        " belong to different Weyl group elements");
  return same_set(lusztig_solve(f1, deg), lusztig_solve(f2, deg));
}

void Report::merge(const Report& o) {
  checked += o.checked;
  skipped += o.skipped;
  failures.insert(failures.end(), o.failures.begin(), o.failures.end());
}

Report check_Ti_stability(FrameCache& cache, const std::vector<int>& letters, const Weight& deg,
                          int i) {
  Report rep;
  const PBWFrame& cert = cache.longest();
  for (const auto& b : cache.basis(letters, deg)) {
    if (!b.element.partial(i, Side::Right).is_zero()) {
      ++rep.skipped;
      continue;
    }
    ++rep.checked;
    const std::string tag = "T_" + std::to_string(i + 1) + " of b" + exps_str(b.a) + ": ";
    Element t = T(i, b.element);
    try {
      Certificate c = verify_upper_global(t, &cert);
      if (!c.pass()) rep.failures.push_back(tag + c.summary());
    } catch (const Error& e) {
      rep.failures.push_back(tag + e.what());
    }
    if (t.partial_top(i, Side::Right) != b.element.partial_top(i, Side::Left))
      rep.failures.push_back(tag + "top derivations disagree");
  }
  return rep;
}

Report check_embedding(FrameCache& cache, const std::vector<int>& w, const std::vector<int>& w2,
                       const Weight& deg) {
  const RootDatum& rd = cache.algebra().datum();
  ReducedWord rw = make_reduced_word(rd, w), rw2 = make_reduced_word(rd, w2);
  if (!length_additive(rd, rw, rw2))
    raise(ErrorKind::LengthNotAdditive, "l(ww') != l(w) + l(w') for " + rw.str() + " and " +
                                            rw2.str());
  std::vector<int> ww = w;
  ww.insert(ww.end(), w2.begin(), w2.end());
  Report rep;
  const auto& big = cache.basis(ww, deg);
  for (const auto& b : cache.basis(w, deg)) {
    ++rep.checked;
    if (find_element(big, b.element) < 0)
      rep.failures.push_back("b" + exps_str(b.a) + " of B(" + rw.str() + ") not in B(ww')");
  }
  Weight g = deg;  // w^{-1} deg
  for (int i : w) g = rd.reflect(i, g);
  if (is_nonnegative(g)) {
    for (const auto& b : cache.basis(w2, g)) {
      ++rep.checked;
      Element t = T_word(w, b.element);
      if (find_element(big, t) < 0)
        rep.failures.push_back("T_w b" + exps_str(b.a) + " of B(" + rw2.str() +
                               ") not in B(ww')");
    }
  }
  return rep;
}

std::vector<CanonicalElement> bi_schubert(FrameCache& cache, const std::vector<int>& w,
                                          const std::vector<int>& w2, const Weight& deg) {
  std::vector<CanonicalElement> out;
  const auto& other = cache.basis(w2, deg);
  for (const auto& b : cache.basis(w, deg))
    if (find_element(other, b.element.star()) >= 0) out.push_back(b);
  return out;
}

ShapeInfo word_shape(const RootDatum& rd, const ReducedWord& word) {
  ShapeInfo s;
  std::map<int, std::vector<int>> pos;
  for (int k = 0; k < word.length(); ++k) pos[word.letter(k)].push_back(k);
  int repeated = 0;
  for (const auto& [i, ps] : pos) {
    if (ps.size() > 2) return s;
    if (ps.size() == 2) {
      ++repeated;
      s.r = ps[0];
      s.r2 = ps[1];
    }
  }
  if (repeated == 0) {
    s.shape = WordShape::RepetitionFree;
    return s;
  }
  if (repeated > 1) return s;
  s.shape = WordShape::SingleRepetition;
  s.n.assign(word.length(), 0);
  const int i = word.letter(s.r);
  for (int k = s.r + 1; k < s.r2; ++k) s.n[k] = -rd.a(word.letter(k), i);
  return s;
}

Element single_repetition_Y(const PBWFrame& frame) {
  ShapeInfo s = word_shape(frame.datum(), frame.word());
  if (s.shape != WordShape::SingleRepetition)
    raise(ErrorKind::Unsupported, "word " + frame.word().str() + " has no single repetition");
  const int i = frame.word().letter(s.r);
  const Weight& ar = frame.word().root(s.r);
  const Weight& ar2 = frame.word().root(s.r2);
  NcElement y = frame.root_vector(s.r).nc() * frame.root_vector(s.r2).nc() *
                Rat(Laurent::monomial(frame.datum().pairing(ar, ar2)));
  y -= frame.monomial_nc(s.n) * Rat(Laurent::monomial(-2 * frame.datum().d(i)));
  return Element::from_nc(y, add(ar, ar2));
}

Element single_repetition_b(const PBWFrame& frame, const Exps& n, int l) {
  ShapeInfo s = word_shape(frame.datum(), frame.word());
  if (s.shape != WordShape::SingleRepetition)
    raise(ErrorKind::Unsupported, "word " + frame.word().str() + " has no single repetition");
  Exps e(frame.length(), 0);
  e[s.r] = e[s.r2] = 1;
  Element y = single_repetition_Y(frame);
  Element r = frame.monomial(n);
  for (int t = 0; t < l; ++t) r = r.rmul(y.nc());
  r.drop_nc();
  return r * Rat(Laurent::monomial(l * frame.lambda(n, e)));
}

std::vector<CanonicalElement> closed_form_basis(const PBWFrame& frame, const Weight& deg) {
  ShapeInfo s = word_shape(frame.datum(), frame.word());
  std::vector<CanonicalElement> out;
  for (const auto& a : frame.slice(deg)) {
    CanonicalElement ce;
    ce.a = a;
    if (s.shape == WordShape::RepetitionFree) {
      ce.element = frame.monomial(a);
    } else if (s.shape == WordShape::SingleRepetition) {
      int l = std::min(a[s.r], a[s.r2]);
      Exps n = a;
      n[s.r] -= l;
      n[s.r2] -= l;
      ce.element = single_repetition_b(frame, n, l);
    } else {
      raise(ErrorKind::Unsupported, "no closed form for word " + frame.word().str());
    }
    ce.pbw = frame.expand(ce.element, true);
    out.push_back(std::move(ce));
  }
  return out;
}

bool check_transition_matrix(const PBWFrame& frame, const Weight& deg) {
  ShapeInfo s = word_shape(frame.datum(), frame.word());
  if (s.shape != WordShape::SingleRepetition)
    raise(ErrorKind::Unsupported, "transition matrix needs a single repetition");
  const int d = frame.datum().d(frame.word().letter(s.r));
  for (const auto& a : frame.slice(deg)) {
    const int m = std::min(a[s.r], a[s.r2]);
    const int gap = a[s.r] > a[s.r2] ? a[s.r] - a[s.r2] : a[s.r2] - a[s.r];
    Element sum(&frame.algebra(), deg);
    for (int k = 0; k <= m; ++k) {
      Exps n = a;
      n[s.r] -= m;
      n[s.r2] -= m;
      for (int t = 0; t < frame.length(); ++t) n[t] += k * s.n[t];
      Laurent c = gauss_binomial(m, k, 4 * d).bar() * Laurent::monomial(-2 * d * k * (k + gap));
      sum += single_repetition_b(frame, n, m - k) * Rat(c);
    }
    if (sum != frame.monomial(a)) return false;
  }
  return true;
}

}  // namespace qschubert
