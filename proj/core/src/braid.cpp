#include "qschubert/braid.hpp"

namespace qschubert {

namespace {

Element divided_power_word(const Algebra& alg, int i, int n) {
  return Element::divided_generator(&alg, i, n);
}

}  // namespace

Element ul_E(int i, Variant variant, int r, const Element& x) {
  const Algebra& alg = *x.algebra();
  const RootDatum& rd = alg.datum();
  rd.check_node(i);
  if (r < 0) raise(ErrorKind::InvalidArgument, "negative order");
  if (r == 0) return x;
  const int di = rd.d(i);
  const int h = rd.coroot(i, x.degree());
  Element out(&alg, add(x.degree(), scale(rd.simple(i), r)));
  if (!x.has_nc()) out.drop_nc();
  for (int r1 = 0; r1 <= r; ++r1) {
    const int r2 = r - r1;
    // Plus: (-1)^{r1} q_i^{(r+h-1)(r1-r2)/2}; Op: (-1)^{r2} q_i^{(r+h-1)(r2-r1)/2}
    const int e = variant == Variant::Plus ? di * (r + h - 1) * (r1 - r2)
                                           : di * (r + h - 1) * (r2 - r1);
    const int sign = ((variant == Variant::Plus ? r1 : r2) % 2) ? -1 : 1;
    Element t = x;
    if (r1 > 0) t = divided_power_word(alg, i, r1) * t;
    if (r2 > 0) t = t * divided_power_word(alg, i, r2);
    t *= Rat(Laurent::monomial(e, sign));
    out += t;
  }
  return out;
}

Sl2Decomposition sl2_decompose(int i, const Element& x) {
  const Algebra& alg = *x.algebra();
  const RootDatum& rd = alg.datum();
  rd.check_node(i);
  if (!x.partial(i, Side::Right).is_zero())
    raise(ErrorKind::NotInKernel, "element is not killed by the right derivation");
  Sl2Decomposition dec;
  dec.node = i;
  const int h = rd.coroot(i, x.degree());
  Element rem = x;
  int guard = height(x.degree()) + 2;
  while (!rem.is_zero()) {
    if (guard-- < 0) raise(ErrorKind::Internal, "string decomposition does not terminate");
    const int n = rem.ell(i, Side::Left);
    const Laurent b = q_binomial(2 * n - h, n, 2 * rd.d(i));
    if (b.is_zero()) raise(ErrorKind::Internal, "vanishing binomial in string decomposition");
    Element xn = rem.partial_divided(i, Side::Left, n);
    xn *= Rat(Laurent(1L), b);
    rem -= ul_E(i, Variant::Op, n, xn);
    auto it = dec.parts.find(n);
    if (it != dec.parts.end())
      raise(ErrorKind::Internal, "string decomposition revisits a level");
    dec.parts.emplace(n, std::move(xn));
  }
  return dec;
}

Element T(int i, const Element& x) {
  const Algebra& alg = *x.algebra();
  const RootDatum& rd = alg.datum();
  rd.check_node(i);
  if (!x.partial(i, Side::Right).is_zero())
    raise(ErrorKind::DomainViolation, "T_" + std::to_string(i + 1) +
                                          " is applied outside the kernel of the derivation");
  const Weight target = rd.reflect(i, x.degree());
  if (x.is_zero()) {
    if (!is_nonnegative(target)) raise(ErrorKind::DomainViolation, "degree leaves Q+");
    Element z(&alg, target);
    if (!x.has_nc()) z.drop_nc();
    return z;
  }
  const int h = rd.coroot(i, x.degree());
  Sl2Decomposition dec = sl2_decompose(i, x);
  Element out(&alg, target);
  if (!x.has_nc()) out.drop_nc();
  for (const auto& [r, xr] : dec.parts) out += ul_E(i, Variant::Plus, r - h, xr);
  return out;
}

Element T_inv(int i, const Element& y) {
  const RootDatum& rd = y.algebra()->datum();
  rd.check_node(i);
  if (!y.partial(i, Side::Left).is_zero())
    raise(ErrorKind::DomainViolation, "T_" + std::to_string(i + 1) +
                                          "^-1 is applied outside the kernel of the left derivation");
  return T(i, y.star()).star();
}

Element T_word(const std::vector<int>& letters, const Element& x) {
  Element r = x;
  for (std::size_t k = letters.size(); k-- > 0;) r = T(letters[k], r);
  return r;
}

Element T_inv_word(const std::vector<int>& letters, const Element& y) {
  // (T_{i_1} ... T_{i_k})^{-1} = T_{i_k}^{-1} ... T_{i_1}^{-1}
  Element r = y;
  for (int i : letters) r = T_inv(i, r);
  return r;
}

Element root_vector(const Algebra& alg, const ReducedWord& word, int k) {
  if (k < 0 || k >= word.length()) raise(ErrorKind::InvalidArgument, "root index out of range");
  std::vector<int> prefix(word.letters().begin(), word.letters().begin() + k);
  return T_word(prefix, Element::generator(&alg, word.letter(k)));
}

std::vector<Element> root_vectors(const Algebra& alg, const ReducedWord& word) {
  std::vector<Element> out;
  for (int k = 0; k < word.length(); ++k) out.push_back(root_vector(alg, word, k));
  return out;
}

Element E_ji_l(const Algebra& alg, int i, int j, int l) {
  const RootDatum& rd = alg.datum();
  rd.check_node(i);
  rd.check_node(j);
  if (i == j) raise(ErrorKind::InvalidArgument, "nodes must differ");
  if (l < 0 || l > -rd.a(i, j)) raise(ErrorKind::InvalidArgument, "exponent out of range");
  Element x = ul_E(i, Variant::Op, l, Element::generator(&alg, j));
  x *= Rat(Laurent(1L), q_binomial(-rd.a(i, j), l, 2 * rd.d(i)));
  return x;
}

Laurent cg_coefficient(int r, int t1, int t2, int m, int n) {
  if (m < 0 || n < 0 || r < 0 || t1 < 0 || t2 < 0 || r > std::min(m, n) || t1 > m || t2 > n)
    raise(ErrorKind::InvalidArgument, "Clebsch-Gordan indices out of range");
  // variable s with v = s^2
  const Laurent denom = q_round_factorial(n - r, 2) * q_round_factorial(m - r, 2);
  Laurent sum;
  for (int k = 0; k <= r; ++k) {
    const int l = r - k;
    if (k > t1 || l > t2) continue;
    Laurent term = q_round_factorial(n - l, 2) * q_round_factorial(m - k, 2);
    term = *term.divide_exact(denom);
    term *= q_binomial(t1, k, 2) * q_binomial(t2, l, 2);
    const int e = 2 * (l * t1 - k * t2) + (k - l) * (1 + m + n - r);
    sum.add_shifted(term, e, l % 2 ? -1 : 1);
  }
  return sum.shifted(m * t2 - n * t1);
}

}  // namespace qschubert
