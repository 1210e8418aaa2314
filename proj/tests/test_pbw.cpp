#include <random>

#include "support.hpp"

using namespace qschubert;

namespace {

// prod_k prod_{t <= a_k} (1 - q_{i_k}^{-2t})
Laurent orth_factor(const PBWFrame& f, const Exps& a) {
  Laurent r(1L);
  for (int k = 0; k < f.length(); ++k)
    for (int t = 1; t <= a[k]; ++t)
      r *= Laurent(1L) - vpow(-4 * f.datum().d(f.word().letter(k)) * t);
  return r;
}

}  // namespace

TEST_SUITE("pbw") {

TEST_CASE("prefactors and monomials") {
  Algebra alg(RootDatum::preset("A2"));
  PBWFrame f(alg, make_reduced_word(alg.datum(), {0, 1, 0}));
  CHECK(f.q_prefactor_exp({1, 0, 0}) == 0);
  CHECK(f.q_prefactor_exp({0, 0, 0}) == 0);
  CHECK(f.q_prefactor({1, 0, 1}) == vpow(-1));
  Element e1 = Element::generator(&alg, 0), e2 = Element::generator(&alg, 1);
  CHECK(f.monomial({1, 0, 1}) == e1 * e2 * Rat(vpow(-1)));
  CHECK(f.monomial({0, 1, 0}) == f.root_vector(1));
  CHECK(f.monomial({2, 0, 0}, MonomialKind::Divided) == Element::divided_generator(&alg, 0, 2));
  CHECK(Element::from_nc(f.monomial_nc({1, 1, 1})) == f.monomial({1, 1, 1}));
}

TEST_CASE("expansion") {
  Algebra alg(RootDatum::preset("A2"));
  PBWFrame f(alg, make_reduced_word(alg.datum(), {0, 1, 0}));
  Element e1 = Element::generator(&alg, 0), e2 = Element::generator(&alg, 1);
  PBWVector v = f.expand(e1 * e2);
  CHECK(v == PBWVector{{{1, 0, 1}, Rat(vpow(1))}});
  CHECK(f.expand(f.root_vector(1)) == PBWVector{{{0, 1, 0}, Rat(1L)}});
  PBWFrame small(alg, make_reduced_word(alg.datum(), {0}));
  CHECK(error_of([&] { small.expand(e2); }) == ErrorKind::NotInCell);

  std::mt19937 rng(1);
  Algebra c2(RootDatum::preset("C2"));
  PBWFrame g(c2, make_reduced_word(c2.datum(), longest_word(c2.datum())));
  for (const auto& deg : g.degrees_up_to(5)) {
    const auto& sl = g.slice(deg);
    PBWVector x;
    std::uniform_int_distribution<int> c(-2, 2), e(-3, 3);
    for (const auto& a : sl) x[a] = Rat(vpow(e(rng), c(rng)));
    for (auto it = x.begin(); it != x.end();) it = it->second.is_zero() ? x.erase(it) : ++it;
    Element y = g.reconstruct(x, deg);
    CHECK(g.expand(y) == x);
    CHECK(g.reconstructs(x, y));
  }
}

TEST_CASE("orthogonality of PBW monomials") {
  for (const char* name : {"A2", "B2", "A3"}) {
    CAPTURE(name);
    Algebra alg(RootDatum::preset(name));
    PBWFrame f(alg, make_reduced_word(alg.datum(), longest_word(alg.datum())));
    for (const auto& deg : f.degrees_up_to(4)) {
      const auto& sl = f.slice(deg);
      for (const auto& a : sl) {
        CHECK(f.monomial_norm(a) == vpow(alg.datum().mu_exponent(deg)) * orth_factor(f, a));
        for (const auto& b : sl) {
          Rat p = f.monomial(a).pair(f.monomial_nc(b));
          CHECK(p == (a == b ? Rat(f.monomial_norm(a)) : Rat(0L)));
        }
      }
    }
  }
}

TEST_CASE("two pairing routes agree") {
  Algebra alg(RootDatum::preset("B2"));
  PBWFrame f(alg, make_reduced_word(alg.datum(), {0, 1, 0, 1}));
  std::mt19937 rng(4);
  for (const auto& deg : f.degrees_up_to(4)) {
    const auto& sl = f.slice(deg);
    std::uniform_int_distribution<std::size_t> pick(0, sl.size() - 1);
    Element x = f.monomial(sl[pick(rng)]) + f.monomial(sl[pick(rng)]) * Rat(vpow(3));
    for (const auto& a : sl) CHECK(f.pair_with_monomial(x, a) == f.peel_pair(x, a));
  }
}

TEST_CASE("pairing with dual monomials") {
  // <<X^a, X^{<a>}>> = v^{sum_k a_k (eta(alpha^(k)) - d_{i_k})}
  for (const char* name : {"A2", "C2", "G2"}) {
    CAPTURE(name);
    Algebra alg(RootDatum::preset(name));
    PBWFrame f(alg, make_reduced_word(alg.datum(), longest_word(alg.datum())));
    for (const auto& deg : f.degrees_up_to(3))
      for (const auto& a : f.slice(deg)) {
        Rat p = f.monomial(a).pair(f.monomial_nc(a, MonomialKind::Divided));
        CHECK(p == Rat(vpow(f.dual_exp(a))));
        int e = 0;
        for (int k = 0; k < f.length(); ++k) {
          const Weight& r = f.word().root(k);
          int eta = 0;
          for (int i = 0; i < alg.rank(); ++i) eta += r[i] * alg.datum().d(i);
          e += a[k] * (eta - alg.datum().d(f.word().letter(k)));
        }
        CHECK(f.dual_exp(a) == e);
      }
  }
}

TEST_CASE("straightening") {
  Algebra a2(RootDatum::preset("A2"));
  PBWFrame f(a2, make_reduced_word(a2.datum(), {0, 1, 0}));
  CHECK(f.straighten(0, 2) == PBWVector{{{0, 1, 0}, Rat(1L)}});
  CHECK(f.straighten(0, 1).empty());
  CHECK(error_of([&] { f.straighten(2, 1); }) == ErrorKind::InvalidArgument);

  Algebra a3(RootDatum::preset("A3"));
  PBWFrame g(a3, make_reduced_word(a3.datum(), {1, 0, 2, 1}));
  CHECK(g.straighten(0, 3) == PBWVector{{{0, 1, 1, 0}, Rat(1L)}});
  // repetition free words give quantum planes
  PBWFrame h(a3, make_reduced_word(a3.datum(), {0, 1, 2}));
  for (int k = 0; k < 3; ++k)
    for (int l = k + 1; l < 3; ++l) CHECK(h.straighten(k, l).empty());
  // every relation of a longest word is integral and supported in between
  Algebra g2(RootDatum::preset("G2"));
  PBWFrame w(g2, make_reduced_word(g2.datum(), longest_word(g2.datum())));
  for (int k = 0; k < w.length(); ++k)
    for (int l = k + 1; l < w.length(); ++l) CHECK_NOTHROW(w.straighten(k, l));
}

TEST_CASE("order and bar matrix") {
  Algebra alg(RootDatum::preset("A2"));
  PBWFrame f(alg, make_reduced_word(alg.datum(), {0, 1, 0}));
  CHECK(f.order_leq({1, 0, 1}, {1, 0, 1}));
  CHECK(f.order_leq({0, 1, 0}, {1, 0, 1}));
  CHECK_FALSE(f.order_leq({1, 0, 1}, {0, 1, 0}));
  BarMatrix m = f.bar_matrix({1, 1});
  REQUIRE(m.slice == std::vector<Exps>{{0, 1, 0}, {1, 0, 1}});
  CHECK(m.entries[0][0] == Laurent(1L));
  CHECK(m.entries[0][1].is_zero());
  CHECK(m.entries[1][0] == vpow(2) - vpow(-2));
  CHECK(m.entries[1][1] == Laurent(1L));
  CHECK(f.bar_matrix({2, 0}).entries == std::vector<std::vector<Laurent>>{{Laurent(1L)}});

  for (const char* name : {"A3", "B2", "G2"}) {
    CAPTURE(name);
    Algebra a(RootDatum::preset(name));
    PBWFrame w(a, make_reduced_word(a.datum(), longest_word(a.datum())));
    for (const auto& deg : w.degrees_up_to(4)) CHECK(bar_matrix_defects(w, deg).empty());
  }
}

TEST_CASE("Lambda commutation") {
  Algebra alg(RootDatum::preset("A3"));
  PBWFrame f(alg, make_reduced_word(alg.datum(), longest_word(alg.datum())));
  CHECK(f.lambda({1, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 1}) ==
        alg.datum().pairing(f.word().root(0), f.word().root(5)));
  // Lambda(e_k, a) = (alpha^(k), |a_{>k}| - |a_{<k}|)
  Exps a{1, 0, 2, 1, 0, 1};
  for (int k = 0; k < 6; ++k) {
    Weight up = alg.datum().zero(), down = up;
    for (int t = 0; t < 6; ++t) {
      Weight g = scale(f.word().root(t), a[t]);
      if (t > k) up = add(up, g);
      if (t < k) down = add(down, g);
    }
    Exps e(6, 0);
    e[k] = 1;
    CHECK(f.lambda(e, a) == alg.datum().pairing(f.word().root(k), sub(up, down)));
  }
  for (const auto& d : f.degrees_up_to(2))
    for (const auto& x : f.slice(d))
      for (const auto& d2 : f.degrees_up_to(2))
        for (const auto& y : f.slice(d2)) CHECK(f.lambda_commutator_check(x, y));
}

}  // TEST_SUITE
