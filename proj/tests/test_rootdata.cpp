#include <algorithm>

#include "support.hpp"

using namespace qschubert;

TEST_SUITE("rootdata") {

TEST_CASE("pairings of the presets") {
  RootDatum a2 = RootDatum::preset("A2"), c2 = RootDatum::preset("C2");
  CHECK(a2.pairing(a2.simple(0), a2.simple(1)) == -1);
  CHECK(c2.pairing(c2.simple(0), c2.simple(0)) == 2);
  CHECK(c2.pairing(c2.simple(1), c2.simple(1)) == 4);
  CHECK(a2.pairing({2, 3}, a2.zero()) == 0);
  for (const auto& name : RootDatum::preset_names()) {
    RootDatum rd = RootDatum::preset(name);
    for (int i = 0; i < rd.rank(); ++i)
      for (int j = 0; j < rd.rank(); ++j) CHECK(rd.sym(i, j) == rd.sym(j, i));
  }
}

TEST_CASE("mu and sgn") {
  RootDatum a2 = RootDatum::preset("A2"), c2 = RootDatum::preset("C2");
  CHECK(a2.mu_exponent(a2.zero()) == 0);
  CHECK(a2.mu_exponent({1, 1}) == 3);
  // mu(r alpha_i) = q_i^{binom(r+1,2)}, q_i = v^{2 d_i}
  for (int r = 0; r <= 5; ++r) CHECK(c2.mu_exponent({0, r}) == 2 * 2 * r * (r + 1) / 2);
  // mu(g + g') = mu(g) mu(g') v^{(g,g')}
  Weight g{2, 1}, h{1, 3};
  CHECK(c2.mu_exponent(add(g, h)) == c2.mu_exponent(g) + c2.mu_exponent(h) + c2.pairing(g, h));
  CHECK(a2.sgn({1, 0}) == -1);
  CHECK(a2.sgn({0, 0}) == 1);
  CHECK(a2.sgn({1, 1}) == 1);
}

TEST_CASE("reflections") {
  RootDatum a2 = RootDatum::preset("A2"), c2 = RootDatum::preset("C2");
  CHECK(a2.reflect(0, {0, 1}) == Weight{1, 1});
  CHECK(a2.reflect(0, {1, 0}) == Weight{-1, 0});
  CHECK(c2.reflect(0, {0, 1}) == Weight{2, 1});
}

TEST_CASE("reduced words") {
  RootDatum a2 = RootDatum::preset("A2"), a3 = RootDatum::preset("A3"),
            c2 = RootDatum::preset("C2");
  ReducedWord w = make_reduced_word(a2, {0, 1, 0});
  CHECK(w.roots() == std::vector<Weight>{{1, 0}, {1, 1}, {0, 1}});
  try {
    make_reduced_word(a2, {0, 0});
    FAIL("expected NotReduced");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotReduced);
    CHECK(e.position() == 2);
  }
  ReducedWord c = make_reduced_word(c2, {1, 0, 1, 0});
  CHECK(c.length() == 4);
  CHECK(c.roots() == std::vector<Weight>{{0, 1}, {1, 1}, {2, 1}, {1, 0}});
  CHECK(length_additive(a2, make_reduced_word(a2, {0}), make_reduced_word(a2, {1, 0})));
  CHECK_FALSE(length_additive(a2, make_reduced_word(a2, {0}), make_reduced_word(a2, {0, 1})));
  CHECK(length_additive(a3, make_reduced_word(a3, {1}), make_reduced_word(a3, {0, 2, 1})));
}

TEST_CASE("longest words") {
  const std::pair<const char*, int> expect[] = {{"A1", 1}, {"A1xA1", 2}, {"A2", 3}, {"A3", 6},
                                                {"B2", 4}, {"C2", 4},    {"G2", 6}};
  for (const auto& [name, len] : expect) {
    RootDatum rd = RootDatum::preset(name);
    auto w = longest_word(rd);
    CHECK(static_cast<int>(w.size()) == len);
    // every positive root occurs once
    auto roots = make_reduced_word(rd, w).roots();
    std::sort(roots.begin(), roots.end());
    CHECK(std::adjacent_find(roots.begin(), roots.end()) == roots.end());
  }
  RootDatum affine({{2, -2}, {-2, 2}}, {1, 1}, "A1^(1)");
  CHECK(error_of([&] { longest_word(affine, {}, 12); }) == ErrorKind::Unsupported);
}

TEST_CASE("input validation") {
  CHECK(error_of([] { RootDatum({{2, -1}, {0, 2}}, {1, 1}); }) == ErrorKind::InvalidArgument);
  CHECK(error_of([] { RootDatum({{2, -1}, {-2, 2}}, {1, 1}); }) == ErrorKind::InvalidArgument);
  CHECK(error_of([] { RootDatum::preset("E9"); }) == ErrorKind::InvalidArgument);
  CHECK(error_of([] { RootDatum::from_json("{\"cartan_matrix\": 3}"); }) ==
        ErrorKind::InvalidArgument);
  RootDatum g = RootDatum::from_json(
      R"({"rank": 2, "cartan_matrix": [[2, -1], [-3, 2]], "symmetrizers": [3, 1]})");
  CHECK(g == RootDatum::preset("G2"));
  CHECK(RootDatum::from_json(g.to_json()) == g);
  CHECK(parse_word("1,2,1", 2) == std::vector<int>{0, 1, 0});
  CHECK(error_of([] { parse_word("1,3", 2); }) == ErrorKind::InvalidArgument);
  CHECK(error_of([] { parse_word("1,x", 2); }) == ErrorKind::InvalidArgument);
}

}  // TEST_SUITE
