#include "io.hpp"

#include <cctype>

namespace qschubert::cli {

namespace {

[[noreturn]] void bad_scalar(const std::string& text) {
  raise(ErrorKind::InvalidArgument, "cannot parse scalar '" + text + "'");
}

// one unsigned term: "3", "v", "v^-2", "3*v^2"
Laurent parse_term(const std::string& t, const std::string& whole) {
  if (t.empty()) bad_scalar(whole);
  Int c = 1;
  std::string rest = t;
  auto star = t.find('*');
  if (star != std::string::npos) {
    if (c.set_str(t.substr(0, star), 10) != 0) bad_scalar(whole);
    rest = t.substr(star + 1);
  } else if (t[0] != 'v') {
    if (c.set_str(t, 10) != 0) bad_scalar(whole);
    return Laurent(c);
  }
  if (rest.empty() || rest[0] != 'v') bad_scalar(whole);
  int e = 1;
  if (rest.size() > 1) {
    if (rest[1] != '^') bad_scalar(whole);
    std::size_t used = 0;
    try {
      e = std::stoi(rest.substr(2), &used);
    } catch (const std::exception&) {
      bad_scalar(whole);
    }
    if (used != rest.size() - 2) bad_scalar(whole);
  }
  return Laurent::monomial(e, c);
}

}  // namespace

Laurent parse_laurent(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) bad_scalar(text);
  Laurent r;
  std::size_t p = 0;
  int sign = 1;
  if (s[0] == '-' || s[0] == '+') {
    sign = s[0] == '-' ? -1 : 1;
    p = 1;
  }
  while (p <= s.size()) {
    // a '-' right after '^' belongs to the exponent
    std::size_t q = p;
    while (q < s.size() && !((s[q] == '+' || s[q] == '-') && s[q - 1] != '^')) ++q;
    Laurent t = parse_term(s.substr(p, q - p), text);
    if (sign < 0) r -= t;
    else r += t;
    if (q >= s.size()) break;
    sign = s[q] == '-' ? -1 : 1;
    p = q + 1;
  }
  return r;
}

Rat parse_rat(const std::string& text) {
  auto mid = text.find(")/(");
  if (mid == std::string::npos) return Rat(parse_laurent(text));
  if (text.empty() || text.front() != '(' || text.back() != ')') bad_scalar(text);
  return Rat(parse_laurent(text.substr(1, mid - 1)),
             parse_laurent(text.substr(mid + 3, text.size() - mid - 4)));
}

json word_json(const std::vector<int>& letters) {
  json j = json::array();
  for (int x : letters) j.push_back(x + 1);
  return j;
}

std::vector<int> word_from_json(const json& j) {
  std::vector<int> out;
  for (const auto& x : j) out.push_back(x.get<int>() - 1);
  return out;
}

json nc_to_json(const NcElement& x) {
  json terms = json::array();
  for (const auto& [w, c] : x.terms()) terms.push_back({{"word", word_json(w)}, {"coeff", c.str()}});
  return terms;
}

NcElement nc_from_json(const Algebra* alg, const json& j) {
  NcElement x(alg);
  for (const auto& t : j) {
    Word w = word_from_json(t.at("word"));
    for (int i : w) alg->datum().check_node(i);
    x.add_term(w, parse_rat(t.at("coeff").get<std::string>()));
  }
  return x;
}

json pbw_to_json(const PBWVector& v) {
  json out = json::array();
  for (const auto& [a, c] : v) out.push_back({{"a", a}, {"coeff", c.str()}});
  return out;
}

PBWVector pbw_from_json(const json& j) {
  PBWVector v;
  for (const auto& t : j) v[t.at("a").get<Exps>()] = parse_rat(t.at("coeff").get<std::string>());
  return v;
}

json canonical_to_json(const PBWFrame& frame, const CanonicalElement& b) {
  json j;
  j["degree"] = frame.degree(b.a);
  j["frame"] = word_json(frame.word().letters());
  j["a"] = b.a;
  j["pbw"] = pbw_to_json(b.pbw);
  if (!b.string.empty()) {
    json s = json::array();
    for (const auto& [i, n] : b.string) s.push_back({i + 1, n});
    j["string"] = s;
    j["label"] = string_label(b.string);
  }
  if (!b.norm.is_zero()) j["norm"] = b.norm.str();
  if (b.expansion) j["terms"] = nc_to_json(*b.expansion);
  return j;
}

Element element_from_json(FrameCache& cache, const json& j) {
  const Algebra& alg = cache.algebra();
  try {
    Weight deg = j.at("degree").get<Weight>();
    if (static_cast<int>(deg.size()) != alg.rank() || !is_nonnegative(deg))
      raise(ErrorKind::InvalidArgument, "degree does not fit the Cartan datum");
    if (j.contains("terms")) {
      NcElement x = nc_from_json(&alg, j.at("terms"));
      if (!x.empty() && x.degree() != deg)
        raise(ErrorKind::InvalidArgument, "terms do not have the stated degree");
      return Element::from_nc(x, deg);
    }
    const PBWFrame& f = cache.frame(word_from_json(j.at("frame")));
    PBWVector v = pbw_from_json(j.at("pbw"));
    for (const auto& [a, c] : v)
      if (static_cast<int>(a.size()) != f.length() || f.degree(a) != deg)
        raise(ErrorKind::InvalidArgument, "PBW exponent " + exps_str(a) + " is off the slice");
    return f.reconstruct(v, deg);
  } catch (const json::exception& e) {
    raise(ErrorKind::InvalidArgument, std::string("malformed element: ") + e.what());
  }
}

}  // namespace qschubert::cli
