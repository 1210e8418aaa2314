#include "qschubert/golden.hpp"

#include <functional>
#include <set>
#include <sstream>

#include <json.hpp>

namespace qschubert {

namespace {

using nlohmann::json;

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  std::string t;
  while (is >> t) out.push_back(t);
  return out;
}

std::vector<int> letters_of(const std::string& s, int rank) { return parse_word(s, rank); }

const Element& lookup(const std::map<std::string, Element>& named, const std::string& name) {
  auto it = named.find(name);
  if (it == named.end()) raise(ErrorKind::InvalidArgument, "unknown element '" + name + "'");
  return it->second;
}

Element generator_or_named(const Algebra& alg, const std::map<std::string, Element>& named,
                           const std::string& tok) {
  auto it = named.find(tok);
  if (it != named.end()) return it->second;
  if (tok.size() >= 2 && tok[0] == 'E') {
    std::size_t used = 0;
    int i = 0;
    try {
      i = std::stoi(tok.substr(1), &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == tok.size() - 1 && tok.size() == 2 && i >= 1 && i <= alg.rank())
      return Element::generator(&alg, i - 1);
  }
  raise(ErrorKind::InvalidArgument, "unknown element '" + tok + "'");
}

// "A*B" product of named elements
Element product_of(const Algebra& alg, const std::map<std::string, Element>& named,
                   const std::string& tok) {
  Element r = Element::one(&alg);
  std::stringstream ss(tok);
  std::string f;
  while (std::getline(ss, f, '*')) {
    Element x = generator_or_named(alg, named, f);
    if (!x.has_nc()) raise(ErrorKind::InvalidArgument, "factor '" + f + "' has no representative");
    r = r.rmul(x.nc());
  }
  return r;
}

}  // namespace

Element evaluate_definition(const Algebra& alg, const std::map<std::string, Element>& named,
                            const std::string& def) {
  auto tok = split_ws(def);
  if (tok.empty()) raise(ErrorKind::InvalidArgument, "empty definition");
  if (tok[0] == "T" || tok[0] == "Tinv") {
    if (tok.size() != 3) raise(ErrorKind::InvalidArgument, "bad definition '" + def + "'");
    auto w = letters_of(tok[1], alg.rank());
    Element x = generator_or_named(alg, named, tok[2]);
    if (tok[0] == "T") return T_word(w, x);
    // T_a^{-1} T_b^{-1} (x) is the inverse of T_b T_a
    return T_inv_word(std::vector<int>(w.rbegin(), w.rend()), x);
  }
  if (tok[0] == "star") {
    if (tok.size() != 2) raise(ErrorKind::InvalidArgument, "bad definition '" + def + "'");
    return generator_or_named(alg, named, tok[1]).star();
  }
  if (tok[0] == "Y") {
    if (tok.size() != 2) raise(ErrorKind::InvalidArgument, "bad definition '" + def + "'");
    PBWFrame f(alg, make_reduced_word(alg.datum(), letters_of(tok[1], alg.rank())));
    return single_repetition_Y(f);
  }
  // signed sum of products with optional v^k scalars
  Element sum;
  bool have = false;
  int sign = 1, vexp = 0;
  for (const auto& t : tok) {
    if (t == "+" || t == "-") {
      sign = t == "-" ? -1 : 1;
      continue;
    }
    if (t.rfind("v^", 0) == 0) {
      vexp = std::stoi(t.substr(2));
      continue;
    }
    Element p = product_of(alg, named, t) * Rat(Laurent::monomial(vexp, sign));
    if (have) sum += p;
    else sum = p;
    have = true;
    sign = 1;
    vexp = 0;
  }
  if (!have) raise(ErrorKind::InvalidArgument, "bad definition '" + def + "'");
  return sum;
}

NamedTable load_named_table(const Algebra& alg, const std::string& json_text) {
  NamedTable t;
  json j = json::parse(json_text);
  t.type = j.value("type", "");
  for (const auto& e : j.at("elements")) {
    std::string name = e.at("name");
    t.elements[name] = evaluate_definition(alg, t.elements, e.at("def").get<std::string>());
    t.order.push_back(name);
    if (e.contains("label")) {
      StringDatum s;
      for (const auto& p : e.at("label")) s.emplace_back(p.at(0).get<int>() - 1, p.at(1).get<int>());
      t.labels[name] = s;
    }
  }
  if (j.contains("identities"))
    for (const auto& e : j.at("identities"))
      t.identities.emplace_back(e.at(0).get<std::string>(), e.at(1).get<std::string>());
  return t;
}

TableCheck check_identities(const Algebra& alg, const NamedTable& t) {
  TableCheck c;
  for (const auto& [name, def] : t.identities) {
    ++c.checked;
    Element rhs = evaluate_definition(alg, t.elements, def);
    if (rhs != lookup(t.elements, name)) c.failures.push_back(name + " != " + def);
  }
  return c;
}

TableCheck check_tinv_table(const NamedTable& t, const std::string& json_text) {
  TableCheck c;
  json j = json::parse(json_text);
  auto cols = j.at("columns").get<std::vector<std::string>>();
  for (const auto& [key, row] : j.at("rows").items()) {
    int i = std::stoi(key) - 1;
    auto cells = row.get<std::vector<std::string>>();
    if (cells.size() != cols.size()) raise(ErrorKind::InvalidArgument, "ragged T^-1 table");
    for (std::size_t k = 0; k < cols.size(); ++k) {
      ++c.checked;
      const std::string where = "T_" + key + "^-1(" + cols[k] + ")";
      const Element& x = lookup(t.elements, cols[k]);
      bool domain = true;
      Element y;
      try {
        y = T_inv(i, x);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::DomainViolation) throw;
        domain = false;
      }
      if (cells[k].empty()) {
        if (domain) c.failures.push_back(where + " expected outside U_q(n+)");
        continue;
      }
      if (!domain) {
        c.failures.push_back(where + " raised DomainViolation, expected " + cells[k]);
        continue;
      }
      if (y != lookup(t.elements, cells[k])) c.failures.push_back(where + " != " + cells[k]);
    }
  }
  return c;
}

std::vector<MonomialDescription> load_descriptions(const RootDatum& rd,
                                                   const std::string& json_text) {
  json j = json::parse(json_text);
  auto word_of = [&](const json& w) {
    if (w.is_object()) {
      auto full = longest_word(rd, {w.at("longest_after").get<int>() - 1});
      return std::vector<int>(full.begin() + 1, full.end());
    }
    std::vector<int> r;
    for (int x : w.get<std::vector<int>>()) r.push_back(x - 1);
    return r;
  };
  std::vector<MonomialDescription> out;
  for (const auto& e : j.at("descriptions")) {
    MonomialDescription d;
    d.name = e.at("name");
    d.word = word_of(e.at("word"));
    if (e.contains("word2")) d.word2 = word_of(e.at("word2"));
    d.factors = e.at("factors").get<std::vector<std::string>>();
    const auto& pf = e.at("prefactor");
    std::string unit = pf.value("unit", "v");
    if (unit == "v") d.unit = 1;
    else if (unit == "q") d.unit = 2;
    else raise(ErrorKind::InvalidArgument, "prefactor unit must be v or q");
    for (const auto& p : pf.at("products")) {
      MonomialDescription::Product pr;
      pr.coeff = p.value("c", 1);
      pr.left = p.at("l").get<std::map<std::string, int>>();
      pr.right = p.at("r").get<std::map<std::string, int>>();
      d.products.push_back(std::move(pr));
    }
    if (e.contains("graph")) {
      std::set<std::string> exempt;
      for (const auto& x : e["graph"].value("exempt", std::vector<std::string>{})) exempt.insert(x);
      std::set<std::pair<std::string, std::string>> edges;
      for (const auto& ed : e["graph"].at("edges")) {
        std::string a = ed.at(0), b = ed.at(1);
        edges.emplace(a, b);
        edges.emplace(b, a);
      }
      for (std::size_t x = 0; x < d.factors.size(); ++x)
        for (std::size_t y = x + 1; y < d.factors.size(); ++y) {
          const auto &a = d.factors[x], &b = d.factors[y];
          if (exempt.count(a) || exempt.count(b) || edges.count({a, b})) continue;
          d.exclusive.emplace_back(a, b);
        }
    }
    if (e.contains("exclusive"))
      for (const auto& p : e.at("exclusive")) d.exclusive.emplace_back(p.at(0), p.at(1));
    d.max_height = e.value("max_height", 4);
    d.max_exponent = e.value("max_exponent", -1);
    out.push_back(std::move(d));
  }
  return out;
}

int description_exponent(const MonomialDescription& d, const std::map<std::string, int>& m) {
  auto eval = [&](const std::map<std::string, int>& lin) {
    int s = 0;
    for (const auto& [name, c] : lin) {
      auto it = m.find(name);
      if (it != m.end()) s += c * it->second;
    }
    return s;
  };
  int s = 0;
  for (const auto& p : d.products) s += p.coeff * eval(p.left) * eval(p.right);
  return s * d.unit;
}

std::vector<Weight> description_degrees(FrameCache& cache, const MonomialDescription& d) {
  const PBWFrame& f = cache.frame(d.word);
  if (d.max_exponent < 0) return f.degrees_up_to(d.max_height);
  std::set<Weight> seen;
  Exps a(f.length(), 0);
  std::function<void(int)> rec = [&](int k) {
    if (k == f.length()) {
      seen.insert(f.degree(a));
      return;
    }
    for (int t = 0; t <= d.max_exponent; ++t) {
      a[k] = t;
      rec(k + 1);
    }
    a[k] = 0;
  };
  rec(0);
  return {seen.begin(), seen.end()};
}

TableCheck check_description(FrameCache& cache, const NamedTable& named,
                             const MonomialDescription& d, const Weight& deg) {
  TableCheck c;
  const Algebra& alg = cache.algebra();
  std::vector<CanonicalElement> target =
      d.word2.empty() ? cache.basis(d.word, deg) : bi_schubert(cache, d.word, d.word2, deg);
  std::vector<const Element*> gens;
  for (const auto& f : d.factors) gens.push_back(&lookup(named.elements, f));

  std::vector<Element> described;
  std::vector<std::string> labels;
  std::map<std::string, int> m;
  std::vector<int> exps(gens.size(), 0);
  std::function<void(std::size_t, const Weight&)> rec = [&](std::size_t k, const Weight& rem) {
    if (k == gens.size()) {
      for (int x : rem)
        if (x != 0) return;
      for (std::size_t t = 0; t < gens.size(); ++t) m[d.factors[t]] = exps[t];
      for (const auto& [a, b] : d.exclusive)
        if (m[a] > 0 && m[b] > 0) return;
      Element r = Element::one(&alg);
      r.drop_nc();
      for (std::size_t t = 0; t < gens.size(); ++t)
        for (int s = 0; s < exps[t]; ++s) r = r.rmul(gens[t]->nc());
      r.drop_nc();
      described.push_back(r * Rat(Laurent::monomial(description_exponent(d, m))));
      std::string lab;
      for (std::size_t t = 0; t < gens.size(); ++t)
        if (exps[t]) lab += d.factors[t] + "^" + std::to_string(exps[t]) + " ";
      labels.push_back(lab);
      return;
    }
    Weight left = rem;
    for (int t = 0;; ++t) {
      exps[k] = t;
      rec(k + 1, left);
      left = sub(left, gens[k]->degree());
      if (!is_nonnegative(left)) break;
    }
    exps[k] = 0;
  };
  rec(0, deg);

  c.checked = static_cast<int>(described.size());
  const std::string where = d.name + " at " + weight_str(deg) + ": ";
  if (described.size() != target.size())
    c.failures.push_back(where + std::to_string(described.size()) + " monomials vs " +
                         std::to_string(target.size()) + " basis elements");
  std::vector<bool> used(target.size(), false);
  for (std::size_t k = 0; k < described.size(); ++k) {
    bool hit = false;
    for (std::size_t j = 0; j < target.size() && !hit; ++j)
      if (!used[j] && target[j].element == described[k]) used[j] = hit = true;
    if (!hit) c.failures.push_back(where + labels[k] + "is not in the basis");
  }
  return c;
}

}  // namespace qschubert
