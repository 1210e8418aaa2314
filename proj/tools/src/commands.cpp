#include "commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

#include "io.hpp"
#include "qschubert/golden.hpp"

namespace qschubert::cli {

namespace {

namespace fs = std::filesystem;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(ErrorKind::InvalidArgument, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string lower(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

std::string weight_text(const Weight& g) { return weight_str(g); }

std::string pbw_text(const json& pbw) {
  if (pbw.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : pbw) {
    std::string c = t.at("coeff").get<std::string>();
    std::string a = exps_str(t.at("a").get<Exps>());
    bool neg = !c.empty() && c[0] == '-' && c.find(' ') == std::string::npos;
    if (neg) c = c.substr(1);
    if (!first) s += neg ? " - " : " + ";
    else if (neg) s += "-";
    first = false;
    bool compound = c.find(' ') != std::string::npos || c.find('/') != std::string::npos;
    if (c != "1") s += (compound ? "(" + c + ")" : c) + "*";
    s += "X^" + a;
  }
  return s;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

// Shared state of one invocation.
struct Session {
  const RunConfig& cfg;
  std::unique_ptr<Algebra> alg;
  std::unique_ptr<FrameCache> cache;
  std::vector<int> word, word2;
  bool golden_type = false;

  explicit Session(const RunConfig& c) : cfg(c) {
    if (cfg.type.empty() == cfg.gcm_file.empty())
      raise(ErrorKind::InvalidArgument, "give exactly one of --type and --gcm");
    RootDatum rd = cfg.type.empty() ? RootDatum::from_file(cfg.gcm_file)
                                    : RootDatum::preset(cfg.type);
    golden_type = !cfg.type.empty();
    if (cfg.degree_bound < 1) raise(ErrorKind::InvalidArgument, "--degree-bound must be >= 1");
    if (cfg.format != "text" && cfg.format != "json")
      raise(ErrorKind::InvalidArgument, "--format must be text or json");
    if (cfg.check_level != "fast" && cfg.check_level != "full")
      raise(ErrorKind::InvalidArgument, "--check-level must be fast or full");
    alg = std::make_unique<Algebra>(std::move(rd), cfg.max_words);
    cache = std::make_unique<FrameCache>(*alg);
    word = parse_word(cfg.word, alg->rank());
    word2 = parse_word(cfg.word2, alg->rank());
    // words validate before any computation
    make_reduced_word(alg->datum(), word);
    make_reduced_word(alg->datum(), word2);
  }

  bool json_out() const { return cfg.format == "json"; }

  // --word, or a reduced word of the longest element
  const std::vector<int>& main_word() {
    if (word.empty()) word = longest_word(alg->datum());
    return word;
  }

  std::vector<Weight> degrees(const PBWFrame& f) const {
    if (!cfg.degree.empty()) {
      Weight g;
      std::stringstream ss(cfg.degree);
      std::string tok;
      while (std::getline(ss, tok, ',')) {
        try {
          g.push_back(std::stoi(tok));
        } catch (const std::exception&) {
          raise(ErrorKind::InvalidArgument, "bad --degree '" + cfg.degree + "'");
        }
      }
      if (static_cast<int>(g.size()) != alg->rank() || !is_nonnegative(g))
        raise(ErrorKind::InvalidArgument, "--degree needs " + std::to_string(alg->rank()) +
                                              " nonnegative entries");
      return {g};
    }
    std::vector<Weight> out;
    for (auto& g : f.degrees_up_to(cfg.degree_bound))
      if (height(g) > 0) out.push_back(g);
    return out;
  }

  std::string data_file(const std::string& suffix) const {
    if (!golden_type || cfg.data_dir.empty()) return "";
    fs::path p = fs::path(cfg.data_dir) / (lower(cfg.type) + "_" + suffix + ".json");
    return fs::exists(p) ? p.string() : "";
  }

  std::map<std::string, Element> named() const {
    std::string f = data_file("named");
    if (f.empty()) return {};
    return load_named_table(*alg, read_file(f)).elements;
  }
};

json header(Session& s, const std::string& command) {
  json j;
  j["command"] = command;
  j["datum"] = json::parse(s.alg->datum().to_json());
  j["word"] = word_json(s.main_word());
  if (!s.word2.empty()) j["word2"] = word_json(s.word2);
  return j;
}

// ---- roots ---------------------------------------------------------------

int cmd_roots(Session& s, std::ostream& out) {
  const PBWFrame& f = s.cache->frame(s.main_word());
  json doc = header(s, "roots");
  doc["roots"] = json::array();
  for (int k = 0; k < f.length(); ++k) {
    const Element& x = f.root_vector(k);
    json r = {{"k", k + 1}, {"letter", f.word().letter(k) + 1}, {"degree", f.word().root(k)}};
    if (x.has_nc()) r["terms"] = nc_to_json(x.nc());
    doc["roots"].push_back(r);
  }
  if (s.json_out()) {
    out << doc.dump(2) << "\n";
    return kOk;
  }
  out << "word " << f.word().str() << ", " << f.length() << " root vectors\n";
  for (int k = 0; k < f.length(); ++k) {
    const Element& x = f.root_vector(k);
    out << "X" << k + 1 << "  degree " << weight_text(f.word().root(k));
    if (x.has_nc()) out << "  = " << x.nc().str();
    out << "\n";
  }
  return kOk;
}

// ---- relations -----------------------------------------------------------

int cmd_relations(Session& s, std::ostream& out) {
  const PBWFrame& f = s.cache->frame(s.main_word());
  const RootDatum& rd = s.alg->datum();
  json doc = header(s, "relations");
  doc["relations"] = json::array();
  std::ostringstream text;
  text << "word " << f.word().str() << "\n"
       << "v^-s X_l X_k - v^s X_k X_l = (q_i - q_i^-1) * rhs, s = (deg X_k, deg X_l), i the "
          "k-th letter\n";
  for (int k = 0; k < f.length(); ++k)
    for (int l = k + 1; l < f.length(); ++l) {
      const PBWVector& v = f.straighten(k, l);
      int sk = rd.pairing(f.word().root(k), f.word().root(l));
      json r = {{"k", k + 1}, {"l", l + 1}, {"s", sk}, {"rhs", pbw_to_json(v)}};
      doc["relations"].push_back(r);
      text << "(" << k + 1 << "," << l + 1 << ")  s=" << sk << "  rhs = " << pbw_text(r["rhs"])
           << "\n";
    }
  if (s.json_out()) out << doc.dump(2) << "\n";
  else out << text.str();
  return kOk;
}

// ---- basis ---------------------------------------------------------------

json solve_slice_json(Session& s, const PBWFrame& f, const Weight& deg) {
  const std::string key = s.alg->datum().to_json() + "|" + f.word().str() + "|" +
                          weight_str(deg) + "|basis-v1";
  fs::path file;
  if (!s.cfg.cache_dir.empty()) {
    std::ostringstream name;
    name << "basis-" << std::hex << std::setw(16) << std::setfill('0') << fnv1a(key) << ".json";
    file = fs::path(s.cfg.cache_dir) / name.str();
    if (fs::exists(file)) {
      try {
        json c = json::parse(read_file(file.string()));
        if (c.value("key", "") == key) return c.at("elements");
      } catch (const std::exception&) {
        // unreadable cache entries are recomputed
      }
    }
  }
  SolveOptions opts;
  opts.with_strings = true;
  opts.with_norms = true;
  opts.expansion_cap = 2000;
  json els = json::array();
  for (const auto& b : lusztig_solve(f, deg, opts)) els.push_back(canonical_to_json(f, b));
  if (!file.empty()) {
    std::error_code ec;
    fs::create_directories(file.parent_path(), ec);
    std::ofstream o(file);
    if (o) o << json{{"key", key}, {"elements", els}}.dump() << "\n";
  }
  return els;
}

int cmd_basis(Session& s, std::ostream& out) {
  const PBWFrame& f = s.cache->frame(s.main_word());
  json doc = header(s, "basis");
  doc["slices"] = json::array();
  std::ostringstream text;
  text << "word " << f.word().str() << "\n";
  for (const auto& deg : s.degrees(f)) {
    json els = solve_slice_json(s, f, deg);
    doc["slices"].push_back({{"degree", deg}, {"elements", els}});
    text << "degree " << weight_text(deg) << " (" << els.size() << ")\n";
    for (const auto& e : els) {
      text << "  b" << exps_str(e.at("a").get<Exps>()) << " = " << pbw_text(e.at("pbw"));
      if (e.contains("label")) text << "   " << e.at("label").get<std::string>();
      if (e.contains("norm")) text << "   norm " << e.at("norm").get<std::string>();
      text << "\n";
    }
  }
  if (s.json_out()) out << doc.dump(2) << "\n";
  else out << text.str();
  return kOk;
}

// ---- expand --------------------------------------------------------------

Element input_element(Session& s) {
  if (s.cfg.element.empty() == s.cfg.input.empty())
    raise(ErrorKind::InvalidArgument, "give exactly one of --element and --input");
  if (!s.cfg.element.empty()) return evaluate_definition(*s.alg, s.named(), s.cfg.element);
  json j;
  try {
    j = json::parse(read_file(s.cfg.input));
  } catch (const json::exception& e) {
    raise(ErrorKind::InvalidArgument, std::string("malformed JSON: ") + e.what());
  }
  return element_from_json(*s.cache, j);
}

int cmd_expand(Session& s, std::ostream& out) {
  Element x = input_element(s);
  const PBWFrame& f = s.cache->frame(s.main_word());
  json doc = header(s, "expand");
  doc["degree"] = x.degree();
  try {
    PBWVector v = f.expand(x, true);
    doc["in_cell"] = true;
    doc["frame"] = word_json(f.word().letters());
    doc["pbw"] = pbw_to_json(v);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotInCell) throw;
    doc["in_cell"] = false;
  }
  if (s.json_out()) {
    out << doc.dump(2) << "\n";
  } else if (doc["in_cell"]) {
    out << pbw_text(doc["pbw"]) << "\n";
  } else {
    out << "not in the cell of " << f.word().str() << "\n";
  }
  return doc["in_cell"] ? kOk : kFailed;
}

// ---- verify --------------------------------------------------------------

struct Checks {
  json items = json::array();
  bool ok = true;
  void add(const std::string& name, const std::string& scope, int checked,
           const std::vector<std::string>& failures) {
    json j = {{"check", name}, {"scope", scope}, {"checked", checked},
              {"pass", failures.empty()}};
    if (!failures.empty()) {
      std::vector<std::string> head(failures.begin(),
                                    failures.begin() + std::min<std::size_t>(failures.size(), 5));
      j["failures"] = head;
      j["failure_count"] = failures.size();
    }
    ok = ok && failures.empty();
    items.push_back(j);
  }
  void add_error(const std::string& name, const std::string& scope, const Error& e) {
    add(name, scope, 0, {e.what()});
  }
};

void verify_slice(Session& s, const PBWFrame& f, const Weight& deg, std::mt19937_64& rng,
                  Checks& c) {
  const std::string scope = weight_str(deg);
  const bool full = s.cfg.check_level == "full";
  const auto& slice = f.slice(deg);

  c.add("bar-matrix", scope, static_cast<int>(slice.size()), bar_matrix_defects(f, deg));

  {
    std::vector<std::string> fails;
    int n = 0;
    auto one = [&](const Exps& a, const Exps& b) {
      ++n;
      Rat p = f.pair(f.monomial(a), f.monomial(b));
      Rat want = a == b ? Rat(f.monomial_norm(a)) : Rat(0L);
      if (p != want) fails.push_back("<<X^" + exps_str(a) + ", X^" + exps_str(b) + ">>");
    };
    const std::size_t m = slice.size();
    if (full && m <= 24) {
      for (const auto& a : slice)
        for (const auto& b : slice) one(a, b);
    } else {
      std::uniform_int_distribution<std::size_t> pick(0, m - 1);
      for (int t = 0; t < (full ? 100 : 10); ++t) one(slice[pick(rng)], slice[pick(rng)]);
    }
    c.add("orthonormality", scope, n, fails);
  }

  const auto& basis = s.cache->basis(f.word().letters(), deg);
  {
    std::vector<std::string> fails;
    for (const auto& b : basis) {
      try {
        Certificate cert = verify_upper_global(b.element, &f, s.cfg.seed);
        if (!cert.pass()) fails.push_back("b" + exps_str(b.a) + ": " + cert.summary());
      } catch (const Error& e) {
        fails.push_back("b" + exps_str(b.a) + ": " + e.what());
      }
    }
    c.add("upper-global", scope, static_cast<int>(basis.size()), fails);
  }

  {
    SolveOptions opts;
    opts.shuffle_seed = s.cfg.seed;
    auto again = lusztig_solve(f, deg, opts);
    std::vector<std::string> fails;
    for (std::size_t j = 0; j < basis.size(); ++j)
      if (again[j].pbw != basis[j].pbw) fails.push_back("b" + exps_str(basis[j].a));
    c.add("uniqueness", scope, static_cast<int>(basis.size()), fails);
  }

  if (!full) return;

  bool finite = true;
  try {
    s.cache->longest();
  } catch (const Error&) {
    finite = false;
  }
  if (finite) {
    for (int i = 0; i < s.alg->rank(); ++i) {
      const std::string name = "T" + std::to_string(i + 1) + "-stability";
      try {
        Report r = check_Ti_stability(*s.cache, f.word().letters(), deg, i);
        c.add(name, scope, r.checked, r.failures);
      } catch (const Error& e) {
        c.add_error(name, scope, e);
      }
    }
  }

  ShapeInfo shape = word_shape(s.alg->datum(), f.word());
  if (shape.shape != WordShape::Other) {
    std::vector<std::string> fails;
    try {
      auto closed = closed_form_basis(f, deg);
      for (const auto& b : closed)
        if (find_element(basis, b.element) < 0) fails.push_back("closed form b" + exps_str(b.a));
      if (closed.size() != basis.size()) fails.push_back("sizes differ");
      if (!check_transition_matrix(f, deg)) fails.push_back("transition matrix");
    } catch (const Error& e) {
      fails.push_back(e.what());
    }
    c.add("closed-form", scope, static_cast<int>(basis.size()), fails);
  }
}

void verify_golden(Session& s, Checks& c) {
  std::string named_file = s.data_file("named");
  if (named_file.empty()) return;
  NamedTable nt = load_named_table(*s.alg, read_file(named_file));
  TableCheck ic = check_identities(*s.alg, nt);
  c.add("golden-identities", lower(s.cfg.type), ic.checked, ic.failures);

  std::vector<std::string> fails;
  for (const auto& [name, label] : nt.labels) {
    try {
      StringDatum got = string_name(nt.elements.at(name), &s.cache->longest());
      if (got != label) fails.push_back(name + " has string " + string_label(got));
    } catch (const Error& e) {
      fails.push_back(name + ": " + e.what());
    }
  }
  c.add("golden-strings", lower(s.cfg.type), static_cast<int>(nt.labels.size()), fails);

  std::string tinv = s.data_file("tinv");
  if (!tinv.empty()) {
    TableCheck tc = check_tinv_table(nt, read_file(tinv));
    c.add("golden-tinv", lower(s.cfg.type), tc.checked, tc.failures);
  }
  std::string desc = s.data_file("descriptions");
  if (desc.empty()) return;
  for (const auto& d : load_descriptions(s.alg->datum(), read_file(desc))) {
    TableCheck all;
    for (const auto& g : description_degrees(*s.cache, d)) {
      if (height(g) > s.cfg.degree_bound) continue;
      TableCheck t = check_description(*s.cache, nt, d, g);
      all.checked += t.checked;
      all.failures.insert(all.failures.end(), t.failures.begin(), t.failures.end());
    }
    c.add("golden-" + d.name, lower(s.cfg.type), all.checked, all.failures);
  }
}

int cmd_verify(Session& s, std::ostream& out) {
  const PBWFrame& f = s.cache->frame(s.main_word());
  std::mt19937_64 rng(s.cfg.seed);
  Checks c;
  {
    std::vector<std::string> fails;
    int n = 0;
    for (int k = 0; k < f.length(); ++k)
      for (int l = k + 1; l < f.length(); ++l) {
        ++n;
        try {
          f.straighten(k, l);
        } catch (const Error& e) {
          fails.push_back(e.what());
        }
      }
    c.add("straightening", f.word().str(), n, fails);
  }
  for (const auto& deg : s.degrees(f)) {
    try {
      verify_slice(s, f, deg, rng, c);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::DegreeTooLarge) throw;
      c.add_error("slice", weight_str(deg), e);
    }
  }
  if (s.cfg.check_level == "full") verify_golden(s, c);

  json doc = header(s, "verify");
  doc["check_level"] = s.cfg.check_level;
  doc["checks"] = c.items;
  doc["pass"] = c.ok;
  if (s.json_out()) {
    out << doc.dump(2) << "\n";
  } else {
    for (const auto& it : c.items) {
      out << (it["pass"].get<bool>() ? "PASS " : "FAIL ") << it["check"].get<std::string>()
          << " [" << it["scope"].get<std::string>() << "] checked " << it["checked"] << "\n";
      if (it.contains("failures"))
        for (const auto& m : it["failures"]) out << "    " << m.get<std::string>() << "\n";
    }
    out << (c.ok ? "all checks passed" : "verification failed") << "\n";
  }
  return c.ok ? kOk : kFailed;
}

// ---- compare, embed, bischubert, strings --------------------------------

int cmd_compare(Session& s, std::ostream& out) {
  if (s.word2.empty()) raise(ErrorKind::InvalidArgument, "compare needs --word2");
  const PBWFrame& f1 = s.cache->frame(s.main_word());
  const PBWFrame& f2 = s.cache->frame(s.word2);
  json doc = header(s, "compare");
  doc["slices"] = json::array();
  bool all = true;
  for (const auto& deg : s.degrees(f1)) {
    bool same = compare_frames(f1, f2, deg);
    all = all && same;
    doc["slices"].push_back({{"degree", deg}, {"same", same}});
    if (!s.json_out()) out << weight_text(deg) << (same ? "  same" : "  DIFFERENT") << "\n";
  }
  doc["same"] = all;
  if (s.json_out()) out << doc.dump(2) << "\n";
  else out << (all ? "the two frames give the same basis" : "the bases differ") << "\n";
  return all ? kOk : kFailed;
}

int cmd_embed(Session& s, std::ostream& out) {
  const RootDatum& rd = s.alg->datum();
  ReducedWord w = make_reduced_word(rd, s.main_word()), w2 = make_reduced_word(rd, s.word2);
  if (!length_additive(rd, w, w2))
    raise(ErrorKind::LengthNotAdditive, "l(ww') != l(w) + l(w')");
  std::vector<int> ww = s.main_word();
  ww.insert(ww.end(), s.word2.begin(), s.word2.end());
  const PBWFrame& big = s.cache->frame(ww);
  json doc = header(s, "embed");
  doc["slices"] = json::array();
  Report total;
  for (const auto& deg : s.degrees(big)) {
    Report r = check_embedding(*s.cache, s.main_word(), s.word2, deg);
    total.merge(r);
    doc["slices"].push_back({{"degree", deg}, {"checked", r.checked}, {"failures", r.failures}});
    if (!s.json_out()) {
      out << weight_text(deg) << "  checked " << r.checked << (r.ok() ? "  ok" : "  FAIL") << "\n";
      for (const auto& m : r.failures) out << "    " << m << "\n";
    }
  }
  doc["pass"] = total.ok();
  if (s.json_out()) out << doc.dump(2) << "\n";
  else out << (total.ok() ? "both inclusions hold" : "inclusion failed") << "\n";
  return total.ok() ? kOk : kFailed;
}

int cmd_bischubert(Session& s, std::ostream& out) {
  if (s.word2.empty()) raise(ErrorKind::InvalidArgument, "bischubert needs --word2");
  const PBWFrame& f = s.cache->frame(s.main_word());
  json doc = header(s, "bischubert");
  doc["slices"] = json::array();
  for (const auto& deg : s.degrees(f)) {
    json els = json::array();
    for (const auto& b : bi_schubert(*s.cache, s.main_word(), s.word2, deg)) {
      CanonicalElement e = b;
      e.string = greedy_string(b.element);
      els.push_back(canonical_to_json(f, e));
    }
    doc["slices"].push_back({{"degree", deg}, {"elements", els}});
    if (!s.json_out()) {
      out << "degree " << weight_text(deg) << " (" << els.size() << ")\n";
      for (const auto& e : els)
        out << "  b" << exps_str(e.at("a").get<Exps>()) << "   " << e.value("label", "") << "\n";
    }
  }
  if (s.json_out()) out << doc.dump(2) << "\n";
  return kOk;
}

int cmd_strings(Session& s, std::ostream& out) {
  json doc = header(s, "strings");
  if (!s.cfg.element.empty() || !s.cfg.input.empty()) {
    Element x = input_element(s);
    StringDatum st = string_name(x, &s.cache->longest());
    json sj = json::array();
    for (const auto& [i, n] : st) sj.push_back({i + 1, n});
    doc["string"] = sj;
    doc["label"] = string_label(st);
    if (s.json_out()) out << doc.dump(2) << "\n";
    else out << string_label(st) << "\n";
    return kOk;
  }
  const PBWFrame& f = s.cache->frame(s.main_word());
  doc["slices"] = json::array();
  for (const auto& deg : s.degrees(f)) {
    json els = json::array();
    for (const auto& b : s.cache->basis(f.word().letters(), deg)) {
      StringDatum st = greedy_string(b.element);
      json sj = json::array();
      for (const auto& [i, n] : st) sj.push_back({i + 1, n});
      els.push_back({{"a", b.a}, {"string", sj}, {"label", string_label(st)}});
      if (!s.json_out()) out << "b" << exps_str(b.a) << "  " << string_label(st) << "\n";
    }
    doc["slices"].push_back({{"degree", deg}, {"elements", els}});
  }
  if (s.json_out()) out << doc.dump(2) << "\n";
  return kOk;
}

bool invalid_input(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidArgument:
    case ErrorKind::NotReduced:
    case ErrorKind::DegreeTooLarge:
    case ErrorKind::FrameMismatch:
    case ErrorKind::LengthNotAdditive:
    case ErrorKind::Unsupported:
    case ErrorKind::DivisionByZero:
    case ErrorKind::NotALaurentPolynomial:
    case ErrorKind::ZeroElement:
      return true;
    default:
      return false;
  }
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    Session s(cfg);
    const std::string& c = cfg.command;
    if (c == "roots") return cmd_roots(s, out);
    if (c == "relations") return cmd_relations(s, out);
    if (c == "basis") return cmd_basis(s, out);
    if (c == "expand") return cmd_expand(s, out);
    if (c == "verify") return cmd_verify(s, out);
    if (c == "compare") return cmd_compare(s, out);
    if (c == "embed") return cmd_embed(s, out);
    if (c == "bischubert") return cmd_bischubert(s, out);
    if (c == "strings") return cmd_strings(s, out);
    err << "error: unknown command '" << c << "'\n";
    return kInvalid;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return invalid_input(e.kind()) ? kInvalid : kFailed;
  }
}

}  // namespace qschubert::cli
