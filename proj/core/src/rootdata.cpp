#include "qschubert/rootdata.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace qschubert {

RootDatum::RootDatum(std::vector<std::vector<int>> gcm, std::vector<int> symmetrizers,
                     std::string name)
    : gcm_(std::move(gcm)), d_(std::move(symmetrizers)), name_(std::move(name)) {
  const std::size_t n = gcm_.size();
  if (n == 0) raise(ErrorKind::InvalidArgument, "rank must be positive");
  if (d_.size() != n) raise(ErrorKind::InvalidArgument, "need one symmetrizer per node");
  for (std::size_t i = 0; i < n; ++i) {
    if (gcm_[i].size() != n) raise(ErrorKind::InvalidArgument, "Cartan matrix is not square");
    if (d_[i] <= 0) raise(ErrorKind::InvalidArgument, "symmetrizers must be positive");
    if (gcm_[i][i] != 2) raise(ErrorKind::InvalidArgument, "diagonal entries must be 2");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (gcm_[i][j] > 0) raise(ErrorKind::InvalidArgument, "off-diagonal entries must be <= 0");
      if ((gcm_[i][j] == 0) != (gcm_[j][i] == 0))
        raise(ErrorKind::InvalidArgument, "a_ij = 0 must imply a_ji = 0");
      if (d_[i] * gcm_[i][j] != d_[j] * gcm_[j][i])
        raise(ErrorKind::InvalidArgument, "(d_i a_ij) is not symmetric");
    }
}

RootDatum RootDatum::preset(const std::string& name) {
  if (name == "A1") return RootDatum({{2}}, {1}, name);
  if (name == "A1xA1") return RootDatum({{2, 0}, {0, 2}}, {1, 1}, name);
  if (name == "A2") return RootDatum({{2, -1}, {-1, 2}}, {1, 1}, name);
  if (name == "A3") return RootDatum({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}, {1, 1, 1}, name);
  if (name == "B2") return RootDatum({{2, -1}, {-2, 2}}, {2, 1}, name);
  if (name == "C2") return RootDatum({{2, -2}, {-1, 2}}, {1, 2}, name);
  if (name == "G2") return RootDatum({{2, -1}, {-3, 2}}, {3, 1}, name);
  raise(ErrorKind::InvalidArgument, "unknown Cartan type '" + name + "'");
}

std::vector<std::string> RootDatum::preset_names() {
  return {"A1", "A1xA1", "A2", "A3", "B2", "C2", "G2"};
}

RootDatum RootDatum::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    raise(ErrorKind::InvalidArgument, std::string("malformed Cartan datum: ") + e.what());
  }
  try {
    auto gcm = j.at("cartan_matrix").get<std::vector<std::vector<int>>>();
    auto d = j.at("symmetrizers").get<std::vector<int>>();
    if (j.contains("rank") && j.at("rank").get<int>() != static_cast<int>(gcm.size()))
      raise(ErrorKind::InvalidArgument, "rank does not match the Cartan matrix");
    return RootDatum(std::move(gcm), std::move(d), j.value("name", std::string("custom")));
  } catch (const nlohmann::json::exception& e) {
    raise(ErrorKind::InvalidArgument, std::string("malformed Cartan datum: ") + e.what());
  }
}

RootDatum RootDatum::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(ErrorKind::InvalidArgument, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json(ss.str());
}

std::string RootDatum::to_json() const {
  nlohmann::json j;
  j["rank"] = rank();
  j["cartan_matrix"] = gcm_;
  j["symmetrizers"] = d_;
  return j.dump();
}

Weight RootDatum::simple(int i) const {
  check_node(i);
  Weight g(rank(), 0);
  g[i] = 1;
  return g;
}

void RootDatum::check_node(int i) const {
  if (i < 0 || i >= rank()) raise(ErrorKind::InvalidArgument, "node out of range");
}

int RootDatum::pairing(const Weight& x, const Weight& y) const {
  int s = 0;
  for (int i = 0; i < rank(); ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < rank(); ++j) s += x[i] * y[j] * d_[i] * gcm_[i][j];
  }
  return s;
}

int RootDatum::pairing_simple(int i, const Weight& y) const {
  int s = 0;
  for (int j = 0; j < rank(); ++j) s += y[j] * gcm_[i][j];
  return s * d_[i];
}

int RootDatum::coroot(int i, const Weight& y) const {
  int s = 0;
  for (int j = 0; j < rank(); ++j) s += y[j] * gcm_[i][j];
  return s;
}

int RootDatum::mu_exponent(const Weight& g) const {
  int e = pairing(g, g) / 2;
  for (int i = 0; i < rank(); ++i) e += g[i] * d_[i];
  return e;
}

int RootDatum::sgn(const Weight& g) const { return height(g) % 2 == 0 ? 1 : -1; }

Weight RootDatum::reflect(int i, const Weight& g) const {
  check_node(i);
  Weight r = g;
  r[i] -= coroot(i, g);
  return r;
}

int height(const Weight& g) {
  int h = 0;
  for (int x : g) h += x;
  return h;
}

bool is_nonnegative(const Weight& g) {
  for (int x : g)
    if (x < 0) return false;
  return true;
}

Weight add(const Weight& a, const Weight& b) {
  Weight r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Weight sub(const Weight& a, const Weight& b) {
  Weight r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Weight scale(const Weight& a, int k) {
  Weight r = a;
  for (auto& x : r) x *= k;
  return r;
}

std::string weight_str(const Weight& g) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i] == 0) continue;
    if (!first) os << (g[i] > 0 ? "+" : "-");
    else if (g[i] < 0) os << "-";
    first = false;
    int c = g[i] < 0 ? -g[i] : g[i];
    if (c != 1) os << c;
    os << "a" << (i + 1);
  }
  if (first) os << "0";
  return os.str();
}

std::string ReducedWord::str() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < letters_.size(); ++k) os << (k ? "," : "") << letters_[k] + 1;
  return os.str();
}

ReducedWord make_reduced_word(const RootDatum& rd, const std::vector<int>& letters) {
  ReducedWord w;
  w.letters_ = letters;
  for (std::size_t k = 0; k < letters.size(); ++k) {
    rd.check_node(letters[k]);
    Weight g = rd.simple(letters[k]);
    for (std::size_t t = k; t-- > 0;) g = rd.reflect(letters[t], g);
    if (!is_nonnegative(g))
      raise(ErrorKind::NotReduced, "word is not reduced at position " + std::to_string(k + 1),
            static_cast<int>(k + 1));
    w.roots_.push_back(std::move(g));
  }
  return w;
}

bool is_reduced(const RootDatum& rd, const std::vector<int>& letters) {
  try {
    make_reduced_word(rd, letters);
    return true;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotReduced) return false;
    throw;
  }
}

bool length_additive(const RootDatum& rd, const ReducedWord& w, const ReducedWord& w2) {
  std::vector<int> all = w.letters();
  all.insert(all.end(), w2.letters().begin(), w2.letters().end());
  return is_reduced(rd, all);
}

std::vector<int> longest_word(const RootDatum& rd, const std::vector<int>& prefix,
                              int max_length) {
  std::vector<int> w = prefix;
  if (!is_reduced(rd, w)) raise(ErrorKind::InvalidArgument, "prefix is not reduced");
  while (static_cast<int>(w.size()) <= max_length) {
    bool grew = false;
    for (int i = 0; i < rd.rank(); ++i) {
      w.push_back(i);
      if (is_reduced(rd, w)) {
        grew = true;
        break;
      }
      w.pop_back();
    }
    if (!grew) return w;
  }
  raise(ErrorKind::Unsupported, "no longest element within the length bound");
}

std::vector<int> parse_word(const std::string& text, int rank) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t used = 0;
    int x = 0;
    try {
      x = std::stoi(tok, &used);
    } catch (const std::exception&) {
      raise(ErrorKind::InvalidArgument, "bad letter '" + tok + "' in word");
    }
    if (used != tok.size() || x < 1 || x > rank)
      raise(ErrorKind::InvalidArgument, "letter '" + tok + "' is not a node in 1.." +
                                            std::to_string(rank));
    out.push_back(x - 1);
  }
  return out;
}

}  // namespace qschubert
