#pragma once

// Symmetrizable Cartan data, the root lattice pairing and reduced words.
// Nodes are 0-based internally; the command line uses 1-based labels.

#include <memory>
#include <string>
#include <vector>

#include "qschubert/coeff.hpp"

namespace qschubert {

using Weight = std::vector<int>;

class RootDatum {
 public:
  RootDatum(std::vector<std::vector<int>> gcm, std::vector<int> symmetrizers,
            std::string name = "custom");

  // A1, A1xA1, A2, A3, B2, C2, G2. C2 has a12 = -2, a21 = -1, d = (1,2).
  static RootDatum preset(const std::string& name);
  static std::vector<std::string> preset_names();
  // {"rank", "cartan_matrix", "symmetrizers"}
  static RootDatum from_json(const std::string& text);
  static RootDatum from_file(const std::string& path);
  std::string to_json() const;

  int rank() const { return static_cast<int>(gcm_.size()); }
  int a(int i, int j) const { return gcm_[i][j]; }
  int d(int i) const { return d_[i]; }
  const std::string& name() const { return name_; }
  const std::vector<std::vector<int>>& gcm() const { return gcm_; }
  const std::vector<int>& symmetrizers() const { return d_; }

  Weight zero() const { return Weight(rank(), 0); }
  Weight simple(int i) const;

  // (alpha_i, alpha_j) = d_i a_ij
  int pairing(const Weight& x, const Weight& y) const;
  int pairing_simple(int i, const Weight& y) const;
  int sym(int i, int j) const { return d_[i] * gcm_[i][j]; }
  // (alpha_i^vee, y) = (alpha_i, y) / d_i
  int coroot(int i, const Weight& y) const;

  // mu(g) = v^{(g,g)/2 + eta(g)}, eta(alpha_i) = d_i
  int mu_exponent(const Weight& g) const;
  Laurent mu(const Weight& g) const { return Laurent::monomial(mu_exponent(g)); }
  int sgn(const Weight& g) const;

  Weight reflect(int i, const Weight& g) const;
  void check_node(int i) const;

  bool operator==(const RootDatum& o) const { return gcm_ == o.gcm_ && d_ == o.d_; }

 private:
  std::vector<std::vector<int>> gcm_;
  std::vector<int> d_;
  std::string name_;
};

int height(const Weight& g);
bool is_nonnegative(const Weight& g);
Weight add(const Weight& a, const Weight& b);
Weight sub(const Weight& a, const Weight& b);
Weight scale(const Weight& a, int k);
std::string weight_str(const Weight& g);

class ReducedWord {
 public:
  ReducedWord() = default;

  const std::vector<int>& letters() const { return letters_; }
  const std::vector<Weight>& roots() const { return roots_; }
  int length() const { return static_cast<int>(letters_.size()); }
  int letter(int k) const { return letters_[k]; }
  const Weight& root(int k) const { return roots_[k]; }
  // 1-based comma separated form
  std::string str() const;

 private:
  friend ReducedWord make_reduced_word(const RootDatum&, const std::vector<int>&);
  std::vector<int> letters_;
  std::vector<Weight> roots_;
};

// Throws NotReduced with the 1-based position of the first non-positive root.
ReducedWord make_reduced_word(const RootDatum& rd, const std::vector<int>& letters);
bool is_reduced(const RootDatum& rd, const std::vector<int>& letters);
bool length_additive(const RootDatum& rd, const ReducedWord& w, const ReducedWord& w2);

// A reduced word of the longest element of a finite Weyl group that begins
// with `prefix`, extended greedily by the smallest admissible letter.
// Throws Unsupported if no end is reached within `max_length` letters.
std::vector<int> longest_word(const RootDatum& rd, const std::vector<int>& prefix = {},
                              int max_length = 64);

// Parses "1,2,1" into 0-based nodes.
std::vector<int> parse_word(const std::string& text, int rank);

}  // namespace qschubert
