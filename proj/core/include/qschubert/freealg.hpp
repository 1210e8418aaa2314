#pragma once

// Elements of U_q(n+). Two representations live side by side:
//
//  * NcElement: a linear combination of words, a representative in the free
//    algebra. Not canonical.
//  * PhiVec: the dual coordinates phi(x)[w] = <<x, E_w>> over all words w of
//    the degree. The map is injective on U_q(n+), so zero tests and equality
//    are coordinate comparisons. Derivations, bar, star and products all have
//    direct formulas on these coordinates.
//
// Element couples a PhiVec with an optional NcElement representative.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "qschubert/coeff.hpp"
#include "qschubert/rootdata.hpp"

namespace qschubert {

using Word = std::vector<int>;

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    std::size_t h = w.size();
    for (int x : w) h = h * 131 + static_cast<std::size_t>(x) + 1;
    return h;
  }
};

struct WeightHash {
  std::size_t operator()(const Weight& w) const noexcept { return WordHash()(w); }
};

enum class Side { Right, Left };

// All words of one degree, in lexicographic order, with the tables used by the
// coordinate formulas.
struct WordSpace {
  Weight deg;
  int length = 0;
  std::vector<Word> words;
  std::unordered_map<Word, int, WordHash> index;
  // For word j and position p: index of the word with letter p removed (in the
  // space of degree deg - alpha_{w_p}) and the exponent
  // (alpha_i, right part) - (alpha_i, left part).
  std::vector<std::int32_t> rem_index;
  std::vector<std::int32_t> rem_exp;
  // append[i][j], prepend[i][j]: index of w_j.i and i.w_j in the space
  // deg + alpha_i; built on demand per node.
  std::vector<std::vector<std::int32_t>> append;
  std::vector<std::vector<std::int32_t>> prepend;
  // index of the reversed word, built on demand
  std::vector<std::int32_t> reverse;
  bool removal_ready = false;

  std::size_t size() const { return words.size(); }
  int find(const Word& w) const;
};

class Algebra {
 public:
  explicit Algebra(RootDatum rd, std::size_t max_words = 250000);
  Algebra(const Algebra&) = delete;
  Algebra& operator=(const Algebra&) = delete;

  const RootDatum& datum() const { return rd_; }
  int rank() const { return rd_.rank(); }
  std::size_t max_words() const { return max_words_; }
  void set_max_words(std::size_t n) { max_words_ = n; }

  // Number of words of the degree (a multinomial coefficient).
  std::size_t word_count(const Weight& deg) const;
  // Throws DegreeTooLarge above max_words().
  const WordSpace& space(const Weight& deg) const;
  // Spaces with the removal table, append/prepend table for node i, or the
  // reversal table ready.
  const WordSpace& space_with_removal(const Weight& deg) const;
  const std::vector<std::int32_t>& append_table(const Weight& deg, int i, Side side) const;
  const std::vector<std::int32_t>& reverse_table(const Weight& deg) const;

  // <1>_{q_i} = q_i - q_i^{-1} = v^{2d_i} - v^{-2d_i}
  const Laurent& angle1(int i) const { return angle1_[i]; }

 private:
  WordSpace& raw_space(const Weight& deg) const;

  RootDatum rd_;
  std::size_t max_words_;
  std::vector<Laurent> angle1_;
  mutable std::recursive_mutex mu_;
  mutable std::unordered_map<Weight, std::unique_ptr<WordSpace>, WeightHash> spaces_;
};

class NcElement {
 public:
  explicit NcElement(const Algebra* alg) : alg_(alg) {}
  static NcElement one(const Algebra* alg);
  static NcElement generator(const Algebra* alg, int i);
  static NcElement word(const Algebra* alg, const Word& w, const Rat& c = Rat(1L));

  const Algebra* algebra() const { return alg_; }
  const std::map<Word, Rat>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Word& w, const Rat& c);
  NcElement& operator+=(const NcElement& o);
  NcElement& operator-=(const NcElement& o);
  NcElement& operator*=(const Rat& c);
  friend NcElement operator+(NcElement a, const NcElement& b) { return a += b; }
  friend NcElement operator-(NcElement a, const NcElement& b) { return a -= b; }
  friend NcElement operator*(NcElement a, const Rat& c) { return a *= c; }
  // concatenation product
  friend NcElement operator*(const NcElement& a, const NcElement& b);

  NcElement bar() const;
  NcElement star() const;
  NcElement tilde() const;
  // side Right is d_i, side Left is d_i^op; quasi-derivation on each word
  NcElement partial(int i, Side side) const;

  Weight word_degree(const Word& w) const;
  // homogeneous components keyed by degree
  std::map<Weight, NcElement> components() const;
  bool is_homogeneous() const;
  // degree of a homogeneous element; zero weight for the empty element
  Weight degree() const;

  std::string str() const;

 private:
  const Algebra* alg_;
  std::map<Word, Rat> terms_;
};

// Dual coordinates of a homogeneous element, stored as integer-coefficient
// numerators over one common denominator.
class PhiVec {
 public:
  PhiVec() = default;
  PhiVec(const WordSpace* space, std::vector<Laurent> num, Laurent den = Laurent(1L));

  const WordSpace* space() const { return space_; }
  std::size_t size() const { return num_.size(); }
  const std::vector<Laurent>& num() const { return num_; }
  const Laurent& den() const { return den_; }
  Rat at(std::size_t j) const { return Rat(num_[j], den_); }
  bool is_zero() const;
  bool is_laurent() const { return den_.is_one(); }

  PhiVec& operator+=(const PhiVec& o);
  PhiVec& operator-=(const PhiVec& o);
  PhiVec& operator*=(const Rat& c);
  void negate();
  // Removes common factors between the entries and the denominator.
  void normalize();

 private:
  friend class Element;
  const WordSpace* space_ = nullptr;
  std::vector<Laurent> num_;
  Laurent den_{1L};
};

class Element {
 public:
  Element() = default;
  Element(const Algebra* alg, const Weight& deg);  // zero of that degree
  static Element one(const Algebra* alg);
  static Element generator(const Algebra* alg, int i);
  // E_i^{<n>} = E_i^n / <n>_{q_i}!
  static Element divided_generator(const Algebra* alg, int i, int n);
  // x must be homogeneous; the empty element needs `deg`.
  static Element from_nc(const NcElement& x, bool keep_nc = true);
  static Element from_nc(const NcElement& x, const Weight& deg, bool keep_nc = true);
  static Element from_phi(const Algebra* alg, PhiVec phi);

  const Algebra* algebra() const { return alg_; }
  const Weight& degree() const { return deg_; }
  const PhiVec& phi() const { return phi_; }
  Rat phi_at(const Word& w) const;
  bool has_nc() const { return nc_.has_value(); }
  const NcElement& nc() const;
  void drop_nc() { nc_.reset(); }

  bool is_zero() const { return phi_.is_zero(); }
  // value of a degree 0 element
  Rat scalar() const;

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const Rat& c);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(Element a, const Rat& c) { return a *= c; }
  friend Element operator*(const Element& a, const Element& b);
  friend bool operator==(const Element& a, const Element& b);
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

  // x * z and z * x for a free-algebra element z
  Element rmul(const NcElement& z) const;
  Element lmul(const NcElement& z) const;
  // product through the shuffle formula, no representative needed
  static Element shuffle_product(const Element& a, const Element& b);

  Element bar() const;
  Element star() const;
  Element tilde() const;
  Element pow(int n) const;

  // d_i^n (Right) or (d_i^op)^n (Left); divided version divides by (n)_{q_i}!
  Element partial(int i, Side side, int n = 1) const;
  Element partial_divided(int i, Side side, int n) const;
  // Adjoint of right (Left: left) multiplication by z: <<x, y z>> = <<D_z x, y>>.
  Element adjoint(const NcElement& z, Side side = Side::Right) const;

  // ell_i: largest k with d_i^k x != 0 (0 when d_i x = 0).
  int ell(int i, Side side) const;
  Element partial_top(int i, Side side) const;

  // <<x, y>>; y needs a representative unless x has one.
  Rat pair(const Element& y) const;
  Rat pair(const NcElement& y) const;

  // Member of the dual lattice: pairings with all divided-power monomials lie in A0.
  bool lattice_member() const;

  std::string str() const;

 private:
  Element with_degree_check(const Weight& deg, bool keep_nc) const;

  const Algebra* alg_ = nullptr;
  Weight deg_;
  PhiVec phi_;
  std::optional<NcElement> nc_;
};

// Free-algebra level operations on possibly inhomogeneous input.
NcElement multiply(const NcElement& x, const NcElement& y);
Rat pair(const NcElement& x, const NcElement& y);
bool is_zero(const NcElement& x);
bool lattice_member(const NcElement& x);
int ell(int i, Side side, const NcElement& x);
NcElement partial_top(int i, Side side, const NcElement& x);

}  // namespace qschubert
