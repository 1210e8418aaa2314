#pragma once

// PBW frames of quantum Schubert cells: normalized monomials in the root
// vectors of a reduced word, expansion through the dual pairing, straightening
// relations, the order they generate and the bar-transition matrix.

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "qschubert/braid.hpp"

namespace qschubert {

using Exps = std::vector<int>;
using PBWVector = std::map<Exps, Rat>;

enum class MonomialKind { Plain, Divided };

std::string exps_str(const Exps& a);

// Reachability order on one degree slice. below[j] lists the indices j' with
// slice[j'] strictly below slice[j]; topo lists indices with lower elements
// first.
struct SliceOrder {
  std::vector<Exps> slice;
  std::map<Exps, int> index;
  std::vector<std::vector<bool>> below;
  std::vector<int> topo;
  bool leq(int lower, int upper) const { return lower == upper || below[upper][lower]; }
};

struct BarMatrix {
  Weight degree;
  std::vector<Exps> slice;
  // entries[j][j']: coordinate of bar(X^{slice[j]}) at slice[j']
  std::vector<std::vector<Laurent>> entries;
};

class PBWFrame {
 public:
  PBWFrame(const Algebra& alg, ReducedWord word);
  PBWFrame(const PBWFrame&) = delete;
  PBWFrame& operator=(const PBWFrame&) = delete;

  const Algebra& algebra() const { return *alg_; }
  const RootDatum& datum() const { return alg_->datum(); }
  const ReducedWord& word() const { return word_; }
  int length() const { return word_.length(); }
  const Element& root_vector(int k) const { return X_[k]; }

  // Lambda(e_k, e_l) = sign(l-k) (alpha^(k), alpha^(l)), extended bilinearly
  int lambda(int k, int l) const;
  int lambda(const Exps& a, const Exps& b) const;
  Weight degree(const Exps& a) const;
  // q_{i,a} = v^{q_prefactor_exp(a)}
  int q_prefactor_exp(const Exps& a) const;
  Laurent q_prefactor(const Exps& a) const { return Laurent::monomial(q_prefactor_exp(a)); }
  // prod_k <a_k>_{q_{i_k}}!
  Laurent angle_factorial(const Exps& a) const;
  // <<X^a, X^{<a>}>> = v^{dual_exp(a)}, dual_exp(a) = sum_k a_k (eta(alpha^(k)) - d_{i_k});
  // zero exactly when every used root vector has a simple degree.
  int dual_exp(const Exps& a) const;

  // {a : |a| = deg}, lexicographic
  const std::vector<Exps>& slice(const Weight& deg) const;
  // All degrees |a| of height at most h with a nonempty slice, sorted.
  std::vector<Weight> degrees_up_to(int h) const;

  // Dual coordinates only; no free-algebra representative is attached.
  Element monomial(const Exps& a, MonomialKind kind = MonomialKind::Plain) const;
  // Concatenation representative; InvalidArgument above `max_terms` terms.
  NcElement monomial_nc(const Exps& a, MonomialKind kind = MonomialKind::Plain,
                        std::size_t max_terms = 200000) const;

  // <<x, X^a>> from the cached free-algebra expansion of X^a.
  Rat pair_with_monomial(const Element& x, const Exps& a) const;
  // Same value by peeling root vectors off the right with adjoints; slower,
  // kept as an independent route.
  Rat peel_pair(const Element& x, const Exps& a) const;
  // <<X^a, X^a>> = mu(|a|) prod_k prod_{t<=a_k} (1 - q_{i_k}^{-2t})
  Laurent monomial_norm(const Exps& a) const;
  // Coordinates in the basis {X^a}, i.e. v^{-dual_exp(a)} <<x, X^{<a>}>>; with `check` the reconstruction is compared
  // with x and NotInCell is thrown on a residual.
  PBWVector expand(const Element& x, bool check = true) const;
  Element reconstruct(const PBWVector& v, const Weight& deg) const;
  // reconstruct(v, deg(x)) == x, without intermediate normalization
  bool reconstructs(const PBWVector& v, const Element& x) const;
  // <<x, y>> for x in the cell, without free-algebra representatives.
  Rat pair(const Element& x, const Element& y) const;

  // Right-hand side of the relation for 0 <= k < l < m (0-based), divided by
  // <1>_{q_{i_k}}. IntegralityViolation if a coordinate leaves A0.
  const PBWVector& straighten(int k, int l) const;

  const SliceOrder& order(const Weight& deg) const;
  bool order_leq(const Exps& a, const Exps& b) const;

  BarMatrix bar_matrix(const Weight& deg) const;

  // Both containments of the Lambda commutation corollary for X^a, X^b.
  bool lambda_commutator_check(const Exps& a, const Exps& b) const;

 private:
  struct DualVec {
    std::vector<Laurent> num;  // over alg.space(|a|)
    Laurent den{1L};
  };
  const Element& raw_monomial(const Exps& a) const;
  // coefficients of X_1^{a_1} ... X_m^{a_m} on the words of its degree
  const DualVec& raw_dual(const Exps& a) const;
  void enumerate(int k, Weight& rem, Exps& cur, std::vector<Exps>& out) const;
  void ensure_straightening() const;

  const Algebra* alg_;
  ReducedWord word_;
  std::vector<Element> X_;
  std::vector<Weight> roots_;
  std::vector<std::vector<std::pair<Word, Laurent>>> xterms_;
  std::vector<Laurent> xden_;
  mutable std::map<Exps, DualVec> dual_;
  mutable std::recursive_mutex mu_;
  mutable std::map<Weight, std::vector<Exps>> slices_;
  mutable std::map<Exps, Element> raw_;
  mutable std::map<std::pair<int, int>, PBWVector> straight_;
  mutable bool straight_ready_ = false;
  mutable std::vector<Exps> generators_;
  mutable std::map<Weight, std::unique_ptr<SliceOrder>> orders_;
  mutable std::map<Weight, BarMatrix> bars_;
};

// Defects of the bar matrix on one slice: a non-unit diagonal, an entry off
// the order or outside A0, or a failure of bar(M) M = I. Empty when sound.
std::vector<std::string> bar_matrix_defects(const PBWFrame& frame, const Weight& deg);

}  // namespace qschubert
