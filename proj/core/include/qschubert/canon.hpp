#pragma once

// Canonical bases of quantum Schubert cells: the triangular solver, upper
// global basis certificates, string data and the structural checks built on
// top of them.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qschubert/pbw.hpp"

namespace qschubert {

// (node, exponent) pairs, node 0-based
using StringDatum = std::vector<std::pair<int, int>>;

struct CanonicalElement {
  Exps a;
  PBWVector pbw;
  Element element;
  std::optional<NcElement> expansion;
  StringDatum string;
  Rat norm;  // mu(deg)^{-1} <<b,b>>
};

struct SolveOptions {
  // random linear extension of the order instead of the canonical one
  std::optional<std::uint64_t> shuffle_seed;
  bool with_strings = false;
  bool with_norms = false;
  // attach a free-algebra representative when it stays below this many terms
  std::size_t expansion_cap = 0;
};

std::vector<CanonicalElement> lusztig_solve(const PBWFrame& frame, const Weight& deg,
                                            const SolveOptions& opts = {});

struct Certificate {
  bool lattice = false;
  bool bar_invariant = false;
  Rat norm;
  bool norm_ok = false;
  StringDatum string;
  Rat scalar;
  bool paths_agree = false;
  bool pass() const {
    return lattice && bar_invariant && norm_ok && paths_agree && scalar.is_one();
  }
  std::string summary() const;
};

// Elements without a representative are paired through `frame`, which must
// contain them. Throws NotSigned when the cascade ends away from +-1.
Certificate verify_upper_global(const Element& b, const PBWFrame* frame = nullptr,
                                std::uint64_t seed = 1);

// Greedy cascade: first node with ell_i > 0, apply d_i^{(top)}, repeat. The
// terminal scalar is returned through `scalar` when requested.
StringDatum greedy_string(const Element& b, Rat* scalar = nullptr);
// Cascade along a given path; InvalidArgument if a step does not apply.
Rat cascade(const Element& b, const StringDatum& path);
// NotCanonical unless b passes verify_upper_global.
StringDatum string_name(const Element& b, const PBWFrame* frame = nullptr);
// "E_{1^2 2}" style label
std::string string_label(const StringDatum& s);

// Frames and solved slices shared between checks.
class FrameCache {
 public:
  explicit FrameCache(const Algebra& alg) : alg_(&alg) {}
  const Algebra& algebra() const { return *alg_; }
  const PBWFrame& frame(const std::vector<int>& letters);
  // A longest-word frame (finite type), used to pair arbitrary elements.
  const PBWFrame& longest();
  const std::vector<CanonicalElement>& basis(const std::vector<int>& letters, const Weight& deg);
  // (letters, degree) of every slice solved so far
  std::vector<std::pair<std::vector<int>, Weight>> solved();

 private:
  const Algebra* alg_;
  std::recursive_mutex mu_;
  std::map<std::vector<int>, std::unique_ptr<PBWFrame>> frames_;
  std::map<std::pair<std::vector<int>, Weight>, std::vector<CanonicalElement>> bases_;
  std::optional<std::vector<int>> longest_;
};

// Position of x in `set` (Phi equality), -1 if absent.
int find_element(const std::vector<CanonicalElement>& set, const Element& x);

// True iff both frames give the same set on the slice; FrameMismatch unless
// they belong to the same Weyl group element.
bool compare_frames(const PBWFrame& f1, const PBWFrame& f2, const Weight& deg);

struct Report {
  int checked = 0;
  int skipped = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
  void merge(const Report& o);
};

// T_i(b) certified for every solved b in ker d_i; also compares
// d_i^{(top)} T_i(b) with (d_i^op)^{(top)} b.
Report check_Ti_stability(FrameCache& cache, const std::vector<int>& letters, const Weight& deg,
                          int i);

// B(w)_deg inside B(ww')_deg and T_w(B(w')_{w^{-1}deg}) inside B(ww')_deg.
Report check_embedding(FrameCache& cache, const std::vector<int>& w, const std::vector<int>& w2,
                       const Weight& deg);

std::vector<CanonicalElement> bi_schubert(FrameCache& cache, const std::vector<int>& w,
                                          const std::vector<int>& w2, const Weight& deg);

enum class WordShape { RepetitionFree, SingleRepetition, Other };
struct ShapeInfo {
  WordShape shape = WordShape::Other;
  int r = -1, r2 = -1;  // repeated positions, 0-based
  Exps n;               // n(r,r')
};
ShapeInfo word_shape(const RootDatum& rd, const ReducedWord& word);

// Y = v^{(alpha^(r),alpha^(r'))} X_r X_r' - q_i^{-1} X^{n(r,r')}, with representative
Element single_repetition_Y(const PBWFrame& frame);
// b(n,l) = v^{l Lambda(n, e_r+e_r')} X^n Y^l
Element single_repetition_b(const PBWFrame& frame, const Exps& n, int l);

// Unsupported unless the word is repetition free or has a single repetition.
std::vector<CanonicalElement> closed_form_basis(const PBWFrame& frame, const Weight& deg);
// X^a against the Gaussian binomial expansion in the b(n,l), for every a in the slice.
bool check_transition_matrix(const PBWFrame& frame, const Weight& deg);

}  // namespace qschubert
