#pragma once

// Named elements and monomial descriptions of canonical bases, read from the
// JSON tables in data/golden and checked against the solver.

#include <map>
#include <string>
#include <vector>

#include "qschubert/canon.hpp"

namespace qschubert {

// Definitions understood by build_named:
//   "E2"               generator
//   "T 1,2 E3"         T_1 T_2 (E3), any earlier name as argument
//   "Tinv 3,2 E1"      T_3^{-1} T_2^{-1} (E1)
//   "star E132"
//   "Y 2,1,3,2"        the single repetition element of that word
//   "E2*E213 - v^-2 E21*E23"   signed sum of products, optional v^k factors
Element evaluate_definition(const Algebra& alg, const std::map<std::string, Element>& named,
                            const std::string& def);

struct NamedTable {
  std::string type;
  std::vector<std::string> order;
  std::map<std::string, Element> elements;
  // name, alternative definition
  std::vector<std::pair<std::string, std::string>> identities;
  // name -> expected string label path, e.g. [[2,1],[1,1]]
  std::map<std::string, StringDatum> labels;
};

NamedTable load_named_table(const Algebra& alg, const std::string& json_text);

struct TableCheck {
  int checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// Each identity holds exactly.
TableCheck check_identities(const Algebra& alg, const NamedTable& t);
// T_i^{-1} action table: {"columns": [...], "rows": {"1": [...], ...}}, "" for empty.
TableCheck check_tinv_table(const NamedTable& t, const std::string& json_text);

// A monomial description: all products v^{f(m)} prod E^{m} in the listed
// order, over exponents m obeying the exclusivity pairs.
struct MonomialDescription {
  std::string name;
  std::vector<int> word;     // 0-based, the frame whose basis is described
  std::vector<int> word2;    // nonempty for bi-Schubert intersections
  std::vector<std::string> factors;
  struct Product {
    int coeff = 1;
    std::map<std::string, int> left, right;
  };
  std::vector<Product> products;
  int unit = 1;  // v-exponent of one unit of the quadratic form
  std::vector<std::pair<std::string, std::string>> exclusive;
  int max_height = 0;
  int max_exponent = -1;  // if >= 0, only slices |a| with every a_k <= this
};

// `word` entries may be given directly or as {"longest_after": i}.
std::vector<MonomialDescription> load_descriptions(const RootDatum& rd,
                                                   const std::string& json_text);

int description_exponent(const MonomialDescription& d, const std::map<std::string, int>& m);

// Degrees the description is checked on.
std::vector<Weight> description_degrees(FrameCache& cache, const MonomialDescription& d);

// Compares the described set with the solved set (or bi-Schubert set) on one slice.
TableCheck check_description(FrameCache& cache, const NamedTable& named,
                             const MonomialDescription& d, const Weight& deg);

}  // namespace qschubert
