#pragma once

// The sl2 operators attached to a node, the string decomposition on ker d_i,
// the braid symmetries T_i, T_i^{-1} and root vectors of reduced words.

#include <map>

#include "qschubert/freealg.hpp"

namespace qschubert {

enum class Variant { Plus, Op };

// E_i^{<n>} x E_i^{<m>} style divided-power operator of order r; Op is the
// star conjugate of Plus.
Element ul_E(int i, Variant variant, int r, const Element& x);

// x = sum_r (ul_E^op)^{(r)}(x_r), each x_r killed by d_i and d_i^op.
struct Sl2Decomposition {
  int node = 0;
  std::map<int, Element> parts;
};

// Throws NotInKernel unless d_i x = 0.
Sl2Decomposition sl2_decompose(int i, const Element& x);

// T_i on ker d_i and T_i^{-1} on ker d_i^op; DomainViolation elsewhere.
Element T(int i, const Element& x);
Element T_inv(int i, const Element& y);
// T_{i_1} ... T_{i_k}(x), applied right to left
Element T_word(const std::vector<int>& letters, const Element& x);
Element T_inv_word(const std::vector<int>& letters, const Element& y);

// X_{i,k} = T_{i_1} ... T_{i_{k-1}}(E_{i_k}), k is 0-based here.
Element root_vector(const Algebra& alg, const ReducedWord& word, int k);
std::vector<Element> root_vectors(const Algebra& alg, const ReducedWord& word);

// binom(-a_ij, l)_{q_i}^{-1} (ul_E_i^op)^{(l)}(E_j); InvalidArgument unless
// i != j and 0 <= l <= -a_ij.
Element E_ji_l(const Algebra& alg, int i, int j, int l);

// Clebsch-Gordan coefficient C_{r;t',t''}(v) for lowest weights -m, -n.
// Its exponents are halves of integers, so the result is a Laurent
// polynomial in s = v^{1/2}.
Laurent cg_coefficient(int r, int t1, int t2, int m, int n);

}  // namespace qschubert
