#ifndef BRAUERLAB_TENSOR_ACTION_HPP
#define BRAUERLAB_TENSOR_ACTION_HPP

// Actions on V^{tensor d}: the signed Leibniz action of osp/gl elements, the
// sigma/tau operators and their lifts s_i/e_i, the summand decomposition
// V^{tensor d} = (+)_s W_s over orientation sequences, weights of labelled
// oriented diagrams, the functor F, the assembly map Theta from Mat(OB)
// endomorphisms to tensor-space operators, and the permutation isomorphisms
// psi_sigma between summands.

#include <string>
#include <utility>
#include <vector>

#include "brauerlab/brauer_algebra.hpp"
#include "brauerlab/linalg.hpp"
#include "brauerlab/oriented.hpp"
#include "brauerlab/superalgebra.hpp"

namespace brauerlab {

// A tensor basis vector v_{i_1} x ... x v_{i_d}, stored as basis positions.
using TensorIndex = std::vector<int>;

long flat_index(const TensorIndex& idx, int dim);
TensorIndex unflat_index(long flat, int dim, int d);
long tensor_dim(const Params& p, int d, long budget = 1000000);

int index_parity(const TensorIndex& idx, const Params& p); // total parity mod 2

// The orientation sequence whose summand contains this index.
std::string summand_label(const TensorIndex& idx, const Params& p);

// Vect(s) in row-major order; slot k runs over I^{s_k} in basis order.
std::vector<TensorIndex> summand_indices(const std::string& s, const Params& p);
long summand_dim(const std::string& s, const Params& p);
long summand_rank(const std::string& s, const TensorIndex& idx, const Params& p);

// Comma-separated basis index literals, barred with suffix '~': "1~,0,3".
std::string print_tensor_index(const TensorIndex& idx, const Params& p);
TensorIndex parse_tensor_index(const std::string& text, const Params& p, int d);

// X.(w_1 x...x w_d) = sum_i (-1)^{(|w_1|+...+|w_{i-1}|)|X|} w_1 x..X w_i..x w_d.
SparseMatrix act_lie(const LieElement& X, const Params& p, int d, long budget = 1000000);

// sigma(v x w) = (-1)^{|v||w|} w x v;
// tau(v x w) = <v,w> sum_i (-1)^{|v_i|} v_i x v_i^*.
std::pair<SparseMatrix, SparseMatrix> sigma_tau(const Params& p);

// s_i = id^{(i-1)} x sigma x id^{(d-i-1)}, e_i likewise with tau.
SparseMatrix brauer_operator(GenKind kind, int i, int d, const Params& p);

// op(g_1) ... op(g_k): rightmost generator acts first.
SparseMatrix word_operator(const GeneratorWord& w, int d, const Params& p);

struct LabelledOrientedDiagram {
    OrientedMorphism morphism;
    std::vector<BasisIndex> bottom_labels; // i, one per bottom vertex
    std::vector<BasisIndex> top_labels;    // j, one per top vertex
};

// 0 for an inconsistent labelling, else the product of (-1)^{|i||j|} over
// crossings, -1 per clockwise cap with large label and -1 per anticlockwise
// cup with large label.
Rational weight(const LabelledOrientedDiagram& ld, const Params& p);

// F(b): W_s -> W_t, entries weight(b_i^j), rows/cols in summand order.
SparseMatrix functor_F(const OrientedMorphism& f, const Params& p);
SparseMatrix functor_F(const OrientedCombo& combo, const std::string& s, const std::string& t,
                       const Params& p);

// Assembles the full V^{tensor d} operator from a Mat(OB) endomorphism.
SparseMatrix theta(const MatEndo& A, const Params& p);

// sigma with t[sigma(k)] = s[k], order-preserving on equal symbols (the
// minimal-length choice), plus its lexicographically-first reduced word.
std::vector<int> minimal_permutation(const std::string& s, const std::string& t);
std::vector<int> lex_first_reduced_word(std::vector<int> sigma);

// Full-space operator of sigma: composite of adjacent-swap operators along
// lex_first_reduced_word(sigma).
SparseMatrix apply_permutation(const std::vector<int>& sigma, int d, const Params& p);
SparseVec apply_permutation(const std::vector<int>& sigma, const SparseVec& v, int d,
                            const Params& p);

// The distinguished gl(m|n)-isomorphism W_s -> W_t as a summand-sized block.
SparseMatrix psi_sigma(const std::string& s, const std::string& t, const Params& p);

} // namespace brauerlab

#endif
