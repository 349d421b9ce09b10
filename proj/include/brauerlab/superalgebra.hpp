#ifndef BRAUERLAB_SUPERALGEBRA_HPP
#define BRAUERLAB_SUPERALGEBRA_HPP

// Concrete matrix models of the ortho-symplectic Lie superalgebra
// osp(2m+1|2n) (odd case) and osp(2m|2n) (even case), and the embedded
// gl(m|n), over the superspace V with ordered homogeneous basis
//
//   0 < 1bar < ... < mbar < 1 < ... < m < (m+1)bar < ... < (m+n)bar
//     < m+1 < ... < m+n                  (0 present only in the odd case)
//
// where v_i is even iff ||i|| <= m (and v_0 is even). The supersymmetric
// form is the block matrix J from the same presentation.

#include <string>
#include <utility>
#include <vector>

#include "brauerlab/linalg.hpp"
#include "brauerlab/rational.hpp"

namespace brauerlab {

enum class ParityMode { Even, Odd };

struct Params {
    int m = 0;
    int n = 0;
    ParityMode mode = ParityMode::Even;

    bool odd() const { return mode == ParityMode::Odd; }
    int dim() const { return (odd() ? 1 : 0) + 2 * (m + n); }
    // dim V_0 - dim V_1, the Brauer parameter of the tensor action.
    Rational supertrace() const { return Rational((odd() ? 1 : 0) + 2 * m - 2 * n); }
    // The circle parameter of the oriented category.
    Rational circle() const { return Rational(m - n); }
    std::string mode_name() const { return odd() ? "odd" : "even"; }
};

// A basis label: 0 (odd case only), or value 1..m+n, barred or not.
struct BasisIndex {
    int value = 0;
    bool barred = false;

    bool operator==(const BasisIndex& o) const { return value == o.value && barred == o.barred; }
};

int basis_position(const BasisIndex& idx, const Params& p);
BasisIndex basis_index_at(int position, const Params& p);
int parity_of_index(const BasisIndex& idx, const Params& p); // |v_i|
int parity_of_position(int position, const Params& p);
char orientation_symbol(const BasisIndex& idx); // '^', 'v', or 'o'

// Literal: "3", barred "3~", zero "0".
std::string print_basis_index(const BasisIndex& idx);
BasisIndex parse_basis_index(const std::string& text, const Params& p);

// A homogeneous element of gl(V) in the fixed ordered basis.
struct LieElement {
    SparseMatrix mat;
    int parity = 0;

    bool operator==(const LieElement& o) const { return parity == o.parity && mat == o.mat; }
};

bool is_homogeneous(const LieElement& X, const Params& p);

// The supersymmetric form as a matrix: <v_i, v_j> = J[i][j].
SparseMatrix gram_matrix(const Params& p);

// Unique (j, eps) with <v_i, eps * v_j> = 1.
std::pair<BasisIndex, Rational> right_dual(const BasisIndex& idx, const Params& p);

// Homogeneous basis of osp(V), one generator per free parameter of the block
// presentation; length m(2m+1)+n(2n+1)+2n(2m+1) (odd) or
// m(2m-1)+n(2n+1)+4mn (even).
std::vector<LieElement> osp_basis(const Params& p);

// <Xv,w> + (-1)^{|X||v|} <v,Xw> = 0 for all basis pairs. Throws on a
// non-homogeneous X.
bool check_form_invariance(const LieElement& X, const Params& p);

// iota(E_{ij}) for i,j in 1..m+n, row-major: natural action on the unbarred
// span plus the dual action v_kbar -> -delta_{ik} (-1)^{(|i|+|j|)|j|} v_jbar
// on the barred span. The sign exponent is the one form invariance (oh)
// forces for this J; it matches the abstract dual representation after the
// change of basis w_k -> (-1)^{|k|} v_kbar.
std::vector<LieElement> gl_embedding(const Params& p);

// Superbracket [X,Y] = XY - (-1)^{|X||Y|} YX.
LieElement superbracket(const LieElement& X, const LieElement& Y, const Params& p);

// Exact membership of X in the rational span of the given elements.
bool in_span(const LieElement& X, const std::vector<LieElement>& basis);

} // namespace brauerlab

#endif
