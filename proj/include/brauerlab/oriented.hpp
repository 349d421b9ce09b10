#ifndef BRAUERLAB_ORIENTED_HPP
#define BRAUERLAB_ORIENTED_HPP

// The oriented (walled) Brauer category OB(w): objects are orientation
// sequences over {^, v, o} (up, down, trivial), morphisms are oriented
// generalized Brauer diagrams. Composition glues diagrams, removes internal
// o's freely and multiplies by the circle parameter w (the paper's m - n)
// once per closed internal loop.
//
// Orientation rules for a triple (t, b, s), t on top:
//   (1) top arcs carry {^, v};          (2) bottom arcs carry {^, v};
//   (3) through strands carry equal symbols from {^, v};
//   (4) singletons carry 'o' exactly.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "brauerlab/diagrams.hpp"
#include "brauerlab/rational.hpp"

namespace brauerlab {

// Sequences are strings over '^', 'v', 'o'.
using OrientationSeq = std::string;

bool is_orientation_seq(const std::string& s);
void require_orientation_seq(const std::string& s);
std::string reduce_seq(const std::string& s); // delete all 'o'
long count_symbol(const std::string& s, char c);

// All sequences over {^,v} (even mode) or {^,v,o} (odd mode) of length d.
std::vector<std::string> all_sequences(int d, bool with_circles);

struct OrientedMorphism {
    std::string top;            // t
    GeneralizedDiagram diagram; // b
    std::string bottom;         // s

    bool operator==(const OrientedMorphism& o) const {
        return top == o.top && bottom == o.bottom && diagram == o.diagram;
    }
    bool operator<(const OrientedMorphism& o) const {
        if (top != o.top) return top < o.top;
        if (bottom != o.bottom) return bottom < o.bottom;
        return diagram < o.diagram;
    }
};

// Def. 4.1 conditions (1)-(4). Throws on length mismatch.
bool validate(const std::string& t, const GeneralizedDiagram& b, const std::string& s);

OrientedMorphism make_oriented(const std::string& t, const GeneralizedDiagram& b,
                               const std::string& s);

// Deletes all o-positions (and their singleton blocks), renumbering the rest.
OrientedMorphism reduce(const OrientedMorphism& f);

// Formal rational combination of oriented morphisms with a common (t, s).
using OrientedCombo = std::map<OrientedMorphism, Rational>;

// g after f: requires bottom(g) == top(f); coefficient circle^{#loops}.
OrientedCombo compose_oriented(const OrientedMorphism& g, const OrientedMorphism& f,
                               const Rational& circle);
OrientedCombo compose_combos(const OrientedCombo& g, const OrientedCombo& f,
                             const Rational& circle);

std::vector<OrientedMorphism> hom_basis(const std::string& s, const std::string& t);
long hom_dim(const std::string& s, const std::string& t);

// Sufficient condition for Hom(s, t) = 0: l = #o(s) - #o(t) odd, or l even
// with l/2 != #^(t) - #^(s). (The latter difference is what diagram counting
// forces; see the decisions ledger note on the printed inequality.)
bool hom_vanishing_predicate(const std::string& s, const std::string& t);

// "t | diagram-literal | s"
std::string print_oriented(const OrientedMorphism& f);

// An endomorphism of the formal direct sum of all length-d objects in the
// additive closure Mat(OB): a matrix of morphism combinations indexed by
// (top sequence, bottom sequence). In even mode only o-free sequences exist.
struct MatEndo {
    int d = 0;
    bool odd_mode = false;
    std::map<std::pair<std::string, std::string>, OrientedCombo> entries;

    bool operator==(const MatEndo& o) const {
        return d == o.d && odd_mode == o.odd_mode && entries == o.entries;
    }
};

MatEndo mat_identity(int d, bool odd_mode);

// The embedding Psi: M(b)_{(t,s)} is the unique subdiagram of b lying in
// B^[d]_s^t, or no entry when none exists.
MatEndo psi_embed(const GeneralizedDiagram& brauer_diagram, bool odd_mode);

MatEndo mat_compose(const MatEndo& A, const MatEndo& B, const Rational& circle);
MatEndo mat_add(const MatEndo& A, const MatEndo& B);
MatEndo mat_scale(const MatEndo& A, const Rational& a);
MatEndo mat_sub(const MatEndo& A, const MatEndo& B);

} // namespace brauerlab

#endif
