#ifndef BRAUERLAB_BRAUER_ALGEBRA_HPP
#define BRAUERLAB_BRAUER_ALGEBRA_HPP

// The Brauer algebra Br_d(delta): formal rational combinations of Brauer
// diagrams with multiplication b b' = delta^{c(b,b')} b o b'. Products are
// always computed diagrammatically; generator words are an input
// convenience only. delta is a fixed exact rational per call, not an
// indeterminate.

#include <map>
#include <string>
#include <vector>

#include "brauerlab/diagrams.hpp"
#include "brauerlab/rational.hpp"

namespace brauerlab {

struct BrauerElement {
    int d = 0;
    std::map<GeneralizedDiagram, Rational> terms; // no zero coefficients stored

    bool is_zero() const { return terms.empty(); }
    bool operator==(const BrauerElement& o) const { return d == o.d && terms == o.terms; }
};

BrauerElement brauer_zero(int d);
BrauerElement brauer_basis(const GeneralizedDiagram& b);
BrauerElement brauer_identity(int d);

void add_term(BrauerElement& x, const GeneralizedDiagram& b, const Rational& coeff);
BrauerElement add(const BrauerElement& x, const BrauerElement& y);
BrauerElement scale(const BrauerElement& x, const Rational& a);
BrauerElement multiply(const BrauerElement& x, const BrauerElement& y, const Rational& delta);

// Word over the generators: (kind, index) with kind S or E, 1 <= i <= d-1.
using GeneratorWord = std::vector<std::pair<GenKind, int>>;

// Tokens "s<i>" / "e<i>" separated by whitespace or '*'.
GeneratorWord parse_word(const std::string& text, int d);
std::string print_word(const GeneratorWord& w);

// Left-to-right product of the generator diagrams; empty word = identity.
BrauerElement evaluate_word(const GeneratorWord& w, int d, const Rational& delta);

// One defining relation instance, as a pair of words. An empty rhs means the
// identity; scale_rhs_by_delta marks e_i^2 = delta e_i.
struct RelationInstance {
    std::string name;
    GeneratorWord lhs;
    GeneratorWord rhs;
    bool scale_rhs_by_delta = false;
};

// Every instance of the defining relations at this strand count, with the
// corrected Temperley-Lieb line e_k e_{k+1} e_k = e_k.
std::vector<RelationInstance> presentation_relations(int d);

struct PresentationReport {
    long instances_checked = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

// Checks every instance of the defining relations at this d and delta. The
// Temperley-Lieb line is the diagrammatically forced e_k e_{k+1} e_k = e_k
// (and symmetrically), not the literal printed one.
PresentationReport verify_presentation(int d, const Rational& delta);

// One line per term: "coeff * (blocks)", canonically sorted; "0" when empty.
std::string print_element(const BrauerElement& x);

} // namespace brauerlab

#endif
