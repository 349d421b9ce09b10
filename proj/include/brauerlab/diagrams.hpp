#ifndef BRAUERLAB_DIAGRAMS_HPP
#define BRAUERLAB_DIAGRAMS_HPP

// Generalized Brauer diagrams: partitions of p top vertices ("1".."p") and
// q bottom vertices ("1*".."q*") into blocks of size 1 or 2. Brauer diagrams
// are the singleton-free case with p == q. Composition glues the upper
// diagram's bottom row to the lower diagram's top row, traces chains through
// the middle, removes middle singletons freely and counts closed middle
// loops.
//
// Canonical drawing for crossing counts: all vertices on a circle in the
// boundary order 1*, 2*, ..., q*, p, p-1, ..., 1; two blocks cross iff their
// endpoint pairs interleave in that cyclic order.

#include <string>
#include <utility>
#include <vector>

#include "brauerlab/errors.hpp"

namespace brauerlab {

enum class GenKind { Identity, S, E };

class GeneralizedDiagram {
public:
    GeneralizedDiagram() = default;

    // All vertices start as singletons.
    GeneralizedDiagram(int top_count, int bottom_count);

    int top_count() const { return top_; }
    int bottom_count() const { return bottom_; }
    int vertex_count() const { return top_ + bottom_; }

    // Strand count d for the equal-rows case used by the Brauer algebra.
    int strand_count() const;

    // Vertex ids: 0..top_-1 are top positions 1..top_, then bottom positions.
    int top_vertex(int position) const;
    int bottom_vertex(int position) const;
    bool is_bottom(int v) const { return v >= top_; }
    int position(int v) const { return is_bottom(v) ? v - top_ + 1 : v + 1; }

    int partner(int v) const { return partner_[v]; }
    bool is_singleton(int v) const { return partner_[v] == v; }

    void join(int v, int w);   // pair two singletons
    void cut(int v);           // split v (and its partner) into singletons

    bool has_singletons() const;
    int singleton_count() const;

    // Blocks of size 2 only, each sorted and listed in canonical order.
    std::vector<std::pair<int, int>> arcs() const;
    // All blocks (size 1 and 2), canonical order: sorted by least vertex
    // under 1* < 2* < ... < q* < p < p-1 < ... < 1.
    std::vector<std::vector<int>> canonical_blocks() const;

    // Position of v in the canonical circular boundary order.
    int boundary_key(int v) const;

    // Number of blocks {i, j*} connecting top to bottom.
    int through_strand_count() const;

    bool operator==(const GeneralizedDiagram& o) const {
        return top_ == o.top_ && bottom_ == o.bottom_ && partner_ == o.partner_;
    }
    bool operator<(const GeneralizedDiagram& o) const {
        if (top_ != o.top_) return top_ < o.top_;
        if (bottom_ != o.bottom_) return bottom_ < o.bottom_;
        return partner_ < o.partner_;
    }

private:
    int top_ = 0, bottom_ = 0;
    std::vector<int> partner_;
};

// Identity, s_i, e_i on d strands. i is 1-based; needs 1 <= i <= d-1 for
// s_i / e_i.
GeneralizedDiagram generator(int d, GenKind kind, int i = 0);

struct CompositionResult {
    GeneralizedDiagram diagram;
    long loops = 0;
};

// Concatenation identifying upper's bottom row with lower's top row.
CompositionResult compose(const GeneralizedDiagram& upper, const GeneralizedDiagram& lower);

// All diagrams obtained from b by replacing any subset of its arcs by
// pairs of singletons; 2^(#arcs) results, b itself first is not guaranteed.
std::vector<GeneralizedDiagram> subdiagrams(const GeneralizedDiagram& b);

// Subdiagram relation: sub is b with some arcs removed.
bool is_subdiagram(const GeneralizedDiagram& sub, const GeneralizedDiagram& b);

// Unordered pairs of arcs that cross in the canonical drawing.
std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>>
crossings(const GeneralizedDiagram& b);

struct CapsAndCups {
    // Each arc as (left endpoint, right endpoint), left = smaller position.
    std::vector<std::pair<int, int>> caps; // bottom blocks {i*, j*}
    std::vector<std::pair<int, int>> cups; // top blocks {i, j}
};

CapsAndCups caps_and_cups(const GeneralizedDiagram& b);

// All Brauer diagrams on d strands; (2d-1)!! of them. Throws BudgetExceeded
// for d beyond the limit.
std::vector<GeneralizedDiagram> enumerate_brauer(int d, int limit = 6);

// All generalized diagrams with the given vertex counts (involutions).
std::vector<GeneralizedDiagram> enumerate_generalized(int top_count, int bottom_count,
                                                      int limit = 10);

// Literal syntax: blocks in parentheses, bottom vertices suffixed '*',
// e.g. "(1,2*)(2,1*)"; singleton "(3)". print + parse round-trip exactly.
std::string print_diagram(const GeneralizedDiagram& b);
GeneralizedDiagram parse_diagram(const std::string& text);

} // namespace brauerlab

#endif
