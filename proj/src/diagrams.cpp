#include "brauerlab/diagrams.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace brauerlab {

GeneralizedDiagram::GeneralizedDiagram(int top_count, int bottom_count)
    : top_(top_count), bottom_(bottom_count), partner_(top_count + bottom_count) {
    if (top_count < 0 || bottom_count < 0) throw std::invalid_argument("negative vertex count");
    for (int v = 0; v < vertex_count(); ++v) partner_[v] = v;
}

int GeneralizedDiagram::strand_count() const {
    if (top_ != bottom_) throw std::logic_error("diagram has unequal top/bottom vertex counts");
    return top_;
}

int GeneralizedDiagram::top_vertex(int position) const {
    if (position < 1 || position > top_) throw std::out_of_range("top position out of range");
    return position - 1;
}

int GeneralizedDiagram::bottom_vertex(int position) const {
    if (position < 1 || position > bottom_) throw std::out_of_range("bottom position out of range");
    return top_ + position - 1;
}

void GeneralizedDiagram::join(int v, int w) {
    if (v == w || !is_singleton(v) || !is_singleton(w))
        throw std::invalid_argument("join requires two distinct singleton vertices");
    partner_[v] = w;
    partner_[w] = v;
}

void GeneralizedDiagram::cut(int v) {
    int w = partner_[v];
    partner_[v] = v;
    partner_[w] = w;
}

bool GeneralizedDiagram::has_singletons() const {
    for (int v = 0; v < vertex_count(); ++v)
        if (is_singleton(v)) return true;
    return false;
}

int GeneralizedDiagram::singleton_count() const {
    int k = 0;
    for (int v = 0; v < vertex_count(); ++v)
        if (is_singleton(v)) ++k;
    return k;
}

int GeneralizedDiagram::boundary_key(int v) const {
    return is_bottom(v) ? position(v) - 1 : bottom_ + (top_ - position(v));
}

std::vector<std::pair<int, int>> GeneralizedDiagram::arcs() const {
    std::vector<std::pair<int, int>> out;
    for (const auto& block : canonical_blocks())
        if (block.size() == 2) out.emplace_back(block[0], block[1]);
    return out;
}

std::vector<std::vector<int>> GeneralizedDiagram::canonical_blocks() const {
    std::vector<std::vector<int>> blocks;
    std::vector<bool> seen(vertex_count(), false);
    for (int v = 0; v < vertex_count(); ++v) {
        if (seen[v]) continue;
        int w = partner_[v];
        seen[v] = true;
        std::vector<int> block{v};
        if (w != v) {
            seen[w] = true;
            block.push_back(w);
        }
        std::sort(block.begin(), block.end(),
                  [&](int a, int b) { return boundary_key(a) < boundary_key(b); });
        blocks.push_back(std::move(block));
    }
    std::sort(blocks.begin(), blocks.end(), [&](const auto& a, const auto& b) {
        return boundary_key(a[0]) < boundary_key(b[0]);
    });
    return blocks;
}

int GeneralizedDiagram::through_strand_count() const {
    int k = 0;
    for (int v = 0; v < top_; ++v)
        if (partner_[v] != v && is_bottom(partner_[v])) ++k;
    return k;
}

GeneralizedDiagram generator(int d, GenKind kind, int i) {
    if (d < 0) throw std::invalid_argument("negative strand count");
    GeneralizedDiagram b(d, d);
    if (kind == GenKind::Identity) {
        for (int j = 1; j <= d; ++j) b.join(b.top_vertex(j), b.bottom_vertex(j));
        return b;
    }
    if (i < 1 || i > d - 1) throw std::invalid_argument("generator index out of range");
    for (int j = 1; j <= d; ++j) {
        if (j == i || j == i + 1) continue;
        b.join(b.top_vertex(j), b.bottom_vertex(j));
    }
    if (kind == GenKind::S) {
        b.join(b.top_vertex(i), b.bottom_vertex(i + 1));
        b.join(b.top_vertex(i + 1), b.bottom_vertex(i));
    } else {
        b.join(b.top_vertex(i), b.top_vertex(i + 1));
        b.join(b.bottom_vertex(i), b.bottom_vertex(i + 1));
    }
    return b;
}

namespace {

// Middle vertex j (1-based) of a composition has an upper port (upper's
// bottom j) and a lower port (lower's top j). Chains alternate between the
// two diagrams through these ports.
struct Gluing {
    const GeneralizedDiagram& upper;
    const GeneralizedDiagram& lower;

    // Follows the chain entering middle vertex j through the given side and
    // leaving through the other. Returns (kind, value): kind 0 = ended at an
    // upper-top vertex, 1 = ended at a lower-bottom vertex, 2 = died at a
    // middle singleton, value = vertex/position. Marks middles visited.
    std::vector<bool>& visited;

    std::tuple<int, int> follow(int j, bool from_above) {
        for (;;) {
            visited[j - 1] = true;
            if (from_above) {
                int port = lower.top_vertex(j);
                int w = lower.partner(port);
                if (w == port) return {2, j};
                if (lower.is_bottom(w)) return {1, w};
                j = lower.position(w);
                visited[j - 1] = true;
                from_above = false;
            } else {
                int port = upper.bottom_vertex(j);
                int w = upper.partner(port);
                if (w == port) return {2, j};
                if (!upper.is_bottom(w)) return {0, w};
                j = upper.position(w);
                visited[j - 1] = true;
                from_above = true;
            }
        }
    }
};

} // namespace

CompositionResult compose(const GeneralizedDiagram& upper, const GeneralizedDiagram& lower) {
    if (upper.bottom_count() != lower.top_count())
        throw std::invalid_argument("compose: upper bottom row and lower top row differ");
    const int mid = upper.bottom_count();
    CompositionResult out{GeneralizedDiagram(upper.top_count(), lower.bottom_count()), 0};
    std::vector<bool> visited(mid, false);
    Gluing glue{upper, lower, visited};

    auto result_vertex = [&](int kind, int v) {
        // kind 0: upper-top vertex id; kind 1: lower-bottom vertex id.
        return kind == 0 ? out.diagram.top_vertex(upper.position(v))
                         : out.diagram.bottom_vertex(lower.position(v));
    };

    // Chains starting at outer vertices.
    for (int pos = 1; pos <= upper.top_count(); ++pos) {
        int v = upper.top_vertex(pos);
        int w = upper.partner(v);
        if (w == v) continue;
        if (!upper.is_bottom(w)) {
            if (w > v) out.diagram.join(result_vertex(0, v), result_vertex(0, w));
            continue;
        }
        auto [kind, end] = glue.follow(upper.position(w), /*from_above=*/true);
        if (kind == 2) continue; // chain died at a middle singleton
        if (kind == 0 && end < v) continue; // cup already traced from its other end
        out.diagram.join(result_vertex(0, v), result_vertex(kind, end));
    }
    for (int pos = 1; pos <= lower.bottom_count(); ++pos) {
        int v = lower.bottom_vertex(pos);
        int w = lower.partner(v);
        if (w == v) continue;
        if (lower.is_bottom(w)) {
            if (w > v) out.diagram.join(result_vertex(1, v), result_vertex(1, w));
            continue;
        }
        auto [kind, end] = glue.follow(lower.position(w), /*from_above=*/false);
        if (kind == 2) continue;
        if (kind == 1 && end < v) continue; // cap already traced
        if (kind == 0) continue;            // through strand, traced from the top
        out.diagram.join(result_vertex(1, v), result_vertex(1, end));
    }

    // Remaining middle components: closed cycles count as loops; paths
    // between middle singletons vanish without a factor.
    for (int j = 1; j <= mid; ++j) {
        if (visited[j - 1]) continue;
        // March around the component starting downward from j.
        bool closed = true;
        int cur = j;
        bool from_above = true;
        do {
            visited[cur - 1] = true;
            const GeneralizedDiagram& diag = from_above ? lower : upper;
            int port = from_above ? diag.top_vertex(cur) : diag.bottom_vertex(cur);
            int w = diag.partner(port);
            if (w == port) { closed = false; break; }
            cur = diag.position(w);
            from_above = !from_above;
        } while (cur != j || !from_above);
        if (!closed) {
            // Walk the other direction only to mark the rest of the path.
            cur = j;
            from_above = false;
            for (;;) {
                visited[cur - 1] = true;
                const GeneralizedDiagram& diag = from_above ? lower : upper;
                int port = from_above ? diag.top_vertex(cur) : diag.bottom_vertex(cur);
                int w = diag.partner(port);
                if (w == port) break;
                cur = diag.position(w);
                from_above = !from_above;
            }
            continue;
        }
        ++out.loops;
    }
    return out;
}

std::vector<GeneralizedDiagram> subdiagrams(const GeneralizedDiagram& b) {
    auto arcs = b.arcs();
    if (arcs.size() > 20) throw BudgetExceeded("too many arcs for subdiagram enumeration");
    std::vector<GeneralizedDiagram> out;
    out.reserve(1u << arcs.size());
    for (unsigned mask = 0; mask < (1u << arcs.size()); ++mask) {
        GeneralizedDiagram sub(b.top_count(), b.bottom_count());
        for (std::size_t k = 0; k < arcs.size(); ++k)
            if (mask & (1u << k)) sub.join(arcs[k].first, arcs[k].second);
        out.push_back(std::move(sub));
    }
    return out;
}

bool is_subdiagram(const GeneralizedDiagram& sub, const GeneralizedDiagram& b) {
    if (sub.top_count() != b.top_count() || sub.bottom_count() != b.bottom_count()) return false;
    for (const auto& [v, w] : sub.arcs())
        if (b.partner(v) != w) return false;
    return true;
}

std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>>
crossings(const GeneralizedDiagram& b) {
    auto arcs = b.arcs();
    std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> out;
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        auto [a1, a2] = arcs[i];
        int lo = b.boundary_key(a1), hi = b.boundary_key(a2);
        if (lo > hi) std::swap(lo, hi);
        for (std::size_t j = i + 1; j < arcs.size(); ++j) {
            auto [b1, b2] = arcs[j];
            bool in1 = lo < b.boundary_key(b1) && b.boundary_key(b1) < hi;
            bool in2 = lo < b.boundary_key(b2) && b.boundary_key(b2) < hi;
            if (in1 != in2) out.emplace_back(arcs[i], arcs[j]);
        }
    }
    return out;
}

CapsAndCups caps_and_cups(const GeneralizedDiagram& b) {
    CapsAndCups out;
    for (const auto& [v, w] : b.arcs()) {
        int lo = v, hi = w;
        if (b.position(lo) > b.position(hi)) std::swap(lo, hi);
        if (b.is_bottom(v) && b.is_bottom(w))
            out.caps.emplace_back(lo, hi);
        else if (!b.is_bottom(v) && !b.is_bottom(w))
            out.cups.emplace_back(lo, hi);
    }
    return out;
}

namespace {

void enumerate_matchings(GeneralizedDiagram& b, std::vector<bool>& placed, int from,
                         bool allow_singletons, std::vector<GeneralizedDiagram>& out) {
    int n = b.vertex_count();
    int v = from;
    while (v < n && placed[v]) ++v;
    if (v == n) {
        out.push_back(b);
        return;
    }
    placed[v] = true;
    if (allow_singletons) enumerate_matchings(b, placed, v + 1, allow_singletons, out);
    for (int w = v + 1; w < n; ++w) {
        if (placed[w]) continue;
        placed[w] = true;
        b.join(v, w);
        enumerate_matchings(b, placed, v + 1, allow_singletons, out);
        b.cut(v);
        placed[w] = false;
    }
    placed[v] = false;
}

} // namespace

std::vector<GeneralizedDiagram> enumerate_brauer(int d, int limit) {
    if (d > limit) throw BudgetExceeded("enumerate_brauer: d exceeds the configured limit");
    std::vector<GeneralizedDiagram> out;
    GeneralizedDiagram b(d, d);
    std::vector<bool> placed(b.vertex_count(), false);
    enumerate_matchings(b, placed, 0, /*allow_singletons=*/false, out);
    return out;
}

std::vector<GeneralizedDiagram> enumerate_generalized(int top_count, int bottom_count, int limit) {
    if (top_count + bottom_count > limit)
        throw BudgetExceeded("enumerate_generalized: vertex count exceeds the configured limit");
    std::vector<GeneralizedDiagram> out;
    GeneralizedDiagram b(top_count, bottom_count);
    std::vector<bool> placed(b.vertex_count(), false);
    enumerate_matchings(b, placed, 0, /*allow_singletons=*/true, out);
    return out;
}

std::string print_diagram(const GeneralizedDiagram& b) {
    if (b.vertex_count() == 0) return "()";
    // Human order: top vertices then bottom vertices, each by position.
    auto human_key = [&](int v) { return b.is_bottom(v) ? b.top_count() + b.position(v) - 1
                                                        : b.position(v) - 1; };
    std::vector<std::vector<int>> blocks;
    std::vector<bool> seen(b.vertex_count(), false);
    for (int v = 0; v < b.vertex_count(); ++v) {
        if (seen[v]) continue;
        std::vector<int> block{v};
        seen[v] = true;
        if (b.partner(v) != v) {
            block.push_back(b.partner(v));
            seen[b.partner(v)] = true;
        }
        std::sort(block.begin(), block.end(), [&](int x, int y) { return human_key(x) < human_key(y); });
        blocks.push_back(std::move(block));
    }
    std::sort(blocks.begin(), blocks.end(),
              [&](const auto& x, const auto& y) { return human_key(x[0]) < human_key(y[0]); });
    std::ostringstream os;
    for (const auto& block : blocks) {
        os << '(';
        for (std::size_t k = 0; k < block.size(); ++k) {
            if (k) os << ',';
            os << b.position(block[k]);
            if (b.is_bottom(block[k])) os << '*';
        }
        os << ')';
    }
    return os.str();
}

GeneralizedDiagram parse_diagram(const std::string& text) {
    struct Token {
        int position;
        bool bottom;
    };
    std::vector<std::vector<Token>> blocks;
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip_ws();
    if (text.compare(i, 2, "()") == 0) {
        i += 2;
        skip_ws();
        if (i == text.size()) return GeneralizedDiagram(0, 0);
        throw std::invalid_argument("diagram literal: '()' must stand alone");
    }
    while (i < text.size()) {
        if (text[i] != '(') throw std::invalid_argument("diagram literal: expected '('");
        ++i;
        std::vector<Token> block;
        for (;;) {
            skip_ws();
            std::size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (i == start) throw std::invalid_argument("diagram literal: expected a position");
            int pos = std::stoi(text.substr(start, i - start));
            bool bottom = false;
            if (i < text.size() && text[i] == '*') { bottom = true; ++i; }
            block.push_back({pos, bottom});
            skip_ws();
            if (i < text.size() && text[i] == ',') { ++i; continue; }
            break;
        }
        if (i >= text.size() || text[i] != ')') throw std::invalid_argument("diagram literal: expected ')'");
        ++i;
        if (block.empty() || block.size() > 2)
            throw std::invalid_argument("diagram literal: blocks have size 1 or 2");
        blocks.push_back(std::move(block));
        skip_ws();
    }
    int p = 0, q = 0;
    for (const auto& block : blocks)
        for (const auto& t : block) {
            if (t.position < 1) throw std::invalid_argument("diagram literal: positions are 1-based");
            (t.bottom ? q : p) = std::max(t.bottom ? q : p, t.position);
        }
    GeneralizedDiagram b(p, q);
    std::vector<bool> used(b.vertex_count(), false);
    auto vertex_of = [&](const Token& t) {
        int v = t.bottom ? b.bottom_vertex(t.position) : b.top_vertex(t.position);
        if (used[v]) throw std::invalid_argument("diagram literal: repeated vertex");
        used[v] = true;
        return v;
    };
    for (const auto& block : blocks) {
        if (block.size() == 1) {
            vertex_of(block[0]);
        } else {
            int v = vertex_of(block[0]), w = vertex_of(block[1]);
            b.join(v, w);
        }
    }
    for (int v = 0; v < b.vertex_count(); ++v)
        if (!used[v]) throw std::invalid_argument("diagram literal: missing vertex");
    return b;
}

} // namespace brauerlab
