#include "brauerlab/oriented.hpp"

#include <algorithm>
#include <stdexcept>

namespace brauerlab {

bool is_orientation_seq(const std::string& s) {
    return std::all_of(s.begin(), s.end(), [](char c) { return c == '^' || c == 'v' || c == 'o'; });
}

void require_orientation_seq(const std::string& s) {
    if (!is_orientation_seq(s))
        throw std::invalid_argument("orientation sequence must be over '^', 'v', 'o'");
}

std::string reduce_seq(const std::string& s) {
    require_orientation_seq(s);
    std::string out;
    for (char c : s)
        if (c != 'o') out.push_back(c);
    return out;
}

long count_symbol(const std::string& s, char c) {
    return std::count(s.begin(), s.end(), c);
}

std::vector<std::string> all_sequences(int d, bool with_circles) {
    std::vector<std::string> out{""};
    const std::string alphabet = with_circles ? "^vo" : "^v";
    for (int k = 0; k < d; ++k) {
        std::vector<std::string> next;
        next.reserve(out.size() * alphabet.size());
        for (const auto& s : out)
            for (char c : alphabet) next.push_back(s + c);
        out = std::move(next);
    }
    return out;
}

bool validate(const std::string& t, const GeneralizedDiagram& b, const std::string& s) {
    require_orientation_seq(t);
    require_orientation_seq(s);
    if (static_cast<int>(t.size()) != b.top_count() || static_cast<int>(s.size()) != b.bottom_count())
        throw std::invalid_argument("orientation sequence lengths do not match the diagram");
    auto symbol = [&](int v) {
        return b.is_bottom(v) ? s[b.position(v) - 1] : t[b.position(v) - 1];
    };
    for (int v = 0; v < b.vertex_count(); ++v) {
        int w = b.partner(v);
        if (w == v) {
            if (symbol(v) != 'o') return false; // condition (4)
            continue;
        }
        if (symbol(v) == 'o') return false;
        if (w < v) continue;
        bool vb = b.is_bottom(v), wb = b.is_bottom(w);
        if (vb == wb) {
            if (symbol(v) == symbol(w)) return false; // conditions (1), (2)
        } else {
            if (symbol(v) != symbol(w)) return false; // condition (3)
        }
    }
    return true;
}

OrientedMorphism make_oriented(const std::string& t, const GeneralizedDiagram& b,
                               const std::string& s) {
    if (!validate(t, b, s)) throw std::invalid_argument("triple is not an oriented diagram");
    return OrientedMorphism{t, b, s};
}

OrientedMorphism reduce(const OrientedMorphism& f) {
    std::vector<int> top_map(f.top.size(), -1), bottom_map(f.bottom.size(), -1);
    std::string rt, rs;
    for (std::size_t k = 0; k < f.top.size(); ++k)
        if (f.top[k] != 'o') {
            top_map[k] = static_cast<int>(rt.size()) + 1;
            rt.push_back(f.top[k]);
        }
    for (std::size_t k = 0; k < f.bottom.size(); ++k)
        if (f.bottom[k] != 'o') {
            bottom_map[k] = static_cast<int>(rs.size()) + 1;
            rs.push_back(f.bottom[k]);
        }
    GeneralizedDiagram rb(static_cast<int>(rt.size()), static_cast<int>(rs.size()));
    for (const auto& [v, w] : f.diagram.arcs()) {
        auto mapped = [&](int x) {
            return f.diagram.is_bottom(x)
                       ? rb.bottom_vertex(bottom_map[f.diagram.position(x) - 1])
                       : rb.top_vertex(top_map[f.diagram.position(x) - 1]);
        };
        rb.join(mapped(v), mapped(w));
    }
    return make_oriented(rt, rb, rs);
}

OrientedCombo compose_oriented(const OrientedMorphism& g, const OrientedMorphism& f,
                               const Rational& circle) {
    if (g.bottom != f.top)
        throw std::invalid_argument("compose_oriented: sequences do not match");
    CompositionResult comp = compose(g.diagram, f.diagram);
    Rational coeff(1);
    for (long l = 0; l < comp.loops; ++l) coeff *= circle;
    OrientedCombo out;
    if (coeff != 0) out.emplace(make_oriented(g.top, comp.diagram, f.bottom), coeff);
    return out;
}

OrientedCombo compose_combos(const OrientedCombo& g, const OrientedCombo& f,
                             const Rational& circle) {
    OrientedCombo out;
    for (const auto& [gm, gc] : g) {
        for (const auto& [fm, fc] : f) {
            for (const auto& [m, c] : compose_oriented(gm, fm, circle)) {
                auto [it, inserted] = out.try_emplace(m, gc * fc * c);
                if (!inserted) {
                    it->second += gc * fc * c;
                    if (it->second == 0) out.erase(it);
                }
            }
        }
    }
    return out;
}

std::vector<OrientedMorphism> hom_basis(const std::string& s, const std::string& t) {
    require_orientation_seq(s);
    require_orientation_seq(t);
    std::vector<OrientedMorphism> out;
    for (auto& b : enumerate_generalized(static_cast<int>(t.size()), static_cast<int>(s.size())))
        if (validate(t, b, s)) out.push_back(OrientedMorphism{t, std::move(b), s});
    return out;
}

long hom_dim(const std::string& s, const std::string& t) {
    return static_cast<long>(hom_basis(s, t).size());
}

bool hom_vanishing_predicate(const std::string& s, const std::string& t) {
    require_orientation_seq(s);
    require_orientation_seq(t);
    // Through strands preserve #up - #down and cups/caps create opposite
    // pairs, so any nonzero hom space needs equal charges. For equal-length
    // sequences this is the lemma's condition: with l = #o(s) - #o(t), the
    // space vanishes when l is odd or l/2 != #up(t) - #up(s).
    return count_symbol(s, '^') - count_symbol(s, 'v') !=
           count_symbol(t, '^') - count_symbol(t, 'v');
}

std::string print_oriented(const OrientedMorphism& f) {
    auto seq = [](const std::string& s) { return s.empty() ? std::string("-") : s; };
    return seq(f.top) + " | " + print_diagram(f.diagram) + " | " + seq(f.bottom);
}

MatEndo mat_identity(int d, bool odd_mode) {
    MatEndo M{d, odd_mode, {}};
    GeneralizedDiagram id = generator(d, GenKind::Identity);
    for (const auto& s : all_sequences(d, odd_mode)) {
        GeneralizedDiagram b(d, d);
        std::string t = s;
        for (int j = 1; j <= d; ++j) {
            if (s[j - 1] == 'o') continue;
            b.join(b.top_vertex(j), b.bottom_vertex(j));
        }
        M.entries[{t, s}].emplace(make_oriented(t, b, s), Rational(1));
    }
    return M;
}

MatEndo psi_embed(const GeneralizedDiagram& brauer_diagram, bool odd_mode) {
    if (brauer_diagram.has_singletons())
        throw std::invalid_argument("psi_embed expects a Brauer diagram (no singletons)");
    const int d = brauer_diagram.strand_count();
    MatEndo M{d, odd_mode, {}};
    auto arcs = brauer_diagram.arcs();
    const std::size_t n = arcs.size();
    // Every subdiagram (arc subset, odd mode only) with every orientation of
    // the kept arcs contributes exactly one entry.
    for (unsigned keep_mask = 0; keep_mask < (1u << n); ++keep_mask) {
        if (!odd_mode && keep_mask != (1u << n) - 1) continue;
        std::vector<std::size_t> kept;
        for (std::size_t k = 0; k < n; ++k)
            if (keep_mask & (1u << k)) kept.push_back(k);
        GeneralizedDiagram sub(d, d);
        for (auto k : kept) sub.join(arcs[k].first, arcs[k].second);
        for (unsigned orient = 0; orient < (1u << kept.size()); ++orient) {
            std::string t(d, 'o'), s(d, 'o');
            for (std::size_t pos = 0; pos < kept.size(); ++pos) {
                auto [v, w] = arcs[kept[pos]];
                bool up_first = (orient >> pos) & 1u;
                auto assign = [&](int vertex, char sym) {
                    if (brauer_diagram.is_bottom(vertex))
                        s[brauer_diagram.position(vertex) - 1] = sym;
                    else
                        t[brauer_diagram.position(vertex) - 1] = sym;
                };
                bool vb = brauer_diagram.is_bottom(v), wb = brauer_diagram.is_bottom(w);
                if (vb == wb) { // cup or cap: opposite symbols
                    assign(v, up_first ? '^' : 'v');
                    assign(w, up_first ? 'v' : '^');
                } else { // through strand: equal symbols
                    assign(v, up_first ? '^' : 'v');
                    assign(w, up_first ? '^' : 'v');
                }
            }
            M.entries[{t, s}].emplace(make_oriented(t, sub, s), Rational(1));
        }
    }
    return M;
}

namespace {

void require_compatible(const MatEndo& A, const MatEndo& B) {
    if (A.d != B.d || A.odd_mode != B.odd_mode)
        throw std::invalid_argument("MatEndo mode mismatch");
}

void accumulate(MatEndo& M, const std::pair<std::string, std::string>& key,
                const OrientedCombo& combo, const Rational& factor) {
    if (factor == 0) return;
    auto& cell = M.entries[key];
    for (const auto& [m, c] : combo) {
        auto [it, inserted] = cell.try_emplace(m, c * factor);
        if (!inserted) {
            it->second += c * factor;
            if (it->second == 0) cell.erase(it);
        }
    }
    if (cell.empty()) M.entries.erase(key);
}

} // namespace

MatEndo mat_compose(const MatEndo& A, const MatEndo& B, const Rational& circle) {
    require_compatible(A, B);
    MatEndo out{A.d, A.odd_mode, {}};
    // Index B's entries by top sequence for the middle sum.
    std::map<std::string, std::vector<const std::pair<const std::pair<std::string, std::string>,
                                                      OrientedCombo>*>>
        by_top;
    for (const auto& entry : B.entries) by_top[entry.first.first].push_back(&entry);
    for (const auto& [key_a, combo_a] : A.entries) {
        auto it = by_top.find(key_a.second);
        if (it == by_top.end()) continue;
        for (const auto* entry_b : it->second) {
            OrientedCombo prod = compose_combos(combo_a, entry_b->second, circle);
            accumulate(out, {key_a.first, entry_b->first.second}, prod, Rational(1));
        }
    }
    return out;
}

MatEndo mat_add(const MatEndo& A, const MatEndo& B) {
    require_compatible(A, B);
    MatEndo out = A;
    for (const auto& [key, combo] : B.entries) accumulate(out, key, combo, Rational(1));
    return out;
}

MatEndo mat_scale(const MatEndo& A, const Rational& a) {
    MatEndo out{A.d, A.odd_mode, {}};
    if (a == 0) return out;
    for (const auto& [key, combo] : A.entries) accumulate(out, key, combo, a);
    return out;
}

MatEndo mat_sub(const MatEndo& A, const MatEndo& B) {
    return mat_add(A, mat_scale(B, Rational(-1)));
}

} // namespace brauerlab
