#include "brauerlab/brauer_algebra.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace brauerlab {

BrauerElement brauer_zero(int d) { return BrauerElement{d, {}}; }

BrauerElement brauer_basis(const GeneralizedDiagram& b) {
    if (b.has_singletons()) throw std::invalid_argument("Brauer basis diagrams have no singletons");
    BrauerElement x{b.strand_count(), {}};
    x.terms.emplace(b, Rational(1));
    return x;
}

BrauerElement brauer_identity(int d) { return brauer_basis(generator(d, GenKind::Identity)); }

void add_term(BrauerElement& x, const GeneralizedDiagram& b, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = x.terms.try_emplace(b, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) x.terms.erase(it);
    }
}

BrauerElement add(const BrauerElement& x, const BrauerElement& y) {
    if (x.d != y.d) throw std::invalid_argument("Brauer elements of different strand counts");
    BrauerElement out = x;
    for (const auto& [b, c] : y.terms) add_term(out, b, c);
    return out;
}

BrauerElement scale(const BrauerElement& x, const Rational& a) {
    BrauerElement out{x.d, {}};
    if (a == 0) return out;
    for (const auto& [b, c] : x.terms) out.terms.emplace(b, c * a);
    return out;
}

BrauerElement multiply(const BrauerElement& x, const BrauerElement& y, const Rational& delta) {
    if (x.d != y.d) throw std::invalid_argument("Brauer elements of different strand counts");
    BrauerElement out{x.d, {}};
    for (const auto& [bx, cx] : x.terms) {
        for (const auto& [by, cy] : y.terms) {
            CompositionResult comp = compose(bx, by);
            Rational coeff = cx * cy;
            for (long l = 0; l < comp.loops; ++l) coeff *= delta;
            add_term(out, comp.diagram, coeff);
        }
    }
    return out;
}

GeneratorWord parse_word(const std::string& text, int d) {
    GeneratorWord w;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c)) || c == '*') {
            ++i;
            continue;
        }
        if (c != 's' && c != 'e') throw std::invalid_argument("word token must start with 's' or 'e'");
        std::size_t start = ++i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) throw std::invalid_argument("word token missing an index");
        int idx = std::stoi(text.substr(start, i - start));
        if (idx < 1 || idx > d - 1) throw std::invalid_argument("generator index out of range");
        w.emplace_back(c == 's' ? GenKind::S : GenKind::E, idx);
    }
    return w;
}

std::string print_word(const GeneratorWord& w) {
    std::ostringstream os;
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (k) os << ' ';
        os << (w[k].first == GenKind::S ? 's' : 'e') << w[k].second;
    }
    return os.str();
}

BrauerElement evaluate_word(const GeneratorWord& w, int d, const Rational& delta) {
    BrauerElement acc = brauer_identity(d);
    for (const auto& [kind, i] : w)
        acc = multiply(acc, brauer_basis(generator(d, kind, i)), delta);
    return acc;
}

std::vector<RelationInstance> presentation_relations(int d) {
    std::vector<RelationInstance> rel;
    using W = GeneratorWord;
    const auto S = GenKind::S;
    const auto E = GenKind::E;
    for (int i = 1; i <= d - 1; ++i) {
        rel.push_back({"s_i^2 = 1", W{{S, i}, {S, i}}, {}, false});
        rel.push_back({"e_i^2 = delta e_i", W{{E, i}, {E, i}}, W{{E, i}}, true});
        rel.push_back({"s_i e_i = e_i", W{{S, i}, {E, i}}, W{{E, i}}, false});
        rel.push_back({"e_i s_i = e_i", W{{E, i}, {S, i}}, W{{E, i}}, false});
    }
    for (int i = 1; i <= d - 1; ++i) {
        for (int j = 1; j <= d - 1; ++j) {
            if (std::abs(i - j) <= 1) continue;
            rel.push_back({"s_i s_j = s_j s_i", W{{S, i}, {S, j}}, W{{S, j}, {S, i}}, false});
            rel.push_back({"e_i e_j = e_j e_i", W{{E, i}, {E, j}}, W{{E, j}, {E, i}}, false});
        }
    }
    for (int k = 1; k <= d - 2; ++k) {
        rel.push_back({"braid", W{{S, k}, {S, k + 1}, {S, k}}, W{{S, k + 1}, {S, k}, {S, k + 1}},
                       false});
        rel.push_back({"e_k e_{k+1} e_k = e_k", W{{E, k}, {E, k + 1}, {E, k}}, W{{E, k}}, false});
        rel.push_back({"e_{k+1} e_k e_{k+1} = e_{k+1}", W{{E, k + 1}, {E, k}, {E, k + 1}},
                       W{{E, k + 1}}, false});
        rel.push_back({"s_k e_{k+1} e_k = s_{k+1} e_k", W{{S, k}, {E, k + 1}, {E, k}},
                       W{{S, k + 1}, {E, k}}, false});
        rel.push_back({"s_{k+1} e_k e_{k+1} = s_k e_{k+1}", W{{S, k + 1}, {E, k}, {E, k + 1}},
                       W{{S, k}, {E, k + 1}}, false});
    }
    return rel;
}

PresentationReport verify_presentation(int d, const Rational& delta) {
    PresentationReport rep;
    for (const auto& r : presentation_relations(d)) {
        BrauerElement lhs = evaluate_word(r.lhs, d, delta);
        BrauerElement rhs = evaluate_word(r.rhs, d, delta);
        if (r.scale_rhs_by_delta) rhs = scale(rhs, delta);
        ++rep.instances_checked;
        if (!(lhs == rhs))
            rep.failures.push_back(r.name + ": " + print_word(r.lhs) + " != " + print_word(r.rhs));
    }
    return rep;
}

std::string print_element(const BrauerElement& x) {
    if (x.terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [b, c] : x.terms) {
        if (!first) os << '\n';
        first = false;
        os << to_string(c) << " * " << print_diagram(b);
    }
    return os.str();
}

} // namespace brauerlab
