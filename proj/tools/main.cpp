// brauerlab command line: Brauer algebra products and relation checks, hom
// dimensions in the oriented category, tensor-space actions, commutant /
// Schur-Weyl verification reports, operator decomposition, and static SVG
// rendering of diagrams.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "brauerlab/brauer_algebra.hpp"
#include "brauerlab/centralizer.hpp"
#include "brauerlab/diagrams.hpp"
#include "brauerlab/errors.hpp"
#include "brauerlab/oriented.hpp"
#include "brauerlab/superalgebra.hpp"
#include "brauerlab/tensor_action.hpp"

namespace {

using namespace brauerlab;

Params make_params(int m, int n, const std::string& mode) {
    if (mode != "even" && mode != "odd") throw CLI::ValidationError("--mode must be even or odd");
    return Params{m, n, mode == "odd" ? ParityMode::Odd : ParityMode::Even};
}

std::string seq_arg(std::string s) {
    if (s == "-") return "";
    return s;
}

nlohmann::json element_to_json(const BrauerElement& x) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [b, c] : x.terms) j[print_diagram(b)] = to_string(c);
    return j;
}

// The canonical two-row drawing of the planar realization used for crossing
// counts: bottom boundary 1*..q* left to right, top boundary 1..p left to
// right, so chords cross exactly when their boundary pairs interleave.
std::string render_svg(const GeneralizedDiagram& b) {
    const int p = b.top_count(), q = b.bottom_count();
    const int step = 60, margin = 40, top_y = 40, bot_y = 180;
    const int width = margin * 2 + step * std::max(1, std::max(p, q) - 1);
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width + 20 << "\" height=\"220\" "
       << "viewBox=\"0 0 " << width + 20 << " 220\">\n";
    os << "  <style>path { stroke: #1a1a1a; stroke-width: 2; fill: none; } "
       << "circle.v { fill: #1a1a1a; } circle.s { fill: none; stroke: #1a1a1a; stroke-width: 2; } "
       << "text { font: 13px sans-serif; fill: #444; }</style>\n";
    auto x_of = [&](int v) { return margin + step * (b.position(v) - 1) + 10; };
    auto y_of = [&](int v) { return b.is_bottom(v) ? bot_y : top_y; };
    // Strands first, vertices on top of them.
    for (const auto& [v, w] : b.arcs()) {
        int x1 = x_of(v), y1 = y_of(v), x2 = x_of(w), y2 = y_of(w);
        if (y1 != y2) {
            os << "  <path d=\"M " << x1 << ' ' << y1 << " C " << x1 << ' ' << (y1 + y2) / 2
               << ", " << x2 << ' ' << (y1 + y2) / 2 << ", " << x2 << ' ' << y2 << "\"/>\n";
        } else {
            int depth =
                (y1 == top_y ? 1 : -1) * (28 + 12 * std::abs(b.position(v) - b.position(w)));
            os << "  <path d=\"M " << x1 << ' ' << y1 << " C " << x1 << ' ' << y1 + depth << ", "
               << x2 << ' ' << y2 + depth << ", " << x2 << ' ' << y2 << "\"/>\n";
        }
    }
    for (int v = 0; v < b.vertex_count(); ++v) {
        os << "  <circle class=\"" << (b.is_singleton(v) ? 's' : 'v') << "\" cx=\"" << x_of(v)
           << "\" cy=\"" << y_of(v) << "\" r=\"4\"/>\n";
        os << "  <text x=\"" << x_of(v) - 5 << "\" y=\""
           << (b.is_bottom(v) ? y_of(v) + 22 : y_of(v) - 12) << "\">" << b.position(v)
           << (b.is_bottom(v) ? "*" : "") << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

SparseMatrix read_operator_file(const std::string& path, const Params& p, int d) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open operator file: " + path);
    nlohmann::json j;
    in >> j;
    const long N = tensor_dim(p, d);
    SparseMatrix f(N, N);
    if (!j.contains("entries") || !j["entries"].is_array())
        throw std::runtime_error("operator file needs an \"entries\" array");
    for (const auto& e : j["entries"]) {
        // [output index literal, input index literal, rational]
        if (!e.is_array() || e.size() != 3)
            throw std::runtime_error("operator entries are [out, in, value] triples");
        TensorIndex out = parse_tensor_index(e[0].get<std::string>(), p, d);
        TensorIndex inp = parse_tensor_index(e[1].get<std::string>(), p, d);
        f.add_to(flat_index(out, p.dim()), flat_index(inp, p.dim()),
                 parse_rational(e[2].get<std::string>()));
    }
    return f;
}

std::map<long, Rational> read_vector_file(const std::string& path, const Params& p, int d) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open vector file: " + path);
    nlohmann::json j;
    in >> j;
    std::map<long, Rational> vec;
    for (auto it = j.begin(); it != j.end(); ++it) {
        TensorIndex idx = parse_tensor_index(it.key(), p, d);
        Rational val = parse_rational(it.value().get<std::string>());
        if (val != 0) vec[flat_index(idx, p.dim())] += val;
    }
    return vec;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Brauer algebra / oriented Brauer category / osp Schur-Weyl engine"};
    app.require_subcommand(1);
    bool json_out = false;
    app.add_flag("--json", json_out, "machine-readable JSON output");

    auto* mult = app.add_subcommand("mult", "expand a product of generators in Br_d(delta)");
    int mult_d = 2;
    std::string mult_delta = "0", mult_word;
    mult->add_option("--d", mult_d, "strand count")->required();
    mult->add_option("--delta", mult_delta, "loop parameter, rational p/q")->required();
    mult->add_option("word", mult_word, "generator word, e.g. \"s1 e1\"")->required();

    auto* verify = app.add_subcommand("verify-relations", "check every defining relation instance");
    int ver_d = 2;
    std::string ver_delta = "0";
    verify->add_option("--d", ver_d, "strand count")->required();
    verify->add_option("--delta", ver_delta, "loop parameter")->required();

    auto* hom = app.add_subcommand("hom-dim", "dimension of Hom(s, t) in the oriented category");
    std::string hom_s, hom_t;
    hom->add_option("--s", hom_s, "bottom sequence over ^ v o ('-' for empty)")->required();
    hom->add_option("--t", hom_t, "top sequence over ^ v o ('-' for empty)")->required();

    auto* act = app.add_subcommand("act", "apply a Brauer word operator to a tensor vector");
    int act_m = 1, act_n = 1, act_d = 2;
    std::string act_mode = "even", act_word, act_vec;
    act->add_option("--m", act_m)->required();
    act->add_option("--n", act_n)->required();
    act->add_option("--mode", act_mode, "even|odd")->required()->check(CLI::IsMember({"even", "odd"}));
    act->add_option("--d", act_d)->required();
    act->add_option("--word", act_word, "generator word ('' = identity)");
    act->add_option("--vector", act_vec, "JSON file: index literal -> rational")->required();

    auto* comm = app.add_subcommand("commutant", "verify the Schur-Weyl isomorphism and emit the report JSON");
    int c_m = 1, c_n = 1, c_d = 2;
    std::string c_mode = "even";
    bool c_exact = false;
    comm->add_option("--m", c_m)->required();
    comm->add_option("--n", c_n)->required();
    comm->add_option("--mode", c_mode, "even|odd")->required()->check(CLI::IsMember({"even", "odd"}));
    comm->add_option("--d", c_d)->required();
    comm->add_flag("--exact", c_exact, "confirm mod-p ranks by exact rational elimination");

    auto* dec = app.add_subcommand("decompose", "write an equivariant operator in the Brauer basis");
    int de_m = 1, de_n = 1, de_d = 2;
    std::string de_mode = "even", de_file;
    dec->add_option("--m", de_m)->required();
    dec->add_option("--n", de_n)->required();
    dec->add_option("--mode", de_mode, "even|odd")->required()->check(CLI::IsMember({"even", "odd"}));
    dec->add_option("--d", de_d)->required();
    dec->add_option("--operator", de_file, "JSON file with [out, in, value] entry triples")
        ->required();

    auto* ren = app.add_subcommand("render", "static SVG of a generalized diagram");
    std::string ren_diagram, ren_out;
    ren->add_option("diagram", ren_diagram, "diagram literal, e.g. \"(1,2*)(2,1*)\"")->required();
    ren->add_option("--out", ren_out, "output file (stdout if omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*mult) {
            auto delta = parse_rational(mult_delta);
            auto x = evaluate_word(parse_word(mult_word, mult_d), mult_d, delta);
            if (json_out)
                std::cout << element_to_json(x).dump(2) << "\n";
            else
                std::cout << print_element(x) << "\n";
        } else if (*verify) {
            auto rep = verify_presentation(ver_d, parse_rational(ver_delta));
            if (json_out) {
                nlohmann::json j;
                j["d"] = ver_d;
                j["delta"] = ver_delta;
                j["instances_checked"] = rep.instances_checked;
                j["failures"] = rep.failures;
                j["ok"] = rep.ok();
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "checked " << rep.instances_checked << " relation instances at d="
                          << ver_d << ", delta=" << ver_delta << ": "
                          << (rep.ok() ? "all hold" : "FAILURES") << "\n";
                for (const auto& f : rep.failures) std::cout << "  " << f << "\n";
            }
            return rep.ok() ? 0 : 1;
        } else if (*hom) {
            long dim = hom_dim(seq_arg(hom_s), seq_arg(hom_t));
            if (json_out) {
                nlohmann::json j;
                j["s"] = hom_s;
                j["t"] = hom_t;
                j["dim"] = dim;
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << dim << "\n";
            }
        } else if (*act) {
            Params p = make_params(act_m, act_n, act_mode);
            auto vec = read_vector_file(act_vec, p, act_d);
            auto op = word_operator(parse_word(act_word, act_d), act_d, p);
            SparseVec in(vec.begin(), vec.end());
            SparseVec out = op.apply(in);
            nlohmann::json j = nlohmann::json::object();
            for (const auto& [flat, val] : out)
                j[print_tensor_index(unflat_index(flat, p.dim(), act_d), p)] = to_string(val);
            std::cout << j.dump(2) << "\n";
        } else if (*comm) {
            Params p = make_params(c_m, c_n, c_mode);
            CentralizerOptions opts;
            opts.exact_rank = c_exact;
            auto rep = verify_theorem_A(p, c_d, opts);
            std::cout << report_to_json(rep) << "\n";
        } else if (*dec) {
            Params p = make_params(de_m, de_n, de_mode);
            auto f = read_operator_file(de_file, p, de_d);
            auto result = decompose_in_brauer_basis(f, p, de_d);
            nlohmann::json j;
            j["coefficients"] = nlohmann::json::object();
            for (const auto& [b, c] : result.coefficients)
                j["coefficients"][print_diagram(b)] = to_string(c);
            j["residual_zero"] = result.residual_zero;
            j["residual_nnz"] = result.residual.nnz();
            std::cout << j.dump(2) << "\n";
        } else if (*ren) {
            auto b = parse_diagram(ren_diagram);
            std::string svg = render_svg(b);
            if (ren_out.empty()) {
                std::cout << svg;
            } else {
                std::ofstream out(ren_out);
                if (!out) throw std::runtime_error("cannot open output file: " + ren_out);
                out << svg;
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
