#include "brauerlab/centralizer.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

#include <json.hpp>

#include "brauerlab/errors.hpp"
#include "brauerlab/modp.hpp"
#include "brauerlab/oriented.hpp"

namespace brauerlab {

long brauer_dimension(int d) {
    long v = 1;
    for (int k = 3; k <= 2 * d - 1; k += 2) v *= k;
    return v;
}

namespace {

bool is_diagonal(const SparseMatrix& M) {
    for (const auto& [rc, v] : M.entries())
        if (rc.first != rc.second) return false;
    return true;
}

// The pruned intertwiner system: unknowns are the (row, col) pairs on which
// every diagonal generator pair has matching eigenvalues; equations come
// from the remaining generators.
struct IntertwinerSystem {
    std::vector<std::pair<long, long>> unknowns;
    std::map<std::pair<long, long>, long> unknown_index;
    std::vector<SparseVec> rows;

    long dim() const { return static_cast<long>(unknowns.size()); }
};

IntertwinerSystem build_intertwiner_system(const std::vector<SparseMatrix>& acts_t,
                                           const std::vector<SparseMatrix>& acts_s,
                                           long dim_t, long dim_s) {
    if (acts_t.size() != acts_s.size())
        throw std::invalid_argument("generator lists of different length");
    IntertwinerSystem sys;

    std::vector<std::size_t> diagonal, regular;
    for (std::size_t k = 0; k < acts_t.size(); ++k) {
        if (is_diagonal(acts_t[k]) && is_diagonal(acts_s[k]))
            diagonal.push_back(k);
        else
            regular.push_back(k);
    }

    // Group rows and columns by their diagonal eigenvalue tuples.
    auto eig_key = [&](const std::vector<SparseMatrix>& acts, long i) {
        std::vector<Rational> key;
        key.reserve(diagonal.size());
        for (auto k : diagonal) key.push_back(acts[k].at(i, i));
        return key;
    };
    std::map<std::vector<Rational>, std::vector<long>> row_groups, col_groups;
    for (long r = 0; r < dim_t; ++r) row_groups[eig_key(acts_t, r)].push_back(r);
    for (long c = 0; c < dim_s; ++c) col_groups[eig_key(acts_s, c)].push_back(c);
    for (const auto& [key, rows] : row_groups) {
        auto it = col_groups.find(key);
        if (it == col_groups.end()) continue;
        for (long r : rows)
            for (long c : it->second) {
                sys.unknown_index.emplace(std::pair<long, long>{r, c}, sys.dim());
                sys.unknowns.emplace_back(r, c);
            }
    }

    // Equations (acts_t[k] f - f acts_s[k])[a][b] = 0 touching any unknown.
    std::map<std::tuple<std::size_t, long, long>, SparseVec> equations;
    for (auto k : regular) {
        std::vector<std::vector<std::pair<long, Rational>>> tcols(dim_t), srows(dim_s);
        for (const auto& [rc, v] : acts_t[k].entries()) tcols[rc.second].emplace_back(rc.first, v);
        for (const auto& [rc, v] : acts_s[k].entries()) srows[rc.first].emplace_back(rc.second, v);
        for (long u = 0; u < sys.dim(); ++u) {
            auto [r, c] = sys.unknowns[u];
            for (const auto& [a, v] : tcols[r]) equations[{k, a, c}].emplace_back(u, v);
            for (const auto& [b, v] : srows[c]) equations[{k, r, b}].emplace_back(u, -v);
        }
    }
    sys.rows.reserve(equations.size());
    for (auto& [key, row] : equations) {
        // Merge duplicate unknown contributions.
        std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        SparseVec merged;
        for (const auto& [u, v] : row) {
            if (!merged.empty() && merged.back().first == u)
                merged.back().second += v;
            else
                merged.emplace_back(u, v);
        }
        merged.erase(std::remove_if(merged.begin(), merged.end(),
                                    [](const auto& e) { return e.second == 0; }),
                     merged.end());
        if (!merged.empty()) sys.rows.push_back(std::move(merged));
    }
    return sys;
}

std::vector<SparseMatrix> solve_intertwiner(const IntertwinerSystem& sys, long dim_t, long dim_s) {
    SparseMatrix system = matrix_from_rows(sys.rows, sys.dim());
    std::vector<SparseMatrix> out;
    for (const auto& vec : nullspace_basis(system)) {
        SparseMatrix f(dim_t, dim_s);
        for (const auto& [u, v] : vec) f.set(sys.unknowns[u].first, sys.unknowns[u].second, v);
        out.push_back(std::move(f));
    }
    return out;
}

SparseMatrix restrict_to(const SparseMatrix& M, const std::vector<long>& rows,
                         const std::vector<long>& cols) {
    std::unordered_map<long, long> row_of(rows.size() * 2), col_of(cols.size() * 2);
    for (long r = 0; r < static_cast<long>(rows.size()); ++r) row_of[rows[r]] = r;
    for (long c = 0; c < static_cast<long>(cols.size()); ++c) col_of[cols[c]] = c;
    SparseMatrix out(static_cast<long>(rows.size()), static_cast<long>(cols.size()));
    for (const auto& [rc, v] : M.entries()) {
        auto rit = row_of.find(rc.first);
        auto cit = col_of.find(rc.second);
        if (rit != row_of.end() && cit != col_of.end()) out.set(rit->second, cit->second, v);
    }
    return out;
}

std::vector<long> summand_flats(const std::string& s, const Params& p) {
    std::vector<long> out;
    for (const auto& idx : summand_indices(s, p)) out.push_back(flat_index(idx, p.dim()));
    return out;
}

// Rank of a span of operators, as flattened vectors over the union support.
long span_rank(const std::vector<SparseMatrix>& ops) {
    if (ops.empty()) return 0;
    std::map<std::pair<long, long>, long> columns;
    for (const auto& f : ops)
        for (const auto& [rc, v] : f.entries()) columns.try_emplace(rc, static_cast<long>(columns.size()));
    SparseMatrix M(static_cast<long>(ops.size()), static_cast<long>(columns.size()));
    for (long r = 0; r < static_cast<long>(ops.size()); ++r)
        for (const auto& [rc, v] : ops[r].entries()) M.set(r, columns.at(rc), v);
    return rank(M);
}

} // namespace

std::vector<SparseMatrix> intertwiner_basis(const std::vector<SparseMatrix>& acts_t,
                                            const std::vector<SparseMatrix>& acts_s,
                                            long dim_t, long dim_s) {
    auto sys = build_intertwiner_system(acts_t, acts_s, dim_t, dim_s);
    return solve_intertwiner(sys, dim_t, dim_s);
}

CommutantBasis commutant(const std::vector<SparseMatrix>& generators, long dim) {
    for (const auto& G : generators)
        if (G.rows() != dim || G.cols() != dim)
            throw std::invalid_argument("commutant: generator dimension mismatch");
    CommutantBasis out{intertwiner_basis(generators, generators, dim, dim)};
    for (const auto& f : out.ops)
        for (const auto& G : generators)
            if (!(f * G - G * f).is_zero())
                throw std::logic_error("commutant element fails the exact commutation recheck");
    return out;
}

namespace {

std::vector<SparseMatrix> osp_actions(const Params& p, int d, long budget) {
    std::vector<SparseMatrix> acts;
    for (const auto& X : osp_basis(p)) acts.push_back(act_lie(X, p, d, budget));
    return acts;
}

// Stage 1: a basis of End_gl(V^{tensor d}) organized block by block; the gl
// action preserves every summand W_s, so intertwiners live in (t, s) blocks.
std::vector<SparseMatrix> gl_commutant_blocks(const Params& p, int d, long budget) {
    const long N = tensor_dim(p, d, budget);
    std::vector<SparseMatrix> gl_acts;
    for (const auto& X : gl_embedding(p)) gl_acts.push_back(act_lie(X, p, d, budget));
    auto seqs = all_sequences(d, p.odd());
    std::vector<std::vector<long>> flats;
    for (const auto& s : seqs) flats.push_back(summand_flats(s, p));

    std::vector<SparseMatrix> blocks;
    for (std::size_t ti = 0; ti < seqs.size(); ++ti) {
        std::vector<SparseMatrix> acts_t;
        for (const auto& A : gl_acts) acts_t.push_back(restrict_to(A, flats[ti], flats[ti]));
        for (std::size_t si = 0; si < seqs.size(); ++si) {
            std::vector<SparseMatrix> acts_s;
            for (const auto& A : gl_acts) acts_s.push_back(restrict_to(A, flats[si], flats[si]));
            auto basis = intertwiner_basis(acts_t, acts_s, static_cast<long>(flats[ti].size()),
                                           static_cast<long>(flats[si].size()));
            for (const auto& f : basis) {
                SparseMatrix lifted(N, N);
                for (const auto& [rc, v] : f.entries())
                    lifted.set(flats[ti][rc.first], flats[si][rc.second], v);
                blocks.push_back(std::move(lifted));
            }
        }
    }
    return blocks;
}

} // namespace

CommutantBasis osp_commutant(const Params& p, int d, const CentralizerOptions& opts) {
    const long N = tensor_dim(p, d, opts.budget);
    auto acts = osp_actions(p, d, opts.budget);
    if (N <= opts.direct_limit) {
        return commutant(acts, N);
    }
    // Staged: gl-block intertwiners carry the osp constraints on their
    // coefficients (gl(m|n) embeds into osp, verified in the test suite).
    auto blocks = gl_commutant_blocks(p, d, opts.budget);
    // Constraint rows over the block coefficients, one row per matrix entry
    // of any commutator [B_beta, rho(X)].
    std::map<std::pair<std::size_t, std::pair<long, long>>, SparseVec> equations;
    for (std::size_t beta = 0; beta < blocks.size(); ++beta) {
        for (std::size_t k = 0; k < acts.size(); ++k) {
            SparseMatrix comm = blocks[beta] * acts[k] - acts[k] * blocks[beta];
            for (const auto& [rc, v] : comm.entries())
                equations[{k, rc}].emplace_back(static_cast<long>(beta), v);
        }
    }
    std::vector<SparseVec> rows;
    rows.reserve(equations.size());
    for (auto& [key, row] : equations) rows.push_back(std::move(row));
    SparseMatrix system = matrix_from_rows(rows, static_cast<long>(blocks.size()));
    CommutantBasis out;
    for (const auto& alpha : nullspace_basis(system)) {
        SparseMatrix f(N, N);
        for (const auto& [beta, v] : alpha) f = f + blocks[beta].scaled(v);
        out.ops.push_back(std::move(f));
    }
    for (const auto& f : out.ops)
        for (const auto& G : acts)
            if (!(f * G - G * f).is_zero())
                throw std::logic_error("osp commutant element fails the exact recheck");
    return out;
}

long osp_commutant_dim(const Params& p, int d, const CentralizerOptions& opts) {
    return osp_commutant(p, d, opts).dim();
}

long gl_intertwiner_dim(const std::string& s, const std::string& t, const Params& p) {
    const int d_s = static_cast<int>(s.size()), d_t = static_cast<int>(t.size());
    auto fl_s = summand_flats(s, p);
    auto fl_t = summand_flats(t, p);
    std::vector<SparseMatrix> acts_t, acts_s;
    for (const auto& X : gl_embedding(p)) {
        acts_s.push_back(restrict_to(act_lie(X, p, d_s), fl_s, fl_s));
        acts_t.push_back(restrict_to(act_lie(X, p, d_t), fl_t, fl_t));
    }
    return static_cast<long>(intertwiner_basis(acts_t, acts_s, static_cast<long>(fl_t.size()),
                                               static_cast<long>(fl_s.size()))
                                 .size());
}

std::map<GeneralizedDiagram, SparseMatrix> theta_psi_images(const Params& p, int d) {
    std::map<GeneralizedDiagram, SparseMatrix> out;
    for (const auto& b : enumerate_brauer(d)) out.emplace(b, theta(psi_embed(b, p.odd()), p));
    return out;
}

long brauer_action_rank(const Params& p, int d, const CentralizerOptions& opts) {
    tensor_dim(p, d, opts.budget);
    std::vector<SparseMatrix> images;
    for (auto& [b, im] : theta_psi_images(p, d)) images.push_back(im);
    return span_rank(images);
}

namespace {

// A consistent labelling of the Brauer diagram b with pairwise distinct
// absolute values: strand k gets value k+1; through strands are oriented up,
// cups and caps get '^' on the left endpoint.
struct ReadOff {
    long row = 0, col = 0;
    Rational wt;
};

ReadOff read_off_labels(const GeneralizedDiagram& b, const Params& p) {
    const int d = b.strand_count();
    std::string t(d, '?'), s(d, '?');
    std::vector<BasisIndex> top(d), bottom(d);
    int value = 0;
    for (const auto& [v, w] : b.arcs()) {
        ++value;
        bool vb = b.is_bottom(v), wb = b.is_bottom(w);
        int pv = b.position(v), pw = b.position(w);
        if (vb != wb) { // through strand, oriented '^'
            (vb ? s : t)[pv - 1] = '^';
            (wb ? s : t)[pw - 1] = '^';
            (vb ? bottom : top)[pv - 1] = {value, false};
            (wb ? bottom : top)[pw - 1] = {value, false};
        } else {
            int lo = std::min(pv, pw), hi = std::max(pv, pw);
            auto& seq = vb ? s : t;
            auto& lab = vb ? bottom : top;
            seq[lo - 1] = '^';
            seq[hi - 1] = 'v';
            lab[lo - 1] = {value, false};
            lab[hi - 1] = {value, true};
        }
    }
    auto f = make_oriented(t, b, s);
    LabelledOrientedDiagram ld{f, bottom, top};
    ReadOff r;
    r.wt = weight(ld, p);
    TensorIndex it(d), jt(d);
    for (int k = 0; k < d; ++k) {
        it[k] = basis_position(bottom[k], p);
        jt[k] = basis_position(top[k], p);
    }
    r.row = flat_index(jt, p.dim());
    r.col = flat_index(it, p.dim());
    return r;
}

} // namespace

Decomposition decompose_in_brauer_basis(const SparseMatrix& f, const Params& p, int d,
                                        const CentralizerOptions& opts) {
    const long N = tensor_dim(p, d, opts.budget);
    if (f.rows() != N || f.cols() != N)
        throw std::invalid_argument("decompose: operator has the wrong dimensions");
    for (const auto& X : osp_basis(p)) {
        auto rho = act_lie(X, p, d, opts.budget);
        if (!(f * rho - rho * f).is_zero())
            throw std::invalid_argument("decompose: operator is not osp-equivariant");
    }
    if (d > p.m + p.n)
        throw std::domain_error(
            "decompose: d > m + n, no labelling with pairwise distinct absolute values exists; "
            "coefficient read-off would be ambiguous");

    auto images = theta_psi_images(p, d);
    // Diagrams by decreasing number of vertical strands.
    std::vector<const GeneralizedDiagram*> order;
    for (const auto& [b, im] : images) order.push_back(&b);
    std::stable_sort(order.begin(), order.end(), [](const auto* a, const auto* b) {
        return a->through_strand_count() > b->through_strand_count();
    });

    Decomposition out;
    out.residual = f;
    for (const auto* b : order) {
        ReadOff r = read_off_labels(*b, p);
        Rational gamma = out.residual.at(r.row, r.col) / r.wt;
        if (gamma == 0) continue;
        out.coefficients.emplace(*b, gamma);
        out.residual = out.residual - images.at(*b).scaled(gamma);
    }
    out.residual_zero = out.residual.is_zero();
    return out;
}

namespace {

// Two-prime certified nullity of the direct stacked commutant system.
struct CertifiedDim {
    long dim = 0;
    std::uint64_t p1 = 0, p2 = 0;
    bool exact_confirmed = false;
};

CertifiedDim certified_commutant_dim(const std::vector<SparseMatrix>& acts, long N,
                                     const CentralizerOptions& opts) {
    auto sys = build_intertwiner_system(acts, acts, N, N);
    SparseMatrix system = matrix_from_rows(sys.rows, sys.dim());
    std::mt19937_64 rng(opts.seed);
    CertifiedDim cert;
    for (int attempt = 0; attempt < 5; ++attempt) {
        std::uint64_t p1 = random_prime_31(rng), p2;
        do { p2 = random_prime_31(rng); } while (p2 == p1);
        long r1 = rank_mod_p(system, p1);
        long r2 = rank_mod_p(system, p2);
        if (r1 == r2) {
            cert.dim = sys.dim() - r1;
            cert.p1 = p1;
            cert.p2 = p2;
            break;
        }
        if (attempt == 4) throw std::runtime_error("rank certification failed repeatedly");
    }
    if (opts.exact_rank) {
        long rq = rank(system);
        if (sys.dim() - rq != cert.dim)
            throw std::logic_error("mod-p certified rank disagrees with the rational rank");
        cert.exact_confirmed = true;
    }
    return cert;
}

} // namespace

VerificationReport verify_theorem_A(const Params& p, int d, const CentralizerOptions& opts) {
    VerificationReport rep;
    rep.m = p.m;
    rep.n = p.n;
    rep.d = d;
    rep.mode = p.mode;
    rep.delta = p.supertrace();
    rep.brauer_dim = brauer_dimension(d);
    rep.seed = opts.seed;

    const long N = tensor_dim(p, d, opts.budget);
    auto images = theta_psi_images(p, d);
    std::vector<SparseMatrix> image_list;
    for (auto& [b, im] : images) image_list.push_back(im);
    rep.image_rank = span_rank(image_list);
    rep.injective = rep.image_rank == rep.brauer_dim;

    // Exact commutant basis (staged for large spaces) plus the two-prime
    // certificate of its dimension from the direct stacked system.
    CommutantBasis comm = osp_commutant(p, d, opts);
    rep.commutant_dim = comm.dim();
    auto acts = osp_actions(p, d, opts.budget);
    CertifiedDim cert = certified_commutant_dim(acts, N, opts);
    rep.rank_prime_1 = cert.p1;
    rep.rank_prime_2 = cert.p2;
    rep.rank_exact_confirmed = cert.exact_confirmed;
    if (cert.dim != rep.commutant_dim)
        throw std::logic_error("certified commutant dimension disagrees with the exact basis");

    // Parity split, for information.
    std::vector<SparseMatrix> even_parts, odd_parts;
    for (const auto& f : comm.ops) {
        SparseMatrix fe(N, N), fo(N, N);
        for (const auto& [rc, v] : f.entries()) {
            int par = (index_parity(unflat_index(rc.first, p.dim(), d), p) +
                       index_parity(unflat_index(rc.second, p.dim(), d), p)) %
                      2;
            (par ? fo : fe).set(rc.first, rc.second, v);
        }
        if (!fe.is_zero()) even_parts.push_back(std::move(fe));
        if (!fo.is_zero()) odd_parts.push_back(std::move(fo));
    }
    rep.commutant_dim_even = span_rank(even_parts);
    rep.commutant_dim_odd = span_rank(odd_parts);

    // Surjectivity: membership of each commutant element in the image span
    // (exact linear solve); the constructive decomposition cross-checks it
    // whenever the read-off labelling exists.
    std::map<std::pair<long, long>, long> columns;
    for (const auto& im : image_list)
        for (const auto& [rc, v] : im.entries()) columns.try_emplace(rc, static_cast<long>(columns.size()));
    bool all_members = true;
    std::vector<SparseVec> image_rows;
    for (const auto& im : image_list) {
        SparseVec row;
        for (const auto& [rc, v] : im.entries()) row.emplace_back(columns.at(rc), v);
        std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        image_rows.push_back(std::move(row));
    }
    SparseMatrix image_span = matrix_from_rows(image_rows, static_cast<long>(columns.size())).transposed();
    for (const auto& f : comm.ops) {
        SparseVec rhs;
        bool representable = true;
        for (const auto& [rc, v] : f.entries()) {
            auto it = columns.find(rc);
            if (it == columns.end()) { representable = false; break; }
            rhs.emplace_back(it->second, v);
        }
        std::sort(rhs.begin(), rhs.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        if (!representable || !solve(image_span, rhs).has_value()) all_members = false;
    }
    rep.surjective = all_members;

    if (d <= p.m + p.n) {
        rep.residuals_available = true;
        bool all_zero = true;
        for (const auto& f : comm.ops) {
            auto dec = decompose_in_brauer_basis(f, p, d, opts);
            rep.residual_nnz.push_back(dec.residual.nnz());
            all_zero = all_zero && dec.residual_zero;
        }
        if (all_zero != rep.surjective)
            throw std::logic_error("decomposition residuals disagree with membership solve");
    }

    rep.iso = rep.injective && rep.surjective && rep.commutant_dim == rep.brauer_dim;
    bool sdim_even_orthogonal = !p.odd() && p.n == 0;
    rep.hypotheses_satisfied = sdim_even_orthogonal ? (p.m > 0 && d < p.m) : (d <= p.m + p.n);
    return rep;
}

std::string report_to_json(const VerificationReport& r) {
    nlohmann::json j;
    j["m"] = r.m;
    j["n"] = r.n;
    j["mode"] = r.mode == ParityMode::Odd ? "odd" : "even";
    j["d"] = r.d;
    j["delta"] = to_string(r.delta);
    j["brauer_dim"] = r.brauer_dim;
    j["image_rank"] = r.image_rank;
    j["commutant_dim"] = r.commutant_dim;
    j["commutant_dim_even"] = r.commutant_dim_even;
    j["commutant_dim_odd"] = r.commutant_dim_odd;
    j["injective"] = r.injective;
    j["surjective"] = r.surjective;
    j["iso"] = r.iso;
    j["hypotheses_satisfied"] = r.hypotheses_satisfied;
    j["residuals_available"] = r.residuals_available;
    j["residual_nnz"] = r.residual_nnz;
    j["rank_primes"] = {r.rank_prime_1, r.rank_prime_2};
    j["seed"] = r.seed;
    j["rank_exact_confirmed"] = r.rank_exact_confirmed;
    return j.dump(2);
}

} // namespace brauerlab
