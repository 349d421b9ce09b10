#include "brauerlab/superalgebra.hpp"

#include <cctype>
#include <stdexcept>

namespace brauerlab {

int basis_position(const BasisIndex& idx, const Params& p) {
    const int z = p.odd() ? 1 : 0;
    if (idx.value == 0) {
        if (!p.odd() || idx.barred) throw std::invalid_argument("index 0 exists only unbarred, odd case");
        return 0;
    }
    if (idx.value < 0 || idx.value > p.m + p.n) throw std::invalid_argument("basis index out of range");
    if (idx.value <= p.m)
        return z + (idx.barred ? 0 : p.m) + (idx.value - 1);
    return z + 2 * p.m + (idx.barred ? 0 : p.n) + (idx.value - p.m - 1);
}

BasisIndex basis_index_at(int position, const Params& p) {
    const int z = p.odd() ? 1 : 0;
    if (position < 0 || position >= p.dim()) throw std::out_of_range("basis position out of range");
    if (p.odd() && position == 0) return {0, false};
    int q = position - z;
    if (q < p.m) return {q + 1, true};
    q -= p.m;
    if (q < p.m) return {q + 1, false};
    q -= p.m;
    if (q < p.n) return {p.m + q + 1, true};
    q -= p.n;
    return {p.m + q + 1, false};
}

int parity_of_index(const BasisIndex& idx, const Params& p) {
    return idx.value > p.m ? 1 : 0;
}

int parity_of_position(int position, const Params& p) {
    return parity_of_index(basis_index_at(position, p), p);
}

char orientation_symbol(const BasisIndex& idx) {
    if (idx.value == 0) return 'o';
    return idx.barred ? 'v' : '^';
}

std::string print_basis_index(const BasisIndex& idx) {
    std::string s = std::to_string(idx.value);
    if (idx.barred) s += '~';
    return s;
}

BasisIndex parse_basis_index(const std::string& text, const Params& p) {
    if (text.empty()) throw std::invalid_argument("empty basis index literal");
    std::string digits = text;
    bool barred = false;
    if (digits.back() == '~') {
        barred = true;
        digits.pop_back();
    }
    for (char c : digits)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw std::invalid_argument("bad basis index literal '" + text + "'");
    BasisIndex idx{std::stoi(digits), barred};
    basis_position(idx, p); // range check
    return idx;
}

bool is_homogeneous(const LieElement& X, const Params& p) {
    for (const auto& [rc, v] : X.mat.entries()) {
        int par = (parity_of_position(static_cast<int>(rc.first), p) +
                   parity_of_position(static_cast<int>(rc.second), p)) % 2;
        if (par != X.parity % 2) return false;
    }
    return true;
}

SparseMatrix gram_matrix(const Params& p) {
    SparseMatrix J(p.dim(), p.dim());
    auto pos = [&](BasisIndex i) { return basis_position(i, p); };
    if (p.odd()) J.set(pos({0, false}), pos({0, false}), Rational(1));
    for (int i = 1; i <= p.m; ++i) {
        J.set(pos({i, true}), pos({i, false}), Rational(1));
        J.set(pos({i, false}), pos({i, true}), Rational(1));
    }
    for (int j = p.m + 1; j <= p.m + p.n; ++j) {
        J.set(pos({j, true}), pos({j, false}), Rational(-1));
        J.set(pos({j, false}), pos({j, true}), Rational(1));
    }
    return J;
}

std::pair<BasisIndex, Rational> right_dual(const BasisIndex& idx, const Params& p) {
    if (idx.value == 0) return {{0, false}, Rational(1)};
    BasisIndex partner{idx.value, !idx.barred};
    // <v_idx, v_partner> is +-1; the right dual is its inverse times partner.
    Rational pairing = idx.value > p.m && idx.barred ? Rational(-1) : Rational(1);
    return {partner, pairing};
}

namespace {

void put(SparseMatrix& M, const Params& p, const BasisIndex& row, const BasisIndex& col,
         int val) {
    M.add_to(basis_position(row, p), basis_position(col, p), Rational(val));
}

} // namespace

std::vector<LieElement> osp_basis(const Params& p) {
    const int m = p.m, n = p.n, D = p.dim();
    std::vector<LieElement> out;
    auto fresh = [&] { return SparseMatrix(D, D); };
    auto push = [&](SparseMatrix M, int parity) { out.push_back({std::move(M), parity}); };

    // A (m x m), with -A^T on the barred block.
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j) {
            auto M = fresh();
            put(M, p, {i, false}, {j, false}, 1);
            put(M, p, {j, true}, {i, true}, -1);
            push(std::move(M), 0);
        }
    // a_1 skew (barred rows, unbarred cols), a_2 skew (unbarred, barred).
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j) {
            auto M1 = fresh();
            put(M1, p, {i, true}, {j, false}, 1);
            put(M1, p, {j, true}, {i, false}, -1);
            push(std::move(M1), 0);
            auto M2 = fresh();
            put(M2, p, {i, false}, {j, true}, 1);
            put(M2, p, {j, false}, {i, true}, -1);
            push(std::move(M2), 0);
        }
    // u_1, u_2 (odd case only): the so(2m+1) column/row against v_0.
    if (p.odd())
        for (int i = 1; i <= m; ++i) {
            auto M1 = fresh();
            put(M1, p, {i, false}, {0, false}, 1);
            put(M1, p, {0, false}, {i, true}, -1);
            push(std::move(M1), 0);
            auto M2 = fresh();
            put(M2, p, {i, true}, {0, false}, 1);
            put(M2, p, {0, false}, {i, false}, -1);
            push(std::move(M2), 0);
        }
    // D (n x n), with -D^T on the barred block.
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            auto M = fresh();
            put(M, p, {m + i, false}, {m + j, false}, 1);
            put(M, p, {m + j, true}, {m + i, true}, -1);
            push(std::move(M), 0);
        }
    // d_1 symmetric (barred rows, unbarred cols), d_2 symmetric (unbarred, barred).
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
            auto M1 = fresh();
            put(M1, p, {m + i, true}, {m + j, false}, 1);
            if (i != j) put(M1, p, {m + j, true}, {m + i, false}, 1);
            push(std::move(M1), 0);
            auto M2 = fresh();
            put(M2, p, {m + i, false}, {m + j, true}, 1);
            if (i != j) put(M2, p, {m + j, false}, {m + i, true}, 1);
            push(std::move(M2), 0);
        }
    // Odd part: B, z_1, z_2 (m x n), C (n x m), x_1, x_2 (odd case).
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j) {
            auto MB = fresh();
            put(MB, p, {i, false}, {m + j, false}, 1);
            put(MB, p, {m + j, true}, {i, true}, 1);
            push(std::move(MB), 1);
            auto Mz1 = fresh();
            put(Mz1, p, {i, true}, {m + j, false}, 1);
            put(Mz1, p, {m + j, true}, {i, false}, 1);
            push(std::move(Mz1), 1);
            auto Mz2 = fresh();
            put(Mz2, p, {i, false}, {m + j, true}, 1);
            put(Mz2, p, {m + j, false}, {i, true}, -1);
            push(std::move(Mz2), 1);
        }
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= m; ++j) {
            auto MC = fresh();
            put(MC, p, {m + i, false}, {j, false}, 1);
            put(MC, p, {j, true}, {m + i, true}, -1);
            push(std::move(MC), 1);
        }
    if (p.odd())
        for (int j = 1; j <= n; ++j) {
            auto M1 = fresh();
            put(M1, p, {0, false}, {m + j, true}, 1);
            put(M1, p, {m + j, false}, {0, false}, -1);
            push(std::move(M1), 1);
            auto M2 = fresh();
            put(M2, p, {0, false}, {m + j, false}, 1);
            put(M2, p, {m + j, true}, {0, false}, 1);
            push(std::move(M2), 1);
        }
    return out;
}

bool check_form_invariance(const LieElement& X, const Params& p) {
    if (!is_homogeneous(X, p)) throw std::invalid_argument("check_form_invariance: X not homogeneous");
    SparseMatrix J = gram_matrix(p);
    SparseMatrix lhs = X.mat.transposed() * J; // <Xv_i, v_j> as (i, j)
    SparseMatrix rhs = J * X.mat;              // <v_i, Xv_j>
    if (X.parity % 2 == 1) {
        SparseMatrix signs(p.dim(), p.dim());
        for (int i = 0; i < p.dim(); ++i)
            signs.set(i, i, parity_of_position(i, p) ? Rational(-1) : Rational(1));
        rhs = signs * rhs;
    }
    return (lhs + rhs).is_zero();
}

std::vector<LieElement> gl_embedding(const Params& p) {
    const int mn = p.m + p.n, D = p.dim();
    std::vector<LieElement> out;
    auto gl_parity = [&](int i) { return i > p.m ? 1 : 0; };
    for (int i = 1; i <= mn; ++i)
        for (int j = 1; j <= mn; ++j) {
            SparseMatrix M(D, D);
            put(M, p, {i, false}, {j, false}, 1);
            int sign = ((gl_parity(i) + gl_parity(j)) * gl_parity(j)) % 2 ? -1 : 1;
            put(M, p, {j, true}, {i, true}, -sign);
            out.push_back({std::move(M), (gl_parity(i) + gl_parity(j)) % 2});
        }
    return out;
}

LieElement superbracket(const LieElement& X, const LieElement& Y, const Params& p) {
    if (!is_homogeneous(X, p) || !is_homogeneous(Y, p))
        throw std::invalid_argument("superbracket needs homogeneous elements");
    SparseMatrix XY = X.mat * Y.mat;
    SparseMatrix YX = Y.mat * X.mat;
    SparseMatrix M = (X.parity * Y.parity) % 2 ? XY + YX : XY - YX;
    return {std::move(M), (X.parity + Y.parity) % 2};
}

bool in_span(const LieElement& X, const std::vector<LieElement>& basis) {
    if (basis.empty()) return X.mat.is_zero();
    const long D = basis[0].mat.rows();
    SparseMatrix system(D * D, static_cast<long>(basis.size()));
    for (long k = 0; k < static_cast<long>(basis.size()); ++k)
        for (const auto& [rc, v] : basis[k].mat.entries())
            system.set(rc.first * D + rc.second, k, v);
    SparseVec rhs;
    for (const auto& [rc, v] : X.mat.entries()) rhs.emplace_back(rc.first * D + rc.second, v);
    return solve(system, rhs).has_value();
}

} // namespace brauerlab
