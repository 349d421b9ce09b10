#include <doctest.h>

#include "brauerlab/linalg.hpp"
#include "brauerlab/superalgebra.hpp"

using namespace brauerlab;

namespace {

long expected_osp_dim(const Params& p) {
    long m = p.m, n = p.n;
    return p.odd() ? m * (2 * m + 1) + n * (2 * n + 1) + 2 * n * (2 * m + 1)
                   : m * (2 * m - 1) + n * (2 * n + 1) + 4 * m * n;
}

std::vector<Params> param_grid() {
    std::vector<Params> out;
    for (int m = 0; m <= 2; ++m)
        for (int n = 0; n <= 2; ++n)
            for (auto mode : {ParityMode::Even, ParityMode::Odd}) out.push_back({m, n, mode});
    return out;
}

} // namespace

TEST_CASE("basis order and parities") {
    Params p{2, 1, ParityMode::Odd}; // order: 0, 1b, 2b, 1, 2, 3b, 3
    CHECK(p.dim() == 7);
    CHECK(basis_position({0, false}, p) == 0);
    CHECK(basis_position({1, true}, p) == 1);
    CHECK(basis_position({2, true}, p) == 2);
    CHECK(basis_position({1, false}, p) == 3);
    CHECK(basis_position({2, false}, p) == 4);
    CHECK(basis_position({3, true}, p) == 5);
    CHECK(basis_position({3, false}, p) == 6);
    for (int pos = 0; pos < p.dim(); ++pos)
        CHECK(basis_position(basis_index_at(pos, p), p) == pos);
    CHECK(parity_of_index({0, false}, p) == 0);
    CHECK(parity_of_index({2, true}, p) == 0);
    CHECK(parity_of_index({3, false}, p) == 1);
    CHECK(orientation_symbol({0, false}) == 'o');
    CHECK(orientation_symbol({2, true}) == 'v');
    CHECK(orientation_symbol({2, false}) == '^');
    CHECK(print_basis_index({3, true}) == "3~");
    CHECK(parse_basis_index("3~", p) == BasisIndex{3, true});
    CHECK_THROWS_AS(parse_basis_index("9", p), std::invalid_argument);
    Params even{1, 1, ParityMode::Even};
    CHECK_THROWS_AS(basis_position({0, false}, even), std::invalid_argument);
}

TEST_CASE("gram matrix matches the block display") {
    Params p01{0, 1, ParityMode::Odd};
    auto J = gram_matrix(p01);
    CHECK(J.at(0, 0) == 1);
    CHECK(J.at(1, 2) == -1); // <v_1bar, v_1>
    CHECK(J.at(2, 1) == 1);  // <v_1, v_1bar>
    CHECK(J.nnz() == 3);

    Params p10{1, 0, ParityMode::Even};
    auto J10 = gram_matrix(p10);
    CHECK(J10.at(0, 1) == 1);
    CHECK(J10.at(1, 0) == 1);
    CHECK(J10.nnz() == 2);

    for (const auto& p : param_grid()) {
        if (p.dim() == 0) continue;
        auto G = gram_matrix(p);
        CHECK(rank(G) == p.dim()); // nondegenerate
        // Supersymmetry: symmetric on the even block, skew on the odd block,
        // zero on mixed blocks.
        for (int i = 0; i < p.dim(); ++i)
            for (int j = 0; j < p.dim(); ++j) {
                int pi = parity_of_position(i, p), pj = parity_of_position(j, p);
                if (pi != pj)
                    CHECK(G.at(i, j) == 0);
                else if (pi == 0)
                    CHECK(G.at(i, j) == G.at(j, i));
                else
                    CHECK(G.at(i, j) == -G.at(j, i));
            }
    }
}

TEST_CASE("right dual basis") {
    Params p{1, 1, ParityMode::Odd};
    auto J = gram_matrix(p);
    CHECK(right_dual({0, false}, p) == std::pair<BasisIndex, Rational>{{0, false}, Rational(1)});
    CHECK(right_dual({1, true}, p) == std::pair<BasisIndex, Rational>{{1, false}, Rational(1)});
    CHECK(right_dual({1, false}, p) == std::pair<BasisIndex, Rational>{{1, true}, Rational(1)});
    CHECK(right_dual({2, true}, p) == std::pair<BasisIndex, Rational>{{2, false}, Rational(-1)});
    CHECK(right_dual({2, false}, p) == std::pair<BasisIndex, Rational>{{2, true}, Rational(1)});
    // Defining property <v_i, v_i^*> = 1, <v_i, v_j^*> = 0 otherwise.
    for (int i = 0; i < p.dim(); ++i)
        for (int j = 0; j < p.dim(); ++j) {
            auto [dual, eps] = right_dual(basis_index_at(j, p), p);
            Rational pairing = J.at(i, basis_position(dual, p)) * eps;
            CHECK(pairing == (i == j ? 1 : 0));
        }
}

TEST_CASE("osp basis: counts, homogeneity, form invariance, bracket closure") {
    for (const auto& p : param_grid()) {
        auto basis = osp_basis(p);
        CHECK(static_cast<long>(basis.size()) == expected_osp_dim(p));
        for (const auto& X : basis) {
            CHECK(is_homogeneous(X, p));
            CHECK(check_form_invariance(X, p));
        }
        // Linear independence of the flattened basis.
        if (!basis.empty()) {
            const long D = p.dim();
            SparseMatrix flat(static_cast<long>(basis.size()), D * D);
            for (long k = 0; k < static_cast<long>(basis.size()); ++k)
                for (const auto& [rc, v] : basis[k].mat.entries())
                    flat.set(k, rc.first * D + rc.second, v);
            CHECK(rank(flat) == static_cast<long>(basis.size()));
        }
        // Superbracket closure, exact membership.
        if (p.m + p.n <= 2) {
            for (const auto& X : basis)
                for (const auto& Y : basis)
                    CHECK(in_span(superbracket(X, Y, p), basis));
        }
    }

    Params p11o{1, 1, ParityMode::Odd};
    CHECK(osp_basis(p11o).size() == 12);
    Params p10e{1, 0, ParityMode::Even};
    CHECK(osp_basis(p10e).size() == 1);
}

TEST_CASE("zero passes, E_00 fails form invariance") {
    Params p{1, 1, ParityMode::Odd};
    CHECK(check_form_invariance({SparseMatrix(p.dim(), p.dim()), 0}, p));
    SparseMatrix e00(p.dim(), p.dim());
    e00.set(0, 0, Rational(1));
    CHECK(!check_form_invariance({e00, 0}, p));

    SparseMatrix inhom(p.dim(), p.dim());
    inhom.set(0, 0, Rational(1));
    inhom.set(basis_position({2, false}, p), 0, Rational(1));
    CHECK_THROWS_AS(check_form_invariance({inhom, 0}, p), std::invalid_argument);
}

TEST_CASE("gl embedding") {
    for (const auto& p : param_grid()) {
        auto gl = gl_embedding(p);
        CHECK(static_cast<long>(gl.size()) == static_cast<long>(p.m + p.n) * (p.m + p.n));
        auto osp = osp_basis(p);
        for (const auto& X : gl) {
            CHECK(is_homogeneous(X, p));
            CHECK(check_form_invariance(X, p));
            CHECK(in_span(X, osp));
            // Preserves the unbarred span.
            for (const auto& [rc, v] : X.mat.entries()) {
                auto row = basis_index_at(static_cast<int>(rc.first), p);
                auto col = basis_index_at(static_cast<int>(rc.second), p);
                CHECK(row.barred == col.barred);
                CHECK(row.value != 0);
                CHECK(col.value != 0);
            }
        }
    }

    // Dual action: iota(E_{ij}) v_{kbar} = -delta_{ik} (-1)^{(|i|+|j|)|j|} v_{jbar},
    // the sign forced by form invariance for this J.
    Params p{1, 1, ParityMode::Even};
    auto gl = gl_embedding(p);
    auto idx = [&](int i, int j) { return (i - 1) * (p.m + p.n) + (j - 1); };
    auto dual_entry = [&](int i, int j) {
        return gl[idx(i, j)].mat.at(basis_position({j, true}, p), basis_position({i, true}, p));
    };
    CHECK(dual_entry(1, 1) == -1); // (0+0)*0 -> -1
    CHECK(dual_entry(1, 2) == 1);  // (0+1)*1 = 1 -> +1
    CHECK(dual_entry(2, 1) == -1); // (1+0)*0 = 0 -> -1
    CHECK(dual_entry(2, 2) == -1); // (1+1)*1 = 2 -> -1
}
