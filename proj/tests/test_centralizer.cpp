#include <doctest.h>

#include <random>

#include <json.hpp>

#include "brauerlab/centralizer.hpp"
#include "brauerlab/errors.hpp"
#include "brauerlab/oriented.hpp"

using namespace brauerlab;

TEST_CASE("commutant of the full matrix algebra is the scalars") {
    std::vector<SparseMatrix> gens;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            SparseMatrix E(3, 3);
            E.set(a, b, Rational(1));
            gens.push_back(std::move(E));
        }
    auto basis = commutant(gens, 3);
    REQUIRE(basis.dim() == 1);
    // The single element is a multiple of the identity.
    auto f = basis.ops[0];
    CHECK(f.at(0, 0) == f.at(1, 1));
    CHECK(f.at(0, 0) == f.at(2, 2));
    CHECK(f.nnz() == 3);
}

TEST_CASE("defining modules of sp(2) and so(4)") {
    Params sp2{0, 1, ParityMode::Even};
    std::vector<SparseMatrix> gens;
    for (const auto& X : osp_basis(sp2)) gens.push_back(X.mat);
    CHECK(commutant(gens, sp2.dim()).dim() == 1);

    Params so4{2, 0, ParityMode::Even};
    std::vector<SparseMatrix> acts;
    for (const auto& X : osp_basis(so4)) acts.push_back(act_lie(X, so4, 2));
    CHECK(commutant(acts, 16).dim() == 4);
}

TEST_CASE("staged osp commutant agrees with the direct one") {
    for (Params p : {Params{1, 1, ParityMode::Even}, Params{1, 1, ParityMode::Odd},
                     Params{1, 0, ParityMode::Odd}}) {
        const int d = 2;
        std::vector<SparseMatrix> acts;
        for (const auto& X : osp_basis(p)) acts.push_back(act_lie(X, p, d));
        auto direct = commutant(acts, tensor_dim(p, d));
        CentralizerOptions staged_opts;
        staged_opts.direct_limit = 0; // force the staged path
        auto staged = osp_commutant(p, d, staged_opts);
        CHECK(direct.dim() == staged.dim());
        // Same span: the union has the same rank.
        std::vector<SparseMatrix> all = direct.ops;
        all.insert(all.end(), staged.ops.begin(), staged.ops.end());
        std::map<std::pair<long, long>, long> cols;
        for (const auto& f : all)
            for (const auto& [rc, v] : f.entries()) cols.try_emplace(rc, (long)cols.size());
        SparseMatrix M((long)all.size(), (long)cols.size());
        for (long r = 0; r < (long)all.size(); ++r)
            for (const auto& [rc, v] : all[r].entries()) M.set(r, cols.at(rc), v);
        CHECK(rank(M) == direct.dim());
    }
}

TEST_CASE("commutant dimensions match the Brauer algebra at desk scale") {
    CHECK(osp_commutant_dim({1, 1, ParityMode::Even}, 2) == 3);
    CHECK(osp_commutant_dim({1, 1, ParityMode::Odd}, 2) == 3);
    // Further parameter points inside the isomorphism range, delta = -2, 0.
    auto rep12 = verify_theorem_A({1, 2, ParityMode::Even}, 2);
    CHECK(rep12.delta == -2);
    CHECK(rep12.commutant_dim == 3);
    CHECK(rep12.iso);
    auto rep22 = verify_theorem_A({2, 2, ParityMode::Even}, 2);
    CHECK(rep22.delta == 0);
    CHECK(rep22.commutant_dim == 3);
    CHECK(rep22.iso);
}

TEST_CASE("gl intertwiner dimensions") {
    Params p{1, 1, ParityMode::Odd};
    CHECK(gl_intertwiner_dim("o", "^", p) == 0);
    CHECK(gl_intertwiner_dim("^", "^", p) == 1);
    CHECK(gl_intertwiner_dim("^v", "^v", p) == 2);
    CHECK(gl_intertwiner_dim("oo", "^v", p) == 1);
    CHECK(gl_intertwiner_dim("", "", p) == 1);
    // Vanishing predicate implies vanishing intertwiners (spot checks; the
    // exhaustive d <= 2 sweep is in the acceptance suite).
    for (const auto& s : {std::string("^o"), std::string("vv"), std::string("o^")})
        for (const auto& t : {std::string("^^"), std::string("ov"), std::string("vo")})
            if (hom_vanishing_predicate(s, t)) CHECK(gl_intertwiner_dim(s, t, p) == 0);
}

TEST_CASE("brauer action rank") {
    CHECK(brauer_action_rank({1, 1, ParityMode::Even}, 2) == 3);
    // Outside the isomorphism range: sp(2) at d = 2 has a non-faithful action.
    long r = brauer_action_rank({0, 1, ParityMode::Even}, 2);
    CHECK(r <= 3);
    MESSAGE("observed Br_2(-2) action rank for sp(2): ", r);
    CHECK(brauer_action_rank({2, 1, ParityMode::Even}, 3) == 15);
}

TEST_CASE("verify_theorem_A reports and JSON schema") {
    auto rep = verify_theorem_A({1, 1, ParityMode::Even}, 2);
    CHECK(rep.commutant_dim == 3);
    CHECK(rep.image_rank == 3);
    CHECK(rep.iso);
    CHECK(rep.hypotheses_satisfied);
    CHECK(rep.residuals_available);

    auto j = nlohmann::json::parse(report_to_json(rep));
    for (const char* key : {"m", "n", "mode", "d", "delta", "brauer_dim", "image_rank",
                            "commutant_dim", "injective", "surjective", "iso",
                            "hypotheses_satisfied"})
        CHECK(j.contains(key));
    CHECK(j["mode"] == "even");
    CHECK(j["delta"] == "0");
    CHECK(j["iso"] == true);
    CHECK(j["rank_primes"].size() == 2);

    auto boundary = verify_theorem_A({2, 0, ParityMode::Even}, 2);
    CHECK(boundary.commutant_dim == 4);
    CHECK(!boundary.iso);
    CHECK(!boundary.hypotheses_satisfied);
    CHECK(boundary.injective);
    CHECK(!boundary.surjective);

    auto odd_orth = verify_theorem_A({1, 0, ParityMode::Odd}, 2);
    CHECK(odd_orth.commutant_dim == 3);
    CHECK(odd_orth.image_rank == 3);
    CHECK(odd_orth.iso);
    CHECK(!odd_orth.hypotheses_satisfied); // d = 2 > m + n, yet duality holds
}

TEST_CASE("exact rational rank confirmation agrees with the two primes") {
    CentralizerOptions opts;
    opts.exact_rank = true;
    auto rep = verify_theorem_A({1, 1, ParityMode::Odd}, 2, opts);
    CHECK(rep.rank_exact_confirmed);
    CHECK(rep.commutant_dim == 3);
}

TEST_CASE("decomposition round-trips and failure modes") {
    Params p{1, 1, ParityMode::Even};
    auto images = theta_psi_images(p, 2);

    // Round-trip every basis diagram.
    for (const auto& [b, im] : images) {
        auto dec = decompose_in_brauer_basis(im, p, 2);
        REQUIRE(dec.residual_zero);
        REQUIRE(dec.coefficients.size() == 1);
        CHECK(dec.coefficients.begin()->first == b);
        CHECK(dec.coefficients.begin()->second == 1);
    }

    // Random exact combinations are recovered coefficient by coefficient.
    std::mt19937_64 rng(2718);
    for (int trial = 0; trial < 5; ++trial) {
        std::map<GeneralizedDiagram, Rational> want;
        SparseMatrix f(16, 16);
        for (const auto& [b, im] : images) {
            Rational c(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 3));
            if (c != 0) want.emplace(b, c);
            f = f + im.scaled(c);
        }
        auto dec = decompose_in_brauer_basis(f, p, 2);
        CHECK(dec.residual_zero);
        CHECK(dec.coefficients == want);
    }

    // Theta(Psi(e_1 s_2)) at (2,1,even,3): coefficient 1 on the product
    // diagram, residual zero.
    Params q{2, 1, ParityMode::Even};
    auto prod = compose(generator(3, GenKind::E, 1), generator(3, GenKind::S, 2));
    REQUIRE(prod.loops == 0);
    auto f = theta(psi_embed(prod.diagram, q.odd()), q);
    auto dec = decompose_in_brauer_basis(f, q, 3);
    CHECK(dec.residual_zero);
    REQUIRE(dec.coefficients.size() == 1);
    CHECK(dec.coefficients.begin()->first == prod.diagram);
    CHECK(dec.coefficients.begin()->second == 1);

    // Non-equivariant input is rejected.
    SparseMatrix bad(16, 16);
    bad.set(0, 1, Rational(1));
    CHECK_THROWS_AS(decompose_in_brauer_basis(bad, p, 2), std::invalid_argument);

    // d > m + n: the read-off labelling does not exist.
    Params small{1, 0, ParityMode::Odd};
    auto id9 = SparseMatrix::identity(9);
    CHECK_THROWS_AS(decompose_in_brauer_basis(id9, small, 2), std::domain_error);

    // Outside the isomorphism range a commutant element can fail to decompose.
    Params so4{2, 0, ParityMode::Even};
    std::vector<SparseMatrix> acts;
    for (const auto& X : osp_basis(so4)) acts.push_back(act_lie(X, so4, 2));
    auto comm = commutant(acts, 16);
    REQUIRE(comm.dim() == 4);
    int nonzero_residuals = 0;
    for (const auto& g : comm.ops)
        if (!decompose_in_brauer_basis(g, so4, 2).residual_zero) ++nonzero_residuals;
    CHECK(nonzero_residuals >= 1);
}

TEST_CASE("image lies inside the commutant: every Theta(Psi(b)) is equivariant") {
    for (Params p : {Params{1, 1, ParityMode::Even}, Params{1, 1, ParityMode::Odd}}) {
        for (int d : {2, 3}) {
            if (p.odd() && d == 3) continue; // covered at d = 2 for the odd mode
            std::vector<SparseMatrix> acts;
            for (const auto& X : osp_basis(p)) acts.push_back(act_lie(X, p, d));
            for (const auto& [b, im] : theta_psi_images(p, d))
                for (const auto& rho : acts) CHECK((im * rho - rho * im).is_zero());
        }
    }
}

TEST_CASE("centralizer budget errors") {
    Params p{2, 2, ParityMode::Odd};
    CentralizerOptions opts;
    opts.budget = 100;
    CHECK_THROWS_AS(osp_commutant(p, 3, opts), BudgetExceeded);
    CHECK_THROWS_AS(brauer_action_rank(p, 3, opts), BudgetExceeded);
    CHECK_THROWS_AS(verify_theorem_A(p, 3, opts), BudgetExceeded);
}

TEST_CASE("theta is multiplicative on whole Mat images") {
    std::mt19937_64 rng(909);
    for (Params p : {Params{1, 1, ParityMode::Even}, Params{1, 1, ParityMode::Odd}}) {
        int d = p.odd() ? 2 : 3;
        auto basis = enumerate_brauer(d);
        Rational delta = p.supertrace();
        for (int trial = 0; trial < 8; ++trial) {
            const auto& a = basis[rng() % basis.size()];
            const auto& b = basis[rng() % basis.size()];
            auto comp = compose(a, b);
            Rational coeff(1);
            for (long l = 0; l < comp.loops; ++l) coeff *= delta;
            auto lhs = theta(psi_embed(a, p.odd()), p) * theta(psi_embed(b, p.odd()), p);
            auto rhs = theta(psi_embed(comp.diagram, p.odd()), p).scaled(coeff);
            CHECK(lhs == rhs);
        }
    }
}
