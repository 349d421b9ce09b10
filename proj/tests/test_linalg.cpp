#include <doctest.h>

#include <random>

#include "brauerlab/linalg.hpp"
#include "brauerlab/modp.hpp"
#include "oracles.hpp"

using namespace brauerlab;

namespace {

SparseMatrix from_dense(const std::vector<std::vector<int>>& a) {
    SparseMatrix m(static_cast<long>(a.size()), a.empty() ? 0 : static_cast<long>(a[0].size()));
    for (long r = 0; r < m.rows(); ++r)
        for (long c = 0; c < m.cols(); ++c)
            if (a[r][c] != 0) m.set(r, c, Rational(a[r][c]));
    return m;
}

SparseMatrix random_matrix(std::mt19937_64& rng, long nr, long nc, int density_pct) {
    SparseMatrix m(nr, nc);
    std::uniform_int_distribution<int> pct(0, 99), val(-4, 4);
    for (long r = 0; r < nr; ++r)
        for (long c = 0; c < nc; ++c)
            if (pct(rng) < density_pct) m.set(r, c, Rational(val(rng)));
    return m;
}

} // namespace

TEST_CASE("rational parsing round-trips") {
    CHECK(parse_rational("3/2") == Rational(3, 2));
    CHECK(parse_rational("-6/4") == Rational(-3, 2));
    CHECK(parse_rational("7") == Rational(7));
    CHECK(to_string(Rational(-3, 2)) == "-3/2");
    CHECK(to_string(Rational(5)) == "5");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
}

TEST_CASE("rank on known matrices") {
    CHECK(rank(SparseMatrix::identity(3)) == 3);
    CHECK(rank(from_dense({{1, 1}, {1, 1}})) == 1);
    CHECK(rank(SparseMatrix(4, 5)) == 0);
}

TEST_CASE("nullspace on known matrices") {
    auto ns = nullspace_basis(from_dense({{1, 1}, {1, 1}}));
    REQUIRE(ns.size() == 1);
    // span{(1,-1)}: x0 + x1 = 0
    REQUIRE(ns[0].size() == 2);
    CHECK(ns[0][0].second + ns[0][1].second == 0);

    CHECK(nullspace_basis(SparseMatrix::identity(4)).empty());

    auto ns2 = nullspace_basis(from_dense({{2, 0}}));
    REQUIRE(ns2.size() == 1);
    REQUIRE(ns2[0].size() == 1);
    CHECK(ns2[0][0].first == 1);
}

TEST_CASE("rank_mod_p on known matrices") {
    const std::uint64_t p = (1ull << 31) - 1;
    CHECK(rank_mod_p(SparseMatrix::identity(5), p) == 5);
    CHECK(rank_mod_p(from_dense({{1, 1}, {1, 1}}), p) == 1);

    SparseMatrix half(1, 1);
    half.set(0, 0, Rational(1, 2));
    CHECK(rank_mod_p(half, 7) == 1);
    CHECK_THROWS_AS(rank_mod_p(half, 2), std::domain_error);
    CHECK_THROWS_AS(rank_mod_p(half, 15), std::invalid_argument);
}

TEST_CASE("rank + nullity = columns, residuals vanish, dense oracle agrees") {
    std::mt19937_64 rng(20240917);
    for (int trial = 0; trial < 40; ++trial) {
        long nr = 1 + static_cast<long>(rng() % 8);
        long nc = 1 + static_cast<long>(rng() % 8);
        SparseMatrix m = random_matrix(rng, nr, nc, 45);

        long rk = rank(m);
        CHECK(rk == oracles::dense_rank(m));

        auto ns = nullspace_basis(m);
        CHECK(static_cast<long>(ns.size()) == nc - rk);
        for (const auto& x : ns) {
            CHECK(m.apply(x).empty()); // exact residual M x = 0
        }

        // mod-p rank never exceeds the rational rank, and two independent
        // large primes agree with it on these small instances.
        for (std::uint64_t p : {2147483647ull, 1073741827ull}) {
            long rp = rank_mod_p(m, p);
            CHECK(rp <= rk);
            CHECK(rp == rk);
        }
    }
}

TEST_CASE("solve finds exact solutions and detects inconsistency") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        long nr = 1 + static_cast<long>(rng() % 6);
        long nc = 1 + static_cast<long>(rng() % 6);
        SparseMatrix m = random_matrix(rng, nr, nc, 50);

        // Consistent by construction: b = M x0.
        SparseVec x0;
        for (long c = 0; c < nc; ++c)
            if (rng() % 2) x0.emplace_back(c, Rational(static_cast<long>(rng() % 7) - 3));
        x0.erase(std::remove_if(x0.begin(), x0.end(), [](auto& e) { return e.second == 0; }),
                 x0.end());
        SparseVec b = m.apply(x0);
        auto x = solve(m, b);
        REQUIRE(x.has_value());
        CHECK(m.apply(*x) == b);
    }

    auto none = solve(from_dense({{1, 1}, {1, 1}}), SparseVec{{0, Rational(1)}});
    CHECK(!none.has_value());
}

TEST_CASE("matrix arithmetic basics") {
    auto a = from_dense({{1, 2}, {0, 1}});
    auto b = from_dense({{1, 0}, {-1, 1}});
    CHECK(a * b == from_dense({{-1, 2}, {-1, 1}}));
    CHECK(a + b == from_dense({{2, 2}, {-1, 2}}));
    CHECK((a - a).is_zero());
    CHECK(a.scaled(Rational(0)).is_zero());
    CHECK(a.transposed() == from_dense({{1, 0}, {2, 1}}));
    CHECK(SparseMatrix::identity(2) * a == a);
}

TEST_CASE("prime utilities") {
    CHECK(is_prime(2147483647ull));
    CHECK(!is_prime(2147483649ull));
    std::mt19937_64 rng(99);
    auto p = random_prime_31(rng);
    CHECK(p > (1ull << 30));
    CHECK(is_prime(p));
    CHECK(mul_mod(inv_mod(12345, p), 12345, p) == 1);
}
