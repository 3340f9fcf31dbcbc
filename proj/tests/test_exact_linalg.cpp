#include <catch2/catch_amalgamated.hpp>

#include "redhom/errors.hpp"
#include "redhom/rat_matrix.hpp"
#include "redhom/rational.hpp"
#include "testutil.hpp"

using redhom::BadParameter;
using redhom::BigInt;
using redhom::RatMatrix;
using redhom::Rational;
using redhom::SingularMatrix;
using redhom::Vec;

namespace {

RatMatrix from_rows(const std::vector<std::vector<Rational>>& rows) {
    RatMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c) m.at(r, c) = rows[r][c];
    return m;
}

Rational q(long long num, long long den = 1) { return Rational(BigInt(num), BigInt(den)); }

} // namespace

TEST_CASE("Rational reduces and normalizes signs on construction") {
    CHECK(Rational(BigInt(3), BigInt(6)).str() == "1/2");
    CHECK(Rational(BigInt(-2), BigInt(4)).str() == "-1/2");
    CHECK(Rational(BigInt(2), BigInt(-4)).str() == "-1/2");
    CHECK(Rational(BigInt(-2), BigInt(-4)).str() == "1/2");
    CHECK(Rational(BigInt(0), BigInt(7)).str() == "0");
    CHECK(Rational(BigInt(5), BigInt(1)).str() == "5");
    CHECK(Rational(BigInt(5), BigInt(1)).numerator() == 5);
    CHECK(Rational(BigInt(3), BigInt(6)).denominator() == 2);
    CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), BadParameter);
}

TEST_CASE("Rational arithmetic is exact") {
    CHECK(q(1, 2) + q(1, 3) == q(5, 6));
    CHECK(q(1, 2) - q(1, 3) == q(1, 6));
    CHECK(q(2, 3) * q(3, 4) == q(1, 2));
    CHECK(q(1, 2) / q(1, 4) == q(2));
    CHECK(-q(1, 2) == q(-1, 2));
    CHECK(q(1, 3) < q(1, 2));
    CHECK(q(-1).sign() == -1);
    CHECK(q(0).is_zero());
    CHECK_THROWS_AS(q(1) / q(0), BadParameter);
}

TEST_CASE("Rational::parse accepts p and p/q and rejects everything else") {
    CHECK(Rational::parse("3") == q(3));
    CHECK(Rational::parse("-3") == q(-3));
    CHECK(Rational::parse("3/6") == q(1, 2));
    CHECK(Rational::parse("-2/4") == q(-1, 2));
    CHECK(Rational::parse("0") == q(0));
    CHECK_THROWS_AS(Rational::parse("1/0"), redhom::ParseError);
    CHECK_THROWS_AS(Rational::parse("+1"), redhom::ParseError);
    CHECK_THROWS_AS(Rational::parse(" 1"), redhom::ParseError);
    CHECK_THROWS_AS(Rational::parse("1 /2"), redhom::ParseError);
    CHECK_THROWS_AS(Rational::parse("1/-2"), redhom::ParseError);
    CHECK_THROWS_AS(Rational::parse(""), redhom::ParseError);
    CHECK_THROWS_AS(Rational::parse("a"), redhom::ParseError);
    CHECK_THROWS_AS(Rational::parse("1.5"), redhom::ParseError);
}

TEST_CASE("rref of the 2x2 identity is the identity with pivots [0,1]") {
    const auto res = redhom::rref(RatMatrix::identity(2));
    CHECK(res.r == RatMatrix::identity(2));
    CHECK(res.pivots == std::vector<std::size_t>{0, 1});
}

TEST_CASE("rref of a rank-1 matrix keeps one pivot row") {
    const auto res = redhom::rref(from_rows({{q(1), q(2)}, {q(2), q(4)}}));
    CHECK(res.r == from_rows({{q(1), q(2)}, {q(0), q(0)}}));
    CHECK(res.pivots == std::vector<std::size_t>{0});
}

TEST_CASE("rref rank of random 5x5 matrices matches the minor-rank oracle") {
    auto gen = testutil::make_rng(1);
    INFO("seed " << testutil::kSeed << " salt 1");
    for (int trial = 0; trial < 10; ++trial) {
        const RatMatrix m = testutil::random_matrix(gen, 5, 5);
        // Oracle first: rank = largest k with a nonzero k x k minor.
        const std::size_t oracle = testutil::minor_rank(m);
        CHECK(redhom::rank(m) == oracle);
        // Same kernel both ways: every null-space vector of R solves M x = 0
        // and counts match, so R x = 0 iff M x = 0.
        const auto res = redhom::rref(m);
        const auto null_r = redhom::null_space_basis(res.r);
        const auto null_m = redhom::null_space_basis(m);
        REQUIRE(null_r.size() == null_m.size());
        for (const Vec& v : null_r) {
            for (const Rational& entry : m.apply(v)) CHECK(entry.is_zero());
        }
    }
}

TEST_CASE("null space of the 3x3 identity is trivial") {
    CHECK(redhom::null_space_basis(RatMatrix::identity(3)).empty());
}

TEST_CASE("null space of the zero 2x3 matrix is the three unit vectors") {
    const auto basis = redhom::null_space_basis(RatMatrix(2, 3));
    REQUIRE(basis.size() == 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) CHECK(basis[i][j] == (i == j ? q(1) : q(0)));
}

TEST_CASE("null space of [[1,1,0]] spans the plane x1 = -x2") {
    const auto basis = redhom::null_space_basis(from_rows({{q(1), q(1), q(0)}}));
    REQUIRE(basis.size() == 2);
    const RatMatrix m = from_rows({{q(1), q(1), q(0)}});
    for (const Vec& v : basis)
        for (const Rational& entry : m.apply(v)) CHECK(entry.is_zero());
    // Free columns 1 and 2, in that order.
    CHECK(basis[0] == Vec{q(-1), q(1), q(0)});
    CHECK(basis[1] == Vec{q(0), q(0), q(1)});
}

TEST_CASE("solve_symmetric on the identity returns the rhs") {
    const Vec rhs = {q(3), q(-1, 2), q(7, 3)};
    CHECK(redhom::solve_symmetric(RatMatrix::identity(3), rhs) == rhs);
}

TEST_CASE("solve_symmetric on diag(2,3) divides componentwise") {
    const RatMatrix g = from_rows({{q(2), q(0)}, {q(0), q(3)}});
    CHECK(redhom::solve_symmetric(g, {q(1), q(1)}) == Vec{q(1, 2), q(1, 3)});
}

TEST_CASE("solve_symmetric on the swap matrix swaps the rhs") {
    const RatMatrix g = from_rows({{q(0), q(1)}, {q(1), q(0)}});
    auto gen = testutil::make_rng(2);
    INFO("seed " << testutil::kSeed << " salt 2");
    for (int trial = 0; trial < 5; ++trial) {
        const Vec rhs = testutil::random_vec(gen, 2);
        const Vec x = redhom::solve_symmetric(g, rhs);
        CHECK(x == Vec{rhs[1], rhs[0]});
        CHECK(g.apply(x) == rhs);
    }
}

TEST_CASE("solve_symmetric rejects singular matrices") {
    CHECK_THROWS_AS(redhom::solve_symmetric(from_rows({{q(1), q(1)}, {q(1), q(1)}}), {q(1), q(0)}),
                    SingularMatrix);
    CHECK_THROWS_AS(redhom::solve_symmetric(RatMatrix(2, 2), {q(0), q(0)}), SingularMatrix);
}

TEST_CASE("inverse round-trips against multiplication") {
    auto gen = testutil::make_rng(3);
    INFO("seed " << testutil::kSeed << " salt 3");
    for (int trial = 0; trial < 5; ++trial) {
        const RatMatrix m = testutil::random_invertible(gen, 3);
        CHECK(m * redhom::inverse(m) == RatMatrix::identity(3));
        CHECK(redhom::inverse(m) * m == RatMatrix::identity(3));
    }
    CHECK_THROWS_AS(redhom::inverse(from_rows({{q(1), q(2)}, {q(2), q(4)}})), SingularMatrix);
}

TEST_CASE("null-space vectors solve m x = 0 exactly and rank + nullity = cols") {
    auto gen = testutil::make_rng(4);
    INFO("seed " << testutil::kSeed << " salt 4");
    std::uniform_int_distribution<std::size_t> dim(1, 5);
    for (int trial = 0; trial < 20; ++trial) {
        const RatMatrix m = testutil::random_matrix(gen, dim(gen), dim(gen));
        const auto basis = redhom::null_space_basis(m);
        CHECK(redhom::rank(m) + basis.size() == m.cols());
        for (const Vec& v : basis)
            for (const Rational& entry : m.apply(v)) CHECK(entry.is_zero());
    }
}

TEST_CASE("rref is idempotent") {
    auto gen = testutil::make_rng(5);
    INFO("seed " << testutil::kSeed << " salt 5");
    for (int trial = 0; trial < 10; ++trial) {
        const RatMatrix m = testutil::random_matrix(gen, 4, 6);
        const auto once = redhom::rref(m);
        const auto twice = redhom::rref(once.r);
        CHECK(once.r == twice.r);
        CHECK(once.pivots == twice.pivots);
    }
}

TEST_CASE("solve_symmetric solutions satisfy g x = rhs exactly") {
    auto gen = testutil::make_rng(6);
    INFO("seed " << testutil::kSeed << " salt 6");
    for (int trial = 0; trial < 10; ++trial) {
        RatMatrix g = testutil::random_matrix(gen, 3, 3);
        g = g + g.transpose(); // symmetric, like every Gram matrix we solve
        if (testutil::det_cofactor(g).is_zero()) continue;
        const Vec rhs = testutil::random_vec(gen, 3);
        CHECK(g.apply(redhom::solve_symmetric(g, rhs)) == rhs);
    }
}

TEST_CASE("independent Bareiss elimination agrees with rref rank") {
    auto gen = testutil::make_rng(7);
    INFO("seed " << testutil::kSeed << " salt 7");
    std::uniform_int_distribution<std::size_t> dim(1, 6);
    for (int trial = 0; trial < 20; ++trial) {
        const RatMatrix m = testutil::random_matrix(gen, dim(gen), dim(gen));
        CHECK(redhom::rank(m) == testutil::bareiss_rank(m));
    }
}
