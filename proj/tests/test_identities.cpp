#include <catch2/catch_amalgamated.hpp>

#include "redhom/connections.hpp"
#include "redhom/errors.hpp"
#include "redhom/identities.hpp"
#include "redhom/lie_algebra.hpp"
#include "redhom/models.hpp"
#include "redhom/reductive.hpp"
#include "testutil.hpp"

using redhom::AlphaTensor;
using redhom::LieAlgebra;
using redhom::Rational;
using redhom::Tensor3;
using redhom::Vec;

namespace {

Rational q(long long num, long long den = 1) {
    return Rational(redhom::BigInt(num), redhom::BigInt(den));
}

Vec unit(std::size_t n, std::size_t i) {
    Vec v(n);
    v[i] = q(1);
    return v;
}

// Direct associativity sweep, no report plumbing: alpha(alpha(ei,ej),ek) =
// alpha(ei,alpha(ej,ek)) on every basis triple.
bool associative_direct(const AlphaTensor& a) {
    const std::size_t n = a.n;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const Vec lhs = redhom::alpha_apply(
                    a, redhom::alpha_apply(a, unit(n, i), unit(n, j)), unit(n, k));
                const Vec rhs = redhom::alpha_apply(
                    a, unit(n, i), redhom::alpha_apply(a, unit(n, j), unit(n, k)));
                if (lhs != rhs) return false;
            }
    return true;
}

// Multiplication tensor of the 2x2 real matrix algebra on the gl:2 model
// basis E11,E12,E21,E22: Eab Ecd = delta_bc Ead.
AlphaTensor gl2_multiplication() {
    AlphaTensor a(4);
    const auto idx = [](std::size_t r, std::size_t c) { return r * 2 + c; };
    for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t s = 0; s < 2; ++s)
            for (std::size_t t = 0; t < 2; ++t)
                for (std::size_t u = 0; u < 2; ++u)
                    if (s == t) a.at(idx(r, s), idx(t, u), idx(r, u)) = q(1);
    return a;
}

} // namespace

TEST_CASE("associator of the zero tensor vanishes") {
    const AlphaTensor a(3);
    auto gen = testutil::make_rng(40);
    INFO("seed " << testutil::kSeed << " salt 40");
    for (int trial = 0; trial < 5; ++trial) {
        const Vec x = testutil::random_vec(gen, 3), y = testutil::random_vec(gen, 3),
                  z = testutil::random_vec(gen, 3);
        for (const Rational& entry : redhom::associator(a, x, y, z)) CHECK(entry.is_zero());
    }
}

TEST_CASE("matrix multiplication on the gl:2 basis has zero associator") {
    const AlphaTensor a = gl2_multiplication();
    CHECK(associative_direct(a));
    auto gen = testutil::make_rng(41);
    INFO("seed " << testutil::kSeed << " salt 41");
    for (int trial = 0; trial < 5; ++trial) {
        const Vec x = testutil::random_vec(gen, 4), y = testutil::random_vec(gen, 4),
                  z = testutil::random_vec(gen, 4);
        for (const Rational& entry : redhom::associator(a, x, y, z)) CHECK(entry.is_zero());
    }
    CHECK(redhom::identity_report(a).associative);
}

TEST_CASE("so3 bracket associator at (e1,e2,e1) vanishes by flexibility") {
    const LieAlgebra g = redhom::generate_model("so3");
    const AlphaTensor a = g.structure_tensor();
    // [[e1,e2],e1] - [e1,[e2,e1]] = [e3,e1] + [e1,e3] = 0.
    const Vec e1 = unit(3, 0), e2 = unit(3, 1);
    for (const Rational& entry : redhom::associator(a, e1, e2, e1)) CHECK(entry.is_zero());
    // But (e1,e2,e3) does not vanish: [[e1,e2],e3] - [e1,[e2,e3]] = -[e1,e1]... both
    // terms: [e3,e3] = 0 minus [e1,e1] = 0; pick (e1,e1,e2) instead:
    // [[e1,e1],e2] - [e1,[e1,e2]] = -[e1,e3] = e2.
    const Vec w = redhom::associator(a, e1, e1, e2);
    CHECK(w == unit(3, 1));
}

TEST_CASE("associator rejects mismatched vector lengths") {
    CHECK_THROWS_AS(redhom::associator(AlphaTensor(3), unit(2, 0), unit(3, 0), unit(3, 0)),
                    redhom::DimensionMismatch);
}

TEST_CASE("heis3 bracket tensor is left-symmetric and lie-admissible") {
    const AlphaTensor a = redhom::generate_model("heis3").structure_tensor();
    const auto rep = redhom::identity_report(a);
    CHECK(rep.left_symmetric);
    CHECK(rep.lie_admissible);
    // The left-symmetry defect of a bracket tensor is [[x,y],z], which dies
    // in a 2-step nilpotent algebra; confirm the defect really is zero.
    const LieAlgebra g = redhom::generate_model("heis3");
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t k = 0; k < 3; ++k) {
                const Vec dbl =
                    g.bracket(g.bracket(g.basis_vector(i), g.basis_vector(j)), g.basis_vector(k));
                for (const Rational& entry : dbl) CHECK(entry.is_zero());
            }
}

TEST_CASE("so3 bracket tensor is flexible but not left-symmetric or associative") {
    const AlphaTensor a = redhom::generate_model("so3").structure_tensor();
    const auto rep = redhom::identity_report(a);
    CHECK(rep.flexible);
    CHECK(rep.lie_admissible);
    CHECK(rep.ad_derivation);
    CHECK_FALSE(rep.left_symmetric);
    CHECK_FALSE(rep.associative);
    CHECK_FALSE(rep.left_symmetric_witness.empty());
    CHECK_FALSE(rep.associative_witness.empty());
    CHECK_FALSE(associative_direct(a));
}

TEST_CASE("zero tensor satisfies every identity") {
    const auto rep = redhom::identity_report(AlphaTensor(3));
    CHECK(rep.lie_admissible);
    CHECK(rep.flexible);
    CHECK(rep.left_symmetric);
    CHECK(rep.associative);
    CHECK(rep.ad_derivation);
}

TEST_CASE("report flags agree with direct associativity checking on random tensors") {
    auto gen = testutil::make_rng(42);
    INFO("seed " << testutil::kSeed << " salt 42");
    std::uniform_int_distribution<std::size_t> dim(1, 3);
    for (int trial = 0; trial < 25; ++trial) {
        const AlphaTensor a = testutil::random_tensor3(gen, dim(gen));
        CHECK(redhom::identity_report(a).associative == associative_direct(a));
    }
}

TEST_CASE("mu = 1/2 reduces the su(2) family to half the bracket") {
    const auto [g, a] = redhom::su_n_mu_algebra(2, q(0));
    const Tensor3 c = g.structure_tensor();
    REQUIRE(a.n == 3);
    for (std::size_t f = 0; f < a.v.size(); ++f) CHECK(a.v[f] == c.v[f] * q(1, 2));
}

TEST_CASE("b = 1 member is flexible and lie-admissible with bracket antisymmetrization") {
    const auto [g, a] = redhom::su_n_mu_algebra(2, q(1));
    const auto rep = redhom::identity_report(a);
    CHECK(rep.flexible);
    CHECK(rep.lie_admissible);
    CHECK(rep.ad_derivation);
    // alpha(X,Y) - alpha(Y,X) = (mu + mubar)[X,Y] = [X,Y] exactly.
    CHECK(redhom::alpha_minus(a) == g.structure_tensor());
}

TEST_CASE("b = 1 member annihilates squares: alpha(X1,X1) = 0") {
    // Oracle in exact Gaussian arithmetic: X1^2 = diag(i,-i)^2 = -1, and the
    // trace correction subtracts tr(X1^2)/2 * 1 = -1, so the symmetric part
    // cancels; the antisymmetric part of (X1,X1) is zero by definition.
    const auto [g, a] = redhom::su_n_mu_algebra(2, q(1));
    for (std::size_t k = 0; k < 3; ++k) CHECK(a.at(0, 0, k) == q(0));
    // Same for X2 and X3, whose squares are also -1.
    for (std::size_t i = 1; i < 3; ++i)
        for (std::size_t k = 0; k < 3; ++k) CHECK(a.at(i, i, k) == q(0));
}

TEST_CASE("su_n_mu_algebra rejects n other than 2") {
    CHECK_THROWS_AS(redhom::su_n_mu_algebra(3, q(1)), redhom::BadParameter);
}

TEST_CASE("for lie-admissible alpha flexibility equals the ad-derivation property") {
    // Two-way implication over bracket tensors of the corpus and the mu-family.
    std::vector<AlphaTensor> samples;
    for (const std::string& name : testutil::model_corpus())
        samples.push_back(redhom::generate_model(name).structure_tensor());
    for (long long b : {0LL, 1LL, -2LL, 3LL})
        samples.push_back(redhom::su_n_mu_algebra(2, q(b)).second);
    auto gen = testutil::make_rng(43);
    INFO("seed " << testutil::kSeed << " salt 43");
    std::uniform_int_distribution<std::size_t> dim(1, 3);
    int lie_admissible_seen = 0;
    for (int trial = 0; trial < 40; ++trial) samples.push_back(testutil::random_tensor3(gen, dim(gen)));
    for (const AlphaTensor& a : samples) {
        const auto rep = redhom::identity_report(a);
        if (!rep.lie_admissible) continue;
        ++lie_admissible_seen;
        CHECK(rep.flexible == rep.ad_derivation);
    }
    CHECK(lie_admissible_seen >= 14); // corpus + mu-family all qualify
}

TEST_CASE("flexible together with left-symmetric is exactly associative") {
    std::vector<AlphaTensor> samples;
    for (const std::string& name : testutil::model_corpus())
        samples.push_back(redhom::generate_model(name).structure_tensor());
    samples.push_back(gl2_multiplication());
    samples.push_back(AlphaTensor(2));
    auto gen = testutil::make_rng(44);
    INFO("seed " << testutil::kSeed << " salt 44");
    std::uniform_int_distribution<std::size_t> dim(1, 3);
    for (int trial = 0; trial < 40; ++trial) samples.push_back(testutil::random_tensor3(gen, dim(gen)));
    for (const AlphaTensor& a : samples) {
        const auto rep = redhom::identity_report(a);
        CHECK((rep.flexible && rep.left_symmetric) == rep.associative);
        CHECK(rep.associative == associative_direct(a));
    }
}

TEST_CASE("left-symmetric tensors from upper-triangular products are lie-admissible") {
    // alpha built from an associative algebra of upper-triangular 2x2
    // matrices is associative, hence left-symmetric; left_symmetric must
    // imply lie_admissible on these and on randomized variants.
    AlphaTensor tri(3); // basis E11, E12, E22
    // E11*E11=E11, E11*E12=E12, E12*E22=E12, E22*E22=E22.
    tri.at(0, 0, 0) = q(1);
    tri.at(0, 1, 1) = q(1);
    tri.at(1, 2, 1) = q(1);
    tri.at(2, 2, 2) = q(1);
    const auto rep = redhom::identity_report(tri);
    CHECK(rep.associative);
    CHECK(rep.left_symmetric);
    CHECK(rep.lie_admissible);

    // Any tensor that reports left_symmetric must report lie_admissible.
    auto gen = testutil::make_rng(45);
    INFO("seed " << testutil::kSeed << " salt 45");
    std::uniform_int_distribution<std::size_t> dim(1, 3);
    int left_symmetric_seen = 0;
    for (int trial = 0; trial < 60; ++trial) {
        AlphaTensor a = testutil::random_tensor3(gen, dim(gen));
        auto r = redhom::identity_report(a);
        if (!r.left_symmetric) {
            // Symmetrize the associator defect away when possible: skip.
            continue;
        }
        ++left_symmetric_seen;
        CHECK(r.lie_admissible);
    }
    // dim-1 random tensors are always left-symmetric, so the sample is
    // nonempty for this seed.
    CHECK(left_symmetric_seen > 0);
}

TEST_CASE("alpha_minus doubles the antisymmetric part") {
    auto gen = testutil::make_rng(46);
    INFO("seed " << testutil::kSeed << " salt 46");
    for (int trial = 0; trial < 10; ++trial) {
        const AlphaTensor a = testutil::random_tensor3(gen, 3);
        const Tensor3 minus = redhom::alpha_minus(a);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                for (std::size_t k = 0; k < 3; ++k)
                    CHECK(minus.at(i, j, k) == a.at(i, j, k) - a.at(j, i, k));
    }
}

TEST_CASE("mu-family reports match over several b values") {
    for (long long b : {0LL, 1LL, -2LL}) {
        const auto [g, a] = redhom::su_n_mu_algebra(2, q(b));
        const auto rep = redhom::identity_report(a);
        INFO("b = " << b);
        CHECK(rep.flexible);
        CHECK(rep.lie_admissible);
        CHECK(rep.ad_derivation);
        CHECK(redhom::alpha_minus(a) == g.structure_tensor());
    }
}
