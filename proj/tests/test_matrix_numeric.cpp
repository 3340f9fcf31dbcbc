#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <string>
#include <vector>

#include "redhom/errors.hpp"
#include "redhom/matrix_numeric.hpp"
#include "redhom/models.hpp"
#include "redhom/rational.hpp"
#include "testutil.hpp"

using redhom::FloatMatrix;
using redhom::Rational;
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

double max_entry_diff(const FloatMatrix& a, const FloatMatrix& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            worst = std::max(worst, std::abs(a.at(i, j) - b.at(i, j)));
    return worst;
}

} // namespace

TEST_CASE("exp of the zero matrix is the identity") {
    const FloatMatrix e = redhom::matrix_exp(FloatMatrix(3, 3));
    CHECK(max_entry_diff(e, FloatMatrix::identity(3)) == 0.0);
}

TEST_CASE("exp of a rotation generator matches cos/sin closed form") {
    const double t = 0.3;
    FloatMatrix a(2, 2);
    a.at(0, 1) = -t;
    a.at(1, 0) = t;
    FloatMatrix expect(2, 2);
    expect.at(0, 0) = std::cos(t);
    expect.at(0, 1) = -std::sin(t);
    expect.at(1, 0) = std::sin(t);
    expect.at(1, 1) = std::cos(t);
    CHECK(max_entry_diff(redhom::matrix_exp(a, 1e-15), expect) < 1e-12);
}

TEST_CASE("exp of a diagonal matrix exponentiates the diagonal") {
    FloatMatrix a(2, 2);
    a.at(0, 0) = 0.7;
    a.at(1, 1) = -1.3;
    const FloatMatrix e = redhom::matrix_exp(a, 1e-15);
    CHECK(std::abs(e.at(0, 0) - std::exp(0.7)) < 1e-13);
    CHECK(std::abs(e.at(1, 1) - std::exp(-1.3)) < 1e-13);
    CHECK(std::abs(e.at(0, 1)) == 0.0);
    CHECK(std::abs(e.at(1, 0)) == 0.0);
}

TEST_CASE("matrix_exp validates its inputs") {
    CHECK_THROWS_AS(redhom::matrix_exp(FloatMatrix(2, 3)), redhom::NonSquare);
    CHECK_THROWS_AS(redhom::matrix_exp(FloatMatrix(2, 2), 0.0), redhom::BadParameter);
    CHECK_THROWS_AS(redhom::matrix_exp(FloatMatrix(2, 2), -1.0), redhom::BadParameter);
}

TEST_CASE("ad_exp_residual is zero at t = 0") {
    for (const std::string name : {"so3", "sl2", "su2", "heis3", "gl:2"}) {
        const redhom::MatrixModel mm = redhom::matrix_model(name);
        const std::size_t n = mm.algebra.dim();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                CHECK(redhom::ad_exp_residual(mm, unit(n, i), unit(n, j), 0.0) < 1e-14);
    }
}

TEST_CASE("conjugation by exp(t e3) rotates e1 like the closed form says") {
    // Both sides must equal cos(t) e1 + sin(t) e2; check the library residual
    // and the closed form against exp(t ad_e3) separately.
    const double t = 0.1;
    CHECK(redhom::ad_exp_residual("so3", unit(3, 2), unit(3, 0), t) < 1e-9);

    const redhom::LieAlgebra g = redhom::generate_model("so3");
    FloatMatrix ad(3, 3);
    const redhom::RatMatrix adr = g.ad(g.basis_vector(2));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) ad.at(i, j) = t * adr.at(i, j).to_double();
    const FloatMatrix e = redhom::matrix_exp(ad, 1e-15);
    CHECK(std::abs(e.at(0, 0) - std::cos(t)) < 1e-13);
    CHECK(std::abs(e.at(1, 0) - std::sin(t)) < 1e-13);
    CHECK(std::abs(e.at(2, 0)) < 1e-15);
}

TEST_CASE("nilpotent conjugation on heis3 gives y + t z to roundoff") {
    // exp(t ad_x) y = y + t [x,y] = y + t z; the series terminates, so the
    // residual is pure float noise.
    for (const double t : {0.5, -2.0, 3.25}) {
        CHECK(redhom::ad_exp_residual("heis3", unit(3, 0), unit(3, 1), t) < 1e-12);
    }
}

TEST_CASE("ad_exp_residual rejects models without realizations") {
    CHECK_THROWS_AS(redhom::matrix_model("e2"), redhom::UnknownModel);
    CHECK_THROWS_AS(redhom::matrix_model("abelian:3"), redhom::UnknownModel);
    CHECK_THROWS_AS(redhom::matrix_model("nope"), redhom::UnknownModel);
}

TEST_CASE("realizations represent the bracket faithfully") {
    // rho([x,y]) = [rho(x), rho(y)] for basis pairs, entrywise to roundoff.
    for (const std::string name : {"so3", "sl2", "su2", "heis3", "gl:2"}) {
        const redhom::MatrixModel mm = redhom::matrix_model(name);
        const std::size_t n = mm.algebra.dim();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const Vec w = mm.algebra.bracket(mm.algebra.basis_vector(i),
                                                 mm.algebra.basis_vector(j));
                FloatMatrix want(mm.rho[0].rows(), mm.rho[0].cols());
                for (std::size_t k = 0; k < n; ++k)
                    if (!w[k].is_zero()) want = want + mm.rho[k] * w[k].to_double();
                const FloatMatrix got = mm.rho[i] * mm.rho[j] - mm.rho[j] * mm.rho[i];
                CHECK(max_entry_diff(got, want) < 1e-14);
            }
    }
}

TEST_CASE("identity holds within 1e-8 on all basis pairs across shipped models") {
    for (const std::string name : {"so3", "sl2", "su2", "heis3", "gl:2"}) {
        const redhom::MatrixModel mm = redhom::matrix_model(name);
        const std::size_t n = mm.algebra.dim();
        for (const double t : {1.0, -1.0, 0.1, -0.1, 0.01, -0.01})
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    INFO(name << " t=" << t << " x=e" << i + 1 << " y=e" << j + 1);
                    CHECK(redhom::ad_exp_residual(mm, unit(n, i), unit(n, j), t) < 1e-8);
                }
    }
}

TEST_CASE("exp(A) exp(-A) returns to the identity within 1e-10") {
    for (const std::string name : {"so3", "sl2", "su2", "heis3", "gl:2"}) {
        const redhom::MatrixModel mm = redhom::matrix_model(name);
        for (const FloatMatrix& a : mm.rho) {
            if (a.norm_inf() > 2.0) continue;
            const FloatMatrix prod = redhom::matrix_exp(a) * redhom::matrix_exp(a * -1.0);
            CHECK(max_entry_diff(prod, FloatMatrix::identity(a.rows())) < 1e-10);
        }
    }
}

TEST_CASE("transpose commutes with the exponential within 1e-12") {
    auto gen = testutil::make_rng(60);
    INFO("seed " << testutil::kSeed << " salt 60");
    std::uniform_real_distribution<double> entry(-1.0, 1.0);
    for (int trial = 0; trial < 5; ++trial) {
        FloatMatrix a(3, 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) a.at(i, j) = entry(gen);
        CHECK(max_entry_diff(redhom::matrix_exp(a).transpose(),
                             redhom::matrix_exp(a.transpose())) < 1e-12);
    }
}

TEST_CASE("residuals stay small on random rational coordinate vectors") {
    auto gen = testutil::make_rng(61);
    INFO("seed " << testutil::kSeed << " salt 61");
    for (const std::string name : {"so3", "sl2", "su2", "heis3"}) {
        const redhom::MatrixModel mm = redhom::matrix_model(name);
        const std::size_t n = mm.algebra.dim();
        for (int trial = 0; trial < 3; ++trial) {
            const Vec x = testutil::random_vec(gen, n), y = testutil::random_vec(gen, n);
            CHECK(redhom::ad_exp_residual(mm, x, y, 0.1) < 1e-8);
        }
    }
}
