// SPDX-License-Identifier: MIT
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "padiclab/error.hpp"
#include "padiclab/hubbard.hpp"
#include "padiclab/qcalc.hpp"

using namespace padiclab;
using namespace padiclab::hubbard;

namespace {

Mat4 unit(int r, int s) {
    Mat4 m = Mat4::Zero();
    m(r, s) = 1.0;
    return m;
}

double maxabs(const Eigen::MatrixXd& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("X operators and their multiplication law") {
    CHECK(x_operator(Up, Empty)(1, 0) == 1.0);
    CHECK(maxabs(x_operator(Up, Empty)) == 1.0);
    CHECK_THROWS_AS(x_operator(4, 0), Error);
    for (int r = 0; r < 4; ++r)
        for (int s = 0; s < 4; ++s)
            for (int s2 = 0; s2 < 4; ++s2)
                for (int t = 0; t < 4; ++t) {
                    Mat4 want = s == s2 ? x_operator(r, t) : Mat4::Zero();
                    REQUIRE((x_operator(r, s) * x_operator(s2, t) - want).cwiseAbs().maxCoeff() == 0.0);
                }
    CHECK(x_operator(Empty, Empty) * x_operator(Empty, Up) == x_operator(Empty, Up));
    CHECK((x_operator(Up, Empty) * x_operator(Up, Empty)).isZero(0));
}

TEST_CASE("creation and annihilation matrices") {
    // Printed in the basis |0>, |+>, |->, |2>.
    Mat4 up_dag = unit(1, 0) - unit(3, 2);
    Mat4 down_dag = unit(2, 0) + unit(3, 1);
    CHECK(creation_annihilation(Spin::Up, true) == up_dag);
    CHECK(creation_annihilation(Spin::Down, true) == down_dag);
    CHECK(creation_annihilation(Spin::Up, false) == up_dag.transpose());
    CHECK(creation_annihilation(Spin::Down, false) == down_dag.transpose());

    const Mat4 I = Mat4::Identity();
    for (Spin a : {Spin::Up, Spin::Down})
        for (Spin b : {Spin::Up, Spin::Down}) {
            Mat4 ca = creation_annihilation(a, false), cb = creation_annihilation(b, false);
            Mat4 cbd = creation_annihilation(b, true);
            REQUIRE(ca * cbd + cbd * ca == (a == b ? I : Mat4::Zero()));
            REQUIRE((ca * cb + cb * ca).isZero(0));
        }
}

TEST_CASE("gamma5") {
    CHECK(gamma5() == Eigen::Vector4d(1, -1, -1, 1).asDiagonal().toDenseMatrix());
    CHECK(gamma5_identity_residual() == 0.0);
    CHECK(gamma5() * gamma5() == Mat4::Identity());
}

TEST_CASE("operator classification") {
    auto c = classify_operators();
    CHECK(c.fermionic.size() == 8);
    CHECK(c.bosonic.size() == 6);
    CHECK(c.gamma5_consistent);
    auto has = [](const std::vector<SiteOperator>& v, const std::string& label) {
        return std::any_of(v.begin(), v.end(), [&](const SiteOperator& o) { return o.label == label; });
    };
    CHECK(has(c.fermionic, "X^{0+}"));
    CHECK(has(c.bosonic, "X^{+-}"));
    for (const auto& op : c.fermionic) REQUIRE((gamma5() * op.matrix + op.matrix * gamma5()).isZero(0));
    for (const auto& op : c.bosonic) REQUIRE((gamma5() * op.matrix - op.matrix * gamma5()).isZero(0));
}

TEST_CASE("single-site spectrum") {
    oracle::Gen g(1);
    for (int i = 0; i < 20; ++i) {
        double W = g.uniform(-2, 2), U = g.uniform(-3, 3), mu = g.uniform(-2, 2);
        auto ev = spectrum(hamiltonian_dense(1, W, U, mu));
        std::vector<double> want{0.0, -mu, -mu, U - 2 * mu};
        std::sort(want.begin(), want.end());
        for (int k = 0; k < 4; ++k) REQUIRE(ev(k) == doctest::Approx(want[static_cast<std::size_t>(k)]).epsilon(1e-14));
    }
}

TEST_CASE("non-interacting chains match the free-fermion spectrum") {
    for (int sites : {2, 3}) {
        for (double W : {1.0, 0.35}) {
            const double mu = 0.4;
            // Single-particle levels of the open chain: -2W cos(k pi / (L+1)) - mu.
            std::vector<double> modes;
            for (int k = 1; k <= sites; ++k) {
                double e = -2 * W * std::cos(k * std::acos(-1.0) / (sites + 1)) - mu;
                modes.push_back(e);
                modes.push_back(e);
            }
            auto want = oracle::fock_energies(modes);
            auto H = hamiltonian_dense(sites, W, 0.0, mu);
            REQUIRE(maxabs(H - H.transpose()) == 0.0);
            auto ev = spectrum(H);
            REQUIRE(static_cast<std::size_t>(ev.size()) == want.size());
            for (std::size_t k = 0; k < want.size(); ++k) REQUIRE(std::abs(ev(static_cast<Eigen::Index>(k)) - want[k]) < 1e-10);
        }
    }
    CHECK_THROWS_AS(hamiltonian_dense(0, 1, 1, 0), Error);
    CHECK_THROWS_AS(hamiltonian_dense(5, 1, 1, 0), Error);
}

TEST_CASE("bosonic bracket") {
    auto zero = scs_bracket({}, {});
    CHECK(zero.ket == std::array<double, 4>{1, 0, 0, 0});
    CHECK(zero.norm == 1.0);
    auto e1 = scs_bracket({1.0, 0, 0}, {});
    CHECK(e1.ket[0] == doctest::Approx(std::exp(1.0)).epsilon(1e-15));
    oracle::Gen g(99);
    for (int i = 0; i < 100; ++i) {
        grassmann::Field3 E{g.uniform(-3, 3), g.uniform(-3, 3), g.uniform(-3, 3)};
        grassmann::Field3 h{g.uniform(-3, 3), g.uniform(-3, 3), g.uniform(-3, 3)};
        REQUIRE(std::abs(scs_bracket(E, h).norm - 1.0) < 1e-12);
        // Ket against the Grassmann exponential with all odd entries zero.
        auto X = grassmann::grassmann_exp(grassmann::scs_generator(E, h, {}));
        auto b = scs_bracket(E, h);
        for (int c = 0; c < 4; ++c)
            REQUIRE(std::abs(X(c, 0).scalar_part().real() - b.ket[static_cast<std::size_t>(c)]) < 1e-11 * std::max(1.0, std::abs(b.ket[static_cast<std::size_t>(c)])));
    }
}

TEST_CASE("operator symbols") {
    auto s0 = op_symbols({Complex(0.4), Complex(0.2), Complex(0.3)}, {});
    CHECK(std::abs(s0.Sq_z - 1.0) < 1e-15);
    for (double hz : {0.2, 1.1}) {
        auto s = op_symbols({}, {Complex(hz), {}, {}});
        CHECK(std::abs(s.Sq_z - std::cosh(2 * hz)) < 1e-13);
    }
    auto d = op_symbols({Complex(0.8), {}, {}}, {});
    CHECK(std::abs(d.E11 - std::exp(0.8)) < 1e-14);
    CHECK(std::abs(d.E22 - std::exp(-0.8)) < 1e-14);
    CHECK(std::abs(d.E12) == 0.0);
    CHECK(std::abs(d.E21) == 0.0);

    // Shared f4 with the real special function.
    auto m = op_symbols({Complex(0.6), Complex(0.5), Complex(0.4)}, {Complex(0.3), Complex(0.2), Complex(0.1)});
    double E = std::sqrt(0.36 + 0.2), h = std::sqrt(0.09 + 0.02);
    CHECK(std::abs(m.f4 - qcalc::f4(E, h)) < 1e-12);

    // The alpha mix is linear.
    Bilinears bil{Complex(0.1, 0.2), Complex(-0.3), Complex(0.5)};
    auto half = op_symbols({Complex(0.6)}, {Complex(0.3), Complex(0.2), Complex(0.1)}, 0.5, bil);
    CHECK(std::abs(half.S_z - (0.5 * half.Sq_z + 0.5 * bil.z)) < 1e-14);
    CHECK(std::abs(half.S_plus - (0.5 * half.Sq_plus + 0.5 * bil.plus)) < 1e-14);

    // Complex fields, including the purely imaginary invariant E = i pi / 2.
    auto c = op_symbols({Complex(0, std::acos(-1.0) / 2)}, {});
    CHECK(std::isfinite(c.E11.real()));
    CHECK(std::abs(c.E11 - std::exp(Complex(0, std::acos(-1.0) / 2))) < 1e-14);
    CHECK_THROWS_AS(op_symbols({}, {}, 1.5), Error);
}
