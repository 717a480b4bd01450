// SPDX-License-Identifier: MIT
#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <unsupported/Eigen/MatrixFunctions>

#include "oracles.hpp"
#include "padiclab/error.hpp"
#include "padiclab/grassmann.hpp"

using namespace padiclab;
using namespace padiclab::grassmann;

namespace {

Element random_element(oracle::Gen& g, int terms) {
    Element e;
    for (int i = 0; i < terms; ++i) e[static_cast<std::uint32_t>(g.integer(0, 255))] += Complex(g.uniform(-1, 1), g.uniform(-1, 1));
    return e;
}

double distance(const Element& a, const Element& b) { return (a - b).norm1(); }

Field3 random_field(oracle::Gen& g, double scale) {
    return {g.uniform(-scale, scale), g.uniform(-scale, scale), g.uniform(-scale, scale)};
}

using Mat = Eigen::MatrixXd;

Mat bosonic(const Field3& E, const Field3& h) {
    Mat B = Mat::Zero(4, 4);
    B(0, 0) = E.z;
    B(0, 3) = E.plus;
    B(3, 0) = E.minus;
    B(3, 3) = -E.z;
    B(1, 1) = h.z;
    B(1, 2) = h.plus;
    B(2, 1) = h.minus;
    B(2, 2) = -h.z;
    return B;
}

// Position and sign of chi_k in the generator.
Mat odd_unit(int k) {
    Mat F = Mat::Zero(4, 4);
    if (k == 1) F(1, 0) = 1;
    if (k == 2) F(2, 0) = 1;
    if (k == 3) F(3, 1) = -1;
    if (k == 4) F(3, 2) = 1;
    return F;
}

// Ordered integrals of exp(B) with the given insertions, read off the
// top-right block of an upper block-bidiagonal exponential.
Eigen::Vector4d ordered_insertions(const Mat& B, const std::vector<Mat>& inserts) {
    const int n = static_cast<int>(inserts.size()) + 1;
    Mat big = Mat::Zero(4 * n, 4 * n);
    for (int i = 0; i < n; ++i) big.block(4 * i, 4 * i, 4, 4) = B;
    for (int i = 0; i + 1 < n; ++i) big.block(4 * i, 4 * (i + 1), 4, 4) = inserts[static_cast<std::size_t>(i)];
    Mat e = big.exp();
    return e.block(0, 4 * (n - 1), 4, 4).col(0);
}

Eigen::Matrix2d block_exp(double z, double plus, double minus) {
    Eigen::Matrix2d M;
    M << z, plus, minus, -z;
    const double x = z * z + plus * minus;
    double c, s;
    if (x > 0) {
        double e = std::sqrt(x);
        c = std::cosh(e);
        s = std::sinh(e) / e;
    } else if (x < 0) {
        double e = std::sqrt(-x);
        c = std::cos(e);
        s = std::sin(e) / e;
    } else {
        c = 1;
        s = 1;
    }
    return c * Eigen::Matrix2d::Identity() + s * M;
}

}  // namespace

TEST_CASE("generators anticommute and square to zero") {
    for (int a = 0; a < kGenerators; ++a) {
        for (int b = 0; b < kGenerators; ++b) {
            Element x = Element::generator(a), y = Element::generator(b);
            REQUIRE(distance(x * y, -(y * x)) == 0.0);
            if (a == b) REQUIRE((x * x).is_zero());
        }
    }
    CHECK(chi(1) == 0);
    CHECK(chi_star(4) == 7);
    CHECK_THROWS_AS(chi(5), Error);
}

TEST_CASE("reorder sign matches a bubble-sort count") {
    for (std::uint32_t a = 0; a < 256; ++a)
        for (std::uint32_t b = 0; b < 256; ++b) REQUIRE(reorder_sign(a, b) == oracle::concat_sign(a, b));
}

TEST_CASE("algebra laws on random elements") {
    oracle::Gen g(17);
    for (int i = 0; i < 60; ++i) {
        Element a = random_element(g, 12), b = random_element(g, 12), c = random_element(g, 12);
        double scale = a.norm1() * b.norm1() * c.norm1();
        REQUIRE(distance((a * b) * c, a * (b * c)) < 1e-13 * scale);
        REQUIRE(distance(a * (b + c), a * b + a * c) < 1e-13 * a.norm1() * (b.norm1() + c.norm1()));
        REQUIRE((a * b).norm1() <= a.norm1() * b.norm1() * (1 + 1e-13));
        REQUIRE(distance(a.conj().conj(), a) == 0.0);
        REQUIRE(distance((a * b).conj(), b.conj() * a.conj()) < 1e-13 * a.norm1() * b.norm1());
    }
    Element x = Element::generator(chi(1)) * Element::generator(chi(2));
    CHECK(x.grade(2).norm1() == 1.0);
    CHECK(x.grade(1).is_zero());
    CHECK(Element::generator(chi(1)).conj()[1U << chi_star(1)] == Complex(1.0));
}

TEST_CASE("exponential of simple supermatrices") {
    auto I = grassmann_exp(SuperMatrix{});
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) REQUIRE(distance(I(i, j), Element::scalar(i == j ? 1.0 : 0.0)) == 0.0);

    // Nilpotent bosonic part: the series stops after the square.
    SuperMatrix N;
    N(1, 0) = Element::scalar(2.0);
    N(2, 1) = Element::scalar(3.0);
    auto e = grassmann_exp(N);
    CHECK(e(2, 0).scalar_part().real() == doctest::Approx(3.0));
    CHECK(e(1, 0).scalar_part().real() == doctest::Approx(2.0));

    oracle::Gen g(77);
    for (int i = 0; i < 10; ++i) {
        auto M = scs_generator(random_field(g, 2), random_field(g, 2));
        auto prod = grassmann_exp(M) * grassmann_exp(M.scaled(-1.0));
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) REQUIRE(distance(prod(r, c), Element::scalar(r == c ? 1.0 : 0.0)) < 1e-11);
    }
}

TEST_CASE("bosonic blocks match the closed forms") {
    oracle::Gen g(5);
    const std::array<Element, 4> no_odd{};
    for (int i = 0; i < 100; ++i) {
        Field3 E = random_field(g, 2.5), h = random_field(g, 2.5);
        auto X = grassmann_exp(scs_generator(E, h, no_odd));
        auto eb = block_exp(E.z, E.plus, E.minus), hb = block_exp(h.z, h.plus, h.minus);
        const int ei[2] = {0, 3}, hi[2] = {1, 2};
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) {
                REQUIRE(std::abs(X(ei[r], ei[c]).scalar_part() - eb(r, c)) < 1e-12 * std::max(1.0, std::abs(eb(r, c))));
                REQUIRE(std::abs(X(hi[r], hi[c]).scalar_part() - hb(r, c)) < 1e-12 * std::max(1.0, std::abs(hb(r, c))));
                REQUIRE(X(ei[r], hi[c]).is_zero(1e-15));
            }
    }
    Field3 Ez{0.7, 0, 0};
    auto ket = scs_ket(Ez, Field3{});
    CHECK(ket[0].scalar_part().real() == doctest::Approx(std::exp(0.7)).epsilon(1e-14));
}

TEST_CASE("first- and second-order ket terms agree with ordered-insertion integrals") {
    oracle::Gen g(31);
    for (int i = 0; i < 20; ++i) {
        Field3 E = random_field(g, 1.5), h = random_field(g, 1.5);
        auto ket = scs_ket(E, h);
        Mat B = bosonic(E, h);
        for (int k = 1; k <= 4; ++k) {
            auto v = ordered_insertions(B, {odd_unit(k)});
            for (int c = 0; c < 4; ++c)
                REQUIRE(std::abs(ket[static_cast<std::size_t>(c)][1U << chi(k)] - v(c)) < 1e-12 * std::max(1.0, std::abs(v(c))));
        }
        for (int a = 1; a <= 4; ++a)
            for (int b = a + 1; b <= 4; ++b) {
                // chi_a before chi_b in the product is the ascending order.
                auto v = ordered_insertions(B, {odd_unit(a), odd_unit(b)}) - ordered_insertions(B, {odd_unit(b), odd_unit(a)});
                std::uint32_t mask = (1U << chi(a)) | (1U << chi(b));
                for (int c = 0; c < 4; ++c)
                    REQUIRE(std::abs(ket[static_cast<std::size_t>(c)][mask] - v(c)) < 1e-12 * std::max(1.0, std::abs(v(c))));
            }
        CHECK(ket_structure_report(E, h).empty());
    }
}

TEST_CASE("case E = h = 0 reports the printed fourth component") {
    auto ket = scs_ket(Field3{}, Field3{});
    // Direct exponential: (-x3 x1 + x4 x2) / 2 = (x1 x3 - x2 x4) / 2.
    CHECK(ket[3][(1U << chi(1)) | (1U << chi(3))] == Complex(0.5));
    CHECK(ket[3][(1U << chi(2)) | (1U << chi(4))] == Complex(-0.5));
    CHECK(ket[3][(1U << chi(1)) | (1U << chi(2))] == Complex(0.0));
    auto report = ket_structure_report(Field3{}, Field3{});
    REQUIRE(report.size() == 1);
    CHECK(report[0].find("2 x2 x1") != std::string::npos);
}

TEST_CASE("element formatting") {
    Element e = Element::scalar(2.0) + Element::generator(chi(1)) * Element::generator(chi_star(2)) * Complex(-0.5);
    auto s = e.to_string();
    CHECK(s.find("x1") != std::string::npos);
    CHECK(s.find("x2*") != std::string::npos);
    CHECK(Element{}.to_string() == "0");
}
