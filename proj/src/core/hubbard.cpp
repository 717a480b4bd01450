// SPDX-License-Identifier: MIT
#include "padiclab/hubbard.hpp"

#include <cmath>

#include "padiclab/error.hpp"
#include "padiclab/qcalc.hpp"

namespace padiclab::hubbard {

namespace {

Eigen::MatrixXd kron(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
    Eigen::MatrixXd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

// c_{site, sigma} on the chain, with gamma5 strings on the sites to its left.
Eigen::MatrixXd chain_operator(int sites, int site, const Mat4& local) {
    Eigen::MatrixXd out = Eigen::MatrixXd::Identity(1, 1);
    for (int i = 0; i < sites; ++i) {
        Eigen::MatrixXd factor = i < site ? Eigen::MatrixXd(gamma5()) : (i == site ? Eigen::MatrixXd(local) : Eigen::MatrixXd(Mat4::Identity()));
        out = kron(out, factor);
    }
    return out;
}

// cosh(sqrt(x)) and sinh(sqrt(x))/sqrt(x) for complex x.
std::pair<Complex, Complex> ch_shc(Complex x) {
    if (std::abs(x) < 1e-6) return {1.0 + x / 2.0 + x * x / 24.0, 1.0 + x / 6.0 + x * x / 120.0};
    Complex r = std::sqrt(x);
    return {std::cosh(r), std::sinh(r) / r};
}

// Divided difference of g(y) = sqrt(y) sinh(sqrt(y)) between a and b.
Complex f4_complex(Complex a, Complex b) {
    const double scale = std::max({1.0, std::abs(a), std::abs(b)});
    if (std::abs(a - b) > 1e-4 * scale) {
        auto g = [](Complex y) {
            Complex r = std::sqrt(y);
            return r * std::sinh(r);
        };
        return (g(a) - g(b)) / (a - b);
    }
    // sum_k h_k(a, b) / (2k+1)!, h_k the complete homogeneous polynomial
    Complex sum = 0.0, hk = 1.0, apow = 1.0;
    double fact = 1.0;
    for (int k = 0; k < 400; ++k) {
        if (k > 0) {
            apow *= a;
            hk = hk * b + apow;
            fact *= static_cast<double>(2 * k) * static_cast<double>(2 * k + 1);
        }
        Complex term = hk / fact;
        sum += term;
        if (k > 4 && std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return sum;
}

}  // namespace

std::string state_label(int s) {
    switch (s) {
        case Empty: return "0";
        case Up: return "+";
        case Down: return "-";
        case Double: return "2";
        default: fail(ErrorCode::InvalidArgument, "state index must be in 0..3");
    }
}

int particle_number(int s) {
    require(s >= 0 && s <= 3, "state index must be in 0..3");
    return s == Empty ? 0 : (s == Double ? 2 : 1);
}

Mat4 x_operator(int r, int s) {
    require(r >= 0 && r < 4 && s >= 0 && s < 4, "X-operator indices must be in 0..3");
    Mat4 m = Mat4::Zero();
    m(r, s) = 1.0;
    return m;
}

Mat4 creation_annihilation(Spin sigma, bool dagger) {
    Mat4 up = x_operator(Up, Empty) - x_operator(Double, Down);
    Mat4 down = x_operator(Down, Empty) + x_operator(Double, Up);
    Mat4 c = sigma == Spin::Up ? up : down;
    return dagger ? c : Mat4(c.transpose());
}

Mat4 gamma5() { return Eigen::Vector4d(1, -1, -1, 1).asDiagonal(); }

double gamma5_identity_residual() {
    Mat4 a = x_operator(Empty, Empty) - x_operator(Double, Double);
    Mat4 b = x_operator(Up, Up) - x_operator(Down, Down);
    return (a * a - b * b - gamma5()).cwiseAbs().maxCoeff();
}

Classification classify_operators() {
    auto X = [](int r, int s) { return SiteOperator{"X^{" + state_label(r) + state_label(s) + "}", x_operator(r, s)}; };
    std::vector<SiteOperator> all{
        X(Empty, Up), X(Empty, Down), X(Up, Empty), X(Down, Empty),
        X(Up, Double), X(Down, Double), X(Double, Up), X(Double, Down),
        X(Up, Down), X(Down, Up),
        {"X^{++}-X^{--}", x_operator(Up, Up) - x_operator(Down, Down)},
        X(Empty, Double), X(Double, Empty),
        {"X^{00}-X^{22}", x_operator(Empty, Empty) - x_operator(Double, Double)},
    };
    Classification out;
    out.gamma5_consistent = true;
    const Mat4 g = gamma5();
    for (auto& op : all) {
        // all nonzero entries of a site operator above share one number change
        int change = 0;
        for (int r = 0; r < 4; ++r)
            for (int s = 0; s < 4; ++s)
                if (op.matrix(r, s) != 0.0) change = particle_number(r) - particle_number(s);
        const bool fermionic = std::abs(change) % 2 == 1;
        const Mat4 conj = g * op.matrix * g;
        const bool odd = (conj + op.matrix).isZero(0.0);
        const bool even = (conj - op.matrix).isZero(0.0);
        if (fermionic ? !odd : !even) out.gamma5_consistent = false;
        (fermionic ? out.fermionic : out.bosonic).push_back(std::move(op));
    }
    return out;
}

Eigen::MatrixXd hamiltonian_dense(int sites, double W, double U, double mu) {
    require(sites >= 1 && sites <= 4, "hamiltonian_dense: sites must be in 1..4");
    const Eigen::Index dim = static_cast<Eigen::Index>(1) << (2 * sites);
    Eigen::MatrixXd H = Eigen::MatrixXd::Zero(dim, dim);

    std::vector<Eigen::MatrixXd> c_up, c_down;
    for (int i = 0; i < sites; ++i) {
        c_up.push_back(chain_operator(sites, i, creation_annihilation(Spin::Up, false)));
        c_down.push_back(chain_operator(sites, i, creation_annihilation(Spin::Down, false)));
    }
    for (int i = 0; i < sites; ++i) {
        Eigen::MatrixXd n_up = c_up[static_cast<std::size_t>(i)].transpose() * c_up[static_cast<std::size_t>(i)];
        Eigen::MatrixXd n_down = c_down[static_cast<std::size_t>(i)].transpose() * c_down[static_cast<std::size_t>(i)];
        H += U * n_up * n_down - mu * (n_up + n_down);
    }
    for (int i = 0; i + 1 < sites; ++i) {
        for (const auto* c : {&c_up, &c_down}) {
            const auto& a = (*c)[static_cast<std::size_t>(i)];
            const auto& b = (*c)[static_cast<std::size_t>(i + 1)];
            Eigen::MatrixXd hop = a.transpose() * b;
            H -= W * (hop + hop.transpose());
        }
    }
    return H;
}

Eigen::VectorXd spectrum(const Eigen::MatrixXd& H) {
    require(H.rows() == H.cols(), "spectrum: matrix must be square");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(H, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) fail(ErrorCode::Convergence, "spectrum: eigensolver failed");
    return solver.eigenvalues();
}

ScsBracket scs_bracket(const grassmann::Field3& E, const grassmann::Field3& /*h*/) {
    // The h block acts on |+>, |-> only and leaves the vacuum column untouched.
    const auto [ch, shc] = ch_shc(Complex(E.invariant_sq()));
    const double c = ch.real(), s = shc.real();
    ScsBracket out;
    out.ket = {c + E.z * s, 0.0, 0.0, E.minus * s};
    out.bra = {c - E.z * s, 0.0, 0.0, -E.plus * s};
    for (int i = 0; i < 4; ++i) out.norm += out.bra[static_cast<std::size_t>(i)] * out.ket[static_cast<std::size_t>(i)];
    return out;
}

SymbolTable op_symbols(const CField3& E, const CField3& h, double alpha, const Bilinears& bil) {
    require(alpha >= 0.0 && alpha <= 1.0, "op_symbols: alpha must lie in [0, 1]");
    SymbolTable t;
    const Complex e2 = E.z * E.z + E.plus * E.minus;
    const Complex h2 = h.z * h.z + h.plus * h.minus;
    const auto [ce, se] = ch_shc(e2);
    const auto [chh, shh] = ch_shc(h2);

    t.E11 = ce + E.z * se;
    t.E12 = E.plus * se;
    t.E21 = E.minus * se;
    t.E22 = ce - E.z * se;

    const bool real_invariants = e2.imag() == 0.0 && h2.imag() == 0.0 && e2.real() >= 0.0 && h2.real() >= 0.0;
    if (real_invariants && e2.real() > 0.0 && h2.real() > 0.0)
        t.f4 = qcalc::f4(std::sqrt(e2.real()), std::sqrt(h2.real()));
    else
        t.f4 = f4_complex(e2, h2);

    t.Sq_plus = h.plus * shh * (chh + h.z * shh);
    t.Sq_minus = h.minus * shh * (chh - h.z * shh);
    t.Sq_z = chh * chh + shh * shh * (h.z * h.z - h.plus * h.minus);

    t.S_plus = (1.0 - alpha) * t.Sq_plus + alpha * bil.plus;
    t.S_minus = (1.0 - alpha) * t.Sq_minus + alpha * bil.minus;
    t.S_z = (1.0 - alpha) * t.Sq_z + alpha * bil.z;

    const Complex z0 = t.E11, z2 = t.E21;
    t.rho3 = std::conj(z0) * z0 - std::conj(z2) * z2;
    t.rho_minus = std::conj(z2) * z0;
    t.rho_plus = std::conj(z0) * z2;
    return t;
}

}  // namespace padiclab::hubbard
