// SPDX-License-Identifier: MIT
//
// Four-state site algebra (Hubbard X-operators), the small-chain Hamiltonian,
// and the bosonic coherent-state bracket and operator symbols.
#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <string>
#include <vector>

#include "padiclab/grassmann.hpp"

namespace padiclab::hubbard {

using Mat4 = Eigen::Matrix4d;
using Complex = std::complex<double>;

/// Site basis order shared by every matrix: |0>, |+>, |->, |2>
/// (empty, buy, sell, hold).
enum State : int { Empty = 0, Up = 1, Down = 2, Double = 3 };

std::string state_label(int s);  // "0", "+", "-", "2"
int particle_number(int s);

/// Matrix unit |r><s|.
Mat4 x_operator(int r, int s);

enum class Spin { Up, Down };

/// alpha_up^+ = X^{+0} - X^{2-}, alpha_down^+ = X^{-0} + X^{2+} and their
/// transposes for the annihilators.
Mat4 creation_annihilation(Spin sigma, bool dagger);

/// diag(1, -1, -1, 1)
Mat4 gamma5();
/// max |(X^{00} - X^{22})^2 - (X^{++} - X^{--})^2 - gamma5|
double gamma5_identity_residual();

struct SiteOperator {
    std::string label;  // e.g. "X^{0+}" or "X^{++}-X^{--}"
    Mat4 matrix;
};

struct Classification {
    std::vector<SiteOperator> fermionic;
    std::vector<SiteOperator> bosonic;
    /// Every fermionic entry anticommutes with gamma5 and every bosonic one
    /// commutes with it.
    bool gamma5_consistent = false;
};

/// Grades the fourteen site operators left after removing the identity and
/// gamma5 by the parity of the particle-number change.
Classification classify_operators();

/// Open chain of `sites` (1..4) on the 4^sites product space:
///   H = -W sum_{<ij>, s} (c+_{is} c_{js} + h.c.) + U sum_i n_{i+} n_{i-} - mu sum_i n_i
/// with gamma5 sign strings on the sites left of each operator.
Eigen::MatrixXd hamiltonian_dense(int sites, double W, double U, double mu);

/// Ascending eigenvalues of a symmetric matrix.
Eigen::VectorXd spectrum(const Eigen::MatrixXd& H);

/// Bosonic sector of the supercoherent state.
struct ScsBracket {
    std::array<double, 4> ket{};
    std::array<double, 4> bra{};
    double norm = 0.0;  // <G|G>
};

/// ket = exp(B)|0>, bra = <0|exp(-B) for the bosonic generator B, using the
/// closed forms in x = Ez^2 + E+ E- (trigonometric when x < 0).
ScsBracket scs_bracket(const grassmann::Field3& E, const grassmann::Field3& h);

struct CField3 {
    Complex z{};
    Complex plus{};
    Complex minus{};
};

/// Values of the fermion bilinears chi1* chi2, chi2* chi1 and
/// chi1* chi1 - chi2* chi2 that enter the mixed spin symbols.
struct Bilinears {
    Complex plus{};
    Complex minus{};
    Complex z{};
};

struct SymbolTable {
    Complex E11{}, E12{}, E21{}, E22{};  // matrix field E-hat
    Complex f4{};
    Complex Sq_plus{}, Sq_minus{}, Sq_z{};
    Complex S_plus{}, S_minus{}, S_z{};  // (1 - alpha) S_q + alpha * bilinears
    Complex rho3{}, rho_plus{}, rho_minus{};
};

/// Operator symbols for complex fields; alpha in [0, 1].
SymbolTable op_symbols(const CField3& E, const CField3& h, double alpha = 0.0, const Bilinears& bil = {});

}  // namespace padiclab::hubbard
