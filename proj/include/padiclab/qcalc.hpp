// SPDX-License-Identifier: MIT
//
// Quantum numbers, factorials and Pochhammer products, the one- and
// two-parameter quantum derivatives, and the special functions K and f4.
#pragma once

#include <functional>
#include <optional>
#include <vector>

namespace padiclab::qcalc {

using RealFn = std::function<double(double)>;

/// Deformation parameters. `r` present selects the two-parameter forms.
struct QParams {
    double q = 0.5;
    std::optional<double> r;
};

/// Symmetric one-parameter number (q^x - q^-x) / (q - q^-1).
double q_number(double x, double q);
/// Two-parameter number (q^x - r^-x) / (q - r^-1).
double q_number(double x, double r, double q);
double q_number(double x, const QParams& qp);

/// [n]_q [n-1]_q ... [1]_q with [0]_q! = 1. q == 1 gives n!.
double q_factorial(int n, double q);

/// (x - c)(x - qc)...(x - q^{m-1}c); m = 0 gives 1.
double q_pochhammer(double x, double c, double q, int m);

/// (f(qx) - f(x/q)) / ((q - 1/q) x)
double d_q(const RealFn& f, double x, double q);

/// (f(rx) - f(qx)) / ((r - q) x)
double d_rq(const RealFn& f, double x, double r, double q);

/// Field invariants of the two SU(2) sectors and the scale argument.
struct FieldInvariants {
    double E = 1.0;
    double h = 0.0;
    double alpha = 1.0;
};

/// K = (cosh(alpha E)/E^2 - cosh(alpha h)/h^2) / (E^2 - h^2).
/// The E = h removable singularity is resolved by a divided-difference series;
/// E = 0 or h = 0 are genuine poles and raise a Domain error.
double k_special(const FieldInvariants& inv);

/// f4 = (E sinh E - h sinh h) / (E^2 - h^2), with the E = h branch
/// (sinh h + h cosh h) / (2h).
double f4(double E, double h);

/// Half-width (in E^2 - h^2) of the band where the closed forms of K and f4
/// give way to their series representations.
inline constexpr double kSingularSwitchRadius = 1e-4;

/// Ladder-operator realisation on monomials x^n, n <= degree:
/// S+ = D_q (or D_rq), S- = multiplication by x, Sz = x d/dx.
struct AlgebraReport {
    int degree = 0;
    bool two_parameter = false;
    double sz_splus_residual = 0;      // max |[Sz,S+] + S+|
    double sz_sminus_residual = 0;     // max |[Sz,S-] - S-|
    double commutator_residual = 0;    // max |[S+,S-]x^n - (c_{n+1} - c_n) x^n|
    double classical_deviation = 0;    // max |[S+,S-]x^n - x^n|
    double printed_rhs_deviation = 0;  // deviation from the textbook right-hand side
    std::vector<double> commutator_coefficients;  // c_{n+1} - c_n per n
};

/// Builds the operators from the lattice definitions and compares against the
/// closed-form coefficients. The textbook right-hand side (sh(Sz ln q)/sh(ln q)
/// for one parameter, S+S- - (r/q)S-S+ = [2Sz]_rq for two) is reported only.
AlgebraReport check_algebra_relations(int degree, const QParams& qp);

}  // namespace padiclab::qcalc
