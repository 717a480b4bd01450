// SPDX-License-Identifier: MIT
//
// Jackson integral, the deformed Gaussian-type series built from the q-Taylor
// expansion, its I_m building blocks, and the q = 1/p correspondence with the
// p-adic shell sum.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "padiclab/padic.hpp"
#include "padiclab/qcalc.hpp"

namespace padiclab::jackson {

using qcalc::RealFn;

/// Hard cap on the number of lattice terms summed before giving up.
inline constexpr long kMaxJacksonTerms = 1'000'000;

/// c (1 - q) sum_{k>=0} f(c q^k) q^k, truncated once three consecutive terms
/// fall below tol * (|partial sum| + 1).
double jackson_integral(const RealFn& f, double c, double q, double tol = 1e-16);

/// sum_{k<terms} f(c q^k) q^k, the bare lattice sum without the c(1-q) weight.
double small_q_series(const RealFn& f, double c, double q, int terms);

struct SeriesSpec {
    double c = 1.0;       // upper limit
    double b_coef = 0.0;  // b in exp(b [x]_q)
    double q = 0.5;
    int m_max = 8;
    int n_max = 12;
    double tol = 1e-9;    // relative tolerance of the inner quadratures

    void validate() const;
};

/// Integral over [0, c] of (x - c)_q^m exp(b [x]_q).
double i_integral(int m, const SeriesSpec& spec);

struct QQSeriesResult {
    double value = 0.0;
    std::vector<double> partial_sums;  // after each order m of the q-Taylor sum
    bool diverging = false;
    std::string diagnostic;
};

/// Truncated double series
///   sum_{m<=m_max} sum_{n<=n_max} D^m f(c) / [m]! * b^n / n! * int_0^c (x-c)_q^m [x]_q^n dx
/// where D, [m]! follow the q-Taylor (Jackson derivative) convention so the
/// outer sum reproduces f, and [x]_q is the symmetric number.
QQSeriesResult qq_series(const RealFn& f, const SeriesSpec& spec);

/// Shift representation D^n f(x) = x^-n * sum_k coeff[k] f(q^k x).
struct DqExpansionCoeffs {
    int order = 0;
    double q = 0.5;
    std::map<int, double> coeffs;

    double apply(const RealFn& f, double x) const;
};

/// Coefficients of the n-th power of the symmetric derivative D_q; shifts run
/// over k = -n, -n+2, ..., n.
DqExpansionCoeffs dq_expansion_coeffs(int n, double q);

/// Coefficients of the n-th power of the Jackson derivative
/// (f(qx) - f(x)) / ((q - 1) x); shifts run over k = 0..n.
DqExpansionCoeffs jackson_derivative_coeffs(int n, double q);

/// prod_{k=1..n} (1 - q^k) / (1 - q)
double jackson_factorial(int n, double q);

struct CorrespondenceCheck {
    double jackson = 0.0;    // Jackson integral of x^s on [0,1] at q = 1/p
    double shell_sum = 0.0;  // sum over p-adic shells |x|_p = p^-k of measure * p^-ks
    double residual = 0.0;
};

CorrespondenceCheck padic_correspondence_check(int s, const padic::Prime& p);

/// Reference small-q polynomials p_k^k(q), k = 1..6, as tabulated for the
/// leading-order regrouping. Kept for reporting; their defining relation is
/// not established, so nothing asserts against them.
double small_q_reference_polynomial(int k, double q);

}  // namespace padiclab::jackson
