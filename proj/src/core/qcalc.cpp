// SPDX-License-Identifier: MIT
#include "padiclab/qcalc.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "padiclab/error.hpp"

namespace padiclab::qcalc {

namespace {

void require_deformation(double q) {
    require(std::isfinite(q) && q > 0.0, "q must be positive and finite");
    require(q != 1.0, "q = 1 makes the quantum number degenerate");
}

// Sum over k of h_k(a, b) * weight(k), where h_k(a, b) = sum_{i=0..k} a^i b^(k-i).
// This is the divided difference (g(a) - g(b)) / (a - b) of a power series
// g(s) = sum_k weight(k) s^(k+1); it stays exact as a -> b.
template <typename Weight>
double divided_difference_series(double a, double b, Weight weight, int first_k = 0) {
    double h = 1.0;  // h_0
    for (int k = 1; k <= first_k; ++k) h = a * h + std::pow(b, k);
    double b_pow = std::pow(b, first_k);
    double sum = 0.0;
    for (int k = first_k; k < 600; ++k) {
        double term = h * weight(k);
        sum += term;
        if (k > first_k + 4 && std::abs(term) <= 1e-18 * std::abs(sum)) return sum;
        b_pow *= b;
        h = a * h + b_pow;
    }
    fail(ErrorCode::Convergence, "divided-difference series did not converge");
}

}  // namespace

double q_number(double x, double q) {
    require_deformation(q);
    double lq = std::log(q);
    return std::sinh(x * lq) / std::sinh(lq);
}

double q_number(double x, double r, double q) {
    require(std::isfinite(r) && r > 0.0, "r must be positive and finite");
    require(std::isfinite(q) && q > 0.0, "q must be positive and finite");
    double denom = q - 1.0 / r;
    require(std::abs(denom) > 1e-300, "degenerate two-parameter number: q = 1/r");
    return (std::pow(q, x) - std::pow(r, -x)) / denom;
}

double q_number(double x, const QParams& qp) {
    return qp.r ? q_number(x, *qp.r, qp.q) : q_number(x, qp.q);
}

double q_factorial(int n, double q) {
    require(n >= 0, "q_factorial: n must be nonnegative");
    require(std::isfinite(q) && q > 0.0, "q must be positive and finite");
    double out = 1.0;
    for (int k = 2; k <= n; ++k) out *= (q == 1.0) ? static_cast<double>(k) : q_number(k, q);
    return out;
}

double q_pochhammer(double x, double c, double q, int m) {
    require(m >= 0, "q_pochhammer: m must be nonnegative");
    double out = 1.0;
    double shift = c;
    for (int j = 0; j < m; ++j) {
        out *= (x - shift);
        shift *= q;
    }
    return out;
}

double d_q(const RealFn& f, double x, double q) {
    require_deformation(q);
    if (x == 0.0) fail(ErrorCode::Domain, "d_q: x = 0 is a pole of the quantum derivative");
    return (f(q * x) - f(x / q)) / ((q - 1.0 / q) * x);
}

double d_rq(const RealFn& f, double x, double r, double q) {
    require(r != q, "d_rq: r and q must differ");
    if (x == 0.0) fail(ErrorCode::Domain, "d_rq: x = 0 is a pole of the quantum derivative");
    return (f(r * x) - f(q * x)) / ((r - q) * x);
}

double k_special(const FieldInvariants& inv) {
    const double E = inv.E, h = inv.h, alpha = inv.alpha;
    if (E == 0.0 || h == 0.0) fail(ErrorCode::Domain, "k_special: E = 0 or h = 0 is a pole of K");
    const double a = E * E, b = h * h;
    if (std::abs(a - b) >= kSingularSwitchRadius)
        return (std::cosh(alpha * E) / a - std::cosh(alpha * h) / b) / (a - b);

    // cosh(alpha sqrt(s))/s = 1/s + sum_{k>=1} alpha^{2k} s^{k-1} / (2k)!
    const double a2 = alpha * alpha;
    auto weight = [a2](int j) {
        // coefficient of s^(j+1) is alpha^{2(j+2)} / (2(j+2))!
        int k = j + 2;
        double w = 1.0;
        for (int i = 1; i <= 2 * k; ++i) w /= i;
        return w * std::pow(a2, k);
    };
    return -1.0 / (a * b) + divided_difference_series(a, b, weight);
}

double f4(double E, double h) {
    const double a = E * E, b = h * h;
    if (std::abs(a - b) >= kSingularSwitchRadius) return (E * std::sinh(E) - h * std::sinh(h)) / (a - b);
    // sqrt(s) sinh(sqrt(s)) = sum_{k>=0} s^{k+1} / (2k+1)!
    double fact = 1.0;
    int last = 0;
    auto weight = [&fact, &last](int k) {
        for (int i = 2 * last + 2; i <= 2 * k + 1; ++i) fact *= i;
        last = k;
        return 1.0 / fact;
    };
    return divided_difference_series(a, b, weight);
}

AlgebraReport check_algebra_relations(int degree, const QParams& qp) {
    require(degree >= 1, "check_algebra_relations: degree must be at least 1");
    AlgebraReport rep;
    rep.degree = degree;
    rep.two_parameter = qp.r.has_value();
    const double q = qp.q;
    if (rep.two_parameter) {
        require(q > 0 && *qp.r > 0, "r and q must be positive");
        require(*qp.r != q, "two-parameter check needs r != q");
    } else {
        require_deformation(q);
    }

    // Raising coefficient from the lattice definition: D x^n = lattice(n) x^{n-1}.
    auto lattice = [&](int n) {
        if (n == 0) return 0.0;
        if (rep.two_parameter) return (std::pow(*qp.r, n) - std::pow(q, n)) / (*qp.r - q);
        return (std::pow(q, n) - std::pow(q, -n)) / (q - 1.0 / q);
    };
    // The same coefficient from the closed forms.
    auto closed = [&](int n) {
        if (rep.two_parameter) {
            double s = 0.0;
            for (int j = 0; j < n; ++j) s += std::pow(*qp.r, j) * std::pow(q, n - 1 - j);
            return s;
        }
        return q_number(n, q);
    };

    using Poly = std::vector<double>;
    const std::size_t size = static_cast<std::size_t>(degree) + 3;
    auto s_plus = [&](const Poly& p) {
        Poly out(size, 0.0);
        for (std::size_t n = 1; n < size; ++n) out[n - 1] += p[n] * lattice(static_cast<int>(n));
        return out;
    };
    auto s_minus = [&](const Poly& p) {
        Poly out(size, 0.0);
        for (std::size_t n = 0; n + 1 < size; ++n) out[n + 1] += p[n];
        return out;
    };
    auto s_z = [&](const Poly& p) {
        Poly out(size, 0.0);
        for (std::size_t n = 0; n < size; ++n) out[n] = static_cast<double>(n) * p[n];
        return out;
    };
    auto max_abs_diff = [](const Poly& a, const Poly& b, double scale_b = 1.0) {
        double m = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - scale_b * b[i]));
        return m;
    };
    auto sub = [](Poly a, const Poly& b) {
        for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
        return a;
    };

    for (int n = 0; n <= degree; ++n) {
        Poly mono(size, 0.0);
        mono[static_cast<std::size_t>(n)] = 1.0;

        Poly sp = s_plus(mono), sm = s_minus(mono);
        Poly comm_z_plus = sub(s_z(sp), s_plus(s_z(mono)));
        Poly comm_z_minus = sub(s_z(sm), s_minus(s_z(mono)));
        Poly comm_pm = sub(s_plus(sm), s_minus(sp));

        double scale = std::max(1.0, std::abs(closed(n + 1)));
        rep.sz_splus_residual = std::max(rep.sz_splus_residual, max_abs_diff(comm_z_plus, sp, -1.0) / scale);
        rep.sz_sminus_residual = std::max(rep.sz_sminus_residual, max_abs_diff(comm_z_minus, sm));

        double expected = closed(n + 1) - closed(n);
        Poly target(size, 0.0);
        target[static_cast<std::size_t>(n)] = expected;
        rep.commutator_residual = std::max(rep.commutator_residual, max_abs_diff(comm_pm, target) / scale);
        rep.commutator_coefficients.push_back(comm_pm[static_cast<std::size_t>(n)]);
        rep.classical_deviation = std::max(rep.classical_deviation, std::abs(comm_pm[static_cast<std::size_t>(n)] - 1.0));

        double printed;
        if (rep.two_parameter) {
            double lhs = closed(n + 1) - (*qp.r / q) * closed(n);
            double denom = q - 1.0 / *qp.r;
            printed = std::abs(denom) > 1e-300
                          ? std::abs(lhs - (std::pow(q, 2.0 * n) - std::pow(*qp.r, -2.0 * n)) / denom)
                          : std::nan("");
        } else {
            printed = std::abs(comm_pm[static_cast<std::size_t>(n)] - q_number(n, q));
        }
        rep.printed_rhs_deviation = std::max(rep.printed_rhs_deviation, printed);
    }
    return rep;
}

}  // namespace padiclab::qcalc
