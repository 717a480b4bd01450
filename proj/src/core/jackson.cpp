// SPDX-License-Identifier: MIT
#include "padiclab/jackson.hpp"

#include <cmath>
#include <string>

#include "padiclab/error.hpp"
#include "padiclab/quadrature.hpp"

namespace padiclab::jackson {

double jackson_integral(const RealFn& f, double c, double q, double tol) {
    require(q > 0.0 && q < 1.0, "jackson_integral: q must lie in (0, 1)");
    require(c > 0.0 && std::isfinite(c), "jackson_integral: c must be positive");
    require(tol > 0.0, "jackson_integral: tol must be positive");
    double sum = 0.0, x = c, w = 1.0;
    int small_run = 0;
    for (long k = 0; k < kMaxJacksonTerms; ++k) {
        double term = f(x) * w;
        if (!std::isfinite(term)) fail(ErrorCode::Domain, "jackson_integral: integrand is not finite on the lattice");
        sum += term;
        small_run = std::abs(term) < tol * (std::abs(sum) + 1.0) ? small_run + 1 : 0;
        if (small_run >= 3) return c * (1.0 - q) * sum;
        x *= q;
        w *= q;
    }
    fail(ErrorCode::Convergence, "jackson_integral: no convergence within " + std::to_string(kMaxJacksonTerms) + " terms");
}

double small_q_series(const RealFn& f, double c, double q, int terms) {
    require(q > 0.0 && q < 1.0, "small_q_series: q must lie in (0, 1)");
    require(terms >= 0, "small_q_series: terms must be nonnegative");
    double sum = 0.0, x = c, w = 1.0;
    for (int k = 0; k < terms; ++k) {
        sum += f(x) * w;
        x *= q;
        w *= q;
    }
    return sum;
}

void SeriesSpec::validate() const {
    require(c > 0.0 && std::isfinite(c), "series spec: c must be positive");
    require(q > 0.0 && q < 1.0, "series spec: q must lie in (0, 1)");
    require(tol > 0.0, "series spec: tol must be positive");
    require(m_max >= 0 && n_max >= 0, "series spec: truncation orders must be nonnegative");
    require(std::isfinite(b_coef), "series spec: b must be finite");
}

double i_integral(int m, const SeriesSpec& spec) {
    require(m >= 0, "i_integral: m must be nonnegative");
    spec.validate();
    auto integrand = [&](double x) {
        return qcalc::q_pochhammer(x, spec.c, spec.q, m) * std::exp(spec.b_coef * qcalc::q_number(x, spec.q));
    };
    return quadrature::integrate(integrand, 0.0, spec.c, spec.tol).value;
}

double DqExpansionCoeffs::apply(const RealFn& f, double x) const {
    if (x == 0.0) fail(ErrorCode::Domain, "D_q expansion evaluated at x = 0");
    double sum = 0.0;
    for (const auto& [k, d] : coeffs) sum += d * f(std::pow(q, k) * x);
    return sum / std::pow(x, order);
}

DqExpansionCoeffs dq_expansion_coeffs(int n, double q) {
    require(n >= 1, "dq_expansion_coeffs: n must be at least 1");
    require(q > 0.0 && q != 1.0, "dq_expansion_coeffs: q must be positive and != 1");
    // D_q [x^-m g(q^k x)] = x^-(m+1) / (q - 1/q) * (q^-m g(q^{k+1} x) - q^m g(q^{k-1} x))
    std::map<int, double> cur{{0, 1.0}};
    const double denom = q - 1.0 / q;
    for (int m = 0; m < n; ++m) {
        std::map<int, double> next;
        for (const auto& [k, d] : cur) {
            next[k + 1] += std::pow(q, -m) * d / denom;
            next[k - 1] -= std::pow(q, m) * d / denom;
        }
        cur = std::move(next);
    }
    return {n, q, std::move(cur)};
}

DqExpansionCoeffs jackson_derivative_coeffs(int n, double q) {
    require(n >= 0, "jackson_derivative_coeffs: n must be nonnegative");
    require(q > 0.0 && q != 1.0, "jackson_derivative_coeffs: q must be positive and != 1");
    // D [x^-m g(q^k x)] = x^-(m+1) / (q - 1) * (q^-m g(q^{k+1} x) - g(q^k x))
    std::map<int, double> cur{{0, 1.0}};
    for (int m = 0; m < n; ++m) {
        std::map<int, double> next;
        for (const auto& [k, d] : cur) {
            next[k + 1] += std::pow(q, -m) * d / (q - 1.0);
            next[k] -= d / (q - 1.0);
        }
        cur = std::move(next);
    }
    return {n, q, std::move(cur)};
}

double jackson_factorial(int n, double q) {
    require(n >= 0, "jackson_factorial: n must be nonnegative");
    double out = 1.0;
    for (int k = 1; k <= n; ++k) out *= (1.0 - std::pow(q, k)) / (1.0 - q);
    return out;
}

QQSeriesResult qq_series(const RealFn& f, const SeriesSpec& spec) {
    spec.validate();
    QQSeriesResult res;
    const double c = spec.c, q = spec.q, b = spec.b_coef;

    // D^m f(c) / [m]! is the divided difference f[c, cq, ..., cq^m]; the
    // Newton table avoids the cancellation of the shift coefficients near q = 1.
    std::vector<double> nodes, table;
    for (int j = 0; j <= spec.m_max; ++j) {
        nodes.push_back(c * std::pow(q, j));
        table.push_back(f(nodes.back()));
    }
    std::vector<double> newton{table[0]};
    for (int level = 1; level <= spec.m_max; ++level) {
        for (int j = spec.m_max; j >= level; --j)
            table[j] = (table[j] - table[j - 1]) / (nodes[j] - nodes[j - level]);
        newton.push_back(table[level]);
    }

    std::vector<double> order_terms;
    double total = 0.0;
    for (int m = 0; m <= spec.m_max; ++m) {
        const double deriv = newton[static_cast<std::size_t>(m)];
        if (deriv == 0.0) {
            order_terms.push_back(0.0);
            res.partial_sums.push_back(total);
            continue;
        }

        double inner = 0.0, bn_over_nfact = 1.0, prev_abs = 0.0;
        bool inner_growing = false;
        for (int n = 0; n <= spec.n_max; ++n) {
            if (n > 0) bn_over_nfact *= b / n;
            if (bn_over_nfact == 0.0) break;
            auto integrand = [&](double x) {
                return qcalc::q_pochhammer(x, c, q, m) * std::pow(qcalc::q_number(x, q), n);
            };
            // Higher moments cancel strongly; only their absolute accuracy matters in the sum.
            double t = bn_over_nfact * quadrature::integrate(integrand, 0.0, c, spec.tol, 1e-3 * spec.tol * c).value;
            inner += t;
            if (n == spec.n_max && n > 0 && std::abs(t) > prev_abs && std::abs(t) > spec.tol * std::abs(inner))
                inner_growing = true;
            prev_abs = std::abs(t);
        }
        double term = deriv * inner;
        order_terms.push_back(term);
        total += term;
        res.partial_sums.push_back(total);
        if (inner_growing) {
            res.diverging = true;
            res.diagnostic = "exponential series still growing at n_max for m = " + std::to_string(m);
        }
    }

    std::size_t n = order_terms.size();
    if (n >= 3) {
        double t0 = std::abs(order_terms[n - 3]), t1 = std::abs(order_terms[n - 2]), t2 = std::abs(order_terms[n - 1]);
        if (t2 > t1 && t1 > t0 && t2 > spec.tol * std::abs(total)) {
            res.diverging = true;
            res.diagnostic = "q-Taylor terms grow over the last three orders up to m_max = " + std::to_string(spec.m_max);
        }
    }
    res.value = total;
    return res;
}

CorrespondenceCheck padic_correspondence_check(int s, const padic::Prime& p) {
    require(s >= 0, "padic_correspondence_check: s must be nonnegative");
    const double pd = static_cast<double>(p.value());
    CorrespondenceCheck out;
    out.jackson = jackson_integral([s](double x) { return std::pow(x, s); }, 1.0, 1.0 / pd, 1e-18);
    // Z_p splits into shells p^k Z_p \ p^{k+1} Z_p of Haar measure p^-k (1 - 1/p),
    // on which |x|_p = p^-k.
    double shell_scale = 1.0;  // p^-k
    for (int k = 0; k < 4096; ++k) {
        double term = shell_scale * (1.0 - 1.0 / pd) * std::pow(shell_scale, s);
        out.shell_sum += term;
        if (term < 1e-20 * out.shell_sum) break;
        shell_scale /= pd;
    }
    out.residual = std::abs(out.jackson - out.shell_sum);
    return out;
}

double small_q_reference_polynomial(int k, double q) {
    switch (k) {
        case 1: return -q;
        case 2: return q;
        case 3: return 1.0;
        case 4: return 1.0 / (q * q);
        case 5: return -1.0 / std::pow(q, 5);
        case 6: return 1.0 / std::pow(q, 6);
        default: fail(ErrorCode::InvalidArgument, "small_q_reference_polynomial: k must be in 1..6");
    }
}

}  // namespace padiclab::jackson
