// SPDX-License-Identifier: MIT
#pragma once

#include <functional>

namespace padiclab::quadrature {

struct Result {
    double value = 0.0;
    double error = 0.0;  // estimated absolute error
    double l1 = 0.0;     // integral of |f|
};

/// Adaptive 15-point Gauss-Kronrod on [a, b]. Deterministic: the subdivision
/// depends only on f and the tolerance. Throws Convergence if the error
/// estimate exceeds both rel_tol * max(|value|, l1 * 1e-3) and abs_tol at the
/// depth limit.
Result integrate(const std::function<double(double)>& f, double a, double b, double rel_tol = 1e-9,
                 double abs_tol = 0.0);

}  // namespace padiclab::quadrature
