// SPDX-License-Identifier: MIT
#include "padiclab/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <limits>

#include "padiclab/error.hpp"

namespace padiclab::quadrature {

Result integrate(const std::function<double(double)>& f, double a, double b, double rel_tol, double abs_tol) {
    require(std::isfinite(a) && std::isfinite(b), "integrate: bounds must be finite");
    require(rel_tol > 0.0, "integrate: tolerance must be positive");
    Result r;
    if (a == b) return r;
    constexpr unsigned kMaxDepth = 30;
    r.value = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(f, a, b, kMaxDepth, rel_tol, &r.error, &r.l1);
    if (!std::isfinite(r.value)) fail(ErrorCode::Convergence, "integrate: integrand produced a non-finite value");
    // Integrals that cancel to ~0 are judged against the L1 mass instead.
    double scale = std::max(std::abs(r.value), 1e-3 * r.l1);
    if (r.error > rel_tol * scale && r.error > abs_tol && r.error > 64 * std::numeric_limits<double>::epsilon() * r.l1)
        fail(ErrorCode::Convergence, "integrate: adaptive quadrature did not reach the requested tolerance");
    return r;
}

}  // namespace padiclab::quadrature
