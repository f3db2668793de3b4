#pragma once

#include "levelset/common.hpp"

#include <cmath>
#include <functional>

namespace levelset {

struct QuadratureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

template <typename F>
Scalar adaptive_simpson_step(const F& f, Scalar a, Scalar b, Scalar fa, Scalar fm, Scalar fb,
                             Scalar whole, Scalar tol, int depth) {
    const Scalar m = 0.5 * (a + b);
    const Scalar lm = 0.5 * (a + m);
    const Scalar rm = 0.5 * (m + b);
    const Scalar flm = f(lm);
    const Scalar frm = f(rm);
    if (!std::isfinite(flm) || !std::isfinite(frm))
        throw QuadratureError("integrand is not finite inside the integration interval");
    const Scalar left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const Scalar right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const Scalar err = left + right - whole;
    if (std::abs(err) <= 15.0 * tol)
        return left + right + err / 15.0;
    if (depth <= 0)
        throw QuadratureError("adaptive quadrature failed to converge");
    return adaptive_simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adaptive_simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

} // namespace detail

// Adaptive Simpson integration of f over [a, b] to absolute tolerance abs_tol.
// Throws QuadratureError on non-finite integrand values or exhausted recursion.
template <typename F>
Scalar integrate(const F& f, Scalar a, Scalar b, Scalar abs_tol = 1e-10, int max_depth = 40) {
    if (a == b) return 0.0;
    const Scalar fa = f(a);
    const Scalar fb = f(b);
    const Scalar m = 0.5 * (a + b);
    const Scalar fm = f(m);
    if (!std::isfinite(fa) || !std::isfinite(fb) || !std::isfinite(fm))
        throw QuadratureError("integrand is not finite at the initial quadrature nodes");
    const Scalar whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return detail::adaptive_simpson_step(f, a, b, fa, fm, fb, whole, abs_tol, max_depth);
}

// Surface area of the unit sphere S^{k-1} in R^k.
inline Scalar unit_sphere_area(int k) {
    return 2.0 * std::pow(M_PI, 0.5 * k) / std::tgamma(0.5 * k);
}

// Volume of the unit ball in R^k.
inline Scalar unit_ball_volume(int k) {
    return std::pow(M_PI, 0.5 * k) / std::tgamma(0.5 * k + 1.0);
}

// Integral over R^k of a radial function profile(||x||) supported on [0, radius]:
// reduces to S_{k-1} * int_0^radius profile(r) r^{k-1} dr.
template <typename F>
Scalar radial_integral(const F& profile, int k, Scalar radius, Scalar abs_tol = 1e-10) {
    auto integrand = [&](Scalar r) { return profile(r) * std::pow(r, k - 1); };
    return unit_sphere_area(k) * integrate(integrand, 0.0, radius, abs_tol);
}

} // namespace levelset
