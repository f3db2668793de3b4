#pragma once

#include "levelset/common.hpp"

#include <functional>
#include <map>
#include <string>

namespace levelset {

// Radially symmetric kernel K(x) = normalization * profile(||x||) on R^k,
// compactly supported on the ball of radius support_radius. The profile must
// be monotone nonincreasing on [0, support_radius] and zero beyond it; the
// normalization makes K integrate to one and is computed by radial quadrature
// at construction, so any valid profile can be registered.
struct Kernel {
    std::string name;
    int dimension = 0;
    std::function<Scalar(Scalar)> profile;        // mu(r) for r in [0, support_radius]
    std::function<Scalar(Scalar)> profile_deriv;  // mu'(r); empty if not registered
    Scalar support_radius = 1.0;
    Scalar normalization = 0.0;  // c_k

    // K as a function of the radius; zero at and beyond the support boundary.
    Scalar radial(Scalar r) const {
        return r >= support_radius ? 0.0 : normalization * profile(r);
    }

    Scalar radial_deriv(Scalar r) const {
        return r >= support_radius ? 0.0 : normalization * profile_deriv(r);
    }

    bool has_derivative() const { return static_cast<bool>(profile_deriv); }
};

// Builds a kernel from a raw profile, computing the normalization constant.
Kernel make_kernel_from_profile(std::string name, int dimension,
                                std::function<Scalar(Scalar)> profile,
                                std::function<Scalar(Scalar)> profile_deriv = {},
                                Scalar support_radius = 1.0);

// Built-in kernels by name: "epanechnikov" (default), "biweight", "uniform".
Kernel make_kernel(const std::string& name, int dimension);

// K-tilde = int K^2 dlambda, by adaptive radial quadrature (abs err <= 1e-8).
Scalar kernel_l2_norm(const Kernel& kernel);

// Bandwidth exponent threshold: 3 for k=1, k+4 for k>=2.
int alpha_k(int k);

enum class LimitRegime { theorem, corollary };

// Range of exponents gamma for which h = c n^-gamma satisfies the regime's
// polynomial bandwidth conditions (log factors ignored):
//   theorem   -> (1/alpha(k), 1/k)
//   corollary -> (1/(k+4), 1/(k+2)), only defined for k >= 2
Interval admissible_gamma_range(int k, LimitRegime regime);

// Deterministic bandwidth rule h(n) = c * n^-gamma.
struct BandwidthSchedule {
    Scalar c = 1.0;
    Scalar gamma = 0.2;

    Scalar operator()(Index n) const;
};

struct ScheduleReport {
    bool admissible = false;
    Scalar h = 0.0;
    std::map<std::string, Scalar> diagnostics;  // finite-n values of the regime's conditions
};

// Evaluates the schedule at finite n: h(n), whether gamma lies in the
// admissible range, and the finite-n condition values for logging.
ScheduleReport check_schedule(const BandwidthSchedule& schedule, int k, LimitRegime regime,
                              Index n);

} // namespace levelset
