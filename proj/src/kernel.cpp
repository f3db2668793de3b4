#include "levelset/kernel.hpp"

#include "levelset/quadrature.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace levelset {

Kernel make_kernel_from_profile(std::string name, int dimension,
                                std::function<Scalar(Scalar)> profile,
                                std::function<Scalar(Scalar)> profile_deriv,
                                Scalar support_radius) {
    if (dimension < 1)
        throw std::invalid_argument("kernel dimension must be >= 1");
    if (!(support_radius > 0))
        throw std::invalid_argument("kernel support radius must be positive");

    Kernel kernel;
    kernel.name = std::move(name);
    kernel.dimension = dimension;
    kernel.profile = std::move(profile);
    kernel.profile_deriv = std::move(profile_deriv);
    kernel.support_radius = support_radius;

    const Scalar raw = radial_integral(kernel.profile, dimension, support_radius, 1e-12);
    if (!(raw > 0) || !std::isfinite(raw))
        throw std::invalid_argument("kernel profile does not have a positive finite integral");
    kernel.normalization = 1.0 / raw;
    return kernel;
}

Kernel make_kernel(const std::string& name, int dimension) {
    if (name == "epanechnikov") {
        return make_kernel_from_profile(
            name, dimension,
            [](Scalar r) { return r < 1.0 ? 1.0 - r * r : 0.0; },
            [](Scalar r) { return r < 1.0 ? -2.0 * r : 0.0; });
    }
    if (name == "biweight") {
        return make_kernel_from_profile(
            name, dimension,
            [](Scalar r) {
                if (r >= 1.0) return 0.0;
                const Scalar s = 1.0 - r * r;
                return s * s;
            },
            [](Scalar r) { return r < 1.0 ? -4.0 * r * (1.0 - r * r) : 0.0; });
    }
    if (name == "uniform") {
        // No profile derivative: KDE gradients are unavailable for this one.
        return make_kernel_from_profile(name, dimension,
                                        [](Scalar r) { return r < 1.0 ? 1.0 : 0.0; });
    }
    throw std::invalid_argument("unknown kernel name: " + name);
}

Scalar kernel_l2_norm(const Kernel& kernel) {
    auto squared = [&](Scalar r) {
        const Scalar v = kernel.radial(r);
        return v * v;
    };
    return radial_integral(squared, kernel.dimension, kernel.support_radius, 1e-10);
}

int alpha_k(int k) {
    if (k < 1)
        throw std::invalid_argument("alpha_k requires k >= 1");
    return k == 1 ? 3 : k + 4;
}

Interval admissible_gamma_range(int k, LimitRegime regime) {
    if (k < 1)
        throw std::invalid_argument("admissible_gamma_range requires k >= 1");
    if (regime == LimitRegime::theorem)
        return Interval{1.0 / alpha_k(k), 1.0 / k};
    if (k < 2)
        throw std::invalid_argument(
            "the corollary regime requires k >= 2; its bandwidth conditions cannot be met for k = 1");
    return Interval{1.0 / (k + 4), 1.0 / (k + 2)};
}

Scalar BandwidthSchedule::operator()(Index n) const {
    if (n < 1)
        throw std::invalid_argument("bandwidth schedule requires n >= 1");
    return c * std::pow(static_cast<Scalar>(n), -gamma);
}

ScheduleReport check_schedule(const BandwidthSchedule& schedule, int k, LimitRegime regime,
                              Index n) {
    if (n < 2)
        throw std::invalid_argument("check_schedule requires n >= 2");

    ScheduleReport report;
    report.h = schedule(n);
    report.admissible = admissible_gamma_range(k, regime).contains(schedule.gamma);

    const Scalar nn = static_cast<Scalar>(n);
    const Scalar logn = std::log(nn);
    const Scalar h = report.h;
    auto& d = report.diagnostics;
    d["h"] = h;
    d["n*h^k/(log n)^16"] = nn * std::pow(h, k) / std::pow(logn, 16);
    d["n*h^alpha(k)*(log n)^2"] = nn * std::pow(h, alpha_k(k)) * logn * logn;
    if (regime == LimitRegime::corollary) {
        d["n*h^(k+2)/log n"] = nn * std::pow(h, k + 2) / logn;
        d["n*h^(k+4)*(log n)^2"] = nn * std::pow(h, k + 4) * logn * logn;
    }
    return report;
}

} // namespace levelset
