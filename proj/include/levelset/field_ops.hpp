#pragma once

#include "levelset/grid.hpp"

#include <cstdint>
#include <vector>

namespace levelset {

// Superlevel indicator {values >= t}; ties are included (closed set).
IndicatorField threshold(const ScalarField& field, Scalar t);

// lambda(A) or lambda_g(A) by midpoint cell counting: sum over set bits of
// (1 or g at the node) times the cell volume. The weight must share the grid.
Scalar measure(const IndicatorField& ind, const ScalarField* weight = nullptr);

// Measure of the XOR of the two bit fields, optionally g-weighted.
Scalar symmetric_difference_measure(const IndicatorField& a, const IndicatorField& b,
                                    const ScalarField* weight = nullptr);

// lambda_g(field^{-1}[a, b]), both endpoints included.
Scalar band_measure(const ScalarField& field, Scalar a, Scalar b,
                    const ScalarField* weight = nullptr);

// Numerical estimate of int_{boundary of {field >= t}} g / ||grad field|| dH
// as band_measure(field, t-eps, t+eps, g) / (2 eps). Requires the band to be
// interior to the field's value range and to cover at least min_band_cells
// grid cells, so the band spans several cells across its thickness.
Scalar boundary_integral_band(const ScalarField& field, Scalar t, Scalar eps,
                              const ScalarField* weight = nullptr,
                              Index min_band_cells = 1000);

// Resolution coupling helper: the band half-width eps should be at least
// 5 * spacing * (an estimate of sup ||grad field||) for the band to be several
// cells thick everywhere along the boundary.
inline Scalar recommended_min_eps(Scalar spacing, Scalar grad_sup_estimate) {
    return 5.0 * spacing * grad_sup_estimate;
}

struct ComponentLabels {
    Index count = 0;
    // One entry per grid node; 0 is background, components are 1..count in
    // order of first appearance in the row-major scan.
    std::vector<std::int32_t> labels;
};

// Connected components of the set bits under face adjacency (2k neighbors).
ComponentLabels connected_components(const IndicatorField& ind);

} // namespace levelset
