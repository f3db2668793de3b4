#pragma once

#include "levelset/common.hpp"

#include <string>
#include <vector>

namespace levelset {

// Regular grid on a box in R^k: node i has coordinate origin + i * spacing
// per axis. Flat storage is row-major with the last axis fastest.
struct GridSpec {
    Vector origin;
    Scalar spacing = 0.0;  // delta, uniform across axes
    std::vector<Index> dims;

    int dimension() const { return static_cast<int>(origin.size()); }

    Index size() const {
        Index n = 1;
        for (Index d : dims) n *= d;
        return n;
    }

    Scalar cell_volume() const;

    Index flat_index(const std::vector<Index>& multi) const;
    std::vector<Index> multi_index(Index flat) const;
    Vector node(Index flat) const;

    // Coordinate of the last node per axis (origin + (dims-1)*spacing).
    Vector upper_corner() const;

    bool operator==(const GridSpec& other) const;
};

// Builds the grid anchored at box.lo whose nodes cover [box.lo, box.hi].
GridSpec make_grid(const Box& box, Scalar spacing);

struct ScalarField {
    GridSpec grid;
    ArrayX values;

    ScalarField() = default;
    ScalarField(GridSpec g, ArrayX v);
};

struct IndicatorField {
    GridSpec grid;
    ArrayXb bits;

    IndicatorField() = default;
    IndicatorField(GridSpec g, ArrayXb b);

    Index count() const { return bits.count(); }
};

// Flat binary layout: k, dims, origin, spacing as little-endian 64-bit values,
// then the payload (float64 per node for scalar fields, one byte per node for
// indicator fields).
void save_field(const ScalarField& field, const std::string& path);
void save_field(const IndicatorField& field, const std::string& path);
ScalarField load_scalar_field(const std::string& path);
IndicatorField load_indicator_field(const std::string& path);

// CSV export (x, y, value), k <= 2 only.
void export_field_csv(const ScalarField& field, const std::string& path);

} // namespace levelset
