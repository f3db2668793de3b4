#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>

namespace levelset {

inline constexpr const char* kVersion = "0.1.0";

using Scalar = double;
using Index = Eigen::Index;

using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
using ArrayX = Eigen::Array<Scalar, Eigen::Dynamic, 1>;
using ArrayXb = Eigen::Array<bool, Eigen::Dynamic, 1>;

// Open interval (lo, hi) of admissible values (levels, exponents, ...).
struct Interval {
    Scalar lo = 0;
    Scalar hi = 0;

    bool contains(Scalar x) const { return x > lo && x < hi; }
    bool valid() const { return lo < hi; }
};

// Axis-aligned box in R^k, lo/hi per coordinate.
struct Box {
    Vector lo;
    Vector hi;

    Index dimension() const { return lo.size(); }
    bool valid() const { return lo.size() == hi.size() && (lo.array() < hi.array()).all(); }
};

} // namespace levelset
