#include "levelset/field_ops.hpp"

#include <sstream>
#include <stdexcept>

namespace levelset {

namespace {

void require_same_grid(const GridSpec& a, const GridSpec& b, const char* what) {
    if (!(a == b))
        throw std::invalid_argument(std::string(what) + ": fields live on different grids");
}

Scalar weighted_count(const ArrayXb& bits, const GridSpec& grid, const ScalarField* weight,
                      const char* what) {
    if (weight == nullptr)
        return static_cast<Scalar>(bits.count());
    require_same_grid(grid, weight->grid, what);
    return bits.select(weight->values, 0.0).sum();
}

} // namespace

IndicatorField threshold(const ScalarField& field, Scalar t) {
    return IndicatorField(field.grid, field.values >= t);
}

Scalar measure(const IndicatorField& ind, const ScalarField* weight) {
    return weighted_count(ind.bits, ind.grid, weight, "measure") * ind.grid.cell_volume();
}

Scalar symmetric_difference_measure(const IndicatorField& a, const IndicatorField& b,
                                    const ScalarField* weight) {
    require_same_grid(a.grid, b.grid, "symmetric_difference_measure");
    const ArrayXb diff = a.bits != b.bits;
    return weighted_count(diff, a.grid, weight, "symmetric_difference_measure") *
           a.grid.cell_volume();
}

Scalar band_measure(const ScalarField& field, Scalar a, Scalar b, const ScalarField* weight) {
    if (a > b)
        throw std::invalid_argument("band_measure: requires a <= b");
    const ArrayXb band = field.values >= a && field.values <= b;
    return weighted_count(band, field.grid, weight, "band_measure") * field.grid.cell_volume();
}

Scalar boundary_integral_band(const ScalarField& field, Scalar t, Scalar eps,
                              const ScalarField* weight, Index min_band_cells) {
    if (!(eps > 0))
        throw std::invalid_argument("boundary_integral_band: eps must be positive");
    const Scalar lo = field.values.minCoeff();
    const Scalar hi = field.values.maxCoeff();
    if (t - eps < lo || t + eps > hi) {
        std::ostringstream msg;
        msg << "boundary_integral_band: band [" << t - eps << ", " << t + eps
            << "] is not contained in the field's value range [" << lo << ", " << hi << "]";
        throw std::invalid_argument(msg.str());
    }
    const ArrayXb band = field.values >= t - eps && field.values <= t + eps;
    const Index cells = band.count();
    if (cells < min_band_cells) {
        std::ostringstream msg;
        msg << "boundary_integral_band: band covers only " << cells << " cells (need >= "
            << min_band_cells << "); increase eps or refine the grid spacing";
        throw std::invalid_argument(msg.str());
    }
    const Scalar lam = weighted_count(band, field.grid, weight, "boundary_integral_band") *
                       field.grid.cell_volume();
    return lam / (2.0 * eps);
}

namespace {

struct UnionFind {
    std::vector<Index> parent;

    explicit UnionFind(Index n) : parent(n) {
        for (Index i = 0; i < n; ++i) parent[i] = i;
    }

    Index find(Index i) {
        while (parent[i] != i) {
            parent[i] = parent[parent[i]];  // path halving
            i = parent[i];
        }
        return i;
    }

    void unite(Index a, Index b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        // Attach the larger root index under the smaller one so that the root
        // of every component is its row-major-first cell.
        if (a < b)
            parent[b] = a;
        else
            parent[a] = b;
    }
};

} // namespace

ComponentLabels connected_components(const IndicatorField& ind) {
    const Index n = ind.bits.size();
    const auto& dims = ind.grid.dims;
    const std::size_t k = dims.size();

    // Strides of the row-major layout (last axis fastest).
    std::vector<Index> strides(k, 1);
    for (std::size_t a = k - 1; a-- > 0;)
        strides[a] = strides[a + 1] * dims[a + 1];

    UnionFind uf(n);
    std::vector<Index> multi(k, 0);
    for (Index i = 0; i < n; ++i) {
        if (ind.bits[i]) {
            // Union with the already-scanned face neighbors (negative direction).
            for (std::size_t a = 0; a < k; ++a) {
                if (multi[a] > 0) {
                    const Index j = i - strides[a];
                    if (ind.bits[j]) uf.unite(i, j);
                }
            }
        }
        // Row-major multi-index increment.
        for (std::size_t a = k; a-- > 0;) {
            if (++multi[a] < dims[a]) break;
            multi[a] = 0;
        }
    }

    ComponentLabels result;
    result.labels.assign(n, 0);
    std::vector<std::int32_t> root_label(n, 0);
    std::int32_t next = 0;
    for (Index i = 0; i < n; ++i) {
        if (!ind.bits[i]) continue;
        const Index root = uf.find(i);
        if (root_label[root] == 0) root_label[root] = ++next;
        result.labels[i] = root_label[root];
    }
    result.count = next;
    return result;
}

} // namespace levelset
