#include "levelset/grid.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>

static_assert(std::endian::native == std::endian::little,
              "field serialization assumes a little-endian host");

namespace levelset {

Scalar GridSpec::cell_volume() const {
    return std::pow(spacing, dimension());
}

Index GridSpec::flat_index(const std::vector<Index>& multi) const {
    Index flat = 0;
    for (std::size_t a = 0; a < dims.size(); ++a) {
        if (multi[a] < 0 || multi[a] >= dims[a])
            throw std::out_of_range("grid multi-index out of range");
        flat = flat * dims[a] + multi[a];
    }
    return flat;
}

std::vector<Index> GridSpec::multi_index(Index flat) const {
    std::vector<Index> multi(dims.size());
    for (std::size_t a = dims.size(); a-- > 0;) {
        multi[a] = flat % dims[a];
        flat /= dims[a];
    }
    return multi;
}

Vector GridSpec::node(Index flat) const {
    const std::vector<Index> multi = multi_index(flat);
    Vector x(dimension());
    for (int a = 0; a < dimension(); ++a)
        x[a] = origin[a] + static_cast<Scalar>(multi[a]) * spacing;
    return x;
}

Vector GridSpec::upper_corner() const {
    Vector x(dimension());
    for (int a = 0; a < dimension(); ++a)
        x[a] = origin[a] + static_cast<Scalar>(dims[a] - 1) * spacing;
    return x;
}

bool GridSpec::operator==(const GridSpec& other) const {
    return spacing == other.spacing && dims == other.dims &&
           origin.size() == other.origin.size() && origin == other.origin;
}

GridSpec make_grid(const Box& box, Scalar spacing) {
    if (!box.valid())
        throw std::invalid_argument("make_grid: invalid box");
    if (!(spacing > 0))
        throw std::invalid_argument("make_grid: spacing must be positive");
    GridSpec grid;
    grid.origin = box.lo;
    grid.spacing = spacing;
    grid.dims.resize(box.dimension());
    for (Index a = 0; a < box.dimension(); ++a)
        grid.dims[a] = static_cast<Index>(std::ceil((box.hi[a] - box.lo[a]) / spacing)) + 1;
    return grid;
}

ScalarField::ScalarField(GridSpec g, ArrayX v) : grid(std::move(g)), values(std::move(v)) {
    if (values.size() != grid.size())
        throw std::invalid_argument("scalar field length does not match its grid");
    if (!values.isFinite().all())
        throw std::invalid_argument("scalar field contains non-finite values");
}

IndicatorField::IndicatorField(GridSpec g, ArrayXb b) : grid(std::move(g)), bits(std::move(b)) {
    if (bits.size() != grid.size())
        throw std::invalid_argument("indicator field length does not match its grid");
}

namespace {

void write_header(std::ofstream& out, const GridSpec& grid) {
    const std::uint64_t k = static_cast<std::uint64_t>(grid.dimension());
    out.write(reinterpret_cast<const char*>(&k), 8);
    for (Index d : grid.dims) {
        const std::uint64_t v = static_cast<std::uint64_t>(d);
        out.write(reinterpret_cast<const char*>(&v), 8);
    }
    for (Index a = 0; a < grid.origin.size(); ++a)
        out.write(reinterpret_cast<const char*>(&grid.origin[a]), 8);
    out.write(reinterpret_cast<const char*>(&grid.spacing), 8);
}

GridSpec read_header(std::ifstream& in) {
    std::uint64_t k = 0;
    in.read(reinterpret_cast<char*>(&k), 8);
    if (!in || k == 0 || k > 16)
        throw std::runtime_error("field file: bad header");
    GridSpec grid;
    grid.dims.resize(k);
    for (std::uint64_t a = 0; a < k; ++a) {
        std::uint64_t d = 0;
        in.read(reinterpret_cast<char*>(&d), 8);
        grid.dims[a] = static_cast<Index>(d);
    }
    grid.origin.resize(k);
    for (std::uint64_t a = 0; a < k; ++a)
        in.read(reinterpret_cast<char*>(&grid.origin[a]), 8);
    in.read(reinterpret_cast<char*>(&grid.spacing), 8);
    if (!in)
        throw std::runtime_error("field file: truncated header");
    return grid;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open for writing: " + path);
    return out;
}

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open for reading: " + path);
    return in;
}

} // namespace

void save_field(const ScalarField& field, const std::string& path) {
    std::ofstream out = open_out(path);
    write_header(out, field.grid);
    out.write(reinterpret_cast<const char*>(field.values.data()),
              static_cast<std::streamsize>(field.values.size() * 8));
    if (!out)
        throw std::runtime_error("failed writing field to " + path);
}

void save_field(const IndicatorField& field, const std::string& path) {
    std::ofstream out = open_out(path);
    write_header(out, field.grid);
    for (Index i = 0; i < field.bits.size(); ++i) {
        const char b = field.bits[i] ? 1 : 0;
        out.write(&b, 1);
    }
    if (!out)
        throw std::runtime_error("failed writing field to " + path);
}

ScalarField load_scalar_field(const std::string& path) {
    std::ifstream in = open_in(path);
    GridSpec grid = read_header(in);
    ArrayX values(grid.size());
    in.read(reinterpret_cast<char*>(values.data()), static_cast<std::streamsize>(values.size() * 8));
    if (!in)
        throw std::runtime_error("field file: truncated payload in " + path);
    return ScalarField(std::move(grid), std::move(values));
}

IndicatorField load_indicator_field(const std::string& path) {
    std::ifstream in = open_in(path);
    GridSpec grid = read_header(in);
    ArrayXb bits(grid.size());
    for (Index i = 0; i < bits.size(); ++i) {
        char b = 0;
        in.read(&b, 1);
        bits[i] = b != 0;
    }
    if (!in)
        throw std::runtime_error("field file: truncated payload in " + path);
    return IndicatorField(std::move(grid), std::move(bits));
}

void export_field_csv(const ScalarField& field, const std::string& path) {
    const int k = field.grid.dimension();
    if (k > 2)
        throw std::invalid_argument("CSV export is only supported for k <= 2");
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot open for writing: " + path);
    out.precision(17);
    out << (k == 1 ? "x,value\n" : "x,y,value\n");
    for (Index i = 0; i < field.values.size(); ++i) {
        const Vector x = field.grid.node(i);
        out << x[0];
        if (k == 2) out << ',' << x[1];
        out << ',' << field.values[i] << '\n';
    }
}

} // namespace levelset
