#pragma once

// Uniform-grid storage for cell averages with two ghost layers per side,
// interface point values, and roughness flags.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "ldcu/euler.hpp"

namespace ldcu {

// Periodic is used only by the verification problems.
enum class BoundaryKind { Free, SolidWall, Dirichlet, Periodic };

struct BoundarySide {
    BoundaryKind kind = BoundaryKind::Free;
    Primitive2D state{}; // Dirichlet only; 1-D problems ignore v
};

struct BoundarySpec {
    BoundarySide left, right, bottom, top;

    static BoundarySpec all(BoundaryKind kind)
    {
        return {{kind, {}}, {kind, {}}, {kind, {}}, {kind, {}}};
    }
};

inline constexpr int kGhost = 2;

struct Grid1D {
    int nx = 0;
    double xmin = 0.0;
    double xmax = 1.0;

    double dx() const { return (xmax - xmin) / nx; }
    double xc(int j) const { return xmin + (j + 0.5) * dx(); }
    double xface(int i) const { return xmin + i * dx(); }
};

struct Grid2D {
    int nx = 0;
    int ny = 0;
    double xmin = 0.0;
    double xmax = 1.0;
    double ymin = 0.0;
    double ymax = 1.0;

    double dx() const { return (xmax - xmin) / nx; }
    double dy() const { return (ymax - ymin) / ny; }
    double xc(int j) const { return xmin + (j + 0.5) * dx(); }
    double yc(int k) const { return ymin + (k + 0.5) * dy(); }
};

// Cells are addressed by interior index j in [-kGhost, nx + kGhost).
class Field1D {
public:
    Field1D() = default;
    explicit Field1D(const Grid1D& grid)
        : grid_(grid), data_(static_cast<std::size_t>(grid.nx + 2 * kGhost), Conserved1D{})
    {
    }

    const Grid1D& grid() const { return grid_; }
    int nx() const { return grid_.nx; }

    Conserved1D& operator[](int j) { return data_[static_cast<std::size_t>(j + kGhost)]; }
    const Conserved1D& operator[](int j) const { return data_[static_cast<std::size_t>(j + kGhost)]; }

    std::vector<Conserved1D>& storage() { return data_; }
    const std::vector<Conserved1D>& storage() const { return data_; }

private:
    Grid1D grid_;
    std::vector<Conserved1D> data_;
};

// Cell (j, k) with j, k in [-kGhost, n + kGhost); x is the fastest index.
class Field2D {
public:
    Field2D() = default;
    explicit Field2D(const Grid2D& grid)
        : grid_(grid),
          stride_(grid.nx + 2 * kGhost),
          data_(static_cast<std::size_t>((grid.nx + 2 * kGhost) * (grid.ny + 2 * kGhost)),
                Conserved2D{})
    {
    }

    const Grid2D& grid() const { return grid_; }
    int nx() const { return grid_.nx; }
    int ny() const { return grid_.ny; }

    Conserved2D& operator()(int j, int k) { return data_[index(j, k)]; }
    const Conserved2D& operator()(int j, int k) const { return data_[index(j, k)]; }

    std::vector<Conserved2D>& storage() { return data_; }
    const std::vector<Conserved2D>& storage() const { return data_; }

private:
    std::size_t index(int j, int k) const
    {
        return static_cast<std::size_t>((k + kGhost) * stride_ + (j + kGhost));
    }

    Grid2D grid_;
    int stride_ = 0;
    std::vector<Conserved2D> data_;
};

// Interface i sits between cells i-1 and i, i = 0..nx.
struct InterfaceValues1D {
    std::vector<Conserved1D> minus; // U^-: limit from the left cell
    std::vector<Conserved1D> plus;  // U^+: limit from the right cell
};

struct InterfaceValues2D {
    int nx = 0;
    int ny = 0;
    // x-faces (i, k), i = 0..nx, k = 0..ny-1, stored at k*(nx+1) + i
    std::vector<Conserved2D> x_minus, x_plus;
    // y-faces (j, i), j = 0..nx-1, i = 0..ny, stored at i*nx + j
    std::vector<Conserved2D> y_minus, y_plus;

    std::size_t xface(int i, int k) const { return static_cast<std::size_t>(k * (nx + 1) + i); }
    std::size_t yface(int j, int i) const { return static_cast<std::size_t>(i * nx + j); }
};

// Per-cell limiter selection. `flat` (empty or one entry per cell) forces zero
// slopes; the solver sets it for cells whose stage update lost positivity.
// Ghost cells read the flag of their boundary image: the wrapped cell when
// periodic, otherwise the mirrored one, so wall and periodic fluxes stay
// conservative.
inline int flag_image(int j, int n, bool periodic)
{
    if (j < 0) return periodic ? j + n : -1 - j;
    if (j >= n) return periodic ? j - n : 2 * n - 1 - j;
    return j;
}

struct RoughnessFlags1D {
    std::vector<std::uint8_t> rough;
    std::vector<std::uint8_t> flat;
    bool periodic = false;

    bool operator()(int j) const { return lookup(rough, j); }
    bool is_flat(int j) const { return !flat.empty() && lookup(flat, j); }
    long count() const { return std::count(rough.begin(), rough.end(), std::uint8_t{1}); }

private:
    bool lookup(const std::vector<std::uint8_t>& f, int j) const
    {
        const int n = static_cast<int>(f.size());
        if (n == 0) return false;
        j = flag_image(j, n, periodic);
        return j >= 0 && j < n && f[static_cast<std::size_t>(j)] != 0;
    }
};

// MM flags carry one grid per direction; WLR flags use the same grid for both
// (`shared` is then true and `y` mirrors `x`).
struct RoughnessFlags2D {
    int nx = 0;
    int ny = 0;
    bool shared = false;
    std::vector<std::uint8_t> x, y;
    std::vector<std::uint8_t> flat; // both directions; empty or nx*ny
    bool periodic_x = false, periodic_y = false;

    static RoughnessFlags2D none(int nx, int ny)
    {
        const auto n = static_cast<std::size_t>(nx * ny);
        return {nx, ny, false, std::vector<std::uint8_t>(n, 0), std::vector<std::uint8_t>(n, 0), {}};
    }

    bool in_range(int j, int k) const { return j >= 0 && j < nx && k >= 0 && k < ny; }
    bool rough_x(int j, int k) const { return lookup(x, j, k); }
    bool rough_y(int j, int k) const { return lookup(y, j, k); }
    bool is_flat(int j, int k) const { return !flat.empty() && lookup(flat, j, k); }
    long count_x() const { return std::count(x.begin(), x.end(), std::uint8_t{1}); }
    long count_y() const { return std::count(y.begin(), y.end(), std::uint8_t{1}); }

private:
    bool lookup(const std::vector<std::uint8_t>& f, int j, int k) const
    {
        j = flag_image(j, nx, periodic_x);
        k = flag_image(k, ny, periodic_y);
        return in_range(j, k) && f[static_cast<std::size_t>(k * nx + j)] != 0;
    }
};

} // namespace ldcu
