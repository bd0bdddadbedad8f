#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace bec {

using cplx = std::complex<double>;

// Uniform 1D grid, treated as periodic for all spectral operations.
// Sample points are x_j = x_min + j*dx, j = 0..n_points-1 (x_max excluded).
struct Grid1D {
    int n_points = 0;
    double x_min = 0.0;
    double x_max = 0.0;
    double dx = 0.0;
    bool periodic = true;

    Grid1D() = default;
    Grid1D(int n, double xmin, double xmax)
        : n_points(n), x_min(xmin), x_max(xmax), dx((xmax - xmin) / n) {
        if (n < 8) throw std::invalid_argument("Grid1D: n_points must be >= 8");
        if (dx <= 0.0) throw std::invalid_argument("Grid1D: x_max must exceed x_min");
    }

    double x(int j) const { return x_min + j * dx; }
    double length() const { return x_max - x_min; }

    bool operator==(const Grid1D& o) const {
        return n_points == o.n_points && x_min == o.x_min && x_max == o.x_max;
    }
};

// Angular wavenumbers in FFT storage order: k_j = 2*pi*j/L for j < n/2,
// negative branch afterwards.
std::vector<double> wavenumbers(const Grid1D& grid);

// Complex wavefunction samples on a grid; carries dimension length^{-1/2}
// so that integral(|phi|^2 dx) is dimensionless.
struct ComplexField {
    Grid1D grid;
    std::vector<cplx> values;

    ComplexField() = default;
    explicit ComplexField(const Grid1D& g) : grid(g), values(g.n_points, cplx(0.0, 0.0)) {}
    ComplexField(const Grid1D& g, std::vector<cplx> v) : grid(g), values(std::move(v)) {
        if (static_cast<int>(values.size()) != g.n_points)
            throw std::invalid_argument("ComplexField: value count does not match grid");
    }

    int size() const { return grid.n_points; }

    double norm_squared() const;
    // Scales so that integral(|phi|^2 dx) = 1; throws on a zero field.
    void normalize();
};

// Rectangle-rule quadrature sum(samples)*dx; exact for smooth periodic
// integrands on the grid.
double integrate(const std::vector<double>& samples, const Grid1D& grid);
double integrate(const double* samples, int n, const Grid1D& grid);

std::vector<double> density(const ComplexField& field);

cplx inner_product(const ComplexField& a, const ComplexField& b);

}  // namespace bec
