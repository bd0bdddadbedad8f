#pragma once

#include <stdexcept>
#include <vector>

#include "bec/grid.hpp"

namespace bec {

// Trapping potentials used across the solvers.
//   harmonic(omega):              V = omega^2 x^2 / 2
//   double_well(v0, d):           V = v0 (x^2 - d^2)^2 / d^4   (minima at +-d,
//                                 barrier height v0 at x = 0)
//   displaced_harmonic(oz, zn):   V = oz (x - zn)^2 / 2        (curvature oz)
//   tabulated(values):            arbitrary samples matching the grid
struct PotentialSpec {
    enum class Kind { harmonic, double_well, displaced_harmonic, tabulated };

    Kind kind = Kind::harmonic;
    double omega = 1.0;        // harmonic
    double v0 = 0.0;           // double_well barrier height
    double d = 0.0;            // double_well half separation
    double omega_rho = 0.0;    // displaced_harmonic transverse curvature (unused in 1D)
    double omega_z = 1.0;      // displaced_harmonic axial curvature
    double z_center = 0.0;     // displaced_harmonic minimum
    std::vector<double> table;

    static PotentialSpec harmonic(double omega) {
        PotentialSpec p;
        p.kind = Kind::harmonic;
        p.omega = omega;
        return p;
    }
    static PotentialSpec double_well(double v0, double d) {
        if (v0 <= 0.0 || d <= 0.0)
            throw std::invalid_argument("double_well: v0 and d must be positive");
        PotentialSpec p;
        p.kind = Kind::double_well;
        p.v0 = v0;
        p.d = d;
        return p;
    }
    static PotentialSpec displaced_harmonic(double omega_rho, double omega_z, double z_center) {
        PotentialSpec p;
        p.kind = Kind::displaced_harmonic;
        p.omega_rho = omega_rho;
        p.omega_z = omega_z;
        p.z_center = z_center;
        return p;
    }
    static PotentialSpec tabulated(std::vector<double> values) {
        PotentialSpec p;
        p.kind = Kind::tabulated;
        p.table = std::move(values);
        return p;
    }

    std::vector<double> sample(const Grid1D& grid) const;

    // Harmonic expansion of one double-well branch about its minimum at
    // x = +-d: curvature V'' = 8 v0 / d^2.
    double local_well_curvature() const;
};

}  // namespace bec
