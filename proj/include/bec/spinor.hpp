#pragma once

#include <utility>
#include <vector>

#include "bec/grid.hpp"
#include "bec/integrators.hpp"
#include "bec/potentials.hpp"
#include "bec/qubit.hpp"

namespace bec {

// Two-component condensate on a shared grid; total norm is 1, split
// between the components.
struct SpinorField {
    ComplexField comp0;
    ComplexField comp1;

    double norm_squared() const;
    void normalize();
    std::pair<double, double> component_norms() const;
};

struct SpinorParams {
    double rabi = 0.0;      // omega
    double detuning = 0.0;  // delta
    double g00 = 0.0, g01 = 0.0, g11 = 0.0;  // g10 == g01
    double n_particles = 1.0;
    double omega_rho = 0.0;  // transverse curvature, dropped in the 1D reduction
    double omega_z = 1.0;    // axial trap curvature
    double z0 = 0.0, z1 = 0.0;  // per-component trap minima
};

// Closed-form two-level unitary exp[-i ((omega/2) sigma_x + (delta/2) sigma_z) tau].
QubitState internal_rabi(const QubitState& c, double rabi, double detuning, double tau);

// Per-component trap arrays V_n = omega_z (z - z_n)^2 / 2; throws when a
// minimum falls outside the grid interior.
std::pair<std::vector<double>, std::vector<double>> displaced_potentials(
    const SpinorParams& p, const Grid1D& grid);

struct SpinorObservables {
    double t = 0.0;
    double norm = 0.0;
    double p0 = 0.0;
    double p1 = 0.0;
    double energy = 0.0;
    cplx overlap01{0.0, 0.0};
};

struct SpinorTrajectory {
    std::vector<double> times;
    std::vector<SpinorField> fields;
    std::vector<SpinorObservables> observables;
    double dt = 0.0;
    double record_dt = 0.0;

    std::size_t size() const { return times.size(); }
};

// Split-step evolution of the coupled two-component equations: kinetic
// half-steps per component, then the pointwise 2x2 Hermitian position
// matrix (trap + mean field + detuning on the diagonal, omega/2 off it)
// exponentiated exactly.
SpinorTrajectory evolve_spinor(const SpinorField& field, const SpinorParams& p,
                               const IntegratorConfig& cfg, double t_final);

double spinor_energy(const SpinorField& field, const SpinorParams& p);

}  // namespace bec
