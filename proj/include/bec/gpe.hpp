#pragma once

#include <vector>

#include "bec/grid.hpp"
#include "bec/integrators.hpp"
#include "bec/numerics.hpp"
#include "bec/potentials.hpp"

namespace bec {

struct CondensateParams {
    double g = 0.0;            // s-wave interaction strength
    double n_particles = 1.0;  // mean particle number N

    void validate() const {
        if (n_particles <= 0.0)
            throw std::invalid_argument("CondensateParams: n_particles must be positive");
        if (!std::isfinite(g)) throw std::invalid_argument("CondensateParams: g must be finite");
    }
};

// g = 4*pi*hbar^2*eta/m reduced to hbar = 1; the 3D conversion, kept for
// reference (the 1D model usually takes g directly).
double scattering_to_coupling(double eta, double mass);

struct ObservableRecord {
    double t = 0.0;
    double norm = 0.0;
    double energy = 0.0;
    double mean_x = 0.0;
    double p_left = 0.0;
    double p_right = 0.0;
};

struct Trajectory {
    std::vector<double> times;
    std::vector<ComplexField> fields;
    std::vector<ObservableRecord> observables;

    double dt = 0.0;           // solver step
    double record_dt = 0.0;    // spacing between stored snapshots

    std::size_t size() const { return times.size(); }
};

struct GroundState {
    ComplexField field;
    double mu = 0.0;
    double energy = 0.0;
    double residual = 0.0;
};

// Imaginary-time relaxation (with step-size annealing) plus a stationary
// residual check; throws if the residual exceeds 1e-6.
GroundState ground_state(const PotentialSpec& potential, const CondensateParams& params,
                         const Grid1D& grid);

// Split-step real-time evolution recording norm, energy, <x> and well
// populations every record_stride steps.
Trajectory evolve(const ComplexField& initial, const PotentialSpec& potential,
                  const CondensateParams& params, const IntegratorConfig& cfg,
                  double t_final);

double energy_functional(const ComplexField& field, const PotentialSpec& potential,
                         const CondensateParams& params);

// p_left = integral_{x < x_split} |phi|^2 dx, p_right = 1 - p_left.
std::pair<double, double> well_populations(const ComplexField& field, double x_split);

// Maximum bilinear consistency residual of a recorded trajectory: the
// two-point relation i d_t phi(x') phi*(x) + i d_t phi*(x) phi(x') must
// equal the corresponding combination of (-lap/2 + V + gN|.|^2) terms.
// Evaluated with centered time differences on a fixed 8x8 subsample of
// grid-point pairs; O(record_dt^2) for a correct trajectory.
double odlro_residual(const Trajectory& traj, const PotentialSpec& potential,
                      const CondensateParams& params);

}  // namespace bec
