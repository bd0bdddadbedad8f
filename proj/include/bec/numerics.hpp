#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "bec/grid.hpp"

namespace bec {

// Spectral second derivative on the periodic grid. Returns laplacian(phi);
// callers apply the -1/2 kinetic prefactor themselves.
ComplexField laplacian(const ComplexField& field);

// Spectral first derivative (used by the energy functional).
ComplexField gradient(const ComplexField& field);

// One Strang-split step of  i dphi/dt = (-lap/2 + V + g*N*|phi|^2) phi
// in hbar = m = 1 units: half kinetic phase in Fourier space, full
// potential + nonlinear phase in position space, half kinetic phase.
// Norm-preserving by construction.
ComplexField split_step(const ComplexField& field, const std::vector<double>& potential,
                        double nonlinear_coeff, double n_scale, double dt);

// In-place variant evolving many steps; the callback (when set) fires
// after each step with the 1-based step index.
void split_step_evolve(ComplexField& field, const std::vector<double>& potential,
                       double nonlinear_coeff, double n_scale, double dt, long steps,
                       const std::function<void(long, const ComplexField&)>& on_step = {});

struct RelaxResult {
    ComplexField field;
    double chemical_potential = 0.0;
    double energy = 0.0;
    long iterations = 0;
    double last_residual = 0.0;  // relative energy change at the final step
};

// Imaginary-time gradient flow to the lowest-energy normalized solution,
// renormalizing each step and stopping when the relative energy change
// per step drops below tol. Throws (with the last residual) when max_steps
// is exhausted. An optional projector is applied after every step, which
// deflation uses to pin excited states.
RelaxResult imaginary_time_relax(const ComplexField& initial,
                                 const std::vector<double>& potential,
                                 double nonlinear_coeff, double n_scale, double dt_imag,
                                 double tol, long max_steps = 200000,
                                 const std::function<void(ComplexField&)>& project = {});

// mu = integral phi* (-lap/2 + V + gN|phi|^2) phi dx
double chemical_potential(const ComplexField& field, const std::vector<double>& potential,
                          double nonlinear_coeff, double n_scale);

// E[phi] = integral |grad phi|^2/2 + V|phi|^2 + (gN/2)|phi|^4 dx
double energy_functional(const ComplexField& field, const std::vector<double>& potential,
                         double nonlinear_coeff, double n_scale);

// L2 norm of (-lap/2 + V + gN|phi|^2 - mu) phi
double stationary_residual(const ComplexField& field, const std::vector<double>& potential,
                           double nonlinear_coeff, double n_scale, double mu);

}  // namespace bec
