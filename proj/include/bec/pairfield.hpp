#pragma once

#include <array>
#include <vector>

#include "bec/grid.hpp"
#include "bec/integrators.hpp"
#include "bec/modes.hpp"
#include "bec/potentials.hpp"
#include "bec/qubit.hpp"

namespace bec {

// Joint wavefunction of two condensates on the product grid, either scalar
// (1 component) or with 4 internal components labelled 00, 01, 10, 11.
// Component (ia, ib) entries are stored row-major: values[ia * nb + ib].
struct PairField {
    Grid1D grid_a, grid_b;
    std::vector<std::vector<cplx>> components;

    PairField() = default;
    PairField(const Grid1D& ga, const Grid1D& gb, int n_components);

    int n_components() const { return static_cast<int>(components.size()); }
    int na() const { return grid_a.n_points; }
    int nb() const { return grid_b.n_points; }
    double cell() const { return grid_a.dx * grid_b.dx; }

    double norm_squared() const;
    void normalize();
};

PairField product_pair_field(const ComplexField& a, const ComplexField& b);

struct PairParams {
    double g_a = 0.0, g_b = 0.0;
    double n_particles = 1.0;
    LongRangeKernel kernel;  // cross-condensate interaction (offset applies)
    PotentialSpec potential_a = PotentialSpec::harmonic(1.0);
    PotentialSpec potential_b = PotentialSpec::harmonic(1.0);
    bool include_same_condensate_w = true;

    // 4-component case: per-component potentials and symmetric spinor
    // couplings g[n][n'] per axis.
    std::array<PotentialSpec, 2> potentials_a{PotentialSpec::harmonic(1.0),
                                              PotentialSpec::harmonic(1.0)};
    std::array<PotentialSpec, 2> potentials_b{PotentialSpec::harmonic(1.0),
                                              PotentialSpec::harmonic(1.0)};
    std::array<std::array<double, 2>, 2> g_spinor_a{{{0.0, 0.0}, {0.0, 0.0}}};
    std::array<std::array<double, 2>, 2> g_spinor_b{{{0.0, 0.0}, {0.0, 0.0}}};
};

struct PairObservables {
    double t = 0.0;
    double norm = 0.0;
    double energy = 0.0;
    std::array<double, 4> component_norms{};
};

struct PairTrajectory {
    std::vector<double> times;
    std::vector<PairField> fields;
    std::vector<PairObservables> observables;
    double dt = 0.0;
    double record_dt = 0.0;

    std::size_t size() const { return times.size(); }
};

// Split-step evolution of the scalar joint field. The s-wave terms act
// through the marginal density of the same axis; the long-range terms are
// 1D convolutions of the marginals with the (cross-)kernel.
PairTrajectory evolve_pair(const PairField& field, const PairParams& p,
                           const IntegratorConfig& cfg, double t_final);

// Four-component variant with component-dependent potentials. There is no
// coupling between components, so component norms are conserved
// individually.
PairTrajectory evolve_pair_spinor(const PairField& field, const PairParams& p,
                                  const IntegratorConfig& cfg, double t_final);

double pair_energy(const PairField& field, const PairParams& p);

struct ModeProjection {
    TwoQubitState state;   // renormalized coefficients
    double residual = 0.0; // population outside the two-mode manifold
    double raw_norm = 0.0; // sum |C_nm|^2 before renormalization
};

// C_nm = <phi_n phi_m | field> over the product grid (scalar fields only).
ModeProjection project_to_modes(const PairField& field, const ModePair& mp_a,
                                const ModePair& mp_b);

PairField reconstruct_from_modes(const TwoQubitState& c, const ModePair& mp_a,
                                 const ModePair& mp_b, const Grid1D& grid_a,
                                 const Grid1D& grid_b);

struct SchmidtAnalysis {
    double defect = 0.0;  // 1 - (largest singular value)^2
    std::vector<double> spectrum;  // squared singular values, descending
};

// Singular value decomposition of the quadrature-weighted coefficient
// matrix of a normalized scalar pair field.
SchmidtAnalysis schmidt_defect(const PairField& field);

}  // namespace bec
