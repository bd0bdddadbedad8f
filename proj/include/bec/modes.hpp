#pragma once

#include <string>
#include <vector>

#include "bec/grid.hpp"
#include "bec/potentials.hpp"

namespace bec {

// Even long-range interaction profile between atoms; the transverse
// separation between two condensates' axes is added in quadrature when
// evaluating cross-condensate couplings.
struct LongRangeKernel {
    enum class Kind { none, regularized_dipole, gaussian };

    Kind kind = Kind::none;
    double w0 = 0.0;      // overall strength
    double a = 1.0;       // dipole regularization length
    double s = 1.0;       // gaussian width
    double offset = 0.0;  // transverse axis separation for cross couplings

    static LongRangeKernel none() { return {}; }
    static LongRangeKernel regularized_dipole(double w0, double a, double offset = 0.0) {
        if (a <= 0.0) throw std::invalid_argument("regularized_dipole: a must be positive");
        LongRangeKernel k;
        k.kind = Kind::regularized_dipole;
        k.w0 = w0;
        k.a = a;
        k.offset = offset;
        return k;
    }
    static LongRangeKernel gaussian(double w0, double s, double offset = 0.0) {
        if (s <= 0.0) throw std::invalid_argument("gaussian kernel: s must be positive");
        LongRangeKernel k;
        k.kind = Kind::gaussian;
        k.w0 = w0;
        k.s = s;
        k.offset = offset;
        return k;
    }

    // W at separation x along the shared axis (same condensate).
    double eval(double x) const { return eval_at_distance(x, 0.0); }
    // W between the two condensates: transverse offset in quadrature.
    double cross_eval(double x) const { return eval_at_distance(x, offset); }

    double eval_at_distance(double x, double transverse) const;
};

// Orthonormal localized modes of a double well plus diagnostics.
struct ModePair {
    ComplexField phi0;       // left mode, (psi_s + psi_a)/sqrt(2)
    ComplexField phi1;       // right mode
    double e_local = 0.0;    // single-particle energy of each mode
    double e_split = 0.0;    // antisymmetric minus symmetric eigenvalue
    double epsilon_overlap = 0.0;  // squared overlap of the raw local-well states
    double leakage = 0.0;    // probability of phi0 right of the barrier
};

// Two lowest single-particle eigenstates by imaginary-time relaxation with
// deflation, recombined into left/right modes. Also relaxes the raw
// single-well ground states to report their mutual squared overlap.
ModePair localized_modes(const PotentialSpec& double_well, const Grid1D& grid);

struct TunnelingOmega {
    double omega_spec = 0.0;      // -(E_a - E_s)/2, the authoritative value
    double omega_integral = 0.0;  // overlap-integral diagnostic
    double rel_deviation = 0.0;
};

TunnelingOmega tunneling_omega(const ModePair& mp, const PotentialSpec& double_well);

// chi = integral |phi|^4 dx for a normalized field.
double quartic_overlap(const ComplexField& phi);

// mu1 = <|phi0|^2 | W | |phi0|^2>, mu2 = <|phi0|^2 | W | |phi1|^2>;
// computed by direct double quadrature and by FFT convolution, which must
// agree to 1e-8 relative (throws otherwise).
std::pair<double, double> same_condensate_couplings(const ModePair& mp,
                                                    const LongRangeKernel& kernel);

// nu1 couples same-labeled wells across the two condensates, nu2 the
// cross-labeled ones; both use the offset-in-quadrature kernel.
std::pair<double, double> cross_condensate_couplings(const ModePair& mp_a,
                                                     const ModePair& mp_b,
                                                     const LongRangeKernel& kernel);

// Scalar coefficients consumed by the reduced models.
struct CouplingSet {
    double e_onsite = 0.0;
    double omega = 0.0;
    double chi = 0.0;    // bare quartic overlap
    double kappa = 0.0;  // g * chi
    double mu1 = 0.0;
    double mu2 = 0.0;
    double nu1 = 0.0;
    double nu2 = 0.0;
    double n_particles = 1.0;
    double g = 0.0;

    std::string to_text() const;                   // flat key=value block
    static CouplingSet from_text(const std::string& text);
};

CouplingSet derive_couplings(const ModePair& mp, const LongRangeKernel& kernel, double g,
                             double n_particles);

}  // namespace bec
