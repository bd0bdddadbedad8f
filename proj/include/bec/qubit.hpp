#pragma once

#include <array>
#include <complex>
#include <string>
#include <vector>

#include "bec/modes.hpp"

namespace bec {

struct QubitState {
    cplx c0{1.0, 0.0};
    cplx c1{0.0, 0.0};

    double norm_squared() const { return std::norm(c0) + std::norm(c1); }
};

// Normalizes (c0, c1); zero-norm input is rejected rather than patched.
QubitState make_qubit_state(cplx c0, cplx c1);

struct OneBitParams {
    double e_onsite = 0.0;  // E
    double omega = 0.0;     // tunneling
    double kappa_n = 0.0;   // kappa * N
    double mu1_n = 0.0;     // mu1 * N (0 without a long-range kernel)
    double mu2_n = 0.0;     // mu2 * N

    static OneBitParams from_couplings(const CouplingSet& c);
};

// -i H(state) state with
// H = E I + Omega sigma_x
//     + diag(kN|c0|^2 + m1N|c0|^2 + m2N|c1|^2,
//            kN|c1|^2 + m1N|c1|^2 + m2N|c0|^2)
std::array<cplx, 2> one_bit_rhs(const QubitState& state, const OneBitParams& p);

struct OneBitResult {
    QubitState state;        // renormalized final state
    double norm_drift = 0.0; // |norm - 1| accumulated by the integrator
};

// RK4 integration of one_bit_rhs; throws if the norm drift exceeds 1e-6.
OneBitResult evolve_one_bit(const QubitState& state, const OneBitParams& p, double tau,
                            double dt);

using Mat2 = std::array<std::array<cplx, 2>, 2>;

// exp[-i (E I + Omega sigma_x) tau] in closed form.
Mat2 linear_gate(double omega, double e_onsite, double tau);

QubitState apply(const Mat2& u, const QubitState& q);

// c_n -> c_n exp(-i kappaN |c_n|^2 tau); exact since the diagonal flow
// conserves the moduli.
QubitState nonlinear_twist(const QubitState& state, double kappa_n, double tau);

struct DistanceSeries {
    std::vector<double> times;
    std::vector<double> distances;
};

// Co-evolves two states under the same one-bit flow and samples their
// Euclidean distance.
DistanceSeries state_divergence(const QubitState& s1, const QubitState& s2,
                                const OneBitParams& p, double tau, double dt,
                                int samples = 200);

// Time average of ||c0|^2 - |c1|^2| along the one-bit flow.
double time_averaged_imbalance(const QubitState& s0, const OneBitParams& p, double t_final,
                               double dt);

// Critical Lambda = kappaN/(2|Omega|) of the self-trapping transition,
// located by bisection on the time-averaged imbalance threshold.
double find_lambda_critical(double omega, const QubitState& s0, double t_final, double dt,
                            double lambda_lo, double lambda_hi, double threshold = 0.2,
                            int iterations = 24);

// ---- two-bit ----

struct TwoQubitState {
    std::array<std::array<cplx, 2>, 2> c{};  // C[n_a][n_b]

    double norm_squared() const;
};

TwoQubitState make_two_qubit_state(const std::array<cplx, 4>& flat);
TwoQubitState product_state(const QubitState& a, const QubitState& b);

// 2|det C|, zero iff the coefficient matrix factorizes.
double entanglement_measure(const TwoQubitState& state);

// One-sided basis change C -> U_a C U_b^T (e.g. to the (phi0 +- phi1)/sqrt2
// basis via hadamard_like()).
TwoQubitState apply_basis_change(const TwoQubitState& state, const Mat2& u_a, const Mat2& u_b);
Mat2 hadamard_like();

enum class CoefficientMode { unset, as_printed, derived };

// Rank-4 overlap tensor over the two-mode basis; entries are real because
// the localized modes are real.
struct Rank4 {
    std::array<double, 16> v{};
    double& operator()(int n, int n1, int q, int p) {
        return v[static_cast<std::size_t>(((n * 2 + n1) * 2 + q) * 2 + p)];
    }
    double operator()(int n, int n1, int q, int p) const {
        return v[static_cast<std::size_t>(((n * 2 + n1) * 2 + q) * 2 + p)];
    }
};

struct TwoBitParams {
    CoefficientMode coefficient_mode = CoefficientMode::unset;

    double e_a = 0.0, e_b = 0.0;
    double omega_a = 0.0, omega_b = 0.0;
    double g_a = 0.0, g_b = 0.0;
    double chi_a = 0.0, chi_b = 0.0;
    double n_particles = 1.0;
    double mu1 = 0.0, mu2 = 0.0;
    double nu1 = 0.0, nu2 = 0.0;

    bool include_same_condensate_w = true;

    // Derived-mode tensors: t_* hold quartic mode overlaps, k_* the
    // long-range kernel overlaps (same-condensate and cross).
    Rank4 t_a, t_b, k_a, k_b, k_ab, k_ba;
};

// Builds the full parameter set, including the derived-mode tensors, from
// localized modes and a kernel.
TwoBitParams make_two_bit_params(const ModePair& mp_a, const ModePair& mp_b,
                                 const LongRangeKernel& kernel, double g_a, double g_b,
                                 double n_particles,
                                 CoefficientMode mode = CoefficientMode::derived);

// In as_printed mode, the published matrix equation verbatim (kappa read
// as the bare quartic overlap chi). In derived mode, the mechanical
// projection of the joint-field equation of motion onto the two-mode
// ansatz via the stored tensors, with no small-overlap approximations.
std::array<std::array<cplx, 2>, 2> two_bit_rhs(const TwoQubitState& state,
                                               const TwoBitParams& p);

struct TwoBitResult {
    TwoQubitState state;
    double norm_drift = 0.0;
};

TwoBitResult evolve_two_bit(const TwoQubitState& state, const TwoBitParams& p, double tau,
                            double dt);

// Omega = 0 closed form of the printed matrix equation: every entry only
// accumulates the diagonal phase G + N F evaluated at the initial moduli.
// Throws when either Omega is nonzero.
TwoQubitState conditional_phase_closed_form(const TwoBitParams& p, const TwoQubitState& c0,
                                            double tau);

// Printed G + N F diagnostics at a given state (used by the closed form,
// tests and the comparison report).
std::array<double, 4> printed_diagonal_phases(const TwoBitParams& p, const TwoQubitState& c);

// Plain-text report contrasting the printed coefficients against the
// mechanically projected ones on a reference state.
std::string two_bit_comparison_report(const TwoBitParams& p, const TwoQubitState& reference);

}  // namespace bec
