#include "bec/spinor.hpp"

#include <cmath>
#include <string>

#include "bec/fft.hpp"
#include "bec/kernels.hpp"
#include "bec/numerics.hpp"

namespace bec {

namespace {
const cplx kI{0.0, 1.0};
}

double SpinorField::norm_squared() const {
    return comp0.norm_squared() + comp1.norm_squared();
}

void SpinorField::normalize() {
    const double n2 = norm_squared();
    if (n2 <= 0.0) throw std::runtime_error("SpinorField::normalize: zero field");
    const double s = 1.0 / std::sqrt(n2);
    for (cplx& v : comp0.values) v *= s;
    for (cplx& v : comp1.values) v *= s;
}

std::pair<double, double> SpinorField::component_norms() const {
    return {comp0.norm_squared(), comp1.norm_squared()};
}

QubitState internal_rabi(const QubitState& c, double rabi, double detuning, double tau) {
    const double r = 0.5 * std::sqrt(rabi * rabi + detuning * detuning);
    if (r == 0.0) return c;
    const double cs = std::cos(r * tau);
    const double sn = std::sin(r * tau) / (2.0 * r);
    // exp(-i (omega sigma_x + delta sigma_z) tau / 2)
    const cplx u00 = cs - kI * sn * detuning;
    const cplx u01 = -kI * sn * rabi;
    const cplx u11 = cs + kI * sn * detuning;
    return QubitState{u00 * c.c0 + u01 * c.c1, u01 * c.c0 + u11 * c.c1};
}

std::pair<std::vector<double>, std::vector<double>> displaced_potentials(const SpinorParams& p,
                                                                         const Grid1D& grid) {
    if (p.z0 <= grid.x_min || p.z0 >= grid.x_max || p.z1 <= grid.x_min || p.z1 >= grid.x_max)
        throw std::invalid_argument("displaced_potentials: trap minima outside the grid interior");
    auto v0 = PotentialSpec::displaced_harmonic(p.omega_rho, p.omega_z, p.z0).sample(grid);
    auto v1 = PotentialSpec::displaced_harmonic(p.omega_rho, p.omega_z, p.z1).sample(grid);
    return {std::move(v0), std::move(v1)};
}

double spinor_energy(const SpinorField& field, const SpinorParams& p) {
    const Grid1D& grid = field.comp0.grid;
    const auto [v0, v1] = displaced_potentials(p, grid);
    const ComplexField g0 = gradient(field.comp0);
    const ComplexField g1 = gradient(field.comp1);
    const double n = p.n_particles;

    double e = 0.0;
    for (int j = 0; j < grid.n_points; ++j) {
        const double r0 = std::norm(field.comp0.values[j]);
        const double r1 = std::norm(field.comp1.values[j]);
        e += 0.5 * (std::norm(g0.values[j]) + std::norm(g1.values[j]));
        e += v0[static_cast<std::size_t>(j)] * r0 + v1[static_cast<std::size_t>(j)] * r1;
        e += 0.5 * p.detuning * (r0 - r1);
        e += p.rabi * (std::conj(field.comp0.values[j]) * field.comp1.values[j]).real();
        e += 0.5 * n * (p.g00 * r0 * r0 + 2.0 * p.g01 * r0 * r1 + p.g11 * r1 * r1);
    }
    return e * grid.dx;
}

SpinorTrajectory evolve_spinor(const SpinorField& initial, const SpinorParams& p,
                               const IntegratorConfig& cfg, double t_final) {
    cfg.validate();
    const Grid1D& grid = initial.comp0.grid;
    if (!(initial.comp1.grid == grid))
        throw std::invalid_argument("evolve_spinor: components live on different grids");
    const int n = grid.n_points;
    const auto [v0, v1] = displaced_potentials(p, grid);
    const long steps = static_cast<long>(std::llround(t_final / cfg.dt));
    const Fft1d& fft = fft_for(n);

    std::vector<double> k = wavenumbers(grid);
    std::vector<cplx> kin_half(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
        kin_half[static_cast<std::size_t>(j)] = std::exp(-kI * (0.25 * cfg.dt * k[static_cast<std::size_t>(j)] * k[static_cast<std::size_t>(j)]));

    SpinorField state = initial;
    SpinorTrajectory traj;
    traj.dt = cfg.dt;
    traj.record_dt = cfg.dt * cfg.record_stride;

    auto record = [&](double t) {
        SpinorObservables obs;
        obs.t = t;
        obs.norm = state.norm_squared();
        std::tie(obs.p0, obs.p1) = state.component_norms();
        obs.energy = spinor_energy(state, p);
        obs.overlap01 = inner_product(state.comp0, state.comp1);
        traj.times.push_back(t);
        traj.fields.push_back(state);
        traj.observables.push_back(obs);
    };
    record(0.0);

    const double np = p.n_particles;
    for (long s = 1; s <= steps; ++s) {
        cplx* psi0 = state.comp0.values.data();
        cplx* psi1 = state.comp1.values.data();

        fft.forward(psi0);
        fft.forward(psi1);
        kernels::apply_table(psi0, kin_half.data(), n);
        kernels::apply_table(psi1, kin_half.data(), n);
        fft.backward(psi0);
        fft.backward(psi1);

        // Pointwise exact 2x2 exponential of the Hermitian position-space
        // matrix [[A, w/2], [w/2, B]].
        const double w2 = 0.5 * p.rabi;
        for (int j = 0; j < n; ++j) {
            const double r0 = std::norm(psi0[j]);
            const double r1 = std::norm(psi1[j]);
            const double a = v0[static_cast<std::size_t>(j)] + 0.5 * p.detuning +
                             np * (p.g00 * r0 + p.g01 * r1);
            const double b = v1[static_cast<std::size_t>(j)] - 0.5 * p.detuning +
                             np * (p.g01 * r0 + p.g11 * r1);
            const double mean = 0.5 * (a + b);
            const double half_gap = 0.5 * (a - b);
            const double r = std::sqrt(half_gap * half_gap + w2 * w2);
            const cplx phase = std::exp(-kI * mean * cfg.dt);
            double cs, snr;
            if (r * cfg.dt < 1e-8) {
                cs = 1.0;
                snr = cfg.dt;  // sin(r dt)/r -> dt
            } else {
                cs = std::cos(r * cfg.dt);
                snr = std::sin(r * cfg.dt) / r;
            }
            const cplx u00 = phase * (cs - kI * snr * half_gap);
            const cplx u01 = phase * (-kI * snr * w2);
            const cplx u11 = phase * (cs + kI * snr * half_gap);
            const cplx a0 = psi0[j], a1 = psi1[j];
            psi0[j] = u00 * a0 + u01 * a1;
            psi1[j] = u01 * a0 + u11 * a1;
        }

        fft.forward(psi0);
        fft.forward(psi1);
        kernels::apply_table(psi0, kin_half.data(), n);
        kernels::apply_table(psi1, kin_half.data(), n);
        fft.backward(psi0);
        fft.backward(psi1);

        const double nrm = state.norm_squared();
        if (!std::isfinite(nrm))
            throw std::runtime_error("evolve_spinor: non-finite field at step " + std::to_string(s));
        if (s % cfg.record_stride == 0 || s == steps) record(s * cfg.dt);
    }
    return traj;
}

}  // namespace bec
