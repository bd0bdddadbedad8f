#include "bec/numerics.hpp"

#include <cmath>
#include <stdexcept>

#include "bec/fft.hpp"
#include "bec/kernels.hpp"

namespace bec {

namespace {

const cplx kI{0.0, 1.0};

void check_potential(const std::vector<double>& potential, const Grid1D& grid) {
    if (static_cast<int>(potential.size()) != grid.n_points)
        throw std::invalid_argument("potential samples do not match grid");
}

// -k^2/2 table reused by the split steps
std::vector<double> half_kinetic(const Grid1D& grid) {
    std::vector<double> k = wavenumbers(grid);
    for (double& v : k) v = 0.5 * v * v;
    return k;
}

}  // namespace

ComplexField laplacian(const ComplexField& field) {
    ComplexField out = field;
    const Fft1d& fft = fft_for(field.size());
    fft.forward(out.values.data());
    std::vector<double> k = wavenumbers(field.grid);
    for (int j = 0; j < field.size(); ++j) out.values[j] *= -k[j] * k[j];
    fft.backward(out.values.data());
    return out;
}

ComplexField gradient(const ComplexField& field) {
    ComplexField out = field;
    const Fft1d& fft = fft_for(field.size());
    fft.forward(out.values.data());
    std::vector<double> k = wavenumbers(field.grid);
    for (int j = 0; j < field.size(); ++j) out.values[j] *= kI * k[j];
    fft.backward(out.values.data());
    return out;
}

std::vector<cplx> rk4_step(const std::vector<cplx>& state, double t, double dt,
                           const RhsFn& rhs) {
    return rk4_step<std::vector<cplx>>(state, t, dt, rhs);
}

ComplexField split_step(const ComplexField& field, const std::vector<double>& potential,
                        double nonlinear_coeff, double n_scale, double dt) {
    ComplexField out = field;
    split_step_evolve(out, potential, nonlinear_coeff, n_scale, dt, 1);
    return out;
}

void split_step_evolve(ComplexField& field, const std::vector<double>& potential,
                       double nonlinear_coeff, double n_scale, double dt, long steps,
                       const std::function<void(long, const ComplexField&)>& on_step) {
    check_potential(potential, field.grid);
    const int n = field.size();
    const Fft1d& fft = fft_for(n);
    const std::vector<double> t_half = half_kinetic(field.grid);
    const double gn = nonlinear_coeff * n_scale;

    // exp(-i T dt/2) as a fixed table; the potential phase is rebuilt each
    // step because it depends on |phi|^2.
    std::vector<cplx> kin_table(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) kin_table[static_cast<std::size_t>(j)] = std::exp(-kI * t_half[j] * (0.5 * dt));

    std::vector<double> veff(static_cast<std::size_t>(n));
    cplx* psi = field.values.data();

    for (long s = 0; s < steps; ++s) {
        fft.forward(psi);
        kernels::apply_table(psi, kin_table.data(), n);
        fft.backward(psi);

        for (int j = 0; j < n; ++j)
            veff[static_cast<std::size_t>(j)] = potential[static_cast<std::size_t>(j)] + gn * std::norm(psi[j]);
        kernels::apply_exp_weight(psi, veff.data(), n, -kI * dt);

        fft.forward(psi);
        kernels::apply_table(psi, kin_table.data(), n);
        fft.backward(psi);

        if (on_step) on_step(s + 1, field);
    }
}

double chemical_potential(const ComplexField& field, const std::vector<double>& potential,
                          double nonlinear_coeff, double n_scale) {
    check_potential(potential, field.grid);
    ComplexField lap = laplacian(field);
    const double gn = nonlinear_coeff * n_scale;
    double mu = 0.0;
    for (int j = 0; j < field.size(); ++j) {
        const cplx hphi = -0.5 * lap.values[j] +
                          (potential[static_cast<std::size_t>(j)] + gn * std::norm(field.values[j])) * field.values[j];
        mu += (std::conj(field.values[j]) * hphi).real();
    }
    return mu * field.grid.dx;
}

double energy_functional(const ComplexField& field, const std::vector<double>& potential,
                         double nonlinear_coeff, double n_scale) {
    check_potential(potential, field.grid);
    ComplexField grad = gradient(field);
    const double gn = nonlinear_coeff * n_scale;
    double e = 0.0;
    for (int j = 0; j < field.size(); ++j) {
        const double rho = std::norm(field.values[j]);
        e += 0.5 * std::norm(grad.values[j]) + potential[static_cast<std::size_t>(j)] * rho +
             0.5 * gn * rho * rho;
    }
    return e * field.grid.dx;
}

double stationary_residual(const ComplexField& field, const std::vector<double>& potential,
                           double nonlinear_coeff, double n_scale, double mu) {
    check_potential(potential, field.grid);
    ComplexField lap = laplacian(field);
    const double gn = nonlinear_coeff * n_scale;
    double r2 = 0.0;
    for (int j = 0; j < field.size(); ++j) {
        const cplx res = -0.5 * lap.values[j] +
                         (potential[static_cast<std::size_t>(j)] + gn * std::norm(field.values[j]) - mu) * field.values[j];
        r2 += std::norm(res);
    }
    return std::sqrt(r2 * field.grid.dx);
}

RelaxResult imaginary_time_relax(const ComplexField& initial,
                                 const std::vector<double>& potential,
                                 double nonlinear_coeff, double n_scale, double dt_imag,
                                 double tol, long max_steps,
                                 const std::function<void(ComplexField&)>& project) {
    check_potential(potential, initial.grid);
    if (tol <= 0.0) throw std::invalid_argument("imaginary_time_relax: tol must be positive");
    if (dt_imag <= 0.0) throw std::invalid_argument("imaginary_time_relax: dt_imag must be positive");

    const int n = initial.size();
    const Fft1d& fft = fft_for(n);
    const std::vector<double> t_half = half_kinetic(initial.grid);
    const double gn = nonlinear_coeff * n_scale;

    std::vector<cplx> kin_table(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) kin_table[static_cast<std::size_t>(j)] = std::exp(-t_half[j] * (0.5 * dt_imag));

    RelaxResult result;
    result.field = initial;
    result.field.normalize();
    if (project) {
        project(result.field);
        result.field.normalize();
    }

    std::vector<double> veff(static_cast<std::size_t>(n));
    double energy = energy_functional(result.field, potential, nonlinear_coeff, n_scale);
    cplx* psi = result.field.values.data();

    for (long s = 1; s <= max_steps; ++s) {
        fft.forward(psi);
        kernels::apply_table(psi, kin_table.data(), n);
        fft.backward(psi);

        for (int j = 0; j < n; ++j)
            veff[static_cast<std::size_t>(j)] = potential[static_cast<std::size_t>(j)] + gn * std::norm(psi[j]);
        kernels::apply_exp_weight(psi, veff.data(), n, cplx(-dt_imag, 0.0));

        fft.forward(psi);
        kernels::apply_table(psi, kin_table.data(), n);
        fft.backward(psi);

        if (project) project(result.field);
        result.field.normalize();

        const double e_new = energy_functional(result.field, potential, nonlinear_coeff, n_scale);
        const double rel = std::abs(e_new - energy) / std::max(std::abs(e_new), 1e-300);
        energy = e_new;
        result.iterations = s;
        result.last_residual = rel;
        if (rel < tol) {
            result.energy = energy;
            result.chemical_potential =
                chemical_potential(result.field, potential, nonlinear_coeff, n_scale);
            return result;
        }
    }
    throw std::runtime_error("imaginary_time_relax: no convergence within max_steps, last relative energy change " +
                             std::to_string(result.last_residual));
}

}  // namespace bec
