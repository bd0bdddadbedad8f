#include "bec/gpe.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <tuple>

namespace bec {

double scattering_to_coupling(double eta, double mass) {
    if (mass <= 0.0) throw std::invalid_argument("scattering_to_coupling: mass must be positive");
    return 4.0 * std::numbers::pi * eta / mass;
}

namespace {

ComplexField gaussian_seed(const Grid1D& grid, double center, double width) {
    ComplexField f(grid);
    for (int j = 0; j < grid.n_points; ++j) {
        const double u = (grid.x(j) - center) / width;
        f.values[j] = std::exp(-0.5 * u * u);
    }
    f.normalize();
    return f;
}

double mean_position(const ComplexField& field) {
    double m = 0.0;
    for (int j = 0; j < field.size(); ++j) m += field.grid.x(j) * std::norm(field.values[j]);
    return m * field.grid.dx;
}

}  // namespace

GroundState ground_state(const PotentialSpec& potential, const CondensateParams& params,
                         const Grid1D& grid) {
    params.validate();
    const std::vector<double> v = potential.sample(grid);

    // Seed wide enough to overlap the minimizer for every supported trap.
    double center = 0.0;
    if (potential.kind == PotentialSpec::Kind::displaced_harmonic) center = potential.z_center;
    ComplexField state = gaussian_seed(grid, center, 0.15 * grid.length() / 2.0);

    // Annealed relaxation: coarse steps find the basin, the final fine
    // stage sets the splitting bias well below the residual tolerance.
    RelaxResult relax;
    for (double dtau : {2e-2, 5e-3, 1e-3, 2.5e-4}) {
        relax = imaginary_time_relax(state, v, params.g, params.n_particles, dtau,
                                     1e-13, 400000);
        state = relax.field;
    }

    GroundState out;
    out.field = relax.field;
    out.mu = relax.chemical_potential;
    out.energy = relax.energy;
    out.residual = stationary_residual(out.field, v, params.g, params.n_particles, out.mu);
    if (out.residual > 1e-6)
        throw std::runtime_error("ground_state: stationary residual " +
                                 std::to_string(out.residual) + " exceeds 1e-6");
    return out;
}

double energy_functional(const ComplexField& field, const PotentialSpec& potential,
                         const CondensateParams& params) {
    return energy_functional(field, potential.sample(field.grid), params.g,
                             params.n_particles);
}

std::pair<double, double> well_populations(const ComplexField& field, double x_split) {
    if (x_split <= field.grid.x_min || x_split >= field.grid.x_max)
        throw std::invalid_argument("well_populations: x_split outside the grid");
    double left = 0.0;
    for (int j = 0; j < field.size(); ++j)
        if (field.grid.x(j) < x_split) left += std::norm(field.values[j]);
    left *= field.grid.dx;
    const double total = field.norm_squared();
    return {left, total - left};
}

Trajectory evolve(const ComplexField& initial, const PotentialSpec& potential,
                  const CondensateParams& params, const IntegratorConfig& cfg,
                  double t_final) {
    params.validate();
    cfg.validate();
    const std::vector<double> v = potential.sample(initial.grid);
    const long steps = static_cast<long>(std::llround(t_final / cfg.dt));

    Trajectory traj;
    traj.dt = cfg.dt;
    traj.record_dt = cfg.dt * cfg.record_stride;

    ComplexField state = initial;
    auto record = [&](double t) {
        ObservableRecord rec;
        rec.t = t;
        rec.norm = state.norm_squared();
        rec.energy = energy_functional(state, v, params.g, params.n_particles);
        rec.mean_x = mean_position(state);
        std::tie(rec.p_left, rec.p_right) = well_populations(state, 0.0);
        traj.times.push_back(t);
        traj.fields.push_back(state);
        traj.observables.push_back(rec);
    };
    record(0.0);

    for (long s = 1; s <= steps; ++s) {
        split_step_evolve(state, v, params.g, params.n_particles, cfg.dt, 1);
        for (const cplx& c : state.values)
            if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
                throw std::runtime_error("evolve: non-finite field at step " + std::to_string(s));
        if (s % cfg.record_stride == 0 || s == steps) record(s * cfg.dt);
    }
    return traj;
}

double odlro_residual(const Trajectory& traj, const PotentialSpec& potential,
                      const CondensateParams& params) {
    if (traj.size() < 3) throw std::invalid_argument("odlro_residual: need at least 3 snapshots");
    const Grid1D& grid = traj.fields.front().grid;
    const std::vector<double> v = potential.sample(grid);
    const double gn = params.g * params.n_particles;
    const double dt_rec = traj.record_dt;

    // Fixed 8x8 subsample of grid-point pairs, away from the padded edges.
    std::array<int, 8> idx{};
    for (int k = 0; k < 8; ++k)
        idx[static_cast<std::size_t>(k)] = grid.n_points / 8 * k + grid.n_points / 16;

    const cplx kI{0.0, 1.0};
    double worst = 0.0;
    for (std::size_t s = 1; s + 1 < traj.size(); ++s) {
        const ComplexField& phi = traj.fields[s];
        const ComplexField& prev = traj.fields[s - 1];
        const ComplexField& next = traj.fields[s + 1];
        ComplexField lap = laplacian(phi);

        auto h_phi = [&](int j) {
            return -0.5 * lap.values[j] + v[static_cast<std::size_t>(j)] * phi.values[j];
        };
        auto dt_phi = [&](int j) {
            return (next.values[j] - prev.values[j]) / (2.0 * dt_rec);
        };

        for (int xp : idx) {
            for (int x : idx) {
                const cplx lhs = kI * dt_phi(xp) * std::conj(phi.values[x]) +
                                 kI * std::conj(dt_phi(x)) * phi.values[xp];
                const cplx rhs = h_phi(xp) * std::conj(phi.values[x]) -
                                 std::conj(h_phi(x)) * phi.values[xp] +
                                 gn * std::norm(phi.values[xp]) * phi.values[xp] * std::conj(phi.values[x]) -
                                 gn * std::norm(phi.values[x]) * std::conj(phi.values[x]) * phi.values[xp];
                worst = std::max(worst, std::abs(lhs - rhs));
            }
        }
    }
    return worst;
}

}  // namespace bec
