#include "bec/pairfield.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <cmath>
#include <string>

#include "bec/kernels.hpp"

namespace bec {

namespace {
const cplx kI{0.0, 1.0};
}

PairField::PairField(const Grid1D& ga, const Grid1D& gb, int n_components)
    : grid_a(ga), grid_b(gb) {
    if (n_components != 1 && n_components != 4)
        throw std::invalid_argument("PairField: component count must be 1 or 4");
    components.assign(static_cast<std::size_t>(n_components),
                      std::vector<cplx>(static_cast<std::size_t>(ga.n_points) * gb.n_points,
                                        cplx(0.0, 0.0)));
}

double PairField::norm_squared() const {
    double n = 0.0;
    for (const auto& comp : components)
        for (const cplx& v : comp) n += std::norm(v);
    return n * cell();
}

void PairField::normalize() {
    const double n2 = norm_squared();
    if (n2 <= 0.0) throw std::runtime_error("PairField::normalize: zero field");
    const double s = 1.0 / std::sqrt(n2);
    for (auto& comp : components)
        for (cplx& v : comp) v *= s;
}

PairField product_pair_field(const ComplexField& a, const ComplexField& b) {
    PairField f(a.grid, b.grid, 1);
    const int nb = b.size();
    for (int ia = 0; ia < a.size(); ++ia)
        for (int ib = 0; ib < nb; ++ib)
            f.components[0][static_cast<std::size_t>(ia) * nb + ib] = a.values[ia] * b.values[ib];
    f.normalize();
    return f;
}

namespace {

struct KineticTables {
    std::vector<cplx> half_a;  // exp(-i k_a^2 dt/4)
    std::vector<cplx> half_b;
};

KineticTables make_kinetic(const Grid1D& ga, const Grid1D& gb, double dt) {
    KineticTables t;
    const std::vector<double> ka = wavenumbers(ga);
    const std::vector<double> kb = wavenumbers(gb);
    t.half_a.resize(ka.size());
    t.half_b.resize(kb.size());
    for (std::size_t j = 0; j < ka.size(); ++j)
        t.half_a[j] = std::exp(-kI * (0.25 * dt * ka[j] * ka[j]));
    for (std::size_t j = 0; j < kb.size(); ++j)
        t.half_b[j] = std::exp(-kI * (0.25 * dt * kb[j] * kb[j]));
    return t;
}

// exp(-i (T_a + T_b) dt/2) via row transforms and one transpose round trip.
void half_kinetic(std::vector<cplx>& c, int na, int nb, const KineticTables& t,
                  std::vector<cplx>& scratch) {
    kernels::fft_rows(c.data(), na, nb, true);
    scratch.resize(c.size());
    kernels::transpose(c.data(), scratch.data(), na, nb);
    kernels::fft_rows(scratch.data(), nb, na, true);
    kernels::apply_row_col_tables(scratch.data(), nb, na, t.half_b.data(), t.half_a.data());
    kernels::fft_rows(scratch.data(), nb, na, false);
    kernels::transpose(scratch.data(), c.data(), nb, na);
    kernels::fft_rows(c.data(), na, nb, false);
}

// (table conv rho)(x_i) with a difference-indexed kernel table.
std::vector<double> convolve(const std::vector<double>& table, const std::vector<double>& rho,
                             double dx) {
    const int n = static_cast<int>(rho.size());
    std::vector<double> out(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < n; ++i) {
        const double* t = table.data() + (n - 1) + i;
        double acc = 0.0;
        for (int j = 0; j < n; ++j) acc += t[-j] * rho[static_cast<std::size_t>(j)];
        out[static_cast<std::size_t>(i)] = acc * dx;
    }
    return out;
}

std::vector<double> kernel_table(const LongRangeKernel& kernel, const Grid1D& grid, bool cross) {
    std::vector<double> t(static_cast<std::size_t>(2 * grid.n_points - 1));
    for (int d = -(grid.n_points - 1); d <= grid.n_points - 1; ++d)
        t[static_cast<std::size_t>(d + grid.n_points - 1)] =
            cross ? kernel.cross_eval(d * grid.dx) : kernel.eval(d * grid.dx);
    return t;
}

// Spectral kinetic energy sum over one axis of a 2D block.
double kinetic_energy_2d(const std::vector<cplx>& c, int na, int nb, const Grid1D& ga,
                         const Grid1D& gb) {
    std::vector<cplx> work = c;
    std::vector<double> ka = wavenumbers(ga);
    std::vector<double> kb = wavenumbers(gb);

    double e = 0.0;
    // d/dy: rows are contiguous
    kernels::fft_rows(work.data(), na, nb, true);
    for (int ia = 0; ia < na; ++ia)
        for (int ib = 0; ib < nb; ++ib)
            e += 0.5 * kb[static_cast<std::size_t>(ib)] * kb[static_cast<std::size_t>(ib)] *
                 std::norm(work[static_cast<std::size_t>(ia) * nb + ib]) / nb;
    // d/dx after transpose
    work = c;
    std::vector<cplx> tr(work.size());
    kernels::transpose(work.data(), tr.data(), na, nb);
    kernels::fft_rows(tr.data(), nb, na, true);
    for (int ib = 0; ib < nb; ++ib)
        for (int ia = 0; ia < na; ++ia)
            e += 0.5 * ka[static_cast<std::size_t>(ia)] * ka[static_cast<std::size_t>(ia)] *
                 std::norm(tr[static_cast<std::size_t>(ib) * na + ia]) / na;
    return e * ga.dx * gb.dx;
}

struct MeanField {
    std::vector<double> va;  // effective axis-a potential (per component set)
    std::vector<double> vb;
};

}  // namespace

double pair_energy(const PairField& field, const PairParams& p) {
    const Grid1D& ga = field.grid_a;
    const Grid1D& gb = field.grid_b;
    const int na = ga.n_points, nb = gb.n_points;
    const double n = p.n_particles;
    const bool has_w = p.kernel.kind != LongRangeKernel::Kind::none;

    double e = 0.0;
    if (field.n_components() == 1) {
        const auto& c = field.components[0];
        e += kinetic_energy_2d(c, na, nb, ga, gb);

        std::vector<double> rho_a(static_cast<std::size_t>(na)), rho_b(static_cast<std::size_t>(nb));
        kernels::marginals(c.data(), na, nb, ga.dx, gb.dx, rho_a.data(), rho_b.data());
        const std::vector<double> va = p.potential_a.sample(ga);
        const std::vector<double> vb = p.potential_b.sample(gb);
        for (int ia = 0; ia < na; ++ia) e += va[static_cast<std::size_t>(ia)] * rho_a[static_cast<std::size_t>(ia)] * ga.dx;
        for (int ib = 0; ib < nb; ++ib) e += vb[static_cast<std::size_t>(ib)] * rho_b[static_cast<std::size_t>(ib)] * gb.dx;
        for (int ia = 0; ia < na; ++ia)
            e += 0.5 * p.g_a * n * rho_a[static_cast<std::size_t>(ia)] * rho_a[static_cast<std::size_t>(ia)] * ga.dx;
        for (int ib = 0; ib < nb; ++ib)
            e += 0.5 * p.g_b * n * rho_b[static_cast<std::size_t>(ib)] * rho_b[static_cast<std::size_t>(ib)] * gb.dx;
        if (has_w) {
            if (p.include_same_condensate_w) {
                const std::vector<double> ta = kernel_table(p.kernel, ga, false);
                const std::vector<double> wa = convolve(ta, rho_a, ga.dx);
                for (int ia = 0; ia < na; ++ia)
                    e += 0.5 * n * wa[static_cast<std::size_t>(ia)] * rho_a[static_cast<std::size_t>(ia)] * ga.dx;
                const std::vector<double> tb = kernel_table(p.kernel, gb, false);
                const std::vector<double> wb = convolve(tb, rho_b, gb.dx);
                for (int ib = 0; ib < nb; ++ib)
                    e += 0.5 * n * wb[static_cast<std::size_t>(ib)] * rho_b[static_cast<std::size_t>(ib)] * gb.dx;
            }
            const std::vector<double> tx = kernel_table(p.kernel, ga, true);
            const std::vector<double> wx = convolve(tx, rho_b, gb.dx);
            for (int ia = 0; ia < na; ++ia)
                e += n * wx[static_cast<std::size_t>(ia)] * rho_a[static_cast<std::size_t>(ia)] * ga.dx;
        }
        return e;
    }

    // 4-component case: per-component marginals.
    std::array<std::vector<double>, 2> rho_a{std::vector<double>(static_cast<std::size_t>(na), 0.0),
                                             std::vector<double>(static_cast<std::size_t>(na), 0.0)};
    std::array<std::vector<double>, 2> rho_b{std::vector<double>(static_cast<std::size_t>(nb), 0.0),
                                             std::vector<double>(static_cast<std::size_t>(nb), 0.0)};
    std::vector<double> ra(static_cast<std::size_t>(na)), rb(static_cast<std::size_t>(nb));
    for (int nn = 0; nn < 2; ++nn)
        for (int m = 0; m < 2; ++m) {
            const auto& c = field.components[static_cast<std::size_t>(nn * 2 + m)];
            e += kinetic_energy_2d(c, na, nb, ga, gb);
            kernels::marginals(c.data(), na, nb, ga.dx, gb.dx, ra.data(), rb.data());
            for (int ia = 0; ia < na; ++ia) rho_a[static_cast<std::size_t>(nn)][static_cast<std::size_t>(ia)] += ra[static_cast<std::size_t>(ia)];
            for (int ib = 0; ib < nb; ++ib) rho_b[static_cast<std::size_t>(m)][static_cast<std::size_t>(ib)] += rb[static_cast<std::size_t>(ib)];

            const std::vector<double> va = p.potentials_a[static_cast<std::size_t>(nn)].sample(ga);
            const std::vector<double> vb = p.potentials_b[static_cast<std::size_t>(m)].sample(gb);
            for (int ia = 0; ia < na; ++ia) e += va[static_cast<std::size_t>(ia)] * ra[static_cast<std::size_t>(ia)] * ga.dx;
            for (int ib = 0; ib < nb; ++ib) e += vb[static_cast<std::size_t>(ib)] * rb[static_cast<std::size_t>(ib)] * gb.dx;
        }
    for (int n1 = 0; n1 < 2; ++n1)
        for (int n2 = 0; n2 < 2; ++n2) {
            double acc_a = 0.0;
            for (int ia = 0; ia < na; ++ia)
                acc_a += rho_a[static_cast<std::size_t>(n1)][static_cast<std::size_t>(ia)] *
                         rho_a[static_cast<std::size_t>(n2)][static_cast<std::size_t>(ia)];
            e += 0.5 * n * p.g_spinor_a[static_cast<std::size_t>(n1)][static_cast<std::size_t>(n2)] * acc_a * ga.dx;
            double acc_b = 0.0;
            for (int ib = 0; ib < nb; ++ib)
                acc_b += rho_b[static_cast<std::size_t>(n1)][static_cast<std::size_t>(ib)] *
                         rho_b[static_cast<std::size_t>(n2)][static_cast<std::size_t>(ib)];
            e += 0.5 * n * p.g_spinor_b[static_cast<std::size_t>(n1)][static_cast<std::size_t>(n2)] * acc_b * gb.dx;
        }
    if (has_w) {
        std::vector<double> rat(static_cast<std::size_t>(na), 0.0), rbt(static_cast<std::size_t>(nb), 0.0);
        for (int ia = 0; ia < na; ++ia)
            rat[static_cast<std::size_t>(ia)] = rho_a[0][static_cast<std::size_t>(ia)] + rho_a[1][static_cast<std::size_t>(ia)];
        for (int ib = 0; ib < nb; ++ib)
            rbt[static_cast<std::size_t>(ib)] = rho_b[0][static_cast<std::size_t>(ib)] + rho_b[1][static_cast<std::size_t>(ib)];
        const std::vector<double> tx = kernel_table(p.kernel, ga, true);
        const std::vector<double> wx = convolve(tx, rbt, gb.dx);
        for (int ia = 0; ia < na; ++ia)
            e += n * wx[static_cast<std::size_t>(ia)] * rat[static_cast<std::size_t>(ia)] * ga.dx;
    }
    return e;
}

namespace {

PairTrajectory evolve_impl(const PairField& initial, const PairParams& p,
                           const IntegratorConfig& cfg, double t_final, bool spinor) {
    cfg.validate();
    const Grid1D& ga = initial.grid_a;
    const Grid1D& gb = initial.grid_b;
    const int na = ga.n_points, nb = gb.n_points;
    const int ncomp = initial.n_components();
    if (spinor && ncomp != 4)
        throw std::invalid_argument("evolve_pair_spinor: field must have 4 components");
    if (!spinor && ncomp != 1)
        throw std::invalid_argument("evolve_pair: field must be scalar");

    const long steps = static_cast<long>(std::llround(t_final / cfg.dt));
    const KineticTables kin = make_kinetic(ga, gb, cfg.dt);
    const bool has_w = p.kernel.kind != LongRangeKernel::Kind::none;
    const double n = p.n_particles;

    // Static potential samples.
    std::array<std::vector<double>, 2> va_static, vb_static;
    if (spinor) {
        for (int i = 0; i < 2; ++i) {
            va_static[static_cast<std::size_t>(i)] = p.potentials_a[static_cast<std::size_t>(i)].sample(ga);
            vb_static[static_cast<std::size_t>(i)] = p.potentials_b[static_cast<std::size_t>(i)].sample(gb);
        }
    } else {
        va_static[0] = p.potential_a.sample(ga);
        vb_static[0] = p.potential_b.sample(gb);
    }

    std::vector<double> table_same_a, table_same_b, table_cross_a, table_cross_b;
    if (has_w) {
        table_cross_a = kernel_table(p.kernel, ga, true);
        table_cross_b = kernel_table(p.kernel, gb, true);
        if (!spinor && p.include_same_condensate_w) {
            table_same_a = kernel_table(p.kernel, ga, false);
            table_same_b = kernel_table(p.kernel, gb, false);
        }
    }

    PairField state = initial;
    PairTrajectory traj;
    traj.dt = cfg.dt;
    traj.record_dt = cfg.dt * cfg.record_stride;

    auto record = [&](double t) {
        PairObservables obs;
        obs.t = t;
        obs.norm = state.norm_squared();
        obs.energy = pair_energy(state, p);
        for (int c = 0; c < ncomp; ++c) {
            double cn = 0.0;
            for (const cplx& v : state.components[static_cast<std::size_t>(c)]) cn += std::norm(v);
            obs.component_norms[static_cast<std::size_t>(c)] = cn * state.cell();
        }
        traj.times.push_back(t);
        traj.fields.push_back(state);
        traj.observables.push_back(obs);
    };
    record(0.0);

    std::vector<cplx> scratch;
    std::vector<double> ra(static_cast<std::size_t>(na)), rb(static_cast<std::size_t>(nb));
    std::vector<cplx> pa(static_cast<std::size_t>(na)), pb(static_cast<std::size_t>(nb));

    for (long s = 1; s <= steps; ++s) {
        for (auto& comp : state.components) half_kinetic(comp, na, nb, kin, scratch);

        if (!spinor) {
            auto& c = state.components[0];
            kernels::marginals(c.data(), na, nb, ga.dx, gb.dx, ra.data(), rb.data());
            std::vector<double> va = va_static[0];
            std::vector<double> vb = vb_static[0];
            for (int ia = 0; ia < na; ++ia) va[static_cast<std::size_t>(ia)] += p.g_a * n * ra[static_cast<std::size_t>(ia)];
            for (int ib = 0; ib < nb; ++ib) vb[static_cast<std::size_t>(ib)] += p.g_b * n * rb[static_cast<std::size_t>(ib)];
            if (has_w) {
                if (p.include_same_condensate_w) {
                    const std::vector<double> wa = convolve(table_same_a, ra, ga.dx);
                    const std::vector<double> wb = convolve(table_same_b, rb, gb.dx);
                    for (int ia = 0; ia < na; ++ia) va[static_cast<std::size_t>(ia)] += n * wa[static_cast<std::size_t>(ia)];
                    for (int ib = 0; ib < nb; ++ib) vb[static_cast<std::size_t>(ib)] += n * wb[static_cast<std::size_t>(ib)];
                }
                const std::vector<double> wxa = convolve(table_cross_a, rb, gb.dx);
                const std::vector<double> wxb = convolve(table_cross_b, ra, ga.dx);
                for (int ia = 0; ia < na; ++ia) va[static_cast<std::size_t>(ia)] += n * wxa[static_cast<std::size_t>(ia)];
                for (int ib = 0; ib < nb; ++ib) vb[static_cast<std::size_t>(ib)] += n * wxb[static_cast<std::size_t>(ib)];
            }
            for (int ia = 0; ia < na; ++ia) pa[static_cast<std::size_t>(ia)] = std::exp(-kI * cfg.dt * va[static_cast<std::size_t>(ia)]);
            for (int ib = 0; ib < nb; ++ib) pb[static_cast<std::size_t>(ib)] = std::exp(-kI * cfg.dt * vb[static_cast<std::size_t>(ib)]);
            kernels::apply_row_col_tables(c.data(), na, nb, pa.data(), pb.data());
        } else {
            // Per-internal-state marginals, summed over the other label.
            std::array<std::vector<double>, 2> rho_a{std::vector<double>(static_cast<std::size_t>(na), 0.0),
                                                     std::vector<double>(static_cast<std::size_t>(na), 0.0)};
            std::array<std::vector<double>, 2> rho_b{std::vector<double>(static_cast<std::size_t>(nb), 0.0),
                                                     std::vector<double>(static_cast<std::size_t>(nb), 0.0)};
            for (int nn = 0; nn < 2; ++nn)
                for (int m = 0; m < 2; ++m) {
                    kernels::marginals(state.components[static_cast<std::size_t>(nn * 2 + m)].data(), na, nb,
                                       ga.dx, gb.dx, ra.data(), rb.data());
                    for (int ia = 0; ia < na; ++ia) rho_a[static_cast<std::size_t>(nn)][static_cast<std::size_t>(ia)] += ra[static_cast<std::size_t>(ia)];
                    for (int ib = 0; ib < nb; ++ib) rho_b[static_cast<std::size_t>(m)][static_cast<std::size_t>(ib)] += rb[static_cast<std::size_t>(ib)];
                }
            std::vector<double> wxa, wxb;
            if (has_w) {
                std::vector<double> rat(static_cast<std::size_t>(na)), rbt(static_cast<std::size_t>(nb));
                for (int ia = 0; ia < na; ++ia)
                    rat[static_cast<std::size_t>(ia)] = rho_a[0][static_cast<std::size_t>(ia)] + rho_a[1][static_cast<std::size_t>(ia)];
                for (int ib = 0; ib < nb; ++ib)
                    rbt[static_cast<std::size_t>(ib)] = rho_b[0][static_cast<std::size_t>(ib)] + rho_b[1][static_cast<std::size_t>(ib)];
                wxa = convolve(table_cross_a, rbt, gb.dx);
                wxb = convolve(table_cross_b, rat, ga.dx);
            }
            for (int nn = 0; nn < 2; ++nn)
                for (int m = 0; m < 2; ++m) {
                    for (int ia = 0; ia < na; ++ia) {
                        double v = va_static[static_cast<std::size_t>(nn)][static_cast<std::size_t>(ia)];
                        for (int n2 = 0; n2 < 2; ++n2)
                            v += n * p.g_spinor_a[static_cast<std::size_t>(nn)][static_cast<std::size_t>(n2)] *
                                 rho_a[static_cast<std::size_t>(n2)][static_cast<std::size_t>(ia)];
                        if (has_w) v += n * wxa[static_cast<std::size_t>(ia)];
                        pa[static_cast<std::size_t>(ia)] = std::exp(-kI * cfg.dt * v);
                    }
                    for (int ib = 0; ib < nb; ++ib) {
                        double v = vb_static[static_cast<std::size_t>(m)][static_cast<std::size_t>(ib)];
                        for (int m2 = 0; m2 < 2; ++m2)
                            v += n * p.g_spinor_b[static_cast<std::size_t>(m)][static_cast<std::size_t>(m2)] *
                                 rho_b[static_cast<std::size_t>(m2)][static_cast<std::size_t>(ib)];
                        if (has_w) v += n * wxb[static_cast<std::size_t>(ib)];
                        pb[static_cast<std::size_t>(ib)] = std::exp(-kI * cfg.dt * v);
                    }
                    kernels::apply_row_col_tables(state.components[static_cast<std::size_t>(nn * 2 + m)].data(),
                                                  na, nb, pa.data(), pb.data());
                }
        }

        for (auto& comp : state.components) half_kinetic(comp, na, nb, kin, scratch);

        const double nrm = state.norm_squared();
        if (!std::isfinite(nrm))
            throw std::runtime_error("pair evolution: non-finite field at step " + std::to_string(s));
        if (s % cfg.record_stride == 0 || s == steps) record(s * cfg.dt);
    }
    return traj;
}

}  // namespace

PairTrajectory evolve_pair(const PairField& field, const PairParams& p,
                           const IntegratorConfig& cfg, double t_final) {
    return evolve_impl(field, p, cfg, t_final, false);
}

PairTrajectory evolve_pair_spinor(const PairField& field, const PairParams& p,
                                  const IntegratorConfig& cfg, double t_final) {
    return evolve_impl(field, p, cfg, t_final, true);
}

ModeProjection project_to_modes(const PairField& field, const ModePair& mp_a,
                                const ModePair& mp_b) {
    if (field.n_components() != 1)
        throw std::invalid_argument("project_to_modes: scalar pair fields only");
    if (!(mp_a.phi0.grid == field.grid_a) || !(mp_b.phi0.grid == field.grid_b))
        throw std::invalid_argument("project_to_modes: mode grids do not match the field");

    const int na = field.na(), nb = field.nb();
    const auto& c = field.components[0];
    const double cell = field.cell();

    ModeProjection out;
    std::array<const ComplexField*, 2> ma{&mp_a.phi0, &mp_a.phi1};
    std::array<const ComplexField*, 2> mb{&mp_b.phi0, &mp_b.phi1};
    for (int n = 0; n < 2; ++n)
        for (int m = 0; m < 2; ++m) {
            cplx acc(0.0, 0.0);
            for (int ia = 0; ia < na; ++ia) {
                const cplx fa = std::conj(ma[static_cast<std::size_t>(n)]->values[ia]);
                cplx row(0.0, 0.0);
                for (int ib = 0; ib < nb; ++ib)
                    row += std::conj(mb[static_cast<std::size_t>(m)]->values[ib]) *
                           c[static_cast<std::size_t>(ia) * nb + ib];
                acc += fa * row;
            }
            out.state.c[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)] = acc * cell;
        }
    out.raw_norm = out.state.norm_squared();
    out.residual = 1.0 - out.raw_norm;
    if (out.raw_norm > 0.0) {
        const double s = 1.0 / std::sqrt(out.raw_norm);
        for (auto& row : out.state.c)
            for (cplx& v : row) v *= s;
    }
    return out;
}

PairField reconstruct_from_modes(const TwoQubitState& c, const ModePair& mp_a,
                                 const ModePair& mp_b, const Grid1D& grid_a,
                                 const Grid1D& grid_b) {
    if (!(mp_a.phi0.grid == grid_a) || !(mp_b.phi0.grid == grid_b))
        throw std::invalid_argument("reconstruct_from_modes: mode grids do not match");
    PairField f(grid_a, grid_b, 1);
    const int na = grid_a.n_points, nb = grid_b.n_points;
    std::array<const ComplexField*, 2> ma{&mp_a.phi0, &mp_a.phi1};
    std::array<const ComplexField*, 2> mb{&mp_b.phi0, &mp_b.phi1};
    for (int ia = 0; ia < na; ++ia)
        for (int ib = 0; ib < nb; ++ib) {
            cplx acc(0.0, 0.0);
            for (int n = 0; n < 2; ++n)
                for (int m = 0; m < 2; ++m)
                    acc += c.c[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)] *
                           ma[static_cast<std::size_t>(n)]->values[ia] *
                           mb[static_cast<std::size_t>(m)]->values[ib];
            f.components[0][static_cast<std::size_t>(ia) * nb + ib] = acc;
        }
    return f;
}

SchmidtAnalysis schmidt_defect(const PairField& field) {
    if (field.n_components() != 1)
        throw std::invalid_argument("schmidt_defect: scalar pair fields only");
    const int na = field.na(), nb = field.nb();
    Eigen::MatrixXcd m(na, nb);
    const double w = std::sqrt(field.cell());
    for (int ia = 0; ia < na; ++ia)
        for (int ib = 0; ib < nb; ++ib)
            m(ia, ib) = field.components[0][static_cast<std::size_t>(ia) * nb + ib] * w;

    Eigen::BDCSVD<Eigen::MatrixXcd> svd(m);
    if (svd.info() != Eigen::Success)
        throw std::runtime_error("schmidt_defect: SVD failed to converge");
    const auto& sv = svd.singularValues();

    SchmidtAnalysis out;
    out.spectrum.resize(static_cast<std::size_t>(sv.size()));
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        out.spectrum[static_cast<std::size_t>(i)] = sv(i) * sv(i);
    out.defect = out.spectrum.empty() ? 0.0 : 1.0 - out.spectrum.front();
    return out;
}

}  // namespace bec
