#include "bec/qubit.hpp"

#include <cmath>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "bec/integrators.hpp"
#include "bec/kernels.hpp"

namespace bec {

namespace {
const cplx kI{0.0, 1.0};
}

QubitState make_qubit_state(cplx c0, cplx c1) {
    const double n2 = std::norm(c0) + std::norm(c1);
    if (n2 <= 0.0) throw std::invalid_argument("make_qubit_state: zero-norm state");
    const double s = 1.0 / std::sqrt(n2);
    return QubitState{c0 * s, c1 * s};
}

OneBitParams OneBitParams::from_couplings(const CouplingSet& c) {
    OneBitParams p;
    p.e_onsite = c.e_onsite;
    p.omega = c.omega;
    p.kappa_n = c.kappa * c.n_particles;
    p.mu1_n = c.mu1 * c.n_particles;
    p.mu2_n = c.mu2 * c.n_particles;
    return p;
}

std::array<cplx, 2> one_bit_rhs(const QubitState& state, const OneBitParams& p) {
    const double r0 = std::norm(state.c0);
    const double r1 = std::norm(state.c1);
    const cplx h0 = (p.e_onsite + p.kappa_n * r0 + p.mu1_n * r0 + p.mu2_n * r1) * state.c0 +
                    p.omega * state.c1;
    const cplx h1 = (p.e_onsite + p.kappa_n * r1 + p.mu1_n * r1 + p.mu2_n * r0) * state.c1 +
                    p.omega * state.c0;
    return {-kI * h0, -kI * h1};
}

namespace {

using Vec2 = std::array<cplx, 2>;

Vec2 one_bit_rhs_vec(const Vec2& y, const OneBitParams& p) {
    QubitState s{y[0], y[1]};
    return one_bit_rhs(s, p);
}

}  // namespace

OneBitResult evolve_one_bit(const QubitState& state, const OneBitParams& p, double tau,
                            double dt) {
    if (dt <= 0.0 || dt > tau) throw std::invalid_argument("evolve_one_bit: need 0 < dt <= tau");
    const long steps = static_cast<long>(std::llround(tau / dt));
    const double dt_eff = tau / steps;

    Vec2 y{state.c0, state.c1};
    auto rhs = [&p](const Vec2& v, double) { return one_bit_rhs_vec(v, p); };
    for (long s = 0; s < steps; ++s) y = rk4_step(y, s * dt_eff, dt_eff, rhs);

    const double norm = std::sqrt(std::norm(y[0]) + std::norm(y[1]));
    OneBitResult out;
    out.norm_drift = std::abs(norm - 1.0);
    if (out.norm_drift > 1e-6)
        throw std::runtime_error("evolve_one_bit: norm drift " + std::to_string(out.norm_drift) +
                                 " exceeds 1e-6; reduce dt");
    out.state = QubitState{y[0] / norm, y[1] / norm};
    return out;
}

Mat2 linear_gate(double omega, double e_onsite, double tau) {
    const cplx phase = std::exp(-kI * e_onsite * tau);
    const double c = std::cos(omega * tau);
    const double s = std::sin(omega * tau);
    return Mat2{{{phase * c, -kI * phase * s}, {-kI * phase * s, phase * c}}};
}

QubitState apply(const Mat2& u, const QubitState& q) {
    return QubitState{u[0][0] * q.c0 + u[0][1] * q.c1, u[1][0] * q.c0 + u[1][1] * q.c1};
}

QubitState nonlinear_twist(const QubitState& state, double kappa_n, double tau) {
    return QubitState{state.c0 * std::exp(-kI * kappa_n * std::norm(state.c0) * tau),
                      state.c1 * std::exp(-kI * kappa_n * std::norm(state.c1) * tau)};
}

DistanceSeries state_divergence(const QubitState& s1, const QubitState& s2,
                                const OneBitParams& p, double tau, double dt, int samples) {
    if (samples < 2) throw std::invalid_argument("state_divergence: need at least 2 samples");
    const long steps = static_cast<long>(std::llround(tau / dt));
    const long stride = std::max<long>(1, steps / samples);

    Vec2 a{s1.c0, s1.c1}, b{s2.c0, s2.c1};
    auto rhs = [&p](const Vec2& v, double) { return one_bit_rhs_vec(v, p); };
    auto dist = [](const Vec2& u, const Vec2& v) {
        return std::sqrt(std::norm(u[0] - v[0]) + std::norm(u[1] - v[1]));
    };

    DistanceSeries out;
    out.times.push_back(0.0);
    out.distances.push_back(dist(a, b));
    for (long s = 1; s <= steps; ++s) {
        a = rk4_step(a, (s - 1) * dt, dt, rhs);
        b = rk4_step(b, (s - 1) * dt, dt, rhs);
        if (s % stride == 0 || s == steps) {
            out.times.push_back(s * dt);
            out.distances.push_back(dist(a, b));
        }
    }
    return out;
}

double time_averaged_imbalance(const QubitState& s0, const OneBitParams& p, double t_final,
                               double dt) {
    const long steps = static_cast<long>(std::llround(t_final / dt));
    Vec2 y{s0.c0, s0.c1};
    auto rhs = [&p](const Vec2& v, double) { return one_bit_rhs_vec(v, p); };
    double acc = std::abs(std::norm(y[0]) - std::norm(y[1]));
    for (long s = 1; s <= steps; ++s) {
        y = rk4_step(y, (s - 1) * dt, dt, rhs);
        acc += std::abs(std::norm(y[0]) - std::norm(y[1]));
    }
    return acc / (steps + 1);
}

double find_lambda_critical(double omega, const QubitState& s0, double t_final, double dt,
                            double lambda_lo, double lambda_hi, double threshold,
                            int iterations) {
    auto trapped = [&](double lambda) {
        OneBitParams p;
        p.omega = omega;
        p.kappa_n = 2.0 * std::abs(omega) * lambda;
        return time_averaged_imbalance(s0, p, t_final, dt) > threshold;
    };
    if (trapped(lambda_lo) || !trapped(lambda_hi))
        throw std::runtime_error("find_lambda_critical: bracket does not straddle the transition");
    double lo = lambda_lo, hi = lambda_hi;
    for (int i = 0; i < iterations; ++i) {
        const double mid = 0.5 * (lo + hi);
        (trapped(mid) ? hi : lo) = mid;
    }
    return 0.5 * (lo + hi);
}

// ---- two-bit ----

double TwoQubitState::norm_squared() const {
    double n = 0.0;
    for (const auto& row : c)
        for (const cplx& v : row) n += std::norm(v);
    return n;
}

TwoQubitState make_two_qubit_state(const std::array<cplx, 4>& flat) {
    double n2 = 0.0;
    for (const cplx& v : flat) n2 += std::norm(v);
    if (n2 <= 0.0) throw std::invalid_argument("make_two_qubit_state: zero-norm state");
    const double s = 1.0 / std::sqrt(n2);
    TwoQubitState out;
    out.c[0][0] = flat[0] * s;
    out.c[0][1] = flat[1] * s;
    out.c[1][0] = flat[2] * s;
    out.c[1][1] = flat[3] * s;
    return out;
}

TwoQubitState product_state(const QubitState& a, const QubitState& b) {
    return make_two_qubit_state({a.c0 * b.c0, a.c0 * b.c1, a.c1 * b.c0, a.c1 * b.c1});
}

double entanglement_measure(const TwoQubitState& state) {
    return 2.0 * std::abs(state.c[0][0] * state.c[1][1] - state.c[0][1] * state.c[1][0]);
}

TwoQubitState apply_basis_change(const TwoQubitState& state, const Mat2& u_a, const Mat2& u_b) {
    TwoQubitState out;
    for (int n = 0; n < 2; ++n)
        for (int m = 0; m < 2; ++m) {
            cplx acc(0.0, 0.0);
            for (int n1 = 0; n1 < 2; ++n1)
                for (int m1 = 0; m1 < 2; ++m1)
                    acc += u_a[static_cast<std::size_t>(n)][static_cast<std::size_t>(n1)] *
                           state.c[static_cast<std::size_t>(n1)][static_cast<std::size_t>(m1)] *
                           u_b[static_cast<std::size_t>(m)][static_cast<std::size_t>(m1)];
            out.c[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)] = acc;
        }
    return out;
}

Mat2 hadamard_like() {
    const double s = 1.0 / std::sqrt(2.0);
    return Mat2{{{cplx(s, 0), cplx(s, 0)}, {cplx(s, 0), cplx(-s, 0)}}};
}

std::array<double, 4> printed_diagonal_phases(const TwoBitParams& p, const TwoQubitState& c) {
    const double q00 = std::norm(c.c[0][0]);
    const double q01 = std::norm(c.c[0][1]);
    const double q10 = std::norm(c.c[1][0]);
    const double q11 = std::norm(c.c[1][1]);

    auto g_of = [&](double q) {
        return p.e_a + p.e_b + (p.g_a + p.g_b) * p.n_particles * p.chi_a * p.chi_b * q;
    };
    // F entries exactly as published; the third line is read as F10 by the
    // index pattern of its arguments.
    const double f00 = (p.mu1 + p.nu1) * (2 * q00 + q01 + q10) +
                       (p.mu2 + p.nu2) * (q01 + q10 + 2 * q11);
    const double f01 = (p.mu1 + p.nu2) * (q00 + 2 * q01 + q11) +
                       (p.mu2 + p.nu1) * (q00 + 2 * q10 + 2 * q11);
    const double f10 = (p.mu1 + p.nu2) * (q00 + 2 * q10 + q11) +
                       (p.mu2 + p.nu1) * (q00 + 2 * q01 + 2 * q11);
    const double f11 = (p.mu1 + p.nu1) * (q01 + q10 + 2 * q11) +
                       (p.mu2 + p.nu2) * (2 * q00 + q01 + q10);

    const double n = p.n_particles;
    return {g_of(q00) + n * f00, g_of(q01) + n * f01, g_of(q10) + n * f10, g_of(q11) + n * f11};
}

namespace {

using Mat2c = std::array<std::array<cplx, 2>, 2>;

// Density-matrix style weights: A_qp multiplies phi_q(x) phi_p*(x) in the
// first-axis density, B_qp the same on the second axis.
Mat2c axis_a_weights(const TwoQubitState& s) {
    Mat2c a{};
    for (int q = 0; q < 2; ++q)
        for (int pp = 0; pp < 2; ++pp) {
            cplx acc(0.0, 0.0);
            for (int m = 0; m < 2; ++m)
                acc += s.c[static_cast<std::size_t>(q)][static_cast<std::size_t>(m)] *
                       std::conj(s.c[static_cast<std::size_t>(pp)][static_cast<std::size_t>(m)]);
            a[static_cast<std::size_t>(q)][static_cast<std::size_t>(pp)] = acc;
        }
    return a;
}

Mat2c axis_b_weights(const TwoQubitState& s) {
    Mat2c b{};
    for (int q = 0; q < 2; ++q)
        for (int pp = 0; pp < 2; ++pp) {
            cplx acc(0.0, 0.0);
            for (int n = 0; n < 2; ++n)
                acc += s.c[static_cast<std::size_t>(n)][static_cast<std::size_t>(q)] *
                       std::conj(s.c[static_cast<std::size_t>(n)][static_cast<std::size_t>(pp)]);
            b[static_cast<std::size_t>(q)][static_cast<std::size_t>(pp)] = acc;
        }
    return b;
}

// Mean-field mode-space matrix sum_{qp} weights_qp * tensor[n][n1][q][p].
Mat2c contract(const Rank4& t, const Mat2c& w) {
    Mat2c m{};
    for (int n = 0; n < 2; ++n)
        for (int n1 = 0; n1 < 2; ++n1) {
            cplx acc(0.0, 0.0);
            for (int q = 0; q < 2; ++q)
                for (int pp = 0; pp < 2; ++pp)
                    acc += w[static_cast<std::size_t>(q)][static_cast<std::size_t>(pp)] * t(n, n1, q, pp);
            m[static_cast<std::size_t>(n)][static_cast<std::size_t>(n1)] = acc;
        }
    return m;
}

}  // namespace

std::array<std::array<cplx, 2>, 2> two_bit_rhs(const TwoQubitState& state,
                                               const TwoBitParams& p) {
    std::array<std::array<cplx, 2>, 2> h{};  // H C, multiplied by -i at the end

    if (p.coefficient_mode == CoefficientMode::unset)
        throw std::invalid_argument("two_bit_rhs: coefficient_mode is unset");

    if (p.coefficient_mode == CoefficientMode::as_printed) {
        const std::array<double, 4> diag = printed_diagonal_phases(p, state);
        h[0][0] = diag[0] * state.c[0][0] + p.omega_b * state.c[0][1] + p.omega_a * state.c[1][0];
        h[0][1] = diag[1] * state.c[0][1] + p.omega_b * state.c[0][0] + p.omega_a * state.c[1][1];
        h[1][0] = diag[2] * state.c[1][0] + p.omega_a * state.c[0][0] + p.omega_b * state.c[1][1];
        h[1][1] = diag[3] * state.c[1][1] + p.omega_a * state.c[0][1] + p.omega_b * state.c[1][0];
    } else {
        const Mat2c wa = axis_a_weights(state);
        const Mat2c wb = axis_b_weights(state);
        const double n = p.n_particles;

        // Mode-space operators acting on the first and second index.
        Mat2c ha{}, hb{};
        ha[0][0] = ha[1][1] = p.e_a;
        ha[0][1] = ha[1][0] = p.omega_a;
        hb[0][0] = hb[1][1] = p.e_b;
        hb[0][1] = hb[1][0] = p.omega_b;

        const Mat2c sa = contract(p.t_a, wa);
        const Mat2c sb = contract(p.t_b, wb);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                ha[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] += p.g_a * n * sa[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                hb[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] += p.g_b * n * sb[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            }
        if (p.include_same_condensate_w) {
            const Mat2c ka = contract(p.k_a, wa);
            const Mat2c kb = contract(p.k_b, wb);
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) {
                    ha[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] += n * ka[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                    hb[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] += n * kb[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                }
        }
        // Cross terms: first-axis density builds a second-axis potential
        // and vice versa.
        const Mat2c kab = contract(p.k_ab, wa);
        const Mat2c kba = contract(p.k_ba, wb);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                hb[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] += n * kab[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                ha[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] += n * kba[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            }

        for (int nn = 0; nn < 2; ++nn)
            for (int m = 0; m < 2; ++m) {
                cplx acc(0.0, 0.0);
                for (int n1 = 0; n1 < 2; ++n1)
                    acc += ha[static_cast<std::size_t>(nn)][static_cast<std::size_t>(n1)] * state.c[static_cast<std::size_t>(n1)][static_cast<std::size_t>(m)];
                for (int m1 = 0; m1 < 2; ++m1)
                    acc += hb[static_cast<std::size_t>(m)][static_cast<std::size_t>(m1)] * state.c[static_cast<std::size_t>(nn)][static_cast<std::size_t>(m1)];
                h[static_cast<std::size_t>(nn)][static_cast<std::size_t>(m)] = acc;
            }
    }

    std::array<std::array<cplx, 2>, 2> out{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = -kI * h[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    return out;
}

TwoBitResult evolve_two_bit(const TwoQubitState& state, const TwoBitParams& p, double tau,
                            double dt) {
    if (dt <= 0.0 || dt > tau) throw std::invalid_argument("evolve_two_bit: need 0 < dt <= tau");
    const long steps = static_cast<long>(std::llround(tau / dt));
    const double dt_eff = tau / steps;

    using Vec4 = std::array<cplx, 4>;
    Vec4 y{state.c[0][0], state.c[0][1], state.c[1][0], state.c[1][1]};
    auto rhs = [&p](const Vec4& v, double) {
        TwoQubitState s;
        s.c[0][0] = v[0];
        s.c[0][1] = v[1];
        s.c[1][0] = v[2];
        s.c[1][1] = v[3];
        const auto d = two_bit_rhs(s, p);
        return Vec4{d[0][0], d[0][1], d[1][0], d[1][1]};
    };
    for (long s = 0; s < steps; ++s) y = rk4_step(y, s * dt_eff, dt_eff, rhs);

    double n2 = 0.0;
    for (const cplx& v : y) n2 += std::norm(v);
    const double norm = std::sqrt(n2);

    TwoBitResult out;
    out.norm_drift = std::abs(norm - 1.0);
    if (out.norm_drift > 1e-6)
        throw std::runtime_error("evolve_two_bit: norm drift " + std::to_string(out.norm_drift) +
                                 " exceeds 1e-6; reduce dt");
    out.state.c[0][0] = y[0] / norm;
    out.state.c[0][1] = y[1] / norm;
    out.state.c[1][0] = y[2] / norm;
    out.state.c[1][1] = y[3] / norm;
    return out;
}

namespace {

// Difference-indexed kernel samples W((i-j)*dx) shared by the tensor
// quadratures.
std::vector<double> tensor_kernel_table(const LongRangeKernel& kernel, const Grid1D& grid,
                                        bool cross) {
    std::vector<double> t(static_cast<std::size_t>(2 * grid.n_points - 1));
    for (int d = -(grid.n_points - 1); d <= grid.n_points - 1; ++d)
        t[static_cast<std::size_t>(d + grid.n_points - 1)] =
            cross ? kernel.cross_eval(d * grid.dx) : kernel.eval(d * grid.dx);
    return t;
}

std::array<std::vector<double>, 4> mode_products(const ModePair& mp) {
    const int n = mp.phi0.size();
    std::array<std::vector<double>, 4> prod;
    for (auto& v : prod) v.resize(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        const double p0 = mp.phi0.values[j].real();
        const double p1 = mp.phi1.values[j].real();
        prod[0][static_cast<std::size_t>(j)] = p0 * p0;
        prod[1][static_cast<std::size_t>(j)] = p0 * p1;
        prod[2][static_cast<std::size_t>(j)] = p1 * p0;
        prod[3][static_cast<std::size_t>(j)] = p1 * p1;
    }
    return prod;
}

Rank4 quartic_tensor(const ModePair& mp) {
    const auto prod = mode_products(mp);
    const double dx = mp.phi0.grid.dx;
    Rank4 t;
    for (int n = 0; n < 2; ++n)
        for (int n1 = 0; n1 < 2; ++n1)
            for (int q = 0; q < 2; ++q)
                for (int pp = 0; pp < 2; ++pp) {
                    const auto& f = prod[static_cast<std::size_t>(n * 2 + n1)];
                    const auto& g = prod[static_cast<std::size_t>(q * 2 + pp)];
                    double acc = 0.0;
                    for (std::size_t j = 0; j < f.size(); ++j) acc += f[j] * g[j];
                    t(n, n1, q, pp) = acc * dx;
                }
    return t;
}

Rank4 kernel_tensor(const ModePair& mp_left, const ModePair& mp_right,
                    const LongRangeKernel& kernel, bool cross) {
    const Grid1D& grid = mp_left.phi0.grid;
    if (!(grid == mp_right.phi0.grid))
        throw std::invalid_argument("kernel_tensor: mode grids must match");
    const auto f_prod = mode_products(mp_left);
    const auto g_prod = mode_products(mp_right);
    const std::vector<double> table = tensor_kernel_table(kernel, grid, cross);
    Rank4 t;
    for (int n = 0; n < 2; ++n)
        for (int n1 = 0; n1 < 2; ++n1)
            for (int q = 0; q < 2; ++q)
                for (int pp = 0; pp < 2; ++pp)
                    t(n, n1, q, pp) = kernels::double_quadrature(
                        f_prod[static_cast<std::size_t>(n * 2 + n1)].data(),
                        g_prod[static_cast<std::size_t>(q * 2 + pp)].data(), table.data(),
                        grid.n_points, grid.dx * grid.dx);
    return t;
}

}  // namespace

TwoBitParams make_two_bit_params(const ModePair& mp_a, const ModePair& mp_b,
                                 const LongRangeKernel& kernel, double g_a, double g_b,
                                 double n_particles, CoefficientMode mode) {
    TwoBitParams p;
    p.coefficient_mode = mode;
    p.e_a = mp_a.e_local;
    p.e_b = mp_b.e_local;
    p.omega_a = -0.5 * mp_a.e_split;
    p.omega_b = -0.5 * mp_b.e_split;
    p.g_a = g_a;
    p.g_b = g_b;
    p.chi_a = quartic_overlap(mp_a.phi0);
    p.chi_b = quartic_overlap(mp_b.phi0);
    p.n_particles = n_particles;

    if (kernel.kind != LongRangeKernel::Kind::none) {
        std::tie(p.mu1, p.mu2) = same_condensate_couplings(mp_a, kernel);
        std::tie(p.nu1, p.nu2) = cross_condensate_couplings(mp_a, mp_b, kernel);
        p.k_a = kernel_tensor(mp_a, mp_a, kernel, false);
        p.k_b = kernel_tensor(mp_b, mp_b, kernel, false);
        p.k_ab = kernel_tensor(mp_b, mp_a, kernel, true);  // a-density -> b potential
        p.k_ba = kernel_tensor(mp_a, mp_b, kernel, true);
    }
    p.t_a = quartic_tensor(mp_a);
    p.t_b = quartic_tensor(mp_b);
    return p;
}

std::string two_bit_comparison_report(const TwoBitParams& p, const TwoQubitState& reference) {
    TwoBitParams printed = p;
    printed.coefficient_mode = CoefficientMode::as_printed;
    TwoBitParams derived = p;
    derived.coefficient_mode = CoefficientMode::derived;

    const auto rhs_printed = two_bit_rhs(reference, printed);
    const auto rhs_derived = two_bit_rhs(reference, derived);
    const auto diag = printed_diagonal_phases(printed, reference);

    std::ostringstream os;
    os.precision(12);
    os << "two-bit coefficient comparison (printed matrix equation vs mechanical projection)\n";
    os << "reference moduli^2:";
    for (int n = 0; n < 2; ++n)
        for (int m = 0; m < 2; ++m)
            os << " |C" << n << m << "|^2=" << std::norm(reference.c[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)]);
    os << "\n\n";

    os << "printed diagonal G+NF phases:\n";
    const char* labels[4] = {"00", "01", "10", "11"};
    for (int i = 0; i < 4; ++i) os << "  H_" << labels[i] << " = " << diag[static_cast<std::size_t>(i)] << "\n";

    // The printed G carries (g_a+g_b) N chi_a chi_b |C|^2; the projection
    // yields g_a N chi_a and g_b N chi_b pieces weighted by one-axis
    // population sums instead.
    os << "\nprinted G nonlinear coefficient (g_a+g_b)*N*chi_a*chi_b = "
       << (p.g_a + p.g_b) * p.n_particles * p.chi_a * p.chi_b << "\n";
    os << "projected s-wave scales g_a*N*chi_a = " << p.g_a * p.n_particles * p.chi_a
       << ", g_b*N*chi_b = " << p.g_b * p.n_particles * p.chi_b << "\n";

    os << "\nrhs entries (i dC/dt):\n";
    double max_diff = 0.0;
    for (int n = 0; n < 2; ++n)
        for (int m = 0; m < 2; ++m) {
            const cplx a = kI * rhs_printed[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)];
            const cplx b = kI * rhs_derived[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)];
            max_diff = std::max(max_diff, std::abs(a - b));
            os << "  [" << labels[n * 2 + m] << "] printed=(" << a.real() << "," << a.imag()
               << ") derived=(" << b.real() << "," << b.imag() << ") |diff|=" << std::abs(a - b)
               << "\n";
        }
    os << "max |printed - derived| rhs entry: " << max_diff << "\n";

    // Entangling rate of the diagonal (omega = 0) sector: the printed F
    // block keeps a nonzero conditional rate even for nu1 = nu2, mu1 = mu2;
    // the projected flow is a sum of one-axis operators and cannot change
    // |det C| at all.
    os << "\nprinted conditional phase rate (H00+H11-H01-H10) = "
       << (diag[0] + diag[3] - diag[1] - diag[2]) << "\n";
    os << "projected flow: one-axis operator sum, d|det C|/dt = 0 identically\n";
    return os.str();
}

TwoQubitState conditional_phase_closed_form(const TwoBitParams& p, const TwoQubitState& c0,
                                            double tau) {
    if (p.omega_a != 0.0 || p.omega_b != 0.0)
        throw std::invalid_argument("conditional_phase_closed_form: requires omega_a = omega_b = 0");
    const std::array<double, 4> diag = printed_diagonal_phases(p, c0);
    TwoQubitState out = c0;
    out.c[0][0] *= std::exp(-kI * diag[0] * tau);
    out.c[0][1] *= std::exp(-kI * diag[1] * tau);
    out.c[1][0] *= std::exp(-kI * diag[2] * tau);
    out.c[1][1] *= std::exp(-kI * diag[3] * tau);
    return out;
}

}  // namespace bec
