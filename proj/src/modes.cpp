#include "bec/modes.hpp"

#include <cmath>
#include <map>
#include <sstream>
#include <tuple>

#include "bec/fft.hpp"
#include "bec/kernels.hpp"
#include "bec/numerics.hpp"

namespace bec {

double LongRangeKernel::eval_at_distance(double x, double transverse) const {
    const double r2 = x * x + transverse * transverse;
    switch (kind) {
        case Kind::none:
            return 0.0;
        case Kind::regularized_dipole:
            return w0 / std::pow(r2 + a * a, 1.5);
        case Kind::gaussian:
            return w0 * std::exp(-r2 / (2.0 * s * s));
    }
    return 0.0;
}

namespace {

ComplexField seeded(const Grid1D& grid, const std::function<double(double)>& f) {
    ComplexField out(grid);
    for (int j = 0; j < grid.n_points; ++j) out.values[j] = f(grid.x(j));
    out.normalize();
    return out;
}

// Linear (g = 0) relaxation with step annealing; the optional projector is
// applied every step, which the excited-state solve uses for deflation.
RelaxResult relax_linear(const ComplexField& seed, const std::vector<double>& v,
                         const std::function<void(ComplexField&)>& project = {}) {
    ComplexField state = seed;
    RelaxResult r;
    for (double dtau : {2e-2, 5e-3, 1e-3, 2.5e-4}) {
        r = imaginary_time_relax(state, v, 0.0, 1.0, dtau, 1e-14, 600000, project);
        state = r.field;
    }
    return r;
}

// Difference-indexed samples W((i-j)*dx), i-j in [-(n-1), n-1].
std::vector<double> kernel_table(const LongRangeKernel& kernel, const Grid1D& grid,
                                 bool cross) {
    std::vector<double> t(static_cast<std::size_t>(2 * grid.n_points - 1));
    for (int d = -(grid.n_points - 1); d <= grid.n_points - 1; ++d)
        t[static_cast<std::size_t>(d + grid.n_points - 1)] =
            cross ? kernel.cross_eval(d * grid.dx) : kernel.eval(d * grid.dx);
    return t;
}

// integral f (W conv g) dx via FFT on the periodic grid; the kernel is
// sampled on the circle (distance folded into [-L/2, L/2)).
double convolution_quadrature(const std::vector<double>& f, const std::vector<double>& g,
                              const LongRangeKernel& kernel, const Grid1D& grid,
                              bool cross) {
    const int n = grid.n_points;
    const Fft1d& fft = fft_for(n);
    std::vector<cplx> kv(static_cast<std::size_t>(n)), gv(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        double dist = j * grid.dx;
        if (j > n / 2) dist = (j - n) * grid.dx;
        kv[static_cast<std::size_t>(j)] = cross ? kernel.cross_eval(dist) : kernel.eval(dist);
        gv[static_cast<std::size_t>(j)] = g[static_cast<std::size_t>(j)];
    }
    fft.forward(kv.data());
    fft.forward(gv.data());
    for (int j = 0; j < n; ++j) kv[static_cast<std::size_t>(j)] *= gv[static_cast<std::size_t>(j)];
    fft.backward(kv.data());
    double sum = 0.0;
    for (int j = 0; j < n; ++j) sum += f[static_cast<std::size_t>(j)] * kv[static_cast<std::size_t>(j)].real();
    return sum * grid.dx * grid.dx;
}

double direct_quadrature(const std::vector<double>& f, const std::vector<double>& g,
                         const LongRangeKernel& kernel, const Grid1D& grid, bool cross) {
    const std::vector<double> table = kernel_table(kernel, grid, cross);
    return kernels::double_quadrature(f.data(), g.data(), table.data(), grid.n_points,
                                      grid.dx * grid.dx);
}

// Both quadrature routes; they must agree, which also guards against
// under-padded domains (the FFT route folds the kernel periodically).
double checked_coupling(const std::vector<double>& f, const std::vector<double>& g,
                        const LongRangeKernel& kernel, const Grid1D& grid, bool cross) {
    const double direct = direct_quadrature(f, g, kernel, grid, cross);
    const double conv = convolution_quadrature(f, g, kernel, grid, cross);
    const double scale = std::max({std::abs(direct), std::abs(conv), 1e-30});
    if (std::abs(direct - conv) / scale > 1e-8)
        throw std::runtime_error("long-range coupling: quadrature and convolution paths disagree");
    return direct;
}

}  // namespace

ModePair localized_modes(const PotentialSpec& dw, const Grid1D& grid) {
    if (dw.kind != PotentialSpec::Kind::double_well)
        throw std::invalid_argument("localized_modes: potential must be a double well");
    const std::vector<double> v = dw.sample(grid);

    // Symmetric ground state.
    ComplexField even_seed = seeded(grid, [&](double x) {
        return std::exp(-0.5 * (x - dw.d) * (x - dw.d)) + std::exp(-0.5 * (x + dw.d) * (x + dw.d));
    });
    RelaxResult sym = relax_linear(even_seed, v);

    // Antisymmetric partner by deflation against the ground state. The odd
    // seed keeps the flow in the odd sector; the projector removes any
    // numerically reintroduced ground-state component.
    ComplexField odd_seed = seeded(grid, [&](double x) {
        return std::exp(-0.5 * (x - dw.d) * (x - dw.d)) - std::exp(-0.5 * (x + dw.d) * (x + dw.d));
    });
    const ComplexField& gs = sym.field;
    auto deflate = [&gs](ComplexField& f) {
        const cplx c = inner_product(gs, f);
        for (int j = 0; j < f.size(); ++j) f.values[j] -= c * gs.values[j];
    };
    RelaxResult asym = relax_linear(odd_seed, v, deflate);

    if (std::abs(inner_product(sym.field, asym.field)) > 1e-8)
        throw std::runtime_error("localized_modes: deflation failed, doublet not orthogonal");
    const double e_split = asym.chemical_potential - sym.chemical_potential;
    if (e_split <= 0.0)
        throw std::runtime_error("localized_modes: non-positive doublet splitting");

    // Sign conventions: psi_s positive, psi_a positive on the left, so that
    // phi0 = (psi_s + psi_a)/sqrt(2) localizes in the left well.
    ComplexField psi_s = sym.field;
    ComplexField psi_a = asym.field;
    double s_weight = 0.0, a_left = 0.0;
    for (int j = 0; j < grid.n_points; ++j) {
        s_weight += psi_s.values[j].real();
        if (grid.x(j) < 0.0) a_left += psi_a.values[j].real();
    }
    if (s_weight < 0.0)
        for (cplx& c : psi_s.values) c = -c;
    if (a_left < 0.0)
        for (cplx& c : psi_a.values) c = -c;

    ModePair mp;
    mp.phi0 = ComplexField(grid);
    mp.phi1 = ComplexField(grid);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (int j = 0; j < grid.n_points; ++j) {
        mp.phi0.values[j] = inv_sqrt2 * (psi_s.values[j] + psi_a.values[j]);
        mp.phi1.values[j] = inv_sqrt2 * (psi_s.values[j] - psi_a.values[j]);
    }
    mp.e_local = 0.5 * (sym.chemical_potential + asym.chemical_potential);
    mp.e_split = e_split;

    double leak = 0.0;
    for (int j = 0; j < grid.n_points; ++j)
        if (grid.x(j) >= 0.0) leak += std::norm(mp.phi0.values[j]);
    mp.leakage = leak * grid.dx;

    // Raw (non-orthogonalized) local-well states: ground states of the
    // parabolic expansion about each bottom.
    const double curv = dw.local_well_curvature();
    auto local_ground = [&](double center) {
        std::vector<double> vl(static_cast<std::size_t>(grid.n_points));
        for (int j = 0; j < grid.n_points; ++j) {
            const double u = grid.x(j) - center;
            vl[static_cast<std::size_t>(j)] = 0.5 * curv * u * u;
        }
        ComplexField seed = seeded(grid, [&](double x) {
            return std::exp(-0.5 * (x - center) * (x - center));
        });
        return relax_linear(seed, vl).field;
    };
    const ComplexField raw_left = local_ground(-dw.d);
    const ComplexField raw_right = local_ground(dw.d);
    mp.epsilon_overlap = std::norm(inner_product(raw_left, raw_right));

    return mp;
}

TunnelingOmega tunneling_omega(const ModePair& mp, const PotentialSpec& dw) {
    TunnelingOmega out;
    out.omega_spec = -0.5 * mp.e_split;

    // Overlap-integral diagnostic: the full potential minus the parabolic
    // expansion about the left well bottom.
    const Grid1D& grid = mp.phi0.grid;
    const std::vector<double> v = dw.sample(grid);
    const double curv = dw.local_well_curvature();
    double acc = 0.0;
    for (int j = 0; j < grid.n_points; ++j) {
        const double xl = grid.x(j) + dw.d;  // distance from the left bottom
        const double v_local = 0.5 * curv * xl * xl;
        acc += (mp.phi0.values[j] * (v[static_cast<std::size_t>(j)] - v_local) * mp.phi1.values[j]).real();
    }
    out.omega_integral = acc * grid.dx;
    out.rel_deviation = std::abs(out.omega_integral - out.omega_spec) /
                        std::max(std::abs(out.omega_spec), 1e-300);
    return out;
}

double quartic_overlap(const ComplexField& phi) {
    double chi = 0.0;
    for (const cplx& c : phi.values) {
        const double rho = std::norm(c);
        chi += rho * rho;
    }
    return chi * phi.grid.dx;
}

std::pair<double, double> same_condensate_couplings(const ModePair& mp,
                                                    const LongRangeKernel& kernel) {
    if (kernel.kind == LongRangeKernel::Kind::none) return {0.0, 0.0};
    const std::vector<double> rho0 = density(mp.phi0);
    const std::vector<double> rho1 = density(mp.phi1);
    const Grid1D& grid = mp.phi0.grid;
    const double mu1 = checked_coupling(rho0, rho0, kernel, grid, false);
    const double mu2 = checked_coupling(rho0, rho1, kernel, grid, false);
    return {mu1, mu2};
}

std::pair<double, double> cross_condensate_couplings(const ModePair& mp_a,
                                                     const ModePair& mp_b,
                                                     const LongRangeKernel& kernel) {
    if (kernel.kind == LongRangeKernel::Kind::none) return {0.0, 0.0};
    const std::vector<double> a0 = density(mp_a.phi0);
    const std::vector<double> b0 = density(mp_b.phi0);
    const std::vector<double> b1 = density(mp_b.phi1);
    const Grid1D& grid = mp_a.phi0.grid;
    const double nu1 = checked_coupling(a0, b0, kernel, grid, true);
    const double nu2 = checked_coupling(a0, b1, kernel, grid, true);
    return {nu1, nu2};
}

std::string CouplingSet::to_text() const {
    std::ostringstream os;
    os.precision(17);
    os << "e_onsite=" << e_onsite << "\n"
       << "omega=" << omega << "\n"
       << "chi=" << chi << "\n"
       << "kappa=" << kappa << "\n"
       << "mu1=" << mu1 << "\n"
       << "mu2=" << mu2 << "\n"
       << "nu1=" << nu1 << "\n"
       << "nu2=" << nu2 << "\n"
       << "n_particles=" << n_particles << "\n"
       << "g=" << g << "\n";
    return os.str();
}

CouplingSet CouplingSet::from_text(const std::string& text) {
    std::map<std::string, double> kv;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        const auto pos = line.find('=');
        if (pos == std::string::npos)
            throw std::invalid_argument("CouplingSet: malformed line '" + line + "'");
        kv[line.substr(0, pos)] = std::stod(line.substr(pos + 1));
    }
    CouplingSet c;
    auto want = [&](const std::string& key) {
        auto it = kv.find(key);
        if (it == kv.end()) throw std::invalid_argument("CouplingSet: missing key '" + key + "'");
        return it->second;
    };
    c.e_onsite = want("e_onsite");
    c.omega = want("omega");
    c.chi = want("chi");
    c.kappa = want("kappa");
    c.mu1 = want("mu1");
    c.mu2 = want("mu2");
    c.nu1 = want("nu1");
    c.nu2 = want("nu2");
    c.n_particles = want("n_particles");
    c.g = want("g");
    return c;
}

CouplingSet derive_couplings(const ModePair& mp, const LongRangeKernel& kernel, double g,
                             double n_particles) {
    CouplingSet c;
    c.e_onsite = mp.e_local;
    c.omega = -0.5 * mp.e_split;
    c.chi = quartic_overlap(mp.phi0);
    c.kappa = g * c.chi;
    std::tie(c.mu1, c.mu2) = same_condensate_couplings(mp, kernel);
    std::tie(c.nu1, c.nu2) = cross_condensate_couplings(mp, mp, kernel);
    c.n_particles = n_particles;
    c.g = g;
    return c;
}

}  // namespace bec
