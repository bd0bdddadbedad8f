#include "bec/potentials.hpp"

namespace bec {

std::vector<double> PotentialSpec::sample(const Grid1D& grid) const {
    std::vector<double> v(static_cast<std::size_t>(grid.n_points));
    switch (kind) {
        case Kind::harmonic:
            for (int j = 0; j < grid.n_points; ++j) {
                const double x = grid.x(j);
                v[static_cast<std::size_t>(j)] = 0.5 * omega * omega * x * x;
            }
            break;
        case Kind::double_well:
            for (int j = 0; j < grid.n_points; ++j) {
                const double u = grid.x(j) * grid.x(j) - d * d;
                v[static_cast<std::size_t>(j)] = v0 * u * u / (d * d * d * d);
            }
            break;
        case Kind::displaced_harmonic:
            for (int j = 0; j < grid.n_points; ++j) {
                const double z = grid.x(j) - z_center;
                v[static_cast<std::size_t>(j)] = 0.5 * omega_z * z * z;
            }
            break;
        case Kind::tabulated:
            if (static_cast<int>(table.size()) != grid.n_points)
                throw std::invalid_argument("tabulated potential does not match grid");
            v = table;
            break;
    }
    return v;
}

double PotentialSpec::local_well_curvature() const {
    if (kind != Kind::double_well)
        throw std::logic_error("local_well_curvature: only defined for double wells");
    return 8.0 * v0 / (d * d);
}

}  // namespace bec
