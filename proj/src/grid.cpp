#include "bec/grid.hpp"

#include <cmath>
#include <numbers>

namespace bec {

std::vector<double> wavenumbers(const Grid1D& grid) {
    const int n = grid.n_points;
    const double dk = 2.0 * std::numbers::pi / grid.length();
    std::vector<double> k(n);
    for (int j = 0; j < n; ++j) k[j] = (j < (n + 1) / 2) ? j * dk : (j - n) * dk;
    return k;
}

double integrate(const double* samples, int n, const Grid1D& grid) {
    if (n != grid.n_points)
        throw std::invalid_argument("integrate: sample count does not match grid");
    double sum = 0.0;
    for (int i = 0; i < n; ++i) sum += samples[i];
    return sum * grid.dx;
}

double integrate(const std::vector<double>& samples, const Grid1D& grid) {
    return integrate(samples.data(), static_cast<int>(samples.size()), grid);
}

double ComplexField::norm_squared() const {
    double sum = 0.0;
    for (const cplx& v : values) sum += std::norm(v);
    return sum * grid.dx;
}

void ComplexField::normalize() {
    const double n2 = norm_squared();
    if (n2 <= 0.0) throw std::runtime_error("ComplexField::normalize: zero field");
    const double scale = 1.0 / std::sqrt(n2);
    for (cplx& v : values) v *= scale;
}

std::vector<double> density(const ComplexField& field) {
    std::vector<double> rho(field.values.size());
    for (std::size_t i = 0; i < rho.size(); ++i) rho[i] = std::norm(field.values[i]);
    return rho;
}

cplx inner_product(const ComplexField& a, const ComplexField& b) {
    if (!(a.grid == b.grid)) throw std::invalid_argument("inner_product: grid mismatch");
    cplx sum(0.0, 0.0);
    for (int i = 0; i < a.size(); ++i) sum += std::conj(a.values[i]) * b.values[i];
    return sum * a.grid.dx;
}

}  // namespace bec
