#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>
#include <vector>

namespace bec {

enum class Scheme { split_step, rk4 };

struct IntegratorConfig {
    double dt = 1e-3;
    Scheme scheme = Scheme::split_step;
    long max_steps = 100000000;
    int record_stride = 1;

    void validate() const {
        if (dt <= 0.0) throw std::invalid_argument("IntegratorConfig: dt must be positive");
        if (record_stride < 1)
            throw std::invalid_argument("IntegratorConfig: record_stride must be >= 1");
    }
};

// Classical 4th-order Runge-Kutta update for a complex state vector.
// rhs must be a pure function of (state, t). Throws if the update turns
// non-finite.
template <class State, class Rhs>
State rk4_step(const State& y, double t, double dt, Rhs&& rhs) {
    auto axpy = [](const State& a, double c, const State& b) {
        State r = a;
        for (std::size_t i = 0; i < r.size(); ++i) r[i] += c * b[i];
        return r;
    };
    State k1 = rhs(y, t);
    State k2 = rhs(axpy(y, 0.5 * dt, k1), t + 0.5 * dt);
    State k3 = rhs(axpy(y, 0.5 * dt, k2), t + 0.5 * dt);
    State k4 = rhs(axpy(y, dt, k3), t + dt);
    State out = y;
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] += (dt / 6.0) * (k1[i] + 2.0 * (k2[i] + k3[i]) + k4[i]);
        if (!std::isfinite(out[i].real()) || !std::isfinite(out[i].imag()))
            throw std::runtime_error("rk4_step: non-finite state component");
    }
    return out;
}

using RhsFn = std::function<std::vector<std::complex<double>>(
    const std::vector<std::complex<double>>&, double)>;

std::vector<std::complex<double>> rk4_step(const std::vector<std::complex<double>>& state,
                                           double t, double dt, const RhsFn& rhs);

}  // namespace bec
