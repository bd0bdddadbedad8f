#include "bec/fft.hpp"

#include <fftw3.h>

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace bec {

namespace {
std::mutex plan_mutex;  // FFTW plan creation is not thread-safe
}

Fft1d::Fft1d(int n) : n_(n) {
    if (n < 2) throw std::invalid_argument("Fft1d: n must be >= 2");
    std::lock_guard<std::mutex> lock(plan_mutex);
    std::vector<std::complex<double>> scratch(static_cast<std::size_t>(n));
    auto* buf = reinterpret_cast<fftw_complex*>(scratch.data());
    // FFTW_UNALIGNED keeps the plans valid for arbitrary caller buffers via
    // the new-array execute interface.
    plan_fwd_ = fftw_plan_dft_1d(n, buf, buf, FFTW_FORWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
    plan_bwd_ = fftw_plan_dft_1d(n, buf, buf, FFTW_BACKWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
    if (!plan_fwd_ || !plan_bwd_) throw std::runtime_error("Fft1d: plan creation failed");
}

Fft1d::~Fft1d() {
    std::lock_guard<std::mutex> lock(plan_mutex);
    fftw_destroy_plan(static_cast<fftw_plan>(plan_fwd_));
    fftw_destroy_plan(static_cast<fftw_plan>(plan_bwd_));
}

void Fft1d::forward(std::complex<double>* data) const {
    auto* buf = reinterpret_cast<fftw_complex*>(data);
    fftw_execute_dft(static_cast<fftw_plan>(plan_fwd_), buf, buf);
}

void Fft1d::backward(std::complex<double>* data) const {
    auto* buf = reinterpret_cast<fftw_complex*>(data);
    fftw_execute_dft(static_cast<fftw_plan>(plan_bwd_), buf, buf);
    const double scale = 1.0 / n_;
    for (int i = 0; i < n_; ++i) data[i] *= scale;
}

const Fft1d& fft_for(int n) {
    static std::mutex cache_mutex;
    static std::map<int, std::unique_ptr<Fft1d>> cache;
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, std::make_unique<Fft1d>(n)).first;
    return *it->second;
}

}  // namespace bec
