#pragma once

#include <complex>

namespace bec {

// Forward/backward FFT of length n, executable concurrently on distinct
// buffers. Backward includes the 1/n normalization so backward(forward(x))
// reproduces x.
class Fft1d {
  public:
    explicit Fft1d(int n);
    ~Fft1d();

    Fft1d(const Fft1d&) = delete;
    Fft1d& operator=(const Fft1d&) = delete;

    void forward(std::complex<double>* data) const;
    void backward(std::complex<double>* data) const;

    int size() const { return n_; }

  private:
    int n_;
    void* plan_fwd_;
    void* plan_bwd_;
};

// Shared per-size plan cache. Plan creation is serialized internally;
// returned references stay valid for the process lifetime.
const Fft1d& fft_for(int n);

}  // namespace bec
