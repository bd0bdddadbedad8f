#pragma once

#include <complex>
#include <vector>

// Hot inner loops shared by the solvers. Every kernel has a serial
// reference implementation (kernels::serial) and an OpenMP variant with
// identical semantics; the dispatching functions pick the OpenMP path
// whenever more than one thread is configured. Reductions accumulate in
// fixed index order, so results are identical across thread counts.

namespace bec::kernels {

using cplx = std::complex<double>;

int max_threads();
void set_max_threads(int n);

namespace serial {

// v[i] *= exp(scale * w[i]); scale is purely imaginary for real-time
// phases and real negative for imaginary-time decay.
void apply_exp_weight(cplx* v, const double* w, int n, cplx scale);

// v[i] *= table[i]
void apply_table(cplx* v, const cplx* table, int n);

// out[i] = |v[i]|^2
void abs_squared(const cplx* v, int n, double* out);

// sum_{i,j} f[i] * table[i-j+n-1] * g[j] * weight  (difference-indexed
// kernel on a uniform grid; table has 2n-1 entries)
double double_quadrature(const double* f, const double* g, const double* table,
                         int n, double weight);

// In-place length-n FFTs over nrows contiguous rows.
void fft_rows(cplx* data, int nrows, int n, bool forward);

void transpose(const cplx* in, cplx* out, int rows, int cols);

// Marginals of a 2D density |psi|^2 on an na x nb row-major field:
// row_out[ia] = sum_ib |psi|^2 * wb, col_out[ib] = sum_ia |psi|^2 * wa.
void marginals(const cplx* psi, int na, int nb, double wa, double wb,
               double* row_out, double* col_out);

// v[ia*nb+ib] *= row[ia] * col[ib]  (separable 2D phase application)
void apply_row_col_tables(cplx* v, int na, int nb, const cplx* row, const cplx* col);

}  // namespace serial

void apply_exp_weight(cplx* v, const double* w, int n, cplx scale);
void apply_table(cplx* v, const cplx* table, int n);
void abs_squared(const cplx* v, int n, double* out);
double double_quadrature(const double* f, const double* g, const double* table,
                         int n, double weight);
void fft_rows(cplx* data, int nrows, int n, bool forward);
void transpose(const cplx* in, cplx* out, int rows, int cols);
void marginals(const cplx* psi, int na, int nb, double wa, double wb,
               double* row_out, double* col_out);
void apply_row_col_tables(cplx* v, int na, int nb, const cplx* row, const cplx* col);

}  // namespace bec::kernels
