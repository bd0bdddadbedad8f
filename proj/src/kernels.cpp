#include "bec/kernels.hpp"

#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "bec/fft.hpp"

namespace bec::kernels {

namespace {
int g_max_threads = 0;  // 0 = use the OpenMP default

int effective_threads() {
#ifdef _OPENMP
    return g_max_threads > 0 ? g_max_threads : omp_get_max_threads();
#else
    return 1;
#endif
}
}  // namespace

int max_threads() { return effective_threads(); }

void set_max_threads(int n) { g_max_threads = n; }

namespace serial {

void apply_exp_weight(cplx* v, const double* w, int n, cplx scale) {
    for (int i = 0; i < n; ++i) v[i] *= std::exp(scale * w[i]);
}

void apply_table(cplx* v, const cplx* table, int n) {
    for (int i = 0; i < n; ++i) v[i] *= table[i];
}

void abs_squared(const cplx* v, int n, double* out) {
    for (int i = 0; i < n; ++i) out[i] = std::norm(v[i]);
}

double double_quadrature(const double* f, const double* g, const double* table, int n,
                         double weight) {
    double total = 0.0;
    for (int i = 0; i < n; ++i) {
        double row = 0.0;
        const double* t = table + (n - 1) + i;  // table[i - j + n - 1]
        for (int j = 0; j < n; ++j) row += t[-j] * g[j];
        total += f[i] * row;
    }
    return total * weight;
}

void fft_rows(cplx* data, int nrows, int n, bool forward) {
    const Fft1d& fft = fft_for(n);
    for (int r = 0; r < nrows; ++r) {
        if (forward)
            fft.forward(data + static_cast<std::ptrdiff_t>(r) * n);
        else
            fft.backward(data + static_cast<std::ptrdiff_t>(r) * n);
    }
}

void transpose(const cplx* in, cplx* out, int rows, int cols) {
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) out[static_cast<std::ptrdiff_t>(c) * rows + r] =
            in[static_cast<std::ptrdiff_t>(r) * cols + c];
}

void marginals(const cplx* psi, int na, int nb, double wa, double wb, double* row_out,
               double* col_out) {
    for (int ib = 0; ib < nb; ++ib) col_out[ib] = 0.0;
    for (int ia = 0; ia < na; ++ia) {
        const cplx* row = psi + static_cast<std::ptrdiff_t>(ia) * nb;
        double sum = 0.0;
        for (int ib = 0; ib < nb; ++ib) {
            const double d = std::norm(row[ib]);
            sum += d;
            col_out[ib] += d;
        }
        row_out[ia] = sum * wb;
    }
    for (int ib = 0; ib < nb; ++ib) col_out[ib] *= wa;
}

void apply_row_col_tables(cplx* v, int na, int nb, const cplx* row, const cplx* col) {
    for (int ia = 0; ia < na; ++ia) {
        cplx* r = v + static_cast<std::ptrdiff_t>(ia) * nb;
        const cplx f = row[ia];
        for (int ib = 0; ib < nb; ++ib) r[ib] *= f * col[ib];
    }
}

}  // namespace serial

void apply_exp_weight(cplx* v, const double* w, int n, cplx scale) {
    if (effective_threads() == 1 || n < 4096) {
        serial::apply_exp_weight(v, w, n, scale);
        return;
    }
#pragma omp parallel for schedule(static) num_threads(effective_threads())
    for (int i = 0; i < n; ++i) v[i] *= std::exp(scale * w[i]);
}

void apply_table(cplx* v, const cplx* table, int n) {
    if (effective_threads() == 1 || n < 8192) {
        serial::apply_table(v, table, n);
        return;
    }
#pragma omp parallel for schedule(static) num_threads(effective_threads())
    for (int i = 0; i < n; ++i) v[i] *= table[i];
}

void abs_squared(const cplx* v, int n, double* out) {
    if (effective_threads() == 1 || n < 8192) {
        serial::abs_squared(v, n, out);
        return;
    }
#pragma omp parallel for schedule(static) num_threads(effective_threads())
    for (int i = 0; i < n; ++i) out[i] = std::norm(v[i]);
}

double double_quadrature(const double* f, const double* g, const double* table, int n,
                         double weight) {
    if (effective_threads() == 1 || n < 256) return serial::double_quadrature(f, g, table, n, weight);
    std::vector<double> rows(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(static) num_threads(effective_threads())
    for (int i = 0; i < n; ++i) {
        double row = 0.0;
        const double* t = table + (n - 1) + i;
        for (int j = 0; j < n; ++j) row += t[-j] * g[j];
        rows[static_cast<std::size_t>(i)] = f[i] * row;
    }
    // fixed-order accumulation keeps the result thread-count independent
    double total = 0.0;
    for (int i = 0; i < n; ++i) total += rows[static_cast<std::size_t>(i)];
    return total * weight;
}

void fft_rows(cplx* data, int nrows, int n, bool forward) {
    if (effective_threads() == 1 || nrows < 8) {
        serial::fft_rows(data, nrows, n, forward);
        return;
    }
    const Fft1d& fft = fft_for(n);
#pragma omp parallel for schedule(static) num_threads(effective_threads())
    for (int r = 0; r < nrows; ++r) {
        if (forward)
            fft.forward(data + static_cast<std::ptrdiff_t>(r) * n);
        else
            fft.backward(data + static_cast<std::ptrdiff_t>(r) * n);
    }
}

void transpose(const cplx* in, cplx* out, int rows, int cols) {
    if (effective_threads() == 1 || rows * cols < 16384) {
        serial::transpose(in, out, rows, cols);
        return;
    }
#pragma omp parallel for schedule(static) num_threads(effective_threads())
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) out[static_cast<std::ptrdiff_t>(c) * rows + r] =
            in[static_cast<std::ptrdiff_t>(r) * cols + c];
}

void marginals(const cplx* psi, int na, int nb, double wa, double wb, double* row_out,
               double* col_out) {
    if (effective_threads() == 1 || na < 64) {
        serial::marginals(psi, na, nb, wa, wb, row_out, col_out);
        return;
    }
    // Two passes, each summing its output entry in fixed index order, so
    // the result does not depend on the thread count.
#pragma omp parallel for schedule(static) num_threads(effective_threads())
    for (int ia = 0; ia < na; ++ia) {
        const cplx* row = psi + static_cast<std::ptrdiff_t>(ia) * nb;
        double sum = 0.0;
        for (int ib = 0; ib < nb; ++ib) sum += std::norm(row[ib]);
        row_out[ia] = sum * wb;
    }
#pragma omp parallel for schedule(static) num_threads(effective_threads())
    for (int ib = 0; ib < nb; ++ib) {
        double sum = 0.0;
        for (int ia = 0; ia < na; ++ia)
            sum += std::norm(psi[static_cast<std::ptrdiff_t>(ia) * nb + ib]);
        col_out[ib] = sum * wa;
    }
}

void apply_row_col_tables(cplx* v, int na, int nb, const cplx* row, const cplx* col) {
    if (effective_threads() == 1 || na < 64) {
        serial::apply_row_col_tables(v, na, nb, row, col);
        return;
    }
#pragma omp parallel for schedule(static) num_threads(effective_threads())
    for (int ia = 0; ia < na; ++ia) {
        cplx* r = v + static_cast<std::ptrdiff_t>(ia) * nb;
        const cplx f = row[ia];
        for (int ib = 0; ib < nb; ++ib) r[ib] *= f * col[ib];
    }
}

}  // namespace bec::kernels
