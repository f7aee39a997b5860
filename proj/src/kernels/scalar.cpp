#include "isw/kernels.hpp"

namespace isw::kernels {

namespace {

void axpy_scalar(cplx a, const cplx* x, cplx* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void scal_scalar(cplx a, cplx* x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) x[i] *= a;
}

cplx dotc_scalar(const cplx* x, const cplx* y, std::size_t n) {
    cplx acc{0.0, 0.0};
    for (std::size_t i = 0; i < n; ++i) acc += std::conj(x[i]) * y[i];
    return acc;
}

cplx dotu_scalar(const cplx* x, const cplx* y, std::size_t n) {
    cplx acc{0.0, 0.0};
    for (std::size_t i = 0; i < n; ++i) acc += x[i] * y[i];
    return acc;
}

double nrm2sq_scalar(const cplx* x, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        acc += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
    return acc;
}

void abs2_scalar(const cplx* x, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        out[i] = x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
}

void matvec_scalar(const cplx* a, const cplx* x, cplx* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] = dotu_scalar(a + i * n, x, n);
}

}  // namespace

const Ops& scalar_ops() {
    static const Ops table{
        "scalar",     axpy_scalar, scal_scalar, dotc_scalar,
        dotu_scalar,  nrm2sq_scalar, abs2_scalar, matvec_scalar,
    };
    return table;
}

}  // namespace isw::kernels
