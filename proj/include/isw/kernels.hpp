#pragma once

#include <complex>
#include <cstddef>
#include <string_view>

namespace isw::kernels {

using cplx = std::complex<double>;

/// Dense complex vector primitives behind the linear-algebra layer.
///
/// Two implementations exist: a scalar reference and an AVX2+FMA variant.
/// The active one is picked once at startup (see `active`); every variant
/// must produce the same results up to floating-point reassociation, which
/// the kernel equivalence tests pin down.
struct Ops {
    std::string_view name;

    /// y += a*x
    void (*axpy)(cplx a, const cplx* x, cplx* y, std::size_t n);
    /// x *= a
    void (*scal)(cplx a, cplx* x, std::size_t n);
    /// sum_i conj(x_i) * y_i
    cplx (*dotc)(const cplx* x, const cplx* y, std::size_t n);
    /// sum_i x_i * y_i
    cplx (*dotu)(const cplx* x, const cplx* y, std::size_t n);
    /// sum_i |x_i|^2
    double (*nrm2sq)(const cplx* x, std::size_t n);
    /// out_i = |x_i|^2
    void (*abs2)(const cplx* x, double* out, std::size_t n);
    /// y = A*x for a row-major square matrix A
    void (*matvec)(const cplx* a, const cplx* x, cplx* y, std::size_t n);
};

/// Scalar reference implementation; always available.
const Ops& scalar_ops();

/// AVX2+FMA implementation, or nullptr when the binary or CPU lacks it.
const Ops* avx2_ops();

/// The implementation in use. Defaults to AVX2 when supported, otherwise
/// scalar; the ISW_KERNELS environment variable ("scalar"/"avx2") overrides.
const Ops& active();

/// Force an implementation: "scalar", "avx2", or "auto". Throws isw::Error
/// when the requested one is unavailable. Intended for tests and benchmarks.
void select(std::string_view which);

}  // namespace isw::kernels
