#include "kernels_detail.hpp"

#if defined(__AVX2__) && defined(__FMA__)

#include <immintrin.h>

namespace isw::kernels::detail {

namespace {

// Vectors hold two complex doubles as [re0, im0, re1, im1]. std::complex<double>
// arrays are guaranteed to have this layout.

void axpy_avx2(cplx a, const cplx* x, cplx* y, std::size_t n) {
    const double* xp = reinterpret_cast<const double*>(x);
    double* yp = reinterpret_cast<double*>(y);
    const __m256d are = _mm256_set1_pd(a.real());
    const __m256d aim = _mm256_set1_pd(a.imag());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d xv = _mm256_loadu_pd(xp + 2 * i);
        __m256d yv = _mm256_loadu_pd(yp + 2 * i);
        __m256d xsw = _mm256_permute_pd(xv, 0x5);  // [im0, re0, im1, re1]
        // even lanes re(a)*re(x) - im(a)*im(x), odd lanes re(a)*im(x) + im(a)*re(x)
        __m256d prod = _mm256_fmaddsub_pd(are, xv, _mm256_mul_pd(aim, xsw));
        _mm256_storeu_pd(yp + 2 * i, _mm256_add_pd(yv, prod));
    }
    for (; i < n; ++i) y[i] += a * x[i];
}

void scal_avx2(cplx a, cplx* x, std::size_t n) {
    double* xp = reinterpret_cast<double*>(x);
    const __m256d are = _mm256_set1_pd(a.real());
    const __m256d aim = _mm256_set1_pd(a.imag());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d xv = _mm256_loadu_pd(xp + 2 * i);
        __m256d xsw = _mm256_permute_pd(xv, 0x5);
        _mm256_storeu_pd(xp + 2 * i, _mm256_fmaddsub_pd(are, xv, _mm256_mul_pd(aim, xsw)));
    }
    for (; i < n; ++i) x[i] *= a;
}

inline cplx reduce_pairs(__m256d acc) {
    alignas(32) double buf[4];
    _mm256_store_pd(buf, acc);
    return {buf[0] + buf[2], buf[1] + buf[3]};
}

cplx dotc_avx2(const cplx* x, const cplx* y, std::size_t n) {
    const double* xp = reinterpret_cast<const double*>(x);
    const double* yp = reinterpret_cast<const double*>(y);
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d xv = _mm256_loadu_pd(xp + 2 * i);
        __m256d yv = _mm256_loadu_pd(yp + 2 * i);
        __m256d xre = _mm256_movedup_pd(xv);       // [re0, re0, re1, re1]
        __m256d xim = _mm256_permute_pd(xv, 0xF);  // [im0, im0, im1, im1]
        __m256d ysw = _mm256_permute_pd(yv, 0x5);
        // even lanes re(x)*re(y) + im(x)*im(y), odd lanes re(x)*im(y) - im(x)*re(y)
        acc = _mm256_add_pd(acc, _mm256_fmsubadd_pd(xre, yv, _mm256_mul_pd(xim, ysw)));
    }
    cplx r = reduce_pairs(acc);
    for (; i < n; ++i) r += std::conj(x[i]) * y[i];
    return r;
}

cplx dotu_avx2(const cplx* x, const cplx* y, std::size_t n) {
    const double* xp = reinterpret_cast<const double*>(x);
    const double* yp = reinterpret_cast<const double*>(y);
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d xv = _mm256_loadu_pd(xp + 2 * i);
        __m256d yv = _mm256_loadu_pd(yp + 2 * i);
        __m256d xre = _mm256_movedup_pd(xv);
        __m256d xim = _mm256_permute_pd(xv, 0xF);
        __m256d ysw = _mm256_permute_pd(yv, 0x5);
        acc = _mm256_add_pd(acc, _mm256_fmaddsub_pd(xre, yv, _mm256_mul_pd(xim, ysw)));
    }
    cplx r = reduce_pairs(acc);
    for (; i < n; ++i) r += x[i] * y[i];
    return r;
}

double nrm2sq_avx2(const cplx* x, std::size_t n) {
    const double* xp = reinterpret_cast<const double*>(x);
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d xv = _mm256_loadu_pd(xp + 2 * i);
        acc = _mm256_fmadd_pd(xv, xv, acc);
    }
    alignas(32) double buf[4];
    _mm256_store_pd(buf, acc);
    double r = buf[0] + buf[1] + buf[2] + buf[3];
    for (; i < n; ++i)
        r += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
    return r;
}

void abs2_avx2(const cplx* x, double* out, std::size_t n) {
    const double* xp = reinterpret_cast<const double*>(x);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d xv = _mm256_loadu_pd(xp + 2 * i);
        __m256d sq = _mm256_mul_pd(xv, xv);
        __m256d h = _mm256_hadd_pd(sq, sq);  // [s0, s0, s1, s1]
        out[i] = _mm_cvtsd_f64(_mm256_castpd256_pd128(h));
        out[i + 1] = _mm_cvtsd_f64(_mm256_extractf128_pd(h, 1));
    }
    for (; i < n; ++i)
        out[i] = x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
}

void matvec_avx2(const cplx* a, const cplx* x, cplx* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] = dotu_avx2(a + i * n, x, n);
}

}  // namespace

const Ops* avx2_table() {
    static const Ops table{
        "avx2",     axpy_avx2, scal_avx2, dotc_avx2,
        dotu_avx2,  nrm2sq_avx2, abs2_avx2, matvec_avx2,
    };
    return &table;
}

}  // namespace isw::kernels::detail

#else

namespace isw::kernels::detail {

const Ops* avx2_table() { return nullptr; }

}  // namespace isw::kernels::detail

#endif
