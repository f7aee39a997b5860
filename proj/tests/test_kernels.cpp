#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "isw/errors.hpp"
#include "isw/kernels.hpp"

using isw::kernels::cplx;

namespace {

std::vector<cplx> random_vector(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    std::vector<cplx> v(n);
    for (auto& z : v) z = {dist(rng), dist(rng)};
    return v;
}

double max_abs_diff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

const std::size_t kSizes[] = {0, 1, 2, 3, 7, 16, 33};

}  // namespace

TEST_CASE("scalar kernels match hand-computed values") {
    const auto& ops = isw::kernels::scalar_ops();
    const std::vector<cplx> x = {{1, 2}, {3, -1}};
    const std::vector<cplx> y = {{0, 1}, {2, 0}};

    const cplx dc = ops.dotc(x.data(), y.data(), 2);
    CHECK(dc.real() == doctest::Approx(2 + 6));
    CHECK(dc.imag() == doctest::Approx(1 + 2));

    const cplx du = ops.dotu(x.data(), y.data(), 2);
    CHECK(du.real() == doctest::Approx(-2 + 6));
    CHECK(du.imag() == doctest::Approx(1 - 2));

    CHECK(ops.nrm2sq(x.data(), 2) == doctest::Approx(1 + 4 + 9 + 1));

    std::vector<double> p(2);
    ops.abs2(x.data(), p.data(), 2);
    CHECK(p[0] == doctest::Approx(5.0));
    CHECK(p[1] == doctest::Approx(10.0));

    std::vector<cplx> z = y;
    ops.axpy(cplx(2, 0), x.data(), z.data(), 2);
    CHECK(z[0] == cplx(2, 5));
    CHECK(z[1] == cplx(8, -2));

    z = x;
    ops.scal(cplx(0, 1), z.data(), 2);
    CHECK(z[0] == cplx(-2, 1));
    CHECK(z[1] == cplx(1, 3));
}

TEST_CASE("scalar matvec multiplies row-major matrices") {
    const auto& ops = isw::kernels::scalar_ops();
    const std::vector<cplx> a = {{1, 0}, {0, 1}, {2, 0}, {0, 0}};
    const std::vector<cplx> x = {{1, 1}, {3, 0}};
    std::vector<cplx> y(2);
    ops.matvec(a.data(), x.data(), y.data(), 2);
    CHECK(y[0] == cplx(1, 4));
    CHECK(y[1] == cplx(2, 2));
}

TEST_CASE("avx2 kernels agree with the scalar reference") {
    const auto* avx2 = isw::kernels::avx2_ops();
    if (!avx2) return;  // host without AVX2: nothing to compare
    const auto& ref = isw::kernels::scalar_ops();

    std::mt19937_64 rng(42);
    for (const std::size_t n : kSizes) {
        CAPTURE(n);
        const auto x = random_vector(rng, n);
        const auto y = random_vector(rng, n);
        const cplx a(0.7, -1.3);

        auto y_ref = y;
        auto y_simd = y;
        ref.axpy(a, x.data(), y_ref.data(), n);
        avx2->axpy(a, x.data(), y_simd.data(), n);
        CHECK(max_abs_diff(y_ref, y_simd) < 1e-14);

        auto x_ref = x;
        auto x_simd = x;
        ref.scal(a, x_ref.data(), n);
        avx2->scal(a, x_simd.data(), n);
        CHECK(max_abs_diff(x_ref, x_simd) < 1e-14);

        CHECK(std::abs(ref.dotc(x.data(), y.data(), n) - avx2->dotc(x.data(), y.data(), n)) <
              1e-12);
        CHECK(std::abs(ref.dotu(x.data(), y.data(), n) - avx2->dotu(x.data(), y.data(), n)) <
              1e-12);
        CHECK(ref.nrm2sq(x.data(), n) ==
              doctest::Approx(avx2->nrm2sq(x.data(), n)).epsilon(1e-12));

        std::vector<double> p_ref(n), p_simd(n);
        ref.abs2(x.data(), p_ref.data(), n);
        avx2->abs2(x.data(), p_simd.data(), n);
        for (std::size_t i = 0; i < n; ++i) CHECK(p_ref[i] == doctest::Approx(p_simd[i]));
    }
}

TEST_CASE("avx2 matvec agrees with the scalar reference") {
    const auto* avx2 = isw::kernels::avx2_ops();
    if (!avx2) return;
    const auto& ref = isw::kernels::scalar_ops();

    std::mt19937_64 rng(7);
    for (const std::size_t n : {1, 2, 3, 5, 8, 17}) {
        CAPTURE(n);
        const auto a = random_vector(rng, n * n);
        const auto x = random_vector(rng, n);
        std::vector<cplx> y_ref(n), y_simd(n);
        ref.matvec(a.data(), x.data(), y_ref.data(), n);
        avx2->matvec(a.data(), x.data(), y_simd.data(), n);
        CHECK(max_abs_diff(y_ref, y_simd) < 1e-12);
    }
}

TEST_CASE("select switches the active implementation") {
    isw::kernels::select("scalar");
    CHECK(isw::kernels::active().name == "scalar");

    if (const auto* avx2 = isw::kernels::avx2_ops()) {
        isw::kernels::select("avx2");
        CHECK(isw::kernels::active().name == avx2->name);
    } else {
        CHECK_THROWS_AS(isw::kernels::select("avx2"), isw::Error);
    }

    CHECK_THROWS_AS(isw::kernels::select("neon"), isw::Error);
    isw::kernels::select("auto");
    CHECK((isw::kernels::active().name == "scalar" || isw::kernels::active().name == "avx2"));
}
