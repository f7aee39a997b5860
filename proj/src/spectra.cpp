#include "isw/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <random>
#include <string>

#include "isw/errors.hpp"
#include "isw/kernels.hpp"

namespace isw {

namespace {

constexpr std::size_t kDenseCutoff = 64;

std::unique_ptr<LuFactorization> shifted_factor(const CMatrix& h, double& shift,
                                                double nudge) {
    for (int attempt = 0; attempt < 2; ++attempt) {
        CMatrix a = h;
        for (std::size_t i = 0; i < a.dim(); ++i) a(i, i) -= shift;
        try {
            return std::make_unique<LuFactorization>(std::move(a));
        } catch (const NumericError&) {
            shift -= nudge;
        }
    }
    throw ConvergenceError("could not factor the shifted operator");
}

void unit_normalize(std::vector<cplx>& x) {
    const auto& kern = kernels::active();
    const double norm = std::sqrt(kern.nrm2sq(x.data(), x.size()));
    if (!(norm > 0.0) || !std::isfinite(norm))
        throw ConvergenceError("inverse iteration vector degenerated");
    kern.scal(1.0 / norm, x.data(), x.size());
}

struct Seed {
    double theta;
    std::vector<cplx> vec;
};

// Rayleigh-Ritz seed for the lowest eigenpair orthogonal to `deflate`: a short
// Lanczos pass with full reorthogonalization, then the small tridiagonal
// problem solved densely.
Seed lanczos_seed(const CMatrix& h, const std::vector<std::vector<cplx>>& deflate) {
    const std::size_t n = h.dim();
    const auto& kern = kernels::active();
    const double scale = std::max(1.0, h.inf_norm());
    const std::size_t m_max = std::min<std::size_t>(n - deflate.size(), 40);

    std::mt19937_64 rng(0x5157u + deflate.size());
    std::uniform_real_distribution<double> unit(-1.0, 1.0);

    std::vector<std::vector<cplx>> basis;
    std::vector<double> alpha;
    std::vector<double> beta;

    const auto orthogonalize = [&](std::vector<cplx>& x) {
        for (int pass = 0; pass < 2; ++pass) {
            for (const auto& d : deflate)
                kern.axpy(-kern.dotc(d.data(), x.data(), n), d.data(), x.data(), n);
            for (const auto& b : basis)
                kern.axpy(-kern.dotc(b.data(), x.data(), n), b.data(), x.data(), n);
        }
    };

    std::vector<cplx> v(n);
    for (auto& a : v) a = {unit(rng), unit(rng)};
    orthogonalize(v);
    unit_normalize(v);

    std::vector<cplx> w(n);
    for (std::size_t j = 0; j < m_max; ++j) {
        basis.push_back(v);
        kern.matvec(h.data(), v.data(), w.data(), n);
        alpha.push_back(kern.dotc(v.data(), w.data(), n).real());
        orthogonalize(w);
        const double b = std::sqrt(kern.nrm2sq(w.data(), n));
        if (!(b > 1e-12 * scale)) break;
        beta.push_back(b);
        kern.scal(1.0 / b, w.data(), n);
        v = w;
    }

    const std::size_t m = basis.size();
    CMatrix t(m);
    for (std::size_t i = 0; i < m; ++i) {
        t(i, i) = alpha[i];
        if (i + 1 < m) t(i, i + 1) = t(i + 1, i) = beta[i];
    }
    const double theta = hermitian_eigenvalues(t)[0];

    // An unreduced symmetric tridiagonal has simple eigenvalues, so a shift
    // just below theta isolates its eigenvector.
    const double t_scale = std::max(1.0, t.inf_norm());
    double small_shift = theta - 1e-10 * t_scale;
    const auto slu = shifted_factor(t, small_shift, 1e-10 * t_scale);
    std::vector<cplx> s(m);
    for (auto& a : s) a = {unit(rng), unit(rng)};
    for (int pass = 0; pass < 3; ++pass) {
        s = slu->solve(std::move(s));
        unit_normalize(s);
    }

    std::vector<cplx> y(n);
    for (std::size_t j = 0; j < m; ++j) kern.axpy(s[j], basis[j].data(), y.data(), n);
    return {theta, std::move(y)};
}

// Shifted inverse iteration with deflation, seeded by the Ritz pair. The shift
// tracks min(lambda, theta) - residual, which stays below the target
// eigenvalue, so the iteration cannot settle on an interior one.
std::pair<double, std::vector<cplx>> lowest_pair(const CMatrix& h,
                                                 const std::vector<std::vector<cplx>>& deflate) {
    const std::size_t n = h.dim();
    const auto& kern = kernels::active();
    const double scale = std::max(1.0, h.inf_norm());
    const double tol = 1e-10 * scale;

    auto [theta, v] = lanczos_seed(h, deflate);

    const auto project_out = [&] {
        for (const auto& d : deflate)
            kern.axpy(-kern.dotc(d.data(), v.data(), n), d.data(), v.data(), n);
    };

    project_out();
    unit_normalize(v);

    std::vector<cplx> w(n);
    const auto rayleigh_residual = [&]() -> std::pair<double, double> {
        kern.matvec(h.data(), v.data(), w.data(), n);
        const double lambda = kern.dotc(v.data(), w.data(), n).real();
        kern.axpy(-lambda, v.data(), w.data(), n);
        return {lambda, std::sqrt(kern.nrm2sq(w.data(), n))};
    };

    auto [lambda, rho] = rayleigh_residual();
    if (rho <= tol) return {lambda, std::move(v)};

    double shift = std::min(lambda, theta) - rho - tol;
    auto lu = shifted_factor(h, shift, tol);
    const std::size_t cap = 10 * n;
    for (std::size_t iter = 0; iter < cap; ++iter) {
        v = lu->solve(std::move(v));
        project_out();
        unit_normalize(v);
        std::tie(lambda, rho) = rayleigh_residual();
        if (rho <= tol) return {lambda, std::move(v)};
        const double next = std::min(lambda, theta) - rho - tol;
        if (next > shift + tol) {
            shift = next;
            lu = shifted_factor(h, shift, tol);
        }
    }
    throw ConvergenceError("inverse iteration did not converge within " +
                           std::to_string(cap) + " iterations");
}

}  // namespace

Ground smallest_eigenvalue(const CMatrix& h) {
    const std::size_t n = h.dim();
    if (n == 0) throw DimensionError("empty operator has no spectrum");
    if (n == 1) return {h(0, 0).real(), 0.0};
    if (n <= kDenseCutoff) {
        const auto ev = hermitian_eigenvalues(h);
        return {ev[0], ev[1] - ev[0]};
    }
    auto [e0, v0] = lowest_pair(h, {});
    const double e1 = lowest_pair(h, {std::move(v0)}).first;
    return {e0, std::max(0.0, e1 - e0)};
}

Ground smallest_eigenvalue(const TruncatedOperator& h) {
    return smallest_eigenvalue(h.matrix);
}

std::vector<SpectralSample> spectral_flow(const poly::Polynomial& p,
                                          const TruncationSpec& spec,
                                          const EvolutionParams& params, HiForm form) {
    const std::size_t steps = params.step_count();
    const std::size_t stride = params.effective_e0_stride();
    const TruncatedOperator hd = build_HD(p, spec);
    const TruncatedOperator hi = build_HI(spec, form);

    std::vector<SpectralSample> flow;
    const auto sample = [&](std::size_t j, double t) {
        const double s = static_cast<double>(j) / static_cast<double>(steps);
        const Ground g = smallest_eigenvalue(build_HA(hd, hi, s));
        flow.push_back({t, s, g.e0, g.gap});
    };
    for (std::size_t j = 0; j < steps; j += stride)
        sample(j, static_cast<double>(j) * params.dt);
    sample(steps, static_cast<double>(params.total_time));
    return flow;
}

}  // namespace isw
