#include "isw/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "isw/errors.hpp"
#include "isw/kernels.hpp"

namespace isw {

namespace {

void require_same_dim(const CMatrix& a, const CMatrix& b, const char* op) {
    if (a.dim() != b.dim())
        throw DimensionError(std::string(op) + ": dimensions " + std::to_string(a.dim()) +
                             " and " + std::to_string(b.dim()) + " differ");
}

}  // namespace

CMatrix CMatrix::identity(std::size_t n) {
    CMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

bool CMatrix::is_hermitian(double tol) const {
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i; j < n_; ++j)
            if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) return false;
    return true;
}

double CMatrix::inf_norm() const {
    double best = 0.0;
    for (std::size_t i = 0; i < n_; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < n_; ++j) s += std::abs((*this)(i, j));
        best = std::max(best, s);
    }
    return best;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    require_same_dim(a, b, "matrix product");
    const std::size_t n = a.dim();
    const auto& k = kernels::active();
    CMatrix c(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < n; ++l)
            if (a(i, l) != 0.0) k.axpy(a(i, l), b.row(l), c.row(i), n);
    return c;
}

CMatrix operator+(const CMatrix& a, const CMatrix& b) {
    require_same_dim(a, b, "matrix sum");
    const std::size_t n = a.dim();
    CMatrix c = a;
    kernels::active().axpy(1.0, b.data(), c.data(), n * n);
    return c;
}

CMatrix operator-(const CMatrix& a, const CMatrix& b) {
    require_same_dim(a, b, "matrix difference");
    const std::size_t n = a.dim();
    CMatrix c = a;
    kernels::active().axpy(-1.0, b.data(), c.data(), n * n);
    return c;
}

CMatrix operator*(cplx s, const CMatrix& a) {
    CMatrix c = a;
    kernels::active().scal(s, c.data(), c.dim() * c.dim());
    return c;
}

CMatrix adjoint(const CMatrix& a) {
    const std::size_t n = a.dim();
    CMatrix c(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) c(j, i) = std::conj(a(i, j));
    return c;
}

std::vector<cplx> matvec(const CMatrix& a, const std::vector<cplx>& x) {
    if (x.size() != a.dim())
        throw DimensionError("matvec: vector length " + std::to_string(x.size()) +
                             " does not match matrix dimension " + std::to_string(a.dim()));
    std::vector<cplx> y(a.dim());
    kernels::active().matvec(a.data(), x.data(), y.data(), a.dim());
    return y;
}

LuFactorization::LuFactorization(CMatrix a) : lu_(std::move(a)), perm_(lu_.dim()) {
    const std::size_t n = lu_.dim();
    const auto& kern = kernels::active();
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        double best = std::abs(lu_(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            double v = std::abs(lu_(i, k));
            if (v > best) {
                best = v;
                p = i;
            }
        }
        perm_[k] = p;
        if (best == 0.0)
            throw NumericError("LU factorization hit a zero pivot at column " + std::to_string(k));
        if (p != k) std::swap_ranges(lu_.row(k), lu_.row(k) + n, lu_.row(p));
        const cplx pivot = lu_(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const cplx l = lu_(i, k) / pivot;
            lu_(i, k) = l;
            if (l != 0.0) kern.axpy(-l, lu_.row(k) + k + 1, lu_.row(i) + k + 1, n - k - 1);
        }
    }
}

std::vector<cplx> LuFactorization::solve(std::vector<cplx> b) const {
    const std::size_t n = lu_.dim();
    if (b.size() != n)
        throw DimensionError("LU solve: right-hand side length " + std::to_string(b.size()) +
                             " does not match dimension " + std::to_string(n));
    const auto& kern = kernels::active();
    for (std::size_t k = 0; k < n; ++k)
        if (perm_[k] != k) std::swap(b[k], b[perm_[k]]);
    for (std::size_t i = 1; i < n; ++i) b[i] -= kern.dotu(lu_.row(i), b.data(), i);
    for (std::size_t i = n; i-- > 0;) {
        b[i] -= kern.dotu(lu_.row(i) + i + 1, b.data() + i + 1, n - i - 1);
        b[i] /= lu_(i, i);
    }
    return b;
}

CMatrix inverse(const CMatrix& a) {
    const std::size_t n = a.dim();
    LuFactorization lu(a);
    CMatrix inv(n);
    std::vector<cplx> e(n);
    for (std::size_t j = 0; j < n; ++j) {
        std::fill(e.begin(), e.end(), cplx{});
        e[j] = 1.0;
        std::vector<cplx> col = lu.solve(std::move(e));
        for (std::size_t i = 0; i < n; ++i) inv(i, j) = col[i];
        e = std::move(col);
    }
    return inv;
}

namespace {

// Householder reduction of a Hermitian matrix to real symmetric tridiagonal
// form (diagonal d, off-diagonal e with e[0] unused). A diagonal phase
// similarity makes the subdiagonal real, so only magnitudes are kept.
void tridiagonalize(CMatrix a, std::vector<double>& d, std::vector<double>& e) {
    const std::size_t n = a.dim();
    d.assign(n, 0.0);
    e.assign(n, 0.0);
    std::vector<cplx> p(n), q(n);
    for (std::size_t i = n - 1; i >= 1; --i) {
        const std::size_t l = i - 1;
        if (l == 0) {
            e[i] = std::abs(a(i, 0));
            continue;
        }
        double scale = 0.0;
        for (std::size_t k = 0; k <= l; ++k)
            scale += std::abs(a(i, k).real()) + std::abs(a(i, k).imag());
        if (scale == 0.0) {
            e[i] = 0.0;
            continue;
        }
        double h = 0.0;
        for (std::size_t k = 0; k <= l; ++k) {
            a(i, k) /= scale;
            h += std::norm(a(i, k));
        }
        const double f = std::abs(a(i, l));
        const double g = std::sqrt(h);
        const cplx tau = (f != 0.0) ? a(i, l) / f : cplx{1.0, 0.0};
        e[i] = scale * g;
        h += f * g;
        a(i, l) += tau * g;
        // Row i holds the conjugate of the column reflector u, so u_k enters
        // the products below as conj(a(i, k)).
        for (std::size_t j = 0; j <= l; ++j) {
            cplx s{};
            for (std::size_t k = 0; k <= l; ++k) s += a(j, k) * std::conj(a(i, k));
            p[j] = s / h;
        }
        cplx kc{};
        for (std::size_t j = 0; j <= l; ++j) kc += a(i, j) * p[j];
        const double kk = kc.real() / (2.0 * h);
        for (std::size_t j = 0; j <= l; ++j) q[j] = p[j] - kk * std::conj(a(i, j));
        for (std::size_t j = 0; j <= l; ++j) {
            const cplx uj = std::conj(a(i, j));
            const cplx qj = q[j];
            for (std::size_t k = 0; k <= l; ++k)
                a(j, k) -= qj * a(i, k) + uj * std::conj(q[k]);
        }
    }
    for (std::size_t i = 0; i < n; ++i) d[i] = a(i, i).real();
}

// Implicit-shift QL iteration on a real symmetric tridiagonal matrix,
// eigenvalues only.
void ql_eigenvalues(std::vector<double>& d, std::vector<double>& e) {
    const std::size_t n = d.size();
    if (n == 0) return;
    for (std::size_t i = 1; i < n; ++i) e[i - 1] = e[i];
    e[n - 1] = 0.0;
    const double eps = std::numeric_limits<double>::epsilon();
    for (std::size_t l = 0; l < n; ++l) {
        int iter = 0;
        std::size_t m;
        do {
            for (m = l; m + 1 < n; ++m) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= eps * dd) break;
            }
            if (m != l) {
                if (iter++ == 60)
                    throw ConvergenceError("QL iteration exceeded 60 sweeps on eigenvalue " +
                                           std::to_string(l));
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, pshift = 0.0;
                bool underflow = false;
                for (std::size_t i = m; i-- > l;) {
                    double f = s * e[i];
                    const double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= pshift;
                        e[m] = 0.0;
                        underflow = true;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - pshift;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    pshift = s * r;
                    d[i + 1] = g + pshift;
                    g = c * r - b;
                }
                if (underflow) continue;
                d[l] -= pshift;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
}

}  // namespace

std::vector<double> hermitian_eigenvalues(const CMatrix& a) {
    const std::size_t n = a.dim();
    if (n == 0) return {};
    const double tol = 1e-12 * std::max(1.0, a.inf_norm());
    if (!a.is_hermitian(tol))
        throw NumericError("eigenvalue solver requires a Hermitian matrix");
    if (n == 1) return {a(0, 0).real()};
    std::vector<double> d, e;
    tridiagonalize(a, d, e);
    ql_eigenvalues(d, e);
    std::sort(d.begin(), d.end());
    return d;
}

}  // namespace isw
