#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace isw {

using cplx = std::complex<double>;

// Dense square complex matrix, row-major storage.
class CMatrix {
public:
    CMatrix() = default;
    explicit CMatrix(std::size_t n) : n_(n), a_(n * n) {}

    static CMatrix identity(std::size_t n);

    std::size_t dim() const { return n_; }

    cplx& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    cplx* row(std::size_t i) { return a_.data() + i * n_; }
    const cplx* row(std::size_t i) const { return a_.data() + i * n_; }

    cplx* data() { return a_.data(); }
    const cplx* data() const { return a_.data(); }

    bool is_hermitian(double tol = 1e-12) const;

    // Maximum absolute row sum.
    double inf_norm() const;

private:
    std::size_t n_ = 0;
    std::vector<cplx> a_;
};

CMatrix operator*(const CMatrix& a, const CMatrix& b);
CMatrix operator+(const CMatrix& a, const CMatrix& b);
CMatrix operator-(const CMatrix& a, const CMatrix& b);
CMatrix operator*(cplx s, const CMatrix& a);

CMatrix adjoint(const CMatrix& a);

std::vector<cplx> matvec(const CMatrix& a, const std::vector<cplx>& x);

// PA = LU with partial pivoting. Throws NumericError on a singular matrix.
class LuFactorization {
public:
    explicit LuFactorization(CMatrix a);

    std::vector<cplx> solve(std::vector<cplx> b) const;

private:
    CMatrix lu_;
    std::vector<std::size_t> perm_;
};

CMatrix inverse(const CMatrix& a);

// All eigenvalues of a Hermitian matrix, ascending. Throws NumericError if the
// matrix is not Hermitian, ConvergenceError if the QL iteration stalls.
std::vector<double> hermitian_eigenvalues(const CMatrix& a);

}  // namespace isw
