#pragma once

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "isw/linalg.hpp"
#include "isw/operators.hpp"
#include "isw/poly.hpp"

// Independent reference implementations the tests compare against. Everything
// here deliberately avoids the production kernels and eigensolver.
namespace oracles {

/// All eigenvalues of a real symmetric matrix (row-major, n x n), ascending,
/// via cyclic Jacobi rotations.
std::vector<double> jacobi_eigenvalues(std::vector<double> a, std::size_t n);

/// All eigenvalues of a complex Hermitian matrix, ascending, via the real
/// symmetric embedding [[X, -Y], [Y, X]] of H = X + iY (each eigenvalue of H
/// shows up twice in the embedding).
std::vector<double> hermitian_eigenvalues_embedding(const isw::CMatrix& h);

/// Codifying Hamiltonian by literal matrix substitution: sum the monomials of
/// p as products of Kronecker-lifted M-matrix powers, then square the matrix.
/// Naive dense arithmetic throughout.
isw::CMatrix hd_matrix_oracle(const isw::poly::Polynomial& p,
                              const isw::TruncationSpec& spec);

/// Closed-form Cayley product for diagonal schedules: every amplitude evolves
/// by the scalar phase product over steps j with s_j = (j + s_offset)/steps.
std::vector<isw::cplx> diagonal_cayley_product(const std::vector<double>& hd_diag,
                                               const std::vector<double>& hi_diag,
                                               std::size_t steps, double dt,
                                               double s_offset,
                                               std::vector<isw::cplx> amplitudes);

isw::CMatrix random_hermitian(std::mt19937_64& rng, std::size_t n, double scale = 1.0);

/// Random polynomial that genuinely uses all k variables.
isw::poly::Polynomial random_polynomial(std::mt19937_64& rng, std::size_t k,
                                        unsigned max_degree, int coeff_range);

/// Random text conforming to the equation grammar, over the given variables.
std::string random_expression(std::mt19937_64& rng,
                              const std::vector<std::string>& vars, int depth);

std::vector<isw::poly::Int> random_point(std::mt19937_64& rng, std::size_t k, int range);

}  // namespace oracles
