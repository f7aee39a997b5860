#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "isw/linalg.hpp"
#include "isw/poly.hpp"

namespace isw {

/// Tensor-space truncation: k variables, P well levels per variable.
struct TruncationSpec {
    std::size_t k = 1;
    std::size_t P = 1;
    std::size_t dim_cap = 4096;

    /// P^k after validation. Exceeding dim_cap is an error, never a silent
    /// degradation.
    std::size_t dim() const;

    bool operator==(const TruncationSpec&) const = default;
};

/// Bijection between composite indices 0..dim-1 and level tuples
/// (n_1,...,n_k), n_i in 1..P, row-major with the first variable most
/// significant.
class BasisIndexer {
public:
    explicit BasisIndexer(TruncationSpec spec) : spec_(spec), dim_(spec.dim()) {}

    const TruncationSpec& spec() const { return spec_; }
    std::size_t dim() const { return dim_; }

    std::size_t index_of(const std::vector<std::size_t>& levels) const;
    std::vector<std::size_t> levels_of(std::size_t index) const;

private:
    TruncationSpec spec_;
    std::size_t dim_;
};

/// Dense Hermitian operator on the truncated tensor space.
struct TruncatedOperator {
    TruncationSpec spec;
    CMatrix matrix;

    std::size_t dim() const { return matrix.dim(); }
};

/// Interaction Hamiltonian variants. The default is I - J/dim: built from the
/// ones matrix J, the uniform state is its unique zero-eigenvalue ground
/// state and every other eigenvalue is 1. The alternatives are J itself and
/// the graph-Laplacian form dim*I - J.
enum class HiForm { complement_projector, ones, laplacian };

HiForm hi_form_from_name(std::string_view name);
std::string_view hi_form_name(HiForm form);

/// diag(1, 4, ..., P^2): the number-squared operator of a single well.
TruncatedOperator build_M(std::size_t P);

/// Codifying Hamiltonian: diagonal, entry D(n_1^2,...,n_k^2)^2 at the
/// composite index of (n_1,...,n_k). Coefficients are evaluated exactly and
/// converted to double afterwards.
TruncatedOperator build_HD(const poly::Polynomial& p, const TruncationSpec& spec);

TruncatedOperator build_HI(const TruncationSpec& spec,
                           HiForm form = HiForm::complement_projector);

/// (1-s)*H_I + s*H_D for s in [0,1].
TruncatedOperator build_HA(const TruncatedOperator& hd, const TruncatedOperator& hi,
                           double s);

}  // namespace isw
