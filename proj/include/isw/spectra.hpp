#pragma once

#include <vector>

#include "isw/evolve.hpp"
#include "isw/operators.hpp"

namespace isw {

/// Bottom of a Hermitian spectrum: smallest eigenvalue and the distance to
/// the next one.
struct Ground {
    double e0 = 0.0;
    double gap = 0.0;
};

/// Two smallest eigenvalues of a Hermitian matrix: a full dense solve up to
/// dimension 64, shifted inverse iteration with deflation above that.
Ground smallest_eigenvalue(const CMatrix& h);
Ground smallest_eigenvalue(const TruncatedOperator& h);

struct SpectralSample {
    double t = 0.0;
    double s = 0.0;
    double e0 = 0.0;
    double gap = 0.0;
};

/// Ground energy of H(s) sampled along s = t/T at the e0 stride, always
/// including both endpoints.
std::vector<SpectralSample> spectral_flow(const poly::Polynomial& p,
                                          const TruncationSpec& spec,
                                          const EvolutionParams& params,
                                          HiForm form = HiForm::complement_projector);

}  // namespace isw
