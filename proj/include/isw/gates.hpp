#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "isw/linalg.hpp"
#include "isw/operators.hpp"

namespace isw::gates {

struct LevelAmplitude {
    std::size_t level = 1;  // well level, n >= 1
    cplx amplitude;
};

/// One coded logical basis state as a superposition of well levels.
using Codeword = std::vector<LevelAmplitude>;

/// Embedding of the logical standard basis: codewords[j] is the image of
/// logical |j>. Codewords must be pairwise orthonormal.
struct LevelCoding {
    std::size_t logical_dim = 0;
    std::vector<Codeword> codewords;
};

struct GateConstruction {
    std::string name;
    CMatrix target;  // logical_dim x logical_dim unitary
    LevelCoding coding;
    double phi = 0.0;  // dimensionless free-evolution phase theta
    std::size_t max_level = 8;
};

/// Free evolution of the well: diag(exp(-i theta n^2)), n = 1..max_level.
TruncatedOperator free_evolution(double theta, std::size_t max_level);

/// The factored gate family exp(-i phi) * exp(-i phi (n^2 - 1)) per level;
/// identical to free_evolution(phi, max_level) entry by entry.
TruncatedOperator gamma(double phi, std::size_t max_level);

/// diag(1, e^{i pi/4}) from levels 1 and 2 at phi = -pi/12.
GateConstruction builtin_phase_gate();
/// CNOT from levels 2, 4 and (|6> +- |1>)/sqrt(2) at phi = pi.
GateConstruction builtin_cnot_gate();
/// Hadamard from its eigenvectors coded to levels 2 and 1 at phi = pi/3.
GateConstruction builtin_hadamard_gate();

std::vector<GateConstruction> builtins();

struct VerifyResult {
    double fidelity = 0.0;
    double unitarity_error = 0.0;  // max entry of |A^dag A - I|
    bool pass = false;
};

/// Forms the isometry V from the codewords, realizes A = V^dag U V with U the
/// free evolution at gc.phi, and scores fidelity |tr(A^dag target)| / d,
/// which ignores global phase. Passes iff fidelity >= 1 - 1e-10 and A is
/// unitary to 1e-10 (the coded subspace is invariant under the evolution).
VerifyResult verify(const GateConstruction& gc);

}  // namespace isw::gates
