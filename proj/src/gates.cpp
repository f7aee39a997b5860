#include "isw/gates.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "isw/errors.hpp"
#include "isw/kernels.hpp"

namespace isw::gates {

namespace {

constexpr double pi = std::numbers::pi;

TruncationSpec level_spec(std::size_t max_level) {
    return {1, max_level, std::max<std::size_t>(max_level, 4096)};
}

}  // namespace

TruncatedOperator free_evolution(double theta, std::size_t max_level) {
    const TruncationSpec spec = level_spec(max_level);
    CMatrix m(spec.dim());
    for (std::size_t n = 1; n <= max_level; ++n)
        m(n - 1, n - 1) = std::polar(1.0, -theta * static_cast<double>(n * n));
    return {spec, std::move(m)};
}

TruncatedOperator gamma(double phi, std::size_t max_level) {
    const TruncationSpec spec = level_spec(max_level);
    const cplx global = std::polar(1.0, -phi);
    CMatrix m(spec.dim());
    for (std::size_t n = 1; n <= max_level; ++n)
        m(n - 1, n - 1) =
            global * std::polar(1.0, -phi * static_cast<double>(n * n - 1));
    return {spec, std::move(m)};
}

GateConstruction builtin_phase_gate() {
    GateConstruction gc;
    gc.name = "phase";
    gc.target = CMatrix(2);
    gc.target(0, 0) = 1.0;
    gc.target(1, 1) = std::polar(1.0, pi / 4.0);
    gc.coding = {2, {{{1, 1.0}}, {{2, 1.0}}}};
    gc.phi = -pi / 12.0;
    return gc;
}

GateConstruction builtin_cnot_gate() {
    GateConstruction gc;
    gc.name = "cnot";
    gc.target = CMatrix(4);
    gc.target(0, 0) = 1.0;
    gc.target(1, 1) = 1.0;
    gc.target(2, 3) = 1.0;
    gc.target(3, 2) = 1.0;
    const double r = 1.0 / std::sqrt(2.0);
    gc.coding = {4,
                 {{{2, 1.0}},
                  {{4, 1.0}},
                  {{6, r}, {1, r}},
                  {{6, r}, {1, -r}}}};
    gc.phi = pi;
    return gc;
}

GateConstruction builtin_hadamard_gate() {
    GateConstruction gc;
    gc.name = "hadamard";
    const double r = 1.0 / std::sqrt(2.0);
    gc.target = CMatrix(2);
    gc.target(0, 0) = r;
    gc.target(0, 1) = r;
    gc.target(1, 0) = r;
    gc.target(1, 1) = -r;
    // The +1 eigenvector (cos pi/8, sin pi/8) is coded to level 2, the -1
    // eigenvector (-sin pi/8, cos pi/8) to level 1; at phi = pi/3 the two
    // levels pick up a relative phase of -1.
    const double c = std::cos(pi / 8.0);
    const double s = std::sin(pi / 8.0);
    gc.coding = {2, {{{2, c}, {1, -s}}, {{2, s}, {1, c}}}};
    gc.phi = pi / 3.0;
    return gc;
}

std::vector<GateConstruction> builtins() {
    return {builtin_phase_gate(), builtin_cnot_gate(), builtin_hadamard_gate()};
}

VerifyResult verify(const GateConstruction& gc) {
    const std::size_t d = gc.coding.logical_dim;
    if (gc.coding.codewords.size() != d)
        throw Error("coding has " + std::to_string(gc.coding.codewords.size()) +
                    " codewords for logical dimension " + std::to_string(d));
    if (gc.target.dim() != d)
        throw DimensionError("target dimension does not match the coding");

    std::vector<std::vector<cplx>> code(d, std::vector<cplx>(gc.max_level));
    for (std::size_t j = 0; j < d; ++j)
        for (const auto& [level, amplitude] : gc.coding.codewords[j]) {
            if (level < 1 || level > gc.max_level)
                throw Error("coding level " + std::to_string(level) +
                            " exceeds the truncation of " + std::to_string(gc.max_level));
            code[j][level - 1] += amplitude;
        }

    const auto& kern = kernels::active();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const cplx g = kern.dotc(code[i].data(), code[j].data(), gc.max_level);
            if (std::abs(g - (i == j ? 1.0 : 0.0)) > 1e-12)
                throw Error("codewords are not orthonormal");
        }

    const TruncatedOperator u = free_evolution(gc.phi, gc.max_level);
    CMatrix realized(d);
    std::vector<cplx> uc(gc.max_level);
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t n = 0; n < gc.max_level; ++n)
            uc[n] = u.matrix(n, n) * code[j][n];
        for (std::size_t i = 0; i < d; ++i)
            realized(i, j) = kern.dotc(code[i].data(), uc.data(), gc.max_level);
    }

    const CMatrix gram = adjoint(realized) * realized;
    double unitarity_error = 0.0;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            unitarity_error = std::max(
                unitarity_error, std::abs(gram(i, j) - (i == j ? cplx{1.0} : cplx{})));

    cplx overlap{};
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            overlap += std::conj(realized(i, j)) * gc.target(i, j);
    const double fidelity = std::abs(overlap) / static_cast<double>(d);

    VerifyResult r;
    r.fidelity = fidelity;
    r.unitarity_error = unitarity_error;
    r.pass = fidelity >= 1.0 - 1e-10 && unitarity_error <= 1e-10;
    return r;
}

}  // namespace isw::gates
