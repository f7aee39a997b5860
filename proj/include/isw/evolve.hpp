#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "isw/operators.hpp"

namespace isw {

struct EvolutionState {
    double t = 0.0;
    std::vector<cplx> amplitudes;
};

struct EvolutionParams {
    std::int64_t total_time = 2000;  // T, an integer multiple of dt
    double dt = 1.0;
    std::size_t e0_stride = 0;      // ground-energy sampling stride; 0 = max(1, steps/500)
    std::size_t record_stride = 0;  // trace-row stride; 0 = max(1, steps/1000)
    bool midpoint_s = false;        // evaluate s mid-step instead of at its start

    /// T/dt, validated to be a positive integer.
    std::size_t step_count() const;
    std::size_t effective_e0_stride() const;
    std::size_t effective_record_stride() const;
};

struct TraceRow {
    double t = 0.0;
    std::optional<double> e0;
    std::vector<double> expectations;   // per variable, in variable order
    std::vector<double> probabilities;  // per composite state
};

struct EvolutionTrace {
    std::string equation;  // canonical polynomial text
    TruncationSpec spec;
    EvolutionParams params;
    HiForm hi_form = HiForm::complement_projector;
    std::vector<std::string> variables;
    std::vector<TraceRow> rows;
    double max_step_norm_drift = 0.0;  // max per-step change of the state norm
    double final_norm_error = 0.0;     // | ||psi(T)|| - 1 |
};

EvolutionState uniform_initial_state(std::size_t dim);

/// One Crank-Nicolson step: solves (I + (i/2) dt H) psi' = (I - (i/2) dt H) psi.
/// Exactly unitary for Hermitian H in exact arithmetic.
EvolutionState cayley_step(const EvolutionState& state, const TruncatedOperator& ha,
                           double dt);

/// Core schedule loop over H(s) = (1-s) hi + s hd, s = t/T. Rows are recorded
/// at t = 0, every record_stride steps, and t = T; the ground energy is
/// attached to rows whose step index is also a multiple of e0_stride (and
/// always to the last one). Exposed separately from run_evolution so callers
/// can drive arbitrary operator pairs.
EvolutionTrace run_schedule(const TruncatedOperator& hd, const TruncatedOperator& hi,
                            const EvolutionParams& params);

EvolutionTrace run_evolution(const poly::Polynomial& p, const TruncationSpec& spec,
                             const EvolutionParams& params,
                             HiForm form = HiForm::complement_projector);

}  // namespace isw
