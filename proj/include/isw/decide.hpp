#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "isw/evolve.hpp"
#include "isw/poly.hpp"

namespace isw {

enum class Status { HasSolution, NoSolution, Inconclusive, DegenerateZero };

std::string_view status_name(Status s);

struct DecisionThresholds {
    /// Minimum final probability for a state to count as dominant.
    double dominance = 0.5;
    /// E0(T) above this reads as "nonzero ground energy". Safe at 0.5: true
    /// values are squared integers, so 0 or at least 1.
    double energy = 0.5;
};

/// Outcome of one decision run. A positive verdict is only ever emitted after
/// the candidate passed an exact integer re-check, so HasSolution is a
/// certificate; NoSolution is always relative to the truncation level P.
struct Verdict {
    Status status = Status::Inconclusive;
    std::string equation;
    TruncationSpec spec;
    EvolutionParams params;
    std::vector<std::string> variables;
    std::optional<std::vector<std::size_t>> dominant_state;  // level tuple (n_1,...,n_k)
    double dominant_probability = 0.0;
    std::optional<std::vector<poly::Int>> solution;  // x_i = n_i^2, variable order
    double e0_final = 0.0;
    std::vector<double> expectations_final;
};

/// First index holding the maximum value; ties go to the smaller index.
std::size_t dominant_index(const std::vector<double>& probabilities);

Verdict decide(const poly::Polynomial& p, const TruncationSpec& spec,
               const EvolutionParams& params, const DecisionThresholds& thresholds = {},
               HiForm form = HiForm::complement_projector);

}  // namespace isw
