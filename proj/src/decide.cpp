#include "isw/decide.hpp"

#include "isw/errors.hpp"

namespace isw {

std::string_view status_name(Status s) {
    switch (s) {
        case Status::HasSolution: return "HasSolution";
        case Status::NoSolution: return "NoSolution";
        case Status::Inconclusive: return "Inconclusive";
        case Status::DegenerateZero: return "DegenerateZero";
    }
    return "?";
}

std::size_t dominant_index(const std::vector<double>& probabilities) {
    if (probabilities.empty()) throw DimensionError("empty probability vector");
    std::size_t best = 0;
    for (std::size_t i = 1; i < probabilities.size(); ++i)
        if (probabilities[i] > probabilities[best]) best = i;
    return best;
}

Verdict decide(const poly::Polynomial& p, const TruncationSpec& spec,
               const EvolutionParams& params, const DecisionThresholds& thresholds,
               HiForm form) {
    Verdict v;
    v.equation = print_canonical(p);
    v.spec = spec;
    v.params = params;
    v.variables = p.variables();

    if (p.is_zero()) {
        // H_D vanishes identically: every state is a ground state and every
        // point solves the equation. Nothing to run.
        v.status = Status::DegenerateZero;
        return v;
    }
    if (p.variable_count() == 0)
        throw Error("equation \"" + v.equation + " = 0\" is a non-zero constant; "
                    "there is nothing to decide");

    const EvolutionTrace trace = run_evolution(p, spec, params, form);
    const TraceRow& last = trace.rows.back();
    v.params = trace.params;
    v.e0_final = *last.e0;
    v.expectations_final = last.expectations;

    const std::size_t idx = dominant_index(last.probabilities);
    const BasisIndexer indexer(spec);
    v.dominant_state = indexer.levels_of(idx);
    v.dominant_probability = last.probabilities[idx];

    if (v.dominant_probability < thresholds.dominance) {
        v.status = Status::Inconclusive;
        return v;
    }

    std::vector<poly::Int> point(spec.k);
    for (std::size_t i = 0; i < spec.k; ++i) {
        const auto n = (*v.dominant_state)[i];
        point[i] = poly::Int(n) * poly::Int(n);
    }
    if (p.evaluate(point) == 0) {
        v.status = Status::HasSolution;
        v.solution = std::move(point);
    } else if (v.e0_final > thresholds.energy) {
        v.status = Status::NoSolution;
    } else {
        v.status = Status::Inconclusive;
    }
    return v;
}

}  // namespace isw
