#include "isw/evolve.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "isw/errors.hpp"
#include "isw/kernels.hpp"
#include "isw/spectra.hpp"

namespace isw {

std::size_t EvolutionParams::step_count() const {
    if (total_time < 1) throw Error("total time must be a positive integer");
    if (!(dt > 0.0)) throw Error("time step must be positive");
    const double ratio = static_cast<double>(total_time) / dt;
    const auto steps = static_cast<long long>(std::llround(ratio));
    if (steps < 1 ||
        std::abs(static_cast<double>(steps) * dt - static_cast<double>(total_time)) >
            1e-9 * static_cast<double>(total_time))
        throw Error("total time must be an integer multiple of dt");
    return static_cast<std::size_t>(steps);
}

std::size_t EvolutionParams::effective_e0_stride() const {
    if (e0_stride > 0) return e0_stride;
    return std::max<std::size_t>(1, step_count() / 500);
}

std::size_t EvolutionParams::effective_record_stride() const {
    if (record_stride > 0) return record_stride;
    return std::max<std::size_t>(1, step_count() / 1000);
}

EvolutionState uniform_initial_state(std::size_t dim) {
    if (dim < 1) throw DimensionError("state dimension must be at least 1");
    EvolutionState state;
    state.amplitudes.assign(dim, 1.0 / std::sqrt(static_cast<double>(dim)));
    return state;
}

EvolutionState cayley_step(const EvolutionState& state, const TruncatedOperator& ha,
                           double dt) {
    const std::size_t dim = ha.dim();
    if (state.amplitudes.size() != dim)
        throw DimensionError("state length " + std::to_string(state.amplitudes.size()) +
                             " does not match operator dimension " + std::to_string(dim));
    const auto& kern = kernels::active();
    const cplx half_i{0.0, 0.5 * dt};

    std::vector<cplx> rhs(dim);
    kern.matvec(ha.matrix.data(), state.amplitudes.data(), rhs.data(), dim);
    kern.scal(-half_i, rhs.data(), dim);
    kern.axpy(1.0, state.amplitudes.data(), rhs.data(), dim);

    CMatrix lhs = ha.matrix;
    kern.scal(half_i, lhs.data(), dim * dim);
    for (std::size_t i = 0; i < dim; ++i) lhs(i, i) += 1.0;

    EvolutionState next;
    next.t = state.t + dt;
    next.amplitudes = LuFactorization(std::move(lhs)).solve(std::move(rhs));
    return next;
}

namespace {

struct Recorder {
    const BasisIndexer indexer;
    std::vector<std::vector<double>> level_sq;  // [variable][composite index]

    explicit Recorder(const TruncationSpec& spec) : indexer(spec) {
        const std::size_t dim = indexer.dim();
        level_sq.assign(spec.k, std::vector<double>(dim));
        for (std::size_t idx = 0; idx < dim; ++idx) {
            const auto levels = indexer.levels_of(idx);
            for (std::size_t v = 0; v < spec.k; ++v)
                level_sq[v][idx] = static_cast<double>(levels[v] * levels[v]);
        }
    }

    TraceRow row(double t, const std::vector<cplx>& amplitudes) const {
        const std::size_t dim = amplitudes.size();
        TraceRow r;
        r.t = t;
        r.probabilities.resize(dim);
        kernels::active().abs2(amplitudes.data(), r.probabilities.data(), dim);
        r.expectations.resize(level_sq.size());
        for (std::size_t v = 0; v < level_sq.size(); ++v) {
            double e = 0.0;
            for (std::size_t idx = 0; idx < dim; ++idx)
                e += r.probabilities[idx] * level_sq[v][idx];
            r.expectations[v] = e;
        }
        return r;
    }
};

}  // namespace

EvolutionTrace run_schedule(const TruncatedOperator& hd, const TruncatedOperator& hi,
                            const EvolutionParams& params) {
    if (hd.dim() != hi.dim())
        throw DimensionError("operator dimensions " + std::to_string(hd.dim()) + " and " +
                             std::to_string(hi.dim()) + " differ");
    const std::size_t steps = params.step_count();
    const std::size_t e0_stride = params.effective_e0_stride();
    const std::size_t record_stride = params.effective_record_stride();
    const std::size_t dim = hd.dim();
    const auto& kern = kernels::active();

    EvolutionTrace trace;
    trace.spec = hd.spec;
    trace.params = params;
    trace.params.e0_stride = e0_stride;
    trace.params.record_stride = record_stride;

    const Recorder recorder(hd.spec);
    EvolutionState state = uniform_initial_state(dim);
    double prev_norm = std::sqrt(kern.nrm2sq(state.amplitudes.data(), dim));

    const auto ground_at = [&](double s) {
        return smallest_eigenvalue(build_HA(hd, hi, s)).e0;
    };

    for (std::size_t j = 0; j < steps; ++j) {
        if (j % record_stride == 0) {
            TraceRow r = recorder.row(static_cast<double>(j) * params.dt, state.amplitudes);
            if (j % e0_stride == 0)
                r.e0 = ground_at(static_cast<double>(j) / static_cast<double>(steps));
            trace.rows.push_back(std::move(r));
        }
        const double s = params.midpoint_s
                             ? (static_cast<double>(j) + 0.5) / static_cast<double>(steps)
                             : static_cast<double>(j) / static_cast<double>(steps);
        state = cayley_step(state, build_HA(hd, hi, s), params.dt);
        const double norm = std::sqrt(kern.nrm2sq(state.amplitudes.data(), dim));
        if (!std::isfinite(norm))
            throw NumericError("state norm became non-finite at step " + std::to_string(j));
        trace.max_step_norm_drift =
            std::max(trace.max_step_norm_drift, std::abs(norm - prev_norm));
        prev_norm = norm;
    }

    TraceRow last = recorder.row(static_cast<double>(params.total_time), state.amplitudes);
    last.e0 = ground_at(1.0);
    trace.rows.push_back(std::move(last));
    trace.final_norm_error = std::abs(prev_norm - 1.0);
    return trace;
}

EvolutionTrace run_evolution(const poly::Polynomial& p, const TruncationSpec& spec,
                             const EvolutionParams& params, HiForm form) {
    EvolutionTrace trace =
        run_schedule(build_HD(p, spec), build_HI(spec, form), params);
    trace.equation = print_canonical(p);
    trace.variables = p.variables();
    trace.hi_form = form;
    return trace;
}

}  // namespace isw
