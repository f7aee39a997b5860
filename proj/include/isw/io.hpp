#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "isw/decide.hpp"
#include "isw/evolve.hpp"
#include "isw/gates.hpp"
#include "isw/spectra.hpp"

namespace isw::io {

/// Header `t,E0,exp_<var>...,p_<n1>_<n2>...`; 12 significant digits; E0 cells
/// left empty on rows without a ground-energy sample.
void write_trace_csv(std::ostream& out, const EvolutionTrace& trace);

/// Header `t,s,e0,gap`.
void write_spectrum_csv(std::ostream& out, const std::vector<SpectralSample>& flow);

std::string verdict_json(const Verdict& v);

/// Debug dump of the two schedule endpoints; inspection format, not a
/// stability contract.
std::string operators_json(const TruncatedOperator& hd, const TruncatedOperator& hi);

using GateReport = std::vector<std::pair<gates::GateConstruction, gates::VerifyResult>>;

std::string gates_table(const GateReport& report);
std::string gates_json(const GateReport& report);

/// Standalone line charts for the trace: state probabilities (the eight
/// largest at the final time), per-variable expectations, and the sampled
/// ground energy.
std::string svg_probability_chart(const EvolutionTrace& trace);
std::string svg_expectation_chart(const EvolutionTrace& trace);
std::string svg_ground_energy_chart(const EvolutionTrace& trace);
std::string svg_spectrum_chart(const std::vector<SpectralSample>& flow);

}  // namespace isw::io
