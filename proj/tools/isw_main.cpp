#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "isw/decide.hpp"
#include "isw/errors.hpp"
#include "isw/evolve.hpp"
#include "isw/gates.hpp"
#include "isw/io.hpp"
#include "isw/operators.hpp"
#include "isw/poly.hpp"
#include "isw/spectra.hpp"

namespace {

struct Options {
    std::string equation;
    std::size_t P = 6;
    std::int64_t T = 2000;
    double dt = 1.0;
    std::string hi_form = "complement_projector";
    std::size_t e0_stride = 0;
    std::size_t record_stride = 0;
    std::string out = "-";
    bool svg = false;
    bool json = false;
    std::string dump_operators;
    std::size_t max_dim = 4096;
    bool midpoint_s = false;
    double dominance_threshold = 0.5;
    double energy_threshold = 0.5;
};

void add_shared(CLI::App* cmd, Options& o) {
    cmd->fallthrough();
    cmd->add_option("-e,--equation", o.equation, "left-hand side of the equation ... = 0")
        ->required();
    cmd->add_option("-P", o.P, "well levels kept per variable")->check(CLI::PositiveNumber);
    cmd->add_option("-T", o.T, "total adiabatic time (integer multiple of dt)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--dt", o.dt, "time step")->check(CLI::PositiveNumber);
    cmd->add_option("--hi-form", o.hi_form,
                    "interaction Hamiltonian: complement_projector, ones or laplacian");
    cmd->add_option("--e0-stride", o.e0_stride, "ground-energy sampling stride (0 = auto)");
    cmd->add_option("--record-stride", o.record_stride, "trace-row stride (0 = auto)");
    cmd->add_option("-o,--out", o.out, "output path, '-' for stdout");
    cmd->add_flag("--svg", o.svg, "also write SVG charts next to the output file");
    cmd->add_flag("--json", o.json, "machine-readable output where applicable");
    cmd->add_option("--dump-operators", o.dump_operators,
                    "write the schedule endpoint operators as JSON to this path");
    cmd->add_option("--max-dim", o.max_dim, "cap on the composite dimension P^k");
    cmd->add_flag("--midpoint-s", o.midpoint_s,
                  "evaluate the schedule mid-step instead of at step start");
    cmd->add_option("--dominance-threshold", o.dominance_threshold,
                    "minimum final probability to accept a dominant state");
    cmd->add_option("--energy-threshold", o.energy_threshold,
                    "final ground energy above this reads as nonzero");
}

isw::poly::Polynomial parse_equation(const Options& o) {
    return isw::poly::parse(o.equation);
}

isw::TruncationSpec spec_for(const Options& o, const isw::poly::Polynomial& p) {
    return {p.variable_count(), o.P, o.max_dim};
}

isw::EvolutionParams params_for(const Options& o) {
    isw::EvolutionParams params;
    params.total_time = o.T;
    params.dt = o.dt;
    params.e0_stride = o.e0_stride;
    params.record_stride = o.record_stride;
    params.midpoint_s = o.midpoint_s;
    return params;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw isw::Error("cannot open " + path + " for writing");
    out << text;
}

std::string svg_base(const Options& o) {
    if (o.out == "-")
        throw isw::Error("--svg needs -o FILE to derive the chart file names");
    const std::size_t slash = o.out.find_last_of('/');
    const std::size_t dot = o.out.find_last_of('.');
    if (dot != std::string::npos && (slash == std::string::npos || dot > slash))
        return o.out.substr(0, dot);
    return o.out;
}

void maybe_dump_operators(const Options& o, const isw::poly::Polynomial& p) {
    if (o.dump_operators.empty()) return;
    const isw::TruncationSpec spec = spec_for(o, p);
    write_text(o.dump_operators,
               isw::io::operators_json(isw::build_HD(p, spec),
                                       isw::build_HI(spec, isw::hi_form_from_name(o.hi_form))));
}

int run_solve(const Options& o) {
    const auto p = parse_equation(o);
    isw::DecisionThresholds thresholds{o.dominance_threshold, o.energy_threshold};
    const isw::Verdict verdict = isw::decide(p, spec_for(o, p), params_for(o), thresholds,
                                             isw::hi_form_from_name(o.hi_form));
    const std::string json = isw::io::verdict_json(verdict);
    std::cout << json;
    if (o.out != "-") write_text(o.out, json);
    if (!p.is_zero()) maybe_dump_operators(o, p);
    return verdict.status == isw::Status::Inconclusive ? 2 : 0;
}

int run_trace(const Options& o) {
    const auto p = parse_equation(o);
    const isw::EvolutionTrace trace = isw::run_evolution(
        p, spec_for(o, p), params_for(o), isw::hi_form_from_name(o.hi_form));
    std::ostringstream csv;
    isw::io::write_trace_csv(csv, trace);
    if (o.out == "-")
        std::cout << csv.str();
    else
        write_text(o.out, csv.str());
    if (o.svg) {
        const std::string base = svg_base(o);
        write_text(base + "_prob.svg", isw::io::svg_probability_chart(trace));
        write_text(base + "_exp.svg", isw::io::svg_expectation_chart(trace));
        write_text(base + "_e0.svg", isw::io::svg_ground_energy_chart(trace));
    }
    maybe_dump_operators(o, p);
    return 0;
}

int run_spectrum(const Options& o) {
    const auto p = parse_equation(o);
    const auto flow = isw::spectral_flow(p, spec_for(o, p), params_for(o),
                                         isw::hi_form_from_name(o.hi_form));
    std::ostringstream csv;
    isw::io::write_spectrum_csv(csv, flow);
    if (o.out == "-")
        std::cout << csv.str();
    else
        write_text(o.out, csv.str());
    if (o.svg) write_text(svg_base(o) + ".svg", isw::io::svg_spectrum_chart(flow));
    maybe_dump_operators(o, p);
    return 0;
}

int run_gates_verify(bool json, double phi_offset, std::size_t max_level) {
    isw::io::GateReport report;
    bool all_pass = true;
    for (auto gc : isw::gates::builtins()) {
        gc.phi += phi_offset;
        if (max_level > 0) gc.max_level = max_level;
        const auto result = isw::gates::verify(gc);
        all_pass = all_pass && result.pass;
        report.emplace_back(std::move(gc), result);
    }
    std::cout << (json ? isw::io::gates_json(report) : isw::io::gates_table(report));
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"infinite square well adiabatic decision engine"};
    app.set_config("--config", "", "key=value config file; flags take precedence");
    app.require_subcommand(1);

    Options o;
    CLI::App* solve = app.add_subcommand("solve", "decide an equation and print the verdict");
    CLI::App* trace = app.add_subcommand("trace", "run the evolution and write the trace CSV");
    CLI::App* spectrum = app.add_subcommand("spectrum", "sample the ground-energy flow");
    add_shared(solve, o);
    add_shared(trace, o);
    add_shared(spectrum, o);

    CLI::App* gates = app.add_subcommand("gates", "free-evolution gate constructions");
    gates->fallthrough();
    gates->require_subcommand(1);
    bool gates_json_flag = false;
    double phi_offset = 0.0;
    std::size_t gates_max_level = 0;
    CLI::App* verify = gates->add_subcommand("verify", "check the builtin gates");
    verify->add_flag("--json", gates_json_flag, "emit a JSON array instead of a table");
    verify->add_option("--phi-offset", phi_offset, "perturb every gate phase (diagnostics)");
    verify->add_option("--max-level", gates_max_level, "verification truncation (0 = per gate)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (solve->parsed()) return run_solve(o);
        if (trace->parsed()) return run_trace(o);
        if (spectrum->parsed()) return run_spectrum(o);
        if (gates->parsed() && verify->parsed())
            return run_gates_verify(gates_json_flag, phi_offset, gates_max_level);
        std::cerr << "error: no subcommand\n";
        return 1;
    } catch (const isw::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
