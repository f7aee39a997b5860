#include "isw/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

namespace isw::io {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::vector<std::string> variable_names(const EvolutionTrace& trace) {
    if (trace.variables.size() == trace.spec.k) return trace.variables;
    std::vector<std::string> names(trace.spec.k);
    for (std::size_t i = 0; i < trace.spec.k; ++i) names[i] = "v" + std::to_string(i + 1);
    return names;
}

std::string state_label(const BasisIndexer& indexer, std::size_t idx) {
    std::string label = "p";
    for (const std::size_t n : indexer.levels_of(idx)) label += "_" + std::to_string(n);
    return label;
}

}  // namespace

void write_trace_csv(std::ostream& out, const EvolutionTrace& trace) {
    const BasisIndexer indexer(trace.spec);
    out << "t,E0";
    for (const auto& name : variable_names(trace)) out << ",exp_" << name;
    for (std::size_t idx = 0; idx < indexer.dim(); ++idx)
        out << "," << state_label(indexer, idx);
    out << "\n";
    for (const auto& row : trace.rows) {
        out << fmt(row.t) << ",";
        if (row.e0) out << fmt(*row.e0);
        for (const double e : row.expectations) out << "," << fmt(e);
        for (const double p : row.probabilities) out << "," << fmt(p);
        out << "\n";
    }
}

void write_spectrum_csv(std::ostream& out, const std::vector<SpectralSample>& flow) {
    out << "t,s,e0,gap\n";
    for (const auto& sample : flow)
        out << fmt(sample.t) << "," << fmt(sample.s) << "," << fmt(sample.e0) << ","
            << fmt(sample.gap) << "\n";
}

std::string verdict_json(const Verdict& v) {
    ordered_json j;
    j["status"] = std::string(status_name(v.status));
    j["equation"] = v.equation;
    j["P"] = v.spec.P;
    j["T"] = v.params.total_time;
    j["dt"] = v.params.dt;
    if (v.dominant_state)
        j["dominant_state"] = *v.dominant_state;
    else
        j["dominant_state"] = nullptr;
    j["dominant_probability"] = v.dominant_probability;
    if (v.solution) {
        ordered_json sol;
        for (std::size_t i = 0; i < v.variables.size(); ++i)
            sol[v.variables[i]] = (*v.solution)[i].convert_to<long long>();
        j["solution"] = std::move(sol);
    } else {
        j["solution"] = nullptr;
    }
    j["e0_final"] = v.e0_final;
    ordered_json exp = ordered_json::object();
    for (std::size_t i = 0; i < v.expectations_final.size(); ++i)
        exp[i < v.variables.size() ? v.variables[i] : "v" + std::to_string(i + 1)] =
            v.expectations_final[i];
    j["expectations_final"] = std::move(exp);
    return j.dump(2) + "\n";
}

namespace {

ordered_json operator_json(const TruncatedOperator& op) {
    ordered_json j;
    j["dim"] = op.dim();
    j["spec"] = {{"k", op.spec.k}, {"P", op.spec.P}};
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < op.dim(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t k = 0; k < op.dim(); ++k) {
            const cplx e = op.matrix(i, k);
            row.push_back({e.real(), e.imag()});
        }
        rows.push_back(std::move(row));
    }
    j["entries"] = std::move(rows);
    return j;
}

}  // namespace

std::string operators_json(const TruncatedOperator& hd, const TruncatedOperator& hi) {
    ordered_json j;
    j["hd"] = operator_json(hd);
    j["hi"] = operator_json(hi);
    return j.dump(2) + "\n";
}

std::string gates_table(const GateReport& report) {
    std::ostringstream out;
    out << "gate      phi            fidelity        pass\n";
    for (const auto& [gc, result] : report) {
        char line[128];
        std::snprintf(line, sizeof line, "%-9s %-14.10g %-15.12f %s\n", gc.name.c_str(),
                      gc.phi, result.fidelity, result.pass ? "yes" : "NO");
        out << line;
    }
    return out.str();
}

std::string gates_json(const GateReport& report) {
    ordered_json arr = ordered_json::array();
    for (const auto& [gc, result] : report) {
        ordered_json j;
        j["gate"] = gc.name;
        j["phi"] = gc.phi;
        j["fidelity"] = result.fidelity;
        j["unitarity_error"] = result.unitarity_error;
        j["pass"] = result.pass;
        arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
}

namespace {

struct Series {
    std::string label;
    std::vector<std::pair<double, double>> points;
};

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                    "#ff7f0e", "#8c564b", "#e377c2", "#7f7f7f"};

std::string svg_line_chart(const std::string& title, const std::string& y_label,
                           const std::vector<Series>& series) {
    constexpr double width = 960, height = 540;
    constexpr double left = 70, right = 940, top = 50, bottom = 490;

    double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
    bool any = false;
    for (const auto& s : series)
        for (const auto& [x, y] : s.points) {
            if (!any) {
                xmin = xmax = x;
                ymin = ymax = y;
                any = true;
            }
            xmin = std::min(xmin, x);
            xmax = std::max(xmax, x);
            ymin = std::min(ymin, y);
            ymax = std::max(ymax, y);
        }
    if (xmax == xmin) xmax = xmin + 1;
    const double pad = (ymax - ymin) == 0 ? 0.5 : 0.05 * (ymax - ymin);
    ymin -= pad;
    ymax += pad;

    const auto px = [&](double x) { return left + (x - xmin) / (xmax - xmin) * (right - left); };
    const auto py = [&](double y) { return bottom - (y - ymin) / (ymax - ymin) * (bottom - top); };
    const auto num = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.4g", v);
        return std::string(buf);
    };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
        << "<text x=\"" << (width / 2) << "\" y=\"28\" text-anchor=\"middle\" "
           "font-family=\"sans-serif\" font-size=\"17\">"
        << title << "</text>\n";

    for (int i = 0; i <= 5; ++i) {
        const double fx = xmin + (xmax - xmin) * i / 5.0;
        const double fy = ymin + (ymax - ymin) * i / 5.0;
        svg << "<line x1=\"" << px(fx) << "\" y1=\"" << top << "\" x2=\"" << px(fx)
            << "\" y2=\"" << bottom << "\" stroke=\"#e0e0e0\"/>\n"
            << "<line x1=\"" << left << "\" y1=\"" << py(fy) << "\" x2=\"" << right
            << "\" y2=\"" << py(fy) << "\" stroke=\"#e0e0e0\"/>\n"
            << "<text x=\"" << px(fx) << "\" y=\"" << (bottom + 20)
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">"
            << num(fx) << "</text>\n"
            << "<text x=\"" << (left - 8) << "\" y=\"" << (py(fy) + 4)
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\">"
            << num(fy) << "</text>\n";
    }
    svg << "<line x1=\"" << left << "\" y1=\"" << bottom << "\" x2=\"" << right
        << "\" y2=\"" << bottom << "\" stroke=\"black\"/>\n"
        << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\""
        << bottom << "\" stroke=\"black\"/>\n"
        << "<text x=\"" << (width / 2) << "\" y=\"" << (height - 12)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">t</text>\n"
        << "<text x=\"18\" y=\"" << ((top + bottom) / 2)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
           "transform=\"rotate(-90 18 "
        << ((top + bottom) / 2) << ")\">" << y_label << "</text>\n";

    for (std::size_t si = 0; si < series.size(); ++si) {
        const char* color = kPalette[si % std::size(kPalette)];
        svg << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
        for (const auto& [x, y] : series[si].points) {
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.2f,%.2f ", px(x), py(y));
            svg << buf;
        }
        svg << "\"/>\n"
            << "<text x=\"" << (right - 10) << "\" y=\"" << (top + 18 * (si + 1))
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\" fill=\""
            << color << "\">" << series[si].label << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace

std::string svg_probability_chart(const EvolutionTrace& trace) {
    const BasisIndexer indexer(trace.spec);
    const std::size_t dim = indexer.dim();
    std::vector<std::size_t> order(dim);
    std::iota(order.begin(), order.end(), 0);
    const auto& final_probs = trace.rows.back().probabilities;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return final_probs[a] > final_probs[b];
    });
    order.resize(std::min<std::size_t>(dim, 8));

    std::vector<Series> series;
    for (const std::size_t idx : order) {
        Series s;
        s.label = state_label(indexer, idx);
        for (const auto& row : trace.rows) s.points.emplace_back(row.t, row.probabilities[idx]);
        series.push_back(std::move(s));
    }
    return svg_line_chart("state probabilities", "P", series);
}

std::string svg_expectation_chart(const EvolutionTrace& trace) {
    const auto names = variable_names(trace);
    std::vector<Series> series;
    for (std::size_t v = 0; v < names.size(); ++v) {
        Series s;
        s.label = "exp_" + names[v];
        for (const auto& row : trace.rows) s.points.emplace_back(row.t, row.expectations[v]);
        series.push_back(std::move(s));
    }
    return svg_line_chart("square-value expectations", "expectation", series);
}

std::string svg_ground_energy_chart(const EvolutionTrace& trace) {
    Series s;
    s.label = "E0";
    for (const auto& row : trace.rows)
        if (row.e0) s.points.emplace_back(row.t, *row.e0);
    return svg_line_chart("ground energy flow", "E0", {s});
}

std::string svg_spectrum_chart(const std::vector<SpectralSample>& flow) {
    Series e0{"e0", {}};
    Series gap{"gap", {}};
    for (const auto& sample : flow) {
        e0.points.emplace_back(sample.t, sample.e0);
        gap.points.emplace_back(sample.t, sample.gap);
    }
    return svg_line_chart("spectral flow", "energy", {e0, gap});
}

}  // namespace isw::io
