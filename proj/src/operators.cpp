#include "isw/operators.hpp"

#include <cmath>
#include <string>

#include "isw/errors.hpp"

namespace isw {

std::size_t TruncationSpec::dim() const {
    if (k < 1) throw DimensionError("truncation needs k >= 1 variables");
    if (P < 1) throw DimensionError("truncation needs P >= 1 levels");
    std::size_t d = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (d > dim_cap / P)
            throw DimensionError("dimension P^k = " + std::to_string(P) + "^" +
                                 std::to_string(k) + " exceeds the cap of " +
                                 std::to_string(dim_cap));
        d *= P;
    }
    return d;
}

std::size_t BasisIndexer::index_of(const std::vector<std::size_t>& levels) const {
    if (levels.size() != spec_.k)
        throw DimensionError("level tuple has " + std::to_string(levels.size()) +
                             " entries, expected " + std::to_string(spec_.k));
    std::size_t idx = 0;
    for (std::size_t i = 0; i < spec_.k; ++i) {
        if (levels[i] < 1 || levels[i] > spec_.P)
            throw DimensionError("level " + std::to_string(levels[i]) +
                                 " outside 1.." + std::to_string(spec_.P));
        idx = idx * spec_.P + (levels[i] - 1);
    }
    return idx;
}

std::vector<std::size_t> BasisIndexer::levels_of(std::size_t index) const {
    if (index >= dim_)
        throw DimensionError("composite index " + std::to_string(index) +
                             " outside 0.." + std::to_string(dim_ - 1));
    std::vector<std::size_t> levels(spec_.k);
    for (std::size_t i = spec_.k; i-- > 0;) {
        levels[i] = index % spec_.P + 1;
        index /= spec_.P;
    }
    return levels;
}

HiForm hi_form_from_name(std::string_view name) {
    if (name == "complement_projector") return HiForm::complement_projector;
    if (name == "ones") return HiForm::ones;
    if (name == "laplacian") return HiForm::laplacian;
    throw Error("unknown interaction Hamiltonian form: " + std::string(name));
}

std::string_view hi_form_name(HiForm form) {
    switch (form) {
        case HiForm::complement_projector: return "complement_projector";
        case HiForm::ones: return "ones";
        case HiForm::laplacian: return "laplacian";
    }
    return "?";
}

TruncatedOperator build_M(std::size_t P) {
    TruncationSpec spec{1, P, std::max<std::size_t>(P, 4096)};
    const std::size_t dim = spec.dim();
    CMatrix m(dim);
    for (std::size_t n = 1; n <= dim; ++n)
        m(n - 1, n - 1) = static_cast<double>(n) * static_cast<double>(n);
    return {spec, std::move(m)};
}

TruncatedOperator build_HD(const poly::Polynomial& p, const TruncationSpec& spec) {
    if (p.variable_count() != spec.k)
        throw DimensionError("polynomial has " + std::to_string(p.variable_count()) +
                             " variables, truncation expects " + std::to_string(spec.k));
    const BasisIndexer indexer(spec);
    const std::size_t dim = indexer.dim();
    CMatrix m(dim);
    std::vector<poly::Int> point(spec.k);
    for (std::size_t idx = 0; idx < dim; ++idx) {
        const auto levels = indexer.levels_of(idx);
        for (std::size_t i = 0; i < spec.k; ++i)
            point[i] = poly::Int(levels[i]) * poly::Int(levels[i]);
        const poly::Int value = p.evaluate(point);
        const double entry = (value * value).convert_to<double>();
        if (!std::isfinite(entry))
            throw NumericError("codifying Hamiltonian entry overflows double at index " +
                               std::to_string(idx));
        m(idx, idx) = entry;
    }
    return {spec, std::move(m)};
}

TruncatedOperator build_HI(const TruncationSpec& spec, HiForm form) {
    const std::size_t dim = spec.dim();
    CMatrix m(dim);
    const double d = static_cast<double>(dim);
    switch (form) {
        case HiForm::complement_projector:
            for (std::size_t i = 0; i < dim; ++i)
                for (std::size_t j = 0; j < dim; ++j)
                    m(i, j) = (i == j ? 1.0 : 0.0) - 1.0 / d;
            break;
        case HiForm::ones:
            for (std::size_t i = 0; i < dim; ++i)
                for (std::size_t j = 0; j < dim; ++j) m(i, j) = 1.0;
            break;
        case HiForm::laplacian:
            for (std::size_t i = 0; i < dim; ++i)
                for (std::size_t j = 0; j < dim; ++j)
                    m(i, j) = (i == j ? d : 0.0) - 1.0;
            break;
    }
    return {spec, std::move(m)};
}

TruncatedOperator build_HA(const TruncatedOperator& hd, const TruncatedOperator& hi,
                           double s) {
    if (hd.dim() != hi.dim())
        throw DimensionError("operator dimensions " + std::to_string(hd.dim()) + " and " +
                             std::to_string(hi.dim()) + " differ");
    if (!(s >= 0.0 && s <= 1.0))
        throw Error("adiabatic parameter s = " + std::to_string(s) + " outside [0,1]");
    const std::size_t dim = hd.dim();
    CMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            m(i, j) = (1.0 - s) * hi.matrix(i, j) + s * hd.matrix(i, j);
    return {hd.spec, std::move(m)};
}

}  // namespace isw
