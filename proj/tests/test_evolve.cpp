#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "isw/errors.hpp"
#include "isw/evolve.hpp"
#include "isw/operators.hpp"
#include "isw/poly.hpp"
#include "support/oracles.hpp"

using isw::cplx;
using isw::EvolutionParams;
using isw::EvolutionState;
using isw::TruncationSpec;
using isw::TruncatedOperator;
using isw::poly::parse;

namespace {

TruncatedOperator diagonal_operator(const TruncationSpec& spec, const std::vector<double>& d) {
    isw::CMatrix m(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return TruncatedOperator{spec, std::move(m)};
}

double norm_of(const std::vector<cplx>& v) {
    double s = 0.0;
    for (const auto& z : v) s += std::norm(z);
    return std::sqrt(s);
}

}  // namespace

TEST_CASE("step count validates the schedule") {
    EvolutionParams p;
    p.total_time = 2000;
    p.dt = 1.0;
    CHECK(p.step_count() == 2000);

    p.dt = 0.5;
    CHECK(p.step_count() == 4000);

    p.total_time = 3;
    p.dt = 0.5;
    CHECK(p.step_count() == 6);

    p.dt = 2.0;
    CHECK_THROWS_AS(p.step_count(), isw::Error);  // 3 / 2 is not integral
    p.total_time = 0;
    p.dt = 1.0;
    CHECK_THROWS_AS(p.step_count(), isw::Error);
    p.total_time = 10;
    p.dt = -1.0;
    CHECK_THROWS_AS(p.step_count(), isw::Error);
    p.dt = 0.0;
    CHECK_THROWS_AS(p.step_count(), isw::Error);
}

TEST_CASE("default strides aim for about 1000 rows and 500 energy samples") {
    EvolutionParams p;
    p.total_time = 2000;
    p.dt = 1.0;
    CHECK(p.effective_record_stride() == 2);
    CHECK(p.effective_e0_stride() == 4);

    p.total_time = 100;
    CHECK(p.effective_record_stride() == 1);
    CHECK(p.effective_e0_stride() == 1);

    p.e0_stride = 7;
    p.record_stride = 9;
    CHECK(p.effective_e0_stride() == 7);
    CHECK(p.effective_record_stride() == 9);
}

TEST_CASE("the initial state is uniform and normalized") {
    const auto state = isw::uniform_initial_state(6);
    REQUIRE(state.amplitudes.size() == 6);
    for (const auto& z : state.amplitudes) {
        CHECK(z.real() == doctest::Approx(0.4082482904638631).epsilon(1e-15));
        CHECK(z.imag() == 0.0);
    }
    CHECK(norm_of(state.amplitudes) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK_THROWS_AS(isw::uniform_initial_state(0), isw::DimensionError);
}

TEST_CASE("a zero Hamiltonian leaves the state unchanged") {
    const TruncationSpec spec{1, 3, 4096};
    const auto zero = diagonal_operator(spec, {0, 0, 0});
    const EvolutionState state{0.0, {{0.3, 0.1}, {0.5, -0.2}, {0.1, 0.7}}};
    const auto next = isw::cayley_step(state, zero, 1.0);
    CHECK(next.t == 1.0);
    for (std::size_t i = 0; i < 3; ++i)
        CHECK(std::abs(next.amplitudes[i] - state.amplitudes[i]) < 1e-14);
}

TEST_CASE("a diagonal step applies the Cayley phase per level") {
    const TruncationSpec spec{1, 2, 4096};
    const auto h = diagonal_operator(spec, {0, 1});
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const auto next = isw::cayley_step(isw::uniform_initial_state(2), h, 1.0);

    CHECK(std::abs(next.amplitudes[0] - cplx(inv_sqrt2, 0)) < 1e-14);
    const cplx want = (cplx(1, -0.5) / cplx(1, 0.5)) * inv_sqrt2;
    CHECK(std::abs(next.amplitudes[1] - want) < 1e-14);
}

TEST_CASE("an off-diagonal step matches hand-solved values") {
    // H = sigma_x, dt = 1, psi = (1, 0): psi' = (3/5, -4i/5).
    const TruncationSpec spec{1, 2, 4096};
    isw::CMatrix sx(2);
    sx(0, 1) = 1;
    sx(1, 0) = 1;
    const EvolutionState state{0.0, {{1, 0}, {0, 0}}};
    const auto next = isw::cayley_step(state, TruncatedOperator{spec, sx}, 1.0);
    CHECK(std::abs(next.amplitudes[0] - cplx(0.6, 0)) < 1e-14);
    CHECK(std::abs(next.amplitudes[1] - cplx(0, -0.8)) < 1e-14);
}

TEST_CASE("cayley steps are unitary for random Hermitian generators") {
    std::mt19937_64 rng(61);
    const TruncationSpec spec{1, 8, 4096};
    const auto h = TruncatedOperator{spec, oracles::random_hermitian(rng, 8, 3.0)};

    EvolutionState state = isw::uniform_initial_state(8);
    for (int j = 0; j < 200; ++j) {
        state = isw::cayley_step(state, h, 0.7);
        CHECK(norm_of(state.amplitudes) == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("the single-step propagator is a unitary matrix") {
    std::mt19937_64 rng(62);
    const TruncationSpec spec{1, 5, 4096};
    const auto h = TruncatedOperator{spec, oracles::random_hermitian(rng, 5, 2.0)};

    isw::CMatrix u(5);
    for (std::size_t col = 0; col < 5; ++col) {
        EvolutionState basis{0.0, std::vector<cplx>(5)};
        basis.amplitudes[col] = 1.0;
        const auto image = isw::cayley_step(basis, h, 1.3);
        for (std::size_t row = 0; row < 5; ++row) u(row, col) = image.amplitudes[row];
    }
    const auto gram = adjoint(u) * u;
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j)
            CHECK(std::abs(gram(i, j) - (i == j ? cplx(1) : cplx(0))) < 1e-12);
}

TEST_CASE("cayley_step rejects mismatched state lengths") {
    const TruncationSpec spec{1, 3, 4096};
    const auto h = diagonal_operator(spec, {1, 2, 3});
    const EvolutionState bad{0.0, {{1, 0}}};
    CHECK_THROWS_AS(isw::cayley_step(bad, h, 1.0), isw::DimensionError);
}

TEST_CASE("diagonal schedules match the scalar closed form") {
    const TruncationSpec spec{1, 5, 4096};
    const std::vector<double> hd_diag = {225, 144, 49, 0, 81};
    const std::vector<double> hi_diag = {0, 1, 2, 3, 4};
    const auto hd = diagonal_operator(spec, hd_diag);
    const auto hi = diagonal_operator(spec, hi_diag);

    for (const bool midpoint : {false, true}) {
        CAPTURE(midpoint);
        EvolutionParams params;
        params.total_time = 50;
        params.dt = 1.0;
        params.midpoint_s = midpoint;

        const auto trace = isw::run_schedule(hd, hi, params);
        const auto want = oracles::diagonal_cayley_product(
            hd_diag, hi_diag, 50, 1.0, midpoint ? 0.5 : 0.0,
            isw::uniform_initial_state(5).amplitudes);

        const auto& last = trace.rows.back();
        REQUIRE(last.probabilities.size() == 5);
        for (std::size_t i = 0; i < 5; ++i)
            CHECK(last.probabilities[i] == doctest::Approx(std::norm(want[i])).epsilon(1e-12));
    }
}

TEST_CASE("a one-level well picks up only a global phase") {
    EvolutionParams params;
    params.total_time = 20;
    params.dt = 1.0;
    const auto trace = isw::run_evolution(parse("x - 4"), TruncationSpec{1, 1, 4096}, params);
    for (const auto& row : trace.rows) {
        REQUIRE(row.probabilities.size() == 1);
        CHECK(row.probabilities[0] == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(row.expectations[0] == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("trace rows carry normalized probabilities and in-range expectations") {
    EvolutionParams params;
    params.total_time = 150;
    params.dt = 1.0;
    const auto trace = isw::run_evolution(parse("x - 7"), TruncationSpec{1, 6, 4096}, params);

    CHECK(trace.equation == "x - 7");
    CHECK(trace.variables == std::vector<std::string>{"x"});
    CHECK(trace.max_step_norm_drift < 1e-12);
    CHECK(trace.final_norm_error < 1e-10);

    for (const auto& row : trace.rows) {
        double sum = 0.0;
        for (const double p : row.probabilities) {
            CHECK(p >= 0.0);
            sum += p;
        }
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-10));
        REQUIRE(row.expectations.size() == 1);
        CHECK(row.expectations[0] >= 1.0);
        CHECK(row.expectations[0] <= 36.0);
    }
}

TEST_CASE("rows are recorded on the stride plus a final row at T") {
    EvolutionParams params;
    params.total_time = 40;
    params.dt = 1.0;
    params.record_stride = 7;
    params.e0_stride = 14;

    const TruncationSpec spec{1, 3, 4096};
    const auto trace =
        isw::run_schedule(isw::build_HD(parse("x - 4"), spec), isw::build_HI(spec), params);

    // Steps 0, 7, 14, 21, 28, 35 plus the final state at t = 40.
    REQUIRE(trace.rows.size() == 7);
    const std::vector<double> times = {0, 7, 14, 21, 28, 35, 40};
    for (std::size_t i = 0; i < times.size(); ++i) {
        CHECK(trace.rows[i].t == times[i]);
        const bool has_e0 = trace.rows[i].e0.has_value();
        const bool want_e0 = i + 1 == times.size() || std::fmod(times[i], 14.0) == 0.0;
        CHECK(has_e0 == want_e0);
    }
    CHECK(trace.params.record_stride == 7);
    CHECK(trace.params.e0_stride == 14);

    // The schedule starts at the interaction ground state, so E0(0) is 0.
    CHECK(std::abs(*trace.rows[0].e0) < 1e-10);
    // At s = 1 the ground energy is the smallest diagonal entry of H_D.
    CHECK(std::abs(*trace.rows.back().e0) < 1e-8);
}

TEST_CASE("midpoint sampling changes the schedule but keeps unitarity") {
    EvolutionParams params;
    params.total_time = 30;
    params.dt = 1.0;
    params.midpoint_s = true;
    const auto trace = isw::run_evolution(parse("x - 16"), TruncationSpec{1, 4, 4096}, params);
    CHECK(trace.final_norm_error < 1e-12);
    CHECK(trace.rows.back().t == 30.0);
}
