#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "isw/operators.hpp"
#include "isw/poly.hpp"
#include "isw/spectra.hpp"
#include "support/oracles.hpp"

using isw::TruncationSpec;
using isw::poly::parse;

TEST_CASE("smallest_eigenvalue handles diagonal spectra exactly") {
    const TruncationSpec p6{1, 6, 4096};

    const auto sat = isw::smallest_eigenvalue(isw::build_HD(parse("x - 16"), p6));
    CHECK(std::abs(sat.e0) < 1e-10);
    CHECK(sat.gap == doctest::Approx(49.0));

    const auto unsat = isw::smallest_eigenvalue(isw::build_HD(parse("x - 7"), p6));
    CHECK(unsat.e0 == doctest::Approx(4.0));
    CHECK(unsat.gap == doctest::Approx(5.0));
}

TEST_CASE("the interaction projector has ground energy 0 with unit gap") {
    const auto g = isw::smallest_eigenvalue(isw::build_HI(TruncationSpec{2, 2, 4096}));
    CHECK(std::abs(g.e0) < 1e-12);
    CHECK(g.gap == doctest::Approx(1.0));
}

TEST_CASE("single-level spectra have no gap") {
    isw::CMatrix one(1);
    one(0, 0) = 2.5;
    const auto g = isw::smallest_eigenvalue(one);
    CHECK(g.e0 == doctest::Approx(2.5));
    CHECK(g.gap == 0.0);
}

TEST_CASE("dense and iterative paths agree with the Jacobi oracle") {
    std::mt19937_64 rng(51);
    // 80 and 96 take the inverse-iteration branch, the rest the dense one.
    for (const std::size_t n : {3, 16, 64, 80, 96}) {
        CAPTURE(n);
        const auto h = oracles::random_hermitian(rng, n, 5.0);
        const auto got = isw::smallest_eigenvalue(h);
        const auto all = oracles::hermitian_eigenvalues_embedding(h);
        CHECK(got.e0 == doctest::Approx(all[0]).epsilon(1e-8));
        CHECK(got.gap == doctest::Approx(all[1] - all[0]).epsilon(1e-6));
    }
}

TEST_CASE("spectral flow spans both schedule endpoints") {
    const TruncationSpec spec{1, 6, 4096};
    const auto p = parse("x - 16");
    isw::EvolutionParams params;
    params.total_time = 200;
    params.dt = 1.0;

    const auto flow = isw::spectral_flow(p, spec, params);
    REQUIRE(flow.size() >= 2);

    CHECK(flow.front().t == 0.0);
    CHECK(flow.front().s == 0.0);
    CHECK(std::abs(flow.front().e0) < 1e-10);
    CHECK(flow.front().gap == doctest::Approx(1.0));

    CHECK(flow.back().t == 200.0);
    CHECK(flow.back().s == 1.0);
    CHECK(std::abs(flow.back().e0) < 1e-8);  // min over (n^2 - 16)^2 is 0 at n = 4
    CHECK(flow.back().gap == doctest::Approx(49.0).epsilon(1e-6));

    for (std::size_t i = 1; i < flow.size(); ++i) {
        CHECK(flow[i].t > flow[i - 1].t);
        CHECK(flow[i].s == doctest::Approx(flow[i].t / 200.0));
    }
}

TEST_CASE("ground energy moves continuously along the schedule") {
    const TruncationSpec spec{1, 5, 4096};
    const auto p = parse("x - 7");
    isw::EvolutionParams params;
    params.total_time = 100;
    params.dt = 1.0;
    params.e0_stride = 1;

    const auto hd = isw::build_HD(p, spec);
    const auto hi = isw::build_HI(spec);
    const double bound = (hd.matrix - hi.matrix).inf_norm();

    const auto flow = isw::spectral_flow(p, spec, params);
    REQUIRE(flow.size() == 101);
    for (std::size_t i = 1; i < flow.size(); ++i) {
        const double ds = flow[i].s - flow[i - 1].s;
        // Weyl: eigenvalues of Hermitian pencils are 1-Lipschitz in the
        // operator norm, and the infinity norm dominates it.
        CHECK(std::abs(flow[i].e0 - flow[i - 1].e0) <= bound * ds + 1e-9);
    }
    const double final_e0 = flow.back().e0;
    CHECK(final_e0 == doctest::Approx(4.0));
}
