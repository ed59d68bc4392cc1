#include "stc/montecarlo.hpp"

#include "stc/coeffs.hpp"

#include <doctest.h>

#include <cmath>

using namespace stc;

namespace {

// Upper 0.999 quantiles of chi^2 with df degrees of freedom.
double chi2_999(int df) {
    static const double q[] = {0,      10.828, 13.816, 16.266, 18.467, 20.515, 22.458,
                               24.322, 26.124, 27.877, 29.588, 31.264, 32.909, 34.528,
                               36.123, 37.697, 39.252, 40.790, 42.312, 43.820, 45.315,
                               46.797, 48.268, 49.728, 51.179, 52.620};
    REQUIRE(df >= 1);
    REQUIRE(df <= 25);
    return q[df];
}

}  // namespace

TEST_CASE("sampled matrices are unitary and symplectic") {
    for (STGroup h : all_groups()) {
        std::mt19937_64 rng(2024);
        for (int i = 0; i < 200; ++i) {
            SampledMatrix g = mc_sample(h, rng);
            CHECK(g.unitarity_defect() < 1e-10);
            CHECK(g.symplectic_defect() < 1e-10);
        }
    }
}

TEST_CASE("component frequencies match the declared weights") {
    const long n = 100000;
    for (STGroup h : all_groups()) {
        const GroupAtlas& at = components(h);
        if (at.comps.size() < 2) continue;
        auto counts = mc_component_counts(h, n, 7);
        double stat = 0.0;
        for (std::size_t i = 0; i < counts.size(); ++i) {
            double expect = at.comps[i].weight.to_double() * n;
            double d = counts[i] - expect;
            stat += d * d / expect;
        }
        CHECK_MESSAGE(stat < chi2_999(static_cast<int>(counts.size()) - 1), group_id(h));
    }
}

TEST_CASE("estimates agree with the exact engine at one point") {
    // A fast cross-section; the full sweep runs in the acceptance suite.
    const long n = 20000;
    for (STGroup h : {STGroup::C1, STGroup::JC2, STGroup::T, STGroup::E3, STGroup::JE4,
                      STGroup::U2, STGroup::Fa_b, STGroup::G13, STGroup::USp4, STGroup::NU1,
                      STGroup::USp2, STGroup::NG13, STGroup::NG33}) {
        auto est = mc_autocorr(h, {0.5}, n, 42);
        CHECK_MESSAGE(est.sigma <= 4.0, group_id(h));
    }
}

TEST_CASE("moment estimates") {
    auto c2 = mc_moment(STGroup::USp2, 1, 4, 50000, 11);
    CHECK(std::abs(c2.estimate - 2.0) <= 4 * c2.stderr_);
    auto a2 = mc_moment(STGroup::USp4, 2, 3, 50000, 11);
    CHECK(std::abs(a2.estimate - 4.0) <= 4 * a2.stderr_);
    auto u1 = mc_moment(STGroup::U1, 1, 2, 50000, 11);
    CHECK(u1.has_exact);
    CHECK(u1.sigma <= 4.0);
}

TEST_CASE("twisted coset average for the product group") {
    // The inaccessible coset: empirically 2 m(NG33) - m(G33) should reproduce
    // (-1)^b delta(a=b); test the autocorrelation at several points instead,
    // against the coefficient-table side.
    for (double x : {0.3, 0.5, 0.8}) {
        auto est = mc_autocorr(STGroup::NG33, {x}, 100000, 42);
        CHECK(est.sigma <= 4.0);
        auto est13 = mc_autocorr(STGroup::NG13, {x}, 100000, 42);
        CHECK(est13.sigma <= 4.0);
    }
}
