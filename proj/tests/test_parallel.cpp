#include "stc/laurent.hpp"
#include "stc/montecarlo.hpp"
#include "stc/verify.hpp"

#include <doctest.h>

#include <random>

using namespace stc;

// The OpenMP kernels must reproduce the serial reference exactly: fixed work
// chunks with per-chunk streams and ordered merges, so thread count never
// changes a result.

TEST_CASE("parallel product equals serial product") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> exp(-5, 5), coeff(-9, 9);
    LaurentPoly a(3), b(3);
    for (int t = 0; t < 400; ++t) {
        ExpVec e{exp(rng), exp(rng), exp(rng)};
        a.add_term(e, CycloNum(coeff(rng)));
        ExpVec f{exp(rng), exp(rng), exp(rng)};
        b.add_term(f, CycloNum(coeff(rng)));
    }
    CHECK(LaurentPoly::mul_parallel(a, b) == LaurentPoly::mul_serial(a, b));
}

TEST_CASE("monte carlo estimates are reproducible across modes") {
    for (STGroup h : {STGroup::JC3, STGroup::E2, STGroup::USp4}) {
        auto s = mc_autocorr(h, {0.5}, 20000, 123, /*parallel=*/false);
        auto p = mc_autocorr(h, {0.5}, 20000, 123, /*parallel=*/true);
        CHECK(s.estimate == p.estimate);  // bitwise, not approximate
        CHECK(s.stderr_ == p.stderr_);
        auto p2 = mc_autocorr(h, {0.5}, 20000, 123, /*parallel=*/true);
        CHECK(p.estimate == p2.estimate);
    }
}

TEST_CASE("verification runner is order-deterministic") {
    VerifyOptions serial, parallel;
    serial.id = "thm-5.18";
    serial.m = 2;
    serial.parallel = false;
    parallel.id = "thm-5.18";
    parallel.m = 2;
    parallel.parallel = true;
    auto a = verify_run(serial);
    auto b = verify_run(parallel);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].id == b[i].id);
        CHECK(a[i].params == b[i].params);
        CHECK(a[i].pass == b[i].pass);
    }
}
