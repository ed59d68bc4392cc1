#include "stc/laurent.hpp"

#include "stc/json_io.hpp"

#include <doctest.h>

#include <random>

using namespace stc;

namespace {

LaurentPoly x_pm(int nvars, int i) {
    LaurentPoly p(nvars);
    ExpVec e(nvars, 0);
    e[i] = 1;
    p.add_term(e, CycloNum(1));
    e[i] = -1;
    p.add_term(e, CycloNum(1));
    return p;
}

LaurentPoly random_poly(std::mt19937_64& rng, int nvars, int maxterms) {
    std::uniform_int_distribution<int> exp(-4, 4), coeff(-5, 5),
        nterms(1, maxterms);
    LaurentPoly p(nvars);
    int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        ExpVec e(nvars);
        for (auto& v : e) v = exp(rng);
        p.add_term(e, CycloNum(coeff(rng)));
    }
    return p;
}

}  // namespace

TEST_CASE("product examples") {
    LaurentPoly x(1);
    x.add_term({1}, CycloNum(1));
    LaurentPoly xinv(1);
    xinv.add_term({-1}, CycloNum(1));
    LaurentPoly sum = x + xinv;   // x + x^-1
    LaurentPoly diff = x - xinv;  // x - x^-1

    LaurentPoly p = LaurentPoly::mul(sum, diff);
    CHECK(p.term_count() == 2);
    CHECK(p.coeff({2}) == CycloNum(1));
    CHECK(p.coeff({-2}) == CycloNum(-1));

    LaurentPoly sq = LaurentPoly::mul(sum, sum);
    CHECK(sq.coeff({0}) == CycloNum(2));
    CHECK(sq.coeff({2}) == CycloNum(1));
    CHECK(sq.coeff({-2}) == CycloNum(1));
}

TEST_CASE("exact division") {
    LaurentPoly sum = x_pm(1, 0);
    LaurentPoly diff(1);
    diff.add_term({1}, CycloNum(1));
    diff.add_term({-1}, CycloNum(-1));

    // (x^2 - x^-2) / (x - x^-1) = x + x^-1
    LaurentPoly num(1);
    num.add_term({2}, CycloNum(1));
    num.add_term({-2}, CycloNum(-1));
    CHECK(num.exact_div(diff) == sum);

    // (x^3 - x^-3) / (x - x^-1) = x^2 + 1 + x^-2 (one-variable long division)
    LaurentPoly num3(1);
    num3.add_term({3}, CycloNum(1));
    num3.add_term({-3}, CycloNum(-1));
    LaurentPoly want(1);
    want.add_term({2}, CycloNum(1));
    want.add_term({0}, CycloNum(1));
    want.add_term({-2}, CycloNum(1));
    CHECK(num3.exact_div(diff) == want);

    // (x + x^-1) / (x + 1) leaves a remainder.
    LaurentPoly xp1(1);
    xp1.add_term({1}, CycloNum(1));
    xp1.add_term({0}, CycloNum(1));
    CHECK_THROWS_AS(sum.exact_div(xp1), NotDivisible);
}

TEST_CASE("ring laws and round trips on random input") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        int nv = 1 + static_cast<int>(rng() % 3);
        LaurentPoly a = random_poly(rng, nv, 8);
        LaurentPoly b = random_poly(rng, nv, 8);
        LaurentPoly c = random_poly(rng, nv, 5);
        CHECK(LaurentPoly::mul(a, b) == LaurentPoly::mul(b, a));
        CHECK(LaurentPoly::mul(a + b, c) == LaurentPoly::mul(a, c) + LaurentPoly::mul(b, c));
        if (!b.is_zero()) CHECK(LaurentPoly::mul(a, b).exact_div(b) == a);
        CHECK(LaurentPoly::mul(a, LaurentPoly::constant(nv, CycloNum(1))) == a);
    }
}

TEST_CASE("substitution is a ring homomorphism") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        LaurentPoly a = random_poly(rng, 2, 6);
        LaurentPoly b = random_poly(rng, 2, 6);
        // x -> i*u, y -> u^-2 w
        std::vector<LaurentPoly> images;
        images.push_back(LaurentPoly::monomial(2, {1, 0}, CycloNum::zeta_pow(12)));
        images.push_back(LaurentPoly::monomial(2, {-2, 1}, CycloNum(1)));
        CHECK(LaurentPoly::mul(a, b).substitute(images) ==
              LaurentPoly::mul(a.substitute(images), b.substitute(images)));
    }
}

TEST_CASE("substitution examples") {
    // x -> i*u in (x + x^-1) gives i*u - i*u^-1.
    LaurentPoly p = x_pm(1, 0);
    std::vector<LaurentPoly> im{LaurentPoly::monomial(1, {1}, CycloNum::zeta_pow(12))};
    LaurentPoly q = p.substitute(im);
    CHECK(q.coeff({1}) == CycloNum::zeta_pow(12));
    CHECK(q.coeff({-1}) == CycloNum::zeta_pow(-12));
    CHECK(CycloNum::zeta_pow(-12) == -CycloNum::zeta_pow(12));

    // t1 -> z, t2 -> -z in t1 t2 gives -z^2.
    LaurentPoly t1t2(2);
    t1t2.add_term({1, 1}, CycloNum(1));
    std::vector<LaurentPoly> im2{LaurentPoly::monomial(1, {1}, CycloNum(1)),
                                 LaurentPoly::monomial(1, {1}, CycloNum(-1))};
    LaurentPoly r = t1t2.substitute(im2);
    CHECK(r.term_count() == 1);
    CHECK(r.coeff({2}) == CycloNum(-1));

    // Constants pass through.
    LaurentPoly five = LaurentPoly::constant(1, CycloNum(5));
    CHECK(five.substitute(im).coeff({0}) == CycloNum(5));

    // Non-monomial images are rejected.
    CHECK_THROWS_AS(p.substitute({x_pm(1, 0)}), NonUnitImage);
}

TEST_CASE("coefficient access") {
    LaurentPoly sq = LaurentPoly::mul(x_pm(1, 0), x_pm(1, 0));
    CHECK(sq.coeff({0}).to_rat() == Rat(2));
    LaurentPoly p(2);
    p.add_term({1, 1}, CycloNum(1));
    p.add_term({0, 0}, CycloNum(3));
    CHECK(p.coeff({1, 1}).to_rat() == Rat(1));
    CHECK_THROWS_AS(p.coeff({1}), VarMismatch);
    LaurentPoly q(1);
    q.add_term({2}, CycloNum(1));
    q.add_term({0}, CycloNum(1));
    LaurentPoly qq(1);
    qq.add_term({-2}, CycloNum(1));
    qq.add_term({0}, CycloNum(1));
    CHECK(LaurentPoly::mul(q, qq).coeff({2}).to_rat() == Rat(1));
}

TEST_CASE("variable mismatch is rejected") {
    LaurentPoly a(2), b(3);
    CHECK_THROWS_AS(a + b, VarMismatch);
    CHECK_THROWS_AS(LaurentPoly::mul(a, b), VarMismatch);
}

TEST_CASE("json round trip") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 10; ++trial) {
        LaurentPoly p = random_poly(rng, 3, 10);
        // Mix in a cyclotomic coefficient.
        p.add_term({0, 1, -2}, CycloNum::zeta_pow(5) + CycloNum(Rat(1, 3)));
        auto j = poly_to_json(p, {"x1", "x2", "x3"});
        LaurentPoly q = poly_from_json(nlohmann::json::parse(j.dump()));
        CHECK(p == q);
    }
}
