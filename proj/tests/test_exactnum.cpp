#include "stc/cyclotomic.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace stc;

namespace {

CycloNum random_cyclo(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-6, 6), den(1, 4), pick(0, 3);
    CycloNum acc;
    for (int k = 0; k < 16; ++k) {
        if (pick(rng) != 0) continue;  // keep values sparse
        acc += CycloNum(Rat(num(rng), den(rng))) * CycloNum::zeta_pow(k);
    }
    return acc;
}

}  // namespace

TEST_CASE("rational basics") {
    CHECK(Rat(2, 4) == Rat(1, 2));
    CHECK(Rat(-3, -6) == Rat(1, 2));
    CHECK((Rat(1, 3) + Rat(1, 6)).str() == "1/2");
    CHECK(Rat::from_string("-7/21") == Rat(-1, 3));
    CHECK(Rat(5).is_integer());
    CHECK_FALSE(Rat(5, 3).is_integer());
    CHECK_THROWS_AS(Rat(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(Rat(1, 3).to_long(), std::domain_error);
}

TEST_CASE("root powers") {
    CHECK(CycloNum::zeta_pow(48) == CycloNum(1));
    CHECK(CycloNum::zeta_pow(24) == CycloNum(-1));
    // 2 cos(pi/3) = 1.
    CHECK(CycloNum::zeta_pow(8) + CycloNum::zeta_pow(-8) == CycloNum(1));
    // z^16 reduces to z^8 - 1.
    CycloNum z16 = CycloNum::zeta_pow(8) * CycloNum::zeta_pow(8);
    CHECK(z16.coeff(8) == Rat(1));
    CHECK(z16.coeff(0) == Rat(-1));
    for (int k = 1; k < 16; ++k)
        if (k != 8) CHECK(z16.coeff(k) == Rat(0));
    // i^2 = -1.
    CHECK(CycloNum::zeta_pow(12) * CycloNum::zeta_pow(12) == CycloNum(-1));
}

TEST_CASE("rationality detection") {
    CHECK(CycloNum(Rat(3, 2)).to_rat() == Rat(3, 2));
    CHECK_THROWS_AS((CycloNum::zeta_pow(1) + CycloNum::zeta_pow(-1)).to_rat(), NotRational);
    // 2 cos(pi/4) = sqrt2 is irrational.
    CycloNum sqrt2 = CycloNum::zeta_pow(6) + CycloNum::zeta_pow(-6);
    CHECK_FALSE(sqrt2.is_rational());
    CHECK_THROWS_AS(sqrt2.to_rat(), NotRational);
    CHECK(std::abs(sqrt2.embed().real() - std::sqrt(2.0)) < 1e-12);
    // But sqrt2^2 = 2 collapses back to the rational form.
    CHECK((sqrt2 * sqrt2).to_rat() == Rat(2));
}

TEST_CASE("field laws on random values") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        CycloNum a = random_cyclo(rng), b = random_cyclo(rng), c = random_cyclo(rng);
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a * (b * c) == (a * b) * c);
        CHECK(a * b == b * a);
        if (!a.is_zero()) {
            CHECK(a * a.inverse() == CycloNum(1));
            CHECK(a.pow(-3) == a.inverse().pow(3));
        }
    }
}

TEST_CASE("inverse root pairs") {
    for (int k = -48; k <= 48; ++k)
        CHECK(CycloNum::zeta_pow(k) * CycloNum::zeta_pow(-k) == CycloNum(1));
}

TEST_CASE("numerical embedding consistency") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 25; ++trial) {
        CycloNum a = random_cyclo(rng), b = random_cyclo(rng);
        auto lhs = (a * b).embed();
        auto rhs = a.embed() * b.embed();
        CHECK(std::abs(lhs - rhs) < 1e-9);
        lhs = (a + b).embed();
        rhs = a.embed() + b.embed();
        CHECK(std::abs(lhs - rhs) < 1e-9);
    }
    for (int k = 0; k < 48; ++k) {
        auto z = CycloNum::zeta_pow(k).embed();
        CHECK(std::abs(z - std::polar(1.0, M_PI * k / 24.0)) < 1e-9);
    }
}
