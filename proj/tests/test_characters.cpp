#include "stc/characters.hpp"

#include "stc/crystal.hpp"

#include <doctest.h>

using namespace stc;

namespace {

LaurentPoly apply_perm(const LaurentPoly& p, const std::vector<int>& perm) {
    LaurentPoly out(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        ExpVec pe(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) pe[perm[i]] = e[i];
        out.add_term(pe, c);
    }
    return out;
}

LaurentPoly invert_var(const LaurentPoly& p, int var) {
    LaurentPoly out(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        ExpVec pe = e;
        pe[var] = -pe[var];
        out.add_term(pe, c);
    }
    return out;
}

long eval_dim(const LaurentPoly& p) {
    // Value at all variables 1: total coefficient mass = dimension.
    Rat acc(0);
    for (const auto& [e, c] : p.terms()) acc += c.to_rat();
    return acc.to_long();
}

}  // namespace

TEST_CASE("rank-1 characters") {
    LaurentPoly chi = sp_char({1}, 1);
    CHECK(chi.term_count() == 2);
    CHECK(chi.coeff({1}).to_rat() == Rat(1));
    CHECK(chi.coeff({-1}).to_rat() == Rat(1));
    CHECK(sp_char({}, 3) == LaurentPoly::constant(3, CycloNum(1)));
    // Dimension of the one-row characters: m - k + 1 at rank 1.
    for (int k = 0; k <= 6; ++k) CHECK(eval_dim(sp_char({k}, 1)) == k + 1);
}

TEST_CASE("rank-2 character matches the tableau model") {
    LaurentPoly chi = sp_char({1, 1}, 2);
    CHECK(chi.term_count() == 5);
    CHECK(chi == kn_character(1, 1));
    for (int a = 0; a <= 5; ++a)
        for (int b = 0; b <= a; ++b) CHECK(sp_char({a, b}, 2) == kn_character(a, b));
}

TEST_CASE("schur polynomials") {
    LaurentPoly s1 = schur({1}, 2);
    CHECK(s1.coeff({1, 0}).to_rat() == Rat(1));
    CHECK(s1.coeff({0, 1}).to_rat() == Rat(1));
    CHECK(s1.term_count() == 2);
    LaurentPoly s2 = schur({2}, 2);
    CHECK(s2.term_count() == 3);
    CHECK(s2.coeff({1, 1}).to_rat() == Rat(1));
    LaurentPoly s22 = schur({2, 2}, 2);
    CHECK(s22.term_count() == 1);
    CHECK(s22.coeff({2, 2}).to_rat() == Rat(1));
}

TEST_CASE("weight multiplicities") {
    CHECK(weight_mult(2, 2, 0, 0) == 2);
    CHECK(weight_mult(1, 1, 1, 1) == 1);
    CHECK(weight_mult(2, 0, 0, 0) == 2);
}

TEST_CASE("rank-2 dimensions") {
    CHECK(dim_c2(1, 0) == 4);
    CHECK(dim_c2(1, 1) == 5);
    CHECK(dim_c2(2, 0) == 10);
    CHECK(dim_c2(2, 1) == 16);
    CHECK(dim_c2(3, 1) == 35);
    CHECK(dim_c2(3, 2) == 40);
    for (int a = 0; a <= 5; ++a)
        for (int b = 0; b <= a; ++b) CHECK(eval_dim(sp_char({a, b}, 2)) == dim_c2(a, b));
}

TEST_CASE("symmetry under inversions and permutations") {
    for (int m = 1; m <= 3; ++m) {
        for (const Partition& lam : rect_subpartitions(4, m)) {
            LaurentPoly chi = sp_char(lam, m);
            for (int v = 0; v < m; ++v) CHECK(invert_var(chi, v) == chi);
            if (m >= 2) {
                std::vector<int> swap01(m);
                for (int i = 0; i < m; ++i) swap01[i] = i;
                std::swap(swap01[0], swap01[1]);
                CHECK(apply_perm(chi, swap01) == chi);
            }
            if (m == 3) {
                std::vector<int> cyc = {1, 2, 0};
                CHECK(apply_perm(chi, cyc) == chi);
            }
        }
    }
    // Full rank-4 sweep over the 4x4 box.
    for (const Partition& lam : rect_subpartitions(4, 4)) {
        LaurentPoly chi = sp_char(lam, 4);
        for (int v = 0; v < 4; ++v) CHECK(invert_var(chi, v) == chi);
        std::vector<int> perm = {3, 0, 1, 2};
        CHECK(apply_perm(chi, perm) == chi);
        std::vector<int> swap01 = {1, 0, 2, 3};
        CHECK(apply_perm(chi, swap01) == chi);
    }
}

TEST_CASE("length guard") {
    CHECK_THROWS_AS(sp_char({1, 1, 1}, 2), LengthError);
    CHECK_THROWS_AS(schur({1, 1, 1}, 2), LengthError);
}

TEST_CASE("levi restriction peeling") {
    // Keep vertex 1: trivial multiplicity (b+1) when a+b is even.
    CHECK(branch_levi(0, 0, 1).at(0) == 1);
    CHECK(branch_levi(4, 2, 1).at(0) == 3);
    CHECK(branch_levi(1, 0, 1).count(0) == 0);
    // Keep vertex 2: trivial multiplicity a-b+1.
    CHECK(branch_levi(3, 1, 2).at(0) == 3);
    CHECK(branch_levi(2, 2, 2).at(0) == 1);
    // Total dimension is conserved by the decomposition.
    for (int a = 0; a <= 5; ++a)
        for (int b = 0; b <= a; ++b)
            for (int vertex : {1, 2}) {
                long total = 0;
                for (auto [j, mult] : branch_levi(a, b, vertex)) total += mult * (j + 1);
                CHECK(total == dim_c2(a, b));
            }
}
