#include "stc/characters.hpp"

#include <algorithm>
#include <mutex>

namespace stc {

namespace {

// Expand det(M) where M(i,j) = x_i^exps[j] - x_i^(-exps[j]) (signed = true)
// or M(i,j) = x_i^exps[j] (signed = false), by permutation expansion.
LaurentPoly alternant(const std::vector<int>& exps, bool signed_powers) {
    const int m = static_cast<int>(exps.size());
    LaurentPoly out(m);
    std::vector<int> perm(m);
    for (int i = 0; i < m; ++i) perm[i] = i;
    ExpVec e(m);
    do {
        int sgn = 1;
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                if (perm[i] > perm[j]) sgn = -sgn;
        if (!signed_powers) {
            for (int i = 0; i < m; ++i) e[i] = exps[perm[i]];
            out.add_term(e, CycloNum(sgn));
        } else {
            // Each row entry contributes x^a - x^-a; expand over sign choices.
            for (int mask = 0; mask < (1 << m); ++mask) {
                int c = sgn;
                for (int i = 0; i < m; ++i) {
                    if (mask & (1 << i)) {
                        e[i] = -exps[perm[i]];
                        c = -c;
                    } else {
                        e[i] = exps[perm[i]];
                    }
                }
                out.add_term(e, CycloNum(c));
            }
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

LaurentPoly sp_char_impl(const Partition& lambda, int m) {
    Partition lam = trim(lambda);
    if (static_cast<int>(lam.size()) > m)
        throw LengthError("sp_char: partition longer than rank");
    lam.resize(m, 0);
    std::vector<int> num_exps(m);
    for (int j = 0; j < m; ++j) num_exps[j] = lam[j] + m - j;
    LaurentPoly q = alternant(num_exps, true);
    // Divide out the denominator alternant in its product form
    //   prod_i (x_i - x_i^-1) prod_{i<j} (x_i + x_i^-1 - x_j - x_j^-1),
    // one small factor at a time.
    for (int i = 0; i < m; ++i) {
        LaurentPoly f(m);
        ExpVec e(m, 0);
        e[i] = 1;
        f.add_term(e, CycloNum(1));
        e[i] = -1;
        f.add_term(e, CycloNum(-1));
        q = q.exact_div(f);
    }
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            LaurentPoly f(m);
            ExpVec e(m, 0);
            e[i] = 1;
            f.add_term(e, CycloNum(1));
            e[i] = -1;
            f.add_term(e, CycloNum(1));
            e[i] = 0;
            e[j] = 1;
            f.add_term(e, CycloNum(-1));
            e[j] = -1;
            f.add_term(e, CycloNum(-1));
            q = q.exact_div(f);
        }
    return q;
}

}  // namespace

std::shared_ptr<const LaurentPoly> sp_char_cached(const Partition& lambda, int m) {
    static std::mutex mu;
    static std::map<std::pair<Partition, int>, std::shared_ptr<const LaurentPoly>> cache;
    Partition lam = trim(lambda);
    std::pair<Partition, int> key{lam, m};
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    auto value = std::make_shared<const LaurentPoly>(sp_char_impl(lam, m));
    std::lock_guard<std::mutex> lock(mu);
    auto [it, inserted] = cache.emplace(key, value);
    return it->second;
}

LaurentPoly sp_char(const Partition& lambda, int m) { return *sp_char_cached(lambda, m); }

LaurentPoly schur(const Partition& lambda, int m) {
    Partition lam = trim(lambda);
    if (static_cast<int>(lam.size()) > m)
        throw LengthError("schur: partition longer than variable count");
    lam.resize(m, 0);
    std::vector<int> num_exps(m);
    for (int j = 0; j < m; ++j) num_exps[j] = lam[j] + m - 1 - j;
    LaurentPoly q = alternant(num_exps, false);
    // Vandermonde factors x_i - x_j.
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            LaurentPoly f(m);
            ExpVec e(m, 0);
            e[i] = 1;
            f.add_term(e, CycloNum(1));
            e[i] = 0;
            e[j] = 1;
            f.add_term(e, CycloNum(-1));
            q = q.exact_div(f);
        }
    return q;
}

long weight_mult(int a, int b, int m1, int m2) {
    if (a < b || b < 0) throw LengthError("weight_mult: need a >= b >= 0");
    auto chi = sp_char_cached({a, b}, 2);
    CycloNum c = chi->coeff({m1, m2});
    return c.to_rat().to_long();
}

long dim_c2(int a, int b) {
    if (a < b || b < 0) throw LengthError("dim_c2: need a >= b >= 0");
    long p = static_cast<long>(a - b + 1) * (b + 1) * (a + 2) * (a + b + 3);
    return p / 6;
}

std::map<int, long> branch_levi(int a, int b, int vertex) {
    if (a < b || b < 0) throw LengthError("branch_levi: need a >= b >= 0");
    auto chi = sp_char_cached({a, b}, 2);
    // Keep vertex 1: restrict along t1 -> q, t2 -> q^-1 (weight pairing with h1 - h2).
    // Keep vertex 2: restrict along t1 -> 1, t2 -> q (weight pairing with h2).
    std::map<int, long> gen;
    for (const auto& [e, c] : chi->terms()) {
        int w = (vertex == 1) ? e[0] - e[1] : e[1];
        gen[w] += c.to_rat().to_long();
    }
    std::map<int, long> out;
    while (!gen.empty()) {
        auto top = std::prev(gen.end());
        int j = top->first;
        long mult = top->second;
        if (j < 0 || mult < 0) throw PeelError("branch_levi: negative remainder");
        if (mult == 0) {
            gen.erase(top);
            continue;
        }
        out[j] += mult;
        for (int w = j; w >= -j; w -= 2) {
            gen[w] -= mult;
            if (gen[w] == 0) gen.erase(w);
        }
    }
    return out;
}

}  // namespace stc
