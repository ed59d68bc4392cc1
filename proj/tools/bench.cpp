// Benchmark: serial reference vs OpenMP kernels for the three hot paths
// (Monte Carlo sampling, sparse polynomial products, batched exact integration).

#include "stc/atlas.hpp"
#include "stc/characters.hpp"
#include "stc/coeffs.hpp"
#include "stc/montecarlo.hpp"

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

using Clock = std::chrono::steady_clock;

namespace {

double secs(Clock::time_point a, Clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

stc::LaurentPoly dense_block(int nvars, int deg) {
    stc::LaurentPoly p(nvars);
    stc::ExpVec e(nvars, 0);
    long v = 1;
    auto rec = [&](auto&& self, int i) -> void {
        if (i == nvars) {
            p.add_term(e, stc::CycloNum(v));
            v = v % 97 + 1;
            return;
        }
        for (int d = -deg; d <= deg; ++d) {
            e[i] = d;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    return p;
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP not available; both columns run the serial kernel\n");
#endif

    // Monte Carlo sampling.
    {
        const long n = 200000;
        auto t0 = Clock::now();
        auto s = stc::mc_autocorr(stc::STGroup::JC3, {0.5}, n, 42, /*parallel=*/false);
        auto t1 = Clock::now();
        auto p = stc::mc_autocorr(stc::STGroup::JC3, {0.5}, n, 42, /*parallel=*/true);
        auto t2 = Clock::now();
        std::printf("mc JC3 n=%ld      serial %.3fs   parallel %.3fs   (identical: %s)\n", n,
                    secs(t0, t1), secs(t1, t2), s.estimate == p.estimate ? "yes" : "NO");
    }

    // Sparse polynomial product.
    {
        stc::LaurentPoly a = dense_block(3, 5);
        stc::LaurentPoly b = dense_block(3, 3);
        auto t0 = Clock::now();
        auto s = stc::LaurentPoly::mul_serial(a, b);
        auto t1 = Clock::now();
        auto p = stc::LaurentPoly::mul_parallel(a, b);
        auto t2 = Clock::now();
        std::printf("mul %zux%zu terms  serial %.3fs   parallel %.3fs   (identical: %s)\n",
                    a.term_count(), b.term_count(), secs(t0, t1), secs(t1, t2),
                    s == p ? "yes" : "NO");
    }

    // Batched exact integration (thread scaling via OpenMP inside the caller).
    {
        auto sweep = [&](bool parallel) {
            const auto& groups = stc::all_groups();
            long sink = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) reduction(+ : sink) if (parallel)
#endif
            for (std::size_t i = 0; i < groups.size(); ++i) {
                stc::STGroup h = groups[i];
                if (h == stc::STGroup::NG33) continue;
                stc::Rat acc(0);
                for (int b = 0; b <= 4; ++b)
                    for (int z = 0; b + 2 * z <= 4; ++z)
                        acc += stc::integrate_char(h, b + 2 * z, b, true);
                sink += acc.to_long();
            }
            if (sink == 0) std::printf("unexpected zero checksum\n");
        };
        sweep(false);  // warm the character cache so both timings integrate only
        auto t0 = Clock::now();
        sweep(false);
        auto t1 = Clock::now();
        sweep(true);
        auto t2 = Clock::now();
        std::printf("integrate sweep   serial %.3fs   parallel %.3fs\n", secs(t0, t1),
                    secs(t1, t2));
    }
    return 0;
}
