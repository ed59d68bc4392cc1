#include "stc/montecarlo.hpp"

#include "stc/coeffs.hpp"

#include <cmath>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace stc {

namespace {

using Cx = std::complex<double>;
constexpr double kPi = 3.14159265358979323846;

struct Mat {
    int dim = 4;
    std::array<Cx, 16> m{};
    Cx& at(int i, int j) { return m[i * dim + j]; }
    Cx at(int i, int j) const { return m[i * dim + j]; }
};

Mat identity(int dim) {
    Mat out;
    out.dim = dim;
    for (int i = 0; i < dim; ++i) out.at(i, i) = 1.0;
    return out;
}

Mat mul(const Mat& a, const Mat& b) {
    Mat out;
    out.dim = a.dim;
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j) {
            Cx acc = 0.0;
            for (int k = 0; k < a.dim; ++k) acc += a.at(i, k) * b.at(k, j);
            out.at(i, j) = acc;
        }
    return out;
}

Mat embed_cmat(const CMat4& c) {
    Mat out;
    out.dim = 4;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) out.at(i, j) = c.m[i][j].embed();
    return out;
}

Mat embed_cmat2(const CMat2& c) {
    Mat out;
    out.dim = 2;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) out.at(i, j) = c.m[i][j].embed();
    return out;
}

double uniform01(std::mt19937_64& rng) {
    return std::generate_canonical<double, 53>(rng);
}

Cx phase(std::mt19937_64& rng) {
    double t = 2.0 * kPi * uniform01(rng);
    return Cx(std::cos(t), std::sin(t));
}

// Unit quaternion (uniform on S^3) as an SU(2) matrix.
std::array<Cx, 4> su2_random(std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    double a, b, c, d, n;
    do {
        a = g(rng);
        b = g(rng);
        c = g(rng);
        d = g(rng);
        n = std::sqrt(a * a + b * b + c * c + d * d);
    } while (n < 1e-12);
    a /= n;
    b /= n;
    c /= n;
    d /= n;
    return {Cx(a, b), Cx(c, d), Cx(-c, d), Cx(a, -b)};
}

Mat embed_su2(const std::array<Cx, 4>& A) {
    // diag(A, conj A) on coordinates (1,2 | 3,4).
    Mat out;
    out.dim = 4;
    out.at(0, 0) = A[0];
    out.at(0, 1) = A[1];
    out.at(1, 0) = A[2];
    out.at(1, 1) = A[3];
    out.at(2, 2) = std::conj(A[0]);
    out.at(2, 3) = std::conj(A[1]);
    out.at(3, 2) = std::conj(A[2]);
    out.at(3, 3) = std::conj(A[3]);
    return out;
}

Mat base_sample(BaseKind base, std::mt19937_64& rng) {
    switch (base) {
        case BaseKind::U1Diag: {
            Cx u = phase(rng);
            Mat out = identity(4);
            out.at(0, 0) = u;
            out.at(1, 1) = u;
            out.at(2, 2) = std::conj(u);
            out.at(3, 3) = std::conj(u);
            return out;
        }
        case BaseKind::TwoTorus: {
            Cx u1 = phase(rng), u2 = phase(rng);
            Mat out = identity(4);
            out.at(0, 0) = u1;
            out.at(1, 1) = u2;
            out.at(2, 2) = std::conj(u1);
            out.at(3, 3) = std::conj(u2);
            return out;
        }
        case BaseKind::SU2Emb: return embed_su2(su2_random(rng));
        case BaseKind::U2Emb: {
            auto A = su2_random(rng);
            Cx t = phase(rng);
            for (auto& e : A) e *= t;
            return embed_su2(A);
        }
        case BaseKind::U1xSU2: {
            Cx u = phase(rng);
            auto A = su2_random(rng);
            Mat out;
            out.dim = 4;
            out.at(0, 0) = u;
            out.at(2, 2) = std::conj(u);
            out.at(1, 1) = A[0];
            out.at(1, 3) = A[1];
            out.at(3, 1) = A[2];
            out.at(3, 3) = A[3];
            return out;
        }
        case BaseKind::SU2xSU2: {
            auto A = su2_random(rng);
            auto B = su2_random(rng);
            Mat out;
            out.dim = 4;
            out.at(0, 0) = A[0];
            out.at(0, 2) = A[1];
            out.at(2, 0) = A[2];
            out.at(2, 2) = A[3];
            out.at(1, 1) = B[0];
            out.at(1, 3) = B[1];
            out.at(3, 1) = B[2];
            out.at(3, 3) = B[3];
            return out;
        }
        case BaseKind::USp4Weyl: {
            // Eigenvalue angles with density prop. to (cos t1 - cos t2)^2 sin^2 t1 sin^2 t2;
            // rejection against the uniform box with envelope 1.
            double t1, t2;
            for (;;) {
                t1 = kPi * uniform01(rng);
                t2 = kPi * uniform01(rng);
                double c = std::cos(t1) - std::cos(t2);
                double f = c * c * std::sin(t1) * std::sin(t1) * std::sin(t2) * std::sin(t2);
                if (uniform01(rng) < f) break;
            }
            Mat out;
            out.dim = 4;
            out.at(0, 0) = Cx(std::cos(t1), std::sin(t1));
            out.at(1, 1) = Cx(std::cos(t2), std::sin(t2));
            out.at(2, 2) = std::conj(out.at(0, 0));
            out.at(3, 3) = std::conj(out.at(1, 1));
            return out;
        }
        case BaseKind::G1U1: {
            Cx u = phase(rng);
            Mat out;
            out.dim = 2;
            out.at(0, 0) = u;
            out.at(1, 1) = std::conj(u);
            return out;
        }
        case BaseKind::G1SU2: {
            auto A = su2_random(rng);
            Mat out;
            out.dim = 2;
            out.at(0, 0) = A[0];
            out.at(0, 1) = A[1];
            out.at(1, 0) = A[2];
            out.at(1, 1) = A[3];
            return out;
        }
        case BaseKind::USp6Weyl:
            throw std::invalid_argument("mc: rank-3 sampling not supported");
    }
    throw std::invalid_argument("mc: unknown base kind");
}

int pick_component(const GroupAtlas& at, std::mt19937_64& rng) {
    if (at.comps.size() == 1) return 0;
    double r = uniform01(rng);
    double acc = 0.0;
    for (std::size_t i = 0; i < at.comps.size(); ++i) {
        acc += at.comps[i].weight.to_double();
        if (r < acc) return static_cast<int>(i);
    }
    return static_cast<int>(at.comps.size()) - 1;
}

}  // namespace

double SampledMatrix::unitarity_defect() const {
    double worst = 0.0;
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            Cx acc = 0.0;
            for (int k = 0; k < dim; ++k) acc += std::conj(at(k, i)) * at(k, j);
            if (i == j) acc -= 1.0;
            worst = std::max(worst, std::abs(acc));
        }
    return worst;
}

double SampledMatrix::symplectic_defect() const {
    // Omega = ((0, I), (-I, 0)) in the fixed coordinates, any even dimension.
    const int g = dim / 2;
    auto omega = [&](int i, int j) -> double {
        if (j == i + g) return 1.0;
        if (i == j + g) return -1.0;
        return 0.0;
    };
    double worst = 0.0;
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            Cx acc = 0.0;
            for (int k = 0; k < dim; ++k)
                for (int l = 0; l < dim; ++l) acc += at(k, i) * omega(k, l) * at(l, j);
            acc -= omega(i, j);
            worst = std::max(worst, std::abs(acc));
        }
    return worst;
}

std::complex<double> SampledMatrix::char_coeff(int k) const {
    if (k == 0) return 1.0;
    // Sum of k x k principal minors.
    std::vector<int> idx(k);
    Cx total = 0.0;
    auto minor_det = [&](const std::vector<int>& rows) {
        // Laplace for k <= 4 via permutation expansion.
        std::vector<int> perm(rows.size());
        for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
        Cx acc = 0.0;
        do {
            int sgn = 1;
            for (std::size_t i = 0; i < perm.size(); ++i)
                for (std::size_t j = i + 1; j < perm.size(); ++j)
                    if (perm[i] > perm[j]) sgn = -sgn;
            Cx term = static_cast<double>(sgn);
            for (std::size_t i = 0; i < perm.size(); ++i) term *= at(rows[i], rows[perm[i]]);
            acc += term;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return acc;
    };
    auto rec = [&](auto&& self, int pos, int start) -> void {
        if (pos == k) {
            total += minor_det(idx);
            return;
        }
        for (int i = start; i <= dim - (k - pos); ++i) {
            idx[pos] = i;
            self(self, pos + 1, i + 1);
        }
    };
    rec(rec, 0, 0);
    return total;
}

std::complex<double> SampledMatrix::det_i_plus_x(double x) const {
    Cx acc = 0.0;
    double xp = 1.0;
    for (int k = 0; k <= dim; ++k) {
        acc += char_coeff(k) * xp;
        xp *= x;
    }
    return acc;
}

SampledMatrix mc_sample(STGroup h, std::mt19937_64& rng) {
    const GroupAtlas& at = components(h);
    int ci = pick_component(at, rng);
    const AtlasComponent& c = at.comps[ci];
    Mat g = base_sample(c.base, rng);
    if (g.dim == 4 && c.rep) g = mul(embed_cmat(*c.rep), g);
    if (g.dim == 2 && c.rep2) g = mul(embed_cmat2(*c.rep2), g);
    SampledMatrix out;
    out.dim = g.dim;
    out.m = g.m;
    out.comp = ci;
    return out;
}

namespace {

constexpr int kChunks = 64;

template <typename F>
McEstimate mc_run(STGroup h, long n, uint64_t seed, bool parallel, F&& value_of) {
    std::array<double, kChunks> sums{}, sumsqs{};
    std::array<long, kChunks> counts{};

    auto run_chunk = [&](int chunk) {
        long lo = n * chunk / kChunks, hi = n * (chunk + 1) / kChunks;
        std::seed_seq seq{seed, static_cast<uint64_t>(chunk)};
        std::mt19937_64 rng(seq);
        double s = 0.0, comp = 0.0, sq = 0.0, comp2 = 0.0;
        for (long i = lo; i < hi; ++i) {
            SampledMatrix g = mc_sample(h, rng);
            double v = value_of(g);
            double y = v - comp;  // Kahan
            double t = s + y;
            comp = (t - s) - y;
            s = t;
            double y2 = v * v - comp2;
            double t2 = sq + y2;
            comp2 = (t2 - sq) - y2;
            sq = t2;
        }
        sums[chunk] = s;
        sumsqs[chunk] = sq;
        counts[chunk] = hi - lo;
    };

    if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
        for (int chunk = 0; chunk < kChunks; ++chunk) run_chunk(chunk);
    } else {
        for (int chunk = 0; chunk < kChunks; ++chunk) run_chunk(chunk);
    }

    double total = 0.0, totalsq = 0.0;
    long cnt = 0;
    for (int chunk = 0; chunk < kChunks; ++chunk) {
        total += sums[chunk];
        totalsq += sumsqs[chunk];
        cnt += counts[chunk];
    }
    McEstimate out;
    out.samples = cnt;
    out.estimate = total / static_cast<double>(cnt);
    double var = totalsq / static_cast<double>(cnt) - out.estimate * out.estimate;
    if (var < 0) var = 0;
    out.stderr_ = std::sqrt(var / static_cast<double>(cnt));
    return out;
}

}  // namespace

double autocorr_exact_value(STGroup h, const std::vector<double>& xs) {
    LaurentPoly rhs = autocorr_rhs(h, static_cast<int>(xs.size()));
    std::vector<std::complex<double>> pts(xs.begin(), xs.end());
    return rhs.eval(pts).real();
}

McEstimate mc_autocorr(STGroup h, const std::vector<double>& xs, long n, uint64_t seed,
                       bool parallel) {
    McEstimate out = mc_run(h, n, seed, parallel, [&](const SampledMatrix& g) {
        double v = 1.0;
        for (double x : xs) v *= g.det_i_plus_x(x).real();
        return v;
    });
    out.exact = autocorr_exact_value(h, xs);
    out.has_exact = true;
    out.sigma = out.stderr_ > 0 ? std::abs(out.estimate - out.exact) / out.stderr_ : 0.0;
    return out;
}

McEstimate mc_moment(STGroup h, int k, int m, long n, uint64_t seed, bool parallel) {
    McEstimate out = mc_run(h, n, seed, parallel, [&](const SampledMatrix& g) {
        double c = g.char_coeff(k).real();
        double v = 1.0;
        for (int i = 0; i < m; ++i) v *= c;
        return v;
    });
    const GroupAtlas& at = components(h);
    if (at.exactness == Exactness::Full || at.group == STGroup::NG13) {
        out.exact = moments_seq(h, k, m)[m].to_double();
        out.has_exact = true;
        out.sigma = out.stderr_ > 0 ? std::abs(out.estimate - out.exact) / out.stderr_ : 0.0;
    }
    return out;
}

std::vector<long> mc_component_counts(STGroup h, long n, uint64_t seed) {
    const GroupAtlas& at = components(h);
    std::vector<long> counts(at.comps.size(), 0);
    std::seed_seq seq{seed, static_cast<uint64_t>(0xC0FFEE)};
    std::mt19937_64 rng(seq);
    for (long i = 0; i < n; ++i) ++counts[pick_component(at, rng)];
    return counts;
}

}  // namespace stc
