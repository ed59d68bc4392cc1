#pragma once

#include "stc/atlas.hpp"
#include "stc/groups.hpp"

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

namespace stc {

/// A matrix drawn from a Sato-Tate group: 4x4 for genus 2, 2x2 for genus 1,
/// stored row-major. comp is the index of the Haar component it came from.
struct SampledMatrix {
    int dim = 4;
    std::array<std::complex<double>, 16> m{};
    int comp = 0;

    std::complex<double> at(int i, int j) const { return m[i * dim + j]; }
    /// Largest |(gamma* gamma - I)_ij|.
    double unitarity_defect() const;
    /// Largest |(gamma^T Omega gamma - Omega)_ij| for the fixed symplectic form.
    double symplectic_defect() const;
    /// Coefficient of x^k in det(I + x gamma) (sum of k x k principal minors).
    std::complex<double> char_coeff(int k) const;
    std::complex<double> det_i_plus_x(double x) const;
};

SampledMatrix mc_sample(STGroup h, std::mt19937_64& rng);

struct McEstimate {
    double estimate = 0.0;
    double stderr_ = 0.0;
    long samples = 0;
    double exact = 0.0;      // reference from the exact engine
    double sigma = 0.0;      // |estimate - exact| / stderr
    bool has_exact = false;
};

/// Sample mean of prod_i det(I + x_i gamma) over n draws. Deterministic for a
/// fixed seed and independent of thread count: work is split into fixed chunks,
/// each with its own seeded stream, and partial sums combine in chunk order.
McEstimate mc_autocorr(STGroup h, const std::vector<double>& xs, long n, uint64_t seed,
                       bool parallel = true);

/// Sample mean of (coefficient k of det(I + x gamma))^m.
McEstimate mc_moment(STGroup h, int k, int m, long n, uint64_t seed, bool parallel = true);

/// Observed component frequencies over n draws (for goodness-of-fit checks).
std::vector<long> mc_component_counts(STGroup h, long n, uint64_t seed);

/// Exact reference value of the autocorrelation at a real point, from the
/// coefficient-table side (available for every group).
double autocorr_exact_value(STGroup h, const std::vector<double>& xs);

}  // namespace stc
