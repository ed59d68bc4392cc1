#pragma once

#include "stc/groups.hpp"
#include "stc/rational.hpp"

#include <stdexcept>

namespace stc {

struct BadIndex : std::runtime_error {
    explicit BadIndex(const std::string& what) : std::runtime_error(what) {}
};
struct InternalMismatch : std::runtime_error {
    explicit InternalMismatch(const std::string& what) : std::runtime_error(what) {}
};

enum class CoeffFamily { Eta, Psi, Theta, Xi };

/// Closed-form coefficient families on (z, b), z, b >= 0.
/// Valid indices: eta/psi/theta in {1,2,3,4,6}; xi in {1,2}.
Rat eta(int i, int z, int b);
Rat psi(int i, int z, int b);
/// Computed from the explicit formula/table and cross-checked against
/// (eta + psi)/2; throws InternalMismatch if the two routes disagree.
Rat theta(int i, int z, int b);
Rat xi(int i, int z, int b);

/// The averaged families: family~_n as the stated rational combination
/// (e.g. eta~_4 = 1/4 eta_1 + 1/4 eta_2 + 1/2 eta_4). Xi has no averaged form.
Rat tilde_coeff(CoeffFamily family, int n, int z, int b);

/// Multiplicity of the trivial representation of H in the restriction of the
/// rank-2 symplectic character indexed by (b+2z, b). For the rank-1 groups this
/// is delta(b = 0) times the rank-1 multiplicity at index z.
Rat m_coeff(STGroup h, int z, int b);

/// Rank-1 multiplicities m_(2j): 1 for U(1), delta(j=0) for USp(2),
/// delta(j even) for N(U(1)).
long genus1_m(STGroup h, int j);

}  // namespace stc
