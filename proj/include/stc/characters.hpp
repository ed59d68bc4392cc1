#pragma once

#include "stc/laurent.hpp"
#include "stc/partitions.hpp"

#include <map>
#include <memory>

namespace stc {

struct LengthError : std::runtime_error {
    explicit LengthError(const std::string& what) : std::runtime_error(what) {}
};
struct PeelError : std::runtime_error {
    explicit PeelError(const std::string& what) : std::runtime_error(what) {}
};

/// Irreducible character of Sp(2m) attached to lambda (length <= m), as an exact
/// Laurent polynomial in x_1..x_m. Computed from the symplectic bialternant
///   det(x_i^(l_j+m-j+1) - x_i^-(l_j+m-j+1)) / det(x_i^(m-j+1) - x_i^-(m-j+1)).
/// Results are cached; the cache is safe for concurrent use.
std::shared_ptr<const LaurentPoly> sp_char_cached(const Partition& lambda, int m);
LaurentPoly sp_char(const Partition& lambda, int m);

/// Schur polynomial in m variables via the type-A bialternant.
LaurentPoly schur(const Partition& lambda, int m);

/// Coefficient of t1^m1 t2^m2 in sp_char((a,b), 2).
long weight_mult(int a, int b, int m1, int m2);

/// Weyl dimension for rank-2 symplectic highest weight (a, b).
long dim_c2(int a, int b);

/// Restriction of sp_char((a,b),2) to the rank-1 Levi keeping the given Dynkin
/// vertex (1 or 2), decomposed greedily into one-variable characters
/// q^j + q^(j-2) + ... + q^(-j). Returns highest weight -> multiplicity.
/// Throws PeelError if a peel step would need a negative multiplicity.
std::map<int, long> branch_levi(int a, int b, int vertex);

}  // namespace stc
