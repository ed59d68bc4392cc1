#pragma once

#include "stc/cyclotomic.hpp"
#include "stc/laurent.hpp"

#include <array>
#include <vector>

namespace stc {

/// Dense 4x4 matrix over Q(zeta_48). Big enough for the rank-2 coset
/// representatives; rank-1 uses the 2x2 variant below.
struct CMat4 {
    std::array<std::array<CycloNum, 4>, 4> m{};

    static CMat4 identity();
    friend CMat4 operator*(const CMat4& a, const CMat4& b);
};

struct CMat2 {
    std::array<std::array<CycloNum, 2>, 2> m{};
    static CMat2 identity();
    friend CMat2 operator*(const CMat2& a, const CMat2& b);
};

/// The fixed generators, written against the symplectic form ((0, I2), (-I2, 0)).
CMat4 mat_bigJ();
CMat4 mat_smallj();
CMat4 mat_a();
CMat4 mat_b();
CMat4 mat_c();
/// zeta_2n^s embedded as diag(e^{s pi i/n}, e^{-s pi i/n}, e^{-s pi i/n}, e^{s pi i/n}).
CMat4 mat_zeta(int n, int s);
/// Scalar phase diag(e^{s pi i/n}, e^{s pi i/n}, e^{-s pi i/n}, e^{-s pi i/n}).
CMat4 mat_scalar_phase(int n, int s);
/// Unit quaternion a + b i + c j + d k embedded via ((a+bi, c+di), (-c+di, a-bi))
/// and A |-> diag(A, conj A).
CMat4 mat_quaternion(const CycloNum& a, const CycloNum& b, const CycloNum& c,
                     const CycloNum& d);
/// 1/sqrt(2) in Q(zeta_48).
CycloNum inv_sqrt2();

/// The 24 unit quaternions {+-1, +-i, +-j, +-k, (+-1 +-i +-j +-k)/2}.
std::vector<CMat4> quaternion_group_24();
/// The 24 quaternions {(+-1 +-i)/sqrt2, ...} completing the binary octahedral set.
std::vector<CMat4> quaternion_coset_24();

/// det(I + x * rep * diag(torus)) as a Laurent polynomial. Variable 0 is x and the
/// torus entries are monomials in variables 1..k of the same space.
LaurentPoly coset_det(const CMat4& rep, const std::vector<LaurentPoly>& torus);
LaurentPoly coset_det2(const CMat2& rep, const std::vector<LaurentPoly>& torus);

}  // namespace stc
