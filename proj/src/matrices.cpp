#include "stc/matrices.hpp"

#include <algorithm>

namespace stc {

CMat4 CMat4::identity() {
    CMat4 out;
    for (int i = 0; i < 4; ++i) out.m[i][i] = CycloNum(1);
    return out;
}

CMat4 operator*(const CMat4& a, const CMat4& b) {
    CMat4 out;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            CycloNum acc;
            for (int k = 0; k < 4; ++k) acc += a.m[i][k] * b.m[k][j];
            out.m[i][j] = acc;
        }
    return out;
}

CMat2 CMat2::identity() {
    CMat2 out;
    out.m[0][0] = CycloNum(1);
    out.m[1][1] = CycloNum(1);
    return out;
}

CMat2 operator*(const CMat2& a, const CMat2& b) {
    CMat2 out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            CycloNum acc;
            for (int k = 0; k < 2; ++k) acc += a.m[i][k] * b.m[k][j];
            out.m[i][j] = acc;
        }
    return out;
}

namespace {
CMat4 from_ints(const int (&v)[4][4]) {
    CMat4 out;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) out.m[i][j] = CycloNum(v[i][j]);
    return out;
}
}  // namespace

CMat4 mat_bigJ() {
    static const int v[4][4] = {{0, 0, 0, 1}, {0, 0, -1, 0}, {0, -1, 0, 0}, {1, 0, 0, 0}};
    return from_ints(v);
}

CMat4 mat_smallj() {
    static const int v[4][4] = {{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}};
    return from_ints(v);
}

CMat4 mat_a() {
    static const int v[4][4] = {{0, 0, 1, 0}, {0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 1}};
    return from_ints(v);
}

CMat4 mat_b() {
    static const int v[4][4] = {{1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}, {0, -1, 0, 0}};
    return from_ints(v);
}

CMat4 mat_c() {
    static const int v[4][4] = {{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}};
    return from_ints(v);
}

CMat4 mat_zeta(int n, int s) {
    // e^{pi i/n} = zeta_48^(24/n) for n | 24.
    int k = 24 / n * s;
    CMat4 out;
    out.m[0][0] = CycloNum::zeta_pow(k);
    out.m[1][1] = CycloNum::zeta_pow(-k);
    out.m[2][2] = CycloNum::zeta_pow(-k);
    out.m[3][3] = CycloNum::zeta_pow(k);
    return out;
}

CMat4 mat_scalar_phase(int n, int s) {
    int k = 24 / n * s;
    CMat4 out;
    out.m[0][0] = CycloNum::zeta_pow(k);
    out.m[1][1] = CycloNum::zeta_pow(k);
    out.m[2][2] = CycloNum::zeta_pow(-k);
    out.m[3][3] = CycloNum::zeta_pow(-k);
    return out;
}

CMat4 mat_quaternion(const CycloNum& a, const CycloNum& b, const CycloNum& c,
                     const CycloNum& d) {
    const CycloNum i = CycloNum::zeta_pow(12);
    CMat4 out;
    out.m[0][0] = a + b * i;
    out.m[0][1] = c + d * i;
    out.m[1][0] = -c + d * i;
    out.m[1][1] = a - b * i;
    // conj A in the lower block.
    out.m[2][2] = a - b * i;
    out.m[2][3] = c - d * i;
    out.m[3][2] = -c - d * i;
    out.m[3][3] = a + b * i;
    return out;
}

CycloNum inv_sqrt2() {
    // sqrt2 = zeta_8 + zeta_8^-1; its inverse is sqrt2/2.
    CycloNum s2 = CycloNum::zeta_pow(6) + CycloNum::zeta_pow(-6);
    return s2 * CycloNum(Rat(1, 2));
}

std::vector<CMat4> quaternion_group_24() {
    std::vector<CMat4> out;
    const CycloNum one(1), zero;
    auto push = [&](CycloNum a, CycloNum b, CycloNum c, CycloNum d) {
        out.push_back(mat_quaternion(a, b, c, d));
    };
    for (int s : {1, -1}) {
        push(CycloNum(s), zero, zero, zero);
        push(zero, CycloNum(s), zero, zero);
        push(zero, zero, CycloNum(s), zero);
        push(zero, zero, zero, CycloNum(s));
    }
    const CycloNum h(Rat(1, 2));
    for (int sa : {1, -1})
        for (int sb : {1, -1})
            for (int sc : {1, -1})
                for (int sd : {1, -1})
                    push(h * CycloNum(sa), h * CycloNum(sb), h * CycloNum(sc), h * CycloNum(sd));
    return out;
}

std::vector<CMat4> quaternion_coset_24() {
    std::vector<CMat4> out;
    const CycloNum r = inv_sqrt2();
    const CycloNum zero;
    auto push = [&](CycloNum a, CycloNum b, CycloNum c, CycloNum d) {
        out.push_back(mat_quaternion(a, b, c, d));
    };
    // Pairs of distinct basis quaternions with all sign choices, scaled by 1/sqrt2.
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            for (int si : {1, -1})
                for (int sj : {1, -1}) {
                    std::array<CycloNum, 4> q{zero, zero, zero, zero};
                    q[i] = r * CycloNum(si);
                    q[j] = r * CycloNum(sj);
                    push(q[0], q[1], q[2], q[3]);
                }
    return out;
}

LaurentPoly coset_det(const CMat4& rep, const std::vector<LaurentPoly>& torus) {
    if (torus.size() != 4) throw VarMismatch("coset_det: torus must have 4 entries");
    const int nv = torus[0].nvars();
    // M = rep * diag(torus); column j of M is rep[.][j] * torus[j].
    std::array<std::array<LaurentPoly, 4>, 4> M;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            M[i][j] = torus[j].scaled(rep.m[i][j]);
    // det(I + x M) by permutation expansion over the 4x4 matrix I + xM.
    LaurentPoly det(nv);
    int perm[4] = {0, 1, 2, 3};
    LaurentPoly x = LaurentPoly::variable(nv, 0);
    do {
        int sgn = 1;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (perm[i] > perm[j]) sgn = -sgn;
        LaurentPoly term = LaurentPoly::constant(nv, CycloNum(sgn));
        bool zero = false;
        for (int i = 0; i < 4 && !zero; ++i) {
            LaurentPoly entry = LaurentPoly::mul(x, M[i][perm[i]]);
            if (i == perm[i]) entry += LaurentPoly::constant(nv, CycloNum(1));
            if (entry.is_zero()) zero = true;
            term = LaurentPoly::mul(term, entry);
        }
        if (!zero) det += term;
    } while (std::next_permutation(perm, perm + 4));
    return det;
}

LaurentPoly coset_det2(const CMat2& rep, const std::vector<LaurentPoly>& torus) {
    if (torus.size() != 2) throw VarMismatch("coset_det2: torus must have 2 entries");
    const int nv = torus[0].nvars();
    std::array<std::array<LaurentPoly, 2>, 2> M;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) M[i][j] = torus[j].scaled(rep.m[i][j]);
    LaurentPoly x = LaurentPoly::variable(nv, 0);
    LaurentPoly a00 = LaurentPoly::mul(x, M[0][0]) + LaurentPoly::constant(nv, CycloNum(1));
    LaurentPoly a11 = LaurentPoly::mul(x, M[1][1]) + LaurentPoly::constant(nv, CycloNum(1));
    LaurentPoly off = LaurentPoly::mul(LaurentPoly::mul(x, M[0][1]), LaurentPoly::mul(x, M[1][0]));
    return LaurentPoly::mul(a00, a11) - off;
}

}  // namespace stc
