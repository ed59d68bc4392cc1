#include "stc/coeffs.hpp"

namespace stc {

namespace {

constexpr int kEta3[3][3] = {
    {1, 0, 0},
    {1, -1, 0},
    {0, -1, 0},
};
constexpr int kEta4[4][4] = {
    {1, 1, 0, 0},
    {2, 1, -1, 0},
    {1, -1, -2, 0},
    {0, -1, -1, 0},
};
constexpr int kEta6[6][6] = {
    {1, 2, 2, 1, 0, 0},
    {3, 5, 4, 1, -1, 0},
    {4, 5, 2, -2, -3, 0},
    {3, 2, -2, -5, -4, 0},
    {1, -1, -4, -5, -3, 0},
    {0, -1, -2, -2, -1, 0},
};
// psi_3 is keyed on (z mod 3, b mod 6).
constexpr int kPsi3[3][6] = {
    {1, 0, 0, -1, 0, 0},
    {-1, 1, 0, 1, -1, 0},
    {0, -1, 0, 0, 1, 0},
};
constexpr int kPsi4[4][4] = {
    {1, -1, 0, 0},
    {0, 1, -1, 0},
    {-1, 1, 0, 0},
    {0, -1, 1, 0},
};
constexpr int kPsi6[6][6] = {
    {1, -2, 2, -1, 0, 0},
    {1, -1, 0, 1, -1, 0},
    {0, 1, -2, 2, -1, 0},
    {-1, 2, -2, 1, 0, 0},
    {-1, 1, 0, -1, 1, 0},
    {0, -1, 2, -2, 1, 0},
};
// theta_3 is keyed on (z mod 3, b mod 6).
constexpr int kTheta3[3][6] = {
    {1, 0, 0, 0, 0, 0},
    {0, 0, 0, 1, -1, 0},
    {0, -1, 0, 0, 0, 0},
};
constexpr int kTheta4[4][4] = {
    {1, 0, 0, 0},
    {1, 1, -1, 0},
    {0, 0, -1, 0},
    {0, -1, 0, 0},
};
constexpr int kTheta6[6][6] = {
    {1, 0, 2, 0, 0, 0},
    {2, 2, 2, 1, -1, 0},
    {2, 3, 0, 0, -2, 0},
    {1, 2, -2, -2, -2, 0},
    {0, 0, -2, -3, -1, 0},
    {0, -1, 0, -2, 0, 0},
};
// xi_2 is keyed on (z mod 2, b mod 4).
constexpr int kXi2[2][4] = {
    {1, 1, 0, 0},
    {0, -1, -1, 0},
};

void check_zb(int z, int b, const char* who) {
    if (z < 0 || b < 0) throw BadIndex(std::string(who) + ": need z, b >= 0");
}

Rat half(long n) { return Rat(n, 2); }

Rat theta_explicit(int i, int z, int b) {
    switch (i) {
        case 1:
            if (b % 2 == 1) return half(static_cast<long>(z) * (b + 1) * (z + b + 1));
            return half(static_cast<long>(z + 1) * (b + 1) * (z + b + 2));
        case 2:
            if (b % 2 == 1) return (z % 2 == 1) ? -half(b + 1) : Rat(0);
            return (z % 2 == 1) ? -half(z + 1) : half(b) + half(z) + Rat(1);
        case 3: return Rat(kTheta3[z % 3][b % 6]);
        case 4: return Rat(kTheta4[z % 4][b % 4]);
        case 6: return Rat(kTheta6[z % 6][b % 6]);
        default: throw BadIndex("theta: index must be 1,2,3,4,6");
    }
}

}  // namespace

Rat eta(int i, int z, int b) {
    check_zb(z, b, "eta");
    switch (i) {
        case 1: {
            // (b+1)(z^2 + zb + 2z + b/2 + 1), exact in halves.
            Rat inner = Rat(static_cast<long>(z) * z + static_cast<long>(z) * b + 2L * z + 1) +
                        half(b);
            return Rat(b + 1) * inner;
        }
        case 2:
            if (b % 2 == 1) return -half(b + 1);
            return Rat(b / 2 + (z % 2 == 0 ? 1 : 0));
        case 3: return Rat(kEta3[z % 3][b % 3]);
        case 4: return Rat(kEta4[z % 4][b % 4]);
        case 6: return Rat(kEta6[z % 6][b % 6]);
        default: throw BadIndex("eta: index must be 1,2,3,4,6");
    }
}

Rat psi(int i, int z, int b) {
    check_zb(z, b, "psi");
    int sb = (b % 2 == 0) ? 1 : -1;
    int sz = (z % 2 == 0) ? 1 : -1;
    switch (i) {
        case 1: return Rat(sb) * Rat(b + 1) * (Rat(z + 1) + half(b));
        case 2:
            if (b % 2 == 1) return Rat(sz) * half(b + 1);
            return Rat(sz) * (Rat(z + 1) + half(b));
        case 3: return Rat(kPsi3[z % 3][b % 6]);
        case 4: return Rat(kPsi4[z % 4][b % 4]);
        case 6: return Rat(kPsi6[z % 6][b % 6]);
        default: throw BadIndex("psi: index must be 1,2,3,4,6");
    }
}

Rat theta(int i, int z, int b) {
    check_zb(z, b, "theta");
    Rat direct = theta_explicit(i, z, b);
    Rat averaged = half(1) * (eta(i, z, b) + psi(i, z, b));
    if (direct != averaged)
        throw InternalMismatch("theta_" + std::to_string(i) + "(" + std::to_string(z) + "," +
                               std::to_string(b) + "): table " + direct.str() +
                               " != (eta+psi)/2 " + averaged.str());
    return direct;
}

Rat xi(int i, int z, int b) {
    check_zb(z, b, "xi");
    switch (i) {
        case 1: return Rat(static_cast<long>(z) * (b + 1) + b / 2 + 1);
        case 2: return Rat(kXi2[z % 2][b % 4]);
        default: throw BadIndex("xi: index must be 1 or 2");
    }
}

Rat tilde_coeff(CoeffFamily family, int n, int z, int b) {
    auto f = [&](int i) -> Rat {
        switch (family) {
            case CoeffFamily::Eta: return eta(i, z, b);
            case CoeffFamily::Psi: return psi(i, z, b);
            case CoeffFamily::Theta: return theta(i, z, b);
            default: throw BadIndex("tilde_coeff: xi has no averaged form");
        }
    };
    switch (n) {
        case 1: return f(1);
        case 2: return Rat(1, 2) * f(1) + Rat(1, 2) * f(2);
        case 3: return Rat(1, 3) * f(1) + Rat(2, 3) * f(3);
        case 4: return Rat(1, 4) * f(1) + Rat(1, 4) * f(2) + Rat(1, 2) * f(4);
        case 6:
            return Rat(1, 6) * f(1) + Rat(1, 6) * f(2) + Rat(1, 3) * f(3) + Rat(1, 3) * f(6);
        default: throw BadIndex("tilde_coeff: index must be 1,2,3,4,6");
    }
}

long genus1_m(STGroup h, int j) {
    if (j < 0) throw BadIndex("genus1_m: need j >= 0");
    switch (h) {
        case STGroup::U1: return 1;
        case STGroup::USp2: return j == 0 ? 1 : 0;
        case STGroup::NU1: return j % 2 == 0 ? 1 : 0;
        default: throw UnknownGroup("genus1_m: " + group_id(h) + " is not a rank-1 group");
    }
}

Rat m_coeff(STGroup h, int z, int b) {
    check_zb(z, b, "m_coeff");
    auto e = [&](int i) { return eta(i, z, b); };
    auto p = [&](int i) { return psi(i, z, b); };
    auto t = [&](int i) { return theta(i, z, b); };
    auto x = [&](int i) { return xi(i, z, b); };
    const Rat h2(1, 2), q4(1, 4), r3(1, 3), r6(1, 6), r8(1, 8), r12(1, 12), r24(1, 24);
    const bool beven = b % 2 == 0;
    const bool zeven = z % 2 == 0;
    const int msz = zeven ? 1 : -1;

    switch (h) {
        case STGroup::C1: return e(1);
        case STGroup::C2: return h2 * e(1) + h2 * e(2);
        case STGroup::C3: return r3 * e(1) + Rat(2, 3) * e(3);
        case STGroup::C4: return q4 * e(1) + q4 * e(2) + h2 * e(4);
        case STGroup::C6: return r6 * e(1) + r6 * e(2) + r3 * e(3) + r3 * e(6);
        case STGroup::D2: return q4 * e(1) + Rat(3, 4) * e(2);
        case STGroup::D3: return r6 * e(1) + h2 * e(2) + r3 * e(3);
        case STGroup::D4: return r8 * e(1) + Rat(5, 8) * e(2) + q4 * e(4);
        case STGroup::D6: return r12 * e(1) + Rat(7, 12) * e(2) + r6 * e(3) + r6 * e(6);
        case STGroup::T: return r12 * e(1) + q4 * e(2) + Rat(2, 3) * e(3);
        case STGroup::O: return r24 * e(1) + Rat(3, 8) * e(2) + r3 * e(3) + q4 * e(4);
        case STGroup::JC1: return t(1);
        case STGroup::JC2: return h2 * t(1) + h2 * t(2);
        case STGroup::JC3: return r3 * t(1) + Rat(2, 3) * t(3);
        case STGroup::JC4: return q4 * t(1) + q4 * t(2) + h2 * t(4);
        case STGroup::JC6: return r6 * t(1) + r6 * t(2) + r3 * t(3) + r3 * t(6);
        case STGroup::JD2: return q4 * t(1) + Rat(3, 4) * t(2);
        case STGroup::JD3: return r6 * t(1) + h2 * t(2) + r3 * t(3);
        case STGroup::JD4: return r8 * t(1) + Rat(5, 8) * t(2) + q4 * t(4);
        case STGroup::JD6: return r12 * t(1) + Rat(7, 12) * t(2) + r6 * t(3) + r6 * t(6);
        case STGroup::JT: return r12 * t(1) + q4 * t(2) + Rat(2, 3) * t(3);
        case STGroup::JO: return r24 * t(1) + Rat(3, 8) * t(2) + r3 * t(3) + q4 * t(4);
        case STGroup::C21: return h2 * e(1) + h2 * p(2);
        case STGroup::C41: return q4 * e(1) + q4 * e(2) + h2 * p(4);
        case STGroup::C61: return r6 * e(1) + r3 * e(3) + r6 * p(2) + r3 * p(6);
        case STGroup::D21: return q4 * e(1) + q4 * e(2) + h2 * p(2);
        case STGroup::D41: return r8 * e(1) + Rat(3, 8) * e(2) + q4 * p(2) + q4 * p(4);
        case STGroup::D61:
            return r12 * e(1) + q4 * e(2) + r6 * e(3) + r3 * p(2) + r6 * p(6);
        case STGroup::D32: return r6 * e(1) + r3 * e(3) + h2 * p(2);
        case STGroup::D42: return r8 * e(1) + r8 * e(2) + q4 * e(4) + h2 * p(2);
        case STGroup::D62:
            return r12 * e(1) + r12 * e(2) + r6 * e(3) + r6 * e(6) + h2 * p(2);
        case STGroup::O1: return r24 * e(1) + r8 * e(2) + r3 * e(3) + q4 * p(2) + q4 * p(4);
        case STGroup::E1: return Rat(b + 1);
        case STGroup::E2: return beven ? Rat(b + 1) : Rat(0);
        case STGroup::E3: return Rat(b / 3 + 1 - (b % 3 == 1 ? 1 : 0));
        case STGroup::E4: return beven ? Rat(2 * (b / 4) + 1) : Rat(0);
        case STGroup::E6: return beven ? Rat(2 * (b / 6) + 1) : Rat(0);
        case STGroup::JE1: return h2 * Rat(b + 1) + (beven ? h2 * Rat(msz) : Rat(0));
        case STGroup::JE2: return beven ? Rat(b / 2 + (zeven ? 1 : 0)) : Rat(0);
        case STGroup::JE3:
            return h2 * Rat(b / 3 + 1 - (b % 3 == 1 ? 1 : 0)) + (beven ? h2 * Rat(msz) : Rat(0));
        case STGroup::JE4: return beven ? Rat(b / 4 + (zeven ? 1 : 0)) : Rat(0);
        case STGroup::JE6: return beven ? Rat(b / 6 + (zeven ? 1 : 0)) : Rat(0);
        case STGroup::U2: return Rat(beven ? 1 : 0);
        case STGroup::NU2: return Rat(beven && zeven ? 1 : 0);
        case STGroup::F: return x(1);
        case STGroup::Fa: return h2 * x(1) + h2 * x(2);
        case STGroup::Fc: return h2 * x(1) + h2 * e(2);
        case STGroup::Fab: return h2 * x(1) + h2 * p(2);
        case STGroup::Fac: return q4 * x(1) + q4 * p(2) + h2 * p(4);
        case STGroup::Fa_b: return q4 * x(1) + q4 * p(2) + h2 * x(2);
        case STGroup::Fab_c: return q4 * x(1) + q4 * p(2) + h2 * e(2);
        case STGroup::Fabc:
            return r8 * x(1) + q4 * x(2) + r8 * p(2) + q4 * p(4) + q4 * e(2);
        case STGroup::G13: return Rat(1);
        case STGroup::NG13: return Rat(zeven ? 1 : 0);
        case STGroup::G33: return Rat(z == 0 ? 1 : 0);
        case STGroup::NG33: return Rat(beven && z == 0 ? 1 : 0);
        case STGroup::USp4: return Rat(b == 0 && z == 0 ? 1 : 0);
        case STGroup::U1:
        case STGroup::NU1:
        case STGroup::USp2: return b == 0 ? Rat(genus1_m(h, z)) : Rat(0);
        default: throw UnknownGroup("m_coeff: no coefficient row for " + group_id(h));
    }
}

}  // namespace stc
