#include "stc/atlas.hpp"

#include "stc/characters.hpp"
#include "stc/coeffs.hpp"

#include <algorithm>
#include <mutex>

namespace stc {

int MomentFunctional::nvars() const {
    switch (kind) {
        case MeasureKind::U1: return 1;
        case MeasureKind::SU2: return 1;
        case MeasureKind::U2: return 2;
        case MeasureKind::USp2g: return rank;
    }
    return 0;
}

LaurentPoly MomentFunctional::density() const {
    switch (kind) {
        case MeasureKind::U1:
            return LaurentPoly::constant(1, CycloNum(1));
        case MeasureKind::SU2: {
            LaurentPoly d = LaurentPoly::constant(1, CycloNum(1));
            d.add_term({2}, CycloNum(Rat(-1, 2)));
            d.add_term({-2}, CycloNum(Rat(-1, 2)));
            return d;
        }
        case MeasureKind::U2: {
            LaurentPoly d = LaurentPoly::constant(2, CycloNum(1));
            d.add_term({1, -1}, CycloNum(Rat(-1, 2)));
            d.add_term({-1, 1}, CycloNum(Rat(-1, 2)));
            return d;
        }
        case MeasureKind::USp2g: {
            const int g = rank;
            LaurentPoly d = LaurentPoly::constant(g, CycloNum(1));
            auto root_factor = [&](const ExpVec& alpha) {
                LaurentPoly f = LaurentPoly::constant(g, CycloNum(1));
                f.add_term(alpha, CycloNum(-1));
                d = LaurentPoly::mul(d, f);
            };
            for (int i = 0; i < g; ++i)
                for (int si : {2, -2}) {
                    ExpVec a(g, 0);
                    a[i] = si;
                    root_factor(a);
                }
            for (int i = 0; i < g; ++i)
                for (int j = i + 1; j < g; ++j)
                    for (int si : {1, -1})
                        for (int sj : {1, -1}) {
                            ExpVec a(g, 0);
                            a[i] = si;
                            a[j] = sj;
                            root_factor(a);
                        }
            long order = 1;  // |W| = 2^g g!
            for (int i = 1; i <= g; ++i) order *= 2 * i;
            return d.scaled(CycloNum(Rat(1, order)));
        }
    }
    return LaurentPoly::constant(1, CycloNum(1));
}

namespace {

// Constant term of p against a density: sum_e p[e] * dens[-e].
CycloNum ct_against(const LaurentPoly& p, const LaurentPoly& dens) {
    CycloNum acc;
    ExpVec neg;
    for (const auto& [e, c] : p.terms()) {
        neg = e;
        for (auto& v : neg) v = -v;
        CycloNum d = dens.coeff(neg);
        if (!d.is_zero()) acc += c * d;
    }
    return acc;
}

}  // namespace

Rat haar_moment(const MomentFunctional& f, const std::vector<int>& exps) {
    if (static_cast<int>(exps.size()) != f.nvars())
        throw VarMismatch("haar_moment: exponent count mismatch");
    ExpVec e(exps.begin(), exps.end());
    LaurentPoly mono = LaurentPoly::monomial(f.nvars(), e, CycloNum(1));
    return ct_against(mono, f.density()).to_rat();
}

Eig Eig::inv() const {
    Eig out;
    out.zeta = (48 - zeta % 48) % 48;
    out.pexp = pexp;
    for (auto& v : out.pexp) v = -v;
    return out;
}

int AtlasComponent::nparams() const {
    int n = 0;
    for (const auto& m : measures) n += m.nvars();
    return n;
}

LaurentPoly AtlasComponent::joint_density() const {
    const int np = nparams();
    LaurentPoly dens = LaurentPoly::constant(np, CycloNum(1));
    int off = 0;
    for (const auto& m : measures) {
        std::vector<int> map(m.nvars());
        for (int i = 0; i < m.nvars(); ++i) map[i] = off + i;
        dens = LaurentPoly::mul(dens, m.density().embed_vars(np, map));
        off += m.nvars();
    }
    return dens;
}

namespace {

using MF = MomentFunctional;

Eig eig(int zeta, ExpVec pexp) { return Eig{(zeta % 48 + 48) % 48, std::move(pexp)}; }

// zeta-phase coset of the diagonal circle: eigenvalues {pu, p^-1 u, p^-1 u^-1, p u^-1}
// with p = e^{s pi i/n}.
AtlasComponent c1_comp(const Rat& w, int n, int s, std::optional<CMat4> rep = {}) {
    int k = 24 / n * s;
    AtlasComponent c;
    c.weight = w;
    c.eigs = {eig(k, {1}), eig(-k, {1}), eig(-k, {-1}), eig(k, {-1})};
    c.measures = {MF{MeasureKind::U1, 1}};
    c.params = {"u"};
    c.base = BaseKind::U1Diag;
    if (rep)
        c.rep = rep;
    else if (k != 0)
        c.rep = mat_zeta(n, s);
    c.check_torus = std::vector<Eig>{eig(0, {1}), eig(0, {1}), eig(0, {-1}), eig(0, {-1})};
    return c;
}

// {iu, -iu, iu^-1, -iu^-1}: the j-twisted circle coset.
AtlasComponent smallj_comp(const Rat& w) {
    AtlasComponent c;
    c.weight = w;
    c.eigs = {eig(12, {1}), eig(36, {1}), eig(12, {-1}), eig(36, {-1})};
    c.measures = {MF{MeasureKind::U1, 1}};
    c.params = {"u"};
    c.base = BaseKind::U1Diag;
    c.rep = mat_smallj();
    c.check_torus = std::vector<Eig>{eig(0, {1}), eig(0, {1}), eig(0, {-1}), eig(0, {-1})};
    return c;
}

// J zeta_2n^s coset: constant eigenvalues {p, -p, p^-1, -p^-1}, p = e^{s pi i/n}.
// Carries a spectator circle parameter so the torus slice is expressible.
AtlasComponent bigJzeta_comp(const Rat& w, int n, int s, std::optional<CMat4> rep = {}) {
    int k = 24 / n * s;
    AtlasComponent c;
    c.weight = w;
    c.eigs = {eig(k, {0}), eig(k + 24, {0}), eig(-k, {0}), eig(-k + 24, {0})};
    c.measures = {MF{MeasureKind::U1, 1}};
    c.params = {"u"};
    c.base = BaseKind::U1Diag;
    c.rep = rep ? *rep : mat_bigJ() * mat_zeta(n, s);
    c.check_torus = std::vector<Eig>{eig(0, {1}), eig(0, {1}), eig(0, {-1}), eig(0, {-1})};
    return c;
}

// Constant eigenvalues {i, i, -i, -i} (det (1+x^2)^2 cosets).
AtlasComponent psi2_comp(const Rat& w, const CMat4& rep, BaseKind base,
                         std::vector<Eig> torus) {
    AtlasComponent c;
    c.weight = w;
    c.eigs = {eig(12, {0}), eig(12, {0}), eig(36, {0}), eig(36, {0})};
    c.measures = {MF{MeasureKind::U1, 1}};
    c.params = {"u"};
    c.base = base;
    c.rep = rep;
    c.check_torus = std::move(torus);
    return c;
}

// Constant eigenvalues {z8, z8^3, z8^5, z8^7} (det 1+x^4 cosets).
AtlasComponent psi4_comp(const Rat& w, const CMat4& rep, BaseKind base,
                         std::vector<Eig> torus) {
    AtlasComponent c;
    c.weight = w;
    c.eigs = {eig(6, {0}), eig(18, {0}), eig(30, {0}), eig(42, {0})};
    c.measures = {MF{MeasureKind::U1, 1}};
    c.params = {"u"};
    c.base = base;
    c.rep = rep;
    c.check_torus = std::move(torus);
    return c;
}

std::vector<Eig> u1diag_torus() {
    return {eig(0, {1}), eig(0, {1}), eig(0, {-1}), eig(0, {-1})};
}
std::vector<Eig> su2diag_torus() {
    return {eig(0, {1}), eig(0, {-1}), eig(0, {-1}), eig(0, {1})};
}

// Scalar-phase-times-SU(2) component: {pz, pz^-1, p^-1 z^-1, p^-1 z}.
AtlasComponent su2_comp(const Rat& w, int n, int s) {
    int k = 24 / n * s;
    AtlasComponent c;
    c.weight = w;
    c.eigs = {eig(k, {1}), eig(k, {-1}), eig(-k, {-1}), eig(-k, {1})};
    c.measures = {MF{MeasureKind::SU2, 1}};
    c.params = {"z"};
    c.base = BaseKind::SU2Emb;
    if (k != 0) c.rep = mat_scalar_phase(n, s);
    c.check_torus = su2diag_torus();
    return c;
}

// J-twisted SU(2)-type coset: {z, -z, z^-1, -z^-1} under the SU(2) measure.
AtlasComponent jsu2_comp(const Rat& w, BaseKind base) {
    AtlasComponent c;
    c.weight = w;
    c.eigs = {eig(0, {1}), eig(24, {1}), eig(0, {-1}), eig(24, {-1})};
    c.measures = {MF{MeasureKind::SU2, 1}};
    c.params = {"z"};
    c.base = base;
    c.rep = mat_bigJ();
    c.check_torus = su2diag_torus();
    return c;
}

AtlasComponent u2_comp(const Rat& w) {
    AtlasComponent c;
    c.weight = w;
    c.eigs = {eig(0, {1, 0}), eig(0, {0, 1}), eig(0, {-1, 0}), eig(0, {0, -1})};
    c.measures = {MF{MeasureKind::U2, 2}};
    c.params = {"a", "b"};
    c.base = BaseKind::U2Emb;
    c.check_torus =
        std::vector<Eig>{eig(0, {1, 0}), eig(0, {0, 1}), eig(0, {-1, 0}), eig(0, {0, -1})};
    return c;
}

AtlasComponent f_comp(const Rat& w) {
    AtlasComponent c;
    c.weight = w;
    c.eigs = {eig(0, {1, 0}), eig(0, {0, 1}), eig(0, {-1, 0}), eig(0, {0, -1})};
    c.measures = {MF{MeasureKind::U1, 1}, MF{MeasureKind::U1, 1}};
    c.params = {"u1", "u2"};
    c.base = BaseKind::TwoTorus;
    c.check_torus =
        std::vector<Eig>{eig(0, {1, 0}), eig(0, {0, 1}), eig(0, {-1, 0}), eig(0, {0, -1})};
    return c;
}

// {i, -i, u, u^-1}: two-torus coset where one circle survives.
// slot = 1 puts the surviving parameter on the second torus coordinate.
AtlasComponent xi2_comp(const Rat& w, const CMat4& rep, int slot) {
    AtlasComponent c;
    c.weight = w;
    c.eigs = {eig(12, {0}), eig(36, {0}), eig(0, {1}), eig(0, {-1})};
    c.measures = {MF{MeasureKind::U1, 1}};
    c.params = {"u"};
    c.base = BaseKind::TwoTorus;
    c.rep = rep;
    if (slot == 1)
        c.check_torus = std::vector<Eig>{eig(0, {0}), eig(0, {1}), eig(0, {0}), eig(0, {-1})};
    else
        c.check_torus = std::vector<Eig>{eig(0, {1}), eig(0, {0}), eig(0, {-1}), eig(0, {0})};
    return c;
}

// Two-torus coset collapsing to one circle w with eigenvalues
// {iw, -iw, iw^-1, -iw^-1} (plus form) or {w, -w, w^-1, -w^-1} (minus form).
AtlasComponent eta2w_comp(const Rat& w, const CMat4& rep, bool plus_form) {
    AtlasComponent c;
    c.weight = w;
    if (plus_form)
        c.eigs = {eig(12, {1}), eig(36, {1}), eig(12, {-1}), eig(36, {-1})};
    else
        c.eigs = {eig(0, {1}), eig(24, {1}), eig(0, {-1}), eig(24, {-1})};
    c.measures = {MF{MeasureKind::U1, 1}};
    c.params = {"w"};
    c.base = BaseKind::TwoTorus;
    c.rep = rep;
    if (plus_form)
        c.check_torus = std::vector<Eig>{eig(0, {1}), eig(0, {1}), eig(0, {-1}), eig(0, {-1})};
    else
        c.check_torus = std::vector<Eig>{eig(0, {1}), eig(0, {-1}), eig(0, {-1}), eig(0, {1})};
    return c;
}

AtlasComponent g13_comp(const Rat& w) {
    AtlasComponent c;
    c.weight = w;
    c.eigs = {eig(0, {1, 0}), eig(0, {0, 1}), eig(0, {-1, 0}), eig(0, {0, -1})};
    c.measures = {MF{MeasureKind::U1, 1}, MF{MeasureKind::SU2, 1}};
    c.params = {"u", "z"};
    c.base = BaseKind::U1xSU2;
    c.check_torus =
        std::vector<Eig>{eig(0, {1, 0}), eig(0, {0, 1}), eig(0, {-1, 0}), eig(0, {0, -1})};
    return c;
}

// Twisted coset of the circle-times-SU(2) group: the circle slot freezes to {i, -i}
// and the SU(2) class survives. Reduction derived here, not quoted.
AtlasComponent ng13_twist_comp(const Rat& w) {
    AtlasComponent c;
    c.weight = w;
    c.eigs = {eig(12, {0}), eig(36, {0}), eig(0, {1}), eig(0, {-1})};
    c.measures = {MF{MeasureKind::SU2, 1}};
    c.params = {"z"};
    c.base = BaseKind::U1xSU2;
    c.rep = mat_a();
    c.derived = true;
    c.check_torus = std::vector<Eig>{eig(0, {0}), eig(0, {1}), eig(0, {0}), eig(0, {-1})};
    return c;
}

AtlasComponent g33_comp(const Rat& w) {
    AtlasComponent c;
    c.weight = w;
    c.eigs = {eig(0, {1, 0}), eig(0, {0, 1}), eig(0, {-1, 0}), eig(0, {0, -1})};
    c.measures = {MF{MeasureKind::SU2, 1}, MF{MeasureKind::SU2, 1}};
    c.params = {"z1", "z2"};
    c.base = BaseKind::SU2xSU2;
    c.check_torus =
        std::vector<Eig>{eig(0, {1, 0}), eig(0, {0, 1}), eig(0, {-1, 0}), eig(0, {0, -1})};
    return c;
}

// J-twisted coset of SU(2) x SU(2): the determinant mixes joint invariants of the
// two factors, so no eigenvalue substitution exists. Monte Carlo only.
AtlasComponent ng33_twist_comp(const Rat& w) {
    AtlasComponent c;
    c.weight = w;
    c.base = BaseKind::SU2xSU2;
    c.rep = mat_bigJ();
    return c;
}

AtlasComponent usp4_comp(const Rat& w) {
    AtlasComponent c;
    c.weight = w;
    c.eigs = {eig(0, {1, 0}), eig(0, {0, 1}), eig(0, {-1, 0}), eig(0, {0, -1})};
    c.measures = {MF{MeasureKind::USp2g, 2}};
    c.params = {"t1", "t2"};
    c.base = BaseKind::USp4Weyl;
    c.check_torus =
        std::vector<Eig>{eig(0, {1, 0}), eig(0, {0, 1}), eig(0, {-1, 0}), eig(0, {0, -1})};
    return c;
}

AtlasComponent usp6_comp(const Rat& w) {
    AtlasComponent c;
    c.weight = w;
    c.eigs = {eig(0, {1, 0, 0}), eig(0, {0, 1, 0}), eig(0, {0, 0, 1}),
              eig(0, {-1, 0, 0}), eig(0, {0, -1, 0}), eig(0, {0, 0, -1})};
    c.measures = {MF{MeasureKind::USp2g, 3}};
    c.params = {"t1", "t2", "t3"};
    c.base = BaseKind::USp6Weyl;
    return c;
}

AtlasComponent u1g1_comp(const Rat& w) {
    AtlasComponent c;
    c.weight = w;
    c.eigs = {eig(0, {1}), eig(0, {-1})};
    c.measures = {MF{MeasureKind::U1, 1}};
    c.params = {"u"};
    c.base = BaseKind::G1U1;
    return c;
}

AtlasComponent nu1_twist_comp(const Rat& w) {
    AtlasComponent c;
    c.weight = w;
    c.eigs = {eig(12, {0}), eig(36, {0})};
    c.measures = {MF{MeasureKind::U1, 1}};
    c.params = {"u"};
    c.base = BaseKind::G1U1;
    CMat2 j2;
    j2.m[0][1] = CycloNum(1);
    j2.m[1][0] = CycloNum(-1);
    c.rep2 = j2;
    return c;
}

AtlasComponent su2g1_comp(const Rat& w) {
    AtlasComponent c;
    c.weight = w;
    c.eigs = {eig(0, {1}), eig(0, {-1})};
    c.measures = {MF{MeasureKind::SU2, 1}};
    c.params = {"z"};
    c.base = BaseKind::G1SU2;
    return c;
}

std::vector<AtlasComponent> scaled(std::vector<AtlasComponent> comps, const Rat& f) {
    for (auto& c : comps) c.weight *= f;
    return comps;
}

void append(std::vector<AtlasComponent>& dst, std::vector<AtlasComponent> src) {
    for (auto& c : src) dst.push_back(std::move(c));
}

std::vector<AtlasComponent> cn_comps(int n) {
    const Rat w(1, n == 1 ? 1 : n);
    switch (n) {
        case 1: return {c1_comp(Rat(1), 1, 0)};
        case 2: return {c1_comp(w, 1, 0), c1_comp(w, 2, 1)};
        case 3: return {c1_comp(w, 1, 0), c1_comp(w, 3, 1), c1_comp(w, 3, 2)};
        case 4:
            return {c1_comp(w, 1, 0), c1_comp(w, 4, 1), c1_comp(w, 2, 1), c1_comp(w, 4, 3)};
        case 6:
            return {c1_comp(w, 1, 0), c1_comp(w, 6, 1),  c1_comp(w, 3, 1),
                    c1_comp(w, 2, 1), c1_comp(w, 3, 2), c1_comp(w, 6, 11)};
        default: throw UnknownGroup("cn_comps: bad n");
    }
}

// J-coset components of J(C_n): one constant coset per circle coset of C_n.
std::vector<AtlasComponent> jcn_coset_comps(int n, const Rat& total) {
    std::vector<std::pair<int, int>> reps;
    switch (n) {
        case 1: reps = {{1, 0}}; break;
        case 2: reps = {{1, 0}, {2, 1}}; break;
        case 3: reps = {{1, 0}, {3, 1}, {3, 2}}; break;
        case 4: reps = {{1, 0}, {4, 1}, {2, 1}, {4, 3}}; break;
        case 6: reps = {{1, 0}, {6, 1}, {3, 1}, {2, 1}, {3, 2}, {6, 11}}; break;
        default: throw UnknownGroup("jcn_coset_comps: bad n");
    }
    Rat w = total / Rat(static_cast<long>(reps.size()));
    std::vector<AtlasComponent> out;
    for (auto [nn, ss] : reps) out.push_back(bigJzeta_comp(w, nn, ss));
    return out;
}

std::vector<AtlasComponent> t_comps() {
    return {c1_comp(Rat(1, 12), 1, 0),
            c1_comp(Rat(1, 4), 2, 1),
            c1_comp(Rat(2, 3), 3, 1,
                    mat_quaternion(CycloNum(Rat(1, 2)), CycloNum(Rat(1, 2)),
                                   CycloNum(Rat(1, 2)), CycloNum(Rat(1, 2))))};
}

std::vector<AtlasComponent> o_comps() {
    return {c1_comp(Rat(1, 24), 1, 0),
            c1_comp(Rat(3, 8), 2, 1),
            c1_comp(Rat(1, 3), 3, 1,
                    mat_quaternion(CycloNum(Rat(1, 2)), CycloNum(Rat(1, 2)),
                                   CycloNum(Rat(1, 2)), CycloNum(Rat(1, 2)))),
            c1_comp(Rat(1, 4), 4, 1)};
}

CMat4 quat_halves() {
    return mat_quaternion(CycloNum(Rat(1, 2)), CycloNum(Rat(1, 2)), CycloNum(Rat(1, 2)),
                          CycloNum(Rat(1, 2)));
}

GroupAtlas build(STGroup h) {
    GroupAtlas at;
    at.group = h;
    at.genus = group_genus(h);
    const Rat half(1, 2), quarter(1, 4);
    const CMat4 J = mat_bigJ(), sj = mat_smallj(), A = mat_a(), B = mat_b(), C = mat_c();
    const CMat4 AB = A * B, AC = A * C, ABC = A * B * C;

    switch (h) {
        case STGroup::C1: at.comps = cn_comps(1); break;
        case STGroup::C2: at.comps = cn_comps(2); break;
        case STGroup::C3: at.comps = cn_comps(3); break;
        case STGroup::C4: at.comps = cn_comps(4); break;
        case STGroup::C6: at.comps = cn_comps(6); break;
        case STGroup::D2:
        case STGroup::D3:
        case STGroup::D4:
        case STGroup::D6: {
            int n = h == STGroup::D2 ? 2 : h == STGroup::D3 ? 3 : h == STGroup::D4 ? 4 : 6;
            at.comps = scaled(cn_comps(n), half);
            at.comps.push_back(smallj_comp(half));
            break;
        }
        case STGroup::T: at.comps = t_comps(); break;
        case STGroup::O: at.comps = o_comps(); break;
        case STGroup::JC1:
        case STGroup::JC2:
        case STGroup::JC3:
        case STGroup::JC4:
        case STGroup::JC6: {
            int n = h == STGroup::JC1   ? 1
                    : h == STGroup::JC2 ? 2
                    : h == STGroup::JC3 ? 3
                    : h == STGroup::JC4 ? 4
                                        : 6;
            at.comps = scaled(cn_comps(n), half);
            append(at.comps, jcn_coset_comps(n, half));
            break;
        }
        case STGroup::JD2:
        case STGroup::JD3:
        case STGroup::JD4:
        case STGroup::JD6: {
            int n = h == STGroup::JD2 ? 2 : h == STGroup::JD3 ? 3 : h == STGroup::JD4 ? 4 : 6;
            at.comps = scaled(cn_comps(n), quarter);
            at.comps.push_back(smallj_comp(quarter));
            append(at.comps, jcn_coset_comps(n, quarter));
            at.comps.push_back(psi2_comp(quarter, J * sj, BaseKind::U1Diag, u1diag_torus()));
            break;
        }
        case STGroup::JT:
            at.comps = scaled(t_comps(), half);
            at.comps.push_back(bigJzeta_comp(Rat(1, 24), 1, 0));
            at.comps.push_back(bigJzeta_comp(Rat(1, 8), 2, 1));
            at.comps.push_back(bigJzeta_comp(Rat(1, 3), 3, 1, J * quat_halves()));
            break;
        case STGroup::JO:
            at.comps = scaled(o_comps(), half);
            at.comps.push_back(bigJzeta_comp(Rat(1, 48), 1, 0));
            at.comps.push_back(bigJzeta_comp(Rat(3, 16), 2, 1));
            at.comps.push_back(bigJzeta_comp(Rat(1, 6), 3, 1, J * quat_halves()));
            at.comps.push_back(bigJzeta_comp(Rat(1, 8), 4, 1));
            break;
        case STGroup::C21:
            at.comps = {c1_comp(half, 1, 0), bigJzeta_comp(half, 2, 1)};
            break;
        case STGroup::C41:
            at.comps = scaled(cn_comps(2), half);
            at.comps.push_back(bigJzeta_comp(quarter, 4, 1));
            at.comps.push_back(bigJzeta_comp(quarter, 4, 3));
            break;
        case STGroup::C61:
            at.comps = scaled(cn_comps(3), half);
            at.comps.push_back(bigJzeta_comp(Rat(1, 6), 6, 1));
            at.comps.push_back(bigJzeta_comp(Rat(1, 6), 6, 5));
            at.comps.push_back(bigJzeta_comp(Rat(1, 6), 2, 1));
            break;
        case STGroup::D21:
        case STGroup::D41:
        case STGroup::D61: {
            int n = h == STGroup::D21 ? 2 : h == STGroup::D41 ? 4 : 6;
            GroupAtlas cn1 = build(n == 2   ? STGroup::C21
                                   : n == 4 ? STGroup::C41
                                            : STGroup::C61);
            at.comps = scaled(cn1.comps, half);
            at.comps.push_back(smallj_comp(quarter));
            at.comps.push_back(
                psi2_comp(quarter, sj * J * mat_zeta(n, 1), BaseKind::U1Diag, u1diag_torus()));
            break;
        }
        case STGroup::D32:
        case STGroup::D42:
        case STGroup::D62: {
            int n = h == STGroup::D32 ? 3 : h == STGroup::D42 ? 4 : 6;
            at.comps = scaled(cn_comps(n), half);
            at.comps.push_back(psi2_comp(half, J * sj, BaseKind::U1Diag, u1diag_torus()));
            break;
        }
        case STGroup::O1: {
            at.comps = scaled(t_comps(), half);
            const CycloNum r = inv_sqrt2(), zero;
            // (i + j)/sqrt2 has order 4; (1 + i)/sqrt2 has order 8.
            CMat4 q4 = mat_quaternion(zero, r, r, zero);
            at.comps.push_back(psi2_comp(quarter, J * q4, BaseKind::U1Diag, u1diag_torus()));
            at.comps.push_back(
                psi4_comp(quarter, J * mat_zeta(4, 1), BaseKind::U1Diag, u1diag_torus()));
            break;
        }
        case STGroup::E1:
        case STGroup::E2:
        case STGroup::E3:
        case STGroup::E4:
        case STGroup::E6: {
            int n = h == STGroup::E1   ? 1
                    : h == STGroup::E2 ? 2
                    : h == STGroup::E3 ? 3
                    : h == STGroup::E4 ? 4
                                       : 6;
            Rat w(1, 2 * n);
            for (int s = 0; s < 2 * n; ++s) at.comps.push_back(su2_comp(w, n, s));
            break;
        }
        case STGroup::JE1:
        case STGroup::JE2:
        case STGroup::JE3:
        case STGroup::JE4:
        case STGroup::JE6: {
            int n = h == STGroup::JE1   ? 1
                    : h == STGroup::JE2 ? 2
                    : h == STGroup::JE3 ? 3
                    : h == STGroup::JE4 ? 4
                                        : 6;
            Rat w(1, 4 * n);
            for (int s = 0; s < 2 * n; ++s) at.comps.push_back(su2_comp(w, n, s));
            at.comps.push_back(jsu2_comp(half, BaseKind::SU2Emb));
            break;
        }
        case STGroup::U2: at.comps = {u2_comp(Rat(1))}; break;
        case STGroup::NU2:
            at.comps = {u2_comp(half), jsu2_comp(half, BaseKind::U2Emb)};
            break;
        case STGroup::F: at.comps = {f_comp(Rat(1))}; break;
        case STGroup::Fa:
            at.comps = {f_comp(half), xi2_comp(half, A, 1)};
            break;
        case STGroup::Fc:
            at.comps = {f_comp(half), eta2w_comp(half, C, true)};
            break;
        case STGroup::Fab:
            at.comps = {f_comp(half),
                        psi2_comp(half, AB, BaseKind::TwoTorus,
                                  {eig(0, {1}), eig(0, {0}), eig(0, {-1}), eig(0, {0})})};
            break;
        case STGroup::Fac:
            at.comps = {f_comp(quarter),
                        psi4_comp(quarter, AC, BaseKind::TwoTorus,
                                  {eig(0, {1}), eig(0, {0}), eig(0, {-1}), eig(0, {0})}),
                        psi4_comp(quarter, AC * AC * AC, BaseKind::TwoTorus,
                                  {eig(0, {1}), eig(0, {0}), eig(0, {-1}), eig(0, {0})}),
                        psi2_comp(quarter, AC * AC, BaseKind::TwoTorus,
                                  {eig(0, {1}), eig(0, {0}), eig(0, {-1}), eig(0, {0})})};
            break;
        case STGroup::Fa_b:
            at.comps = {f_comp(quarter), xi2_comp(quarter, A, 1), xi2_comp(quarter, B, 0),
                        psi2_comp(quarter, AB, BaseKind::TwoTorus,
                                  {eig(0, {1}), eig(0, {0}), eig(0, {-1}), eig(0, {0})})};
            break;
        case STGroup::Fab_c:
            at.comps = {f_comp(quarter),
                        psi2_comp(quarter, AB, BaseKind::TwoTorus,
                                  {eig(0, {1}), eig(0, {0}), eig(0, {-1}), eig(0, {0})}),
                        eta2w_comp(quarter, C, true), eta2w_comp(quarter, ABC, false)};
            break;
        case STGroup::Fabc:
            at.comps = {f_comp(Rat(1, 8)),
                        xi2_comp(Rat(1, 8), A, 1),
                        xi2_comp(Rat(1, 8), B, 0),
                        psi2_comp(Rat(1, 8), AB, BaseKind::TwoTorus,
                                  {eig(0, {1}), eig(0, {0}), eig(0, {-1}), eig(0, {0})}),
                        psi4_comp(Rat(1, 8), AC, BaseKind::TwoTorus,
                                  {eig(0, {1}), eig(0, {0}), eig(0, {-1}), eig(0, {0})}),
                        psi4_comp(Rat(1, 8), AC * AC * AC, BaseKind::TwoTorus,
                                  {eig(0, {1}), eig(0, {0}), eig(0, {-1}), eig(0, {0})}),
                        eta2w_comp(Rat(1, 8), C, true),
                        eta2w_comp(Rat(1, 8), ABC, false)};
            break;
        case STGroup::G13: at.comps = {g13_comp(Rat(1))}; break;
        case STGroup::NG13:
            at.comps = {g13_comp(half), ng13_twist_comp(half)};
            at.exactness = Exactness::Partial;
            break;
        case STGroup::G33: at.comps = {g33_comp(Rat(1))}; break;
        case STGroup::NG33:
            at.comps = {g33_comp(half), ng33_twist_comp(half)};
            at.exactness = Exactness::Partial;
            break;
        case STGroup::USp4: at.comps = {usp4_comp(Rat(1))}; break;
        case STGroup::U1: at.comps = {u1g1_comp(Rat(1))}; break;
        case STGroup::NU1:
            at.comps = {u1g1_comp(half), nu1_twist_comp(half)};
            break;
        case STGroup::USp2: at.comps = {su2g1_comp(Rat(1))}; break;
        case STGroup::USp6: at.comps = {usp6_comp(Rat(1))}; break;
        default: throw UnknownGroup("components: unhandled group");
    }
    return at;
}

void require_exact(const GroupAtlas& at, const AtlasComponent& c, bool allow_derived) {
    if (c.eigs.empty())
        throw PartialAtlas(group_id(at.group) +
                           ": twisted coset has no exact class-function reduction");
    if (c.derived && !allow_derived)
        throw PartialAtlas(group_id(at.group) +
                           ": component reduction is derived; pass the derived-coset flag");
}

// Split the eigenvalue multiset into inverse-closed pairs; returns one
// representative per pair. The character's symmetry makes the choice of
// representative and of pairing immaterial; alternate mode consumes the last
// matching partner and hands back the inverted representative, giving a
// genuinely different substitution for the cross-check.
std::vector<Eig> pair_reps(const std::vector<Eig>& eigs, bool alternate = false) {
    std::vector<bool> used(eigs.size(), false);
    std::vector<Eig> reps;
    for (std::size_t i = 0; i < eigs.size(); ++i) {
        if (used[i]) continue;
        used[i] = true;
        Eig want = eigs[i].inv();
        std::size_t match = eigs.size();
        for (std::size_t j = i + 1; j < eigs.size(); ++j) {
            if (used[j]) continue;
            if (eigs[j].zeta == want.zeta && eigs[j].pexp == want.pexp) {
                match = j;
                if (!alternate) break;
            }
        }
        if (match == eigs.size())
            throw std::logic_error("atlas component eigenvalues not closed under inversion");
        used[match] = true;
        reps.push_back(alternate ? eigs[i].inv() : eigs[i]);
    }
    return reps;
}

}  // namespace

const GroupAtlas& components(STGroup h) {
    static std::mutex mu;
    static std::map<STGroup, GroupAtlas> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(h);
    if (it == cache.end()) it = cache.emplace(h, build(h)).first;
    return it->second;
}

namespace {

Rat integrate_char_impl(STGroup h, int a, int b, bool allow_derived, bool alternate) {
    if (a < b || b < 0) throw std::invalid_argument("integrate_char: need a >= b >= 0");
    const GroupAtlas& at = components(h);
    if (at.genus == 3) throw UnknownGroup("integrate_char: no coefficient row for USp(6)");
    if (at.genus == 1 && b > 0) return Rat(0);

    auto chi = (at.genus == 2) ? sp_char_cached({a, b}, 2) : sp_char_cached({a}, 1);
    CycloNum total;
    for (const auto& c : at.comps) {
        require_exact(at, c, allow_derived);
        auto reps = pair_reps(c.eigs, alternate);
        const int np = c.nparams();
        std::vector<LaurentPoly> images;
        images.reserve(reps.size());
        for (const auto& r : reps)
            images.push_back(LaurentPoly::monomial(np, r.pexp, CycloNum::zeta_pow(r.zeta)));
        LaurentPoly sub = chi->substitute(images);
        total += CycloNum(c.weight) * ct_against(sub, c.joint_density());
    }
    return total.to_rat();
}

}  // namespace

Rat integrate_char(STGroup h, int a, int b, bool allow_derived) {
    return integrate_char_impl(h, a, b, allow_derived, false);
}

Rat integrate_char_alt_pairing(STGroup h, int a, int b, bool allow_derived) {
    return integrate_char_impl(h, a, b, allow_derived, true);
}

LaurentPoly autocorr_lhs(STGroup h, int m, bool allow_derived) {
    if (m < 1) throw std::invalid_argument("autocorr_lhs: need m >= 1");
    const GroupAtlas& at = components(h);
    LaurentPoly out(m);
    for (const auto& c : at.comps) {
        require_exact(at, c, allow_derived);
        const int np = c.nparams();
        const int nv = m + np;
        LaurentPoly prod = LaurentPoly::constant(nv, CycloNum(1));
        for (int i = 0; i < m; ++i) {
            for (const auto& e : c.eigs) {
                ExpVec ev(nv, 0);
                ev[i] = 1;
                for (int j = 0; j < np; ++j) ev[m + j] = e.pexp[j];
                LaurentPoly factor = LaurentPoly::constant(nv, CycloNum(1));
                factor.add_term(ev, CycloNum::zeta_pow(e.zeta));
                prod = LaurentPoly::mul(prod, factor);
            }
        }
        std::vector<int> map(np);
        for (int j = 0; j < np; ++j) map[j] = m + j;
        prod = LaurentPoly::mul(prod, c.joint_density().embed_vars(nv, map));
        const CycloNum w{c.weight};
        for (const auto& [e, coeff] : prod.terms()) {
            bool zero_params = true;
            for (int j = m; j < nv; ++j)
                if (e[j] != 0) {
                    zero_params = false;
                    break;
                }
            if (!zero_params) continue;
            ExpVec xe(e.begin(), e.begin() + m);
            out.add_term(xe, coeff * w);
        }
    }
    if (!out.rational_coeffs())
        throw NotRational("autocorr_lhs: irrational coefficient survived integration");
    return out;
}

std::vector<Rat> moments_seq(STGroup h, int k, int m_max) {
    const GroupAtlas& at = components(h);
    if (k < 1 || k > at.genus) throw std::invalid_argument("moments_seq: need 1 <= k <= genus");
    std::vector<CycloNum> vals(m_max + 1);
    for (const auto& c : at.comps) {
        require_exact(at, c, true);
        const int np = c.nparams();
        // e_k of the eigenvalue multiset.
        LaurentPoly ek(np);
        const int n = static_cast<int>(c.eigs.size());
        std::vector<int> idx(k);
        auto rec = [&](auto&& self, int pos, int start) -> void {
            if (pos == k) {
                ExpVec e(np, 0);
                int zeta = 0;
                for (int t = 0; t < k; ++t) {
                    zeta += c.eigs[idx[t]].zeta;
                    for (int j = 0; j < np; ++j) e[j] += c.eigs[idx[t]].pexp[j];
                }
                ek.add_term(e, CycloNum::zeta_pow(zeta));
                return;
            }
            for (int i = start; i <= n - (k - pos); ++i) {
                idx[pos] = i;
                self(self, pos + 1, i + 1);
            }
        };
        rec(rec, 0, 0);
        LaurentPoly dens = c.joint_density();
        LaurentPoly acc = LaurentPoly::constant(np, CycloNum(1));
        const CycloNum w{c.weight};
        for (int m = 0; m <= m_max; ++m) {
            vals[m] += w * ct_against(acc, dens);
            if (m < m_max) acc = LaurentPoly::mul(acc, ek);
        }
    }
    std::vector<Rat> out;
    out.reserve(vals.size());
    for (const auto& v : vals) out.push_back(v.to_rat());
    return out;
}

LaurentPoly autocorr_rhs(STGroup h, int m) {
    if (m < 1) throw std::invalid_argument("autocorr_rhs: need m >= 1");
    const int genus = group_genus(h);
    LaurentPoly out(m);
    if (genus == 2) {
        for (int b = 0; b <= m; ++b) {
            for (int z = 0; 2 * z <= m - b; ++z) {
                Rat coeff = m_coeff(h, z, b);
                if (coeff.is_zero()) continue;
                auto [lam, tilde] = zb_to_lambda(z, b, m);
                out += sp_char(lam, m).scaled(CycloNum(coeff));
            }
        }
    } else if (genus == 1) {
        for (int j = 0; 2 * j <= m; ++j) {
            long coeff = genus1_m(h, j);
            if (coeff == 0) continue;
            Partition lam(m - 2 * j, 1);
            out += sp_char(lam, m).scaled(CycloNum(coeff));
        }
    } else {
        Partition lam(m, 3);
        out = sp_char(lam, m);
    }
    ExpVec shift(m, genus);
    return LaurentPoly::mul(out, LaurentPoly::monomial(m, shift, CycloNum(1)));
}

}  // namespace stc
