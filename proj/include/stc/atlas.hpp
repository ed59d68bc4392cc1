#pragma once

#include "stc/groups.hpp"
#include "stc/laurent.hpp"
#include "stc/matrices.hpp"
#include "stc/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace stc {

struct PartialAtlas : std::runtime_error {
    explicit PartialAtlas(const std::string& what) : std::runtime_error(what) {}
};

enum class MeasureKind { U1, SU2, U2, USp2g };

/// An exact moment functional on Laurent monomials in its own variables:
///   U1      u^k            -> delta(k = 0)
///   SU2     z^k            -> delta(k, 0) - 1/2 delta(|k|, 2)
///   U2      a^p b^q        -> constant term against 1 - (a b^-1 + a^-1 b)/2
///   USp2g   t-monomial     -> constant term against (1/|W|) prod_roots (1 - t^alpha)
/// Each is "constant term of the argument times density()".
struct MomentFunctional {
    MeasureKind kind = MeasureKind::U1;
    int rank = 1;  // only used by USp2g

    int nvars() const;
    /// The Weyl density in this functional's own variable space.
    LaurentPoly density() const;
};

Rat haar_moment(const MomentFunctional& f, const std::vector<int>& exps);

/// One eigenvalue: zeta_48^zeta times a monomial in the component parameters.
struct Eig {
    int zeta = 0;
    ExpVec pexp;
    Eig inv() const;
};

/// How the component's continuous part is sampled (used by the Monte Carlo side).
enum class BaseKind {
    U1Diag,    // diag(u, u, u^-1, u^-1)
    TwoTorus,  // diag(u1, u2, u1^-1, u2^-1)
    SU2Emb,    // diag(A, conj A), A in SU(2)
    U2Emb,     // diag(B, conj B), B in U(2)
    U1xSU2,    // u on coordinates (1,3), SU(2) on (2,4)
    SU2xSU2,   // SU(2) on (1,3) and on (2,4)
    USp4Weyl,  // eigenvalue angles with the rank-2 Weyl density
    G1U1,      // genus 1: diag(u, u^-1)
    G1SU2,     // genus 1: A in SU(2)
    USp6Weyl,  // rank-3 Weyl density (moments only)
};

/// One Haar component of a disconnected group: a coset representative times a
/// connected piece, reduced to an eigenvalue substitution plus moment functionals.
struct AtlasComponent {
    Rat weight;
    std::vector<Eig> eigs;                   // 2g entries; empty if no exact reduction
    std::vector<MomentFunctional> measures;  // concatenated parameter blocks
    std::vector<std::string> params;
    bool derived = false;  // reduction worked out here rather than quoted

    BaseKind base = BaseKind::U1Diag;
    std::optional<CMat4> rep;   // coset representative (identity if absent)
    std::optional<CMat2> rep2;  // genus-1 representative

    /// Validation data: diag monomials of the rep-free torus in this component's
    /// parameter space, such that det(I + x rep diag(torus)) equals
    /// prod(1 + x e) over eigs. Absent where no such slice exists.
    std::optional<std::vector<Eig>> check_torus;

    int nparams() const;
    /// Joint density of all measures in the component's parameter space.
    LaurentPoly joint_density() const;
};

enum class Exactness { Full, Partial };

struct GroupAtlas {
    STGroup group = STGroup::C1;
    int genus = 2;
    Exactness exactness = Exactness::Full;
    std::vector<AtlasComponent> comps;
};

const GroupAtlas& components(STGroup h);

/// Integral over H of the symplectic character indexed by (a, b) (genus 2), or of
/// the one-row character (a) when H has genus 1 (then b must be 0; the value for
/// b > 0 is 0 by convention, matching the coefficient table). Must be a rational.
/// Throws PartialAtlas when the atlas lacks an exact component, unless every
/// component is exact or carries a derived reduction and allow_derived is set.
Rat integrate_char(STGroup h, int a, int b, bool allow_derived = false);

/// Same integral computed with the opposite eigenvalue pairing (last inverse
/// match instead of first). The character's symmetry makes the pairing
/// immaterial; tests assert both routes agree.
Rat integrate_char_alt_pairing(STGroup h, int a, int b, bool allow_derived = false);

/// The Haar average of prod_i det(I + x_i gamma) as an exact polynomial in
/// x_1..x_m with rational coefficients.
LaurentPoly autocorr_lhs(STGroup h, int m, bool allow_derived = false);

/// Exact moment sequence of the k-th characteristic polynomial coefficient,
/// for m = 0..m_max.
std::vector<Rat> moments_seq(STGroup h, int k, int m_max);

/// The character-sum side of the autocorrelation expansion, built from the
/// closed-form coefficient table. Works for every group, including the two
/// whose atlas is partial.
LaurentPoly autocorr_rhs(STGroup h, int m);

}  // namespace stc
