#pragma once

#include "stc/cyclotomic.hpp"

#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace stc {

using ExpVec = std::vector<int32_t>;

struct VarMismatch : std::runtime_error {
    explicit VarMismatch(const std::string& what) : std::runtime_error(what) {}
};
struct NotDivisible : std::runtime_error {
    explicit NotDivisible(const std::string& what) : std::runtime_error(what) {}
};
struct NonUnitImage : std::runtime_error {
    explicit NonUnitImage(const std::string& what) : std::runtime_error(what) {}
};

/// Sparse multivariate Laurent polynomial over Q(zeta_48).
///
/// Terms are kept in an ordered map from exponent vector to coefficient; zero
/// coefficients are never stored, so equality is structural. Exponents may be
/// negative.
class LaurentPoly {
public:
    LaurentPoly() : nvars_(0) {}
    explicit LaurentPoly(int nvars) : nvars_(nvars) {}

    static LaurentPoly constant(int nvars, const CycloNum& c);
    static LaurentPoly monomial(int nvars, const ExpVec& e, const CycloNum& c);
    /// x_i^power as a polynomial in nvars variables.
    static LaurentPoly variable(int nvars, int i, int power = 1);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<ExpVec, CycloNum>& terms() const { return terms_; }

    /// Adds c * x^e, dropping the term if the result is zero.
    void add_term(const ExpVec& e, const CycloNum& c);

    CycloNum coeff(const ExpVec& e) const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        return mul(a, b);
    }
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    LaurentPoly scaled(const CycloNum& c) const;

    /// Product; dispatches to the OpenMP kernel for large inputs.
    static LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b);
    static LaurentPoly mul_serial(const LaurentPoly& a, const LaurentPoly& b);
    /// Block-parallel product. Deterministic: partial maps are merged in block order,
    /// so the result is identical to mul_serial for any thread count.
    static LaurentPoly mul_parallel(const LaurentPoly& a, const LaurentPoly& b);

    LaurentPoly pow(int e) const;

    /// Exact quotient under graded-lex leading-term elimination; throws NotDivisible
    /// if a nonzero remainder survives.
    LaurentPoly exact_div(const LaurentPoly& den) const;

    /// Substitutes one image per variable. Every image must be a single-term monomial
    /// (a unit of the Laurent ring), so negative exponents substitute cleanly. All
    /// images live in a common target variable space.
    LaurentPoly substitute(const std::vector<LaurentPoly>& images) const;

    /// Reindexes variables into a larger space: exponent of old var i goes to
    /// slot map[i]. Coefficients are unchanged.
    LaurentPoly embed_vars(int target_nvars, const std::vector<int>& map) const;

    bool rational_coeffs() const;

    std::complex<double> eval(const std::vector<std::complex<double>>& xs) const;

    std::string str(const std::vector<std::string>& names) const;

private:
    int nvars_;
    std::map<ExpVec, CycloNum> terms_;
};

}  // namespace stc
