#pragma once

#include "stc/rational.hpp"

#include <array>
#include <complex>
#include <memory>
#include <stdexcept>

namespace stc {

struct NotRational : std::runtime_error {
    explicit NotRational(const std::string& what) : std::runtime_error(what) {}
};

/// Element of the cyclotomic field Q(zeta_48), stored as c_0 + c_1 z + ... + c_15 z^15
/// reduced modulo Phi_48(z) = z^16 - z^8 + 1. Equality is componentwise; an element is
/// rational iff c_1..c_15 vanish. The complex embedding sends z to exp(i*pi/24).
///
/// Rational values (the overwhelmingly common case) are stored as a single Rat;
/// the full coefficient vector is allocated only when a higher coefficient is
/// nonzero, and every operation renormalizes back to the compact form.
class CycloNum {
public:
    CycloNum() = default;
    CycloNum(const Rat& r) : r_(r) {}
    CycloNum(long n) : r_(n) {}
    CycloNum(const CycloNum& o)
        : r_(o.r_), full_(o.full_ ? std::make_unique<std::array<Rat, 16>>(*o.full_) : nullptr) {}
    CycloNum(CycloNum&&) noexcept = default;
    CycloNum& operator=(const CycloNum& o) {
        if (this != &o) {
            r_ = o.r_;
            full_ = o.full_ ? std::make_unique<std::array<Rat, 16>>(*o.full_) : nullptr;
        }
        return *this;
    }
    CycloNum& operator=(CycloNum&&) noexcept = default;

    /// zeta_48^k for any integer k (reduced mod 48).
    static CycloNum zeta_pow(int k);
    /// r * zeta_48^k.
    static CycloNum root_scaled(const Rat& r, int k);

    bool is_zero() const { return full_ ? false : r_.is_zero(); }
    bool is_rational() const { return !full_; }

    /// The rational value; throws NotRational if any higher coefficient is nonzero.
    Rat to_rat() const {
        if (full_) throw NotRational("CycloNum::to_rat: " + str());
        return r_;
    }

    /// Coefficient of zeta_48^k, 0 <= k < 16.
    const Rat& coeff(int k) const;

    CycloNum operator-() const;
    CycloNum& operator+=(const CycloNum& o);
    CycloNum& operator-=(const CycloNum& o);
    friend CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
    friend CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }
    friend CycloNum operator*(const CycloNum& a, const CycloNum& b);

    /// Multiplicative inverse; throws std::domain_error on zero.
    CycloNum inverse() const;
    /// Integer power (negative allowed for nonzero values).
    CycloNum pow(long e) const;

    friend bool operator==(const CycloNum& a, const CycloNum& b);
    friend bool operator!=(const CycloNum& a, const CycloNum& b) { return !(a == b); }

    std::complex<double> embed() const;
    std::string str() const;

private:
    static CycloNum from_array(std::array<Rat, 16> c);
    void promote();  // switch to the full representation

    Rat r_;
    std::unique_ptr<std::array<Rat, 16>> full_;
};

}  // namespace stc
