#include "stc/cyclotomic.hpp"

#include <cmath>
#include <sstream>

namespace stc {

namespace {
const Rat kZero;
}

CycloNum CycloNum::from_array(std::array<Rat, 16> c) {
    bool rational = true;
    for (int i = 1; i < 16; ++i)
        if (!c[i].is_zero()) {
            rational = false;
            break;
        }
    CycloNum out;
    if (rational) {
        out.r_ = std::move(c[0]);
    } else {
        out.full_ = std::make_unique<std::array<Rat, 16>>(std::move(c));
    }
    return out;
}

void CycloNum::promote() {
    if (full_) return;
    full_ = std::make_unique<std::array<Rat, 16>>();
    (*full_)[0] = std::move(r_);
    r_ = Rat(0);
}

CycloNum CycloNum::zeta_pow(int k) {
    k %= 48;
    if (k < 0) k += 48;
    // z^k mod (z^16 - z^8 + 1): reduce with z^e = z^(e-8) - z^(e-16).
    std::array<Rat, 48> v{};
    v[k] = Rat(1);
    for (int e = 47; e >= 16; --e) {
        if (v[e].is_zero()) continue;
        v[e - 8] += v[e];
        v[e - 16] -= v[e];
        v[e] = Rat(0);
    }
    std::array<Rat, 16> c;
    for (int i = 0; i < 16; ++i) c[i] = v[i];
    return from_array(std::move(c));
}

CycloNum CycloNum::root_scaled(const Rat& r, int k) { return CycloNum(r) * zeta_pow(k); }

const Rat& CycloNum::coeff(int k) const {
    if (k < 0 || k > 15) throw std::out_of_range("CycloNum::coeff");
    if (full_) return (*full_)[k];
    return k == 0 ? r_ : kZero;
}

CycloNum CycloNum::operator-() const {
    if (!full_) return CycloNum(-r_);
    std::array<Rat, 16> c;
    for (int i = 0; i < 16; ++i) c[i] = -(*full_)[i];
    return from_array(std::move(c));
}

CycloNum& CycloNum::operator+=(const CycloNum& o) {
    if (!full_ && !o.full_) {
        r_ += o.r_;
        return *this;
    }
    promote();
    if (o.full_) {
        for (int i = 0; i < 16; ++i) (*full_)[i] += (*o.full_)[i];
    } else {
        (*full_)[0] += o.r_;
    }
    // Collapse back if the higher coefficients cancelled.
    for (int i = 1; i < 16; ++i)
        if (!(*full_)[i].is_zero()) return *this;
    r_ = std::move((*full_)[0]);
    full_.reset();
    return *this;
}

CycloNum& CycloNum::operator-=(const CycloNum& o) { return *this += -o; }

CycloNum operator*(const CycloNum& a, const CycloNum& b) {
    if (!a.full_ && !b.full_) return CycloNum(a.r_ * b.r_);
    if (!a.full_) {
        if (a.r_.is_zero()) return CycloNum();
        std::array<Rat, 16> c;
        for (int i = 0; i < 16; ++i) c[i] = a.r_ * (*b.full_)[i];
        return CycloNum::from_array(std::move(c));
    }
    if (!b.full_) return b * a;
    std::array<Rat, 31> v{};
    for (int i = 0; i < 16; ++i) {
        const Rat& ai = (*a.full_)[i];
        if (ai.is_zero()) continue;
        for (int j = 0; j < 16; ++j) {
            const Rat& bj = (*b.full_)[j];
            if (bj.is_zero()) continue;
            v[i + j] += ai * bj;
        }
    }
    for (int e = 30; e >= 16; --e) {
        if (v[e].is_zero()) continue;
        v[e - 8] += v[e];
        v[e - 16] -= v[e];
        v[e] = Rat(0);
    }
    std::array<Rat, 16> c;
    for (int i = 0; i < 16; ++i) c[i] = std::move(v[i]);
    return CycloNum::from_array(std::move(c));
}

bool operator==(const CycloNum& a, const CycloNum& b) {
    if (!a.full_ && !b.full_) return a.r_ == b.r_;
    for (int i = 0; i < 16; ++i)
        if (a.coeff(i) != b.coeff(i)) return false;
    return true;
}

CycloNum CycloNum::inverse() const {
    if (is_zero()) throw std::domain_error("CycloNum::inverse: zero");
    if (!full_) return CycloNum(Rat(1) / r_);
    // Solve x * (*this) = 1 on the 16x16 multiplication matrix.
    std::array<std::array<Rat, 17>, 16> m{};
    for (int j = 0; j < 16; ++j) {
        CycloNum col = (*this) * zeta_pow(j);
        for (int i = 0; i < 16; ++i) m[i][j] = col.coeff(i);
    }
    m[0][16] = Rat(1);
    for (int col = 0; col < 16; ++col) {
        int pivot = -1;
        for (int r = col; r < 16; ++r)
            if (!m[r][col].is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw std::domain_error("CycloNum::inverse: singular");
        std::swap(m[col], m[pivot]);
        Rat inv = Rat(1) / m[col][col];
        for (int j = col; j <= 16; ++j) m[col][j] *= inv;
        for (int r = 0; r < 16; ++r) {
            if (r == col || m[r][col].is_zero()) continue;
            Rat f = m[r][col];
            for (int j = col; j <= 16; ++j) m[r][j] -= f * m[col][j];
        }
    }
    std::array<Rat, 16> c;
    for (int i = 0; i < 16; ++i) c[i] = m[i][16];
    return from_array(std::move(c));
}

CycloNum CycloNum::pow(long e) const {
    CycloNum base = *this;
    if (e < 0) {
        base = base.inverse();
        e = -e;
    }
    CycloNum acc(1);
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

std::complex<double> CycloNum::embed() const {
    if (!full_) return {r_.to_double(), 0.0};
    std::complex<double> out(0.0, 0.0);
    for (int k = 0; k < 16; ++k) {
        if ((*full_)[k].is_zero()) continue;
        double ang = M_PI * k / 24.0;
        out += (*full_)[k].to_double() * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return out;
}

std::string CycloNum::str() const {
    if (!full_) return r_.str();
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k < 16; ++k) {
        if ((*full_)[k].is_zero()) continue;
        if (!first) os << " + ";
        os << (*full_)[k].str();
        if (k > 0) os << "*z48^" << k;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace stc
