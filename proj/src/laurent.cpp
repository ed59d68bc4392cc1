#include "stc/laurent.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace stc {

namespace {

void check_same_vars(const LaurentPoly& a, const LaurentPoly& b, const char* op) {
    if (a.nvars() != b.nvars())
        throw VarMismatch(std::string(op) + ": " + std::to_string(a.nvars()) + " vs " +
                          std::to_string(b.nvars()) + " variables");
}

// Graded-lex: compare total degree first, then lexicographic on the exponents.
bool graded_lex_less(const ExpVec& a, const ExpVec& b) {
    long da = std::accumulate(a.begin(), a.end(), 0L);
    long db = std::accumulate(b.begin(), b.end(), 0L);
    if (da != db) return da < db;
    return a < b;
}

}  // namespace

LaurentPoly LaurentPoly::constant(int nvars, const CycloNum& c) {
    LaurentPoly p(nvars);
    p.add_term(ExpVec(nvars, 0), c);
    return p;
}

LaurentPoly LaurentPoly::monomial(int nvars, const ExpVec& e, const CycloNum& c) {
    if (static_cast<int>(e.size()) != nvars)
        throw VarMismatch("monomial: exponent vector length mismatch");
    LaurentPoly p(nvars);
    p.add_term(e, c);
    return p;
}

LaurentPoly LaurentPoly::variable(int nvars, int i, int power) {
    ExpVec e(nvars, 0);
    e.at(i) = power;
    return monomial(nvars, e, CycloNum(1));
}

void LaurentPoly::add_term(const ExpVec& e, const CycloNum& c) {
    if (static_cast<int>(e.size()) != nvars_)
        throw VarMismatch("add_term: exponent vector length mismatch");
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

CycloNum LaurentPoly::coeff(const ExpVec& e) const {
    if (static_cast<int>(e.size()) != nvars_)
        throw VarMismatch("coeff: exponent vector length mismatch");
    auto it = terms_.find(e);
    return it == terms_.end() ? CycloNum() : it->second;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out(nvars_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    check_same_vars(*this, o, "add");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    check_same_vars(*this, o, "sub");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly LaurentPoly::scaled(const CycloNum& c) const {
    LaurentPoly out(nvars_);
    if (c.is_zero()) return out;
    for (const auto& [e, v] : terms_) out.add_term(e, v * c);
    return out;
}

LaurentPoly LaurentPoly::mul_serial(const LaurentPoly& a, const LaurentPoly& b) {
    check_same_vars(a, b, "mul");
    LaurentPoly out(a.nvars_);
    ExpVec e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

LaurentPoly LaurentPoly::mul_parallel(const LaurentPoly& a, const LaurentPoly& b) {
    check_same_vars(a, b, "mul");
#ifndef _OPENMP
    return mul_serial(a, b);
#else
    const std::size_t na = a.terms_.size();
    if (na < 64 || b.terms_.size() < 8) return mul_serial(a, b);

    std::vector<const std::pair<const ExpVec, CycloNum>*> at;
    at.reserve(na);
    for (const auto& t : a.terms_) at.push_back(&t);

    const int nblocks = 32;
    std::vector<std::map<ExpVec, CycloNum>> partial(nblocks);

#pragma omp parallel for schedule(dynamic)
    for (int blk = 0; blk < nblocks; ++blk) {
        std::size_t lo = na * blk / nblocks;
        std::size_t hi = na * (blk + 1) / nblocks;
        auto& acc = partial[blk];
        ExpVec e(a.nvars_);
        for (std::size_t idx = lo; idx < hi; ++idx) {
            const auto& [ea, ca] = *at[idx];
            for (const auto& [eb, cb] : b.terms_) {
                for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
                CycloNum c = ca * cb;
                auto it = acc.find(e);
                if (it == acc.end()) acc.emplace(e, std::move(c));
                else it->second += c;
            }
        }
    }

    // Merge in block order; ordered maps make the result independent of scheduling.
    LaurentPoly out(a.nvars_);
    for (int blk = 0; blk < nblocks; ++blk)
        for (const auto& [e, c] : partial[blk]) out.add_term(e, c);
    return out;
#endif
}

LaurentPoly LaurentPoly::mul(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.terms_.size() * b.terms_.size() >= 1u << 15) return mul_parallel(a, b);
    return mul_serial(a, b);
}

LaurentPoly LaurentPoly::pow(int e) const {
    if (e < 0) throw std::invalid_argument("LaurentPoly::pow: negative exponent");
    LaurentPoly acc = constant(nvars_, CycloNum(1));
    for (int i = 0; i < e; ++i) acc = mul(acc, *this);
    return acc;
}

LaurentPoly LaurentPoly::exact_div(const LaurentPoly& den) const {
    check_same_vars(*this, den, "div");
    if (den.is_zero()) throw std::domain_error("exact_div: zero divisor");
    LaurentPoly quot(nvars_);
    if (is_zero()) return quot;

    // Monomials are units here, so leading-term elimination under graded-lex
    // always proceeds; what pins down divisibility is the Newton-polytope bound:
    // per coordinate, exponents of an exact quotient lie in
    // [min(num) - min(den), max(num) - max(den)]. A quotient term escaping the
    // box means a nonzero remainder would survive.
    ExpVec qmin(nvars_), qmax(nvars_);
    for (int i = 0; i < nvars_; ++i) {
        int32_t nlo = 0, nhi = 0, dlo = 0, dhi = 0;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (first || e[i] < nlo) nlo = e[i];
            if (first || e[i] > nhi) nhi = e[i];
            first = false;
        }
        first = true;
        for (const auto& [e, c] : den.terms_) {
            if (first || e[i] < dlo) dlo = e[i];
            if (first || e[i] > dhi) dhi = e[i];
            first = false;
        }
        qmin[i] = nlo - dlo;
        qmax[i] = nhi - dhi;
        if (qmin[i] > qmax[i]) throw NotDivisible("exact_div: degree ranges incompatible");
    }

    struct GradedLex {
        bool operator()(const ExpVec& a, const ExpVec& b) const {
            return graded_lex_less(a, b);
        }
    };
    std::map<ExpVec, CycloNum, GradedLex> rem(terms_.begin(), terms_.end());
    std::vector<std::pair<ExpVec, CycloNum>> dterms(den.terms_.begin(), den.terms_.end());
    std::sort(dterms.begin(), dterms.end(), [](const auto& x, const auto& y) {
        return graded_lex_less(y.first, x.first);
    });
    const ExpVec& dlead = dterms.front().first;
    CycloNum dlead_inv = dterms.front().second.inverse();

    ExpVec q(nvars_), e(nvars_);
    while (!rem.empty()) {
        auto lt = std::prev(rem.end());
        for (int i = 0; i < nvars_; ++i) {
            q[i] = lt->first[i] - dlead[i];
            if (q[i] < qmin[i] || q[i] > qmax[i])
                throw NotDivisible("exact_div: nonzero remainder");
        }
        CycloNum qc = lt->second * dlead_inv;
        quot.add_term(q, qc);
        for (const auto& [de, dc] : dterms) {
            for (int i = 0; i < nvars_; ++i) e[i] = q[i] + de[i];
            auto it = rem.find(e);
            CycloNum delta = qc * dc;
            if (it == rem.end()) {
                rem.emplace(e, -delta);
            } else {
                it->second -= delta;
                if (it->second.is_zero()) rem.erase(it);
            }
        }
    }
    return quot;
}

LaurentPoly LaurentPoly::substitute(const std::vector<LaurentPoly>& images) const {
    if (static_cast<int>(images.size()) != nvars_)
        throw VarMismatch("substitute: one image per variable required");
    int target = nvars_ == 0 ? 0 : images.front().nvars();
    struct Unit {
        ExpVec e;
        CycloNum c;
    };
    std::vector<Unit> units;
    units.reserve(images.size());
    for (const auto& im : images) {
        if (im.nvars() != target) throw VarMismatch("substitute: image variable mismatch");
        if (im.term_count() != 1)
            throw NonUnitImage("substitute: image must be a single-term monomial");
        const auto& [e, c] = *im.terms().begin();
        units.push_back({e, c});
    }
    LaurentPoly out(target);
    for (const auto& [e, c] : terms_) {
        ExpVec te(target, 0);
        CycloNum tc = c;
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            for (int j = 0; j < target; ++j) te[j] += units[i].e[j] * e[i];
            tc = tc * units[i].c.pow(e[i]);
        }
        out.add_term(te, tc);
    }
    return out;
}

LaurentPoly LaurentPoly::embed_vars(int target_nvars, const std::vector<int>& map) const {
    if (static_cast<int>(map.size()) != nvars_)
        throw VarMismatch("embed_vars: map length mismatch");
    LaurentPoly out(target_nvars);
    for (const auto& [e, c] : terms_) {
        ExpVec te(target_nvars, 0);
        for (int i = 0; i < nvars_; ++i) te.at(map[i]) += e[i];
        out.add_term(te, c);
    }
    return out;
}

bool LaurentPoly::rational_coeffs() const {
    for (const auto& [e, c] : terms_)
        if (!c.is_rational()) return false;
    return true;
}

std::complex<double> LaurentPoly::eval(const std::vector<std::complex<double>>& xs) const {
    if (static_cast<int>(xs.size()) != nvars_)
        throw VarMismatch("eval: value count mismatch");
    std::complex<double> acc(0.0, 0.0);
    for (const auto& [e, c] : terms_) {
        std::complex<double> t = c.embed();
        for (int i = 0; i < nvars_; ++i) t *= std::pow(xs[i], e[i]);
        acc += t;
    }
    return acc;
}

std::string LaurentPoly::str(const std::vector<std::string>& names) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        os << "(" << c.str() << ")";
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            os << "*" << names.at(i);
            if (e[i] != 1) os << "^" << e[i];
        }
        first = false;
    }
    return os.str();
}

}  // namespace stc
