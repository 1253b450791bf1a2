#pragma once

#include <algorithm>
#include <vector>

#include "zetadiv/field.hpp"

namespace zetadiv {

/// Dense univariate polynomial over a FieldCtx, constant term first,
/// normalized (no zero leading coefficient).  The zero polynomial has an
/// empty coefficient vector and degree -1.
struct FPoly {
    std::vector<FieldElement> c;

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    bool operator==(const FPoly& o) const { return c == o.c; }
    bool operator!=(const FPoly& o) const { return c != o.c; }
};

inline FPoly fp_normalize(const FieldCtx& F, FPoly a) {
    while (!a.c.empty() && F.is_zero(a.c.back())) a.c.pop_back();
    return a;
}

inline FPoly fp_from_coeffs(const FieldCtx& F, std::vector<FieldElement> coeffs) {
    return fp_normalize(F, FPoly{std::move(coeffs)});
}

/// Build from integer coefficient lists (prime-field case).
inline FPoly fp_from_ints(const FieldCtx& F, const std::vector<std::int64_t>& coeffs) {
    std::vector<FieldElement> v;
    v.reserve(coeffs.size());
    for (auto x : coeffs) v.push_back(F.element({x}));
    return fp_from_coeffs(F, std::move(v));
}

inline FPoly fp_one(const FieldCtx& F) { return FPoly{{F.one()}}; }

inline FPoly fp_x(const FieldCtx& F) { return FPoly{{F.zero(), F.one()}}; }

inline FPoly fp_add(const FieldCtx& F, const FPoly& a, const FPoly& b) {
    std::vector<FieldElement> r(std::max(a.c.size(), b.c.size()), F.zero());
    for (std::size_t i = 0; i < a.c.size(); ++i) r[i] = a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r[i] = F.add(r[i], b.c[i]);
    return fp_from_coeffs(F, std::move(r));
}

inline FPoly fp_neg(const FieldCtx& F, const FPoly& a) {
    FPoly r = a;
    for (auto& x : r.c) x = F.neg(x);
    return r;
}

inline FPoly fp_sub(const FieldCtx& F, const FPoly& a, const FPoly& b) { return fp_add(F, a, fp_neg(F, b)); }

inline FPoly fp_mul(const FieldCtx& F, const FPoly& a, const FPoly& b) {
    if (a.is_zero() || b.is_zero()) return FPoly{};
    std::vector<FieldElement> r(a.c.size() + b.c.size() - 1, F.zero());
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (F.is_zero(a.c[i])) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a.c[i], b.c[j]));
    }
    return fp_from_coeffs(F, std::move(r));
}

inline FPoly fp_scale(const FieldCtx& F, const FPoly& a, const FieldElement& s) {
    FPoly r = a;
    for (auto& x : r.c) x = F.mul(x, s);
    return fp_normalize(F, r);
}

/// Multiply by x^k.
inline FPoly fp_shift(const FieldCtx& F, const FPoly& a, unsigned k) {
    if (a.is_zero()) return a;
    FPoly r;
    r.c.assign(a.c.size() + k, F.zero());
    std::copy(a.c.begin(), a.c.end(), r.c.begin() + k);
    return r;
}

inline void fp_divrem(const FieldCtx& F, const FPoly& a, const FPoly& b, FPoly& quot, FPoly& rem) {
    if (b.is_zero()) throw validation_error("polynomial division by zero");
    rem = a;
    quot = FPoly{};
    if (a.degree() < b.degree()) return;
    quot.c.assign(a.c.size() - b.c.size() + 1, F.zero());
    FieldElement inv_lead = F.inv(b.c.back());
    while (rem.degree() >= b.degree() && !rem.is_zero()) {
        FieldElement coeff = F.mul(rem.c.back(), inv_lead);
        std::size_t shift = rem.c.size() - b.c.size();
        quot.c[shift] = coeff;
        for (std::size_t i = 0; i < b.c.size(); ++i)
            rem.c[shift + i] = F.sub(rem.c[shift + i], F.mul(coeff, b.c[i]));
        rem = fp_normalize(F, rem);
    }
    quot = fp_normalize(F, quot);
}

inline FPoly fp_mod(const FieldCtx& F, const FPoly& a, const FPoly& b) {
    FPoly q, r;
    fp_divrem(F, a, b, q, r);
    return r;
}

inline FPoly fp_div_exact(const FieldCtx& F, const FPoly& a, const FPoly& b) {
    FPoly q, r;
    fp_divrem(F, a, b, q, r);
    if (!r.is_zero()) throw consistency_error("fp_div_exact: division is not exact");
    return q;
}

inline FPoly fp_make_monic(const FieldCtx& F, const FPoly& a) {
    if (a.is_zero()) return a;
    return fp_scale(F, a, F.inv(a.c.back()));
}

inline FPoly fp_gcd(const FieldCtx& F, FPoly a, FPoly b) {
    while (!b.is_zero()) {
        FPoly r = fp_mod(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return fp_make_monic(F, a);
}

inline FPoly fp_derivative(const FieldCtx& F, const FPoly& a) {
    if (a.degree() < 1) return FPoly{};
    std::vector<FieldElement> r;
    r.reserve(a.c.size() - 1);
    for (std::size_t i = 1; i < a.c.size(); ++i) {
        FieldElement term = F.zero();
        for (std::size_t k = 0; k < i % F.p(); ++k) term = F.add(term, a.c[i]);
        r.push_back(term);
    }
    return fp_from_coeffs(F, std::move(r));
}

inline FieldElement fp_eval(const FieldCtx& F, const FPoly& a, const FieldElement& x) {
    FieldElement acc = F.zero();
    for (std::size_t i = a.c.size(); i-- > 0;) acc = F.add(F.mul(acc, x), a.c[i]);
    return acc;
}

inline FPoly fp_mulmod(const FieldCtx& F, const FPoly& a, const FPoly& b, const FPoly& m) {
    return fp_mod(F, fp_mul(F, a, b), m);
}

inline FPoly fp_powmod(const FieldCtx& F, FPoly base, std::uint64_t e, const FPoly& m) {
    FPoly r = fp_one(F);
    base = fp_mod(F, base, m);
    while (e) {
        if (e & 1u) r = fp_mulmod(F, r, base, m);
        base = fp_mulmod(F, base, base, m);
        e >>= 1u;
    }
    return r;
}

/// Inverse of a modulo the irreducible m, via a^(q^d - 2).
inline FPoly fp_invmod(const FieldCtx& F, const FPoly& a, const FPoly& m) {
    std::uint64_t order = 1;
    for (int i = 0; i < m.degree(); ++i) order *= F.q();
    return fp_powmod(F, a, order - 2, m);
}

/// Monic polynomial of exact degree d with index-encoded lower coefficients.
inline FPoly fp_monic_at(const FieldCtx& F, unsigned d, std::uint64_t enc) {
    std::vector<FieldElement> c(d + 1, F.zero());
    for (unsigned i = 0; i < d; ++i) {
        c[i] = F.element_at(enc % F.q());
        enc /= F.q();
    }
    c[d] = F.one();
    return FPoly{std::move(c)};
}

/// Trial division against every monic polynomial of degree <= d/2.
inline bool fp_is_irreducible(const FieldCtx& F, const FPoly& f) {
    int d = f.degree();
    if (d <= 0) return false;
    if (d == 1) return true;
    for (unsigned e = 1; 2 * e <= static_cast<unsigned>(d); ++e) {
        std::uint64_t count = 1;
        for (unsigned i = 0; i < e; ++i) count *= F.q();
        for (std::uint64_t enc = 0; enc < count; ++enc) {
            FPoly g = fp_monic_at(F, e, enc);
            if (fp_mod(F, f, g).is_zero()) return false;
        }
    }
    return true;
}

/// All monic irreducibles of exact degree d, in index order.
inline std::vector<FPoly> fp_monic_irreducibles(const FieldCtx& F, unsigned d) {
    std::vector<FPoly> out;
    std::uint64_t count = 1;
    for (unsigned i = 0; i < d; ++i) count *= F.q();
    for (std::uint64_t enc = 0; enc < count; ++enc) {
        FPoly g = fp_monic_at(F, d, enc);
        if (fp_is_irreducible(F, g)) out.push_back(std::move(g));
    }
    return out;
}

/// Monic irreducible factorization by trial division; fine at the scales
/// this library enumerates (denominators of Artin-Schreier forms).
inline std::vector<std::pair<FPoly, int>> fp_factor(const FieldCtx& F, FPoly f) {
    std::vector<std::pair<FPoly, int>> factors;
    f = fp_make_monic(F, f);
    if (f.degree() < 1) return factors;
    for (unsigned d = 1; f.degree() >= 1 && d <= static_cast<unsigned>(f.degree()); ++d) {
        std::uint64_t count = 1;
        for (unsigned i = 0; i < d; ++i) count *= F.q();
        for (std::uint64_t enc = 0; enc < count && f.degree() >= static_cast<int>(d); ++enc) {
            FPoly g = fp_monic_at(F, d, enc);
            int mult = 0;
            while (fp_mod(F, f, g).is_zero()) {
                f = fp_div_exact(F, f, g);
                ++mult;
            }
            if (mult) factors.emplace_back(std::move(g), mult);
        }
    }
    return factors;
}

/// Multiplicity of the monic irreducible g in f.
inline int fp_valuation(const FieldCtx& F, FPoly f, const FPoly& g) {
    int v = 0;
    while (!f.is_zero() && fp_mod(F, f, g).is_zero()) {
        f = fp_div_exact(F, f, g);
        ++v;
    }
    return v;
}

}  // namespace zetadiv
