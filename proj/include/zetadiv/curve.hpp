#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "zetadiv/fpoly.hpp"

namespace zetadiv {

enum class PlaceKind { ramified, split, inert };

struct PlaceRecord {
    int degree = 0;  // degree of the place of the function field
    PlaceKind kind = PlaceKind::ramified;
    bool at_infinity = false;
    FPoly prime;  // monic irreducible below the place (finite places only)
};

/// Point counts N_m over F_{q^m} and place counts B_m, linked by
/// N_m = sum_{d | m} d * B_d.
struct PlaceTable {
    std::uint64_t q = 0;
    int max_degree = 0;
    std::vector<std::int64_t> N;  // N[1..D], 1-based in N[m-1]
    std::vector<std::int64_t> B;  // B[1..D], 1-based in B[m-1]
    std::optional<std::vector<PlaceRecord>> places;
};

inline int mobius(int n) {
    int result = 1;
    for (int d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            n /= d;
            if (n % d == 0) return 0;
            result = -result;
        }
    }
    if (n > 1) result = -result;
    return result;
}

/// Quadratic curve model y^2 + h(x) y = f(x) over F_q and the derived
/// structure of its function field.
///
/// In characteristic 2 the model is treated as the Artin-Schreier
/// extension z^2 + z = u with u = f / h^2: even-order poles of u are
/// removed place by place (substituting z <- z + w kills a pole of order
/// 2m through w = c/p^m with c^2 matching the leading part), after which
/// the surviving odd pole orders m_P give the different exponents m_P + 1
/// and the genus via 2g - 2 = -4 + sum (m_P + 1) deg P.  This also yields
/// the exact smooth-model fiber of every place, so point counts are
/// correct even when the plane model has singular affine points.
///
/// In odd characteristic the model y^2 = f with f squarefree is the
/// standard hyperelliptic setup; fibers follow the quadratic character.
class CurveModel {
public:
    static CurveModel create(FieldCtx base, FPoly h, FPoly f_num, const FPoly& f_den,
                             std::optional<int> declared_genus = std::nullopt) {
        CurveModel c;
        c.base_ = std::move(base);
        const FieldCtx& F = c.base_;
        FPoly h_eff = std::move(h);
        FPoly f_eff = std::move(f_num);
        if (!f_den.is_zero() && f_den.degree() >= 1) {
            // clear the denominator with Y = d(x) y:  Y^2 + d h Y = d^2 f = (num d) after reduction
            FPoly num = f_eff, den = f_den;
            FPoly g = fp_gcd(F, num, den);
            if (g.degree() >= 1) {
                num = fp_div_exact(F, num, g);
                den = fp_div_exact(F, den, g);
            }
            h_eff = fp_mul(F, h_eff, den);
            f_eff = fp_mul(F, num, den);
        } else if (!f_den.is_zero() && f_den.degree() == 0) {
            f_eff = fp_scale(F, f_eff, F.inv(f_den.c[0]));
        }
        c.h_ = std::move(h_eff);
        c.f_ = std::move(f_eff);
        if (c.f_.is_zero()) throw validation_error("curve: f must be nonzero");
        if (F.p() == 2)
            c.init_char2();
        else
            c.init_odd();
        if (declared_genus && *declared_genus != c.genus_)
            throw validation_error("curve: declared genus " + std::to_string(*declared_genus) +
                                   " does not match derived genus " + std::to_string(c.genus_));
        return c;
    }

    const FieldCtx& base() const { return base_; }
    std::uint64_t q() const { return base_.q(); }
    const FPoly& h() const { return h_; }
    const FPoly& f() const { return f_; }
    int genus() const { return genus_; }
    PlaceKind infinity_kind() const { return inf_kind_; }
    /// True when the affine plane model is nonsingular (gcd diagnostic);
    /// counting is valid either way.
    bool plane_model_smooth() const { return plane_smooth_; }

    /// Number of points of the smooth model over F_{q^m}.
    std::int64_t count_points(int m, std::uint64_t limit = FieldCtx::kDefaultLimit) const {
        if (m < 1) throw validation_error("count_points: m must be >= 1");
        FieldCtx ext = FieldCtx::make(base_.p(), base_.n() * static_cast<unsigned>(m), limit);
        std::optional<FieldElement> gen_image;
        if (base_.n() > 1) gen_image = embed_generator(base_, ext);
        auto lift_elem = [&](const FieldElement& a) {
            if (base_.n() == 1) return ext.from_residue(a.c[0]);
            return embed(base_, ext, a, *gen_image);
        };
        auto lift_poly = [&](const FPoly& a) {
            std::vector<FieldElement> v;
            v.reserve(a.c.size());
            for (const auto& x : a.c) v.push_back(lift_elem(x));
            return v;  // not normalized; lifting preserves (non)zero leading coefficients
        };
        auto horner = [&](const std::vector<FieldElement>& cs, const FieldElement& x) {
            FieldElement acc = ext.zero();
            for (std::size_t i = cs.size(); i-- > 0;) acc = ext.add(ext.mul(acc, x), cs[i]);
            return acc;
        };
        std::int64_t total = 0;
        if (base_.p() == 2) {
            auto num = lift_poly(u_num_), den = lift_poly(u_den_);
            for (std::uint64_t idx = 0; idx < ext.q(); ++idx) {
                FieldElement x = ext.element_at(idx);
                FieldElement dv = horner(den, x);
                if (ext.is_zero(dv)) {
                    ++total;  // ramified fiber
                    continue;
                }
                FieldElement val = ext.mul(horner(num, x), ext.inv(dv));
                if (ext.absolute_trace(val) == 0) total += 2;
            }
            if (inf_pole_ > 0)
                ++total;
            else if (ext.absolute_trace(lift_elem(inf_value_)) == 0)
                total += 2;
        } else {
            auto fl = lift_poly(f_);
            std::uint64_t half = (ext.q() - 1) / 2;
            for (std::uint64_t idx = 0; idx < ext.q(); ++idx) {
                FieldElement x = ext.element_at(idx);
                FieldElement fv = horner(fl, x);
                if (ext.is_zero(fv))
                    ++total;
                else if (ext.pow(fv, half) == ext.one())
                    total += 2;
            }
            if (f_.degree() % 2 == 1)
                ++total;
            else {
                FieldElement top = lift_elem(f_.c.back());
                if (ext.pow(top, half) == ext.one()) total += 2;
            }
        }
        return total;
    }

    /// N_1..N_D and B_1..B_D by Moebius inversion; integrality and
    /// nonnegativity of every B_d are asserted.
    PlaceTable place_counts(int D, std::uint64_t limit = FieldCtx::kDefaultLimit) const {
        if (D < 1) throw validation_error("place_counts: max degree must be >= 1");
        PlaceTable t;
        t.q = q();
        t.max_degree = D;
        for (int m = 1; m <= D; ++m) t.N.push_back(count_points(m, limit));
        for (int m = 1; m <= D; ++m) {
            std::int64_t s = 0;
            for (int d = 1; d <= m; ++d)
                if (m % d == 0) s += mobius(m / d) * t.N[d - 1];
            if (s % m != 0 || s < 0)
                throw consistency_error("place_counts: non-integral or negative B_" + std::to_string(m));
            t.B.push_back(s / m);
        }
        return t;
    }

    /// Explicit classification of every place of degree <= D, cross-checked
    /// against the Moebius counts.
    PlaceTable enumerate_places(int D, std::uint64_t limit = FieldCtx::kDefaultLimit) const {
        PlaceTable t = place_counts(D, limit);
        const FieldCtx& F = base_;
        std::vector<PlaceRecord> places;
        std::vector<std::int64_t> B(static_cast<std::size_t>(D), 0);
        auto push = [&](PlaceRecord rec) {
            if (rec.degree <= D) {
                B[static_cast<std::size_t>(rec.degree) - 1] += 1;
                places.push_back(std::move(rec));
            }
        };
        for (int d = 1; d <= D; ++d) {
            for (auto& prime : fp_monic_irreducibles(F, static_cast<unsigned>(d))) {
                std::uint64_t res_order = 1;
                for (int i = 0; i < d; ++i) res_order *= F.q();
                if (res_order > limit)
                    throw validation_error("enumerate_places: residue field exceeds enumeration limit");
                if (base_.p() == 2) {
                    if (!u_den_.is_zero() && fp_mod(F, u_den_, prime).is_zero()) {
                        push({d, PlaceKind::ramified, false, prime});
                        continue;
                    }
                    FPoly val = fp_mulmod(F, fp_mod(F, u_num_, prime), fp_invmod(F, fp_mod(F, u_den_, prime), prime),
                                          prime);
                    // absolute trace of val in the residue field F_{q^d}
                    unsigned steps = F.n() * static_cast<unsigned>(d);
                    FPoly acc, frob = val;
                    for (unsigned i = 0; i < steps; ++i) {
                        acc = fp_add(F, acc, frob);
                        frob = fp_mulmod(F, frob, frob, prime);
                    }
                    bool split = acc.is_zero();
                    if (split)
                        push({d, PlaceKind::split, false, prime}), push({d, PlaceKind::split, false, prime});
                    else
                        push({2 * d, PlaceKind::inert, false, prime});
                } else {
                    FPoly fmod = fp_mod(F, f_, prime);
                    if (fmod.is_zero()) {
                        push({d, PlaceKind::ramified, false, prime});
                        continue;
                    }
                    FPoly chi = fp_powmod(F, fmod, (res_order - 1) / 2, prime);
                    if (chi == fp_one(F))
                        push({d, PlaceKind::split, false, prime}), push({d, PlaceKind::split, false, prime});
                    else
                        push({2 * d, PlaceKind::inert, false, prime});
                }
            }
        }
        switch (inf_kind_) {
            case PlaceKind::ramified:
                push({1, PlaceKind::ramified, true, {}});
                break;
            case PlaceKind::split:
                push({1, PlaceKind::split, true, {}});
                push({1, PlaceKind::split, true, {}});
                break;
            case PlaceKind::inert:
                push({2, PlaceKind::inert, true, {}});
                break;
        }
        for (int d = 1; d <= D; ++d)
            if (B[static_cast<std::size_t>(d) - 1] != t.B[static_cast<std::size_t>(d) - 1])
                throw consistency_error("enumerate_places: explicit B_" + std::to_string(d) + " = " +
                                        std::to_string(B[d - 1]) + " disagrees with Moebius inversion " +
                                        std::to_string(t.B[d - 1]));
        t.places = std::move(places);
        return t;
    }

private:
    FieldCtx base_;
    FPoly h_, f_;
    int genus_ = 0;
    PlaceKind inf_kind_ = PlaceKind::ramified;
    bool plane_smooth_ = true;
    // char-2 Artin-Schreier data: reduced u = u_num/u_den with only odd-order poles
    FPoly u_num_, u_den_;
    std::vector<std::pair<FPoly, int>> ramified_;  // finite ramified places with pole order
    int inf_pole_ = 0;                             // odd pole order at infinity, 0 if unramified
    FieldElement inf_value_;                       // value of reduced u at infinity when unramified

    void init_char2() {
        const FieldCtx& F = base_;
        if (h_.is_zero())
            throw validation_error("curve: characteristic 2 requires h != 0 (y^2 = f is inseparable)");
        // plane-model smoothness diagnostic: h and (h')^2 f + (f')^2 share no root
        {
            FPoly hp = fp_derivative(F, h_), fp = fp_derivative(F, f_);
            FPoly disc = fp_add(F, fp_mul(F, fp_mul(F, hp, hp), f_), fp_mul(F, fp, fp));
            plane_smooth_ = fp_gcd(F, h_, disc).degree() <= 0;
        }
        FPoly num = f_, den = fp_mul(F, h_, h_);
        FPoly g = fp_gcd(F, num, den);
        if (g.degree() >= 1) {
            num = fp_div_exact(F, num, g);
            den = fp_div_exact(F, den, g);
        }
        auto monicize = [&F](FPoly& n, FPoly& d) {
            FieldElement il = F.inv(d.c.back());
            n = fp_scale(F, n, il);
            d = fp_scale(F, d, il);
        };
        monicize(num, den);
        // finite even-order poles: substitute z <- z + b/p^m until odd or gone
        std::vector<FPoly> primes;
        for (auto& [prime, mult] : fp_factor(F, den)) primes.push_back(prime);
        for (const FPoly& prime : primes) {
            for (;;) {
                int e = fp_valuation(F, den, prime);
                if (e == 0 || e % 2 == 1) break;
                int m = e / 2;
                FPoly rest = den;
                for (int i = 0; i < e; ++i) rest = fp_div_exact(F, rest, prime);
                std::uint64_t res_order = 1;
                for (int i = 0; i < prime.degree(); ++i) res_order *= F.q();
                FPoly a = fp_mulmod(F, fp_mod(F, num, prime), fp_invmod(F, fp_mod(F, rest, prime), prime), prime);
                FPoly b = fp_powmod(F, a, res_order / 2, prime);  // square root in the residue field
                FPoly pm = fp_one(F);
                for (int i = 0; i < m; ++i) pm = fp_mul(F, pm, prime);
                FPoly shift = fp_mul(F, fp_add(F, fp_mul(F, b, b), fp_mul(F, b, pm)), rest);
                num = fp_add(F, num, shift);
                FPoly gg = fp_gcd(F, num, den);
                if (gg.degree() >= 1) {
                    num = fp_div_exact(F, num, gg);
                    den = fp_div_exact(F, den, gg);
                }
                monicize(num, den);
            }
        }
        // even-order pole at infinity: subtract (b x^m)^2 + b x^m
        for (;;) {
            int dN = num.degree() - den.degree();
            if (num.is_zero() || dN <= 0 || dN % 2 == 1) break;
            int m = dN / 2;
            FieldElement c = num.c.back();  // den is monic
            FieldElement b = F.pow(c, F.q() / 2);
            FPoly t = fp_add(F, fp_shift(F, FPoly{{F.mul(b, b)}}, static_cast<unsigned>(2 * m)),
                             fp_shift(F, FPoly{{b}}, static_cast<unsigned>(m)));
            num = fp_add(F, num, fp_mul(F, t, den));
        }
        u_num_ = num;
        u_den_ = den;
        ramified_.clear();
        int diff_sum = 0;
        for (auto& [prime, mult] : fp_factor(F, den)) {
            if (mult % 2 == 0) throw consistency_error("artin-schreier reduction left an even pole order");
            ramified_.emplace_back(prime, mult);
            diff_sum += (mult + 1) * prime.degree();
        }
        int dN = num.is_zero() ? -1 : num.degree() - den.degree();
        if (dN > 0) {
            if (dN % 2 == 0) throw consistency_error("artin-schreier reduction left an even infinite pole");
            inf_pole_ = dN;
            inf_kind_ = PlaceKind::ramified;
            diff_sum += dN + 1;
        } else {
            inf_pole_ = 0;
            inf_value_ = (dN == 0) ? num.c.back() : F.zero();
            inf_kind_ = (F.absolute_trace(inf_value_) == 0) ? PlaceKind::split : PlaceKind::inert;
        }
        if (diff_sum == 0) {
            if (F.absolute_trace(inf_value_) == 0)
                throw validation_error("curve: y^2 + hy = f is reducible (u lies in the Artin-Schreier image)");
            throw validation_error("curve: model defines a constant-field extension, not a curve");
        }
        if (diff_sum % 2 != 0) throw consistency_error("odd different degree");
        genus_ = diff_sum / 2 - 1;
        if (genus_ < 1)
            throw validation_error("curve: derived genus " + std::to_string(genus_) + " is below 1");
    }

    void init_odd() {
        const FieldCtx& F = base_;
        if (!h_.is_zero())
            throw validation_error("curve: odd characteristic supports only y^2 = f (h must be 0)");
        if (f_.degree() < 3) throw validation_error("curve: deg f >= 3 required in odd characteristic");
        FPoly fp = fp_derivative(F, f_);
        if (fp_gcd(F, f_, fp).degree() != 0) throw validation_error("curve: f must be squarefree");
        genus_ = (f_.degree() - 1) / 2;
        if (genus_ < 1) throw validation_error("curve: derived genus is below 1");
        if (f_.degree() % 2 == 1) {
            inf_kind_ = PlaceKind::ramified;
        } else {
            FieldElement chi = F.pow(f_.c.back(), (F.q() - 1) / 2);
            inf_kind_ = (chi == F.one()) ? PlaceKind::split : PlaceKind::inert;
        }
    }
};

}  // namespace zetadiv
