#pragma once

#include <cstdint>
#include <vector>

#include "zetadiv/common.hpp"

namespace zetadiv {

/// Element of F_{p^n}: length-n coefficient vector with entries in [0, p),
/// constant term first.  Arithmetic lives on FieldCtx.
struct FieldElement {
    std::vector<std::uint32_t> c;

    bool operator==(const FieldElement& o) const { return c == o.c; }
    bool operator!=(const FieldElement& o) const { return c != o.c; }
};

/// Exact arithmetic context for F_{p^n}.
///
/// The modulus is the canonical monic irreducible of degree n over F_p:
/// the one minimizing the integer encoding sum_i c_i p^i of its
/// non-leading coefficients (constant term least significant).  This
/// makes construction reproducible across runs and platforms; two calls
/// with the same (p, n) always yield bit-identical contexts.
/// Irreducibility is certified by trial division against every monic
/// polynomial of degree <= n/2.
///
/// Immutable after construction; every operation is a pure function of
/// its inputs, so unrestricted concurrent use is safe.
class FieldCtx {
public:
    static constexpr std::uint64_t kDefaultLimit = std::uint64_t{1} << 24;

    static FieldCtx make(std::uint64_t p, unsigned n, std::uint64_t limit = kDefaultLimit) {
        if (!is_prime_u64(p)) throw validation_error("make_field: p = " + std::to_string(p) + " is not prime");
        if (n < 1) throw validation_error("make_field: extension degree must be >= 1");
        Int size = int_pow(Int(p), n);
        if (size > limit)
            throw validation_error("make_field: p^n = " + size.str() + " exceeds the enumeration limit " +
                                   std::to_string(limit));
        FieldCtx ctx;
        ctx.p_ = p;
        ctx.n_ = n;
        ctx.q_ = static_cast<std::uint64_t>(size);
        ctx.modulus_ = find_canonical_modulus(p, n);
        ctx.build_reduction_table();
        ctx.build_trace_table();
        return ctx;
    }

    std::uint64_t p() const { return p_; }
    unsigned n() const { return n_; }
    std::uint64_t q() const { return q_; }
    /// Monic modulus, constant term first, length n+1.
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    FieldElement zero() const { return FieldElement{std::vector<std::uint32_t>(n_, 0)}; }
    FieldElement one() const { return from_residue(1); }
    /// Class of x; generates the field over F_p as an algebra (not necessarily multiplicatively).
    FieldElement generator() const {
        FieldElement e = zero();
        if (n_ == 1)
            e.c[0] = 0;  // x reduces to 0 mod x in the prime field
        else
            e.c[1] = 1;
        return e;
    }

    FieldElement from_residue(std::uint64_t r) const {
        FieldElement e = zero();
        e.c[0] = static_cast<std::uint32_t>(r % p_);
        return e;
    }

    FieldElement element(std::vector<std::int64_t> coeffs) const {
        if (coeffs.size() > n_) throw validation_error("field element: too many coefficients");
        FieldElement e = zero();
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            std::int64_t r = coeffs[i] % static_cast<std::int64_t>(p_);
            if (r < 0) r += static_cast<std::int64_t>(p_);
            e.c[i] = static_cast<std::uint32_t>(r);
        }
        return e;
    }

    /// Index encoding sum_i c_i p^i; a bijection [0, q) <-> field elements.
    std::uint64_t index_of(const FieldElement& a) const {
        std::uint64_t v = 0;
        for (unsigned i = n_; i-- > 0;) v = v * p_ + a.c[i];
        return v;
    }

    FieldElement element_at(std::uint64_t index) const {
        FieldElement e = zero();
        for (unsigned i = 0; i < n_; ++i) {
            e.c[i] = static_cast<std::uint32_t>(index % p_);
            index /= p_;
        }
        return e;
    }

    bool is_zero(const FieldElement& a) const {
        for (auto x : a.c)
            if (x) return false;
        return true;
    }

    FieldElement add(const FieldElement& a, const FieldElement& b) const {
        FieldElement r = a;
        for (unsigned i = 0; i < n_; ++i) {
            r.c[i] += b.c[i];
            if (r.c[i] >= p_) r.c[i] -= static_cast<std::uint32_t>(p_);
        }
        return r;
    }

    FieldElement neg(const FieldElement& a) const {
        FieldElement r = a;
        for (unsigned i = 0; i < n_; ++i)
            if (r.c[i]) r.c[i] = static_cast<std::uint32_t>(p_) - r.c[i];
        return r;
    }

    FieldElement sub(const FieldElement& a, const FieldElement& b) const { return add(a, neg(b)); }

    FieldElement mul(const FieldElement& a, const FieldElement& b) const {
        // schoolbook product, then reduce x^(n+j) via the precomputed table
        std::vector<std::uint64_t> prod(2 * n_ - 1, 0);
        for (unsigned i = 0; i < n_; ++i) {
            if (!a.c[i]) continue;
            for (unsigned j = 0; j < n_; ++j) prod[i + j] += static_cast<std::uint64_t>(a.c[i]) * b.c[j];
        }
        FieldElement r = zero();
        for (unsigned i = 0; i < n_; ++i) r.c[i] = static_cast<std::uint32_t>(prod[i] % p_);
        for (unsigned j = 0; n_ + j <= 2 * n_ - 2; ++j) {
            std::uint64_t carry = prod[n_ + j] % p_;
            if (!carry) continue;
            const auto& red = reduction_[j];
            for (unsigned i = 0; i < n_; ++i)
                r.c[i] = static_cast<std::uint32_t>((r.c[i] + carry * red[i]) % p_);
        }
        return r;
    }

    FieldElement pow(FieldElement base, std::uint64_t e) const {
        FieldElement r = one();
        while (e) {
            if (e & 1u) r = mul(r, base);
            base = mul(base, base);
            e >>= 1u;
        }
        return r;
    }

    FieldElement inv(const FieldElement& a) const {
        if (is_zero(a)) throw validation_error("field inversion of zero");
        return pow(a, q_ - 2);
    }

    /// Absolute trace down to F_p: sum over the full Frobenius orbit
    /// a + a^p + ... + a^(p^(n-1)).  Linear in the coefficients, so it is
    /// evaluated against precomputed traces of the power basis.
    std::uint64_t absolute_trace(const FieldElement& a) const {
        std::uint64_t t = 0;
        for (unsigned i = 0; i < n_; ++i) t += static_cast<std::uint64_t>(a.c[i]) * trace_basis_[i];
        return t % p_;
    }

    /// Number of roots y in this field of y^2 + h_val*y = f_val.
    ///
    /// char 2, h_val != 0: 2 or 0 by the trace of f/h^2.
    /// char 2, h_val  = 0: exactly 1 (squaring is bijective).
    /// odd char, h_val = 0: 1 + chi(f_val) with chi the quadratic
    /// character by Euler's criterion, chi(0) = 0.
    int quadratic_root_count(const FieldElement& h_val, const FieldElement& f_val) const {
        if (p_ == 2) {
            if (is_zero(h_val)) return 1;
            FieldElement hinv = inv(h_val);
            FieldElement u = mul(f_val, mul(hinv, hinv));
            return absolute_trace(u) == 0 ? 2 : 0;
        }
        if (!is_zero(h_val)) throw validation_error("quadratic_root_count: odd characteristic requires h = 0");
        if (is_zero(f_val)) return 1;
        FieldElement chi = pow(f_val, (q_ - 1) / 2);
        return chi == one() ? 2 : 0;
    }

private:
    std::uint64_t p_ = 0;
    unsigned n_ = 0;
    std::uint64_t q_ = 0;
    std::vector<std::uint32_t> modulus_;
    std::vector<std::vector<std::uint32_t>> reduction_;  // x^(n+j) mod modulus, j = 0..n-2
    std::vector<std::uint32_t> trace_basis_;             // Tr(x^i), i = 0..n-1

    // ---- modulus selection over F_p (plain integer-coefficient polynomials) ----

    static std::vector<std::uint32_t> poly_mod(std::vector<std::uint32_t> a, const std::vector<std::uint32_t>& b,
                                               std::uint64_t p);

    static bool divides(const std::vector<std::uint32_t>& d, const std::vector<std::uint32_t>& f, std::uint64_t p) {
        auto r = poly_mod(f, d, p);
        return r.empty();
    }

    static std::vector<std::uint32_t> find_canonical_modulus(std::uint64_t p, unsigned n) {
        if (n == 1) return {0, 1};  // x
        // candidates in increasing integer encoding; first irreducible wins
        Int total = int_pow(Int(p), n);
        for (Int enc = 0; enc < total; ++enc) {
            std::vector<std::uint32_t> f(n + 1, 0);
            Int t = enc;
            for (unsigned i = 0; i < n; ++i) {
                f[i] = static_cast<std::uint32_t>(t % p);
                t /= p;
            }
            f[n] = 1;
            if (trial_division_irreducible(f, p, n)) return f;
        }
        throw consistency_error("no irreducible polynomial found");  // unreachable
    }

    static bool trial_division_irreducible(const std::vector<std::uint32_t>& f, std::uint64_t p, unsigned n) {
        // trial division by every monic polynomial of degree 1..n/2
        for (unsigned d = 1; 2 * d <= n; ++d) {
            Int count = int_pow(Int(p), d);
            for (Int enc = 0; enc < count; ++enc) {
                std::vector<std::uint32_t> g(d + 1, 0);
                Int t = enc;
                for (unsigned i = 0; i < d; ++i) {
                    g[i] = static_cast<std::uint32_t>(t % p);
                    t /= p;
                }
                g[d] = 1;
                if (divides(g, f, p)) return false;
            }
        }
        return true;
    }

    void build_reduction_table() {
        // reduction_[j] = x^(n+j) mod modulus
        reduction_.assign(n_ >= 1 ? n_ - 1 : 0, std::vector<std::uint32_t>(n_, 0));
        if (n_ == 1) return;
        // x^n = -(c_0 + c_1 x + ... + c_(n-1) x^(n-1))
        std::vector<std::uint32_t> cur(n_);
        for (unsigned i = 0; i < n_; ++i)
            cur[i] = modulus_[i] ? static_cast<std::uint32_t>(p_ - modulus_[i]) : 0;
        reduction_[0] = cur;
        for (unsigned j = 1; j + 1 < n_; ++j) {
            // multiply cur by x, reduce the overflow term through reduction_[0]
            std::uint64_t top = cur[n_ - 1];
            std::vector<std::uint32_t> next(n_, 0);
            for (unsigned i = n_ - 1; i >= 1; --i) next[i] = cur[i - 1];
            next[0] = 0;
            if (top) {
                for (unsigned i = 0; i < n_; ++i)
                    next[i] = static_cast<std::uint32_t>((next[i] + top * reduction_[0][i]) % p_);
            }
            reduction_[j] = next;
            cur = next;
        }
    }

    void build_trace_table() {
        trace_basis_.assign(n_, 0);
        for (unsigned i = 0; i < n_; ++i) {
            FieldElement xi = zero();
            xi.c[i] = 1;
            FieldElement acc = zero(), frob = xi;
            for (unsigned j = 0; j < n_; ++j) {
                acc = add(acc, frob);
                frob = pow(frob, p_);
            }
            for (unsigned k = 1; k < n_; ++k)
                if (acc.c[k]) throw consistency_error("trace of basis element is not in the prime field");
            trace_basis_[i] = acc.c[0];
        }
    }
};

inline std::vector<std::uint32_t> FieldCtx::poly_mod(std::vector<std::uint32_t> a, const std::vector<std::uint32_t>& b,
                                                     std::uint64_t p) {
    auto norm = [](std::vector<std::uint32_t>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    };
    norm(a);
    unsigned db = static_cast<unsigned>(b.size()) - 1;  // b monic
    while (a.size() >= b.size()) {
        std::uint64_t c = a.back();
        std::size_t shift = a.size() - b.size();
        for (unsigned i = 0; i <= db; ++i) {
            std::uint64_t sub = (c * b[i]) % p;
            std::uint64_t cur = a[shift + i];
            a[shift + i] = static_cast<std::uint32_t>((cur + p * p - sub) % p);
        }
        norm(a);
    }
    return a;
}

/// Image of the generator of a subfield inside a larger field with the same
/// characteristic: the first root (in index order) of the subfield modulus.
/// Deterministic; any conjugate choice yields the same point counts.
inline FieldElement embed_generator(const FieldCtx& sub, const FieldCtx& big) {
    if (sub.p() != big.p() || big.n() % sub.n() != 0)
        throw validation_error("embed_generator: not a subfield");
    if (sub.n() == 1) return big.generator();
    const auto& m = sub.modulus();
    for (std::uint64_t idx = 0; idx < big.q(); ++idx) {
        FieldElement cand = big.element_at(idx);
        FieldElement acc = big.zero();
        for (unsigned i = static_cast<unsigned>(m.size()); i-- > 0;) {
            acc = big.mul(acc, cand);
            acc = big.add(acc, big.from_residue(m[i]));
        }
        if (big.is_zero(acc)) return cand;
    }
    throw consistency_error("embed_generator: no root of subfield modulus");
}

/// Map a subfield element through a chosen generator image.
inline FieldElement embed(const FieldCtx& sub, const FieldCtx& big, const FieldElement& a,
                          const FieldElement& gen_image) {
    FieldElement acc = big.zero();
    for (unsigned i = sub.n(); i-- > 0;) {
        acc = big.mul(acc, gen_image);
        acc = big.add(acc, big.from_residue(a.c[i]));
    }
    return acc;
}

}  // namespace zetadiv
