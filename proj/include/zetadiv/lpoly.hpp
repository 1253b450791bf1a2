#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "zetadiv/common.hpp"

namespace zetadiv {

/// Numerator L(t) = sum a_i t^i of the zeta function of a genus-g function
/// field over F_q.  Coefficients are arbitrary-precision, a_0 = 1, and the
/// functional equation a_{2g-i} = q^{g-i} a_i ties the two halves together.
struct LPolynomial {
    std::uint64_t q = 0;
    int g = 0;
    std::vector<Int> a;  // size 2g + 1

    const Int& coeff(int i) const { return a[static_cast<std::size_t>(i)]; }
};

/// Structural invariant check: a_0 = 1, functional equation, L(1) >= 1.
/// (The analytic (zeta2) inequality lives with the divisor counts.)
inline std::vector<std::string> lpoly_structural_failures(const LPolynomial& L) {
    std::vector<std::string> fails;
    if (L.g < 1) fails.push_back("genus must be >= 1");
    if (L.a.size() != static_cast<std::size_t>(2 * L.g + 1)) fails.push_back("coefficient count is not 2g+1");
    if (!fails.empty()) return fails;
    if (L.a[0] != 1) fails.push_back("a_0 != 1");
    for (int i = 0; i <= L.g; ++i) {
        if (L.coeff(2 * L.g - i) != int_pow(Int(L.q), static_cast<unsigned>(L.g - i)) * L.coeff(i)) {
            fails.push_back("functional equation fails at i = " + std::to_string(i));
            break;
        }
    }
    Int h = 0;
    for (const auto& ai : L.a) h += ai;
    if (h < 1) fails.push_back("h = L(1) < 1");
    return fails;
}

inline void lpoly_require_valid(const LPolynomial& L) {
    auto fails = lpoly_structural_failures(L);
    if (!fails.empty()) throw validation_error("invalid L-polynomial: " + fails.front());
}

/// Class number h = L(1).
inline Int class_number(const LPolynomial& L) {
    Int h = 0;
    for (const auto& ai : L.a) h += ai;
    return h;
}

/// Build L(t) from point counts N_1..N_g via the Newton recurrence
/// m a_m = -sum_{j=1..m} S_j a_{m-j} with S_m = q^m + 1 - N_m, then
/// complete with the functional equation.  Every division must be exact.
inline LPolynomial lpoly_from_counts(std::uint64_t q, int g, const std::vector<std::int64_t>& N) {
    if (g < 1) throw validation_error("lpoly_from_counts: genus must be >= 1");
    if (N.size() < static_cast<std::size_t>(g)) throw validation_error("lpoly_from_counts: need N_1..N_g");
    for (int m = 1; m <= g; ++m)
        if (N[static_cast<std::size_t>(m) - 1] < 0) throw validation_error("lpoly_from_counts: negative count");
    std::vector<Int> S;
    for (int m = 1; m <= g; ++m) S.push_back(int_pow(Int(q), static_cast<unsigned>(m)) + 1 - N[m - 1]);
    LPolynomial L;
    L.q = q;
    L.g = g;
    L.a.assign(static_cast<std::size_t>(2 * g + 1), Int(0));
    L.a[0] = 1;
    for (int m = 1; m <= g; ++m) {
        Int s = 0;
        for (int j = 1; j <= m; ++j) s += S[j - 1] * L.a[static_cast<std::size_t>(m - j)];
        if (s % m != 0)
            throw consistency_error("lpoly_from_counts: Newton recurrence division by " + std::to_string(m) +
                                    " is not exact (inconsistent counts)");
        L.a[static_cast<std::size_t>(m)] = -s / m;
    }
    for (int i = g - 1; i >= 0; --i)
        L.a[static_cast<std::size_t>(2 * g - i)] = int_pow(Int(q), static_cast<unsigned>(g - i)) * L.a[i];
    if (class_number(L) < 1) throw consistency_error("lpoly_from_counts: L(1) < 1");
    return L;
}

/// Complete a_0..a_g to the full coefficient vector; a fully specified
/// input is cross-checked against the functional equation instead.
inline LPolynomial lpoly_from_coefficients(std::uint64_t q, int g, const std::vector<Int>& coeffs) {
    if (g < 1) throw validation_error("L-polynomial: genus must be >= 1");
    LPolynomial L;
    L.q = q;
    L.g = g;
    if (coeffs.size() == static_cast<std::size_t>(g + 1)) {
        L.a = coeffs;
        L.a.resize(static_cast<std::size_t>(2 * g + 1), Int(0));
        for (int i = g - 1; i >= 0; --i)
            L.a[static_cast<std::size_t>(2 * g - i)] = int_pow(Int(q), static_cast<unsigned>(g - i)) * L.a[i];
    } else if (coeffs.size() == static_cast<std::size_t>(2 * g + 1)) {
        L.a = coeffs;
    } else {
        throw validation_error("L-polynomial: expected g+1 or 2g+1 coefficients");
    }
    auto fails = lpoly_structural_failures(L);
    if (!fails.empty()) throw validation_error("invalid L-polynomial: " + fails.front());
    return L;
}

/// Predicted N_m for any m >= 1 by running Newton identities forward.
inline std::vector<Int> predicted_counts(const LPolynomial& L, int up_to) {
    std::vector<Int> S, N;
    for (int k = 1; k <= up_to; ++k) {
        Int s = 0;
        if (k <= 2 * L.g) s += Int(k) * L.coeff(k);
        for (int j = 1; j < k; ++j)
            if (k - j <= 2 * L.g) s += S[static_cast<std::size_t>(j) - 1] * L.coeff(k - j);
        S.push_back(-s);
        N.push_back(int_pow(Int(L.q), static_cast<unsigned>(k)) + 1 - S.back());
    }
    return N;
}

/// p-rank gamma = deg(L mod p); the field is ordinary iff gamma = g,
/// equivalently iff p does not divide a_g.
inline int p_rank(const LPolynomial& L, std::uint64_t p) {
    if (L.q % p != 0) throw validation_error("p_rank: p is not the characteristic of F_q");
    {
        std::uint64_t t = L.q;
        while (t % p == 0) t /= p;
        if (t != 1) throw validation_error("p_rank: p is not the characteristic of F_q");
    }
    int deg = 0;
    for (int i = 2 * L.g; i >= 0; --i) {
        if (L.coeff(i) % Int(p) != 0) {
            deg = i;
            break;
        }
    }
    // a_0 = 1 keeps the reduction nonzero, so deg is well defined
    if (deg > L.g) throw consistency_error("p_rank exceeds genus; invalid L-polynomial");
    return deg;
}

inline bool is_ordinary(const LPolynomial& L, std::uint64_t p) { return p_rank(L, p) == L.g; }

/// Lachaud--Martin-Deschamps floor: h >= ceil(q^(g-1) (q-1)^2 / ((q+1)(g+1))).
inline Int lmd_lower_bound(std::uint64_t q, int g) {
    if (g < 1) throw validation_error("lmd_lower_bound: genus must be >= 1");
    Rat value = Rat(int_pow(Int(q), static_cast<unsigned>(g - 1)) * Int(q - 1) * Int(q - 1),
                    Int(q + 1) * Int(g + 1));
    return ceil_rat(value);
}

struct ZetaSummary {
    LPolynomial L;
    Int h;
    int p_rank = 0;
    bool ordinary = false;
    Int lmd_floor;
};

inline ZetaSummary summarize(const LPolynomial& L) {
    std::uint64_t p = smallest_prime_factor(L.q);
    ZetaSummary s;
    s.L = L;
    s.h = class_number(L);
    s.p_rank = p_rank(L, p);
    s.ordinary = (s.p_rank == L.g);
    s.lmd_floor = lmd_lower_bound(L.q, L.g);
    return s;
}

}  // namespace zetadiv
