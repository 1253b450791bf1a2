#pragma once

#include <string>
#include <vector>

#include "zetadiv/curve.hpp"
#include "zetadiv/lpoly.hpp"
#include "zetadiv/sqrt_rational.hpp"

namespace zetadiv {

/// Effective-divisor counts A_0..A_max with their derivation route.
struct DivisorCountTable {
    enum class Source { series, closed_form, oracle };
    std::uint64_t q = 0;
    int g = 0;
    std::vector<Int> A;
    Source source = Source::series;
};

/// A_n = sum_{i=0}^{n} (q^{n-i+1} - 1)/(q - 1) a_i, the t^n coefficient of
/// L(t)/((1-t)(1-qt)).  Valid for every n >= 0.
inline Int effective_count_series(const LPolynomial& L, int n) {
    if (n < 0) return 0;
    Int total = 0;
    Int qn1 = int_pow(Int(L.q), static_cast<unsigned>(n + 1));
    Int denom = Int(L.q) - 1;
    for (int i = 0; i <= n && i <= 2 * L.g; ++i) {
        total += (qn1 - 1) / denom * L.coeff(i);
        qn1 /= Int(L.q);  // q^{n-i+1} steps down with i; exact since only powers of q appear
    }
    return total;
}

/// A_{g-k} through the degree-shift closed form
///   (q-1) A_{g-k} = q^{-k+1}(h - sum_{i<=g+k-1} a_i) - sum_{i<=g-k} a_i,
/// with q^{k-1} cleared symbolically so every intermediate stays integral.
inline Int effective_count_gk(const LPolynomial& L, int k) {
    if (k < 1 || k > L.g) throw validation_error("effective_count_gk: need 1 <= k <= g");
    Int h = class_number(L);
    Int head = 0, tail = 0;
    for (int i = 0; i <= L.g + k - 1 && i <= 2 * L.g; ++i) head += L.coeff(i);
    for (int i = 0; i <= L.g - k; ++i) tail += L.coeff(i);
    Int qk1 = int_pow(Int(L.q), static_cast<unsigned>(k - 1));
    Int cleared = (h - head) - qk1 * tail;  // equals (q-1) q^{k-1} A_{g-k}
    Int denom = (Int(L.q) - 1) * qk1;
    if (cleared % denom != 0) throw consistency_error("effective_count_gk: non-integral result (invalid L)");
    return cleared / denom;
}

/// Independent oracle: A_n as the t^n coefficient of prod_d (1-t^d)^{-B_d},
/// computed from place counts alone.  Never touches L.
inline Int effective_count_oracle(const PlaceTable& places, int n) {
    if (n < 0) return 0;
    if (places.max_degree < n && n > 0)
        throw validation_error("effective_count_oracle: place table depth " + std::to_string(places.max_degree) +
                               " is insufficient for degree " + std::to_string(n));
    std::vector<Int> A(static_cast<std::size_t>(n) + 1, Int(0));
    A[0] = 1;
    for (int d = 1; d <= n; ++d) {
        std::int64_t Bd = places.B[static_cast<std::size_t>(d) - 1];
        if (Bd == 0) continue;
        std::vector<Int> next(A.size(), Int(0));
        for (std::size_t i = 0; i < A.size(); ++i) {
            if (A[i] == 0) continue;
            // (1-t^d)^{-B} = sum_j C(B-1+j, j) t^{dj}
            Int binom = 1;
            for (std::size_t j = 0; i + static_cast<std::size_t>(d) * j < A.size(); ++j) {
                if (j > 0) {
                    binom *= Int(Bd) - 1 + Int(j);
                    binom /= Int(j);
                }
                next[i + static_cast<std::size_t>(d) * j] += A[i] * binom;
            }
        }
        A = std::move(next);
    }
    return A[static_cast<std::size_t>(n)];
}

inline DivisorCountTable series_table(const LPolynomial& L, int n_max) {
    DivisorCountTable t;
    t.q = L.q;
    t.g = L.g;
    t.source = DivisorCountTable::Source::series;
    for (int n = 0; n <= n_max; ++n) t.A.push_back(effective_count_series(L, n));
    return t;
}

inline DivisorCountTable oracle_table(const PlaceTable& places, int g, int n_max) {
    DivisorCountTable t;
    t.q = places.q;
    t.g = g;
    t.source = DivisorCountTable::Source::oracle;
    for (int n = 0; n <= n_max; ++n) t.A.push_back(effective_count_oracle(places, n));
    return t;
}

/// Recover L from oracle values A_0..A_g by multiplying the zeta series by
/// (1-t)(1-qt), then completing with the functional equation.
inline LPolynomial lpoly_from_effective_counts(std::uint64_t q, int g, const std::vector<Int>& A) {
    if (g < 1) throw validation_error("lpoly_from_effective_counts: genus must be >= 1");
    if (A.size() < static_cast<std::size_t>(g + 1))
        throw validation_error("lpoly_from_effective_counts: need A_0..A_g");
    std::vector<Int> a(static_cast<std::size_t>(g) + 1, Int(0));
    for (int i = 0; i <= g; ++i) {
        a[static_cast<std::size_t>(i)] = A[static_cast<std::size_t>(i)];
        if (i >= 1) a[static_cast<std::size_t>(i)] -= Int(q + 1) * A[static_cast<std::size_t>(i) - 1];
        if (i >= 2) a[static_cast<std::size_t>(i)] += Int(q) * A[static_cast<std::size_t>(i) - 2];
    }
    if (a[0] != 1) throw validation_error("lpoly_from_effective_counts: A_0 != 1");
    return lpoly_from_coefficients(q, g, a);
}

/// Lemma-style floor: with B_1 >= m, A_n >= m A_{n-1} - m(m-1)/2 A_{n-2}
/// for all n >= 2.  Returns the violating indices (empty means pass).
inline std::vector<int> check_b1_recurrence(const std::vector<Int>& A, std::int64_t m) {
    std::vector<int> violations;
    Int mm = Int(m) * (Int(m) - 1) / 2;
    for (std::size_t n = 2; n < A.size(); ++n)
        if (A[n] < Int(m) * A[n - 1] - mm * A[n - 2]) violations.push_back(static_cast<int>(n));
    return violations;
}

/// Identity tying A_n to A_{2g-2-n}:
///   A_n = q^{n+1-g} A_{2g-2-n} + h (q^{n+1-g} - 1)/(q - 1),
/// checked in exact rational arithmetic for 0 <= n <= 2g-2.
inline bool zeta1_holds(const LPolynomial& L, const std::vector<Int>& A, std::string* detail = nullptr) {
    Int h = class_number(L);
    for (int n = 0; n <= 2 * L.g - 2; ++n) {
        if (static_cast<std::size_t>(2 * L.g - 2) >= A.size()) break;
        Rat shift = Rat(int_pow(Int(L.q), static_cast<unsigned>(n + 1)), int_pow(Int(L.q), static_cast<unsigned>(L.g)));
        Rat rhs = shift * Rat(A[static_cast<std::size_t>(2 * L.g - 2 - n)]) + Rat(h) * (shift - 1) / Rat(Int(L.q) - 1);
        if (Rat(A[static_cast<std::size_t>(n)]) != rhs) {
            if (detail) *detail = "zeta1 fails at n = " + std::to_string(n);
            return false;
        }
    }
    return true;
}

/// Inequality bounding the small-degree counts:
///   2 sum_{n=0}^{g-2} q^{(g-1-n)/2} A_n + A_{g-1} <= h/(sqrt(q)-1)^2,
/// decided exactly in Z[sqrt(q)].
inline bool zeta2_holds(const LPolynomial& L, std::string* detail = nullptr) {
    if (L.g < 1) return true;
    SqrtRational lhs(0);
    for (int n = 0; n <= L.g - 2; ++n)
        lhs = lhs + SqrtRational(2) * SqrtRational::pow_half(L.q, L.g - 1 - n) *
                        SqrtRational(effective_count_series(L, n));
    lhs = lhs + SqrtRational(effective_count_series(L, L.g - 1));
    SqrtRational sq = SqrtRational::sqrt_of(Int(L.q));
    SqrtRational denom = (sq - SqrtRational(1)) * (sq - SqrtRational(1));
    SqrtRational rhs = SqrtRational(class_number(L)) / denom;
    if (lhs <= rhs) return true;
    if (detail) *detail = "zeta2 inequality fails";
    return false;
}

struct LDiagnostics {
    std::vector<std::string> failures;
    bool pass() const { return failures.empty(); }
};

/// Full validity report: structure (a_0, functional equation, h >= 1)
/// plus the zeta2 inequality.
inline LDiagnostics validate_lpoly(const LPolynomial& L) {
    LDiagnostics d;
    d.failures = lpoly_structural_failures(L);
    if (d.failures.empty()) {
        std::string msg;
        if (!zeta2_holds(L, &msg)) d.failures.push_back(msg);
    }
    return d;
}

}  // namespace zetadiv
