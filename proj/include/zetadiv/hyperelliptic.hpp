#pragma once

#include <map>
#include <string>

#include "zetadiv/divisor_counts.hpp"

namespace zetadiv {

/// Distribution of divisor-class dimensions at a fixed degree n:
/// h_ni[i] counts classes of degree n and dimension exactly i.
struct DimensionClassTable {
    std::uint64_t q = 0;
    int g = 0;
    int n = 0;
    std::map<int, Int> h_ni;
};

/// Recurrence for the dimension-i class count at degree n of a
/// hyperelliptic field (with A_j = 0 for j < 0):
///   h_{n,i} = A_{n-2i+2} - (q+1) A_{n-2i} + q A_{n-2i-2},  i >= 1.
/// The counting interpretation holds for 0 <= n <= g; for n above the
/// genus every class already has dimension >= 1 by Riemann-Roch and the
/// recurrence stops matching the true counts.
inline Int pellikaan_hni(const LPolynomial& L, int n, int i) {
    if (n < 0 || n > 2 * L.g - 2) throw validation_error("pellikaan_hni: need 0 <= n <= 2g-2");
    if (i < 1) throw validation_error("pellikaan_hni: i must be >= 1 (use h_n0_via_sum for i = 0)");
    auto A = [&](int j) { return j < 0 ? Int(0) : effective_count_series(L, j); };
    Int v = A(n - 2 * i + 2) - Int(L.q + 1) * A(n - 2 * i) + Int(L.q) * A(n - 2 * i - 2);
    if (n <= L.g && v < 0)
        throw consistency_error("pellikaan_hni: negative count at n = " + std::to_string(n) +
                                ", i = " + std::to_string(i) + " (non-hyperelliptic input or bad L)");
    return v;
}

/// h_{n,0} = h - sum_{i>=1} h_{n,i}.  The i-sum telescopes to
/// A_n - q A_{n-2}, so h_{n,0} = h - A_n + q A_{n-2} for n <= g; degrees
/// above g are forced to dimension >= 1 and contribute 0 directly.
inline Int h_n0_via_sum(const LPolynomial& L, int n) {
    if (n < 0 || n > 2 * L.g - 2) throw validation_error("h_n0_via_sum: need 0 <= n <= 2g-2");
    if (n > L.g) return 0;
    Int h = class_number(L);
    Int total = 0;
    for (int i = 1; n - 2 * i + 2 >= 0; ++i) total += pellikaan_hni(L, n, i);
    Int result = h - total;
    if (result < 0) throw consistency_error("h_n0_via_sum: negative count (inconsistent input)");
    return result;
}

/// Closed form for h_{g-k,0} of a hyperelliptic field in terms of the
/// L-coefficients:
///   sum_{i=g-k+1}^{g} a_i + sum_{i=g-k}^{g-1} q^{g-i} a_i
///     + (q^k - 1) sum_{i=0}^{g-k-1} q^{g-i-k} a_i.
inline Int h_gk0_closed(const LPolynomial& L, int k) {
    if (k < 1 || k > L.g) throw validation_error("h_gk0_closed: need 1 <= k <= g");
    if (L.g < 2) throw validation_error("h_gk0_closed: genus must be >= 2");
    Int first = 0, second = 0, third = 0;
    for (int i = L.g - k + 1; i <= L.g; ++i) first += L.coeff(i);
    for (int i = L.g - k; i <= L.g - 1; ++i)
        second += int_pow(Int(L.q), static_cast<unsigned>(L.g - i)) * L.coeff(i);
    for (int i = 0; i <= L.g - k - 1; ++i)
        third += int_pow(Int(L.q), static_cast<unsigned>(L.g - i - k)) * L.coeff(i);
    Int result = first + second + (int_pow(Int(L.q), static_cast<unsigned>(k)) - 1) * third;
    if (result < 0) throw consistency_error("h_gk0_closed: negative count (non-hyperelliptic input?)");
    return result;
}

/// Dimension distribution at degree n (valid counting range n <= g).
inline DimensionClassTable dimension_table(const LPolynomial& L, int n) {
    if (n < 0 || n > L.g) throw validation_error("dimension_table: need 0 <= n <= g");
    DimensionClassTable t;
    t.q = L.q;
    t.g = L.g;
    t.n = n;
    Int sum = 0;
    for (int i = 1; n - 2 * i + 2 >= 0; ++i) {
        Int v = pellikaan_hni(L, n, i);
        if (v != 0) t.h_ni[i] = v;
        sum += v;
    }
    Int h0 = class_number(L) - sum;
    if (h0 < 0) throw consistency_error("dimension_table: negative h_{n,0}");
    if (h0 != 0) t.h_ni[0] = h0;
    return t;
}

/// Report for the "same L-polynomial" caveat: the exact count is valid
/// only under the hyperelliptic hypothesis, which L alone cannot decide.
struct SameLReport {
    std::uint64_t q = 0;
    int g = 0;
    int k = 0;
    bool hyperelliptic_assumed = false;
    std::optional<Int> exact_if_hyperelliptic;
    std::string note;
};

inline SameLReport same_lpoly_distinguisher(const LPolynomial& L, int k, bool hyperelliptic) {
    SameLReport r;
    r.q = L.q;
    r.g = L.g;
    r.k = k;
    r.hyperelliptic_assumed = hyperelliptic;
    if (hyperelliptic && L.g >= 2) {
        r.exact_if_hyperelliptic = h_gk0_closed(L, k);
        r.note = "exact value valid only for hyperelliptic function fields";
        if (L.g == 2) r.note += "; g = 2 is outside the stated hypothesis g > 2 of the closed form";
    } else {
        r.note = "no exact value: distinct function fields can share this L-polynomial";
    }
    return r;
}

}  // namespace zetadiv
