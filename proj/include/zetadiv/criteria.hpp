#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "zetadiv/hyperelliptic.hpp"

namespace zetadiv {

/// The three quantities steering the degree-(g-k) existence bound:
///   C_q = 2(sqrt(q)-1)^2/sqrt(q) for k >= 2, half that for k = 1;
///   l_q(k) = C_q q^(k/2);
///   Delta_q = q^((g-k)/2) for k >= 2, 2 q^((g-1)/2) for k = 1.
struct QConstants {
    SqrtRational C;
    SqrtRational l;
    SqrtRational delta;
};

inline SqrtRational constant_Cq(std::uint64_t q, int k) {
    if (k < 1) throw validation_error("constants: k must be >= 1");
    SqrtRational sq = SqrtRational::sqrt_of(Int(q));
    SqrtRational num = (sq - SqrtRational(1)) * (sq - SqrtRational(1)) / sq;
    return k >= 2 ? SqrtRational(2) * num : num;
}

inline SqrtRational constant_lq(std::uint64_t q, int k) {
    return constant_Cq(q, k) * SqrtRational::pow_half(q, k);
}

inline QConstants constants(std::uint64_t q, int k, int g) {
    if (g < k) throw validation_error("constants: Delta requires g >= k");
    QConstants c;
    c.C = constant_Cq(q, k);
    c.l = constant_lq(q, k);
    c.delta = (k >= 2) ? SqrtRational::pow_half(q, g - k)
                       : SqrtRational(2) * SqrtRational::pow_half(q, g - 1);
    return c;
}

/// The degree-(g-k) theorem applies exactly when l_q(k) >= 1
/// (equivalently -2 log_q C_q <= k; log monotonicity makes them the same
/// test, and the exact Z[sqrt(q)] comparison avoids the k = 4, q = 2 case
/// sitting at l ~ 0.97 where floats are not trustworthy).
inline bool princ_applicable(std::uint64_t q, int k) {
    return constant_lq(q, k) >= SqrtRational(1);
}

/// Least k >= 1 with A_{g-k} < h/l guaranteed, i.e. l_q(k) >= l.
inline int ratio_threshold(std::uint64_t q, const Rat& l) {
    if (l < 1) throw validation_error("ratio_threshold: l must be >= 1");
    SqrtRational target{l};
    for (int k = 1; k <= 4096; ++k)
        if (constant_lq(q, k) >= target) return k;
    throw consistency_error("ratio_threshold: no k found");  // l_q grows by sqrt(q) per step
}

/// Minimal k with the existence theorem applicable, computed from the
/// exact comparison and asserted against the known thresholds
/// (5 for q = 2, 2 for q = 3, 1 for q >= 4).
inline int kmin(std::uint64_t q) {
    if (q < 2) throw validation_error("kmin: q must be a prime power >= 2");
    int k = ratio_threshold(q, Rat(1));
    int expected = (q == 2) ? 5 : (q == 3 ? 2 : 1);
    if (k != expected)
        throw consistency_error("kmin(" + std::to_string(q) + ") computed " + std::to_string(k) +
                                ", expected " + std::to_string(expected));
    return k;
}

/// Outcome of one existence criterion.  `bound` is a certified lower
/// bound on h_{n,0}, present only when the criterion concludes existence.
struct CriterionResult {
    std::string name;
    bool applicable = false;
    bool exists = false;           // conclusion: exists vs unknown
    int degree = -1;               // the divisor degree the conclusion is about
    std::optional<Int> bound;
    std::string justification;
};

/// A_n < h certifies h_{n,0} >= h - A_n; the converse can fail.
inline CriterionResult lemma_pp(const LPolynomial& L, int n, const Int& A_n) {
    if (n < 0) throw validation_error("lemma_pp: degree must be >= 0");
    CriterionResult r;
    r.name = "lemma_pp";
    r.applicable = true;
    r.degree = n;
    Int h = class_number(L);
    if (A_n < h) {
        r.exists = true;
        r.bound = h - A_n;
        r.justification = "A_" + std::to_string(n) + " = " + A_n.str() + " < h = " + h.str();
    } else {
        r.justification = "A_" + std::to_string(n) + " = " + A_n.str() + " >= h = " + h.str() +
                          "; no conclusion (the converse does not hold)";
    }
    return r;
}

/// Raw bound expression h (1 - 1/l_q(k)) + Delta_q, exact.
inline SqrtRational princ_bound_value(std::uint64_t q, int g, int k, const Int& h) {
    QConstants c = constants(q, k, g);
    return SqrtRational{Rat(h)} * (SqrtRational(1) - SqrtRational(1) / c.l) + c.delta;
}

/// Exact ceiling of h (1 - 1/l_q(k)) + Delta_q; sound because the bounded
/// quantity is an integer count.  The underlying inequality separates the
/// A_{g-k} and A_0 terms of the zeta2 sum, so it needs them distinct:
/// g >= 2 and k <= g-1.  At k = g the degree-0 count is known exactly and
/// the formula can overshoot it (which is what the g > 20 remark measures).
inline CriterionResult princ_bound(const LPolynomial& L, int k) {
    if (k < 1 || k > L.g) throw validation_error("princ_bound: need 1 <= k <= g");
    CriterionResult r;
    r.name = "princ";
    r.degree = L.g - k;
    if (!princ_applicable(L.q, k)) {
        r.justification = "l_q(k) < 1: below the applicability threshold";
        return r;
    }
    if (L.g < 2 || k > L.g - 1) {
        r.justification = "derivation requires g >= 2 and k <= g-1; degree 0 is handled exactly";
        return r;
    }
    r.applicable = true;
    r.exists = true;
    SqrtRational value = princ_bound_value(L.q, L.g, k, class_number(L));
    r.bound = value.ceil();
    r.justification = "h(1 - 1/l_q(" + std::to_string(k) + ")) + Delta_q = " + value.to_string();
    return r;
}

/// Coefficient-sign criterion: q^{-k+1} sum_{i<=g+k-1} a_i + sum_{i<=g-k} a_i >= 0
/// (strict for q = 2) forces A_{g-k} < h; the bound is h - A_{g-k}.
inline CriterionResult coropi(const LPolynomial& L, int k) {
    if (k < 1 || k > L.g) throw validation_error("coropi: need 1 <= k <= g");
    CriterionResult r;
    r.name = "coropi";
    r.degree = L.g - k;
    r.applicable = true;
    Int head = 0, tail = 0;
    for (int i = 0; i <= L.g + k - 1 && i <= 2 * L.g; ++i) head += L.coeff(i);
    for (int i = 0; i <= L.g - k; ++i) tail += L.coeff(i);
    // cleared by q^(k-1) > 0, preserving the sign
    Int cleared = head + int_pow(Int(L.q), static_cast<unsigned>(k - 1)) * tail;
    bool ok = (L.q == 2) ? cleared > 0 : cleared >= 0;
    if (!ok) {
        r.justification = "coefficient sum condition fails (cleared value " + cleared.str() + ")";
        return r;
    }
    r.exists = true;
    r.bound = class_number(L) - effective_count_gk(L, k);
    r.justification = "coefficient sum condition holds; bound h - A_{g-k}";
    return r;
}

/// A dimension-zero divisor of degree gamma - 1 always exists when the
/// p-rank gamma is positive.
inline CriterionResult prank_criterion(const LPolynomial& L, std::uint64_t p) {
    CriterionResult r;
    r.name = "prank";
    int gamma = p_rank(L, p);
    if (gamma < 1) {
        r.degree = -1;
        r.justification = "p-rank 0: no nonnegative degree certified";
        return r;
    }
    r.applicable = true;
    r.exists = true;
    r.degree = gamma - 1;
    r.bound = Int(1);
    r.justification = "p-rank " + std::to_string(gamma) + (gamma == L.g ? " (ordinary)" : "") +
                      ": degree " + std::to_string(gamma - 1) + " certified";
    return r;
}

/// Criteria fed by the number of rational places.
///  (a) q >= 4, g >= 2: a non-special degree g-1 divisor exists.
///  (b) B_1 >= g+1: same conclusion with support in rational places.
///  (c) q = 2, g >= 3, B_1 >= 3: degree g-k exists for every k >= 2.
/// Downward propagation from a certified higher degree (subtracting a
/// rational place preserves dimension zero) is handled by the verdict.
inline std::vector<CriterionResult> b1_criteria(const LPolynomial& L, std::int64_t B1, int k) {
    if (k < 1 || k > L.g) throw validation_error("b1_criteria: need 1 <= k <= g");
    std::vector<CriterionResult> out;
    {
        CriterionResult r;
        r.name = "non_special_q4";
        r.degree = L.g - 1;
        if (L.q >= 4 && L.g >= 2) {
            r.applicable = r.exists = true;
            r.bound = Int(1);
            r.justification = "q >= 4 and g >= 2: non-special degree g-1 divisor exists";
        } else {
            r.justification = "requires q >= 4 and g >= 2";
        }
        out.push_back(std::move(r));
    }
    {
        CriterionResult r;
        r.name = "b1_large";
        r.degree = L.g - 1;
        if (B1 >= static_cast<std::int64_t>(L.g) + 1) {
            r.applicable = r.exists = true;
            r.bound = Int(1);
            r.justification = "B_1 >= g+1: non-special degree g-1 divisor exists";
        } else {
            r.justification = "requires B_1 >= g+1";
        }
        out.push_back(std::move(r));
    }
    {
        CriterionResult r;
        r.name = "unefois";
        r.degree = L.g - k;
        if (L.q == 2 && L.g >= 3 && B1 >= 3 && k >= 2) {
            r.applicable = r.exists = true;
            r.bound = Int(1);
            r.justification = "q = 2, g >= 3, B_1 >= 3: degree g-k exists for every k >= 2";
        } else {
            r.justification = "requires q = 2, g >= 3, B_1 >= 3 and k >= 2";
        }
        out.push_back(std::move(r));
    }
    return out;
}

/// Aggregated verdict for degree n = g-k.
struct ExistenceVerdict {
    std::uint64_t q = 0;
    int g = 0;
    int k = 0;
    int n = 0;
    std::vector<CriterionResult> criteria;
    std::optional<Int> best_bound;
    std::optional<Int> exact;
    std::string note;
};

/// Evaluate every applicable criterion at degree n = g-k and keep all of
/// them (auditability); attach the exact count when available.  A bound
/// exceeding a present exact value is a fatal internal inconsistency.
inline ExistenceVerdict verdict(const LPolynomial& L, int k, std::optional<std::int64_t> B1,
                                bool hyperelliptic) {
    lpoly_require_valid(L);
    if (k < 1 || k > L.g) throw validation_error("verdict: need 1 <= k <= g");
    ExistenceVerdict v;
    v.q = L.q;
    v.g = L.g;
    v.k = k;
    v.n = L.g - k;
    std::uint64_t p = smallest_prime_factor(L.q);
    Int h = class_number(L);

    v.criteria.push_back(lemma_pp(L, v.n, effective_count_series(L, v.n)));
    v.criteria.push_back(princ_bound(L, k));
    v.criteria.push_back(coropi(L, k));
    CriterionResult prank = prank_criterion(L, p);
    if (prank.degree == v.n) v.criteria.push_back(prank);
    std::vector<CriterionResult> above;  // certified at a degree > n: induction sources
    if (prank.exists && prank.degree > v.n) above.push_back(prank);
    if (B1) {
        for (auto& r : b1_criteria(L, *B1, k)) {
            if (r.degree == v.n)
                v.criteria.push_back(r);
            else if (r.exists && r.degree > v.n)
                above.push_back(r);
            else
                v.criteria.push_back(r);  // inapplicable entries stay visible
        }
        for (const auto& src : above) {
            CriterionResult r;
            r.name = "induction";
            r.degree = v.n;
            if (*B1 >= 1) {
                r.applicable = r.exists = true;
                r.bound = Int(1);
                r.justification = "subtracting a rational place from the degree-" + std::to_string(src.degree) +
                                  " divisor of " + src.name;
            } else {
                r.justification = "no rational place available to step down from " + src.name;
            }
            v.criteria.push_back(std::move(r));
        }
    }
    if (v.n == 0) {
        // a degree-0 class has dimension zero exactly when it is not principal
        v.exact = h - 1;
        v.note = "degree 0: exact count h - 1 (non-principal classes)";
    }
    if (hyperelliptic && L.g >= 2) {
        Int exact = h_gk0_closed(L, k);
        if (v.exact && *v.exact != exact)
            throw consistency_error("verdict: hyperelliptic closed form disagrees with the degree-0 count");
        Int via_sum = h_n0_via_sum(L, v.n);
        if (via_sum != exact)
            throw consistency_error("verdict: closed form and dimension-sum disagree");
        v.exact = exact;
        if (L.g == 2) v.note = "g = 2 is outside the stated hypothesis g > 2 of the closed form";
    }
    for (const auto& r : v.criteria) {
        if (!r.exists || !r.bound) continue;
        if (v.exact && *r.bound > *v.exact)
            throw consistency_error("verdict: criterion " + r.name + " bound " + r.bound->str() +
                                    " exceeds exact count " + v.exact->str());
        if (!v.best_bound || *r.bound > *v.best_bound) v.best_bound = *r.bound;
    }
    return v;
}

}  // namespace zetadiv
