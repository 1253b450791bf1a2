#pragma once

#include <map>

#include "zetadiv/criteria.hpp"

namespace zetadiv {

/// Asymptotic place densities beta_m = lim B_m / g of a family of function
/// fields.  Entries are exact elements of Q(sqrt(q)) (rationals included);
/// admissibility is the Drinfeld-Vladut-type constraint
/// sum m beta_m / (q^{m/2} - 1) <= 1, checked exactly.
struct BetaSequence {
    std::uint64_t q = 0;
    std::map<int, SqrtRational> entries;
};

inline SqrtRational beta_dv_sum(const BetaSequence& beta) {
    SqrtRational total(0);
    for (const auto& [m, b] : beta.entries) {
        if (m < 1) throw validation_error("beta sequence: degrees must be >= 1");
        if (b.sign() < 0) throw validation_error("beta sequence: entries must be >= 0");
        total = total + SqrtRational(m) * b / (SqrtRational::pow_half(beta.q, m) - SqrtRational(1));
    }
    return total;
}

inline bool beta_admissible(const BetaSequence& beta) { return beta_dv_sum(beta) <= SqrtRational(1); }

/// Threshold sum g * sum m beta_m / (q^m - 1) gating the A-estimate.
inline SqrtRational beta_threshold(const BetaSequence& beta, int g) {
    SqrtRational total(0);
    for (const auto& [m, b] : beta.entries)
        total = total + SqrtRational(m) * b / SqrtRational(int_pow(Int(beta.q), static_cast<unsigned>(m)) - 1);
    return SqrtRational(g) * total;
}

/// Probability lower bound 1 - 1/l_q(k) for drawing a dimension-zero
/// divisor of degree g-k uniformly among degree-(g-k) divisors.
inline SqrtRational draw_probability(std::uint64_t q, int k) {
    if (!princ_applicable(q, k))
        throw validation_error("draw_probability: k is below the applicability threshold for q = " +
                               std::to_string(q));
    return SqrtRational(1) - SqrtRational(1) / constant_lq(q, k);
}

inline Real log_q(std::uint64_t q, const Real& x) { return log(x) / log(Real(q)); }

/// Leading term of log_q h for an admissible family:
/// g (1 + sum beta_m log_q(q^m/(q^m-1))); the o(g) term is unmodeled.
inline Real asymptotic_h_estimate(const BetaSequence& beta, int g) {
    if (!beta_admissible(beta)) throw validation_error("asymptotic_h_estimate: inadmissible beta sequence");
    Real sum = 0;
    for (const auto& [m, b] : beta.entries) {
        Real qm = Real(int_pow(Int(beta.q), static_cast<unsigned>(m)));
        sum += b.to_real() * log_q(beta.q, qm / (qm - 1));
    }
    return Real(g) * (Real(1) + sum);
}

struct AEstimate {
    bool threshold_cleared = false;
    SqrtRational threshold;      // exact gate g sum m beta_m/(q^m - 1)
    Real estimate = 0;           // leading term of log_q A_a, valid when cleared
};

/// Leading term of log_q A_a: a + g sum beta_m log_q(q^m/(q^m-1)),
/// subject to a clearing the exact threshold.
inline AEstimate asymptotic_A_estimate(const BetaSequence& beta, int degree, int g) {
    if (!beta_admissible(beta)) throw validation_error("asymptotic_A_estimate: inadmissible beta sequence");
    AEstimate e;
    e.threshold = beta_threshold(beta, g);
    e.threshold_cleared = SqrtRational(degree) >= e.threshold;
    if (!e.threshold_cleared) return e;
    Real sum = 0;
    for (const auto& [m, b] : beta.entries) {
        Real qm = Real(int_pow(Int(beta.q), static_cast<unsigned>(m)));
        sum += b.to_real() * log_q(beta.q, qm / (qm - 1));
    }
    e.estimate = Real(degree) + Real(g) * sum;
    return e;
}

struct MarginReport {
    int degree = 0;            // ceil(g(1-epsilon))
    Real h_estimate = 0;
    Real a_estimate = 0;
    Real margin = 0;           // h_estimate - log_q(l) - a_estimate
    int sign = 0;              // +1 / -1, or 0 when within 1e-9 of zero (indeterminate)
    bool threshold_cleared = false;
};

/// Leading-term margin of the comparison l * A_{ceil(g(1-eps))} < h.
/// Heuristic by construction: the o(g) corrections are not modeled, so a
/// positive margin is evidence, not a certificate.
inline MarginReport doubledivspec_margin(const BetaSequence& beta, const Rat& epsilon, const Rat& l, int g) {
    if (!(epsilon > 0 && epsilon < Rat(1, 2)))
        throw validation_error("doubledivspec_margin: need 0 < epsilon < 1/2");
    if (l < 1) throw validation_error("doubledivspec_margin: need l >= 1");
    if (g < 1) throw validation_error("doubledivspec_margin: need g >= 1");
    MarginReport r;
    Rat raw = Rat(g) * (Rat(1) - epsilon);
    r.degree = static_cast<int>(ceil_rat(raw));
    r.h_estimate = asymptotic_h_estimate(beta, g);
    AEstimate a = asymptotic_A_estimate(beta, r.degree, g);
    r.threshold_cleared = a.threshold_cleared;
    r.a_estimate = a.estimate;
    r.margin = r.h_estimate - log_q(beta.q, Real(boost::multiprecision::numerator(l)) /
                                                Real(boost::multiprecision::denominator(l))) -
               r.a_estimate;
    Real band = Real("1e-9");
    r.sign = (r.margin > band) ? 1 : (r.margin < -band ? -1 : 0);
    return r;
}

}  // namespace zetadiv
