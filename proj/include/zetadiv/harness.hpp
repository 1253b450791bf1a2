#pragma once

#include <algorithm>
#include <cctype>
#include <optional>
#include <string>
#include <vector>

#include "zetadiv/io.hpp"

namespace zetadiv {

/// One corpus item: a curve or an L-polynomial plus expected values, each
/// carrying its provenance.  Values tagged `paper_unreproduced` are
/// figures that recomputation contradicts; they are asserted NOT to match,
/// so that drift in either direction is caught.
struct ExpectedValue {
    enum class Provenance { paper, derived, paper_unreproduced };
    std::string name;
    Json value;
    Provenance provenance = Provenance::derived;
};

struct CorpusEntry {
    std::string label;
    std::optional<Json> curve_json;
    std::optional<Json> lpoly_json;
    bool hyperelliptic = false;
    std::optional<std::int64_t> b1_override;
    std::vector<ExpectedValue> expected;
};

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct EntryReport {
    std::string label;
    std::vector<CheckResult> checks;
    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

struct CorpusSummary {
    std::vector<EntryReport> reports;
    int entries() const { return static_cast<int>(reports.size()); }
    int failures() const {
        int n = 0;
        for (const auto& r : reports)
            if (!r.pass()) ++n;
        return n;
    }
};

inline CorpusEntry parse_corpus_entry(const Json& j) {
    CorpusEntry e;
    e.label = j.value("label", std::string("unnamed"));
    if (j.contains("curve")) e.curve_json = j.at("curve");
    if (j.contains("lpoly")) e.lpoly_json = j.at("lpoly");
    if (!e.curve_json && !e.lpoly_json)
        throw validation_error("corpus entry '" + e.label + "': needs 'curve' or 'lpoly'");
    if (e.curve_json && e.lpoly_json)
        throw validation_error("corpus entry '" + e.label + "': 'curve' and 'lpoly' are exclusive");
    e.hyperelliptic = j.value("hyperelliptic", e.curve_json.has_value());
    if (j.contains("b1")) e.b1_override = j.at("b1").get<std::int64_t>();
    if (j.contains("expected")) {
        for (const auto& x : j.at("expected")) {
            ExpectedValue ev;
            ev.name = x.at("name").get<std::string>();
            ev.value = x.at("value");
            std::string prov = x.at("provenance").get<std::string>();
            if (prov == "paper")
                ev.provenance = ExpectedValue::Provenance::paper;
            else if (prov == "derived")
                ev.provenance = ExpectedValue::Provenance::derived;
            else if (prov == "paper-unreproduced")
                ev.provenance = ExpectedValue::Provenance::paper_unreproduced;
            else
                throw validation_error("corpus entry '" + e.label + "': unknown provenance '" + prov + "'");
            e.expected.push_back(std::move(ev));
        }
    }
    return e;
}

namespace detail {

inline void add_check(EntryReport& rep, const std::string& name, bool pass, const std::string& detail = "") {
    rep.checks.push_back({name, pass, detail});
}

/// Evaluate a named quantity ("h", "genus", "gamma", "ordinary", "L",
/// "A:n", "hn0:n", "N:m", "B:d", "coropi:k", "princ:k") for comparison
/// against an expected value.
inline Json evaluate_quantity(const std::string& name, const LPolynomial& L, bool hyperelliptic,
                              const PlaceTable* places, int derived_genus) {
    auto index_of = [&](const std::string& s) { return std::stoi(s.substr(s.find(':') + 1)); };
    std::uint64_t p = smallest_prime_factor(L.q);
    if (name == "h") return int_to_json(class_number(L));
    if (name == "genus") return Json(derived_genus);
    if (name == "gamma") return Json(p_rank(L, p));
    if (name == "ordinary") return Json(is_ordinary(L, p));
    if (name == "L") {
        Json a = Json::array();
        for (const auto& ai : L.a) a.push_back(int_to_json(ai));
        return a;
    }
    if (name.rfind("A:", 0) == 0) return int_to_json(effective_count_series(L, index_of(name)));
    if (name.rfind("hn0:", 0) == 0) {
        if (!hyperelliptic) throw validation_error("expected hn0 on a non-hyperelliptic entry");
        return int_to_json(h_n0_via_sum(L, index_of(name)));
    }
    if (name.rfind("N:", 0) == 0) {
        if (!places) throw validation_error("expected N without a place table");
        return Json(places->N.at(static_cast<std::size_t>(index_of(name)) - 1));
    }
    if (name.rfind("B:", 0) == 0) {
        if (!places) throw validation_error("expected B without a place table");
        return Json(places->B.at(static_cast<std::size_t>(index_of(name)) - 1));
    }
    if (name.rfind("coropi:", 0) == 0) {
        auto r = coropi(L, index_of(name));
        return r.bound ? int_to_json(*r.bound) : Json();
    }
    if (name.rfind("princ:", 0) == 0) {
        auto r = princ_bound(L, index_of(name));
        return r.bound ? int_to_json(*r.bound) : Json();
    }
    throw validation_error("unknown expected-value name '" + name + "'");
}

/// Compare expected against computed values, treating integers given as
/// JSON numbers and as decimal strings alike.
inline bool json_value_equal(const Json& a, const Json& b) {
    if (a.is_array() || b.is_array()) {
        if (!a.is_array() || !b.is_array() || a.size() != b.size()) return false;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (!json_value_equal(a[i], b[i])) return false;
        return true;
    }
    auto canon = [](const Json& j) -> Json {
        if (j.is_number_integer()) return Json(Int(j.get<std::int64_t>()).str());
        if (j.is_string()) {
            const std::string& s = j.get_ref<const std::string&>();
            if (!s.empty() && (s[0] == '-' || std::isdigit(static_cast<unsigned char>(s[0])))) {
                try {
                    return Json(Int(s).str());
                } catch (...) {
                }
            }
        }
        return j;
    };
    return canon(a) == canon(b);
}

}  // namespace detail

/// Run the full verification pipeline on one entry:
/// place/point consistency, the two L routes, the zeta identities, the
/// three A_n routes, the hyperelliptic cross-checks, bound soundness, and
/// the expected-value comparisons.
inline EntryReport verify_curve(const CorpusEntry& entry,
                                std::uint64_t limit = FieldCtx::kDefaultLimit) {
    EntryReport rep;
    rep.label = entry.label;
    using detail::add_check;
    try {
        LPolynomial L;
        std::optional<PlaceTable> places;
        std::optional<CurveModel> curve;
        int derived_genus = 0;
        std::optional<std::int64_t> b1 = entry.b1_override;

        if (entry.curve_json) {
            curve = parse_curve_json(*entry.curve_json);
            int g = curve->genus();
            derived_genus = g;
            std::vector<std::int64_t> N;
            for (int m = 1; m <= 2 * g; ++m) N.push_back(curve->count_points(m, limit));
            int D = std::max(2 * g - 2, 1);
            places = curve->enumerate_places(D, limit);  // cross-checks Moebius internally
            add_check(rep, "places_consistent", true);
            if (!b1) b1 = places->B[0];

            L = lpoly_from_counts(curve->q(), g, N);
            // forward prediction: L built on N_1..N_g must reproduce N_{g+1}..N_{2g}
            auto pred = predicted_counts(L, 2 * g);
            bool pred_ok = true;
            for (int m = g + 1; m <= 2 * g; ++m)
                if (pred[static_cast<std::size_t>(m) - 1] != N[static_cast<std::size_t>(m) - 1]) pred_ok = false;
            add_check(rep, "count_prediction", pred_ok);

            // oracle route: places -> A-series -> L, never touching the Newton path
            // (D = max(2g-2, 1) >= g covers A_0..A_g)
            std::vector<Int> A_oracle;
            for (int n = 0; n <= g; ++n) A_oracle.push_back(effective_count_oracle(*places, n));
            LPolynomial L2 = lpoly_from_effective_counts(curve->q(), g, A_oracle);
            add_check(rep, "oracle_lpoly_match", L2.a == L.a);
        } else {
            bool hyper = false;
            L = parse_lpoly_json(*entry.lpoly_json, &hyper);
            derived_genus = L.g;
        }

        auto diag = validate_lpoly(L);
        add_check(rep, "lpoly_valid", diag.pass(), diag.pass() ? "" : diag.failures.front());

        // three-way A_n agreement over the canonical-range degrees
        bool three_way = true;
        std::string detail_msg;
        for (int n = 0; n <= 2 * L.g - 2; ++n) {
            Int series = effective_count_series(L, n);
            if (places && n <= places->max_degree) {
                Int oracle = effective_count_oracle(*places, n);
                if (oracle != series) {
                    three_way = false;
                    detail_msg = "series vs oracle at n = " + std::to_string(n);
                }
            }
            int k = L.g - n;
            if (k >= 1 && k <= L.g) {
                if (effective_count_gk(L, k) != series) {
                    three_way = false;
                    detail_msg = "series vs closed form at n = " + std::to_string(n);
                }
            }
        }
        add_check(rep, "a_three_way", three_way, detail_msg);

        {
            std::vector<Int> A;
            for (int n = 0; n <= std::max(2 * L.g - 2, 0); ++n) A.push_back(effective_count_series(L, n));
            std::string msg;
            add_check(rep, "zeta1", zeta1_holds(L, A, &msg), msg);
            add_check(rep, "zeta2", zeta2_holds(L, &msg), msg);
            if (b1 && *b1 >= 1) {
                bool mono = true;
                for (std::size_t i = 1; i < A.size(); ++i)
                    if (A[i] < A[i - 1]) mono = false;
                add_check(rep, "a_monotone", mono);
                add_check(rep, "b1_recurrence", check_b1_recurrence(A, *b1).empty());
            }
        }

        if (entry.hyperelliptic && L.g >= 2) {
            bool agree = true;
            for (int k = 1; k <= L.g; ++k)
                if (h_gk0_closed(L, k) != h_n0_via_sum(L, L.g - k)) agree = false;
            add_check(rep, "pellikaan_vs_closed", agree);

            bool ids = true;
            Int h = class_number(L);
            Rat qm1 = Rat(Int(L.q) - 1);
            for (int n = 0; n <= L.g; ++n) {
                DimensionClassTable t = dimension_table(L, n);
                Int total = 0;
                Rat moment = 0;
                for (const auto& [i, cnt] : t.h_ni) {
                    total += cnt;
                    moment += Rat(int_pow(Int(L.q), static_cast<unsigned>(i)) - 1) / qm1 * Rat(cnt);
                }
                if (total != h || moment != Rat(effective_count_series(L, n))) ids = false;
            }
            add_check(rep, "dimension_identities", ids);
            add_check(rep, "degree_g_zero", h_n0_via_sum(L, L.g) == 0);
            add_check(rep, "degree_0_h_minus_1", h_n0_via_sum(L, 0) == h - 1);
        }

        // bound soundness: the verdict throws on any bound exceeding an exact count
        {
            bool sound = true;
            std::string msg;
            for (int k = 1; k <= L.g; ++k) {
                try {
                    verdict(L, k, b1, entry.hyperelliptic);
                } catch (const std::exception& ex) {
                    sound = false;
                    msg = ex.what();
                }
            }
            add_check(rep, "bound_soundness", sound, msg);
        }

        for (const auto& ev : entry.expected) {
            Json actual;
            try {
                actual = detail::evaluate_quantity(ev.name, L, entry.hyperelliptic,
                                                   places ? &*places : nullptr, derived_genus);
            } catch (const std::exception& ex) {
                add_check(rep, "expected:" + ev.name, false, ex.what());
                continue;
            }
            bool equal = detail::json_value_equal(actual, ev.value);
            switch (ev.provenance) {
                case ExpectedValue::Provenance::paper:
                case ExpectedValue::Provenance::derived:
                    add_check(rep, "expected:" + ev.name, equal,
                              equal ? "" : "expected " + ev.value.dump() + ", got " + actual.dump());
                    break;
                case ExpectedValue::Provenance::paper_unreproduced:
                    add_check(rep, "unreproduced:" + ev.name, !equal,
                              !equal ? "recorded figure " + ev.value.dump() + " still differs (recomputed " +
                                           actual.dump() + ")"
                                     : "recorded-unreproduced figure now matches; update the corpus");
                    break;
            }
        }
    } catch (const std::exception& ex) {
        add_check(rep, "pipeline", false, ex.what());
    }
    return rep;
}

inline CorpusSummary run_corpus(const Json& corpus, std::uint64_t limit = FieldCtx::kDefaultLimit) {
    if (!corpus.is_array()) throw validation_error("corpus: expected a JSON array of entries");
    CorpusSummary summary;
    for (const auto& item : corpus) summary.reports.push_back(verify_curve(parse_corpus_entry(item), limit));
    return summary;
}

inline Json entry_report_json(const EntryReport& r) {
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        Json j;
        j["name"] = c.name;
        j["pass"] = c.pass;
        if (!c.detail.empty()) j["detail"] = c.detail;
        checks.push_back(std::move(j));
    }
    Json out;
    out["label"] = r.label;
    out["pass"] = r.pass();
    out["checks"] = std::move(checks);
    return out;
}

inline Json corpus_summary_json(const CorpusSummary& s) {
    Json reports = Json::array();
    for (const auto& r : s.reports) reports.push_back(entry_report_json(r));
    Json out;
    out["entries"] = s.entries();
    out["failures"] = s.failures();
    out["reports"] = std::move(reports);
    return out;
}

}  // namespace zetadiv
