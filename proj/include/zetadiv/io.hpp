#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "zetadiv/criteria.hpp"
#include "zetadiv/curve.hpp"
#include "zetadiv/density.hpp"

namespace zetadiv {

/// Canonical JSON: insertion-ordered keys, compact dump, no floats.
/// Small structural integers (q, g, degrees, point counts) serialize as
/// numbers; arbitrary-precision and exact quantities serialize as strings.
using Json = nlohmann::ordered_json;

inline Int json_to_int(const Json& j, const std::string& what) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::exception&) {
            throw validation_error(what + ": cannot parse integer '" + j.get<std::string>() + "'");
        }
    }
    throw validation_error(what + ": expected integer or integer string");
}

inline Json int_to_json(const Int& v) {
    static const Int lo = -(Int(1) << 53), hi = Int(1) << 53;
    if (v > lo && v < hi) return Json(static_cast<std::int64_t>(v));
    return Json(v.str());
}

inline Rat json_to_rat(const Json& j, const std::string& what) {
    if (j.is_number_integer()) return Rat(j.get<std::int64_t>());
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return Rat(Int(s));
            Int den(s.substr(slash + 1));
            if (den == 0) throw validation_error(what + ": zero denominator");
            return Rat(Int(s.substr(0, slash)), den);
        } catch (const validation_error&) {
            throw;
        } catch (const std::exception&) {
            throw validation_error(what + ": cannot parse rational '" + s + "'");
        }
    }
    throw validation_error(what + ": expected rational as integer or \"n/d\" string");
}

// ---------------------------------------------------------------------------
// curve description files
// ---------------------------------------------------------------------------

inline FieldElement parse_coefficient(const FieldCtx& F, const Json& j) {
    if (j.is_number_integer()) return F.element({j.get<std::int64_t>()});
    if (j.is_array()) {
        if (j.size() > F.n()) throw validation_error("curve: coefficient vector longer than the extension degree");
        std::vector<std::int64_t> v;
        for (const auto& x : j) {
            if (!x.is_number_integer()) throw validation_error("curve: coefficient vector entries must be integers");
            v.push_back(x.get<std::int64_t>());
        }
        return F.element(v);
    }
    throw validation_error("curve: coefficients must be integers or integer vectors");
}

inline FPoly parse_poly(const FieldCtx& F, const Json& j, const std::string& what) {
    if (!j.is_array()) throw validation_error(what + ": expected a coefficient array (constant term first)");
    std::vector<FieldElement> c;
    c.reserve(j.size());
    for (const auto& x : j) c.push_back(parse_coefficient(F, x));
    return fp_from_coeffs(F, std::move(c));
}

/// Parse {"q":, "model":"quadratic", "h":[...], "f":[...] | {"num":[...],"den":[...]}, "genus":?}.
inline CurveModel parse_curve_json(const Json& j) {
    if (!j.is_object()) throw validation_error("curve: expected a JSON object");
    if (!j.contains("q")) throw validation_error("curve: missing field 'q'");
    Int q = json_to_int(j.at("q"), "curve.q");
    if (q < 2 || q > Int(FieldCtx::kDefaultLimit)) throw validation_error("curve: q out of range");
    std::uint64_t p;
    unsigned n;
    prime_power_decompose(static_cast<std::uint64_t>(q), p, n);
    if (j.contains("model") && j.at("model").get<std::string>() != "quadratic")
        throw validation_error("curve: unsupported model '" + j.at("model").get<std::string>() + "'");
    FieldCtx F = FieldCtx::make(p, n);
    FPoly h;  // zero when absent
    if (j.contains("h")) h = parse_poly(F, j.at("h"), "curve.h");
    if (!j.contains("f")) throw validation_error("curve: missing field 'f'");
    FPoly f_num, f_den;
    const Json& f = j.at("f");
    if (f.is_object()) {
        if (!f.contains("num") || !f.contains("den"))
            throw validation_error("curve: rational f needs 'num' and 'den'");
        f_num = parse_poly(F, f.at("num"), "curve.f.num");
        f_den = parse_poly(F, f.at("den"), "curve.f.den");
        if (f_den.is_zero()) throw validation_error("curve: zero denominator in f");
    } else {
        f_num = parse_poly(F, f, "curve.f");
    }
    std::optional<int> declared;
    if (j.contains("genus")) declared = j.at("genus").get<int>();
    return CurveModel::create(std::move(F), std::move(h), std::move(f_num), f_den, declared);
}

// ---------------------------------------------------------------------------
// L-polynomial files
// ---------------------------------------------------------------------------

/// Parse {"q":, "g":, "a":[a_0..a_g or a_0..a_2g], "hyperelliptic":?}.
inline LPolynomial parse_lpoly_json(const Json& j, bool* hyperelliptic = nullptr) {
    if (!j.is_object()) throw validation_error("lpoly: expected a JSON object");
    for (const char* key : {"q", "g", "a"})
        if (!j.contains(key)) throw validation_error(std::string("lpoly: missing field '") + key + "'");
    Int q = json_to_int(j.at("q"), "lpoly.q");
    if (q < 2) throw validation_error("lpoly: q must be >= 2");
    int g = j.at("g").get<int>();
    std::vector<Int> a;
    for (const auto& x : j.at("a")) a.push_back(json_to_int(x, "lpoly.a"));
    if (hyperelliptic) *hyperelliptic = j.value("hyperelliptic", false);
    return lpoly_from_coefficients(static_cast<std::uint64_t>(q), g, a);
}

// ---------------------------------------------------------------------------
// result rendering
// ---------------------------------------------------------------------------

inline Json lpoly_to_json(const LPolynomial& L) {
    Json a = Json::array();
    for (const auto& ai : L.a) a.push_back(int_to_json(ai));
    Json out;
    out["q"] = L.q;
    out["g"] = L.g;
    out["a"] = a;
    return out;
}

inline Json zeta_summary_json(const ZetaSummary& s) {
    Json out = lpoly_to_json(s.L);
    out["h"] = int_to_json(s.h);
    out["p_rank"] = s.p_rank;
    out["ordinary"] = s.ordinary;
    out["lmd_floor"] = int_to_json(s.lmd_floor);
    return out;
}

inline const char* place_kind_name(PlaceKind k) {
    switch (k) {
        case PlaceKind::ramified: return "ramified";
        case PlaceKind::split: return "split";
        case PlaceKind::inert: return "inert";
    }
    return "?";
}

inline Json poly_to_json(const FieldCtx& F, const FPoly& p) {
    Json out = Json::array();
    for (const auto& c : p.c) {
        if (F.n() == 1) {
            out.push_back(static_cast<std::int64_t>(c.c[0]));
        } else {
            Json v = Json::array();
            for (auto x : c.c) v.push_back(static_cast<std::int64_t>(x));
            out.push_back(v);
        }
    }
    return out;
}

inline Json place_table_json(const FieldCtx& F, const PlaceTable& t) {
    Json out;
    out["q"] = t.q;
    out["max_degree"] = t.max_degree;
    out["N"] = t.N;
    out["B"] = t.B;
    if (t.places) {
        Json list = Json::array();
        for (const auto& rec : *t.places) {
            Json r;
            r["degree"] = rec.degree;
            r["type"] = place_kind_name(rec.kind);
            if (rec.at_infinity)
                r["at_infinity"] = true;
            else
                r["prime"] = poly_to_json(F, rec.prime);
            list.push_back(std::move(r));
        }
        out["places"] = std::move(list);
    }
    return out;
}

inline Json criterion_json(const CriterionResult& r) {
    Json out;
    out["name"] = r.name;
    out["applicable"] = r.applicable;
    out["conclusion"] = r.exists ? "exists" : "unknown";
    out["degree"] = r.degree;
    if (r.bound) out["bound"] = int_to_json(*r.bound);
    out["justification"] = r.justification;
    return out;
}

inline Json verdict_json(const ExistenceVerdict& v) {
    Json out;
    out["q"] = v.q;
    out["g"] = v.g;
    out["k"] = v.k;
    out["n"] = v.n;
    Json crits = Json::array();
    for (const auto& c : v.criteria) crits.push_back(criterion_json(c));
    out["criteria"] = std::move(crits);
    if (v.best_bound) out["best_bound"] = int_to_json(*v.best_bound);
    if (v.exact) out["exact"] = int_to_json(*v.exact);
    if (v.exact)
        out["conclusion"] = (*v.exact >= 1) ? "exists" : "none";
    else
        out["conclusion"] = (v.best_bound && *v.best_bound >= 1) ? "exists" : "unknown";
    if (!v.note.empty()) out["note"] = v.note;
    return out;
}

inline Json sqrt_rational_json(const SqrtRational& v, int digits = 12) {
    Json out;
    out["exact"] = v.to_string();
    if (!v.is_rational()) {
        out["decimal"] = v.decimal(digits);
        out["precision"] = digits;
    }
    return out;
}

/// Parse "m:r,m:r,..." into a beta sequence with rational entries.
inline BetaSequence parse_beta_spec(std::uint64_t q, const std::string& spec) {
    BetaSequence beta;
    beta.q = q;
    if (spec.empty()) return beta;
    std::size_t pos = 0;
    while (pos < spec.size()) {
        auto comma = spec.find(',', pos);
        std::string item = spec.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        auto colon = item.find(':');
        if (colon == std::string::npos) throw validation_error("beta: expected entries of the form m:r");
        int m = std::stoi(item.substr(0, colon));
        Rat r = json_to_rat(Json(item.substr(colon + 1)), "beta");
        if (m < 1) throw validation_error("beta: degree must be >= 1");
        beta.entries[m] = SqrtRational{r};
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return beta;
}

}  // namespace zetadiv
