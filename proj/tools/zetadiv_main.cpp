// zetadiv: exact zeta-function and divisor-class computations for curves
// over small finite fields.
//
// Subcommands: lpoly, places, counts, exists, exact, density, asymptotic,
// verify, kmin.  Output is canonical JSON on stdout (--format table for
// aligned text).  Exit status: 0 success, 1 validation/usage error,
// 2 internal consistency failure.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "zetadiv/zetadiv.hpp"

namespace {

using namespace zetadiv;

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw validation_error("cannot open file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& ex) {
        throw validation_error("malformed JSON in " + path + ": " + ex.what());
    }
    return j;
}

struct InputOptions {
    std::string curve_path;
    std::string lpoly_spec;  // inline JSON or a path
    bool hyperelliptic_flag = false;
    std::int64_t b1 = -1;
    std::uint64_t limit = FieldCtx::kDefaultLimit;
};

struct LoadedInput {
    std::optional<CurveModel> curve;
    LPolynomial L;
    bool hyperelliptic = false;
    std::optional<std::int64_t> b1;
};

LoadedInput load_input(const InputOptions& opt) {
    if (opt.curve_path.empty() == opt.lpoly_spec.empty())
        throw validation_error("exactly one input is required: --curve FILE or --lpoly JSON|FILE");
    LoadedInput in;
    if (!opt.curve_path.empty()) {
        in.curve = parse_curve_json(load_json_file(opt.curve_path));
        int g = in.curve->genus();
        std::vector<std::int64_t> N;
        for (int m = 1; m <= g; ++m) N.push_back(in.curve->count_points(m, opt.limit));
        in.L = lpoly_from_counts(in.curve->q(), g, N);
        in.hyperelliptic = true;  // degree-2 cover of the rational field by construction
        in.b1 = N[0];
    } else {
        Json j;
        std::string spec = opt.lpoly_spec;
        if (!spec.empty() && spec.front() == '{') {
            try {
                j = Json::parse(spec);
            } catch (const std::exception& ex) {
                throw validation_error(std::string("malformed inline L-polynomial JSON: ") + ex.what());
            }
        } else {
            j = load_json_file(spec);
        }
        bool hyper = false;
        in.L = parse_lpoly_json(j, &hyper);
        in.hyperelliptic = hyper || opt.hyperelliptic_flag;
    }
    if (opt.b1 >= 0) in.b1 = opt.b1;
    return in;
}

void render_table(const Json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows) {
    if (j.is_object()) {
        for (const auto& [key, value] : j.items())
            render_table(value, prefix.empty() ? key : prefix + "." + key, rows);
    } else if (j.is_array()) {
        bool scalar = true;
        for (const auto& x : j)
            if (x.is_structured()) scalar = false;
        if (scalar) {
            std::string s;
            for (const auto& x : j) {
                if (!s.empty()) s += ", ";
                s += x.is_string() ? x.get<std::string>() : x.dump();
            }
            rows.emplace_back(prefix, s);
        } else {
            int i = 0;
            for (const auto& x : j) render_table(x, prefix + "[" + std::to_string(i++) + "]", rows);
        }
    } else {
        rows.emplace_back(prefix, j.is_string() ? j.get<std::string>() : j.dump());
    }
}

void emit(const Json& j, const std::string& format) {
    if (format == "table") {
        std::vector<std::pair<std::string, std::string>> rows;
        render_table(j, "", rows);
        std::size_t width = 0;
        for (const auto& [k, v] : rows) width = std::max(width, k.size());
        for (const auto& [k, v] : rows)
            std::cout << k << std::string(width - k.size() + 2, ' ') << v << "\n";
    } else {
        std::cout << j.dump() << "\n";
    }
}

std::string default_corpus_path() {
    if (const char* env = std::getenv("ZETADIV_CORPUS")) return env;
    return "data/corpus.json";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact zeta functions, divisor counts and dimension-zero divisor certificates"};
    app.require_subcommand(1);

    InputOptions in;
    std::string format = "json";
    app.add_option("--format", format, "output format: json (default) or table")
        ->check(CLI::IsMember({"json", "table"}));

    auto add_input = [&](CLI::App* cmd, bool with_hyper = true) {
        cmd->add_option("--curve", in.curve_path, "curve description file (JSON)");
        cmd->add_option("--lpoly", in.lpoly_spec, "inline L-polynomial JSON or a file path");
        cmd->add_option("--limit", in.limit, "enumeration limit for field sizes (default 2^24)");
        if (with_hyper)
            cmd->add_flag("--hyperelliptic", in.hyperelliptic_flag,
                          "declare an L-polynomial input as hyperelliptic");
    };

    auto* cmd_lpoly = app.add_subcommand("lpoly", "L-polynomial, class number, p-rank and the class-number floor");
    add_input(cmd_lpoly);

    int max_degree = 1;
    auto* cmd_places = app.add_subcommand("places", "count and classify places up to a degree");
    add_input(cmd_places, false);
    cmd_places->add_option("--max-degree", max_degree, "largest place degree to enumerate")->required();

    int n_arg = 0;
    bool with_oracle = false;
    auto* cmd_counts = app.add_subcommand("counts", "effective-divisor counts A_0..A_n");
    add_input(cmd_counts);
    cmd_counts->add_option("--n", n_arg, "largest degree")->required();
    cmd_counts->add_flag("--oracle", with_oracle, "also derive counts from explicit places (curve input only)");

    int k_arg = 1;
    auto* cmd_exists = app.add_subcommand("exists", "existence verdict for dimension-zero divisors of degree g-k");
    add_input(cmd_exists);
    cmd_exists->add_option("--k", k_arg, "codegree k (degree is g-k)")->required();
    cmd_exists->add_option("--b1", in.b1, "number of rational places (L-polynomial input only)");

    auto* cmd_exact = app.add_subcommand("exact", "exact h_{g-k,0} under the hyperelliptic hypothesis");
    add_input(cmd_exact);
    cmd_exact->add_option("--k", k_arg, "codegree k")->required();

    std::uint64_t q_arg = 2;
    auto* cmd_density = app.add_subcommand("density", "lower bound on the probability of drawing a dimension-zero divisor");
    cmd_density->add_option("--q", q_arg, "field size")->required();
    cmd_density->add_option("--k", k_arg, "codegree k")->required();

    std::string beta_spec;
    int g_arg = 1;
    std::string epsilon_spec, l_spec = "1";
    auto* cmd_asym = app.add_subcommand("asymptotic", "leading-term estimates for asymptotically exact families");
    cmd_asym->add_option("--q", q_arg, "field size")->required();
    cmd_asym->add_option("--beta", beta_spec, "place densities as m:r,m:r,... (rationals)");
    cmd_asym->add_option("--g", g_arg, "genus at which to evaluate")->required();
    cmd_asym->add_option("--epsilon", epsilon_spec, "margin parameter in (0, 1/2); enables the margin report");
    cmd_asym->add_option("--l", l_spec, "multiplier l >= 1 (default 1)");

    std::string corpus_path;
    auto* cmd_verify = app.add_subcommand("verify", "run the cross-validation pipeline over a curve corpus");
    cmd_verify->add_option("--corpus", corpus_path, "corpus file (default: $ZETADIV_CORPUS or data/corpus.json)");
    cmd_verify->add_option("--limit", in.limit, "enumeration limit");

    auto* cmd_kmin = app.add_subcommand("kmin", "least k with the existence theorem applicable");
    cmd_kmin->add_option("--q", q_arg, "field size")->required();

    int precision = 12;
    app.add_option("--precision", precision, "significant digits for decimal renderings (default 12)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::ostringstream os;
        int code = app.exit(e, os, os);
        std::cerr << os.str();
        return code == 0 ? 0 : 1;
    }

    try {
        if (cmd_lpoly->parsed()) {
            auto loaded = load_input(in);
            emit(zeta_summary_json(summarize(loaded.L)), format);
        } else if (cmd_places->parsed()) {
            if (in.curve_path.empty()) throw validation_error("places: requires --curve input");
            CurveModel c = parse_curve_json(load_json_file(in.curve_path));
            PlaceTable t = c.enumerate_places(max_degree, in.limit);
            emit(place_table_json(c.base(), t), format);
        } else if (cmd_counts->parsed()) {
            auto loaded = load_input(in);
            if (n_arg < 0) throw validation_error("counts: n must be >= 0");
            Json A = Json::array();
            for (int n = 0; n <= n_arg; ++n) A.push_back(int_to_json(effective_count_series(loaded.L, n)));
            Json out;
            out["q"] = loaded.L.q;
            out["g"] = loaded.L.g;
            out["A"] = std::move(A);
            if (with_oracle) {
                if (!loaded.curve) throw validation_error("counts --oracle: requires --curve input");
                PlaceTable t = loaded.curve->enumerate_places(std::max(n_arg, 1), in.limit);
                Json B = Json::array();
                for (int n = 0; n <= n_arg; ++n) B.push_back(int_to_json(effective_count_oracle(t, n)));
                out["A_oracle"] = std::move(B);
            }
            emit(out, format);
        } else if (cmd_exists->parsed()) {
            auto loaded = load_input(in);
            ExistenceVerdict v = verdict(loaded.L, k_arg, loaded.b1, loaded.hyperelliptic);
            emit(verdict_json(v), format);
        } else if (cmd_exact->parsed()) {
            auto loaded = load_input(in);
            SameLReport r = same_lpoly_distinguisher(loaded.L, k_arg, loaded.hyperelliptic);
            Json out;
            out["q"] = r.q;
            out["g"] = r.g;
            out["k"] = r.k;
            out["n"] = r.g - r.k;
            out["hyperelliptic_assumed"] = r.hyperelliptic_assumed;
            if (r.exact_if_hyperelliptic) {
                out["exact"] = int_to_json(*r.exact_if_hyperelliptic);
                out["via_sum"] = int_to_json(h_n0_via_sum(loaded.L, r.g - r.k));
            }
            out["note"] = r.note;
            emit(out, format);
        } else if (cmd_density->parsed()) {
            SqrtRational p = draw_probability(q_arg, k_arg);
            Json out;
            out["q"] = q_arg;
            out["k"] = k_arg;
            out["bound"] = p.to_string();
            if (!p.is_rational()) {
                out["decimal"] = p.decimal(precision);
                out["precision"] = precision;
            }
            emit(out, format);
        } else if (cmd_asym->parsed()) {
            BetaSequence beta = parse_beta_spec(q_arg, beta_spec);
            if (!beta_admissible(beta)) throw validation_error("asymptotic: inadmissible beta sequence");
            Json out;
            out["q"] = q_arg;
            out["g"] = g_arg;
            std::ostringstream hs;
            hs << std::setprecision(precision) << asymptotic_h_estimate(beta, g_arg);
            out["log_q_h"] = hs.str();
            out["precision"] = precision;
            out["model"] = "leading-term heuristic; o(g) corrections unmodeled";
            if (!epsilon_spec.empty()) {
                Rat eps = json_to_rat(Json(epsilon_spec), "epsilon");
                Rat l = json_to_rat(Json(l_spec), "l");
                MarginReport m = doubledivspec_margin(beta, eps, l, g_arg);
                Json mj;
                mj["degree"] = m.degree;
                std::ostringstream a, mm;
                a << std::setprecision(precision) << m.a_estimate;
                mm << std::setprecision(precision) << m.margin;
                mj["log_q_A"] = a.str();
                mj["margin"] = mm.str();
                mj["sign"] = m.sign == 0 ? "indeterminate" : (m.sign > 0 ? "positive" : "negative");
                mj["threshold_cleared"] = m.threshold_cleared;
                out["margin_report"] = std::move(mj);
            }
            emit(out, format);
        } else if (cmd_verify->parsed()) {
            std::string path = corpus_path.empty() ? default_corpus_path() : corpus_path;
            CorpusSummary s = run_corpus(load_json_file(path), in.limit);
            emit(corpus_summary_json(s), format);
            if (s.failures() > 0) return 2;
        } else if (cmd_kmin->parsed()) {
            Json out;
            out["q"] = q_arg;
            out["kmin"] = kmin(q_arg);
            QConstants c = constants(q_arg, kmin(q_arg), std::max(kmin(q_arg), 1));
            out["l_q_kmin"] = c.l.to_string();
            if (!c.l.is_rational()) out["l_decimal"] = c.l.decimal(precision);
            emit(out, format);
        }
    } catch (const validation_error& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    } catch (const consistency_error& ex) {
        std::cerr << "internal consistency failure: " << ex.what() << "\n";
        return 2;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    return 0;
}
