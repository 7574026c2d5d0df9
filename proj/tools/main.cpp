// Command-line front end. Talks to the library exclusively through the
// C API in wallx.h; every value printed here came over that boundary.

#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wallx.h"

namespace {

struct CtxDeleter {
    void operator()(wx_ctx* c) const { wx_ctx_free(c); }
};
using Ctx = std::unique_ptr<wx_ctx, CtxDeleter>;

struct StrDeleter {
    void operator()(char* s) const { wx_string_free(s); }
};
using Str = std::unique_ptr<char, StrDeleter>;

struct LieDeleter {
    void operator()(wx_lie* e) const { wx_lie_free(e); }
};
using Lie = std::unique_ptr<wx_lie, LieDeleter>;

int exit_code_for(wx_status s) {
    switch (s) {
        case WX_OK: return 0;
        case WX_ERR_PARSE: return 2;
        default: return 1;
    }
}

// Either exits with a diagnostic or returns normally.
int check(const Ctx& ctx, wx_status s) {
    if (s == WX_OK) return 0;
    std::fprintf(stderr, "error: %s\n", wx_ctx_last_error(ctx.get()));
    return exit_code_for(s);
}

void print_value(const std::string& format, const std::string& command,
                 const nlohmann::json& inputs, const std::string& value) {
    if (format == "json") {
        nlohmann::json j;
        j["schema"] = "1";
        j["command"] = command;
        j["inputs"] = inputs;
        // embed structured payloads instead of double-encoding them;
        // scalar rationals stay strings
        bool structured = !value.empty() && (value[0] == '[' || value[0] == '{');
        j["value"] = structured ? nlohmann::json::parse(value) : nlohmann::json(value);
        std::printf("%s\n", j.dump().c_str());
    } else {
        std::printf("%s\n", value.c_str());
    }
}

void print_lie(const Ctx& ctx, const std::string& format, const std::string& command,
               const nlohmann::json& inputs, const wx_lie* expr) {
    char* out = nullptr;
    if (format == "json") {
        wx_lie_to_json(ctx.get(), expr, &out);
        Str guard(out);
        nlohmann::json j;
        j["schema"] = "1";
        j["command"] = command;
        j["inputs"] = inputs;
        j["terms"] = nlohmann::json::parse(out);
        std::printf("%s\n", j.dump().c_str());
    } else {
        wx_lie_render(ctx.get(), expr, &out);
        Str guard(out);
        std::printf("%s\n", out);
    }
}

std::vector<long long> parse_int_list(const std::string& csv) {
    std::vector<long long> out;
    if (csv.empty()) return out;
    size_t start = 0;
    while (start <= csv.size()) {
        size_t comma = csv.find(',', start);
        std::string piece =
            comma == std::string::npos ? csv.substr(start) : csv.substr(start, comma - start);
        out.push_back(std::stoll(piece));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

int run_verify(const Ctx& ctx) {
    char* report = nullptr;
    int failures = 0;
    wx_status s = wx_verify(ctx.get(), &report, &failures);
    if (int rc = check(ctx, s)) return rc;
    Str guard(report);
    std::printf("%s", report);
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact wall-crossing and localization pairing calculator"};
    app.require_subcommand(0, 1);
    app.fallthrough();
    Ctx ctx(wx_ctx_new());

    std::string format = "plain";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"plain", "json"}));
    int jobs = 1;
    app.add_option("--jobs", jobs, "worker threads for fixed-point sums");
    bool verify_flag = false;
    app.add_flag("--verify", verify_flag, "run the golden-value table and exit");

    // npoints
    auto* np = app.add_subcommand("npoints", "pairings for n points on the projective line");
    long long np_n = 0, np_r = 0, np_m = 0, np_maxdeg = -1;
    std::string np_a, np_mode = "auto";
    np->add_option("--n", np_n, "number of points (odd modes)");
    np->add_option("--r", np_r, "half the number of points (even modes)");
    np->add_option("--m", np_m, "power of t^2");
    np->add_option("--a", np_a, "comma list of y-exponents");
    np->add_option("--mode", np_mode, "odd|resolution|desing|correction|ih-series|auto")
        ->check(CLI::IsMember({"odd", "resolution", "desing", "correction", "ih-series", "auto"}));
    np->add_option("--max-degree", np_maxdeg, "truncation degree for ih-series");

    // ih-series
    auto* ih = app.add_subcommand("ih-series", "intersection cohomology Poincare series");
    long long ih_r = 2, ih_maxdeg = 8;
    ih->add_option("--r", ih_r, "half the number of points");
    ih->add_option("--max-degree", ih_maxdeg, "truncation degree");

    // zeta-reg
    auto* zr = app.add_subcommand("zeta-reg", "zeta-regularized polynomial sum");
    std::string zr_poly;
    zr->add_option("--poly", zr_poly, "coefficients of d^0,d^1,... as rationals")->required();

    // rank2-jk
    auto* r2jk = app.add_subcommand("rank2-jk", "rank-2 chamber pairing");
    long long r2_g = 2, r2_m = 0;
    r2jk->add_option("--g", r2_g, "genus")->required();
    r2jk->add_option("--m", r2_m, "power of a_2")->required();

    // rank2-jkkw
    auto* r2kw = app.add_subcommand("rank2-jkkw", "rank-2 pairing on the partial desingularization");
    long long kw_g = 2, kw_m = 0, kw_n = 0;
    bool kw_raw = false;
    r2kw->add_option("--g", kw_g, "genus")->required();
    r2kw->add_option("--m", kw_m, "power of a_2")->required();
    r2kw->add_option("--nn", kw_n, "power of f_2")->required();
    r2kw->add_flag("--raw", kw_raw, "pair against the bare monomial (multiply by n!)");

    // rank3-bracket
    auto* r3 = app.add_subcommand("rank3-bracket", "rank-3 bracket pairing by double residue");
    long long r3_g = 2, r3_k = 0;
    std::vector<std::string> r3_ml;
    r3->add_option("--g", r3_g, "genus")->required();
    r3->add_option("--ml", r3_ml, "generator multiplicities as l:count (repeatable)");
    r3->add_option("--k", r3_k, "exponent extracted from the exp(alpha S) pairing")->required();

    // jk-minus-joyce
    auto* jmj = app.add_subcommand("jk-minus-joyce", "wall-crossing difference of JK and Joyce classes");
    long long jmj_r = 2, jmj_d = 0;
    std::string jmj_weights = "plus", jmj_route = "auto";
    jmj->add_option("--r", jmj_r, "rank")->required();
    jmj->add_option("--d", jmj_d, "degree")->required();
    jmj->add_option("--weights", jmj_weights, "plus|minus or comma eps-polynomials");
    jmj->add_option("--route", jmj_route, "auto|special|general")
        ->check(CLI::IsMember({"auto", "special", "general"}));

    // thm75
    auto* t75 = app.add_subcommand("thm75", "difference of JK and the pair-class projection");
    long long t75_r = 2, t75_d = 0;
    std::string t75_weights;
    t75->add_option("--r", t75_r, "rank")->required();
    t75->add_option("--d", t75_d, "degree")->required();
    t75->add_option("--weights", t75_weights, "strongly generic weights")->required();

    // pi-pair
    auto* pp = app.add_subcommand("pi-pair", "pair-class projection in Joyce classes");
    long long pp_r = 2, pp_d = 0;
    bool pp_recursion = false;
    pp->add_option("--r", pp_r, "rank")->required();
    pp->add_option("--d", pp_d, "degree")->required();
    pp->add_flag("--recursion", pp_recursion, "print the defining recursion identity instead");

    // wcf-coeffs
    auto* wcf = app.add_subcommand("wcf-coeffs", "S/U/Utilde coefficient tables");
    std::string wcf_classes, wcf_tau_w, wcf_tau_pw, wcf_taup_w, wcf_taup_pw;
    wcf->add_option("--classes", wcf_classes, "JSON list of classes")->required();
    wcf->add_option("--tau-weights", wcf_tau_w, "weights of the first condition");
    wcf->add_option("--tau-pair", wcf_tau_pw, "pair weight of the first condition");
    wcf->add_option("--tauprime-weights", wcf_taup_w, "weights of the second condition");
    wcf->add_option("--tauprime-pair", wcf_taup_pw, "pair weight of the second condition");

    auto* vf = app.add_subcommand("verify", "run the golden-value table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    if (int rc = check(ctx, wx_set_jobs(ctx.get(), jobs))) return rc;
    if (verify_flag || vf->parsed()) return run_verify(ctx);

    char* out = nullptr;
    wx_status s = WX_OK;

    if (np->parsed()) {
        std::string mode = np_mode;
        if (mode == "auto") mode = np->count("--n") ? "odd" : "desing";
        if (mode == "ih-series") {
            long long deg = np_maxdeg >= 0 ? np_maxdeg : 4 * np_r - 6;
            s = wx_npoints_ih_series(ctx.get(), np_r, deg, &out);
            if (int rc = check(ctx, s)) return rc;
            Str guard(out);
            print_value(format, "npoints", {{"r", np_r}, {"max_degree", deg}}, out);
            return 0;
        }
        auto a = parse_int_list(np_a);
        long long n_or_r = mode == "odd" ? np_n : np_r;
        s = wx_npoints_pairing(ctx.get(), mode.c_str(), n_or_r, np_m, a.data(), a.size(), &out);
        if (int rc = check(ctx, s)) return rc;
        Str guard(out);
        nlohmann::json inputs{{"mode", mode}, {"m", np_m}, {"a", a}};
        inputs[mode == "odd" ? "n" : "r"] = n_or_r;
        print_value(format, "npoints", inputs, out);
        return 0;
    }
    if (ih->parsed()) {
        s = wx_npoints_ih_series(ctx.get(), ih_r, ih_maxdeg, &out);
        if (int rc = check(ctx, s)) return rc;
        Str guard(out);
        print_value(format, "ih-series", {{"r", ih_r}, {"max_degree", ih_maxdeg}}, out);
        return 0;
    }
    if (zr->parsed()) {
        s = wx_zeta_reg_sum(ctx.get(), zr_poly.c_str(), &out);
        if (int rc = check(ctx, s)) return rc;
        Str guard(out);
        print_value(format, "zeta-reg", {{"poly", zr_poly}}, out);
        return 0;
    }
    if (r2jk->parsed()) {
        s = wx_rank2_jk(ctx.get(), r2_g, r2_m, &out);
        if (int rc = check(ctx, s)) return rc;
        Str guard(out);
        print_value(format, "rank2-jk", {{"g", r2_g}, {"m", r2_m}}, out);
        return 0;
    }
    if (r2kw->parsed()) {
        char* route = nullptr;
        s = wx_rank2_jkkw(ctx.get(), kw_g, kw_m, kw_n, kw_raw ? 1 : 0, &out, &route);
        if (int rc = check(ctx, s)) return rc;
        Str guard(out), rguard(route);
        if (format == "json") {
            nlohmann::json j;
            j["schema"] = "1";
            j["command"] = "rank2-jkkw";
            j["inputs"] = {{"g", kw_g}, {"m", kw_m}, {"nn", kw_n}, {"raw", kw_raw}};
            j["value"] = out;
            j["route"] = nlohmann::json::parse(route);
            std::printf("%s\n", j.dump().c_str());
        } else {
            std::printf("%s\n", out);
        }
        return 0;
    }
    if (r3->parsed()) {
        std::vector<long long> ls, mults;
        for (const auto& item : r3_ml) {
            size_t colon = item.find(':');
            ls.push_back(std::stoll(item.substr(0, colon)));
            mults.push_back(colon == std::string::npos ? 1 : std::stoll(item.substr(colon + 1)));
        }
        s = wx_rank3_bracket(ctx.get(), r3_g, ls.data(), mults.data(), ls.size(), r3_k, &out);
        if (int rc = check(ctx, s)) return rc;
        Str guard(out);
        print_value(format, "rank3-bracket", {{"g", r3_g}, {"ml", r3_ml}, {"k", r3_k}}, out);
        return 0;
    }
    if (jmj->parsed()) {
        wx_lie* expr = nullptr;
        bool special_route = jmj_route == "special" ||
                             (jmj_route == "auto" &&
                              (jmj_weights == "plus" || jmj_weights == "minus"));
        if (special_route) {
            char sign = jmj_weights == "minus" ? '-' : '+';
            if (jmj_weights != "plus" && jmj_weights != "minus") {
                std::fprintf(stderr, "error: the special route needs --weights plus|minus\n");
                return 1;
            }
            s = wx_jk_minus_joyce_special(ctx.get(), jmj_r, jmj_d, sign, &expr);
        } else {
            s = wx_jk_minus_joyce_general(ctx.get(), jmj_r, jmj_d, jmj_weights.c_str(), &expr);
        }
        if (int rc = check(ctx, s)) return rc;
        Lie guard(expr);
        print_lie(ctx, format, "jk-minus-joyce",
                  {{"r", jmj_r}, {"d", jmj_d}, {"weights", jmj_weights}, {"route", jmj_route}},
                  expr);
        return 0;
    }
    if (t75->parsed()) {
        wx_lie* expr = nullptr;
        s = wx_jk_minus_pi_pairs(ctx.get(), t75_r, t75_d, t75_weights.c_str(), &expr);
        if (int rc = check(ctx, s)) return rc;
        Lie guard(expr);
        print_lie(ctx, format, "thm75",
                  {{"r", t75_r}, {"d", t75_d}, {"weights", t75_weights}}, expr);
        return 0;
    }
    if (pp->parsed()) {
        if (pp_recursion) {
            wx_lie *lhs = nullptr, *rhs = nullptr;
            s = wx_joyce_recursion(ctx.get(), pp_r, pp_d, &lhs, &rhs);
            if (int rc = check(ctx, s)) return rc;
            Lie g1(lhs), g2(rhs);
            char *l = nullptr, *r = nullptr;
            wx_lie_render(ctx.get(), lhs, &l);
            wx_lie_render(ctx.get(), rhs, &r);
            Str s1(l), s2(r);
            if (format == "json") {
                char *lj = nullptr, *rj = nullptr;
                wx_lie_to_json(ctx.get(), lhs, &lj);
                wx_lie_to_json(ctx.get(), rhs, &rj);
                Str s3(lj), s4(rj);
                nlohmann::json j;
                j["schema"] = "1";
                j["command"] = "pi-pair";
                j["inputs"] = {{"r", pp_r}, {"d", pp_d}, {"recursion", true}};
                j["lhs"] = nlohmann::json::parse(lj);
                j["rhs"] = nlohmann::json::parse(rj);
                std::printf("%s\n", j.dump().c_str());
            } else {
                std::printf("%s = %s\n", l, r);
            }
            return 0;
        }
        wx_lie* expr = nullptr;
        s = wx_pi_pair_expansion(ctx.get(), pp_r, pp_d, &expr);
        if (int rc = check(ctx, s)) return rc;
        Lie guard(expr);
        print_lie(ctx, format, "pi-pair", {{"r", pp_r}, {"d", pp_d}}, expr);
        return 0;
    }
    if (wcf->parsed()) {
        nlohmann::json tau, taup;
        if (!wcf_tau_w.empty()) tau["weights"] = wcf_tau_w;
        if (!wcf_tau_pw.empty()) tau["pair_weight"] = wcf_tau_pw;
        if (!wcf_taup_w.empty()) taup["weights"] = wcf_taup_w;
        if (!wcf_taup_pw.empty()) taup["pair_weight"] = wcf_taup_pw;
        s = wx_wcf_tables(ctx.get(), wcf_classes.c_str(), tau.dump().c_str(),
                          taup.dump().c_str(), &out);
        if (int rc = check(ctx, s)) return rc;
        Str guard(out);
        if (format == "json") {
            std::printf("%s\n", out);
        } else {
            auto j = nlohmann::json::parse(out);
            for (const auto& row : j["rows"]) {
                std::string perm;
                for (const auto& p : row["perm"]) perm += std::to_string(p.get<int>());
                std::printf("sigma=%s  S=%d  U=%s  Utilde=%s\n", perm.c_str(),
                            row["S"].get<int>(), row["U"].get<std::string>().c_str(),
                            row["Utilde"].get<std::string>().c_str());
            }
            std::printf("identity %s\n",
                        j["identity_verified"].get<bool>() ? "verified" : "FAILED");
        }
        return 0;
    }

    std::printf("%s", app.help().c_str());
    return 0;
}
