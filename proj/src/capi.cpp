#include "wallx.h"

#include <cstdlib>
#include <cstring>
#include <functional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "wallx/bernoulli.hpp"
#include "wallx/curvepair.hpp"
#include "wallx/freelie.hpp"
#include "wallx/lie_expr.hpp"
#include "wallx/literals.hpp"
#include "wallx/npoints.hpp"
#include "wallx/wallcross.hpp"

using namespace wallx;

struct wx_ctx {
    std::string last_error;
};

struct wx_lie {
    LieExpr expr;
};

namespace {

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

wx_status fail(wx_ctx* ctx, wx_status code, const std::string& msg) {
    if (ctx) ctx->last_error = msg;
    return code;
}

wx_status run(wx_ctx* ctx, const std::function<void()>& body) {
    try {
        body();
        return WX_OK;
    } catch (const truncation_error& e) {
        return fail(ctx, WX_ERR_DOMAIN, e.what());
    } catch (const parse_error& e) {
        return fail(ctx, WX_ERR_PARSE, e.what());
    } catch (const domain_error& e) {
        return fail(ctx, WX_ERR_DOMAIN, e.what());
    } catch (const nlohmann::json::exception& e) {
        return fail(ctx, WX_ERR_PARSE, e.what());
    } catch (const std::exception& e) {
        return fail(ctx, WX_ERR_INTERNAL, e.what());
    }
}

std::vector<Rational> parse_rational_csv(const std::string& csv) {
    std::vector<Rational> out;
    size_t start = 0;
    while (start <= csv.size()) {
        size_t comma = csv.find(',', start);
        std::string piece =
            comma == std::string::npos ? csv.substr(start) : csv.substr(start, comma - start);
        size_t a = piece.find_first_not_of(" \t");
        size_t b = piece.find_last_not_of(" \t");
        if (a == std::string::npos) throw parse_error("empty entry in rational list");
        out.push_back(Rational::from_string(piece.substr(a, b - a + 1)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

SlopeFunction slope_from_json(const nlohmann::json& j) {
    SlopeFunction f;
    if (j.contains("weights") && !j["weights"].get<std::string>().empty())
        f.weight = parse_weights(j["weights"].get<std::string>(), -1);
    if (j.contains("pair_weight"))
        f.pair_weight = parse_eps_poly(j["pair_weight"].get<std::string>());
    return f;
}

}  // namespace

extern "C" {

wx_ctx* wx_ctx_new(void) { return new wx_ctx; }
void wx_ctx_free(wx_ctx* ctx) { delete ctx; }
const char* wx_ctx_last_error(const wx_ctx* ctx) { return ctx ? ctx->last_error.c_str() : ""; }

void wx_string_free(char* s) { std::free(s); }
void wx_lie_free(wx_lie* e) { delete e; }

const char* wx_version(void) { return "1.0.0"; }

wx_status wx_set_jobs(wx_ctx* ctx, int jobs) {
    return run(ctx, [&] { set_fixed_point_jobs(jobs); });
}

wx_status wx_bernoulli_poly_at(wx_ctx* ctx, long long n, const char* x, char** out) {
    return run(ctx, [&] {
        Rational v = bernoulli_poly_at(n, Rational::from_string(x ? x : "0"));
        *out = dup_string(v.to_string());
    });
}

wx_status wx_zeta_reg_sum(wx_ctx* ctx, const char* coeffs_csv, char** out) {
    return run(ctx, [&] {
        auto coeffs = parse_rational_csv(coeffs_csv ? coeffs_csv : "");
        *out = dup_string(zeta_reg_sum(coeffs).to_string());
    });
}

wx_status wx_npoints_pairing(wx_ctx* ctx, const char* mode, long long n_or_r, long long m,
                             const long long* a, size_t a_len, char** out) {
    return run(ctx, [&] {
        std::string md = mode ? mode : "";
        MonomialClass cls;
        cls.m = m;
        long long n = md == "odd" ? n_or_r : 2 * n_or_r;
        cls.a.assign(a, a + a_len);
        // pad with zero exponents; an over-long vector is a degree error
        if (static_cast<long long>(cls.a.size()) < n) cls.a.resize(static_cast<size_t>(n), 0);
        Rational v;
        if (md == "odd") v = pairing_odd(n, cls);
        else if (md == "resolution") v = pairing_even_resolution(n_or_r, cls);
        else if (md == "desing") v = pairing_even_desing(n_or_r, cls);
        else if (md == "correction") v = blowup_correction(n_or_r, cls);
        else throw domain_error("npoints: unknown mode '" + md + "'");
        *out = dup_string(v.to_string());
    });
}

wx_status wx_npoints_ih_series(wx_ctx* ctx, long long r, long long max_degree, char** out_json) {
    return run(ctx, [&] {
        auto coeffs = ih_poincare_series(r, max_degree);
        nlohmann::json j = nlohmann::json::array();
        for (const auto& c : coeffs) j.push_back(c.to_string());
        *out_json = dup_string(j.dump());
    });
}

wx_status wx_rank2_jk(wx_ctx* ctx, long long g, long long m, char** out) {
    return run(ctx, [&] { *out = dup_string(jk_pairing_rank2(g, m).to_string()); });
}

wx_status wx_rank2_jkkw(wx_ctx* ctx, long long g, long long m, long long n, int raw,
                        char** out_total, char** out_route_json) {
    return run(ctx, [&] {
        JkkwRank2Result res = jkkw_pairing_rank2(g, m, n, raw != 0);
        *out_total = dup_string(res.total.to_string());
        if (out_route_json) {
            nlohmann::json j;
            j["jk"] = res.jk.to_string();
            j["blowup1"] = res.blowup1.to_string();
            j["blowup2"] = res.blowup2.to_string();
            *out_route_json = dup_string(j.dump());
        }
    });
}

wx_status wx_rank3_bracket(wx_ctx* ctx, long long g, const long long* ls,
                           const long long* mults, size_t len, long long k, char** out) {
    return run(ctx, [&] {
        Rank3PairingSpec spec;
        spec.g = g;
        spec.k = k;
        for (size_t i = 0; i < len; ++i) spec.m_l[ls[i]] += mults[i];
        *out = dup_string(bracket_j20_j10_pairing(spec).to_string());
    });
}

wx_status wx_jk_minus_joyce_special(wx_ctx* ctx, long long r, long long d, char sign,
                                    wx_lie** out) {
    return run(ctx, [&] { *out = new wx_lie{jk_minus_joyce_special(r, d, sign)}; });
}

wx_status wx_jk_minus_joyce_general(wx_ctx* ctx, long long r, long long d, const char* weights,
                                    wx_lie** out) {
    return run(ctx, [&] {
        ParabolicWeight c = parse_weights(weights ? weights : "", r);
        *out = new wx_lie{jk_minus_joyce_general(r, d, c)};
    });
}

wx_status wx_pi_pair_expansion(wx_ctx* ctx, long long r, long long d, wx_lie** out) {
    return run(ctx, [&] { *out = new wx_lie{pi_pair_expansion(r, d)}; });
}

wx_status wx_jk_minus_pi_pairs(wx_ctx* ctx, long long r, long long d, const char* weights,
                               wx_lie** out) {
    return run(ctx, [&] {
        ParabolicWeight c = parse_weights(weights ? weights : "", r);
        *out = new wx_lie{jk_minus_pi_pairs(r, d, c)};
    });
}

wx_status wx_joyce_recursion(wx_ctx* ctx, long long r, long long d, wx_lie** lhs, wx_lie** rhs) {
    return run(ctx, [&] {
        auto [l, rr] = joyce_recursion_expr(r, d);
        *lhs = new wx_lie{std::move(l)};
        *rhs = new wx_lie{std::move(rr)};
    });
}

wx_status wx_lie_render(wx_ctx* ctx, const wx_lie* e, char** out) {
    return run(ctx, [&] { *out = dup_string(e->expr.render()); });
}

wx_status wx_lie_to_json(wx_ctx* ctx, const wx_lie* e, char** out) {
    return run(ctx, [&] { *out = dup_string(e->expr.to_json()); });
}

int wx_lie_equal(const wx_lie* a, const wx_lie* b) {
    return (a && b && a->expr == b->expr) ? 1 : 0;
}

int wx_lie_is_zero(const wx_lie* e) { return (e && e->expr.is_zero()) ? 1 : 0; }

wx_status wx_wcf_tables(wx_ctx* ctx, const char* classes_json, const char* tau_json,
                        const char* tau_prime_json, char** out_json) {
    return run(ctx, [&] {
        auto jc = nlohmann::json::parse(classes_json ? classes_json : "[]");
        std::vector<ClassVec> classes;
        for (const auto& item : jc) {
            ClassVec c;
            c.r = item.at("r").get<long long>();
            c.d = item.at("d").get<long long>();
            if (item.contains("f")) c.f = item["f"].get<std::vector<long long>>();
            if (item.contains("v")) c.v = item["v"].get<long long>();
            classes.push_back(std::move(c));
        }
        if (classes.empty()) throw domain_error("coefficient tables: no classes given");
        StabilityPair pair{slope_from_json(nlohmann::json::parse(tau_json ? tau_json : "{}")),
                           slope_from_json(nlohmann::json::parse(
                               tau_prime_json ? tau_prime_json : "{}"))};

        const int n = static_cast<int>(classes.size());
        PermTable u_table;
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& sigma : all_permutations(n)) {
            std::vector<ClassVec> seq(static_cast<size_t>(n));
            for (int i = 0; i < n; ++i) seq[static_cast<size_t>(i)] = classes[static_cast<size_t>(sigma[static_cast<size_t>(i)] - 1)];
            u_table[sigma] = coeff_U(seq, pair);
            nlohmann::json row;
            row["perm"] = sigma;
            row["S"] = coeff_S(seq, pair);
            row["U"] = u_table[sigma].to_string();
            rows.push_back(std::move(row));
        }
        PermTable ut = utilde_solve(u_table, n);
        size_t idx = 0;
        for (const auto& sigma : all_permutations(n)) {
            auto it = ut.find(sigma);
            rows[idx++]["Utilde"] = (it == ut.end() ? Rational(0) : it->second).to_string();
        }
        nlohmann::json j;
        j["schema"] = "1";
        j["n"] = n;
        j["identity_verified"] = verify_identity(u_table, ut, n);
        j["lie_element"] = nlohmann::json::parse(lie_poly_to_json(nested_bracket_lie(ut, n)));
        j["rows"] = std::move(rows);
        *out_json = dup_string(j.dump());
    });
}

wx_status wx_verify(wx_ctx* ctx, char** out_report, int* failures) {
    return run(ctx, [&] {
        std::ostringstream report;
        int bad = 0;
        int total_rows = 0;
        auto check = [&](const std::string& name, const Rational& got,
                         const Rational& expect, const std::string& note = "") {
            ++total_rows;
            bool ok = got == expect;
            if (!ok) ++bad;
            report << (ok ? "PASS  " : "FAIL  ") << name << ": got " << got.to_string()
                   << ", expected " << expect.to_string();
            if (!ok && !note.empty()) report << "  [" << note << "]";
            report << "\n";
        };
        auto check_lie = [&](const std::string& name, const LieExpr& got,
                             const LieExpr& expect) {
            ++total_rows;
            bool ok = got == expect;
            if (!ok) ++bad;
            report << (ok ? "PASS  " : "FAIL  ") << name << ": got " << got.render()
                   << ", expected " << expect.render() << "\n";
        };

        check("point count n=3", pairing_odd(3, MonomialClass{0, {0, 0, 0}}), Rational(1));
        check("point count n=5, t^2", pairing_odd(5, MonomialClass{1, {0, 0, 0, 0, 0}}),
              Rational(-3, 4));
        {
            MonomialCombo combo;
            for (int i = 0; i < 4; ++i) {
                MonomialClass c{0, {0, 0, 0, 0}};
                c.a[static_cast<size_t>(i)] = 1;
                combo.push_back({Rational(1), c});
            }
            check("middle cohomology pairing on four points", pairing_even_desing(2, combo),
                  Rational(1));
        }
        check("resolution equals blowup route r=2",
              pairing_even_resolution(2, MonomialClass{0, {1, 0, 0, 0}}) -
                  pairing_even_desing(2, MonomialClass{0, {1, 0, 0, 0}}),
              Rational(0));
        {
            auto ih = ih_poincare_series(2, 2);
            check("ih series r=2 z^0", ih[0], Rational(1));
            check("ih series r=2 z^2", ih[2], Rational(1));
        }
        {
            std::vector<Rational> linear{Rational(0), Rational(1)};
            check("regularized sum of d", zeta_reg_sum(linear), Rational(-1, 12));
            std::vector<Rational> constant{Rational(1)};
            check("regularized sum of 1", zeta_reg_sum(constant), Rational(-1, 2));
        }
        check("B_2(1)", bernoulli_poly_at(2, Rational(1)), Rational(1, 6));
        check("rank-2 chamber pairing g=2", jk_pairing_rank2(2, 0), Rational(1, 6));
        check("rank-2 first blowup g=3", blowup1_rank2(3, 3, 3), Rational(35, 512));
        check("rank-2 second blowup g=3", blowup2_rank2(3, 3, 3), Rational(-9, 8),
              "printed value; the source formula carries a documented typo caveat");
        check("rank-2 full pairing g=3", jkkw_pairing_rank2(3, 3, 3, true).total,
              Rational(-1623, 256), "arbiter for the second-blowup value");
        {
            Rank3PairingSpec s1{2, {{3, 1}}, 7};
            check("rank-3 residue pairing g=2", bracket_j20_j10_pairing(s1), Rational(70, 9));
            Rank3PairingSpec s2{3, {{3, 3}}, 10};
            check("rank-3 residue pairing g=3", bracket_j20_j10_pairing(s2),
                  Rational(-32200, 729));
        }
        {
            GeneratorLabel j20{GenKind::J, 2, 0, ""}, j10{GenKind::J, 1, 0, ""};
            check_lie("bracket table (3,0,+)", jk_minus_joyce_special(3, 0, '+'),
                      LieExpr::nested({j20, j10}).scaled(Rational(-1, 6)));
            check_lie("bracket table (3,0,-)", jk_minus_joyce_special(3, 0, '-'),
                      LieExpr::nested({j20, j10}).scaled(Rational(1, 6)));
            GeneratorLabel j30{GenKind::J, 3, 0, ""};
            check_lie("bracket table (4,0,+)", jk_minus_joyce_special(4, 0, '+'),
                      LieExpr::nested({j30, j10}).scaled(Rational(-1, 4)) +
                          LieExpr::nested({j20, j10, j10}).scaled(Rational(1, 24)));
            check_lie("bracket table (4,2,+)", jk_minus_joyce_special(4, 2, '+'), LieExpr());
            check_lie("route agreement (3,0,+)",
                      jk_minus_joyce_general(3, 0, ParabolicWeight::plus(3)),
                      jk_minus_joyce_special(3, 0, '+'));
            check_lie("pair-class expansion (2,0)", pi_pair_expansion(2, 0),
                      LieExpr::generator(j20));
        }

        if (failures) *failures = bad;
        report << "passed " << (total_rows - bad) << "/" << total_rows << " golden checks";
        if (bad > 0) report << ", " << bad << " failed";
        report << "\n";
        *out_report = dup_string(report.str());
    });
}

}  // extern "C"
