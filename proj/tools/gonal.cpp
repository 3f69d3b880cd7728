/*
   Copyright 2026 The gonal4 authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Command-line front end: stratification tables, admissibility checks,
// explicit curve construction over a prime field, re-verification of
// curve files, rank experiments and degenerate-fibre tables.
//
// Exit codes: 0 success, 1 semantic negative (inadmissible tuple, failed
// verification), 2 usage or domain error, 3 construction failure.

#include <atomic>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gonal4/curvefile.hpp"
#include "gonal4/fiberclass.hpp"
#include "gonal4/strata.hpp"
#include "gonal4/version.hpp"

using namespace gonal4;

namespace {

u64 seed_or_env(u64 seed_flag, bool seed_given) {
    if (seed_given) return seed_flag;
    if (const char* env = std::getenv("GONAL_SEED")) return std::strtoull(env, nullptr, 10);
    return 0;
}

ojson envelope(const std::string& command, ojson inputs, ojson results, u64 seed, u64 p) {
    ojson j;
    j["schema_version"] = "1";
    j["command"] = command;
    j["inputs"] = std::move(inputs);
    j["results"] = std::move(results);
    j["provenance"] = ojson{{"seed", seed}, {"p", p}, {"tool_version", kToolVersion}};
    return j;
}

ojson tuple_json(const InvariantTuple& t) {
    ojson j;
    j["g"] = t.g;
    j["t"] = t.t;
    j["lambda"] = t.lambda;
    j["a"] = t.a;
    j["b"] = t.b;
    j["c"] = t.c;
    j["delta"] = t.delta;
    j["eps"] = t.eps;
    j["tau"] = t.tau;
    j["xi"] = t.xi;
    j["a_min"] = t.amin;
    j["admissible"] = t.admissible;
    j["reasons"] = t.reasons;
    return j;
}

ojson stratum_json(const StratumRecord& r) {
    ojson j;
    j["lambda"] = r.tuple.lambda;
    if (!r.lambda_level) {
        j["a"] = r.tuple.a;
        j["b"] = r.tuple.b;
        j["c"] = r.tuple.c;
        j["eps"] = r.tuple.eps;
        j["tau"] = r.tuple.tau;
    }
    j["delta"] = r.tuple.delta;
    j["xi"] = r.tuple.xi;
    j["dim_W"] = r.dim_W;
    j["dim_fiber"] = r.dim_fiber_theta;
    j["dim_M"] = r.dim_M;
    if (!r.lambda_level) j["generic"] = r.is_generic_stratum;
    j["source"] = r.source;
    return j;
}

std::string stratum_csv_row(const StratumRecord& r) {
    std::ostringstream os;
    auto cell = [&](i64 v) { os << v; };
    os << r.tuple.lambda << ",";
    if (r.lambda_level) {
        os << ",,,";
    } else {
        os << r.tuple.a << "," << r.tuple.b << "," << r.tuple.c << ",";
    }
    cell(r.tuple.delta);
    os << ",";
    if (r.lambda_level)
        os << ",,";
    else
        os << r.tuple.eps << "," << r.tuple.tau << ",";
    os << r.tuple.xi << "," << r.dim_W << "," << r.dim_fiber_theta << "," << r.dim_M << ",";
    if (!r.lambda_level) os << (r.is_generic_stratum ? 1 : 0);
    return os.str();
}

int cmd_table(i64 g, i64 t, bool t_given, const std::string& format) {
    if (g < 10) {
        std::cerr << "error: g must be >= 10\n";
        return 2;
    }
    std::vector<StratumRecord> rows = stratification_table(g);
    if (t_given) {
        std::vector<StratumRecord> extra = stratification_table_t(g, t);
        rows.insert(rows.end(), extra.begin(), extra.end());
    }
    std::vector<MaximalityViolation> bad = maximality_violations(g);
    for (const auto& v : bad)
        std::cerr << "warning: stratum dimension anomaly at (g,lambda,a,b)=(" << v.g << "," << v.lambda << ","
                  << v.a << "," << v.b << "): dim " << v.dim_ab << " vs " << v.dim_lambda << "\n";
    if (format == "csv") {
        std::cout << "lambda,a,b,c,delta,eps,tau,xi,dim_W,dim_fiber,dim_M,generic\n";
        for (const auto& r : rows) std::cout << stratum_csv_row(r) << "\n";
    } else {
        ojson res;
        res["rows"] = ojson::array();
        for (const auto& r : rows) res["rows"].push_back(stratum_json(r));
        ojson inputs{{"g", g}};
        if (t_given) inputs["t"] = t;
        std::cout << envelope("table", inputs, res, 0, 0).dump(2) << "\n";
    }
    return 0;
}

int cmd_check(i64 g, i64 lambda, i64 a, i64 b, i64 t, bool t_given) {
    InvariantTuple r = t_given && t >= 1 ? check_admissible_tpos(g, lambda, t)
                                         : check_admissible_t0(g, lambda, a, b);
    if (t_given && t >= 1 && r.admissible && (r.a != a || r.b != b)) {
        r.admissible = false;
        r.reasons.push_back("a,b determined by (g,lambda,t) as (" + std::to_string(r.a) + "," +
                            std::to_string(r.b) + ")");
    }
    ojson inputs{{"g", g}, {"lambda", lambda}, {"a", a}, {"b", b}};
    if (t_given) inputs["t"] = t;
    std::cout << envelope("check", inputs, tuple_json(r), 0, 0).dump(2) << "\n";
    return r.admissible ? 0 : 1;
}

int cmd_construct(i64 g, i64 lambda, i64 a, i64 b, u64 p, u64 seed, const std::string& out_path,
                  int max_retries) {
    InvariantTuple tup = check_admissible_t0(g, lambda, a, b);
    if (!tup.admissible) {
        std::cerr << "error: inadmissible tuple:";
        for (const auto& r : tup.reasons) std::cerr << " " << r;
        std::cerr << "\n";
        return 2;
    }
    try {
        ConstructedCurve c = construct(g, lambda, a, b, p, seed, max_retries);
        if (!out_path.empty()) write_curve_file(c, out_path);
        ojson res;
        res["curve"] = curve_to_json(c);
        res["plan_tries"] = c.plan_tries;
        res["sample_tries"] = c.sample_tries;
        if (!out_path.empty()) res["out"] = out_path;
        std::cout << envelope("construct", ojson{{"g", g}, {"lambda", lambda}, {"a", a}, {"b", b}},
                              res, seed, p)
                         .dump(2)
                  << "\n";
        return 0;
    } catch (const ConstructionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        for (const auto& line : e.trace()) std::cerr << "  " << line << "\n";
        return 3;
    }
}

int cmd_verify(const std::string& path) {
    CurveFile f = read_curve_file(path);
    VerifyReport r = verify_curve_file(f);
    ojson res;
    res["pass"] = r.pass();
    res["admissible"] = r.admissible;
    res["node_count_ok"] = r.node_count_ok;
    res["distinct_fibres_ok"] = r.distinct_fibres_ok;
    res["nodes_pass"] = r.nodes_pass;
    res["singular_locus_pass"] = r.singular_locus_pass;
    res["irreducible"] = r.irreducible;
    res["invariants_recovered"] = r.invariants_recovered;
    res["genus_ok"] = r.genus_ok;
    res["failures"] = r.failures;
    std::cout << envelope("verify", ojson{{"file", path}}, res, f.seed, f.p).dump(2) << "\n";
    return r.pass() ? 0 : 1;
}

int cmd_rank_experiment(i64 g, i64 lambda, i64 a, i64 b, bool ab_given, i64 t, bool t_given, int trials,
                        u64 p, u64 seed, int jobs) {
    InvariantTuple tup = t_given && t >= 1 ? check_admissible_tpos(g, lambda, t)
                                           : check_admissible_t0(g, lambda, a, b);
    if (!tup.admissible) {
        std::cerr << "error: inadmissible tuple:";
        for (const auto& r : tup.reasons) std::cerr << " " << r;
        std::cerr << "\n";
        return 2;
    }
    if (!t_given && !ab_given) {
        std::cerr << "error: rank-experiment needs a and b (t = 0) or --t\n";
        return 2;
    }
    std::atomic<int> passes{0};
    auto run_range = [&](int lo, int hi) {
        for (int i = lo; i < hi; ++i) {
            u64 sub = derive_seed(seed, 0x7472ull, static_cast<u64>(i));
            bool ok;
            if (t_given && t >= 1) {
                ok = keylemma_rank_experiment_tpos(g, lambda, t, p, sub).pass;
            } else {
                NodePlan plan = build_node_plan(g, lambda, a, b, p, sub);
                ok = keylemma_rank_check(plan).pass;
            }
            if (ok) passes.fetch_add(1);
        }
    };
    int njobs = std::max(1, jobs);
    if (njobs == 1) {
        run_range(0, trials);
    } else {
        std::vector<std::thread> pool;
        int chunk = (trials + njobs - 1) / njobs;
        for (int k = 0; k < njobs; ++k)
            pool.emplace_back(run_range, k * chunk, std::min(trials, (k + 1) * chunk));
        for (auto& th : pool) th.join();
    }
    ojson res;
    res["trials"] = trials;
    res["passes"] = passes.load();
    res["pass_rate"] = trials > 0 ? static_cast<double>(passes.load()) / trials : 1.0;
    res["expected_rank"] = 3 * tup.delta;
    ojson inputs{{"g", g}, {"lambda", lambda}};
    if (t_given)
        inputs["t"] = t;
    else {
        inputs["a"] = a;
        inputs["b"] = b;
    }
    std::cout << envelope("rank-experiment", inputs, res, seed, p).dump(2) << "\n";
    return 0;
}

BlowupScript parse_script(const std::string& s) {
    BlowupScript script;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        if (tok == "f" || tok == "fibre" || tok == "fiber")
            script.push_back(BlowupCenter::OnFibre);
        else if (tok == "s" || tok == "strict")
            script.push_back(BlowupCenter::OnStrictTransform);
        else if (tok == "e" || tok == "exceptional")
            script.push_back(BlowupCenter::OnLastExceptional);
        else if (tok == "i" || tok == "intersection")
            script.push_back(BlowupCenter::AtIntersection);
        else
            throw std::invalid_argument("unknown blow-up center '" + tok + "' (use f, s, e, i)");
    }
    return script;
}

ojson row_json(const LevelTableRow& row) {
    ojson j;
    j["fiber"] = fiber_type_name(row.fiber);
    j["pattern"] = row.pattern;
    ojson sings = ojson::array();
    for (const auto& s : row.singularities) sings.push_back(singularity_name(s));
    j["singularities"] = sings;
    j["liftable"] = row.liftable;
    return j;
}

int cmd_fibers(int level_arg, bool level_given, const std::string& script_arg, bool script_given) {
    ojson res;
    if (script_given) {
        BlowupScript script = parse_script(script_arg);
        FiberType ft = classify_fiber(script);
        res["fiber"] = fiber_type_name(ft);
        res["level"] = ft.level;
        std::cout << envelope("fibers", ojson{{"script", script_arg}}, res, 0, 0).dump(2) << "\n";
        return 0;
    }
    if (!level_given) {
        std::cerr << "error: need --level or --script\n";
        return 2;
    }
    std::vector<LevelTableRow> rows = enumerate_level_table(level_arg);
    res["rows"] = ojson::array();
    for (const auto& r : rows) res["rows"].push_back(row_json(r));
    std::cout << envelope("fibers", ojson{{"level", level_arg}}, res, 0, 0).dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact calculus of tetragonal curve invariants, with constructive checks over prime fields"};
    app.require_subcommand(1);

    // table
    auto* table = app.add_subcommand("table", "stratification table for a genus");
    i64 tg = 0, tt = 0;
    std::string format = "json";
    table->add_option("g", tg, "genus (>= 10)")->required();
    auto* tt_opt = table->add_option("--t", tt, "also list strata of this invariant t >= 1");
    table->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    // check
    auto* check = app.add_subcommand("check", "admissibility of an invariant tuple");
    i64 cg = 0, cl = 0, ca = 0, cb = 0, ct = 0;
    check->add_option("g", cg)->required();
    check->add_option("lambda", cl)->required();
    check->add_option("a", ca)->required();
    check->add_option("b", cb)->required();
    auto* ct_opt = check->add_option("--t", ct, "surface invariant (>= 1 switches to the forced-parts check)");

    // construct
    auto* cons = app.add_subcommand("construct", "build and certify a nodal curve with the given invariants");
    i64 xg = 0, xl = 0, xa = 0, xb = 0;
    u64 xp = 10007, xseed = 0;
    int xretries = 32;
    std::string out_path;
    bool xseed_given = false;
    cons->add_option("g", xg)->required();
    cons->add_option("lambda", xl)->required();
    cons->add_option("a", xa)->required();
    cons->add_option("b", xb)->required();
    cons->add_option("--p", xp, "prime field modulus (default 10007)");
    cons->add_option("--seed", xseed)->each([&](const std::string&) { xseed_given = true; });
    cons->add_option("--retries", xretries, "samples per node plan (default 32)");
    cons->add_option("--out", out_path, "write the curve file here");

    // verify
    auto* ver = app.add_subcommand("verify", "re-certify a curve file");
    std::string ver_path;
    ver->add_option("file", ver_path)->required();

    // rank-experiment
    auto* rank = app.add_subcommand("rank-experiment", "independence rate of the node conditions");
    i64 rg = 0, rl = 0, ra = -1, rb = -1, rt = 0;
    int rtrials = 200, rjobs = 1;
    u64 rp = 10007, rseed = 0;
    bool rseed_given = false;
    rank->add_option("g", rg)->required();
    rank->add_option("lambda", rl)->required();
    auto* ra_opt = rank->add_option("a", ra);
    rank->add_option("b", rb);
    auto* rt_opt = rank->add_option("--t", rt, "surface invariant >= 1 (replaces a, b)");
    rank->add_option("--trials", rtrials);
    rank->add_option("--p", rp);
    rank->add_option("--seed", rseed)->each([&](const std::string&) { rseed_given = true; });
    rank->add_option("--jobs", rjobs, "worker threads; output is order-independent");

    // fibers
    auto* fib = app.add_subcommand("fibers", "degenerate-fibre classification tables");
    int flevel = 1;
    std::string fscript;
    auto* flevel_opt = fib->add_option("--level", flevel, "all configurations up to this level");
    auto* fscript_opt = fib->add_option("--script", fscript, "comma-separated blow-up centers (f,s,e,i)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*table) return cmd_table(tg, tt, tt_opt->count() > 0, format);
        if (*check) return cmd_check(cg, cl, ca, cb, ct, ct_opt->count() > 0);
        if (*cons) return cmd_construct(xg, xl, xa, xb, xp, seed_or_env(xseed, xseed_given), out_path, xretries);
        if (*ver) return cmd_verify(ver_path);
        if (*rank)
            return cmd_rank_experiment(rg, rl, ra, rb, ra_opt->count() > 0, rt, rt_opt->count() > 0,
                                       rtrials, rp, seed_or_env(rseed, rseed_given), rjobs);
        if (*fib) return cmd_fibers(flevel, flevel_opt->count() > 0, fscript, fscript_opt->count() > 0);
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
