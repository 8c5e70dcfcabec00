// orbilat: exact-arithmetic toolkit for lattices built from codes over Z_p,
// Leech coinvariant lattices, and the extra-automorphism decision procedure.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "orbilat/construction.hpp"
#include "orbilat/enumerate.hpp"
#include "orbilat/json_io.hpp"
#include "orbilat/leech.hpp"
#include "orbilat/orbifold.hpp"
#include "orbilat/triality.hpp"

namespace {

using namespace orbilat;
using Clock = std::chrono::steady_clock;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

std::uint64_t resolve_seed(std::uint64_t flag_seed, bool flag_set) {
    if (flag_set) return flag_seed;
    if (const char* env = std::getenv("ORBILAT_SEED")) return std::stoull(env, nullptr, 0);
    return kDefaultSeed;
}

nlohmann::json report_skeleton(const std::string& command, std::uint64_t seed) {
    nlohmann::json j;
    j["schema"] = 1;
    j["command"] = command;
    j["seed"] = seed;
    return j;
}

void finish_report(nlohmann::json& rep, Clock::time_point start, const std::string& out_path) {
    rep["timing_seconds"] = std::chrono::duration<double>(Clock::now() - start).count();
    if (!out_path.empty())
        write_json_file(out_path, rep);
    else
        std::cout << rep.dump(1) << "\n";
}

int cmd_construct(const std::string& code_path, long p_flag, const std::string& variant,
                  const std::string& out_path, std::uint64_t seed) {
    auto start = Clock::now();
    nlohmann::json jcode = load_json_file(code_path);
    CodeZp code = code_from_json(jcode);
    if (p_flag != 0 && p_flag != code.p) throw std::invalid_argument("--p disagrees with the code file");
    ConstructionContext ctx = make_context(code.p, code.t);
    Lattice l = (variant == "A") ? construct_A(ctx, code) : construct_B(ctx, code);
    nlohmann::json rep = report_skeleton("construct", seed);
    rep["inputs"] = {{"code", jcode}, {"variant", variant}};
    rep["lattice"] = lattice_to_json(l);
    nlohmann::json res;
    res["rank"] = l.rank();
    res["det"] = rat_str(l.det_gram());
    res["even"] = l.is_even();
    res["rootless"] = is_rootless(l);
    nlohmann::json factors = nlohmann::json::array();
    if (l.is_integral())
        for (const auto& f : discriminant_group(l).invariant_factors) factors.push_back(f.get_str());
    res["discriminant"] = factors;
    rep["results"] = res;
    finish_report(rep, start, out_path);
    return kExitOk;
}

int cmd_check_extra(const std::string& lattice_path, const std::string& isometry_path,
                    const std::string& out_path, std::uint64_t seed) {
    auto start = Clock::now();
    nlohmann::json jiso = load_json_file(isometry_path);
    LatticeIsometry g = [&] {
        if (!lattice_path.empty()) {
            nlohmann::json jl = load_json_file(lattice_path);
            Lattice l = lattice_from_json(jl);
            nlohmann::json sub = jiso.contains("matrix") ? jiso : nlohmann::json{{"matrix", jiso}};
            sub["lattice"] = lattice_to_json(l);
            return isometry_from_json(sub);
        }
        return isometry_from_json(jiso);
    }();
    ExtraAutVerdict verdict = decide_extra(g);
    nlohmann::json rep = report_skeleton("check-extra", seed);
    rep["verdict"] = verdict_to_json(verdict, g.lattice());
    finish_report(rep, start, out_path);
    return kExitOk;
}

int cmd_coinvariant(const std::string& tag, const std::string& out_path, std::uint64_t seed) {
    auto start = Clock::now();
    CoinvariantClass cc = coinvariant_class(tag, seed);
    nlohmann::json rep = report_skeleton("coinvariant", seed);
    rep["inputs"] = {{"tag", tag}};
    rep["permutation"] = cc.perm;
    rep["coinvariant"] = lattice_to_json(cc.coinvariant);
    rep["fixed"] = lattice_to_json(cc.fixed);
    rep["isometry"] = isometry_to_json(cc.action);
    nlohmann::json res;
    res["rank"] = cc.coinvariant.rank();
    nlohmann::json factors = nlohmann::json::array();
    for (const auto& f : discriminant_group(cc.coinvariant).invariant_factors) factors.push_back(f.get_str());
    res["discriminant"] = factors;
    rep["results"] = res;
    finish_report(rep, start, out_path);
    return kExitOk;
}

int cmd_classify(long p, long t, long dim, bool so, bool rootless, double budget, const std::string& out_path,
                 std::uint64_t seed) {
    auto start = Clock::now();
    ClassifyResult res = classify_codes(p, t, dim, so, rootless, budget);
    nlohmann::json rep = report_skeleton("classify-codes", seed);
    rep["inputs"] = {{"p", p}, {"t", t}, {"dim", dim}, {"self_orthogonal", so}, {"rootless_B", rootless}};
    nlohmann::json classes = nlohmann::json::array();
    for (const auto& c : res.classes) classes.push_back(code_to_json(c));
    rep["results"] = {{"classes", classes}, {"complete", res.complete}};
    finish_report(rep, start, out_path);
    return res.complete ? kExitOk : kExitBudget;
}

int cmd_verify_triality(long k, const std::string& out_path, std::uint64_t seed) {
    auto start = Clock::now();
    bool sfg = verify_sfg(k);
    bool conj = verify_conjugation_relations(k);
    bool grading = verify_weight_grading(k);
    nlohmann::json rep = report_skeleton("verify-triality", seed);
    rep["inputs"] = {{"k", k}};
    rep["results"] = {{"sfg", sfg}, {"conjugation", conj}, {"weight_grading", grading}};
    bool ok = sfg && conj && grading;
    rep["pass"] = ok;
    finish_report(rep, start, out_path);
    return ok ? kExitOk : kExitInternal;
}

struct SuiteRow {
    std::string name;
    bool pass;
    std::string note;
};

void print_rows(const std::vector<SuiteRow>& rows) {
    for (const auto& r : rows)
        std::cout << (r.pass ? "PASS  " : "FAIL  ") << r.name << (r.note.empty() ? "" : "  (" + r.note + ")")
                  << "\n";
}

int cmd_verify_paper(const std::string& suite, double budget, std::uint64_t seed) {
    auto start = Clock::now();
    auto remaining = [&]() { return budget <= 0 ? 0.0 : budget - std::chrono::duration<double>(Clock::now() - start).count(); };
    auto out_of_time = [&]() { return budget > 0 && remaining() <= 0; };
    std::vector<SuiteRow> rows;
    bool budget_hit = false;

    if (suite == "table1") {
        struct Row {
            long p, t, dim, rank;
            std::vector<std::vector<long>> gens;
        };
        std::vector<Row> table = {
            {3, 6, 1, 12, {{1, 1, 1, 1, 1, 1}}},
            {3, 9, 3, 18, {{1, 1, 1, 1, 1, 1, 1, 1, 1}, {1, 1, 1, 2, 2, 2, 0, 0, 0}, {1, 2, 0, 1, 2, 0, 1, 2, 0}}},
            {5, 4, 1, 16, {{1, 1, 2, 2}}},
            {5, 5, 2, 20, {{1, 1, 1, 1, 1}, {1, 2, 4, 3, 0}}},
            {7, 3, 1, 18, {{1, 2, 3}}},
        };
        for (const auto& row : table) {
            CodeZp c = make_code(row.p, row.t, row.gens);
            ConstructionContext ctx = make_context(row.p, row.t);
            Lattice la = construct_A(ctx, c);
            Lattice lb = construct_B(ctx, c);
            DiscriminantGroup d = discriminant_group(lb);
            bool ok = lb.rank() == static_cast<std::size_t>(row.rank);
            ok = ok && d.is_elementary(row.p) &&
                 static_cast<long>(d.invariant_factors.size()) == row.t - 2 * row.dim + 2;
            ok = ok && is_rootless(lb);
            ok = ok && count_of_norm(la, Rat(2)) == Int(row.t) * row.p * (row.p - 1);
            std::ostringstream name;
            name << "table1 [" << row.p << "," << row.t << "," << row.dim << "]";
            rows.push_back({name.str(), ok, ""});
        }
    } else if (suite == "table2") {
        struct Expect {
            long p, m, disc_rank;
        };
        std::vector<Expect> expect = {{3, 12, 6}, {3, 18, 5}, {5, 16, 4}, {5, 20, 3}, {7, 18, 3}, {11, 20, 2}, {23, 22, 1}};
        std::map<long, std::vector<OrbifoldParams>> got;
        for (long p : {3L, 5L, 7L, 11L, 23L}) got[p] = case2_parameter_table(p);
        std::size_t total = 0;
        for (auto& [p, v] : got) total += v.size();
        rows.push_back({"table2 row count = 7", total == 7, std::to_string(total) + " rows"});
        for (const auto& e : expect) {
            bool found = false;
            for (const auto& r : got[e.p])
                if (r.m == e.m && r.disc_rank == e.disc_rank) found = true;
            std::ostringstream name;
            name << "table2 (p=" << e.p << ", m=" << e.m << ", |D|=" << e.p << "^" << e.disc_rank << ")";
            rows.push_back({name.str(), found, ""});
        }
        rows.push_back({"table2 p=13 empty", case2_parameter_table(13).empty(), ""});
    } else if (suite == "triality") {
        for (long k = 2; k <= 9; ++k) {
            bool ok = verify_sfg(k) && verify_conjugation_relations(k) && verify_weight_grading(k);
            rows.push_back({"triality k=" + std::to_string(k), ok, ""});
            if (out_of_time()) {
                budget_hit = true;
                break;
            }
        }
    } else if (suite == "leech") {
        const Lattice& leech = build_leech();
        rows.push_back({"leech even unimodular rootless", leech.is_even() && leech.det_gram() == 1 && is_rootless(leech), ""});
        for (const std::string tag : {"3B", "5B", "7B", "11A", "23A"}) {
            bool ok = true;
            std::string note;
            try {
                coinvariant_class(tag, seed);
            } catch (const std::exception& e) {
                ok = false;
                note = e.what();
            }
            rows.push_back({"coinvariant " + tag, ok, note});
            if (out_of_time()) {
                budget_hit = true;
                break;
            }
        }
    } else if (suite == "uniqueC") {
        struct Params {
            long p, t, dim;
        };
        for (const Params prm : std::initializer_list<Params>{{3, 6, 1}, {5, 4, 1}, {7, 3, 1}, {5, 5, 2}, {3, 9, 3}}) {
            if (out_of_time()) {
                budget_hit = true;
                break;
            }
            ClassifyResult res = classify_codes(prm.p, prm.t, prm.dim, true, true, budget > 0 ? remaining() : 0);
            std::ostringstream name;
            name << "uniqueC (" << prm.p << "," << prm.t << "," << prm.dim << ")";
            if (!res.complete) {
                budget_hit = true;
                rows.push_back({name.str(), false, "budget exhausted, " + std::to_string(res.classes.size()) + " classes found"});
                break;
            }
            rows.push_back({name.str(), res.classes.size() == 1, std::to_string(res.classes.size()) + " classes"});
        }
    } else {
        throw std::invalid_argument("unknown suite " + suite);
    }

    print_rows(rows);
    bool all = true;
    for (const auto& r : rows) all = all && r.pass;
    if (budget_hit) {
        std::cout << "BUDGET EXCEEDED (partial results above)\n";
        return kExitBudget;
    }
    std::cout << (all ? "ALL PASS" : "FAILURES PRESENT") << "\n";
    return all ? kExitOk : kExitInternal;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact lattice/code toolkit for cyclic-orbifold extra-automorphism checks"};
    app.require_subcommand(1);

    std::uint64_t seed = kDefaultSeed;
    bool seed_set = false;
    app.add_option("--seed", seed, "random seed (default 0xC0FFEE; env ORBILAT_SEED overrides)")
        ->each([&](const std::string&) { seed_set = true; });

    // construct
    auto* construct = app.add_subcommand("construct", "build L_A(C) or L_B(C) from a code file");
    std::string code_path, variant = "B", out_path;
    long p_flag = 0;
    construct->add_option("--code", code_path, "code JSON file")->required();
    construct->add_option("--p", p_flag, "prime (cross-checked against the code file)");
    construct->add_option("--variant", variant, "A or B")->check(CLI::IsMember({"A", "B"}));
    construct->add_option("--out", out_path, "output report path (stdout if omitted)");

    // check-extra
    auto* check = app.add_subcommand("check-extra", "run the extra-automorphism decision procedure");
    std::string lattice_path, isometry_path, check_out;
    check->add_option("--lattice", lattice_path, "lattice JSON (optional if the isometry file embeds it)");
    check->add_option("--isometry", isometry_path, "isometry JSON")->required();
    check->add_option("--out", check_out, "output report path");

    // coinvariant
    auto* coin = app.add_subcommand("coinvariant", "build a Leech coinvariant lattice");
    std::string tag, coin_out;
    coin->add_option("--tag", tag, "3B, 5B, 7B, 11A or 23A")->required();
    coin->add_option("--out", coin_out, "output report path");

    // classify-codes
    auto* classify = app.add_subcommand("classify-codes", "exhaustive code classification up to equivalence");
    long cp = 3, ct = 6, cdim = 1;
    bool cso = true, crootless = true;
    double cbudget = 0;
    std::string classify_out;
    classify->add_option("--p", cp)->required();
    classify->add_option("--t", ct)->required();
    classify->add_option("--dim", cdim)->required();
    classify->add_flag("--self-orthogonal,!--no-self-orthogonal", cso, "require self-orthogonality (default on)");
    classify->add_flag("--rootless,!--no-rootless", crootless, "require L_B(C) rootless (default on)");
    classify->add_option("--budget", cbudget, "time budget in seconds (0 = unlimited)");
    classify->add_option("--out", classify_out, "output report path");

    // verify-triality
    auto* triality = app.add_subcommand("verify-triality", "verify the conjugation identities for one k");
    long tk = 3;
    std::string triality_out;
    triality->add_option("--k", tk)->required();
    triality->add_option("--out", triality_out, "output report path");

    // verify-paper
    auto* verify = app.add_subcommand("verify-paper", "run a named verification suite");
    std::string suite;
    double vbudget = 0;
    verify->add_option("--suite", suite, "table1|table2|triality|leech|uniqueC")->required();
    verify->add_option("--budget", vbudget, "time budget in seconds (0 = unlimited)");

    CLI11_PARSE(app, argc, argv);
    std::uint64_t eff_seed = resolve_seed(seed, seed_set);

    try {
        if (construct->parsed()) return cmd_construct(code_path, p_flag, variant, out_path, eff_seed);
        if (check->parsed()) return cmd_check_extra(lattice_path, isometry_path, check_out, eff_seed);
        if (coin->parsed()) return cmd_coinvariant(tag, coin_out, eff_seed);
        if (classify->parsed()) return cmd_classify(cp, ct, cdim, cso, crootless, cbudget, classify_out, eff_seed);
        if (triality->parsed()) return cmd_verify_triality(tk, triality_out, eff_seed);
        if (verify->parsed()) return cmd_verify_paper(suite, vbudget, eff_seed);
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitInternal;
}
