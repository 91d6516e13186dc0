#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "fitring/decomp.hpp"
#include "fitring/harness.hpp"
#include "fitring/serial.hpp"

namespace {

using namespace fitring;

Presentation load_presentation(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j;
    in >> j;
    return presentation_from_json(j);
}

void print_summary(const CampaignSummary& s) {
    json j;
    j["cases"] = s.cases;
    j["equality_cases"] = s.equality_cases;
    j["principal_cases"] = s.principal_cases;
    j["equality_nonprincipal_cases"] = s.equality_nonprincipal_cases;
    j["precision_retries"] = s.precision_retries;
    j["indeterminate_cases"] = s.indeterminate_cases;
    j["violations"] = s.violations;
    json fp, ff;
    for (const auto& [k, v] : s.flag_pass) fp[k] = v;
    for (const auto& [k, v] : s.flag_fail) ff[k] = v;
    j["flag_pass"] = fp;
    j["flag_fail"] = ff;
    j["wall_seconds"] = s.wall_seconds;
    std::cout << j.dump(2) << "\n";
}

int run_campaign(CampaignConfig& cc, bool exhaustive, const std::string& values_file) {
    if (!values_file.empty()) {
        std::ifstream in(values_file);
        if (!in) throw std::runtime_error("cannot open " + values_file);
        json j;
        in >> j;
        for (const auto& g : j) {
            std::vector<std::vector<std::uint64_t>> elem;
            for (const auto& c : g) elem.push_back(c.get<std::vector<std::uint64_t>>());
            cc.custom_values.push_back(std::move(elem));
        }
    }
    CampaignSummary s = campaign(cc, exhaustive);
    print_summary(s);
    return summary_exit_code(s);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic verification of Fitting-ideal cardinality bounds "
                 "for modules over A[C_p]"};
    app.require_subcommand(1);

    CampaignConfig cc;
    std::string values_file, input_file, group_spec, precision = "auto";

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--p", cc.p, "prime p");
        sub->add_option("--d", cc.d, "residue degree of A");
        sub->add_option("--t", cc.t_max, "number of module generators");
        sub->add_option("--e", cc.kill_exp, "kill exponent (columns p^e e_i)");
        sub->add_option("--precision", precision, "'auto' or an explicit Nprec");
        sub->add_option("--minor-cap", cc.minor_cap, "max number of t x t minors");
        sub->add_option("--jobs", cc.parallelism, "worker threads");
        sub->add_option("--out", cc.out_path, "summary/CSV output prefix");
    };

    auto* verify = app.add_subcommand("verify", "randomized campaign over seeded presentations");
    add_common(verify);
    verify->add_option("--s", cc.s_max, "extra relation columns per case");
    verify->add_option("--samples", cc.samples, "number of random cases")->required();
    verify->add_option("--seed", cc.seed, "RNG seed");

    auto* exhaust = app.add_subcommand("exhaust", "exhaustive sweep over a finite value set");
    add_common(exhaust);
    exhaust->add_option("--s", cc.s_max, "max extra relation columns");
    exhaust->add_option("--s-min", cc.s_min, "min extra relation columns");
    exhaust->add_option("--values", values_file, "JSON file with the coefficient value set");
    exhaust->add_option("--enum-cap", cc.enum_cap, "max enumerated cases");

    auto* analyze_cmd = app.add_subcommand("analyze", "full dossier for one presentation");
    analyze_cmd->add_option("--input", input_file, "presentation JSON file")->required();
    analyze_cmd->add_option("--minor-cap", cc.minor_cap, "max number of t x t minors");

    auto* decomp_cmd = app.add_subcommand("decompose", "factor Z_p[G] for abelian G");
    decomp_cmd->add_option("--group", group_spec, "cyclic orders, comma separated")->required();
    decomp_cmd->add_option("--p", cc.p, "prime p")->required();

    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force enumeration cross-check");
    oracle_cmd->add_option("--input", input_file, "presentation JSON file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (precision != "auto") cc.nprec = static_cast<unsigned>(std::stoul(precision));

        if (verify->parsed()) {
            cc.t_min = cc.t_max;
            return run_campaign(cc, false, "");
        }
        if (exhaust->parsed()) {
            cc.t_min = cc.t_max;
            return run_campaign(cc, true, values_file);
        }
        if (analyze_cmd->parsed()) {
            Presentation P = load_presentation(input_file);
            CaseRecord rec = analyze_with_retry(P, cc.minor_cap);
            json j = report_to_json(rec.report);
            j["retries"] = rec.retries;
            j["indeterminate"] = rec.indeterminate;
            std::cout << j.dump(2) << "\n";
            if (rec.indeterminate) return 3;
            return rec.report.all_flags_pass() ? 0 : 1;
        }
        if (decomp_cmd->parsed()) {
            AbelianGroup g;
            std::stringstream ss(group_spec);
            std::string tok;
            while (std::getline(ss, tok, ','))
                g.cyclic_orders.push_back(std::stoull(tok));
            auto factors = decompose_group_ring(g, cc.p);
            json j;
            j["p"] = cc.p;
            j["group_order"] = g.order();
            j["factor_count_order"] = decomposition_order(factors, cc.p);
            json fs = json::array();
            for (const auto& f : factors)
                fs.push_back({{"f", f.f}, {"has_c", f.has_c}, {"multiplicity", f.multiplicity}});
            j["factors"] = fs;
            std::cout << j.dump(2) << "\n";
            return j["factor_count_order"] == g.order() ? 0 : 1;
        }
        if (oracle_cmd->parsed()) {
            Presentation P = load_presentation(input_file);
            bool ok = oracle_check(P);
            std::cout << (ok ? "oracle: AGREE\n" : "oracle: DISAGREE\n");
            return ok ? 0 : 1;
        }
    } catch (const PrecisionExhausted& e) {
        std::cerr << "precision exhausted: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
