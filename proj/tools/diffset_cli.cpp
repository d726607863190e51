// diffset: verify, search for and certify difference sets in finite abelian
// groups, and test Boolean functions for bentness.
//
// Exit codes: 0 = accepted / success, 1 = ran and rejected, 2 = usage or
// parse error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "diffset/bent.hpp"
#include "diffset/characters.hpp"
#include "diffset/designs.hpp"
#include "diffset/group.hpp"
#include "diffset/ringpoly.hpp"
#include "diffset/search.hpp"

namespace {

using nlohmann::json;

constexpr int kExitAccepted = 0;
constexpr int kExitRejected = 1;
constexpr int kExitUsage = 2;

void print_certificate(const diffset::Certificate& cert) {
    std::cout << (cert.verdict ? "ACCEPT" : "REJECT") << ": (" << cert.params.v << ','
              << cert.params.k << ',' << cert.params.lambda << ") via " << method_name(cert.method)
              << '\n';
    if (!cert.verdict) {
        if (cert.witness_popcount) {
            std::cout << "  witness: |D| = " << *cert.witness_popcount << " != k\n";
        } else if (cert.witness_element) {
            std::cout << "  witness: element " << diffset::to_string(*cert.witness_element)
                      << " has count " << (cert.witness_count ? *cert.witness_count : 0) << '\n';
        } else if (cert.witness_character) {
            std::cout << "  witness: character exps (";
            for (std::size_t i = 0; i < cert.witness_character->exps.size(); ++i) {
                if (i) std::cout << ',';
                std::cout << cert.witness_character->exps[i];
            }
            std::cout << ") has Psi = " << cert.witness_value << '\n';
        }
    }
    if (!cert.note.empty()) std::cout << "  note: " << cert.note << '\n';
}

int cmd_verify(const std::string& group_text, const std::string& set_text, std::int64_t k,
               std::int64_t lambda, const std::string& method, bool as_json) {
    diffset::GroupSpec g = diffset::GroupSpec::parse(group_text);
    diffset::SubsetD d = diffset::SubsetD::parse(g, set_text);
    diffset::Certificate cert =
        diffset::verify(d, diffset::DesignParams{g.order(), k, lambda}, diffset::parse_method(method));
    if (as_json) std::cout << cert.to_json().dump(2) << '\n';
    else print_certificate(cert);
    return cert.verdict ? kExitAccepted : kExitRejected;
}

int cmd_verify_gds(const std::string& group_text, const std::string& set_text,
                   const std::string& mset_text, std::int64_t k, std::int64_t lambda1,
                   std::int64_t lambda2, const std::string& method, bool as_json) {
    diffset::GroupSpec g = diffset::GroupSpec::parse(group_text);
    diffset::SubsetD d = diffset::SubsetD::parse(g, set_text);
    diffset::GeneralizedParams gp{diffset::SubsetD::parse(g, mset_text), lambda1, lambda2};
    diffset::Certificate cert = diffset::verify_generalized(d, gp, k, diffset::parse_method(method));
    if (as_json) {
        json j = cert.to_json();
        j["generalized"] = {{"m_size", gp.m_set.size()},
                            {"lambda1", lambda1},
                            {"lambda2", lambda2},
                            {"identity_in_m", gp.contains_identity()}};
        std::cout << j.dump(2) << '\n';
    } else {
        print_certificate(cert);
    }
    return cert.verdict ? kExitAccepted : kExitRejected;
}

int cmd_search(const std::string& group_text, std::int64_t k, std::int64_t lambda,
               const std::string& dedup, std::optional<std::int64_t> limit, bool as_json) {
    diffset::GroupSpec g = diffset::GroupSpec::parse(group_text);
    diffset::SearchConfig cfg;
    cfg.params = diffset::DesignParams{g.order(), k, lambda};
    if (dedup == "translation") cfg.dedup = diffset::Dedup::Translation;
    else if (dedup != "none") throw CLI::ValidationError("--dedup must be none or translation");
    cfg.limit = limit;
    diffset::SearchResult res = diffset::search(g, cfg);
    if (as_json) {
        json j;
        j["group"] = group_text;
        j["params"] = {{"v", g.order()}, {"k", k}, {"lambda", lambda}};
        j["ryser_failed"] = res.ryser_failed;
        j["truncated"] = res.truncated;
        j["count"] = res.sets.size();
        j["sets"] = json::array();
        for (const auto& d : res.sets) j["sets"].push_back(d.to_string());
        std::cout << j.dump(2) << '\n';
    } else {
        if (res.ryser_failed)
            std::cout << "no search: Ryser condition lambda(v-1) = k(k-1) fails\n";
        for (const auto& d : res.sets) std::cout << d.to_string() << '\n';
        std::cout << "found " << res.sets.size() << " set(s)";
        if (res.truncated) std::cout << " (truncated by --limit)";
        std::cout << '\n';
    }
    return kExitAccepted;
}

int cmd_chars(const std::string& group_text, const std::string& set_text, std::int64_t k,
              std::int64_t lambda, bool as_json) {
    diffset::GroupSpec g = diffset::GroupSpec::parse(group_text);
    diffset::SubsetD d = diffset::SubsetD::parse(g, set_text);
    auto reports = diffset::psi_all(d, k, lambda);
    if (as_json) {
        json j = json::array();
        for (const auto& r : reports) {
            j.push_back({{"exponents", r.character.exps},
                         {"psi", r.value.to_string()},
                         {"approx", {r.approx.real(), r.approx.imag()}},
                         {"zero", r.is_zero}});
        }
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "character exponents | exact Psi | float approx | zero\n";
        for (const auto& r : reports) {
            std::cout << '(';
            for (std::size_t i = 0; i < r.character.exps.size(); ++i) {
                if (i) std::cout << ',';
                std::cout << r.character.exps[i];
            }
            std::cout << ") | " << r.value.to_string() << " | (" << r.approx.real() << ','
                      << r.approx.imag() << ") | " << (r.is_zero ? "yes" : "no") << '\n';
        }
    }
    return diffset::all_zero(reports) ? kExitAccepted : kExitRejected;
}

int cmd_ideal(const std::string& group_text, std::int64_t k, std::int64_t lambda,
              const std::string& out_path) {
    diffset::GroupSpec g = diffset::GroupSpec::parse(group_text);
    diffset::IdealSystem sys = diffset::export_system(g, diffset::DesignParams{g.order(), k, lambda});
    if (out_path.empty() || out_path == "-") {
        std::cout << sys.render();
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot open output file '" + out_path + "'");
        out << sys.render();
    }
    return kExitAccepted;
}

int cmd_bent_check(int vars, const std::string& tt, const std::string& tt_file, bool as_json) {
    std::string table = tt;
    if (!tt_file.empty()) {
        std::ifstream in(tt_file);
        if (!in) throw std::runtime_error("cannot open truth table file '" + tt_file + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        table = buf.str();
        while (!table.empty() && (table.back() == '\n' || table.back() == '\r' || table.back() == ' '))
            table.pop_back();
    }
    if (table.empty()) throw CLI::ValidationError("one of --tt or --tt-file is required");
    diffset::BooleanFunction f = diffset::BooleanFunction::parse(vars, table);
    diffset::BentReport rep = diffset::is_bent_ds(f);
    diffset::WalshReport walsh = diffset::walsh_oracle(f);
    if (as_json) {
        json j;
        j["bent"] = rep.bent;
        j["k"] = rep.k;
        j["lambda"] = rep.lambda;
        j["sign"] = rep.sign;
        j["support_size"] = rep.support_size;
        j["method_agreement"] = rep.bent == walsh.bent;
        if (rep.outside_standard_range) j["outside_standard_range"] = true;
        if (!rep.note.empty()) j["note"] = rep.note;
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << (rep.bent ? "bent" : "not bent") << " (support size " << rep.support_size;
        if (rep.sign != 0)
            std::cout << ", difference-set params k=" << rep.k << " lambda=" << rep.lambda;
        std::cout << ")\n";
        std::cout << "Walsh oracle agrees: " << (rep.bent == walsh.bent ? "yes" : "NO") << '\n';
        if (!rep.note.empty()) std::cout << "note: " << rep.note << '\n';
    }
    return rep.bent ? kExitAccepted : kExitRejected;
}

int cmd_bent_mm(int m, bool as_json) {
    diffset::BooleanFunction f = diffset::BooleanFunction::inner_product(m);
    if (as_json) {
        json j;
        j["vars"] = f.vars();
        j["truth_table"] = f.to_bit_string();
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << f.to_bit_string() << '\n';
    }
    return kExitAccepted;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification, search and certification of (v,k,lambda) difference sets "
                 "in finite abelian groups, with a bent-function layer"};
    app.require_subcommand(1);

    bool as_json = false;
    app.add_flag("--json", as_json, "emit JSON reports");

    std::string group_text, set_text, mset_text, method = "all", dedup = "none", out_path, tt, tt_file;
    std::int64_t k = 0, lambda = 0, lambda1 = 0, lambda2 = 0;
    std::optional<std::int64_t> limit;
    int vars = 0, mm_m = 0;

    auto* verify_cmd = app.add_subcommand("verify", "verify a (v,k,lambda) difference set");
    verify_cmd->add_option("--group", group_text, "cyclic orders, e.g. 4,4")->required();
    verify_cmd->add_option("--set", set_text, "subset, e.g. (0,1);(0,2)")->required();
    verify_cmd->add_option("--k", k)->required();
    verify_cmd->add_option("--lambda", lambda)->required();
    verify_cmd->add_option("--method", method, "definition|groupring|characters-exact|characters-float|all");

    auto* gds_cmd = app.add_subcommand("verify-gds", "verify a generalized difference set");
    gds_cmd->add_option("--group", group_text)->required();
    gds_cmd->add_option("--set", set_text)->required();
    gds_cmd->add_option("--m-set", mset_text, "the set M")->required();
    gds_cmd->add_option("--k", k)->required();
    gds_cmd->add_option("--lambda1", lambda1)->required();
    gds_cmd->add_option("--lambda2", lambda2)->required();
    gds_cmd->add_option("--method", method);

    auto* search_cmd = app.add_subcommand("search", "enumerate all (v,k,lambda) difference sets");
    search_cmd->add_option("--group", group_text)->required();
    search_cmd->add_option("--k", k)->required();
    search_cmd->add_option("--lambda", lambda)->required();
    search_cmd->add_option("--dedup", dedup, "none|translation");
    search_cmd->add_option("--limit", limit, "maximum number of results");

    auto* chars_cmd = app.add_subcommand("chars", "tabulate Psi(xi, alpha) over all characters");
    chars_cmd->add_option("--group", group_text)->required();
    chars_cmd->add_option("--set", set_text)->required();
    chars_cmd->add_option("--k", k)->required();
    chars_cmd->add_option("--lambda", lambda)->required();

    auto* ideal_cmd = app.add_subcommand("ideal", "export the defining polynomial system");
    ideal_cmd->add_option("--group", group_text)->required();
    ideal_cmd->add_option("--k", k)->required();
    ideal_cmd->add_option("--lambda", lambda)->required();
    ideal_cmd->add_option("--out", out_path, "output file ('-' for stdout)");

    auto* bent_cmd = app.add_subcommand("bent", "Boolean function bentness tests");
    bent_cmd->require_subcommand(1);
    auto* bent_check = bent_cmd->add_subcommand("check", "test a truth table for bentness");
    bent_check->add_option("--vars", vars, "number of variables t")->required();
    bent_check->add_option("--tt", tt, "truth table: 2^t binary digits or 0x-hex");
    bent_check->add_option("--tt-file", tt_file, "file holding the truth table");
    auto* bent_mm = bent_cmd->add_subcommand("mm", "print the inner-product truth table");
    bent_mm->add_option("--m", mm_m, "half the variable count")->required();

    // Let the global --json appear after a subcommand too.
    for (CLI::App* sc : {verify_cmd, gds_cmd, search_cmd, chars_cmd, ideal_cmd, bent_cmd,
                         bent_check, bent_mm})
        sc->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitAccepted : kExitUsage;
    }

    try {
        if (verify_cmd->parsed()) return cmd_verify(group_text, set_text, k, lambda, method, as_json);
        if (gds_cmd->parsed())
            return cmd_verify_gds(group_text, set_text, mset_text, k, lambda1, lambda2, method, as_json);
        if (search_cmd->parsed()) return cmd_search(group_text, k, lambda, dedup, limit, as_json);
        if (chars_cmd->parsed()) return cmd_chars(group_text, set_text, k, lambda, as_json);
        if (ideal_cmd->parsed()) return cmd_ideal(group_text, k, lambda, out_path);
        if (bent_cmd->parsed()) {
            if (bent_check->parsed()) return cmd_bent_check(vars, tt, tt_file, as_json);
            if (bent_mm->parsed()) return cmd_bent_mm(mm_m, as_json);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
