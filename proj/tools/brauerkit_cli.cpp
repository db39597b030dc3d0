// brauerkit command-line front end: construct examples, print residue
// tables, certify indecomposability, and enumerate admissible
// noncrossed-product parameters, with byte-stable JSON output.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "brauerkit/brauerkit.hpp"
#include "brauerkit/serialize.hpp"

namespace {

using brauerkit::json;

struct SearchDegree {
    uint64_t value;
    std::string source; // "flag", "env", or "default"
};

// Priority: explicit flag, then BRAUERKIT_SEARCH_DEGREE, then 2 * q^e * e.
SearchDegree resolve_search_degree(const CLI::Option* flag, uint64_t flag_value, uint64_t q,
                                   uint32_t e) {
    if (flag != nullptr && flag->count() > 0) return {flag_value, "flag"};
    if (const char* env = std::getenv("BRAUERKIT_SEARCH_DEGREE")) {
        char* end = nullptr;
        unsigned long long parsed = std::strtoull(env, &end, 10);
        if (end == env || *end != '\0' || parsed == 0)
            throw std::invalid_argument("invalid BRAUERKIT_SEARCH_DEGREE value");
        return {static_cast<uint64_t>(parsed), "env"};
    }
    return {brauerkit::default_search_degree(q, e), "default"};
}

// Human-readable rendering: one "path = value" line per JSON leaf, so every
// number in the JSON document appears in the text output too.
void print_leaves(const json& j, const std::string& path) {
    if (j.is_object()) {
        for (const auto& [key, value] : j.items())
            print_leaves(value, path.empty() ? key : path + "." + key);
        if (j.empty()) std::cout << path << " = {}\n";
    } else if (j.is_array()) {
        for (size_t i = 0; i < j.size(); ++i)
            print_leaves(j[i], path + "[" + std::to_string(i) + "]");
        if (j.empty()) std::cout << path << " = []\n";
    } else {
        std::cout << path << " = " << j.dump() << "\n";
    }
}

void emit(const json& report, bool as_json, std::chrono::steady_clock::time_point started) {
    if (as_json) {
        std::cout << report.dump(2) << "\n";
        return;
    }
    print_leaves(report, "");
    auto elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
        std::chrono::steady_clock::now() - started);
    std::cout << "elapsed_ms = " << (static_cast<double>(elapsed.count()) / 1000.0) << "\n";
}

json make_report(const std::string& command, json inputs, json result) {
    json report;
    report["command"] = command;
    report["inputs"] = std::move(inputs);
    report["result"] = std::move(result);
    return report;
}

json witnesses_json(const brauerkit::GrunwaldWitnesses& w) {
    json j;
    j["theta"] = brauerkit::to_json(w.theta);
    j["v1"] = brauerkit::to_json(w.v1);
    j["v2"] = brauerkit::to_json(w.v2);
    return j;
}

} // namespace

int main(int argc, char** argv) {
    using namespace brauerkit;

    CLI::App app{"exact Brauer-class arithmetic over F_p(t) and its complete extension"};
    app.require_subcommand(1);

    // ---- indecomposable ----------------------------------------------------
    auto* ind = app.add_subcommand(
        "indecomposable", "build an indecomposable class of period q^e and index q^i");
    uint64_t ind_p = 2, ind_q = 3, ind_sd = 0;
    uint32_t ind_e = 1, ind_i = 1;
    bool ind_json = false;
    ind->add_option("--p", ind_p, "characteristic of the base field")->required();
    ind->add_option("--q", ind_q, "prime q, distinct from p")->required();
    ind->add_option("--e", ind_e, "period exponent: period = q^e")->required();
    ind->add_option("--i", ind_i, "index exponent: index = q^i")->required();
    CLI::Option* ind_sd_opt =
        ind->add_option("--search-degree", ind_sd, "bound on place degrees searched");
    ind->add_flag("--json", ind_json, "emit the report as JSON");

    // ---- certify -----------------------------------------------------------
    auto* cert = app.add_subcommand(
        "certify", "build the same class and report only the certificate");
    uint64_t cert_p = 2, cert_q = 3, cert_sd = 0;
    uint32_t cert_e = 1, cert_i = 1;
    bool cert_json = false;
    cert->add_option("--p", cert_p, "characteristic of the base field")->required();
    cert->add_option("--q", cert_q, "prime q, distinct from p")->required();
    cert->add_option("--e", cert_e, "period exponent: period = q^e")->required();
    cert->add_option("--i", cert_i, "index exponent: index = q^i")->required();
    CLI::Option* cert_sd_opt =
        cert->add_option("--search-degree", cert_sd, "bound on place degrees searched");
    cert->add_flag("--json", cert_json, "emit the report as JSON");

    // ---- residues ----------------------------------------------------------
    auto* res = app.add_subcommand(
        "residues", "residue table of the symbol (xi, pi_x0) over the support plus infinity");
    uint64_t res_p = 2;
    int64_t res_xi_order = 1;
    std::string res_x0;
    bool res_json = false;
    res->add_option("--p", res_p, "characteristic of the base field")->required();
    res->add_option("--xi-order", res_xi_order, "order of the constant character xi")->required();
    res->add_option("--x0", res_x0, "finite place: a monic irreducible polynomial in t")
        ->required();
    res->add_flag("--json", res_json, "emit the report as JSON");

    // ---- lift --------------------------------------------------------------
    auto* lift = app.add_subcommand(
        "lift", "single-symbol recipe with parameters (q, e, t), lifted off the special fiber");
    uint64_t lift_p = 2, lift_q = 3, lift_sd = 0;
    uint32_t lift_e = 1, lift_t = 1;
    bool lift_json = false;
    lift->add_option("--p", lift_p, "characteristic of the base field")->required();
    lift->add_option("--q", lift_q, "prime q, distinct from p")->required();
    lift->add_option("--e", lift_e, "period exponent: period = q^e")->required();
    lift->add_option("--t", lift_t, "local-order exponent, 1 <= t <= e")->required();
    CLI::Option* lift_sd_opt =
        lift->add_option("--search-degree", lift_sd, "bound on place degrees searched");
    lift->add_flag("--json", lift_json, "emit the report as JSON");

    // ---- ncp ---------------------------------------------------------------
    auto* ncp = app.add_subcommand(
        "ncp", "admissible period/index parameters for noncrossed products (parameters only)");
    uint64_t ncp_p = 2, ncp_q = 3, ncp_m0 = 1, ncp_lmax = 0;
    bool ncp_json = false;
    ncp->add_option("--p", ncp_p, "characteristic of the base field")->required();
    ncp->add_option("--q", ncp_q, "prime q, distinct from p")->required();
    ncp->add_option("--m0", ncp_m0, "constant field is F_(p^m0); default 1");
    ncp->add_option("--l-max", ncp_lmax, "largest period exponent l to enumerate")->required();
    ncp->add_flag("--json", ncp_json, "emit the report as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    auto started = std::chrono::steady_clock::now();
    try {
        if (ind->parsed()) {
            SearchDegree sd = resolve_search_degree(ind_sd_opt, ind_sd, ind_q, ind_e);
            IndecomposableResult r =
                build_indecomposable(PrimeField(ind_p), {ind_q, ind_e, ind_i}, sd.value);
            json inputs{{"p", ind_p}, {"q", ind_q}, {"e", ind_e}, {"i", ind_i},
                        {"search_degree", sd.value}, {"search_degree_source", sd.source}};
            json result;
            result["witnesses"] = witnesses_json(r.witnesses);
            result["gamma"] = to_json(r.gamma);
            result["certificate"] = to_json(r.certificate);
            result["lift"] = to_json(r.lifted, r.report);
            emit(make_report("indecomposable", std::move(inputs), std::move(result)), ind_json,
                 started);
        } else if (cert->parsed()) {
            SearchDegree sd = resolve_search_degree(cert_sd_opt, cert_sd, cert_q, cert_e);
            IndecomposableResult r =
                build_indecomposable(PrimeField(cert_p), {cert_q, cert_e, cert_i}, sd.value);
            json inputs{{"p", cert_p}, {"q", cert_q}, {"e", cert_e}, {"i", cert_i},
                        {"search_degree", sd.value}, {"search_degree_source", sd.source}};
            json result;
            result["gamma"] = to_json(r.gamma);
            result["certificate"] = to_json(r.certificate);
            emit(make_report("certify", std::move(inputs), std::move(result)), cert_json,
                 started);
        } else if (res->parsed()) {
            PrimeField base(res_p);
            if (res_xi_order < 1) throw std::invalid_argument("need xi-order >= 1");
            Place x0 = Place::parse(base, res_x0);
            CyclicCharacter xi = CyclicCharacter::constant(base, QmodZ::of(1, res_xi_order));
            SymbolPresentation pres(base);
            pres.add_term(xi, RationalFunction::from_place(x0));
            json table = json::array();
            for (const auto& [v, x] : pres.residue_table()) {
                if (x.is_zero()) continue; // table shows the ramified places only
                table.push_back({{"place", v.to_string()}, {"residue", x.to_string()}});
            }
            json inputs{{"p", res_p}, {"xi_order", res_xi_order}, {"x0", res_x0}};
            json result;
            result["xi"] = to_json(xi);
            result["x0"] = x0.to_string();
            result["table"] = std::move(table);
            result["class"] = to_json(pres.to_class());
            emit(make_report("residues", std::move(inputs), std::move(result)), res_json,
                 started);
        } else if (lift->parsed()) {
            SearchDegree sd = resolve_search_degree(lift_sd_opt, lift_sd, lift_q, lift_e);
            SymbolRecipeResult r =
                build_symbol_indecomposable(PrimeField(lift_p), lift_q, lift_e, lift_t, sd.value);
            json inputs{{"p", lift_p}, {"q", lift_q}, {"e", lift_e}, {"t", lift_t},
                        {"search_degree", sd.value}, {"search_degree_source", sd.source}};
            json result;
            result["x0"] = to_json(r.x0);
            result["xi"] = to_json(r.xi);
            result["gamma"] = to_json(r.gamma);
            result["residue_table"] = residue_table_json(r.residue_table);
            result["certificate"] = to_json(r.certificate);
            result["lift"] = to_json(r.lifted, r.report);
            emit(make_report("lift", std::move(inputs), std::move(result)), lift_json, started);
        } else if (ncp->parsed()) {
            PrimeField base(ncp_p);
            NcpBaseParams bp = ncp_parameters(ncp_q, base, ncp_m0);
            json admissible = json::array();
            for (const NcpParams& x : ncp_admissible(ncp_q, base, ncp_m0, ncp_lmax))
                admissible.push_back(to_json(x));
            json inputs{{"p", ncp_p}, {"q", ncp_q}, {"m0", ncp_m0}, {"l_max", ncp_lmax}};
            json result;
            result["parameters"] = to_json(bp);
            result["admissible"] = std::move(admissible);
            result["note"] = "parameters only; no algebra is constructed";
            emit(make_report("ncp", std::move(inputs), std::move(result)), ncp_json, started);
        }
    } catch (const SearchBoundExhausted& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::overflow_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
