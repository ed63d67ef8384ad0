#ifndef PUNCTUAL_CLI_HPP
#define PUNCTUAL_CLI_HPP

#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "punctual/verify.hpp"

namespace punctual::cli {

inline constexpr const char* format_version = "1";

struct CliResult {
    int code = 0;
    std::string out;
    std::string err;
};

namespace detail {

using json = nlohmann::ordered_json;

inline json lpoly_json(const LPoly& p) {
    json arr = json::array();
    for (const auto& [e, c] : p.term_pairs_desc()) arr.push_back(json::array({e, c}));
    return arr;
}

inline json tpoly_json(const TPoly& p) {
    json coeffs = json::array();
    for (long i = 0; i <= p.degree(); ++i) coeffs.push_back(lpoly_json(p.coeff(i)));
    return json{{"type", "tpoly"}, {"coeffs", coeffs}};
}

inline json tseries_json(const TSeries& s) {
    json coeffs = json::array();
    for (long i = 0; i <= s.order(); ++i) coeffs.push_back(lpoly_json(s.coeff(i)));
    return json{{"type", "tseries"}, {"order", s.order()}, {"coeffs", coeffs}};
}

struct Payload {
    std::string text;
    std::string latex;
    json value;
};

inline Payload make_lpoly(const LPoly& p) {
    return {p.to_string(), p.to_latex(), json{{"type", "lpoly"}, {"value", lpoly_json(p)}}};
}
inline Payload make_tpoly(const TPoly& p) { return {p.to_string(), p.to_latex(), tpoly_json(p)}; }
inline Payload make_tseries(const TSeries& s) { return {s.to_string(), s.to_latex(), tseries_json(s)}; }
inline Payload make_int(const BigInt& v) {
    return {v.to_string(), v.to_string(), json{{"type", "int"}, {"value", v.to_string()}}};
}
inline Payload make_bool(bool v) {
    return {v ? "true" : "false", v ? "true" : "false",
            json{{"type", "bool"}, {"value", v}}};
}

} // namespace detail

inline CliResult run_command(const std::vector<std::string>& args);

// The cli module's own invariant: identical invocations produce byte-identical
// output, in every format.
inline CheckList verify_cli() {
    CheckList out;
    punctual::detail::run_check(out, "cli/deterministic-output", [&] {
        const std::vector<std::vector<std::string>> samples = {
            {"pd", "--d", "6", "--format", "json"},
            {"hilb", "--d", "6", "--n", "3"},
            {"zd", "--d", "4", "--order", "5", "--format", "json"},
            {"gauss", "--k", "2", "--n", "6", "--format", "latex"},
        };
        for (const auto& argv : samples) {
            CliResult a = run_command(argv);
            CliResult b = run_command(argv);
            if (a.code != b.code || a.out != b.out || a.err != b.err) return false;
            if (a.code != 0) return false;
        }
        return true;
    });
    return out;
}

// Parses and executes one CLI invocation. stdout/stderr content is returned
// rather than printed so callers (and tests) can capture it byte for byte.
inline CliResult run_command(const std::vector<std::string>& args) {
    using detail::json;
    CliResult res;

    CLI::App app{"exact motivic classes of punctual Hilbert and Quot schemes"};
    app.name("punctual");

    std::string format = "text";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json", "latex"}));

    long d = 0, n = 0, k = 0, r = 0, order = 0, lprec = 1;
    long long budget = default_partition_budget;
    std::string module_name = "all";

    auto* c_gauss = app.add_subcommand("gauss", "motive of the Grassmannian Gr(k, n)");
    c_gauss->add_option("--k", k)->required();
    c_gauss->add_option("--n", n)->required();

    auto* c_zeta = app.add_subcommand("zeta", "zeta function of P^n, truncated");
    c_zeta->add_option("--n", n)->required();
    c_zeta->add_option("--order", order)->required();

    auto* c_hilb = app.add_subcommand("hilb", "motive of the punctual Hilbert scheme of A^n");
    c_hilb->add_option("--d", d)->required();
    c_hilb->add_option("--n", n)->required();

    auto* c_yclass = app.add_subcommand("yclass", "fundamental stratum class [Y^k_{k,d}]");
    c_yclass->add_option("--k", k)->required();
    c_yclass->add_option("--d", d)->required();

    auto* c_pd = app.add_subcommand("pd", "numerator polynomial of the Z_d series");
    c_pd->add_option("--d", d)->required();

    auto* c_zd = app.add_subcommand("zd", "generating series of punctual motives of length d");
    c_zd->add_option("--d", d)->required();
    c_zd->add_option("--order", order)->required();

    auto* c_omega = app.add_subcommand("omega", "plethystic-log coefficient Omega^n_d");
    c_omega->add_option("--d", d)->required();
    c_omega->add_option("--n", n)->required();

    auto* c_qd = app.add_subcommand("qd", "numerator polynomial of the Omega_d series");
    c_qd->add_option("--d", d)->required();

    auto* c_quot = app.add_subcommand("quot", "motive of the punctual Quot scheme");
    c_quot->add_option("--d", d)->required();
    c_quot->add_option("--n", n)->required();
    c_quot->add_option("--r", r)->required();

    auto* c_quot_omega = app.add_subcommand("quot-omega", "higher-rank Omega class");
    c_quot_omega->add_option("--d", d)->required();
    c_quot_omega->add_option("--n", n)->required();
    c_quot_omega->add_option("--r", r)->required();

    auto* c_partitions = app.add_subcommand("partitions", "count (n-1)-dimensional partitions of d");
    c_partitions->add_option("--n", n)->required();
    c_partitions->add_option("--d", d)->required();
    c_partitions->add_option("--budget", budget, "node budget for the enumeration")
        ->check(CLI::PositiveNumber);

    auto* c_macmahon = app.add_subcommand("macmahon", "MacMahon exponent, chi(Omega^n_d) and the discrepancy");
    c_macmahon->add_option("--d", d)->required();
    c_macmahon->add_option("--n", n)->required();

    auto* c_stab = app.add_subcommand("stab", "stabilisation congruence check");
    c_stab->add_option("--d", d)->required();
    c_stab->add_option("--n", n)->required();

    auto* c_gr_inf = app.add_subcommand("gr-infinity", "infinite Grassmannian class mod L^lprec");
    c_gr_inf->add_option("--k", k)->required();
    c_gr_inf->add_option("--lprec", lprec)->required();

    auto* c_verify = app.add_subcommand("verify", "run the invariant suite of a module");
    c_verify->add_option("--module", module_name, "module name or 'all'");

    app.require_subcommand(1);
    // global flags (--format) may appear after the subcommand
    for (CLI::App* sc : app.get_subcommands([](const CLI::App*) { return true; }))
        sc->fallthrough();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        res.out = app.help();
        return res;
    } catch (const CLI::ParseError& e) {
        res.err = std::string("usage error: ") + e.what() + "\n";
        res.code = 2;
        return res;
    }

    std::string command;
    json params = json::object();
    std::optional<detail::Payload> payload;

    try {
        if (c_gauss->parsed()) {
            command = "gauss";
            params = {{"k", k}, {"n", n}};
            payload = detail::make_lpoly(gauss(k, n));
        } else if (c_zeta->parsed()) {
            command = "zeta";
            params = {{"n", n}, {"order", order}};
            payload = detail::make_tseries(zeta_proj(n, order));
        } else if (c_hilb->parsed()) {
            command = "hilb";
            params = {{"d", d}, {"n", n}};
            payload = detail::make_lpoly(hilb_punctual(d, n));
        } else if (c_yclass->parsed()) {
            command = "yclass";
            params = {{"k", k}, {"d", d}};
            payload = detail::make_lpoly(y_class(k, d));
        } else if (c_pd->parsed()) {
            command = "pd";
            params = {{"d", d}};
            payload = detail::make_tpoly(p_poly(d).poly);
        } else if (c_zd->parsed()) {
            command = "zd";
            params = {{"d", d}, {"order", order}};
            payload = detail::make_tseries(z_series(d, order));
        } else if (c_omega->parsed()) {
            command = "omega";
            params = {{"d", d}, {"n", n}};
            payload = detail::make_lpoly(omega(d, n));
        } else if (c_qd->parsed()) {
            command = "qd";
            params = {{"d", d}};
            payload = detail::make_tpoly(q_poly(d));
        } else if (c_quot->parsed()) {
            command = "quot";
            params = {{"d", d}, {"n", n}, {"r", r}};
            payload = detail::make_lpoly(quot_punctual(d, n, r));
        } else if (c_quot_omega->parsed()) {
            command = "quot-omega";
            params = {{"d", d}, {"n", n}, {"r", r}};
            payload = detail::make_lpoly(quot_omega(d, n, r));
        } else if (c_partitions->parsed()) {
            command = "partitions";
            params = {{"n", n}, {"d", d}, {"budget", budget}};
            payload = detail::make_int(count_partitions(n, d, budget));
        } else if (c_macmahon->parsed()) {
            command = "macmahon";
            params = {{"d", d}, {"n", n}};
            BigInt coeff = n >= 2 ? macmahon_coeff(d, n) : BigInt(d == 1 ? 1 : 0);
            BigInt chi = omega(d, n).specialize_euler();
            BigInt eps = epsilon(d, n);
            json value = {{"type", "report"},
                          {"macmahon_coefficient", coeff.to_string()},
                          {"chi_omega", chi.to_string()},
                          {"epsilon", eps.to_string()}};
            std::string text = "macmahon_coefficient: " + coeff.to_string() +
                               "\nchi_omega: " + chi.to_string() + "\nepsilon: " + eps.to_string();
            if (d >= 6 && d <= 8) {
                Rational rv = r_poly(d).eval(BigInt(n));
                bool match = Rational(eps) == Rational(binomial(n, 4)) * rv;
                value["r_poly_value"] = rv.to_string();
                value["epsilon_matches_r_poly"] = match;
                text += "\nr_poly_value: " + rv.to_string();
                text += std::string("\nepsilon_matches_r_poly: ") + (match ? "true" : "false");
            }
            payload = detail::Payload{text, text, value};
        } else if (c_stab->parsed()) {
            command = "stab";
            params = {{"d", d}, {"n", n}};
            payload = detail::make_bool(stab_check(d, n));
        } else if (c_gr_inf->parsed()) {
            command = "gr-infinity";
            params = {{"k", k}, {"lprec", lprec}};
            payload = detail::make_lpoly(gr_infinity(k, lprec));
        } else if (c_verify->parsed()) {
            command = "verify";
            params = {{"module", module_name}};
            CheckList checks;
            if (module_name == "cli") {
                checks = verify_cli();
            } else {
                checks = verify_module(module_name);
                if (module_name == "all") {
                    CheckList extra = verify_cli();
                    checks.insert(checks.end(), extra.begin(), extra.end());
                }
            }
            long failures = 0;
            std::string text;
            json list = json::array();
            for (const auto& c : checks) {
                if (!c.ok) ++failures;
                text += (c.ok ? "ok   " : "FAIL ") + c.name;
                if (!c.ok && !c.detail.empty()) text += " (" + c.detail + ")";
                text += "\n";
                list.push_back(json{{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
            }
            text += std::to_string(checks.size() - failures) + "/" + std::to_string(checks.size()) +
                    " checks passed";
            json value = {{"type", "report"}, {"checks", list}, {"failures", failures}};
            payload = detail::Payload{text, text, value};
            if (failures > 0) res.code = 4;
        }
    } catch (const calc_error& e) {
        res.err = "error: " + e.kind() + ": " + e.what() + "\n";
        res.code = 3;
        return res;
    } catch (const std::exception& e) {
        res.err = std::string("error: ") + e.what() + "\n";
        res.code = 1;
        return res;
    }

    if (!payload) {
        res.err = "usage error: no subcommand given\n";
        res.code = 2;
        return res;
    }

    if (format == "json") {
        json doc = {{"format_version", format_version},
                    {"command", command},
                    {"parameters", params},
                    {"result", payload->value}};
        res.out = doc.dump(2) + "\n";
    } else if (format == "latex") {
        res.out = payload->latex + "\n";
    } else {
        res.out = payload->text + "\n";
    }
    return res;
}

} // namespace punctual::cli

#endif
