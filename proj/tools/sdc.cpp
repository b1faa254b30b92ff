// sdc -- command-line front end for the self-dual code toolkit.
//
// Exit codes: 0 computed (and, for verify-paper / dualitychain, every
// verdict or property holds); 1 computed but a verdict or property failed;
// 2 input or usage error.

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "sdc/autsearch.hpp"
#include "sdc/code.hpp"
#include "sdc/cosets.hpp"
#include "sdc/genfile.hpp"
#include "sdc/modstruct.hpp"
#include "sdc/verify.hpp"

namespace {

using nlohmann::json;

struct cli_state {
    bool as_json = false;
    int exit_code = 0;
};

sdc::code_file load(const std::string& path) { return sdc::load_code_file(path); }

sdc::permutation parse_perm(const sdc::linear_code& c, const std::string& cycles) {
    return sdc::permutation::from_cycles(c.n(), cycles);
}

void emit(const cli_state& st, const json& j, const std::string& text) {
    if (st.as_json)
        std::cout << j.dump(2) << '\n';
    else
        std::cout << text;
}

std::string bool_str(bool b) { return b ? "yes" : "no"; }

void cmd_info(cli_state& st, const std::string& file) {
    sdc::code_file cf = load(file);
    const sdc::linear_code& c = cf.code;
    bool sd = sdc::is_self_dual(c);
    bool de = sdc::is_doubly_even(c);
    std::size_t d = sdc::min_distance(c);
    bool ex = sd && d == sdc::extremal_bound(c.n());

    json j{{"command", "info"},         {"file", file},
           {"label", cf.label},         {"n", c.n()},
           {"k", c.k()},                {"min_distance", d},
           {"self_dual", sd},           {"doubly_even", de},
           {"extremal", ex}};
    std::string text;
    text += "label:       " + (cf.label.empty() ? "(none)" : cf.label) + "\n";
    text += "parameters:  [" + std::to_string(c.n()) + "," + std::to_string(c.k()) + "," +
            std::to_string(d) + "]\n";
    text += "self-dual:   " + bool_str(sd) + "\n";
    text += "doubly even: " + bool_str(de) + "\n";
    text += "extremal:    " + bool_str(ex) + "\n";
    emit(st, j, text);
}

void cmd_mindist(cli_state& st, const std::string& file, bool brute) {
    sdc::code_file cf = load(file);
    std::size_t d = brute ? sdc::min_distance_bruteforce(cf.code) : sdc::min_distance(cf.code);
    emit(st,
         json{{"command", "mindist"}, {"file", file}, {"algorithm", brute ? "bruteforce" : "infoset"},
              {"min_distance", d}},
         std::to_string(d) + "\n");
}

void cmd_dual(cli_state& st, const std::string& file) {
    sdc::code_file cf = load(file);
    sdc::linear_code d = sdc::dual(cf.code);
    std::string gen = sdc::write_code_file(d, cf.label.empty() ? "" : cf.label + " (dual)");
    emit(st, json{{"command", "dual"}, {"file", file}, {"gen", gen}}, gen);
}

void cmd_shadow(cli_state& st, const std::string& file) {
    sdc::code_file cf = load(file);
    sdc::shadow_coset s = sdc::shadow(cf.code);
    std::string text = "representative: " + s.representative.to_string() + "\n" +
                       "linear part:\n" + sdc::write_code_file(s.linear_part);
    emit(st,
         json{{"command", "shadow"},
              {"file", file},
              {"representative", s.representative.to_string()},
              {"linear_part", sdc::write_code_file(s.linear_part)}},
         text);
}

void cmd_decompose(cli_state& st, const std::string& file, const std::string& perm) {
    sdc::code_file cf = load(file);
    sdc::code_action a = sdc::make_action(cf.code, parse_perm(cf.code, perm));
    sdc::cyclic_decomposition d = sdc::decompose(a);
    bool free = sdc::is_free(a);

    json j{{"command", "decompose"}, {"file", file},      {"perm", a.perm.to_cycles()},
           {"group_order", d.q},     {"rank_profile", d.ranks}, {"multiplicities", d.mult},
           {"free", free}};
    std::string text = "group order:   " + std::to_string(d.q) + "\n";
    text += "rank profile: ";
    for (std::size_t r : d.ranks) text += " " + std::to_string(r);
    text += "\ndecomposition:";
    bool any = false;
    for (std::size_t i = d.q; i >= 1; --i)
        if (d.mult[i - 1]) {
            text += " V" + std::to_string(i) + "^" + std::to_string(d.mult[i - 1]);
            any = true;
        }
    if (!any) text += " 0";
    text += "\nfree module:   " + bool_str(free) + "\n";
    emit(st, j, text);
}

void cmd_fixedcode(cli_state& st, const std::string& file, const std::string& perm) {
    sdc::code_file cf = load(file);
    sdc::code_action a = sdc::make_action(cf.code, parse_perm(cf.code, perm));
    sdc::linear_code fc = sdc::fixed_code(a);
    std::string gen = sdc::write_code_file(fc, "fixed code");
    emit(st, json{{"command", "fixedcode"}, {"file", file}, {"dim", fc.k()}, {"gen", gen}}, gen);
}

void cmd_dualitychain(cli_state& st, const std::string& file, const std::string& perm) {
    sdc::code_file cf = load(file);
    sdc::code_action a = sdc::make_action(cf.code, parse_perm(cf.code, perm));
    sdc::duality_chain_report r = sdc::duality_chain_check(a);
    bool all = r.phi_subset_pi && r.pi_equals_phi_dual && r.distance_bound_ok;

    json j{{"command", "dualitychain"},
           {"file", file},
           {"phi_subset_pi", r.phi_subset_pi},
           {"pi_equals_phi_dual", r.pi_equals_phi_dual},
           {"dim_pi", r.dim_pi},
           {"dim_phi", r.dim_phi},
           {"d_code", r.d_code},
           {"d_pi", r.d_pi},
           {"distance_bound_ok", r.distance_bound_ok}};
    std::string text;
    text += "Phi(C) inside pi(C(g)):      " + bool_str(r.phi_subset_pi) + "\n";
    text += "pi(C(g)) = dual(Phi(C)):     " + bool_str(r.pi_equals_phi_dual) + "\n";
    text += "dims (pi, Phi):              (" + std::to_string(r.dim_pi) + ", " +
            std::to_string(r.dim_phi) + ")\n";
    text += "d(pi(C(g))) >= ceil(d(C)/2): " + bool_str(r.distance_bound_ok) + "  (d(C)=" +
            std::to_string(r.d_code) + ", d(pi)=" + std::to_string(r.d_pi) + ")\n";
    emit(st, j, text);
    if (!all) st.exit_code = 1;
}

void cmd_overcodes(cli_state& st, const std::string& file, std::size_t distance) {
    sdc::code_file cf = load(file);
    auto w = sdc::has_overcode_with_distance(cf.code, distance);
    json j{{"command", "overcodes"}, {"file", file}, {"distance", distance},
           {"witness_exists", w.has_value()}};
    std::string text;
    if (w) {
        j["witness"] = w->representative.to_string();
        j["overcode_distance"] = w->distance;
        text = "witness: " + w->representative.to_string() + " (overcode distance " +
               std::to_string(w->distance) + ")\n";
    } else {
        text = "none\n";
    }
    emit(st, j, text);
}

void cmd_autsearch(cli_state& st, const std::string& file, const std::string& type_spec) {
    sdc::code_file cf = load(file);
    sdc::cycle_type t = sdc::cycle_type::parse(type_spec);
    sdc::autsearch_stats stats;
    auto p = sdc::find_automorphism_with_cycle_type(cf.code, t, &stats);

    json j{{"command", "autsearch"},       {"file", file},
           {"cycle_type", t.str()},        {"found", p.has_value()},
           {"anchor_weight", stats.anchor_weight}, {"fallback_used", stats.fallback_used},
           {"nodes", stats.nodes}};
    std::string text;
    if (p) {
        j["automorphism"] = p->to_cycles();
        text = p->to_cycles() + "\n";
    } else {
        text = "none\n";
    }
    emit(st, j, text);
}

void cmd_verify_paper(cli_state& st, const std::string& dir) {
    sdc::verification_report rep = sdc::verify_paper(dir);
    if (st.as_json)
        std::cout << rep.to_json() << '\n';
    else
        std::cout << rep.to_text();
    if (!rep.all_reproduced()) st.exit_code = 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"self-dual binary code toolkit"};
    app.set_version_flag("--version", std::string("sdc ") + sdc::tool_version);
    app.require_subcommand(1);

    cli_state st;
    app.add_flag("--json", st.as_json, "machine-readable output");

    std::string file, dir, perm, type_spec;
    bool brute = false;
    std::size_t distance = 0;

    auto* info = app.add_subcommand("info", "n, k, d, self-dual, doubly-even, extremal");
    info->add_option("FILE", file)->required();
    info->callback([&] { cmd_info(st, file); });

    auto* mindist = app.add_subcommand("mindist", "exact minimum distance");
    mindist->add_option("FILE", file)->required();
    mindist->add_flag("--brute", brute, "full codeword enumeration (k <= 28)");
    mindist->callback([&] { cmd_mindist(st, file, brute); });

    auto* dual = app.add_subcommand("dual", "dual code in GEN format");
    dual->add_option("FILE", file)->required();
    dual->callback([&] { cmd_dual(st, file); });

    auto* shadow = app.add_subcommand("shadow", "shadow of a self-dual code");
    shadow->add_option("FILE", file)->required();
    shadow->callback([&] { cmd_shadow(st, file); });

    auto* decompose = app.add_subcommand("decompose", "module decomposition under an automorphism");
    decompose->add_option("FILE", file)->required();
    decompose->add_option("--perm", perm, "automorphism in cycle notation, e.g. \"(1,2)(3,4)\"")
        ->required();
    decompose->callback([&] { cmd_decompose(st, file, perm); });

    auto* fixedcode = app.add_subcommand("fixedcode", "fixed code of an automorphism");
    fixedcode->add_option("FILE", file)->required();
    fixedcode->add_option("--perm", perm)->required();
    fixedcode->callback([&] { cmd_fixedcode(st, file, perm); });

    auto* dualitychain = app.add_subcommand("dualitychain",
                                            "Phi/pi duality chain for a fixed-point-free involution");
    dualitychain->add_option("FILE", file)->required();
    dualitychain->add_option("--perm", perm)->required();
    dualitychain->callback([&] { cmd_dualitychain(st, file, perm); });

    auto* overcodes = app.add_subcommand("overcodes", "overcode existence at a distance threshold");
    overcodes->add_option("FILE", file)->required();
    overcodes->add_option("--distance", distance)->required();
    overcodes->callback([&] { cmd_overcodes(st, file, distance); });

    auto* autsearch = app.add_subcommand("autsearch", "automorphism with a prescribed cycle type");
    autsearch->add_option("FILE", file)->required();
    autsearch->add_option("--cycle-type", type_spec, "e.g. \"4^9\" or \"5^7,1\"")->required();
    autsearch->callback([&] { cmd_autsearch(st, file, type_spec); });

    auto* verify = app.add_subcommand("verify-paper", "full pipeline over a database directory");
    verify->add_option("DIR", dir)->required();
    verify->callback([&] { cmd_verify_paper(st, dir); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return st.exit_code;
}
