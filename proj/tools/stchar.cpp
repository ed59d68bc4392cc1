// Command-line front end: exact symplectic characters, coefficient tables,
// Haar-component dumps, autocorrelation expansions, moment sequences, the
// identity verification suite, and Monte Carlo cross-checks.

#include "stc/atlas.hpp"
#include "stc/characters.hpp"
#include "stc/coeffs.hpp"
#include "stc/json_io.hpp"
#include "stc/montecarlo.hpp"
#include "stc/verify.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

using nlohmann::ordered_json;
using stc::poly_to_json;

namespace {

stc::Partition parse_partition(const std::string& s) {
    stc::Partition out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) out.push_back(std::stoi(tok));
    if (!stc::is_partition(out))
        throw CLI::ValidationError("--lambda", "not weakly decreasing: " + s);
    return out;
}

std::vector<double> parse_doubles(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) out.push_back(std::stod(tok));
    return out;
}

std::vector<std::string> var_names(const std::string& stem, int m) {
    std::vector<std::string> names;
    for (int i = 1; i <= m; ++i) names.push_back(stem + std::to_string(i));
    return names;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Haar averages and symplectic character identities"};
    app.require_subcommand(1);

    // char
    std::string lambda_str = "1";
    int char_m = 2;
    std::string char_format = "json";
    auto* cmd_char = app.add_subcommand("char", "Print an irreducible symplectic character");
    cmd_char->add_option("--lambda", lambda_str, "partition, comma separated (e.g. 2,1)");
    cmd_char->add_option("--m", char_m, "rank (number of variables)");
    cmd_char->add_option("--format", char_format, "json|text");

    // dim
    int dim_a = 0, dim_b = 0;
    auto* cmd_dim = app.add_subcommand("dim", "Rank-2 irreducible dimension");
    cmd_dim->add_option("--a", dim_a)->required();
    cmd_dim->add_option("--b", dim_b)->required();

    // coeff
    std::string coeff_family = "eta";
    int coeff_index = 1, coeff_z = 0, coeff_b = 0;
    std::string coeff_group;
    auto* cmd_coeff = app.add_subcommand("coeff", "Evaluate a coefficient family or table row");
    cmd_coeff->add_option("--family", coeff_family, "eta|psi|theta|xi (ignored with --group)");
    cmd_coeff->add_option("--index", coeff_index, "family index");
    cmd_coeff->add_option("--group", coeff_group, "evaluate the group's multiplicity instead");
    cmd_coeff->add_option("--z", coeff_z)->required();
    cmd_coeff->add_option("--b", coeff_b)->required();

    // table1
    int table_range = 6;
    std::string table_group;
    auto* cmd_table = app.add_subcommand("table1", "CSV dump of trivial-multiplicity rows");
    cmd_table->add_option("--range", table_range, "max value of b + 2z");
    cmd_table->add_option("--group", table_group, "restrict to one group");

    // atlas dump
    std::string atlas_group;
    std::string atlas_format = "json";
    auto* cmd_atlas = app.add_subcommand("atlas", "Haar components of a group");
    auto* cmd_atlas_dump = cmd_atlas->add_subcommand("dump", "dump components");
    cmd_atlas_dump->add_option("--group", atlas_group)->required();
    cmd_atlas_dump->add_option("--format", atlas_format, "json");

    // autocorr
    std::string ac_group;
    int ac_m = 2;
    std::string ac_format = "json";
    bool ac_poly = false;
    auto* cmd_ac = app.add_subcommand("autocorr", "Autocorrelation as a character sum");
    cmd_ac->add_option("--group", ac_group)->required();
    cmd_ac->add_option("--m", ac_m);
    cmd_ac->add_option("--format", ac_format, "json|csv");
    cmd_ac->add_flag("--poly", ac_poly, "also print the expanded polynomial");

    // moments
    std::string mo_group;
    int mo_k = 1, mo_maxm = 12;
    auto* cmd_mo = app.add_subcommand("moments", "Moment sequence of a char-poly coefficient");
    cmd_mo->add_option("--group", mo_group)->required();
    cmd_mo->add_option("--k", mo_k, "coefficient index (1..genus)");
    cmd_mo->add_option("--max-m", mo_maxm, "largest moment");

    // verify
    std::string v_id, v_group;
    int v_m = 0, v_n = 0, v_g = 0, v_k = 0, v_amax = 8;
    bool v_all = false, v_list = false, v_json = false, v_serial = false;
    auto* cmd_v = app.add_subcommand("verify", "Run identity checks");
    cmd_v->add_flag("--all", v_all, "run the full suite");
    cmd_v->add_flag("--list", v_list, "list statement ids");
    cmd_v->add_option("--id", v_id, "statement id (see --list)");
    cmd_v->add_option("--group", v_group);
    cmd_v->add_option("--m", v_m);
    cmd_v->add_option("--n", v_n);
    cmd_v->add_option("--g", v_g);
    cmd_v->add_option("--k", v_k);
    cmd_v->add_option("--a-max", v_amax, "sweep bound for branching checks");
    cmd_v->add_flag("--json", v_json, "one JSON report per line");
    cmd_v->add_flag("--serial", v_serial, "disable parallel execution");

    // mc
    std::string mc_group;
    int mc_m = 1;
    std::string mc_x = "0.5";
    long mc_n = 100000;
    uint64_t mc_seed = 42;
    int mc_momk = 0, mc_momm = 2;
    bool mc_serial = false;
    auto* cmd_mc = app.add_subcommand("mc", "Monte Carlo estimate vs exact value");
    cmd_mc->add_option("--group", mc_group)->required();
    cmd_mc->add_option("--m", mc_m, "number of evaluation points");
    cmd_mc->add_option("--x", mc_x, "comma separated points");
    cmd_mc->add_option("--samples", mc_n);
    cmd_mc->add_option("--seed", mc_seed);
    cmd_mc->add_option("--moment-k", mc_momk, "estimate a coefficient moment instead");
    cmd_mc->add_option("--moment-m", mc_momm);
    cmd_mc->add_flag("--serial", mc_serial);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cmd_char->parsed()) {
            stc::Partition lam = parse_partition(lambda_str);
            stc::LaurentPoly chi = stc::sp_char(lam, char_m);
            auto names = var_names("x", char_m);
            if (char_format == "text")
                std::cout << chi.str(names) << "\n";
            else
                std::cout << poly_to_json(chi, names).dump() << "\n";
            return 0;
        }
        if (cmd_dim->parsed()) {
            std::cout << stc::dim_c2(dim_a, dim_b) << "\n";
            return 0;
        }
        if (cmd_coeff->parsed()) {
            if (!coeff_group.empty()) {
                std::cout << stc::m_coeff(stc::parse_group(coeff_group), coeff_z, coeff_b).str()
                          << "\n";
                return 0;
            }
            stc::Rat v;
            if (coeff_family == "eta") v = stc::eta(coeff_index, coeff_z, coeff_b);
            else if (coeff_family == "psi") v = stc::psi(coeff_index, coeff_z, coeff_b);
            else if (coeff_family == "theta") v = stc::theta(coeff_index, coeff_z, coeff_b);
            else if (coeff_family == "xi") v = stc::xi(coeff_index, coeff_z, coeff_b);
            else throw CLI::ValidationError("--family", "unknown family " + coeff_family);
            std::cout << v.str() << "\n";
            return 0;
        }
        if (cmd_table->parsed()) {
            std::vector<stc::STGroup> groups;
            if (!table_group.empty())
                groups = {stc::parse_group(table_group)};
            else
                groups = stc::all_groups();
            std::cout << "group,z,b,value\n";
            for (stc::STGroup h : groups)
                for (int b = 0; b <= table_range; ++b)
                    for (int z = 0; b + 2 * z <= table_range; ++z)
                        std::cout << stc::group_id(h) << "," << z << "," << b << ","
                                  << stc::m_coeff(h, z, b).str() << "\n";
            return 0;
        }
        if (cmd_atlas->parsed()) {
            const stc::GroupAtlas& at = stc::components(stc::parse_group(atlas_group));
            ordered_json out;
            out["group"] = stc::group_id(at.group);
            out["genus"] = at.genus;
            out["exactness"] = at.exactness == stc::Exactness::Full ? "full" : "partial";
            out["components"] = ordered_json::array();
            for (const auto& c : at.comps) {
                ordered_json jc;
                jc["weight"] = c.weight.str();
                jc["params"] = c.params;
                auto kinds = ordered_json::array();
                for (const auto& mf : c.measures) {
                    switch (mf.kind) {
                        case stc::MeasureKind::U1: kinds.push_back("U1"); break;
                        case stc::MeasureKind::SU2: kinds.push_back("SU2"); break;
                        case stc::MeasureKind::U2: kinds.push_back("U2"); break;
                        case stc::MeasureKind::USp2g:
                            kinds.push_back("USp2g(" + std::to_string(mf.rank) + ")");
                            break;
                    }
                }
                jc["functionals"] = kinds;
                jc["derived"] = c.derived;
                auto eigs = ordered_json::array();
                for (const auto& e : c.eigs) {
                    ordered_json je;
                    je["zeta48"] = e.zeta;
                    je["exp"] = e.pexp;
                    eigs.push_back(std::move(je));
                }
                jc["eigenvalues"] = std::move(eigs);
                if (c.eigs.empty()) jc["note"] = "no exact class-function reduction";
                out["components"].push_back(std::move(jc));
            }
            std::cout << out.dump(2) << "\n";
            return 0;
        }
        if (cmd_ac->parsed()) {
            stc::STGroup h = stc::parse_group(ac_group);
            ordered_json out;
            out["group"] = stc::group_id(h);
            out["m"] = ac_m;
            auto coeffs = ordered_json::array();
            int genus = stc::group_genus(h);
            if (genus == 2) {
                for (int b = 0; b <= ac_m; ++b)
                    for (int z = 0; b + 2 * z <= ac_m; ++z) {
                        ordered_json e;
                        e["z"] = z;
                        e["b"] = b;
                        e["value"] = stc::m_coeff(h, z, b).str();
                        coeffs.push_back(std::move(e));
                    }
            } else {
                for (int j = 0; 2 * j <= ac_m; ++j) {
                    ordered_json e;
                    e["j"] = j;
                    e["value"] = std::to_string(stc::genus1_m(h, j));
                    coeffs.push_back(std::move(e));
                }
            }
            out["coefficients"] = std::move(coeffs);
            if (ac_poly)
                out["polynomial"] = poly_to_json(stc::autocorr_rhs(h, ac_m), var_names("x", ac_m));
            if (ac_format == "csv") {
                std::cout << (genus == 2 ? "z,b,value\n" : "j,value\n");
                for (const auto& e : out["coefficients"]) {
                    if (genus == 2)
                        std::cout << e["z"] << "," << e["b"] << ","
                                  << e["value"].get<std::string>() << "\n";
                    else
                        std::cout << e["j"] << "," << e["value"].get<std::string>() << "\n";
                }
            } else {
                std::cout << out.dump() << "\n";
            }
            return 0;
        }
        if (cmd_mo->parsed()) {
            stc::STGroup h = stc::parse_group(mo_group);
            auto seq = stc::moments_seq(h, mo_k, mo_maxm);
            for (std::size_t i = 0; i < seq.size(); ++i) {
                if (i) std::cout << ",";
                std::cout << seq[i].str();
            }
            std::cout << "\n";
            return 0;
        }
        if (cmd_v->parsed()) {
            if (v_list) {
                for (const auto& id : stc::verify_ids()) std::cout << id << "\n";
                return 0;
            }
            if (!v_all && v_id.empty()) {
                std::cerr << "verify: need --all, --list or --id\n";
                return 2;
            }
            stc::VerifyOptions opt;
            if (!v_id.empty()) opt.id = v_id;
            if (!v_group.empty()) opt.group = stc::parse_group(v_group);
            if (v_m > 0) opt.m = v_m;
            if (v_n > 0) opt.n = v_n;
            if (v_g > 0) opt.g = v_g;
            if (v_k > 0) opt.k = v_k;
            opt.a_max = v_amax;
            opt.parallel = !v_serial;
            auto reports = stc::verify_run(opt);
            int failures = 0;
            for (const auto& r : reports) {
                if (!r.pass) ++failures;
                if (v_json) {
                    ordered_json jr;
                    jr["id"] = r.id;
                    jr["params"] = r.params;
                    jr["pass"] = r.pass;
                    jr["route"] = r.route;
                    if (!r.detail.empty()) jr["detail"] = r.detail;
                    std::cout << jr.dump() << "\n";
                } else {
                    std::cout << (r.pass ? "PASS" : "FAIL") << " " << r.id;
                    std::string p = r.params_str();
                    if (!p.empty()) std::cout << " [" << p << "]";
                    if (r.route != "exact") std::cout << " (" << r.route << ")";
                    if (!r.pass && !r.detail.empty()) std::cout << " :: " << r.detail;
                    std::cout << "\n";
                }
            }
            std::cout << reports.size() - failures << "/" << reports.size()
                      << " checks passed\n";
            return failures == 0 ? 0 : 1;
        }
        if (cmd_mc->parsed()) {
            stc::STGroup h = stc::parse_group(mc_group);
            stc::McEstimate est;
            if (mc_momk > 0) {
                est = stc::mc_moment(h, mc_momk, mc_momm, mc_n, mc_seed, !mc_serial);
            } else {
                auto xs = parse_doubles(mc_x);
                if (static_cast<int>(xs.size()) != mc_m)
                    xs.resize(mc_m, xs.empty() ? 0.5 : xs.back());
                est = stc::mc_autocorr(h, xs, mc_n, mc_seed, !mc_serial);
            }
            ordered_json out;
            out["group"] = stc::group_id(h);
            out["estimate"] = est.estimate;
            out["stderr"] = est.stderr_;
            out["samples"] = est.samples;
            if (est.has_exact) {
                out["exact"] = est.exact;
                out["sigma_distance"] = est.sigma;
            }
            std::cout << out.dump() << "\n";
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
