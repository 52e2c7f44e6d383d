// Command-line front end: every subcommand prints exact values (rationals as
// "p/q", integers bare) either as plain text tables or JSON. Exit codes:
// 0 success, 2 argument/domain errors, 3 size-limit errors.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "hurwitz/serialization.hpp"

using namespace hurwitz;

namespace {

int max_degree_bound() {
    if (const char* env = std::getenv("HURWITZ_MAX_D")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return kDefaultMaxPartitionWeight;
}

Partition parse_partition_arg(const std::string& s) {
    Partition p = Partition::parse(s);
    // CLI contract: comma-separated descending integers
    std::vector<int> raw;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ','))
        if (!tok.empty()) raw.push_back(std::stoi(tok));
    for (size_t i = 0; i + 1 < raw.size(); ++i)
        if (raw[i] < raw[i + 1])
            throw CLI::ValidationError("partition parts must be given in descending order: " + s);
    return p;
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ','))
        if (!tok.empty()) out.push_back(std::stoi(tok));
    return out;
}

MonomialAction resolve_action(const std::string& preset, const std::string& config_file, int n,
                              int s) {
    if (!config_file.empty()) {
        std::ifstream in(config_file);
        if (!in) throw CLI::ValidationError("cannot open action config: " + config_file);
        json cfg = json::parse(in);
        return monomial_action_from_json(cfg);
    }
    if (preset == "cyclic") return make_cyclic_action(n, s);
    if (preset == "dihedral-paper") return make_dihedral_action(s);
    if (preset == "symmetric") return make_symmetric_action(n);
    throw CLI::ValidationError("unknown action preset: " + preset +
                               " (expected cyclic, dihedral-paper or symmetric)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact enumerative invariants of branched coverings of the projective line"};
    app.require_subcommand(1);
    std::string format = "table";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"table", "json"}));

    std::ostringstream out;

    // ---- partitions ----
    int part_d = 0;
    int max_d_override = 0;
    auto* sc_partitions = app.add_subcommand("partitions", "all partitions of d, reverse-lex");
    sc_partitions->add_option("--d", part_d, "weight")->required();
    sc_partitions->add_option("--max-d", max_d_override, "override the degree bound");
    sc_partitions->callback([&] {
        int bound = max_d_override > 0 ? max_d_override : max_degree_bound();
        auto ps = generate_partitions(part_d, bound);
        if (format == "json") {
            out << partitions_to_json(ps).dump();
        } else {
            for (const auto& p : ps) out << p.to_string() << "\n";
        }
    });

    // ---- class-size ----
    std::string cs_lambda;
    auto* sc_class_size = app.add_subcommand("class-size", "conjugacy class size d!/z_lambda");
    sc_class_size->add_option("--lambda", cs_lambda, "cycle type")->required();
    sc_class_size->callback([&] { out << class_size(parse_partition_arg(cs_lambda)) << "\n"; });

    // ---- char ----
    std::string ch_lambda, ch_mu;
    auto* sc_char = app.add_subcommand("char", "character value chi^lambda(mu)");
    sc_char->add_option("--lambda", ch_lambda, "irreducible label")->required();
    sc_char->add_option("--mu", ch_mu, "class label")->required();
    sc_char->callback([&] {
        out << character_value(parse_partition_arg(ch_lambda), parse_partition_arg(ch_mu)) << "\n";
    });

    // ---- char-table ----
    int ct_d = 0;
    auto* sc_char_table = app.add_subcommand("char-table", "full character table of S_d");
    sc_char_table->add_option("--d", ct_d, "degree")->required();
    sc_char_table->callback([&] {
        CharacterTable t = build_character_table(ct_d);
        if (format == "json") {
            out << character_table_to_json(t).dump();
        } else {
            out << "classes:";
            for (const auto& mu : t.classes) out << " (" << mu.to_string() << ")";
            out << "\n";
            for (size_t i = 0; i < t.irreps.size(); ++i) {
                out << "(" << t.irreps[i].to_string() << "):";
                for (const Int& v : t.values[i]) out << " " << v;
                out << "\n";
            }
        }
    });

    // ---- lr ----
    std::string lr_lambda, lr_mu, lr_eta;
    auto* sc_lr = app.add_subcommand("lr", "Littlewood-Richardson coefficient c^eta_{lambda,mu}");
    sc_lr->add_option("--lambda", lr_lambda)->required();
    sc_lr->add_option("--mu", lr_mu)->required();
    sc_lr->add_option("--eta", lr_eta)->required();
    sc_lr->callback([&] {
        out << lr_coefficient(parse_partition_arg(lr_lambda), parse_partition_arg(lr_mu),
                              parse_partition_arg(lr_eta))
            << "\n";
    });

    // ---- kron ----
    std::string kr_lambda, kr_mu, kr_nu;
    auto* sc_kron = app.add_subcommand("kron", "Kronecker coefficient g(lambda,mu,nu)");
    sc_kron->add_option("--lambda", kr_lambda)->required();
    sc_kron->add_option("--mu", kr_mu)->required();
    sc_kron->add_option("--nu", kr_nu)->required();
    sc_kron->callback([&] {
        out << kronecker_coefficient(parse_partition_arg(kr_lambda), parse_partition_arg(kr_mu),
                                     parse_partition_arg(kr_nu))
            << "\n";
    });

    // ---- class-product ----
    std::string cp_eta1, cp_eta2;
    auto* sc_class_product =
        app.add_subcommand("class-product", "C_eta1 * C_eta2 in the class-sum basis");
    sc_class_product->add_option("--eta1", cp_eta1)->required();
    sc_class_product->add_option("--eta2", cp_eta2)->required();
    sc_class_product->callback([&] {
        auto prod = multiply(class_sum(parse_partition_arg(cp_eta1)),
                             class_sum(parse_partition_arg(cp_eta2)));
        if (format == "json") {
            out << class_algebra_element_to_json(prod).dump();
        } else {
            for (const auto& [rho, c] : prod.coeffs)
                out << rho.to_string() << ": " << rat_to_string(c) << "\n";
        }
    });

    // ---- hurwitz ----
    int hw_d = 0;
    std::vector<std::string> hw_profiles;
    bool hw_connected = false, hw_oracle = false;
    auto* sc_hurwitz = app.add_subcommand("hurwitz", "Hurwitz number for the given profiles");
    sc_hurwitz->add_option("--d", hw_d, "degree")->required();
    sc_hurwitz->add_option("--profiles", hw_profiles, "one ramification profile per branch point")
        ->required();
    sc_hurwitz->add_flag("--connected", hw_connected, "count connected coverings only");
    sc_hurwitz->add_flag("--oracle", hw_oracle, "exhaustive monodromy-tuple enumeration (d <= 5)");
    sc_hurwitz->callback([&] {
        if (hw_d > max_degree_bound())
            throw size_limit_error("hurwitz: d exceeds bound (set HURWITZ_MAX_D to raise)");
        std::vector<Partition> profs;
        for (const auto& s : hw_profiles) {
            Partition p = parse_partition_arg(s);
            if (p.weight() != hw_d)
                throw CLI::ValidationError("profile " + s + " is not a partition of d");
            profs.push_back(std::move(p));
        }
        CoveringProblem problem(hw_d, profs);
        Rat disc, conn;
        if (hw_oracle) {
            disc = monodromy_oracle(problem, false);
            conn = monodromy_oracle(problem, true);
        } else {
            disc = disconnected_hurwitz(problem);
            conn = connected_hurwitz(problem);
        }
        if (format == "json") {
            out << hurwitz_result_to_json(problem, disc, conn).dump();
        } else {
            out << rat_to_string(hw_connected ? conn : disc) << "\n";
        }
    });

    // ---- genus0 ----
    int g0_d = 0;
    auto* sc_genus0 = app.add_subcommand("genus0", "closed form (2d-2)!/d! d^(d-3)");
    sc_genus0->add_option("--d", g0_d, "degree")->required();
    sc_genus0->callback([&] { out << rat_to_string(genus0_closed_form(g0_d)) << "\n"; });

    // ---- cover-genus ----
    int cg_d = 0;
    std::string cg_m;
    auto* sc_cover_genus =
        app.add_subcommand("cover-genus", "genus of y^d = prod (x-a_i)^{m_i} by Riemann-Hurwitz");
    sc_cover_genus->add_option("--d", cg_d, "cover degree")->required();
    sc_cover_genus->add_option("--m", cg_m, "comma-separated multiplicities")->required();
    sc_cover_genus->callback([&] {
        out << genus(CyclicCoverSpec(cg_d, parse_int_list(cg_m))) << "\n";
    });

    // ---- profile-inf ----
    int pi_d = 0;
    std::string pi_m;
    auto* sc_profile_inf = app.add_subcommand("profile-inf", "ramification profile over infinity");
    sc_profile_inf->add_option("--d", pi_d, "cover degree")->required();
    sc_profile_inf->add_option("--m", pi_m, "comma-separated multiplicities")->required();
    sc_profile_inf->callback([&] {
        Partition p = profile_at_infinity(CyclicCoverSpec(pi_d, parse_int_list(pi_m)));
        if (format == "json")
            out << partition_to_json(p).dump();
        else
            out << p.to_string() << "\n";
    });

    // ---- triangle ----
    std::vector<int> tri_orders;
    auto* sc_triangle = app.add_subcommand("triangle", "classify an orbifold signature (p,q,r)");
    sc_triangle->add_option("orders", tri_orders, "the three orders")->expected(3);
    sc_triangle->callback([&] {
        if (tri_orders.size() != 3) throw CLI::ValidationError("triangle needs three orders");
        auto t = triangle_classify(OrbifoldSignature(tri_orders[0], tri_orders[1], tri_orders[2]));
        out << triangle_class_to_json(t).dump() << "\n";
    });

    // ---- monodromy-count ----
    std::string mc_mu;
    auto* sc_monodromy_count =
        app.add_subcommand("monodromy-count", "orderings of branch multiplicities m!/prod gamma!");
    sc_monodromy_count->add_option("--mu", mc_mu)->required();
    sc_monodromy_count->callback([&] {
        out << monodromy_type_count(parse_partition_arg(mc_mu)) << "\n";
    });

    // ---- fq-config-count ----
    long long fq_p = 0;
    int fq_m = 0;
    auto* sc_fq = app.add_subcommand("fq-config-count",
                                     "point configurations mod the affine group of A^1(F_p)");
    sc_fq->add_option("--p", fq_p, "prime")->required();
    sc_fq->add_option("--m", fq_m, "number of finite points")->required();
    sc_fq->callback([&] { out << rat_to_string(count_configurations_mod_affine(fq_p, fq_m)) << "\n"; });

    // ---- fermat-count ----
    int fc_n = 0, fc_m = 0;
    long long fc_q = 0;
    auto* sc_fermat = app.add_subcommand("fermat-count", "affine F_q-points of y^m + x^n = 1");
    sc_fermat->add_option("--n", fc_n)->required();
    sc_fermat->add_option("--m", fc_m)->required();
    sc_fermat->add_option("--q", fc_q, "prime power <= 10^4")->required();
    sc_fermat->callback([&] { out << fermat_point_count(fc_n, fc_m, fc_q) << "\n"; });

    // ---- molien ----
    std::string mo_preset = "cyclic", mo_config;
    int mo_n = 1, mo_s = 1, mo_N = 16;
    auto* sc_molien = app.add_subcommand("molien", "Molien series of a monomial group action");
    sc_molien->add_option("--preset", mo_preset, "cyclic | dihedral-paper | symmetric");
    sc_molien->add_option("--config", mo_config, "JSON action config file");
    sc_molien->add_option("--n", mo_n, "number of variables");
    sc_molien->add_option("--s", mo_s, "root-of-unity order");
    sc_molien->add_option("--N", mo_N, "series truncation degree");
    sc_molien->callback([&] {
        auto dims = molien_series(resolve_action(mo_preset, mo_config, mo_n, mo_s), mo_N);
        if (format == "json") {
            json a = json::array();
            for (const Int& v : dims) a.push_back(int_to_json(v));
            out << a.dump();
        } else {
            for (size_t j = 0; j < dims.size(); ++j) out << j << ": " << dims[j] << "\n";
        }
    });

    // ---- invariant-check ----
    std::string ic_preset = "symmetric", ic_config, ic_poly;
    int ic_n = 1, ic_s = 1, ic_esym = 0;
    auto* sc_invariant =
        app.add_subcommand("invariant-check", "test whether a polynomial is G-invariant");
    sc_invariant->add_option("--preset", ic_preset, "cyclic | dihedral-paper | symmetric");
    sc_invariant->add_option("--config", ic_config, "JSON action config file");
    sc_invariant->add_option("--n", ic_n, "number of variables");
    sc_invariant->add_option("--s", ic_s, "root-of-unity order");
    sc_invariant->add_option("--esym", ic_esym, "use the i-th elementary symmetric polynomial");
    sc_invariant->add_option("--poly", ic_poly, "polynomial as JSON {n, s, terms:[{coeff, exps}]}");
    sc_invariant->callback([&] {
        MonomialAction a = resolve_action(ic_preset, ic_config, ic_n, ic_s);
        SparsePoly f;
        if (ic_esym > 0)
            f = elementary_symmetric(ic_esym, a.n);
        else if (!ic_poly.empty())
            f = sparse_poly_from_json(json::parse(ic_poly));
        else
            throw CLI::ValidationError("invariant-check needs --esym or --poly");
        out << (is_invariant(f, a) ? "true" : "false") << "\n";
    });

    // ---- floor-diagrams ----
    int fd_d = 0, fd_g = 0;
    auto* sc_fd = app.add_subcommand("floor-diagrams",
                                     "all labeled floor diagrams of degree d and genus g");
    sc_fd->add_option("--d", fd_d, "degree")->required();
    sc_fd->add_option("--g", fd_g, "genus");
    sc_fd->callback([&] {
        auto diagrams = enumerate_diagrams(fd_d, fd_g);
        if (format == "json") {
            json a = json::array();
            for (const auto& D : diagrams) a.push_back(floor_diagram_to_json(D));
            out << a.dump();
        } else {
            for (const auto& D : diagrams) {
                out << "edges=[";
                for (size_t i = 0; i < D.edges.size(); ++i) {
                    if (i) out << " ";
                    out << "(" << D.edges[i].u << "," << D.edges[i].v << "," << D.edges[i].w << ")";
                }
                out << "] mu=" << mu_multiplicity(D) << " nu=" << nu_markings(D) << "\n";
            }
            out << "total " << diagrams.size() << "\n";
        }
    });

    // ---- gw ----
    int gw_d = 0, gw_g = 0;
    auto* sc_gw = app.add_subcommand("gw", "plane-curve count N_{d,g} = sum mu*nu");
    sc_gw->add_option("--d", gw_d, "degree")->required();
    sc_gw->add_option("--g", gw_g, "genus");
    sc_gw->callback([&] { out << gw_invariant(gw_d, gw_g) << "\n"; });

    // ---- kontsevich ----
    int ko_d = 0;
    auto* sc_kontsevich = app.add_subcommand("kontsevich", "genus-0 recursion oracle N_d");
    sc_kontsevich->add_option("--d", ko_d, "degree")->required();
    sc_kontsevich->callback([&] { out << kontsevich_oracle(ko_d) << "\n"; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const size_limit_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    std::cout << out.str();
    return 0;
}
