#include "tutteforge/bipoly.hpp"
#include "tutteforge/constructions.hpp"
#include "tutteforge/corpus.hpp"
#include "tutteforge/error.hpp"
#include "tutteforge/graph_io.hpp"
#include "tutteforge/iso.hpp"
#include "tutteforge/phigen.hpp"
#include "tutteforge/tutte.hpp"
#include "tutteforge/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>

using namespace tutteforge;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitNegative = 1;  // not equal / not isomorphic / check failed
constexpr int kExitUsage = 2;

GraphFile load(const std::string& path) { return read_graph_file(path); }

const std::vector<VertexId>& terminals_of(const GraphFile& gf, const std::string& name,
                                          const std::string& path) {
    auto it = gf.terminals.find(name);
    if (it == gf.terminals.end())
        throw Error("no terminal list '" + name + "' in " + path);
    return it->second;
}

std::vector<int> parse_csv_ints(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) out.push_back(std::stoi(tok));
    return out;
}

EngineConfig engine_config(int parallel, int memo_max, const std::string& policy) {
    EngineConfig cfg;
    cfg.parallel_tasks = parallel;
    cfg.memo_canonical_max_vertices = memo_max;
    if (const char* env = std::getenv("TUTTE_FORGE_MEMO_MAX"))
        cfg.memo_canonical_max_vertices = std::atoi(env);
    cfg.edge_pick_policy =
        policy == "first-id" ? EdgePickPolicy::first_id : EdgePickPolicy::max_degree_sum;
    return cfg;
}

struct RotorArg {
    std::vector<int> cycle;
    std::string path;
    std::string orbit_name;
};

// --rotor 1,4,2:rotors/k3.g:orbit
RotorArg parse_rotor_arg(const std::string& text) {
    auto first = text.find(':');
    auto last = text.rfind(':');
    if (first == std::string::npos || first == last)
        throw Error("rotor spec must look like <cycle>:<file>:<terminal-list>");
    RotorArg arg;
    arg.cycle = parse_csv_ints(text.substr(0, first));
    arg.path = text.substr(first + 1, last - first - 1);
    arg.orbit_name = text.substr(last + 1);
    if (arg.cycle.empty() || arg.path.empty() || arg.orbit_name.empty())
        throw Error("rotor spec must look like <cycle>:<file>:<terminal-list>");
    return arg;
}

PhiWitness select_witness(const Multigraph& g, const Multigraph& h, EdgeId e, EdgeId f,
                          int phi_index, int psi_index, const IsoLimits& limits) {
    auto all = enumerate_phi_witnesses(g, h, e, f, limits);
    for (const auto& w : all)
        if (w.phi_index == phi_index && w.psi_index == psi_index) return w;
    throw Error("no witness with phi-index " + std::to_string(phi_index) + ", psi-index " +
                std::to_string(psi_index) + " (" + std::to_string(all.size()) +
                " witnesses total)");
}

}  // namespace

int run(int argc, char** argv) {
    CLI::App app{"exact Tutte polynomials and T-equivalent graph constructions"};
    app.require_subcommand(1);

    int parallel = 1;
    int memo_max = 10;
    std::string policy = "max-degree-sum";
    app.add_option("--parallel", parallel, "engine worker tasks")->capture_default_str();
    app.add_option("--memo-max", memo_max, "memoize subgraphs up to this many vertices")
        ->capture_default_str();
    app.add_option("--policy", policy, "edge pick policy")
        ->check(CLI::IsMember({"max-degree-sum", "first-id"}))
        ->capture_default_str();
    int iso_limit = 12;
    app.add_option("--iso-limit", iso_limit, "vertex limit for isomorphism searches")
        ->capture_default_str();

    // compute
    auto* compute = app.add_subcommand("compute", "print the Tutte polynomial of a graph file");
    std::string compute_file, engine = "dc";
    bool stats = false;
    int oracle_limit = 20;
    compute->add_option("file", compute_file)->required();
    compute->add_option("--engine", engine)->check(CLI::IsMember({"dc", "subset"}));
    compute->add_flag("--stats", stats, "print engine statistics");
    compute->add_option("--oracle-limit", oracle_limit)->capture_default_str();

    // equal
    auto* equal = app.add_subcommand("equal", "exit 0 iff the two graphs are T-equivalent");
    std::string equal_a, equal_b;
    equal->add_option("fileA", equal_a)->required();
    equal->add_option("fileB", equal_b)->required();

    // iso
    auto* iso = app.add_subcommand("iso", "print an isomorphism or NOT-ISOMORPHIC");
    std::string iso_a, iso_b;
    iso->add_option("fileA", iso_a)->required();
    iso->add_option("fileB", iso_b)->required();

    // glue
    auto* glue_cmd = app.add_subcommand("glue", "identify terminal lists pairwise");
    std::string glue_a, glue_b, glue_ta = "t", glue_tb = "t", glue_out;
    glue_cmd->add_option("fileA", glue_a)->required();
    glue_cmd->add_option("fileB", glue_b)->required();
    glue_cmd->add_option("--ta", glue_ta, "terminal list name in fileA")->capture_default_str();
    glue_cmd->add_option("--tb", glue_tb, "terminal list name in fileB")->capture_default_str();
    glue_cmd->add_option("-o,--out", glue_out)->required();

    // twist
    auto* twist_cmd = app.add_subcommand("twist", "Whitney twist at a 2-cut");
    std::string twist_file, twist_cut, twist_side, twist_out;
    twist_cmd->add_option("file", twist_file)->required();
    twist_cmd->add_option("--cut", twist_cut, "two vertex ids, e.g. 1,5")->required();
    twist_cmd->add_option("--side", twist_side, "vertex ids of the flipped side")->required();
    twist_cmd->add_option("-o,--out", twist_out)->required();

    // rotor-flip
    auto* flip = app.add_subcommand("rotor-flip", "build the pair R+W and reversed-R+W");
    std::string flip_r, flip_w, flip_tr = "t", flip_tw = "t", flip_out;
    bool flip_force = false;
    flip->add_option("rotor", flip_r)->required();
    flip->add_option("host", flip_w)->required();
    flip->add_option("--tr", flip_tr, "orbit terminal list in rotor")->capture_default_str();
    flip->add_option("--tw", flip_tw, "terminal list in host")->capture_default_str();
    flip->add_option("-o,--out", flip_out, "output prefix")->required();
    flip->add_flag("--force", flip_force, "skip the orbit hypothesis check");

    // theorem5
    auto* th5 = app.add_subcommand("theorem5", "order-rg rotor flip through a gadget assembly");
    std::string th5_r, th5_w0, th5_y, th5_tr = "t", th5_w = "w", th5_x = "x", th5_ty = "t",
                th5_out;
    int th5_rr = 0, th5_gg = 0;
    bool th5_force = false;
    th5->add_option("rotor", th5_r)->required();
    th5->add_option("gadget", th5_w0)->required();
    th5->add_option("partner", th5_y)->required();
    th5->add_option("--tr", th5_tr)->capture_default_str();
    th5->add_option("--w", th5_w, "w-list name in gadget")->capture_default_str();
    th5->add_option("--x", th5_x, "x-list name in gadget")->capture_default_str();
    th5->add_option("--ty", th5_ty, "terminal list in partner")->capture_default_str();
    th5->add_option("--r", th5_rr, "orbit count r")->required();
    th5->add_option("--g", th5_gg, "rotation step g")->required();
    th5->add_option("-o,--out", th5_out, "output prefix")->required();
    th5->add_flag("--force", th5_force);

    // phi family
    auto* phi = app.add_subcommand("phi", "membership pipeline for matched edge pairs");
    phi->require_subcommand(1);
    std::string phi_g, phi_h, phi_witness_path, phi_out_g, phi_out_h, phi_witness_out;
    int phi_e = 0, phi_f = 0, phi_pi = 0, phi_qi = 0;
    bool phi_list = false;
    std::vector<std::string> phi_rotors;

    auto add_pair_opts = [&](CLI::App* cmd) {
        cmd->add_option("fileG", phi_g)->required();
        cmd->add_option("fileH", phi_h)->required();
        cmd->add_option("--e", phi_e, "edge id in G")->required();
        cmd->add_option("--f", phi_f, "edge id in H")->required();
    };
    auto add_index_opts = [&](CLI::App* cmd) {
        cmd->add_option("--phi-index", phi_pi)->capture_default_str();
        cmd->add_option("--psi-index", phi_qi)->capture_default_str();
    };

    auto* phi_certify = phi->add_subcommand("certify", "search for membership witnesses");
    add_pair_opts(phi_certify);
    phi_certify->add_flag("--list", phi_list, "print every (phi, psi) choice");

    auto* phi_digraph = phi->add_subcommand("digraph", "print the index digraph arcs");
    add_pair_opts(phi_digraph);
    add_index_opts(phi_digraph);

    auto* phi_cycles = phi->add_subcommand("cycles", "print the directed cycles");
    add_pair_opts(phi_cycles);
    add_index_opts(phi_cycles);

    auto* phi_generate = phi->add_subcommand("generate", "attach rotors along cycles");
    add_pair_opts(phi_generate);
    add_index_opts(phi_generate);
    phi_generate->add_option("--rotor", phi_rotors,
                             "assignment <cycle>:<file>:<terminal-list>, repeatable");
    phi_generate->add_option("--out-g", phi_out_g)->required();
    phi_generate->add_option("--out-h", phi_out_h)->required();
    phi_generate->add_option("--witness-out", phi_witness_out);

    auto* phi_replay = phi->add_subcommand("replay", "re-run a recorded generation bit-exactly");
    phi_replay->add_option("witness", phi_witness_path)->required();
    phi_replay->add_option("--out-g", phi_out_g)->required();
    phi_replay->add_option("--out-h", phi_out_h)->required();

    auto* phi_verify = phi->add_subcommand("verify", "re-certify a generated pair");
    add_pair_opts(phi_verify);

    // check family
    auto* check = app.add_subcommand("check", "equivalence condition checkers");
    check->require_subcommand(1);
    std::string chk_a, chk_b, chk_ta = "t", chk_tb = "t", chk_pairs;
    int chk_kmax_subsets = 4, chk_kmax_partitions = 6, chk_trials = 50;
    std::uint64_t chk_seed = 1;

    auto add_check_pair = [&](CLI::App* cmd) {
        cmd->add_option("fileA", chk_a)->required();
        cmd->add_option("fileB", chk_b)->required();
        cmd->add_option("--ta", chk_ta)->capture_default_str();
        cmd->add_option("--tb", chk_tb)->capture_default_str();
    };
    auto* chk_subsets = check->add_subcommand("subsets", "T(G_S) = T(H_S) for every pair set S");
    add_check_pair(chk_subsets);
    chk_subsets->add_option("--kmax", chk_kmax_subsets)->capture_default_str();
    auto* chk_partitions =
        check->add_subcommand("partitions", "T(G(P)) = T(H(P)) for every partition P");
    add_check_pair(chk_partitions);
    chk_partitions->add_option("--kmax", chk_kmax_partitions)->capture_default_str();
    auto* chk_expansion = check->add_subcommand("expansion", "expansion identity for one pair set");
    chk_expansion->add_option("fileA", chk_a)->required();
    chk_expansion->add_option("--ta", chk_ta)->capture_default_str();
    chk_expansion->add_option("--pairs", chk_pairs, "e.g. 1-2,1-3")->required();
    auto* chk_necessary = check->add_subcommand("necessary", "loop and multiplicity preconditions");
    add_check_pair(chk_necessary);
    auto* chk_probe = check->add_subcommand("probe", "randomized glued-graph probe");
    add_check_pair(chk_probe);
    chk_probe->add_option("--trials", chk_trials)->capture_default_str();
    chk_probe->add_option("--seed", chk_seed)->capture_default_str();

    // corpus family
    auto* corp = app.add_subcommand("corpus", "embedded example corpus");
    corp->require_subcommand(1);
    std::string corp_name;
    corp->add_subcommand("list", "list entry names");
    auto* corp_show = corp->add_subcommand("show", "print an entry's graphs");
    corp_show->add_option("name", corp_name)->required();
    auto* corp_run = corp->add_subcommand("run", "run assertions (all entries when unnamed)");
    corp_run->add_option("name", corp_name);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);  // prints the diagnostic to stderr
        return kExitUsage;
    }

    IsoLimits limits{iso_limit};
    EngineConfig cfg = engine_config(parallel, memo_max, policy);

    if (*compute) {
        GraphFile gf = load(compute_file);
        BiPoly result;
        MemoCache cache;
        EngineStats est;
        if (engine == "subset") {
            result = tutte_subset_expansion(gf.graph, oracle_limit);
        } else {
            result = tutte_dc(gf.graph, cfg, cache, &est);
        }
        std::cout << result.render() << "\n";
        if (stats && engine == "dc") std::cout << est.report();
        return kExitPass;
    }

    if (*equal) {
        GraphFile a = load(equal_a), b = load(equal_b);
        MemoCache cache;
        bool eq = tutte_dc(a.graph, cfg, cache) == tutte_dc(b.graph, cfg, cache);
        std::cout << (eq ? "T-EQUIVALENT" : "NOT-T-EQUIVALENT") << "\n";
        return eq ? kExitPass : kExitNegative;
    }

    if (*iso) {
        GraphFile a = load(iso_a), b = load(iso_b);
        auto m = find_isomorphism(a.graph, b.graph, limits);
        if (m) {
            std::cout << m->render() << "\n";
            return kExitPass;
        }
        std::cout << "NOT-ISOMORPHIC\n";
        return kExitNegative;
    }

    if (*glue_cmd) {
        GraphFile a = load(glue_a), b = load(glue_b);
        TerminalList ta(a.graph, terminals_of(a, glue_ta, glue_a));
        TerminalList tb(b.graph, terminals_of(b, glue_tb, glue_b));
        GlueResult res = glue(ta, tb);
        GraphFile out{res.graph, {{"merged", res.merged}}};
        write_graph_file(glue_out, out);
        std::cout << "wrote " << glue_out << " (" << res.graph.vertex_count() << " vertices, "
                  << res.graph.edge_count() << " edges)\n";
        return kExitPass;
    }

    if (*twist_cmd) {
        GraphFile gf = load(twist_file);
        auto cut = parse_csv_ints(twist_cut);
        auto side = parse_csv_ints(twist_side);
        if (cut.size() != 2) throw Error("--cut needs exactly two vertex ids");
        Multigraph twisted = whitney_twist(gf.graph, {cut[0], cut[1]},
                                           std::vector<VertexId>(side.begin(), side.end()));
        write_graph_file(twist_out, {twisted, gf.terminals});
        std::cout << "wrote " << twist_out << "\n";
        return kExitPass;
    }

    if (*flip) {
        GraphFile r = load(flip_r), w = load(flip_w);
        TerminalList rt(r.graph, terminals_of(r, flip_tr, flip_r));
        TerminalList wt(w.graph, terminals_of(w, flip_tw, flip_w));
        auto [g1, g2] = rotor_flip_pair(rt, wt, flip_force, limits);
        write_graph_file(flip_out + ".1.g", {g1, {}});
        write_graph_file(flip_out + ".2.g", {g2, {}});
        std::cout << "wrote " << flip_out << ".1.g and " << flip_out << ".2.g\n";
        return kExitPass;
    }

    if (*th5) {
        GraphFile r = load(th5_r), w0 = load(th5_w0), y = load(th5_y);
        W0Spec spec;
        spec.w0 = w0.graph;
        spec.w_list = terminals_of(w0, th5_w, th5_w0);
        spec.x_list = terminals_of(w0, th5_x, th5_w0);
        spec.r = th5_rr;
        spec.g = th5_gg;
        TerminalList rt(r.graph, terminals_of(r, th5_tr, th5_r));
        TerminalList yt(y.graph, terminals_of(y, th5_ty, th5_y));
        auto [g1, g2] = theorem5_pair(rt, spec, yt, th5_force, limits);
        write_graph_file(th5_out + ".1.g", {g1, {}});
        write_graph_file(th5_out + ".2.g", {g2, {}});
        std::cout << "wrote " << th5_out << ".1.g and " << th5_out << ".2.g\n";
        return kExitPass;
    }

    if (*phi) {
        if (*phi_replay) {
            WitnessFile wf = read_witness_file(phi_witness_path);
            GraphFile g = load(wf.g_path), h = load(wf.h_path);
            PhiWitness w =
                select_witness(g.graph, h.graph, wf.e, wf.f, wf.phi_index, wf.psi_index, limits);
            if (!wf.phi_render.empty() && w.phi.render() != wf.phi_render)
                throw Error("recorded phi does not match the enumeration; file out of date");
            if (!wf.psi_render.empty() && w.psi.render() != wf.psi_render)
                throw Error("recorded psi does not match the enumeration; file out of date");
            std::vector<CycleRotorAssignment> asgs;
            for (const auto& a : wf.assignments) {
                GraphFile rotor = load(a.rotor_path);
                asgs.push_back({a.cycle, rotor.graph, a.orbit});
            }
            AttachResult res = attach_rotors(w, asgs, limits);
            write_graph_file(phi_out_g, {res.witness.g, {}});
            write_graph_file(phi_out_h, {res.witness.h, {}});
            std::cout << "wrote " << phi_out_g << " and " << phi_out_h << "\n";
            return kExitPass;
        }

        GraphFile g = load(phi_g), h = load(phi_h);

        if (*phi_certify) {
            auto all = enumerate_phi_witnesses(g.graph, h.graph, phi_e, phi_f, limits);
            if (all.empty()) {
                std::cout << "NOT-A-MEMBER\n";
                return kExitNegative;
            }
            if (phi_list) {
                for (const auto& w : all)
                    std::cout << "phi-index " << w.phi_index << " psi-index " << w.psi_index
                              << " phi " << w.phi.render() << " psi " << w.psi.render() << "\n";
            } else {
                const PhiWitness& w = all.front();
                std::cout << "MEMBER\n";
                std::cout << "witnesses " << all.size() << "\n";
                std::cout << "phi " << w.phi.render() << "\n";
                std::cout << "psi " << w.psi.render() << "\n";
                std::cout << "ends " << w.s1 << "," << w.s2 << " -> " << w.t1 << "," << w.t2
                          << "\n";
            }
            return kExitPass;
        }

        if (*phi_digraph || *phi_cycles) {
            PhiWitness w = select_witness(g.graph, h.graph, phi_e, phi_f, phi_pi, phi_qi, limits);
            PsiDigraph d = build_psi_digraph(w);
            if (*phi_digraph) {
                for (const auto& [i, j] : d.arcs) std::cout << i << "->" << j << "\n";
            } else {
                for (const auto& c : directed_cycles(d)) {
                    for (std::size_t i = 0; i < c.size(); i++) std::cout << (i ? "," : "") << c[i];
                    std::cout << "\n";
                }
            }
            return kExitPass;
        }

        if (*phi_generate) {
            PhiWitness w = select_witness(g.graph, h.graph, phi_e, phi_f, phi_pi, phi_qi, limits);
            std::vector<CycleRotorAssignment> asgs;
            WitnessFile wf;
            wf.g_path = phi_g;
            wf.h_path = phi_h;
            wf.e = phi_e;
            wf.f = phi_f;
            wf.phi_index = phi_pi;
            wf.psi_index = phi_qi;
            wf.phi_render = w.phi.render();
            wf.psi_render = w.psi.render();
            for (const std::string& spec : phi_rotors) {
                RotorArg arg = parse_rotor_arg(spec);
                GraphFile rotor = load(arg.path);
                const auto& orbit = terminals_of(rotor, arg.orbit_name, arg.path);
                asgs.push_back({arg.cycle, rotor.graph, orbit});
                wf.assignments.push_back({arg.cycle, arg.path, orbit});
            }
            AttachResult res = attach_rotors(w, asgs, limits);
            write_graph_file(phi_out_g, {res.witness.g, {}});
            write_graph_file(phi_out_h, {res.witness.h, {}});
            for (const auto& note : res.notes) std::cout << "note: " << note << "\n";
            if (!phi_witness_out.empty()) write_witness_file(phi_witness_out, wf);
            std::cout << "wrote " << phi_out_g << " and " << phi_out_h << "\n";
            return kExitPass;
        }

        if (*phi_verify) {
            MemberVerdict v = verify_new_member(g.graph, h.graph, phi_e, phi_f, limits);
            std::cout << "in-phi-prime " << (v.in_phi_prime ? "yes" : "no") << "\n";
            std::cout << "t-equivalent " << (v.t_equivalent ? "yes" : "no") << "\n";
            std::cout << "isomorphic "
                      << (v.isomorphic ? (*v.isomorphic ? "yes" : "no") : "unknown") << "\n";
            return v.in_phi_prime && v.t_equivalent ? kExitPass : kExitNegative;
        }
    }

    if (*check) {
        if (*chk_expansion) {
            GraphFile a = load(chk_a);
            TerminalList ta(a.graph, terminals_of(a, chk_ta, chk_a));
            std::vector<std::pair<int, int>> pairs;
            std::stringstream ss(chk_pairs);
            std::string tok;
            while (std::getline(ss, tok, ',')) {
                auto dash = tok.find('-');
                if (dash == std::string::npos) throw Error("--pairs entries look like i-j");
                pairs.emplace_back(std::stoi(tok.substr(0, dash)),
                                   std::stoi(tok.substr(dash + 1)));
            }
            IdentityVerdict v = check_expansion_identity(ta, PairSet(pairs));
            std::cout << "verdict=" << (v.ok ? "pass" : "fail") << "\n";
            if (!v.ok) {
                std::cout << "lhs=" << v.lhs.render() << "\n";
                std::cout << "rhs=" << v.rhs.render() << "\n";
            }
            return v.ok ? kExitPass : kExitNegative;
        }

        GraphFile a = load(chk_a), b = load(chk_b);
        TerminalList ta(a.graph, terminals_of(a, chk_ta, chk_a));
        TerminalList tb(b.graph, terminals_of(b, chk_tb, chk_b));

        if (*chk_subsets) {
            CheckBudget budget;
            budget.max_k_subsets = chk_kmax_subsets;
            EquivalenceReport rep = check_theorem_subsets(ta, tb, budget);
            std::cout << rep.render();
            return rep.passed() ? kExitPass : kExitNegative;
        }
        if (*chk_partitions) {
            CheckBudget budget;
            budget.max_k_partitions = chk_kmax_partitions;
            EquivalenceReport rep = check_theorem_partitions(ta, tb, budget);
            std::cout << rep.render();
            return rep.passed() ? kExitPass : kExitNegative;
        }
        if (*chk_necessary) {
            NecessaryVerdict v = check_necessary(ta, tb);
            std::cout << "verdict=" << (v.ok ? "pass" : "fail") << "\n";
            std::cout << "detail=" << v.detail << "\n";
            return v.ok ? kExitPass : kExitNegative;
        }
        if (*chk_probe) {
            ProbeReport rep = random_glue_probe(ta, tb, chk_trials, chk_seed);
            std::cout << "trials=" << rep.trials << "\n";
            std::cout << "counterexamples=" << rep.counterexamples.size() << "\n";
            for (const auto& c : rep.counterexamples) std::cout << "counterexample " << c << "\n";
            return rep.passed() ? kExitPass : kExitNegative;
        }
    }

    if (*corp) {
        const std::string& mode = corp->get_subcommands().front()->get_name();
        if (mode == "list") {
            for (const auto& e : corpus()) std::cout << e.name << ": " << e.description << "\n";
            return kExitPass;
        }
        if (mode == "show") {
            const CorpusEntry& e = corpus_entry(corp_name);
            std::cout << "# " << e.name << ": " << e.description << "\n";
            for (const auto& [key, value] : e.params)
                std::cout << "# " << key << " = " << value << "\n";
            for (const auto& gf : e.graphs) {
                std::cout << "# --- graph: " << gf.graph.name() << " ---\n";
                write_graph(std::cout, gf);
            }
            return kExitPass;
        }
        // run
        if (!corp_name.empty()) corpus_entry(corp_name);  // validate the name early
        bool all_ok = true;
        for (const auto& e : corpus()) {
            if (!corp_name.empty() && e.name != corp_name) continue;
            for (const auto& chk : e.checks) {
                std::string detail;
                bool ok = chk.run(detail);
                all_ok = all_ok && ok;
                std::cout << (ok ? "[ok]   " : "[FAIL] ") << e.name << ": " << chk.label;
                if (!ok && !detail.empty()) std::cout << " (" << detail << ")";
                std::cout << "\n";
            }
        }
        return all_ok ? kExitPass : kExitNegative;
    }

    return kExitUsage;
}

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitUsage;
    }
}
