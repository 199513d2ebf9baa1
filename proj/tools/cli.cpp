#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "sck/algorithms.hpp"
#include "sck/cycles.hpp"
#include "sck/decompose.hpp"
#include "sck/graph.hpp"
#include "sck/ordering.hpp"
#include "sck/separators.hpp"

using nlohmann::json;

namespace sck::cli {

namespace {

struct Io {
    std::string input = "-";
    std::string output = "-";
    std::string format = "json";

    Graph load(std::istream& stdin_stream) const {
        if (input == "-") return read_edge_list(stdin_stream);
        return read_edge_list_file(input);
    }

    void emit(std::ostream& stdout_stream, const json& j, const std::string& text) const {
        std::ostream* os = &stdout_stream;
        std::ofstream file;
        if (output != "-") {
            file.open(output);
            if (!file) throw std::invalid_argument("cannot open output '" + output + "'");
            os = &file;
        }
        if (format == "json") {
            *os << j.dump() << "\n";
        } else {
            *os << text;
        }
    }
};

void add_io_flags(CLI::App* cmd, Io& io, bool with_input = true) {
    if (with_input) {
        cmd->add_option("input,--input", io.input, "edge-list file, or - for stdin");
    }
    cmd->add_option("--output", io.output, "output file, or - for stdout");
    cmd->add_option("--format", io.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_flag_callback("--json", [&io]() { io.format = "json"; }, "shorthand for --format json");
}

json edges_json(const std::vector<Edge>& es) {
    json a = json::array();
    for (const auto& [u, v] : es) a.push_back({u, v});
    return a;
}

json decomposition_json(const Decomposition& dec) {
    json comps = json::array();
    for (const auto& c : dec.components) {
        json jc;
        jc["kind"] = to_string(c.kind);
        if (c.kind == ComponentKind::Cage) jc["n"] = c.cage_size;
        jc["vertices"] = c.vertices;
        jc["edges"] = edges_json(c.edges);
        comps.push_back(std::move(jc));
    }
    return json{{"components", std::move(comps)}};
}

json td_json(const TreeDecomposition& td) {
    json edges = json::array();
    for (const auto& [i, j] : td.tree_edges) edges.push_back({i, j});
    return json{{"bags", td.bags}, {"edges", std::move(edges)}, {"width", td.width}};
}

std::vector<int> parse_int_list(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (!tok.empty()) out.push_back(std::stoi(tok));
    }
    return out;
}

GeneratorOptions::Base parse_base(const std::string& s) {
    if (s == "k1") return GeneratorOptions::Base::K1;
    if (s == "ck") return GeneratorOptions::Base::Ck;
    return GeneratorOptions::Base::BySeed;
}

std::vector<std::pair<Rule, double>> parse_rules(const std::string& csv) {
    std::vector<std::pair<Rule, double>> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok == "iii") {
            out.emplace_back(Rule::AttachVertex, 1.0);
        } else if (tok == "iv") {
            out.emplace_back(Rule::AttachCycleVertex, 1.0);
        } else if (tok == "v") {
            out.emplace_back(Rule::AttachCycleEdge, 1.0);
        } else if (tok == "vi") {
            out.emplace_back(Rule::AttachCyclePath, 1.0);
        } else if (!tok.empty()) {
            throw std::invalid_argument("unknown rule '" + tok + "' (expected iii|iv|v|vi)");
        }
    }
    return out;
}

TreeDecomposition decompose_any(const Graph& g, int k, const std::vector<int>& hubs) {
    if (girth(g) == kNoCycle) return trivial_tree_decomposition(g);
    if (k % 2 == 1) return tree_decomposition_odd(g, k, hubs);
    return tree_decomposition_even(g, k, hubs);
}

// ---- verify: the invariant suite over generated instances ----

struct CheckTally {
    int pass = 0;
    int fail = 0;
    std::string first_failure;

    void record(bool ok, const std::string& context) {
        if (ok) {
            ++pass;
        } else {
            ++fail;
            if (first_failure.empty()) first_failure = context;
        }
    }
};

int run_verify(const std::vector<int>& klist, int count, std::uint64_t seed, int steps_max,
               std::ostream& out) {
    std::map<std::string, CheckTally> tally;
    for (int k : klist) {
        for (int i = 0; i < count; ++i) {
            GeneratorOptions opt;
            opt.k = k;
            opt.steps = static_cast<int>((seed + i) % (steps_max + 1));
            opt.seed = seed + 1000003ULL * i + k;
            Graph g = generate_sck(opt);
            std::string ctx = "k=" + std::to_string(k) + " seed=" + std::to_string(opt.seed) +
                              " steps=" + std::to_string(opt.steps);

            bool oracle = is_sck_oracle(g, k);
            tally["generator-soundness"].record(oracle, ctx);
            if (!oracle) continue;

            tally["recognize=oracle"].record(recognize_sck(g, k).is_sck, ctx);
            tally["min-degree<=2"].record(min_degree(g) <= 2, ctx);

            Vco vco = extract_vco(g, k);
            tally["vco-roundtrip"].record(replay_vco(vco) == g, ctx);

            auto colors = color_sck(g, k);
            int used = *std::max_element(colors.begin(), colors.end()) + 1;
            bool cyclic = girth(g) != kNoCycle;
            int expect = g.vertex_count() == 1 ? 1 : (k % 2 == 0 || !cyclic ? 2 : 3);
            tally["coloring"].record(is_proper_coloring(g, colors) && used == expect, ctx);

            if (k % 2 == 1) {
                bool match_ok = true;
                for (int r = 0; r < g.vertex_count() && match_ok; ++r) {
                    match_ok = nontree_edges_form_matching(g, r).is_matching;
                }
                tally["nontree-matching"].record(match_ok, ctx);
            }

            auto cycles = enumerate_induced_cycles(g);
            bool law = true;
            for (size_t a = 0; a < cycles.size() && law; ++a) {
                for (size_t b = a + 1; b < cycles.size(); ++b) {
                    auto kind = classify_cycle_intersection(g, cycles[a], cycles[b], k).kind;
                    bool even_only = kind == IntersectionKind::HalfKEdges ||
                                     kind == IntersectionKind::HubPair;
                    if (kind == IntersectionKind::Other || (k % 2 == 1 && even_only)) {
                        law = false;
                        break;
                    }
                }
            }
            tally["cycle-intersection-law"].record(law, ctx);

            if (g.vertex_count() >= 2) {
                tally["separator-bounds"].record(check_separator_bounds(g, k).violations.empty(),
                                                 ctx);
            }

            FillInResult fr = fill_in(g, k);
            bool fill_ok = is_chordal(fr.chordal_graph);
            for (const auto& [kind, added] : fr.per_component_counts) {
                if (kind == ComponentKind::CycleK && added != k - 3) fill_ok = false;
                if (kind == ComponentKind::CutEdge && added != 0) fill_ok = false;
            }
            tally["fill-in"].record(fill_ok, ctx);

            if (cyclic) {
                TreeDecomposition td = decompose_any(g, k, {});
                auto v = validate_tree_decomposition(g, td);
                tally["tree-decomposition"].record(v.valid && td.width == 2, ctx);
            }

            if (g.vertex_count() >= 3 && g.vertex_count() <= 16) {
                auto fast = is_hamiltonian_sck(g, k);
                auto slow = hamiltonian_bruteforce(g);
                tally["hamiltonicity"].record(fast.hamiltonian == slow.cycle.has_value(), ctx);
            }
        }
    }
    bool all_ok = true;
    out << "check                     pass    fail\n";
    for (const auto& [name, t] : tally) {
        out << "  " << name << std::string(std::max<size_t>(1, 24 - name.size()), ' ')
            << t.pass << "\t" << t.fail;
        if (t.fail) {
            out << "\tfirst: " << t.first_failure;
            all_ok = false;
        }
        out << "\n";
    }
    out << (all_ok ? "verify: all checks passed\n" : "verify: FAILURES\n");
    return all_ok ? 0 : 1;
}

}  // namespace

int run(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"strictly chordality-k graph toolkit"};
    app.require_subcommand(1);

    Io io;
    int k = 0;
    bool per_component = false;

    auto* recognize = app.add_subcommand("recognize", "decomposition-based SC_k recognition");
    recognize->add_option("--k", k, "cycle length")->required();
    recognize->add_flag("--per-component", per_component,
                        "run on each connected component of a disconnected input");
    add_io_flags(recognize, io);

    bool list_cycles = false;
    auto* oracle = app.add_subcommand("oracle", "definition-level SC_k test; infers k without --k");
    oracle->add_option("--k", k, "cycle length");
    oracle->add_flag("--per-component", per_component);
    oracle->add_flag("--cycles", list_cycles, "include the induced cycle list");
    add_io_flags(oracle, io);

    auto* decompose = app.add_subcommand("decompose", "clique-separator decomposition");
    decompose->add_option("--k", k, "cycle length")->required();
    add_io_flags(decompose, io);

    int gen_steps = 0;
    std::uint64_t gen_seed = 0;
    std::string gen_rules, gen_base = "auto";
    auto* generate = app.add_subcommand("generate", "random SC_k graph from the construction rules");
    generate->add_option("--k", k, "cycle length")->required();
    generate->add_option("--steps", gen_steps, "number of rule applications");
    generate->add_option("--seed", gen_seed, "RNG seed");
    generate->add_option("--rules", gen_rules, "comma list among iii,iv,v,vi");
    generate->add_option("--base", gen_base, "auto|k1|ck")
        ->check(CLI::IsMember({"auto", "k1", "ck"}));
    add_io_flags(generate, io, false);

    auto* vco = app.add_subcommand("vco", "vertex-cycle ordering");
    vco->add_option("--k", k, "cycle length")->required();
    add_io_flags(vco, io);

    auto* hamilton = app.add_subcommand("hamilton", "hamiltonicity of an SC_k graph");
    hamilton->add_option("--k", k, "cycle length")->required();
    add_io_flags(hamilton, io);

    auto* color = app.add_subcommand("color", "proper coloring of an SC_k graph");
    color->add_option("--k", k, "cycle length")->required();
    add_io_flags(color, io);

    auto* fillin = app.add_subcommand("fillin", "minimum fill-in of an SC_k graph");
    fillin->add_option("--k", k, "cycle length")->required();
    add_io_flags(fillin, io);

    std::string fan_hubs_csv;
    auto* treedecomp = app.add_subcommand("treedecomp", "width-2 tree decomposition");
    treedecomp->add_option("--k", k, "cycle length")->required();
    treedecomp->add_option("--fan-hubs", fan_hubs_csv,
                           "comma list of fan vertices, one per cycle in canonical order");
    add_io_flags(treedecomp, io);

    auto* separators = app.add_subcommand("separators",
                                          "minimal vertex separators; bounds report with --k");
    separators->add_option("--k", k, "cycle length");
    add_io_flags(separators, io);

    std::string verify_klist = "5,6,7,8";
    int verify_count = 25;
    std::uint64_t verify_seed = 1;
    int verify_steps = 8;
    auto* verify = app.add_subcommand("verify", "run the invariant suite on generated instances");
    verify->add_option("--k-list", verify_klist, "comma list of k values");
    verify->add_option("--count", verify_count, "instances per k");
    verify->add_option("--seed", verify_seed, "base seed");
    verify->add_option("--steps-max", verify_steps, "maximum construction steps");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(verify)) {
            return run_verify(parse_int_list(verify_klist), verify_count, verify_seed,
                              verify_steps, out);
        }
        if (app.got_subcommand(generate)) {
            GeneratorOptions opt;
            opt.k = k;
            opt.steps = gen_steps;
            opt.seed = gen_seed;
            opt.rule_weights = parse_rules(gen_rules);
            opt.base = parse_base(gen_base);
            Graph g = generate_sck(opt);
            std::ostream* os = &out;
            std::ofstream file;
            if (io.output != "-") {
                file.open(io.output);
                if (!file) throw std::invalid_argument("cannot open output '" + io.output + "'");
                os = &file;
            }
            write_edge_list(*os, g,
                            {"generated: k=" + std::to_string(k) +
                             " steps=" + std::to_string(gen_steps) +
                             " seed=" + std::to_string(gen_seed)});
            return 0;
        }

        Graph g = io.load(in);

        if (app.got_subcommand(recognize) || app.got_subcommand(oracle)) {
            bool use_oracle = app.got_subcommand(oracle);
            json cycles_json = json::array();
            if (list_cycles) {
                for (const auto& c : enumerate_induced_cycles(g)) cycles_json.push_back(c.vertices);
            }
            if (use_oracle && k == 0) {
                // infer mode
                InferredK ik = infer_k(g);
                json j{{"k", ik.k ? json(*ik.k) : json()}, {"cycle_free", ik.cycle_free}};
                if (list_cycles) j["cycles"] = cycles_json;
                std::ostringstream text;
                if (ik.cycle_free) {
                    text << "cycle-free: any k\n";
                } else if (ik.k) {
                    text << "k = " << *ik.k << "\n";
                } else {
                    text << "not an SC_k graph for any k\n";
                }
                io.emit(out, j, text.str());
                return (ik.k || ik.cycle_free) ? 0 : 1;
            }
            std::vector<Graph> parts;
            if (per_component && !g.is_connected()) {
                for (const auto& comp : connected_components(g)) {
                    parts.push_back(induced_subgraph(g, comp).graph);
                }
            } else {
                parts.push_back(g);
            }
            bool all = true;
            json comp_results = json::array();
            for (const Graph& part : parts) {
                if (use_oracle) {
                    bool ok = is_sck_oracle(part, k);
                    all = all && ok;
                    comp_results.push_back(json{{"sck", ok}});
                } else {
                    RecognitionResult r = recognize_sck(part, k);
                    all = all && r.is_sck;
                    json jr = decomposition_json(r.decomposition);
                    jr["sck"] = r.is_sck;
                    comp_results.push_back(std::move(jr));
                }
            }
            json j = parts.size() == 1 ? comp_results[0]
                                       : json{{"sck", all}, {"components", comp_results}};
            if (list_cycles) j["cycles"] = cycles_json;
            io.emit(out, j, std::string(all ? "yes" : "no") + "\n");
            return all ? 0 : 1;
        }
        if (app.got_subcommand(decompose)) {
            RecognitionResult r = recognize_sck(g, k);
            std::ostringstream text;
            for (const auto& c : r.decomposition.components) {
                text << to_string(c.kind);
                if (c.kind == ComponentKind::Cage) text << "(" << c.cage_size << ")";
                text << ":";
                for (int v : c.vertices) text << " " << v;
                text << "\n";
            }
            io.emit(out, decomposition_json(r.decomposition), text.str());
            return 0;
        }
        if (app.got_subcommand(vco)) {
            Vco v = extract_vco(g, k);
            json labels = json::array();
            std::ostringstream text;
            for (const auto& l : v.labels) {
                if (l.kind == VcoLabel::Kind::PendantVertex) {
                    labels.push_back(json{{"kind", "pendant_vertex"},
                                          {"v", l.vertex},
                                          {"attach", l.attach_vertex}});
                    text << "pendant vertex " << l.vertex << " at " << l.attach_vertex << "\n";
                } else {
                    labels.push_back(json{{"kind", "pendant_cycle"},
                                          {"s", l.s},
                                          {"cycle", l.cycle},
                                          {"attach", l.attach}});
                    text << l.s << "-pendant cycle of " << l.cycle.size() << " vertices\n";
                }
            }
            json j{{"labels", std::move(labels)},
                   {"base", {{"vertices", v.base_vertices}, {"edges", edges_json(v.base_edges)}}}};
            text << "base of " << v.base_vertices.size() << " vertices\n";
            io.emit(out, j, text.str());
            return 0;
        }
        if (app.got_subcommand(hamilton)) {
            HamiltonicityResult r = is_hamiltonian_sck(g, k);
            json j{{"hamiltonian", r.hamiltonian},
                   {"cycle", r.cycle ? json(*r.cycle) : json()}};
            io.emit(out, j, std::string(r.hamiltonian ? "hamiltonian" : "non-hamiltonian") + "\n");
            return r.hamiltonian ? 0 : 1;
        }
        if (app.got_subcommand(color)) {
            auto colors = color_sck(g, k);
            json cmap = json::object();
            for (size_t v = 0; v < colors.size(); ++v) cmap[std::to_string(v)] = colors[v];
            int used = *std::max_element(colors.begin(), colors.end()) + 1;
            json j{{"colors", std::move(cmap)}, {"count", used}};
            io.emit(out, j, std::to_string(used) + " colors\n");
            return 0;
        }
        if (app.got_subcommand(fillin)) {
            FillInResult r = fill_in(g, k);
            json j{{"added", edges_json(r.added_edges)},
                   {"count", static_cast<int>(r.added_edges.size())}};
            io.emit(out, j, std::to_string(r.added_edges.size()) + " edges added\n");
            return 0;
        }
        if (app.got_subcommand(treedecomp)) {
            TreeDecomposition td = decompose_any(g, k, parse_int_list(fan_hubs_csv));
            std::ostringstream text;
            for (size_t i = 0; i < td.bags.size(); ++i) {
                text << "X" << i + 1 << " = {";
                for (size_t j = 0; j < td.bags[i].size(); ++j) {
                    if (j) text << ",";
                    text << td.bags[i][j];
                }
                text << "}\n";
            }
            text << "width " << td.width << "\n";
            io.emit(out, td_json(td), text.str());
            return 0;
        }
        if (app.got_subcommand(separators)) {
            if (k > 0) {
                SeparatorReport rep = check_separator_bounds(g, k);
                json cages = json::array();
                if (k % 2 == 0) {
                    for (const auto& c : find_cages(g, k)) {
                        cages.push_back(json{{"hubs", {c.hubs.first, c.hubs.second}},
                                             {"n", c.size}});
                    }
                }
                json j{{"max_separator_size", rep.max_size},
                       {"independent", rep.all_independent_when_ge3},
                       {"cages", std::move(cages)},
                       {"violations", rep.violations}};
                std::ostringstream text;
                text << "max separator size " << rep.max_size << ", " << rep.violations.size()
                     << " violations\n";
                io.emit(out, j, text.str());
                return rep.violations.empty() ? 0 : 1;
            }
            json seps = json::array();
            std::ostringstream text;
            for (const auto& s : enumerate_minimal_separators(g)) {
                seps.push_back(s.vertices);
                text << "{";
                for (size_t i = 0; i < s.vertices.size(); ++i) {
                    if (i) text << ",";
                    text << s.vertices[i];
                }
                text << "}\n";
            }
            io.emit(out, json{{"separators", std::move(seps)}}, text.str());
            return 0;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no subcommand\n";
    return 2;
}

}  // namespace sck::cli
