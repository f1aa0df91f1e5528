#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "d2c/decide.hpp"
#include "d2c/graph.hpp"
#include "d2c/iso.hpp"
#include "d2c/oracle.hpp"
#include "d2c/reductions.hpp"

namespace {

using nlohmann::json;

// Exit codes: 0 YES, 1 NO, 2 input error, 3 brute-force refusal, 4 usage.
enum ExitCode { kYes = 0, kNo = 1, kInputError = 2, kRefused = 3, kUsage = 4 };

struct Options {
    std::string format = "graph6";
    bool machine = false;
    bool verify = false;
    int brute_threshold = d2c::oracle::kDefaultThreshold;
};

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw d2c::ParseError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<std::string> split_records(const std::string& text) {
    std::vector<std::string> lines;
    std::string line;
    std::istringstream in(text);
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) lines.push_back(line);
    }
    return lines;
}

// Graphs named on the command line, in file order. graph6 files may hold
// one record per line; edge-list files hold a single graph.
std::vector<d2c::Graph> load_graphs(const std::string& path, const Options& opt) {
    std::string text = read_input(path);
    if (opt.format == "edgelist") return {d2c::parse_edge_list(text)};
    std::vector<d2c::Graph> graphs;
    std::vector<std::string> records = split_records(text);
    if (records.empty()) throw d2c::ParseError("no graph records in input");
    for (size_t i = 0; i < records.size(); ++i) {
        try {
            graphs.push_back(d2c::parse_graph6(records[i]));
        } catch (const d2c::ParseError& e) {
            throw d2c::ParseError("record " + std::to_string(i + 1) + ": " + e.what());
        }
    }
    return graphs;
}

d2c::Graph load_one_graph(const std::string& path, const Options& opt) {
    std::vector<d2c::Graph> graphs = load_graphs(path, opt);
    if (graphs.size() != 1)
        throw d2c::ParseError("expected exactly one graph, found " +
                              std::to_string(graphs.size()));
    return graphs[0];
}

std::string int_array(const std::vector<int>& v) {
    std::string out = "[";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(v[i]);
    }
    return out + "]";
}

json reason_json(const d2c::NoReason& reason) {
    json r;
    if (const auto* nb = std::get_if<d2c::NonBipartite>(&reason)) {
        r["kind"] = "NonBipartite";
        r["cycle"] = nb->certificate.cycle;
    } else if (const auto* cd = std::get_if<d2c::ComponentNotDistinguishable>(&reason)) {
        r["kind"] = "ComponentNotDistinguishable";
        r["component"] = cd->component_index;
        r["nta"] = cd->nta.p;
    } else if (const auto* tri = std::get_if<d2c::ThreeIsomorphicComponents>(&reason)) {
        r["kind"] = "ThreeIsomorphicComponents";
        r["components"] = tri->component_indices;
        r["isomorphisms"] = {tri->isomorphisms[0].p, tri->isomorphisms[1].p};
    } else if (const auto* pair = std::get_if<d2c::IsomorphicPairNotAsymmetric>(&reason)) {
        r["kind"] = "IsomorphicPairNotAsymmetric";
        r["components"] = pair->component_indices;
        r["iso"] = pair->iso.p;
        r["nta"] = pair->nta.p;
    }
    return r;
}

std::string reason_line(const d2c::NoReason& reason) {
    if (const auto* nb = std::get_if<d2c::NonBipartite>(&reason))
        return "NO NonBipartite cycle=" + int_array(nb->certificate.cycle);
    if (const auto* cd = std::get_if<d2c::ComponentNotDistinguishable>(&reason))
        return "NO ComponentNotDistinguishable nta=" + int_array(cd->nta.p);
    if (const auto* tri = std::get_if<d2c::ThreeIsomorphicComponents>(&reason)) {
        std::vector<int> ids(tri->component_indices.begin(), tri->component_indices.end());
        return "NO ThreeIsomorphicComponents components=" + int_array(ids) +
               " iso1=" + int_array(tri->isomorphisms[0].p) +
               " iso2=" + int_array(tri->isomorphisms[1].p);
    }
    const auto& pair = std::get<d2c::IsomorphicPairNotAsymmetric>(reason);
    std::vector<int> ids(pair.component_indices.begin(), pair.component_indices.end());
    return "NO IsomorphicPairNotAsymmetric components=" + int_array(ids) +
           " iso=" + int_array(pair.iso.p) + " nta=" + int_array(pair.nta.p);
}

// Independent re-check of a verdict, used by --verify.
bool reverify(const d2c::Graph& g, const d2c::D2CVerdict& verdict) {
    if (verdict.is_yes()) return d2c::verify_distinguishing(g, *verdict.witness);
    const d2c::NoReason& reason = *verdict.reason;
    if (const auto* nb = std::get_if<d2c::NonBipartite>(&reason))
        return d2c::is_valid_odd_cycle(g, nb->certificate);
    if (const auto* cd = std::get_if<d2c::ComponentNotDistinguishable>(&reason))
        return !cd->nta.is_identity() && d2c::is_automorphism(g, cd->nta);
    auto comps = d2c::connected_components(g);
    if (const auto* tri = std::get_if<d2c::ThreeIsomorphicComponents>(&reason)) {
        auto [i, j, k] = tri->component_indices;
        return d2c::is_isomorphism(comps[i].graph, comps[j].graph, tri->isomorphisms[0]) &&
               d2c::is_isomorphism(comps[i].graph, comps[k].graph, tri->isomorphisms[1]);
    }
    const auto& pair = std::get<d2c::IsomorphicPairNotAsymmetric>(reason);
    auto [i, j] = pair.component_indices;
    return d2c::is_isomorphism(comps[i].graph, comps[j].graph, pair.iso) &&
           !pair.nta.is_identity() && d2c::is_automorphism(comps[i].graph, pair.nta);
}

int emit(const Options& opt, const std::string& command, const json& results,
         const std::vector<std::string>& lines,
         std::chrono::steady_clock::time_point start, int exit_code) {
    if (opt.machine) {
        json out;
        out["command"] = command;
        out["results"] = results;
        out["elapsed_ms"] =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                .count();
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& line : lines) std::cout << line << "\n";
    }
    return exit_code;
}

int run_decide(const std::string& path, const Options& opt) {
    auto start = std::chrono::steady_clock::now();
    std::vector<d2c::Graph> graphs = load_graphs(path, opt);
    json results = json::array();
    std::vector<std::string> lines;
    int exit_code = kYes;
    for (const auto& g : graphs) {
        d2c::D2CVerdict verdict = d2c::decide_d2c(g);
        json r;
        r["input"] = d2c::write_graph6(g);
        std::string line;
        if (verdict.is_yes()) {
            r["verdict"] = "YES";
            r["witness"] = verdict.witness->colors;
            line = "YES witness=" + int_array(verdict.witness->colors);
        } else {
            r["verdict"] = "NO";
            r["reason"] = reason_json(*verdict.reason);
            line = reason_line(*verdict.reason);
            exit_code = std::max(exit_code, static_cast<int>(kNo));
        }
        if (opt.verify) {
            if (!reverify(g, verdict))
                throw std::logic_error("verification failed for a returned verdict");
            r["verified"] = true;
            line += " verified=ok";
        }
        results.push_back(r);
        lines.push_back(line);
    }
    return emit(opt, "decide", results, lines, start, exit_code);
}

int run_oracle(const std::string& path, const Options& opt) {
    auto start = std::chrono::steady_clock::now();
    std::vector<d2c::Graph> graphs = load_graphs(path, opt);
    json results = json::array();
    std::vector<std::string> lines;
    int exit_code = kYes;
    for (const auto& g : graphs) {
        json r;
        r["input"] = d2c::write_graph6(g);
        try {
            bool yes = d2c::oracle::brute_chi_d_le_2(g, opt.brute_threshold);
            r["verdict"] = yes ? "YES" : "NO";
            lines.push_back(yes ? "YES" : "NO");
            if (!yes) exit_code = std::max(exit_code, static_cast<int>(kNo));
        } catch (const d2c::ThresholdError& e) {
            r["verdict"] = "REFUSED";
            r["threshold"] = opt.brute_threshold;
            lines.push_back("REFUSED");
            std::cerr << "refused: " << e.what() << "\n";
            exit_code = std::max(exit_code, static_cast<int>(kRefused));
        }
        results.push_back(r);
    }
    return emit(opt, "oracle", results, lines, start, exit_code);
}

int run_check_coloring(const std::string& graph_path, const std::string& colors_path,
                       const Options& opt) {
    auto start = std::chrono::steady_clock::now();
    d2c::Graph g = load_one_graph(graph_path, opt);
    std::vector<std::string> records = split_records(read_input(colors_path));
    std::vector<int> colors;
    for (size_t i = 0; i < records.size(); ++i) {
        try {
            size_t used = 0;
            int c = std::stoi(records[i], &used);
            if (used != records[i].size()) throw std::invalid_argument("trailing data");
            colors.push_back(c);
        } catch (const std::exception&) {
            throw d2c::ParseError("colors line " + std::to_string(i + 1) +
                                  ": expected a single integer");
        }
    }
    if (static_cast<int>(colors.size()) != g.n())
        throw d2c::ParseError("coloring has " + std::to_string(colors.size()) +
                              " entries for a graph on " + std::to_string(g.n()) + " vertices");
    d2c::TwoColoring coloring(colors);  // validates the 1/2 range

    json r;
    r["input"] = d2c::write_graph6(g);
    r["coloring"] = coloring.colors;
    std::string line;
    int exit_code;
    if (!d2c::is_proper(g, coloring)) {
        r["distinguishing"] = false;
        r["why"] = "not-proper";
        line = "NO not-proper";
        exit_code = kNo;
    } else if (auto nta = d2c::has_color_preserving_nta(g, coloring)) {
        r["distinguishing"] = false;
        r["why"] = "preserved-by-nta";
        r["nta"] = nta->p;
        line = "NO nta=" + int_array(nta->p);
        exit_code = kNo;
    } else {
        r["distinguishing"] = true;
        line = "YES";
        exit_code = kYes;
    }
    return emit(opt, "check-coloring", json::array({r}), {line}, start, exit_code);
}

int run_reduce_ga_to_cc(const std::string& path, const Options& opt) {
    auto start = std::chrono::steady_clock::now();
    d2c::Graph g = load_one_graph(path, opt);
    d2c::GaToCcResult res = d2c::ga_to_cc(g);

    json r;
    r["input"] = d2c::write_graph6(g);
    r["output"] = d2c::write_graph6(res.graph);
    const char* tag = res.tag == d2c::GaToCcCase::Subdivided ? "subdivided" : "k1-no-instance";
    r["case"] = tag;
    r["complemented"] = res.complemented;
    std::vector<std::string> lines{d2c::write_graph6(res.graph)};
    lines.push_back(std::string("case=") + tag);
    lines.push_back(std::string("complemented=") + (res.complemented ? "true" : "false"));
    if (res.map) {
        json edges = json::array();
        for (int i = 0; i < static_cast<int>(res.map->source_edges.size()); ++i) {
            auto [u, v] = res.map->source_edges[i];
            edges.push_back({res.map->source_n + i, u, v});
            lines.push_back("edge-vertex " + std::to_string(res.map->source_n + i) + " = {" +
                            std::to_string(u) + "," + std::to_string(v) + "}");
        }
        r["map"] = {{"source_n", res.map->source_n}, {"edge_vertices", edges}};
    }
    if (opt.verify) {
        if (!d2c::is_connected(res.graph))
            throw std::logic_error("reduction output is not connected");
        r["verified"] = true;
        lines.push_back("verified=ok");
    }
    return emit(opt, "reduce-ga-to-cc", json::array({r}), lines, start, kYes);
}

int run_reduce_cc_to_ga(const std::string& path, const Options& opt) {
    auto start = std::chrono::steady_clock::now();
    d2c::Graph g = load_one_graph(path, opt);
    d2c::CcToGaResult res = d2c::cc_to_ga(g);

    const char* tag = nullptr;
    switch (res.tag) {
        case d2c::CcToGaCase::K1OrK2: tag = "k1-or-k2"; break;
        case d2c::CcToGaCase::NonBipartite: tag = "non-bipartite"; break;
        case d2c::CcToGaCase::Unbalanced: tag = "unbalanced"; break;
        case d2c::CcToGaCase::Balanced: tag = "balanced"; break;
    }
    json r;
    r["input"] = d2c::write_graph6(g);
    r["output"] = d2c::write_graph6(res.graph);
    r["case"] = tag;
    std::vector<std::string> lines{d2c::write_graph6(res.graph)};
    lines.push_back(std::string("case=") + tag);
    if (res.map) {
        r["map"] = {{"source_n", res.map->source_n},
                    {"a", res.map->a},
                    {"b", res.map->b},
                    {"c", res.map->c},
                    {"x_class", res.map->x_class}};
        lines.push_back("a=" + std::to_string(res.map->a) + " b=" + std::to_string(res.map->b) +
                        " c=" + std::to_string(res.map->c));
        lines.push_back("x-class=" + int_array(res.map->x_class));
    }
    if (opt.verify && res.map) {
        const auto& m = *res.map;
        for (int x : m.x_class)
            if (!res.graph.has_edge(x, m.a))
                throw std::logic_error("gadget attachment edge missing");
        if (!res.graph.has_edge(m.a, m.b) || !res.graph.has_edge(m.b, m.c) ||
            res.graph.degree(m.c) != 1)
            throw std::logic_error("gadget tail malformed");
        r["verified"] = true;
        lines.push_back("verified=ok");
    }
    return emit(opt, "reduce-cc-to-ga", json::array({r}), lines, start, kYes);
}

int run_iso(const std::string& path1, const std::string& path2, const Options& opt) {
    auto start = std::chrono::steady_clock::now();
    d2c::Graph g1 = load_one_graph(path1, opt);
    d2c::Graph g2 = load_one_graph(path2, opt);
    std::optional<d2c::Permutation> map = d2c::are_isomorphic(g1, g2);
    json r;
    r["input"] = {d2c::write_graph6(g1), d2c::write_graph6(g2)};
    r["isomorphic"] = map.has_value();
    std::vector<std::string> lines;
    if (map) {
        r["map"] = map->p;
        lines.push_back("map=" + int_array(map->p));
        if (opt.verify) {
            if (!d2c::is_isomorphism(g1, g2, *map))
                throw std::logic_error("returned mapping failed verification");
            r["verified"] = true;
            lines.push_back("verified=ok");
        }
    } else {
        lines.push_back("NONE");
    }
    return emit(opt, "iso", json::array({r}), lines, start, map ? kYes : kNo);
}

int run_auto(const std::string& path, const Options& opt) {
    auto start = std::chrono::steady_clock::now();
    d2c::Graph g = load_one_graph(path, opt);
    std::optional<d2c::Permutation> nta = d2c::has_nta(g);
    json r;
    r["input"] = d2c::write_graph6(g);
    std::vector<std::string> lines;
    if (nta) {
        r["nta"] = nta->p;
        lines.push_back("nta=" + int_array(nta->p));
        if (opt.verify) {
            if (nta->is_identity() || !d2c::is_automorphism(g, *nta))
                throw std::logic_error("returned automorphism failed verification");
            r["verified"] = true;
            lines.push_back("verified=ok");
        }
    } else {
        r["nta"] = nullptr;
        lines.push_back("NONE");
    }
    return emit(opt, "auto", json::array({r}), lines, start, nta ? kYes : kNo);
}

int run_canon(const std::string& path, const Options& opt) {
    auto start = std::chrono::steady_clock::now();
    d2c::Graph g = load_one_graph(path, opt);
    d2c::CanonicalForm cf = d2c::canonical_form(g);
    json r;
    r["input"] = d2c::write_graph6(g);
    r["key"] = cf.key;
    r["labeling"] = cf.labeling.p;
    std::vector<std::string> lines{cf.key};
    if (opt.verify) {
        if (d2c::write_graph6(d2c::relabel(g, cf.labeling)) != cf.key)
            throw std::logic_error("labeling does not reproduce the canonical key");
        r["verified"] = true;
        lines.push_back("verified=ok");
    }
    return emit(opt, "canon", json::array({r}), lines, start, kYes);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"proper distinguishing 2-colorability: decision, certificates, reductions"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_option("--format", opt.format, "input graph format")
        ->check(CLI::IsMember({"graph6", "edgelist"}))
        ->capture_default_str();
    app.add_flag("--machine", opt.machine, "JSON output");
    app.add_flag("--verify", opt.verify, "re-verify results and say so");
    app.add_option("--brute-threshold", opt.brute_threshold,
                   "max vertex count for brute-force commands")
        ->capture_default_str();

    std::string input1, input2;
    auto* decide = app.add_subcommand("decide", "decide distinguishing 2-colorability");
    decide->add_option("input", input1, "graph file, - for stdin")->required();
    auto* oracle = app.add_subcommand("oracle", "brute-force decision for small graphs");
    oracle->add_option("input", input1, "graph file, - for stdin")->required();
    auto* checkc = app.add_subcommand("check-coloring", "verify a coloring is distinguishing");
    checkc->add_option("graph", input1, "graph file")->required();
    checkc->add_option("colors", input2, "one color (1 or 2) per line")->required();
    auto* ga2cc = app.add_subcommand("reduce-ga-to-cc", "automorphism-to-coloring reduction");
    ga2cc->add_option("input", input1, "graph file")->required();
    auto* cc2ga = app.add_subcommand("reduce-cc-to-ga", "coloring-to-automorphism reduction");
    cc2ga->add_option("input", input1, "connected graph file")->required();
    auto* iso = app.add_subcommand("iso", "isomorphism mapping between two graphs");
    iso->add_option("first", input1, "graph file")->required();
    iso->add_option("second", input2, "graph file")->required();
    auto* autoc = app.add_subcommand("auto", "find a nontrivial automorphism");
    autoc->add_option("input", input1, "graph file")->required();
    auto* canon = app.add_subcommand("canon", "canonical form key");
    canon->add_option("input", input1, "graph file")->required();
    for (auto* sub : app.get_subcommands(nullptr)) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (decide->parsed()) return run_decide(input1, opt);
        if (oracle->parsed()) return run_oracle(input1, opt);
        if (checkc->parsed()) return run_check_coloring(input1, input2, opt);
        if (ga2cc->parsed()) return run_reduce_ga_to_cc(input1, opt);
        if (cc2ga->parsed()) return run_reduce_cc_to_ga(input1, opt);
        if (iso->parsed()) return run_iso(input1, input2, opt);
        if (autoc->parsed()) return run_auto(input1, opt);
        if (canon->parsed()) return run_canon(input1, opt);
    } catch (const d2c::ThresholdError& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return kRefused;
    } catch (const d2c::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kUsage;
}
