#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "suites.hpp"
#include "strongpoly/strongpoly.hpp"

namespace fs = std::filesystem;
using namespace strongpoly;

namespace {

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct RunConfig {
    std::optional<int> degree;
    std::uint64_t budget = HomOptions{}.budget;
    std::uint64_t seed = 0;
    std::string out;
    std::vector<int> offsets{1, 2};
};

HomOptions hom_options(const RunConfig& cfg) {
    HomOptions h;
    h.budget = cfg.budget;
    return h;
}

bool looks_like_json(const std::string& text) {
    auto p = text.find_first_not_of(" \t\r\n");
    return p != std::string::npos && text[p] == '{';
}

SequenceExpr load_expr(const std::string& path) {
    std::string text = read_file(path);
    return looks_like_json(text) ? expr_from_json(text) : SequenceExpr::parse(text);
}

Multigraph load_multigraph(const std::string& path) { return multigraph_from_json(read_file(path)); }

// Writes `content` to out/name when an output directory is set.
void save(const RunConfig& cfg, const std::string& name, const std::string& content) {
    if (cfg.out.empty()) return;
    fs::create_directories(cfg.out);
    std::ofstream f(fs::path(cfg.out) / name, std::ios::binary);
    if (!f) throw Error("cannot write " + (fs::path(cfg.out) / name).string());
    f << content;
}

Binding parse_bindings(const std::vector<std::string>& items) {
    Binding b;
    for (const auto& item : items) {
        auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0) throw ParseError("expected NAME=VALUE, got '" + item + "'");
        try {
            b[item.substr(0, eq)] = std::stoll(item.substr(eq + 1));
        } catch (const std::logic_error&) {
            throw ParseError("bad value in '" + item + "'");
        }
    }
    return b;
}

// H is a graph file, an s-expression, or a family spec such as K(5) or Kbip(j,3).
WeightedGraph resolve_target(const std::string& h, const Binding& b) {
    if (fs::exists(h)) return graph_from_json(read_file(h));
    if (!h.empty() && h.front() == '(') return SequenceExpr::parse(h).eval(b);
    FamilySpec spec = parse_family_spec(h);
    std::vector<std::int64_t> args;
    for (const auto& a : spec.args) {
        if (auto* v = std::get_if<std::int64_t>(&a)) {
            args.push_back(*v);
        } else {
            auto it = b.find(std::get<std::string>(a));
            if (it == b.end()) throw DomainError("unbound parameter '" + std::get<std::string>(a) + "'");
            args.push_back(it->second);
        }
    }
    return generate(spec.id, args);
}

int cmd_hom(const RunConfig& cfg, const std::string& g_path, const std::string& h, const std::vector<std::string>& params) {
    Multigraph g = load_multigraph(g_path);
    Rational v = hom(g, resolve_target(h, parse_bindings(params)), hom_options(cfg));
    std::cout << v << "\n";
    save(cfg, "hom.txt", v.str() + "\n");
    return kOk;
}

int cmd_verify(const RunConfig& cfg, const std::string& expr_path, const std::string& g_path, bool csv) {
    SequenceExpr seq = load_expr(expr_path);
    Multigraph g = load_multigraph(g_path);
    VerifyOptions opt;
    opt.degree = cfg.degree;
    opt.offsets = cfg.offsets;
    opt.hom = hom_options(cfg);
    opt.seed = cfg.seed;
    FitVerdict v = verify_strongly_polynomial(seq, g, opt);
    auto params = seq.free_params();
    std::ostringstream os;
    os << "status: " << to_string(v.status) << "\n";
    os << "degree: " << v.degree << (v.sparse ? " (sparse)" : "") << "\n";
    if (v.poly) {
        os << "polynomial: " << v.poly->str() << "\n";
        os << "polynomial_json: " << poly_to_json(*v.poly) << "\n";
    }
    if (v.witness) {
        os << "witness:";
        for (std::size_t i = 0; i < params.size(); ++i) os << " " << params[i] << "=" << v.witness->point[i];
        os << " predicted " << v.witness->predicted << " observed " << v.witness->observed << "\n";
    }
    std::string table = verdict_csv(v, params);
    std::cout << os.str();
    if (csv) std::cout << table;
    save(cfg, "verdict.txt", os.str());
    save(cfg, "samples.csv", table);
    if (v.poly) save(cfg, "polynomial.json", poly_to_json(*v.poly) + "\n");
    return v.consistent() ? kOk : kFail;
}

int cmd_tree(const RunConfig& cfg, const std::string& action, const std::string& path, std::optional<int> node) {
    ColouredRootedTree t = tree_from_json(read_file(path));
    std::ostringstream os;
    if (action == "decode") {
        WeightedGraph h = decode_subgraph(t);
        os << graph_to_json(h) << "\n" << graph_to_dot(h);
    } else if (action == "branch") {
        ColouredRootedTree b = node ? branch_at(t, *node) : k_branching(t).tree;
        os << tree_to_json(b) << "\n" << tree_to_dot(b);
    } else if (action == "core") {
        ColouredRootedTree c = branching_core(t).tree;
        os << tree_to_json(c) << "\n" << tree_to_dot(c);
    } else {
        os << bc(t) << "\n";
    }
    std::cout << os.str();
    save(cfg, "tree_" + action + ".txt", os.str());
    return kOk;
}

std::string parents_json(const std::vector<std::optional<int>>& parent) {
    std::string s = "[";
    for (std::size_t i = 0; i < parent.size(); ++i)
        s += (i ? "," : "") + (parent[i] ? std::to_string(*parent[i]) : std::string("null"));
    return s + "]";
}

int cmd_minbc(const RunConfig& cfg, const std::string& path) {
    WeightedGraph h = graph_from_json(read_file(path));
    MinBcResult r = min_bc(h);
    std::ostringstream os;
    os << r.value << "\n";
    os << "witness: " << canonical_string(r.core) << "\n";
    os << "core: " << tree_to_json(r.core) << "\n";
    os << "elimination_parent: " << parents_json(r.parent) << "\n";
    std::cout << os.str();
    save(cfg, "minbc.txt", os.str());
    return kOk;
}

int cmd_partition(const RunConfig& cfg, const std::vector<std::string>& paths, int bound) {
    std::vector<WeightedGraph> gs;
    for (const auto& p : paths) gs.push_back(graph_from_json(read_file(p)));
    PartitionResult r = partition_family(gs, bound);
    std::ostringstream os;
    for (std::size_t i = 0; i < r.groups.size(); ++i) {
        const auto& grp = r.groups[i];
        os << "group " << i << ": shape " << canonical_string(grp.shape) << "\n";
        for (std::size_t m = 0; m < grp.members.size(); ++m) {
            os << "  " << paths[grp.members[m]] << " k=(";
            for (std::size_t j = 0; j < grp.indices[m].size(); ++j) os << (j ? "," : "") << grp.indices[m][j];
            os << ")\n";
        }
    }
    for (std::size_t i : r.unpartitionable) os << "over bound: " << paths[i] << "\n";
    std::cout << os.str();
    save(cfg, "partition.txt", os.str());
    return kOk;
}

int cmd_suite(const RunConfig& cfg, const std::string& name, bool timing, bool verbose) {
    suite::SuiteConfig sc;
    sc.seed = cfg.seed;
    sc.hom = hom_options(cfg);
    sc.offsets = cfg.offsets;
    if (verbose) sc.log = &std::cerr;
    bool all = true;
    std::ostringstream os;
    for (const auto& r : suite::run_suite(name, sc)) {
        all &= r.pass;
        std::string line = suite::format_result(r, timing);
        std::cout << line << std::endl;
        os << line << "\n";
    }
    save(cfg, "suite_" + name + ".txt", os.str());
    return all ? kOk : kFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Strongly polynomial graph sequences: hom counts, fits, branching trees and cotrees"};
    app.require_subcommand(1);
    app.fallthrough();
    RunConfig cfg;
    int degree = -1;
    app.add_option("--degree", degree, "Per-variable degree bound for fits (default |V(G)| times the size degree)")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--budget", cfg.budget, "Partial assignments visited per component of G before giving up")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", cfg.seed, "Seed for sampled fits and suites");
    app.add_option("--out", cfg.out, "Directory for output files");
    app.add_option("--offsets", cfg.offsets, "Validation offsets beyond the training grid")
        ->delimiter(',')
        ->check(CLI::PositiveNumber);

    std::string g_path, h, expr_path, tree_path, action = "decode", suite_name;
    std::vector<std::string> params, graph_paths;
    bool csv = false, timing = false, verbose = false;
    int node = -1, bound = 0;

    auto* hom_cmd = app.add_subcommand("hom", "hom(G, H) for a graph file G and a graph file, family or expression H");
    hom_cmd->add_option("G", g_path, "Graph JSON file")->required()->check(CLI::ExistingFile);
    hom_cmd->add_option("H", h, "Graph JSON file, family spec like K(5), or s-expression")->required();
    hom_cmd->add_option("-p,--param", params, "Parameter binding NAME=VALUE");

    auto* verify_cmd = app.add_subcommand("verify", "Fit and validate hom(G, H_k) for an expression file");
    verify_cmd->add_option("EXPR", expr_path, "S-expression or JSON expression file")->required()->check(CLI::ExistingFile);
    verify_cmd->add_option("G", g_path, "Graph JSON file")->required()->check(CLI::ExistingFile);
    verify_cmd->add_flag("--csv", csv, "Also print the sample table");

    auto* tree_cmd = app.add_subcommand("tree", "Decode, branch, reduce or measure a coloured rooted tree");
    tree_cmd->add_option("ACTION", action, "decode, branch, core or bc")
        ->required()
        ->check(CLI::IsMember({"decode", "branch", "core", "bc"}));
    tree_cmd->add_option("TREE", tree_path, "Tree JSON file")->required()->check(CLI::ExistingFile);
    tree_cmd->add_option("--node", node, "branch: branch only at this node")->check(CLI::NonNegativeNumber);

    auto* minbc_cmd = app.add_subcommand("minbc", "Minimum branching core size over all encodings of a graph");
    minbc_cmd->add_option("G", g_path, "Graph JSON file")->required()->check(CLI::ExistingFile);

    auto* part_cmd = app.add_subcommand("partition", "Group graphs into branching families");
    part_cmd->add_option("--bound", bound, "Largest allowed minimum bc")->required()->check(CLI::PositiveNumber);
    part_cmd->add_option("GRAPHS", graph_paths, "Graph JSON files")->required()->check(CLI::ExistingFile);

    auto* suite_cmd = app.add_subcommand("suite", "Run an acceptance bundle and print a pass/fail table");
    suite_cmd->add_option("NAME", suite_name, "identities, branching, cotree or hypercube")
        ->required()
        ->check(CLI::IsMember(suite::suite_names()));
    suite_cmd->add_flag("--timing", timing, "Show seconds per criterion");
    suite_cmd->add_flag("-v,--verbose", verbose, "Progress and failures on standard error");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }
    if (degree >= 0) cfg.degree = degree;

    try {
        if (*hom_cmd) return cmd_hom(cfg, g_path, h, params);
        if (*verify_cmd) return cmd_verify(cfg, expr_path, g_path, csv);
        if (*tree_cmd) return cmd_tree(cfg, action, tree_path, node >= 0 ? std::optional<int>(node) : std::nullopt);
        if (*minbc_cmd) return cmd_minbc(cfg, g_path);
        if (*part_cmd) return cmd_partition(cfg, graph_paths, bound);
        if (*suite_cmd) return cmd_suite(cfg, suite_name, timing, verbose);
    } catch (const ResourceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFail;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
