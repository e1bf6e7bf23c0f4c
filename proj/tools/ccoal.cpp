// ccoal: command-line front end for the connected coalition library.

#include "coalition/coalition.hpp"
#include "coalition/domination.hpp"
#include "coalition/enumerate.hpp"
#include "coalition/errors.hpp"
#include "coalition/family_f.hpp"
#include "coalition/generators.hpp"
#include "coalition/graph_io.hpp"
#include "coalition/matrix_checks.hpp"
#include "coalition/serialize.hpp"
#include "coalition/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

using namespace coalition;
using json = nlohmann::ordered_json;

namespace {

enum ExitCode : int {
    kOk = 0,
    kAnswerNo = 1,
    kUsage = 2,
    kPrecondition = 3,
    kGuard = 4,
    kInternal = 5,
};

struct Config {
    std::string input = "-";
    std::string format;        // input format override
    std::string output = "text";
    std::optional<std::size_t> guard;
    bool status_exit = false;
};

std::size_t effective_guard(const Config& cfg)
{
    if (cfg.guard)
        return *cfg.guard;
    if (const char* env = std::getenv("CC_GUARD_N"); env != nullptr && *env != '\0') {
        try {
            return static_cast<std::size_t>(std::stoul(env));
        } catch (const std::exception&) {
            throw PreconditionError(std::string("CC_GUARD_N must be a non-negative integer, got '") + env + "'");
        }
    }
    return kPartitionSearchGuard;
}

std::string read_all(const std::string& path)
{
    if (path == "-")
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw PreconditionError("cannot open input file '" + path + "'");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

bool ends_with(const std::string& s, const std::string& suffix)
{
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

GraphFormat parse_format_name(const std::string& name)
{
    if (name == "graph6" || name == "g6")
        return GraphFormat::graph6;
    if (name == "edgelist" || name == "edge-list")
        return GraphFormat::edge_list;
    throw PreconditionError("unknown format '" + name + "' (expected graph6 or edgelist)");
}

std::vector<Graph> load_graphs(const Config& cfg)
{
    const std::string text = read_all(cfg.input);
    GraphFormat format;
    if (!cfg.format.empty())
        format = parse_format_name(cfg.format);
    else if (ends_with(cfg.input, ".g6"))
        format = GraphFormat::graph6;
    else if (ends_with(cfg.input, ".el") || ends_with(cfg.input, ".edges") || ends_with(cfg.input, ".edgelist"))
        format = GraphFormat::edge_list;
    else
        format = sniff_format(text);
    auto graphs = read_graphs(text, format);
    if (graphs.empty())
        throw ParseError("no graph found in input");
    return graphs;
}

json set_json(const VertexSet& s) { return s.to_vector(); }

json partition_json(const CcPartition& psi)
{
    json j = json::array();
    for (const auto& part : psi.parts)
        j.push_back(set_json(part));
    return j;
}

json edge_json(const Edge& e) { return json::array({e.u, e.v}); }

std::string edge_text(const Edge& e) { return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")"; }

std::string graph_id(const Graph& g) { return g.order() <= kGraph6MaxOrder ? emit_graph6(g) : std::string(); }

void emit(const Config& cfg, const json& j, const std::string& text)
{
    if (cfg.output == "json")
        std::cout << j.dump() << '\n';
    else
        std::cout << text << '\n';
}

void write_graph(const Graph& g, const std::string& format, const std::string& out_path)
{
    const std::string body = parse_format_name(format) == GraphFormat::graph6 ? emit_graph6(g) + "\n" : emit_edge_list(g);
    if (out_path.empty() || out_path == "-") {
        std::cout << body;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out)
        throw PreconditionError("cannot open output file '" + out_path + "'");
    out << body;
}

// ---------------------------------------------------------------------------

int cmd_cc(const Config& cfg)
{
    const std::size_t guard = effective_guard(cfg);
    for (const auto& g : load_graphs(cfg)) {
        const auto r = cc_number(g, guard);
        json j;
        j["graph6"] = graph_id(g);
        j["n"] = g.order();
        j["cc"] = r.cc;
        j["witness"] = r.witness ? partition_json(*r.witness) : json(nullptr);
        emit(cfg, j, "cc=" + std::to_string(r.cc) + " witness=" + (r.witness ? partition_to_json(*r.witness) : "none"));
    }
    return kOk;
}

int cmd_check_n(const Config& cfg)
{
    bool all_yes = true;
    for (const auto& g : load_graphs(cfg)) {
        const auto d = check_cc_equals_n(g);
        all_yes = all_yes && d.answer;
        json j;
        j["graph6"] = graph_id(g);
        j["answer"] = d.answer;
        std::string text = std::string("check-n=") + (d.answer ? "yes" : "no");
        if (d.answer) {
            j["witness"] = json::array();
            text += " witness=";
            for (std::size_t x = 0; x < d.witness.size(); ++x) {
                j["witness"].push_back(edge_json(d.witness[x]));
                text += (x ? " " : "") + std::to_string(x) + ":" + edge_text(d.witness[x]);
            }
        } else {
            j["failing_vertex"] = *d.failing_vertex;
            text += " failing_vertex=" + std::to_string(*d.failing_vertex);
        }
        emit(cfg, j, text);
    }
    return cfg.status_exit && !all_yes ? kAnswerNo : kOk;
}

int cmd_check_n1(const Config& cfg, const std::string& variant_name)
{
    Variant variant;
    if (variant_name == "strict")
        variant = Variant::strict;
    else if (variant_name == "paper")
        variant = Variant::paper;
    else
        throw PreconditionError("--variant must be 'paper' or 'strict'");
    bool all_yes = true;
    for (const auto& g : load_graphs(cfg)) {
        const auto d = check_cc_equals_n_minus_1(g, variant);
        all_yes = all_yes && d.answer;
        json j;
        j["graph6"] = graph_id(g);
        j["variant"] = to_string(variant);
        j["answer"] = d.answer;
        std::string text = std::string("check-n1[") + to_string(variant) + "]=" + (d.answer ? "yes" : "no");
        if (d.answer) {
            j["pair"] = json::array({d.pair->first, d.pair->second});
            j["anchor"] = *d.anchor;
            j["justifications"] = json::array();
            text += " pair=(" + std::to_string(d.pair->first) + "," + std::to_string(d.pair->second) +
                    ") anchor=" + std::to_string(*d.anchor) + " justification=";
            bool first = true;
            for (std::size_t x = 0; x < d.per_vertex.size(); ++x) {
                if (!d.per_vertex[x])
                    continue;
                const auto& just = *d.per_vertex[x];
                json jj;
                jj["vertex"] = x;
                if (just.kind == Justification::Kind::edge) {
                    jj["kind"] = "edge";
                    jj["edge"] = edge_json(just.edge);
                } else {
                    jj["kind"] = "triple";
                }
                j["justifications"].push_back(jj);
                text += (first ? "" : " ") + std::to_string(x) + ":" +
                        (just.kind == Justification::Kind::edge ? edge_text(just.edge) : std::string("triple"));
                first = false;
            }
        } else {
            j["reason"] = d.refutation;
            text += " reason=\"" + d.refutation + "\"";
        }
        emit(cfg, j, text);
    }
    return cfg.status_exit && !all_yes ? kAnswerNo : kOk;
}

int cmd_family_f(const Config& cfg)
{
    bool all_yes = true;
    for (const auto& g : load_graphs(cfg)) {
        const auto v = in_family_f(g);
        all_yes = all_yes && v.member;
        json j;
        j["graph6"] = graph_id(g);
        j["member"] = v.member;
        json steps = json::array();
        std::string peeled;
        for (const auto& s : v.trace.steps) {
            steps.push_back({{"vertex", s.vertex}, {"remaining", s.remaining_order}});
            peeled += (peeled.empty() ? "" : ",") + std::to_string(s.vertex);
        }
        j["trace"] = {{"steps", steps}, {"terminal", to_string(v.trace.terminal)}};
        emit(cfg, j,
             std::string("family-f=") + (v.member ? "yes" : "no") + " terminal=" + to_string(v.trace.terminal) +
                 " peeled=[" + peeled + "]");
    }
    return cfg.status_exit && !all_yes ? kAnswerNo : kOk;
}

int cmd_gamma_c(const Config& cfg)
{
    for (const auto& g : load_graphs(cfg)) {
        const auto r = gamma_c(g);
        json j;
        j["graph6"] = graph_id(g);
        j["gamma_c"] = r.size;
        j["witness"] = set_json(r.witness);
        emit(cfg, j, "gamma_c=" + std::to_string(r.size) + " witness=" + json(r.witness.to_vector()).dump());
    }
    return kOk;
}

int cmd_domatic(const Config& cfg)
{
    const std::size_t guard = effective_guard(cfg);
    for (const auto& g : load_graphs(cfg)) {
        const auto r = connected_domatic_number(g, guard);
        CcPartition as_partition{r.witness.parts};
        json j;
        j["graph6"] = graph_id(g);
        j["d_c"] = r.k;
        j["witness"] = partition_json(as_partition);
        emit(cfg, j, "d_c=" + std::to_string(r.k) + " witness=" + partition_to_json(as_partition));
    }
    return kOk;
}

int cmd_gen(const std::string& family, const std::vector<long long>& params, const std::string& format,
            const std::string& out)
{
    write_graph(gen::generate(family, params), format, out);
    return kOk;
}

int cmd_corona(const Config& cfg, const std::string& second, const std::string& format, const std::string& out)
{
    if (second != "k1" && second != "K1")
        throw PreconditionError("corona: only 'k1' is supported as the second operand");
    const Graph k1 = gen::complete(1);
    const auto graphs = load_graphs(cfg);
    if (graphs.size() == 1) {
        write_graph(corona(graphs.front(), k1), format, out);
        return kOk;
    }
    if (parse_format_name(format) != GraphFormat::graph6)
        throw PreconditionError("corona: multiple input graphs require graph6 output");
    std::string body;
    for (const auto& g : graphs)
        body += emit_graph6(corona(g, k1)) + "\n";
    if (out.empty() || out == "-") {
        std::cout << body;
    } else {
        std::ofstream f(out, std::ios::binary);
        if (!f)
            throw PreconditionError("cannot open output file '" + out + "'");
        f << body;
    }
    return kOk;
}

int cmd_ccg(const Config& cfg, const std::string& partition_path)
{
    const auto graphs = load_graphs(cfg);
    const std::string text = read_all(partition_path);
    for (const auto& g : graphs) {
        const auto psi = parse_partition_json(text, g.order());
        const auto w = coalition_graph(g, psi);
        json j;
        j["graph6"] = emit_graph6(w.graph);
        j["parts"] = partition_json(w.partition);
        j["edges"] = json::array();
        for (const auto& e : w.graph.edges())
            j["edges"].push_back(edge_json(e));
        emit(cfg, j, emit_graph6(w.graph));
    }
    return kOk;
}

int cmd_dump_matrix(const Config& cfg)
{
    for (const auto& g : load_graphs(cfg)) {
        const auto e = edge_domination_matrix(g);
        if (cfg.output == "json") {
            json j;
            j["graph6"] = graph_id(g);
            j["edges"] = json::array();
            for (const auto& edge : e.edges)
                j["edges"].push_back(edge_json(edge));
            j["rows"] = json::array();
            for (std::size_t r = 0; r < e.matrix.rows(); ++r) {
                json row = json::array();
                for (std::size_t c = 0; c < e.matrix.cols(); ++c)
                    row.push_back(e.matrix.at(r, c));
                j["rows"].push_back(row);
            }
            std::cout << j.dump() << '\n';
        } else {
            std::cout << e.matrix.dump();
        }
    }
    return kOk;
}

struct VerifyArgs {
    std::size_t n_min = 1;
    std::size_t n_max = 6;
    bool connected_only = false;
    std::string theorems;
    std::string corpus;
    std::string out;
    std::size_t workers = 0;
    bool deep = false;
    std::size_t tree_n_max = 7;
    std::size_t corona_h_max = 5;
};

int cmd_verify(const Config& cfg, const VerifyArgs& args)
{
    if (args.n_max > 6 && !args.deep)
        throw GuardError("verify: --n-max above 6 requires --deep");
    if (args.n_max > kEnumerationGuardOverride)
        throw GuardError("verify: --n-max above 8 is not supported");

    std::vector<TheoremId> selected;
    if (args.theorems.empty()) {
        for (const auto& info : theorem_registry())
            selected.push_back(info.id);
    } else {
        std::stringstream ss(args.theorems);
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty())
                selected.push_back(parse_theorem_id(item));
    }

    SuiteOptions options;
    options.workers = args.workers;
    options.guard = effective_guard(cfg);

    std::vector<VerifyReport> parts;
    if (!args.corpus.empty()) {
        Config file_cfg = cfg;
        file_cfg.input = args.corpus;
        parts.push_back(run_theorem_suite(Corpus::from_graphs(args.corpus, load_graphs(file_cfg)), selected, options));
    } else {
        std::vector<TheoremId> on_labeled;
        for (TheoremId id : selected) {
            if (id == TheoremId::trees_cc_two)
                parts.push_back(run_theorem_suite(Corpus::labeled_trees(1, args.tree_n_max), {id}, options));
            else if (id == TheoremId::corona_cc_two)
                parts.push_back(run_theorem_suite(Corpus::coronas(args.corona_h_max), {id}, options));
            else
                on_labeled.push_back(id);
        }
        if (!on_labeled.empty()) {
            const bool override = args.n_max > kEnumerationGuard;
            parts.insert(parts.begin(), run_theorem_suite(Corpus::labeled(args.n_min, args.n_max, args.connected_only,
                                                                          override),
                                                          on_labeled, options));
        }
    }
    VerifyReport report = merge_reports(std::move(parts));
    // Keep registry order in the output regardless of corpus grouping.
    std::stable_sort(report.theorems.begin(), report.theorems.end(),
                     [](const TheoremReport& a, const TheoremReport& b) { return a.info.id < b.info.id; });

    const std::string json_text = report_to_json(report);
    if (!args.out.empty()) {
        std::ofstream f(args.out, std::ios::binary);
        if (!f)
            throw PreconditionError("cannot open report file '" + args.out + "'");
        f << json_text;
    }
    std::cout << (cfg.output == "json" ? json_text : report_to_text(report));
    return report.ok() ? kOk : kAnswerNo;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Connected coalition number toolkit"};
    app.require_subcommand(1);
    app.fallthrough();

    Config cfg;
    app.add_option("--output", cfg.output, "Output mode")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--guard", cfg.guard, "Largest order accepted by exhaustive partition searches (env CC_GUARD_N)");
    app.add_flag("--status-exit", cfg.status_exit, "Exit 1 when a decision answers no");

    auto add_input = [&](CLI::App* sub) {
        sub->add_option("input", cfg.input, "Input file, or - for standard input")->required();
        sub->add_option("--format", cfg.format, "Input format: graph6 or edgelist (default: inferred)");
    };

    auto* cc = app.add_subcommand("cc", "Exact connected coalition number with a witness partition");
    add_input(cc);
    auto* check_n = app.add_subcommand("check-n", "Matrix test for CC(G) = n");
    add_input(check_n);
    auto* check_n1 = app.add_subcommand("check-n1", "Pair test for CC(G) = n-1");
    add_input(check_n1);
    std::string variant = "strict";
    check_n1->add_option("--variant", variant, "paper or strict")->check(CLI::IsMember({"paper", "strict"}));
    auto* family = app.add_subcommand("family-f", "Membership in the CC = 0 family with a peel trace");
    add_input(family);
    auto* gamma = app.add_subcommand("gamma-c", "Connected domination number");
    add_input(gamma);
    auto* domatic = app.add_subcommand("domatic", "Connected domatic number");
    add_input(domatic);

    auto* gen_cmd = app.add_subcommand("gen", "Generate a standard graph");
    std::string family_name;
    std::vector<long long> params;
    std::string out_format = "g6";
    std::string out_path;
    gen_cmd->add_option("family", family_name, "path, cycle, complete, complete_bipartite, star, friendship")
        ->required();
    gen_cmd->add_option("params", params, "Family parameters");
    gen_cmd->add_option("--format", out_format, "Output format: g6 or edgelist")
        ->check(CLI::IsMember({"g6", "graph6", "edgelist"}));
    gen_cmd->add_option("--out", out_path, "Output file (default stdout)");

    auto* corona_cmd = app.add_subcommand("corona", "Corona product with K_1");
    std::string second = "k1";
    corona_cmd->add_option("input", cfg.input, "Input file, or - for standard input")->required();
    corona_cmd->add_option("second", second, "Second operand (only k1)")->required();
    corona_cmd->add_option("--format", out_format, "Output format: g6 or edgelist")
        ->check(CLI::IsMember({"g6", "graph6", "edgelist"}));
    corona_cmd->add_option("--out", out_path, "Output file (default stdout)");

    auto* ccg = app.add_subcommand("ccg", "Connected coalition graph of a partition, as graph6");
    add_input(ccg);
    std::string partition_path;
    ccg->add_option("--partition", partition_path, "JSON file with the partition")->required();

    auto* dump = app.add_subcommand("dump-matrix", "Print the edge-domination matrix");
    add_input(dump);

    auto* verify = app.add_subcommand("verify", "Check the theorem registry against exhaustive corpora");
    VerifyArgs vargs;
    verify->add_option("--n-min", vargs.n_min, "Smallest order of the labeled corpus");
    verify->add_option("--n-max", vargs.n_max, "Largest order of the labeled corpus (default 6)");
    verify->add_flag("--connected-only", vargs.connected_only, "Only connected labeled graphs");
    verify->add_option("--theorems", vargs.theorems, "Comma-separated ids, e.g. T1,T5");
    verify->add_option("--corpus", vargs.corpus, "graph6 file to use instead of the built-in corpora");
    verify->add_option("--format", cfg.format, "Corpus file format");
    verify->add_option("--out", vargs.out, "Write the JSON report here");
    verify->add_option("--workers", vargs.workers, "Worker threads (default: hardware)");
    verify->add_flag("--deep", vargs.deep, "Allow --n-max 7 and 8");
    verify->add_option("--tree-n-max", vargs.tree_n_max, "Largest tree order for T3 (default 7)");
    verify->add_option("--corona-h-max", vargs.corona_h_max, "Largest H order for T7 (default 5)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*cc)
            return cmd_cc(cfg);
        if (*check_n)
            return cmd_check_n(cfg);
        if (*check_n1)
            return cmd_check_n1(cfg, variant);
        if (*family)
            return cmd_family_f(cfg);
        if (*gamma)
            return cmd_gamma_c(cfg);
        if (*domatic)
            return cmd_domatic(cfg);
        if (*gen_cmd)
            return cmd_gen(family_name, params, out_format, out_path);
        if (*corona_cmd)
            return cmd_corona(cfg, second, out_format, out_path);
        if (*ccg)
            return cmd_ccg(cfg, partition_path);
        if (*dump)
            return cmd_dump_matrix(cfg);
        if (*verify)
            return cmd_verify(cfg, vargs);
    } catch (const coalition::ParseError& e) {
        std::cerr << "ccoal: input error: " << e.what() << '\n';
        return kUsage;
    } catch (const GuardError& e) {
        std::cerr << "ccoal: guard exceeded: " << e.what() << '\n';
        return kGuard;
    } catch (const InvariantViolation& e) {
        std::cerr << "ccoal: internal check failed: " << e.what() << '\n';
        return kInternal;
    } catch (const std::invalid_argument& e) {
        std::cerr << "ccoal: precondition violated: " << e.what() << '\n';
        return kPrecondition;
    } catch (const std::exception& e) {
        std::cerr << "ccoal: error: " << e.what() << '\n';
        return kPrecondition;
    }
    return kUsage;
}
