#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "rcgraph/generators.hpp"
#include "rcgraph/json_io.hpp"
#include "rcgraph/rainbow.hpp"
#include "rcgraph/structure.hpp"

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw rcg::InvalidInput("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

rcg::Graph load_graph(const std::string& path) { return rcg::parse_graph(read_file(path)); }

json input_summary(const rcg::Graph& g) {
    json summary;
    summary["class"] = std::string(rcg::to_string(rcg::structure_class(g)));
    summary["m"] = g.size();
    summary["n"] = g.order();
    return summary;
}

// Machine output goes to stdout: the command payload by default, the full
// run report with --json. Timing is stderr-only so stdout stays byte-stable.
void emit(const std::string& command, const rcg::Graph& g, const json& payload,
          std::optional<int> bound, bool verified, bool as_report) {
    if (!as_report) {
        std::cout << payload.dump(2) << "\n";
        return;
    }
    json report;
    if (bound) report["bound"] = *bound;
    report["command"] = command;
    report["input"] = input_summary(g);
    report["result"] = payload;
    report["verified"] = verified;
    std::cout << report.dump(2) << "\n";
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    long long ms() const {
        auto delta = std::chrono::steady_clock::now() - start;
        return std::chrono::duration_cast<std::chrono::milliseconds>(delta).count();
    }
};

int run_color(const std::string& input, const std::string& strategy, bool as_report) {
    Timer timer;
    rcg::Graph g = load_graph(input);
    if (!rcg::is_connected(g)) throw rcg::InvalidInput("input graph is disconnected");

    rcg::EdgeColoring coloring;
    rcg::BoundInfo info;
    bool fallback = false;
    std::string used;
    if (g.order() <= 2) {
        // below the smallest theorem shapes: K1 gets the empty coloring,
        // K2 a single color; the cut-vertex formula still gives the bound
        std::vector<rcg::ColorId> trivial(static_cast<size_t>(g.size()), 0);
        coloring = rcg::EdgeColoring(g, std::move(trivial));
        int r = g.order() == 2 ? 1 : 0;
        info = {(g.order() + r - 1) / 2, "theorem1", r};
        used = "degenerate";
    } else {
        rcg::BlockDecomposition dec = rcg::block_decomposition(g);
        int q = dec.block_count();
        int r = dec.even_block_count();
        used = strategy;
        if (used == "auto") used = q >= 2 ? "theorem1" : "two-connected";
        if (used == "theorem1") {
            if (q < 2)
                throw rcg::InvalidInput("strategy theorem1 needs at least two blocks; "
                                        "this graph is a single block");
            rcg::BoundedColoring bc = rcg::blockwise_coloring(g);
            coloring = bc.coloring;
            fallback = bc.fallback_used;
            info = {bc.bound, "theorem1", r};
        } else if (used == "two-connected") {
            if (!rcg::is_two_connected(g))
                throw rcg::InvalidInput("strategy two-connected needs a 2-connected graph; "
                                        "class is " +
                                        std::string(rcg::to_string(rcg::structure_class(g))));
            rcg::BoundedColoring bc = rcg::two_connected_coloring(g);
            coloring = bc.coloring;
            fallback = bc.fallback_used;
            info = {bc.bound, "two_connected", r};
        } else {
            throw rcg::InvalidInput("unknown strategy: " + used);
        }
    }

    bool verified = rcg::verify_rainbow(g, coloring).rainbow;
    json payload = json::parse(rcg::coloring_to_json(coloring, info, verified));
    if (as_report) payload["fallback"] = fallback;
    emit("color", g, payload, info.bound, verified, as_report);
    std::cerr << "color: strategy=" << used << " k=" << coloring.palette()
              << " bound=" << info.bound << (verified ? " verified" : " NOT RAINBOW")
              << (fallback ? " (search fallback)" : "") << " — " << timer.ms() << " ms\n";
    return verified ? 0 : 2;
}

int run_verify(const std::string& input, const std::string& coloring_path, bool as_report) {
    Timer timer;
    rcg::Graph g = load_graph(input);
    rcg::EdgeColoring coloring = rcg::coloring_from_json(g, read_file(coloring_path));
    rcg::RainbowReport report = rcg::verify_rainbow(g, coloring);

    json payload;
    payload["colors_used"] = report.colors_used;
    if (report.failing_pair)
        payload["failing_pair"] = json::array({report.failing_pair->first,
                                               report.failing_pair->second});
    else
        payload["failing_pair"] = nullptr;
    payload["verified"] = report.rainbow;
    emit("verify", g, payload, std::nullopt, report.rainbow, as_report);
    std::cerr << "verify: " << (report.rainbow ? "rainbow" : "not rainbow");
    if (report.failing_pair)
        std::cerr << ", failing pair (" << report.failing_pair->first << ", "
                  << report.failing_pair->second << ")";
    std::cerr << " — " << timer.ms() << " ms\n";
    return report.rainbow ? 0 : 1;
}

int run_exact(const std::string& input, int cap, bool as_report) {
    Timer timer;
    rcg::Graph g = load_graph(input);
    auto [rc, certificate] = rcg::exact_rc_certificate(g, cap);
    bool verified = rcg::verify_rainbow(g, certificate).rainbow;

    json payload = json::parse(rcg::coloring_to_json(certificate, std::nullopt, verified));
    emit("exact", g, payload, std::nullopt, verified, as_report);
    std::cerr << "exact: rc=" << rc << " — " << timer.ms() << " ms\n";
    return verified ? 0 : 2;
}

int run_decompose(const std::string& input, bool as_report) {
    Timer timer;
    rcg::Graph g = load_graph(input);
    if (!rcg::is_connected(g)) throw rcg::InvalidInput("input graph is disconnected");

    json payload;
    if (g.order() == 1) {
        payload = json::parse(
            R"({"blocks":[],"cut_vertices":[],"ears":null,"ordering":[],"q":0,"r":0})");
    } else {
        rcg::BlockDecomposition dec = rcg::block_decomposition(g);
        rcg::BlockOrdering ord = rcg::block_ordering(dec);
        std::optional<rcg::EarDecomposition> ears;
        if (rcg::is_two_connected(g) && g.order() <= rcg::kEarSearchOrderCap)
            ears = rcg::ear_decomposition(g, 0);
        else if (rcg::is_two_connected(g))
            std::cerr << "decompose: order above " << rcg::kEarSearchOrderCap
                      << ", skipping ear decomposition\n";
        payload = json::parse(rcg::decomposition_to_json(dec, ord, ears));
    }
    emit("decompose", g, payload, std::nullopt, true, as_report);
    std::cerr << "decompose: q=" << payload["q"] << " r=" << payload["r"] << " — " << timer.ms()
              << " ms\n";
    return 0;
}

struct GenerateArgs {
    std::string family;
    std::string out;
    int q = 2, r = 0, n = 0;
    int k = 1, variant = 1;
    int extra_ears = 0;
    std::uint64_t seed = 0;
    std::string blocks;
};

int run_generate(const GenerateArgs& args, bool as_report) {
    Timer timer;
    rcg::Graph g(1);
    json payload;
    if (args.family == "figure1") {
        g = rcg::tight_block_chain({args.q, args.r, args.n});
        payload["bound"] = (args.n + args.r - 1) / 2;
        payload["bound_kind"] = "theorem1";
    } else if (args.family == "figure2") {
        g = rcg::tight_bridgeless_chain(args.k, args.variant);
        payload["bound"] = rcg::bridgeless_bound(g.order());
        payload["bound_kind"] = "theorem2";
    } else if (args.family == "random2c") {
        if (args.n < 3) throw rcg::InvalidInput("random2c needs --n at least 3");
        g = rcg::random_two_connected(args.n, args.extra_ears, args.seed);
    } else if (args.family == "chain") {
        if (args.blocks.empty()) throw rcg::InvalidInput("chain needs --blocks");
        std::vector<rcg::BlockSpec> specs;
        std::stringstream tokens(args.blocks);
        std::string token;
        while (std::getline(tokens, token, ',')) specs.push_back(rcg::BlockSpec::parse(token));
        g = rcg::block_chain(specs);
    } else {
        throw rcg::InvalidInput("unknown family: " + args.family +
                                " (expected figure1, figure2, random2c, or chain)");
    }

    std::ofstream out(args.out, std::ios::binary);
    if (!out) throw rcg::InvalidInput("cannot write " + args.out);
    out << rcg::serialize_graph(g);
    out.close();

    payload["diameter"] = rcg::diameter(g);
    payload["family"] = args.family;
    payload["m"] = g.size();
    payload["n"] = g.order();
    payload["out"] = args.out;
    emit("generate", g, payload, std::nullopt, true, as_report);
    std::cerr << "generate: " << args.family << " n=" << g.order() << " m=" << g.size() << " -> "
              << args.out << " — " << timer.ms() << " ms\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rainbow edge-coloring constructions, verifiers, and generators"};
    app.require_subcommand(1);

    std::string input, coloring_path, strategy = "auto";
    int cap = 0;
    bool json_color = false, json_verify = false, json_exact = false, json_decompose = false,
         json_generate = false;
    GenerateArgs gen;

    CLI::App* color = app.add_subcommand("color", "construct a bounded rainbow coloring");
    color->add_option("input", input, "edge-list file")->required();
    color->add_option("--strategy", strategy, "auto|two-connected|theorem1")
        ->check(CLI::IsMember({"auto", "two-connected", "theorem1"}));
    color->add_flag("--json", json_color, "emit the full run report");

    CLI::App* verify = app.add_subcommand("verify", "check a coloring for rainbow connectivity");
    verify->add_option("input", input, "edge-list file")->required();
    verify->add_option("coloring", coloring_path, "coloring JSON file")->required();
    verify->add_flag("--json", json_verify, "emit the full run report");

    CLI::App* exact = app.add_subcommand("exact", "exhaustive rainbow connection number");
    exact->add_option("input", input, "edge-list file")->required();
    exact->add_option("--cap", cap, "largest palette to try (0 = edge count)");
    exact->add_flag("--json", json_exact, "emit the full run report");

    CLI::App* decompose = app.add_subcommand("decompose", "blocks, ordering, ears");
    decompose->add_option("input", input, "edge-list file")->required();
    decompose->add_flag("--json", json_decompose, "emit the full run report");

    CLI::App* generate = app.add_subcommand("generate", "write a family instance");
    generate->add_option("family", gen.family, "figure1|figure2|random2c|chain")->required();
    generate->add_option("--out", gen.out, "output edge-list path")->required();
    generate->add_option("--q", gen.q, "figure1: block count");
    generate->add_option("--r", gen.r, "figure1: even block count");
    generate->add_option("--n", gen.n, "figure1/random2c: order");
    generate->add_option("--k", gen.k, "figure2: chain length parameter");
    generate->add_option("--variant", gen.variant, "figure2: 1|2|3");
    generate->add_option("--extra-ears", gen.extra_ears, "random2c: ears beyond the cycle");
    generate->add_option("--seed", gen.seed, "random2c: RNG seed");
    generate->add_option("--blocks", gen.blocks, "chain: comma list of k2|cycleM|cliqueM");
    generate->add_flag("--json", json_generate, "emit the full run report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        if (color->parsed()) return run_color(input, strategy, json_color);
        if (verify->parsed()) return run_verify(input, coloring_path, json_verify);
        if (exact->parsed()) return run_exact(input, cap, json_exact);
        if (decompose->parsed()) return run_decompose(input, json_decompose);
        if (generate->parsed()) return run_generate(gen, json_generate);
    } catch (const rcg::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
