// Batch front door: solve / check-class / gen / fuzz / bench over DIMACS-like
// instance files, JSON on stdout.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "mwis/dimacs.hpp"
#include "mwis/generator.hpp"
#include "mwis/graph.hpp"
#include "mwis/oracle.hpp"
#include "mwis/recognition.hpp"
#include "mwis/report.hpp"
#include "mwis/solver.hpp"

using json = nlohmann::json;

namespace {

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int cmd_solve(const std::string& path, bool check_class_first) {
    mwis::WeightedGraph g = mwis::parse_dimacs(read_input(path));
    json out = mwis::solve_report(g, check_class_first);
    std::cout << out.dump(2) << "\n";
    return out["status"] == "ok" ? 0 : 2;
}

int cmd_check_class(const std::string& path) {
    mwis::WeightedGraph g = mwis::parse_dimacs(read_input(path));
    json out;
    if (auto w = mwis::check_class(g)) {
        out["status"] = "class-violation";
        out["witness"] = mwis::witness_to_json(*w);
        std::cout << out.dump(2) << "\n";
        return 2;
    }
    out["status"] = "ok";
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_gen(const mwis::GenSpec& spec, const std::string& out_path) {
    mwis::GenResult res = mwis::generate(spec);
    std::string text = mwis::emit_dimacs(res.graph);
    std::ostringstream head;
    head << "c family=" << mwis::family_name(spec.family) << " seed=" << spec.seed
         << " in_class=" << (res.in_class ? 1 : 0) << "\n";
    text = head.str() + text;
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot write " + out_path);
        out << text;
    }
    return 0;
}

uint64_t mix_seed(uint64_t seed, uint64_t i) {
    return seed * 0x100000001b3ULL + i * 0x9e3779b97f4a7c15ULL + 1;
}

int cmd_fuzz(long long count, int max_n, uint64_t seed, bool cover,
             double density, mwis::Weight wlo, mwis::Weight whi) {
    const double ladder[] = {density, 0.3, 0.2, 0.45, 0.12};
    long long checked = 0;
    for (long long i = 0; i < count; ++i) {
        mwis::GenSpec spec;
        spec.family = mwis::GenSpec::Family::RandomTriangleFree;
        uint64_t s = mix_seed(seed, static_cast<uint64_t>(i));
        spec.seed = s;
        spec.n = 4 + static_cast<int>(s % static_cast<uint64_t>(std::max(1, max_n - 3)));
        spec.weight_lo = wlo;
        spec.weight_hi = whi;
        mwis::GenResult gen;
        bool made = false;
        for (double dens : ladder) {
            spec.edge_density = dens;
            try {
                gen = mwis::generate(spec);
                made = true;
                break;
            } catch (const mwis::GenRetryExhausted&) {
            }
        }
        if (!made || !gen.in_class) continue;
        const mwis::WeightedGraph& g = gen.graph;
        mwis::SolveResult res;
        std::string fail;
        try {
            res = mwis::solve_mwis(g);
            auto oracle = mwis::oracle_mwis(g, mwis::VertexSet::full(g.size()));
            if (res.weight != oracle.weight)
                fail = "weight mismatch: solver " + std::to_string(res.weight) +
                       " oracle " + std::to_string(oracle.weight);
            else if (cover && g.size() <= 18) {
                auto cc = mwis::verify_cover(g, mwis::VertexSet::full(g.size()),
                                             res.leaves);
                if (!cc.ok) fail = "cover check failed";
            }
        } catch (const std::exception& e) {
            fail = e.what();
        }
        if (!fail.empty()) {
            std::string dump = "fuzz-fail-" + std::to_string(i) + ".col";
            std::ofstream out(dump);
            out << mwis::emit_dimacs(g);
            std::cerr << "instance " << i << ": " << fail << " (dumped to "
                      << dump << ")\n";
            return 1;
        }
        ++checked;
    }
    json out;
    out["status"] = "ok";
    out["instances_checked"] = checked;
    out["requested"] = count;
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_bench() {
    std::cout << "n      weight  expected  subproblems  ms\n";
    for (int n : {20, 40, 60}) {
        mwis::GenSpec spec;
        spec.family = mwis::GenSpec::Family::C5Blowup;
        spec.n = n;
        spec.seed = 7;
        mwis::GenResult gen = mwis::generate(spec);
        // Unit weights: the optimum joins the two largest non-adjacent classes.
        std::vector<int> sizes(5, n / 5);
        for (int i = 0; i < n % 5; ++i) ++sizes[static_cast<size_t>(i)];
        long long expected = 0;
        for (int i = 0; i < 5; ++i)
            expected = std::max<long long>(
                expected, sizes[static_cast<size_t>(i)] +
                              sizes[static_cast<size_t>((i + 2) % 5)]);
        auto t0 = std::chrono::steady_clock::now();
        mwis::SolveResult res = mwis::solve_mwis(gen.graph);
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        std::printf("%-6d %-7lld %-9lld %-12lld %lld\n", n, res.weight, expected,
                    res.stats.subproblems, static_cast<long long>(ms));
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact MWIS solver for (S_{1,2,4}, triangle)-free graphs"};
    app.require_subcommand(1);

    std::string path = "-";
    bool check_class_first = false;
    auto* solve = app.add_subcommand("solve", "solve an instance file");
    solve->add_option("file", path, "instance file ('-' for stdin)");
    solve->add_flag("--check-class", check_class_first,
                    "run the full recognizer before solving");

    std::string cc_path = "-";
    auto* check = app.add_subcommand("check-class", "class membership + witness");
    check->add_option("file", cc_path, "instance file ('-' for stdin)");

    std::string family = "random-triangle-free", gen_out;
    mwis::GenSpec spec;
    std::string weights_arg = "1:1";
    auto* gen = app.add_subcommand("gen", "generate an instance");
    gen->add_option("--family", family, "instance family");
    gen->add_option("--n", spec.n, "target size");
    gen->add_option("--density", spec.edge_density, "edge probability");
    gen->add_option("--weights", weights_arg, "weight range LO:HI");
    gen->add_option("--seed", spec.seed, "rng seed");
    gen->add_option("--out", gen_out, "output file (default stdout)");

    long long fuzz_count = 100;
    int fuzz_max_n = 14;
    uint64_t fuzz_seed = 1;
    bool fuzz_cover = false;
    double fuzz_density = 0.3;
    std::string fuzz_weights = "0:100";
    auto* fuzz = app.add_subcommand("fuzz", "differential test against the oracle");
    fuzz->add_option("--count", fuzz_count, "number of instances");
    fuzz->add_option("--max-n", fuzz_max_n, "maximum instance size");
    fuzz->add_option("--seed", fuzz_seed, "rng seed");
    fuzz->add_flag("--cover", fuzz_cover, "also verify the bipartite cover family");
    fuzz->add_option("--density", fuzz_density, "preferred edge density");
    fuzz->add_option("--weights", fuzz_weights, "weight range LO:HI");

    auto* bench = app.add_subcommand("bench", "C5 blow-up scaling table");

    CLI11_PARSE(app, argc, argv);

    auto parse_range = [](const std::string& s, mwis::Weight& lo, mwis::Weight& hi) {
        auto pos = s.find(':');
        if (pos == std::string::npos) throw std::runtime_error("bad weight range");
        lo = std::stoll(s.substr(0, pos));
        hi = std::stoll(s.substr(pos + 1));
    };

    try {
        if (solve->parsed()) return cmd_solve(path, check_class_first);
        if (check->parsed()) return cmd_check_class(cc_path);
        if (gen->parsed()) {
            auto fam = mwis::family_from_name(family);
            if (!fam) throw std::runtime_error("unknown family " + family);
            spec.family = *fam;
            parse_range(weights_arg, spec.weight_lo, spec.weight_hi);
            return cmd_gen(spec, gen_out);
        }
        if (fuzz->parsed()) {
            mwis::Weight lo, hi;
            parse_range(fuzz_weights, lo, hi);
            return cmd_fuzz(fuzz_count, fuzz_max_n, fuzz_seed, fuzz_cover,
                            fuzz_density, lo, hi);
        }
        if (bench->parsed()) return cmd_bench();
    } catch (const mwis::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
