// pick: kernelization and exact solving for proper interval completion,
// bi-clique chain completion, and bipartite chain deletion.
//
// Subcommands: reduce | solve | verify | gen | selftest.  Graphs use the
// edge-list format ("n m" header, one "u v" line per edge, '#' comments).
// Exit codes: 0 success/feasible, 1 usage or i/o error, 2 reduced to a
// no-instance / infeasible, 3 verification failure.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "pick/exact_solver.hpp"
#include "pick/generators.hpp"
#include "pick/kernel_bcc.hpp"
#include "pick/kernel_pic.hpp"

using namespace pick;

namespace {

Graph read_graph_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    return load_graph(in);
}

EdgeSet read_pair_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    EdgeSet out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        std::istringstream ss(line);
        long u, v;
        if (!(ss >> u))
            continue; // blank
        std::string extra;
        if (!(ss >> v) || (ss >> extra))
            throw parse_error(lineno, "expected \"u v\"");
        if (u == v)
            throw parse_error(lineno, "pair with equal endpoints");
        out.push_back(make_edge(static_cast<int>(u), static_cast<int>(v)));
    }
    return out;
}

void write_text(const std::string& path, const std::string& text)
{
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write " + path);
    out << text;
}

void print_certificate(std::ostream& os, const Obstruction& o)
{
    os << "certificate: " << to_string(o.kind) << " [";
    for (size_t i = 0; i < o.vertices.size(); ++i)
        os << (i ? " " : "") << o.vertices[i];
    os << "]\n";
}

struct CommonOpts {
    std::string input, output, trace;
    std::string problem = "pic";
    int k = 0;
    unsigned seed = 0;
    int jobs = 1;
};

ReduceResult run_reduce(const Graph& g, const std::string& problem, int k)
{
    if (problem == "pic")
        return reduce(g, k);
    if (problem == "bcc")
        return reduce_bcc(g, k);
    return bcd_reduce(g, k);
}

int cmd_reduce(const CommonOpts& opt)
{
    Graph g = read_graph_file(opt.input);
    ReduceResult r = run_reduce(g, opt.problem, opt.k);
    auto [compacted, ids] = r.graph.compact();
    (void)ids;
    if (!opt.output.empty())
        write_text(opt.output, graph_to_string(r.graph));
    if (!opt.trace.empty())
        write_text(opt.trace, r.trace.to_json_string());
    std::cout << compacted.vertex_count() << ' ' << compacted.edge_count() << ' ' << r.k << ' '
              << r.trace.status << '\n';
    return r.rejected() ? 2 : 0;
}

// decision/optimization driver shared by solve with and without a kernel
// pass; for bcd the work happens on the complement
int cmd_solve(const CommonOpts& opt, bool kernelize, bool has_k)
{
    Graph original = read_graph_file(opt.input);
    bool deletion = opt.problem == "bcd";
    Graph g = deletion ? complement(original) : original;
    Problem p = opt.problem == "pic" ? Problem::pic : Problem::bcc;

    int limit = has_k ? opt.k
                      : g.vertex_count() * (g.vertex_count() - 1) / 2 -
                            static_cast<int>(g.edge_count());
    for (int budget = 0; budget <= limit; ++budget) {
        EdgeSet completion;
        bool feasible = false;
        if (kernelize) {
            ReduceResult r = run_reduce(g, opt.problem == "bcd" ? "bcc" : opt.problem, budget);
            if (r.rejected())
                continue;
            Solution s = branch_solve(r.graph, p, r.k);
            if (!s.feasible)
                continue;
            feasible = true;
            completion = r.forced;
            completion.insert(completion.end(), s.completion.begin(), s.completion.end());
        } else {
            Solution s = branch_solve(g, p, budget);
            if (!s.feasible)
                continue;
            feasible = true;
            completion = s.completion;
        }
        if (feasible) {
            std::sort(completion.begin(), completion.end());
            if (!verify_solution(g, p, completion))
                throw std::logic_error("solver returned an invalid completion");
            std::cout << "feasible " << completion.size() << '\n';
            if (!opt.output.empty()) {
                std::ostringstream ss;
                for (auto [u, v] : completion)
                    ss << u << ' ' << v << '\n';
                write_text(opt.output, ss.str());
            }
            return 0;
        }
    }
    std::cout << "infeasible at " << limit << '\n';
    return 2;
}

int cmd_verify(const CommonOpts& opt, const std::string& completion_path)
{
    Graph g = read_graph_file(opt.input);
    bool deletion = opt.problem == "bcd";
    Problem p = opt.problem == "pic" ? Problem::pic : Problem::bcc;

    if (!completion_path.empty()) {
        EdgeSet pairs = read_pair_file(completion_path);
        Graph h = g;
        if (deletion) {
            for (auto [u, v] : pairs) {
                if (!h.has_edge(u, v)) {
                    std::cout << "deletion pair " << u << ' ' << v << " is not an edge\n";
                    return 3;
                }
                h.remove_edge(u, v);
            }
            h = complement(h);
        } else {
            for (auto [u, v] : pairs) {
                if (h.has_edge(u, v)) {
                    std::cout << "completion pair " << u << ' ' << v << " is already an edge\n";
                    return 3;
                }
                h.add_edge(u, v);
            }
        }
        bool ok = in_target_class(h, p);
        if (ok) {
            std::cout << "valid " << (deletion ? "deletion" : "completion") << " of size "
                      << pairs.size() << '\n';
            return 0;
        }
        auto cert = p == Problem::pic ? pic_certificate(h) : bcc_certificate(h);
        if (cert)
            print_certificate(std::cout, *cert);
        return 3;
    }

    Graph h = deletion ? complement(g) : g;
    if (p == Problem::pic) {
        if (auto ord = umbrella_ordering(h)) {
            std::cout << "ordering:";
            for (int v : *ord)
                std::cout << ' ' << v;
            std::cout << '\n';
            return 0;
        }
        print_certificate(std::cout, *pic_certificate(h));
        return 3;
    }
    if (auto w = is_biclique_chain(h)) {
        std::cout << "ordering:";
        for (int v : w->order)
            std::cout << ' ' << v;
        std::cout << "\nsplit: " << w->split << '\n';
        return 0;
    }
    print_certificate(std::cout, *bcc_certificate(h));
    return 3;
}

int cmd_gen(const CommonOpts& opt, const std::string& model, int n, double p, int edits)
{
    Graph g;
    if (model == "gnp")
        g = gen_gnp(n, p, opt.seed);
    else if (model == "planted-pic")
        g = gen_planted_pic(n, edits, opt.seed);
    else if (model == "planted-bcc")
        g = gen_planted_bcc(n, edits, opt.seed);
    else if (model == "path")
        g = gen_path(n);
    else if (model == "cycle")
        g = gen_cycle(n);
    else // star, guarded by the option validator
        g = gen_star(n);
    std::string text = graph_to_string(g);
    if (opt.output.empty())
        std::cout << text;
    else
        write_text(opt.output, text);
    return 0;
}

int cmd_selftest()
{
    int failures = 0;
    auto check = [&](const char* name, bool ok) {
        std::cout << (ok ? "ok " : "FAIL ") << name << '\n';
        if (!ok)
            ++failures;
    };

    auto claw = load_graph_string("4 3\n0 1\n0 2\n0 3\n");
    auto c5 = gen_cycle(5);
    check("claw needs one edge", oracle_opt(claw, Problem::pic, 2) == 1);
    check("c5 needs two edges", oracle_opt(c5, Problem::pic, 3) == 2);
    check("3k1 completion", oracle_opt(Graph(3), Problem::bcc, 2) == 1);

    // recognition vs obstruction scan, exhaustive over 5-vertex graphs
    bool equiv = true;
    for (uint32_t mask = 0; mask < (1u << 10); ++mask) {
        Graph g(5);
        int bit = 0;
        for (int i = 0; i < 5; ++i)
            for (int j = i + 1; j < 5; ++j, ++bit)
                if ((mask >> bit) & 1u)
                    g.add_edge(i, j);
        if (is_proper_interval(g) != !pic_certificate(g).has_value())
            equiv = false;
    }
    check("recognition matches obstruction scan (n=5, exhaustive)", equiv);

    bool safety = true;
    for (uint32_t seed = 0; seed < 20 && safety; ++seed) {
        Graph g = gen_gnp(8, 0.4, 90000 + seed);
        for (int k = 0; k <= 2; ++k) {
            ReduceResult r = reduce(g, k);
            bool direct = oracle_opt(g, Problem::pic, k).has_value();
            bool via = !r.rejected() && oracle_opt(r.graph, Problem::pic, r.k).has_value();
            if (direct != via)
                safety = false;
        }
    }
    check("reduction preserves answers (spot check)", safety);

    check("generation is deterministic",
          graph_to_string(gen_planted_pic(20, 2, 7)) == graph_to_string(gen_planted_pic(20, 2, 7)));

    return failures == 0 ? 0 : 3;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"kernelization and exact solvers for proper interval completion "
                 "and bi-clique chain completion/deletion\n"
                 "exit codes: 0 success/feasible, 1 usage or i/o error, "
                 "2 no-instance/infeasible, 3 verification failure"};
    app.require_subcommand(1);

    CommonOpts opt;
    std::string model = "gnp", completion_path;
    int n = 10, edits = 0;
    double p = 0.5;
    bool kernelize = false;

    auto add_common = [&](CLI::App* sub, bool need_input) {
        auto* in = sub->add_option("--input", opt.input, "graph file (edge list)");
        if (need_input)
            in->required();
        sub->add_option("--problem", opt.problem, "pic | bcc | bcd")
            ->check(CLI::IsMember({"pic", "bcc", "bcd"}));
        sub->add_option("--output", opt.output, "output path");
        sub->add_option("--trace", opt.trace, "JSON trace path");
        sub->add_option("--seed", opt.seed, "random seed");
        sub->add_option("--jobs", opt.jobs, "worker count for scans (scans are sequential for now)")
            ->check(CLI::PositiveNumber);
    };

    auto* reduce_cmd = app.add_subcommand("reduce", "kernelize an instance");
    add_common(reduce_cmd, true);
    reduce_cmd->add_option("--k", opt.k, "edit budget")->required()->check(CLI::NonNegativeNumber);

    auto* solve_cmd = app.add_subcommand("solve", "exact decision / optimization");
    add_common(solve_cmd, true);
    auto* kopt = solve_cmd->add_option("--k", opt.k, "edit budget (omit to optimize)")
                     ->check(CLI::NonNegativeNumber);
    solve_cmd->add_flag("--kernelize", kernelize, "reduce before solving");

    auto* verify_cmd = app.add_subcommand("verify", "check class membership or a completion file");
    add_common(verify_cmd, true);
    verify_cmd->add_option("--completion", completion_path, "pair list to verify");

    auto* gen_cmd = app.add_subcommand("gen", "generate instances");
    add_common(gen_cmd, false);
    gen_cmd->add_option("--model", model, "gnp | planted-pic | planted-bcc | path | cycle | star")
        ->check(CLI::IsMember({"gnp", "planted-pic", "planted-bcc", "path", "cycle", "star"}));
    gen_cmd->add_option("--n", n, "vertex count")->check(CLI::NonNegativeNumber);
    gen_cmd->add_option("--p", p, "edge probability for gnp");
    gen_cmd->add_option("--edits", edits, "planted edit count")->check(CLI::NonNegativeNumber);

    auto* selftest_cmd = app.add_subcommand("selftest", "run built-in sanity checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (reduce_cmd->parsed())
            return cmd_reduce(opt);
        if (solve_cmd->parsed())
            return cmd_solve(opt, kernelize, kopt->count() > 0);
        if (verify_cmd->parsed())
            return cmd_verify(opt, completion_path);
        if (gen_cmd->parsed())
            return cmd_gen(opt, model, n, p, edits);
        if (selftest_cmd->parsed())
            return cmd_selftest();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
