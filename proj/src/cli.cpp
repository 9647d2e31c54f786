#include "fatcolor/cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"

#include "fatcolor/io.hpp"
#include "fatcolor/solver.hpp"
#include "fatcolor/spectral.hpp"

namespace fatcolor::cli {

namespace {

struct CommonOptions {
    std::string graph;
    std::optional<std::uint64_t> max_nodes;
    std::optional<double> time_cap;
    int threads = 0;

    SearchBudget budget() const
    {
        SearchBudget b = SearchBudget::from_environment();
        if (max_nodes)
            b.max_nodes = *max_nodes;
        if (time_cap)
            b.time_cap_seconds = *time_cap;
        b.validate();
        return b;
    }
};

void add_common(CLI::App* cmd, CommonOptions& opts)
{
    cmd->add_option("graph", opts.graph, "Edge-list file or family spec (e.g. turan:12,4)")->required();
    cmd->add_option("--max-nodes", opts.max_nodes, "Search node budget (overrides FATCOLOR_BUDGET_NODES)");
    cmd->add_option("--time-cap", opts.time_cap, "Wall-clock cap in seconds");
    cmd->add_option("--threads", opts.threads, "Worker threads (0 = OpenMP default, 1 = serial)")
        ->check(CLI::NonNegativeNumber);
}

Rational parse_rational_arg(const std::string& text)
{
    try {
        return parse_rational(text);
    } catch (const std::invalid_argument& e) {
        throw InvalidParams(e.what());
    }
}

void print_jsonl(std::ostream& out, const std::vector<FatColoring>& colorings)
{
    for (const auto& fc : colorings)
        out << coloring_to_json(fc).dump() << '\n';
}

int cmd_gen(const std::string& family, const std::string& output, std::ostream& out)
{
    const auto spec = parse_family(family);
    if (!spec)
        throw InvalidParams("'" + family + "' is not a family spec");
    const auto generated = generate(*spec);
    std::ostringstream text;
    text << "# " << to_string(*spec) << '\n';
    if (generated.part_of) {
        text << "# parts:";
        for (int p : *generated.part_of)
            text << ' ' << p;
        text << '\n';
    }
    write_edge_list(text, generated.graph);
    if (output.empty()) {
        out << text.str();
    } else {
        std::ofstream file(output);
        if (!file)
            throw InvalidParams("cannot write '" + output + "'");
        file << text.str();
    }
    return kOk;
}

int cmd_verify(const Graph& g, const std::string& coloring_path, std::ostream& out)
{
    std::ifstream in(coloring_path);
    if (!in)
        throw InvalidParams("cannot open '" + coloring_path + "'");
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(0, std::string("invalid JSON: ") + e.what());
    }
    const auto parsed = coloring_from_json(doc);
    if (parsed.coloring.vertex_count() != g.vertex_count())
        throw InvalidParams("coloring has n = " + std::to_string(parsed.coloring.vertex_count()) +
                            " but the graph has " + std::to_string(g.vertex_count()) + " vertices");

    const auto result = verify_fat(g, parsed.coloring);
    if (const auto* rej = std::get_if<Rejection>(&result)) {
        out << "NOT FAT vertex=" << rej->vertex << " class=" << rej->cls << " expected=" << rej->expected.str()
            << " actual=" << rej->actual << " reason=" << to_string(rej->reason) << '\n';
        return kVerificationFailed;
    }
    const auto& fc = std::get<FatColoring>(result);
    if ((parsed.alpha && *parsed.alpha != fc.alpha) || (parsed.beta && *parsed.beta != fc.beta)) {
        out << "NOT FAT declared parameters differ: alpha=" << fc.alpha.str() << " beta=" << fc.beta.str() << '\n';
        return kVerificationFailed;
    }
    out << "FAT k=" << fc.k() << " alpha=" << fc.alpha.str() << " beta=" << fc.beta.str() << '\n';
    return kOk;
}

int cmd_chi(const Graph& g, const SearchBudget& budget, bool witness, bool explain, std::ostream& out)
{
    const auto result = chi_fat(g, budget);
    out << result.k << '\n';
    if (witness)
        out << coloring_to_json(result.witness).dump() << '\n';
    if (explain) {
        const auto& b = result.bounds;
        out << "bound delta+1 " << b.delta_bound << '\n';
        out << "bound gcd+1 " << b.gcd_bound << '\n';
        if (b.mu_bound)
            out << "bound mu+1 " << *b.mu_bound << '\n';
        out << "upper " << b.upper << '\n';
        for (const auto& note : b.notes)
            out << "note " << note << '\n';
    }
    return kOk;
}

int cmd_enum(const Graph& g, const SearchBudget& budget, int threads, std::optional<int> k,
             std::optional<std::string> alpha_text, std::ostream& out)
{
    std::optional<Rational> alpha;
    if (alpha_text)
        alpha = parse_rational_arg(*alpha_text);
    if (k && alpha) {
        print_jsonl(out, solve_fixed(g, *k, *alpha, budget));
        return kOk;
    }
    auto all = enumerate_all(g, budget, threads);
    std::erase_if(all, [&](const FatColoring& fc) { return (k && fc.k() != *k) || (alpha && fc.alpha != *alpha); });
    print_jsonl(out, all);
    return kOk;
}

std::set<BigRational> default_lambdas(const Graph& g)
{
    std::set<BigRational> lambdas{BigRational(0), BigRational(2)};
    if (g.edge_count() == 0)
        return lambdas;
    const auto bounds = alpha_positive_bounds(g);
    for (int k = 2; k <= bounds.delta_bound; ++k)
        for (const auto& alpha : arithmetic_alphas(g, k))
            lambdas.insert(to_big(Rational(k) * alpha));
    return lambdas;
}

int cmd_spectral(const Graph& g, const std::vector<std::string>& lambda_texts, std::ostream& out)
{
    std::set<BigRational> lambdas;
    for (const auto& text : lambda_texts)
        lambdas.insert(to_big(parse_rational_arg(text)));
    if (lambdas.empty())
        lambdas = default_lambdas(g);

    const auto pencil = pencil_polynomial(g);
    out << "pencil det(A - tD): " << pencil.str() << '\n';
    out << "lambda multiplicity\n";
    for (const auto& lambda : lambdas)
        out << lambda.str() << ' ' << nl_multiplicity(g, lambda) << '\n';
    out << "mu " << max_nl_multiplicity(g) << '\n';
    return kOk;
}

int cmd_oracle(const Graph& g, const SearchBudget& budget, int threads, std::ostream& out)
{
    const auto expected = brute_force_oracle(g, threads);
    const auto actual = enumerate_all(g, budget, threads);
    if (expected == actual) {
        out << "OK " << expected.size() << " colorings\n";
        return kOk;
    }
    out << "MISMATCH solver=" << actual.size() << " oracle=" << expected.size() << '\n';
    for (const auto& fc : expected)
        if (std::find(actual.begin(), actual.end(), fc) == actual.end())
            out << "missing " << coloring_to_json(fc).dump() << '\n';
    for (const auto& fc : actual)
        if (std::find(expected.begin(), expected.end(), fc) == expected.end())
            out << "extra " << coloring_to_json(fc).dump() << '\n';
    return kVerificationFailed;
}

int cmd_report(const Graph& g, const SearchBudget& budget, int threads, std::ostream& out)
{
    std::map<std::pair<int, Rational>, std::pair<Rational, std::size_t>> table;
    for (const auto& fc : enumerate_all(g, budget, threads)) {
        auto& row = table[{fc.k(), fc.alpha}];
        row.first = fc.beta;
        ++row.second;
    }
    out << "k alpha beta colorings\n";
    for (const auto& [key, row] : table)
        out << key.first << ' ' << key.second.str() << ' ' << row.first.str() << ' ' << row.second << '\n';
    return kOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact solver and verifier for fair-and-tolerant (FAT) graph colorings", "fatcolor"};
    app.require_subcommand(1);

    std::string family;
    std::string gen_output;
    auto* gen = app.add_subcommand("gen", "Write the edge list of a graph family");
    gen->add_option("family", family, "Family spec, e.g. petal:3")->required();
    gen->add_option("-o,--output", gen_output, "Output file (default: stdout)");

    CommonOptions verify_opts;
    std::string coloring_path;
    auto* verify = app.add_subcommand("verify", "Check a coloring JSON against the FAT equations");
    add_common(verify, verify_opts);
    verify->add_option("coloring", coloring_path, "Coloring JSON file")->required();

    CommonOptions chi_opts;
    bool witness = false;
    bool explain = false;
    auto* chi = app.add_subcommand("chi", "Compute the FAT chromatic number");
    add_common(chi, chi_opts);
    chi->add_flag("--witness", witness, "Print a witness coloring as JSON");
    chi->add_flag("--explain", explain, "Print the bounds ledger");

    CommonOptions enum_opts;
    std::optional<int> enum_k;
    std::optional<std::string> enum_alpha;
    auto* enumerate = app.add_subcommand("enum", "Stream all FAT colorings as JSON lines");
    add_common(enumerate, enum_opts);
    enumerate->add_option("--k", enum_k, "Only colorings with this many classes")->check(CLI::PositiveNumber);
    enumerate->add_option("--alpha", enum_alpha, "Only colorings with this alpha (r/s)");

    CommonOptions irr_opts;
    auto* irreducible = app.add_subcommand("irreducible", "Stream the irreducible FAT colorings");
    add_common(irreducible, irr_opts);

    CommonOptions hasse_opts;
    std::string dot_path;
    auto* hasse = app.add_subcommand("hasse", "Write the coarsening order as a DOT digraph");
    add_common(hasse, hasse_opts);
    hasse->add_option("--dot", dot_path, "Output DOT file (default: stdout)");

    CommonOptions spectral_opts;
    std::vector<std::string> lambdas;
    auto* spectral = app.add_subcommand("spectral", "Exact normalized-Laplacian multiplicities");
    add_common(spectral, spectral_opts);
    spectral->add_option("--lambda", lambdas, "Eigenvalue(s) to query as r/s");

    CommonOptions oracle_opts;
    auto* oracle = app.add_subcommand("oracle", "Compare the solver with brute-force enumeration");
    add_common(oracle, oracle_opts);

    CommonOptions report_opts;
    auto* report = app.add_subcommand("report", "Table of feasible (k, alpha) pairs");
    add_common(report, report_opts);

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (gen->parsed())
            return cmd_gen(family, gen_output, out);

        auto load = [](const CommonOptions& opts) { return parse_graph_input(opts.graph).graph; };
        if (verify->parsed())
            return cmd_verify(load(verify_opts), coloring_path, out);
        if (chi->parsed())
            return cmd_chi(load(chi_opts), chi_opts.budget(), witness, explain, out);
        if (enumerate->parsed())
            return cmd_enum(load(enum_opts), enum_opts.budget(), enum_opts.threads, enum_k, enum_alpha, out);
        if (irreducible->parsed()) {
            print_jsonl(out, irreducibles(load(irr_opts), irr_opts.budget(), irr_opts.threads));
            return kOk;
        }
        if (hasse->parsed()) {
            const auto p = poset(load(hasse_opts), hasse_opts.budget(), hasse_opts.threads);
            if (dot_path.empty()) {
                write_poset_dot(out, p);
            } else {
                std::ofstream file(dot_path);
                if (!file)
                    throw InvalidParams("cannot write '" + dot_path + "'");
                write_poset_dot(file, p);
                out << "wrote " << dot_path << ": " << p.elements.size() << " colorings, " << p.hasse_edges.size()
                    << " covering edges, " << p.maximal.size() << " irreducible\n";
            }
            return kOk;
        }
        if (spectral->parsed())
            return cmd_spectral(load(spectral_opts), lambdas, out);
        if (oracle->parsed())
            return cmd_oracle(load(oracle_opts), oracle_opts.budget(), oracle_opts.threads, out);
        if (report->parsed())
            return cmd_report(load(report_opts), report_opts.budget(), report_opts.threads, out);
    } catch (const BudgetExhausted& e) {
        err << "budget exhausted";
        if (e.upper_bound > 0)
            err << ": chi_fat >= " << e.lower_bound << ", unproven upper bound " << e.upper_bound;
        err << '\n';
        return kBudgetExhausted;
    } catch (const FatError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

} // namespace fatcolor::cli
