// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. All comparisons are exact.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fatcolor/cli.hpp"
#include "fatcolor/families.hpp"
#include "fatcolor/solver.hpp"
#include "fatcolor/spectral.hpp"
#include "support/corpus.hpp"

using namespace fatcolor;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

class Report {
public:
    void line(const std::string& id, bool ok, const std::string& text)
    {
        std::cout << (ok ? "PASS " : "FAIL ") << id << "  " << text << std::endl;
    }

    void criterion(const std::string& id, bool ok, const std::string& text)
    {
        line(id, ok, text);
        failed_ |= !ok;
    }

    /// Up to a few failure details per criterion, indented under it.
    void detail(const std::string& text)
    {
        std::cout << "       " << text << std::endl;
    }

    bool failed() const { return failed_; }

private:
    bool failed_ = false;
};

struct CorpusResult {
    testing::CorpusEntry entry;
    StructureReport structure;
    std::vector<FatColoring> solver;
    std::vector<FatColoring> oracle;
};

bool same_colorings(const std::vector<FatColoring>& a, const std::vector<FatColoring>& b)
{
    return a == b;
}

std::string join(const std::vector<int>& xs)
{
    std::string s;
    for (int x : xs)
        s += (s.empty() ? "" : ",") + std::to_string(x);
    return s;
}

// 1 ---------------------------------------------------------------------

void family_table(Report& report)
{
    std::vector<FamilySpec> specs;
    for (int n = 2; n <= 6; ++n)
        specs.push_back(FamilySpec::complete(n));
    for (int n = 2; n <= 8; ++n)
        specs.push_back(FamilySpec::path(n));
    for (int n = 1; n <= 7; ++n)
        specs.push_back(FamilySpec::star(n));
    for (int m = 1; m <= 4; ++m)
        specs.push_back(FamilySpec::petal(m));
    for (int m = 1; m <= 5; ++m)
        specs.push_back(FamilySpec::book(m));
    for (int n = 3; n <= 15; ++n)
        specs.push_back(FamilySpec::cycle(n));
    for (auto [n, t] : {std::pair{6, 2}, {6, 3}, {8, 2}, {9, 3}, {12, 3}, {12, 4}})
        specs.push_back(FamilySpec::turan(n, t));

    // Expected values written out independently of known_chi_fat.
    auto expected = [](const FamilySpec& s) {
        const int p = s.params[0];
        switch (s.kind) {
        case FamilyKind::Complete: return p;
        case FamilyKind::Path:
        case FamilyKind::Star: return 2;
        case FamilyKind::Petal: return 3;
        case FamilyKind::Book: return std::vector<int>{2, 3, 2, 3, 2}[static_cast<std::size_t>(p - 1)];
        case FamilyKind::Cycle: return p % 3 == 0 ? 3 : (p % 2 == 0 ? 2 : 1);
        case FamilyKind::Turan: return std::max(s.params[1], p / s.params[1]);
        default: return -1;
        }
    };

    const auto start = Clock::now();
    int mismatches = 0;
    for (const auto& spec : specs) {
        const int want = expected(spec);
        const auto known = known_chi_fat(spec);
        const int got = chi_fat(generate(spec).graph).k;
        if (!known || *known != want || got != want) {
            ++mismatches;
            report.detail(to_string(spec) + ": chi_fat=" + std::to_string(got) + " known=" +
                          (known ? std::to_string(*known) : "none") + " expected=" + std::to_string(want));
        }
    }
    const double elapsed = seconds_since(start);
    report.criterion("1", mismatches == 0 && elapsed <= 60.0,
                     "family table: " + std::to_string(specs.size() - static_cast<std::size_t>(mismatches)) + "/" +
                         std::to_string(specs.size()) + " match, " + std::to_string(elapsed) + " s (limit 60 s)");
}

// 2 ---------------------------------------------------------------------

std::vector<CorpusResult> oracle_equivalence(Report& report)
{
    const auto start = Clock::now();
    std::vector<CorpusResult> results;
    int mismatches = 0;
    int connected = 0;
    for (auto& entry : testing::acceptance_corpus()) {
        CorpusResult r{entry, structure_report(entry.graph), {}, {}};
        r.solver = enumerate_all(entry.graph);
        r.oracle = brute_force_oracle(entry.graph);
        if (!same_colorings(r.solver, r.oracle)) {
            if (++mismatches <= 5)
                report.detail(entry.name + " (" + testing::describe(entry.graph) + "): solver " +
                              std::to_string(r.solver.size()) + " vs oracle " + std::to_string(r.oracle.size()));
        }
        connected += r.structure.is_connected;
        results.push_back(std::move(r));
    }
    const double elapsed = seconds_since(start);
    std::size_t colorings = 0;
    for (const auto& r : results)
        colorings += r.oracle.size();
    report.criterion("2", mismatches == 0 && elapsed <= 600.0,
                     "oracle equivalence: " + std::to_string(results.size()) + " graphs (" + std::to_string(connected) +
                         " connected), " + std::to_string(colorings) + " colorings, " +
                         std::to_string(mismatches) + " mismatches, " + std::to_string(elapsed) +
                         " s (limit 600 s)");
    return results;
}

// 3 ---------------------------------------------------------------------

void spectral_suite(Report& report, const std::vector<CorpusResult>& corpus)
{
    int checked = 0;
    int failures = 0;
    for (const auto& r : corpus) {
        if (r.structure.isolated_count > 0)
            continue;
        for (const auto& fc : r.oracle) {
            ++checked;
            bool ok = check_fat_spectral(r.entry.graph, fc.k(), fc.alpha);
            for (int i = 0; i < fc.k() && ok; ++i)
                for (int j = i + 1; j < fc.k() && ok; ++j)
                    ok = eigenfunction_check(r.entry.graph, fc, i, j);
            if (!ok && ++failures <= 5)
                report.detail(r.entry.name + ": k=" + std::to_string(fc.k()) + " alpha=" + fc.alpha.str() +
                              " classes " + join(fc.coloring.assignment()));
        }
    }
    report.criterion("3", failures == 0 && checked > 0,
                     "spectral suite: " + std::to_string(checked) + " colorings, " + std::to_string(failures) +
                         " failures");
}

// 4 ---------------------------------------------------------------------

void bound_suite(Report& report, const std::vector<CorpusResult>& corpus)
{
    int checked = 0;
    int violations = 0;
    auto fail = [&](const CorpusResult& r, const FatColoring& fc, const std::string& what) {
        if (++violations <= 5)
            report.detail(r.entry.name + ": " + what + " for k=" + std::to_string(fc.k()) + " classes " +
                          join(fc.coloring.assignment()));
    };
    for (const auto& r : corpus) {
        if (!r.structure.is_connected)
            continue;
        const Graph& g = r.entry.graph;
        const auto& s = r.structure;
        const int n = g.vertex_count();
        const int two_m = 2 * g.edge_count();
        const std::optional<int> mu =
            s.isolated_count == 0 ? std::optional<int>(max_nl_multiplicity(g)) : std::nullopt;
        for (const auto& fc : r.solver) {
            ++checked;
            const int k = fc.k();
            if (k > s.min_degree + 1)
                fail(r, fc, "k > delta+1");
            if (s.degree_gcd > 0 && k > s.degree_gcd + 1)
                fail(r, fc, "k > gcd+1");
            if (s.degree_gcd > 0 && k == s.degree_gcd + 1 && !fc.beta.is_zero())
                fail(r, fc, "k = gcd+1 but beta != 0");
            if (mu && k > *mu + 1)
                fail(r, fc, "k > mu+1");
            if (s.regular_degree && n % k != 0)
                fail(r, fc, "regular but k does not divide n");
            if (fc.alpha > Rational(0) && two_m % k != 0)
                fail(r, fc, "alpha > 0 but k does not divide 2m");
            const auto classes = fc.coloring.classes();
            if (fc.alpha > Rational(0))
                for (int i = 0; i < k; ++i)
                    if (volume(g, fc.coloring.class_set(i)) * k != two_m)
                        fail(r, fc, "unequal class volume");
            if (s.regular_degree)
                for (const auto& cls : classes)
                    if (static_cast<int>(cls.size()) * k != n)
                        fail(r, fc, "unequal class size on a regular graph");
        }
    }
    report.criterion("4", violations == 0 && checked > 0,
                     "bound suite: " + std::to_string(checked) + " colorings on connected graphs, " +
                         std::to_string(violations) + " violations");
}

// 5 ---------------------------------------------------------------------

void merge_suite(Report& report, const std::vector<CorpusResult>& corpus)
{
    std::mt19937_64 rng(20240602);
    int merges = 0;
    int failures = 0;
    for (const auto& r : corpus) {
        std::set<std::vector<int>> known;
        for (const auto& fc : r.solver)
            known.insert(fc.coloring.assignment());
        for (const auto& fc : r.solver) {
            const int k = fc.k();
            for (int l = 1; l <= k; ++l) {
                if (k % l != 0)
                    continue;
                for (int trial = 0; trial < 3; ++trial) {
                    std::vector<int> perm(static_cast<std::size_t>(k));
                    std::iota(perm.begin(), perm.end(), 0);
                    std::shuffle(perm.begin(), perm.end(), rng);
                    std::vector<std::vector<int>> grouping(static_cast<std::size_t>(l));
                    for (int i = 0; i < k; ++i)
                        grouping[static_cast<std::size_t>(i % l)].push_back(perm[static_cast<std::size_t>(i)]);
                    ++merges;
                    std::string problem;
                    try {
                        const FatColoring m = merge(r.entry.graph, fc, grouping);
                        const auto verdict = verify_fat(r.entry.graph, m.coloring);
                        const Rational ratio(k, l);
                        const Rational want_alpha = l == 1 ? Rational(0) : ratio * fc.alpha;
                        const Rational want_beta = l == 1 ? Rational(1) : fc.beta + (ratio - Rational(1)) * fc.alpha;
                        if (!accepted(verdict))
                            problem = "merged coloring rejected";
                        else if (std::get<FatColoring>(verdict).alpha != want_alpha || m.alpha != want_alpha)
                            problem = "alpha " + m.alpha.str() + " != " + want_alpha.str();
                        else if (std::get<FatColoring>(verdict).beta != want_beta || m.beta != want_beta)
                            problem = "beta " + m.beta.str() + " != " + want_beta.str();
                        else if (!known.count(canonicalize(m.coloring).assignment()))
                            problem = "merged coloring missing from enumeration";
                    } catch (const std::exception& e) {
                        problem = e.what();
                    }
                    if (!problem.empty() && ++failures <= 5)
                        report.detail(r.entry.name + ": k=" + std::to_string(k) + " l=" + std::to_string(l) + ": " +
                                      problem);
                }
            }
        }
    }
    report.criterion("5", failures == 0 && merges > 0,
                     "merge suite: " + std::to_string(merges) + " merges, " + std::to_string(failures) + " failures");
}

// 6 ---------------------------------------------------------------------

void turan_structure(Report& report)
{
    const auto start = Clock::now();
    const auto gen = generate(FamilySpec::turan(12, 4));
    const Graph& g = gen.graph;
    const auto& part = *gen.part_of;
    const int parts = 4;
    const int n = g.vertex_count();

    const auto all = enumerate_all(g);
    int off_pattern = 0;
    for (const auto& fc : all) {
        const int k = fc.k();
        // counts[p][c] = |P_p ∩ V_c|
        std::vector<std::vector<int>> counts(parts, std::vector<int>(static_cast<std::size_t>(k), 0));
        for (Vertex v = 0; v < n; ++v)
            ++counts[static_cast<std::size_t>(part[static_cast<std::size_t>(v)])][static_cast<std::size_t>(fc.coloring[v])];
        bool balanced = true;
        for (const auto& row : counts)
            for (int c : row)
                balanced &= c == row[0];
        bool mono = true;
        std::vector<int> parts_per_color(static_cast<std::size_t>(k), 0);
        for (const auto& row : counts) {
            const auto used = std::count_if(row.begin(), row.end(), [](int c) { return c > 0; });
            mono &= used == 1;
            for (int c = 0; c < k; ++c)
                parts_per_color[static_cast<std::size_t>(c)] += row[static_cast<std::size_t>(c)] > 0;
        }
        for (int c : parts_per_color)
            mono &= c == parts_per_color[0];
        if (!balanced && !mono && ++off_pattern <= 3)
            report.detail("neither balanced nor monochromatic: " + join(fc.coloring.assignment()));
    }
    report.line("6a", off_pattern == 0,
                "turan(12,4): " + std::to_string(all.size()) + " colorings, " + std::to_string(off_pattern) +
                    " neither balanced nor monochromatic");

    const auto irr = irreducibles(g);
    std::map<std::pair<int, std::string>, int> kinds;
    for (const auto& fc : irr)
        ++kinds[{fc.k(), fc.alpha.str()}];
    std::string breakdown;
    for (const auto& [key, count] : kinds)
        breakdown += " " + std::to_string(count) + "x(k=" + std::to_string(key.first) + ", a=" + key.second + ")";
    const bool irr_ok = irr.size() == 2;
    report.line("6b", irr_ok, "turan(12,4): irreducibles = " + std::to_string(irr.size()) + " (required 2):" + breakdown);

    using Pair = std::pair<int, Rational>;
    const std::set<Pair> want{{1, Rational(0)}, {2, Rational(2, 3)}, {3, Rational(1, 3)}, {4, Rational(1, 3)}};
    const auto got = feasible_report(g);
    std::string listed;
    for (const auto& [k, a] : got)
        listed += " (" + std::to_string(k) + "," + a.str() + ")";
    report.line("6c", got == want, "turan(12,4): feasible (k, alpha) =" + listed);

    const double elapsed = seconds_since(start);
    report.line("6d", elapsed <= 120.0, "turan(12,4): " + std::to_string(elapsed) + " s (limit 120 s)");
    report.criterion("6", off_pattern == 0 && irr_ok && got == want && elapsed <= 120.0, "turan structure");
}

// 7 ---------------------------------------------------------------------

/// Maximal elements computed straight from the oracle output.
std::size_t oracle_irreducible_count(const Graph& g)
{
    const auto all = brute_force_oracle(g);
    std::size_t count = 0;
    for (const auto& a : all) {
        bool has_finer = false;
        for (const auto& b : all)
            has_finer |= !(a.coloring == b.coloring) && is_coarser(a.coloring, b.coloring);
        count += !has_finer;
    }
    return count;
}

void irreducibility(Report& report, const std::vector<CorpusResult>& corpus)
{
    // Regression value for C_8 taken from the brute-force oracle.
    constexpr std::size_t kC8Irreducibles = 3;

    const Graph c6 = generate(FamilySpec::cycle(6)).graph;
    const Graph c5 = generate(FamilySpec::cycle(5)).graph;
    const Graph c8 = generate(FamilySpec::cycle(8)).graph;
    const std::size_t n6 = irreducibles(c6).size();
    const std::size_t n5 = irreducibles(c5).size();
    const std::size_t n8 = irreducibles(c8).size();
    const std::size_t n8_oracle = oracle_irreducible_count(c8);

    int proper = 0;
    int not_maximal = 0;
    for (const auto& r : corpus) {
        const auto p = build_poset(r.solver);
        std::set<std::size_t> maximal(p.maximal.begin(), p.maximal.end());
        for (std::size_t i = 0; i < p.elements.size(); ++i) {
            if (!is_proper(p.elements[i]))
                continue;
            ++proper;
            if (!maximal.count(i) && ++not_maximal <= 3)
                report.detail(r.entry.name + ": proper coloring not maximal: " +
                              join(p.elements[i].coloring.assignment()));
        }
    }
    const bool ok = n6 == 2 && n5 == 1 && n8 == kC8Irreducibles && n8_oracle == kC8Irreducibles && not_maximal == 0;
    report.criterion("7", ok,
                     "irreducibles: C6=" + std::to_string(n6) + " (2), C5=" + std::to_string(n5) + " (1), C8=" +
                         std::to_string(n8) + " (regression " + std::to_string(kC8Irreducibles) + ", oracle " +
                         std::to_string(n8_oracle) + "), proper colorings maximal " +
                         std::to_string(proper - not_maximal) + "/" + std::to_string(proper));
}

// 8 ---------------------------------------------------------------------

void spectral_values(Report& report)
{
    const Graph k4 = generate(FamilySpec::complete(4)).graph;
    const Graph c6 = generate(FamilySpec::cycle(6)).graph;
    const auto a = nl_multiplicity(k4, BigRational(4, 3));
    const auto b = nl_multiplicity(c6, BigRational(3, 2));
    const int mu = max_nl_multiplicity(k4);
    const auto shadow = regular_shadow(c6, 3, Rational(1, 2));
    const bool ok = a == 3 && b == 2 && mu == 3 && shadow.kirchhoff_eigenvalue == BigRational(3) &&
                    shadow.adjacency_eigenvalue == BigRational(-1) && shadow.holds();
    report.criterion("8", ok,
                     "spectral values: m(K4,4/3)=" + std::to_string(a) + " m(C6,3/2)=" + std::to_string(b) +
                         " mu(K4)=" + std::to_string(mu) + " shadow(C6,3,1/2)=(" +
                         shadow.kirchhoff_eigenvalue.str() + "," + shadow.adjacency_eigenvalue.str() + ") mult " +
                         std::to_string(shadow.kirchhoff_multiplicity) + "/" +
                         std::to_string(shadow.adjacency_multiplicity) + " need " + std::to_string(shadow.required));
}

// 9 ---------------------------------------------------------------------

std::string run_cli(const std::vector<std::string>& args, int& code)
{
    std::ostringstream out, err;
    code = cli::run(args, out, err);
    return out.str();
}

std::string slurp(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

void determinism(Report& report)
{
    const auto dir = std::filesystem::temp_directory_path();
    std::set<std::string> enum_outputs, hasse_outputs, dot_files;
    bool all_ok = true;
    int runs = 0;
    for (const char* threads : {"1", "8", "1", "8"}) {
        int code = 0;
        enum_outputs.insert(run_cli({"enum", "turan:12,4", "--threads", threads}, code));
        all_ok &= code == 0;
        hasse_outputs.insert(run_cli({"hasse", "turan:12,4", "--threads", threads}, code));
        all_ok &= code == 0;
        const auto dot = dir / ("fatcolor_acceptance_" + std::to_string(runs++) + ".dot");
        run_cli({"hasse", "turan:12,4", "--threads", threads, "--dot", dot.string()}, code);
        all_ok &= code == 0;
        dot_files.insert(slurp(dot));
        std::filesystem::remove(dot);
    }
    const bool ok = all_ok && enum_outputs.size() == 1 && hasse_outputs.size() == 1 && dot_files.size() == 1 &&
                    !enum_outputs.begin()->empty() && *hasse_outputs.begin() == *dot_files.begin();
    report.criterion("9", ok,
                     "determinism: enum " + std::to_string(enum_outputs.size()) + " distinct output(s), hasse " +
                         std::to_string(hasse_outputs.size()) + ", dot files " + std::to_string(dot_files.size()) +
                         " across 4 runs at 1 and 8 threads");
}

} // namespace

int main()
{
    Report report;
    family_table(report);
    const auto corpus = oracle_equivalence(report);
    spectral_suite(report, corpus);
    bound_suite(report, corpus);
    merge_suite(report, corpus);
    turan_structure(report);
    irreducibility(report, corpus);
    spectral_values(report);
    determinism(report);
    std::cout << (report.failed() ? "acceptance: FAILED" : "acceptance: all criteria passed") << std::endl;
    return report.failed() ? 1 : 0;
}
