// geb: graph energy bounds harness.
//
//   geb report <g6|--edges FILE> [--format json|table|csv]
//   geb verify (--corpus FILE | --enumerate N) [--tol T] [--skip-bad] [--jobs K] [--bounds LIST]
//   geb conjectures (--corpus FILE | --enumerate N) [--tol T] [--skip-bad] [--jobs K]
//   geb equality --bound NAME (--corpus FILE | --enumerate N) [--eps E] [--jobs K]
//   geb enumerate --n N [--connected] --out FILE
//
// Exit codes: 0 clean, 1 violations or counterexamples, 2 usage or IO error.

#include "geb/bounds.hpp"
#include "geb/enumeration.hpp"
#include "geb/error.hpp"
#include "geb/graph.hpp"
#include "geb/graph6.hpp"
#include "geb/harness.hpp"
#include "geb/report_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

namespace {

constexpr int kExitClean = 0;
constexpr int kExitFound = 1;
constexpr int kExitUsage = 2;

struct CorpusArgs {
    std::string corpus;
    std::size_t enumerate = 0;
};

void add_corpus_options(CLI::App& cmd, CorpusArgs& args)
{
    auto* corpus = cmd.add_option("--corpus", args.corpus, "graph6 file, one graph per line");
    auto* en = cmd.add_option("--enumerate", args.enumerate,
                              "use every connected graph on N vertices (1..7)");
    corpus->excludes(en);
    cmd.callback([corpus, en] {
        if (corpus->count() == 0 && en->count() == 0)
            throw CLI::RequiredError("--corpus or --enumerate");
    });
}

// Edge-list file: vertex count, then one "i j" pair per line; '#' starts a comment.
geb::Graph read_edge_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw geb::Error(geb::Errc::Io, "cannot open " + path);
    std::stringstream clean;
    for (std::string line; std::getline(in, line);)
        clean << line.substr(0, line.find('#')) << '\n';
    std::size_t n = 0;
    if (!(clean >> n))
        throw geb::Error(geb::Errc::Io, path + ": missing vertex count");
    std::vector<geb::Edge> edges;
    for (std::size_t a, b; clean >> a >> b;)
        edges.emplace_back(a, b);
    if (!clean.eof())
        throw geb::Error(geb::Errc::Io, path + ": malformed edge entry");
    return geb::from_edge_list(n, edges);
}

geb::CorpusSummary run_on_corpus(const CorpusArgs& args, auto&& run)
{
    if (args.corpus.empty())
        return run(geb::GraphSource::enumerate(args.enumerate));
    std::ifstream in(args.corpus);
    if (!in)
        throw geb::Error(geb::Errc::Io, "cannot open " + args.corpus);
    return run(geb::GraphSource::graph6(in));
}

void print_violations(const geb::CorpusSummary& s)
{
    for (const auto& v : s.violations) {
        std::cerr << "VIOLATION " << v.graph6 << ' ' << v.check << " value=" << v.bound_value
                  << " energy=" << v.energy << " spectrum=[";
        for (std::size_t i = 0; i < v.spectrum.size(); ++i)
            std::cerr << (i ? ", " : "") << v.spectrum[i];
        std::cerr << "]\n";
    }
    for (const auto& d : s.decode_failures)
        std::cerr << "SKIPPED " << d.message << '\n';
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Graph energy bounds: spectra, bound reports and exhaustive verification"};
    app.require_subcommand(1);

    geb::HarnessOptions opt;
    opt.jobs = std::max(1U, std::thread::hardware_concurrency());
    app.add_option("--zero-tol", opt.zero_tol, "absolute threshold below which |lambda| is zero")
        ->envname("GEB_ZERO_TOL")
        ->check(CLI::PositiveNumber);

    // report
    auto* report = app.add_subcommand("report", "bound report for one graph");
    std::string g6;
    std::string edges_file;
    std::string format = "json";
    auto* g6_opt = report->add_option("graph6", g6, "graph6 string");
    auto* edges_opt = report->add_option("--edges", edges_file, "edge-list file");
    g6_opt->excludes(edges_opt);
    report->add_option("--format", format)->check(CLI::IsMember({"json", "table", "csv"}));

    // verify
    auto* verify = app.add_subcommand("verify", "check every proven bound on a corpus");
    CorpusArgs verify_args;
    std::vector<std::string> bound_filter;
    add_corpus_options(*verify, verify_args);
    verify->add_option("--tol", opt.tol, "absolute tolerance on bound comparisons")
        ->envname("GEB_TOL");
    verify->add_flag("--skip-bad", opt.skip_bad, "continue past undecodable lines");
    verify->add_option("--jobs", opt.jobs, "worker threads")->check(CLI::PositiveNumber);
    verify->add_option("--bounds", bound_filter, "restrict the soundness checks to these bounds")
        ->delimiter(',');

    // conjectures
    auto* conj = app.add_subcommand("conjectures", "check E >= n/eps and E <= 2m/sqrt(lambda1)");
    CorpusArgs conj_args;
    add_corpus_options(*conj, conj_args);
    conj->add_option("--tol", opt.tol)->envname("GEB_TOL");
    conj->add_flag("--skip-bad", opt.skip_bad);
    conj->add_option("--jobs", opt.jobs)->check(CLI::PositiveNumber);

    // equality
    auto* eq = app.add_subcommand("equality", "list graphs where a bound is attained");
    CorpusArgs eq_args;
    std::string eq_bound;
    add_corpus_options(*eq, eq_args);
    eq->add_option("--bound", eq_bound)
        ->required()
        ->check(CLI::IsMember({"cor_nice", "main", "rank_bound", "caporossi", "mcclelland_lower"}));
    eq->add_option("--eps", opt.eps, "|E - bound| threshold");
    eq->add_flag("--skip-bad", opt.skip_bad);
    eq->add_option("--jobs", opt.jobs)->check(CLI::PositiveNumber);

    // enumerate
    auto* en = app.add_subcommand("enumerate", "write graphs on N vertices up to isomorphism");
    std::size_t en_n = 0;
    bool connected_only = false;
    std::string out_path;
    en->add_option("--n", en_n)->required();
    en->add_flag("--connected", connected_only);
    en->add_option("--out", out_path)->required();
    en->add_option("--jobs", opt.jobs)->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitClean : kExitUsage;
    }

    try {
        if (*report) {
            if (g6.empty() && edges_file.empty()) {
                std::cerr << "report: need a graph6 string or --edges FILE\n";
                return kExitUsage;
            }
            const geb::Graph g = edges_file.empty() ? geb::parse_graph6(g6)
                                                    : read_edge_file(edges_file);
            const auto r = geb::bound_report(g, opt.zero_tol);
            const auto code = geb::write_graph6(g);
            if (format == "table")
                geb::write_report_table(std::cout, r, code);
            else if (format == "csv")
                std::cout << geb::csv_header() << '\n' << geb::report_to_csv_row(r, code) << '\n';
            else
                std::cout << geb::report_to_json(r, code).dump(2) << '\n';
            return kExitClean;
        }

        if (*verify) {
            for (const auto& name : bound_filter) {
                const auto id = geb::bound_from_name(name);
                if (!id || geb::is_conjectural(*id)) {
                    std::cerr << "verify: unknown proven bound '" << name << "'\n";
                    return kExitUsage;
                }
                opt.bounds.insert(*id);
            }
            const auto s = run_on_corpus(verify_args, [&](const geb::GraphSource& src) {
                return geb::run_verify(src, opt);
            });
            std::cout << geb::summary_to_json(s).dump(2) << '\n';
            print_violations(s);
            return s.violations.empty() ? kExitClean : kExitFound;
        }

        if (*conj) {
            const auto s = run_on_corpus(conj_args, [&](const geb::GraphSource& src) {
                return geb::run_conjectures(src, opt);
            });
            std::cout << geb::summary_to_json(s).dump(2) << '\n';
            print_violations(s);
            return s.violations.empty() ? kExitClean : kExitFound;
        }

        if (*eq) {
            const auto id = *geb::bound_from_name(eq_bound);
            const auto s = run_on_corpus(eq_args, [&](const geb::GraphSource& src) {
                return geb::run_equality(src, id, opt);
            });
            std::cout << geb::summary_to_json(s).dump(2) << '\n';
            print_violations(s);
            return kExitClean;
        }

        if (*en) {
            const auto graphs = geb::enumerate_graphs(en_n, connected_only, opt.jobs);
            std::ofstream out(out_path);
            if (!out)
                throw geb::Error(geb::Errc::Io, "cannot write " + out_path);
            for (const auto& g : graphs)
                out << geb::write_graph6(g) << '\n';
            out.close();
            if (!out)
                throw geb::Error(geb::Errc::Io, "write failed: " + out_path);
            std::cout << graphs.size() << '\n';
            return kExitClean;
        }
    } catch (const geb::Error& e) {
        std::cerr << "geb: " << geb::to_string(e.code()) << ": " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "geb: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
