#include "slb/bounds.hpp"
#include "slb/catalog.hpp"
#include "slb/cliqopt.hpp"
#include "slb/decomp.hpp"
#include "slb/error.hpp"
#include "slb/graph_io.hpp"
#include "slb/reproduce.hpp"
#include "slb/spectra.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace {

auto read_text(const std::string& path) -> std::string
{
    if (path == "-")
        return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path);
    if (!in)
        throw slb::InputError("cannot open " + path);
    return {std::istreambuf_iterator<char>(in), {}};
}

auto write_text(const std::string& path, const std::string& text) -> void
{
    std::ofstream out(path);
    if (!out)
        throw slb::InputError("cannot write " + path);
    out << text;
}

auto fixed12(double v) -> std::string
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12f", v);
    std::string s = buf;
    return s == "-0.000000000000" ? "0.000000000000" : s;
}

auto env_threads() -> unsigned
{
    const char* s = std::getenv("SPECTRAL_LB_THREADS");
    if (!s || !*s)
        return 1;
    char* end = nullptr;
    const long v = std::strtol(s, &end, 10);
    if (*end != '\0' || v < 1)
        throw slb::InputError("SPECTRAL_LB_THREADS must be a positive integer");
    return static_cast<unsigned>(v);
}

/// An eigenvalue within 1e-6 of an integer k counts as integral when A - kI is
/// exactly singular.
auto exact_integer_eigenvalue(const slb::WeightedGraph& g, double value) -> bool
{
    const double k = std::round(value);
    if (std::abs(value - k) > 1e-6)
        return false;
    auto a = g.adjacency();
    for (std::size_t i = 0; i < a.rows(); ++i)
        a(i, i) -= slb::Rational(static_cast<long>(k));
    return slb::rational_rank(a) < a.rows();
}

auto cmd_catalog_list() -> int
{
    for (const auto& e : slb::catalog_entries())
        std::printf("%-22s %-18s %s\n", e.name.c_str(), e.params.c_str(), e.description.c_str());
    return 0;
}

auto cmd_catalog_get(const std::string& name, const std::vector<int>& params, bool json) -> int
{
    const auto g = slb::named_graph(name, params);
    if (json)
        std::cout << slb::to_json(g).dump(2) << "\n";
    else
        slb::write_edge_list(std::cout, g);
    return 0;
}

auto cmd_spectrum(const std::string& path) -> int
{
    const auto g = slb::parse_graph(read_text(path));
    const auto s = slb::spectrum(g);
    for (double v : s.values)
        std::cout << fixed12(v) << (exact_integer_eigenvalue(g, v) ? "  integer (exact)" : "") << "\n";
    return 0;
}

auto cmd_bounds(const std::string& path, const std::string& partition_path, bool lp, bool json) -> int
{
    const auto g = slb::parse_simple_graph(read_text(path));
    slb::CliquePartition partition;
    slb::ReportOptions opts;
    opts.lp = lp;
    if (!partition_path.empty()) {
        partition = slb::read_partition_file(partition_path);
        opts.partition = &partition;
    }
    const auto report = slb::bound_report(g, path == "-" ? "stdin" : path, opts);
    if (json)
        std::cout << slb::to_json(report).dump(2) << "\n";
    else
        std::cout << slb::format_table(report);
    const auto bad = report.violations();
    for (const auto& b : bad)
        std::cerr << "bound on the wrong side of lambda: " << b << "\n";
    return bad.empty() ? 0 : 1;
}

auto cmd_lambda_star_k(const std::string& path, const std::string& cert) -> int
{
    const auto g = slb::parse_simple_graph(read_text(path));
    const auto r = slb::lambda_star_K(g);
    std::cout << "lambda*_K = " << slb::to_string(r.value) << " (" << fixed12(r.value.get_d()) << "), mu = " << r.mu
              << "\n";
    if (!cert.empty())
        write_text(cert, slb::to_json(r, false).dump(2) + "\n");
    return 0;
}

auto cmd_lambda_star_c(const std::string& path, const std::string& cert) -> int
{
    const auto h = slb::parse_graph(read_text(path));
    const auto r = slb::lambda_star_C(h);
    std::cout << "lambda*_C = " << slb::to_string(r.value) << " (" << fixed12(r.value.get_d()) << "), mu = " << r.mu
              << "\n";
    if (!cert.empty())
        write_text(cert, slb::to_json(r, true).dump(2) + "\n");
    return 0;
}

auto cmd_reproduce(const std::string& filter, const std::string& json_path, bool perturb) -> int
{
    slb::ReproOptions opts;
    opts.filter = filter;
    opts.perturb_petersen = perturb;
    opts.threads = env_threads();
    const auto rows = slb::reproduce(opts);
    if (rows.empty())
        throw slb::InputError("no example matches filter '" + filter + "'");
    std::cout << slb::format_table(rows);
    if (!json_path.empty())
        write_text(json_path, slb::to_json(rows).dump(2) + "\n");
    for (const auto& r : rows)
        if (!r.pass)
            return 1;
    return 0;
}

}  // namespace

auto main(int argc, char** argv) -> int
{
    CLI::App app{"Lower bounds on the smallest adjacency eigenvalue"};
    app.require_subcommand(1);

    auto* catalog = app.add_subcommand("catalog", "Named graphs");
    catalog->require_subcommand(1);
    auto* list = catalog->add_subcommand("list", "List graph names and parameter schemas");
    auto* get = catalog->add_subcommand("get", "Print a named graph as an edge list");
    std::string name;
    std::vector<int> params;
    bool get_json = false;
    get->add_option("name", name, "Graph name")->required();
    get->add_option("params", params, "Integer parameters");
    get->add_flag("--json", get_json, "Emit JSON instead of an edge list");

    std::string file;
    auto* spec = app.add_subcommand("spectrum", "Sorted eigenvalues of a graph file ('-' for stdin)");
    spec->add_option("graph", file)->required();

    std::string partition;
    bool lp = false, json = false, all = false;
    auto* bounds = app.add_subcommand("bounds", "All applicable bounds for a simple graph");
    bounds->add_option("graph", file)->required();
    bounds->add_option("--partition", partition, "Clique partition JSON");
    bounds->add_flag("--lp", lp, "Add lambda*_K and lambda*_C rows");
    bounds->add_flag("--all", all, "Same as --lp");
    bounds->add_flag("--json", json, "Emit JSON");

    std::string cert;
    auto* lsk = app.add_subcommand("lambda-star-k", "Optimal clique-partition bound");
    lsk->add_option("graph", file)->required();
    lsk->add_option("--cert", cert, "Write the clique partition certificate here");
    auto* lsc = app.add_subcommand("lambda-star-c", "Optimal complete-graph decomposition bound");
    lsc->add_option("graph", file)->required();
    lsc->add_option("--cert", cert, "Write the decomposition certificate here");

    std::string filter, json_out;
    bool perturb = false;
    auto* repro = app.add_subcommand("reproduce", "Recompute every worked example");
    repro->add_option("--filter", filter, "Only examples whose id contains this string");
    repro->add_option("--json", json_out, "Also write the rows as JSON");
    repro->add_flag("--perturb-petersen", perturb, "Negative control: move one Petersen edge");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*list)
            return cmd_catalog_list();
        if (*get)
            return cmd_catalog_get(name, params, get_json);
        if (*spec)
            return cmd_spectrum(file);
        if (*bounds)
            return cmd_bounds(file, partition, lp || all, json);
        if (*lsk)
            return cmd_lambda_star_k(file, cert);
        if (*lsc)
            return cmd_lambda_star_c(file, cert);
        if (*repro)
            return cmd_reproduce(filter, json_out, perturb);
    }
    catch (const slb::InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    }
    catch (const slb::CheckFailure& e) {
        std::cerr << "check failed: " << e.what() << "\n";
        return 1;
    }
    catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
