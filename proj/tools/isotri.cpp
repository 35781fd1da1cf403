// Command-line front end: parse grids and parameters, dispatch to the
// library, print one JSON report per invocation on stdout. Exit codes:
// 0 success (and threshold met), 2 bad input, 3 threshold not met,
// 4 resource cap exceeded, 1 anything else.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "isotri/errors.hpp"
#include "isotri/extremal.hpp"
#include "isotri/json_io.hpp"
#include "isotri/parallel.hpp"
#include "isotri/popular.hpp"
#include "isotri/regularity.hpp"
#include "isotri/slice_rank.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitNotMet = 3;
constexpr int kExitResourceCap = 4;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw isotri::ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

isotri::GridSet load_grid(const std::string& path, const std::string& format) {
    const std::string text = read_file(path);
    if (format == "json") return isotri::grid_from_json(text);
    return isotri::GridSet::from_text(text);
}

struct DifferenceArg {
    bool set = false;
    int m = 0, n = 0;
};

void parse_difference(const std::string& s, DifferenceArg& out) {
    const std::size_t comma = s.find(',');
    if (comma == std::string::npos)
        throw CLI::ValidationError("--difference", "expected 'm,n'");
    try {
        out.m = std::stoi(s.substr(0, comma));
        out.n = std::stoi(s.substr(comma + 1));
    } catch (...) {
        throw CLI::ValidationError("--difference", "expected integers 'm,n'");
    }
    out.set = true;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Right-isosceles configuration counting, certificates, and bounds"};
    app.require_subcommand(1);

    int threads = 0;
    app.add_option("--threads", threads, "cap the worker pool (ISOTRI_THREADS as fallback)");

    // count
    auto* count_cmd = app.add_subcommand("count", "per-difference configuration counts");
    std::string count_file, count_format = "text", diff_str;
    bool count_wrap = false, count_all = false;
    count_cmd->add_option("grid-file", count_file, "grid file")->required();
    count_cmd->add_flag("--wraparound", count_wrap, "count mod N instead of in the grid");
    count_cmd->add_option("--difference", diff_str, "single difference 'm,n'");
    count_cmd->add_flag("--all", count_all, "full table, sorted by count");
    count_cmd->add_option("--format", count_format, "grid input format: text|json")
        ->check(CLI::IsMember({"text", "json"}));

    // popular
    auto* pop_cmd = app.add_subcommand("popular", "find a popular difference");
    std::string pop_file, pop_format = "text", pop_method = "scan";
    double pop_eps = 0.0;
    bool pop_wrap = false;
    pop_cmd->add_option("grid-file", pop_file, "grid file")->required();
    pop_cmd->add_option("--epsilon", pop_eps, "threshold slack in (0,1]")->required();
    pop_cmd->add_option("--method", pop_method, "scan|certificate")
        ->check(CLI::IsMember({"scan", "certificate"}));
    pop_cmd->add_flag("--wraparound", pop_wrap, "scan differences mod N (scan method only)");
    pop_cmd->add_option("--format", pop_format, "grid input format: text|json")
        ->check(CLI::IsMember({"text", "json"}));

    // slicerank
    auto* sr_cmd = app.add_subcommand("slicerank", "tuple count and exponential bound");
    int sr_q = 0, sr_n = 0;
    sr_cmd->add_option("--q", sr_q, "field order (2,3,4,5,7,8,9)")->required();
    sr_cmd->add_option("--n", sr_n, "dimension")->required();

    // extremal
    auto* ex_cmd = app.add_subcommand("extremal", "largest configuration-free grid subset");
    int ex_n = 0;
    std::uint64_t ex_budget = 100'000'000;
    ex_cmd->add_option("--n", ex_n, "grid side")->required();
    ex_cmd->add_option("--budget", ex_budget, "node budget for the search");

    // certify
    auto* cert_cmd = app.add_subcommand("certify", "regularity certificate for a grid indicator");
    std::string cert_file, cert_format = "text";
    double cert_eps = 0.0;
    cert_cmd->add_option("grid-file", cert_file, "grid file (odd side; treated as (Z/N)^2)")
        ->required();
    cert_cmd->add_option("--epsilon", cert_eps, "certificate slack in (0,1]")->required();
    cert_cmd->add_option("--format", cert_format, "grid input format: text|json")
        ->check(CLI::IsMember({"text", "json"}));

    CLI11_PARSE(app, argc, argv);
    if (threads > 0) isotri::set_default_threads(threads);

    try {
        if (*count_cmd) {
            DifferenceArg diff;
            if (!diff_str.empty()) parse_difference(diff_str, diff);
            if (diff.set == count_all) {
                std::cerr << "count: pass exactly one of --difference or --all\n";
                return kExitInput;
            }
            const isotri::GridSet grid = load_grid(count_file, count_format);
            if (count_all) {
                const auto table = isotri::difference_counts(grid, count_wrap);
                std::cout << isotri::count_table_json(grid, count_wrap, table) << '\n';
            } else {
                const auto c = isotri::difference_count_at(grid, diff.m, diff.n, count_wrap);
                std::cout << isotri::count_report_json(grid, count_wrap, diff.m, diff.n, c)
                          << '\n';
            }
            return kExitOk;
        }
        if (*pop_cmd) {
            const isotri::GridSet grid = load_grid(pop_file, pop_format);
            isotri::PopularDifferenceResult result;
            if (pop_method == "scan") {
                result = isotri::find_popular_scan(grid, pop_eps, pop_wrap);
            } else {
                result = isotri::find_popular_certificate(grid, pop_eps).result;
            }
            std::cout << isotri::popular_json(result) << '\n';
            return result.met ? kExitOk : kExitNotMet;
        }
        if (*sr_cmd) {
            std::cout << isotri::slice_rank_json(isotri::slice_rank_report(sr_q, sr_n)) << '\n';
            return kExitOk;
        }
        if (*ex_cmd) {
            std::cout << isotri::extremal_json(isotri::max_configuration_free(ex_n, ex_budget))
                      << '\n';
            return kExitOk;
        }
        if (*cert_cmd) {
            const isotri::GridSet grid = load_grid(cert_file, cert_format);
            isotri::GroupFunction2D f =
                isotri::GroupFunction2D::constant(isotri::CyclicGroup{grid.side()}, 0.0);
            for (const auto& [r, c] : grid.points()) f.at(r, c) = 1.0;
            const auto cert =
                isotri::certify(f, isotri::RegularityParams::from_epsilon(cert_eps));
            std::cout << isotri::certificate_json(cert) << '\n';
            return cert.pass ? kExitOk : kExitNotMet;
        }
    } catch (const isotri::ParseError& e) {
        std::cerr << "input error";
        if (e.line() > 0) std::cerr << " at line " << e.line() << ", column " << e.column();
        std::cerr << ": " << e.what() << '\n';
        return kExitInput;
    } catch (const isotri::ResourceCapError& e) {
        std::cerr << "resource cap: " << e.what() << '\n';
        return kExitResourceCap;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return kExitOk;
}
