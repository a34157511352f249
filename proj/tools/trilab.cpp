// trilab: batch front-end for the exact F3 trifference laboratory.
// Exit codes: 0 success, 1 negative mathematical verdict, 2 usage or
// input error.  Data goes to --output (or stdout); diagnostics to
// stderr.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "trilab/runner.hpp"

namespace {

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

int deliver(const trilab::RunResult& r, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << r.output;
    } else {
        std::ofstream out(output_path);
        if (!out) throw std::runtime_error("cannot write " + output_path);
        out << r.output;
    }
    return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    using trilab::Format;

    CLI::App app{"exact computation laboratory for trifferent codes over F3"};
    app.require_subcommand(1);

    int workers = 1;
    std::string format_name = "csv";
    std::string output_path;
    long seed = 0;  // reserved for randomized test generation; oracles ignore it
    app.add_option("--workers", workers, "worker count (results are worker-independent)");
    app.add_option("--format", format_name, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--output", output_path, "write data output to this path");
    app.add_option("--seed", seed, "seed for randomized test generation only");

    std::string input_file, witness_file, alpha = "0";
    int n = 0, d = 0, n_lo = 2, n_hi = 8;
    long big_d = 3000;
    std::vector<int> degrees;
    std::vector<int> korner_args, fk_args, packing_args, m_lm_args, m_mb_args;
    int dim_lin_n = 0, f_lower_d = 0;
    long crossover_d = 0;

    auto* check = app.add_subcommand("check-trifferent", "verify a generator matrix");
    check->add_option("file", input_file)->required();

    auto* search = app.add_subcommand("search-max-dim", "max trifferent dimension in F3^n");
    search->add_option("--n", n)->required();

    auto* fofd = app.add_subcommand("f-of-d", "exact f(d) oracle");
    fofd->add_option("--d", d)->required();
    fofd->add_option("--witness", witness_file, "write the minimizer here");

    auto* mofnd = app.add_subcommand("m-of-nd", "exact m(n, d) oracle sweep");
    mofnd->add_option("--d", d)->required();
    mofnd->add_option("--n-min", n_lo);
    mofnd->add_option("--n-max", n_hi);

    auto* ap1 = app.add_subcommand("ap1-check", "test the hyperplane-pair covering condition");
    ap1->add_option("file", input_file)->required();

    auto* heavy = app.add_subcommand("heavy-hyperplane", "derandomized heavy-hyperplane report");
    heavy->add_option("file", input_file)->required();

    auto* aux1 = app.add_subcommand("aux1-witness", "construct a non-parallel avoiding pair");
    aux1->add_option("file", input_file)->required();

    auto* avoid = app.add_subcommand("avoid-hyperplane", "hyperplane disjoint from a point set");
    avoid->add_option("file", input_file)->required();

    auto* cn = app.add_subcommand("cn-coeff", "grid-sum top coefficient of a form product");
    cn->add_option("--forms", input_file)->required();
    cn->add_option("--degrees", degrees, "one degree per variable")->required();

    auto* phi = app.add_subcommand("phi-map", "image code of the dual evaluation map");
    phi->add_option("file", input_file)->required();

    auto* bounds_cmd = app.add_subcommand("bounds", "closed-form bound reports");
    bounds_cmd->add_option("--korner", korner_args, "k n")->expected(2);
    bounds_cmd->add_option("--fk", fk_args, "k n")->expected(2);
    bounds_cmd->add_option("--dim-lin", dim_lin_n, "n");
    bounds_cmd->add_option("--f-lower", f_lower_d, "d");
    bounds_cmd->add_option("--m-lm", m_lm_args, "n d")->expected(2);
    bounds_cmd->add_option("--m-mb", m_mb_args, "n2 d")->expected(2);
    bounds_cmd->add_option("--packing", packing_args, "n d k")->expected(3);
    bounds_cmd->add_option("--crossover", crossover_d, "d for the lm/mb crossover ratio");

    auto* tech = app.add_subcommand("tech", "endpoint analysis of the contradiction window");
    tech->add_option("--alpha", alpha, "rational, e.g. 1/100");
    tech->add_option("--d", big_d);

    auto* rate = app.add_subcommand("rate", "per-d growth rate of the packing left side");
    rate->add_option("--d", big_d)->required();

    // let --workers/--format/--output/--seed appear after the subcommand
    for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    CLI11_PARSE(app, argc, argv);
    const Format format = format_name == "json" ? Format::json : Format::csv;

    try {
        trilab::RunResult result;
        if (*check) {
            result = trilab::run_check_trifferent(slurp(input_file), format);
        } else if (*search) {
            result = trilab::run_search_max_dim(n, format);
        } else if (*fofd) {
            result = trilab::run_f_of_d(d, format, workers,
                                        witness_file.empty() ? "-" : witness_file);
        } else if (*mofnd) {
            result = trilab::run_m_of_nd(d, n_lo, n_hi, format, workers);
        } else if (*ap1) {
            result = trilab::run_ap1_check(slurp(input_file), format, workers);
        } else if (*heavy) {
            result = trilab::run_heavy_hyperplane(slurp(input_file), format);
        } else if (*aux1) {
            result = trilab::run_aux1_witness(slurp(input_file), format);
        } else if (*avoid) {
            result = trilab::run_avoid_hyperplane(slurp(input_file));
        } else if (*cn) {
            result = trilab::run_cn_coeff(slurp(input_file), degrees);
        } else if (*phi) {
            result = trilab::run_phi_map(slurp(input_file), format);
        } else if (*bounds_cmd) {
            std::vector<trilab::BoundReport> reports;
            if (!korner_args.empty())
                reports.push_back(trilab::korner_bound(korner_args[0], korner_args[1]));
            if (!fk_args.empty()) reports.push_back(trilab::fk_bound(fk_args[0], fk_args[1]));
            if (dim_lin_n > 0) {
                trilab::BoundReport r;
                r.name = "dim-lin";
                r.inputs = {{"n", std::to_string(dim_lin_n)}};
                const mpq_class v = trilab::dim_bound_lin(dim_lin_n);
                r.lhs_exact = v.get_str();
                r.lhs_value = static_cast<long double>(v.get_d());
                reports.push_back(std::move(r));
            }
            if (f_lower_d > 0) {
                trilab::BoundReport r;
                r.name = "f-lower";
                r.inputs = {{"d", std::to_string(f_lower_d)}};
                const long v = trilab::f_lower_bound(f_lower_d);
                r.lhs_exact = std::to_string(v);
                r.lhs_value = static_cast<long double>(v);
                reports.push_back(std::move(r));
            }
            if (!m_lm_args.empty()) {
                trilab::BoundReport r;
                r.name = "m-lm";
                r.inputs = {{"n", std::to_string(m_lm_args[0])},
                            {"d", std::to_string(m_lm_args[1])}};
                const mpq_class v = trilab::m_lower_bound_lm(m_lm_args[0], m_lm_args[1]);
                r.lhs_exact = v.get_str();
                r.lhs_value = static_cast<long double>(v.get_d());
                reports.push_back(std::move(r));
            }
            if (!m_mb_args.empty()) {
                trilab::BoundReport r;
                r.name = "m-mb";
                r.inputs = {{"n2", std::to_string(m_mb_args[0])},
                            {"d", std::to_string(m_mb_args[1])}};
                const long v = trilab::m_lower_bound_mb(m_mb_args[0], m_mb_args[1]);
                r.lhs_exact = std::to_string(v);
                r.lhs_value = static_cast<long double>(v);
                reports.push_back(std::move(r));
            }
            if (!packing_args.empty())
                reports.push_back(trilab::packing_check(packing_args[0], packing_args[1],
                                                        packing_args[2]));
            if (crossover_d > 0) {
                trilab::BoundReport r;
                r.name = "lm-mb-crossover";
                r.inputs = {{"d", std::to_string(crossover_d)}};
                const double v = trilab::mb_vs_lm_crossover(crossover_d);
                char buf[32];
                std::snprintf(buf, sizeof buf, "%.6g", v);
                r.lhs_exact = buf;
                r.lhs_value = static_cast<long double>(v);
                reports.push_back(std::move(r));
            }
            result = trilab::RunResult{0, emit_table(trilab::bounds_table(reports), format)};
        } else if (*tech) {
            result = trilab::run_tech(alpha, big_d, format);
        } else if (*rate) {
            result = trilab::run_rate(big_d, format);
        }
        return deliver(result, output_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
