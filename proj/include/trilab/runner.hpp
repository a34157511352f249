#pragma once

// Batch front-end plumbing: table serialization and the subcommand
// drivers shared by the CLI binary and the test suites.  Exit code 0
// is success, 1 a negative mathematical verdict, 2 a usage or input
// error.

#include <string>
#include <string_view>
#include <vector>

#include "trilab/bounds.hpp"

namespace trilab {

enum class Format { csv, json };

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

std::string emit_table(const Table& table, Format format);
/// Inverse of emit_table for round-trip checks; fields must not
/// contain commas or quotes (none of ours do).
Table parse_table(const std::string& serialized, Format format);

struct RunResult {
    int exit_code = 0;
    std::string output;
};

RunResult run_check_trifferent(std::string_view matrix_text, Format format);
RunResult run_search_max_dim(int n, Format format);
RunResult run_f_of_d(int d, Format format, int workers,
                     const std::string& witness_label = "-");
RunResult run_m_of_nd(int d, int n_lo, int n_hi, Format format, int workers);
RunResult run_ap1_check(std::string_view set_text, Format format, int workers);
RunResult run_heavy_hyperplane(std::string_view set_text, Format format);
RunResult run_aux1_witness(std::string_view set_text, Format format);
RunResult run_avoid_hyperplane(std::string_view points_text);
RunResult run_cn_coeff(std::string_view forms_text, const std::vector<int>& degrees);
RunResult run_phi_map(std::string_view reps_text, Format format);
Table bounds_table(const std::vector<BoundReport>& reports);
RunResult run_tech(const std::string& alpha, long d, Format format);
RunResult run_rate(long d, Format format);

}  // namespace trilab
