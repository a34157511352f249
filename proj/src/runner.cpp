#include "trilab/runner.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "trilab/dualgeom.hpp"
#include "trilab/nullstellensatz.hpp"
#include "trilab/trifference.hpp"

namespace trilab {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string fmt_ld(long double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10Lg", v);
    return buf;
}

std::string hyperplane_str(const AffineHyperplane& h) {
    return h.normal.to_digits() + ";" + std::to_string(h.offset);
}

int infer_dimension(const std::vector<F3Vector>& rows) {
    if (rows.empty()) throw ParseError("empty input set");
    return static_cast<int>(rows[0].size());
}

}  // namespace

std::string emit_table(const Table& table, Format format) {
    if (format == Format::csv) {
        std::ostringstream os;
        for (std::size_t i = 0; i < table.header.size(); ++i)
            os << (i ? "," : "") << table.header[i];
        os << '\n';
        for (const auto& row : table.rows) {
            for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
            os << '\n';
        }
        return os.str();
    }
    ordered_json arr = ordered_json::array();
    for (const auto& row : table.rows) {
        ordered_json obj;
        for (std::size_t i = 0; i < table.header.size(); ++i) obj[table.header[i]] = row[i];
        arr.push_back(std::move(obj));
    }
    return arr.dump(2) + "\n";
}

Table parse_table(const std::string& serialized, Format format) {
    Table t;
    if (format == Format::csv) {
        std::istringstream is(serialized);
        std::string line;
        bool first = true;
        while (std::getline(is, line)) {
            if (line.empty()) continue;
            std::vector<std::string> fields;
            std::size_t pos = 0;
            while (true) {
                const std::size_t comma = line.find(',', pos);
                fields.push_back(line.substr(pos, comma == std::string::npos
                                                      ? std::string::npos
                                                      : comma - pos));
                if (comma == std::string::npos) break;
                pos = comma + 1;
            }
            if (first) {
                t.header = std::move(fields);
                first = false;
            } else {
                t.rows.push_back(std::move(fields));
            }
        }
        return t;
    }
    const ordered_json arr = ordered_json::parse(serialized);
    for (const auto& obj : arr) {
        if (t.header.empty())
            for (auto it = obj.begin(); it != obj.end(); ++it) t.header.push_back(it.key());
        std::vector<std::string> row;
        for (const auto& key : t.header) row.push_back(obj.at(key).get<std::string>());
        t.rows.push_back(std::move(row));
    }
    return t;
}

RunResult run_check_trifferent(std::string_view matrix_text, Format format) {
    const GeneratorBasis V = rref(parse_matrix_text(matrix_text));
    const LinearCheck check = is_trifferent_linear(V);
    Table t;
    t.header = {"verdict", "x", "y", "z"};
    if (check.ok) {
        t.rows.push_back({"trifferent", "-", "-", "-"});
        return RunResult{0, emit_table(t, format)};
    }
    // a failing pair (v, w) is the failing triple (0, v, w)
    const F3Vector zero(V.length());
    t.rows.push_back({"not-trifferent", zero.to_digits(), check.failing->v.to_digits(),
                      check.failing->w.to_digits()});
    return RunResult{1, emit_table(t, format)};
}

RunResult run_search_max_dim(int n, Format format) {
    const SearchResult r = max_trifferent_dimension(n);
    std::vector<std::string> witness_rows;
    if (r.witness)
        for (const auto& row : r.witness->rows) witness_rows.push_back(row.to_digits());
    if (format == Format::json) {
        ordered_json obj;
        obj["n"] = r.n;
        obj["best_dimension"] = r.best_dimension;
        obj["witness"] = witness_rows;
        obj["subspaces_examined"] = r.subspaces_examined;
        return RunResult{0, obj.dump(2) + "\n"};
    }
    Table t;
    t.header = {"n", "best_dimension", "witness", "subspaces_examined"};
    std::string joined;
    for (std::size_t i = 0; i < witness_rows.size(); ++i)
        joined += (i ? "|" : "") + witness_rows[i];
    t.rows.push_back({std::to_string(r.n), std::to_string(r.best_dimension), joined,
                      std::to_string(r.subspaces_examined)});
    return RunResult{0, emit_table(t, format)};
}

RunResult run_f_of_d(int d, Format format, int workers, const std::string& witness_label) {
    const FOracleResult r = f_oracle(d, workers);
    if (witness_label != "-") {
        std::ofstream out(witness_label);
        if (!out) throw std::runtime_error("cannot write witness file: " + witness_label);
        out << r.minimizer.to_text();
    }
    Table t;
    t.header = {"d", "value", "witness_file"};
    t.rows.push_back({std::to_string(d), std::to_string(r.value), witness_label});
    return RunResult{0, emit_table(t, format)};
}

RunResult run_m_of_nd(int d, int n_lo, int n_hi, Format format, int workers) {
    Table t;
    t.header = {"d", "n", "value"};
    for (int n = n_lo + (n_lo % 2); n <= n_hi; n += 2)
        t.rows.push_back(
            {std::to_string(d), std::to_string(n), std::to_string(m_oracle(n, d, workers))});
    return RunResult{0, emit_table(t, format)};
}

RunResult run_ap1_check(std::string_view set_text, Format format, int workers) {
    const auto rows = parse_matrix_text(set_text);
    const SymmetricSet X(infer_dimension(rows), rows);
    const Ap1Result r = ap1_satisfied(X, workers);
    Table t;
    t.header = {"satisfied", "h1", "h2"};
    if (r.ok) {
        t.rows.push_back({"true", "-", "-"});
        return RunResult{0, emit_table(t, format)};
    }
    t.rows.push_back({"false", hyperplane_str(r.counterexample->first),
                      hyperplane_str(r.counterexample->second)});
    return RunResult{1, emit_table(t, format)};
}

RunResult run_heavy_hyperplane(std::string_view set_text, Format format) {
    const auto rows = parse_matrix_text(set_text);
    const SymmetricSet X(infer_dimension(rows), rows);
    const HeavyHyperplaneReport r = heavy_hyperplane_lm(X);
    Table t;
    t.header = {"normal", "offset", "count", "bound_exact", "bound"};
    t.rows.push_back({r.hyperplane.normal.to_digits(), std::to_string(r.hyperplane.offset),
                      std::to_string(r.intersection_count), r.guaranteed_lower_bound.get_str(),
                      fmt_ld(static_cast<long double>(r.guaranteed_lower_bound.get_d()))});
    return RunResult{0, emit_table(t, format)};
}

RunResult run_aux1_witness(std::string_view set_text, Format format) {
    const auto rows = parse_matrix_text(set_text);
    const SymmetricSet X(infer_dimension(rows), rows);
    const auto witness = aux1_witness(X);
    Table t;
    t.header = {"found", "h1", "h2"};
    if (!witness) {
        t.rows.push_back({"exhausted", "-", "-"});
        return RunResult{1, emit_table(t, format)};
    }
    t.rows.push_back({"true", hyperplane_str(witness->h1), hyperplane_str(witness->h2)});
    return RunResult{0, emit_table(t, format)};
}

RunResult run_avoid_hyperplane(std::string_view points_text) {
    const auto points = parse_matrix_text(points_text);
    const int d = infer_dimension(points);
    const auto h = find_avoiding_hyperplane(points, d);
    if (!h) return RunResult{1, "NotFound\n"};
    return RunResult{0, hyperplane_str(*h) + "\n"};
}

RunResult run_cn_coeff(std::string_view forms_text, const std::vector<int>& degrees) {
    const auto rows = parse_matrix_text(forms_text);
    std::vector<LinearForm> forms;
    for (const auto& r : rows) forms.push_back(LinearForm{r});
    if (forms.empty()) throw InvalidQuery("no forms given");
    const std::size_t vars = forms[0].coefficients.size();
    if (degrees.size() != vars) throw InvalidQuery("one degree per variable required");

    CnQuery q;
    q.degrees = degrees;
    for (int deg : degrees) {
        std::vector<Trit> grid;
        for (int v = 0; v <= deg; ++v) grid.push_back(static_cast<Trit>(v));
        q.grids.push_back(std::move(grid));
    }
    const Evaluator eval = [&forms](const F3Vector& point) {
        Trit prod = 1;
        for (const auto& f : forms) prod = trit_mul(prod, f.evaluate(point));
        return prod;
    };
    return RunResult{0, std::to_string(cn_coefficient(eval, q)) + "\n"};
}

RunResult run_phi_map(std::string_view reps_text, Format) {
    const auto reps = parse_matrix_text(reps_text);
    const SymmetricSet X(infer_dimension(reps), reps);
    const GeneratorBasis U = phi_map(X, reps);
    return RunResult{0, format_matrix_text(U.rows)};
}

Table bounds_table(const std::vector<BoundReport>& reports) {
    Table t;
    t.header = {"name", "inputs", "lhs_exact", "rhs_exact", "holds", "lhs", "rhs"};
    for (const auto& r : reports) {
        std::string in;
        for (std::size_t i = 0; i < r.inputs.size(); ++i)
            in += (i ? ";" : "") + r.inputs[i].first + "=" + r.inputs[i].second;
        t.rows.push_back({r.name, in, r.lhs_exact, r.rhs_exact, r.holds ? "true" : "false",
                          fmt_ld(r.lhs_value), fmt_ld(r.rhs_value)});
    }
    return t;
}

RunResult run_tech(const std::string& alpha, long d, Format format) {
    mpq_class a;
    try {
        a = mpq_class(alpha, 10);
    } catch (const std::invalid_argument&) {
        throw ParseError("alpha must be a rational like 1/100");
    }
    a.canonicalize();
    const TechReport r = tech_gap_analysis(a, d);
    Table t;
    t.header = {"alpha", "d", "gamma_lo_exact", "gamma_hi_exact", "n_prime_exact",
                "m_prime_exact", "lhs_exponent", "rhs_exponent"};
    t.rows.push_back({r.alpha.get_str(), std::to_string(r.d), r.gamma_lo.get_str(),
                      r.gamma_hi.get_str(), r.n_prime.get_str(), r.m_prime.get_str(),
                      fmt_ld(r.lhs_exponent), fmt_ld(r.rhs_exponent)});
    return RunResult{0, emit_table(t, format)};
}

RunResult run_rate(long d, Format format) {
    Table t;
    t.header = {"d", "rate"};
    t.rows.push_back({std::to_string(d), fmt_ld(asymptotic_rate(d))});
    return RunResult{0, emit_table(t, format)};
}

}  // namespace trilab
