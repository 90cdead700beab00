#pragma once

// Command-line front end. run() never exits the process; it returns
// 0 on success, 1 when verification fails, 2 on usage errors.

#include <cstddef>
#include <exception>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <chernum/chernum.hpp>

namespace chernum::cli {

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class OutputMode { table, json, csv };

namespace detail {

inline OutputMode mode(const std::string& format, bool json_flag) {
    if (json_flag) return OutputMode::json;
    if (format == "json") return OutputMode::json;
    if (format == "csv") return OutputMode::csv;
    return OutputMode::table;
}

inline std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

inline void csv_header(std::ostream& os, const PartitionBasis& basis) {
    for (std::size_t i = 0; i < basis.size(); ++i) os << (i ? "," : "") << csv_quote(to_string(basis[i]));
    os << '\n';
}

inline void csv_row(std::ostream& os, const RowQ& row) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << to_string(row[i]);
    os << '\n';
}

inline void print_vector(std::ostream& os, const ChernVector& v, OutputMode m) {
    const PartitionBasis basis(v.degree());
    switch (m) {
        case OutputMode::json: os << to_json(v).dump() << '\n'; break;
        case OutputMode::csv:
            csv_header(os, basis);
            csv_row(os, v.dense(basis));
            break;
        case OutputMode::table:
            os << "n = " << v.degree() << ": " << to_string(v) << '\n';
            for (const auto& [p, c] : v.terms()) os << to_string(p) << '\t' << to_string(c) << '\n';
            break;
    }
}

inline void print_subspace(std::ostream& os, const SubspaceQ& s, int n, OutputMode m) {
    const PartitionBasis basis(n);
    switch (m) {
        case OutputMode::json: os << to_json(s, n).dump() << '\n'; break;
        case OutputMode::csv:
            csv_header(os, basis);
            for (const auto& r : s.basis().data()) csv_row(os, r);
            break;
        case OutputMode::table:
            os << "n = " << n << ", dimension " << s.dim() << " of " << s.ambient() << '\n';
            for (const auto& r : s.basis().data())
                os << "  " << to_string(ChernVector::from_dense(basis, r)) << '\n';
            break;
    }
}

inline void require_degree(int n, int lowest) {
    if (n < lowest) throw UsageError("--n must be at least " + std::to_string(lowest));
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact characteristic-number linear algebra over the partition basis"};
    app.name("chernum");
    app.require_subcommand(1, 1);

    std::string format = "table";
    bool json_flag = false;
    auto add_output_flags = [&](CLI::App* sub) {
        sub->add_option("--format", format, "table | json | csv")->check(CLI::IsMember({"table", "json", "csv"}));
        sub->add_flag("--json", json_flag, "same as --format json");
    };

    int n = -1;
    auto* partitions_cmd = app.add_subcommand("partitions", "list partitions of n in canonical order");
    partitions_cmd->add_option("n", n, "weight")->required();
    add_output_flags(partitions_cmd);

    std::string manifold_expr;
    auto* chern_cmd = app.add_subcommand("chern-numbers", "all Chern numbers of a product of projective spaces");
    chern_cmd->add_option("--manifold", manifold_expr, "e.g. P2xP1xP1")->required();
    add_output_flags(chern_cmd);

    std::string kind;
    std::string y_text;
    int p = -1;
    auto* genus_cmd = app.add_subcommand("genus", "Todd, L or chi_y genus as a Chern-number combination");
    genus_cmd->add_option("--kind", kind, "todd | l | chi-y")->required()->check(CLI::IsMember({"todd", "l", "chi-y"}));
    genus_cmd->add_option("--n", n, "complex dimension")->required();
    auto* y_opt = genus_cmd->add_option("--y", y_text, "specialize chi_y at this rational, e.g. -1/2");
    auto* p_opt = genus_cmd->add_option("--p", p, "select T^p (coefficient of y^p)");
    add_output_flags(genus_cmd);

    auto* space_cmd = app.add_subcommand("space", "a distinguished subspace of C_n in RREF");
    space_cmd->add_option("--kind", kind, "C | EP | HT | CHI")->required()->check(CLI::IsMember({"C", "EP", "HT", "CHI"}));
    space_cmd->add_option("--n", n, "complex dimension")->required();
    add_output_flags(space_cmd);

    auto* intersect_cmd = app.add_subcommand("intersect", "EP_n ∩ HT_n for even n");
    intersect_cmd->add_option("--n", n, "even complex dimension")->required();
    add_output_flags(intersect_cmd);

    int max_n = 10;
    auto* verify_cmd = app.add_subcommand("verify", "run every check up to --max-n");
    verify_cmd->add_option("--max-n", max_n, "largest complex dimension checked (default 10)");
    add_output_flags(verify_cmd);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "chernum: " << e.what() << '\n';
        return 2;
    }

    const OutputMode mode = detail::mode(format, json_flag);
    try {
        if (*partitions_cmd) {
            if (n < 0) throw UsageError("n must be nonnegative");
            const auto list = enumerate_partitions(n);
            if (mode == OutputMode::json) {
                Json a = Json::array();
                for (const auto& q : list) a.push_back(to_json(q));
                out << a.dump() << '\n';
            } else if (mode == OutputMode::csv) {
                out << "index,partition\n";
                for (std::size_t i = 0; i < list.size(); ++i) out << i << ',' << detail::csv_quote(to_string(list[i])) << '\n';
            } else {
                for (const auto& q : list) out << to_string(q) << '\n';
            }
        } else if (*chern_cmd) {
            const ProductManifold m = parse_manifold(manifold_expr);
            const PartitionBasis basis(m.dimension());
            const RowQ row = chern_row(m);
            if (mode == OutputMode::json) {
                Json numbers = Json::object();
                for (std::size_t i = 0; i < basis.size(); ++i) numbers[to_string(basis[i])] = to_string(row[i]);
                out << Json{{"manifold", to_string(m)}, {"n", m.dimension()}, {"chern_numbers", numbers}}.dump() << '\n';
            } else if (mode == OutputMode::csv) {
                detail::csv_header(out, basis);
                detail::csv_row(out, row);
            } else {
                out << to_string(m) << " (n = " << m.dimension() << ")\n";
                for (std::size_t i = 0; i < basis.size(); ++i)
                    out << to_monomial_string(basis[i]) << '\t' << to_string(row[i]) << '\n';
            }
        } else if (*genus_cmd) {
            detail::require_degree(n, 1);
            const bool has_y = y_opt->count() > 0;
            const bool has_p = p_opt->count() > 0;
            if (kind != "chi-y" && (has_y || has_p)) throw UsageError("--y and --p apply only to --kind chi-y");
            if (has_y && has_p) throw UsageError("--y and --p are mutually exclusive");
            if (kind == "todd") {
                detail::print_vector(out, todd_vector(n), mode);
            } else if (kind == "l") {
                if (n % 2 != 0) throw UsageError("L-genus requires even complex dimension");
                detail::print_vector(out, l_genus_vector(n / 2), mode);
            } else if (has_p) {
                if (p < 0 || p > n) throw UsageError("p out of range 0..n");
                detail::print_vector(out, tp_vectors(n)[static_cast<std::size_t>(p)], mode);
            } else if (has_y) {
                Rational y0;
                try {
                    y0 = parse_rational(y_text);
                } catch (const std::invalid_argument& e) {
                    throw UsageError(e.what());
                }
                detail::print_vector(out, chi_y_vector(n, y0), mode);
            } else {
                const auto tp = tp_vectors(n);
                if (mode == OutputMode::json) {
                    Json comps = Json::array();
                    for (const auto& v : tp) comps.push_back(to_json(v));
                    out << Json{{"n", n}, {"components", comps}}.dump() << '\n';
                } else if (mode == OutputMode::csv) {
                    const PartitionBasis basis(n);
                    detail::csv_header(out, basis);
                    for (const auto& v : tp) detail::csv_row(out, v.dense(basis));
                } else {
                    for (std::size_t q = 0; q < tp.size(); ++q)
                        out << "T^" << q << "_" << n << " = " << to_string(tp[q]) << '\n';
                }
            }
        } else if (*space_cmd) {
            detail::require_degree(n, 1);
            SubspaceQ s(0);
            if (kind == "C") s = subspace_C(n);
            else if (kind == "HT") s = subspace_HT(n);
            else if (kind == "CHI") s = subspace_CHI(n);
            else {
                if (n % 2 != 0) throw UsageError("EP requires even complex dimension");
                s = subspace_EP(n / 2);
            }
            detail::print_subspace(out, s, n, mode);
        } else if (*intersect_cmd) {
            if (n % 2 != 0) throw UsageError("intersection requires even complex dimension");
            detail::require_degree(n, 2);
            const SubspaceQ meet = intersect(subspace_EP(n / 2), subspace_HT(n));
            detail::print_subspace(out, meet, n, mode);
            if (mode == OutputMode::table) {
                const SubspaceQ target = span({euler_vector(n), l_genus_vector(n / 2)}, n);
                out << "equals span{c_" << n << ", L_" << n / 2 << "}: " << (subspace_equal(meet, target) ? "yes" : "no")
                    << '\n';
            }
        } else if (*verify_cmd) {
            if (max_n < 2) throw UsageError("--max-n must be at least 2");
            if (mode == OutputMode::csv) throw UsageError("verify supports table or json output");
            const SuiteResult result = run_all(max_n);
            if (mode == OutputMode::json) write_json_lines(out, result);
            else write_table(out, result);
            return result.exit_status();
        }
    } catch (const UsageError& e) {
        err << "chernum: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "chernum: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, out, err);
}

}  // namespace chernum::cli
