#pragma once

// Executable checks of the finite-dimensional claims about C_n: subspace
// dimensions, the EP ∩ HT intersection, the chi_p identities, agreement of
// T^p with Hodge-theoretic chi_p, and detection by CP^1/CP^2 products.
//
// Checks read T^p_n from a TpTable so that a deliberately altered table can
// be fed through the same code (mutation testing).

#include <algorithm>
#include <cstddef>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "charvec.hpp"
#include "json_io.hpp"
#include "manifolds.hpp"
#include "partitions.hpp"
#include "qlinalg.hpp"

namespace chernum {

enum class CheckStatus { pass, fail, vacuous };

inline std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::vacuous: return "vacuous";
    }
    return "fail";
}

struct CheckReport {
    std::string name;
    int parameter = 0;
    std::string claim;
    CheckStatus status = CheckStatus::fail;
    Json expected;
    Json actual;
    Json witness;  // null unless failed

    bool ok() const { return status != CheckStatus::fail; }
};

inline Json to_json(const CheckReport& r) {
    Json j{{"check", r.name},       {"parameter", r.parameter}, {"claim", r.claim},
           {"status", to_string(r.status)}, {"expected", r.expected}, {"actual", r.actual}};
    if (!r.witness.is_null()) j["witness"] = r.witness;
    return j;
}

/// pass iff expected == actual; a failing report always carries a witness.
inline CheckReport make_report(std::string name, int parameter, std::string claim, Json expected, Json actual,
                               Json witness = nullptr) {
    CheckReport r{std::move(name), parameter, std::move(claim), CheckStatus::fail, std::move(expected),
                  std::move(actual), nullptr};
    if (r.expected == r.actual) {
        r.status = CheckStatus::pass;
    } else {
        r.witness = witness.is_null() ? Json{{"expected", r.expected}, {"actual", r.actual}} : std::move(witness);
    }
    return r;
}

/// T^0_n..T^n_n for n = 1..n_max.
class TpTable {
public:
    explicit TpTable(int n_max) {
        for (int n = 1; n <= n_max; ++n) tp_.emplace(n, tp_vectors(n));
    }

    int max_degree() const { return tp_.empty() ? 0 : tp_.rbegin()->first; }

    const std::vector<ChernVector>& operator()(int n) const {
        auto it = tp_.find(n);
        if (it == tp_.end()) throw std::out_of_range("T^p table does not cover n = " + std::to_string(n));
        return it->second;
    }

    /// Adds delta to the coefficient of T^p_n at basis position index.
    void perturb(int n, int p, std::size_t index, const Rational& delta) {
        auto& v = tp_.at(n).at(static_cast<std::size_t>(p));
        v.add(PartitionBasis(n)[index], delta);
    }

private:
    std::map<int, std::vector<ChernVector>> tp_;
};

inline std::vector<CheckReport> check_dimensions(const TpTable& tp, int n_max) {
    std::vector<CheckReport> out;
    for (int n = 2; n <= n_max; ++n) {
        std::vector<ChernVector> monomials;
        for (const auto& p : enumerate_partitions(n)) monomials.push_back(chern_monomial(p));
        out.push_back(make_report("dim_C", n, "C_n has dimension pi(n)", partition_count(n), span(monomials, n).dim()));
        out.push_back(make_report("dim_CHI", n, "span of chi_0..chi_n has dimension floor((n+2)/2)", (n + 2) / 2,
                                  subspace_CHI(tp(n), n).dim()));
        if (n % 2 == 0) {
            const int m = n / 2;
            out.push_back(make_report("dim_EP", m, "EP_2m has dimension 1 + pi(m)", 1 + partition_count(m),
                                      subspace_EP(m).dim()));
            out.push_back(make_report("dim_HT", m, "HT_2m has dimension m + 1", m + 1, subspace_HT(tp(n), n).dim()));
        }
        if (n <= 8) {
            MatrixQ rows(0, partition_count(n));
            for (const auto& m : projective_products(n)) rows.append_row(chern_row(m));
            out.push_back(make_report("chern_row_rank", n,
                                      "Chern numbers of all products of projective spaces of dimension n are independent",
                                      partition_count(n), rank(rows)));
        }
    }
    return out;
}

inline std::vector<CheckReport> check_dimensions(int n_max) { return check_dimensions(TpTable(n_max), n_max); }

/// m = 1 verifies C_2 = EP_2 = HT_2 and reports "vacuous".
inline CheckReport check_main_theorem(const TpTable& tp, int m) {
    if (m < 1) throw std::invalid_argument("main theorem check needs m >= 1");
    const int n = 2 * m;
    const SubspaceQ ep = subspace_EP(m);
    const SubspaceQ ht = subspace_HT(tp(n), n);
    if (m == 1) {
        const SubspaceQ c = subspace_C(2);
        auto r = make_report("main_theorem", 1, "C_2 = EP_2 = HT_2 (intersection statement vacuous)",
                             Json{{"C_eq_EP", true}, {"C_eq_HT", true}},
                             Json{{"C_eq_EP", subspace_equal(c, ep)}, {"C_eq_HT", subspace_equal(c, ht)}},
                             Json{{"EP", to_json(ep, 2)}, {"HT", to_json(ht, 2)}});
        if (r.status == CheckStatus::pass) r.status = CheckStatus::vacuous;
        return r;
    }
    const SubspaceQ meet = intersect(ep, ht);
    const SubspaceQ target = span({euler_vector(n), l_genus_vector(m)}, n);
    return make_report("main_theorem", m, "EP_2m ∩ HT_2m is 2-dimensional, spanned by c_2m and L_m",
                       Json{{"dim", 2}, {"equals_span_euler_L", true}},
                       Json{{"dim", meet.dim()}, {"equals_span_euler_L", subspace_equal(meet, target)}},
                       Json{{"intersection", to_json(meet, n)}, {"span_euler_L", to_json(target, n)}});
}

inline CheckReport check_main_theorem(int m) { return check_main_theorem(TpTable(2 * m), m); }

inline std::vector<CheckReport> check_identities(const TpTable& tp, int n) {
    if (n < 2) throw std::invalid_argument("identity checks need n >= 2");
    const auto& t = tp(n);
    std::vector<CheckReport> out;

    ChernVector alternating(n);
    for (int p = 0; p <= n; ++p) alternating += t[static_cast<std::size_t>(p)].scaled(p % 2 == 0 ? 1 : -1);
    const ChernVector euler = euler_vector(n);
    out.push_back(make_report("euler_identity", n, "sum_p (-1)^p T^p_n = c_n", to_json(euler), to_json(alternating),
                              Json{{"difference", to_json(alternating - euler)}}));

    if (n % 2 == 0) {
        ChernVector total(n);
        for (const auto& v : t) total += v;
        const ChernVector l = l_genus_vector(n / 2);
        out.push_back(make_report("signature_identity", n, "sum_p T^p_n = L_{n/2}", to_json(l), to_json(total),
                                  Json{{"difference", to_json(total - l)}}));
    }

    Json asymmetric = Json::array();
    const Rational sign = n % 2 == 0 ? 1 : -1;
    for (int p = 0; p <= n; ++p) {
        const auto& lhs = t[static_cast<std::size_t>(p)];
        const auto rhs = t[static_cast<std::size_t>(n - p)].scaled(sign);
        if (!(lhs == rhs)) asymmetric.push_back(Json{{"p", p}, {"difference", to_json(lhs - rhs)}});
    }
    out.push_back(make_report("tp_symmetry", n, "T^p_n = (-1)^n T^{n-p}_n for all p", Json::array(), asymmetric));

    const ChernVector c1cn1 = chern_monomial(Partition{n - 1, 1});
    const SubspaceQ chi = subspace_CHI(t, n);
    out.push_back(make_report("c1cn1_membership", n, "c_1 c_{n-1} lies in the span of chi_p", true,
                              contains(chi, c1cn1), Json{{"span", to_json(chi, n)}}));
    return out;
}

inline std::vector<CheckReport> check_identities(int n) { return check_identities(TpTable(n), n); }

/// One report per dimension; the witness lists every disagreeing (M, p).
inline std::vector<CheckReport> check_hrr_consistency(const TpTable& tp, int n_max) {
    std::vector<CheckReport> out;
    for (int n = 1; n <= n_max; ++n) {
        const auto& t = tp(n);
        Json mismatches = Json::array();
        std::size_t compared = 0;
        for (const auto& m : projective_products(n)) {
            const RowQ row = chern_row(m);
            for (int p = 0; p <= n; ++p) {
                const Rational genus = dot(t[static_cast<std::size_t>(p)], row);
                const Rational hodge(static_cast<long>(chi_p_oracle(m, p)));
                ++compared;
                if (genus != hodge)
                    mismatches.push_back(Json{{"manifold", to_string(m)}, {"p", p}, {"T^p", to_string(genus)},
                                              {"chi_p", to_string(hodge)}});
            }
        }
        out.push_back(make_report("hrr_consistency", n,
                                  "T^p_n evaluated on every product of projective spaces equals chi_p from Hodge numbers",
                                  Json{{"compared", compared}, {"mismatches", 0}},
                                  Json{{"compared", compared}, {"mismatches", mismatches.size()}},
                                  Json{{"mismatches", mismatches}}));
    }
    return out;
}

inline std::vector<CheckReport> check_hrr_consistency(int n_max) {
    return check_hrr_consistency(TpTable(n_max), n_max);
}

inline std::vector<CheckReport> check_detection(const TpTable& tp, int n_max) {
    std::vector<CheckReport> out;
    for (int n = 2; n <= n_max; ++n) {
        const auto& t = tp(n);
        const std::vector<ChernVector> components(t.begin(), t.begin() + n / 2 + 1);
        const auto family = cp1_cp2_products(n);
        const MatrixQ values = evaluation_matrix(family, components);
        Json manifolds = Json::array();
        for (const auto& m : family) manifolds.push_back(to_string(m));
        out.push_back(make_report("detection_rank", n,
                                  "products of CP^1 and CP^2 detect chi_0..chi_[n/2] (full column rank)", n / 2 + 1,
                                  rank(values), Json{{"family", manifolds}, {"values", to_json(values)}}));
    }
    return out;
}

inline std::vector<CheckReport> check_detection(int n_max) { return check_detection(TpTable(n_max), n_max); }

struct SuiteResult {
    std::vector<CheckReport> reports;  // sorted by (name, parameter)
    int n_max = 0;

    std::size_t count(CheckStatus s) const {
        return static_cast<std::size_t>(
            std::count_if(reports.begin(), reports.end(), [s](const CheckReport& r) { return r.status == s; }));
    }
    bool ok() const { return count(CheckStatus::fail) == 0; }
    int exit_status() const { return ok() ? 0 : 1; }

    Json summary() const {
        return Json{{"summary", true},
                    {"n_max", n_max},
                    {"total", reports.size()},
                    {"passed", count(CheckStatus::pass)},
                    {"vacuous", count(CheckStatus::vacuous)},
                    {"failed", count(CheckStatus::fail)},
                    {"ok", ok()}};
    }
};

inline SuiteResult run_all(const TpTable& tp, int n_max) {
    if (n_max < 2) throw std::invalid_argument("verification needs n_max >= 2");
    if (tp.max_degree() < n_max) throw std::invalid_argument("T^p table does not reach n_max");
    SuiteResult result;
    result.n_max = n_max;
    auto append = [&](std::vector<CheckReport> rs) {
        for (auto& r : rs) result.reports.push_back(std::move(r));
    };
    append(check_dimensions(tp, n_max));
    for (int m = 1; 2 * m <= n_max; ++m) result.reports.push_back(check_main_theorem(tp, m));
    for (int n = 2; n <= n_max; ++n) append(check_identities(tp, n));
    append(check_hrr_consistency(tp, n_max));
    append(check_detection(tp, n_max));
    std::stable_sort(result.reports.begin(), result.reports.end(), [](const CheckReport& a, const CheckReport& b) {
        return std::tie(a.name, a.parameter) < std::tie(b.name, b.parameter);
    });
    return result;
}

inline SuiteResult run_all(int n_max) { return run_all(TpTable(n_max), n_max); }

/// One JSON object per line, summary last.
inline void write_json_lines(std::ostream& os, const SuiteResult& result) {
    for (const auto& r : result.reports) os << to_json(r).dump() << '\n';
    os << result.summary().dump() << '\n';
}

inline void write_table(std::ostream& os, const SuiteResult& result) {
    std::size_t width = 5;
    for (const auto& r : result.reports) width = std::max(width, r.name.size());
    for (const auto& r : result.reports) {
        std::string name = r.name;
        name.resize(width, ' ');
        std::string param = std::to_string(r.parameter);
        param.insert(param.begin(), param.size() < 3 ? 3 - param.size() : 0, ' ');
        os << name << "  " << param << "  " << to_string(r.status);
        if (r.status == CheckStatus::fail) os << "  expected " << r.expected.dump() << " got " << r.actual.dump();
        os << '\n';
    }
    os << "total " << result.reports.size() << ", passed " << result.count(CheckStatus::pass) << ", vacuous "
       << result.count(CheckStatus::vacuous) << ", failed " << result.count(CheckStatus::fail) << '\n';
}

}  // namespace chernum
