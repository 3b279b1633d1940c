#include "somborlike/report.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "somborlike/graph6.hpp"
#include "somborlike/invariants.hpp"
#include "somborlike/poly.hpp"

namespace somborlike {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

namespace {

ordered_json spectrum_json(const DegreeEdgeSpectrum& s) {
    ordered_json j;
    auto& vc = j["vertex_counts"] = ordered_json::array();
    for (const auto& [d, c] : s.vertex_counts)
        vc.push_back({d, c});
    auto& ec = j["edge_type_counts"] = ordered_json::array();
    for (const auto& [e, c] : s.edge_type_counts)
        ec.push_back({e.first, e.second, c});
    return j;
}

ordered_json report_json(const ExtremalReport& r) {
    ordered_json j;
    j["n"] = r.n;
    j["invariant"] = invariant_name(r.which);
    j["oracle_max_reduced"] = format_double(r.oracle_max_reduced);
    j["oracle_max_full"] = format_double(r.oracle_max_reduced * prefactor(r.which));
    j["closed_form"] = {{"printed", format_double(r.closed_printed)},
                        {"g_corrected", format_double(r.closed_corrected)}};
    j["printed_matches"] = r.printed_matches;
    j["corrected_matches"] = r.corrected_matches;
    j["verdict"] = verdict_name(r.verdict);
    j["profile_feasible"] = r.profile_feasible;
    j["predicted_profiles"] = ordered_json::array();
    for (const auto& s : r.predicted_profiles)
        j["predicted_profiles"].push_back(spectrum_json(s));
    j["argmax_profiles"] = ordered_json::array();
    for (const auto& s : r.argmax_profiles)
        j["argmax_profiles"].push_back(spectrum_json(s));
    j["argmax_profile_matches"] = r.argmax_profile_matches;
    j["argmax_graph6"] = r.oracle_argmax_graph6;
    return j;
}

} // namespace

std::string reports_to_json(const std::vector<ExtremalReport>& reports,
                            const std::string& command) {
    ordered_json j;
    j["schema"] = kSchemaVersion;
    j["tool"] = kToolVersion;
    j["command"] = command;
    j["reports"] = ordered_json::array();
    for (const auto& r : reports)
        j["reports"].push_back(report_json(r));
    return j.dump(2) + "\n";
}

std::string reports_to_csv(const std::vector<ExtremalReport>& reports) {
    std::ostringstream os;
    os << "n,invariant,oracle_max_reduced,closed_printed,closed_g_corrected,"
          "printed_matches,corrected_matches,verdict,profile_feasible,"
          "argmax_profile_matches,argmax_count,argmax_graph6\n";
    for (const auto& r : reports) {
        os << r.n << ',' << invariant_name(r.which) << ',' << format_double(r.oracle_max_reduced)
           << ',' << format_double(r.closed_printed) << ',' << format_double(r.closed_corrected)
           << ',' << (r.printed_matches ? 1 : 0) << ',' << (r.corrected_matches ? 1 : 0) << ','
           << verdict_name(r.verdict) << ',' << (r.profile_feasible ? 1 : 0) << ','
           << (r.argmax_profile_matches ? 1 : 0) << ',' << r.oracle_argmax_graph6.size() << ',';
        for (std::size_t i = 0; i < r.oracle_argmax_graph6.size(); ++i)
            os << (i ? ";" : "") << r.oracle_argmax_graph6[i];
        os << '\n';
    }
    return os.str();
}

std::string reports_to_text(const std::vector<ExtremalReport>& reports) {
    std::ostringstream os;
    for (const auto& r : reports) {
        os << "n=" << r.n << ' ' << invariant_name(r.which)
           << " oracle=" << format_double(r.oracle_max_reduced)
           << " printed=" << format_double(r.closed_printed)
           << " g_corrected=" << format_double(r.closed_corrected)
           << " verdict=" << verdict_name(r.verdict);
        if (!r.argmax_profiles.empty())
            os << "  [" << r.argmax_profiles.front().to_string() << "]";
        os << '\n';
    }
    return os.str();
}

std::string findings_to_json(const std::string& suite, int n_from, int n_to,
                             const std::vector<Finding>& findings) {
    ordered_json j;
    j["schema"] = kSchemaVersion;
    j["tool"] = kToolVersion;
    j["suite"] = suite;
    j["n_from"] = n_from;
    j["n_to"] = n_to;
    j["finding_count"] = findings.size();
    j["findings"] = ordered_json::array();
    for (const auto& f : findings) {
        ordered_json e;
        e["kind"] = f.kind;
        e["n"] = f.n;
        e["message"] = f.message;
        if (!f.graph6.empty())
            e["graph6"] = f.graph6;
        j["findings"].push_back(e);
    }
    return j.dump(2) + "\n";
}

std::string join_scan_to_json(const JoinScan& scan, int n) {
    ordered_json j;
    j["schema"] = kSchemaVersion;
    j["n"] = n;
    j["candidates"] = ordered_json::array();
    for (int c : scan.candidates) {
        ordered_json e;
        e["k"] = c;
        if (c >= 1 && c <= n - 1)
            e["value_reduced"] = format_double(so5_join_closed(n, c));
        else
            e["value_reduced"] = nullptr;
        j["candidates"].push_back(e);
    }
    j["argmax_k"] = scan.delta_star;
    j["argmax_value_reduced"] = format_double(scan.best_value);
    j["argmax_value_full"] = format_double(scan.best_value * prefactor(Invariant::SO5));
    j["in_candidates"] = scan.in_candidates;
    j["tie"] = scan.tie;
    return j.dump(2) + "\n";
}

std::string join_scan_to_text(const JoinScan& scan, int n) {
    std::ostringstream os;
    os << "n=" << n << " candidates:";
    for (int c : scan.candidates) {
        os << ' ' << c << '=';
        if (c >= 1 && c <= n - 1)
            os << format_double(so5_join_closed(n, c));
        else
            os << "n/a";
    }
    os << " argmax=" << scan.delta_star << " value=" << format_double(scan.best_value)
       << " in_candidates=" << (scan.in_candidates ? "true" : "false") << '\n';
    return os.str();
}

std::string connected_max_to_json(const ConnectedMax& result, int n) {
    ordered_json j;
    j["schema"] = kSchemaVersion;
    j["n"] = n;
    j["max_reduced"] = format_double(result.value);
    j["max_full"] = format_double(result.value * prefactor(Invariant::SO5));
    j["argmax_graph6"] = ordered_json::array();
    for (const Graph& g : result.argmax)
        j["argmax_graph6"].push_back(graph6_encode(g));
    j["join_match"] = result.join_match;
    return j.dump(2) + "\n";
}

std::string connected_max_to_text(const ConnectedMax& result, int n) {
    std::ostringstream os;
    os << "n=" << n << " max_reduced=" << format_double(result.value)
       << " max_full=" << format_double(result.value * prefactor(Invariant::SO5))
       << " join_match=" << (result.join_match ? "true" : "false") << " argmax:";
    for (const Graph& g : result.argmax)
        os << ' ' << graph6_encode(g);
    os << '\n';
    return os.str();
}

std::string curve_csv(int n, double step) {
    std::ostringstream os;
    os << "n,delta,F,T,T_l,T_u,Q\n";
    for (double d = step; d <= n - 1 + 1e-12; d += step) {
        const double delta = std::min(d, static_cast<double>(n - 1));
        os << n << ',' << format_double(delta) << ',' << format_double(F_single(n, delta)) << ','
           << format_double(poly_eval(PolyKind::T, n, delta)) << ','
           << format_double(poly_eval(PolyKind::TLower, n, delta)) << ','
           << format_double(poly_eval(PolyKind::TUpper, n, delta)) << ','
           << format_double(poly_eval(PolyKind::Q, n, delta)) << '\n';
    }
    return os.str();
}

} // namespace somborlike
