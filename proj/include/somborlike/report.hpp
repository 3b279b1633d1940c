#pragma once

#include <string>
#include <vector>

#include "somborlike/connected_extremal.hpp"
#include "somborlike/extremal_trees.hpp"

namespace somborlike {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "so56 0.1.0";

struct Finding {
    std::string kind;
    int n = 0;
    std::string message;
    std::string graph6;   // counterexample, when one exists
};

// All serializers produce byte-identical output for identical inputs:
// map-ordered fields, fixed float formatting.
std::string format_double(double v);

std::string reports_to_json(const std::vector<ExtremalReport>& reports,
                            const std::string& command);
std::string reports_to_csv(const std::vector<ExtremalReport>& reports);
std::string reports_to_text(const std::vector<ExtremalReport>& reports);

std::string findings_to_json(const std::string& suite, int n_from, int n_to,
                             const std::vector<Finding>& findings);

std::string join_scan_to_json(const JoinScan& scan, int n);
std::string join_scan_to_text(const JoinScan& scan, int n);

std::string connected_max_to_json(const ConnectedMax& result, int n);
std::string connected_max_to_text(const ConnectedMax& result, int n);

// Curve samples for external plotting: n, delta, F, T, T_l, T_u, Q.
std::string curve_csv(int n, double step);

} // namespace somborlike
