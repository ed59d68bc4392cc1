#pragma once

#include "stc/groups.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace stc {

struct VerificationReport {
    std::string id;
    std::map<std::string, std::string> params;
    bool pass = false;
    std::string route = "exact";  // "exact", "exact-derived", "branching+mc"
    std::string detail;           // failure diff or informational note

    std::string params_str() const;
};

struct VerifyOptions {
    std::optional<std::string> id;  // run everything when absent
    std::optional<STGroup> group;
    std::optional<int> m;
    std::optional<int> n;
    std::optional<int> g;
    std::optional<int> k;
    int a_max = 8;  // branching sweeps cover b + 2z <= a_max
    bool parallel = true;
};

/// All statement ids known to the suite.
std::vector<std::string> verify_ids();

/// Runs the requested checks (all of them by default) and returns reports
/// sorted by id and parameters. Throws UnknownGroup / std::invalid_argument on
/// bad requests, never on a failed check.
std::vector<VerificationReport> verify_run(const VerifyOptions& opt);

}  // namespace stc
