#pragma once

#include <functional>
#include <string>
#include <vector>

namespace etaq::acceptance {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    double seconds = 0.0;
    std::string detail;
};

/// Run the full acceptance suite; `on_result` (when set) is invoked as each
/// criterion finishes.  `only` restricts to a single criterion id (0 = all).
std::vector<CriterionResult> run_all(const std::function<void(const CriterionResult&)>& on_result = {},
                                     int only = 0);

bool all_passed(const std::vector<CriterionResult>& results);

} // namespace etaq::acceptance
