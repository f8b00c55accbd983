#ifndef GENUSKIT_CHECK_HPP
#define GENUSKIT_CHECK_HPP

#include <string>
#include <vector>

namespace genuskit {

/// Outcome of one verified identity.  `detail` names the first offending term on failure.
struct Check {
    std::string name;
    bool passed = true;
    std::string detail;
};

inline bool all_passed(const std::vector<Check>& checks) {
    for (const auto& c : checks)
        if (!c.passed) return false;
    return true;
}

}  // namespace genuskit

#endif  // GENUSKIT_CHECK_HPP
