#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace redhom {

// One violated instance of a checked law. `kind` is a stable machine-readable
// tag, `where` the offending basis-index tuple (meaning documented at each
// check), `detail` a human-readable restatement.
struct Violation {
    std::string kind;
    std::vector<std::size_t> where;
    std::string detail;

    friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }

    void add(std::string kind, std::vector<std::size_t> where, std::string detail) {
        violations.push_back({std::move(kind), std::move(where), std::move(detail)});
    }
};

} // namespace redhom
