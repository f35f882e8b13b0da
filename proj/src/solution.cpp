#include "ddp/solution.hpp"

#include "ddp/common.hpp"

namespace ddp {

void validate_solution(const SolutionString& s, int location_count) {
    if (location_count < 1)
        throw ValidationError("validate_solution: location_count must be >= 1");
    std::size_t n = static_cast<std::size_t>(location_count);
    if (s.entries.size() != 2 * n + 1)
        throw ValidationError("solution string: expected " + std::to_string(2 * n + 1) +
                              " entries for " + std::to_string(location_count) +
                              " locations, got " + std::to_string(s.entries.size()));
    if (s.entries.front() != 0 || s.entries.back() != 0)
        throw ValidationError("solution string: must start and end at the depot (0)");
    std::vector<char> seen(n + 1, 0);
    std::size_t zeros = 0;
    for (int e : s.entries) {
        if (e < 0 || e > location_count)
            throw ValidationError("solution string: location index " + std::to_string(e) +
                                  " out of range");
        if (e == 0) {
            ++zeros;
        } else if (seen[static_cast<std::size_t>(e)]++) {
            throw ValidationError("solution string: location " + std::to_string(e) +
                                  " appears more than once");
        }
    }
    if (zeros != n + 1)
        throw ValidationError("solution string: expected " + std::to_string(n + 1) +
                              " depot zeros, found " + std::to_string(zeros));
    // Exactly-once for every location follows: 2n+1 entries minus n+1 zeros
    // leaves n distinct location entries.
}

std::vector<std::vector<int>> nonempty_routes(const SolutionString& s) {
    std::vector<std::vector<int>> routes;
    std::vector<int> current;
    for (int e : s.entries) {
        if (e == 0) {
            if (!current.empty()) routes.push_back(std::move(current));
            current.clear();
        } else {
            current.push_back(e);
        }
    }
    return routes;
}

std::string to_string(const SolutionString& s) {
    std::string out = "[";
    for (std::size_t k = 0; k < s.entries.size(); ++k) {
        if (k) out += ' ';
        out += std::to_string(s.entries[k]);
    }
    out += ']';
    return out;
}

}  // namespace ddp
