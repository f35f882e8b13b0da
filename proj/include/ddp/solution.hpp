#pragma once

#include <string>
#include <vector>

namespace ddp {

// Flat encoding of a full set of routes: location indices separated by
// depot zeros, e.g. [0 3 1 0 2 0] = route (3,1) then route (2).  A string
// for n locations always holds exactly n+1 zeros, so up to n routes are
// representable; adjacent zeros are empty routes and harmless.
struct SolutionString {
    std::vector<int> entries;

    bool operator==(const SolutionString&) const = default;
};

// Throws ValidationError unless s has the documented shape for
// location_count locations: starts and ends with 0, exactly
// location_count + 1 zeros, and every location 1..location_count
// exactly once.
void validate_solution(const SolutionString& s, int location_count);

// The routes of s as index sequences, empty routes dropped, string order.
std::vector<std::vector<int>> nonempty_routes(const SolutionString& s);

// "[0 3 1 0 2 0]" — for logs and error messages.
std::string to_string(const SolutionString& s);

}  // namespace ddp
