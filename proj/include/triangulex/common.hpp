#pragma once

#include <stdexcept>
#include <string>

namespace triangulex {

// Recoverable failures: bad input files, exceeded oracle budgets.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct parse_error : error {
    int line;
    parse_error(int line_, const std::string& msg)
        : error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

struct budget_error : error {
    using error::error;
};

// Programming errors: violated preconditions and broken internal invariants.
// These are assertion failures, not conditions a caller should handle.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

inline void check(bool cond, const char* msg) {
    if (!cond) throw internal_error(msg);
}

}  // namespace triangulex
