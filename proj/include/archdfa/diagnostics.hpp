#pragma once

#include <string>
#include <vector>

namespace archdfa {

enum class Severity { error, warning };

// Stable-coded finding produced by document validation. Diagnostics are the
// return value, never thrown.
struct Diagnostic {
    Severity severity = Severity::error;
    std::string code;     // stable machine code, e.g. UNRESOLVED_MODULE
    std::string message;  // human explanation

    friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

inline bool has_errors(const std::vector<Diagnostic>& diags) {
    for (const auto& d : diags) {
        if (d.severity == Severity::error) return true;
    }
    return false;
}

inline int count_errors(const std::vector<Diagnostic>& diags) {
    int n = 0;
    for (const auto& d : diags) {
        if (d.severity == Severity::error) ++n;
    }
    return n;
}

inline int count_warnings(const std::vector<Diagnostic>& diags) {
    return static_cast<int>(diags.size()) - count_errors(diags);
}

}  // namespace archdfa
