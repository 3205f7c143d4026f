#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace weylgr {

// Every failure thrown by the library carries a stable machine-readable code
// (kebab-case) next to the human-readable message.  The CLI maps codes into
// JSON error records; tests match on codes, not on message wording.
class error : public std::runtime_error {
public:
    error(std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

namespace errc {
// exact-core
inline constexpr const char* non_invertible      = "non-invertible";
inline constexpr const char* unknown_variable    = "unknown-variable";
inline constexpr const char* universe_mismatch   = "variable-universe-mismatch";
inline constexpr const char* parse               = "parse";
// eta-seq
inline constexpr const char* invalid_sequence    = "invalid-eta-sequence";
inline constexpr const char* invalid_position    = "invalid-position";
inline constexpr const char* not_contractible    = "not-contractible";
inline constexpr const char* bound_exceeded      = "bound-exceeded";
// polygon
inline constexpr const char* not_a_triangulation = "not-a-triangulation";
inline constexpr const char* not_a_diagonal      = "not-a-diagonal";
// roots
inline constexpr const char* not_a_root          = "not-a-root";
inline constexpr const char* comparison_tie      = "comparison-tie";
// groupoid
inline constexpr const char* invalid_scheme      = "invalid-scheme";
inline constexpr const char* non_terminating     = "non-terminating";
inline constexpr const char* not_a_symmetry      = "not-a-symmetry";
// cluster
inline constexpr const char* index_error         = "index-error";
inline constexpr const char* division_by_zero    = "division-by-zero";
inline constexpr const char* incomplete_labeling = "incomplete-labeling";
inline constexpr const char* off_variety         = "off-variety";
inline constexpr const char* precondition        = "precondition-violated";
} // namespace errc

// Validation entry points return a report instead of throwing: callers that
// enumerate candidates want the first failing condition, not an unwind.
struct ValidityReport {
    bool ok = true;
    std::string code;   // empty when ok; otherwise the first failing condition
    std::string detail; // human-readable specifics (positions, values)

    static ValidityReport pass() { return {}; }
    static ValidityReport fail(std::string c, std::string d) {
        return {false, std::move(c), std::move(d)};
    }
    explicit operator bool() const noexcept { return ok; }
};

} // namespace weylgr
